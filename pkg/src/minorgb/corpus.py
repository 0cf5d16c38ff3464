"""Matrix files and the bundled corpus.

A matrix file is a JSON document with fields rows, cols, grading in
{none, column, row}, field ("q" or "fp:<prime>"), and either explicit
entries (polynomial strings, row by row) or a seed for keyed random
generation.  Explicit ungraded matrices may carry a variables list.
"""

import json

from .fields import QQ, Field
from .matrices import build_matrix


def parse_field(text):
    if text == "q":
        return QQ
    if text.startswith("fp:"):
        return Field(int(text[3:]))
    raise ValueError("unknown field %r (use q or fp:<prime>)" % (text,))


def field_name(field):
    return "q" if field.p == 0 else "fp:%d" % field.p


def matrix_from_dict(doc):
    m = doc["rows"]
    n = doc["cols"]
    grading = doc.get("grading", "none")
    field = parse_field(doc.get("field", "fp:32003"))
    entries = doc.get("entries")
    seed = doc.get("seed")
    if (entries is None) == (seed is None):
        raise ValueError("matrix file needs exactly one of entries, seed")
    if grading in ("column", "row"):
        mode = grading + "-graded"
        return build_matrix(m, n, mode, entries=entries, seed=seed,
                            field=field)
    if grading != "none":
        raise ValueError("unknown grading %r" % (grading,))
    if seed is not None:
        raise ValueError("ungraded matrices must be explicit")
    return build_matrix(m, n, "explicit", entries=entries, field=field,
                        variables=doc.get("variables"))


def matrix_to_dict(L):
    doc = {
        "rows": L.m,
        "cols": L.n,
        "grading": L.grading,
        "field": field_name(L.ring.field),
        "entries": [[str(p) for p in row] for row in L.entries],
    }
    if L.grading == "none":
        doc["variables"] = list(L.ring.names)
    return doc


def load_matrix_file(path):
    with open(path) as fh:
        return matrix_from_dict(json.load(fh))


def save_matrix_file(path, doc):
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")


# the two explicit 2x3 matrices whose maximal minors are not a universal
# Groebner basis (every enumerated initial ideal needs a cubic generator
# for the first; a degrevlex initial ideal does for the second)
REMARK_MATRIX_FIRST = {
    "rows": 2,
    "cols": 3,
    "grading": "none",
    "field": "fp:32003",
    "variables": ["x1", "x2", "x3"],
    "entries": [["x1+x2", "x3", "x3"], ["0", "x1", "x2"]],
}

REMARK_MATRIX_SECOND = {
    "rows": 2,
    "cols": 3,
    "grading": "none",
    "field": "fp:32003",
    "variables": ["x1", "x2", "x3", "x4", "x5", "x6"],
    "entries": [["x1", "x4", "x3"], ["x5", "x1+x6", "x2"]],
}


def corpus_entries():
    """Name -> matrix document for every bundled corpus file."""
    out = {
        "remark-nonuniversal-a": REMARK_MATRIX_FIRST,
        "remark-nonuniversal-b": REMARK_MATRIX_SECOND,
    }
    sizes = [(2, 3), (2, 4), (2, 5), (3, 4), (3, 5)]
    for m, n in sizes:
        for grading in ("column", "row"):
            out["%sgraded-%dx%d" % (grading[:3], m, n)] = {
                "rows": m,
                "cols": n,
                "grading": grading,
                "field": "fp:32003",
                "seed": 1,
            }
    # degenerate column-graded matrices exercising the hypotheses of the
    # projective-dimension claim: a zero column, and a row-proportional
    # matrix whose maximal minors are all forced to vanish
    zc = build_matrix(2, 3, "column-graded", seed=1)
    zero_col = [[str(p) if j != 2 else "0" for j, p in enumerate(row)]
                for row in zc.entries]
    prop = [[str(p) for p in zc.entries[0]],
            [str(p.scale(zc.ring.field(2))) for p in zc.entries[0]]]
    out["colgraded-zero-column"] = {
        "rows": 2, "cols": 3, "grading": "column", "field": "fp:32003",
        "entries": zero_col,
    }
    out["colgraded-vanishing-minor"] = {
        "rows": 2, "cols": 3, "grading": "column", "field": "fp:32003",
        "entries": prop,
    }
    return out


def write_corpus(dirpath):
    import os
    written = []
    for name, doc in sorted(corpus_entries().items()):
        path = os.path.join(dirpath, name + ".mat")
        save_matrix_file(path, doc)
        written.append(path)
    return written
