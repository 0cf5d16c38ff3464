"""Verification drivers.

Each driver composes kernel operations into the claim checks of one
named result and returns a machine-readable report: driver id, inputs,
one outcome per claim, and an overall verdict.  A claim's status is
"pass", "fail", "precondition failed" (a stated hypothesis of the claim
does not hold for the input, which is not a counterexample), or
"skipped" (an enumeration guardrail fired; whatever evidence was still
collected is attached).  Reports are deterministic: identical inputs
give byte-identical serialized output.
"""

import json
import random

from .betti import (betti_table, eagon_northcott_ranks,
                    has_linear_resolution, projective_dimension)
from .corpus import load_matrix_file, matrix_to_dict
from .gin import multigraded_gin, order_is_admissible
from .groebner import (initial_ideal, single_multidegree_initial_ideals,
                       universal_gb_certificate)
from .hilbert import (k_mn_closed, k_polynomial, k_polynomial_ideal,
                      k_polynomial_of_prime, verify_recursion, verify_rg5_rg6,
                      verify_rg7, verify_rg8)
from .ideals import (alexander_dual, dual_of_polarized_prime_ideal,
                     is_borel_fixed, is_radical, minimal_primes,
                     predicted_gin_column, predicted_gin_row,
                     prime_as_b_vector, radical_borel_fixed_ideals)
from .markings import MarkingCapExceeded, realizable_markings
from .matrices import build_matrix, codimension, maximal_minors
from .matroids import BasisCapExceeded, column_matroid, stanley_reisner
from .orders import degrevlex, lex, order_from_weight

DRIVER_IDS = ("thm-1.1", "thm-3.1", "thm-3.2", "thm-4.1", "prop-4.2",
              "cor-2.6", "thm-2.5", "lemma-2.4", "remark-1.3", "identities")


def _claim(name, status, **details):
    out = {"name": name, "status": status}
    out.update(details)
    return out


def _finish(report):
    statuses = {c["status"] for c in report["claims"]}
    report["verdict"] = "fail" if "fail" in statuses else "pass"
    return report


def serialize_report(report):
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def _ok(cond):
    return "pass" if cond else "fail"


def _resolve_matrix(params, mode):
    """Matrix from explicit object, file path, or (m, n, seed)."""
    if "matrix" in params:
        return params["matrix"]
    if "path" in params:
        return load_matrix_file(params["path"])
    return build_matrix(params["m"], params["n"], mode, seed=params["seed"])


def admissible_orders(ring):
    """Three distinct orders making earlier block variables larger."""
    rev = [v for blk in reversed(ring.blocks) for v in blk]
    # strictly decreasing weights keep earlier block variables larger
    # while staying graded-like (full lex is intractable on dense input)
    w = [2 * ring.nvars - v for v in range(ring.nvars)]
    orders = [degrevlex(ring), order_from_weight(w, ring),
              degrevlex(ring, priority=rev)]
    for o in orders:
        if not order_is_admissible(ring, o):
            raise AssertionError("constructed order is not admissible")
    return orders


def _sample_weight_orders(ring, tag, count):
    out = []
    for k in range(count):
        rng = random.Random("%s:%d" % (tag, k))
        w = [rng.randint(1, 10 ** 6) for _ in range(ring.nvars)]
        out.append(order_from_weight(w, ring))
    return out


# -- section 1: the variable matrix ------------------------------------------

def thm_1_1(m=2, n=3, max_markings=10 ** 6):
    """Maximal minors of the variable matrix are a universal Groebner
    basis; all initial ideals share the Eagon-Northcott Betti table."""
    L = build_matrix(m, n, "variables")
    minors = [p for p in maximal_minors(L) if not p.is_zero()]
    report = {"driver": "thm-1.1",
              "inputs": {"m": m, "n": n, "max_markings": max_markings},
              "claims": []}
    try:
        cert = universal_gb_certificate(minors, cap=max_markings)
    except MarkingCapExceeded as exc:
        report["claims"].append(_claim(
            "universal-groebner-basis", "skipped", reason=str(exc)))
        return _finish(report)
    report["claims"].append(_claim(
        "universal-groebner-basis", _ok(cert.verdict),
        realizable_markings=cert.realizable_count,
        candidate_markings=cert.candidate_total))
    if not cert.verdict:
        return _finish(report)
    ideals = cert.initial_ideals()
    en = eagon_northcott_ranks(m, n)
    tables = [betti_table(J).totals() for J in ideals]
    report["claims"].append(_claim(
        "betti-tables-equal-eagon-northcott",
        _ok(all(t == en for t in tables)),
        eagon_northcott=list(en),
        initial_ideal_count=len(ideals),
        initial_ideals=[J.gens_str() for J in ideals],
        betti_totals=sorted(list(t) for t in set(tables))))
    return _finish(report)


def remark_1_3(max_markings=10 ** 6):
    """The two explicit 2x3 matrices whose minors are not a universal
    Groebner basis; cubic generators appear in the initial ideals."""
    from .corpus import matrix_from_dict
    from .corpus import REMARK_MATRIX_FIRST, REMARK_MATRIX_SECOND
    report = {"driver": "remark-1.3",
              "inputs": {"max_markings": max_markings}, "claims": []}

    first = matrix_from_dict(REMARK_MATRIX_FIRST)
    minors = [p for p in maximal_minors(first) if not p.is_zero()]
    cert = universal_gb_certificate(minors, cap=max_markings)
    report["claims"].append(_claim(
        "first-matrix-certificate-fails", _ok(not cert.verdict),
        realizable_markings=cert.realizable_count))
    ideals = {initial_ideal(minors, mk.order(first.ring))
              for mk in realizable_markings(minors, cap=max_markings)}
    cubic = all(any(sum(g) == 3 for g in J.gens) for J in ideals)
    report["claims"].append(_claim(
        "first-matrix-every-initial-ideal-has-cubic-generator", _ok(cubic),
        initial_ideals=sorted(J.gens_str() for J in ideals)))
    codim = codimension(minors, degrevlex(first.ring))
    report["claims"].append(_claim(
        "first-matrix-codimension-two", _ok(codim == 2), codimension=codim))

    second = matrix_from_dict(REMARK_MATRIX_SECOND)
    minors2 = [p for p in maximal_minors(second) if not p.is_zero()]
    cert2 = universal_gb_certificate(minors2, cap=max_markings,
                                     stop_on_failure=True)
    report["claims"].append(_claim(
        "second-matrix-certificate-fails", _ok(not cert2.verdict)))
    J = initial_ideal(minors2, degrevlex(second.ring))
    report["claims"].append(_claim(
        "second-matrix-degrevlex-initial-ideal-has-cubic-generator",
        _ok(any(sum(g) == 3 for g in J.gens)),
        initial_ideal=J.gens_str()))
    return _finish(report)


# -- section 3: column-graded matrices ----------------------------------------

def thm_3_1(max_markings=10 ** 6, **params):
    """Column-graded matrices of codimension n-m+1: minors are a
    universal Groebner basis, all initial ideals radical with one Betti
    table."""
    L = _resolve_matrix(params, "column-graded")
    report = {"driver": "thm-3.1",
              "inputs": _matrix_inputs(L, params,
                                       max_markings=max_markings),
              "claims": []}
    minors = [p for p in maximal_minors(L) if not p.is_zero()]
    if not minors:
        report["claims"].append(_claim(
            "codimension-hypothesis", "precondition failed",
            reason="I_m(L) = 0"))
        return _finish(report)
    codim = codimension(minors, degrevlex(L.ring))
    if codim != L.n - L.m + 1:
        report["claims"].append(_claim(
            "codimension-hypothesis", "precondition failed",
            codimension=codim, required=L.n - L.m + 1))
        return _finish(report)
    report["claims"].append(_claim(
        "codimension-hypothesis", "pass", codimension=codim))
    _column_universality_claims(report, L, minors, max_markings)
    return _finish(report)


def thm_3_2(max_markings=10 ** 6, gin_seed=0, **params):
    """Arbitrary column-graded matrices: universal Groebner basis,
    radicality, linear resolutions, equal Betti tables, the matroid
    description of the common gin, and projective dimension n-m."""
    L = _resolve_matrix(params, "column-graded")
    report = {"driver": "thm-3.2",
              "inputs": _matrix_inputs(L, params, max_markings=max_markings,
                                       gin_seed=gin_seed),
              "claims": []}
    minors = [p for p in maximal_minors(L) if not p.is_zero()]
    if not minors:
        for name in ("universal-groebner-basis",
                     "initial-ideals-radical-linear-equal-betti",
                     "gin-is-matroid-dual-alexander-dual",
                     "projective-dimension"):
            report["claims"].append(_claim(
                name, "precondition failed", reason="I_m(L) = 0"))
        return _finish(report)
    ideals = _column_universality_claims(report, L, minors, max_markings)

    pred = predicted_gin_column(L)
    matroid_ideal = alexander_dual(stanley_reisner(
        column_matroid(L).dual(), L.ring,
        ground_vars=[L.ring.index["x_1_%d" % j]
                     for j in range(1, L.n + 1)]))
    gins = [multigraded_gin(minors, o, seed=gin_seed)
            for o in admissible_orders(L.ring)]
    gin_ok = (all(g.agreed and g.borel_certified for g in gins)
              and all(g.candidate == pred for g in gins))
    report["claims"].append(_claim(
        "gin-is-matroid-dual-alexander-dual",
        _ok(gin_ok and matroid_ideal == pred),
        predicted=pred.gens_str(),
        matroid_alexander_dual=matroid_ideal.gens_str(),
        gin=[g.candidate.gens_str() for g in gins]))

    zero_column = any(all(L.entries[i][j].is_zero() for i in range(L.m))
                      for j in range(L.n))
    if zero_column:
        report["claims"].append(_claim(
            "projective-dimension", "precondition failed",
            reason="a column of L is zero"))
    elif ideals is None:
        report["claims"].append(_claim(
            "projective-dimension", "skipped",
            reason="no enumerated initial ideals"))
    else:
        pds = {projective_dimension(J) for J in ideals}
        report["claims"].append(_claim(
            "projective-dimension", _ok(pds == {L.n - L.m}),
            projective_dimensions=sorted(pds), expected=L.n - L.m))
    return _finish(report)


def _matrix_inputs(L, params, **extra):
    inputs = {"matrix": matrix_to_dict(L)}
    for key in ("m", "n", "seed", "path"):
        if key in params:
            inputs[key] = params[key]
    inputs.update(extra)
    return inputs


def _column_universality_claims(report, L, minors, max_markings):
    """Certificate + radical/linear/Betti claims shared by the section-3
    drivers; returns the enumerated initial ideals (None if skipped)."""
    try:
        cert = universal_gb_certificate(minors, cap=max_markings)
    except MarkingCapExceeded as exc:
        report["claims"].append(_claim(
            "universal-groebner-basis", "skipped", reason=str(exc)))
        return None
    report["claims"].append(_claim(
        "universal-groebner-basis", _ok(cert.verdict),
        realizable_markings=cert.realizable_count))
    if not cert.verdict:
        return None
    ideals = cert.initial_ideals()
    tables = [betti_table(J) for J in ideals]
    ok = (all(is_radical(J) for J in ideals)
          and all(has_linear_resolution(J) for J in ideals)
          and all(t.totals() == tables[0].totals() for t in tables))
    report["claims"].append(_claim(
        "initial-ideals-radical-linear-equal-betti", _ok(ok),
        initial_ideal_count=len(ideals),
        betti_totals=list(tables[0].totals())))
    return ideals


# -- section 4: row-graded matrices -------------------------------------------

def thm_4_1(basis_cap=2 * 10 ** 4, sample_orders=6, gin_seed=0, **params):
    """Row-graded matrices of codimension n-m+1: every initial ideal is
    generated in degree m, radical, with a linear resolution and the
    Eagon-Northcott Betti table; the common gin is the predicted
    staircase ideal."""
    L = _resolve_matrix(params, "row-graded")
    report = {"driver": "thm-4.1",
              "inputs": _matrix_inputs(L, params, basis_cap=basis_cap,
                                       sample_orders=sample_orders,
                                       gin_seed=gin_seed),
              "claims": []}
    m, n = L.m, L.n
    minors = [p for p in maximal_minors(L) if not p.is_zero()]
    if not minors:
        report["claims"].append(_claim(
            "codimension-hypothesis", "precondition failed",
            reason="I_m(L) = 0"))
        return _finish(report)
    codim = codimension(minors, degrevlex(L.ring))
    if codim != n - m + 1:
        report["claims"].append(_claim(
            "codimension-hypothesis", "precondition failed",
            codimension=codim, required=n - m + 1))
        return _finish(report)
    report["claims"].append(_claim(
        "codimension-hypothesis", "pass", codimension=codim))

    pred = predicted_gin_row(m, n, L.ring)
    kp = k_polynomial(pred)
    report["claims"].append(_claim(
        "predicted-gin-radical-borel-fixed",
        _ok(is_radical(pred) and is_borel_fixed(pred)),
        predicted=pred.gens_str()))
    # lex is far too slow on dense matrices; a fixed weight order gives
    # an equally independent cross-check
    cross = _sample_weight_orders(L.ring, "thm-4.1:k-check", 1)[0]
    k_ideal = k_polynomial_ideal(minors, degrevlex(L.ring),
                                 check_order=cross)
    report["claims"].append(_claim(
        "k-polynomial-matches-predicted-and-closed-form",
        _ok(k_ideal == kp == k_mn_closed(m, n)),
        k_polynomial=k_ideal.serialize()))

    en = eagon_northcott_ranks(m, n)
    try:
        ideals = single_multidegree_initial_ideals(minors, cap=basis_cap)
        ok = (all(k_polynomial(J) == kp for J in ideals)
              and all(is_radical(J) for J in ideals)
              and all(has_linear_resolution(J) for J in ideals)
              and all(betti_table(J).totals() == en for J in ideals))
        report["claims"].append(_claim(
            "all-initial-ideals-degree-m-radical-linear-equal-betti",
            _ok(ok), initial_ideal_count=len(ideals),
            eagon_northcott=list(en), exhaustive=True))
    except BasisCapExceeded as exc:
        sampled = {initial_ideal(minors, o) for o in _sample_weight_orders(
            L.ring, "thm-4.1:sample:%d:%d" % (m, n), sample_orders)}
        ok = (all(max(sum(g) for g in J.gens) == m for J in sampled)
              and all(k_polynomial(J) == kp for J in sampled)
              and all(is_radical(J) for J in sampled)
              and all(betti_table(J).totals() == en for J in sampled))
        report["claims"].append(_claim(
            "all-initial-ideals-degree-m-radical-linear-equal-betti",
            "skipped" if ok else "fail", reason=str(exc),
            sampled_orders=sample_orders,
            sampled_initial_ideal_count=len(sampled),
            sampled_checks_pass=ok, exhaustive=False))

    gins = [multigraded_gin(minors, o, seed=gin_seed)
            for o in admissible_orders(L.ring)]
    gin_ok = (all(g.agreed and g.borel_certified for g in gins)
              and all(g.candidate == pred for g in gins))
    report["claims"].append(_claim(
        "gin-equals-predicted-staircase", _ok(gin_ok),
        gin=[g.candidate.gens_str() for g in gins]))
    return _finish(report)


def prop_4_2(**params):
    """Row-graded Hilbert-series comparison: K(S/I_m(L)) equals the
    K-polynomial of the predicted staircase ideal and the closed form."""
    L = _resolve_matrix(params, "row-graded")
    report = {"driver": "prop-4.2",
              "inputs": _matrix_inputs(L, params), "claims": []}
    m, n = L.m, L.n
    minors = [p for p in maximal_minors(L) if not p.is_zero()]
    codim = codimension(minors, degrevlex(L.ring)) if minors else 0
    if codim != n - m + 1:
        report["claims"].append(_claim(
            "hilbert-series-equality", "precondition failed",
            codimension=codim, required=n - m + 1))
        return _finish(report)
    cross = _sample_weight_orders(L.ring, "prop-4.2:k-check", 1)[0]
    k_ideal = k_polynomial_ideal(minors, degrevlex(L.ring),
                                 check_order=cross)
    pred = predicted_gin_row(m, n, L.ring)
    report["claims"].append(_claim(
        "hilbert-series-equality",
        _ok(k_ideal == k_polynomial(pred) == k_mn_closed(m, n)),
        k_polynomial=k_ideal.serialize(),
        closed_form=k_mn_closed(m, n).serialize()))
    return _finish(report)


# -- section 2: rigidity -------------------------------------------------------

def cor_2_6(grading="column", gin_seeds=(0, 1, 2, 3, 4), sample_orders=6,
            **params):
    """Rigidity consequences for one graded instance J = I_m(L) against
    the radical Borel-fixed ideal I predicted as its gin."""
    mode = grading + "-graded"
    L = _resolve_matrix(params, mode)
    report = {"driver": "cor-2.6",
              "inputs": _matrix_inputs(L, params, grading=grading,
                                       gin_seeds=list(gin_seeds),
                                       sample_orders=sample_orders),
              "claims": []}
    minors = [p for p in maximal_minors(L) if not p.is_zero()]
    if grading == "column":
        pred = predicted_gin_column(L)
    else:
        pred = predicted_gin_row(L.m, L.n, L.ring)
    if not (minors and is_radical(pred) and is_borel_fixed(pred)
            and k_polynomial_ideal(minors, degrevlex(L.ring))
            == k_polynomial(pred)):
        report["claims"].append(_claim(
            "rigidity-hypotheses", "precondition failed",
            reason="need I radical Borel-fixed with HS(J) = HS(I)"))
        return _finish(report)
    report["claims"].append(_claim("rigidity-hypotheses", "pass",
                                   predicted=pred.gens_str()))

    orders = admissible_orders(L.ring)
    gin_ok = True
    for seed in gin_seeds:
        for o in orders:
            g = multigraded_gin(minors, o, seed=seed, trials=3)
            gin_ok = gin_ok and g.agreed and g.candidate == pred
    report["claims"].append(_claim(
        "gin-constant-over-orders-and-seeds", _ok(gin_ok),
        orders=len(orders), seeds=list(gin_seeds)))

    sampled = {initial_ideal(minors, o) for o in _sample_weight_orders(
        L.ring, "cor-2.6:sample:%dx%d:%s" % (L.m, L.n, grading),
        sample_orders)}
    pred_table = betti_table(pred)
    ones = tuple(1 for _ in range(L.ring.nblocks))
    radical_ok = all(is_radical(J) for J in sampled)
    linres_ok = (not has_linear_resolution(pred)
                 or all(has_linear_resolution(J) for J in sampled))
    bound_ok = True
    support_ok = True
    for J in sampled:
        t = betti_table(J)
        for (i, a), c in t.fine.items():
            if c > pred_table.fine.get((i, a), 0):
                bound_ok = False
            # the vanishing bound in block degrees only holds when a
            # block never meets two variables of one resolution degree,
            # which is the column-graded situation; in general the bound
            # lives in the variable grading (squarefree support)
            if grading == "column" and any(
                    ai > bi for ai, bi in zip(a, ones)):
                support_ok = False
        if not t.squarefree_support():
            support_ok = False
    report["claims"].append(_claim(
        "initial-ideals-radical", _ok(radical_ok),
        sampled_initial_ideals=len(sampled)))
    report["claims"].append(_claim(
        "linear-resolution-transfers", _ok(linres_ok)))
    report["claims"].append(_claim(
        "fine-betti-bounded-by-predicted-and-squarefree-supported",
        _ok(bound_ok and support_ok)))
    return _finish(report)


def _nonradical_borel_companions(ideals):
    """Deterministic non-radical Borel-fixed ideals derived from a radical
    corpus, to probe K-polynomial separation."""
    from .ideals import MonomialIdeal, borel_closure
    out = {}
    for I in ideals:
        gens = list(I.gens)
        doubled = [tuple(2 * e for e in gens[0])] + gens[1:]
        J = borel_closure(MonomialIdeal(I.ring, doubled))
        if is_borel_fixed(J) and not is_radical(J):
            out[J] = True
    return list(out)


def thm_2_5(block_sizes=(3, 3)):
    """Rigidity: on the corpus of radical Borel-fixed ideals with the
    given block sizes, the K-polynomial separates ideals, also against
    derived non-radical Borel-fixed companions."""
    block_sizes = tuple(block_sizes)
    _, corpus = radical_borel_fixed_ideals(block_sizes)
    report = {"driver": "thm-2.5",
              "inputs": {"block_sizes": list(block_sizes)},
              "claims": []}
    kpolys = {}
    injective = True
    for I in corpus:
        key = tuple(sorted(k_polynomial(I).terms.items()))
        if key in kpolys and kpolys[key] != I:
            injective = False
        kpolys[key] = I
    report["claims"].append(_claim(
        "k-polynomial-separates-radical-borel-fixed-ideals",
        _ok(injective), corpus_size=len(corpus)))
    separated = True
    for J in _nonradical_borel_companions(corpus):
        key = tuple(sorted(k_polynomial(J).terms.items()))
        if key in kpolys:
            separated = False
    report["claims"].append(_claim(
        "non-radical-companions-have-distinct-k-polynomials",
        _ok(separated)))
    return _finish(report)


def lemma_2_4(block_sizes=(3, 3)):
    """Reconstruction: a radical Borel-fixed ideal is the Alexander dual
    of the polarization-in-place of its minimal-prime vectors, and all
    minimal primes have the P_b form."""
    block_sizes = tuple(block_sizes)
    _, corpus = radical_borel_fixed_ideals(block_sizes)
    report = {"driver": "lemma-2.4",
              "inputs": {"block_sizes": list(block_sizes)},
              "claims": []}
    primes_ok = True
    recon_ok = True
    for I in corpus:
        for prime in minimal_primes(I):
            if prime_as_b_vector(I.ring, prime) is None:
                primes_ok = False
        if dual_of_polarized_prime_ideal(I) != I:
            recon_ok = False
    report["claims"].append(_claim(
        "minimal-primes-are-variable-blocks", _ok(primes_ok),
        corpus_size=len(corpus)))
    report["claims"].append(_claim(
        "alexander-dual-reconstruction", _ok(recon_ok)))
    return _finish(report)


def identities(m_max=4, t_max=5, small_m=3, n_max=6):
    """Exact expansions of the binomial and K-polynomial identities."""
    report = {"driver": "identities",
              "inputs": {"m_max": m_max, "t_max": t_max,
                         "small_m": small_m, "n_max": n_max},
              "claims": []}
    ok8 = all(verify_rg8(m, t) for m in range(1, m_max + 1)
              for t in range(t_max + 1))
    report["claims"].append(_claim("complete-homogeneous-shift", _ok(ok8)))
    ok7 = all(verify_rg7(m, t) for m in range(1, small_m + 1)
              for t in range(n_max - m + 1))
    report["claims"].append(_claim(
        "complete-homogeneous-partial-sums", _ok(ok7)))
    ok56 = all(verify_rg5_rg6(m, n) for m in range(1, small_m + 1)
               for n in range(m, n_max + 1))
    report["claims"].append(_claim(
        "k-polynomial-comparison-identities", _ok(ok56)))
    okrec = all(verify_recursion(m, n) for m in range(1, small_m + 1)
                for n in range(m, n_max + 1))
    report["claims"].append(_claim("k-polynomial-recursion", _ok(okrec)))
    return _finish(report)


_DRIVERS = {
    "thm-1.1": thm_1_1,
    "thm-3.1": thm_3_1,
    "thm-3.2": thm_3_2,
    "thm-4.1": thm_4_1,
    "prop-4.2": prop_4_2,
    "cor-2.6": cor_2_6,
    "thm-2.5": thm_2_5,
    "lemma-2.4": lemma_2_4,
    "remark-1.3": remark_1_3,
    "identities": identities,
}


def run_driver(driver_id, **params):
    if driver_id not in _DRIVERS:
        raise ValueError("unknown driver %r (choose from %s)"
                         % (driver_id, ", ".join(DRIVER_IDS)))
    return _DRIVERS[driver_id](**params)
