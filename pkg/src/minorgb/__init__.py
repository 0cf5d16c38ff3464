"""Exact kernel for universal Groebner bases of maximal minors of
(multi)graded matrices of linear forms, with machine checks for the
associated rigidity, Hilbert-series, and Betti-number statements."""

from .fields import Field, QQ
from .ring import Poly, Ring, grid_ring, parse_poly, poly_arith
from .orders import TermOrder, degrevlex, leading_term, lex, order_from_weight
from .markings import Marking, MarkingCapExceeded, realizable_markings
from .groebner import (
    GroebnerBasis,
    all_initial_ideals,
    buchberger,
    initial_ideal,
    marked_reduce,
    reduce_poly,
    single_multidegree_initial_ideals,
    universal_basis,
    universal_gb_certificate,
)
from .ideals import (
    MonomialIdeal,
    alexander_dual,
    borel_closure,
    is_borel_fixed,
    is_radical,
    localized_length,
    minimal_primes,
    polarize,
    predicted_gin_column,
    predicted_gin_row,
    radical,
    radical_borel_fixed_ideals,
    variable_prime,
)
from .matrices import (
    LinearMatrix,
    SpecializationMatrix,
    build_matrix,
    codimension,
    maximal_minors,
    random_specialization,
    specialize_phi,
)
from .matroids import Matroid, column_matroid, dual_matroid, stanley_reisner
from .hilbert import (
    LaurentPoly,
    c_polynomial,
    g_multidegree,
    h_complete,
    k_mn_closed,
    k_polynomial,
    k_polynomial_ideal,
    verify_recursion,
    verify_rg5_rg6,
    verify_rg7,
    verify_rg8,
)
from .betti import (
    BettiTable,
    betti_table,
    eagon_northcott_ranks,
    has_linear_resolution,
    projective_dimension,
)
from .gin import BorelElement, GinResult, apply_group_element, multigraded_gin

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
