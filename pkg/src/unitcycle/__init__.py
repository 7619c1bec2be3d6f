"""Exact search and certification of polynomial 4-cycles over Z[1/p1,...,1/pn]."""

from .avoidance import (
    AbcPairReport,
    AvoidanceCertificate,
    InequalityCheck,
    SeparationCounterexample,
    abc_pair,
    check_ordering_hypothesis,
    construct_avoiding_set,
    separation_certificate,
    verify_ordering_conclusion,
)
from .backends import (
    SearchTooLarge,
    active_backend,
    available_backends,
    zero_quadruples,
)
from .cycles import (
    CycleWitness,
    OrbitReport,
    RationalPolynomial,
    RingMembershipError,
    VerifyResult,
    lagrange_cycle_poly,
    orbit,
    relation_from_cycle,
    verify_cycle,
    zieve_unit_search,
)
from .exactnum import (
    factor_over,
    first_primes,
    is_probable_prime,
    next_prime,
    radical,
)
from .lenstra import (
    CliqueWitness,
    is_b_smooth,
    unit_difference_clique,
    z2_admissible_cycle_length,
    z2_four_clique_obstruction,
)
from .relsearch import (
    Relation,
    SearchConfig,
    admits_4cycle,
    ap_relation,
    canonicalize_values,
    check_bb_inequality,
    doubleton_family,
    find_relations,
    has_zero_proper_subsum,
    singleton_mod_obstruction,
    term_table,
)
from .sring import InversionSet, UnitTerm, are_associates, is_member, is_unit, term_value
from .survey import (
    ScatterAggregate,
    SurveyRow,
    csv_bytes,
    emit_csv,
    emit_scatter_svg,
    min_gap,
    survey_run,
    svg_bytes,
)

__version__ = "0.1.0"
