"""Edge-ideal metrics on contact structures and RNA secondary structures
of a fixed length, with Hilbert-function engines, orbit-based closed
forms, and built-in brute-force verification."""

from .combinat import binomial, monomial_count
from .errors import (
    AlphabetExhausted,
    BudgetExceeded,
    ConsecutiveContact,
    DimensionMismatch,
    DuplicateContact,
    EdgeMetricError,
    HeterogeneousLengths,
    IndexOutOfRange,
    InvalidCharacter,
    InvalidMetricIndex,
    LengthMismatch,
    NotSecondary,
    NotationError,
    PairFormatError,
    PreconditionViolated,
    SelfLoop,
    StructureError,
    UnbalancedBracket,
    UniqueBondsViolated,
)
from .hilbert import (
    HilbertTable,
    hilbert_enumerated,
    hilbert_generic,
    hilbert_secondary_closed,
)
from .ideals import (
    DEFAULT_ENUMERATION_BUDGET,
    Monomial,
    MonomialIdeal,
    contains,
    edge_ideal,
    enumerate_members,
    ideal_sum,
    independent_set_counts,
    intersection_generators,
    sf_count,
)
from .metrics import (
    MAX_METRIC_INDEX,
    MetricValue,
    d,
    d3_closed,
    d4_closed_general,
    d4_closed_rna,
    d5_closed_rna,
    d6_closed_rna,
    d_prime,
    fraction_to_decimal,
    metric_value,
    normalizer,
    shared_contact_monotonicity_check,
)
from .notation import BracketAlphabet, DEFAULT_ALPHABET, parse_dotbracket, to_dotbracket
from .orbits import (
    Orbit,
    OrbitKind,
    OrbitStats,
    a_k,
    decompose,
    sgr_indistinguishable,
)
from .oracle import (
    OracleReport,
    run_checks,
    simple_path_count,
    subgroup_closure_equal,
    symdiff_monomial_count,
    transposition_subgroup,
)
from .structures import (
    Contact,
    ContactStructure,
    StructureKind,
    angle_count,
    empty_structure,
    is_secondary,
    parse_pair_line,
    symmetric_difference_count,
    to_pair_line,
    triangle_count,
    union,
    validate,
)

__version__ = "0.1.0"
