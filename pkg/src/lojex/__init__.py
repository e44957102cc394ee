"""Exact Lojasiewicz exponents of monomial ideal tuples and of
semi-weighted homogeneous function germs, over the rationals."""

from .errors import (
    DimensionError,
    DomainError,
    InfiniteValueError,
    InputError,
    LojexError,
    ParseError,
    ResourceCapError,
)
from .exponents import (
    BEST_FOUND_UPPER_BOUND,
    EXACT_BY_AXIS,
    EXACT_BY_DIVISIBILITY,
    EXACT_BY_KOP,
    EXACT_BY_MATCHING,
    BoundChainReport,
    CoordinateChange,
    ExponentResult,
    MatchingWitness,
    TracePoint,
    TransformResult,
    asymptotic_order,
    bound_chain,
    check_w_matching,
    gradient_ideals,
    is_isolated_singularity,
    kop_reference_formula,
    loj_gradient,
    loj_monomial_ideal,
    loj_relative_ideal,
    loj_set,
    matching_coordinate_change,
)
from .ideals import (
    FiltrationPieces,
    MonomialIdeal,
    colength,
    filtration_pieces,
    ideal_algebra,
)
from .multiplicity import (
    IdealTuple,
    MultiplicityValue,
    OracleReport,
    mixed_multiplicity,
    oracle_colength_limit,
    oracle_generic_multiplicity,
    r_number,
    samuel_multiplicity,
    sigma,
)
from .parsing import parse_generators, parse_polynomial
from .poly import (
    Polynomial,
    WeightedShape,
    Weights,
    partial_derivative,
    principal_part,
    substitute,
    support,
    weighted_classification,
    weighted_degree,
)
from .polyhedron import (
    NewtonPolyhedron,
    axis_intersections,
    closure_membership,
    covolume,
    newton_polyhedron,
)

__version__ = "0.1.0"
