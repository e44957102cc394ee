"""Lojasiewicz exponents: exact values with certificates, or certified
upper bounds with search traces.

The engine computes L_J(I_1,...,I_n) = min over s of r_J(tuple^s)/s.  The
minimum is attained but no effective bound on the attaining s is available,
so plain searches return `BestFoundUpperBound` together with the full
(s, r_s, r_s/s) trace; each sampled ratio is a true upper bound.  Exact
certificates are issued only on recognized configurations:

  ExactByAxis         single finite-colength monomial ideal (or a diagonal
                      tuple): the largest axis intersection of the Newton
                      polyhedron is the exponent.
  ExactByMatching     a w-matching plus the filtration hypotheses pin the
                      tuple exponent at max(r_i)/min(w_j).
  ExactByDivisibility all weights divide the degree: a coordinate change
                      makes the principal part convenient, which forces a
                      matching in the new coordinates.
  ExactByKOP          three variables, weighted homogeneous, 2 w_i <= d.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import (
    DimensionError,
    DomainError,
    InfiniteValueError,
    InputError,
)
from .groebner import is_zero_dimensional
from .ideals import MonomialIdeal, filtration_pieces
from .multiplicity import (
    IdealTuple,
    as_tuple,
    gamma,
    sigma,
    _m_poly,
    _r_number_polys,
)
from .poly import Polynomial, Weights
from .polyhedron import NewtonPolyhedron

EXACT_BY_MATCHING = "ExactByMatching"
EXACT_BY_AXIS = "ExactByAxis"
EXACT_BY_KOP = "ExactByKOP"
EXACT_BY_DIVISIBILITY = "ExactByDivisibility"
BEST_FOUND_UPPER_BOUND = "BestFoundUpperBound"

EXACT_CERTIFICATES = frozenset(
    {EXACT_BY_MATCHING, EXACT_BY_AXIS, EXACT_BY_KOP, EXACT_BY_DIVISIBILITY}
)

TRANSFORM_COEFF_RANGE = (1, 97)
TRANSFORM_RETRIES = 32


@dataclass(frozen=True)
class TracePoint:
    """One sampled power: ratio = r/s (s, r are None for imported bounds)."""

    s: int | None
    r: int | None
    ratio: Fraction
    source: str = "search"


@dataclass(frozen=True)
class MatchingWitness:
    """Permutation tau (position i -> ideal tau[i-1]) and pivot index i0,
    both 1-based."""

    tau: tuple[int, ...]
    i0: int


@dataclass(frozen=True)
class CoordinateChange:
    """Substitution x_j = y_j + h_j(y) with h_j weighted homogeneous of
    degree w_j (or zero); `images` are the full right-hand sides."""

    images: tuple[Polynomial, ...]
    shifts: tuple[Polynomial, ...]
    coefficients: dict[tuple[int, int], int] = field(default_factory=dict)

    def is_identity(self) -> bool:
        return all(h.is_zero() for h in self.shifts)


@dataclass(frozen=True)
class ExponentResult:
    """A Lojasiewicz exponent value plus its provenance.

    Exact certificates name a theorem instance; BestFoundUpperBound carries
    a non-empty trace whose minimal ratio equals the value.  `determinacy`
    is floor(value) + 1 (an upper bound for it when the value itself is
    only an upper bound).
    """

    value: object  # Fraction or math.inf
    certificate: str
    search_trace: tuple[TracePoint, ...] = ()
    witness: MatchingWitness | None = None
    determinacy: int | None = None
    bound: Fraction | None = None
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if self.certificate == BEST_FOUND_UPPER_BOUND:
            if not self.search_trace:
                raise AssertionError("upper-bound results need a search trace")
            if min(t.ratio for t in self.search_trace) != self.value:
                raise AssertionError("trace minimum must equal the value")

    @property
    def is_exact(self) -> bool:
        return self.certificate in EXACT_CERTIFICATES


def _determinacy(value) -> int | None:
    if value == math.inf:
        return None
    return math.floor(value) + 1


# ---------------------------------------------------------------------------
# nu-bar orders and single-ideal exponents
# ---------------------------------------------------------------------------

def _plain_order(I: MonomialIdeal, k: tuple[int, ...]) -> object:
    """nu_I(x^k): the largest r with x^k in I^r, by domination recursion."""
    memo: dict[tuple[int, ...], object] = {}

    def best(point: tuple[int, ...]):
        if point in memo:
            return memo[point]
        memo[point] = 0
        top = 0
        for g in I.generators:
            if all(p >= q for p, q in zip(point, g)):
                rest = tuple(p - q for p, q in zip(point, g))
                top = max(top, 1 + best(rest))
        memo[point] = top
        return top

    return best(tuple(k))


def asymptotic_order(I: MonomialIdeal, h, mode: str = "asymptotic"):
    """Order of h against I: facet ratios in asymptotic mode, literal power
    membership in plain mode (monomial arguments only).

    For polynomial h the asymptotic order is taken as the minimum over the
    support, extending the minimum-over-generators rule for ideals to the
    monomial pieces of h; this relies on the closure of I being monomial.
    """
    if I.is_zero():
        raise DomainError("orders against the zero ideal are undefined")
    if mode == "plain":
        if isinstance(h, Polynomial) and len(h.support()) == 1:
            (k,) = h.support()
        elif isinstance(h, tuple):
            k = h
        else:
            raise DomainError("plain mode accepts a single monomial only")
        return _plain_order(I, k)
    if mode != "asymptotic":
        raise DomainError(f"unknown mode {mode!r}")
    poly = gamma(I)
    if isinstance(h, MonomialIdeal):
        if h.is_zero():
            raise DomainError("asymptotic order of the zero ideal is undefined")
        points = h.generators
    elif isinstance(h, Polynomial):
        if h.is_zero():
            return math.inf
        points = tuple(h.support())
    else:
        points = (tuple(h),)
    return min(poly.nu_bar(k) for k in points)


def loj_monomial_ideal(J: MonomialIdeal) -> ExponentResult:
    """Exponent of one finite-colength monomial ideal: the largest axis
    intersection of its Newton polyhedron."""
    if not J.has_finite_colength:
        raise InfiniteValueError("the exponent needs finite colength")
    if J.is_unit():
        raise DomainError("the unit ideal has no exponent")
    poly = gamma(J)
    value = Fraction(max(poly.axis_intersections()))
    dual = asymptotic_order(J, MonomialIdeal.maximal(J.dim))
    if value * dual != 1:
        raise AssertionError("axis value disagrees with the nu-bar dual")
    return ExponentResult(value=value, certificate=EXACT_BY_AXIS)


def loj_relative_ideal(I: MonomialIdeal, J: MonomialIdeal) -> Fraction:
    """min{p/q : J^p inside the closure of I^q}, from vertex/facet ratios."""
    for ideal, name in ((I, "I"), (J, "J")):
        if not ideal.has_finite_colength:
            raise InfiniteValueError(f"{name} must have finite colength")
        if ideal.is_unit():
            raise DomainError(f"{name} must be a proper ideal")
    gi, gj = gamma(I), gamma(J)
    best = Fraction(0)
    for a, c in gi.facets:
        for v in gj.vertices:
            pairing = sum(ai * vi for ai, vi in zip(a, v))
            best = max(best, Fraction(c, pairing))
    return best


# ---------------------------------------------------------------------------
# w-matchings
# ---------------------------------------------------------------------------

def _kuhn_matching(adjacency: dict[int, list[int]], left: list[int]) -> dict[int, int] | None:
    """Deterministic augmenting-path perfect matching; None if impossible."""
    match_right: dict[int, int] = {}

    def augment(u: int, seen: set[int]) -> bool:
        for v in adjacency.get(u, []):
            if v in seen:
                continue
            seen.add(v)
            if v not in match_right or augment(match_right[v], seen):
                match_right[v] = u
                return True
        return False

    for u in left:
        if not augment(u, set()):
            return None
    return {u: v for v, u in match_right.items()}


def check_w_matching(T, w: Weights) -> MatchingWitness | None:
    """Search for (tau, i0): minimal weight at i0, maximal degree at tau(i0),
    and integral pure-power memberships x_i^{r_tau(i)/w_i} elsewhere."""
    T = as_tuple(T)
    n = T.dim
    if len(w) != n:
        raise DimensionError("weights dimension mismatch")
    if any(ideal.is_zero() for ideal in T):
        raise DomainError("matching needs nonzero ideals")
    degrees = [ideal.weighted_degree(w) for ideal in T]
    max_degree = max(degrees)
    i0_candidates = [i for i in range(n) if w[i] == w.min_weight]
    t0_candidates = [j for j in range(n) if degrees[j] == max_degree]

    def edge(i: int, j: int) -> bool:
        if degrees[j] % w[i] != 0:
            return False
        exponent = degrees[j] // w[i]
        point = tuple(exponent if k == i else 0 for k in range(n))
        return T.entries[j].contains_monomial(point)

    for i0 in i0_candidates:
        for t0 in t0_candidates:
            positions = [i for i in range(n) if i != i0]
            adjacency = {
                i: [j for j in range(n) if j != t0 and edge(i, j)] for i in positions
            }
            matching = _kuhn_matching(adjacency, positions)
            if matching is not None:
                tau = [0] * n
                tau[i0] = t0 + 1
                for i, j in matching.items():
                    tau[i] = j + 1
                return MatchingWitness(tau=tuple(tau), i0=i0 + 1)
    return None


# ---------------------------------------------------------------------------
# tuple exponents
# ---------------------------------------------------------------------------

def default_schedule(w: Weights | None, s_max: int | None) -> tuple[int, ...]:
    """Powers to sample: 1..2*wbar plus multiples of wbar up to 6*wbar when
    weights are known (the filtration bound is attained along multiples of
    wbar), else 1..s_max."""
    if s_max is not None:
        return tuple(range(1, s_max + 1))
    if w is None:
        return tuple(range(1, 11))
    wbar = w.product
    values = set(range(1, 2 * wbar + 1))
    values.update(k * wbar for k in range(1, 7))
    return tuple(sorted(values))


def _power_of_maximal(J: MonomialIdeal) -> int | None:
    """s when the closure of J is m^s, else None."""
    poly = gamma(J)
    model = _m_poly(J.dim)
    for s in {int(r) for r in poly.axis_intersections() if r != math.inf}:
        if poly.facets == model.scale(s).facets:
            return s
    return None


def _filtration_tuple(w: Weights, degrees: Sequence[int], piece: str) -> IdealTuple:
    pieces = [filtration_pieces(w, r) for r in degrees]
    return IdealTuple(
        tuple(p.A_r if piece == "A" else p.B_r for p in pieces)
    )


def loj_set(
    T,
    J: MonomialIdeal | None = None,
    *,
    weights: Weights | None = None,
    s_max: int | None = None,
    schedule: Sequence[int] | None = None,
    certify: bool = True,
    jobs: int = 1,
) -> ExponentResult:
    """Exponent of an ideal tuple with respect to J (default: the maximal
    ideal).  Exact on diagonal tuples and on matching-certified weighted
    tuples; otherwise the sampled minimum of r_J(T^s)/s with its trace.
    Independent powers may be evaluated by `jobs` concurrent workers."""
    T = as_tuple(T)
    n = T.dim
    if J is None:
        J = MonomialIdeal.maximal(n)
    if J.dim != n:
        raise DimensionError("J dimension mismatch")
    if not J.has_finite_colength or J.is_unit():
        raise DomainError("J must be proper of finite colength")
    sigma_T = sigma(T)
    if not sigma_T.is_finite:
        raise InfiniteValueError("the tuple exponent needs finite sigma")

    if certify:
        exact = _exact_tuple_value(T, J, weights)
        if exact is not None:
            return exact

    polys = [gamma(ideal) for ideal in T]
    j_poly = gamma(J)

    def sample(s: int) -> TracePoint:
        target = int(sigma_T.value) * s**n
        r_s = _r_number_polys([p.scale(s) for p in polys], target, j_poly)
        return TracePoint(s=s, r=r_s, ratio=Fraction(r_s, s))

    powers = list(schedule or default_schedule(weights, s_max))
    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            trace = list(pool.map(sample, powers))
    else:
        trace = [sample(s) for s in powers]
    _check_trace_scaling(trace)
    value = min(t.ratio for t in trace)
    return ExponentResult(
        value=value,
        certificate=BEST_FOUND_UPPER_BOUND,
        search_trace=tuple(trace),
    )


def _check_trace_scaling(trace: list[TracePoint]) -> None:
    """r_{sp} <= s * r_p must hold along the sampled powers."""
    by_s = {t.s: t.r for t in trace}
    for p, r_p in by_s.items():
        for sp, r_sp in by_s.items():
            if sp % p == 0 and r_sp > (sp // p) * r_p:
                raise AssertionError(
                    f"power scaling violated: r_{sp}={r_sp} > {sp // p}*r_{p}={r_p}"
                )


def _exact_tuple_value(
    T: IdealTuple, J: MonomialIdeal, w: Weights | None
) -> ExponentResult | None:
    n = T.dim
    polys = [gamma(ideal) for ideal in T]
    if all(p == polys[0] for p in polys) and T.entries[0].has_finite_colength:
        if not T.entries[0].is_unit():
            value = loj_relative_ideal(T.entries[0], J)
            return ExponentResult(
                value=value,
                certificate=EXACT_BY_AXIS,
                determinacy=None,
                notes=("diagonal tuple: single-ideal exponent",),
            )
    if w is None or len(w) != n or any(ideal.is_zero() for ideal in T):
        return None
    j_scale = _power_of_maximal(J)
    if j_scale is None:
        return None
    witness = check_w_matching(T, w)
    if witness is None:
        return None
    degrees = [ideal.weighted_degree(w) for ideal in T]
    sigma_T = sigma(T)
    sigma_A = sigma(_filtration_tuple(w, degrees, "A"))
    if not sigma_A.is_finite or sigma_A.value != sigma_T.value:
        return None
    value = Fraction(max(degrees), w.min_weight) / j_scale
    notes = ("matching with filtration hypotheses verified",)
    if j_scale > 1:
        notes += (f"relative ideal is the {j_scale}-th power of the maximal ideal",)
    return ExponentResult(
        value=value,
        certificate=EXACT_BY_MATCHING,
        witness=witness,
        notes=notes,
    )


# ---------------------------------------------------------------------------
# filtration bound chain
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundChainReport:
    """The filtration upper bound with its verified hypotheses.

    `lower_pieces` holds the computed exponents for the input tuple and the
    two filtration tuples (entries may be None when a hypothesis failed);
    `exact` marks the bound as the common exact value (matching found)."""

    weights: Weights
    degrees: tuple[int, ...]
    value_bound: Fraction
    lower_pieces: dict
    witness: MatchingWitness | None
    exact: bool
    hypotheses_ok: bool
    warnings: tuple[str, ...]


def bound_chain(T, w: Weights, *, s_max: int | None = None) -> BoundChainReport:
    """Evaluate the chain L0(T) <= L0(A-tuple) <= L0(B-tuple) <= max r/min w
    and certify equality when a w-matching exists."""
    T = as_tuple(T)
    if len(w) != T.dim:
        raise DimensionError("weights dimension mismatch")
    if any(ideal.is_zero() for ideal in T):
        raise DomainError("bound chain needs nonzero ideals")
    degrees = tuple(ideal.weighted_degree(w) for ideal in T)
    bound = Fraction(max(degrees), w.min_weight)
    warnings: list[str] = []

    a_tuple = _filtration_tuple(w, degrees, "A")
    b_tuple = _filtration_tuple(w, degrees, "B")
    sigma_T = sigma(T)
    sigma_A = sigma(a_tuple)
    hypotheses_ok = True
    if not sigma_A.is_finite:
        hypotheses_ok = False
        warnings.append("sigma of the A-filtration tuple is infinite")
    if sigma_T.value != sigma_A.value:
        hypotheses_ok = False
        warnings.append(
            f"sigma mismatch: tuple {sigma_T.value} vs filtration {sigma_A.value}"
        )
    witness = check_w_matching(T, w) if hypotheses_ok else None

    pieces: dict = {"tuple": None, "A": None, "B": None}
    if sigma_T.is_finite:
        pieces["tuple"] = loj_set(T, weights=w, s_max=s_max)
    if sigma_A.is_finite:
        pieces["A"] = loj_set(a_tuple, weights=w, s_max=s_max)
    pieces["B"] = loj_set(b_tuple, weights=w, s_max=s_max)

    return BoundChainReport(
        weights=w,
        degrees=degrees,
        value_bound=bound,
        lower_pieces=pieces,
        witness=witness,
        exact=hypotheses_ok and witness is not None,
        hypotheses_ok=hypotheses_ok,
        warnings=tuple(warnings),
    )


# ---------------------------------------------------------------------------
# gradient pipeline
# ---------------------------------------------------------------------------

def gradient_ideals(f: Polynomial) -> IdealTuple:
    """Monomial ideals spanned by the supports of the partial derivatives."""
    return IdealTuple(
        tuple(
            MonomialIdeal.from_polynomials([f.partial_derivative(i)])
            for i in range(1, f.dim + 1)
        )
    )


def is_isolated_singularity(p: Polynomial, w: Weights | None = None) -> bool:
    """Zero-dimensionality of the critical locus.

    For weighted homogeneous p the critical locus is invariant under the
    weight scaling action, so global finiteness is equivalent to the origin
    being the only critical point.  When w is supplied, weighted
    homogeneity is enforced."""
    if p.is_zero():
        raise DomainError("the zero polynomial has no singularity type")
    if p.coefficient((0,) * p.dim) != 0:
        raise DomainError("expected a germ with p(0) = 0")
    if w is not None and not p.is_weighted_homogeneous(w):
        raise DomainError("input is not weighted homogeneous for the given weights")
    partials = [p.partial_derivative(i) for i in range(1, p.dim + 1)]
    if any(g.is_zero() for g in partials) and p.dim > 1:
        return False
    return is_zero_dimensional(partials)


def kop_reference_formula(w: Weights, d: int):
    """(d - min w)/min w in three variables, provided d >= 2 w_i for all i;
    None when the hypothesis fails (never a silent wrong value)."""
    if len(w) != 3:
        raise DomainError("the reference formula is specific to three variables")
    if any(d < 2 * wi for wi in w):
        return None
    return Fraction(d - w.min_weight, w.min_weight)


@dataclass(frozen=True)
class TransformResult:
    change: CoordinateChange
    g: Polynomial


def matching_coordinate_change(
    f: Polynomial, w: Weights, seed: int = 0
) -> TransformResult:
    """Coordinate change x_j = y_j + h_j making a weighted homogeneous germ
    convenient, for weights all dividing the degree.

    Each axis i needs a support monomial x_{k_i} * x_i^{m_i} with
    m_i = (d - w_{k_i})/w_i; the shifts h_j collect generic multiples of
    y_i^{w_j/w_i} over the axes pointing at j.  Convenience of the image is
    verified and coefficients are redrawn on the rare cancellations."""
    if f.is_zero():
        raise DomainError("cannot transform the zero polynomial")
    if len(w) != f.dim:
        raise DimensionError("weights dimension mismatch")
    if not f.is_weighted_homogeneous(w):
        raise DomainError("transform requires a weighted homogeneous input")
    d = f.weighted_degree(w)
    if any(d % wi != 0 for wi in w):
        raise DomainError("every weight must divide the degree")
    n = f.dim
    support = f.support()

    pointers: list[int] = []
    for i in range(n):
        candidates = []
        for k_exp in support:
            others = [(j, e) for j, e in enumerate(k_exp) if e and j != i]
            if len(others) == 0 and k_exp[i] >= 1:
                candidates.append(i)  # pure power of x_i
            elif len(others) == 1 and others[0][1] == 1:
                candidates.append(others[0][0])
        if not candidates:
            raise InputError(
                f"axis {i + 1} carries no support monomial of the required "
                "shape; the input cannot have an isolated singularity"
            )
        pointers.append(i if i in candidates else min(candidates))

    targets: dict[int, list[int]] = {}
    for i, j in enumerate(pointers):
        if j != i:
            targets.setdefault(j, []).append(i)
    for j, axes in targets.items():
        for i in axes:
            if w[j] % w[i] != 0:
                raise AssertionError("weight divisibility violated by pointers")

    rng = random.Random(seed)
    for _ in range(TRANSFORM_RETRIES):
        coeffs = {
            (j + 1, i + 1): rng.randint(*TRANSFORM_COEFF_RANGE)
            for j, axes in targets.items()
            for i in axes
        }
        shifts = []
        for j in range(n):
            terms = {}
            for i in targets.get(j, []):
                k = tuple(w[j] // w[i] if t == i else 0 for t in range(n))
                terms[k] = Fraction(coeffs[(j + 1, i + 1)])
            shifts.append(Polynomial(n, terms))
        images = tuple(
            Polynomial.variable(n, j + 1) + shifts[j] for j in range(n)
        )
        g = f.substitute(images)
        if not g.is_weighted_homogeneous(w) or g.weighted_degree(w) != d:
            raise AssertionError("transform broke weighted homogeneity")
        for j in range(n):
            if not shifts[j].is_zero() and shifts[j].weighted_degree(w) != w[j]:
                raise AssertionError("shift degree mismatch")
        if g.is_convenient():
            change = CoordinateChange(
                images=images, shifts=tuple(shifts), coefficients=coeffs
            )
            return TransformResult(change=change, g=g)
    raise InputError("could not reach a convenient image (retries exhausted)")


def loj_gradient(
    f: Polynomial,
    w: Weights,
    *,
    seed: int = 0,
    assume_isolated: bool = False,
    s_max: int | None = None,
    jobs: int = 1,
) -> ExponentResult:
    """Exponent of the gradient of a semi-weighted homogeneous germ.

    Tries, in order: a w-matching of the partial-derivative ideals; the
    all-weights-divide-the-degree route through a convenient-making change
    of coordinates; the three-variable reference formula; and finally the
    filtration upper bound together with a sampled search trace."""
    if f.is_zero():
        raise DomainError("the zero polynomial has no gradient exponent")
    if len(w) != f.dim:
        raise DimensionError("weights dimension mismatch")
    if f.coefficient((0,) * f.dim) != 0:
        raise DomainError("expected a germ with f(0) = 0")
    d = f.weighted_degree(w)
    principal = f.principal_part(w)
    if not assume_isolated and not is_isolated_singularity(principal, w):
        raise DomainError(
            "the principal part has a non-isolated singularity; "
            "pass assume_isolated to override"
        )
    ideals = gradient_ideals(f)
    degrees = [ideal.weighted_degree(w) for ideal in ideals]
    if degrees != [d - wi for wi in w]:
        raise AssertionError("gradient ideal degrees are inconsistent")
    bound = Fraction(d - w.min_weight, w.min_weight)

    witness = check_w_matching(ideals, w)
    if witness is not None:
        return ExponentResult(
            value=bound,
            certificate=EXACT_BY_MATCHING,
            witness=witness,
            determinacy=_determinacy(bound),
            bound=bound,
        )

    if all(d % wi == 0 for wi in w):
        transform = matching_coordinate_change(principal, w, seed=seed)
        new_ideals = gradient_ideals(transform.g)
        new_witness = check_w_matching(new_ideals, w)
        if new_witness is None:
            raise AssertionError("convenient image admits no matching")
        return ExponentResult(
            value=bound,
            certificate=EXACT_BY_DIVISIBILITY,
            witness=new_witness,
            determinacy=_determinacy(bound),
            bound=bound,
            notes=(
                "exponent realized after a convenient-making coordinate change",
            ),
        )

    if f.dim == 3 and f == principal and all(2 * wi <= d for wi in w):
        reference = kop_reference_formula(w, d)
        if reference != bound:
            raise AssertionError("reference formula disagrees with the bound")
        return ExponentResult(
            value=bound,
            certificate=EXACT_BY_KOP,
            determinacy=_determinacy(bound),
            bound=bound,
        )

    searched = loj_set(ideals, weights=w, s_max=s_max, certify=False, jobs=jobs)
    trace = list(searched.search_trace)
    if bound < searched.value:
        trace.append(TracePoint(s=None, r=None, ratio=bound, source="gradient-bound"))
    value = min(searched.value, bound)
    return ExponentResult(
        value=value,
        certificate=BEST_FOUND_UPPER_BOUND,
        search_trace=tuple(trace),
        determinacy=_determinacy(value),
        bound=bound,
        notes=("upper bound; no exactness certificate applies",),
    )
