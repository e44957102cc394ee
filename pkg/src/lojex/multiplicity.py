"""Multiplicities of monomial ideals: colength, Samuel and mixed
multiplicities, the Rees mixed multiplicity of an ideal tuple, and the
stabilization numbers r_J.

Multiplicities of monomial ideals depend only on integral closures, hence
only on Newton polyhedra.  The engine therefore works on polyhedra:
e(I) = n! * covol(Gamma(I)), products become Minkowski sums, ideal sums
become hulls of unions, and powers are dilations.  Mixed multiplicities are
recovered from plain ones by inclusion-exclusion over subsets of the tuple.

Two independent oracles cross-check the path above: a lattice-point count
whose n-th finite differences recover the multiplicity, and a Monte-Carlo
realization of the generic-element characterization backed by the Groebner
engine.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import DimensionError, DomainError, InfiniteValueError, ResourceCapError
from .groebner import local_colength
from .ideals import MonomialIdeal
from .poly import Polynomial
from .polyhedron import NewtonPolyhedron

_GAMMA_CACHE: dict[MonomialIdeal, NewtonPolyhedron] = {}
_MIXED_CACHE: dict[tuple, int] = {}

GENERIC_COEFF_BOUND = 10**6
GENERIC_TRIALS = 5


@dataclass(frozen=True)
class IdealTuple:
    """Exactly n monomial ideals of the n-variable ring."""

    entries: tuple[MonomialIdeal, ...]

    def __post_init__(self):
        if not self.entries:
            raise DomainError("ideal tuple must be non-empty")
        dim = self.entries[0].dim
        for ideal in self.entries:
            if ideal.dim != dim:
                raise DimensionError("ideal tuple has mixed dimensions")
        if len(self.entries) != dim:
            raise DomainError(
                f"need exactly {dim} ideals in dimension {dim}, got {len(self.entries)}"
            )

    @property
    def dim(self) -> int:
        return self.entries[0].dim

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def power(self, s: int) -> "IdealTuple":
        return IdealTuple(tuple(ideal**s for ideal in self.entries))


def as_tuple(T) -> IdealTuple:
    if isinstance(T, IdealTuple):
        return T
    return IdealTuple(tuple(T))


@dataclass(frozen=True)
class MultiplicityValue:
    """A multiplicity together with the route that produced it."""

    value: object  # non-negative int, or math.inf
    method: str  # covolume | polarization | stabilized | oracle
    detail: str = ""

    @property
    def is_finite(self) -> bool:
        return self.value != math.inf


def gamma(ideal: MonomialIdeal) -> NewtonPolyhedron:
    """Cached Newton polyhedron of an ideal."""
    poly = _GAMMA_CACHE.get(ideal)
    if poly is None:
        poly = NewtonPolyhedron.from_ideal(ideal)
        _GAMMA_CACHE[ideal] = poly
    return poly


def _m_poly(dim: int) -> NewtonPolyhedron:
    return gamma(MonomialIdeal.maximal(dim))


def samuel_e(poly: NewtonPolyhedron) -> int:
    """n! * covolume, as an integer (asserted)."""
    value = math.factorial(poly.dim) * poly.covolume()
    if value.denominator != 1:
        raise AssertionError(f"non-integer multiplicity {value}")
    return int(value)


def mixed_e(polys: Sequence[NewtonPolyhedron]) -> int:
    """Mixed multiplicity of n finite-colength polyhedra by
    inclusion-exclusion over Minkowski sums of subsets."""
    n = len(polys)
    key = tuple(sorted(p.fingerprint() for p in polys))
    cached = _MIXED_CACHE.get(key)
    if cached is not None:
        return cached
    total = Fraction(0)
    sums: dict[int, NewtonPolyhedron] = {}
    for mask in range(1, 1 << n):
        low = mask & (-mask)
        rest = mask ^ low
        piece = polys[low.bit_length() - 1]
        sums[mask] = piece if rest == 0 else sums[rest].minkowski(piece)
        sign = -1 if (n - mask.bit_count()) % 2 else 1
        total += sign * sums[mask].covolume()
    if total.denominator != 1:
        raise AssertionError(f"non-integer mixed multiplicity {total}")
    result = int(total)
    if result < 0:
        raise AssertionError(f"negative mixed multiplicity {result}")
    _MIXED_CACHE[key] = result
    return result


def colength(ideal: MonomialIdeal):
    """Number of standard monomials below the staircase (inf if open)."""
    return ideal.colength()


def covolume(poly: NewtonPolyhedron) -> Fraction:
    return poly.covolume()


def samuel_multiplicity(ideal: MonomialIdeal) -> MultiplicityValue:
    """e(I) = n! * covol(Gamma(I)) for a finite-colength monomial ideal."""
    if not ideal.has_finite_colength:
        raise InfiniteValueError("Samuel multiplicity requires finite colength")
    return MultiplicityValue(samuel_e(gamma(ideal)), "covolume")


def mixed_multiplicity(T) -> MultiplicityValue:
    """Teissier-Risler mixed multiplicity of a finite-colength tuple."""
    T = as_tuple(T)
    for ideal in T:
        if not ideal.has_finite_colength:
            raise InfiniteValueError(
                "mixed multiplicity needs finite colength entries (use sigma)"
            )
    return MultiplicityValue(mixed_e([gamma(i) for i in T]), "polarization")


def _augmented(polys: Sequence[NewtonPolyhedron], j_poly: NewtonPolyhedron, r: int):
    return [p.hull_union(j_poly.scale(r)) for p in polys]


def _sum_has_finite_colength(T: IdealTuple) -> bool:
    total = MonomialIdeal.zero(T.dim)
    for ideal in T:
        total = total + ideal
    return total.has_finite_colength


@dataclass(frozen=True)
class OracleReport:
    """Outcome of the generic-element oracle: the minimum multiplicity over
    trials, inf when every trial was singular (evidence for sigma = inf)."""

    minimum: object
    trials: tuple


def sigma(T, *, seed: int = 0, cross_check: bool = False) -> MultiplicityValue:
    """Rees mixed multiplicity: max over r of e(I_1 + m^r, ..., I_n + m^r).

    Finite-colength tuples reduce to the plain mixed multiplicity.  If the
    ideal sum has infinite colength, sigma is infinite.  Otherwise the
    nondecreasing sequence in r is evaluated at a cutoff and accepted when
    it has flattened; `cross_check` additionally confronts the value with
    the generic-element oracle.
    """
    T = as_tuple(T)
    if all(ideal.has_finite_colength for ideal in T):
        value = mixed_e([gamma(i) for i in T])
        return _maybe_cross_check(T, MultiplicityValue(value, "polarization"), seed, cross_check)
    if any(ideal.is_zero() for ideal in T):
        return MultiplicityValue(
            math.inf, "oracle", detail="zero entry admits no finite selection"
        )
    if not _sum_has_finite_colength(T):
        return MultiplicityValue(
            math.inf, "oracle", detail="ideal sum has infinite colength"
        )
    polys = [gamma(i) for i in T]
    n = T.dim
    m_poly = _m_poly(n)
    cutoff = n * (1 + max(p.max_vertex_coordinate() for p in polys if not p.is_empty))
    for _ in range(4):
        v_here = mixed_e(_augmented(polys, m_poly, cutoff))
        v_next = mixed_e(_augmented(polys, m_poly, cutoff + 1))
        if v_here == v_next:
            return _maybe_cross_check(
                T, MultiplicityValue(v_here, "stabilized"), seed, cross_check
            )
        cutoff *= 2
    report = oracle_generic_multiplicity(T, seed=seed)
    if report.minimum == math.inf:
        return MultiplicityValue(
            math.inf, "oracle", detail="all generic trials singular"
        )
    raise ResourceCapError("sigma sequence did not stabilize below the cutoff")


def _maybe_cross_check(
    T: IdealTuple, result: MultiplicityValue, seed: int, enabled: bool
) -> MultiplicityValue:
    if not enabled:
        return result
    report = oracle_generic_multiplicity(T, seed=seed)
    if report.minimum == result.value:
        return MultiplicityValue(result.value, result.method, "confirmed by generic oracle")
    return MultiplicityValue(
        result.value,
        result.method,
        f"generic oracle saw {report.minimum} over {len(report.trials)} trials",
    )


def sigma_value(T) -> object:
    return sigma(T).value


def _r_search(evaluate, target: int, cap: int) -> int:
    """Least r >= 1 with evaluate(r) == target, where evaluate is a
    nondecreasing integer function with limit target."""
    hi = 1
    while evaluate(hi) != target:
        hi *= 2
        if hi > cap:
            raise ResourceCapError(f"r search exceeded cap {cap}")
    lo = hi // 2  # evaluate(lo) != target (or lo == 0)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if evaluate(mid) == target:
            hi = mid
        else:
            lo = mid
    return hi


def r_number(T, J: MonomialIdeal | None = None, *, sigma_hint: int | None = None) -> int:
    """Least r with e(I_1 + J^r, ..., I_n + J^r) equal to sigma(T)."""
    T = as_tuple(T)
    if J is None:
        J = MonomialIdeal.maximal(T.dim)
    if J.dim != T.dim:
        raise DimensionError("J dimension mismatch")
    if not J.has_finite_colength or J.is_unit():
        raise DomainError("r numbers need a proper finite-colength J")
    target = sigma_hint if sigma_hint is not None else sigma(T).value
    if target == math.inf:
        raise InfiniteValueError("r number undefined for infinite sigma")
    polys = [gamma(i) for i in T]
    return _r_number_polys(polys, int(target), gamma(J))


def _r_number_polys(
    polys: Sequence[NewtonPolyhedron], target: int, j_poly: NewtonPolyhedron
) -> int:
    max_coord = max(
        [p.max_vertex_coordinate() for p in polys if not p.is_empty], default=1
    )
    j_reach = max(int(r) for r in j_poly.axis_intersections())
    cap = max(64, 8 * (1 + max_coord) * (1 + j_reach))

    def evaluate(r: int) -> int:
        return mixed_e(_augmented(polys, j_poly, r))

    return _r_search(evaluate, target, cap)


def oracle_colength_limit(I: MonomialIdeal) -> int:
    """Independent multiplicity oracle: count lattice points outside the
    dilations k * Gamma(I) and take exact n-th finite differences.

    The count is the colength of the integral closure of I^k, a degree-n
    polynomial in k (all complex vertices of the complement complex are
    lattice points), so every n-th difference equals the multiplicity; the
    windows are asserted to agree.
    """
    if not I.has_finite_colength:
        raise InfiniteValueError("oracle requires finite colength")
    n = I.dim
    poly = gamma(I)
    axes = [int(r) for r in poly.axis_intersections()]
    if not poly.facets:  # unit ideal
        return 0
    normals = np.array([a for a, _ in poly.facets], dtype=np.int64)
    offsets = np.array([c for _, c in poly.facets], dtype=np.int64)
    counts = []
    for k in range(1, n + 4):
        bounds = [k * r for r in axes]
        if any(b == 0 for b in bounds):
            counts.append(0)
            continue
        grid = np.indices(bounds).reshape(n, -1).T
        inside = (grid @ normals.T >= k * offsets).all(axis=1)
        counts.append(int((~inside).sum()))
    for _ in range(n):
        counts = [b - a for a, b in zip(counts, counts[1:])]
    if len(set(counts)) != 1:
        raise AssertionError(f"finite differences disagree: {counts}")
    return counts[0]


def generic_element(ideal: MonomialIdeal, rng: random.Random) -> Polynomial:
    """Random integer-coefficient combination of the generators."""
    terms = {}
    for g in ideal.generators:
        c = 0
        while c == 0:
            c = rng.randint(-GENERIC_COEFF_BOUND, GENERIC_COEFF_BOUND)
        terms[g] = Fraction(c)
    return Polynomial(ideal.dim, terms)


def oracle_generic_multiplicity(
    T, *, seed: int, trials: int = GENERIC_TRIALS
) -> OracleReport:
    """Monte-Carlo generic-element multiplicity: the colength at the origin
    of an ideal spanned by random combinations of the generators, minimized
    over trials.  All-singular trials are evidence that sigma is infinite."""
    T = as_tuple(T)
    if any(ideal.is_zero() for ideal in T):
        return OracleReport(math.inf, (math.inf,) * trials)
    rng = random.Random(seed)
    seen = []
    for _ in range(trials):
        gens = [generic_element(ideal, rng) for ideal in T]
        seen.append(local_colength(gens))
    return OracleReport(min(seen), tuple(seen))
