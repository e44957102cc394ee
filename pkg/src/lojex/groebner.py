"""Small Groebner engine over the rationals (graded reverse lex order).

Built for two jobs only: deciding whether a critical locus is
zero-dimensional, and computing the colength at the origin of an ideal
spanned by a few explicit polynomials.  Coefficients are exact Fractions,
bases are kept monic, and a hard cap on S-polynomial reductions turns any
non-termination risk into an explicit error.

Local colengths are obtained by fencing with pure powers: the ideal
<g_1,...,g_n> + <x_1^N,...,x_n^N> is supported at the origin only, its
colength is nondecreasing in N and bounded by the local colength, and two
equal consecutive values certify that the fence lies inside the ideal
locally, i.e. the stabilized count is the local colength itself.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
import math

import numpy as np

from .errors import DomainError, ResourceCapError
from .poly import Exponent, Polynomial

SPAIR_CAP = 20000

Terms = dict[Exponent, Fraction]


def _grevlex_key(k: Exponent) -> tuple:
    return (sum(k), tuple(-k[i] for i in range(len(k) - 1, -1, -1)))


def _leading(p: Terms) -> Exponent:
    return max(p, key=_grevlex_key)


def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def _monic(p: Terms) -> Terms:
    lead = p[_leading(p)]
    if lead == 1:
        return p
    return {k: c / lead for k, c in p.items()}


def _reduce(p: Terms, basis: list[Terms], leads: list[Exponent]) -> Terms:
    """Full normal form of p modulo the basis."""
    work = dict(p)
    remainder: Terms = {}
    while work:
        k = _leading(work)
        c = work.pop(k)
        reducer = next((i for i, lk in enumerate(leads) if _divides(lk, k)), None)
        if reducer is None:
            remainder[k] = c
            continue
        g = basis[reducer]
        gk = leads[reducer]
        shift = tuple(a - b for a, b in zip(k, gk))
        for mk, mc in g.items():
            if mk == gk:
                continue
            nk = tuple(a + b for a, b in zip(mk, shift))
            cur = work.get(nk, Fraction(0)) - c * mc
            if cur:
                work[nk] = cur
            else:
                work.pop(nk, None)
    return remainder


def groebner_basis(
    gens: list[Polynomial],
    *,
    spair_cap: int = SPAIR_CAP,
) -> list[Terms]:
    """Buchberger with the coprime-lead and chain criteria."""
    dim = gens[0].dim
    seeds: list[Terms] = []
    for g in gens:
        if g.dim != dim:
            raise DomainError("mixed dimensions in Groebner input")
        t = dict(g.items())
        if t:
            seeds.append(_monic(t))
    basis: list[Terms] = []
    leads: list[Exponent] = []
    for t in seeds:
        red = _reduce(t, basis, leads)
        if red:
            basis.append(_monic(red))
            leads.append(_leading(red))
    pairs = set(combinations(range(len(basis)), 2))
    done: set[tuple[int, int]] = set()
    reductions = 0
    while pairs:
        i, j = min(
            pairs, key=lambda ij: _grevlex_key(_lcm(leads[ij[0]], leads[ij[1]]))
        )
        pairs.discard((i, j))
        done.add((i, j))
        lcm_ij = _lcm(leads[i], leads[j])
        if all(a + b == c for a, b, c in zip(leads[i], leads[j], lcm_ij)):
            continue  # coprime leading monomials
        chained = any(
            k not in (i, j)
            and _divides(leads[k], lcm_ij)
            and (min(i, k), max(i, k)) in done
            and (min(j, k), max(j, k)) in done
            for k in range(len(basis))
        )
        if chained:
            continue
        reductions += 1
        if reductions > spair_cap:
            raise ResourceCapError(f"S-pair reduction cap {spair_cap} exceeded")
        spoly: Terms = {}
        for source in (i, j):
            shift = tuple(a - b for a, b in zip(lcm_ij, leads[source]))
            sign = 1 if source == i else -1
            for mk, mc in basis[source].items():
                nk = tuple(a + b for a, b in zip(mk, shift))
                cur = spoly.get(nk, Fraction(0)) + sign * mc
                if cur:
                    spoly[nk] = cur
                else:
                    spoly.pop(nk, None)
        red = _reduce(spoly, basis, leads)
        if not red:
            continue
        basis.append(_monic(red))
        leads.append(_leading(red))
        new = len(basis) - 1
        for k in range(new):
            pairs.add((k, new))
    return basis


def leading_exponents(basis: list[Terms]) -> list[Exponent]:
    return [_leading(g) for g in basis]


def staircase_is_finite(basis: list[Terms], dim: int) -> bool:
    """True iff every axis carries a pure-power leading exponent."""
    seen = [False] * dim
    for k in leading_exponents(basis):
        nz = [i for i, e in enumerate(k) if e]
        if not nz:
            return True  # unit ideal: empty staircase
        if len(nz) == 1:
            seen[nz[0]] = True
    return all(seen)


def standard_monomial_count(basis: list[Terms], dim: int, cap: int | None = None) -> int:
    """Number of monomials outside the leading-term staircase (degree < cap
    when a cap is given).  Requires a finite staircase."""
    leads = leading_exponents(basis)
    bounds = [math.inf] * dim
    for k in leads:
        nz = [i for i, e in enumerate(k) if e]
        if not nz:
            return 0
        if len(nz) == 1:
            bounds[nz[0]] = min(bounds[nz[0]], k[nz[0]])
    if any(b == math.inf for b in bounds):
        raise DomainError("staircase is not finite")
    sizes = [int(b) if cap is None else min(int(b), cap) for b in bounds]
    if any(s == 0 for s in sizes):
        return 0
    grid = np.indices(sizes).reshape(dim, -1).T
    if cap is not None:
        grid = grid[grid.sum(axis=1) < cap]
    lead_arr = np.array(leads, dtype=np.int64)
    dominated = (grid[:, None, :] >= lead_arr[None, :, :]).all(axis=2).any(axis=1)
    return int((~dominated).sum())


def is_zero_dimensional(gens: list[Polynomial]) -> bool:
    """Whether the affine zero set of the ideal is finite."""
    live = [g for g in gens if not g.is_zero()]
    if not live:
        return False
    basis = groebner_basis(live)
    return staircase_is_finite(basis, live[0].dim)


def local_colength(
    gens: list[Polynomial], *, fence_start: int | None = None, fence_max: int | None = None
):
    """Colength at the origin of the ideal spanned by `gens`.

    Computes lengths of R/(<g> + <x_1^N, ..., x_n^N>) for increasing N.
    That quotient is supported at the origin only, its length is
    nondecreasing in N and bounded by the local colength, and two equal
    consecutive values force the fence into the ideal locally, certifying
    the value.  Returns inf when no stabilization occurs below the cap
    (positive-dimensional zero set through the origin, or a colength
    beyond desk scale).
    """
    dim = gens[0].dim
    if any(g.is_zero() for g in gens):
        return math.inf
    if fence_start is None:
        maxdeg = max(sum(k) for g in gens for k in g.support())
        fence_start = max(4, maxdeg + 2)
    if fence_max is None:
        fence_max = 34 if dim <= 2 else 24

    def length_at(fence: int) -> int:
        pures = [
            Polynomial.monomial(tuple(fence if j == i else 0 for j in range(dim)))
            for i in range(dim)
        ]
        basis = groebner_basis(gens + pures)
        return standard_monomial_count(basis, dim)

    fence = fence_start
    while fence <= fence_max:
        here, after = length_at(fence), length_at(fence + 1)
        if here == after:
            return here
        fence += 4
    return math.inf
