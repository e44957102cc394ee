"""Monomial ideals as antichains of minimal generator exponents.

A monomial ideal is identified with the set of minimal lattice points of
its staircase: generators are reduced so that no generator dominates
another componentwise.  The empty antichain is the zero ideal.  Instances
are immutable and hashable; generator order is canonical (graded lex), so
structural equality is ideal equality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionError, DomainError, InfiniteValueError
from .poly import Exponent, Polynomial, Weights, grlex_key


def _dominates(a: Exponent, b: Exponent) -> bool:
    return all(x >= y for x, y in zip(a, b))


def minimalize(points: Iterable[Exponent]) -> tuple[Exponent, ...]:
    """Antichain of componentwise-minimal points, in graded lex order."""
    selected: list[Exponent] = []
    for p in sorted(set(points), key=grlex_key):
        if not any(_dominates(p, q) for q in selected):
            selected.append(p)
    return tuple(sorted(selected, key=grlex_key))


class MonomialIdeal:
    """Immutable monomial ideal of the n-variable local ring."""

    __slots__ = ("dim", "generators", "_hash", "_finite")

    def __init__(self, dim: int, generators: Iterable[Exponent] = ()):
        if dim < 1:
            raise DimensionError(f"dimension must be >= 1, got {dim}")
        gens = []
        for g in generators:
            g = tuple(g)
            if len(g) != dim:
                raise DimensionError(f"generator {g} does not match dimension {dim}")
            if any((not isinstance(e, int)) or e < 0 for e in g):
                raise DomainError(f"generator exponents must be >= 0, got {g}")
            gens.append(g)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "generators", minimalize(gens))
        object.__setattr__(self, "_hash", None)
        object.__setattr__(
            self,
            "_finite",
            all(r != math.inf for r in self.pure_power_exponents()),
        )

    # -- construction --------------------------------------------------------

    @classmethod
    def zero(cls, dim: int) -> "MonomialIdeal":
        return cls(dim, ())

    @classmethod
    def maximal(cls, dim: int, power: int = 1) -> "MonomialIdeal":
        """The power m^r of the maximal ideal."""
        if power < 1:
            raise DomainError("maximal ideal power must be >= 1")
        return cls(dim, _degree_level(dim, power))

    @classmethod
    def from_polynomials(cls, polys: Sequence[Polynomial]) -> "MonomialIdeal":
        """Ideal generated by the monomials of the given polynomials.

        For a single polynomial h this is the monomial ideal of its Newton
        polyhedron: generated by x^k for k in supp(h).
        """
        if not polys:
            raise DomainError("expected at least one polynomial")
        dim = polys[0].dim
        gens: list[Exponent] = []
        for p in polys:
            if p.dim != dim:
                raise DimensionError("mixed dimensions in generator list")
            gens.extend(p.support())
        return cls(dim, gens)

    # -- protocol ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MonomialIdeal)
            and self.dim == other.dim
            and self.generators == other.generators
        )

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.dim, self.generators)))
        return self._hash

    def __repr__(self) -> str:
        if self.is_zero():
            return f"MonomialIdeal({self.dim}, 0)"
        gens = ", ".join(str(Polynomial.monomial(g)) for g in self.generators)
        return f"<{gens}>"

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return self.generators == ((0,) * self.dim,)

    # -- staircase structure ---------------------------------------------------

    def contains_monomial(self, k: Exponent) -> bool:
        """Plain ideal membership of x^k (staircase domination)."""
        k = tuple(k)
        if len(k) != self.dim:
            raise DimensionError("exponent dimension mismatch")
        return any(_dominates(k, g) for g in self.generators)

    def pure_power_exponents(self) -> list:
        """Per axis, the least pure-power generator exponent (inf if none)."""
        out = [math.inf] * self.dim
        for g in self.generators:
            nz = [i for i, e in enumerate(g) if e]
            if len(nz) == 1:
                i = nz[0]
                out[i] = min(out[i], g[i])
            elif not nz:
                return [0] * self.dim
        return out

    @property
    def has_finite_colength(self) -> bool:
        return self._finite

    def colength(self):
        """Number of standard monomials (dim of the quotient); inf if the
        staircase misses some axis."""
        if self.is_zero():
            return math.inf
        bounds = self.pure_power_exponents()
        if any(b == math.inf for b in bounds):
            return math.inf
        if self.is_unit():
            return 0
        grid = np.indices([int(b) for b in bounds]).reshape(self.dim, -1).T
        gens = np.array(self.generators, dtype=np.int64)
        dominated = (grid[:, None, :] >= gens[None, :, :]).all(axis=2).any(axis=1)
        return int((~dominated).sum())

    def weighted_degree(self, w: Weights):
        """min w-degree over the ideal; +inf for the zero ideal."""
        if len(w) != self.dim:
            raise DimensionError("weights dimension mismatch")
        if self.is_zero():
            return math.inf
        return min(w.degree_of(g) for g in self.generators)

    # -- algebra ---------------------------------------------------------------

    def _check_dim(self, other: "MonomialIdeal") -> None:
        if self.dim != other.dim:
            raise DimensionError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check_dim(other)
        return MonomialIdeal(self.dim, self.generators + other.generators)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check_dim(other)
        if self.is_zero() or other.is_zero():
            return MonomialIdeal.zero(self.dim)
        prods = [
            tuple(a + b for a, b in zip(g, h))
            for g in self.generators
            for h in other.generators
        ]
        return MonomialIdeal(self.dim, prods)

    def __pow__(self, s: int) -> "MonomialIdeal":
        if s < 1:
            raise DomainError("ideal powers require s >= 1")
        result = None
        base = self
        while s:
            if s & 1:
                result = base if result is None else result * base
            base = base * base if s > 1 else base
            s >>= 1
        return result

    def integral_closure(self) -> "MonomialIdeal":
        """Monomial integral closure: minimal lattice points of the Newton
        polyhedron.  Minimal closure generators satisfy k_i <= max generator
        coordinate on axis i, so a bounded box search is exhaustive."""
        from .polyhedron import NewtonPolyhedron

        if self.is_zero():
            return self
        gamma = NewtonPolyhedron.from_ideal(self)
        bounds = [max(g[i] for g in self.generators) for i in range(self.dim)]
        found: list[Exponent] = []
        for k in _box_points(bounds):
            if gamma.contains(k):
                found.append(k)
        return MonomialIdeal(self.dim, found)


def _box_points(bounds: Sequence[int]):
    """All integer points of prod_i [0, bounds[i]]."""
    if not bounds:
        yield ()
        return
    for head in range(bounds[0] + 1):
        for tail in _box_points(bounds[1:]):
            yield (head,) + tail


def _degree_level(dim: int, total: int) -> list[Exponent]:
    """All exponent vectors with coordinate sum equal to `total`."""
    if dim == 1:
        return [(total,)]
    out = []
    for head in range(total + 1):
        out.extend((head,) + rest for rest in _degree_level(dim - 1, total - head))
    return out


def ideal_algebra(op: str, *operands) -> MonomialIdeal:
    """Dispatcher for ideal arithmetic: sum, product, power, m^r."""
    if op == "sum":
        out = operands[0]
        for other in operands[1:]:
            out = out + other
        return out
    if op == "product":
        out = operands[0]
        for other in operands[1:]:
            out = out * other
        return out
    if op == "power":
        ideal, s = operands
        return ideal**s
    if op == "maximal_ideal_power":
        dim, r = operands
        return MonomialIdeal.maximal(dim, r)
    raise DomainError(f"unknown ideal operation {op!r}")


@dataclass(frozen=True)
class FiltrationPieces:
    """The degree-r pieces of the weighted homogeneous filtration."""

    A_r: MonomialIdeal
    B_r: MonomialIdeal


def filtration_pieces(w: Weights, r: int) -> FiltrationPieces:
    """A_r (monomials of w-degree exactly r; zero ideal if none) and
    B_r (all germs of w-degree >= r, an integrally closed ideal)."""
    if r < 1:
        raise DomainError("filtration level must be >= 1")
    n = len(w)
    a_gens = _weighted_level(tuple(w.entries), r)
    b_gens = []
    bounds = [math.ceil(r / w[i]) for i in range(n)]
    for k in _box_points(bounds):
        deg = w.degree_of(k)
        if deg >= r and all(
            k[i] == 0 or deg - w[i] < r for i in range(n)
        ):
            b_gens.append(k)
    return FiltrationPieces(
        A_r=MonomialIdeal(n, a_gens),
        B_r=MonomialIdeal(n, b_gens),
    )


def _weighted_level(weights: tuple[int, ...], r: int) -> list[Exponent]:
    """All k >= 0 with <k, weights> == r."""
    if not weights:
        return [()] if r == 0 else []
    out = []
    w0 = weights[0]
    for head in range(r // w0 + 1):
        out.extend(
            (head,) + rest for rest in _weighted_level(weights[1:], r - head * w0)
        )
    return out


def colength(ideal: MonomialIdeal):
    return ideal.colength()


def require_finite_colength(ideal: MonomialIdeal, what: str = "ideal") -> None:
    if not ideal.has_finite_colength:
        raise InfiniteValueError(f"{what} must have finite colength")
