"""Exact sparse multivariate polynomial arithmetic over the rationals.

A polynomial in n variables is a finite map from exponent vectors (tuples of
n non-negative ints) to non-zero Fraction coefficients.  The zero polynomial
is the empty map.  All values are immutable after construction and every
operation is a pure function, so instances can be shared freely.

The ambient dimension is fixed per polynomial; mixing dimensions raises
DimensionError rather than embedding implicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DimensionError, DomainError

Exponent = tuple[int, ...]


def grlex_key(k: Exponent) -> tuple:
    """Graded lexicographic sort key (total degree first, then lex)."""
    return (sum(k), k)


@dataclass(frozen=True)
class Weights:
    """A vector of positive integer weights w = (w1, ..., wn).

    `product` is the running constant w1*...*wn used by the filtration
    bounds; `min_weight`/`min_indices` identify the minimal-weight axes.
    """

    entries: tuple[int, ...]

    def __post_init__(self):
        if not self.entries:
            raise DomainError("weights must be non-empty")
        if any((not isinstance(w, int)) or w < 1 for w in self.entries):
            raise DomainError(f"weights must be integers >= 1, got {self.entries}")

    @classmethod
    def of(cls, *entries: int) -> "Weights":
        return cls(tuple(entries))

    @classmethod
    def from_text(cls, text: str) -> "Weights":
        try:
            entries = tuple(int(part) for part in text.split(","))
        except ValueError as exc:
            raise DomainError(f"cannot parse weights from {text!r}") from exc
        return cls(entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    @property
    def product(self) -> int:
        return math.prod(self.entries)

    @property
    def min_weight(self) -> int:
        return min(self.entries)

    @property
    def min_indices(self) -> tuple[int, ...]:
        """1-based indices of the minimal-weight axes, ascending."""
        lo = self.min_weight
        return tuple(i + 1 for i, w in enumerate(self.entries) if w == lo)

    def degree_of(self, k: Exponent) -> int:
        return sum(wi * ki for wi, ki in zip(self.entries, k))


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("dim", "_terms", "_hash")

    def __init__(self, dim: int, terms: Mapping[Exponent, Fraction | int] | None = None):
        if dim < 1:
            raise DimensionError(f"dimension must be >= 1, got {dim}")
        clean: dict[Exponent, Fraction] = {}
        for k, c in (terms or {}).items():
            k = tuple(k)
            if len(k) != dim:
                raise DimensionError(f"exponent {k} does not match dimension {dim}")
            if any((not isinstance(e, int)) or e < 0 for e in k):
                raise DomainError(f"exponents must be non-negative integers, got {k}")
            c = Fraction(c)
            if c != 0:
                clean[k] = clean.get(k, Fraction(0)) + c
                if clean[k] == 0:
                    del clean[k]
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    # -- construction helpers ------------------------------------------------

    @classmethod
    def zero(cls, dim: int) -> "Polynomial":
        return cls(dim, {})

    @classmethod
    def constant(cls, dim: int, value) -> "Polynomial":
        return cls(dim, {(0,) * dim: Fraction(value)})

    @classmethod
    def variable(cls, dim: int, axis: int) -> "Polynomial":
        """The variable x_axis (1-based axis index)."""
        if not 1 <= axis <= dim:
            raise DimensionError(f"variable index {axis} out of range 1..{dim}")
        k = [0] * dim
        k[axis - 1] = 1
        return cls(dim, {tuple(k): Fraction(1)})

    @classmethod
    def monomial(cls, k: Exponent, coeff=1) -> "Polynomial":
        return cls(len(k), {tuple(k): Fraction(coeff)})

    # -- basic protocol ------------------------------------------------------

    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, k: Exponent) -> Fraction:
        return self._terms.get(tuple(k), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.dim == other.dim
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(
                self, "_hash", hash((self.dim, frozenset(self._terms.items())))
            )
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({self.dim}, {self})"

    # -- arithmetic ----------------------------------------------------------

    def _check_dim(self, other: "Polynomial") -> None:
        if self.dim != other.dim:
            raise DimensionError(
                f"dimension mismatch: {self.dim} vs {other.dim}"
            )

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_dim(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return Polynomial(self.dim, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.dim, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial(
                self.dim, {k: c * other for k, c in self._terms.items()}
            )
        self._check_dim(other)
        out: dict[Exponent, Fraction] = {}
        for ka, ca in self._terms.items():
            for kb, cb in other._terms.items():
                k = tuple(a + b for a, b in zip(ka, kb))
                out[k] = out.get(k, Fraction(0)) + ca * cb
        return Polynomial(self.dim, out)

    __rmul__ = __mul__

    def __pow__(self, s: int) -> "Polynomial":
        if s < 0:
            raise DomainError("negative powers are not defined")
        result = Polynomial.constant(self.dim, 1)
        base = self
        while s:
            if s & 1:
                result = result * base
            base = base * base if s > 1 else base
            s >>= 1
        return result

    def evaluate(self, point: Sequence) -> Fraction:
        """Exact evaluation at a rational point."""
        if len(point) != self.dim:
            raise DimensionError("point dimension mismatch")
        vals = [Fraction(v) for v in point]
        total = Fraction(0)
        for k, c in self._terms.items():
            term = c
            for e, v in zip(k, vals):
                if e:
                    term *= v**e
            total += term
        return total

    # -- structural queries --------------------------------------------------

    def support(self) -> frozenset[Exponent]:
        return frozenset(self._terms)

    def partial_derivative(self, axis: int) -> "Polynomial":
        """Formal partial derivative with respect to x_axis (1-based)."""
        if not 1 <= axis <= self.dim:
            raise DimensionError(f"axis {axis} out of range 1..{self.dim}")
        i = axis - 1
        out: dict[Exponent, Fraction] = {}
        for k, c in self._terms.items():
            if k[i] == 0:
                continue
            kk = list(k)
            kk[i] -= 1
            out[tuple(kk)] = c * k[i]
        return Polynomial(self.dim, out)

    def weighted_degree(self, w: Weights):
        """min <k, w> over the support; +inf for the zero polynomial."""
        if len(w) != self.dim:
            raise DimensionError("weights dimension mismatch")
        if not self._terms:
            return math.inf
        return min(w.degree_of(k) for k in self._terms)

    def principal_part(self, w: Weights) -> "Polynomial":
        """Sum of the terms of minimal w-degree (weighted homogeneous)."""
        if not self._terms:
            raise DomainError("principal part of the zero polynomial is undefined")
        d = self.weighted_degree(w)
        return Polynomial(
            self.dim, {k: c for k, c in self._terms.items() if w.degree_of(k) == d}
        )

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Exact expansion of self(images[0], ..., images[n-1]).

        All images must share one target dimension (not necessarily self.dim).
        """
        if len(images) != self.dim:
            raise DimensionError(
                f"expected {self.dim} substitution images, got {len(images)}"
            )
        tdim = images[0].dim
        for g in images:
            if g.dim != tdim:
                raise DimensionError("substitution images have mixed dimensions")
        powers: list[dict[int, Polynomial]] = [
            {0: Polynomial.constant(tdim, 1)} for _ in range(self.dim)
        ]

        def power(i: int, e: int) -> Polynomial:
            cache = powers[i]
            if e not in cache:
                cache[e] = power(i, e - 1) * images[i]
            return cache[e]

        total = Polynomial.zero(tdim)
        for k, c in self._terms.items():
            term = Polynomial.constant(tdim, c)
            for i, e in enumerate(k):
                if e:
                    term = term * power(i, e)
            total = total + term
        return total

    def is_weighted_homogeneous(self, w: Weights) -> bool:
        if not self._terms:
            return True
        d = self.weighted_degree(w)
        return all(w.degree_of(k) == d for k in self._terms)

    def is_convenient(self) -> bool:
        """True iff the support contains a pure power of every variable."""
        seen = [False] * self.dim
        for k in self._terms:
            nz = [i for i, e in enumerate(k) if e]
            if len(nz) == 1:
                seen[nz[0]] = True
        return all(seen)

    # -- printing ------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k in sorted(self._terms, key=grlex_key, reverse=True):
            c = self._terms[k]
            factors = [
                f"x{i + 1}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(k)
                if e > 0
            ]
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(c))] + factors)
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


@dataclass(frozen=True)
class WeightedShape:
    """Classification of a germ against a weight vector."""

    degree: int
    is_weighted_homogeneous: bool
    is_convenient: bool


# Spec-level operation surface (thin wrappers over the methods).

def support(p: Polynomial) -> frozenset[Exponent]:
    return p.support()


def partial_derivative(p: Polynomial, axis: int) -> Polynomial:
    return p.partial_derivative(axis)


def weighted_degree(p: Polynomial, w: Weights):
    return p.weighted_degree(w)


def principal_part(p: Polynomial, w: Weights) -> Polynomial:
    return p.principal_part(w)


def substitute(p: Polynomial, images: Iterable[Polynomial]) -> Polynomial:
    return p.substitute(tuple(images))


def weighted_classification(p: Polynomial, w: Weights) -> WeightedShape:
    """Degree, weighted homogeneity and convenience of a nonzero germ."""
    if p.is_zero():
        raise DomainError("cannot classify the zero polynomial")
    if p.coefficient((0,) * p.dim) != 0:
        raise DomainError("convenience test requires p(0) = 0")
    return WeightedShape(
        degree=p.weighted_degree(w),
        is_weighted_homogeneous=p.is_weighted_homogeneous(w),
        is_convenient=p.is_convenient(),
    )
