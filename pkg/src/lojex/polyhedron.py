"""Newton polyhedra with exact V- and H-representations.

A Newton polyhedron here is always of the form conv(P) + R^n_+ for a finite
set P of lattice points, so its recession cone is the non-negative orthant
and every facet inequality reads <a, x> >= c with a >= 0 componentwise and
c > 0 (the orthant constraints x_i >= 0 are kept implicit).

The H-representation is computed exactly over the integers by a double
description pass on the dual cone of the homogenization: the rays
{(p, 1) : p in P} and {(e_i, 0)} span a pointed full-dimensional cone whose
facets are exactly the extreme rays of its dual.  Supported dimensions are
small (n <= 6); all arithmetic is exact.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionError, DomainError, InfiniteValueError
from .ideals import MonomialIdeal
from .poly import Polynomial, grlex_key

Point = tuple[int, ...]
Facet = tuple[tuple[int, ...], int]

_MAX_DIM = 6

_HULL_CACHE: dict[tuple[int, frozenset], tuple[tuple[Point, ...], tuple[Facet, ...]]] = {}


def _primitive(vec: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for v in vec:
        g = math.gcd(g, abs(v))
    if g <= 1:
        return tuple(vec)
    return tuple(v // g for v in vec)


def _dual_extreme_rays(dim: int, points: list[Point]) -> list[tuple[int, ...]]:
    """Extreme rays of {y : <y,(p,1)> >= 0 for all p, <y,(e_i,0)> >= 0}.

    Double description with a simplicial start: the orthant constraints plus
    the first point constraint form an invertible system whose inverse
    columns are the initial extreme rays.  Adjacency uses the standard
    combinatorial test against the full current ray set.
    """
    d = dim + 1
    # Constraint list: indices 0..dim-1 are the orthant rows (e_i, 0),
    # index dim + j is the row (points[j], 1).
    constraints: list[tuple[int, ...]] = [
        tuple(1 if k == i else 0 for k in range(d)) for i in range(dim)
    ]
    constraints += [p + (1,) for p in points]

    p0 = points[0]
    rays: list[tuple[int, ...]] = [
        tuple((1 if k == i else 0) for k in range(dim)) + (-p0[i],)
        for i in range(dim)
    ]
    rays.append((0,) * dim + (1,))

    def dot(c: tuple[int, ...], r: tuple[int, ...]) -> int:
        return sum(a * b for a, b in zip(c, r))

    def zero_set(r: tuple[int, ...], upto: int) -> frozenset[int]:
        return frozenset(i for i in range(upto) if dot(constraints[i], r) == 0)

    processed = dim + 1
    zero_sets = [zero_set(r, processed) for r in rays]

    for idx in range(processed, len(constraints)):
        h = constraints[idx]
        vals = [dot(h, r) for r in rays]
        neg = [i for i, v in enumerate(vals) if v < 0]
        if not neg:
            processed = idx + 1
            zero_sets = [
                z | ({idx} if vals[i] == 0 else set())
                for i, z in enumerate(zero_sets)
            ]
            continue
        pos = [i for i, v in enumerate(vals) if v > 0]
        zer = [i for i, v in enumerate(vals) if v == 0]
        new_rays: list[tuple[int, ...]] = []
        for ip in pos:
            for im in neg:
                common = zero_sets[ip] & zero_sets[im]
                adjacent = not any(
                    k != ip and k != im and common <= zero_sets[k]
                    for k in range(len(rays))
                )
                if not adjacent:
                    continue
                combo = tuple(
                    vals[ip] * rays[im][k] - vals[im] * rays[ip][k]
                    for k in range(d)
                )
                new_rays.append(_primitive(combo))
        rays = [rays[i] for i in pos] + [rays[i] for i in zer] + new_rays
        processed = idx + 1
        seen: dict[tuple[int, ...], None] = {}
        for r in rays:
            seen.setdefault(r, None)
        rays = list(seen)
        zero_sets = [zero_set(r, processed) for r in rays]

    return rays


def _rank(rows: list[tuple[int, ...]]) -> int:
    """Rank of an integer matrix, by fraction-free elimination."""
    mat = [[Fraction(v) for v in row] for row in rows]
    rank = 0
    cols = len(mat[0]) if mat else 0
    row = 0
    for col in range(cols):
        pivot = next((r for r in range(row, len(mat)) if mat[r][col] != 0), None)
        if pivot is None:
            continue
        mat[row], mat[pivot] = mat[pivot], mat[row]
        inv = 1 / mat[row][col]
        mat[row] = [v * inv for v in mat[row]]
        for r in range(len(mat)):
            if r != row and mat[r][col] != 0:
                factor = mat[r][col]
                mat[r] = [v - factor * p for v, p in zip(mat[r], mat[row])]
        row += 1
        rank += 1
        if row == len(mat):
            break
    return rank


def _hull(dim: int, points: Iterable[Point]) -> tuple[tuple[Point, ...], tuple[Facet, ...]]:
    pts = sorted({tuple(int(c) for c in p) for p in points}, key=grlex_key)
    key = (dim, frozenset(pts))
    cached = _HULL_CACHE.get(key)
    if cached is not None:
        return cached
    if dim > _MAX_DIM:
        raise DomainError(f"supported dimensions are n <= {_MAX_DIM}")
    rays = _dual_extreme_rays(dim, pts)
    facets: list[Facet] = []
    for ray in rays:
        t = ray[dim]
        if t < 0:
            facets.append((ray[:dim], -t))
    facets.sort()
    for a, c in facets:
        if min(a) < 0 or min(sum(x * y for x, y in zip(a, p)) for p in pts) != c:
            raise AssertionError("inconsistent facet produced by hull")
    vertices = []
    for p in pts:
        active = [a for a, c in facets if sum(x * y for x, y in zip(a, p)) == c]
        active += [
            tuple(1 if k == i else 0 for k in range(dim))
            for i in range(dim)
            if p[i] == 0
        ]
        if active and _rank(active) == dim:
            vertices.append(p)
    result = (tuple(vertices), tuple(facets))
    _HULL_CACHE[key] = result
    return result


class NewtonPolyhedron:
    """conv(points) + orthant, with vertices and facet inequalities."""

    __slots__ = ("dim", "vertices", "facets", "_covol")

    def __init__(self, dim: int, vertices: tuple[Point, ...], facets: tuple[Facet, ...]):
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "facets", facets)
        object.__setattr__(self, "_covol", None)

    # -- construction ----------------------------------------------------------

    @classmethod
    def empty(cls, dim: int) -> "NewtonPolyhedron":
        return cls(dim, (), ())

    @classmethod
    def from_points(cls, dim: int, points: Iterable[Point]) -> "NewtonPolyhedron":
        pts = list(points)
        if not pts:
            return cls.empty(dim)
        for p in pts:
            if len(p) != dim:
                raise DimensionError(f"point {p} does not match dimension {dim}")
        vertices, facets = _hull(dim, pts)
        return cls(dim, vertices, facets)

    @classmethod
    def from_ideal(cls, ideal: MonomialIdeal) -> "NewtonPolyhedron":
        return cls.from_points(ideal.dim, ideal.generators)

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> "NewtonPolyhedron":
        return cls.from_points(p.dim, p.support())

    # -- protocol ----------------------------------------------------------------

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NewtonPolyhedron)
            and self.dim == other.dim
            and self.vertices == other.vertices
            and self.facets == other.facets
        )

    def __hash__(self) -> int:
        return hash((self.dim, self.vertices, self.facets))

    def __repr__(self) -> str:
        if self.is_empty:
            return f"NewtonPolyhedron(empty, n={self.dim})"
        return f"NewtonPolyhedron(vertices={list(self.vertices)})"

    def fingerprint(self) -> tuple:
        return (self.dim, self.vertices)

    # -- geometry ------------------------------------------------------------------

    def contains(self, point: Sequence) -> bool:
        """Membership in conv(P) + orthant (closure membership for ideals)."""
        if len(point) != self.dim:
            raise DimensionError("point dimension mismatch")
        if self.is_empty:
            return False
        pt = [Fraction(v) for v in point]
        if any(v < 0 for v in pt):
            return False
        return all(
            sum(ai * vi for ai, vi in zip(a, pt)) >= c for a, c in self.facets
        )

    def scale(self, s: int) -> "NewtonPolyhedron":
        """The dilation s * Gamma (the polyhedron of the s-th ideal power)."""
        if s < 1:
            raise DomainError("scale factor must be >= 1")
        if self.is_empty or s == 1:
            return self
        return NewtonPolyhedron(
            self.dim,
            tuple(tuple(s * c for c in v) for v in self.vertices),
            tuple((a, s * c) for a, c in self.facets),
        )

    def minkowski(self, other: "NewtonPolyhedron") -> "NewtonPolyhedron":
        """Minkowski sum (the polyhedron of the product ideal)."""
        if self.dim != other.dim:
            raise DimensionError("dimension mismatch")
        if self.is_empty or other.is_empty:
            return NewtonPolyhedron.empty(self.dim)
        sums = [
            tuple(a + b for a, b in zip(v, w))
            for v in self.vertices
            for w in other.vertices
        ]
        return NewtonPolyhedron.from_points(self.dim, sums)

    def hull_union(self, other: "NewtonPolyhedron") -> "NewtonPolyhedron":
        """Convex hull of the union (the polyhedron of the ideal sum)."""
        if self.dim != other.dim:
            raise DimensionError("dimension mismatch")
        if self.is_empty:
            return other
        if other.is_empty:
            return self
        return NewtonPolyhedron.from_points(self.dim, self.vertices + other.vertices)

    def axis_intersections(self) -> list:
        """Per axis i, min{r >= 0 : r e_i lies in the polyhedron} (or inf)."""
        if self.is_empty:
            raise DomainError("empty polyhedron has no axis data")
        out = []
        for i in range(self.dim):
            best = Fraction(0)
            hit = True
            for a, c in self.facets:
                if a[i] == 0:
                    hit = False
                    break
                best = max(best, Fraction(c, a[i]))
            if not hit:
                out.append(math.inf)
            elif best.denominator == 1:
                out.append(int(best))
            else:
                out.append(best)
        return out

    def meets_every_axis(self) -> bool:
        return not self.is_empty and all(
            r != math.inf for r in self.axis_intersections()
        )

    def max_vertex_coordinate(self) -> int:
        return max((c for v in self.vertices for c in v), default=0)

    def nu_bar(self, k: Sequence[int]) -> Fraction:
        """min over facets of <a, k> / c; +inf when there is no facet."""
        if self.is_empty:
            raise DomainError("empty polyhedron")
        if len(k) != self.dim:
            raise DimensionError("exponent dimension mismatch")
        if not self.facets:
            return math.inf
        return min(
            Fraction(sum(ai * ki for ai, ki in zip(a, k)), c) for a, c in self.facets
        )

    # -- volume ----------------------------------------------------------------------

    def covolume(self) -> Fraction:
        """Exact volume of (orthant minus polyhedron).

        Finite only when the polyhedron meets every coordinate axis; the
        complement region is then contained in the box [0, M]^n for
        M = max axis intersection, and its volume is M^n minus the volume
        of the truncated polyhedron.
        """
        if self._covol is not None:
            return self._covol
        if self.is_empty:
            raise InfiniteValueError("covolume of the empty polyhedron is infinite")
        axes = self.axis_intersections()
        if any(r == math.inf for r in axes):
            raise InfiniteValueError("polyhedron misses a coordinate axis")
        if not self.facets:
            covol = Fraction(0)
        elif self.dim == 1:
            covol = Fraction(axes[0])
        elif self.dim == 2:
            covol = self._covolume_2d()
        else:
            covol = self._covolume_nd(int(max(axes)))
        object.__setattr__(self, "_covol", covol)
        return covol

    def _covolume_2d(self) -> Fraction:
        chain = sorted(self.vertices)
        total = Fraction(0)
        for (x1, y1), (x2, y2) in zip(chain, chain[1:]):
            total += Fraction((x2 - x1) * (y1 + y2), 2)
        return total

    def _covolume_nd(self, box: int) -> Fraction:
        cons: list[tuple[tuple[int, ...], int]] = []
        for a, c in self.facets:
            cons.append((tuple(-ai for ai in a), -c))
        for i in range(self.dim):
            e = tuple(1 if k == i else 0 for k in range(self.dim))
            cons.append((tuple(-v for v in e), 0))
            cons.append((e, box))
        inner = _hvolume(self.dim, cons, {})
        covol = Fraction(box) ** self.dim - inner
        if covol < 0:
            raise AssertionError("negative covolume")
        return covol


def _normalize_constraints(cons: Iterable[tuple[tuple, Fraction | int]]):
    """Canonical integer form of <a, x> <= b constraints.

    Returns None when trivially infeasible.  Parallel constraints keep only
    the tightest bound, so every remaining hyperplane is distinct (required:
    the recursive volume formula counts each facet hyperplane once).
    """
    best: dict[tuple[int, ...], Fraction] = {}
    for a, b in cons:
        a = tuple(Fraction(x) for x in a)
        b = Fraction(b)
        if all(x == 0 for x in a):
            if b < 0:
                return None
            continue
        denom = math.lcm(*[x.denominator for x in a], b.denominator)
        ai = [int(x * denom) for x in a]
        bi = int(b * denom)
        g = 0
        for v in ai:
            g = math.gcd(g, abs(v))
        ai = tuple(v // g for v in ai)
        bq = Fraction(bi, g)
        if ai not in best or bq < best[ai]:
            best[ai] = bq
    out = []
    for ai, bq in best.items():
        if tuple(-v for v in ai) in best and best[tuple(-v for v in ai)] < -bq:
            return None
        out.append((ai, bq))
    return tuple(sorted(out))


def _hvolume(d: int, cons, memo) -> Fraction:
    """Volume of {x in R^d : <a,x> <= b for all (a,b)} by the recursive
    facet-projection formula vol = (1/d) sum_i (b_i/|a_ij|) vol(F_i -> R^{d-1}).

    The system must be bounded.  Lower-dimensional or empty faces contribute
    zero, so redundant constraints are harmless.
    """
    normalized = _normalize_constraints(cons)
    if normalized is None:
        return Fraction(0)
    key = (d, normalized)
    if key in memo:
        return memo[key]
    if d == 1:
        lo, hi = None, None
        for (a,), b in normalized:
            bound = Fraction(b, a)
            if a > 0:
                hi = bound if hi is None else min(hi, bound)
            else:
                lo = bound if lo is None else max(lo, bound)
        if lo is None or hi is None:
            raise DomainError("unbounded system in volume computation")
        vol = max(Fraction(0), hi - lo)
        memo[key] = vol
        return vol
    total = Fraction(0)
    for i, (a, b) in enumerate(normalized):
        j = max(range(d), key=lambda k: abs(a[k]))
        sub = []
        for t, (a2, b2) in enumerate(normalized):
            if t == i:
                continue
            factor = Fraction(a2[j], a[j])
            new_a = tuple(
                Fraction(a2[k]) - factor * a[k] for k in range(d) if k != j
            )
            new_b = b2 - factor * b
            sub.append((new_a, new_b))
        face = _hvolume(d - 1, sub, memo)
        if face:
            total += Fraction(b, abs(a[j])) * face
    vol = total / d
    memo[key] = vol
    return vol


def newton_polyhedron(source) -> NewtonPolyhedron:
    """Newton polyhedron of a MonomialIdeal or a Polynomial."""
    if isinstance(source, MonomialIdeal):
        return NewtonPolyhedron.from_ideal(source)
    if isinstance(source, Polynomial):
        return NewtonPolyhedron.from_polynomial(source)
    raise DomainError(f"cannot build a Newton polyhedron from {type(source)!r}")


def closure_membership(ideal: MonomialIdeal, k: Sequence[int]) -> bool:
    """Monomial membership in the integral closure: k inside the polyhedron."""
    if ideal.is_zero():
        raise DomainError("the zero ideal has empty closure")
    return NewtonPolyhedron.from_ideal(ideal).contains(k)


def axis_intersections(gamma: NewtonPolyhedron) -> list:
    return gamma.axis_intersections()


def covolume(gamma: NewtonPolyhedron) -> Fraction:
    return gamma.covolume()
