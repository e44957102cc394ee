import math
from fractions import Fraction

import pytest

from lojex import (
    InfiniteValueError,
    MonomialIdeal,
    NewtonPolyhedron,
    Weights,
    covolume,
    filtration_pieces,
    newton_polyhedron,
    parse_polynomial,
)
from conftest import random_finite_ideal, random_ideal


class TestHull:
    def test_two_pure_powers(self):
        gamma = newton_polyhedron(MonomialIdeal(2, [(4, 0), (0, 2)]))
        assert gamma.facets == (((1, 2), 4),)
        assert set(gamma.vertices) == {(4, 0), (0, 2)}

    def test_piece_a4(self):
        gamma = newton_polyhedron(MonomialIdeal(2, [(1, 1), (0, 4)]))
        assert set(gamma.facets) == {((3, 1), 4), ((0, 1), 1)}
        assert set(gamma.vertices) == {(1, 1), (0, 4)}

    def test_maximal_ideal(self):
        gamma = newton_polyhedron(MonomialIdeal.maximal(2))
        assert gamma.facets == (((1, 1), 1),)
        assert set(gamma.vertices) == {(1, 0), (0, 1)}

    def test_polynomial_source(self):
        gamma = newton_polyhedron(parse_polynomial("x^2 + y^3"))
        assert gamma.facets == (((3, 2), 6),)

    def test_midpoint_generator_is_not_a_vertex(self):
        gamma = newton_polyhedron(MonomialIdeal(2, [(4, 0), (2, 1), (0, 2)]))
        assert set(gamma.vertices) == {(4, 0), (0, 2)}

    def test_empty(self):
        gamma = newton_polyhedron(MonomialIdeal.zero(3))
        assert gamma.is_empty
        assert not gamma.contains((1, 1, 1))

    def test_redundant_generators_do_not_change_polyhedron(self, rng):
        for _ in range(25):
            dim = rng.randint(2, 4)
            ideal = random_ideal(rng, dim)
            gamma = newton_polyhedron(ideal)
            padded = list(ideal.generators)
            for g in ideal.generators:
                padded.append(tuple(e + rng.randint(0, 2) for e in g))
            assert NewtonPolyhedron.from_points(dim, padded) == gamma

    def test_vertices_satisfy_facets_tightly(self, rng):
        for _ in range(20):
            dim = rng.randint(2, 5)
            ideal = random_ideal(rng, dim, max_exp=5, max_gens=5)
            gamma = newton_polyhedron(ideal)
            for v in gamma.vertices:
                for a, c in gamma.facets:
                    assert sum(x * y for x, y in zip(a, v)) >= c
            for a, c in gamma.facets:
                tight = [
                    v
                    for v in gamma.vertices
                    if sum(x * y for x, y in zip(a, v)) == c
                ]
                assert tight, "facet with no tight vertex"


class TestScalingAndSums:
    def test_power_scaling(self, rng):
        for s in (2, 3):
            for _ in range(10):
                ideal = random_ideal(rng, 2, max_exp=5)
                direct = newton_polyhedron(ideal**s)
                scaled = newton_polyhedron(ideal).scale(s)
                assert direct == scaled

    def test_minkowski_is_product(self, rng):
        for _ in range(12):
            dim = rng.randint(2, 3)
            left = random_ideal(rng, dim, max_exp=4)
            right = random_ideal(rng, dim, max_exp=4)
            assert newton_polyhedron(left * right) == newton_polyhedron(
                left
            ).minkowski(newton_polyhedron(right))

    def test_union_is_sum(self, rng):
        for _ in range(12):
            dim = rng.randint(2, 3)
            left = random_ideal(rng, dim, max_exp=4)
            right = random_ideal(rng, dim, max_exp=4)
            assert newton_polyhedron(left + right) == newton_polyhedron(
                left
            ).hull_union(newton_polyhedron(right))


class TestAxisData:
    def test_pure_power_staircase(self):
        gamma = newton_polyhedron(MonomialIdeal(2, [(4, 0), (0, 2)]))
        assert gamma.axis_intersections() == [4, 2]

    def test_maximal(self):
        assert newton_polyhedron(MonomialIdeal.maximal(3)).axis_intersections() == [
            1,
            1,
            1,
        ]

    def test_open_axis(self):
        gamma = newton_polyhedron(MonomialIdeal(2, [(1, 1), (0, 4)]))
        assert gamma.axis_intersections() == [math.inf, 4]

    def test_matches_pure_power_generators(self, rng):
        for _ in range(20):
            ideal = random_finite_ideal(rng, rng.randint(2, 3))
            gamma = newton_polyhedron(ideal)
            assert gamma.axis_intersections() == ideal.pure_power_exponents()


class TestCovolume:
    def test_corner_triangle(self):
        assert covolume(newton_polyhedron(MonomialIdeal.maximal(2))) == Fraction(1, 2)

    def test_two_powers(self):
        assert covolume(newton_polyhedron(MonomialIdeal(2, [(2, 0), (0, 3)]))) == 3

    def test_shifted_product(self):
        ideal = MonomialIdeal(2, [(4, 0), (0, 2)]) * MonomialIdeal.maximal(2, 4)
        gamma = newton_polyhedron(ideal)
        assert set(gamma.vertices) == {(0, 6), (4, 2), (8, 0)}
        assert covolume(gamma) == 20

    def test_three_dimensional_box(self):
        gamma = newton_polyhedron(MonomialIdeal(3, [(2, 0, 0), (0, 3, 0), (0, 0, 5)]))
        assert covolume(gamma) == 5  # tetrahedron legs 2, 3, 5

    def test_simplex_power(self):
        gamma = newton_polyhedron(MonomialIdeal.maximal(3, 2))
        assert covolume(gamma) == Fraction(8, 6)

    def test_infinite_covolume_rejected(self):
        with pytest.raises(InfiniteValueError):
            covolume(newton_polyhedron(MonomialIdeal(2, [(1, 1)])))

    def test_matches_lattice_count_differences(self, rng):
        """The complement of k*Gamma holds a cubic-in-k number of lattice
        points whose third difference is 6x the covolume (all vertices of
        the complement complex are lattice points, so the count is an exact
        polynomial)."""
        for _ in range(5):
            ideal = random_finite_ideal(rng, 3, max_exp=4)
            gamma = newton_polyhedron(ideal)
            axes = [int(r) for r in gamma.axis_intersections()]
            counts = []
            for k in range(1, 6):
                total = 0
                for x in range(k * axes[0]):
                    for y in range(k * axes[1]):
                        for z in range(k * axes[2]):
                            inside = all(
                                a[0] * x + a[1] * y + a[2] * z >= k * c
                                for a, c in gamma.facets
                            )
                            total += not inside
                counts.append(total)
            for _ in range(3):
                counts = [b - a for a, b in zip(counts, counts[1:])]
            assert len(set(counts)) == 1
            assert Fraction(counts[0], 6) == covolume(gamma)
