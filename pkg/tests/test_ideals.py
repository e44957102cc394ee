import math

import pytest

from lojex import (
    DimensionError,
    DomainError,
    MonomialIdeal,
    Weights,
    closure_membership,
    filtration_pieces,
    ideal_algebra,
    newton_polyhedron,
)
from conftest import random_finite_ideal


class TestAntichain:
    def test_reduction(self):
        ideal = MonomialIdeal(2, [(4, 0), (4, 1), (0, 2), (1, 3)])
        assert ideal.generators == ((0, 2), (4, 0))

    def test_zero_ideal(self):
        assert MonomialIdeal.zero(2).is_zero()
        assert MonomialIdeal.zero(2).colength() == math.inf

    def test_negative_exponent_rejected(self):
        with pytest.raises(DomainError):
            MonomialIdeal(2, [(-1, 0)])

    def test_structural_equality(self):
        a = MonomialIdeal(2, [(1, 1), (0, 4), (2, 2)])
        b = MonomialIdeal(2, [(0, 4), (1, 1)])
        assert a == b and hash(a) == hash(b)


class TestAlgebra:
    def test_sum_of_filtration_pieces(self):
        w = Weights.of(3, 1)
        a4 = filtration_pieces(w, 4).A_r
        a5 = filtration_pieces(w, 5).A_r
        total = ideal_algebra("sum", a4, a5)
        assert total == MonomialIdeal(2, [(1, 1), (0, 4)])
        assert not total.has_finite_colength

    def test_maximal_ideal_square(self):
        assert ideal_algebra("maximal_ideal_power", 2, 2) == MonomialIdeal(
            2, [(2, 0), (1, 1), (0, 2)]
        )

    def test_product(self):
        left = MonomialIdeal(2, [(1, 0), (0, 1)])
        right = MonomialIdeal(2, [(2, 0), (0, 3)])
        assert ideal_algebra("product", left, right) == MonomialIdeal(
            2, [(3, 0), (2, 1), (1, 3), (0, 4)]
        )

    def test_power_matches_repeated_product(self, rng):
        for _ in range(10):
            ideal = random_finite_ideal(rng, 2, max_exp=4)
            assert ideal**3 == ideal * ideal * ideal

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            MonomialIdeal(2, [(1, 0)]) + MonomialIdeal(3, [(1, 0, 0)])


class TestColength:
    def test_maximal(self):
        assert MonomialIdeal.maximal(2).colength() == 1

    def test_maximal_square(self):
        assert MonomialIdeal.maximal(2, 2).colength() == 3

    def test_box(self):
        assert MonomialIdeal(2, [(3, 0), (0, 2)]).colength() == 6

    def test_infinite(self):
        assert MonomialIdeal(2, [(1, 1)]).colength() == math.inf


class TestFiltration:
    def test_weights_3_1(self):
        w = Weights.of(3, 1)
        assert filtration_pieces(w, 4).A_r == MonomialIdeal(2, [(1, 1), (0, 4)])
        assert filtration_pieces(w, 5).A_r == MonomialIdeal(2, [(1, 2), (0, 5)])

    def test_unreachable_degree(self):
        assert filtration_pieces(Weights.of(2, 2), 3).A_r.is_zero()

    def test_b_contains_a(self, rng):
        for _ in range(20):
            n = rng.randint(1, 3)
            w = Weights(tuple(rng.randint(1, 4) for _ in range(n)))
            r = rng.randint(1, 9)
            pieces = filtration_pieces(w, r)
            assert pieces.B_r.has_finite_colength
            for g in pieces.A_r.generators:
                assert pieces.B_r.contains_monomial(g)

    def test_b_is_degree_cut(self, rng):
        """Membership in B_r is exactly the degree condition."""
        for _ in range(10):
            w = Weights((rng.randint(1, 3), rng.randint(1, 3)))
            r = rng.randint(1, 8)
            b = filtration_pieces(w, r).B_r
            for x in range(r + 2):
                for y in range(r + 2):
                    assert b.contains_monomial((x, y)) == (
                        w.degree_of((x, y)) >= r
                    )

    def test_a_finite_colength_iff_all_weights_divide(self):
        for w_entries in [(1, 2), (2, 3), (1, 1), (2, 2, 3)]:
            w = Weights(w_entries)
            for r in range(1, 13):
                a = filtration_pieces(w, r).A_r
                expected = all(r % wi == 0 for wi in w)
                assert a.has_finite_colength == expected, (w_entries, r)

    def test_closure_of_a_is_b_iff_finite(self, rng):
        for w_entries, r in [((1, 2), 4), ((2, 3), 12), ((1, 2), 3), ((3, 1), 4)]:
            w = Weights(w_entries)
            pieces = filtration_pieces(w, r)
            if pieces.A_r.has_finite_colength:
                assert pieces.A_r.integral_closure() == pieces.B_r
            elif not pieces.A_r.is_zero():
                assert pieces.A_r.integral_closure() != pieces.B_r

    def test_products_land_in_deeper_pieces(self, rng):
        """Generators of A_r * A_s lie in the closure of B_{r+s}."""
        for _ in range(10):
            w = Weights((rng.randint(1, 3), rng.randint(1, 3)))
            r, s = rng.randint(1, 5), rng.randint(1, 5)
            a_r = filtration_pieces(w, r).A_r
            a_s = filtration_pieces(w, s).A_r
            b_rs = filtration_pieces(w, r + s).B_r
            if a_r.is_zero() or a_s.is_zero():
                continue
            for g in (a_r * a_s).generators:
                assert closure_membership(b_rs, g)


class TestClosure:
    def test_staircase_point(self):
        ideal = MonomialIdeal(2, [(4, 0), (0, 2)])
        assert closure_membership(ideal, (2, 1))
        assert not closure_membership(ideal, (3, 0))

    def test_generators_inside(self, rng):
        for _ in range(10):
            ideal = random_finite_ideal(rng, rng.randint(2, 3))
            for g in ideal.generators:
                assert closure_membership(ideal, g)

    def test_membership_monotone(self, rng):
        for _ in range(10):
            ideal = random_finite_ideal(rng, 2)
            gamma = newton_polyhedron(ideal)
            for x in range(7):
                for y in range(7):
                    if gamma.contains((x, y)):
                        assert gamma.contains((x + 1, y))
                        assert gamma.contains((x, y + 1))

    def test_integral_closure_examples(self):
        assert MonomialIdeal(2, [(4, 0), (0, 2)]).integral_closure() == MonomialIdeal(
            2, [(4, 0), (2, 1), (0, 2)]
        )
