import math
from fractions import Fraction

import pytest

from lojex import (
    IdealTuple,
    InfiniteValueError,
    MonomialIdeal,
    Weights,
    filtration_pieces,
    mixed_multiplicity,
    newton_polyhedron,
    oracle_colength_limit,
    oracle_generic_multiplicity,
    r_number,
    samuel_multiplicity,
    sigma,
)
from lojex.multiplicity import _augmented, _m_poly, gamma, mixed_e
from conftest import random_finite_ideal, random_ideal


def pure_power_mixed(a, b, c, d):
    """Reference mixed multiplicity of <x^a, y^b> and <x^c, y^d>."""
    return min(a * d, b * c)


class TestSamuel:
    def test_maximal(self):
        assert samuel_multiplicity(MonomialIdeal.maximal(2)).value == 1

    def test_plane_pair(self):
        value = samuel_multiplicity(MonomialIdeal(2, [(2, 0), (0, 3)]))
        assert value.value == 6 and value.method == "covolume"

    def test_infinite_rejected(self):
        with pytest.raises(InfiniteValueError):
            samuel_multiplicity(MonomialIdeal(2, [(1, 1)]))

    def test_agrees_with_lattice_oracle(self, rng):
        for _ in range(40):
            ideal = random_finite_ideal(rng, rng.randint(2, 3))
            assert samuel_multiplicity(ideal).value == oracle_colength_limit(ideal)


class TestMixed:
    def test_reference_pairs(self):
        m = MonomialIdeal.maximal(2)
        assert mixed_multiplicity([m, MonomialIdeal(2, [(2, 0), (0, 3)])]).value == 2
        assert (
            mixed_multiplicity(
                [MonomialIdeal(2, [(2, 0), (0, 2)]), MonomialIdeal(2, [(3, 0), (0, 3)])]
            ).value
            == 6
        )

    def test_pure_power_formula(self, rng):
        for _ in range(15):
            a, b, c, d = (rng.randint(1, 6) for _ in range(4))
            left = MonomialIdeal(2, [(a, 0), (0, b)])
            right = MonomialIdeal(2, [(c, 0), (0, d)])
            assert mixed_multiplicity([left, right]).value == pure_power_mixed(
                a, b, c, d
            )

    def test_symmetry(self, rng):
        for _ in range(10):
            dim = rng.randint(2, 3)
            ideals = [random_finite_ideal(rng, dim, max_exp=4) for _ in range(dim)]
            base = mixed_multiplicity(ideals).value
            rng.shuffle(ideals)
            assert mixed_multiplicity(ideals).value == base

    def test_diagonal(self, rng):
        for _ in range(10):
            dim = rng.randint(2, 3)
            ideal = random_finite_ideal(rng, dim, max_exp=4)
            assert (
                mixed_multiplicity([ideal] * dim).value
                == samuel_multiplicity(ideal).value
            )

    def test_infinite_entry_rejected(self):
        with pytest.raises(InfiniteValueError):
            mixed_multiplicity(
                [MonomialIdeal(2, [(1, 1)]), MonomialIdeal.maximal(2)]
            )


class TestSigma:
    def test_coordinate_hyperplanes(self):
        tup = IdealTuple((MonomialIdeal(2, [(1, 0)]), MonomialIdeal(2, [(0, 1)])))
        assert sigma(tup).value == 1

    def test_filtration_pair_weights_1_2(self):
        w = Weights.of(1, 2)
        b2 = filtration_pieces(w, 2).B_r
        b4 = filtration_pieces(w, 4).B_r
        assert sigma(IdealTuple((b2, b4))).value == 4

    def test_infinite_by_sum_criterion(self):
        w = Weights.of(3, 1)
        tup = IdealTuple(
            (filtration_pieces(w, 4).A_r, filtration_pieces(w, 5).A_r)
        )
        result = sigma(tup)
        assert result.value == math.inf

    def test_monotone_under_generator_addition(self, rng):
        for _ in range(12):
            dim = rng.randint(2, 3)
            ideals = [random_finite_ideal(rng, dim, max_exp=4) for _ in range(dim)]
            base = sigma(IdealTuple(tuple(ideals))).value
            k = rng.randrange(dim)
            extra = tuple(rng.randint(0, 3) for _ in range(dim))
            if extra == (0,) * dim:
                continue
            enlarged = list(ideals)
            enlarged[k] = MonomialIdeal(dim, ideals[k].generators + (extra,))
            assert sigma(IdealTuple(tuple(enlarged))).value <= base

    def test_sequence_nondecreasing_then_constant(self, rng):
        for _ in range(6):
            ideals = [random_finite_ideal(rng, 2, max_exp=4) for _ in range(2)]
            polys = [gamma(i) for i in ideals]
            target = sigma(IdealTuple(tuple(ideals))).value
            values = [
                mixed_e(_augmented(polys, _m_poly(2), r)) for r in range(1, 14)
            ]
            assert values == sorted(values)
            stable_from = values.index(target)
            assert all(v == target for v in values[stable_from:])

    def test_j_power_invariance(self, rng):
        """Augmenting with powers of any finite-colength J reaches the same
        maximum as augmenting with the maximal ideal."""
        alternates = [
            MonomialIdeal.maximal(2, 2),
            MonomialIdeal(2, [(2, 0), (0, 1)]),
        ]
        for _ in range(8):
            ideals = [random_ideal(rng, 2, max_exp=4) for _ in range(2)]
            tup = IdealTuple(tuple(ideals))
            base = sigma(tup).value
            if base == math.inf:
                continue
            polys = [gamma(i) for i in ideals]
            for j_ideal in alternates:
                values = [
                    mixed_e(_augmented(polys, gamma(j_ideal), r))
                    for r in range(1, 16)
                ]
                assert max(values) == base


class TestRNumber:
    def test_pure_power_pair_sequence(self):
        tup = IdealTuple((MonomialIdeal(2, [(4, 0)]), MonomialIdeal(2, [(0, 2)])))
        polys = [gamma(i) for i in tup]
        values = [mixed_e(_augmented(polys, _m_poly(2), r)) for r in range(1, 5)]
        assert values == [1, 4, 6, 8]
        assert r_number(tup) == 4

    def test_maximal_power(self):
        for k in (1, 2, 3):
            tup = IdealTuple((MonomialIdeal.maximal(2, k),) * 2)
            assert r_number(tup) == k

    def test_power_scaling_bounds(self, rng):
        """r_J(T^s) <= s r_J(T) and r_{J^s}(T) >= r_J(T)/s."""
        j_choices = [
            None,
            MonomialIdeal.maximal(2, 2),
            MonomialIdeal(2, [(2, 0), (0, 1)]),
        ]
        for trial in range(12):
            ideals = [random_finite_ideal(rng, 2, max_exp=4) for _ in range(2)]
            tup = IdealTuple(tuple(ideals))
            j_ideal = j_choices[trial % len(j_choices)]
            base = r_number(tup, j_ideal)
            for s in (2, 3):
                assert r_number(tup.power(s), j_ideal) <= s * base
                j_concrete = j_ideal or MonomialIdeal.maximal(2)
                assert r_number(tup, j_concrete**s) >= Fraction(base, s)

    def test_infinite_sigma_rejected(self):
        tup = IdealTuple((MonomialIdeal(2, [(1, 1)]), MonomialIdeal(2, [(1, 1)])))
        with pytest.raises(InfiniteValueError):
            r_number(tup)


class TestOracles:
    def test_lattice_oracle_values(self):
        assert oracle_colength_limit(MonomialIdeal.maximal(2)) == 1
        assert oracle_colength_limit(MonomialIdeal(2, [(2, 0), (0, 3)])) == 6
        assert oracle_colength_limit(MonomialIdeal(2, [(4, 0), (0, 2)])) == 8

    def test_generic_oracle_complete_intersection(self):
        tup = IdealTuple((MonomialIdeal(2, [(4, 0)]), MonomialIdeal(2, [(0, 2)])))
        assert oracle_generic_multiplicity(tup, seed=11).minimum == 8

    def test_generic_oracle_maximal(self):
        tup = IdealTuple((MonomialIdeal.maximal(2),) * 2)
        assert oracle_generic_multiplicity(tup, seed=1).minimum == 1

    def test_generic_oracle_singular_evidence(self):
        w = Weights.of(3, 1)
        tup = IdealTuple(
            (filtration_pieces(w, 4).A_r, filtration_pieces(w, 5).A_r)
        )
        report = oracle_generic_multiplicity(tup, seed=5)
        assert report.minimum == math.inf
        assert all(t == math.inf for t in report.trials)


class TestBezoutLike:
    def test_divisible_filtration_tuples(self, rng):
        for _ in range(8):
            n = rng.choice((2, 3))
            w = Weights(tuple(rng.randint(1, 3) for _ in range(n)))
            lcm = math.lcm(*w.entries)
            degrees = [lcm * rng.randint(1, 2) for _ in range(n)]
            expected = Fraction(math.prod(degrees), w.product)
            assert expected.denominator == 1
            pieces = [filtration_pieces(w, r) for r in degrees]
            a_val = sigma(IdealTuple(tuple(p.A_r for p in pieces))).value
            b_val = sigma(IdealTuple(tuple(p.B_r for p in pieces))).value
            assert a_val == b_val == int(expected)
