"""Shared deterministic generators for the randomized suites."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from lojex import MonomialIdeal, Polynomial


def random_finite_ideal(
    rng: random.Random, dim: int, max_exp: int = 6, extra: int = 2
) -> MonomialIdeal:
    """Random monomial ideal with a pure power on every axis."""
    gens = []
    for i in range(dim):
        k = [0] * dim
        k[i] = rng.randint(1, max_exp)
        gens.append(tuple(k))
    for _ in range(rng.randint(0, extra)):
        gens.append(tuple(rng.randint(0, max_exp) for _ in range(dim)))
    if any(g == (0,) * dim for g in gens):
        return random_finite_ideal(rng, dim, max_exp, extra)
    return MonomialIdeal(dim, gens)


def random_ideal(
    rng: random.Random, dim: int, max_exp: int = 6, max_gens: int = 3
) -> MonomialIdeal:
    """Random nonzero monomial ideal, finite colength not guaranteed."""
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        g = tuple(rng.randint(0, max_exp) for _ in range(dim))
        if g != (0,) * dim:
            gens.append(g)
    if not gens:
        return random_ideal(rng, dim, max_exp, max_gens)
    return MonomialIdeal(dim, gens)


def random_polynomial(
    rng: random.Random, dim: int, max_terms: int = 4, max_exp: int = 5
) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        k = tuple(rng.randint(0, max_exp) for _ in range(dim))
        terms[k] = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    return Polynomial(dim, terms)


def random_nonzero_polynomial(rng, dim, max_terms=4, max_exp=5) -> Polynomial:
    while True:
        p = random_polynomial(rng, dim, max_terms, max_exp)
        if not p.is_zero():
            return p


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240811)
