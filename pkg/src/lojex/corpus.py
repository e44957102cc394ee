"""Built-in verification corpus: the worked examples every release must
reproduce exactly.  Shared by the CLI `corpus` command and the acceptance
tests."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .exponents import (
    EXACT_BY_KOP,
    check_w_matching,
    gradient_ideals,
    kop_reference_formula,
    loj_gradient,
    loj_set,
    matching_coordinate_change,
)
from .ideals import MonomialIdeal, filtration_pieces
from .multiplicity import IdealTuple, r_number, sigma
from .parsing import parse_polynomial
from .poly import Weights


@dataclass(frozen=True)
class CorpusItem:
    key: str
    description: str
    passed: bool
    detail: str


def _item(key: str, description: str, checks: list[tuple[bool, str]]) -> CorpusItem:
    failed = [note for ok, note in checks if not ok]
    detail = "; ".join(note for _, note in checks) if not failed else "; ".join(failed)
    return CorpusItem(key, description, not failed, detail)


def _filtration_sigma_pair(seed: int) -> CorpusItem:
    """Random pairs (w, r) with every weight dividing every degree: the
    filtration tuples have sigma = prod(r)/prod(w)."""
    rng = random.Random(seed)
    checks = []
    produced = 0
    while produced < 20:
        n = rng.choice((2, 2, 3))
        w = Weights(tuple(rng.randint(1, 3) for _ in range(n)))
        lcm = math.lcm(*w.entries)
        degrees = [lcm * rng.randint(1, 3 if n == 2 else 2) for _ in range(n)]
        expected = Fraction(math.prod(degrees), w.product)
        if expected.denominator != 1:
            continue
        pieces = [filtration_pieces(w, r) for r in degrees]
        a_tuple = IdealTuple(tuple(p.A_r for p in pieces))
        b_tuple = IdealTuple(tuple(p.B_r for p in pieces))
        sa, sb = sigma(a_tuple).value, sigma(b_tuple).value
        ok = sa == sb == int(expected)
        checks.append((ok, f"w={w.entries} r={tuple(degrees)}: {sa}, {sb} vs {expected}"))
        produced += 1
    return _item(
        "bezout-like",
        "sigma of divisible filtration tuples equals prod(r)/prod(w)",
        checks,
    )


def run_corpus(seed: int = 0) -> list[CorpusItem]:
    items: list[CorpusItem] = []

    # (a) weights (3,1): the degree-4 and degree-5 pieces, infinite sigma
    w31 = Weights.of(3, 1)
    a4 = filtration_pieces(w31, 4).A_r
    a5 = filtration_pieces(w31, 5).A_r
    sigma_45 = sigma(IdealTuple((a4, a5)), seed=seed)
    items.append(
        _item(
            "sigma-infinite-(3,1)",
            "A_4 = <xy, y^4>, A_5 = <xy^2, y^5>, sigma infinite",
            [
                (a4.generators == ((1, 1), (0, 4)), f"A_4 gens {a4.generators}"),
                (a5.generators == ((1, 2), (0, 5)), f"A_5 gens {a5.generators}"),
                (sigma_45.value == math.inf, f"sigma = {sigma_45.value}"),
            ],
        )
    )

    # (b) divisible filtration tuples
    items.append(_filtration_sigma_pair(seed))

    # (c) weights (1,4): exponent 4 against a filtration bound of 8
    w14 = Weights.of(1, 4)
    pair = IdealTuple(
        (MonomialIdeal(2, [(4, 0)]), MonomialIdeal(2, [(0, 2)]))
    )
    found = loj_set(pair, s_max=6)
    degrees = tuple(ideal.weighted_degree(w14) for ideal in pair)
    bound = Fraction(max(degrees), w14.min_weight)
    items.append(
        _item(
            "bound-not-attained-(1,4)",
            "exponent of (<x^4>, <y^2>) is 4, bound 8, no matching",
            [
                (found.value == 4, f"value {found.value}"),
                (bound == 8, f"bound {bound}"),
                (check_w_matching(pair, w14) is None, "matching verdict"),
            ],
        )
    )

    # (d) five variables: derived ideals, no matching, convenient transform
    w5 = Weights.of(1, 2, 3, 4, 6)
    f5 = parse_polynomial("x1^12 + x2^4*x4 + x4^3 + x3^2*x5 + x5^2")
    ideals5 = gradient_ideals(f5)
    stated = (
        ((11, 0, 0, 0, 0),),
        ((0, 3, 0, 1, 0),),
        ((0, 0, 1, 0, 1),),
        ((0, 0, 0, 2, 0), (0, 4, 0, 0, 0)),
        ((0, 0, 0, 0, 1), (0, 0, 2, 0, 0)),
    )
    transform = matching_coordinate_change(f5, w5, seed=seed)
    shift_supports = [h.support() for h in transform.change.shifts]
    expected_shifts = [
        frozenset(),
        frozenset(),
        frozenset(),
        frozenset({(0, 2, 0, 0, 0)}),
        frozenset({(0, 0, 2, 0, 0)}),
    ]
    new_match = check_w_matching(gradient_ideals(transform.g), w5)
    items.append(
        _item(
            "five-variable-transform",
            "derived ideals, no matching, convenient image after the change",
            [
                (
                    tuple(i.generators for i in ideals5) == stated,
                    "derived generators",
                ),
                (check_w_matching(ideals5, w5) is None, "no matching before"),
                (shift_supports == expected_shifts, f"shift shape {shift_supports}"),
                (transform.g.is_convenient(), "image convenient"),
                (new_match is not None, "matching after"),
            ],
        )
    )

    # (e) the degree-4 counterexample: exponent 1, reference formula silent
    w123 = Weights.of(1, 2, 3)
    f_counter = parse_polynomial("x1*x3 + x2^2 + x1^2*x2")
    res_e = loj_gradient(f_counter, w123, seed=seed)
    items.append(
        _item(
            "counterexample-degree-4",
            "gradient exponent 1; three-variable formula inapplicable at d=4",
            [
                (res_e.value == 1, f"value {res_e.value}"),
                (kop_reference_formula(w123, 4) is None, "formula inapplicable"),
            ],
        )
    )

    # (f) x^12 + y^6 + z^4: exact value 11
    res_f = loj_gradient(parse_polynomial("x^12 + y^6 + z^4"), w123, seed=seed)
    items.append(
        _item(
            "divisible-degree-12",
            "gradient exponent 11 with an exact certificate",
            [
                (res_f.value == 11, f"value {res_f.value}"),
                (res_f.is_exact, f"certificate {res_f.certificate}"),
            ],
        )
    )

    # (g) x^16 + y^8 + x z^5: value 15 through the reference formula
    f16 = parse_polynomial("x^16 + y^8 + x*z^5")
    res_g = loj_gradient(f16, w123, seed=seed)
    items.append(
        _item(
            "kop-degree-16",
            "gradient exponent 15 via the reference route; no matching",
            [
                (res_g.value == 15, f"value {res_g.value}"),
                (res_g.certificate == EXACT_BY_KOP, f"certificate {res_g.certificate}"),
                (
                    check_w_matching(gradient_ideals(f16), w123) is None,
                    "matching verdict",
                ),
            ],
        )
    )

    # (h) the ceiling formula for r_J along the filtration
    w12 = Weights.of(1, 2)
    j_ideal = MonomialIdeal(2, [(2, 0), (0, 1)])
    b2 = filtration_pieces(w12, 2).B_r
    b3 = filtration_pieces(w12, 3).B_r
    ceil_checks = []
    for s in range(1, 7):
        got = r_number(IdealTuple((b2**s, b3**s)), j_ideal)
        want = math.ceil(3 * s / 2)
        ceil_checks.append((got == want, f"s={s}: {got} vs {want}"))
    items.append(
        _item(
            "r-number-ceiling",
            "r_J(B_2^s, B_3^s) = ceil(3s/2) for s = 1..6",
            ceil_checks,
        )
    )

    # (i) determinacy degrees floor(value) + 1 for the three germs above
    items.append(
        _item(
            "determinacy-degrees",
            "s0 = floor(value) + 1 reported alongside the gradient exponents",
            [
                (res_e.determinacy == 2, f"counterexample s0 {res_e.determinacy}"),
                (res_f.determinacy == 12, f"degree-12 s0 {res_f.determinacy}"),
                (res_g.determinacy == 16, f"degree-16 s0 {res_g.determinacy}"),
            ],
        )
    )

    return items
