"""Parser for the flat polynomial grammar used by the CLI and tests.

Grammar (whitespace insensitive):

    poly     :=  ['+'|'-'] term (('+'|'-') term)*
    term     :=  [rational] ['*'] factor ('*'? factor)*   |   rational
    factor   :=  var ['^' positive-integer]
    var      :=  'x' digits   |   one of the aliases x y z u v
    rational :=  digits ['/' digits]

Aliases map to x1..x5; `x` alone is x1.  The ambient dimension is either
supplied by the caller or inferred as the highest variable index present
(at least 1).  Parsing the canonical printed form reproduces the value.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DimensionError, ParseError
from .poly import Polynomial

_ALIASES = {"x": 1, "y": 2, "z": 3, "u": 4, "v": 5}


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        return ch

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected an integer", self.text, start)
        return int(self.text[start : self.pos])

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.text, self.pos)


def _parse_var(sc: _Scanner) -> int:
    """Return the 1-based variable index at the cursor."""
    ch = sc.peek()
    if ch not in _ALIASES:
        raise sc.error(f"expected a variable, found {ch!r}")
    sc.take()
    if ch == "x" and sc.pos < len(sc.text) and sc.text[sc.pos].isdigit():
        idx = sc.integer()
        if idx < 1:
            raise sc.error("variable indices start at x1")
        return idx
    return _ALIASES[ch]


def _parse_term(sc: _Scanner) -> tuple[Fraction, dict[int, int]]:
    """One term: coefficient and a map variable-index -> exponent."""
    coeff = Fraction(1)
    exps: dict[int, int] = {}
    saw_factor = False
    if sc.peek().isdigit():
        num = sc.integer()
        if sc.peek() == "/":
            sc.take()
            den = sc.integer()
            if den == 0:
                raise sc.error("zero denominator")
            coeff = Fraction(num, den)
        else:
            coeff = Fraction(num)
        if sc.peek() == "*":
            sc.take()
        saw_coeff = True
    else:
        saw_coeff = False
    while True:
        ch = sc.peek()
        if ch in _ALIASES:
            idx = _parse_var(sc)
            exp = 1
            if sc.peek() == "^":
                sc.take()
                if sc.peek() == "-":
                    raise sc.error("negative exponent")
                exp = sc.integer()
                if exp < 1:
                    raise sc.error("exponents must be positive")
            exps[idx] = exps.get(idx, 0) + exp
            saw_factor = True
            if sc.peek() == "*":
                sc.take()
                continue
            continue
        break
    if not saw_factor and not saw_coeff:
        raise sc.error("expected a term")
    return coeff, exps


def parse_polynomial(text: str, dimension: int | None = None) -> Polynomial:
    """Parse `text` into a canonical Polynomial.

    When `dimension` is omitted it is inferred from the highest variable
    index used (and is 1 for constant input).
    """
    sc = _Scanner(text)
    terms: list[tuple[Fraction, dict[int, int]]] = []
    sign = Fraction(1)
    if sc.peek() in "+-":
        sign = Fraction(-1) if sc.take() == "-" else Fraction(1)
    while True:
        coeff, exps = _parse_term(sc)
        terms.append((sign * coeff, exps))
        ch = sc.peek()
        if ch == "":
            break
        if ch not in "+-":
            raise sc.error(f"unexpected {ch!r}")
        sign = Fraction(-1) if sc.take() == "-" else Fraction(1)
    used = max((i for _, exps in terms for i in exps), default=1)
    dim = dimension if dimension is not None else used
    if used > dim:
        raise DimensionError(
            f"variable x{used} exceeds declared dimension {dim}"
        )
    out: dict[tuple[int, ...], Fraction] = {}
    for coeff, exps in terms:
        k = tuple(exps.get(i + 1, 0) for i in range(dim))
        out[k] = out.get(k, Fraction(0)) + coeff
    return Polynomial(dim, out)


def parse_generators(text: str, dimension: int | None = None) -> list[Polynomial]:
    """Parse a comma-separated list of polynomials sharing one dimension."""
    chunks = [chunk for chunk in text.split(",") if chunk.strip()]
    if not chunks:
        raise ParseError("expected at least one generator", text, 0)
    if dimension is None:
        dimension = max(parse_polynomial(chunk).dim for chunk in chunks)
    return [parse_polynomial(chunk, dimension) for chunk in chunks]
