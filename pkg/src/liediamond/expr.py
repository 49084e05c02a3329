"""Expression mini-language shared by the enveloping, Weyl and Clifford algebras.

Grammar::

    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := factor ('*' factor)*
    factor  := rational | name ['^' int]
    rational:= int ['/' int]

Products are evaluated left to right with the target algebra's
multiplication, so factors need not be in normal order.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import FormatError

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^]))")


@dataclass(frozen=True)
class Term:
    coeff: Fraction
    factors: tuple  # ((name, power), ...) in written order


def _tokens(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise FormatError(f"unexpected character {text[pos:].lstrip()[:1]!r} at column {pos + 1}")
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind) + 1))
        pos = m.end()
    return out


def parse(text: str) -> list[Term]:
    """Parse an expression into signed terms."""
    toks = _tokens(text)
    if not toks:
        raise FormatError("empty expression")
    i = 0
    terms: list[Term] = []

    def peek():
        return toks[i] if i < len(toks) else (None, None, len(text) + 1)

    sign = 1
    kind, val, col = peek()
    if kind == "op" and val in "+-":
        sign = -1 if val == "-" else 1
        i += 1
    while True:
        coeff = Fraction(sign)
        factors = []
        while True:
            kind, val, col = peek()
            if kind == "num":
                coeff *= Fraction(val)
                i += 1
            elif kind == "name":
                i += 1
                power = 1
                k2, v2, _ = peek()
                if k2 == "op" and v2 == "^":
                    i += 1
                    k3, v3, c3 = peek()
                    if k3 != "num" or "/" in v3:
                        raise FormatError(f"expected integer exponent at column {c3}")
                    power = int(v3)
                    i += 1
                factors.append((val, power))
            else:
                raise FormatError(f"expected a number or a name at column {col}")
            kind, val, col = peek()
            if kind == "op" and val == "*":
                i += 1
                continue
            break
        terms.append(Term(coeff, tuple(factors)))
        kind, val, col = peek()
        if kind is None:
            return terms
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
            continue
        raise FormatError(f"unexpected {val!r} at column {col}")


def evaluate(terms: list[Term], resolve: Callable[[str], object], one: object):
    """Sum of ``coeff * f1^p1 * f2^p2 ...`` using the algebra's operations."""
    total = None
    for t in terms:
        value = one * t.coeff
        for name, power in t.factors:
            g = resolve(name)
            for _ in range(power):
                value = value * g
        total = value if total is None else total + value
    return total


def format_terms(pieces: list[tuple[Fraction, str]]) -> str:
    """Render ``[(coeff, monomial_text)]`` (monomial text empty for 1)."""
    if not pieces:
        return "0"
    out = []
    for k, (c, mono) in enumerate(pieces):
        neg = c < 0
        a = -c if neg else c
        if mono:
            body = mono if a == 1 else f"{a}*{mono}"
        else:
            body = str(a)
        if k == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)
