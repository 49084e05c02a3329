"""Weyl and Clifford algebras in normal form, and U(H_{2n+1}) -> A_n.

Weyl algebra ``A_n``: generators ``x_i, y_i`` with ``x_i y_j - y_j x_i =
delta_ij``; elements are kept in the normal form ``x^alpha y^gamma``.
Reordering uses, for each index separately,

    y^b x^c = sum_k (-1)^k C(b, k) c!/(c-k)! x^(c-k) y^(b-k).

Clifford algebra ``Cliff_q``: anticommuting ``e_i`` with ``e_i^2 = 1``;
basis ``e_S`` for increasing subsets S.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, perm
from typing import Mapping, Sequence

from . import expr
from .catalog import heisenberg
from .env import EnvElement
from .errors import FormatError, PreconditionError
from .exactmath import rational_kernel, to_rational


def _clean(terms: Mapping) -> dict:
    return {k: Fraction(c) for k, c in terms.items() if c}


def _add_into(out: dict, key, c) -> None:
    v = out.get(key, 0) + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


class _NormalForm:
    """Shared arithmetic for dict-of-monomials elements of a fixed order."""

    __slots__ = ("order", "terms")

    def __init__(self, order: int, terms: Mapping):
        self.order = order
        self.terms = _clean(terms)

    def _new(self, terms) -> "_NormalForm":
        return type(self)(self.order, terms)

    def _check(self, other) -> None:
        if type(other) is not type(self) or other.order != self.order:
            raise FormatError(f"{type(self).__name__} order mismatch")

    def _lift(self, other):
        if isinstance(other, _NormalForm):
            self._check(other)
            return other
        return self._new({self._unit_key(): to_rational(other)})

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _add_into(out, k, c)
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, _NormalForm):
            self._check(other)
            out: dict = {}
            for a, ca in self.terms.items():
                for b, cb in other.terms.items():
                    for k, c in self._mul_mono(a, b).items():
                        _add_into(out, k, ca * cb * c)
            return self._new(out)
        c = to_rational(other)
        return self._new({k: v * c for k, v in self.terms.items()})

    def __rmul__(self, other):
        c = to_rational(other)
        return self._new({k: v * c for k, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, _NormalForm):
            return type(other) is type(self) and other.order == self.order and other.terms == self.terms
        try:
            return self == self._lift(other)
        except (FormatError, TypeError):
            return NotImplemented

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.order, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"

    def __str__(self) -> str:
        items = sorted(self.terms.items(), key=lambda t: self._sort_key(t[0]), reverse=True)
        return expr.format_terms([(c, self._mono_str(k)) for k, c in items])


# -- Weyl ---------------------------------------------------------------------


@lru_cache(maxsize=None)
def _reorder(b: int, c: int) -> tuple:
    """``y^b x^c`` as ((x power, y power, coeff), ...)."""
    return tuple((c - k, b - k, Fraction((-1) ** k * comb(b, k) * perm(c, k))) for k in range(min(b, c) + 1))


class WeylElement(_NormalForm):
    """Element of A_n; keys are (alpha, gamma) exponent tuples for x^alpha y^gamma."""

    __slots__ = ()

    def _unit_key(self):
        z = (0,) * self.order
        return (z, z)

    def _mul_mono(self, a, b) -> dict:
        (a1, g1), (a2, g2) = a, b
        per_index = [_reorder(g1[i], a2[i]) for i in range(self.order)]
        out: dict = {}
        for choice in product(*per_index):
            alpha = tuple(a1[i] + choice[i][0] for i in range(self.order))
            gamma = tuple(choice[i][1] + g2[i] for i in range(self.order))
            c = Fraction(1)
            for t in choice:
                c *= t[2]
            _add_into(out, (alpha, gamma), c)
        return out

    @staticmethod
    def _sort_key(key):
        alpha, gamma = key
        return (sum(alpha) + sum(gamma), alpha, gamma)

    def _mono_str(self, key) -> str:
        alpha, gamma = key
        parts = []
        for sym, exps in (("x", alpha), ("y", gamma)):
            for i, e in enumerate(exps):
                if e == 1:
                    parts.append(f"{sym}{i + 1}")
                elif e:
                    parts.append(f"{sym}{i + 1}^{e}")
        return "*".join(parts)

    def degree(self) -> int:
        return max((sum(a) + sum(g) for a, g in self.terms), default=-1)


def weyl_one(n: int) -> WeylElement:
    z = (0,) * n
    return WeylElement(n, {(z, z): 1})


def weyl_x(n: int, i: int) -> WeylElement:
    """``x_{i+1}`` (0-based i)."""
    e = [0] * n
    e[i] = 1
    return WeylElement(n, {(tuple(e), (0,) * n): 1})


def weyl_y(n: int, i: int) -> WeylElement:
    e = [0] * n
    e[i] = 1
    return WeylElement(n, {((0,) * n, tuple(e)): 1})


def weyl_multiply(u: WeylElement, v: WeylElement) -> WeylElement:
    return u * v


def _indexed(name: str, letters: str, order: int) -> tuple[str, int]:
    if len(name) >= 2 and name[0] in letters and name[1:].isdigit():
        i = int(name[1:])
        if 1 <= i <= order:
            return name[0], i - 1
    raise FormatError(f"unknown generator {name!r} for order {order}")


def weyl_parse(n: int, text: str) -> WeylElement:
    def resolve(name: str) -> WeylElement:
        letter, i = _indexed(name, "xy", n)
        return weyl_x(n, i) if letter == "x" else weyl_y(n, i)

    return expr.evaluate(expr.parse(text), resolve, weyl_one(n))


def stafford_alpha(n: int, lambdas: Sequence) -> WeylElement:
    """``x1 + y1 * sum_{i>=2} l_i x_i y_i + sum_{i>=2} (x_i + y_i)`` in normal form.

    The coefficients are only required to be nonzero rationals.  The
    maximality of the right ideal generated by this element needs them
    linearly independent over Q, which rational values with n >= 3 cannot
    be; no such claim is attached to the output.
    """
    if n < 2:
        raise PreconditionError("Stafford's element needs n >= 2")
    lambdas = [to_rational(c) for c in lambdas]
    if len(lambdas) != n - 1:
        raise FormatError(f"expected {n - 1} coefficients, got {len(lambdas)}")
    if any(c == 0 for c in lambdas):
        raise PreconditionError("coefficients must be nonzero")
    x = [weyl_x(n, i) for i in range(n)]
    y = [weyl_y(n, i) for i in range(n)]
    inner = WeylElement(n, {})
    for i in range(1, n):
        inner = inner + x[i] * y[i] * lambdas[i - 1]
    alpha = x[0] + y[0] * inner
    for i in range(1, n):
        alpha = alpha + x[i] + y[i]
    return alpha


# -- Clifford -----------------------------------------------------------------


def _subset_sign(S: tuple, T: tuple) -> int:
    """Sign of reordering e_S e_T into increasing order (squares are 1)."""
    inversions = sum(1 for s in S for t in T if s > t)
    return -1 if inversions % 2 else 1


class CliffordElement(_NormalForm):
    """Element of Cliff_q; keys are increasing tuples S (0-based) for e_S."""

    __slots__ = ()

    def _unit_key(self):
        return ()

    def _mul_mono(self, S, T) -> dict:
        return {tuple(sorted(set(S) ^ set(T))): Fraction(_subset_sign(S, T))}

    @staticmethod
    def _sort_key(S):
        return (len(S), tuple(-i for i in S))

    def _mono_str(self, S) -> str:
        return "*".join(f"e{i + 1}" for i in S)


def clifford_one(q: int) -> CliffordElement:
    return CliffordElement(q, {(): 1})


def clifford_gen(q: int, i: int) -> CliffordElement:
    """``e_{i+1}`` (0-based i)."""
    return CliffordElement(q, {(i,): 1})


def clifford_multiply(u: CliffordElement, v: CliffordElement) -> CliffordElement:
    return u * v


def clifford_parse(q: int, text: str) -> CliffordElement:
    def resolve(name: str) -> CliffordElement:
        _, i = _indexed(name, "e", q)
        return clifford_gen(q, i)

    return expr.evaluate(expr.parse(text), resolve, clifford_one(q))


def clifford_basis(q: int) -> list[tuple]:
    out = []
    for mask in range(1 << q):
        out.append(tuple(i for i in range(q) if mask >> i & 1))
    out.sort(key=lambda S: (len(S), S))
    return out


def clifford_center(q: int) -> list[CliffordElement]:
    """Basis of ``{z : z e_i = e_i z for all i}`` (ordinary commutators)."""
    basis = clifford_basis(q)
    N = len(basis)
    rows = []
    for i in range(q):
        e = clifford_gen(q, i)
        # column k: coordinates of [e_{S_k}, e_i]
        cols = []
        for S in basis:
            b = CliffordElement(q, {S: 1})
            cols.append((b * e - e * b).terms)
        for r in range(N):
            row = [cols[k].get(basis[r], Fraction(0)) for k in range(N)]
            if any(row):
                rows.append(row)
    kernel = rational_kernel(rows, N) if rows else [[Fraction(int(k == j)) for k in range(N)] for j in range(N)]
    return [CliffordElement(q, {basis[k]: c for k, c in enumerate(v) if c}) for v in kernel]


def clifford_center_dim(q: int) -> int:
    if q < 0:
        raise FormatError("Clifford order must be non-negative")
    return len(clifford_center(q))


# -- U(H_{2n+1}) -> A_n -------------------------------------------------------


def heisenberg_to_weyl(u: EnvElement, scale=1) -> WeylElement:
    """Image of u under ``x_i -> x_i, y_i -> scale*y_i, h -> scale``.

    This is the quotient of U(H_{2n+1}) by ``h - scale`` followed by the
    identification with A_n; with scale 1 the image of ``x_i y_i - y_i x_i``
    is ``1``.  The algebra must be the standard Heisenberg algebra on
    ``x1..xn, y1..yn, h``.
    """
    scale = to_rational(scale)
    if scale == 0:
        raise PreconditionError("scale must be nonzero")
    A = u.algebra
    g = A.g
    if g.dim_odd or g.dim % 2 == 0 or g.dim < 3:
        raise PreconditionError("input must live over a Heisenberg algebra H_{2n+1}")
    n = (g.dim - 1) // 2
    if g != heisenberg(n):
        raise PreconditionError("input must live over the standard Heisenberg algebra H_{2n+1}")
    images = [weyl_x(n, i) for i in range(n)] + [weyl_y(n, i) * scale for i in range(n)]
    images.append(weyl_one(n) * scale)
    gens = []
    for v in A.vectors:
        img = WeylElement(n, {})
        for k, c in enumerate(v):
            if c:
                img = img + images[k] * c
        gens.append(img)
    out = WeylElement(n, {})
    for mono, c in u.terms.items():
        term = weyl_one(n) * c
        for i, e in enumerate(mono):
            for _ in range(e):
                term = term * gens[i]
        out = out + term
    return out
