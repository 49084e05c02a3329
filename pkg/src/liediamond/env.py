"""The enveloping superalgebra U(g) in PBW normal form.

Monomials are exponent tuples over an adapted homogeneous basis
``x_1..x_n`` (refined lower central series, ascending), odd exponents being
0 or 1.  Products are straightened by

* ``x_j x_i -> (-1)^{|i||j|} x_i x_j + [x_j, x_i]`` for ``j > i``,
* ``y y -> 1/2 [y, y]`` for odd ``y``,

and the flag condition puts every bracket ``[x_j, x_i]`` in the span of
``x_1..x_{i-1}``, which makes the rewriting terminate.

Besides multiplication the module provides the supercommutator, the
parity involution sigma, adjoint superderivations, a supercentrality test,
the extraction of a supercentral element from any nonzero element by
iterated derivations, and a degree-truncated supercentralizing chain.
"""
from __future__ import annotations

import random
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Sequence

from . import expr
from .errors import FormatError, PreconditionError
from .exactmath import inverse, matvec, to_rational
from .liealg import LieSuperAlgebra, bracket, nilpotency_class, refined_adapted_basis

HALF = Fraction(1, 2)


class EnvelopingAlgebra:
    """U(g) for a nilpotent Lie superalgebra g, with a fixed PBW order.

    The generator-times-monomial table is filled lazily under a lock and
    only read afterwards, so one instance can be shared between threads.
    """

    def __init__(self, g: LieSuperAlgebra):
        self.g = g
        self.basis = refined_adapted_basis(g)
        n = g.dim
        self.n = n
        self.parities = self.basis.parities
        self.vectors = self.basis.vectors
        P = self.basis.matrix()
        self._to_adapted = inverse(P) if n else []
        # structure constants in adapted coordinates, sparse
        self._br: list[list[tuple]] = []
        for i in range(n):
            row = []
            for j in range(n):
                b = matvec(self._to_adapted, bracket(g, self.vectors[i], self.vectors[j]))
                row.append(tuple((k, c) for k, c in enumerate(b) if c))
            self._br.append(row)
        self.names = tuple(self._adapted_names())
        self._index = {name: i for i, name in enumerate(self.names)}
        self._original = {name: i for i, name in enumerate(g.names)}
        self._class = nilpotency_class(g)
        self._cache: dict = {}
        self._lock = threading.Lock()

    def _adapted_names(self) -> list[str]:
        out = []
        for k, v in enumerate(self.vectors):
            nz = [i for i, c in enumerate(v) if c]
            if len(nz) == 1 and v[nz[0]] == 1:
                out.append(self.g.names[nz[0]])
            else:
                out.append(f"b{k + 1}")
        if len(set(out)) != len(out):
            out = [f"b{k + 1}" for k in range(len(out))]
        return out

    # -- construction ---------------------------------------------------------

    def element(self, terms: Mapping[tuple, object]) -> "EnvElement":
        clean = {}
        for mono, c in terms.items():
            c = to_rational(c)
            mono = tuple(mono)
            if len(mono) != self.n:
                raise FormatError(f"monomial {mono} has wrong length")
            if any(mono[i] > 1 for i in range(self.n) if self.parities[i]):
                raise FormatError(f"odd exponent above 1 in {mono}")
            if c:
                clean[mono] = clean.get(mono, Fraction(0)) + c
        return EnvElement(self, {m: c for m, c in clean.items() if c})

    def zero(self) -> "EnvElement":
        return EnvElement(self, {})

    def one(self) -> "EnvElement":
        return EnvElement(self, {(0,) * self.n: Fraction(1)})

    def scalar(self, c) -> "EnvElement":
        c = to_rational(c)
        return EnvElement(self, {(0,) * self.n: c} if c else {})

    def generator(self, i: int) -> "EnvElement":
        """The adapted basis vector ``x_{i+1}`` (0-based i)."""
        e = [0] * self.n
        e[i] = 1
        return EnvElement(self, {tuple(e): Fraction(1)})

    def from_vector(self, v: Sequence) -> "EnvElement":
        """An element of g given in the original coordinates."""
        if len(v) != self.n:
            raise FormatError(f"vector must have length {self.n}")
        coords = matvec(self._to_adapted, [to_rational(x) for x in v])
        terms = {}
        for i, c in enumerate(coords):
            if c:
                e = [0] * self.n
                e[i] = 1
                terms[tuple(e)] = c
        return EnvElement(self, terms)

    def resolve(self, name: str) -> "EnvElement":
        """Generator by adapted name, or an original basis vector by name."""
        if name in self._index:
            return self.generator(self._index[name])
        if name in self._original:
            return self.from_vector(self.g.basis_vector(self._original[name]))
        raise FormatError(f"unknown generator {name!r}; known: {', '.join(self.names)}")

    def parse(self, text: str) -> "EnvElement":
        return expr.evaluate(expr.parse(text), self.resolve, self.one())

    # -- straightening --------------------------------------------------------

    def _mul_gen(self, i: int, mono: tuple) -> dict:
        """``x_i * x^mono`` as a dict of terms."""
        key = (i, mono)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        result = self._compute_mul_gen(i, mono)
        with self._lock:
            self._cache.setdefault(key, result)
        return result

    def _compute_mul_gen(self, i: int, mono: tuple) -> dict:
        j = next((k for k, e in enumerate(mono) if e), None)
        if j is None or i < j or (i == j and not self.parities[i]):
            e = list(mono)
            e[i] += 1
            return {tuple(e): Fraction(1)}
        rest = list(mono)
        rest[j] -= 1
        rest = tuple(rest)
        out: dict = {}
        if i == j:
            # odd square: y y = 1/2 [y, y]
            for k, c in self._br[i][i]:
                _accumulate(out, self._mul_gen(k, rest), c * HALF)
            return out
        # x_i x_j = s x_j x_i + [x_i, x_j], with j < i
        sign = -1 if self.parities[i] and self.parities[j] else 1
        for m, c in self._mul_gen(i, rest).items():
            _accumulate(out, self._mul_gen(j, m), c * sign)
        for k, c in self._br[i][j]:
            _accumulate(out, self._mul_gen(k, rest), c)
        return out

    def _mul_mono(self, a: tuple, b: tuple) -> dict:
        current = {b: Fraction(1)}
        for i in reversed(range(self.n)):
            for _ in range(a[i]):
                nxt: dict = {}
                for m, c in current.items():
                    _accumulate(nxt, self._mul_gen(i, m), c)
                current = nxt
        return current

    def multiply(self, u: "EnvElement", v: "EnvElement") -> "EnvElement":
        if u.algebra is not self or v.algebra is not self:
            raise FormatError("elements belong to different enveloping algebras")
        out: dict = {}
        for a, ca in u.terms.items():
            for b, cb in v.terms.items():
                _accumulate(out, self._mul_mono(a, b), ca * cb)
        return EnvElement(self, out)

    # -- bookkeeping ----------------------------------------------------------

    def monomial_parity(self, mono: tuple) -> int:
        return sum(e for e, p in zip(mono, self.parities) if p) % 2

    def monomial_str(self, mono: tuple) -> str:
        parts = []
        for name, e in zip(self.names, mono):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def pbw_monomials(self, degree: int) -> list[tuple]:
        """All PBW monomials of total degree at most ``degree``, graded-lex ascending."""
        out = []

        def rec(k: int, left: int, acc: list):
            if k == self.n:
                out.append(tuple(acc))
                return
            top = min(left, 1) if self.parities[k] else left
            for e in range(top + 1):
                acc.append(e)
                rec(k + 1, left - e, acc)
                acc.pop()

        rec(0, degree, [])
        out.sort(key=_grlex)
        return out

    @property
    def nilpotency_class(self) -> int:
        return self._class


def pbw_count(n_even: int, n_odd: int, degree: int) -> int:
    """Monomials of degree <= d in n_even polynomial and n_odd exterior variables."""
    return sum(comb(n_odd, k) * comb(degree - k + n_even, n_even) for k in range(min(n_odd, degree) + 1))


def _grlex(mono: tuple) -> tuple:
    return (sum(mono), mono)


def _accumulate(out: dict, terms: Mapping, scale) -> None:
    for m, c in terms.items():
        v = out.get(m, 0) + c * scale
        if v:
            out[m] = v
        else:
            out.pop(m, None)


class EnvElement:
    """Immutable element of U(g): PBW monomial -> nonzero rational."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: EnvelopingAlgebra, terms: Mapping[tuple, Fraction]):
        self.algebra = algebra
        self.terms = {m: Fraction(c) for m, c in terms.items() if c}

    def _same(self, other: "EnvElement") -> None:
        if other.algebra is not self.algebra:
            raise FormatError("elements belong to different enveloping algebras")

    def _lift(self, other) -> "EnvElement":
        if isinstance(other, EnvElement):
            self._same(other)
            return other
        return self.algebra.scalar(other)

    def __add__(self, other) -> "EnvElement":
        other = self._lift(other)
        out = dict(self.terms)
        _accumulate(out, other.terms, 1)
        return EnvElement(self.algebra, out)

    __radd__ = __add__

    def __neg__(self) -> "EnvElement":
        return EnvElement(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "EnvElement":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "EnvElement":
        return self._lift(other) - self

    def __mul__(self, other) -> "EnvElement":
        if isinstance(other, EnvElement):
            return self.algebra.multiply(self, other)
        c = to_rational(other)
        return EnvElement(self.algebra, {m: v * c for m, v in self.terms.items()})

    def __rmul__(self, other) -> "EnvElement":
        c = to_rational(other)
        return EnvElement(self.algebra, {m: v * c for m, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, EnvElement):
            return self.algebra is other.algebra and self.terms == other.terms
        try:
            return self == self.algebra.scalar(other)
        except (FormatError, TypeError):
            return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def parts(self) -> tuple["EnvElement", "EnvElement"]:
        """Even and odd components."""
        ev, od = {}, {}
        for m, c in self.terms.items():
            (od if self.algebra.monomial_parity(m) else ev)[m] = c
        return EnvElement(self.algebra, ev), EnvElement(self.algebra, od)

    def parity(self) -> int | None:
        """0 or 1 for homogeneous nonzero elements, None for mixed, 0 for zero."""
        ev, od = self.parts()
        if ev and od:
            return None
        return 1 if od else 0

    def is_homogeneous(self) -> bool:
        return self.parity() is not None

    def sorted_terms(self) -> list[tuple[tuple, Fraction]]:
        """Terms in descending graded-lex order (printing order)."""
        return sorted(self.terms.items(), key=lambda t: _grlex(t[0]), reverse=True)

    def __str__(self) -> str:
        A = self.algebra
        return expr.format_terms([(c, A.monomial_str(m)) for m, c in self.sorted_terms()])

    def __repr__(self) -> str:
        return f"EnvElement({self})"


# -- super operations ---------------------------------------------------------


def multiply(u: EnvElement, v: EnvElement) -> EnvElement:
    return u.algebra.multiply(u, v)


def supercommutator(u: EnvElement, v: EnvElement) -> EnvElement:
    """``uv - (-1)^{|u||v|} vu``, extended bilinearly over homogeneous parts."""
    total = u.algebra.zero()
    for pu, a in enumerate(u.parts()):
        if not a:
            continue
        for pv, b in enumerate(v.parts()):
            if not b:
                continue
            sign = -1 if pu and pv else 1
            total = total + a * b - (b * a) * sign
    return total


def sigma(u: EnvElement) -> EnvElement:
    """The involution ``a0 + a1 -> a0 - a1``."""
    A = u.algebra
    return EnvElement(A, {m: (-c if A.monomial_parity(m) else c) for m, c in u.terms.items()})


def _as_element(A: EnvelopingAlgebra, x) -> EnvElement:
    if isinstance(x, EnvElement):
        return x
    return A.from_vector(x)


def ad(x, u: EnvElement) -> EnvElement:
    """``ad x (u) = [[x, u]]`` for a homogeneous x in g (vector or element)."""
    A = u.algebra
    x = _as_element(A, x)
    if not x.is_homogeneous():
        raise PreconditionError("ad needs a homogeneous element")
    return supercommutator(x, u)


def ad_cap(A: EnvelopingAlgebra, u: EnvElement) -> int:
    """A-priori bound on the nilpotency index of ad x on u."""
    return A.nilpotency_class * (max(u.degree(), 0) + 1) + 1


def ad_nilpotency_index(x, u: EnvElement) -> int:
    """Smallest k with ``ad_x^k(u) = 0``."""
    A = u.algebra
    x = _as_element(A, x)
    cap = ad_cap(A, u)
    k = 0
    cur = u
    while cur:
        if k >= cap:
            raise PreconditionError(f"ad is not nilpotent within the bound {cap}; is the algebra nilpotent?")
        cur = ad(x, cur)
        k += 1
    return k


def is_supercentral(u: EnvElement) -> bool:
    """Whether u supercommutes with every generator."""
    A = u.algebra
    return all(not supercommutator(A.generator(i), u) for i in range(A.n))


def extract_supercentral(a: EnvElement) -> EnvElement:
    """A nonzero supercentral element obtained from a by iterated derivations.

    For t = 1..n in the adapted order, a is replaced by the last nonzero
    power ``d_t^k(a)`` of ``d_t = ad(x_t)``.  Earlier derivations keep
    killing the current element, which is checked after each step.
    """
    if not a:
        raise PreconditionError("cannot extract from the zero element")
    return _extract(a, None)


def _extract(a: EnvElement, reduce) -> EnvElement:
    A = a.algebra
    red = reduce if reduce is not None else (lambda e: e)
    a = red(a)
    for t in range(A.n):
        d = A.generator(t)
        cap = ad_cap(A, a)
        steps = 0
        while True:
            nxt = red(supercommutator(d, a))
            if not nxt:
                break
            a = nxt
            steps += 1
            if steps > cap:
                raise PreconditionError("derivation is not locally nilpotent within its bound")
        for s in range(t):
            if red(supercommutator(A.generator(s), a)):
                raise AssertionError(f"kernel of derivation {s + 1} not preserved at step {t + 1}")
    if reduce is None and not is_supercentral(a):
        raise AssertionError("extracted element is not supercentral")
    return a


# -- truncated spans and the supercentralizing chain --------------------------


class TruncatedSpan:
    """Echelon basis of a subspace of ``U(g)_{<= D}`` (pivot = leading monomial)."""

    def __init__(self, algebra: EnvelopingAlgebra, degree: int):
        self.algebra = algebra
        self.degree = degree
        self._rows: dict[tuple, dict] = {}

    def __len__(self) -> int:
        return len(self._rows)

    def reduce(self, u: EnvElement) -> EnvElement:
        terms = dict(u.terms)
        while True:
            heads = [m for m in terms if m in self._rows]
            if not heads:
                return EnvElement(self.algebra, terms)
            m = max(heads, key=_grlex)
            _accumulate(terms, self._rows[m], -terms[m])

    def contains(self, u: EnvElement) -> bool:
        return not self.reduce(u)

    def add(self, u: EnvElement) -> bool:
        """Insert u; returns False when it was already in the span."""
        if u.degree() > self.degree:
            raise PreconditionError(f"element of degree {u.degree()} exceeds the bound {self.degree}")
        r = self.reduce(u)
        if not r:
            return False
        lead = max(r.terms, key=_grlex)
        c = r.terms[lead]
        row = {m: v / c for m, v in r.terms.items()}
        # keep rows fully reduced against the new pivot
        for key, other in self._rows.items():
            if lead in other:
                _accumulate(other, row, -other[lead])
        self._rows[lead] = row
        return True


def left_multiples_span(s: EnvElement, degree: int, span: TruncatedSpan | None = None) -> TruncatedSpan:
    """Add ``m * s`` for PBW monomials m with ``deg m + deg s <= degree``."""
    A = s.algebra
    span = span if span is not None else TruncatedSpan(A, degree)
    for m in A.pbw_monomials(degree - s.degree()):
        span.add(A.element({m: 1}) * s)
    return span


def two_sided_span(gens: Iterable[EnvElement], degree: int) -> TruncatedSpan:
    """``m1 * g * m2`` with ``deg m1 + deg g + deg m2 <= degree``."""
    gens = list(gens)
    A = gens[0].algebra
    span = TruncatedSpan(A, degree)
    for g in gens:
        room = degree - g.degree()
        monos = A.pbw_monomials(room)
        for m1 in monos:
            left = A.element({m1: 1}) * g
            for m2 in monos:
                if sum(m1) + sum(m2) <= room:
                    span.add(left * A.element({m2: 1}))
    return span


@dataclass(frozen=True)
class ChainResult:
    """Supercentralizing chain at a degree bound; ``complete`` is False for partial runs."""

    elements: tuple
    complete: bool
    degree: int

    @property
    def partial(self) -> bool:
        return not self.complete


def supercentralizing_chain(gens: Sequence[EnvElement], degree: int, max_steps: int = 64) -> ChainResult:
    """Supercentral elements ``s_1, s_2, ..`` modulo the growing truncated span.

    Each step takes the first generator that is nonzero modulo the span,
    extracts an element that is supercentral modulo the span, and adds its
    left multiples of degree at most ``degree``.  Completion only certifies
    the degree-truncated statement.
    """
    gens = list(gens)
    if not gens:
        raise PreconditionError("at least one generator is required")
    for u in gens:
        if not u or not u.is_homogeneous():
            raise PreconditionError("generators must be nonzero and homogeneous")
    if degree < max(u.degree() for u in gens):
        raise PreconditionError(f"degree bound {degree} is below the generator degree")
    A = gens[0].algebra
    span = TruncatedSpan(A, degree)
    chain: list[EnvElement] = []
    for _ in range(max_steps):
        residues = [span.reduce(u) for u in gens]
        pending = [r for r in residues if r]
        if not pending:
            return ChainResult(tuple(chain), True, degree)
        s = _extract(pending[0], span.reduce)
        if not all(span.contains(supercommutator(A.generator(i), s)) for i in range(A.n)):
            return ChainResult(tuple(chain), False, degree)
        chain.append(s)
        before = len(span)
        left_multiples_span(s, degree, span)
        if len(span) == before:
            return ChainResult(tuple(chain), False, degree)
    return ChainResult(tuple(chain), False, degree)


# -- random elements (tests and demos) ----------------------------------------


def random_element(A: EnvelopingAlgebra, rng: random.Random, degree: int = 3, terms: int = 4,
                   parity: int | None = None, height: int = 5) -> EnvElement:
    """Seeded random element of degree <= ``degree``; homogeneous when ``parity`` is set."""
    monos = [m for m in A.pbw_monomials(degree) if parity is None or A.monomial_parity(m) == parity]
    if not monos:
        return A.zero()
    out = {}
    for _ in range(terms):
        m = rng.choice(monos)
        c = Fraction(rng.randint(-height, height), rng.randint(1, height))
        out[m] = out.get(m, Fraction(0)) + c
    return A.element(out)
