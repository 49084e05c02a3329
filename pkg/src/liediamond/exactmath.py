"""Exact scalars, sparse multivariate polynomials and exact linear algebra.

Scalars are :class:`fractions.Fraction` throughout.  Rational matrices are
plain lists of lists of fractions; polynomial matrices are lists of lists of
:class:`MultiPoly` sharing one variable tuple.

Pivoting is deterministic everywhere (first nonzero entry in a row-major
scan), so kernels and echelon bases are reproducible.
"""
from __future__ import annotations

import random
import re
from fractions import Fraction
from math import gcd
from typing import Mapping, Sequence

Rational = Fraction

__all__ = [
    "Rational",
    "FormatError",
    "to_rational",
    "format_rational",
    "MultiPoly",
    "zeros",
    "identity",
    "transpose",
    "matmul",
    "matvec",
    "rref",
    "rank",
    "rational_kernel",
    "solve",
    "inverse",
    "poly_rank",
    "eval_rank",
    "random_point",
]


class FormatError(ValueError):
    """Malformed input: bad rational literal, mismatched shapes or variables."""


_RATIONAL = re.compile(r"([+-]?\d+)(?:/(\d+))?")


def to_rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise FormatError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        m = _RATIONAL.fullmatch(value.strip())
        if not m or m.group(2) and int(m.group(2)) == 0:
            raise FormatError(f"not a rational literal: {value!r}")
        return Fraction(int(m.group(1)), int(m.group(2) or 1))
    raise FormatError(f"not a rational: {value!r}")


def format_rational(q: Fraction) -> str:
    """Lowest-terms ``p/q`` text; integers print without a denominator."""
    return str(Fraction(q))


# -- sparse polynomials -------------------------------------------------------


def _grlex(exps: tuple[int, ...]) -> tuple:
    return (sum(exps), exps)


class MultiPoly:
    """Sparse polynomial with rational coefficients.

    ``terms`` maps exponent tuples (one entry per variable) to nonzero
    fractions.  Instances are treated as immutable.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, object] | None = None):
        self.variables = tuple(variables)
        clean = {}
        nvars = len(self.variables)
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise FormatError(f"bad exponent vector {exps} for {nvars} variables")
            c = to_rational(coeff)
            if c:
                clean[exps] = clean.get(exps, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def _raw(cls, variables: tuple, terms: dict) -> "MultiPoly":
        p = object.__new__(cls)
        p.variables = variables
        p.terms = terms
        return p

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "MultiPoly":
        return cls._raw(tuple(variables), {})

    @classmethod
    def constant(cls, variables: Sequence[str], value) -> "MultiPoly":
        variables = tuple(variables)
        c = to_rational(value)
        return cls._raw(variables, {(0,) * len(variables): c} if c else {})

    @classmethod
    def linear_form(cls, variables: Sequence[str], coeffs: Sequence) -> "MultiPoly":
        """The form ``sum(coeffs[k] * variables[k])``."""
        variables = tuple(variables)
        n = len(variables)
        if len(coeffs) != n:
            raise FormatError("coefficient count must match variable count")
        terms = {}
        for k, c in enumerate(coeffs):
            c = to_rational(c)
            if c:
                e = [0] * n
                e[k] = 1
                terms[tuple(e)] = c
        return cls._raw(variables, terms)

    @classmethod
    def variable(cls, name: str, variables: Sequence[str]) -> "MultiPoly":
        variables = tuple(variables)
        if name not in variables:
            raise FormatError(f"unknown variable {name!r}")
        return cls.linear_form(variables, [int(v == name) for v in variables])

    # arithmetic

    def _check(self, other: "MultiPoly") -> None:
        if other.variables != self.variables:
            raise FormatError(f"variable mismatch: {self.variables} vs {other.variables}")

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        return MultiPoly.constant(self.variables, other)

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MultiPoly._raw(self.variables, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MultiPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            c = to_rational(other)
            if not c:
                return MultiPoly._raw(self.variables, {})
            return MultiPoly._raw(self.variables, {e: c * v for e, v in self.terms.items()})
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly._raw(self.variables, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def exact_div(self, other: "MultiPoly") -> "MultiPoly":
        """Quotient of an exact division; raises ArithmeticError otherwise."""
        self._check(other)
        if not other.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        lead_d = max(other.terms, key=_grlex)
        lead_c = other.terms[lead_d]
        rest = dict(self.terms)
        quot: dict = {}
        while rest:
            lead_r = max(rest, key=_grlex)
            m = tuple(a - b for a, b in zip(lead_r, lead_d))
            if any(x < 0 for x in m):
                raise ArithmeticError("polynomial division is not exact")
            c = rest[lead_r] / lead_c
            quot[m] = c
            for e, v in other.terms.items():
                k = tuple(a + b for a, b in zip(e, m))
                r = rest.get(k, 0) - c * v
                if r:
                    rest[k] = r
                else:
                    rest.pop(k, None)
        return MultiPoly._raw(self.variables, quot)

    # queries

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != len(self.variables):
            raise FormatError("point length must match variable count")
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t *= Fraction(x) ** k
            total += t
        return total

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.variables == other.variables and self.terms == other.terms
        try:
            return self == MultiPoly.constant(self.variables, other)
        except FormatError:
            return NotImplemented

    def __hash__(self) -> int:
        return hash((self.variables, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"MultiPoly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=_grlex, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, e) if k
            )
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)}*{mono}"
            parts.append((sign, body))
        head_sign, head = parts[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


# -- rational matrices --------------------------------------------------------


def zeros(rows: int, cols: int) -> list[list[Fraction]]:
    return [[Fraction(0)] * cols for _ in range(rows)]


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(M: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*M)]


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list[Fraction]]:
    if A and B and len(A[0]) != len(B):
        raise FormatError("inner dimensions differ")
    cols = len(B[0]) if B else 0
    Bt = transpose(B) if B else [[] for _ in range(cols)]
    return [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in Bt] for row in A]


def matvec(A: Sequence[Sequence], v: Sequence) -> list[Fraction]:
    return [sum((a * x for a, x in zip(row, v)), Fraction(0)) for row in A]


def rref(M: Sequence[Sequence], cols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns.  Zero rows are dropped."""
    A = [[Fraction(x) for x in row] for row in M]
    ncols = cols if cols is not None else (len(A[0]) if A else 0)
    for row in A:
        if len(row) != ncols:
            raise FormatError("ragged matrix")
    pivots: list[int] = []
    r = 0
    nrows = len(A)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        pr = A[r]
        inv = 1 / pr[c]
        if inv != 1:
            A[r] = pr = [x * inv for x in pr]
        for i in range(nrows):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], pr)]
        pivots.append(c)
        r += 1
    return A[:r], pivots


class Echelon:
    """Incrementally built row echelon basis (pivot -> row with leading 1)."""

    __slots__ = ("cols", "rows", "_sparse")

    def __init__(self, cols: int):
        self.cols = cols
        self.rows: dict[int, list[Fraction]] = {}
        self._sparse: dict[int, list[tuple]] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, v: Sequence) -> list[Fraction]:
        out = [Fraction(x) for x in v]
        for p in sorted(self.rows):
            c = out[p]
            if c:
                out[p] = Fraction(0)
                for k, b in self._sparse[p]:
                    out[k] -= c * b
        return out

    def add(self, v: Sequence) -> bool:
        """Insert v; False when it already lies in the span."""
        r = self.reduce(v)
        p = next((k for k, x in enumerate(r) if x), None)
        if p is None:
            return False
        inv = 1 / r[p]
        row = [x * inv for x in r]
        self.rows[p] = row
        self._sparse[p] = [(k, x) for k, x in enumerate(row) if x and k != p]
        return True


def rank(M: Sequence[Sequence], cols: int | None = None) -> int:
    return len(rref(M, cols)[1])


def rational_kernel(M: Sequence[Sequence], cols: int | None = None) -> list[list[Fraction]]:
    """Basis of the right kernel ``{v : M v = 0}``.

    One vector per free column f: a 1 in position f and the negated reduced
    entries at the pivot positions.  ``cols`` is required when M has no rows.
    """
    ncols = cols if cols is not None else (len(M[0]) if M else 0)
    R, pivots = rref(M, ncols)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve(M: Sequence[Sequence], b: Sequence, cols: int | None = None) -> list[Fraction] | None:
    """One solution of ``M x = b`` (free variables set to 0), or None."""
    ncols = cols if cols is not None else (len(M[0]) if M else 0)
    if len(b) != len(M):
        raise FormatError("right-hand side length must equal row count")
    aug = [list(row) + [Fraction(x)] for row, x in zip(M, b)]
    R, pivots = rref(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(R, pivots):
        x[p] = row[ncols]
    return x


def inverse(M: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(M)
    aug = [list(row) + e for row, e in zip(M, identity(n))]
    R, pivots = rref(aug, 2 * n)
    if len(pivots) < n or pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in R]


# -- ranks of polynomial matrices ---------------------------------------------


def _shared_variables(M: Sequence[Sequence[MultiPoly]]) -> tuple[str, ...] | None:
    variables = None
    width = None
    for row in M:
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise FormatError("ragged polynomial matrix")
        for entry in row:
            if variables is None:
                variables = entry.variables
            elif entry.variables != variables:
                raise FormatError(
                    f"entries use different variable lists: {variables} vs {entry.variables}"
                )
    return variables


def eval_rank(M: Sequence[Sequence[MultiPoly]], point: Sequence) -> int:
    """Rank of the rational matrix obtained by evaluating every entry at point."""
    variables = _shared_variables(M)
    if variables is None:
        return 0
    if len(point) != len(variables):
        raise FormatError(f"point has length {len(point)}, expected {len(variables)}")
    pt = [to_rational(x) for x in point]
    return rank([[e.evaluate(pt) for e in row] for row in M], len(M[0]))


def _is_skew(M: Sequence[Sequence[MultiPoly]]) -> bool:
    n = len(M)
    if any(len(row) != n for row in M):
        return False
    return all((M[i][j] + M[j][i]).is_zero for i in range(n) for j in range(i, n))


def poly_rank(M: Sequence[Sequence[MultiPoly]], *, seed: int = 0) -> int:
    """Rank over the fraction field of the polynomial ring.

    Fraction-free (Bareiss) elimination with full pivoting; the pivot is the
    first nonzero entry of the trailing block in row-major order.  When one
    evaluation at a seeded random point already attains the largest rank the
    shape allows, that value is returned without symbolic elimination (it is
    then exact, since evaluation can only lower the rank).
    """
    variables = _shared_variables(M)
    if variables is None or not M or not M[0]:
        return 0
    rows, cols = len(M), len(M[0])
    ceiling = min(rows, cols)
    if _is_skew(M):
        ceiling -= ceiling % 2
    rng = random.Random(seed)
    if eval_rank(M, random_point(rng, len(variables))) == ceiling:
        return ceiling

    return _bareiss_rank(M, variables)


def _pack_matrix(M, variables) -> tuple[list[list[dict]], int]:
    """Integer-coefficient copy of M with exponent vectors packed into ints.

    Each row is scaled by the lcm of its denominators (rank is unchanged).
    A key stores the total degree in the top field and the exponents below
    it, variable 0 most significant, so integer order is graded-lex order and
    monomial multiplication is key addition.
    """
    max_deg = max((e.degree() for row in M for e in row), default=0)
    width = max(6, (max_deg * min(len(M), len(M[0])) + 1).bit_length() + 1)
    packed = []
    for row in M:
        den = 1
        for e in row:
            for c in e.terms.values():
                den = den * c.denominator // gcd(den, c.denominator)
        prow = []
        for e in row:
            d = {}
            for exps, c in e.terms.items():
                key = sum(exps)
                for x in exps:
                    key = (key << width) | x
                d[key] = int(c * den)
            prow.append(d)
        packed.append(prow)
    return packed, width


def _zmul(a: dict, b: dict) -> dict:
    out: dict = {}
    get = out.get
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = ka + kb
            out[k] = get(k, 0) + ca * cb
    return {k: c for k, c in out.items() if c}


def _zsub(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, 0) - c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def _zexact_div(a: dict, b: dict, guard: int) -> dict:
    """Exact quotient a / b over Z; ``guard`` has the top bit of every field set."""
    lead_b = max(b)
    cb = b[lead_b]
    rest = dict(a)
    quot = {}
    while rest:
        lead = max(rest)
        if ((lead | guard) - lead_b) & guard != guard:
            raise ArithmeticError("polynomial division is not exact")
        q, r = divmod(rest[lead], cb)
        if r:
            raise ArithmeticError("polynomial division is not exact")
        m = lead - lead_b
        quot[m] = q
        for k, c in b.items():
            kk = k + m
            v = rest.get(kk, 0) - q * c
            if v:
                rest[kk] = v
            else:
                del rest[kk]
    return quot


def _bareiss_rank(M, variables) -> int:
    A, width = _pack_matrix(M, variables)
    fields = len(variables) + 1
    guard = sum(1 << (width * i + width - 1) for i in range(fields))
    rows, cols = len(A), len(A[0])
    prev = None
    r = 0
    while r < min(rows, cols):
        pivot = None
        for i in range(r, rows):
            for j in range(r, cols):
                if A[i][j]:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        pi, pj = pivot
        A[r], A[pi] = A[pi], A[r]
        if pj != r:
            for row in A:
                row[r], row[pj] = row[pj], row[r]
        p = A[r][r]
        top = A[r]
        for i in range(r + 1, rows):
            row = A[i]
            lead = row[r]
            for j in range(r + 1, cols):
                num = _zmul(p, row[j]) if row[j] else {}
                if lead and top[j]:
                    num = _zsub(num, _zmul(lead, top[j]))
                row[j] = _zexact_div(num, prev, guard) if (prev is not None and num) else num
            row[r] = {}
        prev = p
        r += 1
    return r


def random_point(rng: random.Random, n: int, bound: int = 10_000) -> list[Fraction]:
    """Integer point with coordinates uniform in ``[-bound, bound]``."""
    return [Fraction(rng.randint(-bound, bound)) for _ in range(n)]
