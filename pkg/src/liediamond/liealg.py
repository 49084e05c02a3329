"""Finite-dimensional Lie superalgebras given by rational structure constants.

Basis vectors are indexed ``0..n-1`` internally, the first ``dim_even`` of
them even and the remaining ``dim_odd`` odd.  Brackets are supplied for index
pairs ``i <= j`` (``i == j`` only for odd ``i``); the opposite order is
filled in by super-antisymmetry ``[x_j, x_i] = -(-1)^{|i||j|} [x_i, x_j]``.
"""
from __future__ import annotations

import random
from math import lcm
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import AxiomViolationError, FormatError, NotNilpotentError
from .exactmath import Echelon, identity, inverse, matvec, rank, rref, rational_kernel, to_rational

Vector = tuple  # tuple of Fractions, one coordinate per basis vector


def _vec(values, n: int) -> tuple:
    if isinstance(values, Mapping):
        out = [Fraction(0)] * n
        for k, c in values.items():
            if not 0 <= int(k) < n:
                raise FormatError(f"coefficient index {k} out of range")
            out[int(k)] += to_rational(c)
        return tuple(out)
    values = tuple(to_rational(c) for c in values)
    if len(values) != n:
        raise FormatError(f"vector of length {len(values)}, expected {n}")
    return values


@dataclass(frozen=True)
class Violation:
    """First failed axiom: ``kind`` is grading, antisymmetry or jacobi.

    ``indices`` are 1-based basis indices; ``residual`` is the offending
    vector (None when not meaningful).
    """

    kind: str
    indices: tuple
    residual: tuple | None = None

    def __str__(self) -> str:
        idx = ",".join(str(i) for i in self.indices)
        msg = f"{self.kind} violation at ({idx})"
        if self.residual is not None:
            msg += " residual [" + ", ".join(str(c) for c in self.residual) + "]"
        return msg


class LieSuperAlgebra:
    """Lie superalgebra ``g = g_0 + g_1`` by structure constants.

    Parameters
    ----------
    dim_even, dim_odd:
        Dimensions of the even and odd parts.
    brackets:
        Mapping ``(i, j) -> coefficients`` with 0-based indices; coefficients
        are a length-n sequence or a sparse ``{k: c}`` mapping.
    names:
        Basis labels, defaulting to ``e1..en``.

    Instances are immutable; equality compares dimensions and structure
    constants, not names.
    """

    def __init__(
        self,
        dim_even: int,
        dim_odd: int = 0,
        brackets: Mapping | None = None,
        names: Sequence[str] | None = None,
    ):
        if dim_even < 0 or dim_odd < 0:
            raise FormatError("dimensions must be non-negative")
        self.dim_even = int(dim_even)
        self.dim_odd = int(dim_odd)
        n = self.dim
        if names is None:
            names = [f"e{i + 1}" for i in range(n)]
        names = tuple(str(s) for s in names)
        if len(names) != n:
            raise FormatError(f"{len(names)} names for a {n}-dimensional algebra")
        if len(set(names)) != n:
            raise FormatError("basis names must be distinct")
        self.names = names

        raw: dict = {}
        for (i, j), coeffs in (brackets or {}).items():
            i, j = int(i), int(j)
            if not (0 <= i < n and 0 <= j < n):
                raise FormatError(f"bracket index ({i + 1},{j + 1}) out of range")
            v = _vec(coeffs, n)
            if any(v):
                raw[(i, j)] = v
        self._raw = raw

        zero = (Fraction(0),) * n
        table = [[zero] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                if (i, j) in raw:
                    v = raw[(i, j)]
                elif (j, i) in raw:
                    s = self._swap_sign(i, j)
                    v = tuple(-s * c for c in raw[(j, i)])
                else:
                    continue
                table[i][j] = v
                if j != i:
                    s = self._swap_sign(i, j)
                    table[j][i] = tuple(-s * c for c in v)
        self._table = table
        self._sparse = [
            [tuple((k, c) for k, c in enumerate(table[i][j]) if c) for j in range(n)]
            for i in range(n)
        ]

    # basic data

    @property
    def dim(self) -> int:
        return self.dim_even + self.dim_odd

    def parity(self, i: int) -> int:
        return 0 if i < self.dim_even else 1

    @property
    def parities(self) -> tuple:
        return tuple(self.parity(i) for i in range(self.dim))

    def _swap_sign(self, i: int, j: int) -> int:
        return -1 if self.parity(i) and self.parity(j) else 1

    @property
    def brackets(self) -> dict:
        """Canonical nonzero structure constants ``{(i, j): vector}``, ``i <= j``."""
        out = {}
        for i in range(self.dim):
            for j in range(i, self.dim):
                if self._sparse[i][j]:
                    out[(i, j)] = self._table[i][j]
        return out

    def basis_bracket(self, i: int, j: int) -> tuple:
        return self._table[i][j]

    def sparse_bracket(self, i: int, j: int) -> tuple:
        """Nonzero ``(k, c)`` pairs of ``[x_i, x_j]``."""
        return self._sparse[i][j]

    def basis_vector(self, i: int) -> tuple:
        return tuple(Fraction(int(k == i)) for k in range(self.dim))

    def zero_vector(self) -> tuple:
        return (Fraction(0),) * self.dim

    def is_abelian(self) -> bool:
        return not any(any(row) for row in self._sparse)

    def bracket(self, u: Sequence, v: Sequence) -> tuple:
        return bracket(self, u, v)

    def vector_parity(self, v: Sequence) -> str:
        even = any(v[: self.dim_even])
        odd = any(v[self.dim_even :])
        if even and odd:
            return "mixed"
        return "odd" if odd else "even"

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieSuperAlgebra):
            return NotImplemented
        return (
            self.dim_even == other.dim_even
            and self.dim_odd == other.dim_odd
            and self._table == other._table
        )

    def __hash__(self) -> int:
        return hash((self.dim_even, self.dim_odd, tuple(sorted(self.brackets.items()))))

    def __repr__(self) -> str:
        return f"LieSuperAlgebra(dim_even={self.dim_even}, dim_odd={self.dim_odd}, nonzero_brackets={len(self.brackets)})"


def _integer_table(g: LieSuperAlgebra) -> tuple[int, list]:
    """``(D, T)`` with ``D * [x_i, x_j] = sum_k T[i][j] k-entries`` in integers."""
    den = 1
    for row in g._sparse:
        for entry in row:
            for _, c in entry:
                den = lcm(den, c.denominator)
    table = [[tuple((k, int(c * den)) for k, c in entry) for entry in row] for row in g._sparse]
    return den, table


def _scaled(v: Sequence) -> tuple[int, list]:
    den = 1
    for x in v:
        if x:
            den = lcm(den, Fraction(x).denominator)
    return den, [int(x * den) if x else 0 for x in v]


def bracket(g: LieSuperAlgebra, u: Sequence, v: Sequence) -> tuple:
    """Bilinear extension of the structure constants."""
    n = g.dim
    if len(u) != n or len(v) != n:
        raise FormatError(f"vectors must have length {n}")
    den, table = _memo(g, "int-table", lambda: _integer_table(g))
    du, iu = _scaled(u)
    dv, iv = _scaled(v)
    out = [0] * n
    vs = [(j, b) for j, b in enumerate(iv) if b]
    for i, a in enumerate(iu):
        if not a:
            continue
        row = table[i]
        for j, b in vs:
            ab = a * b
            for k, c in row[j]:
                out[k] += ab * c
    scale = den * du * dv
    return tuple(Fraction(x, scale) if x else _ZERO for x in out)


_ZERO = Fraction(0)


# -- axioms -------------------------------------------------------------------


def validate(g: LieSuperAlgebra) -> Violation | None:
    """Return None when all axioms hold, else the first violation found.

    Checked in order: grading, super-antisymmetry (including doubly stored
    pairs and even squares), super-Jacobi on all triples ``i <= j <= k``.
    """
    n = g.dim
    p = g.parity
    for (i, j), v in sorted(g._raw.items()):
        want = (p(i) + p(j)) % 2
        bad = tuple(c if p(k) != want else Fraction(0) for k, c in enumerate(v))
        if any(bad):
            return Violation("grading", (i + 1, j + 1), bad)
    for (i, j), v in sorted(g._raw.items()):
        if i == j and not p(i):
            return Violation("antisymmetry", (i + 1, i + 1), v)
        if i < j and (j, i) in g._raw:
            s = g._swap_sign(i, j)
            resid = tuple(a + s * b for a, b in zip(v, g._raw[(j, i)]))
            if any(resid):
                return Violation("antisymmetry", (i + 1, j + 1), resid)
    T = g._table
    for i in range(n):
        for j in range(i, n):
            for k in range(j, n):
                resid = _jacobi_residual(g, T, i, j, k)
                if any(resid):
                    return Violation("jacobi", (i + 1, j + 1, k + 1), resid)
    return None


def _jacobi_residual(g, T, x, y, z) -> tuple:
    p = g.parity
    out = [Fraction(0)] * g.dim
    for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
        sign = -1 if p(a) and p(c) else 1
        for m, coef in g._sparse[b][c]:
            for k, d in g._sparse[a][m]:
                out[k] += sign * coef * d
    return tuple(out)


def check_valid(g: LieSuperAlgebra) -> LieSuperAlgebra:
    """Raise :class:`AxiomViolationError` unless ``validate(g)`` is None."""
    v = validate(g)
    if v is not None:
        raise AxiomViolationError(v)
    return g


# -- subspaces ----------------------------------------------------------------


class Subspace:
    """Subspace of ``Q^n`` stored by its reduced row echelon basis."""

    __slots__ = ("ambient", "basis", "pivots", "_rows")

    def __init__(self, vectors: Sequence[Sequence], ambient: int):
        rows, pivots = rref([list(v) for v in vectors], ambient)
        self.ambient = ambient
        self.basis = tuple(tuple(r) for r in rows)
        self.pivots = tuple(pivots)
        self._rows = tuple((p, [(k, x) for k, x in enumerate(r) if x and k != p]) for r, p in zip(self.basis, self.pivots))

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(identity(n), n)

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls([], n)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def codim(self) -> int:
        return self.ambient - self.dim

    def reduce(self, v: Sequence) -> tuple:
        """Residual of v after eliminating the pivot coordinates."""
        out = [Fraction(x) for x in v]
        for p, row in self._rows:
            c = out[p]
            if c:
                out[p] = _ZERO
                for k, b in row:
                    out[k] -= c * b
        return tuple(out)

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def coordinates(self, v: Sequence) -> tuple:
        """Coefficients of v in the echelon basis (v must lie in the span)."""
        if not self.contains(v):
            raise ValueError("vector not in subspace")
        return tuple(Fraction(v[p]) for p in self.pivots)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.basis + other.basis, self.ambient)

    def intersect(self, other: "Subspace") -> "Subspace":
        if not self.dim or not other.dim:
            return Subspace.zero(self.ambient)
        # a.basis = b.basis  <=>  [A^T | -B^T] (a, b) = 0
        cols = self.dim + other.dim
        M = [
            [self.basis[r][k] for r in range(self.dim)] + [-other.basis[r][k] for r in range(other.dim)]
            for k in range(self.ambient)
        ]
        vecs = []
        for sol in rational_kernel(M, cols):
            a = sol[: self.dim]
            vecs.append([sum((a[r] * self.basis[r][k] for r in range(self.dim)), Fraction(0)) for k in range(self.ambient)])
        return Subspace(vecs, self.ambient)

    def complement_indices(self) -> tuple:
        """Standard basis indices at non-pivot columns (a complement)."""
        piv = set(self.pivots)
        return tuple(k for k in range(self.ambient) if k not in piv)

    def homogeneous_parts(self, dim_even: int) -> tuple["Subspace", "Subspace"]:
        even = [tuple(v[:dim_even]) + (Fraction(0),) * (self.ambient - dim_even) for v in self.basis]
        odd = [(Fraction(0),) * dim_even + tuple(v[dim_even:]) for v in self.basis]
        return Subspace(even, self.ambient), Subspace(odd, self.ambient)

    def is_graded(self, dim_even: int) -> bool:
        even, odd = self.homogeneous_parts(dim_even)
        return self.contains_subspace(even) and self.contains_subspace(odd)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


def span(g: LieSuperAlgebra, vectors: Sequence[Sequence]) -> Subspace:
    return Subspace(vectors, g.dim)


def bracket_spaces(g: LieSuperAlgebra, A: Subspace, B: Subspace) -> Subspace:
    """``[A, B]`` as the span of brackets of basis vectors."""
    ech = Echelon(g.dim)
    keep = []
    for a in A.basis:
        for b in B.basis:
            v = bracket(g, a, b)
            if any(v) and ech.add(v):
                keep.append(v)
    return Subspace(keep, g.dim)


def is_ideal(g: LieSuperAlgebra, S: Subspace) -> bool:
    return all(S.contains(bracket(g, g.basis_vector(i), v)) for i in range(g.dim) for v in S.basis)


def is_abelian_subspace(g: LieSuperAlgebra, S: Subspace) -> bool:
    return all(not any(bracket(g, u, v)) for u in S.basis for v in S.basis)


# -- series and centres -------------------------------------------------------


def _memo(g: LieSuperAlgebra, key: str, compute):
    # algebras are immutable, so derived data can be cached on the instance
    cache = g.__dict__.setdefault("_memo", {})
    if key not in cache:
        cache[key] = compute()
    return cache[key]


def lower_central_series(g: LieSuperAlgebra) -> list[Subspace]:
    """``C^0 = g, C^{k+1} = [g, C^k]`` until zero or stable.

    For nilpotent g the list ends with the zero subspace; otherwise it ends
    with the first repeated (stable, nonzero) term, listed once.
    """
    return list(_memo(g, "lcs", lambda: _lower_central_series(g)))


def _lower_central_series(g: LieSuperAlgebra) -> tuple:
    n = g.dim
    full = Subspace.full(n)
    series = [full]
    while series[-1].dim:
        nxt = bracket_spaces(g, full, series[-1])
        if nxt.dim == series[-1].dim:
            break
        series.append(nxt)
    return tuple(series)


def derived_subalgebra(g: LieSuperAlgebra) -> Subspace:
    series = lower_central_series(g)
    return series[1] if len(series) > 1 else Subspace.zero(g.dim)


def center(g: LieSuperAlgebra) -> Subspace:
    return _memo(g, "center", lambda: _center(g))


def _center(g: LieSuperAlgebra) -> Subspace:
    n = g.dim
    rows = []
    for j in range(n):
        for k in range(n):
            row = [g._table[i][j][k] for i in range(n)]
            if any(row):
                rows.append(row)
    return Subspace(rational_kernel(rows, n), n)


def centralizer(g: LieSuperAlgebra, S: Subspace) -> Subspace:
    """``{x : [x, s] = 0 for all s in S}``."""
    n = g.dim
    rows = []
    for s in S.basis:
        cols = [bracket(g, g.basis_vector(i), s) for i in range(n)]
        for k in range(n):
            row = [cols[i][k] for i in range(n)]
            if any(row):
                rows.append(row)
    return Subspace(rational_kernel(rows, n), n)


def is_nilpotent(g: LieSuperAlgebra) -> tuple[bool, int | None]:
    """``(True, class)`` with class = number of nonzero series terms, or ``(False, None)``."""
    series = lower_central_series(g)
    if series[-1].dim:
        return False, None
    return True, len(series) - 1


def nilpotency_class(g: LieSuperAlgebra) -> int:
    ok, c = is_nilpotent(g)
    if not ok:
        raise NotNilpotentError("lower central series does not reach 0")
    return c


def even_part(g: LieSuperAlgebra) -> LieSuperAlgebra:
    """The Lie algebra ``g_0`` on the first ``dim_even`` basis vectors (g itself when purely even)."""
    if not g.dim_odd:
        return g
    m = g.dim_even
    br = {}
    for (i, j), v in g.brackets.items():
        if j < m:
            br[(i, j)] = v[:m]
    return LieSuperAlgebra(m, 0, br, g.names[:m])


# -- constructions ------------------------------------------------------------


def abelian(dim_even: int, dim_odd: int = 0, prefix: str = "a") -> LieSuperAlgebra:
    names = [f"{prefix}{i + 1}" for i in range(dim_even)]
    names += [f"{prefix}{dim_even + i + 1}" for i in range(dim_odd)]
    return LieSuperAlgebra(dim_even, dim_odd, {}, names)


def _product_layout(g1: LieSuperAlgebra, g2: LieSuperAlgebra) -> tuple[list[int], list[int]]:
    """New positions of the basis vectors of g1 and g2 in ``g1 x g2``."""
    m1, m2 = g1.dim_even, g2.dim_even
    pos1 = [i if i < m1 else m2 + i for i in range(g1.dim)]
    pos2 = [m1 + i if i < m2 else g1.dim + i for i in range(g2.dim)]
    return pos1, pos2


def direct_product(g1: LieSuperAlgebra, g2: LieSuperAlgebra) -> LieSuperAlgebra:
    """Block-diagonal product; even parts first (g1 then g2), then odd parts."""
    pos1, pos2 = _product_layout(g1, g2)
    n = g1.dim + g2.dim
    brackets = {}
    for g, pos in ((g1, pos1), (g2, pos2)):
        for (i, j), v in g.brackets.items():
            a, b = pos[i], pos[j]
            w = [Fraction(0)] * n
            for k, c in enumerate(v):
                w[pos[k]] = c
            if a <= b:
                brackets[(a, b)] = w
            else:
                s = -1 if g.parity(i) and g.parity(j) else 1
                brackets[(b, a)] = [-s * c for c in w]
    names = [None] * n
    taken: set = set()
    for g, pos in ((g1, pos1), (g2, pos2)):
        for i, name in enumerate(g.names):
            cand = name
            k = 2
            while cand in taken:
                cand = f"{name}_{k}"
                k += 1
            taken.add(cand)
            names[pos[i]] = cand
    return LieSuperAlgebra(g1.dim_even + g2.dim_even, g1.dim_odd + g2.dim_odd, brackets, names)


def structure_in_basis(g: LieSuperAlgebra, vectors: Sequence[Sequence]) -> list[list[tuple]]:
    """Table ``T[i][j]`` = coordinates of ``[b_i, b_j]`` in the basis ``b``."""
    n = g.dim
    P = [[Fraction(vectors[k][r]) for k in range(n)] for r in range(n)]  # columns are b_k
    Pinv = inverse(P)
    kinds = [g.vector_parity(v) for v in vectors]
    par = [k == "odd" for k in kinds]
    # homogeneous bases only need the upper triangle
    mirror = "mixed" not in kinds
    T = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i if mirror else 0, n):
            t = tuple(matvec(Pinv, bracket(g, vectors[i], vectors[j])))
            T[i][j] = t
            if mirror and j != i:
                T[j][i] = t if par[i] and par[j] else tuple(-c for c in t)
    return T


def change_basis(g: LieSuperAlgebra, P: Sequence[Sequence], names: Sequence[str] | None = None) -> LieSuperAlgebra:
    """Rewrite g in the basis whose k-th vector is column k of P.

    P must be invertible and preserve the grading (even columns supported on
    even coordinates, odd columns on odd ones).
    """
    n = g.dim
    if len(P) != n or any(len(row) != n for row in P):
        raise FormatError(f"change of basis must be {n}x{n}")
    for r in range(n):
        for c in range(n):
            if P[r][c] and g.parity(r) != g.parity(c):
                raise FormatError("change of basis must preserve the grading")
    cols = [[Fraction(P[r][k]) for r in range(n)] for k in range(n)]
    T = structure_in_basis(g, cols)
    br = {}
    for i in range(n):
        for j in range(i, n):
            if any(T[i][j]):
                br[(i, j)] = T[i][j]
    return LieSuperAlgebra(g.dim_even, g.dim_odd, br, names if names is not None else g.names)


def random_conjugator(g: LieSuperAlgebra, rng: random.Random, height: int = 5) -> list[list[Fraction]]:
    """Random invertible grading-preserving matrix with entries ``p/q``, ``|p|, q <= height``."""
    def block(m: int) -> list[list[Fraction]]:
        while True:
            B = [[Fraction(rng.randint(-height, height), rng.randint(1, height)) for _ in range(m)] for _ in range(m)]
            if rank(B, m) == m:
                return B
    n, m0 = g.dim, g.dim_even
    E, O = block(m0), block(g.dim_odd)
    P = [[Fraction(0)] * n for _ in range(n)]
    for r in range(m0):
        for c in range(m0):
            P[r][c] = E[r][c]
    for r in range(g.dim_odd):
        for c in range(g.dim_odd):
            P[m0 + r][m0 + c] = O[r][c]
    return P


def conjugate(g: LieSuperAlgebra, rng: random.Random, height: int = 5) -> tuple[LieSuperAlgebra, list]:
    P = random_conjugator(g, rng, height)
    return change_basis(g, P), P


# -- adapted bases ------------------------------------------------------------


@dataclass(frozen=True)
class AdaptedBasis:
    """Homogeneous basis ``x_1..x_n`` refining the lower central series.

    ``vectors[i]`` are coordinates in the original basis.  Each prefix span
    ``<x_1..x_i>`` is an ideal with ``[g, <x_1..x_i>]`` inside
    ``<x_1..x_{i-1}>``.  ``series_dims`` are the dimensions of the lower
    central series the flag refines.
    """

    vectors: tuple
    parities: tuple
    series_dims: tuple = field(default=())

    def __len__(self) -> int:
        return len(self.vectors)

    def matrix(self) -> list[list[Fraction]]:
        """Columns are the adapted vectors."""
        n = len(self.vectors)
        return [[self.vectors[k][r] for k in range(n)] for r in range(n)]


def refined_adapted_basis(g: LieSuperAlgebra) -> AdaptedBasis:
    """Refine the lower central series into a flag with 1-dimensional steps.

    Works upward from the deepest nonzero term.  Within each layer the
    candidates are tried in this order: standard basis vectors in index order
    (even before odd), then the echelon basis of the layer; a candidate is
    taken when independent of what has been chosen so far.
    """
    series = lower_central_series(g)
    if series[-1].dim:
        raise NotNilpotentError("refined central series requires a nilpotent algebra")
    n = g.dim
    chosen: list[tuple] = []
    current = Subspace.zero(n)
    for layer in reversed(series[:-1]):
        even, odd = layer.homogeneous_parts(g.dim_even)
        candidates = [g.basis_vector(i) for i in range(n) if layer.contains(g.basis_vector(i))]
        candidates += list(even.basis) + list(odd.basis)
        for v in candidates:
            if current.dim == layer.dim:
                break
            if not current.contains(v):
                chosen.append(tuple(v))
                current = Subspace(list(current.basis) + [v], n)
    basis = AdaptedBasis(
        tuple(chosen),
        tuple(0 if g.vector_parity(v) == "even" else 1 for v in chosen),
        tuple(s.dim for s in series),
    )
    if not check_flag(g, basis):
        raise AssertionError("adapted basis fails the flag condition")
    return basis


def check_flag(g: LieSuperAlgebra, basis: AdaptedBasis) -> bool:
    """``[g, <x_1..x_i>]`` is contained in ``<x_1..x_{i-1}>`` for every i."""
    n = g.dim
    if len(basis.vectors) != n or rank([list(v) for v in basis.vectors], n) != n:
        return False
    if any(g.vector_parity(v) == "mixed" for v in basis.vectors):
        return False
    for i, x in enumerate(basis.vectors):
        below = Subspace(list(basis.vectors[:i]), n)
        for k in range(n):
            if not below.contains(bracket(g, g.basis_vector(k), x)):
                return False
    return True


# -- abelian factors ----------------------------------------------------------


@dataclass(frozen=True)
class StrippedAlgebra:
    """``g`` rewritten as ``core x abelian(k_even | k_odd)``.

    ``embedding`` is the change-of-basis matrix (columns in the coordinates
    of g) with ``change_basis(g, embedding) == direct_product(core, abelian)``.
    """

    core: LieSuperAlgebra
    abelian_dims: tuple
    embedding: tuple

    @property
    def abelian(self) -> LieSuperAlgebra:
        return abelian(*self.abelian_dims, prefix="z")


def _extend(start: Sequence, candidates: Sequence, n: int) -> list:
    """Greedily add candidates independent of ``start`` (returns the new ones)."""
    span_ = Subspace(list(start), n)
    added = []
    for v in candidates:
        if not span_.contains(v):
            added.append(tuple(v))
            span_ = Subspace(list(span_.basis) + [v], n)
    return added


def _leading(v: Sequence) -> int:
    return next((k for k, x in enumerate(v) if x), len(v))


def strip_abelian_factor(g: LieSuperAlgebra) -> StrippedAlgebra:
    """Split off a maximal central abelian direct factor.

    C is a homogeneous complement of ``Z(g) & [g,g]`` in ``Z(g)``; W contains
    ``[g,g]`` and complements C.  Both are chosen from echelon data so the
    result is reproducible.
    """
    n, m = g.dim, g.dim_even
    Z = center(g)
    D = derived_subalgebra(g)
    ZD = Z.intersect(D)
    pieces = {}
    for parity in (0, 1):
        zp = Z.homogeneous_parts(m)[parity]
        zdp = ZD.homogeneous_parts(m)[parity]
        dp = D.homogeneous_parts(m)[parity]
        C = _extend(zdp.basis, zp.basis, n)
        std = [g.basis_vector(i) for i in range(n) if g.parity(i) == parity]
        W = list(dp.basis) + _extend(list(dp.basis) + C, std, n)
        # order by leading coordinate so standard inputs keep their basis
        W.sort(key=_leading)
        pieces[parity] = (W, C)
    (W0, C0), (W1, C1) = pieces[0], pieces[1]
    cols = W0 + C0 + W1 + C1
    P = [[cols[k][r] for k in range(n)] for r in range(n)]
    core_vectors = W0 + W1
    core_dim = len(core_vectors)
    # brackets of the core, in core coordinates
    T = structure_in_basis(g, cols)
    core_pos = list(range(len(W0))) + list(range(len(W0) + len(C0), len(W0) + len(C0) + len(W1)))
    br = {}
    for a, i in enumerate(core_pos):
        for b, j in enumerate(core_pos):
            if a <= b and any(T[i][j]):
                br[(a, b)] = [T[i][j][k] for k in core_pos]
    core_names = _names_for(g, core_vectors, "c")
    core = LieSuperAlgebra(len(W0), len(W1), br, core_names)
    assert core.dim == core_dim
    return StrippedAlgebra(core, (len(C0), len(C1)), tuple(tuple(r) for r in P))


def _names_for(g: LieSuperAlgebra, vectors: Sequence[Sequence], prefix: str) -> list[str]:
    """Reuse original names for standard basis vectors, else ``prefix<k>``."""
    names = []
    for k, v in enumerate(vectors):
        nz = [i for i, c in enumerate(v) if c]
        if len(nz) == 1 and v[nz[0]] == 1:
            names.append(g.names[nz[0]])
        else:
            names.append(f"{prefix}{k + 1}")
    if len(set(names)) != len(names):
        names = [f"{prefix}{k + 1}" for k in range(len(vectors))]
    return names
