"""Index, stabilizers of functionals and the property-(⋄) test.

For a Lie algebra with basis e_1..e_n and a functional f with coordinates
f_k = f(e_k), the skew form ``(x, y) -> f([x, y])`` has matrix
``M(f)[i][j] = sum_k c_ij^k f_k``.  The stabilizer ``g^f`` is its kernel and
the index is ``n - rank M`` for generic f, i.e. the rank over the field of
rational functions in f_1..f_n.

Super inputs are reduced to their even part: the index and the
decision only concern ``g_0``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import FormatError, NotNilpotentError
from .exactmath import Echelon, MultiPoly, eval_rank, poly_rank, rank, rational_kernel, to_rational
from .liealg import LieSuperAlgebra, Subspace, _memo, even_part, is_nilpotent

WITNESS_BOUND = 20
WITNESS_ATTEMPTS = 500


def _variables(n: int) -> tuple:
    return tuple(f"f{k + 1}" for k in range(n))


def _require_even(g: LieSuperAlgebra) -> LieSuperAlgebra:
    if g.dim_odd:
        raise FormatError("index is defined on a Lie algebra; pass even_part(g) for super input")
    return g


def generic_matrix(g: LieSuperAlgebra) -> list[list[MultiPoly]]:
    """Skew matrix of linear forms ``M[i][j] = sum_k c_ij^k f_k`` (even part)."""
    g0 = even_part(g) if g.dim_odd else g
    n = g0.dim
    variables = _variables(n)
    return [[MultiPoly.linear_form(variables, g0.basis_bracket(i, j)) for j in range(n)] for i in range(n)]


def evaluated_matrix(g: LieSuperAlgebra, f: Sequence) -> list[list[Fraction]]:
    """``M(f)`` as a rational matrix."""
    g0 = even_part(g) if g.dim_odd else g
    n = g0.dim
    if len(f) != n:
        raise FormatError(f"functional has {len(f)} coordinates, expected {n}")
    f = [to_rational(x) for x in f]
    return [
        [sum((c * f[k] for k, c in g0.sparse_bracket(i, j)), Fraction(0)) for j in range(n)]
        for i in range(n)
    ]


def stabilizer(g: LieSuperAlgebra, f: Sequence) -> Subspace:
    """``g^f = {x : f([x, y]) = 0 for all y}`` inside ``g_0``."""
    M = evaluated_matrix(g, f)
    n = len(M)
    return Subspace(rational_kernel(M, n), n)


def _reduced_generic_matrix(g: LieSuperAlgebra) -> list[list[MultiPoly]]:
    """Generic matrix restricted to the coordinates of a spanning subset.

    The coefficient matrices C_k (``C_k[i][j] = c_ij^k``) span a space of
    dimension ``dim [g, g]``; keeping only f_k for a maximal independent
    subset of the C_k and setting the other coordinates to zero leaves the
    generic rank unchanged (the kept forms are algebraically independent and
    the matrix depends on f only through them), while the symbolic
    elimination runs in far fewer variables.
    """
    n = g.dim
    keep: list[int] = []
    ech = Echelon(n * (n - 1) // 2)
    for k in range(n):
        vec = [g.basis_bracket(i, j)[k] for i in range(n) for j in range(i + 1, n)]
        if any(vec) and ech.add(vec):
            keep.append(k)
    variables = tuple(f"f{k + 1}" for k in keep)
    return [
        [MultiPoly.linear_form(variables, [g.basis_bracket(i, j)[k] for k in keep]) for j in range(n)]
        for i in range(n)
    ]


@dataclass(frozen=True)
class IndexResult:
    """Index of a Lie algebra with a functional attaining it."""

    index: int
    dim: int
    rank: int
    witness: tuple

    @property
    def weyl_order(self) -> int:
        return self.rank // 2


def compute_index(g: LieSuperAlgebra, seed: int = 0) -> IndexResult:
    """Index of a Lie algebra and a verified witness functional.

    The witness is found by seeded random search over integer functionals
    in ``[-20, 20]`` (500 attempts, then widening the range); a candidate is
    accepted only when its evaluated rank equals the symbolic rank.
    """
    g = _require_even(g)
    return _memo(g, f"index:{seed}", lambda: _compute_index(g, seed))


def _compute_index(g: LieSuperAlgebra, seed: int) -> IndexResult:
    n = g.dim
    if g.is_abelian():
        return IndexResult(n, n, 0, (Fraction(0),) * n)
    r = poly_rank(_reduced_generic_matrix(g), seed=seed)
    M = generic_matrix(g)
    rng = random.Random(seed)
    bound = WITNESS_BOUND
    while True:
        for _ in range(WITNESS_ATTEMPTS):
            f = [Fraction(rng.randint(-bound, bound)) for _ in range(n)]
            if eval_rank(M, f) == r:
                return IndexResult(n - r, n, r, tuple(f))
        bound *= 10


def index(g: LieSuperAlgebra, seed: int = 0) -> int:
    """``ind(g) = min_f dim g^f`` for a Lie algebra (no odd part)."""
    return compute_index(g, seed).index


def weyl_order(g: LieSuperAlgebra, f: Sequence) -> int:
    """``p`` with ``2p = dim g_0 - dim g_0^f``."""
    M = evaluated_matrix(g, f)
    r = rank(M, len(M)) if M else 0
    assert r % 2 == 0, "skew-symmetric rank must be even"
    return r // 2


def has_diamond(g: LieSuperAlgebra, seed: int = 0) -> bool:
    """Whether ``ind(g_0) >= dim(g_0) - 2`` for nilpotent g.

    Raises :class:`NotNilpotentError` otherwise: the equivalence with
    property (⋄) is only available for nilpotent algebras, and solvable
    non-nilpotent Lie algebras never have the property.
    """
    ok, _ = is_nilpotent(g)
    if not ok:
        raise NotNilpotentError(
            "property (⋄) is decided by the index only for nilpotent algebras; "
            "solvable non-nilpotent enveloping algebras never satisfy it"
        )
    g0 = even_part(g)
    return index(g0, seed) >= g0.dim - 2
