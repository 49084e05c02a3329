import random
from fractions import Fraction

import pytest

from algebras import even_catalog
from oracles import sampled_rank
from liediamond import (
    LieSuperAlgebra,
    abelian,
    compute_index,
    direct_product,
    even_part,
    generic_matrix,
    h5,
    h6,
    has_diamond,
    heisenberg,
    heisenberg_super_even,
    heisenberg_super_odd,
    index,
    stabilizer,
    weyl_order,
)
from liediamond.errors import FormatError, NotNilpotentError
from liediamond.liealg import Subspace, conjugate

Q = Fraction


def unit(n, k):
    return [Q(int(i == k - 1)) for i in range(n)]


def _entry(M, i, j):
    return {e: c for e, c in M[i - 1][j - 1].terms.items()}


def _var(n, k):
    return tuple(int(i == k - 1) for i in range(n))


def test_generic_matrix_abelian_is_zero():
    M = generic_matrix(abelian(3))
    assert all(p.is_zero for row in M for p in row)


def test_generic_matrix_h3():
    M = generic_matrix(heisenberg(1))
    assert _entry(M, 1, 2) == {_var(3, 3): 1}
    assert _entry(M, 2, 1) == {_var(3, 3): -1}
    nonzero = {(i, j) for i in range(3) for j in range(3) if not M[i][j].is_zero}
    assert nonzero == {(0, 1), (1, 0)}


def test_generic_matrix_h6():
    M = generic_matrix(h6())
    assert _entry(M, 1, 2) == {_var(6, 3): 1}
    assert _entry(M, 1, 4) == {_var(6, 5): 1}
    assert _entry(M, 2, 4) == {_var(6, 6): 1}
    nonzero = {(i, j) for i in range(6) for j in range(i + 1, 6) if not M[i][j].is_zero}
    assert nonzero == {(0, 1), (0, 3), (1, 3)}


def test_stabilizer_examples():
    assert stabilizer(h5(), [0] * 5).dim == 5
    s = stabilizer(heisenberg(1), unit(3, 3))
    assert s == Subspace([unit(3, 3)], 3)
    s = stabilizer(h5(), unit(5, 5))
    assert s == Subspace([unit(5, 1), unit(5, 4), unit(5, 5)], 5)


def test_index_examples():
    assert index(abelian(6)) == 6
    assert index(abelian(0)) == 0
    for n in range(1, 5):
        assert index(heisenberg(n)) == 1
    assert index(h5()) == 3
    assert index(h6()) == 4
    assert index(direct_product(h5(), h6())) == 7


def test_weyl_order_examples():
    assert weyl_order(h5(), [0] * 5) == 0
    r = compute_index(h5())
    assert weyl_order(h5(), r.witness) == 1 == r.weyl_order
    r = compute_index(heisenberg(2))
    assert weyl_order(heisenberg(2), r.witness) == 2


def test_has_diamond_examples():
    assert has_diamond(h6())
    assert not has_diamond(heisenberg(2))
    for m in range(1, 4):
        assert has_diamond(heisenberg_super_odd(m))


def test_super_input_uses_even_part():
    g = heisenberg_super_even(2, 2)
    with pytest.raises(FormatError):
        index(g)
    assert index(even_part(g)) == 1
    assert not has_diamond(g)


def test_non_nilpotent_is_rejected():
    g = LieSuperAlgebra(2, 0, {(0, 1): unit(2, 2)})
    with pytest.raises(NotNilpotentError):
        has_diamond(g)


@pytest.mark.parametrize("name", sorted(even_catalog()))
def test_index_matches_sampled_oracle(name):
    g = even_catalog()[name]
    assert index(g) == g.dim - sampled_rank(g, points=40)


@pytest.mark.parametrize("name", sorted(even_catalog()))
def test_witness_sound_and_stabilizers_bounded(name):
    g = even_catalog()[name]
    r = compute_index(g, seed=3)
    assert stabilizer(g, r.witness).dim == r.index
    rng = random.Random(name)
    for _ in range(10):
        f = [Q(rng.randint(-3, 3)) for _ in range(g.dim)]
        assert stabilizer(g, f).dim >= r.index


def test_index_invariant_under_50_conjugations():
    rng = random.Random("iso-invariance")
    for name in ("h5", "h6", "filiform:5", "heis:2", "abelian:4"):
        g = even_catalog()[name]
        expected = index(g)
        for _ in range(50):
            assert index(conjugate(g, rng, 3)[0]) == expected, name


def test_index_seed_independent():
    g = conjugate(h6(), random.Random(2), 4)[0]
    assert {index(g, seed=s) for s in range(5)} == {4}
