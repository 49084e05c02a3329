import itertools
import random
from fractions import Fraction

import pytest

from algebras import base_catalog
from liediamond import (
    LieSuperAlgebra,
    abelian,
    bracket,
    center,
    catalog,
    derived_subalgebra,
    direct_product,
    filiform,
    from_spec,
    h5,
    h6,
    heisenberg,
    heisenberg_super_odd,
    is_nilpotent,
    lower_central_series,
    refined_adapted_basis,
    strip_abelian_factor,
    validate,
)
from liediamond.errors import AxiomViolationError, FormatError
from liediamond.liealg import Subspace, change_basis, check_flag, check_valid, conjugate, nilpotency_class

Q = Fraction


def e(n, *ks):
    v = [Q(0)] * n
    for k in ks:
        v[k - 1] += 1
    return tuple(v)


def span(n, *vectors):
    return Subspace(vectors, n)


# -- validation -----------------------------------------------------------------


def test_h5_validates():
    assert validate(h5()) is None


@pytest.mark.parametrize("n0, n1", [(0, 0), (3, 0), (0, 2), (2, 3)])
def test_abelian_validates(n0, n1):
    assert validate(abelian(n0, n1)) is None


def test_antisymmetry_violation_is_reported_at_pair():
    g = LieSuperAlgebra(3, 0, {(0, 1): e(3, 3), (1, 0): e(3, 3)})
    v = validate(g)
    assert v is not None and v.kind == "antisymmetry" and v.indices == (1, 2)


def test_even_diagonal_entry_is_rejected():
    v = validate(LieSuperAlgebra(2, 0, {(0, 0): e(2, 2)}))
    assert v is not None


def test_grading_violation():
    # [x, x] odd-odd landing in an odd vector
    g = LieSuperAlgebra(1, 1, {(1, 1): e(2, 2)})
    v = validate(g)
    assert v is not None and v.kind == "grading"


def test_jacobi_violation_names_triple():
    g = LieSuperAlgebra(3, 0, {(0, 1): e(3, 3), (0, 2): e(3, 1)})
    v = validate(g)
    assert v.kind == "jacobi" and v.indices == (1, 2, 3)
    with pytest.raises(AxiomViolationError):
        check_valid(g)


def test_super_jacobi_is_checked_with_signs():
    # odd y with [y, y] = x and [x, y] = y breaks super-Jacobi on (y, y, y)
    g = LieSuperAlgebra(1, 1, {(1, 1): e(2, 1), (0, 1): e(2, 2)})
    assert validate(g) is not None


def test_catalog_and_products_validate():
    cat = base_catalog()
    for g in cat.values():
        assert validate(g) is None
    for g1, g2 in itertools.combinations(list(cat.values())[:8], 2):
        assert validate(direct_product(g1, g2)) is None


# -- brackets and series -------------------------------------------------------


def test_h5_brackets():
    g = h5()
    assert bracket(g, e(5, 1), e(5, 2)) == e(5, 3)
    assert not any(bracket(g, e(5, 4), e(5, 5)))
    rng = random.Random(0)
    for _ in range(20):
        u = [Q(rng.randint(-4, 4)) for _ in range(5)]
        assert not any(bracket(g, u, u))


def test_bracket_is_bilinear_with_fractions():
    g = h6()
    u = [Q(1, 2), Q(-3), 0, Q(2, 7), 0, 0]
    v = [Q(5), Q(1, 3), Q(1), Q(-1), 0, 0]
    # direct expansion from the table
    expected = [Q(0)] * 6
    for i, a in enumerate(u):
        for j, b in enumerate(v):
            for k, c in enumerate(g.basis_bracket(i, j)):
                expected[k] += Q(a) * Q(b) * c
    assert bracket(g, u, v) == tuple(expected)


def test_series_h5():
    lcs = lower_central_series(h5())
    assert [S.dim for S in lcs] == [5, 3, 2, 0]
    assert lcs[1] == span(5, e(5, 3), e(5, 4), e(5, 5))
    assert lcs[2] == span(5, e(5, 4), e(5, 5))


def test_series_abelian_and_h6():
    assert [S.dim for S in lower_central_series(abelian(4))] == [4, 0]
    assert center(abelian(4)).dim == 4
    assert [S.dim for S in lower_central_series(h6())] == [6, 3, 0]
    assert center(h6()) == span(6, e(6, 3), e(6, 5), e(6, 6))
    assert derived_subalgebra(h6()) == center(h6())


def test_nilpotency():
    assert is_nilpotent(h5()) == (True, 3)
    assert is_nilpotent(h6()) == (True, 2)
    ok, _ = is_nilpotent(LieSuperAlgebra(2, 0, {(0, 1): e(2, 2)}))
    assert not ok
    assert nilpotency_class(filiform(6)) == 5


def test_direct_products():
    g = direct_product(h5(), abelian(1))
    assert g.dim == 6 and len(g.brackets) == 3
    assert direct_product(abelian(2), abelian(3)) == abelian(5)
    assert direct_product(h5(), h6()).dim == 11


def test_super_product_keeps_grading():
    g = direct_product(heisenberg_super_odd(1), heisenberg_super_odd(2))
    assert (g.dim_even, g.dim_odd) == (3, 5)
    assert validate(g) is None


def test_odd_squares_are_even():
    for g in base_catalog().values():
        for i in range(g.dim_even, g.dim):
            sq = g.basis_bracket(i, i)
            assert not any(sq[g.dim_even:])


# -- adapted bases ---------------------------------------------------------------


def test_adapted_basis_heisenberg_puts_h_first():
    b = refined_adapted_basis(heisenberg(1))
    assert b.vectors[0] == e(3, 3)
    assert check_flag(heisenberg(1), b)


def test_adapted_basis_h5_is_valid_flag():
    b = refined_adapted_basis(h5())
    assert span(5, *b.vectors[:2]) == span(5, e(5, 4), e(5, 5))
    assert check_flag(h5(), b)


def test_flag_condition_by_direct_evaluation():
    for name, g in base_catalog().items():
        b = refined_adapted_basis(g)
        n = g.dim
        for i in range(1, n + 1):
            lower = Subspace(b.vectors[: i - 1], n)
            for k in range(n):
                assert lower.contains(bracket(g, e(n, k + 1), b.vectors[i - 1])), name
        for v in b.vectors:
            assert g.vector_parity(v) != "mixed"


# -- stripping -------------------------------------------------------------------


def test_strip_h5_times_c2():
    s = strip_abelian_factor(direct_product(h5(), abelian(2)))
    assert s.core == h5() and s.abelian_dims == (2, 0)


def test_strip_abelian_super():
    s = strip_abelian_factor(abelian(3, 2))
    assert s.core.dim == 0 and s.abelian_dims == (3, 2)


def test_strip_h6_is_trivial():
    s = strip_abelian_factor(h6())
    assert s.abelian_dims == (0, 0) and s.core.dim == 6


def test_strip_round_trip_on_conjugates():
    rng = random.Random(4)
    for g0 in (direct_product(h5(), abelian(2)), direct_product(heisenberg(2), abelian(1)), direct_product(filiform(4), abelian(1, 1))):
        g = conjugate(g0, rng, 3)[0]
        s = strip_abelian_factor(g)
        rebuilt = direct_product(s.core, s.abelian)
        assert change_basis(g, s.embedding, rebuilt.names) == rebuilt
        again = strip_abelian_factor(rebuilt)
        assert again.abelian_dims == s.abelian_dims and again.core.dim == s.core.dim


# -- invariance -------------------------------------------------------------------


def test_conjugation_invariants():
    rng = random.Random(8)
    for name, g in base_catalog().items():
        for _ in range(3):
            c = conjugate(g, rng, 5)[0]
            assert validate(c) is None, name
            assert is_nilpotent(c) == is_nilpotent(g)
            assert [S.dim for S in lower_central_series(c)] == [S.dim for S in lower_central_series(g)]
            assert center(c).dim == center(g).dim


def test_change_basis_rejects_grading_mix():
    g = heisenberg_super_odd(1)
    P = [[1, 1, 0], [0, 1, 0], [0, 0, 1]]
    with pytest.raises(FormatError):
        change_basis(g, P)


# -- catalog --------------------------------------------------------------------


def test_catalog_examples():
    g = catalog("h5")
    assert validate(g) is None
    assert g.brackets == {(0, 1): e(5, 3), (0, 2): e(5, 4), (1, 2): e(5, 5)}
    assert catalog("filiform", n=3).brackets == heisenberg(1).brackets
    s = catalog("heis_super", parity="odd", m=2)
    assert s.dim_even == 2 and not any(any(s.basis_bracket(i, j)) for i in range(2) for j in range(2))


@pytest.mark.parametrize(
    "spec, dims",
    [("filiform:6", (6, 0)), ("heis:2", (5, 0)), ("abelian:3,2", (3, 2)), ("heis_super:odd,2", (2, 3)),
     ("heis_super:even,1,2", (3, 2)), ("h5*abelian:2", (7, 0)), ("abelian:n=2,odd=1", (2, 1))],
)
def test_from_spec(spec, dims):
    g = from_spec(spec)
    assert (g.dim_even, g.dim_odd) == dims


@pytest.mark.parametrize("spec", ["nope", "filiform:2", "h5:3", "heis", "abelian:-1", "heis_super:odd"])
def test_from_spec_errors(spec):
    with pytest.raises(FormatError):
        from_spec(spec)


def test_zero_dimensional_algebra():
    g = abelian(0)
    assert validate(g) is None
    assert lower_central_series(g)[0].dim == 0
    assert center(g).dim == 0
