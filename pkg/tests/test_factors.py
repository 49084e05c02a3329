import random
from fractions import Fraction

import pytest

from oracles import weyl_concat, weyl_rewrite
from liediamond import EnvelopingAlgebra, abelian, direct_product, filiform, heisenberg, heisenberg_to_weyl, stafford_alpha
from liediamond.env import random_element
from liediamond.errors import FormatError, PreconditionError
from liediamond.factors import (
    CliffordElement,
    WeylElement,
    clifford_basis,
    clifford_center,
    clifford_center_dim,
    clifford_gen,
    clifford_one,
    clifford_parse,
    weyl_one,
    weyl_parse,
    weyl_x,
    weyl_y,
)

Q = Fraction


def _random_weyl(n, rng, degree=3, terms=3):
    out = {}
    for _ in range(terms):
        while True:
            a = tuple(rng.randint(0, degree) for _ in range(n))
            c = tuple(rng.randint(0, degree) for _ in range(n))
            if sum(a) + sum(c) <= degree:
                break
        out[(a, c)] = Q(rng.randint(-4, 4), rng.randint(1, 3))
    return WeylElement(n, out)


def test_weyl_examples():
    x1, y1, y2 = weyl_x(2, 0), weyl_y(2, 0), weyl_y(2, 1)
    assert y1 * x1 == x1 * y1 - 1
    assert str(x1 * y2) == "x1*y2"
    assert y2 * x1 == x1 * y2


def test_weyl_square_of_x1y1():
    u = weyl_parse(1, "x1*y1")
    oracle = weyl_rewrite(1, weyl_concat(u, u))
    assert (u * u).terms == oracle
    # y x = x y - 1 gives x y x y = x^2 y^2 - x y
    assert str(u * u) == "x1^2*y1^2 - x1*y1"


@pytest.mark.parametrize("n", [1, 2, 3])
def test_weyl_products_match_rewriting_oracle(n):
    rng = random.Random(n)
    for seed in range(25):
        u, v = _random_weyl(n, rng), _random_weyl(n, rng)
        assert (u * v).terms == weyl_rewrite(n, weyl_concat(u, v), seed=seed)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_weyl_associative(n):
    rng = random.Random(100 + n)
    for _ in range(60):
        u, v, w = (_random_weyl(n, rng) for _ in range(3))
        assert (u * v) * w == u * (v * w)


def test_weyl_order_mismatch():
    with pytest.raises(FormatError):
        weyl_x(1, 0) * weyl_x(2, 0)


def test_weyl_parse_errors():
    with pytest.raises(FormatError):
        weyl_parse(2, "x3")
    with pytest.raises(FormatError):
        weyl_parse(2, "e1")


def test_stafford_examples():
    assert stafford_alpha(2, [1]) == weyl_parse(2, "x1 + x2*y2*y1 + x2 + y2")
    assert stafford_alpha(3, [1, 1]) == weyl_parse(2 + 1, "x1 + x2*y2*y1 + x3*y3*y1 + x2 + y2 + x3 + y3")


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_stafford_term_count_and_degree(n):
    lambdas = [Q(k + 1, 2) for k in range(n - 1)]
    alpha = stafford_alpha(n, lambdas)
    # x1, then one cubic term and x_i, y_i for each i >= 2
    assert len(alpha.terms) == 1 + 3 * (n - 1)
    assert alpha.degree() == 3


def test_stafford_preconditions():
    with pytest.raises(PreconditionError):
        stafford_alpha(1, [])
    with pytest.raises(PreconditionError):
        stafford_alpha(2, [0])
    with pytest.raises(FormatError):
        stafford_alpha(3, [1])


def test_clifford_examples():
    e1 = clifford_gen(2, 0)
    e2 = clifford_gen(2, 1)
    assert e1 * e1 == clifford_one(2)
    assert e1 * e2 == -(e2 * e1)
    assert str(e2 * e1) == "-e1*e2"
    assert clifford_center_dim(1) == 2
    assert clifford_center_dim(2) == 1


@pytest.mark.parametrize("q", range(0, 6))
def test_clifford_dimensions(q):
    assert len(clifford_basis(q)) == 2 ** q
    assert clifford_center_dim(q) == (1 if q % 2 == 0 else 2)
    for z in clifford_center(q):
        for i in range(q):
            e = clifford_gen(q, i)
            assert z * e == e * z


def test_clifford_associative():
    rng = random.Random(6)
    q = 4
    basis = clifford_basis(q)

    def rand():
        return CliffordElement(q, {rng.choice(basis): Q(rng.randint(-3, 3)) for _ in range(3)})

    for _ in range(50):
        u, v, w = rand(), rand(), rand()
        assert (u * v) * w == u * (v * w)


def test_clifford_parse():
    assert clifford_parse(3, "e2*e1*e2") == -clifford_gen(3, 0)
    with pytest.raises(FormatError):
        clifford_parse(2, "e3")


def test_heisenberg_to_weyl_examples():
    A = EnvelopingAlgebra(heisenberg(1))
    h, x, y = A.parse("h"), A.parse("x1"), A.parse("y1")
    assert heisenberg_to_weyl(h) == weyl_one(1)
    assert heisenberg_to_weyl(h, 3) == 3 * weyl_one(1)
    assert heisenberg_to_weyl(y * x) == weyl_x(1, 0) * weyl_y(1, 0) - 1
    assert heisenberg_to_weyl(y * x) == weyl_y(1, 0) * weyl_x(1, 0)


@pytest.mark.parametrize("n, scale", [(1, 1), (2, 1), (2, Q(-2, 3)), (3, 5)])
def test_heisenberg_to_weyl_homomorphism_degree3(n, scale):
    A = EnvelopingAlgebra(heisenberg(n))
    rng = random.Random(f"{n}:{scale}")
    h = A.parse("h")
    for _ in range(25):
        u, v = random_element(A, rng, 3, terms=3), random_element(A, rng, 3, terms=3)
        assert heisenberg_to_weyl(u * v, scale) == heisenberg_to_weyl(u, scale) * heisenberg_to_weyl(v, scale)
        # h - scale lies in the kernel
        assert not heisenberg_to_weyl((h - scale) * u, scale)


def test_heisenberg_to_weyl_rejects_other_algebras():
    # L3 has the same table as H3 and is accepted; L4 and H3 x C are not Heisenberg
    for g in (filiform(4), direct_product(heisenberg(1), abelian(1))):
        with pytest.raises(PreconditionError):
            heisenberg_to_weyl(EnvelopingAlgebra(g).parse("e1" if g.names[0] == "e1" else "x1"))
    B = EnvelopingAlgebra(heisenberg(1))
    with pytest.raises(PreconditionError):
        heisenberg_to_weyl(B.parse("h"), 0)
