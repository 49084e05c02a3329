import random
import threading
from fractions import Fraction
from math import comb

import pytest

from oracles import WordRewriter
from liediamond import (
    EnvelopingAlgebra,
    LieSuperAlgebra,
    ad,
    ad_nilpotency_index,
    extract_supercentral,
    filiform,
    h5,
    heisenberg,
    heisenberg_super_even,
    is_supercentral,
    sigma,
    supercentralizing_chain,
    supercommutator,
)
from liediamond.env import TruncatedSpan, pbw_count, random_element
from liediamond.errors import FormatError, PreconditionError

Q = Fraction


@pytest.fixture(scope="module")
def H3():
    A = EnvelopingAlgebra(heisenberg(1))
    return A, A.parse("x1"), A.parse("y1"), A.parse("h")


def test_adapted_order_puts_h_first(H3):
    A, *_ = H3
    assert A.names[0] == "h"


def test_defining_relation(H3):
    A, x, y, h = H3
    assert y * x == x * y - h
    assert str(y * x) == "x1*y1 - h"


def test_odd_square_rewrite():
    # odd y with [y, y] = z (even, central)
    g = LieSuperAlgebra(1, 1, {(1, 1): [1, 0]}, ["z", "y"])
    A = EnvelopingAlgebra(g)
    y, z = A.parse("y"), A.parse("z")
    assert y * y == z * Q(1, 2)


def test_degree_three_product_matches_rewriting(H3):
    A, x, y, h = H3
    assert (x * y) * x == x * x * y - x * h
    assert str((x * y) * x) == "x1^2*y1 - h*x1"
    oracle = WordRewriter(A, seed=1)
    for seed in range(5):
        oracle.rng.seed(seed)
        assert oracle.product(x * y, x) == ((x * y) * x).terms


def test_words_agree_in_any_rewrite_order(H3):
    A, x, y, h = H3
    rng = random.Random(3)
    letters = [x, y, h]
    for _ in range(30):
        word = [rng.choice(range(3)) for _ in range(rng.randint(2, 4))]
        prod = A.one()
        for k in word:
            prod = prod * letters[k]
        idx = [A.names.index(n) for n in ("x1", "y1", "h")]
        results = {tuple(sorted(WordRewriter(A, seed=s).normal_form({tuple(idx[k] for k in word): 1}).items()))
                   for s in range(4)}
        assert results == {tuple(sorted(prod.terms.items()))}


def test_supercommutator_examples(H3):
    A, x, y, h = H3
    assert supercommutator(x, y) == h
    assert not supercommutator(h, x * y)
    g = heisenberg_super_even(0, 1)
    B = EnvelopingAlgebra(g)
    z = B.parse("z1")
    assert supercommutator(z, z) == 2 * (z * z) == B.parse("h")


def test_sigma_examples():
    g = heisenberg_super_even(1, 1)
    A = EnvelopingAlgebra(g)
    x, z = A.parse("x1"), A.parse("z1")
    assert sigma(x + z) == x - z
    rng = random.Random(0)
    for _ in range(10):
        u, v = random_element(A, rng, 4), random_element(A, rng, 2)
        assert sigma(sigma(u)) == u
        assert sigma(u * v) == sigma(u) * sigma(v)


def test_ad_examples(H3):
    A, x, y, h = H3
    assert ad(x, y * y) == 2 * (h * y)
    rng = random.Random(4)
    for _ in range(20):
        assert not ad(h, random_element(A, rng, 4))
    assert ad_nilpotency_index(x, y) == 2


def test_ad_accepts_vectors(H3):
    A, x, y, h = H3
    assert ad([1, 0, 0], y) == h


def test_ad_rejects_inhomogeneous():
    A = EnvelopingAlgebra(heisenberg_super_even(1, 1))
    with pytest.raises(PreconditionError):
        ad(A.parse("x1 + z1"), A.parse("y1"))


def test_supercentral_examples(H3):
    A, x, y, h = H3
    assert is_supercentral(h)
    assert not is_supercentral(x)
    assert is_supercentral(1 + h * h)


def test_extract_examples(H3):
    A, x, y, h = H3
    assert extract_supercentral(y) == h
    assert extract_supercentral(h) == h
    assert extract_supercentral(x * y) == -(h * h)
    with pytest.raises(PreconditionError):
        extract_supercentral(A.zero())


def test_chain_examples(H3):
    A, x, y, h = H3
    r = supercentralizing_chain([h], 4)
    assert r.complete and r.elements == (h,)
    r = supercentralizing_chain([x], 4)
    assert r.complete and r.elements[0] == -h and len(r.elements) == 2
    r = supercentralizing_chain([x, y, h], 4)
    assert r.complete and len(r.elements) == 3


def test_chain_preconditions(H3):
    A, x, y, h = H3
    with pytest.raises(PreconditionError):
        supercentralizing_chain([x * y * x], 2)
    with pytest.raises(PreconditionError):
        supercentralizing_chain([A.zero()], 2)
    B = EnvelopingAlgebra(heisenberg_super_even(1, 1))
    with pytest.raises(PreconditionError):
        supercentralizing_chain([B.parse("x1 + z1")], 3)


def test_chain_reports_partial_when_bound_is_tight(H3):
    A, x, y, h = H3
    r = supercentralizing_chain([x * y], 2)
    assert r.degree == 2
    assert r.partial == (not r.complete)


def test_truncated_span_drops_high_degree(H3):
    A, x, y, h = H3
    S = TruncatedSpan(A, 2)
    assert S.add(x * y)
    assert not S.add(2 * (x * y))
    with pytest.raises(PreconditionError):
        S.add(x * y * x)
    assert S.contains(2 * (x * y))


@pytest.mark.parametrize("n0, n1", [(3, 0), (2, 2), (1, 3), (0, 4)])
def test_pbw_dimension(n0, n1):
    for d in range(7):
        expected = sum(comb(n1, k) * comb(n0 + d - k, n0) for k in range(min(n1, d) + 1))
        assert pbw_count(n0, n1, d) == expected
    g = LieSuperAlgebra(n0, n1, {})
    A = EnvelopingAlgebra(g)
    assert len(A.pbw_monomials(4)) == pbw_count(n0, n1, 4)


def test_parse_errors(H3):
    A, *_ = H3
    for bad in ("x1 +", "q", "2**x1", "x1^", "(x1"):
        with pytest.raises(FormatError):
            A.parse(bad)


def test_parse_accepts_any_order(H3):
    A, x, y, h = H3
    assert A.parse("3/2*y1*x1 - h") == Q(3, 2) * (y * x) - h
    assert A.parse("x1^2*y1") == x * x * y


def test_printer_uses_graded_lex_descending():
    # adapted order on h5 is e4, e5, e3, e1, e2
    A = EnvelopingAlgebra(h5())
    assert A.names == ("e4", "e5", "e3", "e1", "e2")
    assert str(A.parse("2 + e1 + e1*e2 + e1*e4")) == "e4*e1 + e1*e2 + e1 + 2"


def test_elements_of_different_algebras_do_not_mix(H3):
    A, x, *_ = H3
    B = EnvelopingAlgebra(heisenberg(1))
    with pytest.raises(FormatError):
        x * B.parse("x1")


def test_shared_algebra_across_threads():
    g = filiform(5)
    A = EnvelopingAlgebra(g)
    rng = random.Random(9)
    pairs = [(random_element(A, rng, 3), random_element(A, rng, 3)) for _ in range(40)]
    reference = [(u * v).terms for u, v in pairs]
    B = EnvelopingAlgebra(g)
    out: dict = {}
    errors = []

    def work(k):
        try:
            out[k] = [(B.multiply(u_b, v_b)).terms for u_b, v_b in ((B.element(u.terms), B.element(v.terms)) for u, v in pairs)]
        except Exception as exc:  # pragma: no cover - surfaced below
            errors.append(exc)

    threads = [threading.Thread(target=work, args=(k,)) for k in range(6)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert not errors
    assert all(out[k] == reference for k in range(6))
