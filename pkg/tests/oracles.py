"""Independent reference computations used by the tests.

None of these share code paths with the package's elimination or
straightening routines: ranks go through sympy, products through naive
word rewriting in random order.
"""
from __future__ import annotations

import random
from fractions import Fraction

import sympy
from sympy.polys.matrices import DomainMatrix

from liediamond.liealg import LieSuperAlgebra, structure_in_basis


def sympy_rank(rows) -> int:
    if not rows or not rows[0]:
        return 0
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in rows]).rank()


def bracket_matrix_at(g: LieSuperAlgebra, f) -> list[list[Fraction]]:
    """``f([e_i, e_j])`` computed straight from the table."""
    n = g.dim
    return [[sum((g.basis_bracket(i, j)[k] * f[k] for k in range(n)), Fraction(0)) for j in range(n)] for i in range(n)]


def sampled_rank(g: LieSuperAlgebra, points: int = 100, bound: int = 50, seed: int = 1234) -> int:
    """Max rank of ``M(f)`` over random integer points (sympy rank)."""
    rng = random.Random(seed)
    n = g.dim
    best = 0
    for _ in range(points):
        f = [Fraction(rng.randint(-bound, bound)) for _ in range(n)]
        best = max(best, sympy_rank(bracket_matrix_at(g, f)))
    return best


def fraction_field_rank(M, variables) -> int:
    """Rank over QQ(vars) by sympy's fraction-field Gaussian elimination."""
    syms = sympy.symbols(variables)
    K = sympy.QQ.frac_field(*syms)
    rows = []
    for row in M:
        out = []
        for e in row:
            expr = sympy.Integer(0)
            for exps, c in e.terms.items():
                t = sympy.Rational(c.numerator, c.denominator)
                for s, k in zip(syms, exps):
                    t *= s**k
                expr += t
            out.append(K.from_sympy(expr))
        rows.append(out)
    return DomainMatrix(rows, (len(rows), len(rows[0])), K).rank()


# -- free rewriting in U(g) ----------------------------------------------------


class WordRewriter:
    """Normal forms in U(g) by rewriting words in a random order.

    Words are tuples of adapted-basis indices.  A rewrite picks any
    out-of-order adjacent pair (or an adjacent repeated odd letter) at
    random and applies the defining relation, so agreement with the
    package's left-to-right straightening checks confluence.
    """

    def __init__(self, A, seed: int = 0):
        self.A = A
        self.par = A.parities
        T = structure_in_basis(A.g, A.vectors)
        self.T = [[{k: c for k, c in enumerate(T[i][j]) if c} for j in range(A.n)] for i in range(A.n)]
        self.rng = random.Random(seed)

    def normal_form(self, word_terms: dict) -> dict:
        done: dict = {}
        todo = dict(word_terms)
        while todo:
            w, c = todo.popitem()
            bad = [p for p in range(len(w) - 1) if w[p] > w[p + 1] or (w[p] == w[p + 1] and self.par[w[p]])]
            if not bad:
                mono = [0] * self.A.n
                for i in w:
                    mono[i] += 1
                key = tuple(mono)
                done[key] = done.get(key, 0) + c
                continue
            p = self.rng.choice(bad)
            a, b = w[p], w[p + 1]
            head, tail = w[:p], w[p + 2:]
            if a == b:
                for k, v in self.T[a][a].items():
                    _add(todo, head + (k,) + tail, c * v / 2)
            else:
                sign = -1 if self.par[a] and self.par[b] else 1
                _add(todo, head + (b, a) + tail, c * sign)
                for k, v in self.T[a][b].items():
                    _add(todo, head + (k,) + tail, c * v)
        return {m: v for m, v in done.items() if v}

    def product(self, u, v) -> dict:
        terms: dict = {}
        for a, ca in u.terms.items():
            for b, cb in v.terms.items():
                _add(terms, _word(a) + _word(b), ca * cb)
        return self.normal_form(terms)


def _word(mono) -> tuple:
    out = []
    for i, e in enumerate(mono):
        out.extend([i] * e)
    return tuple(out)


def _add(d: dict, key, c) -> None:
    v = d.get(key, 0) + c
    if v:
        d[key] = v
    else:
        d.pop(key, None)


# -- free rewriting in the Weyl algebra ----------------------------------------


def weyl_rewrite(n: int, words: dict, seed: int = 0) -> dict:
    """Normal form of words over letters ('x', i) / ('y', i) by random rewriting.

    Out-of-order pairs are ``y_i x_j`` (y before x) and same-letter index
    inversions; ``y_i x_i -> x_i y_i - 1`` and everything else commutes.
    """
    rng = random.Random(seed)
    order = lambda letter: (0 if letter[0] == "x" else 1, letter[1])
    done: dict = {}
    todo = dict(words)
    while todo:
        w, c = todo.popitem()
        bad = [p for p in range(len(w) - 1) if order(w[p]) > order(w[p + 1])]
        if not bad:
            alpha, gamma = [0] * n, [0] * n
            for kind, i in w:
                (alpha if kind == "x" else gamma)[i] += 1
            key = (tuple(alpha), tuple(gamma))
            _add(done, key, c)
            continue
        p = rng.choice(bad)
        a, b = w[p], w[p + 1]
        head, tail = w[:p], w[p + 2:]
        _add(todo, head + (b, a) + tail, c)
        if a[0] == "y" and b[0] == "x" and a[1] == b[1]:
            _add(todo, head + tail, -c)
    return done


def weyl_words(u) -> dict:
    out: dict = {}
    for (alpha, gamma), c in u.terms.items():
        w = []
        for i, e in enumerate(alpha):
            w.extend([("x", i)] * e)
        for i, e in enumerate(gamma):
            w.extend([("y", i)] * e)
        _add(out, tuple(w), c)
    return out


def weyl_concat(u, v) -> dict:
    out: dict = {}
    for wu, cu in weyl_words(u).items():
        for wv, cv in weyl_words(v).items():
            _add(out, wu + wv, cu * cv)
    return out
