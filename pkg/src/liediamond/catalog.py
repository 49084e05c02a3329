"""Named nilpotent Lie (super)algebras.

=============  ===========================================  ====================
name           parameters                                    brackets
=============  ===========================================  ====================
``h5``         none                                          [e1,e2]=e3, [e1,e3]=e4, [e2,e3]=e5
``h6``         none                                          [e1,e2]=e3, [e1,e4]=e5, [e2,e4]=e6
``filiform``   ``n >= 3``                                    [e1,ei]=e(i+1), 2 <= i < n
``heis``       ``n >= 1``                                    [xi,yi]=h on x1..xn, y1..yn, h
``abelian``    ``n >= 0``, ``odd >= 0``                      none
``heis_super`` ``parity=even, p >= 0, q >= 0 (p+q >= 1)``   [xi,yi]=h, [zj,zj]=h (zj odd)
``heis_super`` ``parity=odd, m >= 1``                        [xi,yi]=h, yi and h odd
=============  ===========================================  ====================

Specs are written ``name:k1=v1,k2=v2`` with positional shorthands
(``filiform:6``, ``heis:2``, ``abelian:3,2``, ``heis_super:odd,2``) and may be
multiplied with ``*`` (``h5*abelian:2``).
"""
from __future__ import annotations

from fractions import Fraction

from .errors import FormatError
from .liealg import LieSuperAlgebra, abelian, direct_product

NAMES = ("h5", "h6", "filiform", "heis", "abelian", "heis_super")


def _unit(n: int, k: int) -> list:
    v = [Fraction(0)] * n
    v[k] = Fraction(1)
    return v


def h5() -> LieSuperAlgebra:
    n = 5
    return LieSuperAlgebra(n, 0, {(0, 1): _unit(n, 2), (0, 2): _unit(n, 3), (1, 2): _unit(n, 4)})


def h6() -> LieSuperAlgebra:
    n = 6
    return LieSuperAlgebra(n, 0, {(0, 1): _unit(n, 2), (0, 3): _unit(n, 4), (1, 3): _unit(n, 5)})


def filiform(n: int) -> LieSuperAlgebra:
    if n < 3:
        raise FormatError("filiform algebra needs n >= 3")
    return LieSuperAlgebra(n, 0, {(0, i): _unit(n, i + 1) for i in range(1, n - 1)})


def heisenberg(n: int) -> LieSuperAlgebra:
    """``H_{2n+1}`` on ``x1..xn, y1..yn, h`` with ``[xi, yi] = h``."""
    if n < 1:
        raise FormatError("Heisenberg algebra needs n >= 1")
    dim = 2 * n + 1
    names = [f"x{i + 1}" for i in range(n)] + [f"y{i + 1}" for i in range(n)] + ["h"]
    return LieSuperAlgebra(dim, 0, {(i, n + i): _unit(dim, 2 * n) for i in range(n)}, names)


def heisenberg_super_even(p: int, q: int) -> LieSuperAlgebra:
    """Even form: ``g_0 = H_{2p+1}``, odd ``z1..zq`` with ``[zj, zj] = h``."""
    if p < 0 or q < 0 or p + q < 1:
        raise FormatError("even super-Heisenberg needs p, q >= 0 and p + q >= 1")
    m = 2 * p + 1
    dim = m + q
    h = 2 * p
    names = [f"x{i + 1}" for i in range(p)] + [f"y{i + 1}" for i in range(p)] + ["h"]
    names += [f"z{j + 1}" for j in range(q)]
    br = {(i, p + i): _unit(dim, h) for i in range(p)}
    br.update({(m + j, m + j): _unit(dim, h) for j in range(q)})
    return LieSuperAlgebra(m, q, br, names)


def heisenberg_super_odd(m: int) -> LieSuperAlgebra:
    """Odd form: even ``x1..xm`` (abelian), odd ``y1..ym, h`` with ``[xi, yi] = h``."""
    if m < 1:
        raise FormatError("odd super-Heisenberg needs m >= 1")
    dim = 2 * m + 1
    names = [f"x{i + 1}" for i in range(m)] + [f"y{i + 1}" for i in range(m)] + ["h"]
    return LieSuperAlgebra(m, m + 1, {(i, m + i): _unit(dim, 2 * m) for i in range(m)}, names)


def _int(value: str, key: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise FormatError(f"parameter {key} must be an integer, got {value!r}") from None


_POSITIONAL = {
    "h5": (),
    "h6": (),
    "filiform": ("n",),
    "heis": ("n",),
    "abelian": ("n", "odd"),
    "heis_super": ("parity", "a", "b"),
}


def _parse_params(name: str, text: str) -> dict:
    params: dict = {}
    if not text:
        return params
    order = _POSITIONAL[name]
    pos = 0
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "=" in part:
            k, v = (s.strip() for s in part.split("=", 1))
            params[k] = v
        else:
            if pos >= len(order):
                raise FormatError(f"too many positional parameters for {name}")
            params[order[pos]] = part
            pos += 1
    return params


def catalog(name: str, **params) -> LieSuperAlgebra:
    """Build a named algebra; parameters may be ints or strings."""
    if name == "h5":
        _no_params(name, params)
        return h5()
    if name == "h6":
        _no_params(name, params)
        return h6()
    if name == "filiform":
        return filiform(_int(str(_need(params, "n", name)), "n"))
    if name == "heis":
        return heisenberg(_int(str(_need(params, "n", name)), "n"))
    if name == "abelian":
        n = _int(str(params.get("n", 0)), "n")
        odd = _int(str(params.get("odd", 0)), "odd")
        if n < 0 or odd < 0:
            raise FormatError("abelian dimensions must be non-negative")
        return abelian(n, odd)
    if name == "heis_super":
        parity = str(params.get("parity", "")).lower()
        if parity == "even":
            p = params.get("p", params.get("a"))
            q = params.get("q", params.get("b"))
            if p is None or q is None:
                raise FormatError("heis_super even needs p and q")
            return heisenberg_super_even(_int(str(p), "p"), _int(str(q), "q"))
        if parity == "odd":
            m = params.get("m", params.get("a"))
            if m is None:
                raise FormatError("heis_super odd needs m")
            return heisenberg_super_odd(_int(str(m), "m"))
        raise FormatError("heis_super needs parity=even or parity=odd")
    raise FormatError(f"unknown catalog algebra {name!r}; known: {', '.join(NAMES)}")


def _need(params: dict, key: str, name: str):
    if key not in params:
        raise FormatError(f"{name} needs parameter {key}")
    return params[key]


def _no_params(name: str, params: dict) -> None:
    if params:
        raise FormatError(f"{name} takes no parameters")


def from_spec(spec: str) -> LieSuperAlgebra:
    """Parse ``name:params`` (optionally ``*``-joined products)."""
    factors = [s.strip() for s in spec.split("*")]
    if not all(factors):
        raise FormatError(f"bad catalog spec {spec!r}")
    result = None
    for factor in factors:
        name, _, text = factor.partition(":")
        name = name.strip()
        if name not in _POSITIONAL:
            raise FormatError(f"unknown catalog algebra {name!r}; known: {', '.join(NAMES)}")
        g = catalog(name, **_parse_params(name, text))
        result = g if result is None else direct_product(result, g)
    return result
