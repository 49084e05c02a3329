"""JSON algebra files.

A file holds one object::

    {
      "dim_even": 5,
      "dim_odd": 0,
      "names": ["e1", "e2", "e3", "e4", "e5"],
      "brackets": [
        {"i": 1, "j": 2, "coeffs": [[3, "1"]]},
        {"i": 1, "j": 3, "coeffs": [[4, "1"]]}
      ]
    }

Indices are 1-based.  ``names`` is optional, unlisted pairs are zero and
coefficients are rationals written ``"p/q"`` (plain integers are accepted on
input).  :func:`dumps` writes the canonical form: pairs sorted by ``(i, j)``,
coefficients by ``k``, rationals in lowest terms.
"""
from __future__ import annotations

import hashlib
import json
from pathlib import Path

from .errors import FormatError
from .exactmath import format_rational, to_rational
from .liealg import LieSuperAlgebra, check_valid


def _where(path: list) -> str:
    out = ""
    for p in path:
        out += f"[{p}]" if isinstance(p, int) else (f".{p}" if out else p)
    return out or "<root>"


def _int_field(obj: dict, key: str, path: list, default=None) -> int:
    if key not in obj:
        if default is not None:
            return default
        raise FormatError(f"{_where(path + [key])}: missing field")
    v = obj[key]
    if isinstance(v, bool) or not isinstance(v, int):
        raise FormatError(f"{_where(path + [key])}: expected an integer, got {v!r}")
    return v


def from_dict(data, validate: bool = True) -> LieSuperAlgebra:
    """Build an algebra from the decoded JSON object."""
    if not isinstance(data, dict):
        raise FormatError("<root>: expected an object")
    unknown = set(data) - {"dim_even", "dim_odd", "names", "brackets"}
    if unknown:
        raise FormatError(f"<root>: unknown field(s) {', '.join(sorted(unknown))}")
    n0 = _int_field(data, "dim_even", [])
    n1 = _int_field(data, "dim_odd", [], default=0)
    if n0 < 0 or n1 < 0:
        raise FormatError("<root>: dimensions must be non-negative")
    n = n0 + n1
    names = data.get("names")
    if names is not None:
        if not isinstance(names, list) or not all(isinstance(s, str) for s in names):
            raise FormatError("names: expected a list of strings")
    entries = data.get("brackets", [])
    if not isinstance(entries, list):
        raise FormatError("brackets: expected a list")
    brackets: dict = {}
    for e, entry in enumerate(entries):
        path = ["brackets", e]
        if not isinstance(entry, dict):
            raise FormatError(f"{_where(path)}: expected an object")
        i = _int_field(entry, "i", path)
        j = _int_field(entry, "j", path)
        for key, val in (("i", i), ("j", j)):
            if not 1 <= val <= n:
                raise FormatError(f"{_where(path + [key])}: index {val} outside 1..{n}")
        if (i - 1, j - 1) in brackets:
            raise FormatError(f"{_where(path)}: pair ({i},{j}) listed twice")
        coeffs = entry.get("coeffs")
        if not isinstance(coeffs, list):
            raise FormatError(f"{_where(path + ['coeffs'])}: expected a list of [k, \"p/q\"] pairs")
        vec: dict = {}
        for c, pair in enumerate(coeffs):
            cpath = path + ["coeffs", c]
            if not (isinstance(pair, list) and len(pair) == 2):
                raise FormatError(f"{_where(cpath)}: expected [k, \"p/q\"]")
            k, val = pair
            if isinstance(k, bool) or not isinstance(k, int) or not 1 <= k <= n:
                raise FormatError(f"{_where(cpath)}: basis index {k!r} outside 1..{n}")
            if isinstance(val, (bool, float)):
                raise FormatError(f"{_where(cpath)}: coefficient must be a \"p/q\" string or an integer")
            try:
                q = to_rational(val)
            except (FormatError, ValueError, ZeroDivisionError, TypeError):
                raise FormatError(f"{_where(cpath)}: bad rational {val!r}") from None
            vec[k - 1] = vec.get(k - 1, 0) + q
        brackets[(i - 1, j - 1)] = vec
    g = LieSuperAlgebra(n0, n1, brackets, names)
    return check_valid(g) if validate else g


def loads(text: str, validate: bool = True) -> LieSuperAlgebra:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return from_dict(data, validate)


def parse_algebra_file(path, validate: bool = True) -> LieSuperAlgebra:
    """Read and (by default) validate an algebra file.

    Raises ``OSError`` when the file cannot be read, :class:`FormatError` on
    malformed content and :class:`AxiomViolationError` when the constants
    break an axiom.
    """
    text = Path(path).read_text(encoding="utf-8")
    try:
        return loads(text, validate)
    except FormatError as exc:
        raise FormatError(f"{path}: {exc}") from None


def to_dict(g: LieSuperAlgebra) -> dict:
    entries = []
    for (i, j), v in sorted(g.brackets.items()):
        coeffs = [[k + 1, format_rational(c)] for k, c in enumerate(v) if c]
        entries.append({"i": i + 1, "j": j + 1, "coeffs": coeffs})
    return {"dim_even": g.dim_even, "dim_odd": g.dim_odd, "names": list(g.names), "brackets": entries}


def dumps(g: LieSuperAlgebra) -> str:
    """Canonical serialization (stable bytes for equal algebras with equal names).

    One bracket entry per line; the result is valid JSON.
    """
    d = to_dict(g)
    lines = [
        "{",
        f'  "dim_even": {d["dim_even"]},',
        f'  "dim_odd": {d["dim_odd"]},',
        f'  "names": {json.dumps(d["names"])},',
    ]
    if d["brackets"]:
        lines.append('  "brackets": [')
        body = [f"    {json.dumps(e)}" for e in d["brackets"]]
        lines.append(",\n".join(body))
        lines.append("  ]")
    else:
        lines.append('  "brackets": []')
    lines.append("}")
    return "\n".join(lines) + "\n"


def digest(g: LieSuperAlgebra) -> str:
    """sha256 of the compact canonical serialization."""
    compact = json.dumps(to_dict(g), separators=(",", ":"), sort_keys=True)
    return hashlib.sha256(compact.encode()).hexdigest()
