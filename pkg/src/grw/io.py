"""JSON encoding of towers, field elements and codes.

Code file layout::

    {"field": {"p": 2, "e": 1, "m": 2, "base_modulus": [0, 1],
               "ext_modulus": [[1], [1], [1]]},
     "generator": [[[[1], [0]], [[0], [1]]]]}

An extension element is m lists of e ints (constant term first at both
levels).  Moduli are optional and default to the least irreducible.
"""

from __future__ import annotations

from typing import Any, List

from .gf_arith import FieldTower, make_field
from .linalg import Subspace
from .rank_code import LinearCode, make_code


class CodeFileError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


def encode_vector(tower: FieldTower, x) -> List[List[List[int]]]:
    return [tower.ext_to_coeffs(a) for a in x]


def encode_subspace(V: Subspace) -> List[list]:
    """Basis rows; over F_q as lists of e ints, over F_{q^m} as ext elements."""
    F = V.field
    if F.sub is not None and F.sub.sub is not None:
        return [[[F.sub.coords(d) for d in F.coords(a)] for a in row] for row in V.basis]
    return [[F.coords(a) for a in row] for row in V.basis]


def code_to_json(C: LinearCode) -> dict:
    return {"field": C.tower.to_json(), "generator": [encode_vector(C.tower, r) for r in C.rows]}


def _int(obj: Any, path: str, lo: int = 0, hi: int | None = None) -> int:
    if not isinstance(obj, int) or isinstance(obj, bool):
        raise CodeFileError(path, f"expected integer, got {type(obj).__name__}")
    if obj < lo or (hi is not None and obj >= hi):
        raise CodeFileError(path, f"value {obj} outside [{lo}, {hi})")
    return obj


def _list(obj: Any, path: str, length: int | None = None) -> list:
    if not isinstance(obj, list):
        raise CodeFileError(path, f"expected array, got {type(obj).__name__}")
    if length is not None and len(obj) != length:
        raise CodeFileError(path, f"expected {length} entries, got {len(obj)}")
    return obj


def tower_from_json(obj: Any, path: str = "$.field") -> FieldTower:
    if not isinstance(obj, dict):
        raise CodeFileError(path, "expected object")
    for key in ("p", "e", "m"):
        if key not in obj:
            raise CodeFileError(f"{path}.{key}", "missing")
    p = _int(obj["p"], f"{path}.p", 2)
    e = _int(obj["e"], f"{path}.e", 1)
    m = _int(obj["m"], f"{path}.m", 1)
    base_mod = ext_mod = None
    if obj.get("base_modulus") is not None:
        raw = _list(obj["base_modulus"], f"{path}.base_modulus", e + 1)
        base_mod = tuple(_int(c, f"{path}.base_modulus[{i}]", 0, p) for i, c in enumerate(raw))
    try:
        if obj.get("ext_modulus") is not None:
            raw = _list(obj["ext_modulus"], f"{path}.ext_modulus", m + 1)
            base = make_field(p, e, 1, base_mod).base
            coeffs = []
            for i, c in enumerate(raw):
                cp = f"{path}.ext_modulus[{i}]"
                digits = [_int(d, f"{cp}[{j}]", 0, p) for j, d in enumerate(_list(c, cp, e))]
                coeffs.append(base.from_coords(digits))
            ext_mod = tuple(coeffs)
        return make_field(p, e, m, base_mod, ext_mod)
    except CodeFileError:
        raise
    except ValueError as exc:
        raise CodeFileError(path, str(exc)) from None


def code_from_json(obj: Any) -> LinearCode:
    if not isinstance(obj, dict):
        raise CodeFileError("$", "expected object")
    if "field" not in obj:
        raise CodeFileError("$.field", "missing")
    if "generator" not in obj:
        raise CodeFileError("$.generator", "missing")
    tower = tower_from_json(obj["field"])
    rows_raw = _list(obj["generator"], "$.generator")
    if not rows_raw:
        raise CodeFileError("$.generator", "needs at least one row")
    rows = []
    n = None
    for i, row in enumerate(rows_raw):
        rp = f"$.generator[{i}]"
        row = _list(row, rp, n)
        n = len(row)
        vec = []
        for j, elem in enumerate(row):
            ep = f"{rp}[{j}]"
            parts = _list(elem, ep, tower.m)
            for a, b in enumerate(parts):
                bp = f"{ep}[{a}]"
                for c, d in enumerate(_list(b, bp, tower.e)):
                    _int(d, f"{bp}[{c}]", 0, tower.p)
            vec.append(tower.ext_from_coeffs(parts))
        rows.append(vec)
    try:
        return make_code(tower, rows)
    except ValueError as exc:
        raise CodeFileError("$.generator", str(exc)) from None
