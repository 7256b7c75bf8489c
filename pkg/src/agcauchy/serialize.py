"""JSON and line-oriented file formats.

Code-spec file::

    {"field": {"p": 2, "m": 2, "modulus": [1, 1, 1]},
     "curve": {"r": 2, "polys": ["X1^3 + X2^2 + X2"], "genus": 1, "pole_orders": [2, 3]},
     "a": 5,
     "points": "all"}

``"curve"`` may instead name a catalog entry: ``{"catalog": "hermitian", "q0": 2}``
or ``{"catalog": "line"}`` (the latter over ``"field"``).

Word files hold one vector per line, symbols as canonical integers
separated by spaces.
"""

from __future__ import annotations

import json
from pathlib import Path

from .agcode import CodeSpec, CurveSpec, build_code, hermitian, projective_line
from .gf import field_from_json
from .groebner import GroebnerBasis, buchberger
from .polyring import MonomialOrder, PolyRing
from .series import TruncatedSeries


def curve_from_json(obj: dict, field=None) -> CurveSpec:
    cat = obj.get("catalog")
    if cat == "hermitian":
        return hermitian(int(obj["q0"]))
    if cat == "line":
        if field is None:
            raise ValueError("catalog curve 'line' needs a field")
        return projective_line(field)
    if cat is not None:
        raise ValueError(f"unknown catalog curve {cat!r}")
    if field is None:
        raise ValueError("custom curve needs a field")
    poles = obj["pole_orders"]
    return CurveSpec(
        field,
        int(obj.get("r", len(poles))),
        list(obj.get("polys", [])),
        int(obj["genus"]),
        tuple(poles),
        name=obj.get("name", "custom"),
    )


def code_from_json(obj: dict) -> CodeSpec:
    field = field_from_json(obj["field"]) if "field" in obj else None
    curve = curve_from_json(obj["curve"], field)
    if field is not None and field != curve.field:
        raise ValueError("curve field differs from the declared field")
    pts = obj.get("points", "all")
    return build_code(curve, int(obj["a"]), None if pts == "all" else pts)


def load_code(path) -> CodeSpec:
    return code_from_json(json.loads(Path(path).read_text()))


def read_words(path) -> list[list[int]]:
    out = []
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append([int(x) for x in line.split()])
    return out


def format_words(words) -> str:
    return "".join(" ".join(str(int(x)) for x in w) + "\n" for w in words)


def write_words(path, words) -> None:
    Path(path).write_text(format_words(words))


def basis_from_json(obj: dict) -> GroebnerBasis:
    """Parse a basis file and return the reduced Gröbner basis of its ideal."""
    field = field_from_json(obj["field"])
    ring = PolyRing(field, MonomialOrder(tuple(obj["order"]["weights"])))
    return buchberger([ring.parse(p) for p in obj["polys"]], ring)


def initial_from_json(obj) -> dict:
    """``[[alpha, value], ...]`` -> ``{alpha: value}``."""
    items = obj["initial"] if isinstance(obj, dict) else obj
    return {tuple(a) if isinstance(a, list) else (int(a),): int(v) for a, v in items}


def series_to_json(s: TruncatedSeries) -> dict:
    return s.to_json()


def series_from_json(field, obj: dict) -> TruncatedSeries:
    return TruncatedSeries.from_json(field, obj)
