"""JSON (de)serialization of polygons, inscribed data and reports.

Rationals travel as strings ``"p/q"`` (or ``"p"`` when q = 1) in lowest terms.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .inscribed import InscribedData, PCoordinates
from .invariants import InvariantSet, TraceInvariants
from .polygon import TwistedPolygon
from .projective import Mobius, ProjMap2

__all__ = [
    "format_rational",
    "parse_rational",
    "polygon_to_json",
    "polygon_from_json",
    "inscribed_from_json",
    "inscribed_to_json",
    "invariant_report",
    "dumps",
]


def format_rational(v) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def parse_rational(s) -> Fraction:
    if isinstance(s, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str):
        return Fraction(s.strip())
    raise ValueError(f"expected a rational string or integer, got {s!r}")


def _matrix(data, size: int):
    if not isinstance(data, list) or len(data) != size or any(
        not isinstance(r, list) or len(r) != size for r in data
    ):
        raise ValueError(f"expected a {size}x{size} matrix")
    return [[parse_rational(v) for v in row] for row in data]


def polygon_to_json(P: TwistedPolygon) -> dict:
    out: dict = {"n": P.n, "vertices": [[format_rational(c) for c in v.coords] for v in P.vertices]}
    if not P.is_closed:
        out["monodromy"] = [[format_rational(c) for c in row] for row in P.monodromy.matrix]
    return out


def polygon_from_json(data: dict) -> TwistedPolygon:
    if not isinstance(data, dict) or "vertices" not in data:
        raise ValueError("polygon JSON needs a 'vertices' list")
    verts = data["vertices"]
    if not isinstance(verts, list) or any(not isinstance(v, list) or len(v) != 3 for v in verts):
        raise ValueError("each vertex must be a list of three numbers")
    if "n" in data and data["n"] != len(verts):
        raise ValueError(f"n = {data['n']} but {len(verts)} vertices given")
    mono = ProjMap2(_matrix(data["monodromy"], 3)) if "monodromy" in data else ProjMap2.identity()
    return TwistedPolygon(tuple([parse_rational(c) for c in v] for v in verts), mono)


def inscribed_from_json(data: dict):
    """Either :class:`InscribedData` (``params``) or :class:`PCoordinates` (``p``)."""
    if not isinstance(data, dict):
        raise ValueError("inscribed JSON must be an object")
    if "p" in data:
        p = [parse_rational(v) for v in data["p"]]
        if "n" in data and data["n"] != len(p):
            raise ValueError("n does not match the number of p values")
        return PCoordinates(p)
    if "params" in data:
        params = [parse_rational(v) for v in data["params"]]
        if "n" in data and data["n"] != len(params):
            raise ValueError("n does not match the number of params")
        mob = Mobius(_matrix(data["mobius"], 2)) if "mobius" in data else Mobius.identity()
        return InscribedData(tuple(params), mob)
    raise ValueError("inscribed JSON needs 'params' or 'p'")


def inscribed_to_json(D: InscribedData) -> dict:
    return {
        "n": D.n,
        "params": [format_rational(t.value()) for t in D.params],
        "mobius": [[format_rational(c) for c in row] for row in D.mobius.matrix],
    }


def invariant_report(inv: InvariantSet, trace: TraceInvariants | None = None, **extra) -> dict:
    out: dict[str, Any] = {
        "n": inv.n,
        "O": {str(k): format_rational(v) for k, v in sorted(inv.O.items())},
        "E": {str(k): format_rational(v) for k, v in sorted(inv.E.items())},
        "On": format_rational(inv.On),
        "En": format_rational(inv.En),
    }
    if trace is not None:
        out.update(
            omega1=format_rational(trace.omega1),
            omega2=format_rational(trace.omega2),
            tilde1=format_rational(trace.tilde1),
            tilde2=format_rational(trace.tilde2),
        )
    out.update(extra)
    return out


def _default(o):
    if isinstance(o, Fraction):
        return format_rational(o)
    raise TypeError(f"cannot serialize {type(o).__name__}")


def dumps(obj) -> str:
    """Deterministic JSON: sorted keys, rationals as strings."""
    return json.dumps(obj, sort_keys=True, indent=2, default=_default)
