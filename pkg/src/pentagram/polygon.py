"""Twisted polygons, the pentagram map and corner invariants.

Vertex labels are 1-based and cyclic: ``vertex_at(P, i + n)`` is the image
of ``vertex_at(P, i)`` under the monodromy.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Sequence

from .errors import (
    CoincidentLines,
    CoincidentPoints,
    DegenerateCrossRatio,
    DegenerateFrame,
    DegenerateWindow,
    GenerationFailed,
    NotCollinear,
    SingularMatrix,
)
from .projective import (
    ProjMap2,
    ProjPoint2,
    collinear,
    cross_ratio_collinear,
    join,
    meet,
)

__all__ = [
    "CornerInvariants",
    "TwistedPolygon",
    "vertex_at",
    "pentagram_map",
    "corner_invariants",
    "random_twisted",
    "projectively_equivalent",
    "frame_map",
]

_GEOMETRY_ERRORS = (CoincidentPoints, CoincidentLines, DegenerateCrossRatio, NotCollinear)


def _cyc(i: int, n: int) -> int:
    """0-based slot of the 1-based cyclic index ``i``."""
    return (i - 1) % n


@dataclass(frozen=True)
class CornerInvariants:
    """Cyclic sequences ``x_1..x_n`` and ``y_1..y_n``."""

    x: tuple
    y: tuple

    def __post_init__(self):
        x = tuple(Fraction(v) for v in self.x)
        y = tuple(Fraction(v) for v in self.y)
        if len(x) != len(y):
            raise ValueError("x and y must have the same length")
        if not x:
            raise ValueError("empty corner sequence")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @property
    def n(self) -> int:
        return len(self.x)

    def xi(self, i: int) -> Fraction:
        return self.x[_cyc(i, self.n)]

    def yi(self, i: int) -> Fraction:
        return self.y[_cyc(i, self.n)]

    def X(self, i: int) -> Fraction:
        """Block monomial ``x_i y_i x_{i+1}``."""
        return self.xi(i) * self.yi(i) * self.xi(i + 1)

    def Y(self, j: int) -> Fraction:
        """Mirror block monomial ``y_{j-1} x_j y_j``."""
        return self.yi(j - 1) * self.xi(j) * self.yi(j)

    def sigma(self) -> "CornerInvariants":
        """Orientation reversal ``x_i -> y_{-i}``, ``y_i -> x_{-i}``."""
        n = self.n
        return CornerInvariants(
            [self.yi(-i) for i in range(1, n + 1)],
            [self.xi(-i) for i in range(1, n + 1)],
        )

    def rescaled(self, t) -> "CornerInvariants":
        """The rescaling ``x -> t x``, ``y -> y / t``."""
        t = Fraction(t)
        return CornerInvariants([t * v for v in self.x], [v / t for v in self.y])

    def shifted(self, s: int) -> "CornerInvariants":
        """Relabel so that new index ``i`` carries old index ``i + s``."""
        n = self.n
        return CornerInvariants(
            [self.xi(i + s) for i in range(1, n + 1)],
            [self.yi(i + s) for i in range(1, n + 1)],
        )


@dataclass(frozen=True)
class TwistedPolygon:
    """Vertex representatives ``v_1..v_n`` and a monodromy ``M`` with ``v_{i+n} = M v_i``."""

    vertices: tuple
    monodromy: ProjMap2 = field(default_factory=ProjMap2.identity)

    def __post_init__(self):
        verts = tuple(v if isinstance(v, ProjPoint2) else ProjPoint2(v) for v in self.vertices)
        if len(verts) < 5:
            raise ValueError(f"a twisted polygon needs n >= 5 vertices, got {len(verts)}")
        object.__setattr__(self, "vertices", verts)
        if not isinstance(self.monodromy, ProjMap2):
            object.__setattr__(self, "monodromy", ProjMap2(self.monodromy))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def is_closed(self) -> bool:
        return self.monodromy.is_identity()

    @cached_property
    def _inverse_monodromy(self) -> ProjMap2:
        return self.monodromy.inverse()

    def vertex(self, i: int) -> ProjPoint2:
        k, r = divmod(i - 1, self.n)
        v = self.vertices[r]
        step = self.monodromy if k > 0 else self._inverse_monodromy
        for _ in range(abs(k)):
            v = step.apply(v)
        return v

    def window(self, i: int) -> tuple:
        """The five vertices ``v_{i-2}..v_{i+2}``."""
        return tuple(self.vertex(j) for j in range(i - 2, i + 3))

    def transformed(self, g: ProjMap2) -> "TwistedPolygon":
        """Image under a projective map; the monodromy is conjugated."""
        return TwistedPolygon(
            tuple(g.apply(v) for v in self.vertices),
            g @ self.monodromy @ g.inverse(),
        )

    def relabeled(self, s: int) -> "TwistedPolygon":
        """Relabel so that new vertex ``i`` is old vertex ``i + s``."""
        return TwistedPolygon(
            tuple(self.vertex(i + s) for i in range(1, self.n + 1)), self.monodromy
        )


def vertex_at(P: TwistedPolygon, i: int) -> ProjPoint2:
    return P.vertex(i)


def _check_window(P: TwistedPolygon, i: int) -> tuple:
    pts = P.window(i)
    for a, b, c in combinations(pts, 3):
        if collinear(a, b, c):
            raise DegenerateWindow(f"window around vertex {i} is not in general position")
    return pts


def _corner_pair(pts) -> tuple[Fraction, Fraction]:
    a, b, c, d, e = pts  # v_{i-2}, v_{i-1}, v_i, v_{i+1}, v_{i+2}
    left = join(a, b)
    x = cross_ratio_collinear(a, b, meet(left, join(c, d)), meet(left, join(d, e)))
    right = join(e, d)
    y = cross_ratio_collinear(e, d, meet(right, join(c, b)), meet(right, join(b, a)))
    return x, y


def corner_invariants(P: TwistedPolygon) -> CornerInvariants:
    """Corner invariants ``x_i``, ``y_i`` of every vertex."""
    xs, ys = [], []
    for i in range(1, P.n + 1):
        pts = _check_window(P, i)
        try:
            x, y = _corner_pair(pts)
        except _GEOMETRY_ERRORS as exc:
            raise DegenerateWindow(f"vertex {i}: {exc}") from exc
        xs.append(x)
        ys.append(y)
    return CornerInvariants(xs, ys)


def pentagram_map(P: TwistedPolygon) -> TwistedPolygon:
    """Image vertex ``w_i`` is the meet of diagonals ``(v_{i-1} v_{i+1})`` and ``(v_i v_{i+2})``."""
    out = []
    for i in range(1, P.n + 1):
        try:
            out.append(
                meet(
                    join(P.vertex(i - 1), P.vertex(i + 1)),
                    join(P.vertex(i), P.vertex(i + 2)),
                )
            )
        except _GEOMETRY_ERRORS as exc:
            raise DegenerateWindow(f"diagonals at vertex {i}: {exc}") from exc
    return TwistedPolygon(tuple(out), P.monodromy)


def _random_point(rng: random.Random, bound: int) -> ProjPoint2:
    while True:
        c = [rng.randint(-bound, bound) for _ in range(3)]
        if any(c):
            return ProjPoint2(c)


def _random_map(rng: random.Random, bound: int) -> ProjMap2:
    while True:
        try:
            return ProjMap2([[rng.randint(-bound, bound) for _ in range(3)] for _ in range(3)])
        except SingularMatrix:
            continue


def random_twisted(
    n: int,
    seed: int,
    coordinate_bound: int = 10,
    *,
    closed: bool = False,
    max_tries: int = 1000,
) -> TwistedPolygon:
    """Random integer twisted n-gon whose corner invariants are all defined.

    Deterministic in ``seed``.  With ``closed=True`` the monodromy is the
    identity.
    """
    if n < 5:
        raise ValueError(f"n must be at least 5, got {n}")
    rng = random.Random(seed)
    for _ in range(max_tries):
        verts = tuple(_random_point(rng, coordinate_bound) for _ in range(n))
        mono = ProjMap2.identity() if closed else _random_map(rng, coordinate_bound)
        P = TwistedPolygon(verts, mono)
        try:
            corner_invariants(P)
        except DegenerateWindow:
            continue
        return P
    raise GenerationFailed(f"no generic {n}-gon after {max_tries} attempts (seed={seed})")


def _solve3(m, rhs):
    det = (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )
    if det == 0:
        return None
    out = []
    for col in range(3):
        mc = [[rhs[r] if c == col else m[r][c] for c in range(3)] for r in range(3)]
        d = (
            mc[0][0] * (mc[1][1] * mc[2][2] - mc[1][2] * mc[2][1])
            - mc[0][1] * (mc[1][0] * mc[2][2] - mc[1][2] * mc[2][0])
            + mc[0][2] * (mc[1][0] * mc[2][1] - mc[1][1] * mc[2][0])
        )
        out.append(Fraction(d) / det)
    return out


def _frame_matrix(a, b, c, d) -> ProjMap2:
    """Map sending e1, e2, e3, (1,1,1) to a, b, c, d."""
    cols = [a.coords, b.coords, c.coords]
    m = [[cols[j][i] for j in range(3)] for i in range(3)]
    lam = _solve3(m, d.coords)
    if lam is None or any(v == 0 for v in lam):
        raise DegenerateFrame("four points not in general position")
    return ProjMap2([[m[i][j] * lam[j] for j in range(3)] for i in range(3)])


def frame_map(src: Sequence[ProjPoint2], dst: Sequence[ProjPoint2]) -> ProjMap2:
    """The unique projective map carrying four points in general position to four others."""
    return _frame_matrix(*dst) @ _frame_matrix(*src).inverse()


def projectively_equivalent(P: TwistedPolygon, Q: TwistedPolygon, shift: int = 0) -> bool:
    """True iff some projective map sends ``v_i(P)`` to ``v_{i+shift}(Q)`` for all i.

    The map must also conjugate the monodromy of P into that of Q.  Raises
    ``DegenerateFrame`` when ``v_1..v_4`` of P are not in general position.
    """
    if P.n != Q.n:
        return False
    src_frame = _frame_matrix(*[P.vertex(i) for i in range(1, 5)])
    try:
        dst_frame = _frame_matrix(*[Q.vertex(i + shift) for i in range(1, 5)])
    except DegenerateFrame:
        return False
    g = dst_frame @ src_frame.inverse()
    for i in range(1, P.n + 1):
        if g.apply(P.vertex(i)) != Q.vertex(i + shift):
            return False
    return (g @ P.monodromy).projectively_equal(Q.monodromy @ g)
