"""Polygons inscribed in the conic ``XZ = Y^2`` and their p-coordinates."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DegenerateCrossRatio, DegenerateWindow, GenerationFailed, InvalidP, SingularMatrix
from .polygon import CornerInvariants, TwistedPolygon
from .projective import Mobius, ProjPoint1, ProjPoint2, cross_ratio_rp1

__all__ = [
    "PCoordinates",
    "InscribedData",
    "p_from_params",
    "corner_from_p",
    "veronese_point",
    "veronese_polygon",
    "reverse_p",
    "random_inscribed",
    "random_p",
]


@dataclass(frozen=True)
class PCoordinates:
    """Cyclic sequence ``p_1..p_n`` with every ``p_i`` outside ``{0, 1}``."""

    p: tuple

    def __post_init__(self):
        p = tuple(Fraction(v) for v in self.p)
        bad = [i + 1 for i, v in enumerate(p) if v in (0, 1)]
        if bad:
            raise InvalidP(f"p_i must avoid 0 and 1; offending indices {bad}")
        if not p:
            raise ValueError("empty p sequence")
        object.__setattr__(self, "p", p)

    @property
    def n(self) -> int:
        return len(self.p)

    def at(self, i: int) -> Fraction:
        return self.p[(i - 1) % self.n]


@dataclass(frozen=True)
class InscribedData:
    """Conic parameters ``t_1..t_n`` with ``t_{i+n} = mobius(t_i)``."""

    params: tuple
    mobius: Mobius = field(default_factory=Mobius.identity)

    def __post_init__(self):
        params = tuple(
            t if isinstance(t, ProjPoint1) else ProjPoint1.affine(t) for t in self.params
        )
        if len(params) < 5:
            raise ValueError("an inscribed twisted polygon needs n >= 5")
        object.__setattr__(self, "params", params)
        if not isinstance(self.mobius, Mobius):
            object.__setattr__(self, "mobius", Mobius(self.mobius))

    @property
    def n(self) -> int:
        return len(self.params)

    def param(self, i: int) -> ProjPoint1:
        k, r = divmod(i - 1, self.n)
        t = self.params[r]
        step = self.mobius if k > 0 else self.mobius.inverse()
        for _ in range(abs(k)):
            t = step.apply(t)
        return t


def p_from_params(D: InscribedData) -> PCoordinates:
    """``p_i = 1 - [t_{i-2}, t_{i-1}, t_i, t_{i+1}]``."""
    out = []
    for i in range(1, D.n + 1):
        window = [D.param(j) for j in range(i - 2, i + 2)]
        if len(set(window)) < 4:
            raise DegenerateWindow(f"repeated conic parameter in the window of p_{i}")
        try:
            out.append(1 - cross_ratio_rp1(*window))
        except DegenerateCrossRatio as exc:
            raise DegenerateWindow(f"p_{i}: {exc}") from exc
    return PCoordinates(out)


def corner_from_p(p: PCoordinates) -> CornerInvariants:
    """``x_i = (1 - p_i) / p_{i+1}``, ``y_i = (1 - p_{i+1}) / p_i``."""
    n = p.n
    xs = [(1 - p.at(i)) / p.at(i + 1) for i in range(1, n + 1)]
    ys = [(1 - p.at(i + 1)) / p.at(i) for i in range(1, n + 1)]
    return CornerInvariants(xs, ys)


def veronese_point(t: ProjPoint1) -> ProjPoint2:
    a, b = t.coords
    return ProjPoint2(a * a, a * b, b * b)


def veronese_polygon(D: InscribedData) -> TwistedPolygon:
    """Twisted polygon on ``XZ = Y^2`` whose monodromy induces ``D.mobius`` on the conic."""
    return TwistedPolygon(
        tuple(veronese_point(t) for t in D.params), D.mobius.symmetric_square()
    )


def reverse_p(p: PCoordinates) -> PCoordinates:
    """Orientation reversal: entry i of the result is ``p_{1-i}``."""
    return PCoordinates([p.at(1 - i) for i in range(1, p.n + 1)])


def _random_fraction(rng: random.Random, bound: int) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_inscribed(
    n: int, seed: int, bound: int = 12, *, closed: bool = False, max_tries: int = 1000
) -> InscribedData:
    """Random rational conic parameters and Mobius monodromy, with all windows nondegenerate."""
    if n < 5:
        raise ValueError(f"n must be at least 5, got {n}")
    rng = random.Random(seed)
    for _ in range(max_tries):
        params = [_random_fraction(rng, bound) for _ in range(n)]
        if closed:
            mob = Mobius.identity()
        else:
            try:
                mob = Mobius([[rng.randint(-bound, bound) for _ in range(2)] for _ in range(2)])
            except SingularMatrix:
                continue
        D = InscribedData(tuple(params), mob)
        # every 5-window of vertices must be five distinct conic points
        if any(len({D.param(j) for j in range(i - 2, i + 3)}) < 5 for i in range(1, n + 1)):
            continue
        try:
            p_from_params(D)
        except (DegenerateWindow, InvalidP):
            continue
        return D
    raise GenerationFailed(f"no valid inscribed {n}-gon after {max_tries} attempts")


def random_p(n: int, seed: int, bound: int = 12) -> PCoordinates:
    """Random rational p-coordinates avoiding 0 and 1."""
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        v = _random_fraction(rng, bound)
        if v not in (0, 1):
            out.append(v)
    return PCoordinates(out)
