"""Exact homogeneous-coordinate geometry over the rationals.

Points and lines are stored in a canonical integer form (coprime entries,
first nonzero entry positive), so two projectively equal vectors compare
equal with ``==`` and hash identically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from numbers import Rational
from typing import Sequence

from .errors import (
    CoincidentLines,
    CoincidentPoints,
    DegenerateCrossRatio,
    NotCollinear,
    SingularMatrix,
)

__all__ = [
    "canonical",
    "ProjPoint2",
    "ProjLine2",
    "ProjPoint1",
    "ProjMap2",
    "Mobius",
    "join",
    "meet",
    "incident",
    "collinear",
    "cross_ratio_rp1",
    "cross_ratio_collinear",
    "affine_cross_ratio",
]


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, Rational)):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"expected an exact rational, got {type(v).__name__}")


def canonical(coords: Sequence) -> tuple[int, ...]:
    """Scale a nonzero rational vector to coprime integers with first nonzero entry > 0."""
    fr = [_as_fraction(c) for c in coords]
    if all(c == 0 for c in fr):
        raise ValueError("the zero vector is not a projective point")
    den = reduce(lcm, (c.denominator for c in fr), 1)
    ints = [int(c * den) for c in fr]
    g = reduce(gcd, ints, 0)
    ints = [c // g for c in ints]
    lead = next(c for c in ints if c != 0)
    if lead < 0:
        ints = [-c for c in ints]
    return tuple(ints)


def _cross(u: Sequence[int], v: Sequence[int]) -> tuple[int, int, int]:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def _det3(m) -> Fraction:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


class _Homogeneous:
    __slots__ = ("coords",)
    dim = 0

    def __init__(self, *coords):
        if len(coords) == 1 and not isinstance(coords[0], (int, Fraction, str)):
            coords = tuple(coords[0])
        if len(coords) != self.dim:
            raise ValueError(f"{type(self).__name__} needs {self.dim} coordinates")
        object.__setattr__(self, "coords", canonical(coords))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __eq__(self, other):
        return type(other) is type(self) and other.coords == self.coords

    def __hash__(self):
        return hash((type(self).__name__, self.coords))

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __repr__(self):
        return f"{type(self).__name__}{list(self.coords)}"


class ProjPoint2(_Homogeneous):
    """A point of the projective plane."""

    __slots__ = ()
    dim = 3


class ProjLine2(_Homogeneous):
    """A line of the projective plane, in dual coordinates."""

    __slots__ = ()
    dim = 3


class ProjPoint1(_Homogeneous):
    """A point of the projective line; ``t`` is ``[t : 1]``, infinity is ``[1 : 0]``."""

    __slots__ = ()
    dim = 2

    @classmethod
    def affine(cls, t) -> "ProjPoint1":
        return cls(_as_fraction(t), 1)

    @classmethod
    def infinity(cls) -> "ProjPoint1":
        return cls(1, 0)

    @property
    def is_infinite(self) -> bool:
        return self.coords[1] == 0

    def value(self) -> Fraction:
        """Affine value of a finite point."""
        if self.is_infinite:
            raise ValueError("point at infinity has no affine value")
        return Fraction(self.coords[0], self.coords[1])


def join(p: ProjPoint2, q: ProjPoint2) -> ProjLine2:
    """Line through two distinct points."""
    if p == q:
        raise CoincidentPoints(f"{p} = {q}")
    return ProjLine2(_cross(p.coords, q.coords))


def meet(l: ProjLine2, m: ProjLine2) -> ProjPoint2:
    """Intersection point of two distinct lines."""
    if l == m:
        raise CoincidentLines(f"{l} = {m}")
    return ProjPoint2(_cross(l.coords, m.coords))


def incident(p: ProjPoint2, l: ProjLine2) -> bool:
    return _dot(p.coords, l.coords) == 0


def collinear(a: ProjPoint2, b: ProjPoint2, c: ProjPoint2) -> bool:
    return _det3((a.coords, b.coords, c.coords)) == 0


def _det2(u: Sequence[int], v: Sequence[int]) -> int:
    return u[0] * v[1] - u[1] * v[0]


def cross_ratio_rp1(a: ProjPoint1, b: ProjPoint1, c: ProjPoint1, d: ProjPoint1) -> Fraction:
    """Cross ratio ``(a-b)(c-d) / ((a-c)(b-d))`` in homogeneous form."""
    den = _det2(a.coords, c.coords) * _det2(b.coords, d.coords)
    if den == 0:
        raise DegenerateCrossRatio("a = c or b = d")
    return Fraction(_det2(a.coords, b.coords) * _det2(c.coords, d.coords), den)


def affine_cross_ratio(t1, t2, t3, t4) -> Fraction:
    t1, t2, t3, t4 = map(_as_fraction, (t1, t2, t3, t4))
    den = (t1 - t3) * (t2 - t4)
    if den == 0:
        raise DegenerateCrossRatio("t1 = t3 or t2 = t4")
    return (t1 - t2) * (t3 - t4) / den


def _line_parameters(base0: ProjPoint2, base1: ProjPoint2, points):
    """Coordinates ``[l : m]`` of each point ``l*base0 + m*base1``."""
    u, v = base0.coords, base1.coords
    # pick a 2x2 minor of the spanning pair that is nonzero; any one works
    minors = [(abs(u[i] * v[j] - u[j] * v[i]), i, j) for i, j in ((0, 1), (0, 2), (1, 2))]
    _, i, j = max(minors)
    det = u[i] * v[j] - u[j] * v[i]
    out = []
    for p in points:
        w = p.coords
        lam = Fraction(w[i] * v[j] - w[j] * v[i], det)
        mu = Fraction(u[i] * w[j] - u[j] * w[i], det)
        out.append(ProjPoint1(lam, mu))
    return out


def cross_ratio_collinear(a: ProjPoint2, b: ProjPoint2, c: ProjPoint2, d: ProjPoint2) -> Fraction:
    """Cross ratio of four collinear points of the plane."""
    if a == c or b == d:
        raise DegenerateCrossRatio("a = c or b = d")
    line = join(a, c)
    for p in (b, d):
        if not incident(p, line):
            raise NotCollinear(f"{p} is not on {line}")
    return cross_ratio_rp1(*_line_parameters(a, c, (a, b, c, d)))


def _mat(rows, size):
    m = tuple(tuple(_as_fraction(x) for x in row) for row in rows)
    if len(m) != size or any(len(r) != size for r in m):
        raise ValueError(f"expected a {size}x{size} matrix")
    return m


@dataclass(frozen=True)
class ProjMap2:
    """Projective transformation of the plane given by an invertible 3x3 lift."""

    matrix: tuple

    def __post_init__(self):
        object.__setattr__(self, "matrix", _mat(self.matrix, 3))
        if _det3(self.matrix) == 0:
            raise SingularMatrix("projective map needs a nonzero determinant")

    @classmethod
    def identity(cls) -> "ProjMap2":
        return cls(((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    @property
    def det(self) -> Fraction:
        return _det3(self.matrix)

    @property
    def trace(self) -> Fraction:
        return sum(self.matrix[i][i] for i in range(3))

    def apply(self, p: ProjPoint2) -> ProjPoint2:
        return ProjPoint2([_dot(row, p.coords) for row in self.matrix])

    __call__ = apply

    def compose(self, other: "ProjMap2") -> "ProjMap2":
        """``self`` after ``other``."""
        a, b = self.matrix, other.matrix
        return ProjMap2(
            [[sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
        )

    __matmul__ = compose

    def scaled(self, s) -> "ProjMap2":
        s = _as_fraction(s)
        return ProjMap2([[s * x for x in row] for row in self.matrix])

    def inverse(self) -> "ProjMap2":
        m = self.matrix
        det = self.det
        cof = [
            [
                (m[(j + 1) % 3][(i + 1) % 3] * m[(j + 2) % 3][(i + 2) % 3]
                 - m[(j + 1) % 3][(i + 2) % 3] * m[(j + 2) % 3][(i + 1) % 3])
                for j in range(3)
            ]
            for i in range(3)
        ]
        return ProjMap2([[c / det for c in row] for row in cof])

    def power(self, k: int) -> "ProjMap2":
        base = self if k >= 0 else self.inverse()
        out = ProjMap2.identity()
        for _ in range(abs(k)):
            out = base @ out
        return out

    def projectively_equal(self, other: "ProjMap2") -> bool:
        """True when the two lifts differ by a nonzero scalar."""
        a = [x for row in self.matrix for x in row]
        b = [x for row in other.matrix for x in row]
        return canonical(a) == canonical(b)

    def is_identity(self) -> bool:
        return self.projectively_equal(ProjMap2.identity())


@dataclass(frozen=True)
class Mobius:
    """Projective transformation of the line, ``[a:b] -> M [a:b]``."""

    matrix: tuple

    def __post_init__(self):
        object.__setattr__(self, "matrix", _mat(self.matrix, 2))
        if self.det == 0:
            raise SingularMatrix("Mobius map needs a nonzero determinant")

    @classmethod
    def identity(cls) -> "Mobius":
        return cls(((1, 0), (0, 1)))

    @classmethod
    def translation(cls, s) -> "Mobius":
        return cls(((1, s), (0, 1)))

    @property
    def det(self) -> Fraction:
        (a, b), (c, d) = self.matrix
        return a * d - b * c

    def apply(self, p: ProjPoint1) -> ProjPoint1:
        (a, b), (c, d) = self.matrix
        u, v = p.coords
        return ProjPoint1(a * u + b * v, c * u + d * v)

    __call__ = apply

    def compose(self, other: "Mobius") -> "Mobius":
        a, b = self.matrix, other.matrix
        return Mobius(
            [[sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
        )

    __matmul__ = compose

    def inverse(self) -> "Mobius":
        (a, b), (c, d) = self.matrix
        det = self.det
        return Mobius(((d / det, -b / det), (-c / det, a / det)))

    def power(self, k: int) -> "Mobius":
        base = self if k >= 0 else self.inverse()
        out = Mobius.identity()
        for _ in range(abs(k)):
            out = base @ out
        return out

    def symmetric_square(self) -> ProjMap2:
        """Lift to the plane preserving the conic ``XZ = Y^2`` via ``[a:b] -> [a^2, ab, b^2]``."""
        (a, b), (c, d) = self.matrix
        return ProjMap2(
            (
                (a * a, 2 * a * b, b * b),
                (a * c, a * d + b * c, b * d),
                (c * c, 2 * c * d, d * d),
            )
        )
