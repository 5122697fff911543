"""Monodromy invariants: combinatorial, determinantal and trace-based.

Monomial terms are the single variables ``x_i`` and the blocks
``X_i = x_i y_i x_{i+1}``.  A term's *footprint* is the set of x-indices it
touches (``{i}`` or ``{i, i+1}``); a set of terms is admissible when all
pairwise cyclic footprint distances are at least 2.  Equivalently, each
term occupies a tile one column wider than its footprint and tiles do not
overlap, which is what the transfer DP below enumerates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .errors import BadWeight, InterpolationDegenerate, SingularMonodromy
from .polygon import CornerInvariants, TwistedPolygon, corner_invariants

__all__ = [
    "SingleX",
    "BlockX",
    "MonomialTerm",
    "AdmissibleMonomial",
    "InvariantSet",
    "TraceInvariants",
    "OpenCorners",
    "is_consecutive",
    "admissible_monomials",
    "combinatorial_O",
    "combinatorial_E",
    "combinatorial_E_direct",
    "O_weight_polynomial",
    "E_weight_polynomial",
    "brute_force_O",
    "product_invariants",
    "invariant_set",
    "trace_invariants",
    "rational_cube_root",
    "alternating_sums_from_trace",
    "banded_det_F",
    "banded_det_G",
    "det_sum_O",
    "det_sum_E",
    "open_det_sum",
    "open_combinatorial_sums",
    "weight_grade",
    "exact_det",
]


# -- monomial terms ---------------------------------------------------------

SingleX = "x"
BlockX = "X"


@dataclass(frozen=True, order=True)
class MonomialTerm:
    """``x_i`` (kind ``"x"``) or ``X_i`` (kind ``"X"``), with 1-based cyclic index."""

    kind: str
    index: int

    def __post_init__(self):
        if self.kind not in (SingleX, BlockX):
            raise ValueError(f"unknown term kind {self.kind!r}")

    def footprint(self, n: int) -> frozenset:
        i = (self.index - 1) % n + 1
        if self.kind == SingleX:
            return frozenset({i})
        return frozenset({i, i % n + 1})

    def tile(self, n: int) -> tuple:
        """Columns covered by the substituted tile: footprint plus the next column."""
        i = (self.index - 1) % n
        width = 2 if self.kind == SingleX else 3
        return tuple((i + j) % n + 1 for j in range(width))

    def value(self, c: CornerInvariants) -> Fraction:
        return c.xi(self.index) if self.kind == SingleX else c.X(self.index)

    def __str__(self):
        return f"{self.kind}_{self.index}"


def _cyclic_distance(a: int, b: int, n: int) -> int:
    d = abs(a - b) % n
    return min(d, n - d)


def is_consecutive(a: MonomialTerm, b: MonomialTerm, n: int) -> bool:
    """Whether two terms touch or share an x-variable on the n-cycle."""
    return min(
        _cyclic_distance(i, j, n) for i in a.footprint(n) for j in b.footprint(n)
    ) <= 1


@dataclass(frozen=True)
class AdmissibleMonomial:
    terms: frozenset

    @property
    def weight(self) -> int:
        return len(self.terms)

    @property
    def sign(self) -> int:
        return -1 if sum(t.kind == BlockX for t in self.terms) % 2 else 1

    def value(self, c: CornerInvariants) -> Fraction:
        out = Fraction(self.sign)
        for t in self.terms:
            out *= t.value(c)
        return out


def admissible_monomials(n: int, k: int) -> list[AdmissibleMonomial]:
    """All admissible monomials of weight k on the n-cycle (depth-first placement)."""
    if k < 0:
        raise BadWeight(f"negative weight {k}")
    terms = [MonomialTerm(kind, i) for i in range(1, n + 1) for kind in (SingleX, BlockX)]
    out: list[AdmissibleMonomial] = []

    def place(start: int, chosen: list, used: set):
        if len(chosen) == k:
            out.append(AdmissibleMonomial(frozenset(chosen)))
            return
        for pos in range(start, len(terms)):
            t = terms[pos]
            fp = t.footprint(n)
            if any(_cyclic_distance(i, j, n) <= 1 for i in fp for j in used):
                continue
            chosen.append(t)
            place(pos + 1, chosen, used | fp)
            chosen.pop()

    place(0, [], set())
    return out


# -- transfer DP over tilings of the cycle ------------------------------------

def _poly_add(acc: dict, poly: dict, factor, shift: int) -> None:
    if factor == 0:
        return
    for w, v in poly.items():
        acc[w + shift] = acc.get(w + shift, 0) + factor * v


def _cyclic_tiling_poly(n: int, tiles_at: Callable[[int], Sequence]) -> dict:
    """Weight polynomial of signed tilings of the n-cycle.

    ``tiles_at(s)`` lists ``(width, value, weight)`` for tiles starting at
    column ``s`` (1-based); an empty column ``(1, 1, 0)`` must be included.
    """
    total: dict = {}
    # condition on the tile covering column 1: it starts at column 1, n or n-1
    for back in range(3):
        start = 1 - back
        for width, value, weight in tiles_at((start - 1) % n + 1):
            if width <= back or width > n or value == 0:
                continue
            # linear DP over the columns after this tile, up to column start + n - 1
            length = n - width
            f = [dict() for _ in range(length + 1)]
            f[0] = {weight: Fraction(value)}
            first = start + width
            for p in range(length):
                if not f[p]:
                    continue
                col = (first + p - 1) % n + 1
                for w2, v2, wt2 in tiles_at(col):
                    if p + w2 <= length:
                        _poly_add(f[p + w2], f[p], v2, wt2)
            _poly_add(total, f[length], 1, 0)
    return {w: v for w, v in total.items() if v != 0}


def _o_tiles(c: CornerInvariants):
    def tiles(s: int):
        return ((1, 1, 0), (2, c.xi(s), 1), (3, -c.X(s), 1))
    return tiles


def _e_tiles(c: CornerInvariants):
    # y_s has footprint {s}; Y_{s+1} has footprint {s, s+1}
    def tiles(s: int):
        return ((1, 1, 0), (2, c.yi(s), 1), (3, -c.Y(s + 1), 1))
    return tiles


def O_weight_polynomial(c: CornerInvariants) -> dict:
    """``{k: O_k}`` for every weight k (including 0) with a nonzero value."""
    return _cyclic_tiling_poly(c.n, _o_tiles(c))


def E_weight_polynomial(c: CornerInvariants) -> dict:
    return _cyclic_tiling_poly(c.n, _e_tiles(c))


def _check_weight(n: int, k: int) -> None:
    if not 1 <= k <= n // 2:
        raise BadWeight(f"weight must lie in 1..{n // 2}, got {k}")


def combinatorial_O(c: CornerInvariants, k: int) -> Fraction:
    """Signed sum of all admissible monomials of weight k."""
    _check_weight(c.n, k)
    return O_weight_polynomial(c).get(k, Fraction(0))


def combinatorial_E_direct(c: CornerInvariants, k: int) -> Fraction:
    """E_k built from ``y_i`` and ``Y_j = y_{j-1} x_j y_j``."""
    _check_weight(c.n, k)
    return E_weight_polynomial(c).get(k, Fraction(0))


def combinatorial_E(c: CornerInvariants, k: int) -> Fraction:
    """E_k, computed directly and through the orientation reversal; both must agree."""
    direct = combinatorial_E_direct(c, k)
    mirrored = combinatorial_O(c.sigma(), k)
    if direct != mirrored:
        raise AssertionError(f"E_{k}: direct {direct} != mirrored {mirrored}")
    return direct


def _listed_consecutive(a: MonomialTerm, b: MonomialTerm, n: int) -> bool:
    # the three explicit criteria, written out independently of footprints
    def near(i, j, offsets):
        return any((j - i - o) % n == 0 for o in offsets)

    if a.kind == BlockX and b.kind == BlockX:
        return near(a.index, b.index, (-2, -1, 0, 1, 2))
    if a.kind == BlockX:
        return near(a.index, b.index, (-1, 0, 1, 2))
    if b.kind == BlockX:
        return near(b.index, a.index, (-1, 0, 1, 2))
    return near(a.index, b.index, (-1, 0, 1))


def brute_force_O(c: CornerInvariants, k: int) -> Fraction:
    """Reference O_k: every k-subset of the 2n terms, filtered by the explicit criteria."""
    n = c.n
    terms = [MonomialTerm(kind, i) for i in range(1, n + 1) for kind in (SingleX, BlockX)]
    total = Fraction(0)
    for subset in combinations(terms, k):
        if any(_listed_consecutive(a, b, n) for a, b in combinations(subset, 2)):
            continue
        total += AdmissibleMonomial(frozenset(subset)).value(c)
    return total


# -- product and trace invariants ----------------------------------------------

def product_invariants(c: CornerInvariants) -> tuple[Fraction, Fraction]:
    """``(O_n, E_n) = (prod x_i, prod y_i)``."""
    on, en = Fraction(1), Fraction(1)
    for x, y in zip(c.x, c.y):
        on *= x
        en *= y
    return on, en


@dataclass(frozen=True)
class InvariantSet:
    n: int
    O: dict
    E: dict
    On: Fraction
    En: Fraction

    def as_tuple(self) -> tuple:
        return (
            tuple(sorted(self.O.items())),
            tuple(sorted(self.E.items())),
            self.On,
            self.En,
        )


def invariant_set(c: CornerInvariants) -> InvariantSet:
    n = c.n
    opoly = O_weight_polynomial(c)
    epoly = E_weight_polynomial(c)
    on, en = product_invariants(c)
    return InvariantSet(
        n=n,
        O={k: opoly.get(k, Fraction(0)) for k in range(1, n // 2 + 1)},
        E={k: epoly.get(k, Fraction(0)) for k in range(1, n // 2 + 1)},
        On=on,
        En=en,
    )


@dataclass(frozen=True)
class TraceInvariants:
    omega1: Fraction
    omega2: Fraction
    tilde1: Fraction
    tilde2: Fraction


def trace_invariants(P: TwistedPolygon) -> TraceInvariants:
    """``trace^3 / det`` of the monodromy and of its inverse, plus the rescaled versions."""
    M = P.monodromy
    det = M.det
    if det == 0:
        raise SingularMonodromy("monodromy lift is singular")
    Minv = M.inverse()
    omega1 = M.trace ** 3 / det
    omega2 = Minv.trace ** 3 / Minv.det
    on, en = product_invariants(corner_invariants(P))
    return TraceInvariants(omega1, omega2, on * on * en * omega1, on * en * en * omega2)


def _icbrt(m: int) -> int | None:
    if m < 0:
        r = _icbrt(-m)
        return None if r is None else -r
    lo, hi = 0, 1
    while hi ** 3 < m:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** 3 < m:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo ** 3 == m else None


def rational_cube_root(v) -> Fraction | None:
    """Exact rational cube root, or ``None`` when ``v`` is not a cube."""
    v = Fraction(v)
    num, den = _icbrt(v.numerator), _icbrt(v.denominator)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def alternating_sums_from_trace(P: TwistedPolygon) -> tuple[Fraction | None, Fraction | None]:
    """``sum_k (-1)^k O_k`` and ``sum_k (-1)^k E_k`` (with ``O_0 = E_0 = 1``) from the monodromy.

    ``O_n^2 E_n omega2`` and ``O_n E_n^2 omega1`` are exact cubes of these sums.
    """
    tr = trace_invariants(P)
    on, en = product_invariants(corner_invariants(P))
    return rational_cube_root(on * on * en * tr.omega2), rational_cube_root(on * en * en * tr.omega1)


# -- determinants ------------------------------------------------------------------

def exact_det(rows: Sequence[Sequence]) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    m = [[Fraction(v) for v in row] for row in rows]
    size = len(m)
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, size):
            f = m[r][col] * inv
            if f:
                for j in range(col, size):
                    m[r][j] -= f * m[col][j]
    return det


@dataclass(frozen=True)
class OpenCorners:
    """Corner values with vanishing boundary: ``x_1..x_n`` and ``y_0..y_{n-1}``, zero elsewhere."""

    x: tuple
    y: tuple

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(Fraction(v) for v in self.x))
        object.__setattr__(self, "y", tuple(Fraction(v) for v in self.y))
        if len(self.x) != len(self.y):
            raise ValueError("x and y must have the same length")

    @property
    def n(self) -> int:
        return len(self.x)

    def xi(self, i: int) -> Fraction:
        return self.x[i - 1] if 1 <= i <= self.n else Fraction(0)

    def yi(self, i: int) -> Fraction:
        return self.y[i] if 0 <= i <= self.n - 1 else Fraction(0)

    def X(self, i: int) -> Fraction:
        return self.xi(i) * self.yi(i) * self.xi(i + 1)

    def Y(self, j: int) -> Fraction:
        return self.yi(j - 1) * self.xi(j) * self.yi(j)


def _banded(size: int, super1: Callable[[int], Fraction], super2: Callable[[int], Fraction]):
    rows = [[Fraction(0)] * size for _ in range(size)]
    for r in range(size):
        rows[r][r] = Fraction(1)
        if r >= 1:
            rows[r][r - 1] = Fraction(1)
        if r + 1 < size:
            rows[r][r + 1] = super1(r)
        if r + 2 < size:
            rows[r][r + 2] = super2(r)
    return rows


def banded_det_F(c, l: int, k: int) -> Fraction:
    """Four-diagonal determinant with ``x_k, x_{k-1}, ...`` above the diagonal.

    Row r holds ``x_{k-r}`` and ``X_{k-1-r}``; the matrix has size ``k - l + 1``.
    ``c`` is a :class:`CornerInvariants` (cyclic reads) or :class:`OpenCorners`.
    """
    size = k - l + 1
    if size == -1:
        return Fraction(0)
    if size < -1:
        raise ValueError(f"F_{l}^{k} is undefined for l > k + 2")
    if size == 0:
        return Fraction(1)
    return exact_det(_banded(size, lambda r: c.xi(k - r), lambda r: c.X(k - 1 - r)))


def banded_det_G(c, p: int, q: int) -> Fraction:
    """Four-diagonal determinant with ``y_{p+1}, y_{p+2}, ...`` and ``Y_{p+2}, ...`` above the diagonal."""
    size = q - p + 1
    if size == -1:
        return Fraction(0)
    if size < -1:
        raise ValueError(f"G_{p}^{q} is undefined for p > q + 2")
    if size == 0:
        return Fraction(1)
    return exact_det(_banded(size, lambda r: c.yi(p + 1 + r), lambda r: c.Y(p + 2 + r)))


def _sign_normalized(c):
    # the displayed determinants carry -x and +X; flipping every x and y
    # turns them into +x and -X, the sign convention of the O_k
    if isinstance(c, OpenCorners):
        return OpenCorners([-v for v in c.x], [-v for v in c.y])
    return c.rescaled(-1)


def det_sum_O(c: CornerInvariants, *, signed: bool = True) -> Fraction:
    """Cyclic determinant expression for ``sum_i O_i``.

    With ``signed=False`` the literal determinants are used, which yields the
    alternating sum ``sum_i (-1)^i O_i``.
    """
    n = c.n
    if signed:
        c = _sign_normalized(c)
    return (
        banded_det_F(c, 1, n)
        + banded_det_F(c, 0, n - 1)
        - banded_det_F(c, 1, n - 1)
        + c.xi(n) * c.yi(n) * c.xi(1) * banded_det_F(c, 2, n - 2)
    )


def det_sum_E(c: CornerInvariants, *, signed: bool = True) -> Fraction:
    """Cyclic determinant expression for ``sum_i E_i``."""
    n = c.n
    if signed:
        c = _sign_normalized(c)
    return (
        banded_det_G(c, 0, n - 1)
        + banded_det_G(c, 1, n)
        - banded_det_G(c, 1, n - 1)
        + c.yi(n) * c.xi(1) * c.yi(1) * banded_det_G(c, 2, n - 2)
    )


def open_det_sum(c: OpenCorners, *, signed: bool = True) -> tuple[Fraction, Fraction]:
    """``(F_0^n, G_{-1}^{n-1})`` under vanishing boundary values."""
    if signed:
        c = _sign_normalized(c)
    return banded_det_F(c, 0, c.n), banded_det_G(c, -1, c.n - 1)


def open_combinatorial_sums(c: OpenCorners) -> tuple[Fraction, Fraction]:
    """Sum over all weights of the open admissible monomials, O side and E side.

    Terms with a vanishing factor drop out, which confines footprints to
    ``1..n`` (O side) and ``0..n-1`` (E side).
    """
    terms_o = [("x", i) for i in range(1, c.n + 1)] + [("X", i) for i in range(1, c.n)]
    terms_e = [("y", i) for i in range(0, c.n)] + [("Y", j) for j in range(1, c.n)]

    def total(terms, value, footprint):
        out = Fraction(0)
        for k in range(len(terms) + 1):
            for subset in combinations(terms, k):
                fps = [footprint(t) for t in subset]
                if any(abs(a - b) <= 1 for f1, f2 in combinations(fps, 2) for a in f1 for b in f2):
                    continue
                term = Fraction(1)
                for t in subset:
                    term *= value(t)
                out += term
        return out

    def o_value(t):
        kind, i = t
        return c.xi(i) if kind == "x" else -c.X(i)

    def o_fp(t):
        kind, i = t
        return (i,) if kind == "x" else (i, i + 1)

    def e_value(t):
        kind, j = t
        return c.yi(j) if kind == "y" else -c.Y(j)

    def e_fp(t):
        kind, j = t
        return (j,) if kind == "y" else (j - 1, j)

    return total(terms_o, o_value, o_fp), total(terms_e, e_value, e_fp)


# -- weight grading ---------------------------------------------------------------

def weight_grade(
    expr: Callable[[CornerInvariants], Fraction],
    c: CornerInvariants,
    weights: Iterable[int] | None = None,
    samples: Sequence | None = None,
) -> dict:
    """Split ``expr`` into weighted-homogeneous parts at ``c``.

    ``expr`` is evaluated on rescaled copies of ``c`` and the Laurent
    polynomial in t is recovered by exact interpolation.  ``weights`` is the
    range of weights to fit (default ``0..n//2 + 1``).
    """
    ws = list(weights) if weights is not None else list(range(0, c.n // 2 + 2))
    ts = [Fraction(t) for t in (samples if samples is not None else range(2, 2 + len(ws)))]
    if len(ts) != len(ws):
        raise InterpolationDegenerate("need exactly one sample value per weight")
    if len(set(ts)) != len(ts) or any(t == 0 for t in ts):
        raise InterpolationDegenerate("sample values must be distinct and nonzero")
    values = [Fraction(expr(c.rescaled(t))) for t in ts]
    rows = [[t ** w for w in ws] for t in ts]
    coeffs = _solve(rows, values)
    return {w: v for w, v in zip(ws, coeffs)}


def _solve(rows, rhs):
    size = len(rows)
    m = [list(map(Fraction, row)) + [Fraction(b)] for row, b in zip(rows, rhs)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if m[r][col] != 0), None)
        if pivot is None:
            raise InterpolationDegenerate("singular interpolation system")
        m[col], m[pivot] = m[pivot], m[col]
        for r in range(size):
            if r != col and m[r][col] != 0:
                f = m[r][col] / m[col][col]
                for j in range(col, size + 1):
                    m[r][j] -= f * m[col][j]
    return [m[r][size] / m[r][r] for r in range(size)]
