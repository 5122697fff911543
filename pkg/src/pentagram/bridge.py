"""From inscribed polygons to the puzzle.

After substituting ``x_i = (1 - p_i)/p_{i+1}`` and ``y_i = (1 - p_{i+1})/p_i``,
each term of ``O_k`` becomes a sum of signed *tiles*: Laurent monomials in
consecutive p-variables, written as words over ``{A, X, B}`` (A for a
denominator, B for a numerator, X for an absent variable).  The expansion
of ``O_k`` is then predicted by the cyclic parsings of weight k.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import BadWeight, Overlap
from .inscribed import PCoordinates, corner_from_p
from .invariants import BlockX, SingleX, admissible_monomials, invariant_set
from .laurent import LaurentPolynomial
from .puzzle import ORIGINAL, WordTable, canonical_rotation, weight_poly

__all__ = [
    "TileTerm",
    "tile_expansion",
    "x_in_p",
    "y_in_p",
    "expand_O_in_p",
    "expand_O_in_p_direct",
    "expand_E_in_p",
    "sentence_monomial",
    "monomial_sentence",
    "puzzle_prediction",
    "compare_expansion",
    "theorem1_check",
]

_LETTER_EXP = {"A": -1, "X": 0, "B": 1}
_EXP_LETTER = {v: k for k, v in _LETTER_EXP.items()}

# x_i = 1/p_{i+1} - p_i/p_{i+1}
_SINGLE_TILES = (("XA", 1), ("BA", -1))
# -X_i, six terms over p_i, p_{i+1}, p_{i+2}
_BLOCK_TILES = (("AAA", -1), ("XAA", 1), ("AXA", 2), ("XXA", -2), ("ABA", -1), ("XBA", 1))


@dataclass(frozen=True)
class TileTerm:
    """Signed Laurent monomial whose letter j gives the exponent of ``p_{anchor+j}``."""

    letters: str
    coefficient: int
    anchor: int

    def columns(self, N: int) -> tuple:
        return tuple((self.anchor - 1 + j) % N + 1 for j in range(len(self.letters)))

    def exponents(self, N: int) -> tuple:
        exps = [0] * N
        for col, letter in zip(self.columns(N), self.letters):
            exps[col - 1] = _LETTER_EXP[letter]
        return tuple(exps)

    def monomial(self, N: int) -> LaurentPolynomial:
        return LaurentPolynomial(N, {self.exponents(N): self.coefficient})


def tile_expansion(kind: str, i: int, N: int) -> list[TileTerm]:
    """Tiles of ``x_i`` (kind ``"x"``) or of ``-X_i`` (kind ``"X"``)."""
    if kind == SingleX:
        table = _SINGLE_TILES
    elif kind == BlockX:
        table = _BLOCK_TILES
    else:
        raise ValueError(f"unknown term kind {kind!r}")
    anchor = (i - 1) % N + 1
    return [TileTerm(letters, coef, anchor) for letters, coef in table]


def _tiles_poly(kind: str, i: int, N: int) -> LaurentPolynomial:
    out = LaurentPolynomial(N)
    for tile in tile_expansion(kind, i, N):
        out = out + tile.monomial(N)
    return out


def x_in_p(i: int, N: int) -> LaurentPolynomial:
    """``(1 - p_i) / p_{i+1}`` by direct arithmetic."""
    one = LaurentPolynomial.constant(N, 1)
    return (one - LaurentPolynomial.variable(N, i)) * LaurentPolynomial.variable(N, i + 1, -1)


def y_in_p(i: int, N: int) -> LaurentPolynomial:
    """``(1 - p_{i+1}) / p_i`` by direct arithmetic."""
    one = LaurentPolynomial.constant(N, 1)
    return (one - LaurentPolynomial.variable(N, i + 1)) * LaurentPolynomial.variable(N, i, -1)


def _check_k(n: int, k: int) -> None:
    if not 1 <= k <= n // 2:
        raise BadWeight(f"weight must lie in 1..{n // 2}, got {k}")


def expand_O_in_p(n: int, k: int) -> LaurentPolynomial:
    """``O_k`` as a Laurent polynomial in ``p_1..p_n``, assembled from tiles."""
    _check_k(n, k)
    total: dict = {}
    for mono in admissible_monomials(n, k):
        terms = sorted(mono.terms)
        used: set = set()
        for t in terms:
            cols = set(t.tile(n))
            if cols & used:
                raise Overlap(f"tiles of {', '.join(map(str, terms))} overlap")
            used |= cols
        choices = [tile_expansion(t.kind, t.index, n) for t in terms]
        for combo in itertools.product(*choices):
            exps = [0] * n
            coef = 1
            for tile in combo:
                coef *= tile.coefficient
                for col, letter in zip(tile.columns(n), tile.letters):
                    exps[col - 1] = _LETTER_EXP[letter]
            key = tuple(exps)
            total[key] = total.get(key, 0) + coef
    return LaurentPolynomial(n, total)


def expand_O_in_p_direct(n: int, k: int) -> LaurentPolynomial:
    """``O_k`` expanded by multiplying out ``x_i`` and ``-x_i y_i x_{i+1}`` symbolically."""
    _check_k(n, k)
    total = LaurentPolynomial(n)
    for mono in admissible_monomials(n, k):
        term = LaurentPolynomial.constant(n, mono.sign)
        for t in mono.terms:
            if t.kind == SingleX:
                term = term * x_in_p(t.index, n)
            else:
                term = term * x_in_p(t.index, n) * y_in_p(t.index, n) * x_in_p(t.index + 1, n)
        total = total + term
    return total


def expand_E_in_p(n: int, k: int) -> LaurentPolynomial:
    """``E_k`` in the p-variables, from ``y_i`` and ``Y_j = y_{j-1} x_j y_j``.

    The E-admissible monomials are the mirror images ``x_i -> y_{-i}``,
    ``X_i -> Y_{-i}`` of the O-admissible ones.
    """
    _check_k(n, k)
    total = LaurentPolynomial(n)
    for mono in admissible_monomials(n, k):
        term = LaurentPolynomial.constant(n, mono.sign)
        for t in mono.terms:
            j = -t.index
            if t.kind == SingleX:
                term = term * y_in_p(j, n)
            else:
                # y_{j-1} y_j first, so p_j never reaches exponent 2
                term = term * y_in_p(j - 1, n) * y_in_p(j, n) * x_in_p(j, n)
        total = total + term
    return total


def sentence_monomial(S: str) -> tuple:
    """Exponent vector of a sentence: A -> -1, X -> 0, B -> +1."""
    return tuple(_LETTER_EXP[ch] for ch in S)


def monomial_sentence(exps) -> str:
    return "".join(_EXP_LETTER[e] for e in exps)


def _rotations(s: str) -> set:
    return {s[i:] + s[:i] for i in range(len(s))}


def puzzle_prediction(n: int, k: int, *, reverse: bool = False, table: WordTable = ORIGINAL) -> LaurentPolynomial:
    """Laurent polynomial whose coefficient at sentence S is ``c(S, k)``.

    With ``reverse=True`` the coefficient at S is ``c(reverse S, k)``, the
    prediction for the E side.  Each cyclic class contributes once per
    distinct rotation.
    """
    _check_k(n, k)
    total: dict = {}
    for letters in itertools.product("AXB", repeat=n):
        s = "".join(letters)
        if s != canonical_rotation(s):
            continue
        c = weight_poly(s[::-1] if reverse else s, "cyclic", table)[k]
        if not c:
            continue
        for rot in _rotations(s):
            total[sentence_monomial(rot)] = c
    return LaurentPolynomial(n, total)


def compare_expansion(n: int, k: int) -> dict:
    """Expand-versus-predict verdict for one ``(n, k)``."""
    expanded = expand_O_in_p(n, k)
    predicted = puzzle_prediction(n, k)
    diff = expanded.difference(predicted)
    return {
        "n": n,
        "k": k,
        "terms": len(expanded),
        "equal": not diff,
        "mismatches": [
            {"sentence": monomial_sentence(e), "expanded": str(a), "predicted": str(b)}
            for e, (a, b) in diff.items()
        ],
    }


def theorem1_check(p: PCoordinates) -> dict:
    """Compare ``O_k`` with ``E_k`` for every k on the inscribed polygon with coordinates p."""
    c = corner_from_p(p)
    inv = invariant_set(c)
    product = Fraction(1)
    for v in p.p:
        product *= (1 - v) / v
    per_k = {
        k: {"O": inv.O[k], "E": inv.E[k], "equal": inv.O[k] == inv.E[k]} for k in inv.O
    }
    return {
        "n": p.n,
        "per_k": per_k,
        "On": inv.On,
        "En": inv.En,
        "product_formula": product,
        "n_equal": inv.On == inv.En == product,
        "all_equal": all(v["equal"] for v in per_k.values()) and inv.On == inv.En == product,
    }
