"""Parsings of sentences over ``{A, X, B}`` and their weight polynomials.

A *parsing* tiles a sentence by words from a :class:`WordTable`; its
coefficient is the product of the word coefficients and its weight the sum
of the word weights.  ``|S|`` collects all parsings as a polynomial in t.

Three kinds of sentence are supported:

``cyclic``
    the letters sit on a circle and words may wrap around;
``open``
    the letters are padded with infinitely many ``X`` on both sides;
``locked``
    the letters are tiled exactly, with no padding.

In the tight table the adjacencies ``/X/XA/`` and ``/X/BA/`` are forbidden
everywhere, including across the cyclic seam and between the left padding
and the first letters of an open sentence.  Since ``XBA`` is not a tight
word, the second ban is the same as discarding every sentence containing
``XB``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .errors import InvalidLetter, NoForcedBreak

__all__ = [
    "ALPHABET",
    "WordTable",
    "ORIGINAL",
    "TIGHT",
    "WeightPolynomial",
    "T",
    "CyclicSentence",
    "OpenSentence",
    "Parsing",
    "canonical_rotation",
    "weight_poly",
    "enumerate_parsings",
    "reverse",
    "verify_palindrome",
    "IDENTITIES",
    "verify_identity",
    "identity_sides",
    "no_x_factorization",
    "tight_equivalence",
    "contains_xb",
]

ALPHABET = "AXB"
KINDS = ("cyclic", "open", "locked")


@dataclass(frozen=True)
class WordTable:
    name: str
    words: Mapping[str, tuple[int, int]]
    # words that may not directly follow the word X
    banned_after_x: frozenset = frozenset()

    def __str__(self):
        return self.name


ORIGINAL = WordTable(
    "original",
    {
        "X": (1, 0),
        "XA": (1, 1),
        "XAA": (1, 1),
        "XBA": (1, 1),
        "AXA": (2, 1),
        "AAA": (-1, 1),
        "BA": (-1, 1),
        "ABA": (-1, 1),
        "XXA": (-2, 1),
    },
)

TIGHT = WordTable(
    "tight",
    {
        "X": (1, 0),
        "XA": (1, 1),
        "XAA": (1, 1),
        "AXA": (2, 1),
        "AAA": (-1, 1),
        "BA": (-1, 1),
        "ABA": (-1, 1),
        "XXA": (-1, 1),
    },
    banned_after_x=frozenset({"XA", "BA"}),
)

TABLES = {"original": ORIGINAL, "tight": TIGHT}


class WeightPolynomial:
    """Finitely supported integer polynomial ``sum c_w t^w``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | int | None = None):
        if coeffs is None:
            coeffs = {}
        elif isinstance(coeffs, int):
            coeffs = {0: coeffs}
        self._c = {int(w): int(v) for w, v in coeffs.items() if v}

    @property
    def coefficients(self) -> dict:
        return dict(sorted(self._c.items()))

    def __getitem__(self, w: int) -> int:
        return self._c.get(w, 0)

    def __eq__(self, other):
        if isinstance(other, int):
            other = WeightPolynomial(other)
        return isinstance(other, WeightPolynomial) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __bool__(self):
        return bool(self._c)

    def _coerce(self, other) -> "WeightPolynomial":
        return other if isinstance(other, WeightPolynomial) else WeightPolynomial(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._c)
        for w, v in other._c.items():
            out[w] = out.get(w, 0) + v
        return WeightPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return WeightPolynomial({w: -v for w, v in self._c.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict = {}
        for w1, v1 in self._c.items():
            for w2, v2 in other._c.items():
                out[w1 + w2] = out.get(w1 + w2, 0) + v1 * v2
        return WeightPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = WeightPolynomial(1)
        for _ in range(k):
            out = out * self
        return out

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for w, v in sorted(self._c.items()):
            mag = abs(v)
            if w == 0:
                body = str(mag)
            else:
                power = "t" if w == 1 else f"t^{w}"
                body = power if mag == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(body if v > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if v > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"WeightPolynomial({self.coefficients})"

    def to_json(self) -> dict:
        return {str(w): v for w, v in sorted(self._c.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "WeightPolynomial":
        return cls({int(w): v for w, v in data.items()})


T = WeightPolynomial({1: 1})


def _check_letters(s: str) -> str:
    bad = set(s) - set(ALPHABET)
    if bad:
        raise InvalidLetter(f"letters must be in {{A, X, B}}, got {sorted(bad)}")
    return s


def canonical_rotation(s: str) -> str:
    """Lexicographically least rotation."""
    if not s:
        return s
    return min(s[i:] + s[:i] for i in range(len(s)))


@dataclass(frozen=True)
class CyclicSentence:
    letters: str

    def __post_init__(self):
        _check_letters(self.letters)

    @property
    def canonical(self) -> str:
        return canonical_rotation(self.letters)

    def __eq__(self, other):
        return isinstance(other, CyclicSentence) and self.canonical == other.canonical

    def __hash__(self):
        return hash(self.canonical)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return f"({self.letters})"


@dataclass(frozen=True)
class OpenSentence:
    """A finite string understood as padded by ``X`` on both sides."""

    core: str

    def __post_init__(self):
        object.__setattr__(self, "core", _check_letters(self.core).strip("X"))

    @property
    def span(self) -> int:
        return max(len(self.core) - 1, 0)

    def __str__(self):
        return self.core


@dataclass(frozen=True)
class Parsing:
    """Words with start positions; ``padded`` counts left-padding letters used by non-X words."""

    words: tuple
    coefficient: int
    weight: int
    padded: int = 0

    def __str__(self):
        return "/" + "/".join(w for w, _ in self.words) + "/"


def _coerce_sentence(S, kind: str) -> tuple[str, str]:
    if isinstance(S, CyclicSentence):
        return S.letters, "cyclic" if kind is None else kind
    if isinstance(S, OpenSentence):
        return S.core, "open" if kind is None else kind
    if kind is None:
        raise ValueError("kind is required for plain strings")
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    return _check_letters(S), kind


# -- DP ------------------------------------------------------------------------

def _linear(s: str, table: WordTable, prev_x: bool) -> tuple[dict, dict]:
    """Exact tilings of ``s``; returns weight polys split by whether the last word is ``X``.

    ``prev_x`` says whether the word just before ``s`` is the word ``X``.
    """
    n = len(s)
    banned = table.banned_after_x
    words = table.words
    # state[p] = (poly ending in X-word, poly ending otherwise)
    ends_x = [None] * (n + 1)
    ends_other = [None] * (n + 1)
    ends_x[0], ends_other[0] = ({0: 1}, {}) if prev_x else ({}, {0: 1})
    for p in range(n):
        ex, eo = ends_x[p], ends_other[p]
        if not ex and not eo:
            continue
        for w, (coef, wt) in words.items():
            L = len(w)
            if p + L > n or not s.startswith(w, p):
                continue
            src = eo if w in banned else _merge(ex, eo)
            if not src:
                continue
            tgt_list = ends_x if w == "X" else ends_other
            tgt = tgt_list[p + L]
            if tgt is None:
                tgt = tgt_list[p + L] = {}
            for k, v in src.items():
                tgt[k + wt] = tgt.get(k + wt, 0) + coef * v
    return ends_x[n] or {}, ends_other[n] or {}


def _merge(a: dict, b: dict) -> dict:
    if not a:
        return b
    if not b:
        return a
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + v
    return out


def _cyclic_poly(s: str, table: WordTable) -> WeightPolynomial:
    n = len(s)
    if n == 0:
        return WeightPolynomial(1)
    doubled = s + s
    total: dict = {}
    # condition on the word covering position 0; it starts at 0, -1 or -2
    for back in range(3):
        start = (-back) % n
        for w, (coef, wt) in table.words.items():
            L = len(w)
            if L <= back or L > n or not doubled.startswith(w, start):
                continue
            rest = doubled[start + L: start + n]
            ex, eo = _linear(rest, table, prev_x=(w == "X"))
            if w in table.banned_after_x:
                ex = {}
            for k, v in _merge(ex, eo).items():
                total[k + wt] = total.get(k + wt, 0) + coef * v
    return WeightPolynomial(total)


def _open_poly(core: str, table: WordTable) -> WeightPolynomial:
    core = core.strip("X")
    if not core:
        return WeightPolynomial(1)
    # two pad letters suffice since words have length <= 3; everything further
    # left is the word X, so the window is preceded by an X-word
    ex, eo = _linear("XX" + core, table, prev_x=True)
    return WeightPolynomial(_merge(ex, eo))


def _locked_poly(s: str, table: WordTable) -> WeightPolynomial:
    ex, eo = _linear(s, table, prev_x=False)
    return WeightPolynomial(_merge(ex, eo))


def weight_poly(S, kind: str | None = None, table: WordTable = ORIGINAL) -> WeightPolynomial:
    """``|S|`` for a cyclic, open or locked sentence."""
    s, kind = _coerce_sentence(S, kind)
    if kind == "cyclic":
        return _cyclic_poly(s, table)
    if kind == "open":
        return _open_poly(s, table)
    return _locked_poly(s, table)


# -- reference enumeration by cut sets ---------------------------------------------

def _parsing_from_cuts(s, cuts, table, cyclic, lead_x, offset):
    n = len(s)
    pieces = []
    if cyclic:
        for a, b in zip(cuts, cuts[1:] + [cuts[0] + n]):
            pieces.append(((s + s)[a:b], a))
    else:
        for a, b in zip(cuts, cuts[1:]):
            pieces.append((s[a:b], a - offset))
    coef, weight = 1, 0
    for w, _ in pieces:
        if w not in table.words:
            return None
        c, wt = table.words[w]
        coef *= c
        weight += wt
    if table.banned_after_x:
        seq = [w for w, _ in pieces]
        pairs = list(zip(seq, seq[1:]))
        if cyclic:
            pairs.append((seq[-1], seq[0]))
        elif lead_x and seq:
            pairs.append(("X", seq[0]))
        if any(a == "X" and b in table.banned_after_x for a, b in pairs):
            return None
    return pieces, coef, weight


def enumerate_parsings(S, kind: str | None = None, table: WordTable = ORIGINAL, limit: int | None = None) -> list[Parsing]:
    """Every parsing, found by trying all sets of cut points (exponential; for checking).

    Open parsings omit the ``X`` words that lie entirely in the padding.
    """
    s, kind = _coerce_sentence(S, kind)
    out: list[Parsing] = []
    for p in _iter_parsings(s, kind, table):
        out.append(p)
        if limit is not None and len(out) >= limit:
            break
    return out


def _iter_parsings(s: str, kind: str, table: WordTable) -> Iterator[Parsing]:
    if kind == "cyclic":
        n = len(s)
        if n == 0:
            yield Parsing((), 1, 0)
            return
        for r in range(1, n + 1):
            for cuts in itertools.combinations(range(n), r):
                res = _parsing_from_cuts(s, list(cuts), table, True, False, 0)
                if res:
                    pieces, coef, weight = res
                    yield Parsing(tuple(pieces), coef, weight)
        return
    if kind == "locked":
        window, offset, lead_x = s, 0, False
    else:
        core = s.strip("X")
        if not core:
            yield Parsing((), 1, 0)
            return
        window, offset, lead_x = "XX" + core, 2, True
    n = len(window)
    for r in range(0, n):
        for inner in itertools.combinations(range(1, n), r):
            cuts = [0, *inner, n]
            res = _parsing_from_cuts(window, cuts, table, False, lead_x, offset)
            if not res:
                continue
            pieces, coef, weight = res
            if offset:
                pieces = [(w, a) for w, a in pieces if not (w == "X" and a < 0)]
                padded = -min((a for _, a in pieces), default=0)
            else:
                padded = 0
            yield Parsing(tuple(pieces), coef, weight, max(padded, 0))


def reverse(S, kind: str | None = None):
    """Letterwise reversal, keeping the sentence type."""
    if isinstance(S, CyclicSentence):
        return CyclicSentence(S.letters[::-1])
    if isinstance(S, OpenSentence):
        return OpenSentence(S.core[::-1])
    return _check_letters(S)[::-1]


def contains_xb(s: str, kind: str) -> bool:
    """Whether the sentence contains ``XB`` (cyclically, or including the left padding)."""
    if kind == "cyclic":
        return "XB" in s + s[:1] if s else False
    if kind == "open":
        return "XB" in "X" + s.strip("X")
    return "XB" in s


# -- sweeps ---------------------------------------------------------------------------

def _necklaces(N: int) -> Iterator[str]:
    for letters in itertools.product(ALPHABET, repeat=N):
        s = "".join(letters)
        if s == canonical_rotation(s):
            yield s


def _open_cores(span: int) -> Iterator[str]:
    if span == 0:
        yield from ("A", "B")
        return
    for first in "AB":
        for last in "AB":
            for mid in itertools.product(ALPHABET, repeat=span - 1):
                yield first + "".join(mid) + last


def verify_palindrome(kind: str, bound: int, table: WordTable = ORIGINAL, *, xb_free: bool = False) -> dict:
    """Check ``|S| = |reverse S|`` for every sentence up to ``bound``.

    Cyclic: all lengths ``1..bound``; ``raw_strings`` counts the ``3^bound``
    strings of the top length.  Open: all cores of span ``0..bound``
    plus the empty sentence.  With ``xb_free`` sentences containing ``XB`` are
    skipped, along with those whose reversal contains it.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    counterexamples = []
    checked = 0
    raw = 0
    raw_all = None
    if kind == "cyclic":
        raw = 3 ** bound
        raw_all = 0
        for N in range(1, bound + 1):
            raw_all += 3 ** N
            for s in _necklaces(N):
                if xb_free and (contains_xb(s, "cyclic") or contains_xb(s[::-1], "cyclic")):
                    continue
                checked += 1
                a, b = _cyclic_poly(s, table), _cyclic_poly(s[::-1], table)
                if a != b:
                    counterexamples.append({"sentence": s, "forward": str(a), "reversed": str(b)})
    elif kind == "open":
        cores = [""] + [c for span in range(0, bound + 1) for c in _open_cores(span)]
        raw = len(cores)
        for s in cores:
            if xb_free and (contains_xb(s, "open") or contains_xb(s[::-1], "open")):
                continue
            checked += 1
            a, b = _open_poly(s, table), _open_poly(s[::-1], table)
            if a != b:
                counterexamples.append({"sentence": s, "forward": str(a), "reversed": str(b)})
    else:
        raise ValueError(f"palindrome sweeps need kind cyclic or open, got {kind!r}")
    return {
        "suite": f"palindrome-{kind}",
        "table": table.name,
        "bound": bound,
        "raw_strings": raw,
        **({"raw_strings_all_lengths": raw_all} if raw_all is not None else {}),
        "checked": checked,
        "counterexamples": counterexamples,
    }


# -- identities ----------------------------------------------------------------------


def _o(s: str, table) -> WeightPolynomial:
    return _open_poly(s, table)


def _c(s: str, table) -> WeightPolynomial:
    return _cyclic_poly(s, table)


def _l(s: str, table) -> WeightPolynomial:
    return _locked_poly(s, table)


def identity_sides(name: str, W: str, table: WordTable = TIGHT) -> tuple[WeightPolynomial, WeightPolynomial]:
    """Left- and right-hand sides of a named identity for the string ``W``."""
    _check_letters(W)
    t = T
    o = lambda s: _o(s, table)
    c = lambda s: _c(s, table)
    lk = lambda s: _l(s, table)
    right = {
        1: lambda f: (f(W + "AAA"), -t * f(W)),
        2: lambda f: (f(W + "XAA"), t * f(W)),
        3: lambda f: (f(W + "XXA"), -t * f(W)),
        4: lambda f: (f(W + "AXA"), t * f(W + "A") + 2 * t * f(W)),
        5: lambda f: (f(W + "ABA"), -t * f(W + "A") - t * f(W)),
    }
    left = {
        1: lambda: (o("AAA" + W), -t * o(W)),
        2: lambda: (o("AAX" + W), t * o(W)),
        3: lambda: (o("AXX" + W), -t * o(W)),
        4: lambda: (o("AXA" + W), t * o("A" + W) + 2 * t * o(W)),
        5: lambda: (o("ABA" + W), -t * o("A" + W) - t * o(W)),
    }
    if name.startswith("locked-right"):
        return right[int(name[-1])](lk)
    if name.startswith("right"):
        return right[int(name[-1])](o)
    if name.startswith("left"):
        return left[int(name[-1])]()
    if name == "taut":
        return o("XX" + W), o(W)
    if name == "useful":
        return o(W), lk("X" + W) - lk("AX" + W)
    if name == "axa":
        return c("AXA" + W), 2 * t * lk(W) + lk("XA" + W + "A")
    if name == "aba":
        return c("ABA" + W), lk(W + "ABA")
    if name == "mainID":
        return c(W + "X") + 2 * c(W + "B") - o(W), WeightPolynomial()
    raise KeyError(f"unknown identity {name!r}")


IDENTITIES = (
    [f"right{i}" for i in range(1, 6)]
    + [f"left{i}" for i in range(1, 6)]
    + ["taut", "useful", "axa", "aba", "mainID"]
    + [f"locked-right{i}" for i in range(1, 6)]
)


def verify_identity(name: str, W: str, table: WordTable = TIGHT) -> bool:
    lhs, rhs = identity_sides(name, W, table)
    return lhs == rhs


# -- the X-free case ---------------------------------------------------------------------

def no_x_factorization(S) -> WeightPolynomial:
    """``|S|`` for an X-free cyclic sentence as a product over forced breaks.

    Every ``BA`` ends a word, so the sentence splits into locked blocks
    ``A^(e-1) B A``, one per ``B``, where ``e`` is the length of the A-run
    before that ``B``.  The result is checked against the direct computation.
    """
    s = S.letters if isinstance(S, CyclicSentence) else _check_letters(S)
    if "X" in s:
        raise ValueError("sentence contains X")
    if "B" not in s:
        raise NoForcedBreak("no B, hence no forced break")
    product = WeightPolynomial(1)
    if "BB" in s + s[:1] or s == "B":
        product = WeightPolynomial()
    else:
        for e in _block_exponents(s):
            product = product * _locked_poly("A" * (e - 1) + "BA", ORIGINAL)
    direct = _cyclic_poly(s, ORIGINAL)
    if product != direct:
        raise AssertionError(f"factorization {product} != direct {direct} for ({s})")
    return product


def _block_exponents(s: str) -> list[int]:
    """Length of the A-run before each B, in cyclic order starting after the first B."""
    i = s.index("B")
    rot = s[i + 1:] + s[: i + 1]
    return [len(run) for run in rot.split("B")[:-1]]


def block_exponents(S) -> Counter:
    """Multiset of decremented exponents ``e - 1`` of an X-free cyclic sentence."""
    s = S.letters if isinstance(S, CyclicSentence) else S
    return Counter(e - 1 for e in _block_exponents(s))


def tight_equivalence(S, kind: str | None = None) -> bool:
    """Original and tight tables agree on XB-free sentences; XB forces zero in the original."""
    s, kind = _coerce_sentence(S, kind)
    orig = weight_poly(s, kind, ORIGINAL)
    if contains_xb(s, kind):
        return orig == WeightPolynomial()
    return orig == weight_poly(s, kind, TIGHT)
