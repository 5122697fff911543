"""Acceptance suite: twelve exact checks at their full bounds.

Run with ``pytest tests/test_acceptance.py -s`` or directly with
``python3 tests/test_acceptance.py``; either way one PASS/FAIL line is
printed per criterion.
"""

from __future__ import annotations

import itertools
import random
import time
from fractions import Fraction

import pytest

from pentagram.bridge import compare_expansion, expand_E_in_p, puzzle_prediction, theorem1_check
from pentagram.inscribed import corner_from_p, p_from_params, random_inscribed, random_p, veronese_polygon
from pentagram.invariants import (
    OpenCorners,
    combinatorial_E,
    combinatorial_O,
    det_sum_E,
    det_sum_O,
    invariant_set,
    open_combinatorial_sums,
    open_det_sum,
    trace_invariants,
)
from pentagram.polygon import CornerInvariants, corner_invariants, pentagram_map, projectively_equivalent, random_twisted
from pentagram.puzzle import (
    IDENTITIES,
    KINDS,
    ORIGINAL,
    TIGHT,
    OpenSentence,
    CyclicSentence,
    enumerate_parsings,
    tight_equivalence,
    verify_identity,
    verify_palindrome,
    weight_poly,
)


def _rand_fraction(rng, bound=15):
    while True:
        v = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if v:
            return v


def _rand_corners(n, seed):
    rng = random.Random(seed)
    return CornerInvariants([_rand_fraction(rng) for _ in range(n)], [_rand_fraction(rng) for _ in range(n)])


def _sum_O(c):
    return sum(combinatorial_O(c, k) for k in range(1, c.n // 2 + 1))


def _sum_E(c):
    return sum(combinatorial_E(c, k) for k in range(1, c.n // 2 + 1))


# -- criteria ---------------------------------------------------------------------------

def criterion_1():
    t2 = {2: -2}
    cyc = all(weight_poly(CyclicSentence("ABAXA"), table=tb).coefficients == t2 for tb in (ORIGINAL, TIGHT))
    opn = weight_poly(OpenSentence("ABAXA"), table=TIGHT).coefficients == {2: -1, 3: 1}
    w3 = sum(p.coefficient for p in enumerate_parsings(OpenSentence("AAXABA"), table=TIGHT) if p.weight == 3)
    ok = cyc and opn and w3 == 1
    return ok, f"|(ABAXA)| = -2t^2: {cyc}; |ABAXA| = -t^2 + t^3: {opn}; c(AAXABA, 3) = {w3}"


def criterion_2():
    parts, ok = [], True
    for table in (ORIGINAL, TIGHT):
        r = verify_palindrome("cyclic", 11, table)
        ok &= not r["counterexamples"]
        parts.append(f"{table.name}: {r['checked']} classes, {len(r['counterexamples'])} bad")
    return ok, f"3^11 = {3 ** 11} raw strings at the top length; " + "; ".join(parts)


def criterion_3():
    parts, ok = [], True
    for table in (ORIGINAL, TIGHT):
        r = verify_palindrome("open", 9, table)
        ok &= not r["counterexamples"]
        parts.append(f"{table.name}: {r['checked']} cores, {len(r['counterexamples'])} bad")
    return ok, "span <= 9; " + "; ".join(parts)


def criterion_4():
    checked, bad = 0, []
    for length in range(0, 9):
        for letters in itertools.product("AXB", repeat=length):
            W = "".join(letters)
            for name in IDENTITIES:
                checked += 1
                if not verify_identity(name, W, TIGHT):
                    bad.append((name, W))
    return not bad, f"{len(IDENTITIES)} identities x all W of length <= 8: {checked} checks, {len(bad)} failures {bad[:5]}"


def criterion_5():
    checked, bad, xb = 0, [], 0
    for length in range(1, 10):
        for letters in itertools.product("AXB", repeat=length):
            s = "".join(letters)
            for kind in KINDS:
                checked += 1
                if "XB" in s:
                    xb += 1
                if not tight_equivalence(s, kind):
                    bad.append((s, kind))
    return not bad, f"{checked} (sentence, kind) pairs of length <= 9, {xb} with XB; {len(bad)} failures"


def criterion_6():
    results = []
    for n in range(5, 9):
        for k in range(1, n // 2 + 1):
            r = compare_expansion(n, k)
            mirror = puzzle_prediction(n, k, reverse=True) == expand_E_in_p(n, k)
            results.append((n, k, r["terms"], r["equal"] and mirror))
    ok = all(r[3] for r in results)
    return ok, "; ".join(f"n={n} k={k}: {terms} terms {'=' if eq else '!='}" for n, k, terms, eq in results)


def criterion_7():
    bad = []
    for n in range(5, 13):
        for i in range(100):
            if not theorem1_check(random_p(n, 7000 + 100 * n + i))["all_equal"]:
                bad.append(("p", n, i))
    for n in range(5, 10):
        for i in range(20):
            D = random_inscribed(n, 8000 + 100 * n + i)
            inv = invariant_set(corner_invariants(veronese_polygon(D)))
            if inv.O != inv.E or inv.On != inv.En:
                bad.append(("polygon", n, i))
    return not bad, f"800 random p (n = 5..12) and 100 inscribed polygons (n = 5..9); {len(bad)} failures"


def criterion_8():
    bad = []
    for n in range(5, 10):
        for i in range(50):
            D = random_inscribed(n, 9000 + 100 * n + i)
            if corner_invariants(veronese_polygon(D)) != corner_from_p(p_from_params(D)):
                bad.append((n, i))
    return not bad, f"250 random inscribed polygons; {len(bad)} mismatches"


def criterion_9():
    bad = []
    for n in range(5, 10):
        for i in range(50):
            P = random_twisted(n, 10_000 + 100 * n + i)
            Q = pentagram_map(P)
            same = invariant_set(corner_invariants(P)) == invariant_set(corner_invariants(Q))
            ta, tb = trace_invariants(P), trace_invariants(Q)
            if not (same and (ta.omega1, ta.omega2) == (tb.omega1, tb.omega2)):
                bad.append((n, i))
    return not bad, f"250 random twisted polygons (n = 5..9); {len(bad)} changed"


def criterion_10():
    five = six = 0
    for i in range(20):
        P = random_twisted(5, 11_000 + i, closed=True)
        five += projectively_equivalent(P, pentagram_map(P), shift=2)
        H = random_twisted(6, 12_000 + i, closed=True)
        six += projectively_equivalent(H, pentagram_map(pentagram_map(H)), shift=2)
    return five == six == 20, f"T(P) ~ P for {five}/20 pentagons; T^2(P) ~ P for {six}/20 hexagons (labels shifted by 2)"


def criterion_11():
    constants = {}
    ok = True
    for n in range(5, 13):
        diffs_o, diffs_e = set(), set()
        for i in range(50):
            c = _rand_corners(n, 13_000 + 100 * n + i)
            diffs_o.add(det_sum_O(c) - _sum_O(c))
            diffs_e.add(det_sum_E(c) - _sum_E(c))
        ok &= len(diffs_o) == 1 and len(diffs_e) == 1
        constants[n] = (sorted(diffs_o), sorted(diffs_e))
    open_bad = 0
    for n in range(1, 8):
        for i in range(50):
            rng = random.Random(14_000 + 100 * n + i)
            c = OpenCorners([_rand_fraction(rng) for _ in range(n)], [_rand_fraction(rng) for _ in range(n)])
            open_bad += open_det_sum(c) != open_combinatorial_sums(c)
    ok &= open_bad == 0
    values = sorted({str(v) for pair in constants.values() for side in pair for v in side})
    return ok, f"weight-0 constants for n = 5..12 (O and E): {values}; open single determinants: {open_bad} mismatches in 350"


def criterion_12():
    bad = 0
    for n in range(5, 13):
        for i in range(10):
            c = _rand_corners(n, 15_000 + 100 * n + i)
            for t in (2, 3, 5):
                r = c.rescaled(t)
                for k in range(1, n // 2 + 1):
                    bad += combinatorial_O(r, k) != Fraction(t) ** k * combinatorial_O(c, k)
                    bad += combinatorial_E(r, k) != Fraction(t) ** -k * combinatorial_E(c, k)
    return bad == 0, f"80 random corner sequences, t in {{2, 3, 5}}, all k, O and E; {bad} failures"


CRITERIA = [
    (1, "puzzle examples", criterion_1),
    (2, "cyclic palindrome sweep", criterion_2),
    (3, "open palindrome sweep", criterion_3),
    (4, "identity suite", criterion_4),
    (5, "tight equivalence", criterion_5),
    (6, "bridge equality", criterion_6),
    (7, "O_k = E_k on inscribed polygons", criterion_7),
    (8, "corner formula cross-check", criterion_8),
    (9, "pentagram invariance", criterion_9),
    (10, "periodicity", criterion_10),
    (11, "determinantal = combinatorial", criterion_11),
    (12, "homogeneity", criterion_12),
]


def _line(number, title, ok, detail, seconds):
    return f"criterion {number:2d} [{'PASS' if ok else 'FAIL'}] {title} ({seconds:.1f}s): {detail}"


@pytest.mark.parametrize("number,title,check", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(number, title, check, capsys):
    start = time.perf_counter()
    ok, detail = check()
    with capsys.disabled():
        print("\n" + _line(number, title, ok, detail, time.perf_counter() - start))
    assert ok, detail


if __name__ == "__main__":
    failures = 0
    for number, title, check in CRITERIA:
        start = time.perf_counter()
        ok, detail = check()
        failures += not ok
        print(_line(number, title, ok, detail, time.perf_counter() - start), flush=True)
    raise SystemExit(1 if failures else 0)
