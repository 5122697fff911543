"""Command-line interface: ``pentagram <command> [options]``.

Exit codes: 0 success, 1 a checked identity failed, 2 invalid input.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys

from . import bridge, inscribed, invariants, io, polygon, puzzle
from .errors import PentagramError

__all__ = ["main", "run"]

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

DEFAULT_BOUNDS = {
    "palindrome-cyclic": 10,
    "palindrome-open": 8,
    "identities": 7,
    "tight-equiv": 8,
    "pentagram-invariance": 9,
    "theorem1": 12,
}


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _read_json(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path}: {exc.msg} (line {exc.lineno})") from exc


def _emit(out, obj) -> None:
    out.write(io.dumps(obj) + "\n")


def _load_polygon(path: str) -> polygon.TwistedPolygon:
    raw = _read_json(path)
    try:
        return io.polygon_from_json(raw)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError(f"bad polygon: {exc}") from exc


# -- commands -------------------------------------------------------------------------

def _cmd_gen(args, out) -> int:
    if args.n < 5:
        raise InputError("--n must be at least 5")
    if args.inscribed:
        D = inscribed.random_inscribed(args.n, args.seed, closed=args.closed)
        _emit(out, io.inscribed_to_json(D))
    else:
        P = polygon.random_twisted(args.n, args.seed, closed=args.closed)
        _emit(out, io.polygon_to_json(P))
    return EXIT_OK


def _cmd_map(args, out) -> int:
    if args.iterations < 0:
        raise InputError("--iterations must be nonnegative")
    P = _load_polygon(args.input)
    for _ in range(args.iterations):
        P = polygon.pentagram_map(P)
    _emit(out, io.polygon_to_json(P))
    return EXIT_OK


def _graded(expr, c, sign: int):
    # x has weight +1 and y weight -1, so E_k sits in weight -k
    half = c.n // 2
    graded = invariants.weight_grade(expr, c, weights=[sign * w for w in range(0, half + 2)])
    return {sign * w: v for w, v in graded.items()}


def _cmd_invariants(args, out) -> int:
    P = _load_polygon(args.input)
    c = polygon.corner_invariants(P)
    inv = invariants.invariant_set(c)
    trace = invariants.trace_invariants(P)
    if args.method == "combinatorial":
        report = io.invariant_report(inv, trace, method="combinatorial")
    elif args.method == "determinantal":
        go = _graded(invariants.det_sum_O, c, 1)
        ge = _graded(invariants.det_sum_E, c, -1)
        half = c.n // 2
        det_inv = invariants.InvariantSet(
            n=c.n,
            O={k: go[k] for k in range(1, half + 1)},
            E={k: ge[k] for k in range(1, half + 1)},
            On=inv.On,
            En=inv.En,
        )
        report = io.invariant_report(
            det_inv,
            trace,
            method="determinantal",
            weight0={"O": go[0], "E": ge[0]},
            residual_weight={"O": go[half + 1], "E": ge[half + 1]},
        )
    else:
        alt_o, alt_e = invariants.alternating_sums_from_trace(P)
        report = {
            "n": c.n,
            "method": "geometric",
            "omega1": trace.omega1,
            "omega2": trace.omega2,
            "tilde1": trace.tilde1,
            "tilde2": trace.tilde2,
            "On": inv.On,
            "En": inv.En,
            "alternating_O": alt_o,
            "alternating_E": alt_e,
        }
    _emit(out, report)
    return EXIT_OK


def _cmd_inscribed(args, out) -> int:
    raw = _read_json(args.input)
    try:
        data = io.inscribed_from_json(raw)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError(f"bad inscribed data: {exc}") from exc
    if isinstance(data, inscribed.InscribedData):
        p = inscribed.p_from_params(data)
    else:
        p = data
    if args.check:
        report = bridge.theorem1_check(p)
        report["per_k"] = {str(k): v for k, v in report["per_k"].items()}
        if isinstance(data, inscribed.InscribedData):
            geometric = inscribed.veronese_polygon(data)
            report["corner_match"] = polygon.corner_invariants(geometric) == inscribed.corner_from_p(p)
        ok = report["all_equal"] and report.get("corner_match", True)
        _emit(out, report)
        return EXIT_OK if ok else EXIT_FAIL
    if isinstance(data, inscribed.InscribedData):
        _emit(out, io.polygon_to_json(inscribed.veronese_polygon(data)))
    else:
        c = inscribed.corner_from_p(p)
        _emit(out, {"n": p.n, "p": list(p.p), "x": list(c.x), "y": list(c.y)})
    return EXIT_OK


def _cmd_puzzle(args, out) -> int:
    if args.limit < 0:
        raise InputError("--limit must be nonnegative")
    table = puzzle.TABLES[args.table]
    poly = puzzle.weight_poly(args.sentence, args.kind, table)
    if not (args.json or args.list_parsings):
        out.write(f"{poly}\n")
        return EXIT_OK
    report = {
        "sentence": args.sentence,
        "kind": args.kind,
        "table": args.table,
        "polynomial": str(poly),
        "coefficients": poly.to_json(),
    }
    if args.list_parsings:
        parsings = puzzle.enumerate_parsings(args.sentence, args.kind, table, limit=args.limit + 1)
        truncated = len(parsings) > args.limit
        report["parsings"] = [
            {"parsing": str(pr), "coefficient": pr.coefficient, "weight": pr.weight}
            for pr in parsings[: args.limit]
        ]
        report["truncated"] = truncated
    _emit(out, report)
    return EXIT_OK


def _cmd_expand(args, out) -> int:
    if args.n < 1:
        raise InputError("--n must be positive")
    poly = bridge.expand_O_in_p(args.n, args.k)
    if not args.compare:
        _emit(out, poly.to_json())
        return EXIT_OK
    verdict = bridge.compare_expansion(args.n, args.k)
    verdict["expansion"] = poly.to_json()
    _emit(out, verdict)
    return EXIT_OK if verdict["equal"] else EXIT_FAIL


# -- verify suites ----------------------------------------------------------------------

def _suite_identities(bound: int, table) -> dict:
    counterexamples = []
    checked = 0
    for length in range(0, bound + 1):
        for letters in itertools.product(puzzle.ALPHABET, repeat=length):
            W = "".join(letters)
            for name in puzzle.IDENTITIES:
                checked += 1
                lhs, rhs = puzzle.identity_sides(name, W, table)
                if lhs != rhs:
                    counterexamples.append({"identity": name, "W": W, "lhs": str(lhs), "rhs": str(rhs)})
    return {"checked": checked, "counterexamples": counterexamples}


def _suite_tight_equiv(bound: int) -> dict:
    counterexamples = []
    checked = 0
    for length in range(1, bound + 1):
        for letters in itertools.product(puzzle.ALPHABET, repeat=length):
            s = "".join(letters)
            for kind in puzzle.KINDS:
                checked += 1
                if not puzzle.tight_equivalence(s, kind):
                    counterexamples.append({"sentence": s, "kind": kind})
    return {"checked": checked, "counterexamples": counterexamples}


def _suite_invariance(bound: int, samples: int, seed: int) -> dict:
    counterexamples = []
    checked = 0
    for n in range(5, bound + 1):
        for i in range(samples):
            s = seed + 1000 * n + i
            P = polygon.random_twisted(n, s)
            Q = polygon.pentagram_map(P)
            before = invariants.invariant_set(polygon.corner_invariants(P)).as_tuple()
            after = invariants.invariant_set(polygon.corner_invariants(Q)).as_tuple()
            tb, ta = invariants.trace_invariants(P), invariants.trace_invariants(Q)
            checked += 1
            if before != after or (tb.omega1, tb.omega2) != (ta.omega1, ta.omega2):
                counterexamples.append({"n": n, "seed": s})
    return {"checked": checked, "counterexamples": counterexamples}


def _suite_theorem1(bound: int, samples: int, seed: int) -> dict:
    counterexamples = []
    checked = 0
    for n in range(5, bound + 1):
        for i in range(samples):
            s = seed + 1000 * n + i
            checked += 1
            if not bridge.theorem1_check(inscribed.random_p(n, s))["all_equal"]:
                counterexamples.append({"n": n, "seed": s})
    return {"checked": checked, "counterexamples": counterexamples}


def _cmd_verify(args, out) -> int:
    bound = args.bound if args.bound is not None else DEFAULT_BOUNDS[args.suite]
    if bound < 1:
        raise InputError("--bound must be positive")
    if args.suite in ("pentagram-invariance", "theorem1") and bound < 5:
        raise InputError("--bound is the largest n and must be at least 5")
    if args.samples is not None and args.samples < 1:
        raise InputError("--samples must be positive")
    table = puzzle.TABLES[args.table] if args.table else None
    if args.suite.startswith("palindrome-"):
        report = puzzle.verify_palindrome(args.suite.split("-")[1], bound, table or puzzle.ORIGINAL)
    else:
        if args.suite == "identities":
            body = _suite_identities(bound, table or puzzle.TIGHT)
            body["table"] = (table or puzzle.TIGHT).name
        elif args.suite == "tight-equiv":
            body = _suite_tight_equiv(bound)
        elif args.suite == "pentagram-invariance":
            body = _suite_invariance(bound, args.samples or 50, args.seed)
        else:
            body = _suite_theorem1(bound, args.samples or 100, args.seed)
        report = {"suite": args.suite, "bound": bound, **body}
    _emit(out, report)
    return EXIT_OK if not report["counterexamples"] else EXIT_FAIL


# -- parser -----------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="pentagram", description="Exact computations around the pentagram map.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="random twisted or inscribed polygon")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--inscribed", action="store_true", help="emit conic parameters instead of vertices")
    g.add_argument("--closed", action="store_true", help="identity monodromy")

    m = sub.add_parser("map", help="apply the pentagram map")
    m.add_argument("input", nargs="?", default="-", help="polygon JSON, '-' for stdin")
    m.add_argument("--iterations", type=int, default=1)

    i = sub.add_parser("invariants", help="monodromy invariants of a polygon")
    i.add_argument("input", nargs="?", default="-")
    i.add_argument("--method", choices=("combinatorial", "determinantal", "geometric"), default="combinatorial")

    ins = sub.add_parser("inscribed", help="inscribed polygon data")
    ins.add_argument("input", nargs="?", default="-", help="JSON with 'params' or 'p'")
    ins.add_argument("--check", action="store_true", help="compare O_k with E_k")

    pz = sub.add_parser("puzzle", help="weight polynomial of a sentence")
    pz.add_argument("--sentence", required=True)
    pz.add_argument("--kind", choices=puzzle.KINDS, default="cyclic")
    pz.add_argument("--table", choices=sorted(puzzle.TABLES), default="original")
    pz.add_argument("--list-parsings", action="store_true")
    pz.add_argument("--limit", type=int, default=10_000, help="maximum parsings listed")
    pz.add_argument("--json", action="store_true")

    e = sub.add_parser("expand", help="O_k of an inscribed polygon as a Laurent polynomial in p")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--compare", action="store_true", help="also compare with the puzzle prediction")

    v = sub.add_parser("verify", help="run a verification sweep")
    v.add_argument("--suite", required=True, choices=sorted(DEFAULT_BOUNDS))
    v.add_argument("--bound", type=int)
    v.add_argument("--table", choices=sorted(puzzle.TABLES))
    v.add_argument("--samples", type=int)
    v.add_argument("--seed", type=int, default=0)
    return p


_COMMANDS = {
    "gen": _cmd_gen,
    "map": _cmd_map,
    "invariants": _cmd_invariants,
    "inscribed": _cmd_inscribed,
    "puzzle": _cmd_puzzle,
    "expand": _cmd_expand,
    "verify": _cmd_verify,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = _build_parser().parse_args(argv)
        return _COMMANDS[args.command](args, out)
    except InputError as exc:
        err.write(f"pentagram: error: {exc}\n")
        return EXIT_INPUT
    except PentagramError as exc:
        err.write(f"pentagram: error: {type(exc).__name__}: {exc}\n")
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
