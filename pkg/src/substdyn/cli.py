"""Command-line front end.

Exit codes: 0 success, 2 parse/usage error, 3 term uses more than one
variable, 4 value outside its domain, 5 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import io
import json
import random
import sys
import time
from fractions import Fraction
from typing import Optional, Sequence

from .corpus import get as corpus_entry
from .boolean import BoolSubst, adding_machine, bool_classify, point_map
from .classify import classification_to_dict, classify_system
from .dynamics import (birkhoff_frequencies, iterate_exact, iterate_float,
                       write_frequency_csv, write_orbit_csv)
from .markov import markov_system, markov_to_dict
from .mcnaughton import PLFunc, compile_term, pl_to_dict
from .product import (FracMap, deriv_bound_check, frac_classify, frac_eval,
                      min_abs_derivative, slow_cf_check, cf_expand)
from .terms import ParseError, format_term, parse, variables

EXIT_OK, EXIT_PARSE, EXIT_ARITY, EXIT_DOMAIN, EXIT_RESOURCE = 0, 2, 3, 4, 5


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _parse_text(text: str):
    try:
        return parse(text)
    except ParseError as exc:
        raise CliError(f"parse error: {exc}", EXIT_PARSE) from exc


def resolve_map(spec: str) -> tuple[PLFunc, str]:
    """A PL map from ``corpus:<name>`` or from one-variable term text."""
    if spec.startswith("corpus:"):
        name = spec[len("corpus:"):]
        try:
            entry = corpus_entry(name)
        except KeyError as exc:
            raise CliError(str(exc.args[0]), EXIT_PARSE) from exc
        if entry.kind != "pl":
            raise CliError(f"corpus map {name!r} is not a one-variable McNaughton map", EXIT_PARSE)
        return entry.map, spec
    term = _parse_text(spec)
    if variables(term) - {0}:
        raise CliError("term must use only the variable x0", EXIT_ARITY)
    return compile_term(term), format_term(term)


def _parse_start(text: Optional[str], exact: bool):
    if text is None:
        return None
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"invalid start {text!r}", EXIT_DOMAIN) from exc
    if not 0 <= value <= 1:
        raise CliError(f"start {text} outside [0, 1]", EXIT_DOMAIN)
    return value if exact else float(value)


def _report(command: str, inputs: dict, result: dict, notes: list[str], t0: float) -> dict:
    return {
        "command": command,
        "input": inputs,
        "result": result,
        "notes": notes,
        "timing": {"seconds": time.perf_counter() - t0},
    }


def _emit(report: dict, args, text_lines: list[str]) -> None:
    if args.json:
        json.dump(report, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        for line in text_lines:
            print(line)


def _yn(b: bool) -> str:
    return "true" if b else "false"


# ---------------------------------------------------------------------------
# commands

def cmd_analyze(args) -> int:
    t0 = time.perf_counter()
    s, shown = resolve_map(args.term)
    m = markov_system(s)
    c = classify_system(s, m)
    result = classification_to_dict(c)
    result["partition"] = [str(q) for q in m.partition.points]
    result["function"] = pl_to_dict(s)
    result["markov"] = markov_to_dict(m)
    notes = []
    if c.has_flat_piece:
        notes.append("map has a constant piece: it is singular and all dynamical predicates are false")
    report = _report("analyze", {"term": args.term, "resolved": shown}, result, notes, t0)
    lines = [
        f"map: {s}",
        f"partition: {', '.join(result['partition'])}",
        "matrix:",
        *("  " + "  ".join(f"{x:>5}" for x in row) for row in result["markov"]["matrix"]),
        f"invertible: {_yn(c.invertible)}, generic: {_yn(c.generic)}, ergodic: {_yn(c.ergodic)}, "
        f"mixing: {_yn(c.mixing)}, exact: {_yn(c.exact)}",
        f"strongly connected: {_yn(c.strongly_connected)}, period: {c.period}",
    ]
    if c.density is not None:
        lines.append("density: " + ", ".join(result["density"]))
    lines.extend(f"note: {n}" for n in notes)
    _emit(report, args, lines)
    return EXIT_OK


def _orbit_csv_text(orbit) -> str:
    buf = io.StringIO()
    write_orbit_csv(orbit, buf)
    return buf.getvalue()


def cmd_orbit(args) -> int:
    t0 = time.perf_counter()
    s, shown = resolve_map(args.term)
    start = _parse_start(args.start, args.exact)
    if start is None:
        raise CliError("--start is required", EXIT_PARSE)
    orbit = iterate_exact(s, start, args.steps) if args.exact else iterate_float(s, start, args.steps)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            write_orbit_csv(orbit, fh)
    result = {
        "exact": args.exact,
        "points": [str(x) for x in orbit.points] if args.exact else [float(x) for x in orbit.points],
        "eventually_periodic": None if orbit.eventually_periodic is None else
        {"preperiod": orbit.eventually_periodic[0], "period": orbit.eventually_periodic[1]},
    }
    report = _report("orbit", {"term": args.term, "resolved": shown, "start": args.start,
                               "steps": args.steps}, result, [], t0)
    lines = _orbit_csv_text(orbit).splitlines()
    if orbit.eventually_periodic:
        pre, per = orbit.eventually_periodic
        lines.append(f"# eventually periodic: preperiod {pre}, period {per}")
    _emit(report, args, lines)
    return EXIT_OK


def cmd_birkhoff(args) -> int:
    t0 = time.perf_counter()
    s, shown = resolve_map(args.term)
    start = _parse_start(args.start, exact=False)
    if start is None:
        start = random.Random(args.seed).random()
    m = markov_system(s)
    c = classify_system(s, m)
    reference = c.density.masses if c.density is not None else None
    table = birkhoff_frequencies(s, start, args.steps, m.partition, reference)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            write_frequency_csv(table, fh)
    notes = ["orbit computed exactly on a fine rational grid; the start is rounded onto it"]
    if reference is None:
        notes.append("map is not ergodic: no reference measure")
    freqs = [float(f) for f in table.frequencies]
    result = {
        "intervals": [[str(u), str(v)] for u, v in m.partition.intervals],
        "counts": [int(k) for k in table.counts],
        "frequencies": freqs,
        "reference": None if reference is None else [str(x) for x in reference],
        "max_deviation": None if reference is None else table.max_deviation(),
    }
    report = _report("birkhoff", {"term": args.term, "resolved": shown, "start": start,
                                  "steps": args.steps, "seed": args.seed}, result, notes, t0)
    buf = io.StringIO()
    write_frequency_csv(table, buf)
    _emit(report, args, buf.getvalue().splitlines())
    return EXIT_OK


def _frac(args) -> FracMap:
    if args.a < 1 or args.b < 1:
        raise CliError("a and b must be positive integers", EXIT_PARSE)
    return FracMap(args.a, args.b)


def cmd_product(args) -> int:
    t0 = time.perf_counter()
    fm = _frac(args)
    inputs = {"subcommand": args.product_cmd, "a": args.a, "b": args.b}
    notes: list[str] = []
    if args.product_cmd == "classify":
        regime = frac_classify(fm)
        result = {"q": str(fm.q), "regime": regime.value}
        lines = [f"q = {fm.q}: {regime.value}"]
    elif args.product_cmd == "slowcf":
        if fm.q != 1:
            raise CliError("slowcf requires a = b", EXIT_PARSE)
        checks = []
        lines = []
        for text in args.x:
            x = _parse_start(text, exact=True)
            if x == 0:
                raise CliError("x must lie in (0, 1]", EXIT_DOMAIN)
            image = frac_eval(fm, x)
            ok = slow_cf_check(x)
            checks.append({"x": str(x), "image": str(image), "digits": cf_expand(x),
                           "image_digits": cf_expand(image), "ok": ok})
            lines.append(f"{'ok' if ok else 'FAIL'}: s({x}) = {image}, "
                         f"[0;{','.join(map(str, cf_expand(x)))}] -> [0;{','.join(map(str, cf_expand(image)))}]")
        inputs["x"] = args.x
        result = {"checks": checks, "all_ok": all(c["ok"] for c in checks)}
    elif args.product_cmd == "derivbound":
        if fm.q >= 1:
            raise CliError("derivbound requires q < 1", EXIT_DOMAIN)
        inputs["grid"] = args.grid
        q = float(fm.q)
        second = deriv_bound_check(fm, args.grid)
        first = min_abs_derivative(fm, args.grid)
        result = {"q": str(fm.q), "grid": args.grid, "min_abs_second_iterate_derivative": second,
                  "min_abs_derivative": first, "reference": str((2 * fm.q + 1) ** 2)}
        lines = [f"q = {fm.q}: min |(s^2)'| on grid = {second:.12g}",
                 f"reference (2q+1)^2 = {(2 * q + 1) ** 2:.12g}",
                 f"min |s'| on grid = {first:.12g}"]
    else:  # orbit
        start = _parse_start(args.start, args.exact)
        if start is None:
            raise CliError("--start is required", EXIT_PARSE)
        pts = [start]
        for _ in range(args.steps):
            pts.append(frac_eval(fm, pts[-1]))
        inputs.update(start=args.start, steps=args.steps)
        result = {"exact": args.exact,
                  "points": [str(x) for x in pts] if args.exact else [float(x) for x in pts]}
        buf = io.StringIO()
        buf.write("step,value\n")
        for k, x in enumerate(pts):
            buf.write(f"{k},{x if args.exact else repr(float(x))}\n")
        if args.csv:
            with open(args.csv, "w", newline="") as fh:
                fh.write(buf.getvalue())
        lines = buf.getvalue().splitlines()
    _emit(_report("product", inputs, result, notes, t0), args, lines)
    return EXIT_OK


def _bits(p: int, n: int) -> str:
    return format(p, f"0{n}b")


def cmd_boolean(args) -> int:
    t0 = time.perf_counter()
    if args.n > args.max_n:
        raise CliError(f"n = {args.n} exceeds the cap {args.max_n}", EXIT_RESOURCE)
    if args.n < 1:
        raise CliError("n must be at least 1", EXIT_PARSE)
    if args.boolean_cmd == "adding-machine":
        b = adding_machine(args.n)
    else:
        terms = tuple(_parse_text(t) for t in args.terms)
        try:
            b = BoolSubst(args.n, terms)
        except ValueError as exc:
            raise CliError(str(exc), EXIT_PARSE) from exc
    cls = bool_classify(b)
    pm = point_map(b)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write("input_bits,output_bits\n")
            for p, v in enumerate(pm.table):
                fh.write(f"{_bits(p, b.n)},{_bits(v, b.n)}\n")
    shown = [format_term(t) for t in b.terms]
    result = {
        "n": b.n,
        "terms": shown,
        "invertible": cls.invertible,
        "permutation_order": cls.permutation_order,
        "generic": cls.generic,
        "ergodic": cls.ergodic,
        "minimal": cls.minimal,
        "mixing": False,
        "exact": False,
        "cycle_lengths": list(cls.cycles),
    }
    lines = [f"x{i} -> {t}" for i, t in enumerate(shown)]
    lines.append(f"invertible: {_yn(cls.invertible)}, order: {cls.permutation_order}, "
                 f"generic: {_yn(cls.generic)}")
    report = _report("boolean", {"subcommand": args.boolean_cmd, "n": args.n,
                                 "terms": getattr(args, "terms", None)}, result, [], t0)
    _emit(report, args, lines)
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON report")

    parser = argparse.ArgumentParser(prog="substdyn", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="Markov data and classification of x0 -> term")
    p.add_argument("term", help='term over x0, or "corpus:<name>"')
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("orbit", parents=[common], help="orbit of a point")
    p.add_argument("term")
    p.add_argument("--start", required=True)
    p.add_argument("--steps", type=int, default=10)
    p.add_argument("--exact", action="store_true")
    p.add_argument("--csv")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("birkhoff", parents=[common], help="interval visit frequencies")
    p.add_argument("term")
    p.add_argument("--start")
    p.add_argument("--steps", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv")
    p.set_defaults(func=cmd_birkhoff)

    p = sub.add_parser("product", help="fractional tent maps of product logic")
    psub = p.add_subparsers(dest="product_cmd", required=True)
    for name in ("classify", "slowcf", "derivbound", "orbit"):
        q = psub.add_parser(name, parents=[common])
        q.add_argument("-a", type=int, required=True)
        q.add_argument("-b", type=int, required=True)
        if name == "slowcf":
            q.add_argument("--x", action="append", required=True, help="rational in (0, 1]")
        if name == "derivbound":
            q.add_argument("--grid", type=int, default=10_000)
        if name == "orbit":
            q.add_argument("--start", required=True)
            q.add_argument("--steps", type=int, default=10)
            q.add_argument("--exact", action="store_true")
            q.add_argument("--csv")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("boolean", help="classical substitutions over n variables")
    bsub = p.add_subparsers(dest="boolean_cmd", required=True)
    for name in ("adding-machine", "analyze"):
        q = bsub.add_parser(name, parents=[common])
        q.add_argument("-n", type=int, required=True)
        q.add_argument("--max-n", type=int, default=20)
        q.add_argument("--csv")
        if name == "analyze":
            q.add_argument("--terms", nargs="+", required=True)
    p.set_defaults(func=cmd_boolean)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"substdyn: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
