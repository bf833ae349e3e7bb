"""Command-line front end: ``bettistab betti|stabseq|sweep|check``.

Exit status: 0 ok, 1 capacity exceeded, 2 parse/usage/domain error,
3 backend disagreement in ``check``. Errors go to stderr as
``bettistab: error[<kind>]: <message>``.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence, TextIO

from . import __version__
from .betti import TAYLOR_CAP, betti_koszul, lcm_closure
from .corpus import check_ideal, random_corpus
from .errors import BettiStabError, CapacityError, DomainError, ParseError
from .monomials import MonomialIdeal, min_gen_degree, power
from .parsing import format_ideal, parse_family, parse_ideal, parse_range, parse_ring
from .stabilization import DEFAULT_LOOKAHEAD, LinearFit, family_sweep, stab_seq
from .table import BettiTable, render_m2, resolution_skeleton

PROG = "bettistab"
EXIT_OK, EXIT_CAPACITY, EXIT_USAGE, EXIT_CHECK = 0, 1, 2, 3
DEFAULT_LATTICE_WARN = 50_000


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse would print and sys.exit(2) itself; route through our error path instead
    def error(self, message):
        raise _UsageError(message)


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _nonnegative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog=PROG, description="Graded Betti tables of monomial ideals and the shapes of their powers.")
    p.add_argument("--version", action="version", version=f"{PROG} {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("betti", help="Betti table of I or a power of I")
    b.add_argument("--ring", required=True, help="variable names, e.g. 'x1,x2,x3'")
    b.add_argument("--ideal", required=True, help="generators, e.g. 'x1*x2^2, x2^3'")
    b.add_argument("--power", type=_positive, default=1)
    b.add_argument("--format", choices=("m2", "json", "csv"), default="m2")
    b.add_argument("--skeleton", action="store_true", help="also print the free modules of the resolution")
    b.add_argument("--typographic", action="store_true", help="use Unicode dots and arrows")
    b.add_argument("--method", choices=("staircase", "lattice"), default="staircase")
    b.add_argument("--lattice-warn", type=_positive, default=DEFAULT_LATTICE_WARN,
                   help="warn when the lcm lattice exceeds this many elements (lattice method)")

    s = sub.add_parser("stabseq", help="stabilization sequence of the Betti table shapes of I^d")
    s.add_argument("--ring", required=True)
    s.add_argument("--ideal", required=True)
    s.add_argument("--max-power", type=_positive, required=True)
    s.add_argument("--lookahead", type=_nonnegative, default=DEFAULT_LOOKAHEAD)
    s.add_argument("--include-bettis", action="store_true")
    s.add_argument("--format", choices=("text", "json", "csv"), default="text")
    s.add_argument("--typographic", action="store_true")
    s.add_argument("--workers", type=_positive, default=1)

    w = sub.add_parser("sweep", help="stabilization sequences across a linearly connected family")
    w.add_argument("--ring", required=True)
    w.add_argument("--family", required=True, help="generators with exponents linear in n, e.g. 'a^(6n-1)*b'")
    w.add_argument("--n", dest="n_range", required=True, help="inclusive range A..B")
    w.add_argument("--max-power", type=_positive, required=True)
    w.add_argument("--lookahead", type=_nonnegative, default=DEFAULT_LOOKAHEAD)
    w.add_argument("--fit", action="store_true", help="report exact linear fits in n")
    w.add_argument("--fit-range", default=None, help="restrict the fits to A..B")
    w.add_argument("--n-min", type=int, default=1, help="smallest admissible n for the family")
    w.add_argument("--format", choices=("text", "json", "csv"), default="text")
    w.add_argument("--workers", type=_positive, default=1)

    c = sub.add_parser("check", help="random differential test: Koszul vs Taylor vs Hilbert function")
    c.add_argument("--count", type=_positive, required=True)
    c.add_argument("--seed", type=int, required=True)
    c.add_argument("--max-vars", type=_positive, default=4)
    c.add_argument("--max-gens", type=_positive, default=8)
    c.add_argument("--max-exp", type=_positive, default=6)
    c.add_argument("--taylor-cap", type=_positive, default=TAYLOR_CAP,
                   help="largest generator count the Taylor oracle accepts")
    return p


def _ideal(args) -> MonomialIdeal:
    return parse_ideal(args.ideal, parse_ring(args.ring))


def _table_rows(tables: dict[int, BettiTable]) -> str:
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(["d", "i", "j", "multiplicity"])
    for d, B in tables.items():
        for (i, j), m in B.entries.items():
            out.writerow([d, i, j, m])
    return buf.getvalue().rstrip("\n")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _cmd_betti(args, out: TextIO, err: TextIO) -> int:
    I = _ideal(args)
    P = power(I, args.power)
    if args.method == "lattice":
        size = len(lcm_closure(P))
        if size > args.lattice_warn:
            err.write(f"{PROG}: warning[capacity]: lcm lattice has {size} elements\n")
    B = betti_koszul(P, method=args.method)
    if args.format == "json":
        out.write(_dump({
            "ring": list(I.ring.variable_names),
            "ideal": [str(g) for g in I.generators],
            "r": min_gen_degree(I),
            "power": args.power,
            "tables": {str(args.power): B.to_json()},
        }) + "\n")
    elif args.format == "csv":
        out.write(_table_rows({args.power: B}) + "\n")
    else:
        out.write(render_m2(B, args.typographic) + "\n")
        if args.skeleton:
            out.write("\n" + resolution_skeleton(B, args.typographic) + "\n")
    return EXIT_OK


def _cmd_stabseq(args, out: TextIO, err: TextIO) -> int:
    I = _ideal(args)
    keep = args.include_bettis or args.format != "text"
    rep = stab_seq(I, args.max_power, args.lookahead, keep_tables=keep, workers=args.workers)
    if args.format == "json":
        out.write(_dump({
            "ring": list(I.ring.variable_names),
            "ideal": [str(g) for g in I.generators],
            "r": rep.shift_r,
            "max_power": rep.max_power,
            "lookahead": rep.lookahead_used,
            "equigenerated": rep.equigenerated,
            "tables": {str(d): B.to_json() for d, B in rep.tables.items()} if args.include_bettis else {},
            "stab_seq": list(rep.stab_seq),
            "estimated_stab": rep.estimated_stab,
            "stable_run_length": rep.stable_run_length,
            "recurrences": [list(p) for p in rep.recurrences],
        }) + "\n")
        return EXIT_OK
    if args.format == "csv":
        out.write(_table_rows(rep.tables) + "\n")
        return EXIT_OK

    lines = [rep.sequence_text()]
    if rep.estimated_stab is not None:
        lines.append(f"estimated Stab: {rep.estimated_stab} (estimate; shape unchanged for the last "
                     f"{rep.stable_run_length} powers up to {rep.max_power})")
    else:
        lines.append(f"estimated Stab: none (last change at d = {rep.stab_seq[-1]}, only "
                     f"{rep.stable_run_length} stable powers up to {rep.max_power}; lookahead {rep.lookahead_used})")
    if not rep.equigenerated:
        lines.append(f"note: I is not equigenerated; shapes are shifted by r*d with r = {rep.shift_r}")
    for d, e in rep.recurrences:
        lines.append(f"note: the shape at d = {d} already occurred at d = {e}")
    out.write("\n".join(lines) + "\n")
    if args.include_bettis:
        for d, B in rep.tables.items():
            out.write(f"\nd = {d}\n{render_m2(B, args.typographic)}\n")
    return EXIT_OK


def _fit_json(fit: LinearFit | None):
    if fit is None:
        return None

    def q(x):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    return {"slope": q(fit.slope), "intercept": q(fit.intercept), "n_values": list(fit.n_values)}


def _cmd_sweep(args, out: TextIO, err: TextIO) -> int:
    ring = parse_ring(args.ring)
    F = parse_family(args.family, ring, n_min=args.n_min)
    lo, hi = parse_range(args.n_range)
    fit_range = parse_range(args.fit_range) if args.fit_range else None
    res = family_sweep(F, (lo, hi), args.max_power, args.lookahead, workers=args.workers, fit_range=fit_range)

    if args.format == "json":
        out.write(_dump({
            "ring": list(ring.variable_names),
            "family": str(F),
            "max_power": args.max_power,
            "lookahead": args.lookahead,
            "members": [{
                "n": n,
                "ideal": [str(g) for g in rep.ideal.generators],
                "r": rep.shift_r,
                "stab_seq": list(rep.stab_seq),
                "estimated_stab": rep.estimated_stab,
                "stable_run_length": rep.stable_run_length,
            } for n, rep in res.reports.items()],
            "fits": {"stab": _fit_json(res.stab_fit), "cardinality": _fit_json(res.cardinality_fit)},
        }) + "\n")
        return EXIT_OK
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "stab_estimate", "seq"])
        for n, rep in res.reports.items():
            w.writerow([n, "" if rep.estimated_stab is None else rep.estimated_stab,
                        ";".join(str(d) for d in rep.stab_seq)])
        out.write(buf.getvalue())
        return EXIT_OK

    lines = []
    for n, rep in res.reports.items():
        est = rep.estimated_stab if rep.estimated_stab is not None else "none"
        lines.append(f"n = {n}: I_n = ({format_ideal(rep.ideal)})")
        lines.append(f"  StabSeq = {rep.sequence_text()}  estimated Stab: {est}")
    if args.fit:
        for label, fit in (("Stab(I_n)", res.stab_fit), ("|StabSeq(I_n)|", res.cardinality_fit)):
            if fit is None:
                lines.append(f"{label}: no exact linear fit")
            else:
                lines.append(f"{label} = {fit.formula()} (exact on {fit.range_text()})")
        lines.append("fits are over estimated Stab values; they are not proofs")
    out.write("\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_check(args, out: TextIO, err: TextIO) -> int:
    failures = 0
    for k, I in enumerate(random_corpus(args.count, args.seed, args.max_vars, args.max_gens, args.max_exp)):
        problems = check_ideal(I, taylor_cap=args.taylor_cap)
        if problems:
            failures += 1
            err.write(f"{PROG}: error[check]: ideal #{k} ring {I.ring}: {format_ideal(I)}\n")
            for p in problems:
                err.write(f"{PROG}: error[check]:   {p}\n")
    out.write(f"checked {args.count} ideals (seed {args.seed}): {failures} disagreement(s)\n")
    return EXIT_CHECK if failures else EXIT_OK


_COMMANDS = {"betti": _cmd_betti, "stabseq": _cmd_stabseq, "sweep": _cmd_sweep, "check": _cmd_check}


def _fail(err: TextIO, kind: str, message: str, code: int) -> int:
    err.write(f"{PROG}: error[{kind}]: {message}\n")
    return code


def run_cli(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    """Run one command; returns the exit status instead of exiting."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        return _fail(err, "usage", str(exc), EXIT_USAGE)
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args, out, err)
    except ParseError as exc:
        return _fail(err, "parse", str(exc), EXIT_USAGE)
    except CapacityError as exc:
        return _fail(err, "capacity", str(exc), EXIT_CAPACITY)
    except (DomainError, BettiStabError, ValueError) as exc:
        return _fail(err, "domain", str(exc), EXIT_USAGE)


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run_cli(argv))
