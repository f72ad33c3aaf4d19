"""Command-line entry point: ``qfib <verb> ...``.

Verbs: enumerate, poly, biject, minor, verify.  Exit status is 0 on success,
1 when an identity (or a minor cross-check) fails, 2 on a usage error and 3
when an enumeration ceiling is exceeded.  ``QFIB_CEILING`` raises or lowers
the ceilings.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import combinat as C
from . import lgv
from . import qfib as Q
from . import verify as V
from .poly import PolynomialError

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CEILING = 0, 1, 2, 3

FAMILY_ALIASES = {
    "A": "A",
    "F": "F_q", "Fq": "F_q", "F_q": "F_q",
    "Fxy": "F_xyq", "F_xyq": "F_xyq",
    "FK": "FK", "FC": "FC",
    "Fpq": "F_xypq", "F_xypq": "F_xypq",
}

MINOR_METHODS = ("cofactor", "tuples", "noncrossing", "reduction", "closed", "all")
BIJECTIONS = ("complement", "phi", "phi-inv", "binary", "binary-inv",
              "morse", "morse-inv", "shift")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _assignment(text: str) -> dict:
    out = {}
    for part in text.split(","):
        if not part.strip():
            continue
        var, _, val = part.partition("=")
        if var.strip() not in ("x", "y", "p", "q") or not val:
            raise argparse.ArgumentTypeError(f"bad assignment {part!r}; use e.g. x=1,y=1")
        out[var.strip()] = int(val)
    return out


def _range_override(text: str) -> tuple[str, tuple[int, int]]:
    # n=2:8  or  n=5
    name, _, rng = text.partition("=")
    lo, _, hi = rng.partition(":")
    try:
        lo_i = int(lo)
        hi_i = int(hi) if hi else lo_i
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; use NAME=LO:HI")
    return name.strip(), (lo_i, hi_i)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--deterministic", action="store_true",
                        help="omit wall-clock timings from reports")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for sampled checks (verify --sample); ignored elsewhere")

    parser = _Parser(prog="qfib", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    e = sub.add_parser("enumerate", parents=[common], help="list pattern-avoiding set partitions")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--avoid", default="", help="comma-separated patterns, e.g. 13/2,123")
    e.add_argument("--stats", action="store_true", help="add ls, rb, s, d columns")
    e.add_argument("--count", action="store_true", help="print only the number of partitions")

    p = sub.add_parser("poly", parents=[common], help="build a q-Fibonacci polynomial")
    p.add_argument("--family", required=True, choices=sorted(FAMILY_ALIASES))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, default=0, help="x -> x q^a, y -> y q^a")
    p.add_argument("--b", type=int, default=0, help="x -> x p^b, y -> y p^b")
    p.add_argument("--via", choices=("recursion", "enumeration"), default="recursion")
    p.add_argument("--at", type=_assignment, default=None, metavar="x=1,y=1",
                   help="specialize variables after building")

    b = sub.add_parser("biject", parents=[common], help="apply one of the bijections")
    b.add_argument("--map", required=True, choices=BIJECTIONS)
    b.add_argument("--input", required=True,
                   help="a partition (13/2), binary word (0101), Morse word (.-.) or "
                        "integer partition (3,1)")
    b.add_argument("--n", type=int, default=None, help="ground set size for phi-inv")
    b.add_argument("--k", type=int, default=0, help="number of blanks for shift")

    m = sub.add_parser("minor", parents=[common], help="minor of the path matrix")
    m.add_argument("--rows", type=_int_list, required=True)
    m.add_argument("--cols", type=_int_list, required=True)
    m.add_argument("--method", choices=MINOR_METHODS, default="cofactor",
                   help="'all' prints cofactor, tuple-sum and noncrossing-sum side by side")

    v = sub.add_parser("verify", parents=[common], help="check identities")
    g = v.add_mutually_exclusive_group(required=True)
    g.add_argument("--all", action="store_true")
    g.add_argument("--identity", action="append", metavar="NAME")
    g.add_argument("--list", action="store_true")
    v.add_argument("--profile", choices=("quick", "full"), default="quick")
    v.add_argument("--set", dest="overrides", action="append", type=_range_override,
                   default=[], metavar="NAME=LO:HI",
                   help="narrow a parameter range (single identity only)")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--sample", type=int, default=None,
                   help="check a seeded random sample of assignments per identity")
    return parser


# -- verbs ---------------------------------------------------------------------

def _emit_table(fmt: str, header: list[str], rows: list[list], out) -> None:
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    else:
        widths = [max(len(str(r[i])) for r in [header] + rows) for i in range(len(header))]
        for r in [header] + rows:
            out.write("  ".join(str(c).ljust(wd) for c, wd in zip(r, widths)).rstrip() + "\n")


def cmd_enumerate(args, out) -> int:
    try:
        pats = [C.SetPartition.parse(t) for t in args.avoid.split(",") if t.strip()]
    except C.InvalidPartition as exc:
        raise UsageError(str(exc))
    parts = C.enumerate_avoiders(args.n, pats)
    if args.count:
        if args.format == "json":
            out.write(json.dumps({"n": args.n, "avoid": [str(s) for s in pats],
                                  "count": len(parts)}) + "\n")
        else:
            out.write(f"{len(parts)}\n")
        return EXIT_OK
    header = ["partition"]
    if args.stats:
        header += ["ls", "rb", "s", "d"]
    rows = []
    for pi in parts:
        row = [str(pi)]
        if args.stats:
            st = C.stats(pi)
            row += [st.ls, st.rb, st.singletons, st.doubletons]
        rows.append(row)
    if args.format == "json":
        recs = []
        for pi, row in zip(parts, rows):
            rec = {"partition": pi.to_json(), "text": row[0]}
            rec.update(dict(zip(header[1:], row[1:])))
            recs.append(rec)
        out.write(json.dumps({"n": args.n, "avoid": [str(s) for s in pats],
                              "count": len(parts), "partitions": recs}, indent=2) + "\n")
    else:
        _emit_table(args.format, header, rows, out)
    return EXIT_OK


def cmd_poly(args, out) -> int:
    if args.format == "csv":
        raise UsageError("csv output is only available for enumerate and verify")
    try:
        fam = Q.Family(FAMILY_ALIASES[args.family], args.a, args.b)
        P = Q.family_poly(fam, args.n, args.via)
    except ValueError as exc:
        if isinstance(exc, C.CeilingExceeded):
            raise
        raise UsageError(str(exc))
    if args.at:
        P = P.specialize(args.at)
    if args.format == "json":
        out.write(json.dumps({"family": fam.tag, "n": args.n, "a": args.a, "b": args.b,
                              "at": args.at, "poly": str(P)}) + "\n")
    else:
        out.write(f"{P}\n")
    return EXIT_OK


def _biject(args):
    kind, text = args.map, args.input
    if kind == "phi-inv":
        if args.n is None:
            raise UsageError("phi-inv needs --n")
        lam = C.IntegerPartition(int(t) for t in text.split(",") if t.strip())
        return lam, C.phi_inv(lam, args.n)
    if kind == "binary-inv":
        beta = C.BinarySeq(text)
        return beta, C.from_binary_seq(beta)
    if kind == "morse-inv":
        nu = C.MorseSeq(text)
        return nu, C.from_morse(nu)
    pi = C.SetPartition.parse(text)
    if kind == "complement":
        return pi, C.complement(pi)
    if kind == "phi":
        return pi, C.phi(pi)
    if kind == "binary":
        return pi, C.to_binary_seq(pi)
    if kind == "morse":
        return pi, C.to_morse(pi)
    return pi, C.shift(pi, args.k)


def _show(obj) -> str:
    if isinstance(obj, C.IntegerPartition):
        return ",".join(map(str, obj)) if obj else "()"
    return str(obj)


def cmd_biject(args, out) -> int:
    if args.format == "csv":
        raise UsageError("csv output is only available for enumerate and verify")
    try:
        src, dst = _biject(args)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc))
    if args.format == "json":
        rec = {"map": args.map, "input": _show(src), "output": _show(dst)}
        if isinstance(dst, C.ShiftedPartition):
            rec["omega"] = str(dst.omega())
            rec["rb"] = dst.rb()
        out.write(json.dumps(rec) + "\n")
    else:
        out.write(f"{_show(dst)}\n")
    return EXIT_OK


def cmd_minor(args, out) -> int:
    if args.format == "csv":
        raise UsageError("csv output is only available for enumerate and verify")
    u, v = args.rows, args.cols
    try:
        if args.method == "all":
            results = {"cofactor": lgv.minor_cofactor(u, v),
                       "tuples": lgv.minor_tuples(u, v, "all"),
                       "noncrossing": lgv.minor_tuples(u, v, "noncrossing")}
        elif args.method == "closed":
            results = {"closed": lgv.closed_form_minor(u, v).value()}
        elif args.method == "tuples":
            results = {"tuples": lgv.minor(u, v, "all")}
        else:
            results = {args.method: lgv.minor(u, v, args.method)}
    except lgv.IndexSequenceError as exc:
        raise UsageError(str(exc))
    agree = len(set(results.values())) == 1
    if args.format == "json":
        out.write(json.dumps({"rows": list(u), "cols": list(v),
                              "results": {k: str(P) for k, P in results.items()},
                              "agree": agree}, indent=2) + "\n")
    else:
        for P in results.values():
            out.write(f"{P}\n")
    return EXIT_OK if agree else EXIT_FAIL


def cmd_verify(args, out) -> int:
    if args.list:
        names = V.names()
        if args.format == "json":
            out.write(json.dumps([{"name": n, "tags": V.REGISTRY[n].tags} for n in names],
                                 indent=2) + "\n")
        elif args.format == "csv":
            _emit_table("csv", ["name", "tags"], [[n, V.REGISTRY[n].tags] for n in names], out)
        else:
            for n in names:
                out.write(f"{n:28s}{V.REGISTRY[n].tags}\n")
        return EXIT_OK
    names = None if args.all else args.identity
    try:
        if args.overrides:
            if not names or len(names) != 1:
                raise UsageError("--set applies to exactly one --identity")
            rep = V.run_identity(names[0], dict(args.overrides), profile=args.profile,
                                 sample=args.sample, seed=args.seed)
            summary = V.Summary(args.profile, [rep])
        else:
            summary = V.run_all(args.profile, names, workers=args.workers,
                                sample=args.sample, seed=args.seed)
    except KeyError as exc:
        raise UsageError(exc.args[0] if exc.args else str(exc))
    det = args.deterministic
    if args.format == "json":
        out.write(summary.json(det) + "\n")
    elif args.format == "csv":
        header = ["name", "status", "instances", "refinement_classes"]
        if not det:
            header.append("elapsed")
        rows = []
        for r in summary.reports:
            row = [r.name, r.status, r.instances, r.refinements]
            if not det:
                row.append(f"{r.elapsed:.4f}")
            rows.append(row)
        _emit_table("csv", header, rows, out)
    else:
        out.write(summary.text(det) + "\n")
    return EXIT_OK if summary.ok else EXIT_FAIL


COMMANDS = {"enumerate": cmd_enumerate, "poly": cmd_poly, "biject": cmd_biject,
            "minor": cmd_minor, "verify": cmd_verify}


def run(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:  # --help
            return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
        return COMMANDS[args.verb](args, out)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except C.CeilingExceeded as exc:
        err.write(f"ceiling exceeded: {exc}\n")
        return EXIT_CEILING
    except (C.InvalidPartition, PolynomialError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def run_capture(argv) -> tuple[int, str, str]:
    """Run a command and return (status, stdout, stderr) as strings."""
    o, e = io.StringIO(), io.StringIO()
    code = run(argv, o, e)
    return code, o.getvalue(), e.getvalue()


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
