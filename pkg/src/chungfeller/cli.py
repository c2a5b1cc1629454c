"""Command-line front end: ``cf <subcommand> [options]``.

Exit status is 0 on success, 1 when a verification fails and 2 on a usage
error.  JSON output has sorted keys and every number as a decimal string.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import bijections as bij
from . import closed_forms as cf
from . import series as ser
from . import theorems
from .cycle import verify_equidistribution
from .enumeration import COUNT_KINDS, BudgetExceeded, FamilySpec, enumerate_family
from .paths import PathError
from .stats import Selector

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _csv(rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


# ---- subcommands ----------------------------------------------------------------------

def _table(args) -> tuple[int, str]:
    if args.kmax < 0 or args.lmax < 0:
        raise UsageError("--kmax and --lmax must be nonnegative")
    fn = cf.t_number if args.name == "tkl" else cf.z_number
    k0 = 0 if args.name == "tkl" else 1
    ks = range(k0, args.kmax + 1)
    ls = range(0, args.lmax + 1)
    grid = [[fn(k, l) for l in ls] for k in ks]
    if args.format == "json":
        return EXIT_OK, _dump({"name": args.name,
                               "values": {f"{k},{l}": str(v)
                                          for k, row in zip(ks, grid) for l, v in zip(ls, row)}})
    if args.format == "csv":
        return EXIT_OK, _csv([["k", "l", "value"]]
                             + [[k, l, v] for k, row in zip(ks, grid) for l, v in zip(ls, row)])
    width = max(len(str(v)) for row in grid for v in row) if grid else 1
    width = max(width, len(str(args.lmax)), 3)
    lines = ["k\\l".rjust(4) + "".join(str(l).rjust(width + 1) for l in ls)]
    lines += [str(k).rjust(4) + "".join(str(v).rjust(width + 1) for v in row)
              for k, row in zip(ks, grid)]
    return EXIT_OK, "\n".join(lines) + "\n"


def _seq(args) -> tuple[int, str]:
    if args.count < 0:
        raise UsageError("--count must be nonnegative")
    values = cf.sequence(args.name, args.count, r=args.r, offset=args.offset)
    if args.format == "json":
        return EXIT_OK, _dump({"name": args.name, "values": [str(v) for v in values]})
    if args.format == "csv":
        return EXIT_OK, _csv([["index", "value"]] + [[i, v] for i, v in enumerate(values)])
    return EXIT_OK, ",".join(map(str, values)) + "\n"


def _dist(args) -> tuple[int, str]:
    spec = FamilySpec.parse(args.family)
    sel = Selector.parse(args.selector) if args.selector else None
    verdict = verify_equidistribution(spec, sel, args.count_kind)
    if args.format == "json":
        return EXIT_OK, _dump(verdict.to_dict())
    if args.format == "csv":
        return EXIT_OK, verdict.table.to_csv()
    lines = [f"family {verdict.table.spec}", f"statistic {verdict.table.selector}"]
    lines += [f"{v} {verdict.table.counts[v]}" for v in sorted(verdict.table.counts)]
    lines.append(f"uniform {'yes' if verdict.uniform else 'no'}"
                 + (f" (each {verdict.common_count})" if verdict.uniform else ""))
    return EXIT_OK, "\n".join(lines) + "\n"


def _verify(args) -> tuple[int, str]:
    ids = list(theorems.REGISTRY) if args.theorem == "all" else [args.theorem]
    for tid in ids:
        if tid not in theorems.REGISTRY:
            raise UsageError(f"unknown theorem {tid!r}; known: all, {', '.join(theorems.REGISTRY)}")
    bounds = dict(max_n=args.max_n, max_r=args.max_r, max_kl=args.max_kl, r=args.r)
    reports = [theorems.verify_theorem(tid, **bounds) for tid in ids]
    ok = all(r.passed for r in reports)
    code = EXIT_OK if ok else EXIT_FAIL
    if args.format == "json":
        return code, _dump({"passed": ok, "reports": [r.to_dict() for r in reports]})
    if args.format == "csv":
        rows = [["theorem", "params", "family", "statistic", "lo", "hi", "common",
                 "expected", "passed"]]
        for rep in reports:
            for c in rep.checks:
                rows.append([rep.theorem, ";".join(f"{k}={v}" for k, v in c.params.items()),
                             c.family, c.statistic, c.domain[0], c.domain[1],
                             "" if c.common is None else c.common, c.expected,
                             "pass" if c.passed else "fail"])
        return code, _csv(rows)
    lines = []
    for rep in reports:
        for c in rep.checks:
            mark = "ok  " if c.passed else "FAIL"
            lines.append(f"{mark} {rep.theorem} {c.family} [{c.statistic}] "
                         f"{c.domain[0]}..{c.domain[1]} each={c.common} expected={c.expected}")
        lines.append(f"{rep.theorem}: {'PASS' if rep.passed else 'FAIL'} ({len(rep.checks)} checks)")
    return code, "\n".join(lines) + "\n"


def _monomial(names, exps) -> str:
    return "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, exps) if e) or "1"


def _series(args) -> tuple[int, str]:
    if args.order < 0:
        raise UsageError("--order must be nonnegative")
    s = ser.named_series(args.name, args.order, r=args.r)
    names = s.ring.names
    terms = sorted(s.terms.items(), key=lambda t: (s.ring.degree(t[0]), t[0]))
    if args.format == "json":
        return EXIT_OK, _dump({"name": args.name, "order": str(s.order),
                               "variables": list(names),
                               "weights": [str(w) for w in s.ring.weights],
                               "coefficients": {_monomial(names, m): str(c) for m, c in terms}})
    if args.format == "csv":
        return EXIT_OK, _csv([[*names, "coefficient"]] + [[*m, c] for m, c in terms])
    return EXIT_OK, "".join(f"{_monomial(names, m)} {c}\n" for m, c in terms)


def _identity(args) -> tuple[int, str]:
    ids = list(ser.IDENTITIES) if args.name == "all" else [args.name]
    for iid in ids:
        if iid not in ser.IDENTITIES:
            raise UsageError(f"unknown identity {iid!r}; known: all, {', '.join(ser.IDENTITIES)}")
    results = {iid: ser.identity_check(iid, args.order) for iid in ids}
    return _boolean_report(results, args.format, "identity", args.order)


def _relation(args) -> tuple[int, str]:
    ids = list(cf.RELATIONS) if args.name == "all" else [args.name]
    for rid in ids:
        if rid not in cf.RELATIONS:
            raise UsageError(f"unknown relation {rid!r}; known: all, {', '.join(cf.RELATIONS)}")
    results = {rid: cf.relation_check(rid, args.bound) for rid in ids}
    return _boolean_report(results, args.format, "relation", args.bound)


def _boolean_report(results: dict[str, bool], fmt: str, what: str, bound: int) -> tuple[int, str]:
    code = EXIT_OK if all(results.values()) else EXIT_FAIL
    if fmt == "json":
        return code, _dump({what: dict(results), "bound": str(bound),
                            "passed": code == EXIT_OK})
    if fmt == "csv":
        return code, _csv([[what, "passed"]] + [[k, "pass" if v else "fail"]
                                                for k, v in results.items()])
    return code, "".join(f"{k}: {'PASS' if v else 'FAIL'}\n" for k, v in results.items())


def _eval(args) -> tuple[int, str]:
    kw = {}
    for item in args.arg or []:
        key, eq, val = item.partition("=")
        if not eq:
            raise UsageError(f"--arg expects name=value, got {item!r}")
        kw[key] = int(val)
    variants = range(1, cf.variant_count(args.family) + 1) if args.variant is None else [args.variant]
    values = {v: cf.eval_form(args.family, v, **kw) for v in variants}
    agree = len(set(values.values())) <= 1
    code = EXIT_OK if agree else EXIT_FAIL
    if args.format == "json":
        return code, _dump({"family": args.family, "args": {k: str(v) for k, v in kw.items()},
                            "values": {str(k): str(v) for k, v in values.items()},
                            "agree": agree})
    if args.format == "csv":
        return code, _csv([["variant", "value"]] + [[k, v] for k, v in values.items()])
    return code, "".join(f"variant {k}: {v}\n" for k, v in values.items())


def _bijection_pairs(name: str, n: int) -> list[tuple[str, str]]:
    if name == "schroder-flatten":
        return [(p.word, bij.schroder_flatten(p).word) for p in bij.schroder_paths(n, False)]
    if name == "schroder-elevate":
        return [(p.word, bij.schroder_elevate(p).word) for p in bij.schroder_paths(n, True)]
    if name == "pair2motzkin":
        spec = FamilySpec.p(n, 1, 0, "nonnegative")
        return [(p.word, "".join(map(str, bij.pair_to_two_colored(p))))
                for p in enumerate_family(spec)]
    out = []
    for case in ("leading-flat", "leading-du"):
        out += [(q.word, bij.motzkin_class_maps(q, case).word) for q in bij.motzkin_class(n, case)]
    return out


def _bijection(args) -> tuple[int, str]:
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    pairs = _bijection_pairs(args.name, args.n)
    if args.format == "json":
        return EXIT_OK, _dump({"name": args.name, "n": str(args.n),
                               "pairs": [[a, b] for a, b in pairs]})
    if args.format == "csv":
        return EXIT_OK, _csv([["input", "output"]] + pairs)
    width = max((len(a) for a, _ in pairs), default=0)
    return EXIT_OK, "".join(f"{a.ljust(width)} -> {b}\n" for a, b in pairs)


# ---- parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cf", description="Exact enumeration and verification of Chung-Feller type theorems.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    def command(name, fn, help_):
        p = sub.add_parser(name, help=help_, description=help_)
        p.add_argument("--format", choices=("text", "csv", "json"), default="text")
        p.set_defaults(func=fn, usage=p.format_usage)
        return p

    p = command("table", _table, "Print the T(k,l) or Z(k,l) table.")
    p.add_argument("--name", choices=("tkl", "zkl"), required=True)
    p.add_argument("--kmax", type=int, default=6)
    p.add_argument("--lmax", type=int, default=6)

    p = command("seq", _seq, "Print the first terms of a number sequence.")
    p.add_argument("--name", required=True,
                   help="catalan, motzkin, riordan, schroder, small-schroder or fuss-catalan")
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--r", type=int, help="step height for fuss-catalan")
    p.add_argument("--offset", type=int, help="first index (riordan starts at 1)")

    p = command("dist", _dist, "Histogram a statistic over a path family.")
    p.add_argument("--family", required=True, help="e.g. P:n=4,r=1,h=1+first=U")
    p.add_argument("--selector", help="special-vertex selector, e.g. up-start or peak")
    p.add_argument("--count-kind", choices=COUNT_KINDS, default="on-or-below")

    p = command("verify", _verify, "Exhaustively verify a registered equidistribution statement.")
    p.add_argument("--theorem", required=True, help="statement id or 'all'")
    p.add_argument("--max-n", type=int)
    p.add_argument("--max-r", type=int)
    p.add_argument("--max-kl", type=int)
    p.add_argument("--r", type=int)

    p = command("series", _series, "Print the coefficients of a named truncated series.")
    p.add_argument("--name", required=True, help=", ".join(ser.NAMED))
    p.add_argument("--order", type=int, default=8)
    p.add_argument("--r", type=int)

    p = command("identity", _identity, "Check a generating-function identity to a given order.")
    p.add_argument("--name", required=True, help="identity id or 'all'")
    p.add_argument("--order", type=int, default=10)

    p = command("relation", _relation, "Check a relation between number families.")
    p.add_argument("--name", required=True, help="relation id or 'all'")
    p.add_argument("--bound", type=int, default=8)

    p = command("eval", _eval, "Evaluate every closed-form variant of a number family.")
    p.add_argument("--family", required=True, choices=sorted(cf.FORMS))
    p.add_argument("--variant", type=int)
    p.add_argument("--arg", action="append", metavar="NAME=VALUE")

    p = command("bijection", _bijection, "Print input and output words of a bijection.")
    p.add_argument("--name", required=True,
                   choices=("schroder-flatten", "schroder-elevate", "pair2motzkin", "motzkin-class"))
    p.add_argument("--n", type=int, required=True)
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        code, text = args.func(args)
    except BudgetExceeded as exc:
        err.write(f"cf: {exc}\n")
        return EXIT_USAGE
    except (UsageError, ValueError, KeyError, PathError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        err.write(f"cf {args.command}: {msg}\n")
        if isinstance(exc, UsageError):
            err.write(args.usage())
        return EXIT_USAGE
    out.write(text if args.format != "json" else text + "\n")
    return code


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
