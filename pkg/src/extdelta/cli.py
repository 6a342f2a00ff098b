"""Command-line front end.

Exit codes: 0 ok, 1 a failed case in an assertive suite (or a failed map
contract), 2 parse or usage error, 3 domain violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .bijections import GAMMAS, gamma_minimaj_stages
from .core import Composition, DomainError, ParseError, parse, serialize
from .insertion import MAPS, InsertionInput
from .parking import area, area_minus, dinv, dinv_minus, rise_gf, val_gf
from .qseries import DistributionKey, brute_force_D
from .statistics import STATISTICS, descent_starred, dinv_triples, inv_pairs, ind_word, miniword
from .suites import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3

MAP_NAMES = ["phi-inv", "phi-maj", "phi-dinv", "gamma-dinv", "gamma-maj", "gamma-inv", "gamma-minimaj"]


class UsageError(Exception):
    pass


def _ints(text: str | None) -> tuple[int, ...]:
    if text is None or not text.strip():
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _composition(text: str) -> tuple[int, ...]:
    return Composition(_ints(text)).parts


# --- stat ------------------------------------------------------------------------


def cmd_stat(args) -> int:
    pi = parse(args.partition)
    fn = STATISTICS[args.stat]
    print(fn(pi))
    if args.verbose:
        if args.stat == "inv":
            print("inversion pairs:", " ".join(f"({a},{b})" for a, b in inv_pairs(pi)))
        elif args.stat == "dinv":
            for h, i, j, kind in dinv_triples(pi):
                print(f"({h},{i},{j}) {kind}")
        elif args.stat == "maj":
            print("starred word:", descent_starred(pi))
            print("ind:", "".join(map(str, ind_word(pi))))
        else:
            print("miniword:", miniword(pi))
    return EXIT_OK


# --- map ---------------------------------------------------------------------------


def _contract_line(name: str, d, pi) -> tuple[str, bool]:
    pf, marks = d.pf, d.marks
    value = STATISTICS[name](pi)
    if name == "dinv":
        got, zero, label, zname = dinv(pf), area_minus(pf, marks), "dinv(PF)", "area^-"
    elif name == "maj":
        got, zero, label, zname = area_minus(pf, marks), dinv(pf), "area^-(PF)", "dinv"
    elif name == "inv":
        got, zero, label, zname = dinv_minus(pf, marks), area(pf), "dinv^-(PF)", "area"
    else:
        got, zero, label, zname = area(pf), dinv_minus(pf, marks), "area(PF)", "dinv^-"
    ok = got == value and zero == 0
    return f"contract: {name}(pi)={value} {label}={got} {zname}={zero} {'ok' if ok else 'FAILED'}", ok


def cmd_map(args) -> int:
    name = args.name
    pi = parse(args.input)
    if name.startswith("phi-"):
        stat = name[4:]
        if args.beta is None or args.k is None:
            raise UsageError(f"{name} needs --beta and --k")
        beta = _composition(args.beta)
        inp = InsertionInput(pi, _ints(args.U), _ints(args.B))
        out = MAPS[stat](inp, beta, args.k)
        before, after = STATISTICS[stat](pi), STATISTICS[stat](out)
        ok = after - before == inp.weight
        print(serialize(out))
        print(f"contract: {stat} {before} -> {after}, increase {after - before}, "
              f"sum(U)+sum(B) = {inp.weight} {'ok' if ok else 'FAILED'}")
        return EXIT_OK if ok else EXIT_FAIL
    stat = name[6:]
    d = GAMMAS[stat](pi)
    obj = d.to_dict()
    if args.stages and stat == "minimaj":
        obj = {"object": obj, "stages": gamma_minimaj_stages(pi)}
    print(json.dumps(obj, sort_keys=True))
    line, ok = _contract_line(stat, d, pi)
    print(line)
    return EXIT_OK if ok else EXIT_FAIL


# --- gf / dist -------------------------------------------------------------------------


def _specialize(poly, at: str | None):
    if at is None:
        return poly
    if at == "t=0":
        return poly.specialize(t=0)
    if at == "q=0":
        return poly.specialize(q=0)
    raise UsageError(f"--at must be t=0 or q=0, not {at!r}")


def cmd_gf(args) -> int:
    beta = _composition(args.content)
    fn = rise_gf if args.version == "rise" else val_gf
    poly = fn(args.n, args.k, args.r, beta)
    print(_specialize(poly, args.at).serialize())
    return EXIT_OK


def cmd_dist(args) -> int:
    beta = _composition(args.content)
    shape = _composition(args.shape) if args.shape else None
    key = DistributionKey(args.r, beta, args.k, args.variant, args.stat, shape)
    print(brute_force_D(key).serialize())
    return EXIT_OK


# --- verify -----------------------------------------------------------------------------


def cmd_verify(args) -> int:
    if args.max_size < 0 or args.max_r < 0:
        raise DomainError("--max-size and --max-r must be non-negative")
    if args.jobs < 1:
        raise DomainError("--jobs must be at least 1")
    report = run_suite(args.suite, args.max_size, args.max_r, jobs=args.jobs, timing=not args.no_timing)
    if args.json:
        text = report.to_json()
        if args.json == "-":
            sys.stdout.write(text)
        else:
            Path(args.json).write_text(text)
    if args.json != "-":
        kind = "assertive" if report.assertive else "report"
        print(f"{report.suite} ({kind}): {report.passed} passed, {report.failed} failed"
              + (f" in {report.elapsed_ms} ms" if report.elapsed_ms is not None else ""))
        for group, counts in report.summary.items():
            print(f"  {group}: {counts['passed']} passed, {counts['failed']} failed")
    return report.exit_code


def cmd_golden(args) -> int:
    from .golden import check_locked, write_locked

    if args.check:
        bad = check_locked(args.directory)
        for key in bad:
            print(f"mismatch: {key}")
        print(f"{'ok' if not bad else f'{len(bad)} mismatches'}")
        return EXIT_OK if not bad else EXIT_FAIL
    print(write_locked(args.directory))
    return EXIT_OK


# --- parser ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="extdelta", description="Ordered multiset partitions, parking functions and their identities.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("stat", help="compute a statistic of a partition")
    s.add_argument("partition", help='e.g. "1,3,4/2,6,8/5,7" or "134/268/57"')
    s.add_argument("stat", choices=sorted(STATISTICS))
    s.add_argument("-v", "--verbose", action="store_true", help="print the witness structure")
    s.set_defaults(func=cmd_stat)

    m = sub.add_parser("map", help="apply an insertion map or a bijection")
    m.add_argument("name", choices=MAP_NAMES)
    m.add_argument("input", help="partition text (pi for the insertion maps)")
    m.add_argument("--U", help="block labels, comma-separated")
    m.add_argument("--B", help="B' for a partition whose last block holds 0, else B")
    m.add_argument("--beta", help="content composition of the result, e.g. 2,3,2,4")
    m.add_argument("--k", type=int, help="number of blocks of the result")
    m.add_argument("--stages", action="store_true", help="gamma-minimaj: include intermediate objects")
    m.set_defaults(func=cmd_map)

    g = sub.add_parser("gf", help="content slice of Rise or Val")
    g.add_argument("version", choices=["rise", "val"])
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--r", type=int, default=0)
    g.add_argument("--content", required=True, help="beta, comma-separated")
    g.add_argument("--at", help="t=0 or q=0")
    g.set_defaults(func=cmd_gf)

    d = sub.add_parser("dist", help="distribution polynomial D^stat by enumeration")
    d.add_argument("stat", choices=sorted(STATISTICS))
    d.add_argument("--r", type=int, default=0)
    d.add_argument("--content", required=True)
    d.add_argument("--k", type=int, required=True, help="number of blocks")
    d.add_argument("--variant", choices=["tail_positive", "all"], default="tail_positive")
    d.add_argument("--shape", help="fix the block sizes")
    d.set_defaults(func=cmd_dist)

    v = sub.add_parser("verify", help="run an identity suite")
    v.add_argument("suite", choices=list(SUITES))
    v.add_argument("--max-size", type=int, default=6)
    v.add_argument("--max-r", type=int, default=2)
    v.add_argument("--json", metavar="PATH", help="write the report as JSON ('-' for stdout)")
    v.add_argument("--jobs", type=int, default=1, help="worker processes")
    v.add_argument("--no-timing", action="store_true", help="leave elapsed_ms null for byte-stable reports")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("golden", help="write or check the locked derived polynomials")
    o.add_argument("directory")
    o.add_argument("--check", action="store_true", help="compare instead of writing")
    o.set_defaults(func=cmd_golden)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        if exc.text:
            print(f"  {exc.text}\n  {' ' * exc.position}^", file=sys.stderr)
        return EXIT_USAGE
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
