"""Command line entry point: ``cyclic {analyze,realize,enumerate,verify,types,diagram}``.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 verification
failure, 4 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import cycles as cyc
from .diagram import orbit_svg
from .errors import BudgetExceeded, CycleParseError, CyclicError
from .oracle import default_budget, enumerate_orbits, verify_counts
from .realization import (
    Orbit,
    count_type_realizations,
    realize_from_dep,
    realize_general,
    realize_minimal,
)
from .spectral import format_rational
from .transition import regularity_index, signature, transition_matrix

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_FAIL, EXIT_BUDGET = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError:
        raise UsageError(f"not an integer vector: {text!r}") from None


def _cycle(args) -> cyc.Cycle:
    if not args.cycle:
        raise UsageError("--cycle is required")
    return cyc.parse_cycle(args.cycle, one_line=args.one_line)


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


def _bits(v) -> str:
    return "(" + ",".join(map(str, v)) + ")"


def cmd_analyze(args) -> int:
    sigma = _cycle(args)
    d = cyc.descent(sigma)
    s = cyc.symmetry_order(sigma)
    sig = signature(sigma)
    a = transition_matrix(sigma)
    reg = regularity_index(sigma)
    ctype = cyc.combinatorial_type(sigma)
    rot = cyc.rotation_number(sigma)
    payload = {
        "cycle": str(sigma),
        "table": list(sigma.table),
        "q": sigma.q,
        "des": d,
        "sym": s,
        "sig": list(sig.bits),
        "marked": list(sig.marked),
        "transition_matrix": a.to_json(),
        "regularity_index": reg,
        "rotation_number": f"{Fraction(*rot)}" if rot else None,
        "type": [str(c) for c in ctype.representatives],
        "type_canonical": str(ctype.canonical),
    }
    text = [
        f"cycle     {sigma}",
        f"table     {' '.join(map(str, sigma.table))}",
        f"q         {sigma.q}",
        f"des       {d}",
        f"sym       {s}",
        f"sig       {_bits(sig.bits)}",
        f"marked    {list(sig.marked)}",
    ]
    if rot:
        text.append(f"rotation  {Fraction(*rot)}")
    text.append(f"regular   {'none' if reg is None else f'A^{reg} > 0'}")
    text.append("A =")
    text.extend("  " + " ".join(map(str, row)) for row in a.entries)
    text.append(f"type ({ctype.size} cycles, canonical {ctype.canonical}):")
    text.extend(f"  {c}" for c in ctype.representatives)
    _emit(args, payload, "\n".join(text))
    return EXIT_OK


def _select_orbit(args, sigma: cyc.Cycle) -> Orbit:
    chosen = [bool(args.minimal), args.fix is not None, args.dep is not None]
    if sum(chosen) != 1:
        raise UsageError("choose exactly one of --minimal, --fix, --dep")
    if args.minimal:
        orbit = realize_minimal(sigma)
        if args.k is not None and args.k != orbit.k:
            raise UsageError(f"--minimal realizes under m_d with d = des = {orbit.k}, not k = {args.k}")
        return orbit
    if args.k is None:
        raise UsageError("-k is required with --fix or --dep")
    if args.fix is not None:
        return realize_general(sigma, args.k, _vector(args.fix), args.shift or 0)
    if args.shift:
        raise UsageError("--shift is implied by --dep")
    return realize_from_dep(sigma, args.k, _vector(args.dep))


def cmd_realize(args) -> int:
    sigma = _cycle(args)
    orbit = _select_orbit(args, sigma)
    f, w = orbit.fix(), orbit.dep()
    payload = {"cycle": str(sigma), **orbit.to_json()}
    text = [
        f"cycle  {sigma}",
        f"k      {orbit.k}",
        "orbit  " + " ".join(format_rational(x) for x in orbit.points),
        f"       = 1/{orbit.denominator} {{{', '.join(map(str, orbit.numerators))}}}",
        f"fix    {_bits(f.n)}",
        f"shift  {f.shift}",
        f"dep    {_bits(w.w)}",
    ]
    _emit(args, payload, "\n".join(text))
    return EXIT_OK


def _need_qk(args):
    if args.q is None or args.k is None:
        raise UsageError("--q and --k are required")


def cmd_enumerate(args) -> int:
    _need_qk(args)
    catalog = enumerate_orbits(args.q, args.k, budget=args.budget, jobs=args.jobs)
    if args.group_by is None:
        if args.format == "json":
            sys.stdout.write(catalog.to_jsonl())
        else:
            for r in catalog.records:
                pts = " ".join(format_rational(Fraction(a, r.denominator)) for a in r.numerators)
                sys.stdout.write(f"{r.cycle}  {{{pts}}}\n")
        return EXIT_OK
    groups = catalog.by_type if args.group_by == "type" else dict(
        sorted(catalog.by_cycle.items(), key=lambda kv: kv[0].table)
    )
    if args.format == "json":
        for key, recs in groups.items():
            line = {args.group_by: str(key), "count": len(recs), "orbits": [r.to_json() for r in recs]}
            sys.stdout.write(json.dumps(line, separators=(",", ":")) + "\n")
    else:
        for key, recs in groups.items():
            sys.stdout.write(f"{key}  {len(recs)}\n")
        sys.stdout.write(f"total  {len(catalog.records)}\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    _need_qk(args)
    restrict = [_cycle(args)] if args.cycle else None
    report = verify_counts(args.q, args.k, cycles=restrict, budget=args.budget, jobs=args.jobs)
    status = "PASS" if report.ok else "FAIL"
    text = [f"q={report.q} k={report.k}: {status} ({report.total_orbits} orbits)"]
    for t in report.types:
        text.append(
            f"  {'PASS' if t.ok else 'FAIL'} type {t.canonical} des={t.descent} sym={t.symmetry} "
            f"oracle={t.tally} formula={t.expected}"
        )
    text.extend(f"  {msg}" for msg in report.failures())
    _emit(args, report.to_json(), "\n".join(text))
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_types(args) -> int:
    if args.q is None:
        raise UsageError("--q is required")
    types = cyc.enumerate_types(args.q)
    rows = []
    for t in types:
        rows.append({
            "canonical": str(t.canonical),
            "size": t.size,
            "des": t.descent,
            "sym": t.symmetry,
            "representatives": [str(c) for c in t.representatives],
        })
        if args.k is not None:
            rows[-1]["realizations"] = count_type_realizations(t.canonical, args.k) if args.k >= t.descent else 0
    if args.format == "json":
        sys.stdout.write(json.dumps({"q": args.q, "types": rows}, indent=2) + "\n")
    else:
        for r in rows:
            extra = f" realizations={r['realizations']}" if "realizations" in r else ""
            sys.stdout.write(f"{r['canonical']}  size={r['size']} des={r['des']} sym={r['sym']}{extra}\n")
        sys.stdout.write(f"{len(rows)} types\n")
    return EXIT_OK


def cmd_diagram(args) -> int:
    sigma = _cycle(args)
    orbit = _select_orbit(args, sigma)
    svg = orbit_svg(orbit)
    if args.out in (None, "-"):
        sys.stdout.write(svg)
    else:
        try:
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(svg)
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc}") from None
    return EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "realize": cmd_realize,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "types": cmd_types,
    "diagram": cmd_diagram,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cycle", "-c", help='cycle notation, e.g. "(1 2 4 5 3)"')
    common.add_argument("--one-line", action="store_true", help="read --cycle as one-line images")
    common.add_argument("--q", type=int)
    common.add_argument("--k", "-k", type=int)
    common.add_argument("--fix", help='fixed point distribution "n1,...,nq"')
    common.add_argument("--shift", type=int, default=None)
    common.add_argument("--dep", help='deployment vector "w1,...,w(k-1)"')
    common.add_argument("--minimal", action="store_true")
    common.add_argument("--group-by", choices=["cycle", "type"])
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--out", help="output path for diagram")
    common.add_argument("--budget", type=int, default=None, help="max k^q to enumerate")
    common.add_argument("--jobs", type=int, default=1)

    parser = _Parser(prog="cyclic", description="Periodic orbits of x -> kx (mod 1) realizing q-cycles.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.budget is None:
        args.budget = default_budget()
    if args.fix is not None and args.dep is not None:
        print("cyclic: error: --fix and --dep are mutually exclusive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except (UsageError, CycleParseError) as exc:
        where = getattr(exc, "position", None)
        suffix = f" (at symbol {where})" if where is not None else ""
        print(f"cyclic: error: {exc}{suffix}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"cyclic: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except CyclicError as exc:
        clause = getattr(exc, "clause", None)
        suffix = f" [clause: {clause}]" if clause else ""
        print(f"cyclic: {type(exc).__name__}: {exc}{suffix}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"cyclic: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
