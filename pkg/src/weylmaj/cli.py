"""Command-line front end.

Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import kernels
from .genfun import (
    B2N_CEILING,
    DEFAULT_CEILING,
    IDENTITIES,
    IDENTITY_NAMES,
    LARGE_CEILING,
    GfQuery,
    default_jobs,
    enumerate_family,
    signed_gf,
    verify,
)
from .groups import GroupFamily, ParityClass, format_window, parse_window
from .involution import (
    barred_stats,
    format_barred,
    from_barred,
    iota,
    is_fixed,
    parse_barred,
    to_barred,
)
from .qpoly import FORMULA_NAMES, QPoly, formula, formula_latex, render_latex, render_text
from .stats import Character, StatisticKind, fmaj


class UsageError(Exception):
    pass


def _fmt_set(s) -> str:
    return "{" + ",".join(str(x) for x in sorted(s)) + "}"


def render_json(meta: dict, p: QPoly) -> str:
    return json.dumps({**meta, "var": "q", "coeffs": list(p.coeffs)}, separators=(",", ":"))


def parse_json(text: str) -> tuple[dict, QPoly]:
    data = json.loads(text)
    coeffs = data.pop("coeffs")
    data.pop("var", None)
    return data, QPoly(coeffs)


def cmd_gen(args) -> int:
    query = GfQuery(
        GroupFamily(args.group),
        args.n,
        StatisticKind(args.stat),
        Character(args.char),
        ParityClass(args.parity),
        StatisticKind(args.parity_stat) if args.parity_stat else None,
    )
    ceiling = LARGE_CEILING if args.allow_large else DEFAULT_CEILING
    try:
        query.validate(ceiling)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    p = signed_gf(query, jobs=args.jobs, backend=args.backend, ceiling=ceiling)
    if args.format == "json":
        meta = {"group": args.group, "n": args.n, "stat": args.stat, "char": args.char}
        if query.parity is not ParityClass.ALL:
            meta["parity"] = args.parity
            meta["parity_stat"] = query.filter_statistic.value
        print(render_json(meta, p))
    elif args.format == "latex":
        print(render_latex(p))
    else:
        print(render_text(p))
    return 0


def _ranks(name: str, lo: int, hi: int, ceiling: int) -> list[int]:
    ident = IDENTITIES[name]
    top = min(hi, B2N_CEILING) if ident.doubled else hi
    return [n for n in range(lo, top + 1) if ident.applies(n) and n <= ceiling]


def cmd_verify(args) -> int:
    names = IDENTITY_NAMES if args.id == "all" else (args.id,)
    if args.id != "all" and args.id not in IDENTITIES:
        raise UsageError(f"unknown identity {args.id!r}; choose from: all, {', '.join(IDENTITY_NAMES)}")
    ceiling = LARGE_CEILING if args.allow_large else DEFAULT_CEILING
    if args.max_n > ceiling:
        raise UsageError(f"--max-n {args.max_n} exceeds the ceiling {ceiling} (see --allow-large)")
    ok = True
    records = []
    for name in names:
        for n in _ranks(name, args.min_n, args.max_n, ceiling):
            r = verify(name, n, jobs=args.jobs, backend=args.backend, allow_large=args.allow_large)
            ok &= r.equal
            if args.format == "json":
                records.append(
                    {
                        "id": name,
                        "n": n,
                        "equal": r.equal,
                        "brute": list(r.brute.coeffs),
                        "closed": list(r.closed.coeffs),
                        "first_mismatch": r.first_mismatch,
                        "elements": r.elements,
                    }
                )
                continue
            status = "PASS" if r.equal else "FAIL"
            print(f"{status} {name} n={n} ({r.elements} elements, {r.seconds:.2f}s)")
            if not r.equal:
                print(f"  brute:  {render_text(r.brute)}")
                print(f"  closed: {render_text(r.closed)}")
                print(f"  first mismatch at q^{r.first_mismatch}")
    if args.format == "json":
        print(json.dumps(records, separators=(",", ":")))
    return 0 if ok else 1


def _describe_fixed(w) -> list[str]:
    if len(w) % 2:
        return ["FIXED"]
    b = to_barred(w)
    st = barred_stats(b)
    return [
        f"FIXED; barred = {format_barred(b)} ; S={_fmt_set(b.bars)}",
        f"maj={st.maj} Des={_fmt_set(st.des)} inv={st.inv} N1={st.n1} "
        f"S+={_fmt_set(st.bars_plus)} S-={_fmt_set(st.bars_minus)} fmaj(barred)={st.fmaj} fmaj={fmaj(w)}",
    ]


def cmd_iota(args) -> int:
    if args.window is not None:
        try:
            w = parse_window(args.window)
        except (ValueError, TypeError) as exc:
            raise UsageError(str(exc)) from None
        if is_fixed(w):
            print("\n".join(_describe_fixed(w)))
        else:
            v = iota(w)
            print(format_window(v))
            swapped = next(abs(x) for x, y in zip(w, v) if x != y)
            lo = swapped if swapped % 2 else swapped - 1
            print(f"NOT FIXED; iota = s_{lo} * w")
        return 0
    if args.n is None:
        raise UsageError("iota needs --window or --n")
    if args.n > DEFAULT_CEILING:
        raise UsageError(f"--n {args.n} exceeds the ceiling {DEFAULT_CEILING}")
    for w in enumerate_family(GroupFamily.B, args.n):
        if is_fixed(w):
            print(format_window(w))
        elif not args.fixed_only:
            print(f"{format_window(w)} -> {format_window(iota(w))}")
    return 0


def cmd_barred(args) -> int:
    try:
        b = parse_barred(args.window)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from None
    st = barred_stats(b)
    w = from_barred(b)
    print(f"window = {format_window(w)}")
    print(
        f"maj={st.maj} Des={_fmt_set(st.des)} inv={st.inv} N1={st.n1} S={_fmt_set(st.bars)} "
        f"S+={_fmt_set(st.bars_plus)} S-={_fmt_set(st.bars_minus)} fmaj(barred)={st.fmaj} fmaj={fmaj(w)}"
    )
    return 0


def cmd_formula(args) -> int:
    try:
        p = formula(args.id, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "latex":
        print(f"{formula_latex(args.id, args.n)} = {render_latex(p)}")
    elif args.format == "json":
        print(render_json({"formula": args.id, "n": args.n}, p))
    else:
        print(render_text(p))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weylmaj", description=__doc__)
    parser.add_argument(
        "--backend",
        choices=["compiled", "python"],
        default=None,
        help=f"enumeration kernel (default: {kernels.BACKEND})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_jobs(p):
        p.add_argument("--jobs", type=int, default=default_jobs(), help="enumeration processes")
        p.add_argument("--allow-large", action="store_true", help=f"raise the rank ceiling to {LARGE_CEILING}")

    p = sub.add_parser("gen", help="signed generating function by enumeration")
    p.add_argument("--group", required=True, choices=[f.value for f in GroupFamily])
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--stat", required=True, choices=[s.value for s in StatisticKind])
    p.add_argument("--char", default="trivial", choices=[c.value for c in Character])
    p.add_argument("--parity", default="all", choices=[c.value for c in ParityClass])
    p.add_argument("--parity-stat", choices=[s.value for s in StatisticKind], help="defaults to --stat")
    p.add_argument("--format", default="text", choices=["text", "json", "latex"])
    add_jobs(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="compare brute force with the closed forms")
    p.add_argument("--id", required=True, help="identity name or 'all'")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--format", default="text", choices=["text", "json"])
    add_jobs(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("iota", help="apply the pairing involution")
    p.add_argument("--window")
    p.add_argument("--n", type=int)
    p.add_argument("--fixed-only", action="store_true")
    p.set_defaults(func=cmd_iota)

    p = sub.add_parser("barred", help="expand a barred window like '-2,1,-3~'")
    p.add_argument("--window", required=True)
    p.set_defaults(func=cmd_barred)

    p = sub.add_parser("formula", help="expand a closed-form product")
    p.add_argument("--id", required=True, choices=FORMULA_NAMES)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--format", default="text", choices=["text", "json", "latex"])
    p.set_defaults(func=cmd_formula)
    return parser


def _join_window_values(argv: list[str]) -> list[str]:
    # windows like "-3,-4,1" would otherwise be read as options
    out, i = [], 0
    while i < len(argv):
        if argv[i] == "--window" and i + 1 < len(argv):
            out.append(f"--window={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_join_window_values(sys.argv[1:] if argv is None else list(argv)))
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"weylmaj: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
