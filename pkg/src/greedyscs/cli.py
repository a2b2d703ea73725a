"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import bench, kernels
from .disturb import (DisturbParams, VARIANTS, choose_m_for_gap, disturb, overlap_report,
                      step_roles)
from .freq import SharpMetric
from .gen import random_dataset, tie_rich_dataset, worst_case_family
from .greedy import TieBreakPolicy, builtin_policies, run_greedy, run_greedy_sharp
from .oracle import DEFAULT_CAP, approx_ratio, exact_scs, exact_scs_sharp
from .strcore import format_dataset, read_dataset
from .suite import run_suite


class UsageError(Exception):
    pass


def _symbol(text):
    if len(text) != 1:
        raise argparse.ArgumentTypeError(f"expected a single symbol, got {text!r}")
    return text


def _policy(text):
    try:
        return TieBreakPolicy.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _fraction(text):
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected p/q, got {text!r}") from None
    return value


def _seed_range(text):
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            return range(int(lo), int(lo) + 1)
        return range(int(lo), int(hi) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}") from None


def _write(text, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)


def cmd_gen(args):
    if args.family == "worst-case":
        d = worst_case_family(args.n)
    elif args.family == "random":
        d = random_dataset(args.seed, args.n, args.len_min, args.len_max, args.alphabet_size)
    else:
        d = tie_rich_dataset(args.seed, args.n, args.overlap_len)
    _write(format_dataset(d), args.out)
    return 0


def cmd_greedy(args):
    d = read_dataset(args.dataset)
    res = run_greedy(d, args.policy)
    _write(res.to_json() + "\n", args.out)
    return 0


def cmd_greedy_sharp(args):
    d = read_dataset(args.dataset)
    res = run_greedy_sharp(d, args.important, args.policy)
    doc = res.to_dict()
    doc["sharp_length"] = SharpMetric(args.important).length(res.superstring)
    _write(json.dumps(doc, ensure_ascii=False, indent=2) + "\n", args.out)
    return 0


def cmd_disturb(args):
    d = read_dataset(args.dataset)
    res = run_greedy(d, args.policy)
    params = DisturbParams(1, args.sentinel, args.variant)
    if args.m is not None:
        m = args.m
    elif args.ratio is not None:
        m = choose_m_for_gap(d, res.trace, args.ratio, sentinel=args.sentinel,
                             m_cap=args.m_cap)
    else:
        m = params.min_m(len(d))
    if m > args.m_cap:
        raise UsageError(f"m = {m} exceeds --m-cap {args.m_cap}")
    if d.total_length() > args.length_cap:
        raise UsageError(f"total length {d.total_length()} exceeds --length-cap {args.length_cap}")
    roles = step_roles(res.trace, len(d))
    d2 = disturb(d, roles, DisturbParams(m, args.sentinel, args.variant))
    _write(format_dataset(d2), args.out)
    report = overlap_report(d, d2, roles, m, args.variant)
    report["policy"] = str(args.policy)
    text = json.dumps(report, indent=2) + "\n"
    if args.report:
        _write(text, args.report)
    elif args.out not in (None, "-"):
        _write(text, args.out + ".report.json")
    else:
        sys.stderr.write(text)
    return 0


def cmd_oracle(args):
    d = read_dataset(args.dataset)
    if args.important is not None:
        res = exact_scs_sharp(d, args.important, args.cap)
        print(f"sharp length {res.length}")
        print(f"length {len(res.superstring)}")
    else:
        res = exact_scs(d, args.cap)
        print(f"length {res.length}")
    print("permutation " + " ".join(map(str, res.permutation)))
    print(f"superstring {res.superstring}")
    return 0


def cmd_ratio(args):
    d = read_dataset(args.dataset)
    if args.important is not None:
        opt = exact_scs_sharp(d, args.important, args.cap).length
        for p in builtin_policies(args.seed):
            g = SharpMetric(args.important).length(run_greedy_sharp(d, args.important, p).superstring)
            print(f"{p}: greedy {g}, opt {opt}, ratio {_ratio_text(g, opt)}")
        return 0
    opt = exact_scs(d, args.cap).length
    for p in builtin_policies(args.seed):
        g = run_greedy(d, p).length
        print(f"{p}: greedy {g}, opt {opt}, ratio {_ratio_text(g, opt)}")
    return 0


def _ratio_text(g, opt):
    try:
        return str(approx_ratio(g, opt))
    except ValueError:
        return "undefined"


def cmd_verify(args):
    outcomes = run_suite(args.seeds, args.n_max)
    width = max(len(o.name) for o in outcomes)
    failed = False
    for o in outcomes:
        status = "PASS" if o.passed else "FAIL"
        print(f"{status}  {o.name:<{width}}  {o.datasets} datasets, {len(o.failures)} violations")
        failed |= not o.passed
    for o in outcomes:
        for seed, strings, msg in o.failures[: args.max_dumps]:
            print(f"counterexample [{o.name}] seed={seed} strings={list(strings)!r}: {msg}")
    return 1 if failed else 0


def cmd_bench(args):
    print(f"backends: {', '.join(kernels.available_backends())} (active: {kernels.BACKEND})")
    rows = bench.run_bench(args.repeat, dp_n=args.dp_n, family_n=args.family_n, m=args.m)
    print(bench.format_rows(rows))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="greedyscs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def dataset_arg(p):
        p.add_argument("--dataset", required=True, help="dataset file, one string per line")

    def policy_arg(p):
        p.add_argument("--policy", type=_policy, default=TieBreakPolicy("first"),
                       help="first | last | lex | random:<seed>")

    p = sub.add_parser("gen", help="write a dataset")
    p.add_argument("--family", choices=["worst-case", "random", "tie-rich"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--len-min", type=int, default=3)
    p.add_argument("--len-max", type=int, default=10)
    p.add_argument("--alphabet-size", type=int, default=2)
    p.add_argument("--overlap-len", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("greedy", help="run the greedy algorithm")
    dataset_arg(p)
    policy_arg(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_greedy)

    p = sub.add_parser("greedy-sharp", help="run the important-symbol greedy")
    dataset_arg(p)
    policy_arg(p)
    p.add_argument("--important", type=_symbol, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_greedy_sharp)

    p = sub.add_parser("disturb", help="make a greedy run tie-free")
    dataset_arg(p)
    policy_arg(p)
    p.add_argument("--m", type=int, help="sentinel block length (default: smallest admissible)")
    p.add_argument("--lambda", dest="ratio", type=_fraction,
                   help="pick the smallest m keeping greedy above lambda * OPT")
    p.add_argument("--sentinel", type=_symbol, default="$")
    p.add_argument("--variant", choices=VARIANTS, default="base")
    p.add_argument("--m-cap", type=int, default=10**5)
    p.add_argument("--length-cap", type=int, default=10**4)
    p.add_argument("--out")
    p.add_argument("--report", help="overlap report path (default: <out>.report.json)")
    p.set_defaults(func=cmd_disturb)

    p = sub.add_parser("oracle", help="exact shortest superstring")
    dataset_arg(p)
    p.add_argument("--important", type=_symbol)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("ratio", help="greedy length over optimum for every policy")
    dataset_arg(p)
    p.add_argument("--important", type=_symbol)
    p.add_argument("--seed", type=int, default=1, help="seed of the random policy")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_ratio)

    p = sub.add_parser("verify", help="run the seeded property suite")
    p.add_argument("--seeds", type=_seed_range, default=range(1, 101))
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--max-dumps", type=int, default=5)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time compiled vs pure-Python kernels")
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--dp-n", type=int, default=12)
    p.add_argument("--family-n", type=int, default=20)
    p.add_argument("--m", type=int, default=500)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
