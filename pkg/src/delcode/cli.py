"""Command-line surface: construct, enumerate, decode, simulate, bounds, verify.

Every subcommand prints JSON to stdout.  Exit code 0 means every asserted
guarantee held; decode failures, guard violations and failed verifications
exit nonzero.
"""

import argparse
import json
import sys
from itertools import combinations, islice

from .analysis import simulate, singleton_report
from .errors import DecodeError, DelcodeError
from .model import SymbolSet, Word
from .modular import next_prime_above
from .multfree import (
    MultFreeCodeSpec,
    SetCode,
    build_code,
    code_size,
    decode_steps,
    load_spec,
    save_spec,
    set_codewords,
)
from .permcode import greedy_sd_code, greedy_ud_code, verify_sd_property, verify_ud_property
from .vtcode import VTParams, best_class, is_codeword, subset_to_bitword


def _emit(payload) -> None:
    print(json.dumps(payload, sort_keys=True))


def _cmd_construct(args) -> int:
    p = next_prime_above(args.q)
    a, class_size = best_class(args.q, args.n, args.t, p)
    params = VTParams(args.q, args.n, args.t, p, a)
    if args.mode == "stable":
        book = greedy_sd_code(args.n, args.t)
    else:
        book = greedy_ud_code(args.n, args.t)
    spec = MultFreeCodeSpec(args.q, args.n, args.t, args.mode, SetCode.from_vt(params), book)
    save_spec(spec, args.out)
    _emit(
        {
            "out": args.out,
            "p": p.p,
            "a": list(a.residues),
            "set_code_size": class_size,
            "perm_code_size": len(book.codewords),
            "code_size": code_size(spec),
        }
    )
    return 0


def _cmd_enumerate(args) -> int:
    spec = load_spec(args.spec)
    words = build_code(spec)
    if args.limit is not None:
        words = islice(words, args.limit)
    for word in words:
        print(json.dumps(list(word.symbols)))
    return 0


def _cmd_decode(args) -> int:
    spec = load_spec(args.spec)
    symbols = json.loads(args.word)
    y = Word(tuple(symbols), spec.q, multiplicity_free=True)
    steps = decode_steps(spec, y)
    result = {"codeword": list(steps.codeword.symbols)}
    if args.trace:
        result["recovered_set"] = list(steps.recovered_set.symbols())
        if steps.tau is not None:
            result["tau"] = list(steps.tau.symbols)
        if steps.reduced_perm is not None:
            result["reduced_perm"] = list(steps.reduced_perm.images)
        result["sigma"] = list(steps.sigma.images)
    _emit(result)
    return 0


def _cmd_simulate(args) -> int:
    spec = load_spec(args.spec)
    report = simulate(spec, args.trials, args.tmax, args.seed, shards=args.shards)
    _emit(report.to_json_dict())
    # within the deletion budget the construction guarantees recovery
    if args.tmax <= spec.t and report.failures > 0:
        return 1
    return 0


def _cmd_bounds(args) -> int:
    report = singleton_report(
        args.q, args.n, args.t, code_size=args.size, epsilon=args.epsilon, delta=args.delta
    )
    _emit(report.to_json_dict())
    return 0


def _verify_set_code(spec: MultFreeCodeSpec) -> dict:
    checks = {}
    sets = set_codewords(spec)
    if spec.set_code.vt is not None:
        params = spec.set_code.vt
        checks["class_membership"] = all(
            is_codeword(subset_to_bitword(s), params) for s in sets
        )
    else:
        n, t = spec.n, spec.t
        checks["pairwise_intersection_bound"] = all(
            (a.members & b.members).bit_count() <= n - t - 1
            for i, a in enumerate(sets)
            for b in sets[i + 1 :]
        )
    ok = True
    for s in sets:
        for survivors in _subset_deletions(s, spec.t):
            try:
                ok = ok and spec.set_code.decode(survivors) == s
            except DecodeError:
                ok = False
    checks["set_deletion_soundness"] = ok
    return checks


def _subset_deletions(subset, t):
    elements = subset.symbols()
    for e in range(min(t, len(elements)) + 1):
        for removed in combinations(elements, e):
            yield SymbolSet.from_symbols(set(elements) - set(removed), subset.alphabet_size)


def _cmd_verify(args) -> int:
    spec = load_spec(args.spec)
    checks = {}
    if spec.mode == "stable":
        checks["perm_balls_disjoint"] = verify_sd_property(spec.perm_code)
    else:
        checks["perm_balls_disjoint"] = verify_ud_property(spec.perm_code)
    checks.update(_verify_set_code(spec))
    ok = all(checks.values())
    _emit({"checks": checks, "ok": ok})
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="delcode",
        description="Multiplicity-free deletion-correcting codes: build, decode, analyze.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a code spec (auto prime, best class, greedy perm code)")
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--t", type=int, required=True)
    c.add_argument("--mode", choices=("stable", "unstable"), default="stable")
    c.add_argument("--out", required=True)
    c.set_defaults(func=_cmd_construct)

    e = sub.add_parser("enumerate", help="stream codewords, one JSON array per line")
    e.add_argument("--spec", required=True)
    e.add_argument("--limit", type=int, default=None)
    e.set_defaults(func=_cmd_enumerate)

    d = sub.add_parser("decode", help="decode a received word")
    d.add_argument("--spec", required=True)
    d.add_argument("--word", required=True, help='received word as a JSON array, e.g. "[6,4,3]"')
    d.add_argument("--trace", action="store_true", help="include decoder intermediates")
    d.set_defaults(func=_cmd_decode)

    s = sub.add_parser("simulate", help="Monte-Carlo deletion channel")
    s.add_argument("--spec", required=True)
    s.add_argument("--trials", type=int, required=True)
    s.add_argument("--tmax", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--shards", type=int, default=1)
    s.set_defaults(func=_cmd_simulate)

    b = sub.add_parser("bounds", help="print a bound report")
    b.add_argument("--q", type=int, required=True)
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--t", type=int, required=True)
    b.add_argument("--size", type=int, default=None)
    b.add_argument("--epsilon", type=float, default=None)
    b.add_argument("--delta", type=float, default=None)
    b.set_defaults(func=_cmd_bounds)

    v = sub.add_parser("verify", help="exhaustive desk-scale soundness checks")
    v.add_argument("--spec", required=True)
    v.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DecodeError as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)})
        return 1
    except (DelcodeError, ValueError, OSError, json.JSONDecodeError) as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)})
        return 2


if __name__ == "__main__":
    sys.exit(main())
