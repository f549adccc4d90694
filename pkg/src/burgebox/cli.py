"""Command-line front end.

Exit codes: 0 on success, 1 when a verification command finds a failure,
2 on usage errors (bad arguments, malformed partitions or words).

Partitions are accepted as comma lists (10,7,3), bracket multiset form
([4^2,3,2^2]), 'e' or '[]' for the empty partition, and frequency form
f:(0,2,1,2).  Output uses the bracket multiset form.  The environment
variable BURGEBOX_FIELD overrides the default field modulus of the
matrix commands.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import boxes, burge, oracle, words
from .errors import BudgetError
from .oblak import (
    DEFAULT_CHAIN_LIMIT,
    check_commuting_square,
    oblak,
    oblak_all_chains,
)
from .partitions import (
    format_frequency,
    format_partition,
    parse_partition,
    to_frequency,
    to_partition,
)
from .sweep import CHECKS, SweepConfig, run_sweep


def _env_field(fallback: int) -> int:
    raw = os.environ.get("BURGEBOX_FIELD")
    if raw is None:
        return fallback
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"error: BURGEBOX_FIELD={raw!r} is not an integer")


def _coords(text: str) -> tuple:
    s = text.strip()
    if s in ("e", "()", ""):
        return ()
    try:
        return tuple(int(x) for x in s.split(","))
    except ValueError:
        raise ValueError(f"bad coordinate list {text!r}")


def _emit(args, data: dict, human: str) -> None:
    print(json.dumps(data) if args.json else human)


def cmd_encode(args) -> int:
    f = to_frequency(parse_partition(args.partition))
    word = burge.encode(f)
    _emit(args, {"partition": list(to_partition(f)), "word": word}, word)
    return 0


def cmd_decode(args) -> int:
    f = burge.decode(args.word)
    p = to_partition(f)
    _emit(
        args,
        {"word": burge.check_word(args.word), "partition": list(p)},
        format_partition(p),
    )
    return 0


def cmd_dmap(args) -> int:
    q = burge.descent_map(parse_partition(args.partition))
    _emit(args, {"partition": list(q)}, format_partition(q))
    return 0


def cmd_chain(args) -> int:
    ch = burge.burge_chain(to_frequency(parse_partition(args.partition)))
    if args.json:
        print(json.dumps({"states": [list(s) for s in ch.states], "word": ch.word}))
        return 0
    for i, (state, letter) in enumerate(zip(ch.states, ch.word)):
        print(f"{i:3d}  {format_frequency(state):24s} {letter}")
    print(f"word: {ch.word}")
    return 0


def cmd_oblak(args) -> int:
    out = oblak(to_frequency(parse_partition(args.partition)))
    _emit(args, {"partition": list(out)}, format_partition(out))
    return 0


def cmd_oblak_chains(args) -> int:
    f = to_frequency(parse_partition(args.partition))
    chains = oblak_all_chains(f, limit=args.limit)
    if args.json:
        print(
            json.dumps(
                [
                    {
                        "indices": list(c.indices),
                        "states": [list(s) for s in c.states],
                        "valuation": list(c.valuation),
                    }
                    for c in chains
                ]
            )
        )
        return 0
    for c in chains:
        idx = ",".join(str(i) for i in c.indices)
        print(f"indices ({idx})  valuation {format_partition(c.valuation)}")
    print(f"{len(chains)} chain(s)")
    return 0


def cmd_check_square(args) -> int:
    f = to_frequency(parse_partition(args.partition))
    ok = check_commuting_square(f, args.index)
    _emit(args, {"index": args.index, "commutes": ok}, "true" if ok else "false")
    return 0


def cmd_fiber(args) -> int:
    q = parse_partition(args.partition)
    rows = [
        {
            "coords": list(coords),
            "code": boxes.fiber_code(q, coords),
            "partition": list(part),
            "parts": len(part),
        }
        for coords, part in boxes.fiber(q)
    ]
    if args.json:
        print(json.dumps(rows))
        return 0
    for row in rows:
        coords = ",".join(str(c) for c in row["coords"])
        print(
            f"({coords})  {row['code']}  "
            f"{format_partition(row['partition'])}  {row['parts']}"
        )
    return 0


def cmd_coords(args) -> int:
    q, coords = boxes.coordinates_of(parse_partition(args.partition))
    _emit(
        args,
        {"q": list(q), "coords": list(coords)},
        f"Q={format_partition(q)} coords=({','.join(str(c) for c in coords)})",
    )
    return 0


def cmd_maxparts(args) -> int:
    p = boxes.max_parts_partition(parse_partition(args.partition))
    _emit(args, {"partition": list(p)}, format_partition(p))
    return 0


def cmd_symmetry(args) -> int:
    q = parse_partition(args.partition)
    positions = _coords(args.positions) if args.positions else tuple(
        range(1, len(q) + 1)
    )
    out = boxes.symmetry_map(q, _coords(args.coords), positions)
    _emit(
        args,
        {"coords": list(out)},
        "(" + ",".join(str(c) for c in out) + ")",
    )
    return 0


def cmd_foata(args) -> int:
    q = parse_partition(args.partition)
    coords = _coords(args.coords)
    w = words.foata_fiber(q, coords)
    image = words.path_to_partition(w)
    _emit(
        args,
        {"word": w, "partition": list(image)},
        f"{w}  ->  {format_partition(image)}",
    )
    return 0


def cmd_hooks(args) -> int:
    h = words.diagonal_hooks(parse_partition(args.partition))
    _emit(args, {"hooks": list(h)}, format_partition(h))
    return 0


def cmd_durfee(args) -> int:
    d = words.durfee(parse_partition(args.partition))
    _emit(args, {"durfee": d}, str(d))
    return 0


def cmd_verify(args) -> int:
    report = oracle.verify_restriction(
        parse_partition(args.partition),
        p=args.field,
        trials=args.trials,
        seed=args.seed,
        witness_only=args.witness_only,
    )
    if args.json:
        print(json.dumps(report.to_dict()))
    else:
        status = "ok" if report.ok else "FAIL"
        print(
            f"{status}: expected {format_partition(report.expected)}, "
            f"witness gave {format_partition(report.witness_observed)}, "
            f"{len(report.misses)}/{report.trials} random misses"
        )
    return 0 if report.ok else 1


def cmd_scan_max(args) -> int:
    report = oracle.scan_max_type(
        parse_partition(args.partition),
        p=args.field,
        budget=args.budget,
        mode=args.mode,
    )
    if args.json:
        print(json.dumps(report.to_dict()))
    else:
        status = "ok" if report.ok else "FAIL"
        got = (
            format_partition(report.max_type)
            if report.max_type is not None
            else "(no maximum)"
        )
        print(
            f"{status}: scanned {report.scanned} ({report.mode}), "
            f"{len(report.types)} types, max {got}, "
            f"expected {format_partition(report.expected)}"
        )
    return 0 if report.ok else 1


def cmd_sweep(args) -> int:
    checks = tuple(args.checks.split(",")) if args.checks else ()
    cfg = SweepConfig(
        max_n=args.max_n,
        checks=checks,
        field=args.field,
        trials=args.trials,
        threads=args.threads,
        seed=args.seed,
    )
    results = run_sweep(cfg)
    if args.json:
        print(json.dumps([r.to_dict() for r in results]))
    else:
        for r in results:
            line = (
                f"{'ok  ' if r.ok else 'FAIL'} {r.name:24s} "
                f"{r.instances:6d} instances, {r.failures} failures "
                f"({r.elapsed:.2f}s)"
            )
            print(line)
            if r.first_counterexample:
                print(f"     repro: {r.first_counterexample}")
    return 0 if all(r.ok for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="burgebox",
        description="Partition codes, descent-map fibers, the Oblak process, "
        "and a finite-field nilpotent-commutator oracle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, partition_arg=True):
        sp = sub.add_parser(name, help=help_text)
        if partition_arg:
            sp.add_argument("partition", help="partition text, e.g. 10,7,3 or [4^2,3]")
        sp.add_argument("--json", action="store_true", help="emit JSON")
        sp.set_defaults(fn=fn)
        return sp

    add("encode", cmd_encode, "code word of a partition")
    sp = sub.add_parser("decode", help="partition of a code word")
    sp.add_argument("word", help="word over {a,b} ending in a single a")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=cmd_decode)
    add("dmap", cmd_dmap, "descent map: dominant commuting nilpotent Jordan type")
    add("chain", cmd_chain, "iterated demotion chain and its letters")
    add("oblak", cmd_oblak, "Oblak process output (independent of dmap)")
    sp = add("oblak-chains", cmd_oblak_chains, "all chains over inequivalent maximal indices")
    sp.add_argument("--limit", type=int, default=DEFAULT_CHAIN_LIMIT)
    sp = add("check-square", cmd_check_square, "does annihilation commute with demotion at an index")
    sp.add_argument("--index", type=int, required=True)
    add("fiber", cmd_fiber, "full descent-map fiber over a super-distinct partition")
    add("coords", cmd_coords, "box coordinates of a partition within its fiber")
    add("maxparts", cmd_maxparts, "fiber element with the most parts")
    sp = add("symmetry", cmd_symmetry, "reflect box coordinates at chosen positions")
    sp.add_argument("--coords", required=True, help="e.g. 1,1,2")
    sp.add_argument("--positions", help="1-based positions, default all")
    sp = add("foata", cmd_foata, "Foata image of a fiber code and its path partition")
    sp.add_argument("--coords", required=True)
    add("hooks", cmd_hooks, "diagonal hook lengths of a partition")
    add("durfee", cmd_durfee, "Durfee square side of a partition")

    sp = sub.add_parser("verify", help="matrix oracle: restriction type of witness and random draws")
    sp.add_argument("--partition", required=True)
    sp.add_argument("--field", type=int, default=_env_field(oracle.GENERIC_PRIME))
    sp.add_argument("--trials", type=int, default=5)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--witness-only", action="store_true")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("scan-max", help="exhaustive dominance-maximum scan over a small field")
    sp.add_argument("--partition", required=True)
    sp.add_argument("--field", type=int, default=_env_field(2))
    sp.add_argument("--budget", type=int, default=oracle.DEFAULT_SCAN_BUDGET)
    sp.add_argument("--mode", choices=("auto", "full", "reduced"), default="auto")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=cmd_scan_max)

    sp = sub.add_parser("sweep", help="run named exhaustive property suites")
    sp.add_argument("--max-n", type=int, required=True)
    sp.add_argument("--checks", help="comma list from: " + ", ".join(CHECKS))
    sp.add_argument("--field", type=int, default=_env_field(10007))
    sp.add_argument("--trials", type=int, default=5)
    sp.add_argument("--threads", type=int, default=1)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, BudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
