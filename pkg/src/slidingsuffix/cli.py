"""Command-line surface: stream, interact, verify, worstcase."""

from __future__ import annotations

import argparse
import json
import sys
import time

from .tree import SlidingSuffixTree, MODES
from .verify import VerifyConfig, run_verify, run_worstcase
from . import checks


def cmd_stream(args) -> int:
    try:
        with open(args.file, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    tree = SlidingSuffixTree(args.window, mode=args.mode)
    appends = deletes = 0
    start = time.perf_counter()
    for i, sym in enumerate(data):
        if tree.window.full:
            tree.delete_front()
            deletes += 1
        tree.append(sym)
        appends += 1
        if args.check_every and (i + 1) % args.check_every == 0:
            bad = checks.all_violations(tree)
            if bad:
                print(json.dumps({"ok": False, "at_byte": i + 1,
                                  "violations": bad}))
                return 1
    elapsed = time.perf_counter() - start
    report = {
        "file": args.file,
        "bytes": len(data),
        "window": args.window,
        "mode": args.mode,
        "appends": appends,
        "deletes": deletes,
        "final_window_len": len(tree),
        "elapsed_s": round(elapsed, 6),
    }
    report.update(tree.stats())
    print(json.dumps(report))
    return 0


def cmd_interact(args) -> int:
    tree = SlidingSuffixTree(args.window, mode=args.mode)
    for line in sys.stdin:
        line = line.strip()
        if not line:
            continue
        try:
            req = json.loads(line)
            op = req["op"]
            if op == "append":
                tree.append(req["sym"])
                resp = {"ok": True, "tail": tree.tail, "head": tree.head}
            elif op == "slide":
                tree.slide(req["sym"])
                resp = {"ok": True, "tail": tree.tail, "head": tree.head}
            elif op == "query":
                occ = tree.find_all(req["pattern"]) if req["pattern"] else []
                resp = {"occurrences": occ,
                        "absolute": [k + tree.tail - 1 for k in occ]}
            elif op == "stats":
                resp = tree.stats()
            else:
                resp = {"error": f"unknown op {op!r}"}
        except Exception as exc:  # malformed input must not kill the loop
            resp = {"error": str(exc)}
        print(json.dumps(resp), flush=True)
    return 0


def cmd_verify(args) -> int:
    cfg = VerifyConfig(seed=args.seed, iters=args.iters, sigma=args.sigma,
                       window=args.window, patterns_per_state=args.patterns)
    result = run_verify(cfg)
    print(json.dumps(result.as_dict()))
    return 0 if result.ok else 1


def cmd_worstcase(args) -> int:
    report = run_worstcase(args.n, args.mode, args.variant)
    print(json.dumps(report))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slidingsuffix",
        description="Sliding-window suffix tree with constant-time leaf pointers")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stream", help="index a file through the sliding window")
    p.add_argument("file")
    p.add_argument("--window", type=int, required=True)
    p.add_argument("--mode", choices=MODES, default="plp")
    p.add_argument("--check-every", type=int, default=0, metavar="K",
                   help="run the full invariant sweep every K bytes (0 = off)")
    p.set_defaults(func=cmd_stream)

    p = sub.add_parser("interact", help="JSONL protocol on stdin/stdout")
    p.add_argument("--window", type=int, required=True)
    p.add_argument("--mode", choices=MODES, default="plp")
    p.set_defaults(func=cmd_interact)

    p = sub.add_parser("verify", help="randomized differential verification")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--iters", type=int, default=2000)
    p.add_argument("--sigma", type=int, default=2)
    p.add_argument("--window", type=int, default=8)
    p.add_argument("--patterns", type=int, default=4,
                   help="matching probes per state")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("worstcase", help="reproduce the per-event cost separation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=MODES, default="credit")
    p.add_argument("--variant", choices=("insert", "delete"), default="insert")
    p.set_defaults(func=cmd_worstcase)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
