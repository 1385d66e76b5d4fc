#!/usr/bin/env python3
"""Tabulate per-event maintenance cost for the two leaf-pointer schemes.

The credit baseline pays an update chain proportional to the window on the
adversarial constructions, while the primary-pointer scheme stays at a
handful of field writes regardless of n.
"""

import argparse

from slidingsuffix import run_worstcase


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+",
                        default=[10, 100, 1000, 10000])
    args = parser.parse_args()

    header = f"{'n':>8} {'variant':>8} {'credit calls':>13} {'plp writes':>11}"
    print(header)
    print("-" * len(header))
    for n in args.sizes:
        for variant in ("insert", "delete"):
            credit = run_worstcase(n, "credit", variant)["critical_event_value"]
            plp = run_worstcase(n, "plp", variant)["critical_event_value"]
            print(f"{n:>8} {variant:>8} {credit:>13} {plp:>11}")


if __name__ == "__main__":
    main()
