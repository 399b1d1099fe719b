"""Exhaustive first-order axiom sweep at desk scale.

Enumerates every structure with domain size up to 3, every opens-family on
that domain and every pair of unary relations, then evaluates the six
quantifier axioms on the atomic instance pair R(x), S(x). The monotonicity
axiom fails on a handful of structures because an opens-family need not be
closed upward; this script lists them.
"""

import argparse
import itertools
import json

from plausible.folp import PlausibleStructure, check_axioms, parse_fo
from plausible.pseudotopology import enumerate_spaces


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-domain", type=int, default=3)
    args = parser.parse_args()

    phi, psi = parse_fo("R(x)"), parse_fo("S(x)")
    totals = {k: 0 for k in ("a1", "a2", "a3", "a4", "a5", "a6")}
    count = 0
    witnesses = []
    for d in range(1, args.max_domain + 1):
        for omega in enumerate_spaces(d):
            for rm, sm in itertools.product(range(1 << d), repeat=2):
                M = PlausibleStructure(
                    d,
                    {"R": frozenset((i,) for i in range(d) if rm >> i & 1),
                     "S": frozenset((i,) for i in range(d) if sm >> i & 1)},
                    {}, {}, omega)
                count += 1
                report = check_axioms(M, phi, psi, "x")
                for key in totals:
                    if not getattr(report, key):
                        totals[key] += 1
                        if key == "a5":
                            witnesses.append(M.to_json())

    print(f"structures checked: {count}")
    for key, bad in totals.items():
        print(f"{key}: {count - bad}/{count} hold")
    if witnesses:
        print("monotonicity failures:")
        for doc in witnesses:
            print(f"  {json.dumps(doc, sort_keys=True)}")


if __name__ == "__main__":
    main()
