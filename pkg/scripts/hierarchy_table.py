"""Print the weight hierarchy of every Gabidulin code over F_{q^m}, with its dual's."""

from __future__ import annotations

import argparse

from grw.code_zoo import gabidulin_code
from grw.gf_arith import tower_for
from grw.rank_code import dual_code
from grw.weights import weight_hierarchy


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, default=2)
    ap.add_argument("--m", type=int, default=4)
    args = ap.parse_args()
    t = tower_for(args.q, args.m)
    print(f"{'n':>2} {'k':>2}  {'hierarchy':<16} dual")
    for n in range(1, args.m + 1):
        for k in range(1, n + 1):
            C = gabidulin_code(t, n, k)
            D = dual_code(C)
            dual = list(weight_hierarchy(D).values) if D.k else []
            print(f"{n:>2} {k:>2}  {str(list(weight_hierarchy(C).values)):<16} {dual}")


if __name__ == "__main__":
    main()
