"""Print Betti numbers and Steenrod square ranks for pairs that cohomology groups cannot tell apart."""

import sys

from cupsq.f2linear import betti_numbers, rank
from cupsq.spaces import get_space
from cupsq.steenrod import sq_matrix

PAIRS = [
    ("rp2", "s1_v_s2", 1, 1),
    ("cp2", "s2_v_s4", 2, 2),
    ("susp_cp2", "susp_s2_v_s4", 3, 2),
]


def main():
    print(f"{'space':<14}{'simplices':>10}  {'betti':<20}{'square':<14}rank")
    for a, b, n, k in PAIRS:
        for name in (a, b):
            X = get_space(name).complex
            betti = ",".join(map(str, betti_numbers(X)))
            print(f"{name:<14}{len(X):>10}  {betti:<20}{f'Sq^{k} on H^{n}':<14}{rank(sq_matrix(X, n, k))}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
