"""Rebuild a simply-nested braid from nothing but its Burau matrix.

Run: python3 demos/recover_from_matrix.py [n] [factors] [seed]
"""

import random
import sys

from garside_burau.burau import rho
from garside_burau.garside_dual import random_simply_nested_nf
from garside_burau.recovery import dual_nf_from_matrix


def main(n: int = 5, r: int = 6, seed: int = 0) -> None:
    nf = random_simply_nested_nf(n, r, random.Random(seed))
    print(f"hidden braid: p = {nf.p}, factors {[d.atom_strings() for d in nf.factors]}")
    mat = rho(nf.to_word())
    print(f"matrix degree range [{int(mat.min_deg)}, {int(mat.max_deg)}], sup of the braid = {nf.sup}")

    got, trace = dual_nf_from_matrix(mat)
    for step in trace.steps:
        print(f"  max degree {step.max_deg:>3}: column {step.i0}, row {step.row}, "
              f"candidates {list(step.candidates)} -> a{step.letter[0]},{step.letter[1]} "
              f"divides {step.factor.atom_strings()}")
    print(f"  left over: delta^{trace.terminal_power}")
    print(f"recovered the hidden braid: {got == nf}")


if __name__ == "__main__":
    main(*map(int, sys.argv[1:4]))
