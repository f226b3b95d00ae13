"""Row degrees of 4-braid Burau matrices against the first normal-form factor.

Run: python3 demos/row_degrees_b4.py
"""

import random

from garside_burau.burau import rho
from garside_burau.criteria import classical_criterion_b4, row_degree_profile
from garside_burau.fixtures import EXAMPLE_WORD
from garside_burau.garside_classical import normal_form_c, random_normal_form_c, simple_from_letters
from garside_burau.words import parse

w = parse(EXAMPLE_WORD, 4)
nf = normal_form_c(w)
print("example:", EXAMPLE_WORD)
print("  normal form:", " | ".join(str(s) for s in nf.factors))
print("  max degree of each entry:")
for row in rho(w).degree_matrix():
    print("   ", *(f"{d:>3}" for d in row))
print("  classical check:", classical_criterion_b4(w).conclusion, "(first factor is s2 s1 s3)")

# random normal forms avoiding that factor: the top row degree tracks the starting set
rng = random.Random(1)
bad = simple_from_letters(4, [2, 1, 3])
print("\nstarting set | row maxima | case holds | sup <= M <= 3 sup")
for _ in range(8):
    nf = random_normal_form_c(4, rng.randint(2, 6), rng, avoid=(bad,))
    prof = row_degree_profile(nf.to_word())
    print(f"{str(sorted(prof.starting_set)):>12} | {str(prof.row_max):>10} | {str(prof.case_holds):>10} | "
          f"{nf.sup} <= {prof.max_deg} <= {3 * nf.sup}")
