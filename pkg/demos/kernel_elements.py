"""Two braids with trivial Burau matrix, and what the checks make of them.

Run: python3 demos/kernel_elements.py
"""

from garside_burau.burau import rho
from garside_burau.criteria import kernel_exclusion
from garside_burau.fixtures import kernel_x, kernel_y
from garside_burau.garside_dual import normal_form_d
from garside_burau.words import exponent_sum


def describe(name, w):
    nf = normal_form_d(w)
    print(f"{name} in B_{w.n}: {len(w.artin_letters())} Artin letters, exponent sum {exponent_sum(w)}")
    print(f"  Burau matrix is the identity: {rho(w).is_identity()}")
    print(f"  dual normal form: p = {nf.p}, {nf.canonical_length} factors, simply nested: {nf.simply_nested}")
    # a kernel element can never be certified; the check must come back inconclusive
    verdict = kernel_exclusion(w, nf)
    print(f"  kernel exclusion says: {verdict.conclusion} {verdict.witness}")


if __name__ == "__main__":
    describe("x", kernel_x())
    describe("y", kernel_y())
