#!/usr/bin/env python3
"""Scan random lift candidates for gaps between the stated two-case conditions
and the brute-force flatness oracle.

A "gap" is a candidate whose conditions all pass while the oracle refutes
flatness; the auxiliary product rule a(nabla(x,y)) = a(x) a(y) is tracked
separately because it closes every gap seen so far.
"""

import argparse
import random
from fractions import Fraction

from lieaff.catalog import get, symplectic_entries
from lieaff.extension import (
    central_extend,
    random_lift_data,
    solve_lift_with_alpha,
    theorem_verdict,
)
from lieaff.structures import affine_from_symplectic


def scan_random(name, samples, seed):
    entry = get(name)
    nabla = affine_from_symplectic(entry.algebra, entry.symplectic_form)
    ext = central_extend(entry.algebra, entry.symplectic_form)
    rng = random.Random(seed)
    gaps = 0
    flats = 0
    for _ in range(samples):
        lift = random_lift_data(rng, entry.symplectic_form)
        verdict = theorem_verdict(ext, nabla, lift)
        if verdict.is_affine:
            flats += 1
        if "theorem-gap" in verdict.findings:
            gaps += 1
        if verdict.conditions_hold and verdict.aux_product_rule_holds:
            assert verdict.is_affine
    print(f"{name}: {samples} random candidates (seed {seed}): "
          f"{flats} flat, {gaps} gaps")


def scan_solver_families(name):
    entry = get(name)
    nabla = affine_from_symplectic(entry.algebra, entry.symplectic_form)
    n = entry.algebra.dim
    alphas = [[Fraction(0)] * n]
    one_hot = [Fraction(0)] * n
    one_hot[0] = Fraction(1)
    alphas.append(one_hot)
    for alpha in alphas:
        try:
            res = solve_lift_with_alpha(entry.algebra, entry.symplectic_form, nabla, alpha)
        except ValueError as exc:
            print(f"{name} alpha={alpha}: rejected ({exc})")
            continue
        if not res.feasible:
            print(f"{name} alpha={[str(x) for x in alpha]}: infeasible")
            continue
        gaps = len(res.gap_candidates)
        print(f"{name} alpha={[str(x) for x in alpha]}: dim {res.dimension}, "
              f"{sum(p.flat for p in res.points)}/{len(res.points)} checked points flat, "
              f"{gaps} gap candidates")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--base", choices=[e.name for e in symplectic_entries()],
                        default=None, help="restrict to one symplectic base")
    parser.add_argument("--samples", type=int, default=300)
    parser.add_argument("--seed", type=int, default=20177)
    args = parser.parse_args()
    names = [args.base] if args.base else [e.name for e in symplectic_entries()]
    for name in names:
        scan_random(name, args.samples, args.seed)
        scan_solver_families(name)


if __name__ == "__main__":
    main()
