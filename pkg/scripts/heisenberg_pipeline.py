#!/usr/bin/env python3
"""Run the full pipeline on a contact catalog entry, printing each exact step.

quotient by the center -> induced symplectic cocycle -> canonical affine
structure -> central extension (rebuilding the original algebra) -> half
lift -> two-case verdict.
"""

import argparse

from lieaff.catalog import contact_entries, get
from lieaff.extension import LiftData, central_extend, theorem_verdict
from lieaff.liecore import quotient_by_center
from lieaff.ratlin import Matrix, format_rational
from lieaff.structures import affine_from_symplectic, contact_test, symplectic_check


def fmt(vec):
    return "[" + ", ".join(format_rational(x) for x in vec) + "]"


def run(name):
    entry = get(name)
    if entry.contact_form is None:
        raise SystemExit(f"{name} has no distinguished contact form")
    algebra, omega = entry.algebra, entry.contact_form
    print(f"== {name} (dim {algebra.dim})")
    rep = contact_test(algebra, omega)
    print(f"contact scalar: {format_rational(rep.scalar)}")

    quot = quotient_by_center(algebra, omega)
    print(f"quotient dim: {quot.algebra.dim}, kept basis: {[i + 1 for i in quot.complement]}")
    sym = symplectic_check(quot.algebra, quot.theta)
    print(f"induced cocycle symplectic: {sym.is_symplectic}")

    nabla = affine_from_symplectic(quot.algebra, quot.theta)
    nonzero = sorted(nabla.table)
    print(f"canonical affine structure: {len(nonzero)} nonzero products")
    for (i, j) in nonzero:
        print(f"  nabla(e{i + 1}, e{j + 1}) = {fmt(nabla.value(i, j))}")

    ext = central_extend(quot.algebra, quot.theta)
    n = algebra.dim
    cols = [[quot.section.at(r, c) for r in range(n)] for c in range(n - 1)]
    cols.append(quot.center_generator)
    change = Matrix.from_columns(cols)
    matches = all(
        algebra.bracket(cols[i], cols[j]) == change.mul_vec(ext.extended.bracket_basis(i, j))
        for i in range(n) for j in range(i + 1, n)
    )
    print(f"re-extension reproduces the original through the recorded basis change: {matches}")

    verdict = theorem_verdict(ext, nabla, LiftData.half_cocycle(quot.theta))
    print(f"half lift: case={verdict.case} oracle_flat={verdict.is_affine}")
    for cond in verdict.conditions:
        print(f"  condition {cond.name}: {'pass' if cond.passed else 'FAIL'}")
    if verdict.findings:
        print(f"  findings: {verdict.findings}")
    print()


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--entry", default=None,
                        help="catalog entry name (default: every contact entry)")
    args = parser.parse_args()
    names = [args.entry] if args.entry else [e.name for e in contact_entries()]
    for name in names:
        run(name)


if __name__ == "__main__":
    main()
