"""Build the size-8 two-chain algebra and verify it is maximal commutative.

Run from the repository root after an editable install:

    python3 demos/01_build_and_verify.py
"""

from subalg import (
    QQ,
    ConstructionParams,
    algebra_closure,
    assemble_element,
    build_bkml,
    coefficient_template,
    dimension_formula,
    is_maximal_commutative,
)

params = ConstructionParams(n=8, m=1, l=5, k=2)
system = build_bkml(params, QQ)

print(f"parameters: n={params.n}, m={params.m}, l={params.l}, k={params.k}")
print(f"generators ({len(system.members)}):")
for label, matrix in system.members:
    ones = [
        (i, j)
        for i in range(1, 9)
        for j in range(1, 9)
        if matrix.entry(i, j)
    ]
    print(f"  {label:6s} support {ones}")

closure = algebra_closure(system)
print(f"\nclosure dimension: {closure.dim}")
print(f"dimension formula: {dimension_formula(params)}")

verdict = is_maximal_commutative(system)
print(f"commutative:       {verdict.is_commutative}")
print(f"centralizer dim:   {verdict.centralizer_dim}")
print(f"maximal:           {verdict.is_maximal}")

print("\ncoefficient template for a general element:")
print(" ", ", ".join(coefficient_template(params)))

element = assemble_element(
    params, {"gamma": 1, "alpha_1": 2, "lambda_2": 3, "mu_1_8": 4}, QQ
)
print("\ngamma=1, alpha_1=2, lambda_2=3, mu_1_8=4 assembles to:")
for row in element.rows:
    print("  " + " ".join(f"{QQ.fmt(v):>3s}" for v in row))

assert closure.contains_matrix(element)
print("\nthe assembled element lies in the closure, as it must.")
