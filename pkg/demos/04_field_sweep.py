"""The same construction over four different fields.

All generators are 0/1 matrices and all products collapse to single
matrix units, so the chain dimensions, the witness length, and the
radical profile are identical over the rationals and over prime fields.
The equivalent command-line sweep is printed at the end.
"""

from subalg import (
    QQ,
    ConstructionParams,
    PrimeField,
    algebra_closure,
    build_bkml,
    is_maximal_commutative,
    li_chain,
    nilpotency_index,
    radical_span,
    witness_system,
)

params = ConstructionParams(n=9, m=1, l=5, k=2)
fields = (QQ, PrimeField(2), PrimeField(7), PrimeField(32003))

print(f"parameters: n={params.n}, m={params.m}, l={params.l}, k={params.k}\n")
header = f"{'field':>10s} {'dim':>4s} {'maximal':>8s} {'witness dims':>20s} {'N':>3s}"
print(header)
for field in fields:
    closure = algebra_closure(build_bkml(params, field))
    verdict = is_maximal_commutative(build_bkml(params, field))
    chain = li_chain(witness_system(params, field))
    nilp = nilpotency_index(radical_span(closure))
    dims = ",".join(str(d) for d in chain.dims)
    print(
        f"{field.name:>10s} {closure.dim:>4d} {str(verdict.is_maximal):>8s}"
        f" {dims:>20s} {nilp:>3d}"
    )

print("\nsame check from the command line:")
print("  subalg verify --family bkml --n 9 --m 1 --l 5 --k 2 --field gf:7")
print("  subalg sweep --family bkml --n 6..9 --field gf:32003 --jobs 2")
