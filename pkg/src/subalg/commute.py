"""Commutativity tests, centralizers, and the maximality verdict.

A subalgebra is maximal commutative exactly when it equals the centralizer
of its own generators, so the verdict reduces to one kernel computation
and one subspace comparison.
"""

from __future__ import annotations

from dataclasses import dataclass

from .constructions import GeneratingSystem
from .errors import DimensionMismatch, FieldMismatch
from .exact_linalg import Matrix, Subspace, commutator, kernel
from .lengths import algebra_closure


def is_commutative(mats) -> tuple:
    """(True, None) if all pairs commute, else (False, first bad pair)."""
    mats = list(mats)
    for a in range(len(mats)):
        for b in range(a + 1, len(mats)):
            if not commutator(mats[a], mats[b]).is_zero():
                return False, (mats[a], mats[b])
    return True, None


def centralizer(mats) -> Subspace:
    """All X with X*G = G*X for every given G, as a canonical subspace.

    One constraint row per generator and output position of X*G - G*X.
    """
    mats = list(mats)
    if not mats:
        raise DimensionMismatch("centralizer needs at least one matrix")
    first = mats[0]
    n, f = first.n, first.field
    for m in mats[1:]:
        if m.n != n:
            raise DimensionMismatch(f"matrix sizes differ: {m.n} vs {n}")
        if m.field != f:
            raise FieldMismatch(f"fields differ: {m.field.name} vs {f.name}")
    zero = f.zero()
    rows = []
    for g in mats:
        grows = g.rows
        for i in range(n):
            for j in range(n):
                row = [zero] * (n * n)
                touched = False
                for k in range(n):
                    gkj = grows[k][j]
                    if gkj:
                        idx = i * n + k
                        row[idx] = f.add(row[idx], gkj)
                        touched = True
                    gik = grows[i][k]
                    if gik:
                        idx = k * n + j
                        row[idx] = f.sub(row[idx], gik)
                        touched = True
                if touched and any(row):
                    rows.append(row)
    return kernel(rows, n, f)


@dataclass(frozen=True)
class MaximalityVerdict:
    """Outcome of the maximal-commutativity check for one system."""

    algebra_dim: int
    centralizer_dim: int
    is_commutative: bool
    is_maximal: bool
    counterexample: object = None


def is_maximal_commutative(system: GeneratingSystem) -> MaximalityVerdict:
    """Verdict for the algebra generated by the system.

    The counterexample is a non-commuting member pair when commutativity
    fails, otherwise the first centralizer basis element (in RREF order)
    that falls outside the generated algebra.
    """
    closure = algebra_closure(system)
    commutes, pair = is_commutative(system.matrices)
    cent = centralizer(system.matrices)
    if not commutes:
        return MaximalityVerdict(closure.dim, cent.dim, False, False, pair)
    if cent == closure:
        return MaximalityVerdict(closure.dim, cent.dim, True, True, None)
    outside = next(
        m for m in cent.basis_matrices() if not closure.contains_matrix(m)
    )
    return MaximalityVerdict(closure.dim, cent.dim, True, False, outside)
