"""Independent oracles used to pin expected values.

Everything here goes through sympy so that ranks, spans, and word products
are computed by code with no overlap with the package's own linear
algebra.  Oracles work over the rationals; field-independence of the
structures under test is checked separately.
"""

from fractions import Fraction

import sympy

from subalg import Matrix, RationalField


def to_sympy(m: Matrix) -> sympy.Matrix:
    assert isinstance(m.field, RationalField), "oracles run over the rationals"
    return sympy.Matrix(
        [
            [sympy.Rational(int(v.numerator), int(v.denominator)) for v in row]
            for row in m.rows
        ]
    )


def sympy_rank_of_matrices(mats) -> int:
    """Rank of the stack of row-major vectorizations."""
    if not mats:
        return 0
    rows = [list(to_sympy(m).reshape(1, m.n * m.n)) for m in mats]
    return sympy.Matrix(rows).rank()


def sympy_word_products(system, max_len: int):
    """All sympy products of at most max_len members, identity included
    when the system admits the empty word."""
    mats = [to_sympy(m) for m in system.matrices]
    n = system.n
    words = []
    if system.admit_empty_word:
        words.append(sympy.eye(n))
    current = [sympy.eye(n)]
    for _ in range(max_len):
        current = [prefix * g for prefix in current for g in mats]
        words.extend(current)
    return words


def sympy_word_span_dims(system, max_len: int) -> list:
    """Dimensions of the spans of words of length <= i, for i = 0..max_len."""
    n = system.n
    dims = []
    stacked = []
    mats = [to_sympy(m) for m in system.matrices]
    if system.admit_empty_word:
        stacked.append(list(sympy.eye(n).reshape(1, n * n)))
    dims.append(sympy.Matrix(stacked).rank() if stacked else 0)
    current = [sympy.eye(n)]
    for _ in range(max_len):
        current = [prefix * g for prefix in current for g in mats]
        stacked.extend(list(w.reshape(1, n * n)) for w in current)
        dims.append(sympy.Matrix(stacked).rank())
    return dims


def as_fraction_rows(subspace) -> list:
    """Package subspace basis converted to Fractions for sympy comparison."""
    return [
        [Fraction(int(v.numerator), int(v.denominator)) for v in row]
        for row in subspace.basis
    ]


def sympy_rref_rows(vectors) -> list:
    """Canonical RREF rows (zero rows dropped) of integer/Fraction vectors."""
    m = sympy.Matrix([list(v) for v in vectors])
    reduced, _ = m.rref()
    rows = []
    for i in range(reduced.rows):
        row = list(reduced.row(i))
        if any(v != 0 for v in row):
            rows.append([Fraction(str(v)) for v in row])
    return rows
