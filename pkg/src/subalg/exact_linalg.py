"""Exact dense linear algebra over the rationals and over prime fields.

Scalars are plain Python values: ``gmpy2.mpq`` (``fractions.Fraction`` when
gmpy2 is unavailable) for rational work, canonical residues in ``range(p)``
for GF(p).  A ``Field`` object owns the arithmetic, so matrices and
subspaces never branch on the scalar kind themselves.

Matrices are immutable and 1-indexed at the API surface.  A matrix is
vectorized row-major: entry (i, j) lands at coordinate (i-1)*n + (j-1) of a
length n*n vector.  Subspaces of that coordinate space are stored in
reduced row-echelon form at all times.  The RREF basis of a span is unique,
so two subspaces are equal exactly when their bases compare equal, and the
result of ``span_of`` never depends on the order of its inputs.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from math import isqrt

from .errors import DimensionMismatch, FieldMismatch, IndexOutOfRange, InvalidParams

try:
    from gmpy2 import mpq as _RAT
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as _RAT


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Field:
    """Scalar arithmetic for one field; instances are small value objects."""

    name: str = "?"

    def coerce(self, value):
        """Turn an int or string into a canonical scalar; pass scalars through."""
        if isinstance(value, bool):
            raise InvalidParams("booleans are not scalars")
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, str):
            return self.parse(value)
        return self._passthrough(value)

    def _passthrough(self, value):
        raise InvalidParams(f"not a scalar for {self.name}: {value!r}")

    # The remaining methods are supplied by the concrete subclasses.


@dataclass(frozen=True)
class RationalField(Field):
    """Arbitrary-precision rationals, always reduced, denominator positive."""

    @property
    def name(self) -> str:
        return "rational"

    def zero(self):
        return _RAT(0)

    def one(self):
        return _RAT(1)

    def from_int(self, i: int):
        return _RAT(i)

    def parse(self, s: str):
        try:
            return _RAT(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidParams(f"bad rational literal {s!r}") from exc

    def fmt(self, x) -> str:
        return str(x)

    def _passthrough(self, value):
        if isinstance(value, type(_RAT(0))):
            return value
        raise InvalidParams(f"not a rational scalar: {value!r}")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def axpy(self, y: list, c, x) -> None:
        """y += c * x in place, skipping zero entries of x."""
        if c:
            for idx, xv in enumerate(x):
                if xv:
                    y[idx] = y[idx] + c * xv

    def scale(self, x, c) -> list:
        return [c * v for v in x]


@dataclass(frozen=True)
class PrimeField(Field):
    """GF(p) with elements stored as canonical residues in range(p)."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or isinstance(self.p, bool) or not _is_prime(self.p):
            raise InvalidParams(f"modulus must be prime, got {self.p!r}")

    @property
    def name(self) -> str:
        return f"gf:{self.p}"

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, i: int):
        return i % self.p

    def parse(self, s: str):
        try:
            if "/" in s:
                num, den = s.split("/", 1)
                return self.mul(int(num) % self.p, self.inv(int(den) % self.p))
            return int(s) % self.p
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidParams(f"bad scalar literal {s!r} for {self.name}") from exc

    def fmt(self, x) -> str:
        return str(x)

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def axpy(self, y: list, c, x) -> None:
        """y += c * x in place, skipping zero entries of x."""
        if c:
            p = self.p
            for idx, xv in enumerate(x):
                if xv:
                    y[idx] = (y[idx] + c * xv) % p

    def scale(self, x, c) -> list:
        p = self.p
        return [(c * v) % p for v in x]


QQ = RationalField()


def field_from_name(name: str) -> Field:
    """Parse a field descriptor: "rational" or "gf:<p>"."""
    if name == "rational":
        return QQ
    if name.startswith("gf:"):
        try:
            p = int(name[3:])
        except ValueError:
            raise InvalidParams(f"bad field descriptor {name!r}") from None
        return PrimeField(p)
    raise InvalidParams(f"bad field descriptor {name!r}")


def _check_compatible(a, b):
    if a.n != b.n:
        raise DimensionMismatch(f"matrix sizes differ: {a.n} vs {b.n}")
    if a.field != b.field:
        raise FieldMismatch(f"fields differ: {a.field.name} vs {b.field.name}")


@dataclass(frozen=True)
class Matrix:
    """Immutable dense n-by-n matrix with 1-based index accessors."""

    n: int
    field: Field
    rows: tuple

    @staticmethod
    def zero(n: int, field: Field = QQ) -> "Matrix":
        z = field.zero()
        return Matrix(n, field, tuple(tuple(z for _ in range(n)) for _ in range(n)))

    @staticmethod
    def identity(n: int, field: Field = QQ) -> "Matrix":
        z, o = field.zero(), field.one()
        return Matrix(
            n, field, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n))
        )

    @staticmethod
    def from_rows(rows, field: Field = QQ) -> "Matrix":
        n = len(rows)
        coerced = []
        for row in rows:
            if len(row) != n:
                raise DimensionMismatch("matrix rows must form a square array")
            coerced.append(tuple(field.coerce(v) for v in row))
        return Matrix(n, field, tuple(coerced))

    def entry(self, i: int, j: int):
        """Entry at 1-based position (i, j)."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexOutOfRange(f"({i}, {j}) outside 1..{self.n}")
        return self.rows[i - 1][j - 1]

    def is_zero(self) -> bool:
        return all(not v for row in self.rows for v in row)

    def scale(self, c) -> "Matrix":
        c = self.field.coerce(c)
        f = self.field
        return Matrix(self.n, f, tuple(tuple(f.mul(c, v) for v in row) for row in self.rows))

    def __add__(self, other: "Matrix") -> "Matrix":
        _check_compatible(self, other)
        f = self.field
        return Matrix(
            self.n,
            f,
            tuple(
                tuple(f.add(a, b) for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            ),
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        _check_compatible(self, other)
        f = self.field
        return Matrix(
            self.n,
            f,
            tuple(
                tuple(f.sub(a, b) for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            ),
        )

    def __mul__(self, other: "Matrix") -> "Matrix":
        return mat_mul(self, other)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(self.field.fmt(v) for v in row) for row in self.rows)
        return f"Matrix({self.n}, {self.field.name}, [{body}])"


def matrix_unit(n: int, i: int, j: int, field: Field = QQ) -> Matrix:
    """The matrix with a single 1 at 1-based position (i, j)."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexOutOfRange(f"unit position ({i}, {j}) outside 1..{n}")
    z, o = field.zero(), field.one()
    rows = [[z] * n for _ in range(n)]
    rows[i - 1][j - 1] = o
    return Matrix(n, field, tuple(tuple(r) for r in rows))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    _check_compatible(a, b)
    n, f = a.n, a.field
    brows = b.rows
    out = []
    for arow in a.rows:
        acc = [f.zero()] * n
        for k, aik in enumerate(arow):
            if aik:
                f.axpy(acc, aik, brows[k])
        out.append(tuple(acc))
    return Matrix(n, f, tuple(out))


def mat_pow(a: Matrix, e: int) -> Matrix:
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    result = Matrix.identity(a.n, a.field)
    for _ in range(e):
        result = mat_mul(result, a)
    return result


def commutator(a: Matrix, b: Matrix) -> Matrix:
    """AB - BA."""
    return mat_mul(a, b) - mat_mul(b, a)


def vectorize(m: Matrix) -> tuple:
    """Row-major coordinates: entry (i, j) at position (i-1)*n + (j-1)."""
    return tuple(v for row in m.rows for v in row)


def unvectorize(vec, n: int, field: Field) -> Matrix:
    if len(vec) != n * n:
        raise DimensionMismatch(f"expected {n * n} coordinates, got {len(vec)}")
    return Matrix(n, field, tuple(tuple(vec[i * n : (i + 1) * n]) for i in range(n)))


def _reduce_against(vec: list, rows, pivots, field) -> list:
    """Eliminate vec against RREF rows in place; pivots must be ascending."""
    for row, p in zip(rows, pivots):
        c = vec[p]
        if c:
            field.axpy(vec, field.neg(c), row)
    return vec


class _Echelon:
    """Mutable RREF accumulator over a fixed coordinate length."""

    def __init__(self, ncoords: int, field: Field):
        self.ncoords = ncoords
        self.field = field
        self.rows: list[list] = []
        self.pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self.rows)

    def insert(self, vec: list) -> bool:
        """Add one vector; returns True when the dimension grew."""
        f = self.field
        _reduce_against(vec, self.rows, self.pivots, f)
        lead = next((idx for idx, v in enumerate(vec) if v), None)
        if lead is None:
            return False
        lv = vec[lead]
        if lv != f.one():
            vec = f.scale(vec, f.inv(lv))
        for row in self.rows:
            c = row[lead]
            if c:
                f.axpy(row, f.neg(c), vec)
        pos = bisect.bisect_left(self.pivots, lead)
        self.pivots.insert(pos, lead)
        self.rows.insert(pos, vec)
        return True

    def contains(self, vec) -> bool:
        probe = _reduce_against(list(vec), self.rows, self.pivots, self.field)
        return not any(probe)

    def seed_from(self, subspace: "Subspace") -> None:
        """Start from an existing RREF basis (rows are copied)."""
        self.rows = [list(r) for r in subspace.basis]
        self.pivots = list(subspace.pivots)

    def to_subspace(self, n: int) -> "Subspace":
        return Subspace(n, self.field, tuple(tuple(r) for r in self.rows), tuple(self.pivots))


@dataclass(frozen=True)
class Subspace:
    """A subspace of vectorized n-by-n matrices, held as a unique RREF basis."""

    n: int
    field: Field
    basis: tuple
    pivots: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains_vector(self, vec) -> bool:
        if len(vec) != self.n * self.n:
            raise DimensionMismatch(
                f"expected {self.n * self.n} coordinates, got {len(vec)}"
            )
        probe = _reduce_against(list(vec), self.basis, self.pivots, self.field)
        return not any(probe)

    def contains_matrix(self, m: Matrix) -> bool:
        if m.n != self.n:
            raise DimensionMismatch(f"matrix size {m.n} vs subspace size {self.n}")
        if m.field != self.field:
            raise FieldMismatch(f"fields differ: {m.field.name} vs {self.field.name}")
        return self.contains_vector(vectorize(m))

    def basis_matrices(self) -> list:
        return [unvectorize(row, self.n, self.field) for row in self.basis]


def _infer_square_side(ncoords: int) -> int:
    n = isqrt(ncoords)
    if n * n != ncoords:
        raise DimensionMismatch(f"coordinate length {ncoords} is not a perfect square")
    return n


def rref(rows, field: Field, n: int | None = None) -> Subspace:
    """Canonical RREF span of coordinate vectors (each of length n*n).

    The result depends only on the span, never on the input order.  Pass n
    explicitly when rows may be empty.
    """
    rows = list(rows)
    if not rows:
        if n is None:
            raise DimensionMismatch("cannot infer coordinate length from no rows")
        return Subspace(n, field, (), ())
    if n is None:
        n = _infer_square_side(len(rows[0]))
    ech = _Echelon(n * n, field)
    for row in rows:
        if len(row) != n * n:
            raise DimensionMismatch(
                f"row length {len(row)} differs from expected {n * n}"
            )
        ech.insert([field.coerce(v) for v in row])
    return ech.to_subspace(n)


def span_of(mats, n: int | None = None, field: Field | None = None) -> Subspace:
    """RREF span of the vectorizations of the given matrices."""
    mats = list(mats)
    if not mats:
        if n is None or field is None:
            raise DimensionMismatch("empty span needs explicit n and field")
        return Subspace(n, field, (), ())
    first = mats[0]
    for m in mats[1:]:
        _check_compatible(first, m)
    if n is not None and n != first.n:
        raise DimensionMismatch(f"matrix size {first.n} vs requested {n}")
    if field is not None and field != first.field:
        raise FieldMismatch(f"fields differ: {first.field.name} vs {field.name}")
    ech = _Echelon(first.n * first.n, first.field)
    for m in mats:
        ech.insert(list(vectorize(m)))
    return ech.to_subspace(first.n)


def subspace_contains(space: Subspace, item) -> bool:
    """Membership of a matrix, or inclusion when item is itself a subspace."""
    if isinstance(item, Subspace):
        if item.n != space.n:
            raise DimensionMismatch(f"subspace sizes differ: {item.n} vs {space.n}")
        if item.field != space.field:
            raise FieldMismatch(f"fields differ: {item.field.name} vs {space.field.name}")
        return all(space.contains_vector(row) for row in item.basis)
    return space.contains_matrix(item)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    if a.n != b.n:
        raise DimensionMismatch(f"subspace sizes differ: {a.n} vs {b.n}")
    if a.field != b.field:
        raise FieldMismatch(f"fields differ: {a.field.name} vs {b.field.name}")
    ech = _Echelon(a.n * a.n, a.field)
    ech.seed_from(a)
    for row in b.basis:
        ech.insert(list(row))
    return ech.to_subspace(a.n)


def kernel(rows, n: int, field: Field) -> Subspace:
    """Nullspace of a homogeneous system whose unknowns are n*n coordinates.

    Each input row is one linear constraint of length n*n.  The result is
    returned as a canonical RREF subspace.
    """
    ncoords = n * n
    ech = _Echelon(ncoords, field)
    for row in rows:
        if len(row) != ncoords:
            raise DimensionMismatch(
                f"constraint length {len(row)} differs from expected {ncoords}"
            )
        ech.insert([field.coerce(v) for v in row])
    pivot_set = set(ech.pivots)
    out = _Echelon(ncoords, field)
    zero, one = field.zero(), field.one()
    for free in range(ncoords):
        if free in pivot_set:
            continue
        vec = [zero] * ncoords
        vec[free] = one
        for row, p in zip(ech.rows, ech.pivots):
            c = row[free]
            if c:
                vec[p] = field.neg(c)
        out.insert(vec)
    return out.to_subspace(n)
