"""Exact linear algebra over the rationals.

Scalars are `fractions.Fraction` (aliased ``QQ``); every predicate downstream
is an exact algebraic condition, so nothing here ever rounds.  Row reduction
runs fraction-free over machine/bignum integers: each row is scaled by the
lcm of its denominators and kept primitive (gcd 1) during elimination, and
pivot-1 rational rows are materialized only at the API boundary.  Subspaces
are stored in reduced row-echelon form, which makes equality of subspaces
plain structural equality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional, Sequence, Union

from .errors import InputError, PreconditionError

QQ = Fraction

Vector = tuple[QQ, ...]
Matrix = tuple[Vector, ...]
IntRow = tuple[int, ...]

Scalarish = Union[QQ, int, str]


def scalar(x: Scalarish) -> QQ:
    """Coerce an int, Fraction, or "p/q" string to an exact rational."""
    if isinstance(x, QQ):
        return x
    if isinstance(x, int):
        return QQ(x)
    if isinstance(x, str):
        try:
            return QQ(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational: {x!r}") from exc
    raise InputError(f"not a rational: {x!r}")


def format_scalar(q: QQ) -> str:
    """Wire format: "p/q", with "/q" omitted when the denominator is 1."""
    return str(q)


def vector(entries: Iterable[Scalarish]) -> Vector:
    return tuple(scalar(x) for x in entries)


def matrix(rows: Iterable[Iterable[Scalarish]]) -> Matrix:
    return tuple(vector(r) for r in rows)


def zero_vector(n: int) -> Vector:
    return (QQ(0),) * n


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c: QQ, u: Vector) -> Vector:
    return tuple(c * a for a in u)


def mat_vec(m: Matrix, v: Vector) -> Vector:
    return tuple(sum(a * b for a, b in zip(row, v)) for row in m)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a
    )


def identity_matrix(n: int) -> Matrix:
    return tuple(
        tuple(QQ(1) if i == j else QQ(0) for j in range(n)) for i in range(n)
    )


# ---------------------------------------------------------------------------
# integer row machinery (fraction-free elimination core)


def _int_row(row: Sequence[QQ]) -> list[int]:
    """Scale a rational row by the lcm of its denominators."""
    den = 1
    for x in row:
        den = den * x.denominator // math.gcd(den, x.denominator)
    return [x.numerator * (den // x.denominator) for x in row]


def _primitive(row: list[int]) -> list[int]:
    """Divide out the gcd of a row's entries; zero rows pass through."""
    g = 0
    for x in row:
        g = math.gcd(g, x)
        if g == 1:
            return row
    if g > 1:
        return [x // g for x in row]
    return row


def _rref_int(rows: list[list[int]], pivot_limit: Optional[int] = None) -> tuple[list[list[int]], list[int]]:
    """Fraction-free Gauss-Jordan.

    Returns the nonzero echelon rows (each primitive, positive pivot, zeros
    above and below every pivot) together with the pivot column indices.
    ``pivot_limit`` restricts pivot search to the first columns, which lets
    callers reduce augmented systems without pivoting on the right-hand side.
    """
    work = [_primitive(list(r)) for r in rows if any(r)]
    if not work:
        return [], []
    ncols = len(work[0]) if pivot_limit is None else pivot_limit
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(work)):
            if work[i][c]:
                pr = i
                break
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        prow = work[r]
        if prow[c] < 0:
            prow = work[r] = [-x for x in prow]
        pv = prow[c]
        for i in range(len(work)):
            if i == r:
                continue
            row = work[i]
            f = row[c]
            if f:
                work[i] = _primitive([x * pv - y * f for x, y in zip(row, prow)])
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    # under a pivot_limit, rows nonzero only beyond the limit must survive:
    # they are the inconsistency witnesses of augmented systems
    tail = [row for row in work[r:] if any(row)]
    return work[:r] + tail, pivots


def _fraction_rows(int_rows: Sequence[IntRow], pivots: Sequence[int]) -> Matrix:
    out = []
    for row, c in zip(int_rows, pivots):
        pv = row[c]
        out.append(tuple(QQ(x, pv) for x in row))
    return tuple(out)


def _reduce_against(vec_int: list[int], int_rows: Sequence[IntRow], pivots: Sequence[int]) -> list[int]:
    """Reduce an integer vector against echelon rows (up to positive scaling)."""
    v = vec_int
    for row, c in zip(int_rows, pivots):
        f = v[c]
        if f:
            pv = row[c]
            v = _primitive([x * pv - y * f for x, y in zip(v, row)])
    return v


# ---------------------------------------------------------------------------
# linear subspaces


@dataclass(frozen=True)
class LinearSubspace:
    """A linear subspace of Q^n held in canonical reduced row-echelon form.

    ``int_rows`` are the echelon basis rows scaled to primitive integer
    vectors (positive pivots); ``basis`` materializes the pivot-1 rational
    rows.  Two subspaces are equal iff their canonical forms coincide.
    """

    ambient_dim: int
    int_rows: tuple[IntRow, ...]
    pivots: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.int_rows)

    @property
    def is_zero(self) -> bool:
        return not self.int_rows

    @cached_property
    def basis(self) -> Matrix:
        return _fraction_rows(self.int_rows, self.pivots)

    def contains_vector(self, v: Sequence[QQ]) -> bool:
        if len(v) != self.ambient_dim:
            raise InputError(
                f"vector has length {len(v)}, ambient dimension is {self.ambient_dim}"
            )
        residual = _reduce_against(_int_row(v), self.int_rows, self.pivots)
        return not any(residual)

    def contains_subspace(self, other: "LinearSubspace") -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise InputError("ambient dimension mismatch")
        return all(
            not any(_reduce_against(list(r), self.int_rows, self.pivots))
            for r in other.int_rows
        )


def _subspace_from_int_rows(rows: Sequence[Sequence[int]], ambient_dim: int) -> LinearSubspace:
    rref_rows, pivots = _rref_int([list(r) for r in rows])
    return LinearSubspace(
        ambient_dim,
        tuple(tuple(r) for r in rref_rows),
        tuple(pivots),
    )


def zero_subspace(ambient_dim: int) -> LinearSubspace:
    return LinearSubspace(ambient_dim, (), ())


def full_subspace(ambient_dim: int) -> LinearSubspace:
    rows = tuple(
        tuple(1 if i == j else 0 for j in range(ambient_dim))
        for i in range(ambient_dim)
    )
    return LinearSubspace(ambient_dim, rows, tuple(range(ambient_dim)))


def rref_basis(vectors: Iterable[Sequence[QQ]], ambient_dim: int) -> LinearSubspace:
    """Canonical RREF basis of the span of the given rational vectors."""
    rows = []
    for v in vectors:
        if len(v) != ambient_dim:
            raise InputError(
                f"vector has length {len(v)}, ambient dimension is {ambient_dim}"
            )
        rows.append(_int_row(v))
    return _subspace_from_int_rows(rows, ambient_dim)


def subspace_sum(a: LinearSubspace, b: LinearSubspace) -> LinearSubspace:
    if a.ambient_dim != b.ambient_dim:
        raise InputError("ambient dimension mismatch")
    return _subspace_from_int_rows(a.int_rows + b.int_rows, a.ambient_dim)


def subspace_intersect(a: LinearSubspace, b: LinearSubspace) -> LinearSubspace:
    """Intersection of two subspaces via kernel of the stacked coefficient map."""
    if a.ambient_dim != b.ambient_dim:
        raise InputError("ambient dimension mismatch")
    if a.is_zero or b.is_zero:
        return zero_subspace(a.ambient_dim)
    # columns: coefficients on a's rows then b's rows; kernel rows give
    # combinations with sum_a c_i a_i = sum_b d_j b_j.
    n = a.ambient_dim
    ra, rb = a.rank, b.rank
    sys_rows = []
    for coord in range(n):
        sys_rows.append(
            [a.int_rows[i][coord] for i in range(ra)]
            + [-b.int_rows[j][coord] for j in range(rb)]
        )
    ker = _int_kernel(sys_rows, ra + rb)
    vecs = []
    for coeffs in ker:
        vecs.append(
            [
                sum(coeffs[i] * a.int_rows[i][coord] for i in range(ra))
                for coord in range(n)
            ]
        )
    return _subspace_from_int_rows(vecs, n)


def _int_kernel(rows: list[list[int]], ncols: int) -> list[list[int]]:
    """Integer basis of the kernel of an integer matrix (rows are equations)."""
    rref_rows, pivots = _rref_int(rows)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    if not free_cols:
        return []
    lcm_p = 1
    for row, c in zip(rref_rows, pivots):
        pv = row[c]
        lcm_p = lcm_p * pv // math.gcd(lcm_p, pv)
    out = []
    for f in free_cols:
        v = [0] * ncols
        v[f] = lcm_p
        for row, c in zip(rref_rows, pivots):
            v[c] = -row[f] * (lcm_p // row[c])
        out.append(_primitive(v))
    return out


def matrix_kernel(rows: Iterable[Sequence[QQ]], ncols: int) -> LinearSubspace:
    """Kernel {x : A x = 0} of a rational matrix, as a canonical subspace."""
    int_rows = []
    for r in rows:
        if len(r) != ncols:
            raise InputError(f"row has length {len(r)}, expected {ncols}")
        int_rows.append(_int_row(r))
    return _subspace_from_int_rows(_int_kernel(int_rows, ncols), ncols)


# ---------------------------------------------------------------------------
# affine systems


@dataclass(frozen=True)
class AffineSolutionSet:
    """Solution set of A x = b: one particular point plus the kernel of A."""

    point: Vector
    kernel: LinearSubspace


def solve_affine(a: Sequence[Sequence[QQ]], b: Sequence[QQ]) -> Optional[AffineSolutionSet]:
    """Solve A x = b exactly; None iff the system is inconsistent."""
    m = len(a)
    if len(b) != m:
        raise InputError(f"matrix has {m} rows but right-hand side has {len(b)}")
    ncols = len(a[0]) if m else 0
    aug = []
    for row, t in zip(a, b):
        if len(row) != ncols:
            raise InputError("ragged matrix")
        aug.append(_int_row(list(row) + [t]))
    rref_rows, pivots = _rref_int(aug, pivot_limit=ncols)
    for row in rref_rows:
        if row[ncols] and not any(row[:ncols]):
            return None
    point = [QQ(0)] * ncols
    for row, c in zip(rref_rows, pivots):
        point[c] = QQ(row[ncols], row[c])
    coeff_rows = [list(row[:ncols]) for row in rref_rows]
    kernel = _subspace_from_int_rows(_int_kernel(coeff_rows, ncols), ncols)
    return AffineSolutionSet(tuple(point), kernel)


def solve_unique(a: Sequence[Sequence[QQ]], b: Sequence[QQ]) -> Vector:
    sol = solve_affine(a, b)
    if sol is None or not sol.kernel.is_zero:
        raise PreconditionError("system has no unique solution")
    return sol.point


def mat_inverse(m: Matrix) -> Matrix:
    n = len(m)
    if any(len(r) != n for r in m):
        raise InputError("matrix is not square")
    aug = [_int_row(list(row) + [QQ(1) if i == j else QQ(0) for j in range(n)]) for i, row in enumerate(m)]
    rref_rows, pivots = _rref_int(aug, pivot_limit=n)
    if list(pivots) != list(range(n)):
        raise PreconditionError("matrix is singular")
    inv = []
    for row, c in zip(rref_rows, pivots):
        pv = row[c]
        inv.append(tuple(QQ(x, pv) for x in row[n:]))
    return tuple(inv)


# ---------------------------------------------------------------------------
# determinants and the quadratic space


def _det_int(rows: list[list[int]]) -> int:
    """Bareiss determinant of a square integer matrix."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def determinant(m: Sequence[Sequence[QQ]]) -> QQ:
    n = len(m)
    if any(len(r) != n for r in m):
        raise InputError("matrix is not square")
    scale = QQ(1)
    int_rows = []
    for row in m:
        ir = _int_row(row)
        # recover the per-row scaling to undo it on the determinant
        for x, y in zip(row, ir):
            if y:
                scale *= QQ(y) / x
                break
        else:
            return QQ(0)
        int_rows.append(ir)
    return QQ(_det_int(int_rows)) / scale


def is_symmetric(form: Sequence[Sequence[QQ]]) -> bool:
    n = len(form)
    return all(len(r) == n for r in form) and all(
        form[i][j] == form[j][i] for i in range(n) for j in range(i + 1, n)
    )


def is_positive_definite(form: Sequence[Sequence[QQ]]) -> bool:
    """Sylvester's criterion: every leading principal minor is positive.

    Positive definiteness guarantees the form is anisotropic, which the
    whole orthogonality layer relies on (orthogonal subspaces can only
    share the zero direction).
    """
    if not is_symmetric(form):
        raise InputError("form must be symmetric")
    n = len(form)
    for k in range(1, n + 1):
        minor = [list(row[:k]) for row in form[:k]]
        if determinant(minor) <= 0:
            return False
    return True


@dataclass(frozen=True)
class QuadraticSpace:
    """Q^n equipped with a symmetric positive-definite bilinear form."""

    dim: int
    form: Matrix

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise InputError("dimension must be positive")
        if len(self.form) != self.dim or any(len(r) != self.dim for r in self.form):
            raise InputError("form must be a dim x dim matrix")
        if not is_symmetric(self.form):
            raise InputError("form must be symmetric")
        if not is_positive_definite(self.form):
            raise InputError("form must be positive definite")

    @classmethod
    def euclidean(cls, dim: int) -> "QuadraticSpace":
        return cls(dim, identity_matrix(dim))

    @classmethod
    def diagonal(cls, weights: Sequence[Scalarish]) -> "QuadraticSpace":
        w = vector(weights)
        n = len(w)
        form = tuple(
            tuple(w[i] if i == j else QQ(0) for j in range(n)) for i in range(n)
        )
        return cls(n, form)

    @classmethod
    def from_matrix(cls, rows: Iterable[Iterable[Scalarish]]) -> "QuadraticSpace":
        form = matrix(rows)
        return cls(len(form), form)

    @cached_property
    def int_form(self) -> tuple[IntRow, ...]:
        """The form scaled by a positive integer; orthogonality is unchanged."""
        den = 1
        for row in self.form:
            for x in row:
                den = den * x.denominator // math.gcd(den, x.denominator)
        return tuple(
            tuple(x.numerator * (den // x.denominator) for x in row)
            for row in self.form
        )

    def xi_int(self, u: Sequence[int], v: Sequence[int]) -> int:
        """Scaled form value on integer vectors; zero iff xi(u, v) = 0."""
        total = 0
        for ui, row in zip(u, self.int_form):
            if ui:
                total += ui * sum(f * vj for f, vj in zip(row, v) if vj)
        return total


def bilinear_eval(space: QuadraticSpace, u: Sequence[QQ], v: Sequence[QQ]) -> QQ:
    """Exact value of the space's bilinear form on two vectors."""
    if len(u) != space.dim or len(v) != space.dim:
        raise InputError(f"vectors must have length {space.dim}")
    return sum(
        (ui * sum(f * vj for f, vj in zip(row, v)) for ui, row in zip(u, space.form)),
        start=QQ(0),
    )


def xi_complement(space: QuadraticSpace, d: LinearSubspace, w: LinearSubspace) -> LinearSubspace:
    """{x in W : xi(x, d) = 0 for all d in D}, for D a subspace of W.

    With a positive-definite form the result is a true complement of D
    inside W: the dimensions add up and the intersection is zero.
    """
    if d.ambient_dim != space.dim or w.ambient_dim != space.dim:
        raise InputError("ambient dimension mismatch")
    if not w.contains_subspace(d):
        raise PreconditionError("D must be a subspace of W")
    if d.is_zero:
        return w
    gram = [
        [space.xi_int(wi, dj) for wi in w.int_rows]
        for dj in d.int_rows
    ]
    coeff_vectors = _int_kernel(gram, w.rank)
    n = space.dim
    vecs = [
        [
            sum(c * row[coord] for c, row in zip(coeffs, w.int_rows))
            for coord in range(n)
        ]
        for coeffs in coeff_vectors
    ]
    return _subspace_from_int_rows(vecs, n)


# ---------------------------------------------------------------------------
# wire format helpers


def vector_to_wire(v: Vector) -> list[str]:
    return [format_scalar(x) for x in v]


def vector_from_wire(data: Sequence[Scalarish]) -> Vector:
    return vector(data)


def matrix_to_wire(m: Matrix) -> list[list[str]]:
    return [vector_to_wire(r) for r in m]


def matrix_from_wire(data: Sequence[Sequence[Scalarish]]) -> Matrix:
    return matrix(data)
