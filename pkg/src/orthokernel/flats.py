"""Nonempty affine flats of Q^n with lattice operations.

A flat is held canonically: its direction is a canonical RREF subspace and
its base point is the unique member whose coordinates vanish at every pivot
column of the direction.  Equality of flats is therefore plain structural
equality.  The empty set is not a flat; ``meet`` returns None for disjoint
arguments.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import InputError, PreconditionError
from .linalg import (
    QQ,
    IntRow,
    LinearSubspace,
    Matrix,
    QuadraticSpace,
    Vector,
    _int_kernel,
    _int_row,
    _rref_int,
    _subspace_from_int_rows,
    rref_basis,
    subspace_sum,
    vec_sub,
    vector,
    vector_from_wire,
    vector_to_wire,
    zero_subspace,
)


def _canonical_point(point: Vector, direction: LinearSubspace) -> Vector:
    """The unique point of the flat with zeros at the direction's pivots."""
    p = list(point)
    for row, c in zip(direction.basis, direction.pivots):
        coef = p[c]
        if coef:
            p = [x - coef * y for x, y in zip(p, row)]
    return tuple(p)


@dataclass(frozen=True)
class AffineSubspace:
    """A nonempty affine flat: base point plus direction subspace.

    Construct via :meth:`make` (or the module helpers), which canonicalize;
    the raw constructor expects already-canonical parts.
    """

    space: QuadraticSpace
    point: Vector
    direction: LinearSubspace

    def __post_init__(self) -> None:
        if len(self.point) != self.space.dim:
            raise InputError("point length differs from ambient dimension")
        if self.direction.ambient_dim != self.space.dim:
            raise InputError("direction ambient dimension mismatch")

    @classmethod
    def make(
        cls,
        space: QuadraticSpace,
        point: Sequence[QQ],
        direction: LinearSubspace,
    ) -> "AffineSubspace":
        pt = vector(point)
        if len(pt) != space.dim:
            raise InputError("point length differs from ambient dimension")
        return cls(space, _canonical_point(pt, direction), direction)

    @classmethod
    def from_point(cls, space: QuadraticSpace, point: Sequence[QQ]) -> "AffineSubspace":
        return cls.make(space, point, zero_subspace(space.dim))

    @classmethod
    def from_points(
        cls, space: QuadraticSpace, points: Sequence[Sequence[QQ]]
    ) -> "AffineSubspace":
        """Affine hull of a nonempty point set."""
        if not points:
            raise InputError("affine hull needs at least one point")
        base = vector(points[0])
        diffs = [vec_sub(vector(p), base) for p in points[1:]]
        return cls.make(space, base, rref_basis(diffs, space.dim))

    @classmethod
    def full(cls, space: QuadraticSpace) -> "AffineSubspace":
        from .linalg import full_subspace

        return cls.make(space, (QQ(0),) * space.dim, full_subspace(space.dim))

    @property
    def dim(self) -> int:
        return self.direction.rank

    @property
    def ambient_dim(self) -> int:
        return self.space.dim

    @property
    def is_point(self) -> bool:
        return self.direction.is_zero

    def to_wire(self) -> dict:
        return {
            "point": vector_to_wire(self.point),
            "basis": [vector_to_wire(row) for row in self.direction.basis],
        }

    @classmethod
    def from_wire(cls, space: QuadraticSpace, data: dict) -> "AffineSubspace":
        try:
            point = vector_from_wire(data["point"])
            rows = [vector_from_wire(r) for r in data["basis"]]
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed flat payload: {exc}") from exc
        if len(point) != space.dim or any(len(r) != space.dim for r in rows):
            raise InputError("flat payload does not match ambient dimension")
        return cls.make(space, point, rref_basis(rows, space.dim))


def _check_same_space(x1: AffineSubspace, x2: AffineSubspace) -> None:
    if x1.space != x2.space:
        raise InputError("flats live in different ambient spaces")


def contains(x: AffineSubspace, p: Sequence[QQ]) -> bool:
    """Membership of a point in a flat."""
    if len(p) != x.ambient_dim:
        raise InputError("point length differs from ambient dimension")
    return x.direction.contains_vector(vec_sub(vector(p), x.point))


def is_subflat(inner: AffineSubspace, outer: AffineSubspace) -> bool:
    """inner ⊆ outer as point sets."""
    _check_same_space(inner, outer)
    return outer.direction.contains_subspace(inner.direction) and contains(
        outer, inner.point
    )


def _meet_parts(
    x1: AffineSubspace, x2: AffineSubspace
) -> Optional[tuple[Vector, LinearSubspace]]:
    """Point and direction of the intersection, or None when disjoint.

    Solves p1 + D1^T a = p2 + D2^T b in the coefficients (a, b); the kernel
    of the coefficient matrix yields the intersection of the directions.
    """
    n = x1.ambient_dim
    r1, r2 = x1.direction.int_rows, x2.direction.int_rows
    k1, k2 = len(r1), len(r2)
    delta = vec_sub(x2.point, x1.point)
    if k1 + k2 == 0:
        if any(delta):
            return None
        return x1.point, zero_subspace(n)
    # one equation per coordinate, scaled to integers row by row so the
    # rational right-hand side never skews the particular solution
    aug = []
    for coord in range(n):
        aug.append(
            _int_row(
                [QQ(r1[i][coord]) for i in range(k1)]
                + [QQ(-r2[j][coord]) for j in range(k2)]
                + [delta[coord]]
            )
        )
    rref_rows, pivots = _rref_int(aug, pivot_limit=k1 + k2)
    for row in rref_rows:
        if row[k1 + k2] and not any(row[: k1 + k2]):
            return None
    # particular solution for the a-block gives a common point
    coeffs_a = [QQ(0)] * k1
    for row, c in zip(rref_rows, pivots):
        if c < k1:
            coeffs_a[c] = QQ(row[k1 + k2], row[c])
    point = tuple(
        px + sum((ca * QQ(ri[coord]) for ca, ri in zip(coeffs_a, r1)), start=QQ(0))
        for coord, px in enumerate(x1.point)
    )
    ker = _int_kernel([list(row[: k1 + k2]) for row in rref_rows], k1 + k2)
    dir_vecs = [
        [sum(kv[i] * r1[i][coord] for i in range(k1)) for coord in range(n)]
        for kv in ker
    ]
    return point, _subspace_from_int_rows(dir_vecs, n)


def meet(x1: AffineSubspace, x2: AffineSubspace) -> Optional[AffineSubspace]:
    """Intersection flat, or None when the flats are disjoint."""
    _check_same_space(x1, x2)
    parts = _meet_parts(x1, x2)
    if parts is None:
        return None
    point, direction = parts
    return AffineSubspace.make(x1.space, point, direction)


def join(x1: AffineSubspace, x2: AffineSubspace) -> AffineSubspace:
    """Least flat containing both arguments."""
    _check_same_space(x1, x2)
    connector = rref_basis([vec_sub(x2.point, x1.point)], x1.ambient_dim)
    direction = subspace_sum(
        subspace_sum(x1.direction, x2.direction), connector
    )
    return AffineSubspace.make(x1.space, x1.point, direction)


def parallel(x1: AffineSubspace, x2: AffineSubspace) -> bool:
    """Equality of direction spaces (equal-dimension translates)."""
    _check_same_space(x1, x2)
    return x1.direction == x2.direction


def translate_through(x: AffineSubspace, q: Sequence[QQ]) -> AffineSubspace:
    """The flat parallel to x that passes through q."""
    if len(q) != x.ambient_dim:
        raise InputError("point length differs from ambient dimension")
    return AffineSubspace.make(x.space, q, x.direction)
