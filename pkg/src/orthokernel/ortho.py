"""Orthogonality relations on affine flats, reflections, and witnesses.

All relations reduce to exact integer tests on direction bases.  The graded
relation on flats meeting in M is decided through the canonical witness
Z = orthocomplement of M inside one argument: any valid witness has its
direction inside the xi-complement of M's direction there, and the join
condition forces equality, so one deterministic check settles the relation
and no search is involved.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (
    GenerationError,
    InputError,
    PreconditionError,
    UnsatisfiableParams,
)
from .flats import (
    AffineSubspace,
    _check_same_space,
    _meet_parts,
    contains,
    is_subflat,
    meet,
)
from .linalg import (
    QQ,
    LinearSubspace,
    Matrix,
    QuadraticSpace,
    Vector,
    bilinear_eval,
    full_subspace,
    identity_matrix,
    mat_inverse,
    mat_mul,
    mat_vec,
    rref_basis,
    subspace_sum,
    vec_add,
    vec_sub,
    vector,
    xi_complement,
    zero_vector,
)

DEFAULT_RETRIES = 64


# ---------------------------------------------------------------------------
# the orthogonality relations


def perp_points(
    space: QuadraticSpace,
    a: Sequence[QQ],
    b: Sequence[QQ],
    c: Sequence[QQ],
    d: Sequence[QQ],
) -> bool:
    """Point-pair orthogonality: xi(b-a, d-c) = 0; degenerate pairs pass."""
    return bilinear_eval(space, vec_sub(vector(b), vector(a)), vec_sub(vector(d), vector(c))) == 0


def _perp_dirs(space: QuadraticSpace, d1: LinearSubspace, d2: LinearSubspace) -> bool:
    """Every direction of d1 xi-orthogonal to every direction of d2."""
    if d2.rank < d1.rank:
        d1, d2 = d2, d1
    form = space.int_form
    for v in d2.int_rows:
        fv = [sum(f * x for f, x in zip(row, v)) for row in form]
        for u in d1.int_rows:
            if sum(ui * fi for ui, fi in zip(u, fv) if ui):
                return False
    return True


def perp_subspaces(x: AffineSubspace, y: AffineSubspace) -> bool:
    """Direction-wise orthogonality; point flats are orthogonal to all."""
    _check_same_space(x, y)
    return _perp_dirs(x.space, x.direction, y.direction)


def perp_x(x: AffineSubspace, y: AffineSubspace) -> bool:
    """Orthogonal with a common point."""
    _check_same_space(x, y)
    return _perp_dirs(x.space, x.direction, y.direction) and _meet_parts(x, y) is not None


def orthocomplement_in(
    x: AffineSubspace, v: AffineSubspace, q: Sequence[QQ]
) -> AffineSubspace:
    """The maximal flat through q inside v that is perp-x to x.

    Requires x ⊆ v and q ∈ x.  A point flat complements to v itself; x = v
    complements to the single point q.
    """
    _check_same_space(x, v)
    if not is_subflat(x, v):
        raise PreconditionError("x must be a subflat of v")
    if not contains(x, q):
        raise PreconditionError("q must lie on x")
    direction = xi_complement(x.space, x.direction, v.direction)
    return AffineSubspace.make(x.space, q, direction)


def perp_go(x1: AffineSubspace, x2: AffineSubspace) -> bool:
    """Graded orthogonality without the non-inclusion constraint.

    False for disjoint flats.  Otherwise, with M the meet: the complement
    of M's direction inside x1's direction must be orthogonal to x2.
    """
    _check_same_space(x1, x2)
    parts = _meet_parts(x1, x2)
    if parts is None:
        return False
    _, dir_m = parts
    z1 = xi_complement(x1.space, dir_m, x1.direction)
    return _perp_dirs(x1.space, z1, x2.direction)


def perp_g(x1: AffineSubspace, x2: AffineSubspace) -> bool:
    """Graded orthogonality: perp_go with neither flat inside the other."""
    _check_same_space(x1, x2)
    parts = _meet_parts(x1, x2)
    if parts is None:
        return False
    _, dir_m = parts
    # meet = x_i exactly when dims agree, since meet ⊆ x_i always
    if dir_m.rank == x1.dim or dir_m.rank == x2.dim:
        return False
    z1 = xi_complement(x1.space, dir_m, x1.direction)
    return _perp_dirs(x1.space, z1, x2.direction)


@dataclass(frozen=True)
class TypedPerpParams:
    """Dimension type (m, k1, k2) of the graded relation."""

    m: int
    k1: int
    k2: int

    def __post_init__(self) -> None:
        if self.m < 0:
            raise InputError("m must be nonnegative")
        if not (self.m < self.k1 and self.m < self.k2):
            raise InputError("m must be strictly below both k1 and k2")

    def satisfiable_in(self, dim: int) -> bool:
        return self.k1 + self.k2 - self.m <= dim

    @property
    def swapped(self) -> "TypedPerpParams":
        return TypedPerpParams(self.m, self.k2, self.k1)


def perp_m(x1: AffineSubspace, x2: AffineSubspace, params: TypedPerpParams) -> bool:
    """perp_g restricted to dims (k1, k2) with meet of dimension m."""
    _check_same_space(x1, x2)
    if x1.dim != params.k1 or x2.dim != params.k2:
        return False
    parts = _meet_parts(x1, x2)
    if parts is None:
        return False
    _, dir_m = parts
    if dir_m.rank != params.m:
        return False
    # m < k1, k2 already rules out inclusions
    z1 = xi_complement(x1.space, dir_m, x1.direction)
    return _perp_dirs(x1.space, z1, x2.direction)


def orthoadjacent(x1: AffineSubspace, x2: AffineSubspace, k: int) -> bool:
    """The (k-1, k, k) instance of the typed relation."""
    if k < 1:
        raise InputError("k must be at least 1")
    return perp_m(x1, x2, TypedPerpParams(k - 1, k, k))


# ---------------------------------------------------------------------------
# reflections


@dataclass(frozen=True)
class AffineIsometry:
    """Affine map p ↦ A p + t whose linear part preserves the form."""

    space: QuadraticSpace
    matrix: Matrix
    translation: Vector

    def __post_init__(self) -> None:
        n = self.space.dim
        if len(self.matrix) != n or any(len(r) != n for r in self.matrix):
            raise InputError("matrix shape differs from ambient dimension")
        if len(self.translation) != n:
            raise InputError("translation length differs from ambient dimension")
        at = tuple(zip(*self.matrix))
        if mat_mul(mat_mul(at, self.space.form), self.matrix) != self.space.form:
            raise InputError("linear part does not preserve the form")

    @classmethod
    def identity(cls, space: QuadraticSpace) -> "AffineIsometry":
        return cls(space, identity_matrix(space.dim), zero_vector(space.dim))

    def apply(self, p: Sequence[QQ]) -> Vector:
        return tuple(
            x + t for x, t in zip(mat_vec(self.matrix, vector(p)), self.translation)
        )


def reflection(x: AffineSubspace) -> AffineIsometry:
    """The involutory isometry fixing the flat x pointwise.

    Linear part 2P - I, where P projects onto x's direction along its
    xi-complement: P = B^T (B F B^T)^{-1} B F for direction basis rows B.
    """
    space = x.space
    n = space.dim
    b = x.direction.basis
    if not b:
        proj = tuple((QQ(0),) * n for _ in range(n))
    else:
        bt = tuple(zip(*b))
        gram = mat_mul(mat_mul(b, space.form), bt)
        proj = mat_mul(mat_mul(bt, mat_inverse(gram)), mat_mul(b, space.form))
    ident = identity_matrix(n)
    a = tuple(
        tuple(2 * proj[i][j] - ident[i][j] for j in range(n)) for i in range(n)
    )
    q = x.point
    t = vec_sub(q, mat_vec(a, q))
    return AffineIsometry(space, a, t)


def isometry_compose(f: AffineIsometry, g: AffineIsometry) -> AffineIsometry:
    """Apply g first, then f."""
    if f.space != g.space:
        raise InputError("isometries live in different ambient spaces")
    a = mat_mul(f.matrix, g.matrix)
    t = tuple(
        x + y for x, y in zip(mat_vec(f.matrix, g.translation), f.translation)
    )
    return AffineIsometry(f.space, a, t)


def isometry_equal(f: AffineIsometry, g: AffineIsometry) -> bool:
    if f.space != g.space:
        raise InputError("isometries live in different ambient spaces")
    return f.matrix == g.matrix and f.translation == g.translation


def reflections_commute(x1: AffineSubspace, x2: AffineSubspace) -> bool:
    # compare the two composites on raw parts; composing through
    # isometry_compose would re-validate form preservation twice per call
    r1, r2 = reflection(x1), reflection(x2)
    if mat_mul(r1.matrix, r2.matrix) != mat_mul(r2.matrix, r1.matrix):
        return False
    t12 = vec_add(mat_vec(r1.matrix, r2.translation), r1.translation)
    t21 = vec_add(mat_vec(r2.matrix, r1.translation), r2.translation)
    return t12 == t21


# ---------------------------------------------------------------------------
# constructive witnesses


def _rand_fraction(rng: random.Random, num_bound: int, den_bound: int) -> QQ:
    return QQ(rng.randint(-num_bound, num_bound), rng.randint(1, den_bound))


def rand_point(
    space: QuadraticSpace,
    rng: random.Random,
    num_bound: int = 9,
    den_bound: int = 3,
) -> Vector:
    return tuple(
        _rand_fraction(rng, num_bound, den_bound) for _ in range(space.dim)
    )


def rand_subspace_of(
    w: LinearSubspace,
    k: int,
    rng: random.Random,
    retries: int = DEFAULT_RETRIES,
    coeff_bound: int = 3,
) -> LinearSubspace:
    """A random k-dimensional subspace of w (small integer combinations)."""
    if not 0 <= k <= w.rank:
        raise InputError(f"cannot draw a {k}-dimensional subspace of rank {w.rank}")
    if k == 0:
        from .linalg import zero_subspace

        return zero_subspace(w.ambient_dim)
    if k == w.rank:
        return w
    for _ in range(retries):
        vecs = []
        for _ in range(k):
            coeffs = [rng.randint(-coeff_bound, coeff_bound) for _ in range(w.rank)]
            vecs.append(
                tuple(
                    QQ(sum(c * row[j] for c, row in zip(coeffs, w.int_rows)))
                    for j in range(w.ambient_dim)
                )
            )
        cand = rref_basis(vecs, w.ambient_dim)
        if cand.rank == k:
            return cand
    raise GenerationError(f"no independent {k}-subspace after {retries} draws")


def make_perp_pair(
    space: QuadraticSpace,
    params: TypedPerpParams,
    rng: random.Random,
    num_bound: int = 9,
    den_bound: int = 3,
    retries: int = DEFAULT_RETRIES,
) -> tuple[AffineSubspace, AffineSubspace]:
    """A random pair in the typed relation, or a refusal when impossible.

    Build: common point q, meet flat M of dimension m through q, then Z1
    inside the xi-complement of M's direction and Z2 inside the
    xi-complement of that direction extended by Z1, so the two extensions
    are mutually orthogonal and meet M's direction trivially.
    """
    n = space.dim
    if not params.satisfiable_in(n):
        raise UnsatisfiableParams(
            f"k1 + k2 - m = {params.k1 + params.k2 - params.m} exceeds dimension {n}"
        )
    full = full_subspace(n)
    last_error = "exhausted retries"
    for _ in range(retries):
        q = rand_point(space, rng, num_bound, den_bound)
        try:
            dir_m = rand_subspace_of(full, params.m, rng, retries)
            comp1 = xi_complement(space, dir_m, full)
            z1 = rand_subspace_of(comp1, params.k1 - params.m, rng, retries)
            comp2 = xi_complement(space, subspace_sum(dir_m, z1), full)
            z2 = rand_subspace_of(comp2, params.k2 - params.m, rng, retries)
        except GenerationError as exc:
            last_error = str(exc)
            continue
        x1 = AffineSubspace.make(space, q, subspace_sum(dir_m, z1))
        x2 = AffineSubspace.make(space, q, subspace_sum(dir_m, z2))
        if perp_m(x1, x2, params):
            return x1, x2
        last_error = "constructed pair failed verification"
    raise GenerationError(f"make_perp_pair gave up: {last_error}")


def unique_complement(
    a: AffineSubspace, b: AffineSubspace, c: AffineSubspace
) -> AffineSubspace:
    """The unique b' with b ∩ b' = a, b perp-g b', b ⊔ b' = c.

    Requires the strict chain a ⊊ b ⊊ c.  The complement is a joined with
    the orthocomplement of b in c through a point of a.
    """
    _check_same_space(a, b)
    _check_same_space(b, c)
    if not (is_subflat(a, b) and a.dim < b.dim):
        raise PreconditionError("need a strictly inside b")
    if not (is_subflat(b, c) and b.dim < c.dim):
        raise PreconditionError("need b strictly inside c")
    q = a.point
    z = orthocomplement_in(b, c, q)
    direction = subspace_sum(a.direction, z.direction)
    return AffineSubspace.make(a.space, q, direction)
