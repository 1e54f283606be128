"""Seeded random instance generation for the property harness.

Every draw is a pure function of a `random.Random` token, and per-trial
tokens are derived by hashing (master seed, property id, trial index), so
suites are order- and parallelism-independent.  Generators with restrictive
targets build instances constructively (shared meet flat plus independent
extensions, complements inside precomputed orthogonal spaces) rather than
rejection-sampling the whole configuration space.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

from .errors import GenerationError, InputError
from .flats import AffineSubspace
from .linalg import (
    QQ,
    LinearSubspace,
    QuadraticSpace,
    Vector,
    full_subspace,
    matrix_from_wire,
    rref_basis,
    subspace_sum,
    xi_complement,
)
from .ortho import (
    DEFAULT_RETRIES,
    TypedPerpParams,
    rand_point,
    rand_subspace_of,
)

NAMED_FORMS = ("identity", "diag", "tridiag")

FormSpec = Union[str, tuple]


@dataclass(frozen=True)
class GenConfig:
    """Shared knobs for the random generators and the property runner."""

    dim: int
    form: FormSpec = "identity"
    numerator_bound: int = 9
    denominator_bound: int = 3
    seed: int = 0
    retries: int = DEFAULT_RETRIES
    perp_params: Optional[TypedPerpParams] = None
    sample_count: int = 20

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise InputError("dim must be positive")
        if self.numerator_bound < 1 or self.denominator_bound < 1:
            raise InputError("coordinate bounds must be at least 1")
        if self.retries < 1:
            raise InputError("retries must be at least 1")
        if self.sample_count < 1:
            raise InputError("sample_count must be at least 1")
        if not 0 <= self.seed < 2**64:
            raise InputError("seed must fit in 64 unsigned bits")
        if isinstance(self.form, str):
            if self.form not in NAMED_FORMS:
                raise InputError(
                    f"unknown form name {self.form!r}; use one of {NAMED_FORMS}"
                )
        elif not isinstance(self.form, tuple):
            raise InputError("form must be a name or a matrix of rational strings")

    def with_form(self, form: FormSpec) -> "GenConfig":
        return GenConfig(
            dim=self.dim,
            form=form,
            numerator_bound=self.numerator_bound,
            denominator_bound=self.denominator_bound,
            seed=self.seed,
            retries=self.retries,
            perp_params=self.perp_params,
            sample_count=self.sample_count,
        )


def form_label(form: FormSpec) -> str:
    return form if isinstance(form, str) else "custom"


def tridiagonal_form(n: int) -> tuple[tuple[QQ, ...], ...]:
    """2 on the diagonal, 1 off: positive definite in every dimension."""
    return tuple(
        tuple(QQ(2) if i == j else QQ(1) if abs(i - j) == 1 else QQ(0) for j in range(n))
        for i in range(n)
    )


@lru_cache(maxsize=None)
def resolve_space(dim: int, form: FormSpec) -> QuadraticSpace:
    if form == "identity":
        return QuadraticSpace.euclidean(dim)
    if form == "diag":
        return QuadraticSpace.diagonal([QQ(i) for i in range(1, dim + 1)])
    if form == "tridiag":
        return QuadraticSpace(dim, tridiagonal_form(dim))
    return QuadraticSpace.from_matrix(matrix_from_wire(form))


def space_of(cfg: GenConfig) -> QuadraticSpace:
    return resolve_space(cfg.dim, cfg.form)


def trial_rng(master_seed: int, property_id: str, trial: int) -> random.Random:
    digest = hashlib.sha256(f"{master_seed}:{property_id}:{trial}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


# ---------------------------------------------------------------------------
# flat generators


def gen_point(cfg: GenConfig, rng: random.Random) -> Vector:
    return rand_point(
        space_of(cfg), rng, cfg.numerator_bound, cfg.denominator_bound
    )


def _rand_int_vector(n: int, rng: random.Random, bound: int) -> Vector:
    return tuple(QQ(rng.randint(-bound, bound)) for _ in range(n))


def gen_subspace(cfg: GenConfig, k: int, rng: random.Random) -> AffineSubspace:
    """A random flat of exact dimension k."""
    space = space_of(cfg)
    n = space.dim
    if not 0 <= k <= n:
        raise InputError(f"dimension {k} out of range for ambient {n}")
    direction = rand_subspace_of(full_subspace(n), k, rng, cfg.retries)
    return AffineSubspace.make(space, gen_point(cfg, rng), direction)


def gen_pair_with_meet_dim(
    cfg: GenConfig, k1: int, k2: int, m: int, rng: random.Random
) -> tuple[AffineSubspace, AffineSubspace]:
    """A flat pair with prescribed dimensions meeting in dimension m.

    Built as a shared m-flat plus independent direction extensions; draws
    whose ranks collapse are rejected and retried.
    """
    space = space_of(cfg)
    n = space.dim
    if not (0 <= k1 <= n and 0 <= k2 <= n):
        raise InputError("flat dimensions out of range")
    if not max(0, k1 + k2 - n) <= m <= min(k1, k2):
        raise InputError(f"meet dimension {m} infeasible for ({k1}, {k2}) in Q^{n}")
    full = full_subspace(n)
    for _ in range(cfg.retries):
        dir_m = rand_subspace_of(full, m, rng, cfg.retries)
        ext1 = [_rand_int_vector(n, rng, 3) for _ in range(k1 - m)]
        ext2 = [_rand_int_vector(n, rng, 3) for _ in range(k2 - m)]
        d1 = subspace_sum(dir_m, rref_basis(ext1, n))
        d2 = subspace_sum(dir_m, rref_basis(ext2, n))
        if d1.rank != k1 or d2.rank != k2:
            continue
        if subspace_sum(d1, d2).rank != k1 + k2 - m:
            continue
        p = gen_point(cfg, rng)
        return (
            AffineSubspace.make(space, p, d1),
            AffineSubspace.make(space, p, d2),
        )
    raise GenerationError(
        f"no pair with meet dimension {m} after {cfg.retries} draws"
    )


def random_point_of(flat: AffineSubspace, rng: random.Random, bound: int = 3) -> Vector:
    """A random member point: base plus a small combination of directions."""
    p = list(flat.point)
    for row in flat.direction.int_rows:
        c = rng.randint(-bound, bound)
        if c:
            p = [x + c * y for x, y in zip(p, row)]
    return tuple(p)


def sub_flat(
    flat: AffineSubspace, k: int, rng: random.Random, through: Optional[Vector] = None
) -> AffineSubspace:
    """A random k-dimensional subflat, optionally through a given point."""
    if not 0 <= k <= flat.dim:
        raise InputError(f"cannot take a {k}-dimensional subflat of dim {flat.dim}")
    base = through if through is not None else random_point_of(flat, rng)
    return AffineSubspace.make(
        flat.space, base, rand_subspace_of(flat.direction, k, rng)
    )


def super_flat(
    cfg: GenConfig, flat: AffineSubspace, k: int, rng: random.Random
) -> AffineSubspace:
    """A random k-dimensional flat containing the given one."""
    n = flat.ambient_dim
    if not flat.dim <= k <= n:
        raise InputError(f"cannot extend a dim-{flat.dim} flat to dimension {k}")
    for _ in range(cfg.retries):
        ext = [_rand_int_vector(n, rng, 3) for _ in range(k - flat.dim)]
        direction = subspace_sum(flat.direction, rref_basis(ext, n))
        if direction.rank == k:
            return AffineSubspace.make(flat.space, flat.point, direction)
    raise GenerationError(f"no rank-{k} extension after {cfg.retries} draws")


def flat_between(
    cfg: GenConfig,
    inner: AffineSubspace,
    outer: AffineSubspace,
    k: int,
    rng: random.Random,
) -> AffineSubspace:
    """A random k-flat C with inner ⊆ C ⊆ outer (inner must sit in outer)."""
    if not inner.dim <= k <= outer.dim:
        raise InputError("dimension outside the inclusion interval")
    for _ in range(cfg.retries):
        extra = rand_subspace_of(outer.direction, k - inner.dim, rng)
        direction = subspace_sum(inner.direction, extra)
        if direction.rank == k:
            return AffineSubspace.make(inner.space, inner.point, direction)
    raise GenerationError(f"no rank-{k} intermediate flat after {cfg.retries} draws")


def gen_perp_to(
    cfg: GenConfig,
    a: AffineSubspace,
    q: Vector,
    rng: random.Random,
    m: Optional[int] = None,
    k: Optional[int] = None,
) -> AffineSubspace:
    """A flat C through q with A ∩ C of dimension m and C perp-g A.

    C's direction is an m-dimensional piece of A's direction extended inside
    the xi-complement of A's whole direction, which makes the complement of
    the meet inside C orthogonal to all of A.  Requires q ∈ A, dim(A) ≥ 1,
    and head room dim(A) < n.
    """
    space = a.space
    n = space.dim
    room = n - a.dim
    if room < 1:
        raise InputError("ambient space leaves no orthogonal head room")
    if m is None:
        m = rng.randint(0, a.dim - 1)
    if k is None:
        k = rng.randint(m + 1, m + room)
    if not (0 <= m < min(k, a.dim) and k - m <= room):
        raise InputError(f"infeasible perp draw (m={m}, k={k}) against dim {a.dim}")
    dir_m = rand_subspace_of(a.direction, m, rng, cfg.retries)
    comp = xi_complement(space, a.direction, full_subspace(n))
    wing = rand_subspace_of(comp, k - m, rng, cfg.retries)
    return AffineSubspace.make(space, q, subspace_sum(dir_m, wing))


def rand_params(rng: random.Random, n: int, kmax: Optional[int] = None) -> TypedPerpParams:
    """A uniform-ish satisfiable dimension type for ambient dimension n."""
    if n < 2:
        raise InputError("typed pairs need ambient dimension at least 2")
    top = min(n - 1, kmax) if kmax is not None else n - 1
    k1 = rng.randint(1, top)
    k2 = rng.randint(k1, top)
    m = rng.randint(max(0, k1 + k2 - n), k1 - 1)
    return TypedPerpParams(m, k1, k2)


def gen_line_pair(
    cfg: GenConfig, rng: random.Random, orthogonal: bool
) -> tuple[AffineSubspace, AffineSubspace]:
    """Two random lines, orthogonal on demand (possibly skew either way)."""
    space = space_of(cfg)
    n = space.dim
    full = full_subspace(n)
    d1 = rand_subspace_of(full, 1, rng, cfg.retries)
    if orthogonal:
        d2 = rand_subspace_of(
            xi_complement(space, d1, full), 1, rng, cfg.retries
        )
    else:
        d2 = rand_subspace_of(full, 1, rng, cfg.retries)
    l1 = AffineSubspace.make(space, gen_point(cfg, rng), d1)
    l2 = AffineSubspace.make(space, gen_point(cfg, rng), d2)
    return l1, l2
