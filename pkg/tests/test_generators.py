"""Seeded generators: determinism, exact dimensions, bound and form handling."""

import random

import pytest

from orthokernel.errors import InputError
from orthokernel.flats import contains, is_subflat, meet
from orthokernel.generators import (
    GenConfig,
    NAMED_FORMS,
    flat_between,
    form_label,
    gen_line_pair,
    gen_pair_with_meet_dim,
    gen_perp_to,
    gen_point,
    gen_subspace,
    rand_params,
    random_point_of,
    resolve_space,
    space_of,
    sub_flat,
    super_flat,
    trial_rng,
    tridiagonal_form,
)
from orthokernel.linalg import QQ, QuadraticSpace, bilinear_eval
from orthokernel.ortho import perp_g


# ---------------------------------------------------------------------------
# config and forms


def test_config_defaults_round_trip():
    cfg = GenConfig(dim=4)
    assert cfg.form == "identity"
    assert cfg.with_form("tridiag") == GenConfig(dim=4, form="tridiag")


@pytest.mark.parametrize(
    "kwargs",
    [
        {"dim": 0},
        {"dim": 3, "numerator_bound": 0},
        {"dim": 3, "denominator_bound": 0},
        {"dim": 3, "retries": 0},
        {"dim": 3, "sample_count": 0},
        {"dim": 3, "seed": -1},
        {"dim": 3, "seed": 2**64},
        {"dim": 3, "form": "hyperbolic"},
        {"dim": 3, "form": [["1", "0"], ["0", "1"]]},
    ],
)
def test_config_rejects_bad_values(kwargs):
    with pytest.raises(InputError):
        GenConfig(**kwargs)


def test_form_label():
    assert form_label("diag") == "diag"
    assert form_label((("1", "0"), ("0", "1"))) == "custom"


def test_tridiagonal_form_shape():
    m = tridiagonal_form(4)
    assert m[0] == (QQ(2), QQ(1), QQ(0), QQ(0))
    assert m[2] == (QQ(0), QQ(1), QQ(2), QQ(1))
    assert all(m[i][j] == m[j][i] for i in range(4) for j in range(4))


def test_resolve_named_forms():
    assert resolve_space(3, "identity") == QuadraticSpace.euclidean(3)
    assert resolve_space(3, "diag") == QuadraticSpace.diagonal(
        [QQ(1), QQ(2), QQ(3)]
    )
    assert resolve_space(3, "tridiag").form == tridiagonal_form(3)
    assert set(NAMED_FORMS) == {"identity", "diag", "tridiag"}


def test_resolve_custom_matrix_form():
    space = resolve_space(2, (("2", "1"), ("1", "2")))
    assert space.form == ((QQ(2), QQ(1)), (QQ(1), QQ(2)))


def test_resolve_rejects_indefinite_custom_form():
    with pytest.raises(InputError):
        resolve_space(2, (("1", "0"), ("0", "-1")))


def test_space_of_uses_config_form():
    assert space_of(GenConfig(dim=5, form="diag")) == resolve_space(5, "diag")


# ---------------------------------------------------------------------------
# per-trial seeding


def test_trial_rng_reproducible():
    a = trial_rng(7, "P-SYM", 12)
    b = trial_rng(7, "P-SYM", 12)
    assert [a.random() for _ in range(5)] == [b.random() for _ in range(5)]


def test_trial_rng_separates_coordinates():
    base = trial_rng(7, "P-SYM", 12).random()
    assert trial_rng(8, "P-SYM", 12).random() != base
    assert trial_rng(7, "P-TRANS", 12).random() != base
    assert trial_rng(7, "P-SYM", 13).random() != base


# ---------------------------------------------------------------------------
# points and flats


def test_gen_point_respects_bounds(rng):
    cfg = GenConfig(dim=3, numerator_bound=9, denominator_bound=3)
    for _ in range(200):
        p = gen_point(cfg, rng)
        assert len(p) == 3
        for c in p:
            assert abs(c.numerator) <= 9
            assert 1 <= c.denominator <= 3


def test_gen_subspace_exact_dimensions(rng):
    cfg = GenConfig(dim=4)
    for k in range(5):
        flat = gen_subspace(cfg, k, rng)
        assert flat.dim == k
        assert flat.ambient_dim == 4


def test_gen_subspace_rejects_out_of_range(rng):
    cfg = GenConfig(dim=3)
    with pytest.raises(InputError):
        gen_subspace(cfg, 4, rng)
    with pytest.raises(InputError):
        gen_subspace(cfg, -1, rng)


def test_gen_subspace_deterministic_per_seed():
    cfg = GenConfig(dim=4)
    a = gen_subspace(cfg, 2, random.Random(99))
    b = gen_subspace(cfg, 2, random.Random(99))
    assert a == b


def test_gen_pair_meet_dims(rng):
    cfg = GenConfig(dim=4)
    for k1, k2, m in [(2, 2, 1), (1, 1, 0), (2, 3, 1), (3, 3, 2), (0, 2, 0)]:
        a, b = gen_pair_with_meet_dim(cfg, k1, k2, m, rng)
        assert a.dim == k1 and b.dim == k2
        cut = meet(a, b)
        if m == 0:
            assert cut is not None and cut.dim == 0
        else:
            assert cut is not None and cut.dim == m


def test_gen_pair_full_overlap_is_equality(rng):
    cfg = GenConfig(dim=3)
    a, b = gen_pair_with_meet_dim(cfg, 1, 1, 1, rng)
    assert a == b


def test_gen_pair_infeasible_meet_dim(rng):
    cfg = GenConfig(dim=3)
    with pytest.raises(InputError):
        gen_pair_with_meet_dim(cfg, 2, 2, 0, rng)
    with pytest.raises(InputError):
        gen_pair_with_meet_dim(cfg, 2, 2, 3, rng)
    with pytest.raises(InputError):
        gen_pair_with_meet_dim(cfg, 4, 1, 0, rng)


def test_random_point_of_stays_inside(rng):
    cfg = GenConfig(dim=4)
    flat = gen_subspace(cfg, 2, rng)
    for _ in range(50):
        assert contains(flat, random_point_of(flat, rng))


def test_sub_flat_inclusion_and_anchor(rng):
    cfg = GenConfig(dim=4)
    outer = gen_subspace(cfg, 3, rng)
    q = random_point_of(outer, rng)
    inner = sub_flat(outer, 1, rng, through=q)
    assert inner.dim == 1
    assert is_subflat(inner, outer)
    assert contains(inner, q)
    with pytest.raises(InputError):
        sub_flat(outer, 4, rng)


def test_super_flat_inclusion(rng):
    cfg = GenConfig(dim=5)
    inner = gen_subspace(cfg, 1, rng)
    outer = super_flat(cfg, inner, 3, rng)
    assert outer.dim == 3
    assert is_subflat(inner, outer)
    assert super_flat(cfg, inner, 1, rng) == inner
    with pytest.raises(InputError):
        super_flat(cfg, inner, 0, rng)
    with pytest.raises(InputError):
        super_flat(cfg, inner, 6, rng)


def test_flat_between_chain(rng):
    cfg = GenConfig(dim=5)
    inner = gen_subspace(cfg, 1, rng)
    outer = super_flat(cfg, inner, 4, rng)
    mid = flat_between(cfg, inner, outer, 2, rng)
    assert mid.dim == 2
    assert is_subflat(inner, mid) and is_subflat(mid, outer)
    with pytest.raises(InputError):
        flat_between(cfg, inner, outer, 5, rng)


def test_gen_perp_to_realizes_requested_type(rng):
    cfg = GenConfig(dim=5)
    for _ in range(20):
        a = gen_subspace(cfg, 2, rng)
        q = random_point_of(a, rng)
        c = gen_perp_to(cfg, a, q, rng, m=1, k=2)
        cut = meet(a, c)
        assert cut is not None and cut.dim == 1
        assert contains(c, q)
        assert perp_g(c, a)


def test_gen_perp_to_validates_room(rng):
    cfg = GenConfig(dim=3)
    a = gen_subspace(cfg, 3, rng)
    with pytest.raises(InputError):
        gen_perp_to(cfg, a, a.point, rng)
    b = gen_subspace(cfg, 2, rng)
    with pytest.raises(InputError):
        gen_perp_to(cfg, b, random_point_of(b, rng), rng, m=0, k=3)


def test_rand_params_always_satisfiable(rng):
    for n in (2, 3, 4, 5, 6):
        for _ in range(50):
            params = rand_params(rng, n)
            assert params.satisfiable_in(n)
            assert 0 <= params.m < params.k1 <= params.k2
    with pytest.raises(InputError):
        rand_params(rng, 1)


def test_rand_params_honors_kmax(rng):
    for _ in range(50):
        params = rand_params(rng, 6, kmax=2)
        assert params.k2 <= 2


def test_gen_line_pair_orthogonality_flag(rng):
    cfg = GenConfig(dim=4, form="tridiag")
    space = space_of(cfg)
    for _ in range(20):
        l1, l2 = gen_line_pair(cfg, rng, orthogonal=True)
        assert l1.dim == l2.dim == 1
        assert (
            bilinear_eval(space, l1.direction.basis[0], l2.direction.basis[0])
            == 0
        )
    free = [gen_line_pair(cfg, rng, orthogonal=False) for _ in range(20)]
    assert all(a.dim == b.dim == 1 for a, b in free)


def test_pair_generator_deterministic_per_seed():
    cfg = GenConfig(dim=4)
    a = gen_pair_with_meet_dim(cfg, 2, 2, 1, random.Random(5))
    b = gen_pair_with_meet_dim(cfg, 2, 2, 1, random.Random(5))
    assert a == b


def test_point_flat_pair_shares_base(rng):
    cfg = GenConfig(dim=3)
    a, b = gen_pair_with_meet_dim(cfg, 0, 0, 0, rng)
    assert a == b and a.dim == 0
