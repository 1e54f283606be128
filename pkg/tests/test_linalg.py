"""Exact linear algebra: canonical bases, solving, forms, complements."""

from fractions import Fraction as QQ

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orthokernel.errors import InputError, PreconditionError
from orthokernel.linalg import (
    QuadraticSpace,
    bilinear_eval,
    determinant,
    format_scalar,
    full_subspace,
    is_positive_definite,
    is_symmetric,
    mat_inverse,
    mat_mul,
    matrix_from_wire,
    matrix_to_wire,
    rref_basis,
    scalar,
    solve_affine,
    solve_unique,
    subspace_intersect,
    subspace_sum,
    vector_from_wire,
    vector_to_wire,
    xi_complement,
    zero_subspace,
)

from conftest import qv

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def vec_strategy(n):
    return st.lists(rationals, min_size=n, max_size=n).map(tuple)


def vecs_strategy(n, max_count=4):
    return st.lists(vec_strategy(n), min_size=0, max_size=max_count)


# ---------------------------------------------------------------------------
# scalars and wire format


def test_scalar_parses_wire_strings():
    assert scalar("-3/7") == QQ(-3, 7)
    assert scalar("4") == QQ(4)
    assert scalar(QQ(1, 2)) == QQ(1, 2)


def test_format_scalar_omits_unit_denominator():
    assert format_scalar(QQ(-3, 7)) == "-3/7"
    assert format_scalar(QQ(8, 2)) == "4"


def test_vector_wire_round_trip():
    v = qv("1/2", -3, 0)
    assert vector_from_wire(vector_to_wire(v)) == v


def test_matrix_wire_round_trip():
    m = ((QQ(2), QQ(1)), (QQ(1), QQ(2)))
    assert matrix_from_wire(matrix_to_wire(m)) == m


def test_scalar_rejects_garbage():
    with pytest.raises(InputError):
        scalar("one half")


# ---------------------------------------------------------------------------
# rref_basis


def test_rref_scales_to_pivots():
    sub = rref_basis([qv(2, 0), qv(0, 3)], 2)
    assert sub.basis == (qv(1, 0), qv(0, 1))


def test_rref_collapses_dependent_rows():
    sub = rref_basis([qv(1, 1), qv(2, 2)], 2)
    assert sub.basis == (qv(1, 1),)


def test_rref_empty_input_is_zero_space():
    sub = rref_basis([], 3)
    assert sub.rank == 0 and sub.basis == ()


def test_rref_rejects_length_mismatch():
    with pytest.raises(InputError):
        rref_basis([qv(1, 0, 0)], 2)


@given(vecs_strategy(3))
def test_rref_idempotent(vectors):
    sub = rref_basis(vectors, 3)
    assert rref_basis(sub.basis, 3) == sub


@given(vecs_strategy(3))
def test_rref_preserves_span(vectors):
    sub = rref_basis(vectors, 3)
    assert all(sub.contains_vector(v) for v in vectors)
    original = rref_basis(list(vectors) + list(sub.basis), 3)
    assert original == sub


@given(vecs_strategy(4, 3), vecs_strategy(4, 3))
def test_grassmann_dimension_formula(us, vs):
    a = rref_basis(us, 4)
    b = rref_basis(vs, 4)
    total = subspace_sum(a, b)
    common = subspace_intersect(a, b)
    assert total.rank + common.rank == a.rank + b.rank


# ---------------------------------------------------------------------------
# solve_affine


def test_solve_identity_system():
    sol = solve_affine(((QQ(1), QQ(0)), (QQ(0), QQ(1))), qv(3, 4))
    assert sol.point == qv(3, 4) and sol.kernel.rank == 0


def test_solve_underdetermined_system():
    sol = solve_affine(((QQ(1), QQ(1)),), qv(1))
    assert sol.point == qv(1, 0)
    assert sol.kernel.basis == (qv(1, -1),)


def test_solve_inconsistent_system():
    assert solve_affine(((QQ(1), QQ(0)), (QQ(1), QQ(0))), qv(0, 1)) is None


def test_solve_rejects_shape_mismatch():
    with pytest.raises(InputError):
        solve_affine(((QQ(1), QQ(0)),), qv(1, 2))


def test_solve_unique_requires_zero_kernel():
    with pytest.raises(PreconditionError):
        solve_unique(((QQ(1), QQ(1)),), qv(1))


@given(
    st.lists(vec_strategy(3), min_size=1, max_size=3),
    vec_strategy(3),
)
def test_solve_round_trip(rows, x):
    b = tuple(sum(r[j] * x[j] for j in range(3)) for r in rows)
    sol = solve_affine(rows, b)
    assert sol is not None
    assert all(
        sum(r[j] * sol.point[j] for j in range(3)) == bi for r, bi in zip(rows, b)
    )
    # the full solution set is point + kernel, so x must reduce into it
    diff = tuple(xi - pi for xi, pi in zip(x, sol.point))
    assert sol.kernel.contains_vector(diff)


# ---------------------------------------------------------------------------
# determinants and inverses


def _cofactor_det(m):
    n = len(m)
    if n == 0:
        return QQ(1)
    if n == 1:
        return m[0][0]
    total = QQ(0)
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        term = m[0][j] * _cofactor_det(minor)
        total += term if j % 2 == 0 else -term
    return total


@given(st.lists(st.lists(rationals, min_size=3, max_size=3), min_size=3, max_size=3))
def test_determinant_matches_cofactor_expansion(rows):
    rows = [tuple(r) for r in rows]
    assert determinant(rows) == _cofactor_det(rows)


def test_inverse_round_trip():
    m = ((QQ(2), QQ(1)), (QQ(1), QQ(2)))
    ident = ((QQ(1), QQ(0)), (QQ(0), QQ(1)))
    assert mat_mul(m, mat_inverse(m)) == ident


def test_inverse_rejects_singular():
    with pytest.raises(PreconditionError):
        mat_inverse(((QQ(1), QQ(2)), (QQ(2), QQ(4))))


# ---------------------------------------------------------------------------
# bilinear forms


def test_bilinear_identity_off_diagonal(q3):
    assert bilinear_eval(q3, qv(1, 0, 0), qv(0, 1, 0)) == 0


def test_bilinear_identity_dot_product(q2):
    assert bilinear_eval(q2, qv(1, 2), qv(3, 4)) == 11


def test_bilinear_weighted_diagonal():
    space = QuadraticSpace.diagonal([QQ(1), QQ(2)])
    assert bilinear_eval(space, qv(0, 1), qv(0, 1)) == 2


@given(vec_strategy(3), vec_strategy(3))
def test_bilinear_symmetric(u, v):
    space = QuadraticSpace(3, ((QQ(2), QQ(1), QQ(0)), (QQ(1), QQ(2), QQ(1)), (QQ(0), QQ(1), QQ(2))))
    assert bilinear_eval(space, u, v) == bilinear_eval(space, v, u)


def test_bilinear_rejects_length_mismatch(q3):
    with pytest.raises(InputError):
        bilinear_eval(q3, qv(1, 0), qv(0, 1, 0))


# ---------------------------------------------------------------------------
# positive definiteness and space construction


def test_identity_is_positive_definite():
    assert is_positive_definite(tuple(tuple(QQ(int(i == j)) for j in range(3)) for i in range(3)))


def test_indefinite_diagonal_rejected():
    assert not is_positive_definite(((QQ(1), QQ(0)), (QQ(0), QQ(-1))))


def test_sylvester_minors_example():
    assert is_positive_definite(((QQ(2), QQ(1)), (QQ(1), QQ(2))))


def test_is_positive_definite_rejects_asymmetric():
    with pytest.raises(InputError):
        is_positive_definite(((QQ(1), QQ(2)), (QQ(0), QQ(1))))


def test_space_rejects_indefinite_form():
    with pytest.raises(InputError):
        QuadraticSpace(2, ((QQ(1), QQ(0)), (QQ(0), QQ(-1))))


def test_space_rejects_asymmetric_form():
    with pytest.raises(InputError):
        QuadraticSpace(2, ((QQ(1), QQ(2)), (QQ(0), QQ(1))))


def test_is_symmetric_detects_ragged():
    assert not is_symmetric(((QQ(1), QQ(0)),))


# ---------------------------------------------------------------------------
# xi_complement


def test_complement_of_axis_in_full_space(q3):
    d = rref_basis([qv(1, 0, 0)], 3)
    comp = xi_complement(q3, d, full_subspace(3))
    assert comp.basis == (qv(0, 1, 0), qv(0, 0, 1))


def test_complement_of_whole_space_is_zero(q3):
    w = rref_basis([qv(1, 1, 0), qv(0, 0, 1)], 3)
    assert xi_complement(q3, w, w).rank == 0


def test_complement_of_zero_is_everything(q3):
    w = rref_basis([qv(1, 1, 0), qv(0, 0, 1)], 3)
    assert xi_complement(q3, zero_subspace(3), w) == w


def test_complement_requires_containment(q3):
    d = rref_basis([qv(1, 0, 0)], 3)
    w = rref_basis([qv(0, 1, 0)], 3)
    with pytest.raises(PreconditionError):
        xi_complement(q3, d, w)


@settings(max_examples=60)
@given(vecs_strategy(4, 3), vecs_strategy(4, 2))
def test_complement_dimension_and_involution(ws, extra):
    space = QuadraticSpace(4, tuple(
        tuple(QQ(2) if i == j else QQ(1) if abs(i - j) == 1 else QQ(0) for j in range(4))
        for i in range(4)
    ))
    w = rref_basis(ws, 4)
    d = rref_basis(list(extra) + list(w.basis[: max(0, w.rank - 1)]), 4)
    d = subspace_intersect(d, w)
    comp = xi_complement(space, d, w)
    assert comp.rank + d.rank == w.rank
    assert subspace_intersect(comp, d).rank == 0
    assert xi_complement(space, comp, w) == d
