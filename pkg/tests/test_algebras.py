import numpy as np
import pytest

from liecert import algebras as al
from liecert import linalg as la
from liecert import octonion as oc


@pytest.mark.parametrize(
    "ctor,n,expected",
    [
        (al.make_so, 7, 21),
        (al.make_so, 9, 36),
        (al.make_su, 4, 15),
        (al.make_su, 2, 3),
        (al.make_sp, 2, 10),
        (al.make_sp, 3, 21),
        (al.make_u, 2, 4),
        (al.make_u, 4, 16),
    ],
)
def test_classical_dimensions(ctor, n, expected):
    alg = ctor(n)
    assert alg.dim == expected
    al.validate_realization(alg)


def test_zero_rank_rejected():
    with pytest.raises(ValueError):
        al.make_so(0)
    with pytest.raises(ValueError):
        al.make_su(0)


def test_su2_inside_u2():
    su2 = al.make_su(2)
    u2 = al.make_u(2)
    assert all(u2.subspace.contains(B) for B in su2.subspace.basis)
    comp = la.orthogonal_complement(su2.subspace, u2.subspace)
    assert comp.dim == 1
    # the complement is the complex-structure element i*Id
    J = al.realify_complex(1j * np.eye(2))
    assert comp.residual(J) < 1e-9 * np.linalg.norm(J)


def test_embed_block():
    so3 = al.make_so(3)
    emb = al.embed_block(so3, 5, 0)
    assert emb.dim == 3
    # brackets close inside the image
    assert la.closure_residual(emb.subspace) < 1e-12
    # Q is preserved verbatim
    for a in range(3):
        for b in range(3):
            lhs = la.inner_product(emb.subspace.basis[a], emb.subspace.basis[b])
            rhs = la.inner_product(so3.subspace.basis[a], so3.subspace.basis[b])
            assert lhs == pytest.approx(rhs, abs=1e-12)
    with pytest.raises(ValueError):
        al.embed_block(so3, 5, 3)


def test_embed_block_octonion_indices():
    # index bookkeeping: the octonion block keeps its coordinates, extra
    # directions become addressable
    f = oc.triality_frame()
    emb = al.embed_subspace(f.g2, 12, 0)
    assert emb.dim == 14
    for B in emb.basis:
        assert np.max(np.abs(B[8:, :])) < 1e-12


def test_su4_as_so6_dimensions():
    img, mapping = al.su4_as_so6()
    assert img.dim == 15
    assert img.ambient_dim == 6


def test_su4_as_so6_bracket_preserving(rng):
    _, mapping = al.su4_as_so6()
    su4 = al.make_su(4)
    worst = 0.0
    for _ in range(50):
        X = su4.subspace.element(rng.standard_normal(15))
        Y = su4.subspace.element(rng.standard_normal(15))
        worst = max(
            worst,
            np.linalg.norm(mapping(la.bracket(X, Y)) - la.bracket(mapping(X), mapping(Y))),
        )
    assert worst < 1e-9


def test_su4_as_so6_injective(rng):
    _, mapping = al.su4_as_so6()
    su4 = al.make_su(4)
    images = [mapping(B).reshape(-1) for B in su4.subspace.basis]
    assert np.linalg.matrix_rank(np.stack(images), tol=1e-9) == 15


def test_su3_image_dimension():
    su3_c = [np.pad(M, ((0, 1), (0, 1))) for M in al.su_complex_basis(3)]
    img = la.orthonormalize([al.su4_complex_to_so6(M) for M in su3_c])
    assert img.dim == 8


def test_sp2_image_is_a_conjugate_so5():
    imgs = [al.su4_complex_to_so6(M) for M in al.sp2_complex_basis()]
    sub = la.orthonormalize(imgs)
    assert sub.dim == 10
    assert la.closure_residual(sub) < 1e-9
    # rank + closure oracle: a copy of so(5) in so(6) fixes a line
    stacked = np.concatenate(list(sub.basis), axis=0)
    assert 6 - np.linalg.matrix_rank(stacked, tol=1e-9) == 1


def test_spin7_realization():
    spin7 = al.spin7_in_so8()
    assert spin7.dim == 21
    f = oc.triality_frame()
    common = la.intersect(spin7.subspace, f.g2)
    assert common.dim == 14


def test_g2_sp2_frame_relations():
    E0, Ep, Em, sp1_1, h2 = al.g2_sp2_frame()
    assert sp1_1.dim == 3 and h2.dim == 8
    assert la.norm(la.bracket(E0, Ep) - 2.0 * Em) < 1e-10
    assert la.norm(la.bracket(E0, Em) + 2.0 * Ep) < 1e-10
    assert la.norm(la.bracket(Ep, Em) - 2.0 * E0) < 1e-10
    # the two sp(1) factors commute
    worst = max(
        la.norm(la.bracket(a, b))
        for a in sp1_1.basis
        for b in (E0, Ep, Em)
    )
    assert worst < 1e-10


def test_literal_quaternionic_matrices_as_oracle():
    # the displayed 2x2 quaternionic matrices, expanded to 8x8, satisfy the
    # same relations; they are the independent oracle for the frame
    E0, Ep, Em = al.sp2_weight3_matrices()
    assert la.norm(la.bracket(E0, Ep) - 2.0 * Em) < 1e-12
    assert la.norm(la.bracket(E0, Em) + 2.0 * Ep) < 1e-12
    assert la.norm(la.bracket(Ep, Em) - 2.0 * E0) < 1e-12
    # and they commute with right scalar multiplication
    for q in ([0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]):
        R = np.kron(np.eye(2), al.quat_right_matrix(np.array(q, dtype=float)))
        for X in (E0, Ep, Em):
            assert la.norm(la.bracket(X, R)) < 1e-12


def test_g2_so4_frame_structure():
    fr = al.g2_so4_frame()
    assert (fr.so4.dim, fr.su2_1.dim, fr.su2_3.dim, fr.h2.dim) == (6, 3, 3, 8)
    assert abs(fr.lam) > 1e-3
    # e1 is killed by the matched combination
    assert la.norm(la.bracket(fr.E0 - 3.0 * fr.s_hat, fr.e1)) < 1e-9
    # [e1, e2] is a pure multiple of E_plus
    assert la.norm(la.bracket(fr.e1, fr.e2) - fr.lam * fr.E_plus) < 1e-9
    # weight-one factor acts isotropically on the symmetric complement
    M = np.stack(
        [fr.h2.coefficients(la.bracket(fr.s_hat, B)) for B in fr.h2.basis], axis=1
    )
    assert np.max(np.abs(M @ M + np.eye(8))) < 1e-9


def test_g2_su2_product_frame():
    pr = al.g2_su2_product()
    assert pr.ambient_dim == 11
    assert (pr.g.dim, pr.k.dim, pr.h.dim) == (17, 6, 3)
    assert la.closure_residual(pr.g) < 1e-9
    assert la.norm(la.bracket(pr.s_elem, pr.E_minus)) < 1e-9
    assert la.norm(la.bracket(pr.E0 - 3 * pr.s_elem, pr.e1)) < 1e-9


def test_realization_registry():
    assert al.realization("so(9)").dim == 36
    assert al.realization("su(4)<so(6)").dim == 15
    assert al.realization("spin7+<so(8)").dim == 21
    assert al.realization("g2<so(8)").dim == 14
    with pytest.raises(KeyError):
        al.realization("e8(8)")
