import numpy as np
import pytest

from liecert import linalg as la
from liecert import octonion as oc

# quaternion multiplication table oracle for the first four basis octonions
QUAT_TABLE = {
    ("i", "j"): "k",
    ("j", "k"): "i",
    ("k", "i"): "j",
}
IDX = {name: a for a, name in enumerate(oc.OCT_BASIS_NAMES)}


def unit(name):
    return oc.Octonion.unit(IDX[name])


def test_unit_element():
    one = unit("1")
    for name in oc.OCT_BASIS_NAMES:
        x = unit(name)
        assert np.allclose((one * x).coords, x.coords)
        assert np.allclose((x * one).coords, x.coords)


def test_quaternion_table():
    for (a, b), c in QUAT_TABLE.items():
        assert np.allclose((unit(a) * unit(b)).coords, unit(c).coords)
        assert np.allclose((unit(b) * unit(a)).coords, -unit(c).coords)
    for a in ("i", "j", "k", "e"):
        assert np.allclose((unit(a) * unit(a)).coords, -unit("1").coords)


def test_norm_multiplicative(rng):
    for _ in range(30):
        a = oc.Octonion(rng.standard_normal(8))
        b = oc.Octonion(rng.standard_normal(8))
        assert (a * b).norm() == pytest.approx(a.norm() * b.norm(), rel=1e-10)


def test_alternative(rng):
    for _ in range(30):
        a = oc.Octonion(rng.standard_normal(8))
        b = oc.Octonion(rng.standard_normal(8))
        lhs = a * (a * b)
        rhs = (a * a) * b
        assert np.allclose(lhs.coords, rhs.coords, atol=1e-10)


def test_left_mult_matrix():
    Li = oc.left_mult(unit("i"))
    # first column is i itself
    assert np.allclose(Li[:, 0], unit("i").coords)
    # alternativity makes the square -Id (matrix-square oracle)
    assert np.allclose(Li @ Li, -np.eye(8), atol=1e-12)
    assert la.is_skew(Li)


def test_mult_operator_requires_imaginary():
    with pytest.raises(ValueError):
        oc.left_mult(unit("1"))
    with pytest.raises(ValueError):
        oc.right_mult(oc.Octonion([1, 2, 0, 0, 0, 0, 0, 0]))


def test_principal_angle_between_multiplication_families():
    f = oc.triality_frame()
    angles = la.principal_angles(f.v_l, f.v_r)
    assert np.max(np.abs(angles - np.pi / 3)) < 1e-9


def test_derivation_algebra():
    g2 = oc.derivation_algebra()
    assert g2.dim == 14
    # derivations kill the unit
    for A in g2.basis:
        assert np.linalg.norm(A[:, 0]) < 1e-10
    assert la.closure_residual(g2) < 1e-9


def test_frame_dimensions_and_closure():
    f = oc.triality_frame()
    for sub in (f.so7_0, f.so7_plus, f.so7_minus):
        assert sub.dim == 21
        assert la.closure_residual(sub) < 1e-9
    for sub in (f.m0, f.s0, f.m_plus, f.s_plus, f.m_minus, f.s_minus, f.v_l, f.v_r):
        assert sub.dim == 7


def test_direct_sum_decomposition():
    f = oc.triality_frame()
    blocks = np.concatenate([f.g2.flat, f.v_l.flat, f.v_r.flat], axis=0)
    assert np.linalg.matrix_rank(blocks, tol=1e-9) == 28
    assert la.intersect(f.g2, f.v_l).dim == 0
    assert la.intersect(f.g2, f.v_r).dim == 0
    assert la.intersect(f.v_l, f.v_r).dim == 0


def test_pairwise_intersections_are_g2():
    f = oc.triality_frame()
    for A, B in [(f.so7_0, f.so7_plus), (f.so7_0, f.so7_minus), (f.so7_plus, f.so7_minus)]:
        common = la.intersect(A, B)
        assert common.dim == 14
        for C in common.basis:
            assert f.g2.residual(C) < 1e-8


def test_orthogonal_splittings():
    f = oc.triality_frame()
    for m, s in [(f.m0, f.s0), (f.m_plus, f.s_plus), (f.m_minus, f.s_minus)]:
        assert np.max(np.abs(m.flat @ s.flat.T)) < 1e-10


def test_unit_stabilizer_annihilates_one():
    f = oc.triality_frame()
    for A in f.so7_0.basis:
        assert np.linalg.norm(A[:, 0]) < 1e-10


def test_mixed_commutator_identity():
    # [L_i, R_j] vanishes on the quaternions and doubles left-multiplication
    # by k on the doubled half
    Li = oc.left_mult(unit("i"))
    Rj = oc.right_mult(unit("j"))
    Lk = oc.left_mult(unit("k"))
    B = la.bracket(Li, Rj)
    assert np.max(np.abs(B[:4, :4])) < 1e-12
    assert np.max(np.abs(B[np.ix_(range(4, 8), range(4, 8))] - 2 * Lk[np.ix_(range(4, 8), range(4, 8))])) < 1e-10
    assert np.max(np.abs(B[:4, 4:])) < 1e-12


def test_frame_invariance_under_g2():
    f = oc.triality_frame()
    for inv in (f.m0, f.s0, f.m_plus, f.s_plus, f.m_minus, f.s_minus):
        worst = 0.0
        for A in f.g2.basis[:5]:
            for B in inv.basis:
                worst = max(worst, inv.residual(la.bracket(A, B)))
        assert worst < 1e-9


def test_decompose_in_frame_roundtrip(rng):
    X = rng.standard_normal((8, 8))
    X = X - X.T
    parts = oc.decompose_in_frame(X)
    assert np.allclose(parts["g2"] + parts["v_l"] + parts["v_r"], X, atol=1e-9)


def test_spin_copies_act_transitively(rng):
    # orbit-tangent rank oracle: {Av : A in so7_plus} has dimension 7 for
    # generic unit v
    f = oc.triality_frame()
    v = rng.standard_normal(8)
    v /= np.linalg.norm(v)
    tangent = np.stack([A @ v for A in f.so7_plus.basis])
    assert np.linalg.matrix_rank(tangent, tol=1e-9) == 7
