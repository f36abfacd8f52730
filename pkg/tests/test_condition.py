import numpy as np
import pytest

from conftest import cached_dec
from liecert import algebras as al
from liecert import catalog
from liecert import condition as cond
from liecert import linalg as la
from liecert import triple as tr


def test_rho_scaling_invariance(rng):
    dec = cached_dec("g2-spin7", 0)
    basis = np.concatenate([dec.m1.basis, dec.s.basis], axis=0)
    X = np.tensordot(rng.standard_normal(14), basis, axes=1)
    Y = np.tensordot(rng.standard_normal(14), basis, axes=1)
    base = cond.rho(dec, X, Y)
    for a in (0.3, 2.0, -5.0):
        assert cond.rho(dec, a * X, a * Y) == pytest.approx(base, rel=1e-9)


def test_rho_witness_is_zero():
    t, X, Y = catalog.build_with_witness("spin-octonion-case1", 0)
    dec = tr.decompose(t)
    assert cond.rho(dec, X, Y) < 1e-12


def test_rho_positive_on_rotation_family(rng):
    # brute-force grid oracle: the certified rotation family has no commuting
    # pair with independent m-parts, so rho stays positive on samples
    dec = cached_dec("sp-series", 1)
    basis = np.concatenate([dec.m1.basis, dec.s.basis], axis=0)
    d = basis.shape[0]
    smallest = np.inf
    for _ in range(10_000):
        X = np.tensordot(rng.standard_normal(d), basis, axes=1)
        Y = np.tensordot(rng.standard_normal(d), basis, axes=1)
        w = la.wedge_norm(dec.m1.project(X), dec.m1.project(Y))
        if w < 1e-6:
            continue
        smallest = min(smallest, cond.rho(dec, X, Y))
    assert smallest > 1e-3


def test_rho_rejects_degenerate_m_parts():
    dec = cached_dec("g2-spin7", 0)
    X = dec.m1.basis[0] + dec.s.basis[0]
    Y = 2.0 * dec.m1.basis[0] + dec.s.basis[1]
    with pytest.raises(cond.PreconditionError):
        cond.rho(dec, X, Y)


def test_rho_rejects_out_of_space():
    dec = cached_dec("g2-spin7", 0)
    with pytest.raises(cond.PreconditionError):
        cond.rho(dec, dec.triple.h.basis[0], dec.s.basis[0])


@pytest.mark.parametrize(
    "eid,p",
    [
        ("spin7plus-so8", 0),
        ("g2-spin7", 0),
        ("g2-spin7", 1),
        ("su3-su4-spin7", None),
        ("sp2-su4-su5", None),
    ],
)
def test_certify_bracket_intersection_on_certified(eid, p):
    v = cond.certify_bracket_intersection(cached_dec(eid, p))
    assert v.kind == cond.CERT_BRACKET
    assert v.data["max_cos"] < 0.96


def test_certify_bracket_intersection_not_on_violating():
    # the stabilizer family one step past the certified range
    v = cond.certify_bracket_intersection(cached_dec("spin-octonion-case2", 1))
    assert v.kind == cond.INCONCLUSIVE
    assert v.data["max_cos"] > 0.99


def test_certify_positive_curvature():
    v = cond.certify_positive_curvature(cached_dec("sp-series-rank4", 1), curvature_flag=True)
    assert v.kind == cond.CERT_CURVATURE
    assert v.data["epsilon"] > 1e-4

    with pytest.raises(cond.PreconditionError):
        cond.certify_positive_curvature(cached_dec("sp-series-rank4", 1), curvature_flag=False)


def test_certify_positive_curvature_descent_finds_flats():
    # descent oracle: the orbifold family has flat planes in m + s, so the
    # sampled minimum collapses below the floor
    v = cond.certify_positive_curvature(cached_dec("g2-so4-rank4"), curvature_flag=True)
    assert v.kind == cond.INCONCLUSIVE


def test_estimate_cross_check_with_curvature():
    dec = cached_dec("sp-series-rank4", 1)
    cert = cond.certify_positive_curvature(dec, curvature_flag=True)
    est = cond.estimate_inf_rho(dec, restarts=40, iters=100, seed=0, use_m1=False)
    assert est.data["rho_inf"] >= cert.data["epsilon"] - 1e-9


def test_estimate_monotone_in_restarts():
    dec = cached_dec("su3-su4-spin7")
    small = cond.estimate_inf_rho(dec, restarts=20, iters=60, seed=0)
    large = cond.estimate_inf_rho(dec, restarts=40, iters=60, seed=0)
    assert large.data["rho_inf"] <= small.data["rho_inf"] + 1e-12


def test_estimate_deterministic():
    dec = cached_dec("su3-su4-spin7")
    a = cond.estimate_inf_rho(dec, restarts=15, iters=50, seed=3)
    b = cond.estimate_inf_rho(dec, restarts=15, iters=50, seed=3)
    assert a.data["rho_inf"] == b.data["rho_inf"]
    assert np.allclose(a.data["argmin_x"], b.data["argmin_x"])


def test_estimate_requires_nonzero_m():
    dec = cached_dec("sp-series-rank4", 1)
    with pytest.raises(cond.PreconditionError):
        cond.estimate_inf_rho(dec, restarts=4, iters=10, seed=0, use_m1=True)


def test_verify_witness_families():
    for eid, ps in [
        ("spin-octonion-case1", (0, 1, 2)),
        ("spin-octonion-case2", (1,)),
        ("spin-octonion-case4", (3,)),
        ("su3-long-root", (1,)),
        ("su(p+4)-su3-pair", (2,)),
        ("su-long-root", (1,)),
        ("so-long-root", (2,)),
        ("g2-long-root", (None,)),
    ]:
        for p in ps:
            t, X, Y = catalog.build_with_witness(eid, p)
            dec = tr.decompose(t)
            v = cond.verify_witness(dec, X, Y)
            assert v.kind == cond.VIOLATION, (eid, p, v.data)


def test_verify_witness_inconclusive_on_noncommuting():
    dec = cached_dec("g2-spin7", 0)
    X = dec.m1.basis[0] + dec.s.basis[0]
    Y = dec.m1.basis[1] + dec.s.basis[1]
    v = cond.verify_witness(dec, X, Y)
    assert v.kind == cond.INCONCLUSIVE


def test_verify_witness_membership_precondition():
    t, X, Y = catalog.build_with_witness("spin-octonion-case1", 0)
    dec = tr.decompose(t)
    with pytest.raises(cond.PreconditionError):
        cond.verify_witness(dec, X + dec.triple.h.basis[0], Y)


def test_builtin_witness_roundtrip():
    t, X, Y = cond.builtin_witness("spin-octonion-case1", 0)
    assert t.ambient_dim == 9
    dec = tr.decompose(t)
    assert cond.verify_witness(dec, X, Y).kind == cond.VIOLATION


def test_builtin_witness_unrealizable():
    with pytest.raises(catalog.UnrealizableFamilyError):
        cond.builtin_witness("f4-case")
    with pytest.raises(ValueError):
        cond.builtin_witness("spin-octonion-case4", 1)  # out of range


def test_g2_sequence_scaling():
    pr = al.g2_su2_product()
    dec = cached_dec("remark-limit")
    # closed form oracle: [X_n, Y_n] = (2 / (lam n)) [E_minus, e2]
    C = (2.0 / pr.lam) * la.bracket(pr.E_minus, pr.e2)
    values = []
    wedges = []
    for n in (1, 2, 4, 8, 16):
        X, Y = cond.g2_sequence(n)
        br = la.bracket(X, Y)
        assert la.norm(br - C / n) < 1e-9
        values.append(la.norm(br) * n)
        w = la.wedge_norm(dec.m.project(X), dec.m.project(Y))
        wedges.append(w)
    assert (max(values) - min(values)) / max(values) < 1e-9
    assert max(wedges) - min(wedges) < 1e-10
    # halving ratio
    X1, Y1 = cond.g2_sequence(5)
    X2, Y2 = cond.g2_sequence(10)
    r = la.norm(la.bracket(X2, Y2)) / la.norm(la.bracket(X1, Y1))
    assert r == pytest.approx(0.5, abs=1e-6)
    assert pr.lam != 0.0
    with pytest.raises(ValueError):
        cond.g2_sequence(0)


def test_verify_sequence_verdict():
    dec = cached_dec("remark-limit")
    v = cond.verify_sequence(dec, [1, 2, 4, 8, 16])
    assert v.kind == cond.SEQUENCE


def test_scale_covariance_of_verdicts(rng):
    # rescaling the whole realization rescales rho by a constant and leaves
    # witness verdicts unchanged
    t, X, Y = catalog.build_with_witness("su3-long-root", 1)
    dec = tr.decompose(t)
    before = cond.verify_witness(dec, X, Y)
    after = cond.verify_witness(dec, 3.0 * X, 3.0 * Y)
    assert before.kind == after.kind == cond.VIOLATION
