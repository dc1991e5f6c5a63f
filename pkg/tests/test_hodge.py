"""Vertex-value layer: graded polynomials, Laurent tails, mu constants."""

from fractions import Fraction as F

import pytest

from sinewall.hodge import (
    GradedPoly,
    GradedPolyRing,
    MuValue,
    ZLaurent,
    i_function_expansion,
    mu_g0,
    mu_g1,
    verify_i_ratio,
    verify_mu_consistency,
)
from sinewall.series import NonInvertibleLeading, USeries, exp, inv, pow_int, sinc_half


CAP = 3
H = GradedPoly.hyperplane(CAP)
C1 = GradedPoly.first_chern(CAP)
ONE = GradedPoly.one(CAP)


# ---------------------------------------------------------------- graded polys


def test_graded_poly_basics():
    p = H * 2 + C1
    assert p.coefficient(1, 0) == 2
    assert p.coefficient(0, 1) == 1
    assert p.coefficient(0, 0) == 0
    assert bool(p)
    assert not GradedPoly.zero(CAP)
    assert p - p == GradedPoly.zero(CAP)


def test_graded_poly_cap_truncation():
    assert (H ** 2) * (H ** 2) == GradedPoly.zero(CAP)
    assert H * H * H == H ** 3
    assert (H ** 3) * C1 == GradedPoly.zero(CAP)
    # the cap keeps total degree, mixing both variables
    assert (H * C1).coefficient(1, 1) == 1
    assert ((H * C1) * H).coefficient(2, 1) == 1
    assert ((H * C1) * (H * C1)) == GradedPoly.zero(CAP)


def test_graded_poly_ring_axioms_sampled():
    xs = [ONE, H, C1, H + C1, H * 2 - C1, H ** 2 + C1, GradedPoly.zero(CAP)]
    for a in xs:
        for b in xs:
            assert a + b == b + a
            assert a * b == b * a
            for c in xs:
                assert (a + b) + c == a + (b + c)
                assert (a * b) * c == a * (b * c)
                assert a * (b + c) == a * b + a * c


def test_graded_poly_mixed_caps_rejected():
    with pytest.raises(ValueError):
        H + GradedPoly.hyperplane(4)
    with pytest.raises(ValueError):
        H * GradedPoly.hyperplane(2)


def test_graded_poly_min_degree_and_scalar():
    assert GradedPoly.scalar(F(5), CAP).coefficient(0, 0) == 5
    assert (H ** 2 + C1 ** 3).min_degree() == 2
    assert ONE.min_degree() == 0


def test_graded_poly_pow():
    assert (ONE + H) ** 3 == ONE + 3 * H + 3 * H ** 2 + H ** 3
    assert (ONE + H) ** 0 == ONE
    with pytest.raises(ValueError):
        (ONE + H) ** -1


def test_ring_invert():
    ring = GradedPolyRing(CAP)
    for unit in (ONE + H, GradedPoly.scalar(F(2), CAP) + C1, ONE - H + C1 ** 2):
        assert unit * ring.invert(unit) == ONE
    with pytest.raises(NonInvertibleLeading):
        ring.invert(H)  # no scalar part
    assert ring.invert(GradedPoly.scalar(F(2), CAP)) == GradedPoly.scalar(F(1, 2), CAP)


def test_useries_over_graded_ring():
    ring = GradedPolyRing(CAP)
    f = USeries(0, [ONE, GradedPoly.zero(CAP), H], ring=ring)
    g = inv(f)
    assert f * g == USeries.one(3, ring=ring)
    assert g.coefficient(2) == -H

    # exp over the graded ring: nilpotency kills H^4 and beyond
    e = exp(USeries(2, [H] + [GradedPoly.zero(CAP)] * 5, ring=ring))
    assert e.coefficient(0) == ONE
    assert e.coefficient(2) == H
    assert e.coefficient(4) == H ** 2 * F(1, 2)
    assert e.coefficient(6) == H ** 3 * F(1, 6)


# ---------------------------------------------------------------- zlaurent


def test_zlaurent_construction_and_access():
    zl = ZLaurent({1: ONE, 0: -H, -2: C1}, CAP)
    assert zl.z_min == -2
    assert zl.z_max == 1
    assert zl.coefficient(1) == ONE
    assert zl.coefficient(-1) == GradedPoly.zero(CAP)
    assert zl.coefficient(5) == GradedPoly.zero(CAP)
    assert not zl.is_zero()
    assert ZLaurent({}, CAP).is_zero()


def test_zlaurent_shift_and_nonneg():
    zl = ZLaurent({1: ONE, 0: -H, -2: C1}, CAP)
    assert zl.shift(2).z_min == 0
    assert zl.shift(-1).coefficient(0) == ONE
    assert zl.nonneg() == ZLaurent({1: ONE, 0: -H}, CAP)
    assert zl.shift(3).nonneg() == zl.shift(3)


def test_zlaurent_drops_zero_terms():
    zl = ZLaurent({2: GradedPoly.zero(CAP), 0: ONE}, CAP)
    assert zl.z_max == 0
    assert zl == ZLaurent({0: ONE}, CAP)


# ---------------------------------------------------------------- mu values


def test_mu_g0_frozen_values():
    m1 = mu_g0(1)
    assert (m1.a1, m1.a_H, m1.a_c1, m1.scalar) == (F(-1, 12), F(-1, 24), F(-1, 24), F(0))
    m2 = mu_g0(2)
    assert (m2.a1, m2.a_H, m2.a_c1) == (F(1, 360), F(19, 2880), F(1, 320))
    m3 = mu_g0(3)
    assert (m3.a1, m3.a_H, m3.a_c1) == (F(-1, 20160), F(-11, 48384), F(-67, 725760))


def test_mu_g1_frozen_values():
    assert mu_g1(1) == F(-1, 12)
    assert mu_g1(2) == F(1, 360)
    assert mu_g1(3) == F(-1, 20160)


def test_mu_requires_positive_genus():
    with pytest.raises(ValueError):
        mu_g0(0)
    with pytest.raises(ValueError):
        mu_g1(0)


def test_mu_z_coefficient_matches_square_expansion():
    # the z-coefficient equals [u^{2g}] (S^2 - 1) for every genus
    sq = pow_int(sinc_half(14), 2)
    for g in range(1, 7):
        assert mu_g0(g).a1 == sq.coefficient(2 * g)
        assert mu_g1(g) == sq.coefficient(2 * g)
        assert mu_g0(g).scalar == 0


def test_mu_as_zlaurent_layout():
    zl = mu_g0(2).as_zlaurent(CAP)
    assert zl.z_min == 0
    assert zl.z_max == 1
    assert zl.coefficient(1) == GradedPoly.scalar(F(1, 360), CAP)
    assert zl.coefficient(0) == H * F(19, 2880) + C1 * F(1, 320)


def test_mu_value_is_frozen():
    with pytest.raises(Exception):
        mu_g0(1).a1 = F(0)


# ---------------------------------------------------------------- expansion


def test_expansion_genus_zero_is_z_minus_h():
    expn = i_function_expansion(6)
    assert expn[0] == ZLaurent({1: ONE, 0: -H}, CAP)


def test_expansion_genus_range():
    assert sorted(i_function_expansion(12)) == [0, 1, 2, 3, 4, 5]
    assert sorted(i_function_expansion(11)) == [0, 1, 2, 3, 4, 5]
    assert sorted(i_function_expansion(10)) == [0, 1, 2, 3, 4]
    assert i_function_expansion(0) == {}
    assert i_function_expansion(-2) == {}


def test_expansion_nonneg_matches_mu():
    expn = i_function_expansion(12)
    for g in range(1, 6):
        assert expn[g].nonneg() == mu_g0(g).as_zlaurent(CAP)


def test_expansion_laurent_tail_location():
    expn = i_function_expansion(12)
    # genus 1 sees only the j <= 1 layers, so no negative z-powers yet
    assert expn[1].z_min >= 0
    # genus 2 picks up the (z - H)^{-1} layer
    assert expn[2].z_min < 0


def test_expansion_divisor_class_zero_collapses():
    # with the exponent shut off, only S^2 (z - H) survives
    expn = i_function_expansion(8, divisor_class=GradedPoly.zero(CAP))
    sq = pow_int(sinc_half(8), 2)
    for g in range(0, 4):
        a = sq.coefficient(2 * g)
        assert expn[g] == ZLaurent({1: GradedPoly.scalar(a, CAP), 0: H * (-a)}, CAP)


def test_expansion_divisor_class_default_is_3h_plus_c1():
    explicit = i_function_expansion(10, divisor_class=H * 3 + C1)
    assert explicit == i_function_expansion(10)


def test_expansion_parameter_validation():
    with pytest.raises(ValueError):
        i_function_expansion(8, z_depth=0)
    with pytest.raises(ValueError):
        i_function_expansion(8, degree_cap=1)
    with pytest.raises(ValueError):
        i_function_expansion(8, divisor_class=GradedPoly.hyperplane(4))


def test_expansion_depth_only_lengthens_tail():
    # the coefficient of z^{-q} is complete once z_depth >= q, so a depth-1
    # run already pins everything from z^{-1} upward; deeper runs only add
    # lower powers
    shallow = i_function_expansion(12, z_depth=1)
    deep = i_function_expansion(12, z_depth=4)
    assert sorted(shallow) == sorted(deep)
    for g in shallow:
        assert deep[g].z_min <= shallow[g].z_min
        for p in range(-1, max(shallow[g].z_max, deep[g].z_max) + 1):
            assert deep[g].coefficient(p) == shallow[g].coefficient(p)


# ---------------------------------------------------------------- verification


def test_verify_mu_consistency_passes():
    rep = verify_mu_consistency(10)
    assert rep.passed
    assert rep.checked == (1, 2, 3, 4, 5)
    assert rep.first_failure is None


def test_verify_i_ratio_passes():
    rep = verify_i_ratio(10)
    assert rep.passed
    assert rep.checked == (1, 2, 3, 4, 5)


def test_verify_vacuous_at_order_zero():
    assert verify_mu_consistency(0).passed
    assert verify_mu_consistency(0).checked == ()
    assert verify_i_ratio(1).checked == ()


def _corrupt(zl, power, delta):
    terms = {p: zl.coefficient(p) for p in range(zl.z_min, zl.z_max + 1)}
    terms[power] = terms.get(power, GradedPoly.zero(zl.cap)) + GradedPoly.scalar(
        delta, zl.cap
    )
    return ZLaurent(terms, zl.cap)


def test_verify_mu_consistency_locates_corruption():
    expn = i_function_expansion(12)
    expn[3] = _corrupt(expn[3], 0, F(1, 1000))
    rep = verify_mu_consistency(12, expansion=expn)
    assert not rep.passed
    assert rep.first_failure == 3
    assert "genus 3" in rep.detail


def test_verify_i_ratio_locates_corruption():
    expn = i_function_expansion(12)
    expn[4] = _corrupt(expn[4], 1, F(1, 1000))
    rep = verify_i_ratio(12, expansion=expn)
    assert not rep.passed
    assert rep.first_failure == 4


def test_corrupted_negative_tail_is_invisible_to_mu_check():
    # the mu comparison reads the z-nonnegative part only; the ratio check
    # reads z^1 and up, so a z^{-2} dent escapes both by design
    expn = i_function_expansion(12)
    expn[2] = _corrupt(expn[2], -2, F(1, 1000))
    assert verify_mu_consistency(12, expansion=expn).passed
    assert verify_i_ratio(12, expansion=expn).passed
