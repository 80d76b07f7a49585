import math

import pytest

import moranlab as ml


def test_cantor_pressure_zero():
    z = ml.pressure_zero(ml.DiameterModel.ternary_cantor(), 10)
    assert z.t == pytest.approx(math.log(2) / math.log(3), abs=1e-10)
    assert z.stable


def test_moran_dimension():
    assert ml.moran_dimension([0.5, 0.5]) == pytest.approx(1.0)
    assert ml.moran_dimension([0.6, 0.6]) == pytest.approx(math.log(2) / math.log(1 / 0.6))


def test_domain_error_maps_to_value_error():
    with pytest.raises(ValueError):
        ml.moran_dimension([0.5, 1.5])
    assert issubclass(ml.DomainError, ValueError)


def test_quadratic_model_violates_w4():
    rep = ml.validate_wcmc(ml.DiameterModel.quadratic_exponent(), 20)
    assert rep.entry("W4").status == ml.AxiomStatus.Violated
    assert rep.entry("W4").witness_ratio == pytest.approx(2.0**-39)


def test_python_callback_model():
    # level-homogeneous model written in Python matches the closed form
    m = ml.DiameterModel.level_homogeneous(ml.Alphabet(2), lambda n: -n * math.log(3))
    assert ml.pressure_at(m, 0.5, 8) == pytest.approx(math.log(2) - 0.5 * math.log(3))


def test_cloud_and_dimension():
    sys_ = ml.cantor_system()
    cloud = ml.attractor_cloud(sys_, 12)
    assert len(cloud) == 4096
    est = ml.minkowski_estimate(cloud, 1e-3, 0.1, 8)
    assert abs(est.slope - math.log(2) / math.log(3)) < 0.06


def test_words_and_metric():
    assert len(ml.words_of_length(ml.Alphabet(3), 2)) == 9
    assert ml.d2([0, 1, 2], [0, 2, 2]) == 0.5
    assert ml.heisenberg_multiply([1, 0, 0], [0, 1, 0]) == [1, 1, 0.5]


def test_subconstruction():
    assert ml.cantor_branch_sequence(0.4, 5) == [2, 1, 2, 1, 2]
    h = ml.StratificationData.heisenberg()
    assert ml.beta_minus(h, 2.5) == pytest.approx(3.0)
    assert ml.beta_plus(h, 2.5) == pytest.approx(3.5)
    assert ml.carnot_cmsc_verify(h, 2.0, 6).holds


def test_golden_comb_collides():
    res = ml.osc_collision_scan_golden(6)
    assert res.collisions
    assert all(c.exact for c in res.collisions)
