import math

import numpy as np
import pytest

import gravdiscord as gd


def test_geostationary_shift_and_overlap():
    earth = gd.KerrBody.earth()
    delta = gd.shift(earth, 3.6e7)
    assert delta == pytest.approx(-2.7290886e-10, rel=1e-7)
    pert = gd.shift(earth, 3.6e7, mode=gd.ShiftMode.PERTURBATIVE)
    assert pert == pytest.approx(delta, rel=1e-3)
    terms = gd.shift_terms(earth, 3.6e7)
    assert terms.total == pytest.approx(
        terms.schwarzschild_term + terms.rotation_term + terms.higher_order_term
    )
    ch = gd.overlap(gd.WavePacketSpec(), delta)
    assert ch.theta + ch.loss == pytest.approx(1.0)
    assert ch.theta == pytest.approx(0.99767523, rel=1e-8)


def test_compensation_height_near_half_radius():
    h = gd.compensation_height(gd.KerrBody.earth())
    assert abs(h - 6.371e6 / 2) / 6.371e6 < 0.05


def test_lossy_state_matches_standard_form():
    sigma = gd.lossy_covariance(1.0, 0.99061)
    st = gd.lossy_standard_form(1.0, 0.99061)
    assert np.allclose(sigma, st.covariance(), atol=1e-12)
    nu = gd.symplectic_spectrum(gd.tmss_covariance(1.0))
    assert np.allclose(nu, [1.0, 1.0])
    assert gd.renyi2_entropy(np.cosh(2.0) * np.eye(2)) == pytest.approx(math.log(math.cosh(2.0)))


def test_correlation_measures():
    report = gd.analyze(gd.lossy_standard_form(1.0, 1.0))
    l = math.log(math.cosh(2.0))
    assert report.mutual_information == pytest.approx(2 * l, abs=1e-9)
    assert report.classical == pytest.approx(l, abs=1e-9)
    assert report.discord == pytest.approx(l, abs=1e-9)
    lossy = gd.analyze(gd.lossy_standard_form(1.0, 0.99061))
    assert lossy.mutual_information == pytest.approx(2.5858452, abs=1e-7)
    assert lossy.classical + lossy.discord == pytest.approx(lossy.mutual_information, abs=1e-12)


def test_sweep_and_csv(tmp_path):
    cfg = gd.RunConfig()
    cfg.axis = gd.SweepAxis.HEIGHT
    cfg.range = gd.AxisRange(0.0, 4e7, 11)
    table = gd.sweep(cfg)
    assert len(table) == 11
    assert table[0].mu_discord == 0.0
    text = gd.format_csv(table)
    assert text.startswith("axis,delta,theta,I2,J2,D2,mu_I2,mu_J2,mu_D2\n")
    out = tmp_path / "h.csv"
    gd.emit_csv(table, str(out))
    assert out.read_text() == text
    assert gd.format_csv(gd.sweep(cfg)) == text


def test_errors_carry_their_kind():
    cfg = gd.RunConfig()
    cfg.squeezing = 5.0
    with pytest.raises(gd.Error) as info:
        cfg.validate()
    assert info.value.kind == "InvalidConfig"
    with pytest.raises(gd.Error) as info:
        gd.overlap(gd.WavePacketSpec(), -2.0)
    assert info.value.kind == "InvalidShift"
    with pytest.raises(gd.Error):
        gd.WavePacketSpec(1.0, 1e7)
