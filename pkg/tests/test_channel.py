import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wsn_intercept.channel import (
    ChannelDraw,
    MerTemplate,
    NakagamiLink,
    Scenario,
    SensorProfile,
    SensorTemplate,
    channel_capacity,
    gain_pdf,
    make_scenario,
    scenario_from_mer,
    secrecy_capacity,
)
from wsn_intercept.errors import DomainError
from wsn_intercept.special import integrate_semi_infinite

positive = st.floats(1e-3, 1e3)
gains = st.floats(0, 1e3)


def test_link_invariants():
    with pytest.raises(DomainError):
        NakagamiLink(0.4, 1.0)
    with pytest.raises(DomainError):
        NakagamiLink(1.0, 0.0)
    assert NakagamiLink(1.5, 3.0).scale == pytest.approx(2.0)


def test_profile_and_scenario_invariants():
    link = NakagamiLink(1, 1)
    with pytest.raises(DomainError):
        SensorProfile(link, link, tx_power=0.0)
    with pytest.raises(DomainError):
        Scenario(())
    with pytest.raises(DomainError):
        Scenario((SensorProfile(link, link),), noise_power=-1.0)


def test_draw_invariants():
    with pytest.raises(DomainError):
        ChannelDraw((1.0, 2.0), (1.0,))
    with pytest.raises(DomainError):
        ChannelDraw((-1.0,), (1.0,))


class TestGainPdf:
    def test_unit_exponential(self):
        link = NakagamiLink(1, 1)
        assert gain_pdf(link, 0.0) == 1.0
        assert gain_pdf(link, 1.0) == pytest.approx(math.exp(-1), rel=1e-15)

    @pytest.mark.parametrize("shape", [0.5, 1.0, 1.5, 3.0])
    def test_normalized(self, shape):
        link = NakagamiLink(shape, 1.0)
        assert integrate_semi_infinite(lambda x: gain_pdf(link, x)) == pytest.approx(1.0, rel=1e-8)

    def test_mean(self):
        link = NakagamiLink(1.5, 4.0)
        mean = integrate_semi_infinite(lambda x: x * gain_pdf(link, x), scale=4.0)
        assert mean == pytest.approx(4.0, rel=1e-8)


class TestCapacity:
    @pytest.mark.parametrize("gain, expected", [(0.0, 0.0), (1.0, 1.0), (3.0, 2.0)])
    def test_values(self, gain, expected):
        assert channel_capacity(gain, 1.0, 1.0) == pytest.approx(expected, abs=1e-15)

    @given(gains, positive, positive, positive)
    def test_joint_power_scaling(self, g, p, n0, c):
        assert channel_capacity(g, c * p, c * n0) == pytest.approx(channel_capacity(g, p, n0), rel=1e-12)

    @given(gains, gains, positive, positive)
    def test_increasing(self, g1, g2, p, n0):
        lo, hi = sorted((g1, g2))
        assert channel_capacity(lo, p, n0) <= channel_capacity(hi, p, n0)


class TestSecrecy:
    profile = SensorProfile(NakagamiLink(1, 1), NakagamiLink(1, 1), 1.0)

    def test_equal_gains(self):
        assert secrecy_capacity(self.profile, 2.5, 2.5, 1.0) == 0.0

    def test_value(self):
        assert secrecy_capacity(self.profile, 3.0, 1.0, 1.0) == pytest.approx(1.0, abs=1e-15)

    @given(gains, gains, positive, positive)
    def test_definition_and_sign(self, xs, xe, p, n0):
        prof = SensorProfile(NakagamiLink(1, 1), NakagamiLink(1, 1), p)
        cs = secrecy_capacity(prof, xs, xe, n0)
        assert cs == channel_capacity(xs, p, n0) - channel_capacity(xe, p, n0)
        if xs > xe and cs != 0.0:
            assert cs > 0
        if xs <= xe:
            assert cs <= 0


class TestScenarioFromMer:
    def test_unit(self):
        sc = scenario_from_mer(MerTemplate.homogeneous(3, 1.5, 1.5), 1.0)
        assert all(s.main.mean_gain == 1.0 and s.wiretap.mean_gain == 1.0 for s in sc.sensors)

    @pytest.mark.parametrize("lam", [3.0, 5.0])
    def test_figure_mer_values(self, lam):
        sc = scenario_from_mer(MerTemplate.homogeneous(2, 1.5, 1.5), lam)
        assert [s.main.mean_gain for s in sc.sensors] == [lam, lam]
        assert [s.wiretap.mean_gain for s in sc.sensors] == [1.0, 1.0]

    def test_copies_shapes_and_powers(self):
        tmpl = MerTemplate((SensorTemplate(1.0, 2.0, 0.5, 2.0, 3.0), SensorTemplate(2.5, 0.5)),
                           reference_wiretap_gain=2.0, noise_power=0.1)
        sc = scenario_from_mer(tmpl, 10.0)
        first, second = sc.sensors
        assert (first.main.shape, first.wiretap.shape, first.tx_power) == (1.0, 2.0, 3.0)
        assert first.main.mean_gain == pytest.approx(0.5 * 10.0 * 2.0)
        assert first.wiretap.mean_gain == pytest.approx(2.0 * 2.0)
        assert (second.main.shape, second.wiretap.shape) == (2.5, 0.5)
        assert sc.noise_power == 0.1

    @given(st.floats(1e-3, 1e6), st.floats(1e-3, 1e6))
    def test_linear_in_lambda(self, l1, l2):
        tmpl = MerTemplate((SensorTemplate(1.5, 1.5, 2.0, 0.7),))
        a, b = scenario_from_mer(tmpl, l1).sensors[0], scenario_from_mer(tmpl, l2).sensors[0]
        assert a.main.mean_gain / l1 == pytest.approx(b.main.mean_gain / l2, rel=1e-12)
        assert a.wiretap.mean_gain == b.wiretap.mean_gain

    def test_rejects_bad_lambda(self):
        with pytest.raises(DomainError):
            scenario_from_mer(MerTemplate.homogeneous(1, 1, 1), 0.0)


def test_make_scenario():
    sc = make_scenario([(1, 2), (2, 3)], [(1, 1), (2, 1)], powers=[1, 2], noise_power=0.5)
    assert sc.n_sensors == 2
    assert sc.sensors[1].main == NakagamiLink(2, 3)
    assert sc.sensors[1].tx_power == 2.0
