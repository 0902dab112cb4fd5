import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from infobound.bounds import InfoBound
from infobound.errors import AmplificationNotAboveOne, BoundBelowOneBit, NonPositiveLyapunov
from infobound.predictability import (
    INTERPRETATIONS,
    GasParams,
    collision_predictability,
    collisions_to_order_unity,
    lyapunov_horizon,
    recurrence_cap,
    redshift_cutoff,
)
from infobound.units import CODATA2018, LENGTH, SPEED, Quantity, planck_time

TP = planck_time().value


def _bound(bits):
    return InfoBound(bits, "holographic-event")


def test_base_ten_collisions():
    assert collisions_to_order_unity(1e-12, 10.0) == 12
    assert collisions_to_order_unity(1e-3, 2.0) == 10
    assert collisions_to_order_unity(2.0, 10.0) == 0


def test_default_air():
    pred = collision_predictability()
    assert pred.amplification_per_collision == pytest.approx(1e-7 / 1.5e-10)
    g = GasParams()
    accel = CODATA2018.G * g.perturber_mass / g.perturber_distance**2
    tau = g.mean_free_path / g.mean_speed
    assert pred.initial_angle_uncertainty == pytest.approx(0.5 * accel * tau**2 / g.mean_free_path, rel=1e-14)
    assert pred.collisions_to_order_unity == 38
    assert 10 <= pred.collisions_to_order_unity <= 60


def test_distance_times_ten_adds_log_term():
    g = GasParams()
    f = g.mean_free_path / g.molecule_radius
    n1 = collision_predictability(g).collisions_to_order_unity
    x1 = -math.log(collision_predictability(g).initial_angle_uncertainty) / math.log(f)
    g10 = GasParams(perturber_distance=10 * g.perturber_distance)
    n10 = collision_predictability(g10).collisions_to_order_unity
    assert n10 == math.ceil(x1 + 2 * math.log(10) / math.log(f))
    assert n10 - n1 in (math.floor(2 * math.log(10) / math.log(f)), math.ceil(2 * math.log(10) / math.log(f)))


@given(st.floats(1e20, 1e30), st.floats(1.01, 100.0))
def test_monotone_in_distance(d, k):
    a = collision_predictability(GasParams(perturber_distance=d)).collisions_to_order_unity
    b = collision_predictability(GasParams(perturber_distance=d * k)).collisions_to_order_unity
    assert b >= a


@given(st.floats(1e-12, 0.5), st.floats(1.5, 1e4), st.floats(1.01, 10.0))
def test_monotone_in_amplification(dtheta, f, k):
    assert collisions_to_order_unity(dtheta, f * k) <= collisions_to_order_unity(dtheta, f)


def test_gas_validation():
    with pytest.raises(AmplificationNotAboveOne):
        GasParams(mean_free_path=1e-10, molecule_radius=1.5e-10)
    with pytest.raises(ValueError):
        GasParams(mean_speed=0.0)
    with pytest.raises(AmplificationNotAboveOne):
        collisions_to_order_unity(0.1, 1.0)


def test_unit_rescaling_leaves_collisions_invariant():
    # lengths in centimetres: G picks up 1e6, speeds 1e2
    cgs = CODATA2018.replace(G=CODATA2018.G * 1e6, c=CODATA2018.c * 1e2)
    g = GasParams()
    g_cm = GasParams(
        mean_free_path=g.mean_free_path * 100,
        molecule_radius=g.molecule_radius * 100,
        mean_speed=g.mean_speed * 100,
        perturber_distance=g.perturber_distance * 100,
    )
    a = collision_predictability(g)
    b = collision_predictability(g_cm, cgs)
    assert b.initial_angle_uncertainty == pytest.approx(a.initial_angle_uncertainty, rel=1e-12)
    assert b.collisions_to_order_unity == a.collisions_to_order_unity


def test_gas_params_accept_quantities():
    g = GasParams(mean_free_path=Quantity(1e-7, LENGTH), mean_speed=Quantity(500.0, SPEED))
    assert g.mean_free_path == 1e-7
    with pytest.raises(ValueError):
        GasParams(mean_speed=Quantity(500.0, LENGTH))


def test_recurrence_max_representable_time():
    cap = recurrence_cap(_bound(1e122))
    assert cap.cap_seconds == pytest.approx(5.391e78, rel=1e-3)
    assert cap.cap_years == pytest.approx(1.708e71, rel=1e-3)
    assert cap.interpretation == "max-representable-time"
    assert recurrence_cap(_bound(1 / TP)).cap_seconds == pytest.approx(1.0, rel=1e-12)


def test_recurrence_published_figure_not_recovered():
    for interp in INTERPRETATIONS:
        cap = recurrence_cap(_bound(1e122), interp)
        assert abs(cap.log10_discrepancy) > 10


def test_recurrence_exponent_argument():
    b = _bound(1e122)
    sat = recurrence_cap(b, "max-exponent-argument")
    assert sat.log10_cap_seconds == pytest.approx(recurrence_cap(b).log10_cap_seconds, rel=1e-14)
    small = recurrence_cap(b, "max-exponent-argument", n_particles=1)
    assert small.log10_cap_seconds == pytest.approx(10 / math.log(10) + math.log10(TP), rel=1e-12)
    with pytest.raises(ValueError):
        recurrence_cap(b, "other")
    with pytest.raises(BoundBelowOneBit):
        recurrence_cap(_bound(0.5))


@given(st.floats(1.0, 1e300), st.floats(1.0001, 1e5))
def test_recurrence_and_redshift_increasing(bits, k):
    lo, hi = _bound(bits), _bound(min(bits * k, 1e308))
    if hi.bits <= lo.bits:
        return
    for interp in INTERPRETATIONS:
        assert recurrence_cap(hi, interp).log10_cap_seconds > recurrence_cap(lo, interp).log10_cap_seconds
    if bits > 1:
        assert redshift_cutoff(1.0, hi) > redshift_cutoff(1.0, lo)


def test_lyapunov():
    assert lyapunov_horizon(math.log(2), 10) == pytest.approx(10.0, rel=1e-15)
    assert lyapunov_horizon(1.0, 1e122) == pytest.approx(1e122 * math.log(2), rel=1e-15)
    assert lyapunov_horizon(2.0, 1e5) == pytest.approx(lyapunov_horizon(1.0, 1e5) / 2, rel=1e-15)
    with pytest.raises(NonPositiveLyapunov):
        lyapunov_horizon(0.0, 10)
    with pytest.raises(ValueError):
        lyapunov_horizon(1.0, 10, initial_uncertainty_bits=10)


def test_redshift_cutoff():
    assert redshift_cutoff(1e-6, _bound(1e122)) == pytest.approx(1e-6 * 122 * math.log(10), rel=1e-12)
    assert redshift_cutoff(1e-6, _bound(1e122)) == pytest.approx(2.809e-4, rel=1e-3)
    assert redshift_cutoff(3.0, _bound(math.e)) == pytest.approx(3.0, rel=1e-15)
    assert redshift_cutoff(1e-6, _bound(1e244)) == pytest.approx(2 * redshift_cutoff(1e-6, _bound(1e122)), rel=1e-14)
    with pytest.raises(BoundBelowOneBit):
        redshift_cutoff(1.0, _bound(1.0))
    with pytest.raises(ValueError):
        redshift_cutoff(0.0, _bound(10.0))
