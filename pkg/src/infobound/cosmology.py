"""FRW background: expansion rate, cosmic time and horizons.

All integrals over the scale factor are done in ``u = ln a`` so the steep
early-time behaviour becomes a smooth exponential tail. The part of that tail
below the integration cut-off is added in closed form, using the power law
of whichever density component dominates as ``a -> 0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DivergentIntegral,
    DomainError,
    NegativeRadicand,
    NonPositiveDensity,
    NonPositiveRadius,
    NonPositiveScaleFactor,
)
from .quadrature import integrate
from .units import (
    CODATA2018,
    ENERGY_DENSITY,
    LENGTH,
    ConstantsSet,
    Quantity,
    as_si,
)

MPC_M = 3.0857e22
KM_S_MPC = 1e3 / MPC_M  # 1 km/s/Mpc in s^-1

REL_TOL = 1e-9


class _Infinite:
    """Flag for a divergent horizon distance."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"

    def __str__(self):
        return "infinite"

    def __reduce__(self):
        return (_Infinite, ())


INFINITE = _Infinite()


def is_infinite(d) -> bool:
    return d is INFINITE


@dataclass(frozen=True)
class CosmologyParams:
    """FRW model. ``H0`` is in s^-1; use :meth:`from_km_s_mpc` for the usual unit."""

    H0: float
    omega_m: float = 0.0
    omega_r: float = 0.0
    omega_lambda: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.H0) and self.H0 > 0):
            raise DomainError(f"H0 must be positive, got {self.H0!r}")
        for name in ("omega_m", "omega_r", "omega_lambda"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v >= 0):
                raise DomainError(f"{name} must be >= 0, got {v!r}")

    @classmethod
    def from_km_s_mpc(cls, h0_km_s_mpc: float, **omegas) -> "CosmologyParams":
        return cls(H0=h0_km_s_mpc * KM_S_MPC, **omegas)

    @property
    def omega_k(self) -> float:
        return 1.0 - (self.omega_r + self.omega_m + self.omega_lambda)

    @property
    def h0_km_s_mpc(self) -> float:
        return self.H0 / KM_S_MPC

    def _e2(self, a):
        """(H/H0)^2 as a function of scale factor."""
        return (
            self.omega_r / a**4
            + self.omega_m / a**3
            + self.omega_k / a**2
            + self.omega_lambda
        )

    def _early_power(self) -> float:
        """Exponent p with H ~ a^-p as a -> 0 (0 for pure vacuum)."""
        ok = self.omega_k
        if self.omega_r > 0:
            return 2.0
        if self.omega_m > 0:
            return 1.5
        if abs(ok) > 1e-15:
            if ok < 0:
                raise NegativeRadicand(
                    "negative curvature term dominates as a -> 0; H^2 < 0"
                )
            return 1.0
        return 0.0


BENCHMARK = CosmologyParams.from_km_s_mpc(
    67.7, omega_m=0.31, omega_lambda=0.69, omega_r=9e-5
)


@dataclass(frozen=True)
class HorizonSet:
    epoch_a: float
    particle_horizon: float | _Infinite
    event_horizon: float | _Infinite
    hubble_radius: float

    def as_dict(self) -> dict:
        def enc(d):
            return "infinite" if d is INFINITE else d

        return {
            "a": self.epoch_a,
            "particle_horizon_m": enc(self.particle_horizon),
            "event_horizon_m": enc(self.event_horizon),
            "hubble_radius_m": self.hubble_radius,
        }


def _check_a(a: float) -> float:
    a = float(a)
    if not (math.isfinite(a) and a > 0):
        raise NonPositiveScaleFactor(f"scale factor must be > 0, got {a!r}")
    return a


def _hubble_array(a, p: CosmologyParams):
    e2 = p._e2(a)
    if np.any(e2 <= 0):
        raise NegativeRadicand("H^2 <= 0 within the integration range")
    return p.H0 * np.sqrt(e2)


def hubble_rate(a: float, p: CosmologyParams) -> float:
    """H(a) in s^-1."""
    a = _check_a(a)
    e2 = p._e2(a)
    if e2 <= 0:
        raise NegativeRadicand(f"H^2 = {e2 * p.H0**2:.3e} <= 0 at a = {a}")
    return p.H0 * math.sqrt(e2)


def _early_integral(p: CosmologyParams, a: float, extra: float, rel_tol: float):
    """int_0^a da' a'^extra / (a' H(a')), done in u = ln a'.

    ``extra`` is 0 for cosmic time and -1 for the comoving particle horizon.
    The integrand behaves like exp(q u) with q = p_early + extra for u -> -inf.
    Returns (value, error).
    """
    q = p._early_power() + extra
    if q <= 0:
        raise DivergentIntegral(
            "integral diverges at a -> 0 for this parameter set "
            "(needs radiation, matter or curvature domination at early times)"
        )

    def f(u):
        x = np.exp(u)
        return x**extra / _hubble_array(x, p)

    u_hi = math.log(a)
    f_hi = float(f(np.array([u_hi]))[0])
    scale = f_hi / q  # integral if the power law held all the way to u_hi
    # Push the cut-off down until the analytic tail is negligible.
    u_lo = u_hi - 1.0
    while True:
        f_lo = float(f(np.array([u_lo]))[0])
        if f_lo / q < 1e-3 * rel_tol * scale:
            break
        u_lo -= 5.0
        if u_hi - u_lo > 2000:
            raise DivergentIntegral("early-time tail does not decay")
    body = integrate(f, u_lo, u_hi, rel_tol=rel_tol * 0.1)
    tail = f_lo / q
    return body.value + tail, body.error + 1e-3 * rel_tol * abs(body.value + tail)


def cosmic_time(a: float, p: CosmologyParams, rel_tol: float = REL_TOL) -> float:
    """Age at scale factor ``a`` in seconds."""
    a = _check_a(a)
    return _early_integral(p, a, 0.0, rel_tol)[0]


def cosmic_time_with_error(a: float, p: CosmologyParams, rel_tol: float = REL_TOL):
    return _early_integral(p, _check_a(a), 0.0, rel_tol)


def particle_horizon(
    a: float, p: CosmologyParams, constants: ConstantsSet = CODATA2018, rel_tol: float = REL_TOL
) -> float:
    """Proper particle-horizon distance in metres at scale factor ``a``."""
    a = _check_a(a)
    chi, _ = _early_integral(p, a, -1.0, rel_tol)
    return a * constants.c * chi


def particle_horizon_with_error(
    a: float, p: CosmologyParams, constants: ConstantsSet = CODATA2018, rel_tol: float = REL_TOL
) -> tuple[float, float]:
    a = _check_a(a)
    chi, err = _early_integral(p, a, -1.0, rel_tol)
    return a * constants.c * chi, a * constants.c * err


def _event_integral(p: CosmologyParams, a: float, rel_tol: float):
    if p.omega_lambda == 0:
        return INFINITE, 0.0
    h_inf = p.H0 * math.sqrt(p.omega_lambda)

    def f(u):
        x = np.exp(u)
        return 1.0 / (x * _hubble_array(x, p))

    # The tail beyond a_max is at most 1/(h_inf a_max) for non-negative
    # curvature; pick a_max so it is below tolerance relative to the total,
    # then add the de Sitter tail 1/(H(a_max) a_max) as the estimate.
    total_guess = 1.0 / (a * hubble_rate(a, p))
    u_lo = math.log(a)
    u_hi = u_lo + 1.0
    while 1.0 / (h_inf * math.exp(u_hi)) > 1e-3 * rel_tol * total_guess:
        u_hi += 1.0
    body = integrate(f, u_lo, u_hi, rel_tol=rel_tol * 0.1)
    a_max = math.exp(u_hi)
    tail = 1.0 / (a_max * hubble_rate(a_max, p))
    return body.value + tail, body.error + 1e-3 * rel_tol * abs(body.value + tail)


def event_horizon(
    a: float, p: CosmologyParams, constants: ConstantsSet = CODATA2018, rel_tol: float = REL_TOL
):
    """Proper event-horizon distance in metres, or :data:`INFINITE`."""
    a = _check_a(a)
    chi, _ = _event_integral(p, a, rel_tol)
    if chi is INFINITE:
        return INFINITE
    return a * constants.c * chi


def event_horizon_with_error(
    a: float, p: CosmologyParams, constants: ConstantsSet = CODATA2018, rel_tol: float = REL_TOL
):
    a = _check_a(a)
    chi, err = _event_integral(p, a, rel_tol)
    if chi is INFINITE:
        return INFINITE, 0.0
    return a * constants.c * chi, a * constants.c * err


def hubble_radius(a: float, p: CosmologyParams, constants: ConstantsSet = CODATA2018) -> float:
    return constants.c / hubble_rate(a, p)


def horizons(a: float, p: CosmologyParams, constants: ConstantsSet = CODATA2018) -> HorizonSet:
    """All three horizon scales at one epoch. A divergent particle horizon is flagged."""
    a = _check_a(a)
    try:
        dp = particle_horizon(a, p, constants)
    except DivergentIntegral:
        dp = INFINITE
    return HorizonSet(
        epoch_a=a,
        particle_horizon=dp,
        event_horizon=event_horizon(a, p, constants),
        hubble_radius=hubble_radius(a, p, constants),
    )


def desitter_radius_from_density(rho_lambda, constants: ConstantsSet = CODATA2018) -> float:
    """Hubble radius c/H of a universe dominated by vacuum energy density ``rho_lambda`` (J/m^3)."""
    rho = as_si(rho_lambda, ENERGY_DENSITY, "rho_lambda")
    if rho <= 0:
        raise NonPositiveDensity(f"dark-energy density must be > 0, got {rho!r}")
    k = constants
    rho_q = Quantity(rho, ENERGY_DENSITY)
    h = (8 * math.pi * k.G_q * rho_q / (3 * k.c_q**2)).sqrt()
    return (k.c_q / h).to(LENGTH)


def horizon_area(radius) -> float:
    """4 pi R^2 in m^2."""
    r = as_si(radius, LENGTH, "radius")
    if r <= 0:
        raise NonPositiveRadius(f"radius must be > 0, got {r!r}")
    return 4.0 * math.pi * r * r
