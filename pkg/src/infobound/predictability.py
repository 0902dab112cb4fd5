"""Back-of-envelope predictability horizons under a finite information budget."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .bounds import InfoBound
from .errors import AmplificationNotAboveOne, BoundBelowOneBit, DomainError, NonPositiveLyapunov
from .units import CODATA2018, LENGTH, MASS, RATE, SPEED, TIME, ConstantsSet, as_si, planck_time

LN10 = math.log(10.0)
PUBLISHED_RECURRENCE_YEARS = 1e60


@dataclass(frozen=True)
class GasParams:
    """Air molecule in a room, perturbed by one electron at the edge of the
    observable universe. Defaults are room-condition round numbers."""

    mean_free_path: float = 1e-7
    molecule_radius: float = 1.5e-10
    mean_speed: float = 500.0
    perturber_mass: float = 9.1e-31
    perturber_distance: float = 4.4e26

    def __post_init__(self):
        for k, dims in (
            ("mean_free_path", LENGTH),
            ("molecule_radius", LENGTH),
            ("mean_speed", SPEED),
            ("perturber_mass", MASS),
            ("perturber_distance", LENGTH),
        ):
            v = as_si(getattr(self, k), dims, k)
            if not v > 0:
                raise DomainError(f"{k} must be > 0, got {v!r}")
            object.__setattr__(self, k, v)
        if not self.mean_free_path > self.molecule_radius:
            raise AmplificationNotAboveOne(
                "mean free path must exceed molecule radius for errors to grow"
            )

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class CollisionPrediction:
    initial_angle_uncertainty: float
    amplification_per_collision: float
    collisions_to_order_unity: int


def collisions_to_order_unity(initial_angle_uncertainty: float, amplification: float) -> int:
    """Smallest n with amplification^n * initial_angle_uncertainty >= 1."""
    if not amplification > 1:
        raise AmplificationNotAboveOne(f"amplification must be > 1, got {amplification!r}")
    if not initial_angle_uncertainty > 0:
        raise DomainError("initial uncertainty must be > 0")
    if initial_angle_uncertainty >= 1:
        return 0
    x = -math.log(initial_angle_uncertainty) / math.log(amplification)
    # ratio of logs can land one ulp above an exact integer
    nearest = round(x)
    if abs(x - nearest) <= 1e-12 * max(1.0, x):
        return int(nearest)
    return math.ceil(x)


def collision_predictability(
    g: GasParams = GasParams(), constants: ConstantsSet = CODATA2018
) -> CollisionPrediction:
    """Collisions until a distant perturber's pull makes the trajectory unpredictable.

    The perturber's acceleration over one free flight deflects the molecule
    by ``(a tau^2 / 2) / l``; each collision multiplies an angular error by
    ``l / r``.
    """
    accel = constants.G * g.perturber_mass / g.perturber_distance**2
    tau = g.mean_free_path / g.mean_speed
    dtheta = 0.5 * accel * tau**2 / g.mean_free_path
    f = g.mean_free_path / g.molecule_radius
    return CollisionPrediction(dtheta, f, collisions_to_order_unity(dtheta, f))


@dataclass(frozen=True)
class RecurrenceCap:
    interpretation: str
    log10_cap_seconds: float
    year_seconds: float
    published_years: float = PUBLISHED_RECURRENCE_YEARS

    @property
    def cap_seconds(self) -> float:
        return 10.0**self.log10_cap_seconds if self.log10_cap_seconds < 308 else math.inf

    @property
    def cap_years(self) -> float:
        return self.cap_seconds / self.year_seconds

    @property
    def log10_cap_years(self) -> float:
        return self.log10_cap_seconds - math.log10(self.year_seconds)

    @property
    def log10_discrepancy(self) -> float:
        """log10(cap / published figure); far from zero for both interpretations."""
        return self.log10_cap_years - math.log10(self.published_years)


INTERPRETATIONS = ("max-representable-time", "max-exponent-argument")


def recurrence_cap(
    bound: InfoBound,
    interpretation: str = "max-representable-time",
    n_particles: float | None = None,
    constants: ConstantsSet = CODATA2018,
) -> RecurrenceCap:
    """Longest recurrence time (in Planck times) the bound can express.

    ``max-representable-time``: the bound itself counts Planck ticks, so the
    cap is ``bits * t_P``.

    ``max-exponent-argument``: a predicted ``exp(10^N) t_P`` is trusted only
    while the number ``exp(10^N)`` fits in the bound, i.e. the cap is
    ``exp(min(10^N, ln bits)) t_P``. Without ``n_particles`` the exponent is
    taken to saturate, giving the same number as the first reading.
    """
    if not bound.bits >= 1:
        raise BoundBelowOneBit(f"bound must hold at least one bit, got {bound.bits!r}")
    log10_tp = math.log10(planck_time(constants).value)
    if interpretation == "max-representable-time":
        log10_ticks = bound.log10_bits
    elif interpretation == "max-exponent-argument":
        ln_bits = bound.ln_bits
        if n_particles is None or n_particles * LN10 >= math.log(max(ln_bits, 1e-300)):
            exponent = ln_bits
        else:
            exponent = min(10.0**n_particles, ln_bits)
        log10_ticks = exponent / LN10
    else:
        raise DomainError(f"unknown interpretation {interpretation!r}")
    return RecurrenceCap(interpretation, log10_ticks + log10_tp, constants.year_seconds)


def lyapunov_horizon(
    lam: float, budget_bits: float, initial_uncertainty_bits: float = 0.0
) -> float:
    """Seconds until errors growing as exp(lam t) use up ``budget_bits``.

    ``initial_uncertainty_bits`` is the precision already lost at t = 0; it
    must be below the budget.
    """
    lam = as_si(lam, RATE, "lambda")
    if not lam > 0:
        raise NonPositiveLyapunov(f"Lyapunov exponent must be > 0, got {lam!r}")
    if not budget_bits > initial_uncertainty_bits:
        raise DomainError("budget must exceed the initial uncertainty")
    return budget_bits * math.log(2.0) / lam


def redshift_cutoff(efold_time, bound: InfoBound) -> float:
    """Time for an exponential redshift with e-folding ``efold_time`` to reach the bound."""
    tau = as_si(efold_time, TIME, "efold_time")
    if not tau > 0:
        raise DomainError(f"e-folding time must be > 0, got {tau!r}")
    if not bound.bits > 1:
        raise BoundBelowOneBit(f"bound must exceed one, got {bound.bits!r}")
    return tau * bound.ln_bits
