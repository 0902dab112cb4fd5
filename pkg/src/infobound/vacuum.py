"""Zero-point vacuum energy under different ultraviolet cutoffs.

Conventions: a massless scalar field in a periodic cube of side L, so the
modes are ``omega = (2 pi c / L) |n|`` for integer triples ``n`` and each
contributes ``hbar omega / 2``. ``polarizations`` multiplies every scheme
that counts modes (2 for a photon-like field).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import (
    InsufficientSamples,
    ModeBudgetTooLarge,
    NonMonotoneTimes,
    NonPositiveCutoff,
    NonPositiveDensity,
    NonPositiveInputs,
    NonPositiveLength,
)
from .units import (
    CODATA2018,
    ENERGY_DENSITY,
    LENGTH,
    RATE,
    ConstantsSet,
    Quantity,
    as_si,
    planck_energy_density,
    planck_time,
)

MAX_MODE_INDEX = 200


class Scheme(str, enum.Enum):
    DISCRETE_SUM = "discrete-sum"
    PLANCK_CUTOFF = "planck-cutoff"
    HOLOGRAPHIC_CUTOFF = "holographic-cutoff"
    COLLAPSE_BOUND = "collapse-bound"
    GEOMETRIC_MEAN = "geometric-mean"

    def __str__(self):
        return self.value


def vacuum_pressure(rho: float) -> float:
    """Vacuum equation of state p = -rho."""
    rho = as_si(rho, ENERGY_DENSITY, "rho")
    if rho < 0:
        raise NonPositiveDensity(f"rho must be >= 0, got {rho!r}")
    return -rho


@dataclass(frozen=True)
class VacuumEstimate:
    scheme: Scheme
    rho: float
    pressure: float
    cutoff_descriptor: str
    box_scale_L: float | None = None

    @classmethod
    def make(cls, scheme, rho, descriptor, L=None) -> "VacuumEstimate":
        if not (rho > 0 and math.isfinite(rho)):
            raise NonPositiveDensity(f"{scheme}: density must be finite and > 0, got {rho!r}")
        return cls(Scheme(scheme), rho, vacuum_pressure(rho), descriptor, L)

    @property
    def log10_rho(self) -> float:
        return math.log10(self.rho)


def _shell_counts(n_max: int) -> np.ndarray:
    """Number of integer triples with |n|^2 == s, for s = 0 .. n_max^2."""
    r2 = n_max * n_max
    axis = np.arange(-n_max, n_max + 1, dtype=np.int64)
    sq = axis * axis
    plane = sq[:, None] + sq[None, :]
    counts = np.zeros(r2 + 1, dtype=np.int64)
    for x2 in sq:
        s = (plane + x2).ravel()
        counts += np.bincount(s[s <= r2], minlength=r2 + 1)
    return counts


def discrete_mode_sum(
    L, n_max: int, constants: ConstantsSet = CODATA2018, polarizations: int = 1
) -> VacuumEstimate:
    """Exact zero-point sum over the modes 0 < |n| <= n_max of a periodic box.

    Modes are grouped by |n|^2 and accumulated with ``math.fsum``, so the
    result does not depend on traversal order.
    """
    L = as_si(L, LENGTH, "L")
    if not L > 0:
        raise NonPositiveLength(f"L must be > 0, got {L!r}")
    n_max = int(n_max)
    if not 1 <= n_max <= MAX_MODE_INDEX:
        raise ModeBudgetTooLarge(f"n_max must be in [1, {MAX_MODE_INDEX}], got {n_max}")
    counts = _shell_counts(n_max)
    s = np.nonzero(counts)[0]
    s = s[s > 0]
    sum_norm = math.fsum((counts[s] * np.sqrt(s.astype(float))).tolist())
    k = constants
    omega1 = 2.0 * math.pi * k.c / L
    rho = polarizations * 0.5 * k.hbar * omega1 * sum_norm / L**3
    return VacuumEstimate.make(Scheme.DISCRETE_SUM, rho, f"n_max={n_max}", L)


def continuum_cutoff_density(
    omega_c, constants: ConstantsSet = CODATA2018, polarizations: int = 1
) -> VacuumEstimate:
    """Continuum limit of the mode sum up to angular frequency ``omega_c``.

    One scalar polarization gives ``hbar omega_c^4 / (16 pi^2 c^3)``.
    """
    w = as_si(omega_c, RATE, "omega_c")
    if not w > 0:
        raise NonPositiveCutoff(f"omega_c must be > 0, got {w!r}")
    k = constants
    rho = polarizations * k.hbar * w**4 / (16.0 * math.pi**2 * k.c**3)
    return VacuumEstimate.make(Scheme.PLANCK_CUTOFF, rho, f"omega_c={w:.6e} s^-1")


def planck_cutoff_density(
    convention: str = "1/tP",
    constants: ConstantsSet = CODATA2018,
    polarizations: int = 1,
) -> VacuumEstimate:
    """Continuum density with the cutoff at the Planck frequency.

    ``convention`` is ``"1/tP"`` (default) or ``"2pi/tP"``.
    """
    t_p = planck_time(constants).value
    if convention == "1/tP":
        w = 1.0 / t_p
    elif convention == "2pi/tP":
        w = 2.0 * math.pi / t_p
    else:
        raise ValueError(f"unknown Planck cutoff convention {convention!r}")
    est = continuum_cutoff_density(w, constants, polarizations)
    return VacuumEstimate.make(
        Scheme.PLANCK_CUTOFF, est.rho, f"omega_c={convention} ({w:.6e} s^-1)"
    )


def holographic_cutoff_density(
    L, mode_budget_bits: float, constants: ConstantsSet = CODATA2018
) -> VacuumEstimate:
    """hbar c B / L^4, with the quartic mode sum replaced by the bit budget B."""
    L = as_si(L, LENGTH, "L")
    if not (L > 0 and mode_budget_bits > 0):
        raise NonPositiveInputs(
            f"L and mode budget must be > 0, got L={L!r}, budget={mode_budget_bits!r}"
        )
    rho = constants.hbar * constants.c * mode_budget_bits / L**4
    return VacuumEstimate.make(
        Scheme.HOLOGRAPHIC_CUTOFF, rho, f"mode_budget={mode_budget_bits:.6e}", L
    )


def literal_quartic_sum(n_max: int) -> int:
    """Sum of |n|^4 over integer triples with 0 < |n| <= n_max.

    Diagnostic for the literal reading of the quartic sum; it grows like
    (4 pi / 7) n_max^7 rather than acting as a fixed budget.
    """
    counts = _shell_counts(int(n_max))
    return sum(c * s * s for s, c in enumerate(counts.tolist()) if c)


def collapse_bound_density(L, constants: ConstantsSet = CODATA2018) -> VacuumEstimate:
    """c^4 / (G L^2): the density at which a box of size L would collapse."""
    L_si = as_si(L, LENGTH, "L")
    if not L_si > 0:
        raise NonPositiveLength(f"L must be > 0, got {L_si!r}")
    k = constants
    rho = (k.c_q**4 / (k.G_q * Quantity(L_si, LENGTH) ** 2)).to(ENERGY_DENSITY)
    return VacuumEstimate.make(Scheme.COLLAPSE_BOUND, rho, f"L={L_si:.6e} m", L_si)


def hubble_energy_density(R_H, constants: ConstantsSet = CODATA2018) -> float:
    """One quantum of wavelength R_H spread over a Hubble volume (J/m^3)."""
    R = as_si(R_H, LENGTH, "R_H")
    if not R > 0:
        raise NonPositiveLength(f"R_H must be > 0, got {R!r}")
    energy = constants.hbar * constants.c * 2.0 * math.pi / R
    return energy / (4.0 / 3.0 * math.pi * R**3)


def geometric_mean_bound(rho_P, rho_H, L: float | None = None) -> VacuumEstimate:
    """sqrt(rho_P * rho_H)."""
    p = as_si(rho_P, ENERGY_DENSITY, "rho_P")
    h = as_si(rho_H, ENERGY_DENSITY, "rho_H")
    if not (p > 0 and h > 0):
        raise NonPositiveDensity(f"densities must be > 0, got {p!r}, {h!r}")
    rho = math.sqrt(p) * math.sqrt(h)
    return VacuumEstimate.make(
        Scheme.GEOMETRIC_MEAN, rho, f"rho_P={p:.6e}, rho_H={h:.6e}", L
    )


def geometric_mean_at_hubble(R_H, constants: ConstantsSet = CODATA2018) -> VacuumEstimate:
    return geometric_mean_bound(
        planck_energy_density(constants).value,
        hubble_energy_density(R_H, constants),
        L=as_si(R_H, LENGTH, "R_H"),
    )


def compare_schemes(
    L: float,
    mode_budget_bits: float = 1e122,
    constants: ConstantsSet = CODATA2018,
    n_max: int | None = None,
) -> list[VacuumEstimate]:
    """Every scheme evaluated at box/horizon scale ``L``."""
    out = [
        planck_cutoff_density("1/tP", constants),
        planck_cutoff_density("2pi/tP", constants),
        holographic_cutoff_density(L, mode_budget_bits, constants),
        collapse_bound_density(L, constants),
        geometric_mean_at_hubble(L, constants),
    ]
    if n_max is not None:
        out.insert(0, discrete_mode_sum(L, n_max, constants))
    return out


@dataclass(frozen=True)
class ConservationSeries:
    times: np.ndarray
    rho: np.ndarray
    scale_factor: np.ndarray
    residual: np.ndarray

    def rows(self):
        for t, a, r, res in zip(self.times, self.scale_factor, self.rho, self.residual):
            yield float(t), float(a), float(r), float(res)


def _sample(x, times: np.ndarray, name: str) -> np.ndarray:
    if callable(x):
        arr = np.asarray([x(t) for t in times], dtype=float)
    else:
        arr = np.asarray(x, dtype=float)
    if arr.shape != times.shape:
        raise InsufficientSamples(f"{name} has {arr.size} samples, times has {times.size}")
    return arr


def conservation_residual(
    times: Sequence[float],
    rho_of_t: Sequence[float] | Callable[[float], float],
    a_of_t: Sequence[float] | Callable[[float], float],
) -> ConservationSeries:
    """Energy-conservation defect of a vacuum fluid with p = -rho.

    ``residual = [p d(a^3)/dt + d(rho a^3)/dt] / a^3`` evaluated with
    second-order finite differences (central inside, one-sided at the ends;
    non-uniform grids allowed). It vanishes iff rho is constant.
    """
    t = np.asarray(times, dtype=float)
    if t.ndim != 1 or t.size < 3:
        raise InsufficientSamples(f"need at least 3 samples, got {t.size}")
    if np.any(np.diff(t) <= 0):
        raise NonMonotoneTimes("times must be strictly increasing")
    rho = _sample(rho_of_t, t, "rho")
    a = _sample(a_of_t, t, "a")
    if np.any(a <= 0) or np.any(rho <= 0):
        raise NonPositiveInputs("rho and a must be positive at every sample")
    a3 = a**3
    p = -rho
    d_a3 = np.gradient(a3, t, edge_order=2)
    d_rho_a3 = np.gradient(rho * a3, t, edge_order=2)
    residual = (p * d_a3 + d_rho_a3) / a3
    return ConservationSeries(t, rho, a, residual)


def holographic_density_history(
    times: Sequence[float],
    ref_bits: float = 1e122,
    ref_t: float = 4.35e17,
    constants: ConstantsSet = CODATA2018,
) -> np.ndarray:
    """Holographic-cutoff density when the horizon is L = c t and the bit
    budget grows as t^2; falls off like 1/t^2."""
    t = np.asarray(times, dtype=float)
    L = constants.c * t
    budget = ref_bits * (t / ref_t) ** 2
    return constants.hbar * constants.c * budget / L**4
