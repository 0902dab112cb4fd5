"""Information bounds: black-hole entropy, holographic bits, t^2 scaling.

Bit counts reach 1e122 and their products overflow quickly, so every
:class:`InfoBound` carries ``log10_bits`` next to ``bits`` and downstream code
that needs logarithms reads that field instead of re-deriving it.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .cosmology import horizon_area
from .errors import (
    BoundBelowOneBit,
    DomainError,
    NegativeEntropy,
    NonPositiveArea,
    NonPositiveMass,
    NonPositiveRadius,
    NonPositiveTime,
)
from .units import AREA, CODATA2018, LENGTH, MASS, TIME, ConstantsSet, as_si, planck_length

LN2 = math.log(2.0)
LOG2_10 = math.log2(10.0)

# Present-day reference for t^2 scaling: ~1e122 bits at ~13.8 Gyr.
LLOYD_REF_BITS = 1e122
LLOYD_REF_T = 4.35e17
GUTH_REQUIRED_EXPANSION = 1e20


class BoundMethod(str, enum.Enum):
    HOLOGRAPHIC_EVENT = "holographic-event"
    HOLOGRAPHIC_PARTICLE = "holographic-particle"
    LLOYD_SCALED = "lloyd-scaled"
    BLACK_HOLE = "black-hole"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class InfoBound:
    bits: float
    method: BoundMethod
    epoch_t: float | None = None
    log10_bits: float = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "method", BoundMethod(self.method))
        if self.log10_bits is None:
            if not (self.bits >= 0 and math.isfinite(self.bits)):
                raise DomainError(f"bits must be finite and >= 0, got {self.bits!r}")
            lg = math.log10(self.bits) if self.bits > 0 else -math.inf
            object.__setattr__(self, "log10_bits", lg)
        if self.bits < 0:
            raise DomainError(f"bits must be >= 0, got {self.bits!r}")
        if self.method is BoundMethod.LLOYD_SCALED and self.epoch_t is None:
            raise DomainError("lloyd-scaled bounds must record their epoch")

    @classmethod
    def from_log10(cls, log10_bits: float, method, epoch_t=None) -> "InfoBound":
        """Build a bound whose bit count may not fit in a float."""
        bits = 10.0**log10_bits if log10_bits < 308 else math.inf
        return cls(bits=bits, method=method, epoch_t=epoch_t, log10_bits=log10_bits)

    @property
    def ln_bits(self) -> float:
        if 0 < self.bits < math.inf:
            return math.log(self.bits)
        return self.log10_bits * math.log(10.0)


@dataclass(frozen=True)
class BlackHoleRecord:
    mass: float
    schwarzschild_radius: float
    area: float
    entropy_over_k: float
    bits: float


def bh_entropy(M, constants: ConstantsSet = CODATA2018) -> BlackHoleRecord:
    """Bekenstein-Hawking entropy of a Schwarzschild hole of mass ``M`` (kg).

    ``entropy_over_k = 4 pi G M^2 / (hbar c)``, identical to ``A / (4 L_P^2)``.
    """
    m = as_si(M, MASS, "M")
    if not m > 0:
        raise NonPositiveMass(f"mass must be > 0, got {m!r}")
    k = constants
    r_s = 2.0 * k.G * m / k.c**2
    area = 4.0 * math.pi * r_s**2
    s = 4.0 * math.pi * k.G * m * m / (k.hbar * k.c)
    return BlackHoleRecord(
        mass=m,
        schwarzschild_radius=r_s,
        area=area,
        entropy_over_k=s,
        bits=entropy_to_bits(s),
    )


def entropy_to_bits(entropy_over_k: float) -> float:
    """Convert a dimensionless entropy S/k (natural log base) to bits."""
    s = float(entropy_over_k)
    if s < 0:
        raise NegativeEntropy(f"entropy must be >= 0, got {s!r}")
    return s / LN2


def literal_log2_inversion(entropy_over_k: float) -> InfoBound:
    """Diagnostic only: read ``S = k log2 I`` literally, so ``I = 2^(S/k)``.

    This makes information exponential in entropy and disagrees with the
    area-counting used everywhere else. Returned in the log domain because
    it overflows for any macroscopic entropy.
    """
    s = float(entropy_over_k)
    if s < 0:
        raise NegativeEntropy(f"entropy must be >= 0, got {s!r}")
    return InfoBound.from_log10(s * math.log10(2.0), BoundMethod.BLACK_HOLE)


def holographic_bound(
    area,
    method: BoundMethod | str = BoundMethod.HOLOGRAPHIC_EVENT,
    constants: ConstantsSet = CODATA2018,
    epoch_t: float | None = None,
) -> InfoBound:
    """Bits enclosed by a surface: one per four Planck areas."""
    a = as_si(area, AREA, "area")
    if not a > 0:
        raise NonPositiveArea(f"area must be > 0, got {a!r}")
    lp2 = planck_length(constants).value ** 2
    return InfoBound(bits=a / (4.0 * lp2), method=method, epoch_t=epoch_t)


def lloyd_bound(
    t, ref_bits: float = LLOYD_REF_BITS, ref_t: float = LLOYD_REF_T
) -> InfoBound:
    """Scale a reference bit count to epoch ``t`` as (t / ref_t)^2."""
    t = as_si(t, TIME, "t")
    ref_t = as_si(ref_t, TIME, "ref_t")
    if not (t > 0 and ref_t > 0):
        raise NonPositiveTime(f"times must be > 0, got t={t!r}, ref_t={ref_t!r}")
    if not ref_bits > 0:
        raise DomainError(f"ref_bits must be > 0, got {ref_bits!r}")
    log10_bits = math.log10(ref_bits) + 2.0 * (math.log10(t) - math.log10(ref_t))
    return InfoBound(
        bits=ref_bits * (t / ref_t) ** 2,
        method=BoundMethod.LLOYD_SCALED,
        epoch_t=t,
        log10_bits=log10_bits,
    )


def specifiability_limit(bound: InfoBound) -> int:
    """Largest qubit count n with 2^n not exceeding the bound: floor(log2 bits)."""
    if not bound.bits >= 1:
        raise BoundBelowOneBit(f"bound must hold at least one bit, got {bound.bits!r}")
    if math.isfinite(bound.bits):
        # frexp is exact: bits = m * 2^e with 0.5 <= m < 1, so floor(log2) = e - 1.
        _, e = math.frexp(bound.bits)
        return e - 1
    return math.floor(bound.log10_bits * LOG2_10)


@dataclass(frozen=True)
class InflationLimit:
    radius: float
    area: float
    planck_areas: float
    max_expansion: float
    max_efolds: float
    required_expansion: float
    verdict: str


def inflation_expansion_limit(
    pre_inflation_horizon_radius,
    required_expansion: float = GUTH_REQUIRED_EXPANSION,
    constants: ConstantsSet = CODATA2018,
) -> InflationLimit:
    """Cap on a(after)/a(before) set by the holographic bits of the horizon.

    The verdict compares the cap against ``required_expansion`` (Guth's 1e20 by
    default).
    """
    r = as_si(pre_inflation_horizon_radius, LENGTH, "radius")
    if not r > 0:
        raise NonPositiveRadius(f"radius must be > 0, got {r!r}")
    area = horizon_area(r)
    bound = holographic_bound(area, BoundMethod.HOLOGRAPHIC_PARTICLE, constants)
    cap = bound.bits
    if cap >= required_expansion:
        verdict = "consistent: bound allows required expansion"
    else:
        verdict = "marginal: bound below requirement"
    return InflationLimit(
        radius=r,
        area=area,
        planck_areas=area / planck_length(constants).value ** 2,
        max_expansion=cap,
        max_efolds=math.log(cap) if cap > 0 else -math.inf,
        required_expansion=required_expansion,
        verdict=verdict,
    )
