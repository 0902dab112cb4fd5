"""Dimensioned quantities, physical constants and Planck units.

Everything is SI. A :class:`Quantity` carries a float value and a
:class:`Dimension`, an integer exponent vector over (length, mass, time,
temperature). Arithmetic checks dimensions at runtime on every operation and
raises on mismatch.

Other modules accept either plain floats (taken to be SI) or quantities at
their boundaries; :func:`as_si` does the check-and-unwrap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields, replace
from fractions import Fraction
from numbers import Real

from .errors import (
    DimensionMismatch,
    DivisionByZero,
    DomainError,
    NonFiniteValue,
    NonIntegerPowerOfDimensioned,
)

__all__ = [
    "Dimension",
    "Quantity",
    "ConstantsSet",
    "CODATA2018",
    "DIMENSIONLESS",
    "LENGTH",
    "MASS",
    "TIME",
    "TEMPERATURE",
    "AREA",
    "VOLUME",
    "SPEED",
    "RATE",
    "ENERGY",
    "ENERGY_DENSITY",
    "as_si",
    "quantity_arith",
    "planck_length",
    "planck_time",
    "planck_mass",
    "planck_energy_density",
]

_BASIS = ("m", "kg", "s", "K")


@dataclass(frozen=True)
class Dimension:
    """Exponents of (length, mass, time, temperature)."""

    length: int = 0
    mass: int = 0
    time: int = 0
    temperature: int = 0

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise TypeError(f"dimension exponent {f.name} must be int, got {v!r}")

    @property
    def exponents(self) -> tuple[int, int, int, int]:
        return (self.length, self.mass, self.time, self.temperature)

    @classmethod
    def from_exponents(cls, exps) -> "Dimension":
        return cls(*(int(e) for e in exps))

    @property
    def dimensionless(self) -> bool:
        return not any(self.exponents)

    def __mul__(self, other: "Dimension") -> "Dimension":
        return Dimension.from_exponents(a + b for a, b in zip(self.exponents, other.exponents))

    def __truediv__(self, other: "Dimension") -> "Dimension":
        return Dimension.from_exponents(a - b for a, b in zip(self.exponents, other.exponents))

    def __pow__(self, p) -> "Dimension":
        p = Fraction(p)
        out = []
        for e in self.exponents:
            q = e * p
            if q.denominator != 1:
                raise NonIntegerPowerOfDimensioned(
                    f"{self} ** {p} gives non-integer exponents"
                )
            out.append(int(q))
        return Dimension.from_exponents(out)

    def __str__(self) -> str:
        parts = [f"{u}^{e}" if e != 1 else u for u, e in zip(_BASIS, self.exponents) if e]
        return " ".join(parts) or "1"


DIMENSIONLESS = Dimension()
LENGTH = Dimension(length=1)
MASS = Dimension(mass=1)
TIME = Dimension(time=1)
TEMPERATURE = Dimension(temperature=1)
AREA = LENGTH**2
VOLUME = LENGTH**3
SPEED = LENGTH / TIME
RATE = DIMENSIONLESS / TIME
ENERGY = MASS * AREA / TIME**2
ENERGY_DENSITY = ENERGY / VOLUME


@dataclass(frozen=True)
class Quantity:
    value: float
    dims: Dimension = DIMENSIONLESS

    def __post_init__(self):
        v = float(self.value)
        if not math.isfinite(v):
            raise NonFiniteValue(f"quantity value must be finite, got {self.value!r}")
        object.__setattr__(self, "value", v)

    @classmethod
    def _coerce(cls, x) -> "Quantity":
        if isinstance(x, Quantity):
            return x
        if isinstance(x, Real):
            return cls(float(x))
        return NotImplemented

    def __add__(self, other):
        other = Quantity._coerce(other)
        if other is NotImplemented:
            return other
        if self.dims != other.dims:
            raise DimensionMismatch(f"cannot add [{self.dims}] and [{other.dims}]")
        return Quantity(self.value + other.value, self.dims)

    __radd__ = __add__

    def __sub__(self, other):
        other = Quantity._coerce(other)
        if other is NotImplemented:
            return other
        if self.dims != other.dims:
            raise DimensionMismatch(f"cannot subtract [{other.dims}] from [{self.dims}]")
        return Quantity(self.value - other.value, self.dims)

    def __rsub__(self, other):
        other = Quantity._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = Quantity._coerce(other)
        if other is NotImplemented:
            return other
        return Quantity(self.value * other.value, self.dims * other.dims)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = Quantity._coerce(other)
        if other is NotImplemented:
            return other
        if other.value == 0.0:
            raise DivisionByZero("division by a zero quantity")
        return Quantity(self.value / other.value, self.dims / other.dims)

    def __rtruediv__(self, other):
        other = Quantity._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, p):
        if isinstance(p, Quantity):
            if not p.dims.dimensionless:
                raise DimensionMismatch("exponent must be dimensionless")
            p = p.value
        if self.dims.dimensionless:
            return Quantity(self.value ** float(p))
        # Rational exponents are allowed when the result has integer dimensions
        # (sqrt of an area is a length).
        frac = Fraction(p).limit_denominator(64) if isinstance(p, float) else Fraction(p)
        if isinstance(p, float) and float(frac) != p:
            raise NonIntegerPowerOfDimensioned(f"exponent {p!r} is not rational")
        dims = self.dims**frac
        return Quantity(self.value ** float(frac), dims)

    def __neg__(self):
        return Quantity(-self.value, self.dims)

    def __abs__(self):
        return Quantity(abs(self.value), self.dims)

    def __float__(self):
        if not self.dims.dimensionless:
            raise DimensionMismatch(f"cannot convert [{self.dims}] to a plain float")
        return self.value

    def _cmp_value(self, other) -> float:
        other = Quantity._coerce(other)
        if other is NotImplemented:
            raise TypeError(f"cannot compare Quantity with {type(other).__name__}")
        if self.dims != other.dims:
            raise DimensionMismatch(f"cannot compare [{self.dims}] with [{other.dims}]")
        return other.value

    def __lt__(self, other):
        return self.value < self._cmp_value(other)

    def __le__(self, other):
        return self.value <= self._cmp_value(other)

    def __gt__(self, other):
        return self.value > self._cmp_value(other)

    def __ge__(self, other):
        return self.value >= self._cmp_value(other)

    def sqrt(self) -> "Quantity":
        return self ** Fraction(1, 2)

    def to(self, dims: Dimension) -> float:
        """Return the SI value after asserting the dimension."""
        if self.dims != dims:
            raise DimensionMismatch(f"expected [{dims}], got [{self.dims}]")
        return self.value

    def __str__(self) -> str:
        return f"{self.value:.6g} {self.dims}"


def quantity_arith(a: Quantity, b, op: str) -> Quantity:
    """Functional form of quantity arithmetic; ``op`` is add, sub, mul, div or pow."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "pow":
        return a**b
    raise ValueError(f"unknown operation {op!r}")


def as_si(x, dims: Dimension, name: str = "value") -> float:
    """Unwrap ``x`` to an SI float, checking dimensions if it is a Quantity."""
    if isinstance(x, Quantity):
        if x.dims != dims:
            raise DimensionMismatch(f"{name}: expected [{dims}], got [{x.dims}]")
        return x.value
    v = float(x)
    if not math.isfinite(v):
        raise NonFiniteValue(f"{name} must be finite, got {x!r}")
    return v


@dataclass(frozen=True)
class ConstantsSet:
    """Fundamental constants in SI. Defaults are CODATA 2018."""

    c: float = 299792458.0
    G: float = 6.67430e-11
    hbar: float = 1.054571817e-34
    k_B: float = 1.380649e-23
    year_seconds: float = 365.25 * 86400.0

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if not (isinstance(v, Real) and math.isfinite(v) and v > 0):
                raise DomainError(f"constant {f.name} must be finite and > 0, got {v!r}")
            object.__setattr__(self, f.name, float(v))

    def replace(self, **overrides) -> "ConstantsSet":
        return replace(self, **overrides)

    def as_dict(self) -> dict[str, float]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    # dimensioned views
    @property
    def c_q(self) -> Quantity:
        return Quantity(self.c, SPEED)

    @property
    def G_q(self) -> Quantity:
        return Quantity(self.G, VOLUME / MASS / TIME**2)

    @property
    def hbar_q(self) -> Quantity:
        return Quantity(self.hbar, ENERGY * TIME)

    @property
    def k_B_q(self) -> Quantity:
        return Quantity(self.k_B, ENERGY / TEMPERATURE)


CODATA2018 = ConstantsSet()


def planck_length(constants: ConstantsSet = CODATA2018) -> Quantity:
    """sqrt(hbar G / c^3), about 1.616e-35 m with CODATA values."""
    k = constants
    return (k.hbar_q * k.G_q / k.c_q**3).sqrt()


def planck_time(constants: ConstantsSet = CODATA2018) -> Quantity:
    k = constants
    return (k.hbar_q * k.G_q / k.c_q**5).sqrt()


def planck_mass(constants: ConstantsSet = CODATA2018) -> Quantity:
    k = constants
    return (k.hbar_q * k.c_q / k.G_q).sqrt()


def planck_energy_density(constants: ConstantsSet = CODATA2018) -> Quantity:
    """c^7 / (hbar G^2), about 4.6e113 J/m^3."""
    k = constants
    return k.c_q**7 / (k.hbar_q * k.G_q**2)
