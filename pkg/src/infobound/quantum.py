"""Small state-vector simulator and compression-based complexity estimates.

Qubit 0 is the most significant bit of the basis index. Registers are
immutable: every gate or noise application returns a new register.

Compressed lengths are *upper bounds* on algorithmic information of a fixed
serialization. A generic compressor does not recognise that, say, the digits
of pi are algorithmically simple, so the bound can be very loose.
"""

from __future__ import annotations

import csv
import enum
import io
import math
import zlib
from dataclasses import dataclass, field
from typing import Sequence

import mpmath
import numpy as np

from .errors import (
    BasisIndexOutOfRange,
    DomainError,
    InvalidTargets,
    NonPositiveArea,
    NonUnitaryMatrix,
    PrecisionOutOfRange,
    QubitCountOutOfRange,
)
from .units import AREA, CODATA2018, ConstantsSet, as_si, planck_length

DEFAULT_QUBIT_CAP = 14
COMPRESSOR_ID = "zlib-deflate-level9"
# Serialized header: big-endian float64 block scale.
HEADER_BITS = 64
NORM_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class QubitRegister:
    n: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=np.complex128)
        if amps.shape != (1 << self.n,):
            raise DomainError(f"expected {1 << self.n} amplitudes, got shape {amps.shape}")
        norm = float(np.vdot(amps, amps).real)
        if abs(norm - 1.0) > NORM_TOL:
            raise DomainError(f"register not normalised: sum |a|^2 = {norm!r}")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def norm_error(self) -> float:
        return abs(float(np.vdot(self.amplitudes, self.amplitudes).real) - 1.0)

    def __eq__(self, other):
        if not isinstance(other, QubitRegister):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.amplitudes, other.amplitudes)

    __hash__ = None


def _normalized(n: int, vec: np.ndarray) -> QubitRegister:
    vec = np.asarray(vec, dtype=np.complex128)
    return QubitRegister(n, vec / math.sqrt(float(np.vdot(vec, vec).real)))


def pi_digits(count: int) -> list[int]:
    """The first ``count`` decimal digits of pi, starting 3, 1, 4, ..."""
    with mpmath.workdps(count + 20):
        s = mpmath.nstr(mpmath.pi, count + 10, strip_zeros=False)
    return [int(ch) for ch in s.replace(".", "")[:count]]


def init_state(
    n: int,
    spec: str = "basis",
    k: int = 0,
    seed: int = 0,
    cap: int = DEFAULT_QUBIT_CAP,
) -> QubitRegister:
    """Prepare an ``n``-qubit register.

    ``spec`` is one of ``basis`` (|k>), ``uniform``, ``seeded-random``
    (Haar-random from ``seed``) or ``pi-digit`` (real amplitudes proportional
    to successive decimal digits of pi).
    """
    if not (isinstance(n, (int, np.integer)) and 1 <= n <= cap):
        raise QubitCountOutOfRange(f"n must be in [1, {cap}], got {n!r}")
    n = int(n)
    dim = 1 << n
    if spec == "basis":
        if not 0 <= k < dim:
            raise BasisIndexOutOfRange(f"basis index {k} outside [0, {dim})")
        vec = np.zeros(dim, dtype=np.complex128)
        vec[k] = 1.0
        return QubitRegister(n, vec)
    if spec == "uniform":
        return QubitRegister(n, np.full(dim, 1.0 / math.sqrt(dim), dtype=np.complex128))
    if spec == "seeded-random":
        rng = np.random.default_rng(seed)
        vec = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        return _normalized(n, vec)
    if spec == "pi-digit":
        digits = np.array(pi_digits(dim), dtype=float)
        return _normalized(n, digits / 9.0)
    raise DomainError(f"unknown state spec {spec!r}")


_SQ2 = 1.0 / math.sqrt(2.0)
GATES_1Q = {
    "X": np.array([[0, 1], [1, 0]], dtype=np.complex128),
    "H": np.array([[_SQ2, _SQ2], [_SQ2, -_SQ2]], dtype=np.complex128),
    "T": np.array([[1, 0], [0, np.exp(1j * math.pi / 4)]], dtype=np.complex128),
}


def _check_unitary(u: np.ndarray) -> np.ndarray:
    u = np.asarray(u, dtype=np.complex128)
    if u.shape != (2, 2):
        raise NonUnitaryMatrix(f"single-qubit gate must be 2x2, got {u.shape}")
    if np.max(np.abs(u.conj().T @ u - np.eye(2))) > 1e-10:
        raise NonUnitaryMatrix("matrix fails the unitarity check U^dagger U = I")
    return u


def _apply_1q(amps: np.ndarray, n: int, u: np.ndarray, q: int) -> np.ndarray:
    psi = amps.reshape((1 << q, 2, 1 << (n - q - 1)))
    return np.einsum("ij,ajb->aib", u, psi).reshape(-1)


def _apply_cnot(amps: np.ndarray, n: int, control: int, target: int) -> np.ndarray:
    psi = amps.reshape((2,) * n).copy()
    sel = [slice(None)] * n
    sel[control] = 1
    sub = psi[tuple(sel)]
    t_axis = target if target < control else target - 1
    psi[tuple(sel)] = np.flip(sub, axis=t_axis)
    return psi.reshape(-1)


def apply_gate(
    reg: QubitRegister,
    gate: str,
    targets: int | Sequence[int],
    matrix: np.ndarray | None = None,
) -> QubitRegister:
    """Apply ``X``, ``H``, ``T``, ``CNOT`` (targets = control, target) or ``U``
    (general single-qubit unitary given by ``matrix``)."""
    tg = [targets] if isinstance(targets, (int, np.integer)) else list(targets)
    if any(not (isinstance(q, (int, np.integer)) and 0 <= q < reg.n) for q in tg):
        raise InvalidTargets(f"targets {tg} invalid for {reg.n} qubits")
    if len(set(tg)) != len(tg):
        raise InvalidTargets(f"targets {tg} are not distinct")
    amps = reg.amplitudes
    if gate == "CNOT":
        if len(tg) != 2:
            raise InvalidTargets("CNOT takes (control, target)")
        out = _apply_cnot(amps, reg.n, int(tg[0]), int(tg[1]))
    else:
        if len(tg) != 1:
            raise InvalidTargets(f"{gate} acts on exactly one qubit")
        if gate == "U":
            if matrix is None:
                raise NonUnitaryMatrix("general gate needs a matrix")
            u = _check_unitary(matrix)
        elif gate in GATES_1Q:
            u = GATES_1Q[gate]
        else:
            raise DomainError(f"unknown gate {gate!r}")
        out = _apply_1q(amps, reg.n, u, int(tg[0]))
    return QubitRegister(reg.n, out)


class NoiseKind(str, enum.Enum):
    PHASE_JITTER = "phase-jitter"
    SMALL_ROTATION = "small-rotation"
    DEPOLARIZING_APPROX = "depolarizing-approx"


@dataclass(frozen=True)
class NoiseModel:
    kind: NoiseKind = NoiseKind.SMALL_ROTATION
    rate: float = 0.1
    sigma: float = 0.05
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "kind", NoiseKind(self.kind))
        if not 0.0 <= self.rate <= 1.0:
            raise DomainError(f"rate must be in [0, 1], got {self.rate!r}")
        if not self.sigma > 0:
            raise DomainError(f"sigma must be > 0, got {self.sigma!r}")
        if not 0 <= int(self.seed) < 2**64:
            raise DomainError(f"seed must be a 64-bit unsigned integer, got {self.seed!r}")

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(int(self.seed))


_PAULI = (
    np.array([[0, 1], [1, 0]], dtype=np.complex128),
    np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    np.array([[1, 0], [0, -1]], dtype=np.complex128),
)


def _rotation(axis: np.ndarray, theta: float) -> np.ndarray:
    gen = axis[0] * _PAULI[0] + axis[1] * _PAULI[1] + axis[2] * _PAULI[2]
    return math.cos(theta / 2) * np.eye(2) - 1j * math.sin(theta / 2) * gen


def _error_unitary(model: NoiseModel, rng: np.random.Generator) -> np.ndarray:
    theta = rng.normal(0.0, model.sigma)
    if model.kind is NoiseKind.PHASE_JITTER:
        return np.array([[1, 0], [0, np.exp(1j * theta)]], dtype=np.complex128)
    if model.kind is NoiseKind.SMALL_ROTATION:
        axis = rng.standard_normal(3)
        axis /= np.linalg.norm(axis)
        return _rotation(axis, theta)
    axis = np.zeros(3)
    axis[rng.integers(3)] = 1.0
    return _rotation(axis, theta)


def inject_error(
    reg: QubitRegister, model: NoiseModel, rng: np.random.Generator | None = None
) -> QubitRegister:
    """Perturb each qubit with probability ``model.rate`` by a small random unitary.

    Without ``rng`` the stream is seeded from ``model.seed``; pass a generator
    to continue one stream across many steps.
    """
    if model.rate == 0.0:
        return reg
    if rng is None:
        rng = model.rng()
    amps = reg.amplitudes
    touched = False
    for q in range(reg.n):
        if rng.random() < model.rate:
            amps = _apply_1q(amps, reg.n, _error_unitary(model, rng), q)
            touched = True
    if not touched:
        return reg
    return _normalized(reg.n, amps)


# --- serialization and compression -------------------------------------------------


def _fixed_point_scale(precision_bits: int) -> int:
    return (1 << (precision_bits - 1)) - 1


def _check_precision(precision_bits: int) -> int:
    if not (isinstance(precision_bits, (int, np.integer)) and 4 <= precision_bits <= 64):
        raise PrecisionOutOfRange(f"precision_bits must be in [4, 64], got {precision_bits!r}")
    return int(precision_bits)


def serialize(reg: QubitRegister, precision_bits: int) -> bytes:
    """Canonical byte form of the amplitude set.

    A float64 block scale (the largest absolute component) followed by every
    component (re, im in index order) as a ``precision_bits`` two's-complement
    fixed-point fraction of that scale, bit-packed MSB first.
    """
    p = _check_precision(precision_bits)
    comps = np.empty(2 * reg.amplitudes.size)
    comps[0::2] = reg.amplitudes.real
    comps[1::2] = reg.amplitudes.imag
    block = float(np.max(np.abs(comps)))
    q_scale = _fixed_point_scale(p)
    header = np.array([block], dtype=">f8").tobytes()
    if p <= 52:
        q = np.rint(comps / block * q_scale).astype(np.int64)
        u = q.view(np.uint64).astype(">u8").view(np.uint8).reshape(-1, 8)
        bits = np.unpackbits(u, axis=1)[:, 64 - p :]
        return header + np.packbits(bits.ravel()).tobytes()
    acc = 0
    mask = (1 << p) - 1
    for x in comps.tolist():
        q = max(-q_scale, min(q_scale, round(x / block * q_scale)))
        acc = (acc << p) | (q & mask)
    nbits = p * comps.size
    pad = (-nbits) % 8
    return header + (acc << pad).to_bytes((nbits + pad) // 8, "big")


def deserialize(data: bytes, n: int, precision_bits: int) -> np.ndarray:
    """Inverse of :func:`serialize` up to quantisation."""
    p = _check_precision(precision_bits)
    block = float(np.frombuffer(data[:8], dtype=">f8")[0])
    count = 2 << n
    acc = int.from_bytes(data[8:], "big")
    total = len(data[8:]) * 8
    acc >>= total - p * count
    mask = (1 << p) - 1
    sign = 1 << (p - 1)
    vals = np.empty(count)
    for i in range(count - 1, -1, -1):
        v = acc & mask
        acc >>= p
        vals[i] = v - (1 << p) if v & sign else v
    comps = vals / _fixed_point_scale(p) * block
    return comps[0::2] + 1j * comps[1::2]


@dataclass(frozen=True)
class ComplexityEstimate:
    """``compressed_bits`` is an upper bound on algorithmic information, not H itself."""

    raw_bits: int
    compressed_bits: int
    precision_bits: int
    compressor_id: str = COMPRESSOR_ID

    def __post_init__(self):
        if self.precision_bits < 1:
            raise DomainError("precision_bits must be >= 1")

    @property
    def ratio(self) -> float:
        return self.compressed_bits / self.raw_bits


def complexity_upper_bound(reg: QubitRegister, precision_bits: int = 16) -> ComplexityEstimate:
    data = serialize(reg, precision_bits)
    compressed = zlib.compress(data, 9)
    return ComplexityEstimate(
        raw_bits=2 * reg.amplitudes.size * int(precision_bits),
        compressed_bits=8 * len(compressed),
        precision_bits=int(precision_bits),
    )


@dataclass(frozen=True)
class SpecifiabilityVerdict:
    compressed_bits: int
    bound_bits: float
    bound_bits_quarter: float
    exceeds_bound: bool
    exceeds_bound_quarter: bool
    log10_margin: float
    log10_margin_quarter: float

    @property
    def verdict(self) -> str:
        return "exceeds-bound" if self.exceeds_bound else "within-bound"

    @property
    def verdict_quarter(self) -> str:
        return "exceeds-bound" if self.exceeds_bound_quarter else "within-bound"


def check_specifiability(
    est: ComplexityEstimate, holo_area, constants: ConstantsSet = CODATA2018
) -> SpecifiabilityVerdict:
    """Compare a description length with the area bound, A/L_P^2 and A/(4 L_P^2).

    A description exactly equal to the bound is not counted as exceeding it.
    Margins are log10(bound / compressed_bits).
    """
    area = as_si(holo_area, AREA, "holo_area")
    if not area > 0:
        raise NonPositiveArea(f"area must be > 0, got {area!r}")
    lp2 = planck_length(constants).value ** 2
    full = area / lp2
    quarter = area / (4.0 * lp2)
    h = est.compressed_bits

    def margin(b):
        return math.log10(b) - math.log10(h) if h > 0 else math.inf

    return SpecifiabilityVerdict(
        compressed_bits=h,
        bound_bits=full,
        bound_bits_quarter=quarter,
        exceeds_bound=h > full,
        exceeds_bound_quarter=h > quarter,
        log10_margin=margin(full),
        log10_margin_quarter=margin(quarter),
    )


# --- degradation experiment ------------------------------------------------------------


def simple_layer(reg: QubitRegister) -> QubitRegister:
    """One fixed circuit layer: X on qubit 0 then a CNOT ladder.

    It only permutes basis states, so it can neither grow nor shrink the
    multiset of amplitude values.
    """
    reg = apply_gate(reg, "X", 0)
    for q in range(reg.n - 1):
        reg = apply_gate(reg, "CNOT", (q, q + 1))
    return reg


CSV_COLUMNS = ("step", "trial_stat", "raw_bits", "compressed_bits", "norm_error")


@dataclass
class ExperimentResult:
    n: int
    depth: int
    trials: int
    precision_bits: int
    model: NoiseModel
    control: list[ComplexityEstimate] = field(default_factory=list)
    control_norm_error: list[float] = field(default_factory=list)
    # per step: array of compressed_bits over trials
    noisy_bits: list[np.ndarray] = field(default_factory=list)
    noisy_norm_error: list[float] = field(default_factory=list)
    raw_bits: int = 0

    def mean_bits(self, step: int) -> float:
        return float(np.mean(self.noisy_bits[step]))

    def rows(self):
        for step in range(self.depth + 1):
            c = self.control[step]
            yield (step, "control", self.raw_bits, c.compressed_bits, self.control_norm_error[step])
            b = self.noisy_bits[step]
            ne = self.noisy_norm_error[step]
            yield (step, "mean", self.raw_bits, float(np.mean(b)), ne)
            yield (step, "min", self.raw_bits, int(np.min(b)), ne)
            yield (step, "max", self.raw_bits, int(np.max(b)), ne)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\r\n")
        w.writerow(CSV_COLUMNS)
        for step, stat, raw, bits, ne in self.rows():
            w.writerow([step, stat, raw, repr(bits) if isinstance(bits, float) else bits, repr(ne)])
        return buf.getvalue()


def run_degradation_experiment(
    n: int,
    circuit_depth: int,
    model: NoiseModel,
    trials: int,
    precision_bits: int = 16,
    spec: str = "pi-digit",
    cap: int = DEFAULT_QUBIT_CAP,
) -> ExperimentResult:
    """Track compressed description length of a noisy register over time.

    Every step applies :func:`simple_layer` then :func:`inject_error`. Trial
    ``i`` uses seed ``model.seed + i``. A noiseless control run is recorded
    alongside. ``norm_error`` columns hold the worst |<psi|psi> - 1| seen.
    """
    if trials < 1:
        raise DomainError(f"trials must be >= 1, got {trials!r}")
    if circuit_depth < 0:
        raise DomainError(f"depth must be >= 0, got {circuit_depth!r}")
    _check_precision(precision_bits)
    start = init_state(n, spec, seed=model.seed, cap=cap)
    res = ExperimentResult(n, circuit_depth, trials, precision_bits, model)
    res.raw_bits = complexity_upper_bound(start, precision_bits).raw_bits

    reg = start
    for step in range(circuit_depth + 1):
        if step > 0:
            reg = simple_layer(reg)
        res.control.append(complexity_upper_bound(reg, precision_bits))
        res.control_norm_error.append(reg.norm_error)

    bits = np.zeros((circuit_depth + 1, trials), dtype=np.int64)
    norm_err = np.zeros((circuit_depth + 1, trials))
    for trial in range(trials):
        rng = np.random.default_rng(int(model.seed) + trial)
        reg = start
        for step in range(circuit_depth + 1):
            if step > 0:
                reg = inject_error(simple_layer(reg), model, rng)
            bits[step, trial] = complexity_upper_bound(reg, precision_bits).compressed_bits
            norm_err[step, trial] = reg.norm_error
    res.noisy_bits = [bits[s] for s in range(circuit_depth + 1)]
    res.noisy_norm_error = [float(np.max(norm_err[s])) for s in range(circuit_depth + 1)]
    return res
