"""Run configuration: a flat ``key = value`` file.

Grammar (UTF-8)::

    # comment to end of line
    key = value        # trailing comments allowed

Blank lines are ignored. Values are decimal numbers except ``format``
(``text`` or ``json``). Unknown keys are errors, as are duplicates.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field, fields
from pathlib import Path

from .cosmology import CosmologyParams
from .errors import DomainError, ParseError, RangeViolation, UnknownKey
from .quantum import DEFAULT_QUBIT_CAP
from .units import CODATA2018, ConstantsSet

log = logging.getLogger(__name__)

_CONSTANT_KEYS = ("c", "G", "hbar", "k_B", "year_seconds")


@dataclass(frozen=True)
class RunConfig:
    hubble0_km_s_mpc: float = 67.7
    omega_m: float = 0.31
    omega_r: float = 9e-5
    omega_lambda: float = 0.69
    dark_energy_density: float = 6e-10
    qubit_cap: int = DEFAULT_QUBIT_CAP
    format: str = "text"
    seed: int = 0
    constants: ConstantsSet = field(default=CODATA2018)

    def __post_init__(self):
        if not (math.isfinite(self.hubble0_km_s_mpc) and self.hubble0_km_s_mpc > 0):
            raise RangeViolation("hubble0_km_s_mpc", self.hubble0_km_s_mpc, "must be > 0")
        for k in ("omega_m", "omega_r", "omega_lambda"):
            v = getattr(self, k)
            if not (math.isfinite(v) and v >= 0):
                raise RangeViolation(k, v, "must be >= 0")
        if not (math.isfinite(self.dark_energy_density) and self.dark_energy_density > 0):
            raise RangeViolation("dark_energy_density", self.dark_energy_density, "must be > 0")
        if not 1 <= self.qubit_cap <= 30:
            raise RangeViolation("qubit_cap", self.qubit_cap, "must be in [1, 30]")
        if self.qubit_cap > DEFAULT_QUBIT_CAP:
            log.warning(
                "qubit_cap=%d: state vectors take %d MiB each",
                self.qubit_cap,
                (16 << self.qubit_cap) >> 20,
            )
        if self.format not in ("text", "json"):
            raise RangeViolation("format", self.format, "must be 'text' or 'json'")
        if not 0 <= self.seed < 2**64:
            raise RangeViolation("seed", self.seed, "must be in [0, 2^64)")

    @property
    def cosmology(self) -> CosmologyParams:
        return CosmologyParams.from_km_s_mpc(
            self.hubble0_km_s_mpc,
            omega_m=self.omega_m,
            omega_r=self.omega_r,
            omega_lambda=self.omega_lambda,
        )

    def as_dict(self) -> dict:
        out = {f.name: getattr(self, f.name) for f in fields(self) if f.name != "constants"}
        out.update(self.constants.as_dict())
        return out

    def dump(self) -> str:
        """Effective configuration in the file grammar; floats use repr so
        loading the dump reproduces every value bit for bit."""
        lines = []
        for k, v in self.as_dict().items():
            lines.append(f"{k} = {v!r}" if isinstance(v, float) else f"{k} = {v}")
        return "\n".join(lines) + "\n"


_FLOAT_KEYS = {"hubble0_km_s_mpc", "omega_m", "omega_r", "omega_lambda", "dark_energy_density"}
_INT_KEYS = {"qubit_cap", "seed"}
KNOWN_KEYS = _FLOAT_KEYS | _INT_KEYS | {"format"} | set(_CONSTANT_KEYS)


def _parse_value(key: str, raw: str, line: int, col: int):
    if key == "format":
        return raw
    try:
        if key in _INT_KEYS:
            return int(raw)
        v = float(raw)
    except ValueError:
        raise ParseError(f"cannot parse value {raw!r} for {key}", line, col) from None
    if not math.isfinite(v):
        raise ParseError(f"value for {key} must be finite, got {raw!r}", line, col)
    return v


def parse_config(text: str) -> RunConfig:
    values: dict = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        if not body.strip():
            continue
        if "=" not in body:
            col = len(body) - len(body.lstrip()) + 1
            raise ParseError("expected 'key = value'", lineno, col)
        key_part, value_part = body.split("=", 1)
        key = key_part.strip()
        key_col = len(key_part) - len(key_part.lstrip()) + 1
        if not key:
            raise ParseError("missing key before '='", lineno, key_col)
        if key not in KNOWN_KEYS:
            raise UnknownKey(key, lineno)
        if key in values:
            raise ParseError(f"duplicate key {key!r}", lineno, key_col)
        raw = value_part.strip()
        val_col = len(key_part) + 2 + (len(value_part) - len(value_part.lstrip()))
        if not raw:
            raise ParseError(f"missing value for {key}", lineno, val_col)
        values[key] = _parse_value(key, raw, lineno, val_col)

    consts = {k: values.pop(k) for k in _CONSTANT_KEYS if k in values}
    try:
        constants = CODATA2018.replace(**consts)
    except DomainError:
        bad = next(k for k, v in consts.items() if not v > 0)
        raise RangeViolation(bad, consts[bad], "must be > 0") from None
    return RunConfig(constants=constants, **values)


def load_config(path: str | Path | None) -> RunConfig:
    """Read and validate a config file; ``None`` gives the defaults."""
    if path is None:
        return RunConfig()
    return parse_config(Path(path).read_text(encoding="utf-8"))
