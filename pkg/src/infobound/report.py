"""One table regenerating every headline number, with tolerance checks.

Each row compares a computed value against a published order-of-magnitude
figure. ``tolerance`` is in decades; rows without a tolerance are either
informational (no published figure) or *flagged*: a published figure that no
reading of the model reproduces, shown side by side rather than hidden.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from . import bounds, cosmology, predictability, vacuum
from .config import RunConfig

COLUMNS = (
    "quantity",
    "published_value",
    "computed_value",
    "log10_computed",
    "log10_ratio",
    "tolerance_log10",
    "status",
    "unit",
    "provenance",
)


def _sig(x: float | None) -> float | None:
    """Round to 7 significant figures; text and JSON both print this value."""
    if x is None:
        return None
    return float(f"{x:.6e}")


@dataclass(frozen=True)
class Row:
    quantity: str
    published: float | None
    computed: float
    unit: str
    provenance: str
    tolerance: float | None = None
    flagged: bool = False

    @property
    def log10_computed(self) -> float:
        return math.log10(self.computed)

    @property
    def log10_ratio(self) -> float | None:
        if self.published is None:
            return None
        return math.log10(self.computed) - math.log10(self.published)

    @property
    def status(self) -> str:
        if self.flagged:
            return "flagged"
        if self.tolerance is None or self.published is None:
            return "info"
        return "pass" if abs(self.log10_ratio) <= self.tolerance else "fail"

    def as_dict(self) -> dict:
        return {
            "quantity": self.quantity,
            "published_value": _sig(self.published),
            "computed_value": _sig(self.computed),
            "log10_computed": _sig(self.log10_computed),
            "log10_ratio": _sig(self.log10_ratio),
            "tolerance_log10": _sig(self.tolerance),
            "status": self.status,
            "unit": self.unit,
            "provenance": self.provenance,
        }


INFLATION_EPOCH_S = 1e-34
INFLATION_HORIZON_M = 3e-26
REDSHIFT_EFOLD_S = 1e-6
SOLAR_MASS_KG = 1.989e30


def build_report(cfg: RunConfig) -> list[Row]:
    k = cfg.constants
    p = cfg.cosmology
    rows: list[Row] = []

    r_ds = cosmology.desitter_radius_from_density(cfg.dark_energy_density, k)
    holo = bounds.holographic_bound(cosmology.horizon_area(r_ds), "holographic-event", k)
    rows.append(Row(
        "holographic bound (de Sitter horizon)", 1e122, holo.bits, "bits",
        f"R = c/H for rho_lambda = {cfg.dark_energy_density:g} J/m^3; A/(4 L_P^2)",
        tolerance=1.0,
    ))
    d_e = cosmology.event_horizon(1.0, p, k)
    if not cosmology.is_infinite(d_e):
        b = bounds.holographic_bound(cosmology.horizon_area(d_e), "holographic-event", k)
        rows.append(Row(
            "holographic bound (FRW event horizon, a=1)", 1e122, b.bits, "bits",
            "event-horizon quadrature for the configured cosmology", tolerance=2.0,
        ))
    d_p = cosmology.particle_horizon(1.0, p, k)
    b = bounds.holographic_bound(cosmology.horizon_area(d_p), "holographic-particle", k)
    rows.append(Row(
        "holographic bound (FRW particle horizon, a=1)", 1e122, b.bits, "bits",
        "particle-horizon quadrature for the configured cosmology", tolerance=2.0,
    ))

    t0 = cosmology.cosmic_time(1.0, p)
    rows.append(Row("cosmic age t0", None, t0, "s", "quadrature of da/(a H)"))
    lloyd_inf = bounds.lloyd_bound(INFLATION_EPOCH_S, ref_bits=1e122, ref_t=t0)
    rows.append(Row(
        f"t^2-scaled bound at t = {INFLATION_EPOCH_S:g} s", 1e19, lloyd_inf.bits, "bits",
        "1e122 bits at t0 scaled by (t/t0)^2", tolerance=1.0,
    ))

    for conv in ("1/tP", "2pi/tP"):
        est = vacuum.planck_cutoff_density(conv, k)
        rows.append(Row(
            f"vacuum density, Planck cutoff omega_c = {conv}", 1e113, est.rho, "J/m^3",
            "hbar omega_c^4 / (16 pi^2 c^3), one scalar polarization", tolerance=2.0,
        ))
        rows.append(Row(
            f"Planck-cutoff / observed density ({conv})", 1e122,
            est.rho / cfg.dark_energy_density, "1",
            "ratio to configured dark_energy_density", tolerance=2.0,
        ))

    r_h = cosmology.hubble_radius(1.0, p, k)
    schemes = [
        vacuum.holographic_cutoff_density(r_h, 1e122, k),
        vacuum.collapse_bound_density(r_h, k),
        vacuum.geometric_mean_at_hubble(r_h, k),
    ]
    labels = {
        "holographic-cutoff": "hbar c B / L^4 with B = 1e122 modes",
        "collapse-bound": "c^4 / (G L^2)",
        "geometric-mean": "sqrt(rho_Planck * rho_Hubble)",
    }
    for est in schemes:
        rows.append(Row(
            f"vacuum density, {est.scheme} at Hubble radius", 1e-9, est.rho, "J/m^3",
            f"{labels[est.scheme.value]}; L = c/H0 = {r_h:.4e} m", tolerance=1.5,
        ))
    logs = [e.log10_rho for e in schemes]
    spread = 10.0 ** (max(logs) - min(logs))
    rows.append(Row(
        "spread of Hubble-scale vacuum schemes (max/min)", 1.0, spread, "1",
        "mutual agreement of the three Hubble-scale estimates", tolerance=3.0,
    ))

    n_spec = bounds.specifiability_limit(bounds.InfoBound(1e122, "holographic-event"))
    rows.append(Row(
        "specifiability limit for 1e122 bits", 400.0, float(n_spec), "qubits",
        "floor(log2 1e122)", tolerance=0.05,
    ))
    n_cfg = bounds.specifiability_limit(holo)
    rows.append(Row(
        "specifiability limit for configured bound", 400.0, float(n_cfg), "qubits",
        "floor(log2 bits) of the de Sitter bound", tolerance=0.05,
    ))

    infl = bounds.inflation_expansion_limit(INFLATION_HORIZON_M, constants=k)
    rows.append(Row(
        "inflation expansion cap a_after/a_before", 1e19, infl.max_expansion, "1",
        f"holographic bits of r = {INFLATION_HORIZON_M:g} m; max e-folds "
        f"{infl.max_efolds:.2f}; vs required {infl.required_expansion:g}: {infl.verdict}",
        tolerance=1.0,
    ))
    rows.append(Row(
        "inflation horizon surface in Planck areas", 1e-19, infl.planck_areas, "L_P^2",
        "published exponent has the wrong sign for r = 3e-26 m; +19 reading used above",
        flagged=True,
    ))

    bound122 = bounds.InfoBound(1e122, "holographic-event")
    for interp in predictability.INTERPRETATIONS:
        cap = predictability.recurrence_cap(bound122, interp, constants=k)
        rows.append(Row(
            f"recurrence reliability cap ({interp})", predictability.PUBLISHED_RECURRENCE_YEARS,
            cap.cap_years, "yr",
            "1e122 Planck times; published 1e60 yr not recovered by this reading",
            flagged=True,
        ))

    rows.append(Row(
        "black-hole redshift cutoff time", None,
        predictability.redshift_cutoff(REDSHIFT_EFOLD_S, bound122), "s",
        f"e-folding {REDSHIFT_EFOLD_S:g} s times ln(1e122)",
    ))
    rows.append(Row(
        "Lyapunov horizon, lambda = 1/s, 1e122-bit budget", None,
        predictability.lyapunov_horizon(1.0, 1e122), "s", "budget ln2 / lambda",
    ))

    gas = predictability.GasParams()
    col = predictability.collision_predictability(gas, k)
    rows.append(Row(
        "collisions until trajectory unpredictable", 12.0,
        float(col.collisions_to_order_unity), "collisions",
        "air: l={mean_free_path:g} m, r={molecule_radius:g} m, v={mean_speed:g} m/s, "
        "electron m={perturber_mass:g} kg at d={perturber_distance:g} m".format(**gas.as_dict()),
        tolerance=math.log10(5.0),
    ))

    bh = bounds.bh_entropy(SOLAR_MASS_KG, k)
    rows.append(Row(
        "solar-mass black hole information", None, bh.bits, "bits",
        "4 pi G M^2 / (hbar c) / ln 2",
    ))
    return rows


def report_ok(rows: list[Row]) -> bool:
    return all(r.status != "fail" for r in rows)


def render_json(rows: list[Row]) -> str:
    return json.dumps([r.as_dict() for r in rows], indent=2) + "\n"


def _fmt(x) -> str:
    if x is None:
        return "-"
    if isinstance(x, float):
        return f"{x:.6e}"
    return str(x)


def render_text(rows: list[Row]) -> str:
    header = ("quantity", "published", "computed", "log10", "log10 ratio", "tol", "status", "unit")
    table = [header]
    for r in rows:
        d = r.as_dict()
        table.append((
            d["quantity"],
            _fmt(d["published_value"]),
            _fmt(d["computed_value"]),
            _fmt(d["log10_computed"]),
            _fmt(d["log10_ratio"]),
            _fmt(d["tolerance_log10"]),
            d["status"],
            d["unit"],
        ))
    widths = [max(len(row[i]) for row in table) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in table]
    lines.insert(1, "  ".join("-" * w for w in widths))
    lines.append("")
    lines.append("provenance:")
    for r in rows:
        lines.append(f"  {r.quantity}: {r.provenance}")
    return "\n".join(lines) + "\n"
