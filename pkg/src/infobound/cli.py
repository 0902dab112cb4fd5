"""Command-line front end.

Exit codes: 0 success, 1 usage or configuration error, 2 numeric failure,
3 report tolerance failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path

from . import bounds, cosmology, predictability, quantum, vacuum
from .config import RunConfig, load_config
from .errors import ConfigError, DomainError, NumericError
from .report import build_report, render_json, render_text, report_ok

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERIC = 2
EXIT_REPORT = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(text)


def _kv_text(pairs) -> str:
    width = max(len(k) for k, _ in pairs)
    out = []
    for k, v in pairs:
        if isinstance(v, float):
            lg = f"  (log10 {math.log10(v):.4f})" if v > 0 and "log10" not in k else ""
            v = f"{v:.6e}{lg}"
        out.append(f"{k.ljust(width)}  {v}")
    return "\n".join(out) + "\n"


# --- subcommands -------------------------------------------------------------------


def cmd_cosmo(args, cfg: RunConfig) -> int:
    hs = cosmology.horizons(args.a, cfg.cosmology, cfg.constants)
    d = hs.as_dict()
    _emit(args, d, _kv_text(list(d.items())))
    return EXIT_OK


def cmd_bound(args, cfg: RunConfig) -> int:
    k = cfg.constants
    rho = args.density if args.density is not None else cfg.dark_energy_density
    r = cosmology.desitter_radius_from_density(rho, k)
    area = cosmology.horizon_area(r)
    b = bounds.holographic_bound(area, "holographic-event", k)
    payload = {
        "method": str(b.method),
        "dark_energy_density_J_m3": rho,
        "horizon_radius_m": r,
        "horizon_area_m2": area,
        "bits": b.bits,
        "log10_bits": b.log10_bits,
        "specifiability_limit_qubits": bounds.specifiability_limit(b),
    }
    if args.mass is not None:
        bh = bounds.bh_entropy(args.mass, k)
        payload["black_hole"] = {
            "mass_kg": bh.mass,
            "schwarzschild_radius_m": bh.schwarzschild_radius,
            "area_m2": bh.area,
            "entropy_over_k": bh.entropy_over_k,
            "bits": bh.bits,
        }
    if args.epoch is not None:
        lb = bounds.lloyd_bound(args.epoch, ref_bits=args.ref_bits, ref_t=args.ref_t)
        payload["lloyd_scaled"] = {
            "epoch_s": lb.epoch_t,
            "bits": lb.bits,
            "log10_bits": lb.log10_bits,
        }
    if args.inflation_radius is not None:
        inf = bounds.inflation_expansion_limit(args.inflation_radius, constants=k)
        payload["inflation"] = {
            "radius_m": inf.radius,
            "max_expansion": inf.max_expansion,
            "max_efolds": inf.max_efolds,
            "required_expansion": inf.required_expansion,
            "verdict": inf.verdict,
        }
    pairs = []

    def flatten(prefix, d):
        for key, v in d.items():
            if isinstance(v, dict):
                flatten(f"{prefix}{key}.", v)
            else:
                pairs.append((prefix + key, v))

    flatten("", payload)
    _emit(args, payload, _kv_text(pairs))
    return EXIT_OK


def cmd_vacuum(args, cfg: RunConfig) -> int:
    k = cfg.constants
    L = args.L if args.L is not None else cosmology.hubble_radius(1.0, cfg.cosmology, k)
    ests = []
    if args.n_max is not None:
        ests.append(vacuum.discrete_mode_sum(L, args.n_max, k, args.polarizations))
        w = 2 * math.pi * k.c * args.n_max / L
        ests.append(vacuum.continuum_cutoff_density(w, k, args.polarizations))
    for conv in ("1/tP", "2pi/tP"):
        ests.append(vacuum.planck_cutoff_density(conv, k, args.polarizations))
    ests.append(vacuum.holographic_cutoff_density(L, args.budget, k))
    ests.append(vacuum.collapse_bound_density(L, k))
    ests.append(vacuum.geometric_mean_at_hubble(L, k))

    rows = [
        {
            "scheme": str(e.scheme),
            "rho_J_m3": e.rho,
            "log10_rho": e.log10_rho,
            "pressure_J_m3": e.pressure,
            "cutoff": e.cutoff_descriptor,
        }
        for e in ests
    ]
    payload = {"L_m": L, "schemes": rows}
    lines = [f"L = {L:.6e} m", ""]
    w = max(len(r["scheme"]) for r in rows)
    lines.append(f"{'scheme'.ljust(w)}  {'rho [J/m^3]':>13}  {'log10':>9}  {'p [J/m^3]':>14}  cutoff")
    for r in rows:
        lines.append(
            f"{r['scheme'].ljust(w)}  {r['rho_J_m3']:13.6e}  {r['log10_rho']:9.4f}  "
            f"{r['pressure_J_m3']:14.6e}  {r['cutoff']}"
        )
    if args.series:
        series = _conservation_series(args, cfg)
        _write_series_csv(Path(args.series), series)
        payload["series_csv"] = args.series
        lines.append("")
        lines.append(f"conservation series written to {args.series}")
    _emit(args, payload, "\n".join(lines) + "\n")
    return EXIT_OK


def _conservation_series(args, cfg: RunConfig) -> vacuum.ConservationSeries:
    import numpy as np

    t0 = cosmology.cosmic_time(1.0, cfg.cosmology)
    times = np.geomspace(args.t_start or 1e-3 * t0, args.t_end or t0, args.samples)
    rho = vacuum.holographic_density_history(times, ref_bits=args.budget, ref_t=t0,
                                             constants=cfg.constants)
    a = (times / t0) ** (2.0 / 3.0)
    return vacuum.conservation_residual(times, rho, a)


def _write_series_csv(path: Path, s: vacuum.ConservationSeries) -> None:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(["t_s", "a", "rho_J_m3", "residual"])
    for t, a, r, res in s.rows():
        w.writerow([repr(t), repr(a), repr(r), repr(res)])
    path.write_text(buf.getvalue(), encoding="utf-8", newline="")


def cmd_qubit(args, cfg: RunConfig) -> int:
    seed = args.seed if args.seed is not None else cfg.seed
    model = quantum.NoiseModel(kind=args.kind, rate=args.rate, sigma=args.sigma, seed=seed)
    res = quantum.run_degradation_experiment(
        args.n, args.depth, model, args.trials, args.precision_bits, args.spec, cfg.qubit_cap
    )
    csv_text = res.to_csv()
    if args.out:
        Path(args.out).write_text(csv_text, encoding="utf-8", newline="")

    k = cfg.constants
    area = cosmology.horizon_area(
        cosmology.desitter_radius_from_density(cfg.dark_energy_density, k)
    )
    final_noisy = quantum.ComplexityEstimate(
        res.raw_bits, int(max(res.noisy_bits[-1])), args.precision_bits
    )
    check = quantum.check_specifiability(final_noisy, area, k)
    payload = {
        "n": args.n,
        "spec": args.spec,
        "depth": args.depth,
        "trials": args.trials,
        "noise": {"kind": model.kind.value, "rate": model.rate, "sigma": model.sigma, "seed": seed},
        "precision_bits": args.precision_bits,
        "compressor_id": quantum.COMPRESSOR_ID,
        "raw_bits": res.raw_bits,
        "control_initial_compressed_bits": res.control[0].compressed_bits,
        "control_final_compressed_bits": res.control[-1].compressed_bits,
        "noisy_final_mean_compressed_bits": res.mean_bits(args.depth),
        "noisy_final_max_compressed_bits": int(max(res.noisy_bits[-1])),
        "max_control_norm_error": max(res.control_norm_error),
        "specifiability": {
            "bound_bits_area_over_lp2": check.bound_bits,
            "bound_bits_area_over_4lp2": check.bound_bits_quarter,
            "verdict": check.verdict,
            "verdict_quarter": check.verdict_quarter,
            "log10_margin": check.log10_margin,
            "log10_margin_quarter": check.log10_margin_quarter,
        },
        "note": (
            "compressed_bits is an upper bound on algorithmic information from a "
            "generic compressor; it does not detect that pi-digit amplitudes are simple"
        ),
    }
    if args.out:
        payload["csv"] = args.out
    pairs = [(k_, v) for k_, v in payload.items() if not isinstance(v, dict)]
    pairs += [(f"specifiability.{k_}", v) for k_, v in payload["specifiability"].items()]
    text = _kv_text(pairs)
    if not args.out and args.format == "text":
        text += "\n" + csv_text.replace("\r\n", "\n")
    _emit(args, payload, text)
    return EXIT_OK


def cmd_predict(args, cfg: RunConfig) -> int:
    k = cfg.constants
    mode = args.mode
    if mode == "collisions":
        if args.initial_angle is not None and args.amplification is not None:
            n = predictability.collisions_to_order_unity(args.initial_angle, args.amplification)
            payload = {
                "initial_angle_uncertainty_rad": args.initial_angle,
                "amplification_per_collision": args.amplification,
                "collisions_to_order_unity": n,
            }
        else:
            g = predictability.GasParams(
                mean_free_path=args.mean_free_path,
                molecule_radius=args.molecule_radius,
                mean_speed=args.mean_speed,
                perturber_mass=args.perturber_mass,
                perturber_distance=args.perturber_distance,
            )
            res = predictability.collision_predictability(g, k)
            payload = {
                "parameters": g.as_dict(),
                "initial_angle_uncertainty_rad": res.initial_angle_uncertainty,
                "amplification_per_collision": res.amplification_per_collision,
                "collisions_to_order_unity": res.collisions_to_order_unity,
                "published_order_target": 12,
            }
    elif mode == "recurrence":
        b = bounds.InfoBound(args.bits, "holographic-event")
        caps = []
        for interp in predictability.INTERPRETATIONS:
            cap = predictability.recurrence_cap(b, interp, args.n_particles, k)
            caps.append({
                "interpretation": interp,
                "cap_seconds": cap.cap_seconds,
                "cap_years": cap.cap_years,
                "log10_cap_years": cap.log10_cap_years,
                "log10_discrepancy_vs_published": cap.log10_discrepancy,
            })
        payload = {"bits": args.bits, "published_years": predictability.PUBLISHED_RECURRENCE_YEARS,
                   "caps": caps}
    elif mode == "lyapunov":
        t = predictability.lyapunov_horizon(args.lyapunov, args.budget, args.initial_bits)
        payload = {"lambda_per_s": args.lyapunov, "budget_bits": args.budget, "horizon_s": t}
    else:
        b = bounds.InfoBound(args.bits, "holographic-event")
        t = predictability.redshift_cutoff(args.efold_time, b)
        payload = {"efold_time_s": args.efold_time, "bits": args.bits, "cutoff_s": t}

    pairs = []
    for key, v in payload.items():
        if isinstance(v, dict):
            pairs += [(f"{key}.{kk}", vv) for kk, vv in v.items()]
        elif isinstance(v, list):
            for item in v:
                tag = item["interpretation"]
                pairs += [(f"{tag}.{kk}", vv) for kk, vv in item.items() if kk != "interpretation"]
        else:
            pairs.append((key, v))
    _emit(args, payload, _kv_text(pairs))
    return EXIT_OK


def cmd_report(args, cfg: RunConfig) -> int:
    rows = build_report(cfg)
    sys.stdout.write(render_json(rows) if args.format == "json" else render_text(rows))
    return EXIT_OK if report_ok(rows) else EXIT_REPORT


# --- parser -------------------------------------------------------------------------


def _global_options(parser, suppress: bool) -> None:
    d = argparse.SUPPRESS if suppress else None
    parser.add_argument("--config", metavar="PATH", default=d, help="key = value config file")
    parser.add_argument("--format", choices=("text", "json"), default=d)
    parser.add_argument("--seed", type=int, default=d)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="infobound", description=__doc__.splitlines()[0])
    _global_options(parser, suppress=False)
    common = _Parser(add_help=False)
    _global_options(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("cosmo", parents=[common], help="horizons at one epoch")
    p.add_argument("--a", type=float, default=1.0, help="scale factor (default 1)")
    p.set_defaults(func=cmd_cosmo)

    p = sub.add_parser("bound", parents=[common], help="holographic and related bounds")
    p.add_argument("--density", type=float, help="dark-energy density J/m^3 (default: config)")
    p.add_argument("--mass", type=float, help="also report a black hole of this mass (kg)")
    p.add_argument("--epoch", type=float, help="also report the t^2-scaled bound at t (s)")
    p.add_argument("--ref-bits", type=float, default=bounds.LLOYD_REF_BITS)
    p.add_argument("--ref-t", type=float, default=bounds.LLOYD_REF_T)
    p.add_argument("--inflation-radius", type=float, help="horizon radius (m) before inflation")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("vacuum", parents=[common], help="compare vacuum-energy schemes")
    p.add_argument("--L", type=float, help="box / horizon scale in m (default c/H0)")
    p.add_argument("--n-max", type=int, help="also do the exact discrete mode sum")
    p.add_argument("--budget", type=float, default=1e122, help="holographic mode budget")
    p.add_argument("--polarizations", type=int, default=1)
    p.add_argument("--series", metavar="CSV", help="write the conservation series here")
    p.add_argument("--t-start", type=float)
    p.add_argument("--t-end", type=float)
    p.add_argument("--samples", type=int, default=64)
    p.set_defaults(func=cmd_vacuum)

    p = sub.add_parser("qubit", parents=[common], help="complexity-degradation experiment")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--spec", default="pi-digit",
                   choices=("basis", "uniform", "seeded-random", "pi-digit"))
    p.add_argument("--depth", type=int, default=50)
    p.add_argument("--rate", type=float, default=0.1)
    p.add_argument("--sigma", type=float, default=0.05)
    p.add_argument("--kind", default="small-rotation", choices=[k.value for k in quantum.NoiseKind])
    p.add_argument("--trials", type=int, default=30)
    p.add_argument("--precision-bits", type=int, default=16)
    p.add_argument("--out", metavar="CSV")
    p.set_defaults(func=cmd_qubit)

    p = sub.add_parser("predict", parents=[common], help="predictability horizons")
    p.add_argument("mode", choices=("collisions", "recurrence", "lyapunov", "redshift"))
    g = predictability.GasParams()
    p.add_argument("--mean-free-path", type=float, default=g.mean_free_path)
    p.add_argument("--molecule-radius", type=float, default=g.molecule_radius)
    p.add_argument("--mean-speed", type=float, default=g.mean_speed)
    p.add_argument("--perturber-mass", type=float, default=g.perturber_mass)
    p.add_argument("--perturber-distance", type=float, default=g.perturber_distance)
    p.add_argument("--initial-angle", type=float, help="skip the gas model: angle error (rad)")
    p.add_argument("--amplification", type=float, help="skip the gas model: growth per collision")
    p.add_argument("--bits", type=float, default=1e122)
    p.add_argument("--n-particles", type=float)
    p.add_argument("--lyapunov", type=float, default=1.0, help="exponent in 1/s")
    p.add_argument("--budget", type=float, default=1e122)
    p.add_argument("--initial-bits", type=float, default=0.0)
    p.add_argument("--efold-time", type=float, default=1e-6)
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("report", parents=[common], help="regenerate every headline number")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = load_config(args.config)
        if args.format is None:
            args.format = cfg.format
        return args.func(args, cfg)
    except UsageError as e:
        print(f"infobound: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ConfigError, OSError) as e:
        print(f"infobound: config error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except NumericError as e:
        print(f"infobound: numeric failure: {e}", file=sys.stderr)
        return EXIT_NUMERIC
    except DomainError as e:
        print(f"infobound: invalid input: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
