"""Command-line harness: sample channels, sweep entropy orders, verify bounds.

``chanent sweep`` samples channels per family and dimension (or loads one
channel with ``--channel``), evaluates the trade-off bound on every cell of
the (q, s) grid and writes ``report.csv`` plus ``summary.json`` into the
output directory.  ``chanent inequalities`` drives the norm and anti-norm
checks over random matrices and sampled channels and reports per-check
minimum slack.

Exit codes: 0 all cells/checks pass, 1 a bound or check failed (the
offending channel or matrix is serialized under ``counterexamples/``),
2 configuration errors.

Runs are deterministic end to end: per-sample seeds derive from the base
seed and the sample address, and output rows are ordered by
(dimension, family, sample, q, s) regardless of evaluation order, so a
repeated run reproduces ``report.csv`` byte for byte.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from . import channel as chmod
from . import matcore, sampler, spectra
from .entropy import EntropyParams
from .errors import BoundViolation
from .tradeoff import GAP_TOL, SAT_TOL, TradeoffReport, evaluate_profile, profile_channel

__all__ = ["SweepConfig", "ConfigError", "run_sweep", "run_inequality_suite", "main"]

DEFAULT_SEED = 20250101
DEFAULT_OUT = "chanent-out"

# Stable family codes for seed derivation; independent of config order.
FAMILY_CODES = {"cptp": 0, "unitary-mixture": 1, "unistochastic": 2}

CSV_COLUMNS = [
    "channel_id",
    "family",
    "dim",
    "unital",
    "q",
    "s",
    "map_entropy",
    "receiver_entropy",
    "sum",
    "bound_all",
    "bound_unital",
    "gap",
    "saturated",
]

CHECK_NAMES = ("prop1", "21in", "upkp", "npqr", "sups", "cbn0")


class ConfigError(ValueError):
    """Configuration rejected; the message names the offending value."""


@dataclass(frozen=True)
class SweepConfig:
    """Sweep parameters; every field has a default so a bare run works."""

    dims: tuple = (2, 3)
    families: tuple = ("cptp", "unitary-mixture", "unistochastic")
    samples_per_family: int = 50
    q_grid: tuple = (0.3, 0.5, 0.9, 1.0, 1.1, 1.5, 2.0, 3.0, 5.0)
    s_grid: tuple = (-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0)
    seed: int = DEFAULT_SEED
    tolerances: dict = field(default_factory=dict)

    def gap_tol(self) -> float:
        return float(self.tolerances.get("gap", GAP_TOL))

    def sat_tol(self) -> float:
        return float(self.tolerances.get("saturation", SAT_TOL))


def validate_config(cfg: SweepConfig) -> SweepConfig:
    if not cfg.dims:
        raise ConfigError("dims must be nonempty")
    for d in cfg.dims:
        if not (2 <= int(d) <= chmod.MAX_DIM):
            raise ConfigError(f"dimension {d} outside the supported range [2, {chmod.MAX_DIM}]")
    if not cfg.families:
        raise ConfigError("families must be nonempty")
    for fam in cfg.families:
        if fam not in FAMILY_CODES and not fam.startswith("named:"):
            raise ConfigError(f"unknown family {fam!r}")
    if cfg.samples_per_family < 1:
        raise ConfigError(f"samples_per_family must be >= 1, got {cfg.samples_per_family}")
    if not cfg.q_grid or not cfg.s_grid:
        raise ConfigError("q_grid and s_grid must be nonempty")
    for q in cfg.q_grid:
        if not (float(q) > 0.0):
            raise ConfigError(f"entropy order q must be > 0, got {q}")
    for s in cfg.s_grid:
        if math.isnan(float(s)):
            raise ConfigError(f"entropy order s must be finite, got {s}")
    return cfg


def config_from_file(path) -> SweepConfig:
    with open(path, encoding="utf-8") as fh:
        raw = json.load(fh)
    known = {f for f in SweepConfig.__dataclass_fields__}
    unknown = set(raw) - known
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    for key in ("dims", "families", "q_grid", "s_grid"):
        if key in raw:
            raw[key] = tuple(raw[key])
    return SweepConfig(**raw)


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(float(value))  # plain-float repr is the shortest round-trip form
    return str(value)


def _row(report: TradeoffReport, family: str, dim: int, unital: bool) -> dict:
    return {
        "channel_id": report.channel_id,
        "family": family,
        "dim": dim,
        "unital": unital,
        "q": report.params.q,
        "s": report.params.s,
        "map_entropy": report.map_value,
        "receiver_entropy": report.receiver_value,
        "sum": report.map_value + report.receiver_value,
        "bound_all": report.bound_all,
        "bound_unital": report.bound_unital,
        "gap": report.gap,
        "saturated": report.saturated,
    }


def _write_csv(path: Path, rows: list[dict]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for row in rows:
            writer.writerow([_fmt(row[col]) for col in CSV_COLUMNS])


def _write_json(path: Path, payload: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _serialize_counterexample(out_dir: Path, ch, report: TradeoffReport, family: str) -> Path:
    ce_dir = out_dir / "counterexamples"
    ce_dir.mkdir(parents=True, exist_ok=True)
    path = ce_dir / f"{report.channel_id or 'channel'}.json"
    payload = {
        "channel": chmod.channel_to_json(ch),
        "family": family,
        "report": {
            "channel_id": report.channel_id,
            "q": report.params.q,
            "s": report.params.s,
            "map_entropy": report.map_value,
            "receiver_entropy": report.receiver_value,
            "bound_all": report.bound_all,
            "bound_unital": report.bound_unital,
            "gap": report.gap,
        },
    }
    _write_json(path, payload)
    return path


def _sweep_channels(cfg: SweepConfig, channel_path):
    """Yield (family, dim, channel_id, channel) in canonical row order."""
    if channel_path is not None:
        ch = chmod.load_channel(channel_path)
        yield "file", ch.dim, Path(channel_path).stem, ch
        return
    for dim in cfg.dims:
        for family in cfg.families:
            code = FAMILY_CODES.get(family, 99)
            for index in range(cfg.samples_per_family):
                scfg = sampler.SamplerConfig(
                    dim=int(dim),
                    kraus_count=sampler.default_kraus_count(family, int(dim)),
                    seed=sampler.derive_seed(cfg.seed, code, int(dim), index),
                    family=family,
                )
                yield family, int(dim), f"{family}-d{dim}-{index:04d}", sampler.sample_channel(scfg)


def run_sweep(cfg: SweepConfig, out_dir, channel_path=None) -> int:
    """Evaluate the trade-off grid and write report.csv / summary.json."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    rows: list[dict] = []
    stats: dict[str, dict] = {}
    violation_info = None

    for family, dim, channel_id, ch in _sweep_channels(cfg, channel_path):
        profile = profile_channel(ch, channel_id)
        fam_stats = stats.setdefault(
            family, {"rows": 0, "min_gap": math.inf, "saturation_count": 0}
        )
        for q in cfg.q_grid:
            for s in cfg.s_grid:
                params = EntropyParams(float(q), float(s))
                try:
                    report = evaluate_profile(
                        profile, params, sat_tol=cfg.sat_tol(), gap_tol=cfg.gap_tol()
                    )
                except BoundViolation as exc:
                    path = _serialize_counterexample(out, ch, exc.report, family)
                    rows.append(_row(exc.report, family, dim, profile.unital))
                    violation_info = {"message": str(exc), "counterexample": path.name}
                    break
                rows.append(_row(report, family, dim, profile.unital))
                fam_stats["rows"] += 1
                fam_stats["min_gap"] = min(fam_stats["min_gap"], report.gap)
                fam_stats["saturation_count"] += int(report.saturated)
            if violation_info:
                break
        if violation_info:
            break

    _write_csv(out / "report.csv", rows)
    gaps = [row["gap"] for row in rows]
    summary = {
        "mode": "sweep",
        "rows": len(rows),
        "min_gap": min(gaps) if gaps else None,
        "violations": 1 if violation_info else 0,
        "saturation_count": sum(1 for row in rows if row["saturated"]),
        "limit_rows": sum(1 for row in rows if EntropyParams(row["q"], row["s"]).von_neumann_limit),
        "per_family": {
            fam: {
                "rows": st["rows"],
                "min_gap": None if st["min_gap"] is math.inf else st["min_gap"],
                "saturation_count": st["saturation_count"],
            }
            for fam, st in stats.items()
        },
        "seed": cfg.seed,
    }
    if violation_info:
        summary["violation"] = violation_info
    _write_json(out / "summary.json", summary)
    if violation_info:
        print(f"BOUND VIOLATION: {violation_info['message']}", file=sys.stderr)
        return 1
    print(f"sweep ok: {len(rows)} rows, min gap {summary['min_gap']!r} -> {out}")
    return 0


def _psd_matrices(cfg: SweepConfig, code: int):
    for dim in cfg.dims:
        for index in range(cfg.samples_per_family):
            rng = np.random.default_rng(sampler.derive_seed(cfg.seed, code, int(dim), index))
            g = sampler.ginibre(int(dim), rng)
            yield f"psd-d{dim}-{index:04d}", g @ g.conj().T


def _general_matrices(cfg: SweepConfig, code: int):
    for dim in cfg.dims:
        for index in range(cfg.samples_per_family):
            rng = np.random.default_rng(sampler.derive_seed(cfg.seed, code, int(dim), index))
            yield f"mat-d{dim}-{index:04d}", sampler.ginibre(int(dim), rng)


def _suite_channels(cfg: SweepConfig):
    families = [f for f in cfg.families if f in FAMILY_CODES]
    for family in families:
        code = FAMILY_CODES[family]
        for dim in cfg.dims:
            for index in range(cfg.samples_per_family):
                scfg = sampler.SamplerConfig(
                    dim=int(dim),
                    kraus_count=sampler.default_kraus_count(family, int(dim)),
                    seed=sampler.derive_seed(cfg.seed, 100 + code, int(dim), index),
                    family=family,
                )
                yield family, f"{family}-d{dim}-{index:04d}", sampler.sample_channel(scfg)


def run_inequality_suite(cfg: SweepConfig, out_dir, only=None, matrix_path=None) -> int:
    """Run the norm/anti-norm checks; write summary.json with min slack."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    selected = CHECK_NAMES if only is None else (only,)
    for name in selected:
        if name not in CHECK_NAMES:
            raise ConfigError(f"unknown check {only!r}; choose from {', '.join(CHECK_NAMES)}")

    injected = None
    if matrix_path is not None:
        with open(matrix_path, encoding="utf-8") as fh:
            injected = [(Path(matrix_path).stem, matcore.matrix_from_json(json.load(fh)))]

    anti_orders = [float(q) for q in cfg.q_grid if 0.0 < float(q) < 1.0] or [0.5]
    order_pairs = [(0.2, 0.8), (1.0 / 3.0, 0.5), (0.5, 1.0)]
    results: dict[str, dict] = {}
    failure = None

    def record(name: str, label, report: spectra.InequalityReport, payload=None):
        nonlocal failure
        entry = results.setdefault(name, {"count": 0, "min_slack": math.inf, "passed": True})
        entry["count"] += 1
        entry["min_slack"] = min(entry["min_slack"], report.slack)
        if not report.passed:
            entry["passed"] = False
            if failure is None:
                failure = {"check": name, "input": label, "kind": "inequality-failed"}
                if payload is not None:
                    ce = out / "counterexamples"
                    ce.mkdir(parents=True, exist_ok=True)
                    _write_json(ce / f"{label}.json", payload)

    try:
        if "prop1" in selected:
            cases = injected if injected is not None else list(_psd_matrices(cfg, 201))
            for label, x in cases:
                for q in cfg.q_grid:
                    record("prop1", label, spectra.check_prop1(x, float(q)), matcore.matrix_to_json(x))
        if "21in" in selected:
            cases = injected if injected is not None else list(_general_matrices(cfg, 202))
            for label, x in cases:
                record("21in", label, spectra.check_two_inf_one(x), matcore.matrix_to_json(x))
        if "npqr" in selected:
            cases = injected if injected is not None else list(_psd_matrices(cfg, 203))
            for label, x in cases:
                for p, q in order_pairs:
                    record("npqr", label, spectra.check_antinorm_monotonicity(x, p, q))
        if "sups" in selected:
            cases = injected if injected is not None else list(_psd_matrices(cfg, 204))
            partners = injected if injected is not None else list(_psd_matrices(cfg, 205))
            for (label, x), (_, y) in zip(cases, partners):
                for q in anti_orders:
                    record("sups", label, spectra.check_superadditivity(x, y, float(q)))
        if injected is None and ("upkp" in selected or "cbn0" in selected):
            for family, label, ch in _suite_channels(cfg):
                if "upkp" in selected:
                    record("upkp", label, spectra.check_superop_norm_bound(ch), chmod.channel_to_json(ch))
                if "cbn0" in selected:
                    record("cbn0", label, spectra.check_norm_product_chain(ch), chmod.channel_to_json(ch))
    except Exception as exc:  # noqa: BLE001 - provenance belongs in the report
        failure = {"check": "error", "kind": type(exc).__name__, "message": str(exc)}
        if injected is not None:
            ce = out / "counterexamples"
            ce.mkdir(parents=True, exist_ok=True)
            _write_json(ce / f"{injected[0][0]}.json", matcore.matrix_to_json(injected[0][1]))

    summary = {
        "mode": "inequalities",
        "checks": {
            name: {
                "count": entry["count"],
                "min_slack": entry["min_slack"],
                "passed": entry["passed"],
            }
            for name, entry in sorted(results.items())
        },
        "seed": cfg.seed,
        "failure": failure,
    }
    _write_json(out / "summary.json", summary)
    if failure is not None:
        print(f"INEQUALITY SUITE FAILED: {failure}", file=sys.stderr)
        return 1
    slacks = ", ".join(f"{n}={results[n]['min_slack']:.3e}" for n in sorted(results))
    print(f"inequalities ok: min slack {slacks} -> {out}")
    return 0


def _parse_floats(text: str, flag: str) -> tuple:
    try:
        return tuple(float(tok) for tok in text.split(",") if tok.strip())
    except ValueError as exc:
        raise ConfigError(f"could not parse {flag} value {text!r}: {exc}") from exc


def _parse_ints(text: str, flag: str) -> tuple:
    try:
        return tuple(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError as exc:
        raise ConfigError(f"could not parse {flag} value {text!r}: {exc}") from exc


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", metavar="PATH", help="JSON config file (flags override it)")
    parser.add_argument("--q", metavar="LIST", help="comma-separated entropy orders q (> 0)")
    parser.add_argument("--dims", metavar="LIST", help="comma-separated system dimensions")
    parser.add_argument("--samples", type=int, metavar="N", help="samples per family and dimension")
    parser.add_argument("--seed", type=int, metavar="N", help="base seed for all sampling")
    parser.add_argument("--out", metavar="DIR", default=DEFAULT_OUT, help="output directory")
    parser.add_argument("--family", metavar="LIST", help="comma-separated sampler families")


def _resolve_config(args) -> SweepConfig:
    cfg = config_from_file(args.config) if args.config else SweepConfig()
    updates = {}
    if args.q:
        updates["q_grid"] = _parse_floats(args.q, "--q")
    if getattr(args, "s", None):
        updates["s_grid"] = _parse_floats(args.s, "--s")
    if args.dims:
        updates["dims"] = _parse_ints(args.dims, "--dims")
    if args.samples is not None:
        updates["samples_per_family"] = args.samples
    if args.seed is not None:
        updates["seed"] = args.seed
    if args.family:
        updates["families"] = tuple(tok.strip() for tok in args.family.split(",") if tok.strip())
    return validate_config(replace(cfg, **updates))


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="chanent",
        description="Channel entropy trade-off and norm-inequality harness.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="evaluate the trade-off bound over a channel population")
    _add_common_flags(sweep)
    sweep.add_argument("--s", metavar="LIST", help="comma-separated entropy orders s")
    sweep.add_argument("--channel", metavar="PATH", help="single-channel mode: evaluate this file")

    ineq = sub.add_parser("inequalities", help="run the norm/anti-norm inequality checks")
    _add_common_flags(ineq)
    ineq.add_argument("--only", metavar="CHECK", help=f"one of: {', '.join(CHECK_NAMES)}")
    ineq.add_argument("--matrix", metavar="PATH", help="run the matrix checks on this file only")

    args = parser.parse_args(argv)
    try:
        cfg = _resolve_config(args)
        if args.command == "sweep":
            return run_sweep(cfg, args.out, channel_path=args.channel)
        return run_inequality_suite(cfg, args.out, only=args.only, matrix_path=args.matrix)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
