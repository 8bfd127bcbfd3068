"""Flat key = value configuration files and deterministic result artifacts.

Config files hold one `key = value` per line with `#` comments; every key
has a default, so an empty file is a complete configuration. Artifacts
(sweep.csv, summary.json, manifest.json) are emitted with LF endings,
'.' decimal separators, 9-significant-digit numbers, and sorted JSON
keys, so identical inputs always produce byte-identical files.
"""

from __future__ import annotations

import dataclasses
import hashlib
import json
from pathlib import Path

from wpcnsim import __version__
from wpcnsim.mission import (
    ConfigError,
    EnergyCosts,
    LinkParams,
    MissionLedger,
    ScenarioConfig,
    validate_config,
)
from wpcnsim.sweep import (
    SweepTable,
    clustering_gain_cells,
    efficiency,
    efficiency_curve,
    equal_coverage_gain,
    find_peak,
    p1_gain_cells,
)

__all__ = [
    "CONFIG_KEYS",
    "parse_config",
    "parse_config_text",
    "render_config",
    "config_echo",
    "sha256_hex",
    "write_mission_summary",
    "write_sweep_csv",
    "write_sweep_summary",
    "write_manifest",
]

_LINK_KEYS = (
    "frequency",
    "tx_power",
    "tx_gain_dbi",
    "rx_gain_dbi",
    "rf_dc_efficiency",
    "harvest_threshold",
    "angle_exponent",
)
_COST_KEYS = ("e_measurement", "e_tx_packet", "e_rx_packet")
_TOP_KEYS = (
    "n_sensors",
    "layout",
    "placement",
    "n_stops",
    "dwell_time",
    "phase_split",
    "uav_flight_power",
    "uav_battery",
    "cruise_speed",
    "path_perimeter",
    "standoff",
    "aspect_ratio",
    "cluster_spacing",
    "wpt_draw_mode",
    "p2_phase",
)
CONFIG_KEYS = _LINK_KEYS + _COST_KEYS + _TOP_KEYS

_INT_KEYS = frozenset({"n_sensors", "n_stops"})
_TOKEN_KEYS = frozenset({"layout", "placement", "wpt_draw_mode"})
_MODE_ALIASES = {"included-in-flight-power": "included"}


def _convert(key: str, text: str):
    if key in _TOKEN_KEYS:
        token = text.lower()
        return _MODE_ALIASES.get(token, token)
    if key in _INT_KEYS:
        return int(text)
    return float(text)


def parse_config(path) -> ScenarioConfig:
    """Read and validate a config file; unset keys keep their defaults."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as err:
        raise ConfigError([f"{path}: {err.strerror or err}"]) from err
    return parse_config_text(text, source=str(path))


def parse_config_text(text: str, source: str = "<config>") -> ScenarioConfig:
    """Parse config text, reporting every problem with its line number."""
    errors = []
    seen = {}
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key or not value:
            errors.append(
                f"{source}:{lineno}: malformed line {raw.strip()!r}, "
                "expected 'key = value'"
            )
            continue
        if key in seen:
            errors.append(
                f"{source}:{lineno}: duplicate key {key!r} "
                f"(first set on line {seen[key]})"
            )
            continue
        seen[key] = lineno
        if key not in CONFIG_KEYS:
            errors.append(f"{source}:{lineno}: unknown key {key!r}")
            continue
        try:
            values[key] = _convert(key, value)
        except ValueError:
            kind = "integer" if key in _INT_KEYS else "number"
            errors.append(
                f"{source}:{lineno}: key {key!r}: cannot parse {value!r} as {kind}"
            )
    if errors:
        raise ConfigError(errors)
    config = _build_config(values, errors)
    if errors:
        raise ConfigError(errors)
    violations = validate_config(config)
    if violations:
        raise ConfigError(violations)
    return config


def _build_config(values: dict, errors: list) -> ScenarioConfig:
    base = ScenarioConfig()
    link_kwargs = {k: values[k] for k in _LINK_KEYS if k in values}
    cost_kwargs = {k: values[k] for k in _COST_KEYS if k in values}
    top_kwargs = {k: values[k] for k in _TOP_KEYS if k in values}
    try:
        link = dataclasses.replace(base.link, **link_kwargs)
    except ValueError as err:
        errors.append(str(err))
        link = base.link
    try:
        costs = dataclasses.replace(base.costs, **cost_kwargs)
    except ValueError as err:
        errors.append(str(err))
        costs = base.costs
    return dataclasses.replace(base, link=link, costs=costs, **top_kwargs)


def _config_value(config: ScenarioConfig, key: str):
    if key in _LINK_KEYS:
        return getattr(config.link, key)
    if key in _COST_KEYS:
        return getattr(config.costs, key)
    return getattr(config, key)


def render_config(config: ScenarioConfig) -> str:
    """Canonical flat text for a config; parsing it back round-trips."""
    lines = ["# scenario configuration; omitted keys keep these values"]
    for key in CONFIG_KEYS:
        value = _config_value(config, key)
        lines.append(f"{key} = {value!r}" if isinstance(value, float) else f"{key} = {value}")
    return "\n".join(lines) + "\n"


def config_echo(config: ScenarioConfig) -> dict:
    """Every resolved parameter exactly once, keyed like the config file."""
    return {key: _config_value(config, key) for key in CONFIG_KEYS}


def sha256_hex(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def _sig9(x: float) -> str:
    return f"{x:.9g}"


def _write_text(path: Path, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _write_json(path: Path, obj) -> None:
    _write_text(path, json.dumps(obj, indent=2, sort_keys=True) + "\n")


def write_mission_summary(ledger: MissionLedger, out_dir) -> Path:
    """Full ledger with derived efficiency as summary.json."""
    obj = {
        "total_packets": ledger.total_packets,
        "total_uav_energy_j": ledger.total_uav_energy,
        "flight_energy_j": ledger.flight_energy,
        "hover_energy_j": ledger.hover_energy,
        "wpt_energy_j": ledger.wpt_energy,
        "rx_energy_j": ledger.rx_energy,
        "efficiency_pkt_per_kj": efficiency(ledger),
        "feasible": ledger.feasible,
        "mission_time_s": ledger.mission_time,
        "per_stop": [
            {
                "stop_id": rec.stop_id,
                "charged": list(rec.charged),
                "delivered_j": list(rec.delivered),
                "packets": rec.packets,
            }
            for rec in ledger.per_stop
        ],
        "per_sensor": [
            {
                "sensor_id": rec.sensor_id,
                "harvested_j": rec.harvested,
                "spent_j": rec.spent,
                "residual_j": rec.residual,
                "packets": rec.packets,
            }
            for rec in ledger.per_sensor
        ],
    }
    path = Path(out_dir) / "summary.json"
    _write_json(path, obj)
    return path


def write_sweep_csv(table: SweepTable, out_dir) -> Path:
    """One row per cell in axis order, 9 significant digits, LF endings.

    The efficiency column is recomputed from the rounded energy column,
    so re-deriving it from the emitted fields reproduces it exactly.
    """
    rows = ["case,layout,n_stops,dwell_s,packets,uav_energy_j,efficiency_pkt_per_kj,feasible"]
    for placement, layout in table.cases:
        for n_stops in table.stop_counts:
            for dwell in table.dwells:
                cell = table.cell(placement, layout, n_stops, dwell)
                energy_text = _sig9(cell.total_uav_energy)
                energy = float(energy_text)
                eff = cell.total_packets / (energy / 1000.0) if energy > 0 else 0.0
                rows.append(
                    f"{placement},{layout},{n_stops},{_sig9(dwell)},"
                    f"{cell.total_packets},{energy_text},{_sig9(eff)},"
                    f"{'true' if cell.feasible else 'false'}"
                )
    path = Path(out_dir) / "sweep.csv"
    _write_text(path, "\n".join(rows) + "\n")
    return path


def write_sweep_summary(table: SweepTable, out_dir) -> Path:
    """Axis echo, cell counts, and whichever gain metrics are computable."""
    cells = table.cells.values()
    metrics = {}
    paired = clustering_gain_cells(table)
    if paired:
        ratios = list(paired.values())
        metrics["clustering_gain"] = {
            "basis": "p1",
            "mean": sum(ratios) / len(ratios),
            "min": min(ratios),
            "max": max(ratios),
            "n_pairs": len(ratios),
        }
    try:
        metrics["equal_coverage_gain"] = equal_coverage_gain(table)
    except ValueError:
        pass
    facing = p1_gain_cells(table)
    if facing:
        ratios = list(facing.values())
        metrics["placement_gain"] = {
            "mean": sum(ratios) / len(ratios),
            "min": min(ratios),
            "max": max(ratios),
            "n_pairs": len(ratios),
        }
    peaks = {}
    for placement, layout in table.cases:
        for dwell in table.dwells:
            curve = efficiency_curve(table, placement, layout, dwell)
            if len(curve) >= 3:
                idx, interior = find_peak(curve)
                peaks[f"{placement}{layout}_t{dwell:g}"] = {
                    "n_stops": curve[idx][0],
                    "efficiency_pkt_per_kj": curve[idx][1],
                    "interior": interior,
                }
    obj = {
        "axes": {
            "cases": [p + s for p, s in table.cases],
            "stop_counts": list(table.stop_counts),
            "dwells_s": list(table.dwells),
        },
        "n_cells": len(table.cells),
        "n_feasible": sum(1 for c in cells if c.feasible),
        "n_errors": sum(1 for c in cells if c.error),
        "metrics": metrics,
        "peaks": peaks,
    }
    path = Path(out_dir) / "summary.json"
    _write_json(path, obj)
    return path


def write_manifest(
    config: ScenarioConfig, digest: str, artifacts, out_dir
) -> Path:
    """Reproducibility record: tool version, resolved config, artifact names."""
    obj = {
        "tool": "wpcnsim",
        "version": __version__,
        "config": config_echo(config),
        "config_digest": digest,
        "artifacts": sorted(str(a) for a in artifacts),
    }
    path = Path(out_dir) / "manifest.json"
    _write_json(path, obj)
    return path
