"""Grid sweeps over placement, layout, stop count, and dwell time,
plus the derived metrics: efficiency, gain ratios, peak detection,
and the two calibration solvers.

Cells are pure functions of (base config, cell coordinates), so the
table can be evaluated in parallel worker processes without changing
a single output bit; the emitted ordering is fixed by the axes.
"""

from __future__ import annotations

import dataclasses
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from wpcnsim.mission import (
    ConfigError,
    MissionLedger,
    ScenarioConfig,
    endurance,
    run_mission,
)
from wpcnsim.rf_link import fspl_db, received_power

__all__ = [
    "SweepCell",
    "SweepTable",
    "DEFAULT_STOP_COUNTS",
    "DEFAULT_DWELLS",
    "DEFAULT_CASES",
    "efficiency",
    "sweep",
    "default_sweep",
    "efficiency_curve",
    "clustering_gain",
    "clustering_gain_cells",
    "equal_coverage_gain",
    "p1_gain_over_p2",
    "p1_gain_cells",
    "find_peak",
    "calibrate_tx_power",
    "calibrate_speed",
]

DEFAULT_STOP_COUNTS = tuple(range(4, 101))
DEFAULT_DWELLS = (20.0, 70.0)
DEFAULT_CASES = (("p1", "s1"), ("p1", "s2"), ("p2", "s1"), ("p2", "s2"))


@dataclass(frozen=True)
class SweepCell:
    """One grid point: packet total, energy bill, efficiency, feasibility.

    A nonempty error string marks a cell whose configuration was invalid;
    its numeric fields are zero and it is skipped by every metric.
    """

    total_packets: int
    total_uav_energy: float
    efficiency: float
    feasible: bool
    error: str = ""


@dataclass(eq=False)
class SweepTable:
    """Sweep results keyed by (placement, layout, n_stops, dwell)."""

    base: ScenarioConfig
    cases: tuple
    stop_counts: tuple
    dwells: tuple
    cells: dict

    def cell(self, placement: str, layout: str, n_stops: int, dwell: float) -> SweepCell:
        return self.cells[(placement, layout, n_stops, dwell)]


def efficiency(ledger: MissionLedger) -> float:
    """Packets delivered per kilojoule of drone energy."""
    if not ledger.total_uav_energy > 0:
        raise ValueError("ledger has no positive energy spend")
    return ledger.total_packets / (ledger.total_uav_energy / 1000.0)


def _cell_config(
    base: ScenarioConfig, placement: str, layout: str, n_stops: int, dwell: float
) -> ScenarioConfig:
    return dataclasses.replace(
        base, placement=placement, layout=layout, n_stops=n_stops, dwell_time=dwell
    )


def _run_cell(config: ScenarioConfig) -> SweepCell:
    try:
        ledger = run_mission(config)
    except ConfigError as err:
        return SweepCell(0, 0.0, 0.0, False, error=str(err))
    return SweepCell(
        total_packets=ledger.total_packets,
        total_uav_energy=ledger.total_uav_energy,
        efficiency=efficiency(ledger),
        feasible=ledger.feasible,
    )


def sweep(
    base: ScenarioConfig,
    stop_counts,
    dwells,
    cases=DEFAULT_CASES,
    workers: int = 1,
) -> SweepTable:
    """Evaluate the full grid; one mission per cell, none dropped.

    workers > 1 spreads cells over processes; results are identical to
    the serial run because cells are independent and order is fixed.
    """
    stop_counts = tuple(int(k) for k in stop_counts)
    dwells = tuple(float(t) for t in dwells)
    cases = tuple((str(p), str(s)) for p, s in cases)
    if not stop_counts or not dwells or not cases:
        raise ValueError("stop_counts, dwells, and cases must be non-empty")
    keys = [
        (placement, layout, n_stops, dwell)
        for placement, layout in cases
        for n_stops in stop_counts
        for dwell in dwells
    ]
    configs = [_cell_config(base, *key) for key in keys]
    if workers > 1:
        chunk = max(1, len(configs) // (4 * workers))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_cell, configs, chunksize=chunk))
    else:
        results = [_run_cell(config) for config in configs]
    return SweepTable(
        base=base,
        cases=cases,
        stop_counts=stop_counts,
        dwells=dwells,
        cells=dict(zip(keys, results)),
    )


def default_sweep(base: ScenarioConfig = ScenarioConfig(), workers: int = 1) -> SweepTable:
    """The standard study grid: 4..100 stops, 20 s and 70 s dwells, all cases."""
    return sweep(base, DEFAULT_STOP_COUNTS, DEFAULT_DWELLS, DEFAULT_CASES, workers)


def efficiency_curve(
    table: SweepTable, placement: str, layout: str, dwell: float
):
    """(n_stops, efficiency) points for one case and dwell, by stop count."""
    return tuple(
        (k, table.cell(placement, layout, k, dwell).efficiency)
        for k in table.stop_counts
        if not table.cell(placement, layout, k, dwell).error
    )


def clustering_gain_cells(table: SweepTable, placements=("p1",)) -> dict:
    """Per-cell paired-over-even efficiency ratios on matched coordinates.

    Both cells of a pair must be feasible and error-free with a positive
    even-layout efficiency; keys are (placement, n_stops, dwell).
    """
    ratios = {}
    for placement in placements:
        if not {(placement, "s1"), (placement, "s2")} <= set(table.cases):
            continue
        for n_stops in table.stop_counts:
            for dwell in table.dwells:
                even = table.cell(placement, "s1", n_stops, dwell)
                paired = table.cell(placement, "s2", n_stops, dwell)
                usable = (
                    not even.error
                    and not paired.error
                    and even.feasible
                    and paired.feasible
                    and even.efficiency > 0.0
                )
                if usable:
                    ratios[(placement, n_stops, dwell)] = (
                        paired.efficiency / even.efficiency
                    )
    return ratios


def clustering_gain(table: SweepTable, placements=("p1",)) -> float:
    """Mean efficiency gain of the paired layout over the even layout.

    Averaged over matched feasible (placement, n_stops, dwell) cells.
    The default basis compares only sensor-facing placements, where the
    pairing is actually exploited by the stop plan.
    """
    ratios = clustering_gain_cells(table, placements)
    if not ratios:
        raise ValueError("no matched feasible layout pairs in the table")
    return sum(ratios.values()) / len(ratios)


def equal_coverage_gain(table: SweepTable, placement: str = "p1") -> float:
    """Paired-over-even gain at equal coverage: k pair stops vs 2k even stops."""
    if not {(placement, "s1"), (placement, "s2")} <= set(table.cases):
        raise ValueError(f"table lacks both layouts under placement {placement!r}")
    ratios = []
    for n_stops in table.stop_counts:
        if 2 * n_stops not in table.stop_counts:
            continue
        for dwell in table.dwells:
            paired = table.cell(placement, "s2", n_stops, dwell)
            even = table.cell(placement, "s1", 2 * n_stops, dwell)
            usable = (
                not paired.error
                and not even.error
                and paired.feasible
                and even.feasible
                and even.efficiency > 0.0
            )
            if usable:
                ratios.append(paired.efficiency / even.efficiency)
    if not ratios:
        raise ValueError("no matched feasible equal-coverage pairs in the table")
    return sum(ratios) / len(ratios)


def p1_gain_cells(table: SweepTable) -> dict:
    """Per-cell facing-over-sector efficiency ratios on matched coordinates.

    Keys are (layout, n_stops, dwell); cells where the sector placement
    collected nothing are left out (the ratio is unbounded there).
    """
    ratios = {}
    for layout in ("s1", "s2"):
        if not {("p1", layout), ("p2", layout)} <= set(table.cases):
            continue
        for n_stops in table.stop_counts:
            for dwell in table.dwells:
                facing = table.cell("p1", layout, n_stops, dwell)
                sector = table.cell("p2", layout, n_stops, dwell)
                usable = (
                    not facing.error
                    and not sector.error
                    and sector.efficiency > 0.0
                )
                if usable:
                    ratios[(layout, n_stops, dwell)] = (
                        facing.efficiency / sector.efficiency
                    )
    return ratios


def p1_gain_over_p2(table: SweepTable) -> float:
    """Mean efficiency gain of sensor-facing stops over equal-arc stops."""
    ratios = p1_gain_cells(table)
    if not ratios:
        raise ValueError("no matched placement pairs in the table")
    return sum(ratios.values()) / len(ratios)


def find_peak(curve):
    """Locate the efficiency maximum of a (n_stops, efficiency) curve.

    Returns (index, interior); ties break toward the smaller stop count,
    and interior means the peak is not an endpoint of the curve.
    """
    points = sorted((int(k), float(e)) for k, e in curve)
    if len(points) < 3:
        raise ValueError(f"need at least 3 curve points, got {len(points)}")
    best = max(range(len(points)), key=lambda i: (points[i][1], -i))
    return best, 0 < best < len(points) - 1


def calibrate_tx_power(target_packets: int, config: ScenarioConfig) -> float:
    """Transmit power making one boresight charge worth target_packets.

    Closed form: the stored energy after dwell*phase_split seconds of
    charging at the standoff distance equals target_packets packet units.
    """
    if target_packets < 1:
        raise ValueError(f"target_packets must be >= 1, got {target_packets}")
    link = config.link
    gain_db = link.tx_gain_dbi + link.rx_gain_dbi - fspl_db(
        link.frequency, config.standoff
    )
    unit_link = 10.0 ** (gain_db / 10.0)
    charge_time = config.dwell_time * config.phase_split
    tx = (target_packets * config.costs.packet_unit) / (
        charge_time * link.rf_dc_efficiency * unit_link
    )
    calibrated = dataclasses.replace(link, tx_power=tx)
    if received_power(calibrated, config.standoff, 0.0) < link.harvest_threshold:
        raise ValueError(
            "calibrated power falls below the harvest threshold; "
            "the target is too small for this link"
        )
    return tx


def calibrate_speed(stop_target: int, dwell: float, config: ScenarioConfig) -> float:
    """Cruise speed whose battery budget fits exactly stop_target stops.

    Budgets the whole seconds of endurance: the loop gets what remains
    after stop_target dwells, so flying any faster only adds slack.
    """
    if stop_target < 1:
        raise ValueError(f"stop_target must be >= 1, got {stop_target}")
    if not dwell > 0:
        raise ValueError(f"dwell must be > 0, got {dwell}")
    loop_budget = math.floor(endurance(config)) - stop_target * dwell
    if loop_budget <= 0:
        raise ValueError(
            f"{stop_target} stops of {dwell} s exceed the endurance "
            f"{endurance(config):.2f} s; no speed can fit them"
        )
    return config.path_perimeter / loop_budget
