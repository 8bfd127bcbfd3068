"""Single-mission execution: fly the loop, hover, charge, collect.

The drone flies one full loop at cruise speed and hovers at each stop
for the dwell time. The first phase_split share of the dwell radiates
power; every sensor whose received power clears the harvest threshold
banks energy for that whole phase. The remainder of the dwell polls
exactly those sensors, which convert stored energy into measure-and-send
packet units while the drone pays a fixed receive cost per packet.

All ledger sums run in a fixed order (stops in tour order, sensors by
ascending id) so repeated runs produce bit-identical ledgers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from wpcnsim.geometry import EllipseSpec, ellipse_from_perimeter
from wpcnsim.layout import (
    SensorField,
    StopPlan,
    place_sensors_even,
    place_sensors_paired,
    place_stops_equal_arcs,
    place_stops_facing,
)
from wpcnsim.rf_link import (
    EnergyCosts,
    LinkParams,
    harvest_rate,
    packets_supported,
    received_power,
)

__all__ = [
    "ScenarioConfig",
    "StopRecord",
    "SensorRecord",
    "MissionLedger",
    "ConfigError",
    "validate_config",
    "endurance",
    "max_stops",
    "run_mission",
    "simulate_tour",
]

_DEFAULT_LINK = LinkParams(
    frequency=2.3e9,
    tx_power=2.404,
    tx_gain_dbi=9.3,
    rx_gain_dbi=8.0,
    rf_dc_efficiency=0.72,
    harvest_threshold=1e-3,
    angle_exponent=1.0,
)

_DEFAULT_COSTS = EnergyCosts(e_measurement=0.01, e_tx_packet=0.01, e_rx_packet=0.01)


@dataclass(frozen=True)
class ScenarioConfig:
    """Complete description of one mission, defaulting to the reference scenario.

    layout: "s1" evenly spread sensors, "s2" sensors in side-by-side pairs.
    placement: "p1" stops face the sensors, "p2" stops at equal arc sectors.
    wpt_draw_mode: "included" folds the power transmitter into the flight
    power draw; "additional" bills tx_power separately during charging.
    """

    link: LinkParams = _DEFAULT_LINK
    costs: EnergyCosts = _DEFAULT_COSTS
    n_sensors: int = 100
    layout: str = "s1"
    placement: str = "p1"
    n_stops: int = 100
    dwell_time: float = 20.0
    phase_split: float = 0.5
    uav_flight_power: float = 170.3
    uav_battery: float = 286200.0
    cruise_speed: float = 6.25
    path_perimeter: float = 500.0
    standoff: float = 1.0
    aspect_ratio: float = 5.0
    cluster_spacing: float = 0.1
    wpt_draw_mode: str = "included"
    p2_phase: float = 0.0


@dataclass(frozen=True)
class StopRecord:
    """What happened during one hover: who charged, what they banked, packets in."""

    stop_id: int
    charged: tuple
    delivered: tuple
    packets: int


@dataclass(frozen=True)
class SensorRecord:
    """Energy account of one sensor over the whole mission."""

    sensor_id: int
    harvested: float
    spent: float
    residual: float
    packets: int


@dataclass(frozen=True)
class MissionLedger:
    """Joule-exact accounting of one mission.

    total_uav_energy is flight + hover + wpt + rx in exactly that order;
    feasible means the total fits the battery.
    """

    total_uav_energy: float
    flight_energy: float
    hover_energy: float
    wpt_energy: float
    rx_energy: float
    per_stop: tuple
    per_sensor: tuple
    total_packets: int
    feasible: bool
    mission_time: float


class ConfigError(ValueError):
    """Invalid scenario configuration; .errors lists every violation."""

    def __init__(self, errors):
        super().__init__("; ".join(errors))
        self.errors = tuple(errors)


@lru_cache(maxsize=32)
def _flight_path(aspect_ratio: float, perimeter: float) -> EllipseSpec:
    return ellipse_from_perimeter(aspect_ratio, perimeter)


def validate_config(config: ScenarioConfig) -> list:
    """Check every invariant and return all violations, not just the first."""
    errors = []
    if config.layout not in ("s1", "s2"):
        errors.append(f"layout must be s1 or s2, got {config.layout!r}")
    if config.placement not in ("p1", "p2"):
        errors.append(f"placement must be p1 or p2, got {config.placement!r}")
    if config.wpt_draw_mode not in ("included", "additional"):
        errors.append(
            f"wpt_draw_mode must be included or additional, got {config.wpt_draw_mode!r}"
        )
    if config.n_sensors < 1:
        errors.append(f"n_sensors must be >= 1, got {config.n_sensors}")
    elif config.layout == "s2" and config.n_sensors % 2:
        errors.append(f"paired layout needs an even sensor count, got {config.n_sensors}")
    if config.n_stops < 0:
        errors.append(f"n_stops must be >= 0, got {config.n_stops}")
    if not config.dwell_time > 0:
        errors.append(f"dwell_time must be > 0, got {config.dwell_time}")
    if not 0.0 < config.phase_split < 1.0:
        errors.append(f"phase_split must lie in (0, 1), got {config.phase_split}")
    if not config.uav_flight_power > 0:
        errors.append(f"uav_flight_power must be > 0, got {config.uav_flight_power}")
    if config.uav_battery < 0:
        errors.append(f"uav_battery must be >= 0, got {config.uav_battery}")
    if not config.cruise_speed > 0:
        errors.append(f"cruise_speed must be > 0, got {config.cruise_speed}")
    path_ok = config.path_perimeter > 0 and config.aspect_ratio >= 1
    if not path_ok:
        errors.append(
            f"need path_perimeter > 0 and aspect_ratio >= 1, got "
            f"{config.path_perimeter} and {config.aspect_ratio}"
        )
    if not config.standoff > 0:
        errors.append(f"standoff must be > 0, got {config.standoff}")
    elif path_ok:
        path = _flight_path(config.aspect_ratio, config.path_perimeter)
        rho_min = path.semi_minor**2 / path.semi_major
        if config.standoff >= rho_min:
            errors.append(
                f"standoff {config.standoff} reaches the path's minimum "
                f"radius of curvature {rho_min:.6g}"
            )
    if config.layout == "s2" and config.n_sensors >= 2 and not config.n_sensors % 2:
        n_pairs = config.n_sensors // 2
        if path_ok and not 0.0 < config.cluster_spacing < config.path_perimeter / n_pairs:
            errors.append(
                f"cluster_spacing {config.cluster_spacing} does not fit {n_pairs} pairs"
            )
    if path_ok and not 0.0 <= config.p2_phase < config.path_perimeter:
        errors.append(
            f"p2_phase must lie in [0, path_perimeter), got {config.p2_phase}"
        )
    return errors


def endurance(config: ScenarioConfig) -> float:
    """Mission time ceiling in seconds: battery over flight power."""
    if not config.uav_flight_power > 0:
        raise ValueError(f"uav_flight_power must be > 0, got {config.uav_flight_power}")
    return config.uav_battery / config.uav_flight_power


def max_stops(config: ScenarioConfig, dwell: float) -> int:
    """Most stops that fit the battery after one full loop at cruise speed."""
    if not dwell > 0:
        raise ValueError(f"dwell must be > 0, got {dwell}")
    if not config.cruise_speed > 0:
        raise ValueError(f"cruise_speed must be > 0, got {config.cruise_speed}")
    flight = config.path_perimeter / config.cruise_speed * config.uav_flight_power
    budget = config.uav_battery - flight
    if budget < 0.0:
        return 0
    per_stop = dwell * config.uav_flight_power
    if config.wpt_draw_mode == "additional":
        per_stop += dwell * config.phase_split * config.link.tx_power
    return int(budget // per_stop)


def run_mission(config: ScenarioConfig) -> MissionLedger:
    """Build the scenario's layout and stop plan, then simulate the tour."""
    errors = validate_config(config)
    if errors:
        raise ConfigError(errors)
    path = _flight_path(config.aspect_ratio, config.path_perimeter)
    if config.layout == "s1":
        field = place_sensors_even(path, config.n_sensors, config.standoff)
    else:
        field = place_sensors_paired(
            path, config.n_sensors, config.cluster_spacing, config.standoff
        )
    if config.placement == "p1":
        plan = place_stops_facing(path, field, config.n_stops, config.dwell_time)
    else:
        plan = place_stops_equal_arcs(
            path, config.n_stops, config.dwell_time, config.p2_phase
        )
    return simulate_tour(config, path, field, plan)


def simulate_tour(
    config: ScenarioConfig, path: EllipseSpec, field: SensorField, plan: StopPlan
) -> MissionLedger:
    """Simulate one tour over an explicit field and stop plan.

    Lower-level entry point for handcrafted plans; run_mission is the
    usual front door. The plan's dwell_time governs hover duration.
    """
    k, n = plan.n_stops, field.n_sensors
    charge_time = plan.dwell_time * config.phase_split
    unit = config.costs.packet_unit
    harvested = np.zeros(n)
    spent = np.zeros(n)
    packets = np.zeros(n, dtype=np.int64)
    if k:
        delta = plan.positions[:, None, :] - field.positions[None, :, :]
        dist = np.sqrt(np.einsum("kij,kij->ki", delta, delta))
        cos_inc = np.einsum("kij,ij->ki", delta, field.normals) / dist
        incidence = np.arccos(np.clip(cos_inc, -1.0, 1.0))
        rate = harvest_rate(config.link, received_power(config.link, dist, incidence))

    per_stop = []
    for j in range(k):
        banked = rate[j] * charge_time
        ids = np.nonzero(rate[j] > 0.0)[0]
        harvested[ids] += banked[ids]
        stop_packets = 0
        for i in ids:
            count = packets_supported(harvested[i] - spent[i], config.costs)
            # spending may not push the account past what was harvested
            while count > 0 and spent[i] + count * unit > harvested[i]:
                count -= 1
            spent[i] += count * unit
            packets[i] += count
            stop_packets += count
        per_stop.append(
            StopRecord(
                stop_id=j,
                charged=tuple(int(i) for i in ids),
                delivered=tuple(float(banked[i]) for i in ids),
                packets=stop_packets,
            )
        )

    loop_time = config.path_perimeter / config.cruise_speed
    flight_energy = loop_time * config.uav_flight_power
    hover_energy = (k * plan.dwell_time) * config.uav_flight_power
    if config.wpt_draw_mode == "additional":
        wpt_energy = (k * charge_time) * config.link.tx_power
    else:
        wpt_energy = 0.0
    total_packets = int(packets.sum())
    rx_energy = total_packets * config.costs.e_rx_packet
    total = flight_energy + hover_energy + wpt_energy + rx_energy
    per_sensor = tuple(
        SensorRecord(
            sensor_id=i,
            harvested=float(harvested[i]),
            spent=float(spent[i]),
            residual=float(harvested[i] - spent[i]),
            packets=int(packets[i]),
        )
        for i in range(n)
    )
    return MissionLedger(
        total_uav_energy=total,
        flight_energy=flight_energy,
        hover_energy=hover_energy,
        wpt_energy=wpt_energy,
        rx_energy=rx_energy,
        per_stop=tuple(per_stop),
        per_sensor=per_sensor,
        total_packets=total_packets,
        feasible=total <= config.uav_battery,
        mission_time=loop_time + k * plan.dwell_time,
    )
