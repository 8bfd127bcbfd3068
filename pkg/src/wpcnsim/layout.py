"""Sensor placement on the hull and hover-stop planning on the flight path.

The hull is modeled as the inward normal offset of the flight path at the
drone's standoff distance, so every sensor sits exactly standoff meters
beneath its foot point on the path and shares that point's outward normal.
Stops always lie on the flight path itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from wpcnsim.geometry import EllipseSpec, equidistant_arcs, poses_at_arcs

__all__ = [
    "SensorField",
    "StopPlan",
    "place_sensors_even",
    "place_sensors_paired",
    "place_stops_facing",
    "place_stops_equal_arcs",
]

_TWO_PI = 2.0 * math.pi
_SEAM_SNAP = 1e-9  # m; arcs this close to the perimeter wrap to zero


@dataclass(frozen=True, eq=False)
class SensorField:
    """Hull-mounted sensors in placement order with their service grouping.

    Attributes:
        arc_coords: (n,) arc of each sensor's foot point on the flight path.
        positions: (n, 2) sensor locations on the hull offset curve.
        normals: (n, 2) outward unit normals, shared with the foot points.
        cluster_ids: (n,) service group of each sensor, dense ints from 0.
    """

    arc_coords: np.ndarray
    positions: np.ndarray
    normals: np.ndarray
    cluster_ids: np.ndarray

    def __post_init__(self) -> None:
        n = self.arc_coords.shape[0]
        if self.positions.shape != (n, 2) or self.normals.shape != (n, 2):
            raise ValueError("inconsistent sensor array shapes")
        if self.cluster_ids.shape != (n,):
            raise ValueError("inconsistent sensor array shapes")
        for arr in (self.arc_coords, self.positions, self.normals, self.cluster_ids):
            arr.setflags(write=False)

    @property
    def n_sensors(self) -> int:
        return self.arc_coords.shape[0]


@dataclass(frozen=True, eq=False)
class StopPlan:
    """Hover stops on the flight path, in travel (ascending arc) order."""

    arc_coords: np.ndarray
    positions: np.ndarray
    dwell_time: float

    def __post_init__(self) -> None:
        k = self.arc_coords.shape[0]
        if self.positions.shape != (k, 2):
            raise ValueError("inconsistent stop array shapes")
        if k and not np.all(np.diff(self.arc_coords) > 0.0):
            raise ValueError("stop arcs must be strictly increasing")
        if not self.dwell_time >= 0.0:
            raise ValueError(f"dwell_time must be >= 0, got {self.dwell_time}")
        self.arc_coords.setflags(write=False)
        self.positions.setflags(write=False)

    @property
    def n_stops(self) -> int:
        return self.arc_coords.shape[0]


def _check_standoff(path: EllipseSpec, standoff: float) -> None:
    # inward offset degenerates at the minimum radius of curvature b^2/a
    rho_min = path.semi_minor**2 / path.semi_major
    if not 0.0 < standoff < rho_min:
        raise ValueError(
            f"standoff must lie in (0, {rho_min:.6g}) for this path, got {standoff}"
        )


def _field_at_arcs(
    path: EllipseSpec, arcs: np.ndarray, cluster_ids: np.ndarray, standoff: float
) -> SensorField:
    _check_standoff(path, standoff)
    feet, _, normals = poses_at_arcs(path, arcs)
    return SensorField(
        arc_coords=arcs,
        positions=feet - standoff * normals,
        normals=normals,
        cluster_ids=cluster_ids,
    )


@lru_cache(maxsize=64)
def place_sensors_even(
    path: EllipseSpec, n_sensors: int, standoff: float = 1.0
) -> SensorField:
    """Sensors at equal arc spacing, each its own service group."""
    arcs = equidistant_arcs(path, n_sensors)
    return _field_at_arcs(path, arcs, np.arange(n_sensors), standoff)


@lru_cache(maxsize=64)
def place_sensors_paired(
    path: EllipseSpec, n_sensors: int, pair_spacing: float = 0.1, standoff: float = 1.0
) -> SensorField:
    """Sensors in side-by-side pairs whose midpoints sit at equal arc spacing.

    The two members of pair i straddle its midpoint at +-pair_spacing/2
    along the hull; the pair is one service group. n_sensors must be even.
    """
    if n_sensors < 2 or n_sensors % 2:
        raise ValueError(f"paired layout needs an even sensor count, got {n_sensors}")
    n_pairs = n_sensors // 2
    if not 0.0 < pair_spacing < path.perimeter / n_pairs:
        raise ValueError(f"pair_spacing {pair_spacing} does not fit {n_pairs} pairs")
    centers = equidistant_arcs(path, n_pairs)
    half = 0.5 * pair_spacing
    arcs = (np.repeat(centers, 2) + np.tile([-half, half], n_pairs)) % path.perimeter
    return _field_at_arcs(path, arcs, np.repeat(np.arange(n_pairs), 2), standoff)


def _target_arcs(field: SensorField, perimeter: float) -> np.ndarray:
    """Sorted service-target arcs: one circular-mean arc per sensor group."""
    m = int(field.cluster_ids.max()) + 1
    if m == field.n_sensors:
        return np.sort(field.arc_coords)
    theta = field.arc_coords * (_TWO_PI / perimeter)
    s = np.bincount(field.cluster_ids, weights=np.sin(theta), minlength=m)
    c = np.bincount(field.cluster_ids, weights=np.cos(theta), minlength=m)
    arcs = (np.arctan2(s, c) % _TWO_PI) * (perimeter / _TWO_PI)
    # a group straddling the seam averages to arc 0, not to the perimeter
    arcs = np.where(arcs > perimeter - _SEAM_SNAP, 0.0, arcs)
    return np.sort(arcs)


def _empty_plan(dwell_time: float) -> StopPlan:
    return StopPlan(np.empty(0), np.empty((0, 2)), dwell_time)


def _plan_at_arcs(path: EllipseSpec, arcs: np.ndarray, dwell_time: float) -> StopPlan:
    positions, _, _ = poses_at_arcs(path, arcs)
    return StopPlan(arcs, positions, dwell_time)


@lru_cache(maxsize=256)
def place_stops_facing(
    path: EllipseSpec, field: SensorField, n_stops: int, dwell_time: float
) -> StopPlan:
    """Stops on the path facing the sensor groups head-on.

    With fewer stops than groups, every i-th stop serves group
    floor(i*m/k), spreading coverage evenly. With more stops than
    groups, each group keeps its facing stop and the surplus is dealt
    round-robin into the gaps between consecutive targets, splitting
    each gap into equal sub-arcs.
    """
    if n_stops < 0:
        raise ValueError(f"n_stops must be >= 0, got {n_stops}")
    if n_stops == 0:
        return _empty_plan(dwell_time)
    targets = _target_arcs(field, path.perimeter)
    m = targets.shape[0]
    if n_stops <= m:
        arcs = targets[(np.arange(n_stops) * m) // n_stops]
    else:
        surplus = n_stops - m
        extras = np.full(m, surplus // m)
        extras[: surplus % m] += 1
        gaps = np.diff(np.append(targets, targets[0] + path.perimeter))
        parts = [targets]
        for i in range(m):
            if extras[i]:
                j = np.arange(1, extras[i] + 1)
                parts.append(targets[i] + gaps[i] * j / (extras[i] + 1))
        arcs = np.sort(np.concatenate(parts) % path.perimeter)
    return _plan_at_arcs(path, arcs, dwell_time)


@lru_cache(maxsize=256)
def place_stops_equal_arcs(
    path: EllipseSpec, n_stops: int, dwell_time: float, phase: float = 0.0
) -> StopPlan:
    """Stops at equal arc spacing around the path, offset by phase meters."""
    if n_stops < 0:
        raise ValueError(f"n_stops must be >= 0, got {n_stops}")
    if n_stops == 0:
        return _empty_plan(dwell_time)
    return _plan_at_arcs(path, equidistant_arcs(path, n_stops, phase), dwell_time)
