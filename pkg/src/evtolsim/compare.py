"""Terrestrial vehicle baselines and EVTOL-vs-terrestrial crossover ranges.

Road vehicles are assumed to have a fixed duty cycle over the distances of
interest, so their Wh/passenger-mile is a horizontal baseline. Road distance
exceeds the point-to-point distance by the circuity factor, and the per-
vehicle consumption is shared by the occupants.
"""

from dataclasses import dataclass
from enum import Enum

from .errors import DataError, ParameterError


class VehicleKind(Enum):
    EV = "EV"
    ICEV = "ICEV"


@dataclass(frozen=True)
class TerrestrialVehicle:
    name: str
    kind: VehicleKind
    road_consumption_wh_per_mi: float
    circuity: float
    occupancy: float
    max_occupancy: int

    def validate(self) -> "TerrestrialVehicle":
        if not self.road_consumption_wh_per_mi > 0.0:
            raise ParameterError("road_consumption_wh_per_mi",
                                 f"road consumption must be > 0, got "
                                 f"{self.road_consumption_wh_per_mi}")
        if not self.circuity >= 1.0:
            raise ParameterError("circuity", f"circuity must be >= 1, got {self.circuity}")
        if not 0.0 < self.occupancy <= self.max_occupancy:
            raise ParameterError("occupancy",
                                 f"occupancy must be in (0, {self.max_occupancy}], "
                                 f"got {self.occupancy}")
        return self


def terrestrial_energy_per_passenger_mile(vehicle: TerrestrialVehicle) -> float:
    """Wh per passenger per point-to-point mile."""
    vehicle.validate()
    return vehicle.road_consumption_wh_per_mi * vehicle.circuity / vehicle.occupancy


def crossover_range(curve, baseline: float) -> float | None:
    """Smallest range where a decreasing Wh/passenger-mile curve meets a baseline.

    curve is a sequence of (range_mi, value) points with strictly ascending
    ranges and strictly decreasing values. Linear interpolation between the
    bracketing points; None when the curve never reaches the baseline.
    """
    points = [(float(r), float(v)) for r, v in curve]
    if len(points) < 2:
        raise DataError("crossover needs at least two curve points")
    for (r0, v0), (r1, v1) in zip(points, points[1:]):
        if r1 <= r0:
            raise DataError(f"curve ranges must be strictly ascending, got {r1} after {r0}")
        if v1 >= v0:
            raise DataError(f"curve values must be strictly decreasing, got {v1} "
                            f"at range {r1} after {v0}")
    if points[0][1] <= baseline:
        return points[0][0]
    for (r0, v0), (r1, v1) in zip(points, points[1:]):
        if v1 <= baseline:
            return r0 + (v0 - baseline) * (r1 - r0) / (v0 - v1)
    return None
