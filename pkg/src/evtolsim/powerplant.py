"""Propulsion power models.

Vertical flight power comes from momentum theory: an induced-power term set
by disc loading, plus the climb-rate term, divided by the electric powertrain
efficiency. Ducted fans benefit from reduced induced losses, which shows up
as a 1/sqrt(2) hover-power ratio against an open rotor of equal disc area.

Wing-borne flight power is weight times (climb rate + speed over L/D), again
divided by powertrain efficiency. A parabolic drag polar is supported for
deriving L/D and the minimum-power / best-range speeds when a design does not
publish per-segment L/D directly.
"""

import math
from dataclasses import dataclass
from enum import Enum

from .errors import ParameterError

DEFAULT_INTERFERENCE_FACTOR = 1.03   # fuselage download correction on rotor flow


class PropulsionKind(Enum):
    OPEN_ROTOR = "open_rotor"
    DUCTED_FAN = "ducted_fan"


def _require(condition: bool, field: str, message: str) -> None:
    if not condition:
        raise ParameterError(field, message)


@dataclass(frozen=True)
class VerticalFlightParams:
    """Inputs to the vertical flight power equation, SI units.

    climb_rate_mps is signed; zero means hover.
    """

    weight_n: float
    disc_area_m2: float
    fom: float
    climb_rate_mps: float
    density_kg_m3: float
    efficiency: float
    interference_factor: float = DEFAULT_INTERFERENCE_FACTOR

    def __post_init__(self):
        _require(self.weight_n >= 0.0, "weight_n", f"weight_n must be >= 0, got {self.weight_n}")
        _require(self.disc_area_m2 > 0.0, "disc_area_m2",
                 f"disc_area_m2 must be > 0, got {self.disc_area_m2}")
        _require(0.0 < self.fom <= 1.0, "fom", f"fom must be in (0, 1], got {self.fom}")
        _require(self.interference_factor >= 1.0, "interference_factor",
                 f"interference_factor must be >= 1, got {self.interference_factor}")
        _require(self.density_kg_m3 > 0.0, "density_kg_m3",
                 f"density_kg_m3 must be > 0, got {self.density_kg_m3}")
        _require(0.0 < self.efficiency <= 1.0, "efficiency",
                 f"efficiency must be in (0, 1], got {self.efficiency}")


@dataclass(frozen=True)
class FixedWingParams:
    """Inputs to the wing-borne flight power equation, SI units.

    vertical_speed_mps is signed (negative for descent); the efficiency
    includes the propeller.
    """

    weight_n: float
    forward_speed_mps: float
    vertical_speed_mps: float
    lift_to_drag: float
    efficiency: float

    def __post_init__(self):
        _require(self.weight_n >= 0.0, "weight_n", f"weight_n must be >= 0, got {self.weight_n}")
        _require(self.forward_speed_mps >= 0.0, "forward_speed_mps",
                 f"forward_speed_mps must be >= 0, got {self.forward_speed_mps}")
        _require(self.lift_to_drag > 0.0, "lift_to_drag",
                 f"lift_to_drag must be > 0, got {self.lift_to_drag}")
        _require(0.0 < self.efficiency <= 1.0, "efficiency",
                 f"efficiency must be in (0, 1], got {self.efficiency}")


@dataclass(frozen=True)
class DragPolar:
    """Parabolic drag polar CD = CD0 + k*CL^2 over a reference wing area."""

    zero_lift_drag_coeff: float
    induced_factor: float
    wing_area_m2: float

    def __post_init__(self):
        _require(self.zero_lift_drag_coeff > 0.0, "zero_lift_drag_coeff",
                 f"zero_lift_drag_coeff must be > 0, got {self.zero_lift_drag_coeff}")
        _require(self.induced_factor > 0.0, "induced_factor",
                 f"induced_factor must be > 0, got {self.induced_factor}")
        _require(self.wing_area_m2 > 0.0, "wing_area_m2",
                 f"wing_area_m2 must be > 0, got {self.wing_area_m2}")


def vertical_power(kind: PropulsionKind, p: VerticalFlightParams) -> float:
    """Electric power (W) in rotor-borne flight at the given climb rate."""
    f = p.interference_factor
    w = p.weight_n
    loading = w / p.disc_area_m2
    if kind is PropulsionKind.OPEN_ROTOR:
        induced = (f * w / p.fom) * math.sqrt(f * loading / (2.0 * p.density_kg_m3))
    elif kind is PropulsionKind.DUCTED_FAN:
        induced = (f * w / (2.0 * p.fom)) * math.sqrt(f * loading / p.density_kg_m3)
    else:
        raise ParameterError("kind", f"unknown propulsion kind: {kind!r}")
    return (induced + w * p.climb_rate_mps / 2.0) / p.efficiency


def fixed_wing_power(p: FixedWingParams) -> float:
    """Electric power (W) in wing-borne flight.

    May be negative for steep descents; callers decide whether surplus power
    is recovered (this package never credits it).
    """
    return (p.weight_n * p.vertical_speed_mps
            + p.weight_n * p.forward_speed_mps / p.lift_to_drag) / p.efficiency


def _check_polar_state(polar: DragPolar, weight_n: float, density_kg_m3: float) -> None:
    _require(weight_n > 0.0, "weight_n", f"weight_n must be > 0, got {weight_n}")
    _require(density_kg_m3 > 0.0, "density_kg_m3",
             f"density_kg_m3 must be > 0, got {density_kg_m3}")


def min_power_speed(polar: DragPolar, weight_n: float, density_kg_m3: float) -> float:
    """Forward speed (m/s) minimizing level-flight power under the polar.

    Closed form of the stationary point of
    P(V) = rho*V^3*S*CD0/2 + 2*k*W^2/(rho*V*S).
    """
    _check_polar_state(polar, weight_n, density_kg_m3)
    base = math.sqrt(2.0 * weight_n / (density_kg_m3 * polar.wing_area_m2))
    return base * (polar.induced_factor / (3.0 * polar.zero_lift_drag_coeff)) ** 0.25


def best_range_speed(polar: DragPolar, weight_n: float, density_kg_m3: float) -> float:
    """Forward speed (m/s) maximizing L/D, i.e. distance per unit energy."""
    _check_polar_state(polar, weight_n, density_kg_m3)
    base = math.sqrt(2.0 * weight_n / (density_kg_m3 * polar.wing_area_m2))
    return base * (polar.induced_factor / polar.zero_lift_drag_coeff) ** 0.25


def lift_to_drag_at(polar: DragPolar, speed_mps: float, weight_n: float,
                    density_kg_m3: float) -> float:
    """L/D in level flight at the given speed, from the drag polar."""
    _check_polar_state(polar, weight_n, density_kg_m3)
    _require(speed_mps > 0.0, "speed_mps", f"speed_mps must be > 0, got {speed_mps}")
    cl = 2.0 * weight_n / (density_kg_m3 * speed_mps * speed_mps * polar.wing_area_m2)
    return cl / (polar.zero_lift_drag_coeff + polar.induced_factor * cl * cl)
