"""Mission profile construction and energy-per-passenger-mile curves.

A trip is modeled as vertical climb, wing-borne climb, cruise, wing-borne
descent and vertical descent, with an optional 30-minute reserve held at
cruise power. Trip energy excludes the reserve; battery sizing includes it.

Modeling conventions:
  - Aircraft weight stays at MTOM regardless of occupancy; occupancy only
    divides trip energy.
  - Vertical segments use air density at the hover altitude, wing-borne
    segments need no density unless L/D comes from a drag polar (evaluated
    at cruise altitude).
  - Vertical descent is charged at hover power: the momentum-theory descent
    credit is not taken.
  - Wing-borne descent power is floored at zero; no regeneration.
  - Wing-borne climb/descent fly at the drag polar's minimum-power speed
    when a polar is present, otherwise at the design cruise speed.
"""

from dataclasses import dataclass
from enum import Enum

from .atmosphere import GRAVITY_MPS2, air_density
from .errors import DataError, InfeasibleMissionError, ParameterError
from .powerplant import (
    DEFAULT_INTERFERENCE_FACTOR,
    DragPolar,
    FixedWingParams,
    PropulsionKind,
    VerticalFlightParams,
    fixed_wing_power,
    lift_to_drag_at,
    min_power_speed,
    vertical_power,
)
from .units import MILE_M, mph_to_mps

RESERVE_DURATION_S = 1800.0
DEFAULT_PAYLOAD_PER_SEAT_KG = 100.0
DEFAULT_HOVER_ALTITUDE_M = 15.0
DEFAULT_CRUISE_ALTITUDE_M = 300.0
DEFAULT_WING_CLIMB_RATE_MPS = 5.0


class SegmentKind(Enum):
    VERTICAL_CLIMB = "VerticalClimb"
    HOVER = "Hover"
    WING_CLIMB = "WingClimb"
    CRUISE = "Cruise"
    WING_DESCENT = "WingDescent"
    VERTICAL_DESCENT = "VerticalDescent"
    RESERVE = "Reserve"


def _require(condition: bool, field: str, message: str) -> None:
    if not condition:
        raise ParameterError(field, message)


@dataclass(frozen=True)
class AircraftSpec:
    """Full parameterization of one EVTOL design. SI units unless suffixed."""

    name: str
    propulsion: PropulsionKind
    mtom_kg: float
    seats: int
    disc_area_m2: float
    fom: float
    eta_vertical: float
    eta_fixed_wing: float
    design_range_mi: float
    design_cruise_speed_mph: float
    vertical_climb_rate_mps: float
    ewf: float
    payload_per_seat_kg: float = DEFAULT_PAYLOAD_PER_SEAT_KG
    interference_factor: float = DEFAULT_INTERFERENCE_FACTOR
    lod_climb: float | None = None
    lod_cruise: float | None = None
    lod_descent: float | None = None
    drag_polar: DragPolar | None = None
    hover_altitude_m: float = DEFAULT_HOVER_ALTITUDE_M
    cruise_altitude_m: float = DEFAULT_CRUISE_ALTITUDE_M
    wing_climb_rate_mps: float = DEFAULT_WING_CLIMB_RATE_MPS

    @property
    def weight_n(self) -> float:
        return self.mtom_kg * GRAVITY_MPS2

    @property
    def payload_kg(self) -> float:
        return self.seats * self.payload_per_seat_kg

    @property
    def disc_loading_kg_m2(self) -> float:
        return self.mtom_kg / self.disc_area_m2

    def validate(self) -> "AircraftSpec":
        """Check every invariant; raise ParameterError naming the bad field."""
        _require(bool(self.name), "name", "aircraft name must be non-empty")
        _require(self.mtom_kg > 0.0, "mtom_kg", f"mtom_kg must be > 0, got {self.mtom_kg}")
        _require(self.seats >= 1, "seats", f"seats must be >= 1, got {self.seats}")
        _require(self.payload_per_seat_kg >= 0.0, "payload_per_seat_kg",
                 f"payload_per_seat_kg must be >= 0, got {self.payload_per_seat_kg}")
        _require(self.disc_area_m2 > 0.0, "disc_area_m2",
                 f"disc_area_m2 must be > 0, got {self.disc_area_m2}")
        _require(0.0 < self.fom <= 1.0, "fom", f"fom must be in (0, 1], got {self.fom}")
        _require(self.interference_factor >= 1.0, "interference_factor",
                 f"interference_factor must be >= 1, got {self.interference_factor}")
        _require(0.0 < self.eta_vertical <= 1.0, "eta_vertical",
                 f"eta_vertical must be in (0, 1], got {self.eta_vertical}")
        _require(0.0 < self.eta_fixed_wing <= 1.0, "eta_fixed_wing",
                 f"eta_fixed_wing must be in (0, 1], got {self.eta_fixed_wing}")
        _require(0.0 < self.ewf < 1.0, "ewf", f"ewf must be in (0, 1), got {self.ewf}")
        _require(self.design_range_mi > 0.0, "design_range_mi",
                 f"design_range_mi must be > 0, got {self.design_range_mi}")
        _require(self.design_cruise_speed_mph > 0.0, "design_cruise_speed_mph",
                 f"design_cruise_speed_mph must be > 0, got {self.design_cruise_speed_mph}")
        _require(self.vertical_climb_rate_mps > 0.0, "vertical_climb_rate_mps",
                 f"vertical_climb_rate_mps must be > 0, got {self.vertical_climb_rate_mps}")
        _require(self.wing_climb_rate_mps > 0.0, "wing_climb_rate_mps",
                 f"wing_climb_rate_mps must be > 0, got {self.wing_climb_rate_mps}")
        _require(self.hover_altitude_m >= 0.0, "hover_altitude_m",
                 f"hover_altitude_m must be >= 0, got {self.hover_altitude_m}")
        _require(self.cruise_altitude_m >= self.hover_altitude_m, "cruise_altitude_m",
                 f"cruise_altitude_m ({self.cruise_altitude_m}) must be >= "
                 f"hover_altitude_m ({self.hover_altitude_m})")
        _require(self.lod_cruise is not None or self.drag_polar is not None, "lod_cruise",
                 "either lod_cruise or a drag polar is required")
        for field_name in ("lod_climb", "lod_cruise", "lod_descent"):
            value = getattr(self, field_name)
            if value is not None:
                _require(value > 0.0, field_name, f"{field_name} must be > 0, got {value}")
        budget = self.mtom_kg * (1.0 - self.ewf)
        _require(self.payload_kg < budget, "payload_per_seat_kg",
                 f"payload {self.payload_kg} kg must be below the non-empty mass "
                 f"budget {budget} kg (mtom*(1-ewf))")
        return self


@dataclass(frozen=True)
class MissionSegment:
    kind: SegmentKind
    duration_s: float
    distance_m: float
    power_w: float
    energy_wh: float


@dataclass(frozen=True)
class MissionProfile:
    """One aircraft's trip at a fixed range: ordered segments plus totals.

    total_energy_wh excludes the reserve; reserve energy is tracked apart.
    """

    aircraft: AircraftSpec
    range_mi: float
    segments: tuple[MissionSegment, ...]
    total_energy_wh: float
    reserve_energy_wh: float
    peak_power_w: float


def _segment(kind: SegmentKind, duration_s: float, distance_m: float,
             power_w: float) -> MissionSegment:
    return MissionSegment(kind, duration_s, distance_m, power_w,
                          power_w * duration_s / 3600.0)


def build_mission(spec: AircraftSpec, range_mi: float,
                  cruise_speed_mph: float | None = None,
                  include_reserve: bool = False) -> MissionProfile:
    """Assemble the segment-by-segment profile for one trip.

    cruise_speed_mph defaults to the spec's design cruise speed.
    """
    spec.validate()
    _require(range_mi > 0.0, "range_mi", f"range_mi must be > 0, got {range_mi}")
    speed_mph = spec.design_cruise_speed_mph if cruise_speed_mph is None else cruise_speed_mph
    _require(speed_mph > 0.0, "cruise_speed_mph",
             f"cruise_speed_mph must be > 0, got {speed_mph}")

    w = spec.weight_n
    v_cruise = mph_to_mps(speed_mph)
    rho_vertical = air_density(spec.hover_altitude_m)

    if spec.drag_polar is not None:
        rho_cruise = air_density(spec.cruise_altitude_m)
        v_wing = min_power_speed(spec.drag_polar, w, rho_cruise)
    else:
        rho_cruise = None
        v_wing = mph_to_mps(spec.design_cruise_speed_mph)

    def resolve_lod(direct: float | None, speed_mps: float) -> float:
        # direct L/D wins; the polar only fills in when no direct value exists
        if direct is not None:
            return direct
        if spec.lod_cruise is not None:
            return spec.lod_cruise
        return lift_to_drag_at(spec.drag_polar, speed_mps, w, rho_cruise)

    lod_climb = resolve_lod(spec.lod_climb, v_wing)
    lod_cruise = resolve_lod(spec.lod_cruise, v_cruise)
    lod_descent = resolve_lod(spec.lod_descent, v_wing)

    segments: list[MissionSegment] = []

    t_vertical = 0.0
    power_vertical_climb = 0.0
    if spec.hover_altitude_m > 0.0:
        t_vertical = spec.hover_altitude_m / spec.vertical_climb_rate_mps
        power_vertical_climb = vertical_power(spec.propulsion, VerticalFlightParams(
            weight_n=w,
            disc_area_m2=spec.disc_area_m2,
            fom=spec.fom,
            climb_rate_mps=spec.vertical_climb_rate_mps,
            density_kg_m3=rho_vertical,
            efficiency=spec.eta_vertical,
            interference_factor=spec.interference_factor,
        ))
        segments.append(_segment(SegmentKind.VERTICAL_CLIMB, t_vertical, 0.0,
                                 power_vertical_climb))

    climb_height = spec.cruise_altitude_m - spec.hover_altitude_m
    t_wing = 0.0
    wing_distance = 0.0
    if climb_height > 0.0:
        t_wing = climb_height / spec.wing_climb_rate_mps
        wing_distance = v_wing * t_wing
        power_climb = fixed_wing_power(FixedWingParams(
            weight_n=w,
            forward_speed_mps=v_wing,
            vertical_speed_mps=spec.wing_climb_rate_mps,
            lift_to_drag=lod_climb,
            efficiency=spec.eta_fixed_wing,
        ))
        segments.append(_segment(SegmentKind.WING_CLIMB, t_wing, wing_distance,
                                 power_climb))

    range_m = range_mi * MILE_M
    cruise_distance = range_m - 2.0 * wing_distance
    if -1e-9 * range_m < cruise_distance < 0.0:
        cruise_distance = 0.0
    if cruise_distance < 0.0:
        min_range = 2.0 * wing_distance / MILE_M
        raise InfeasibleMissionError(
            f"{spec.name}: range {range_mi} mi cannot fit the climb and descent "
            f"ground distance; minimum feasible range is {min_range:.4f} mi",
            min_feasible_range_mi=min_range,
        )
    power_cruise = fixed_wing_power(FixedWingParams(
        weight_n=w,
        forward_speed_mps=v_cruise,
        vertical_speed_mps=0.0,
        lift_to_drag=lod_cruise,
        efficiency=spec.eta_fixed_wing,
    ))
    if cruise_distance > 0.0:
        segments.append(_segment(SegmentKind.CRUISE, cruise_distance / v_cruise,
                                 cruise_distance, power_cruise))

    if climb_height > 0.0:
        power_descent = fixed_wing_power(FixedWingParams(
            weight_n=w,
            forward_speed_mps=v_wing,
            vertical_speed_mps=-spec.wing_climb_rate_mps,
            lift_to_drag=lod_descent,
            efficiency=spec.eta_fixed_wing,
        ))
        segments.append(_segment(SegmentKind.WING_DESCENT, t_wing, wing_distance,
                                 max(0.0, power_descent)))

    if spec.hover_altitude_m > 0.0:
        power_vertical_descent = vertical_power(spec.propulsion, VerticalFlightParams(
            weight_n=w,
            disc_area_m2=spec.disc_area_m2,
            fom=spec.fom,
            climb_rate_mps=0.0,
            density_kg_m3=rho_vertical,
            efficiency=spec.eta_vertical,
            interference_factor=spec.interference_factor,
        ))
        segments.append(_segment(SegmentKind.VERTICAL_DESCENT, t_vertical, 0.0,
                                 power_vertical_descent))

    if include_reserve:
        segments.append(_segment(SegmentKind.RESERVE, RESERVE_DURATION_S, 0.0,
                                 power_cruise))

    total = sum(s.energy_wh for s in segments if s.kind is not SegmentKind.RESERVE)
    reserve = sum(s.energy_wh for s in segments if s.kind is SegmentKind.RESERVE)
    peak = max(s.power_w for s in segments)
    return MissionProfile(spec, range_mi, tuple(segments), total, reserve, peak)


def energy_per_passenger_mile(spec: AircraftSpec, range_mi: float,
                              cruise_speed_mph: float | None = None,
                              occupants: int | None = None) -> float:
    """Trip energy (reserve excluded) per occupant per point-to-point mile.

    occupants defaults to a full cabin.
    """
    n = spec.seats if occupants is None else occupants
    _require(1 <= n <= spec.seats, "occupants",
             f"occupants must be in [1, {spec.seats}], got {n}")
    profile = build_mission(spec, range_mi, cruise_speed_mph, include_reserve=False)
    return profile.total_energy_wh / (range_mi * n)


def range_sweep(spec: AircraftSpec, ranges_mi, cruise_speed_mph: float | None = None,
                occupants: int | None = None) -> list[tuple[float, float]]:
    """Evaluate energy_per_passenger_mile over an ascending list of ranges."""
    ranges = [float(r) for r in ranges_mi]
    for previous, current in zip(ranges, ranges[1:]):
        if current <= previous:
            raise DataError(f"ranges must be strictly ascending, got {current} "
                            f"after {previous}")
    return [(r, energy_per_passenger_mile(spec, r, cruise_speed_mph, occupants))
            for r in ranges]
