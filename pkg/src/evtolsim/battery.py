"""Battery pack sizing and feasibility classification.

MTOM splits three ways: payload, battery, empty weight. Whatever the empty
weight fraction and full payload leave over is battery mass; dividing mission
energy (trip plus reserve) and peak power by that mass gives the minimum pack
specific energy and specific power. A partial-pack-failure fraction scales
the power requirement by 1/(1 - fraction). Requirements carry no degradation
margin, so they read as end-of-life minima.
"""

from dataclasses import dataclass
from enum import Enum

from .atmosphere import air_density
from .errors import ContractError, DataError, MassBudgetError, ParameterError
from .mission import AircraftSpec, MissionProfile, SegmentKind, build_mission
from .powerplant import best_range_speed
from .units import MPH_TO_MPS


class PackCategory(Enum):
    """Technology-readiness labels used by the pack dataset."""

    CURRENT_LI_ION = "Current Li-ion"
    NOVEL_PROTOTYPE_LI_ION = "Novel/prototype Li-ion"
    ADVANCED = "Advanced"


@dataclass(frozen=True)
class BatteryRequirement:
    battery_mass_kg: float
    specific_energy_wh_per_kg: float
    specific_power_w_per_kg: float
    ewf_used: float
    failure_fraction: float


@dataclass(frozen=True)
class BatteryPackRecord:
    """One real pack's achieved metrics and readiness category."""

    name: str
    category: PackCategory
    specific_energy_wh_per_kg: float
    specific_power_w_per_kg: float

    def __post_init__(self):
        if not self.specific_energy_wh_per_kg > 0.0:
            raise ParameterError("specific_energy_wh_per_kg",
                                 f"pack {self.name!r}: specific energy must be > 0")
        if not self.specific_power_w_per_kg > 0.0:
            raise ParameterError("specific_power_w_per_kg",
                                 f"pack {self.name!r}: specific power must be > 0")


@dataclass(frozen=True)
class FeasibilityVerdict:
    feasible: bool
    dominating_packs: tuple[str, ...]


def battery_mass(mtom_kg: float, ewf: float, payload_kg: float) -> float:
    """Battery mass (kg) left after empty weight and payload claims on MTOM."""
    if not mtom_kg > 0.0:
        raise ParameterError("mtom_kg", f"mtom_kg must be > 0, got {mtom_kg}")
    if not 0.0 < ewf < 1.0:
        raise ParameterError("ewf", f"ewf must be in (0, 1), got {ewf}")
    if not payload_kg >= 0.0:
        raise ParameterError("payload_kg", f"payload_kg must be >= 0, got {payload_kg}")
    mass = mtom_kg * (1.0 - ewf) - payload_kg
    if mass <= 0.0:
        raise MassBudgetError(
            f"no mass left for the battery: payload {payload_kg} kg exceeds the "
            f"non-empty budget {mtom_kg * (1.0 - ewf)} kg by {-mass} kg",
            shortfall_kg=-mass,
        )
    return mass


def size_battery(spec: AircraftSpec, profile: MissionProfile, ewf: float,
                 failure_fraction: float = 0.0) -> BatteryRequirement:
    """Minimum pack specific energy and power for a mission profile.

    The profile must include the reserve segment and full payload is assumed.
    """
    if not any(s.kind is SegmentKind.RESERVE for s in profile.segments):
        raise ContractError("battery sizing requires a profile built with "
                            "include_reserve=True")
    if not 0.0 <= failure_fraction < 1.0:
        raise ParameterError("failure_fraction",
                             f"failure_fraction must be in [0, 1), got {failure_fraction}")
    mass = battery_mass(spec.mtom_kg, ewf, spec.payload_kg)
    specific_energy = (profile.total_energy_wh + profile.reserve_energy_wh) / mass
    specific_power = profile.peak_power_w / (mass * (1.0 - failure_fraction))
    return BatteryRequirement(mass, specific_energy, specific_power, ewf,
                              failure_fraction)


def ewf_sweep(spec: AircraftSpec, profile: MissionProfile, ewf_values,
              failure_fractions) -> list[BatteryRequirement]:
    """Requirements over the Cartesian product of EWFs and failure fractions."""
    requirements = []
    for ewf in ewf_values:
        for fraction in failure_fractions:
            try:
                requirements.append(size_battery(spec, profile, ewf, fraction))
            except MassBudgetError as exc:
                raise MassBudgetError(
                    f"infeasible at (ewf={ewf}, failure_fraction={fraction}): {exc}",
                    shortfall_kg=exc.shortfall_kg,
                ) from exc
    return requirements


def sizing_mission(spec: AircraftSpec) -> MissionProfile:
    """Design-range profile with reserves, flown at the max-range condition.

    With a drag polar the cruise speed is the best-range speed; otherwise the
    design cruise speed stands in.
    """
    if spec.drag_polar is not None:
        v = best_range_speed(spec.drag_polar, spec.weight_n,
                             air_density(spec.cruise_altitude_m))
        speed_mph = v / MPH_TO_MPS
    else:
        speed_mph = spec.design_cruise_speed_mph
    return build_mission(spec, spec.design_range_mi, speed_mph, include_reserve=True)


def classify_feasibility(req: BatteryRequirement,
                         packs) -> dict[PackCategory, FeasibilityVerdict]:
    """Per-category verdicts: feasible iff some pack meets both metrics."""
    packs = list(packs)
    if not packs:
        raise DataError("battery pack dataset is empty")
    verdicts = {}
    for category in PackCategory:
        dominating = tuple(
            p.name for p in packs
            if p.category is category
            and p.specific_energy_wh_per_kg >= req.specific_energy_wh_per_kg
            and p.specific_power_w_per_kg >= req.specific_power_w_per_kg
        )
        verdicts[category] = FeasibilityVerdict(bool(dominating), dominating)
    return verdicts
