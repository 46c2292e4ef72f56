"""Mission-energy simulation and battery-requirement sizing for EVTOL aircraft.

Library layout:
    atmosphere  standard-atmosphere air density
    powerplant  vertical (momentum theory) and wing-borne power, drag polar
    mission     segment profiles and Wh/passenger-mile curves
    battery     pack sizing and feasibility against real pack data
    compare     terrestrial baselines and crossover ranges
    dataio      spec files, pack datasets, delimited result tables
    cli         command-line front end (also `python -m evtolsim`)
    plots       figure rendering for the report path
"""

from .atmosphere import AtmosphereState, air_density, atmosphere_at
from .battery import (
    BatteryPackRecord,
    BatteryRequirement,
    FeasibilityVerdict,
    PackCategory,
    battery_mass,
    classify_feasibility,
    ewf_sweep,
    size_battery,
    sizing_mission,
)
from .compare import (
    TerrestrialVehicle,
    VehicleKind,
    crossover_range,
    terrestrial_energy_per_passenger_mile,
)
from .dataio import (
    ResultTable,
    SpecDocument,
    builtin_packs_path,
    builtin_spec_path,
    dump_packs,
    dump_specs,
    load_packs,
    load_specs,
    parse_packs,
    parse_specs,
    read_table,
    save_packs,
    save_specs,
    write_table,
)
from .mission import (
    AircraftSpec,
    MissionProfile,
    MissionSegment,
    SegmentKind,
    build_mission,
    energy_per_passenger_mile,
    range_sweep,
)
from .powerplant import (
    DragPolar,
    FixedWingParams,
    PropulsionKind,
    VerticalFlightParams,
    best_range_speed,
    fixed_wing_power,
    lift_to_drag_at,
    min_power_speed,
    vertical_power,
)

__version__ = "0.1.0"

__all__ = [
    "AircraftSpec",
    "AtmosphereState",
    "BatteryPackRecord",
    "BatteryRequirement",
    "DragPolar",
    "FeasibilityVerdict",
    "FixedWingParams",
    "MissionProfile",
    "MissionSegment",
    "PackCategory",
    "PropulsionKind",
    "ResultTable",
    "SegmentKind",
    "SpecDocument",
    "TerrestrialVehicle",
    "VehicleKind",
    "VerticalFlightParams",
    "air_density",
    "atmosphere_at",
    "battery_mass",
    "best_range_speed",
    "build_mission",
    "builtin_packs_path",
    "builtin_spec_path",
    "classify_feasibility",
    "crossover_range",
    "dump_packs",
    "dump_specs",
    "energy_per_passenger_mile",
    "ewf_sweep",
    "fixed_wing_power",
    "lift_to_drag_at",
    "load_packs",
    "load_specs",
    "min_power_speed",
    "parse_packs",
    "parse_specs",
    "range_sweep",
    "read_table",
    "save_packs",
    "save_specs",
    "size_battery",
    "sizing_mission",
    "terrestrial_energy_per_passenger_mile",
    "vertical_power",
    "write_table",
]
