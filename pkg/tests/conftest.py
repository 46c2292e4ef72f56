import pytest

from evtolsim import (
    AircraftSpec,
    PropulsionKind,
    builtin_packs_path,
    builtin_spec_path,
    load_packs,
    load_specs,
)


def rel(value: float, reference: float) -> float:
    return abs(value - reference) / abs(reference)


@pytest.fixture
def testbed() -> AircraftSpec:
    """Synthetic open-rotor aircraft used by the frozen mission oracle."""
    return AircraftSpec(
        name="testbed",
        propulsion=PropulsionKind.OPEN_ROTOR,
        mtom_kg=1000.0,
        seats=2,
        disc_area_m2=20.0,
        fom=0.7,
        eta_vertical=0.85,
        eta_fixed_wing=0.9,
        design_range_mi=100.0,
        design_cruise_speed_mph=100.0,
        vertical_climb_rate_mps=2.0,
        ewf=0.5,
        lod_cruise=12.0,
        hover_altitude_m=15.0,
        cruise_altitude_m=300.0,
    )


@pytest.fixture(scope="session")
def shipped_doc():
    return load_specs(builtin_spec_path())


@pytest.fixture(scope="session")
def shipped_packs():
    return load_packs(builtin_packs_path())
