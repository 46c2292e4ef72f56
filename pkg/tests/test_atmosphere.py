import math

import pytest

from evtolsim import air_density, atmosphere_at
from evtolsim.errors import ParameterError


def test_sea_level_reference():
    assert air_density(0.0) == 1.225


def test_matches_published_table_at_1000m():
    # independent ISA table lookup: 1.1117 kg/m^3
    assert air_density(1000.0) == pytest.approx(1.1117, abs=5e-4)


def test_strictly_decreasing():
    assert air_density(500.0) > air_density(1500.0)
    values = [air_density(float(h)) for h in range(0, 11001, 50)]
    assert all(a > b for a, b in zip(values, values[1:]))


def test_one_metre_continuity_bound():
    # gradient is steepest at sea level and shrinks with altitude
    for h in [0, 1, 10, 100, 500, 1000, 3000, 6000, 9000, 10999]:
        assert abs(air_density(h + 1.0) - air_density(float(h))) < 2e-4


@pytest.mark.parametrize("altitude", [-1.0, -0.001, 11000.01, 1e6, float("nan")])
def test_domain_error_outside_troposphere(altitude):
    with pytest.raises(ParameterError) as excinfo:
        air_density(altitude)
    assert excinfo.value.field == "altitude_m"


def test_boundary_altitudes_are_valid():
    assert air_density(0.0) > air_density(11000.0) > 0.0


def test_atmosphere_state_bundle():
    state = atmosphere_at(300.0)
    assert state.altitude_m == 300.0
    assert state.density_kg_m3 == air_density(300.0)
    assert state.temperature_k == pytest.approx(288.15 - 0.0065 * 300.0, rel=1e-12)
    assert math.isfinite(state.density_kg_m3)
