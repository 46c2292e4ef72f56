"""International Standard Atmosphere density model (troposphere only).

Linear temperature lapse from sea level and the corresponding power-law
density profile. Valid for geopotential altitudes 0 to 11,000 m.
"""

from dataclasses import dataclass

from .errors import ParameterError

GRAVITY_MPS2 = 9.80665            # standard acceleration of gravity
GAS_CONSTANT_J_KGK = 287.053      # specific gas constant, dry air
SEA_LEVEL_TEMPERATURE_K = 288.15
SEA_LEVEL_DENSITY_KG_M3 = 1.225
LAPSE_RATE_K_M = 0.0065
TROPOPAUSE_M = 11000.0

_DENSITY_EXPONENT = GRAVITY_MPS2 / (LAPSE_RATE_K_M * GAS_CONSTANT_J_KGK) - 1.0


@dataclass(frozen=True)
class AtmosphereState:
    """Air state at one altitude."""

    altitude_m: float
    density_kg_m3: float
    temperature_k: float


def temperature(altitude_m: float) -> float:
    """Air temperature (K) at a geopotential altitude (m)."""
    _check_altitude(altitude_m)
    return SEA_LEVEL_TEMPERATURE_K - LAPSE_RATE_K_M * altitude_m


def air_density(altitude_m: float) -> float:
    """Air density (kg/m^3) at a geopotential altitude (m)."""
    _check_altitude(altitude_m)
    t = SEA_LEVEL_TEMPERATURE_K - LAPSE_RATE_K_M * altitude_m
    return SEA_LEVEL_DENSITY_KG_M3 * (t / SEA_LEVEL_TEMPERATURE_K) ** _DENSITY_EXPONENT


def atmosphere_at(altitude_m: float) -> AtmosphereState:
    """Bundle altitude, density and temperature into one state record."""
    return AtmosphereState(altitude_m, air_density(altitude_m), temperature(altitude_m))


def _check_altitude(altitude_m: float) -> None:
    if not 0.0 <= altitude_m <= TROPOPAUSE_M:
        raise ParameterError(
            "altitude_m",
            f"altitude {altitude_m} m is outside the troposphere model "
            f"domain [0, {TROPOPAUSE_M:.0f}] m",
        )
