"""Unit conversion constants.

All physics modules compute in SI; miles and mi/h appear only at module
boundaries that mirror how aircraft data is published.
"""

MILE_M = 1609.344            # international mile
NAUTICAL_MILE_M = 1852.0
MPH_TO_MPS = MILE_M / 3600.0
NMI_TO_MI = NAUTICAL_MILE_M / MILE_M


def miles_to_metres(miles: float) -> float:
    return miles * MILE_M


def mph_to_mps(mph: float) -> float:
    return mph * MPH_TO_MPS
