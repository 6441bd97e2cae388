"""Fixed unit system and the thermal scales derived from it.

Internal convention: energies and (angular) frequencies in eV (hbar = 1),
lengths in micrometers, temperatures in kelvin.  Pressures are assembled in
eV/um^3 and converted to pascal at the interface.  The constants below are
fixed, not configurable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

HBAR_C = 0.1973269804  # eV um
K_B = 8.617333262e-5   # eV/K
ZETA_3 = 1.2020569031595943

# 1 eV/um^3 = 1.602176634e-19 J / 1e-18 m^3
EV_PER_UM3_TO_PA = 0.1602176634


@dataclass(frozen=True)
class UnitSystem:
    """The eV/um/K unit system with its conversion factors to SI pressure."""

    hbar_c: float = HBAR_C
    k_b: float = K_B
    to_pascal: float = EV_PER_UM3_TO_PA

    @property
    def from_pascal(self) -> float:
        return 1.0 / self.to_pascal


UNITS = UnitSystem()


def thermal_wavelength(temperature: float) -> float:
    """Thermal wavelength hbar*c/(k_B*T) in micrometers (no 2*pi factor)."""
    if temperature <= 0:
        raise ValueError("temperature must be positive")
    return HBAR_C / (K_B * temperature)


def characteristic_energy(gap: float) -> float:
    """Characteristic photon energy hbar*c/(2*a) of a gap of width a, in eV."""
    if gap <= 0:
        raise ValueError("gap must be positive")
    return HBAR_C / (2.0 * gap)


def force_norm(gap: float, temperature: float) -> float:
    """Natural thermal pressure scale k_B*T*zeta(3)/(8*pi*a^3) in Pa."""
    if gap <= 0:
        raise ValueError("gap must be positive")
    if temperature <= 0:
        raise ValueError("temperature must be positive")
    natural = K_B * temperature * ZETA_3 / (8.0 * math.pi * gap**3)
    return natural * EV_PER_UM3_TO_PA


def zero_point_ideal(gap: float) -> float:
    """Zero-temperature ideal-mirror pressure pi^2*hbar*c/(240*a^4) in Pa."""
    if gap <= 0:
        raise ValueError("gap must be positive")
    return math.pi**2 * HBAR_C / (240.0 * gap**4) * EV_PER_UM3_TO_PA


def blackbody_pressure(temperature: float) -> float:
    """Blackbody radiation pressure pi^2*T^4/(45*(hbar*c)^3), both
    polarizations, in Pa."""
    if temperature <= 0:
        raise ValueError("temperature must be positive")
    t = K_B * temperature
    return math.pi**2 * t**4 / (45.0 * HBAR_C**3) * EV_PER_UM3_TO_PA


@dataclass(frozen=True)
class ThermalScales:
    """Derived scales of a (gap, temperature) configuration.

    Attributes
    ----------
    lambda_t : float
        Thermal wavelength in um.
    omega_c : float
        Characteristic energy hbar*c/(2*a) in eV.
    force_norm : float
        k_B*T*zeta(3)/(8*pi*a^3) in Pa.
    """

    lambda_t: float
    omega_c: float
    force_norm: float
    zeta3: float = field(default=ZETA_3)

    @classmethod
    def for_gap(cls, gap: float, temperature: float) -> "ThermalScales":
        return cls(
            lambda_t=thermal_wavelength(temperature),
            omega_c=characteristic_energy(gap),
            force_norm=force_norm(gap, temperature),
        )
