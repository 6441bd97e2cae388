"""Thermal Casimir pressure between parallel plates, split into
propagating- and evanescent-wave contributions on the real frequency axis,
with closed-form asymptotics and an imaginary-frequency cross-check."""

from .materials import (
    AU_DRUDE,
    HIGH_EPS_320,
    ConstantEps,
    Drude,
    IdealMetal,
    LorentzOscillator,
    LorentzOscillators,
    Material,
    MaterialError,
)
from .fresnel import Polarization, Regime, SpectralPoint
from .quantities import ThermalScales, UnitSystem, force_norm, thermal_wavelength
from .spectral import (
    ForceComponents,
    IntegrationError,
    QuadratureSettings,
    bose_factor,
    force_components,
    force_ew,
    force_pw,
)

__version__ = "0.1.0"

__all__ = [
    "AU_DRUDE",
    "HIGH_EPS_320",
    "ConstantEps",
    "Drude",
    "ForceComponents",
    "IdealMetal",
    "IntegrationError",
    "LorentzOscillator",
    "LorentzOscillators",
    "Material",
    "MaterialError",
    "Polarization",
    "QuadratureSettings",
    "Regime",
    "SpectralPoint",
    "ThermalScales",
    "UnitSystem",
    "bose_factor",
    "force_components",
    "force_ew",
    "force_norm",
    "force_pw",
    "thermal_wavelength",
    "__version__",
]
