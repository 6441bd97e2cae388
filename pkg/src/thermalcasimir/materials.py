"""Dielectric response models, evaluated on the real and imaginary axes.

Four plate models are supported: a Drude metal, a frequency-independent
dielectric, a sum of Lorentz oscillators, and the ideal metal.  The ideal
metal is a symbolic variant: its permittivity is never evaluated, the
reflection layer short-circuits it to r_s = -1, r_p = +1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np


class MaterialError(ValueError):
    """A material violates its model invariants."""


@dataclass(frozen=True)
class Drude:
    """Metal with eps(omega) = 1 - omega_p^2/(omega*(omega + i*omega_tau)).

    Both parameters in eV.  omega_tau = 0 is rejected: the lossless limit is
    approached, not attained, and the evanescent s-contribution differs
    discontinuously at exactly zero loss.
    """

    omega_p: float
    omega_tau: float
    label: str = "drude"


@dataclass(frozen=True)
class ConstantEps:
    """Frequency-independent dielectric with real permittivity eps >= 1."""

    eps: float
    label: str = "eps"


@dataclass(frozen=True)
class LorentzOscillator:
    """One oscillator: strength * omega_0^2 / (omega_0^2 - omega^2 - i*gamma*omega)."""

    strength: float
    omega_0: float  # eV
    gamma: float    # eV


@dataclass(frozen=True)
class LorentzOscillators:
    """eps_inf plus a sum of Lorentz oscillators."""

    eps_inf: float
    oscillators: tuple[LorentzOscillator, ...]
    label: str = "lorentz"


@dataclass(frozen=True)
class IdealMetal:
    """Perfect reflector, r_s = -1 and r_p = +1 at every frequency."""

    label: str = "ideal"


Material = Union[Drude, ConstantEps, LorentzOscillators, IdealMetal]

# Drude parameters of Au used throughout the numerical work, in eV.
AU_DRUDE = Drude(omega_p=9.0, omega_tau=0.035, label="Au")

# Example high-permittivity oscillator model normalized to eps(0) = 320.
# Explicitly not a calibrated fit to any measured crystal.
HIGH_EPS_320 = LorentzOscillators(
    eps_inf=5.2,
    oscillators=(LorentzOscillator(strength=314.8, omega_0=0.010, gamma=0.002),),
    label="eps320-example",
)


def validate(m: Material) -> list[str]:
    """Return all invariant violations of ``m``; an empty list means valid."""
    errors: list[str] = []
    if isinstance(m, Drude):
        if not m.omega_p > 0:
            errors.append("omega_p must be strictly positive")
        if not m.omega_tau > 0:
            errors.append("omega_tau must be strictly positive")
    elif isinstance(m, ConstantEps):
        if not m.eps >= 1:
            errors.append("eps must be >= 1")
    elif isinstance(m, LorentzOscillators):
        if not m.eps_inf >= 1:
            errors.append("eps_inf must be >= 1")
        for i, osc in enumerate(m.oscillators):
            if not osc.strength >= 0:
                errors.append(f"oscillator {i}: strength must be >= 0")
            if not osc.omega_0 > 0:
                errors.append(f"oscillator {i}: omega_0 must be strictly positive")
            if not osc.gamma >= 0:
                errors.append(f"oscillator {i}: gamma must be >= 0")
    elif isinstance(m, IdealMetal):
        pass
    else:
        errors.append(f"unknown material variant {type(m).__name__}")
    return errors


def require_valid(*mats: Material) -> None:
    """Raise :class:`MaterialError` if any material is invalid."""
    for m in mats:
        problems = validate(m)
        if problems:
            raise MaterialError(f"{m.label}: " + "; ".join(problems))


def permittivity_real_axis(m: Material, omega):
    """eps(omega) on the real frequency axis; omega in eV, scalar or array.

    The imaginary part is >= 0 for every valid model (passivity).
    """
    if isinstance(m, IdealMetal):
        raise MaterialError(
            "ideal metal has no finite permittivity; it is resolved at the "
            "reflection level"
        )
    w = np.asarray(omega, dtype=float)
    if np.any(w <= 0):
        raise ValueError("omega must be strictly positive")
    if isinstance(m, Drude):
        eps = 1.0 - m.omega_p**2 / (w * (w + 1j * m.omega_tau))
    elif isinstance(m, ConstantEps):
        eps = np.full(w.shape, m.eps, dtype=complex) if w.shape else complex(m.eps)
    elif isinstance(m, LorentzOscillators):
        eps = np.full(w.shape, m.eps_inf, dtype=complex) if w.shape else complex(m.eps_inf)
        for osc in m.oscillators:
            eps = eps + osc.strength * osc.omega_0**2 / (
                osc.omega_0**2 - w * w - 1j * osc.gamma * w
            )
    else:
        raise MaterialError(f"unknown material variant {type(m).__name__}")
    if np.isscalar(omega) or np.asarray(omega).shape == ():
        return complex(eps)
    return eps


def permittivity_imag_axis(m: Material, xi):
    """eps(i*xi) on the imaginary frequency axis; xi in eV, scalar or array.

    Real, >= 1, and monotonically non-increasing in xi for all variants.
    """
    if isinstance(m, IdealMetal):
        raise MaterialError(
            "ideal metal has no finite permittivity; it is resolved at the "
            "reflection level"
        )
    x = np.asarray(xi, dtype=float)
    if np.any(x <= 0):
        raise ValueError("xi must be strictly positive")
    if isinstance(m, Drude):
        eps = 1.0 + m.omega_p**2 / (x * (x + m.omega_tau))
    elif isinstance(m, ConstantEps):
        eps = np.full(x.shape, m.eps) if x.shape else float(m.eps)
    elif isinstance(m, LorentzOscillators):
        eps = np.full(x.shape, m.eps_inf) if x.shape else float(m.eps_inf)
        for osc in m.oscillators:
            eps = eps + osc.strength * osc.omega_0**2 / (
                osc.omega_0**2 + x * x + osc.gamma * x
            )
    else:
        raise MaterialError(f"unknown material variant {type(m).__name__}")
    if np.isscalar(xi) or np.asarray(xi).shape == ():
        return float(eps)
    return eps


def static_permittivity(m: Material) -> float:
    """xi -> 0 limit of eps(i*xi); math.inf for Drude and ideal metals."""
    if isinstance(m, (IdealMetal, Drude)):
        return float("inf")
    if isinstance(m, ConstantEps):
        return float(m.eps)
    if isinstance(m, LorentzOscillators):
        return float(m.eps_inf + sum(o.strength for o in m.oscillators))
    raise MaterialError(f"unknown material variant {type(m).__name__}")


def is_ideal(m: Material) -> bool:
    return isinstance(m, IdealMetal)
