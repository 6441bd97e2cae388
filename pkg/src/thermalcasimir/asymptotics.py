"""Closed-form limits of the thermal pressure, as checks and fast estimates.

Each result carries the pressure in Pa, its value normalized to
k_B*T*zeta(3)/(8*pi*a^3), and a validity flag from the distance-regime
predicate under which the formula was derived.  The metal-dielectric
p-polarization entries converge only at separations roughly two orders of
magnitude beyond their naive scale, so their predicates are conservative
and annotated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import quantities
from .quadrature import integrate

# penetration scale of the Au parameters used in the numerical work
_AU_OMEGA_P = 9.0


@dataclass(frozen=True)
class AsymptoticResult:
    """One closed-form component: signed pressure plus validity bookkeeping."""

    value: float
    normalized: float
    valid: bool
    formula: str
    note: str = ""


def _result(value_pa: float, a: float, T: float, valid: bool, formula: str,
            note: str = "") -> AsymptoticResult:
    return AsymptoticResult(
        value=value_pa,
        normalized=value_pa / quantities.force_norm(a, T),
        valid=valid,
        formula=formula,
        note=note,
    )


def lifshitz_bracket_integral(b: float) -> float:
    """int_0^inf x^2 dx / (b*e^x - 1) for b >= 1; equals 2*zeta(3) at b = 1."""
    if b < 1.0:
        raise ValueError("b must be >= 1 for a convergent bracket")

    def f(x):
        with np.errstate(over="ignore"):
            return x * x / (b * np.exp(x) - 1.0)

    edges = [0.0, 0.5, 1.0, 2.0, 4.0, 7.0, 11.0, 16.0, 24.0, 40.0, 80.0, 160.0]
    res = integrate(f, edges, rel_tol=1e-12, abs_tol=1e-15, orders=(10, 20),
                    max_panels=400)
    return res.value


def lifshitz_limit(eps1: float, eps2: float, a: float, T: float) -> float:
    """Large-distance thermal pressure (Pa) from the static permittivities.

    Accepts math.inf for an ideal-metal plate; both plates infinite gives
    exactly T*zeta(3)/(8*pi*a^3).
    """
    if a <= 0 or T <= 0:
        raise ValueError("gap and temperature must be positive")
    for eps in (eps1, eps2):
        if not (eps >= 1.0):
            raise ValueError("static permittivities must be >= 1 (or inf)")
    if eps1 == 1.0 or eps2 == 1.0:
        return 0.0
    f1 = 1.0 if math.isinf(eps1) else (eps1 + 1.0) / (eps1 - 1.0)
    f2 = 1.0 if math.isinf(eps2) else (eps2 + 1.0) / (eps2 - 1.0)
    b = f1 * f2
    if b == 1.0:
        return quantities.force_norm(a, T)
    pref = quantities.K_B * T / (16.0 * math.pi * a**3) * \
        quantities.EV_PER_UM3_TO_PA
    return pref * lifshitz_bracket_integral(b)


def metal_metal_large(a: float, T: float) -> dict[str, AsymptoticResult]:
    """Separation far beyond the thermal wavelength, two real metals."""
    fn = quantities.force_norm(a, T)
    valid = a > 5.0 * quantities.thermal_wavelength(T)
    return {
        "pw_s": _result(fn, a, T, valid, "metal_metal_large"),
        "pw_p": _result(fn, a, T, valid, "metal_metal_large"),
        "ew_s": _result(-fn, a, T, valid, "metal_metal_large"),
        "ew_p": _result(0.0, a, T, valid, "metal_metal_large",
                        note="vanishes only as omega_tau -> 0"),
    }


def metal_metal_small(a: float, T: float,
                      omega_p: float = _AU_OMEGA_P) -> dict[str, AsymptoticResult]:
    """Gap between the penetration depth and the thermal wavelength."""
    fn = quantities.force_norm(a, T)
    bb = quantities.blackbody_pressure(T)
    depth = quantities.HBAR_C / omega_p
    valid = 10.0 * depth < a < quantities.thermal_wavelength(T) / 5.0
    return {
        "pw_s": _result(0.5 * bb, a, T, valid, "metal_metal_small"),
        "pw_p": _result(0.5 * bb, a, T, valid, "metal_metal_small"),
        "ew_s": _result(-fn, a, T, valid, "metal_metal_small"),
        "ew_p": _result(0.0, a, T, valid, "metal_metal_small",
                        note="vanishes only as omega_tau -> 0"),
    }


def metal_dielectric_large(eps2: float, a: float,
                           T: float) -> dict[str, AsymptoticResult]:
    """Ideal metal facing a high-permittivity dielectric, large gaps."""
    if eps2 <= 1.0:
        raise ValueError("eps2 must exceed 1")
    fn = quantities.force_norm(a, T)
    lam = quantities.thermal_wavelength(T)
    valid_s = a > 5.0 * lam / math.sqrt(eps2)
    valid_p = a > 5.0 * lam * math.sqrt(eps2)
    slow = "approached only about two decades beyond the naive scale"
    return {
        "pw_s": _result(fn, a, T, valid_s, "metal_dielectric_large"),
        "ew_s": _result(-fn, a, T, valid_s, "metal_dielectric_large"),
        "pw_p": _result(-0.75 * fn, a, T, valid_p, "metal_dielectric_large",
                        note=slow),
        "ew_p": _result(1.75 * fn, a, T, valid_p, "metal_dielectric_large",
                        note=slow),
    }


def metal_dielectric_small(eps2: float, a: float,
                           T: float) -> dict[str, AsymptoticResult]:
    """Ideal metal facing a high-permittivity dielectric, small gaps."""
    if eps2 <= 1.0:
        raise ValueError("eps2 must exceed 1")
    lam = quantities.thermal_wavelength(T)
    half_bb = 0.5 * quantities.blackbody_pressure(T)  # pi^2 T^4/(90 hbar^3 c^3)
    valid_s = a < lam / math.sqrt(eps2) / 5.0
    valid_p = 5.0 * lam * eps2**-1.5 < a < lam / math.sqrt(eps2) / 5.0
    log_arg = eps2**1.5 * a / lam
    t_ev = quantities.K_B * T
    if log_arg > 1.0:
        ew_p_pa = t_ev**2 * math.log(log_arg) / (
            24.0 * a * a * quantities.HBAR_C * math.sqrt(eps2)
        ) * quantities.EV_PER_UM3_TO_PA
        ew_p_note = ""
        ew_p_valid = valid_p
    else:
        ew_p_pa = 0.0
        ew_p_note = "outside the intermediate range: log argument <= 1"
        ew_p_valid = False
    return {
        "pw_s": _result(-half_bb * 1.5 * math.sqrt(eps2), a, T, valid_s,
                        "metal_dielectric_small"),
        "ew_s": _result(-half_bb * eps2**1.5, a, T, valid_s,
                        "metal_dielectric_small"),
        "pw_p": _result(-half_bb * 0.75 * math.sqrt(eps2), a, T, valid_p,
                        "metal_dielectric_small"),
        "ew_p": _result(ew_p_pa, a, T, ew_p_valid, "metal_dielectric_small",
                        note=ew_p_note),
    }
