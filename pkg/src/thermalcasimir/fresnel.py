"""Single-interface Fresnel reflection in the gap variables (omega, y).

Variables follow the gap parametrization: y = 2*a*k0 for propagating waves
(PW) and y = 2*a*|k0| for evanescent waves (EW), with the frequency entering
through W = omega/omega_c, omega_c = c/(2a).  The longitudinal parameter is

    s = sqrt(W^2*(eps - 1) + Y^2),    Y = y (PW)  or  Y = i*y (EW),

taken on the principal branch (Re s >= 0; Im s >= 0 on the negative real
axis), which makes the fields decay into the medium.  The coefficients are
evaluated in the rationalized forms

    r_s = -W^2*(eps - 1) / (Y + s)^2
    r_p = (eps - 1)*((eps + 1)*Y^2 - W^2) / (eps*Y + s)^2

which are algebraically identical to (Y - s)/(Y + s) and
(eps*Y - s)/(eps*Y + s) but immune to the catastrophic cancellation of the
difference forms when r -> 0 (large y, or eps -> 1).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import materials, quantities
from .materials import Material


class Polarization(enum.Enum):
    S = "s"
    P = "p"


class Regime(enum.Enum):
    PW = "pw"
    EW = "ew"


@dataclass(frozen=True)
class SpectralPoint:
    """One (u, y) point of the real-frequency integrand.

    u = hbar*omega/(k_B*T) is the dimensionless frequency and y the
    dimensionless transverse variable of the chosen regime.  The gap ``a``
    (um) and temperature ``T`` (K) fix omega and omega/omega_c.
    """

    u: float
    y: float
    regime: Regime
    a: float
    T: float

    def __post_init__(self) -> None:
        if self.u <= 0:
            raise ValueError("u must be strictly positive")
        if self.y < 0:
            raise ValueError("y must be non-negative")
        if self.a <= 0 or self.T <= 0:
            raise ValueError("a and T must be positive")
        if self.regime is Regime.PW and self.y > self.omega_over_omega_c * (1 + 1e-12):
            raise ValueError("PW points require y <= omega/omega_c")

    @property
    def omega(self) -> float:
        """Photon energy hbar*omega in eV."""
        return self.u * quantities.K_B * self.T

    @property
    def omega_over_omega_c(self) -> float:
        return self.u * 2.0 * self.a / quantities.thermal_wavelength(self.T)


def _principal_sqrt(z):
    """Principal square root mapping the negative real axis to +i*sqrt(|z|)."""
    zc = np.asarray(z, dtype=complex)
    # normalize -0.0 imaginary parts so the branch cut is approached from above
    im = zc.imag.copy() if zc.shape else zc.imag
    zc = np.where(im == 0.0, zc.real + 0.0j, zc) if zc.shape else (
        complex(zc.real, 0.0) if im == 0.0 else complex(zc)
    )
    return np.sqrt(zc)


def longitudinal_param(eps, omega_over_omega_c: float, y: float, regime: Regime):
    """s = sqrt(W^2*(eps-1) + y^2) (PW) or sqrt(W^2*(eps-1) - y^2) (EW)."""
    if omega_over_omega_c <= 0:
        raise ValueError("omega_over_omega_c must be positive")
    if y < 0:
        raise ValueError("y must be non-negative")
    w2 = omega_over_omega_c**2
    sign = 1.0 if regime is Regime.PW else -1.0
    arg = w2 * (complex(eps) - 1.0) + sign * y * y
    out = _principal_sqrt(arg)
    return complex(out) if np.asarray(out).shape == () else out


def reflection_arrays(eps, W, Y, pol: Polarization):
    """Vectorized single-interface coefficient for a finite material.

    Parameters
    ----------
    eps : complex scalar or array
        Permittivity at the frequencies encoded in ``W``.
    W : scalar or array
        omega/omega_c, broadcastable against ``Y``.
    Y : scalar or array
        y for PW points, 1j*y for EW points (complex dtype).
    pol : Polarization

    Returns
    -------
    complex ndarray (or scalar) of r values.
    """
    eps = np.asarray(eps, dtype=complex)
    W2 = np.asarray(W, dtype=float) ** 2
    A = W2 * (eps - 1.0)
    A = np.where(A.imag == 0.0, A.real + 0.0j, A)
    Yc = np.asarray(Y, dtype=complex)
    s = np.sqrt(np.where((A + Yc * Yc).imag == 0.0,
                         (A + Yc * Yc).real + 0.0j,
                         A + Yc * Yc))
    with np.errstate(divide="ignore", invalid="ignore"):
        if pol is Polarization.S:
            r = -A / ((Yc + s) * (Yc + s))
        else:
            r = (eps - 1.0) * ((eps + 1.0) * (Yc * Yc) - W2) / (
                (eps * Yc + s) * (eps * Yc + s)
            )
    # vacuum limit: no interface, no reflection (replaces the 0/0 at A=0, Y=0)
    r = np.where(A == 0.0, 0.0 + 0.0j, r)
    return r


def reflect(m: Material, pt: SpectralPoint, pol: Polarization) -> complex:
    """Reflection coefficient of one plate at a spectral point."""
    if materials.is_ideal(m):
        return -1.0 + 0.0j if pol is Polarization.S else 1.0 + 0.0j
    eps = materials.permittivity_real_axis(m, pt.omega)
    W = pt.omega_over_omega_c
    Y = pt.y + 0.0j if pt.regime is Regime.PW else 1j * pt.y
    return complex(reflection_arrays(eps, W, Y, pol))


def pair_product(m1: Material, m2: Material, pt: SpectralPoint,
                 pol: Polarization) -> complex:
    """R = r_1 * r_2 of the two plates; |R| <= 1 for passive materials."""
    return reflect(m1, pt, pol) * reflect(m2, pt, pol)
