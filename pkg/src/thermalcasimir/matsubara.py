"""Imaginary-frequency evaluation of the same plate pressure.

The equilibrium Lifshitz pressure as a Matsubara sum,

    F = (T/pi) sum_{n>=0}' int_0^inf q dq kappa_n sum_mu
        R_mu e^{-2 kappa_n a} / (1 - R_mu e^{-2 kappa_n a}),

with xi_n = 2 pi n T / hbar, kappa_n = sqrt(xi_n^2/c^2 + q^2) and the primed
sum halving n = 0.  This includes the zero-point content; the thermal-only
pressure that the real-frequency integrals produce is the difference
``matsubara_total - zero_point_force``, which is the package's primary
numerical cross-check.

Everything here is kept independent of the real-axis machinery: reflection
coefficients are rebuilt from the imaginary-axis permittivity in real
arithmetic, and the q integrals run through the substitution x = 2*kappa*a,
which gives a uniform e^{-x} decay for every Matsubara index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import materials, quantities
from .materials import Material
from .quadrature import integrate


@dataclass(frozen=True)
class MatsubaraSettings:
    """Truncation and tolerance knobs of the imaginary-frequency sums.

    ``n_max = None`` selects the index at which xi_n exceeds
    50*max(omega_c, k_B*T), past which terms are exponentially dead.
    """

    n_max: int | None = None
    q_rel_tol: float = 1e-9
    xi_rel_tol: float = 1e-8
    w_max: float = 90.0
    x_span: float = 70.0

    def __post_init__(self) -> None:
        if self.n_max is not None and self.n_max < 10:
            raise ValueError("n_max must be at least 10")
        for tol in (self.q_rel_tol, self.xi_rel_tol):
            if not (0.0 < tol <= 1e-4):
                raise ValueError("tolerances must lie in (0, 1e-4]")
        if self.w_max <= 1 or self.x_span <= 10:
            raise ValueError("w_max and x_span are unreasonably small")


DEFAULT_MATSUBARA = MatsubaraSettings()


def _pair_r(m1: Material, m2: Material, eps1, eps2, x, x0):
    """R_s, R_p of the plate pair at one imaginary frequency."""
    rs, rp = [], []
    for m, eps in ((m1, eps1), (m2, eps2)):
        if materials.is_ideal(m):
            rs.append(-1.0)
            rp.append(1.0)
        else:
            a_m = (eps - 1.0) * x0 * x0
            sm = np.sqrt(x * x + a_m)
            rs.append(-a_m / ((x + sm) ** 2))
            rp.append((eps * x - sm) / (eps * x + sm))
    return rs[0] * rs[1], rp[0] * rp[1]


def _static_r(m: Material) -> tuple[float, float]:
    """xi -> 0 limit of (r_s, r_p) for the n = 0 term.

    Every finite material becomes transparent to s-polarization at zero
    frequency (kappa_m -> q); the ideal metal keeps r_s = -1, r_p = +1 at
    every index by convention.
    """
    if materials.is_ideal(m):
        return -1.0, 1.0
    eps0 = materials.static_permittivity(m)
    if math.isinf(eps0):
        return 0.0, 1.0
    return 0.0, (eps0 - 1.0) / (eps0 + 1.0)


def _x_edges(x0: float, span: float) -> np.ndarray:
    steps = np.array([0.0, 0.1, 0.3, 0.7, 1.5, 3.0, 5.0, 8.0, 12.0, 18.0,
                      26.0, 36.0, 50.0])
    return x0 + np.concatenate([steps[steps < span], [span]])


def _kernel_sum(r_s, r_p, x, pols):
    total = 0.0
    e = np.exp(-x)
    if "s" in pols:
        zs = r_s * e
        total = total + zs / (1.0 - zs)
    if "p" in pols:
        zp = r_p * e
        total = total + zp / (1.0 - zp)
    return x * x * total


def _term_integral(m1, m2, eps1, eps2, x0, settings, pols) -> tuple[float, float]:
    def f(x):
        r_s, r_p = _pair_r(m1, m2, eps1, eps2, x, x0)
        return _kernel_sum(r_s, r_p, x, pols)

    res = integrate(f, _x_edges(x0, settings.x_span),
                    rel_tol=settings.q_rel_tol, abs_tol=1e-14,
                    orders=(10, 20), max_panels=120)
    return res.value, res.error


def _default_n_max(a: float, T: float) -> int:
    xi1 = 2.0 * math.pi * quantities.K_B * T
    scale = 50.0 * max(quantities.characteristic_energy(a),
                       quantities.K_B * T)
    return max(int(math.ceil(scale / xi1)), 10)


def matsubara_total(m1: Material, m2: Material, a: float, T: float,
                    settings: MatsubaraSettings | None = None,
                    pols: tuple[str, ...] = ("s", "p")) -> float:
    """Full equilibrium pressure (Pa, zero-point content included)."""
    settings = settings or DEFAULT_MATSUBARA
    if a <= 0 or T <= 0:
        raise ValueError("gap and temperature must be positive")
    materials.require_valid(m1, m2)

    xi1 = 2.0 * math.pi * quantities.K_B * T
    n_max = settings.n_max or _default_n_max(a, T)

    # n = 0: both reflection coefficients are x-independent constants
    rs0 = _static_r(m1)[0] * _static_r(m2)[0]
    rp0 = _static_r(m1)[1] * _static_r(m2)[1]

    def f0(x):
        return _kernel_sum(rs0, rp0, x, pols)

    res0 = integrate(f0, _x_edges(0.0, settings.x_span),
                     rel_tol=settings.q_rel_tol, abs_tol=1e-14,
                     orders=(10, 20), max_panels=120)
    total = 0.5 * res0.value
    err = 0.5 * res0.error

    for n in range(1, n_max + 1):
        xi = n * xi1
        x0 = 2.0 * a * xi / quantities.HBAR_C
        if x0 > 700.0:
            break
        eps1 = None if materials.is_ideal(m1) else \
            materials.permittivity_imag_axis(m1, xi)
        eps2 = None if materials.is_ideal(m2) else \
            materials.permittivity_imag_axis(m2, xi)
        term, term_err = _term_integral(m1, m2, eps1, eps2, x0, settings, pols)
        total += term
        err += term_err
        if abs(term) < settings.q_rel_tol * abs(total) and x0 > 30.0:
            break

    pref = (quantities.K_B * T / math.pi) / (8.0 * a**3) * \
        quantities.EV_PER_UM3_TO_PA
    return pref * total


def zero_point_force(m1: Material, m2: Material, a: float,
                     settings: MatsubaraSettings | None = None,
                     pols: tuple[str, ...] = ("s", "p")) -> float:
    """T -> 0 limit of the Matsubara sum (Pa): the zero-point pressure."""
    settings = settings or DEFAULT_MATSUBARA
    if a <= 0:
        raise ValueError("gap must be positive")
    materials.require_valid(m1, m2)

    def inner(w: float) -> float:
        xi = w * quantities.HBAR_C / (2.0 * a)
        if xi <= 0:
            rs0 = _static_r(m1)[0] * _static_r(m2)[0]
            rp0 = _static_r(m1)[1] * _static_r(m2)[1]

            def f(x):
                return _kernel_sum(rs0, rp0, x, pols)
        else:
            eps1 = None if materials.is_ideal(m1) else \
                materials.permittivity_imag_axis(m1, xi)
            eps2 = None if materials.is_ideal(m2) else \
                materials.permittivity_imag_axis(m2, xi)

            def f(x):
                r_s, r_p = _pair_r(m1, m2, eps1, eps2, x, w)
                return _kernel_sum(r_s, r_p, x, pols)

        res = integrate(f, _x_edges(w, settings.x_span),
                        rel_tol=0.3 * settings.xi_rel_tol, abs_tol=1e-14,
                        orders=(10, 20), max_panels=120)
        return res.value

    def g(w):
        return np.array([inner(float(wi)) for wi in w])

    w_edges = np.concatenate([
        np.array([0.0, 0.25, 0.5]),
        np.geomspace(1.0, settings.w_max, 18),
    ])
    res = integrate(g, w_edges, rel_tol=settings.xi_rel_tol, abs_tol=1e-14,
                    orders=(10, 20), max_panels=160)
    pref = quantities.HBAR_C / (32.0 * math.pi**2 * a**4) * \
        quantities.EV_PER_UM3_TO_PA
    return pref * res.value


def thermal_force_oracle(m1: Material, m2: Material, a: float, T: float,
                         settings: MatsubaraSettings | None = None,
                         pols: tuple[str, ...] = ("s", "p")) -> float:
    """Thermal-only pressure (Pa): Matsubara total minus zero-point part.

    At equilibrium this equals the sum of the real-frequency propagating
    and evanescent contributions, which makes it the primary oracle for
    the spectral integrators.
    """
    return matsubara_total(m1, m2, a, T, settings, pols) - \
        zero_point_force(m1, m2, a, settings, pols)
