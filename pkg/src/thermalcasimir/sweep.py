"""Sweep configuration, orchestration, and CSV emission.

A sweep evaluates the four spectral pressure components on a log-spaced
distance grid for one or more temperatures and writes one CSV row per
(a, T) point, optionally with closed-form asymptotics and the
imaginary-frequency oracle alongside.  Output is byte-deterministic for a
given spec: values are formatted to nine significant digits, rows are
ordered by temperature then distance, and parallel evaluation reassembles
results in grid order.
"""

from __future__ import annotations

import concurrent.futures
import configparser
import math
import os
from dataclasses import dataclass, field

import numpy as np

from . import asymptotics, materials, matsubara, quantities, spectral
from .materials import (ConstantEps, Drude, IdealMetal, LorentzOscillator,
                        LorentzOscillators, Material)
from .spectral import QuadratureSettings

NORMALIZATIONS = ("pascal", "force_norm", "ratio_T0")

BASE_COLUMNS = ("a_um", "T_K", "pw_s", "pw_p", "ew_s", "ew_p",
                "pw_total", "ew_total", "total", "err_total")
ASYM_COLUMNS = ("asym_pw_s", "asym_pw_p", "asym_ew_s", "asym_ew_p")


class ConfigError(Exception):
    """Invalid sweep configuration; ``errors`` lists every violation."""

    def __init__(self, errors):
        self.errors = list(errors)
        super().__init__("; ".join(self.errors))


@dataclass(frozen=True)
class SweepSpec:
    a_min: float = 0.2
    a_max: float = 200.0
    points: int = 40
    temperatures: tuple[float, ...] = (300.0,)
    material_1: Material = materials.AU_DRUDE
    material_2: Material = materials.AU_DRUDE
    normalization: str = "force_norm"
    include_asymptotics: bool = False
    include_oracle: bool = False
    output_path: str = "sweep.csv"
    figures: bool = False
    settings: QuadratureSettings = field(default_factory=QuadratureSettings)
    jobs: int = 1

    def validate(self) -> list[str]:
        errors = []
        if not self.a_min > 0:
            errors.append("a_min must be positive")
        if not self.a_max > self.a_min:
            errors.append("a_max must exceed a_min")
        if self.points < 2:
            errors.append("points must be at least 2")
        if not self.temperatures:
            errors.append("at least one temperature is required")
        for t in self.temperatures:
            if not t > 0:
                errors.append(f"temperature {t} must be positive")
        if self.normalization not in NORMALIZATIONS:
            errors.append(
                f"normalization must be one of {', '.join(NORMALIZATIONS)}"
            )
        for tag, m in (("material_1", self.material_1),
                       ("material_2", self.material_2)):
            for problem in materials.validate(m):
                errors.append(f"{tag}: {problem}")
        if self.jobs < 1:
            errors.append("jobs must be at least 1")
        return errors

    def columns(self) -> tuple[str, ...]:
        cols = list(BASE_COLUMNS)
        if self.include_asymptotics:
            cols.extend(ASYM_COLUMNS)
        if self.include_oracle:
            cols.append("oracle_total")
        cols.append("status")
        return tuple(cols)

    def distance_grid(self) -> np.ndarray:
        return np.geomspace(self.a_min, self.a_max, self.points)


# ---------------------------------------------------------------------------
# material shorthand and the oscillator parameter file
# ---------------------------------------------------------------------------

def parse_material(text: str, base_dir: str = ".") -> Material:
    """Parse the CLI shorthand: drude:wp,wt | eps:value | ideal | lorentz:file."""
    spec = text.strip()
    if spec == "ideal":
        return IdealMetal(label="ideal")
    if spec.startswith("drude:"):
        body = spec[len("drude:"):]
        parts = body.split(",")
        if len(parts) != 2:
            raise ConfigError([f"drude shorthand needs omega_p,omega_tau: {text!r}"])
        try:
            wp, wt = float(parts[0]), float(parts[1])
        except ValueError:
            raise ConfigError([f"drude parameters must be numbers: {text!r}"])
        return Drude(omega_p=wp, omega_tau=wt, label=spec)
    if spec.startswith("eps:"):
        try:
            eps = float(spec[len("eps:"):])
        except ValueError:
            raise ConfigError([f"eps shorthand needs a number: {text!r}"])
        return ConstantEps(eps=eps, label=spec)
    if spec.startswith("lorentz:"):
        path = spec[len("lorentz:"):]
        if not os.path.isabs(path):
            path = os.path.join(base_dir, path)
        return load_lorentz_file(path)
    raise ConfigError([f"unknown material shorthand: {text!r}"])


def load_lorentz_file(path: str) -> LorentzOscillators:
    """Read an oscillator model from its INI parameter file.

    Schema: a [material] section with ``eps_inf`` and optional ``label``,
    plus one [oscillator.<n>] section per oscillator carrying ``strength``,
    ``omega_0`` and ``gamma`` (eV).
    """
    cp = configparser.ConfigParser(interpolation=None)
    try:
        with open(path, encoding="utf-8") as fh:
            cp.read_file(fh, source=path)
    except OSError as exc:
        raise ConfigError([f"cannot read oscillator file {path}: {exc}"])
    except configparser.Error as exc:
        raise ConfigError([f"oscillator file {path}: {exc}"])
    errors = []
    if not cp.has_section("material"):
        raise ConfigError([f"oscillator file {path}: missing [material] section"])
    label = cp.get("material", "label", fallback=os.path.basename(path))
    try:
        eps_inf = cp.getfloat("material", "eps_inf")
    except (configparser.Error, ValueError):
        errors.append(f"{path}: material.eps_inf must be a number")
        eps_inf = 1.0
    oscillators = []
    for section in cp.sections():
        if section == "material":
            continue
        if not section.startswith("oscillator"):
            errors.append(f"{path}: unknown section [{section}]")
            continue
        try:
            oscillators.append(LorentzOscillator(
                strength=cp.getfloat(section, "strength"),
                omega_0=cp.getfloat(section, "omega_0"),
                gamma=cp.getfloat(section, "gamma"),
            ))
        except (configparser.Error, ValueError) as exc:
            errors.append(f"{path}: [{section}]: {exc}")
    if errors:
        raise ConfigError(errors)
    return LorentzOscillators(eps_inf=eps_inf, oscillators=tuple(oscillators),
                              label=label)


# ---------------------------------------------------------------------------
# config file
# ---------------------------------------------------------------------------

_SCHEMA = {
    "geometry": ("a_min", "a_max", "points", "temperatures"),
    "materials": ("material_1", "material_2"),
    "quadrature": ("rel_tol", "u_min", "u_max", "y_max_ew", "n_reflect_max",
                   "bose_series_threshold", "tail_check"),
    "output": ("path", "normalization", "include_asymptotics",
               "include_oracle", "figures", "jobs"),
}


def parse_config(text: str, base_dir: str = ".") -> SweepSpec:
    """Parse the INI sweep configuration into a validated SweepSpec.

    Unknown sections or keys are errors; every violation found is reported,
    not just the first.
    """
    cp = configparser.ConfigParser(interpolation=None)
    try:
        cp.read_string(text)
    except configparser.Error as exc:
        raise ConfigError([str(exc).replace("\n", " ")])

    errors: list[str] = []
    for section in cp.sections():
        if section not in _SCHEMA:
            errors.append(f"unknown section [{section}]")
            continue
        for key in cp[section]:
            if key not in _SCHEMA[section]:
                errors.append(f"unknown key {section}.{key}")

    def grab(section, key, conv, default):
        if not cp.has_option(section, key):
            return default
        raw = cp.get(section, key)
        try:
            return conv(raw)
        except (ValueError, ConfigError) as exc:
            detail = "; ".join(exc.errors) if isinstance(exc, ConfigError) \
                else f"invalid value {raw!r}"
            errors.append(f"{section}.{key}: {detail}")
            return default

    def as_bool(raw: str) -> bool:
        lowered = raw.strip().lower()
        if lowered in ("1", "true", "yes", "on"):
            return True
        if lowered in ("0", "false", "no", "off"):
            return False
        raise ValueError(raw)

    def as_temps(raw: str) -> tuple[float, ...]:
        return tuple(float(tok) for tok in raw.split(",") if tok.strip())

    defaults = SweepSpec()
    a_min = grab("geometry", "a_min", float, defaults.a_min)
    a_max = grab("geometry", "a_max", float, defaults.a_max)
    points = grab("geometry", "points", int, defaults.points)
    temps = grab("geometry", "temperatures", as_temps, defaults.temperatures)
    m1 = grab("materials", "material_1",
              lambda s: parse_material(s, base_dir), defaults.material_1)
    m2 = grab("materials", "material_2",
              lambda s: parse_material(s, base_dir), defaults.material_2)

    qs_kwargs = {}
    for key, conv in (("rel_tol", float), ("u_min", float), ("u_max", float),
                      ("y_max_ew", float), ("n_reflect_max", int),
                      ("bose_series_threshold", float),
                      ("tail_check", as_bool)):
        if cp.has_option("quadrature", key):
            qs_kwargs[key] = grab("quadrature", key, conv, None)
    qs_kwargs = {k: v for k, v in qs_kwargs.items() if v is not None}
    try:
        settings = QuadratureSettings(**qs_kwargs)
    except ValueError as exc:
        errors.append(f"quadrature: {exc}")
        settings = QuadratureSettings()

    spec = SweepSpec(
        a_min=a_min, a_max=a_max, points=points, temperatures=temps,
        material_1=m1, material_2=m2,
        normalization=grab("output", "normalization", str,
                           defaults.normalization),
        include_asymptotics=grab("output", "include_asymptotics", as_bool,
                                 defaults.include_asymptotics),
        include_oracle=grab("output", "include_oracle", as_bool,
                            defaults.include_oracle),
        output_path=grab("output", "path", str, defaults.output_path),
        figures=grab("output", "figures", as_bool, defaults.figures),
        settings=settings,
        jobs=grab("output", "jobs", int, defaults.jobs),
    )
    errors.extend(spec.validate())
    if errors:
        raise ConfigError(errors)
    return spec


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------

def _normalizer(normalization: str, a: float, T: float) -> float:
    if normalization == "pascal":
        return 1.0
    if normalization == "force_norm":
        return 1.0 / quantities.force_norm(a, T)
    return 1.0 / quantities.zero_point_ideal(a)


def _is_metal_like(m: Material) -> bool:
    return isinstance(m, (Drude, IdealMetal))


def _asymptotic_values(m1: Material, m2: Material, a: float,
                       T: float) -> dict[str, float]:
    """Pa values of the regime-appropriate closed forms, NaN where none."""
    out = {c: math.nan for c in ASYM_COLUMNS}
    metalish = [_is_metal_like(m) for m in (m1, m2)]
    if all(metalish):
        for family in (asymptotics.metal_metal_large(a, T),
                       asymptotics.metal_metal_small(a, T)):
            for comp, res in family.items():
                key = f"asym_{comp}"
                if res.valid and math.isnan(out[key]):
                    out[key] = res.value
        return out
    if any(metalish):
        dielectric = m2 if metalish[0] else m1
        eps2 = materials.static_permittivity(dielectric)
        if math.isfinite(eps2) and eps2 > 1.0:
            for family in (asymptotics.metal_dielectric_large(eps2, a, T),
                           asymptotics.metal_dielectric_small(eps2, a, T)):
                for comp, res in family.items():
                    key = f"asym_{comp}"
                    if res.valid and math.isnan(out[key]):
                        out[key] = res.value
    return out


def evaluate_point(spec: SweepSpec, a: float, T: float) -> dict[str, float | str]:
    """One CSV row (values in the requested normalization)."""
    row: dict[str, float | str] = {"a_um": a, "T_K": T}
    norm = _normalizer(spec.normalization, a, T)
    try:
        fc = spectral.force_components(spec.material_1, spec.material_2,
                                       a, T, spec.settings)
        row.update(
            pw_s=fc.pw_s * norm, pw_p=fc.pw_p * norm,
            ew_s=fc.ew_s * norm, ew_p=fc.ew_p * norm,
            pw_total=fc.pw_total * norm, ew_total=fc.ew_total * norm,
            total=fc.total * norm, err_total=fc.err_total * norm,
        )
        if spec.include_asymptotics:
            for key, val in _asymptotic_values(spec.material_1,
                                               spec.material_2, a, T).items():
                row[key] = val * norm if math.isfinite(val) else math.nan
        if spec.include_oracle:
            row["oracle_total"] = matsubara.thermal_force_oracle(
                spec.material_1, spec.material_2, a, T) * norm
        row["status"] = "ok"
    except spectral.IntegrationError as exc:
        for col in spec.columns():
            if col not in row:
                row[col] = math.nan
        row["status"] = f"integration_error:{exc.polarization or 'unknown'}"
    return row


def _evaluate_indexed(args):
    spec, index, a, T = args
    return index, evaluate_point(spec, a, T)


def run_sweep(spec: SweepSpec) -> list[dict[str, float | str]]:
    """All sweep rows, ordered by temperature then distance."""
    problems = spec.validate()
    if problems:
        raise ConfigError(problems)
    grid = [(T, a) for T in spec.temperatures for a in spec.distance_grid()]
    tasks = [(spec, i, a, T) for i, (T, a) in enumerate(grid)]
    rows: list = [None] * len(tasks)
    if spec.jobs > 1 and len(tasks) > 1:
        with concurrent.futures.ProcessPoolExecutor(
                max_workers=min(spec.jobs, len(tasks))) as pool:
            for index, row in pool.map(_evaluate_indexed, tasks):
                rows[index] = row
    else:
        for task in tasks:
            index, row = _evaluate_indexed(task)
            rows[index] = row
    return rows


def format_value(value) -> str:
    if isinstance(value, str):
        return value
    v = float(value)
    if math.isnan(v):
        return "nan"
    return f"{v:.8e}"


def emit_csv(rows, path: str, columns=None) -> None:
    """Write rows as UTF-8, LF-terminated CSV with 9-significant-digit
    scientific notation; identical input produces byte-identical files."""
    if columns is None:
        columns = []
        for row in rows:
            for key in row:
                if key not in columns:
                    columns.append(key)
        if not columns:
            columns = list(BASE_COLUMNS) + ["status"]
    lines = [",".join(columns)]
    for row in rows:
        lines.append(",".join(format_value(row.get(c, math.nan))
                              for c in columns))
    data = ("\n".join(lines) + "\n").encode("utf-8")
    with open(path, "wb") as fh:
        fh.write(data)
