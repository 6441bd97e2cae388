"""Command-line entry point.

Exit codes: 0 success, 2 configuration error, 3 integration failure,
4 output I/O failure.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import replace

from . import sweep as sweep_mod
from .spectral import QuadratureSettings
from .sweep import ConfigError, SweepSpec, emit_csv, parse_material, run_sweep

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_INTEGRATION = 3
EXIT_IO = 4


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="thermal-casimir",
        description="Thermal Casimir pressure between parallel plates: "
                    "propagating/evanescent components per polarization on "
                    "a distance sweep, written as CSV (and optionally as a "
                    "figure).",
    )
    p.add_argument("--config", help="INI sweep configuration file")
    p.add_argument("--a-min", type=float, help="smallest separation (um)")
    p.add_argument("--a-max", type=float, help="largest separation (um)")
    p.add_argument("--points", type=int, help="number of log-spaced separations")
    p.add_argument("--T", action="append", type=float, metavar="KELVIN",
                   help="temperature in K (repeatable)")
    p.add_argument("--material1", help="plate 1: drude:wp,wt | eps:v | ideal "
                                       "| lorentz:file")
    p.add_argument("--material2", help="plate 2 shorthand (same forms)")
    p.add_argument("--normalize", choices=sweep_mod.NORMALIZATIONS,
                   help="output normalization")
    p.add_argument("--asymptotics", action="store_true", default=None,
                   help="add asym_* columns with the closed-form limits")
    p.add_argument("--oracle", action="store_true", default=None,
                   help="add the imaginary-frequency oracle_total column")
    p.add_argument("--out", help="CSV output path")
    p.add_argument("--figures", action="store_true", default=None,
                   help="render a PNG next to the CSV")
    p.add_argument("--jobs", type=int, help="parallel worker processes")
    p.add_argument("--rel-tol", type=float,
                   help="quadrature relative tolerance override")
    return p


def spec_from_args(args) -> SweepSpec:
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ConfigError([f"cannot read config {args.config}: {exc}"])
        spec = sweep_mod.parse_config(
            text, base_dir=os.path.dirname(os.path.abspath(args.config)))
    else:
        spec = SweepSpec()

    updates = {}
    if args.a_min is not None:
        updates["a_min"] = args.a_min
    if args.a_max is not None:
        updates["a_max"] = args.a_max
    if args.points is not None:
        updates["points"] = args.points
    if args.T:
        updates["temperatures"] = tuple(args.T)
    if args.material1 is not None:
        updates["material_1"] = parse_material(args.material1)
    if args.material2 is not None:
        updates["material_2"] = parse_material(args.material2)
    if args.normalize is not None:
        updates["normalization"] = args.normalize
    if args.asymptotics is not None:
        updates["include_asymptotics"] = args.asymptotics
    if args.oracle is not None:
        updates["include_oracle"] = args.oracle
    if args.out is not None:
        updates["output_path"] = args.out
    if args.figures is not None:
        updates["figures"] = args.figures
    if args.jobs is not None:
        updates["jobs"] = args.jobs
    if args.rel_tol is not None:
        try:
            updates["settings"] = replace(spec.settings, rel_tol=args.rel_tol)
        except ValueError as exc:
            raise ConfigError([f"rel-tol: {exc}"])
    spec = replace(spec, **updates)
    problems = spec.validate()
    if problems:
        raise ConfigError(problems)
    return spec


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = spec_from_args(args)
    except ConfigError as exc:
        for problem in exc.errors:
            print(f"config error: {problem}", file=sys.stderr)
        return EXIT_CONFIG

    rows = run_sweep(spec)

    try:
        emit_csv(rows, spec.output_path, columns=spec.columns())
        if spec.figures:
            from . import plotting
            root, _ = os.path.splitext(spec.output_path)
            plotting.render_sweep_figure(rows, root + ".png",
                                         spec.normalization)
    except OSError as exc:
        print(f"output error: {exc}", file=sys.stderr)
        return EXIT_IO

    failed = [r for r in rows if r.get("status") != "ok"]
    if failed:
        print(f"{len(failed)} of {len(rows)} points failed integration",
              file=sys.stderr)
        return EXIT_INTEGRATION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
