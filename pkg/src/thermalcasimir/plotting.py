"""Figure rendering for sweep output.

Renders the per-component and total curves of a sweep to a PNG next to the
CSV.  Axes follow the sweep normalization: normalized pressures on a linear
scale against log distance, raw pascals on a log-log scale of magnitudes.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

_COMPONENT_STYLE = (
    ("pw_s", "C0", "propagating s"),
    ("pw_p", "C1", "propagating p"),
    ("ew_s", "C2", "evanescent s"),
    ("ew_p", "C3", "evanescent p"),
)
_TOTAL_STYLE = (
    ("pw_total", "C0", "propagating total"),
    ("ew_total", "C2", "evanescent total"),
    ("total", "k", "total"),
)
_LINESTYLES = ("-", "--", ":", "-.")


def _axis_label(normalization: str) -> str:
    if normalization == "pascal":
        return "pressure magnitude (Pa)"
    if normalization == "ratio_T0":
        return "pressure / (pi^2 hbar c / 240 a^4)"
    return "pressure / (T zeta(3) / 8 pi a^3)"


def render_sweep_figure(rows, path: str, normalization: str = "force_norm",
                        dpi: int = 160) -> None:
    """Two-panel figure (components, totals) of the sweep rows."""
    temperatures = sorted({float(r["T_K"]) for r in rows})
    log_mag = normalization == "pascal"

    fig, (ax_comp, ax_tot) = plt.subplots(
        1, 2, figsize=(9.6, 4.0), sharex=True, constrained_layout=True)
    for it, temp in enumerate(temperatures):
        sel = [r for r in rows if float(r["T_K"]) == temp
               and r.get("status") == "ok"]
        if not sel:
            continue
        a = [float(r["a_um"]) for r in sel]
        ls = _LINESTYLES[it % len(_LINESTYLES)]
        suffix = f" ({temp:g} K)" if len(temperatures) > 1 else ""
        for key, color, label in _COMPONENT_STYLE:
            vals = [float(r[key]) for r in sel]
            if log_mag:
                vals = [abs(v) if v != 0 else math.nan for v in vals]
            ax_comp.plot(a, vals, ls, color=color, lw=1.4,
                         label=label + suffix if it == 0 else None)
        for key, color, label in _TOTAL_STYLE:
            vals = [float(r[key]) for r in sel]
            if log_mag:
                vals = [abs(v) if v != 0 else math.nan for v in vals]
            ax_tot.plot(a, vals, ls, color=color, lw=1.4,
                        label=label + suffix if it == 0 else None)

    for ax, title in ((ax_comp, "components"), (ax_tot, "totals")):
        ax.set_xscale("log")
        if log_mag:
            ax.set_yscale("log")
        else:
            ax.axhline(0.0, color="0.7", lw=0.8, zorder=0)
        ax.set_xlabel("separation a (um)")
        ax.set_title(title)
        ax.legend(frameon=False, fontsize=8)
    ax_comp.set_ylabel(_axis_label(normalization))
    if len(temperatures) > 1:
        ax_tot.text(0.02, 0.02,
                    "line styles: " + ", ".join(
                        f"{s} {t:g} K" for s, t in
                        zip(_LINESTYLES, temperatures)),
                    transform=ax_tot.transAxes, fontsize=7, color="0.3")
    fig.savefig(path, dpi=dpi)
    plt.close(fig)
