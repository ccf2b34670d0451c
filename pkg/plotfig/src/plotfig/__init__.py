"""Static figures from discord-versus-q sweep CSVs.

Input files carry the exact header ``q,discord`` with one row per grid
point (the wire format written by ``firmsa sweep``).  The figure shows
every curve on one axes with a horizontal zero line; if any curve dips
materially below zero, a zoom inset is added around the deepest dip.
Output bytes are a pure function of the inputs (fixed SVG hash salt, no
date metadata).
"""

from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

__version__ = "0.1.0"

# A dip only counts when it is materially negative, same margin the
# search uses to certify violations.
DIP_THRESHOLD = -1e-6

LINESTYLES = ("solid", "dashed", "dotted", "dashdot")


class SweepCsvError(ValueError):
    """Malformed sweep CSV."""


@dataclass(frozen=True)
class SweepCsv:
    """Parsed and validated sweep file."""

    path: str
    q: tuple[float, ...]
    discord: tuple[float, ...]

    @property
    def min_value(self) -> float:
        return min(self.discord)

    @property
    def dips(self) -> bool:
        return self.min_value < DIP_THRESHOLD


def parse_sweep_csv(path: str) -> SweepCsv:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise SweepCsvError(f"cannot read {path}: {exc}") from exc
    if not lines or lines[0] != "q,discord":
        raise SweepCsvError(f"{path}: first line must be exactly 'q,discord'")
    qs: list[float] = []
    vs: list[float] = []
    for ln, line in enumerate(lines[1:], start=2):
        if not line:
            continue
        parts = line.split(",")
        if len(parts) != 2:
            raise SweepCsvError(f"{path}:{ln}: expected two comma-separated values")
        try:
            q, v = float(parts[0]), float(parts[1])
        except ValueError as exc:
            raise SweepCsvError(f"{path}:{ln}: {exc}") from exc
        qs.append(q)
        vs.append(v)
    if not qs:
        raise SweepCsvError(f"{path}: no data rows")
    if any(b <= a for a, b in zip(qs, qs[1:])):
        raise SweepCsvError(f"{path}: q column must be strictly increasing")
    return SweepCsv(path, tuple(qs), tuple(vs))


def _inset_bounds(curves: list[SweepCsv]) -> tuple[float, float, float, float]:
    deepest = min(curves, key=lambda c: c.min_value)
    idx = deepest.discord.index(deepest.min_value)
    q_dip = deepest.q[idx]
    v_min = deepest.min_value
    return q_dip - 0.2, q_dip + 0.2, 1.5 * v_min, -0.5 * v_min


def render(csv_paths, styles=None, inset: str = "auto", out: str = "fig1.svg") -> str:
    """Draw all curves (solid, dashed, ... by default), add the zero
    line, optionally the zoom inset, and write ``out`` deterministically."""
    if not csv_paths:
        raise SweepCsvError("need at least one CSV path")
    if inset not in ("auto", "off"):
        raise SweepCsvError(f"inset must be 'auto' or 'off', got {inset!r}")
    curves = [parse_sweep_csv(p) for p in csv_paths]
    if styles is None:
        styles = [LINESTYLES[i % len(LINESTYLES)] for i in range(len(curves))]
    elif len(styles) < len(curves):
        raise SweepCsvError(f"{len(curves)} curves but only {len(styles)} styles")

    plt.rcParams["svg.hashsalt"] = "plotfig"

    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for curve, style in zip(curves, styles):
        ax.plot(curve.q, curve.discord, color="black", linestyle=style, linewidth=1.2)
    ax.axhline(0.0, color="gray", linewidth=0.8)
    ax.margins(x=0.05, y=0.05)
    ax.set_xlabel("q")
    ax.set_ylabel("discord")

    if inset == "auto" and any(c.dips for c in curves):
        x0, x1, y0, y1 = _inset_bounds(curves)
        axins = ax.inset_axes([0.55, 0.55, 0.4, 0.4])
        for curve, style in zip(curves, styles):
            axins.plot(curve.q, curve.discord, color="black", linestyle=style, linewidth=1.0)
        axins.axhline(0.0, color="gray", linewidth=0.6)
        axins.set_xlim(x0, x1)
        axins.set_ylim(y0, y1)
        axins.tick_params(labelsize=7)

    fig.savefig(out, metadata=_clean_metadata(out))
    plt.close(fig)
    return out


def _clean_metadata(out: str) -> dict:
    # SVG embeds a creation date by default; PNG embeds the software
    # string.  Both are suppressed so identical inputs give identical bytes.
    if out.endswith(".svg"):
        return {"Date": None}
    if out.endswith(".png"):
        return {"Software": None}
    return {}
