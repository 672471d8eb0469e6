"""Map INI scenario files onto simulator runs and write their CSV outputs.

A scenario file names its experiment in ``[run] kind`` and supplies the
physics in kind-specific sections.  Media may be given as Drude
parameters (omega_p, gamma) or as a target permittivity at the source
frequency (eps_re, eps_im), whichever reads better in the file.

Kinds:

* ``pulse-speed``: vacuum plane-pulse speed check.
* ``conductor-decay``: interior decay versus the analytic skin depth.
* ``surface-launch``: tip-excited surface wave; wavelength + profiles.
* ``slit-transmission``: plane-wave versus surface-wave slit transmission.
"""

from __future__ import annotations

from pathlib import Path

from .._version import __version__
from ..config import ConfigFile
from ..constants import C0
from ..csvio import provenance_comments, write_csv
from ..dispersion import Interface
from ..errors import ValidationError
from ..materials import Dielectric, DrudeMedium, Frequency, skin_depth
from .scenarios import (
    SlitWall,
    measure_conductor_skin_depth,
    measure_vacuum_pulse_speed,
    run_slit_study,
    run_surface_launch,
)
from .snapshots import write_snapshot
from .sources import SourceSpec

__all__ = ["run_from_config"]

KINDS = ("pulse-speed", "conductor-decay", "surface-launch", "slit-transmission")


def _medium_from(cfg: ConfigFile, section: str, frequency: float) -> DrudeMedium:
    if cfg.has(section, "omega_p"):
        return DrudeMedium(
            omega_p=cfg.get_float(section, "omega_p"),
            gamma=cfg.get_float(section, "gamma", default=0.0),
        )
    if cfg.has(section, "eps_re"):
        eps = complex(
            cfg.get_float(section, "eps_re"),
            cfg.get_float(section, "eps_im", default=0.0),
        )
        try:
            return DrudeMedium.matching_permittivity(eps, Frequency(frequency))
        except ValueError as exc:
            raise ValidationError(f"{section}.eps_re", str(exc)) from None
    raise ValidationError(f"{section}.omega_p", "need omega_p or eps_re")


def _comments(cfg: ConfigFile) -> list[str]:
    text = Path(cfg.source).read_text(encoding="utf-8")
    return provenance_comments(__version__, text)


def run_from_config(cfg: ConfigFile, outdir: Path, workers: int | None = None) -> list[Path]:
    """Execute the configured scenario; returns the list of files written."""
    kind = cfg.get_str("run", "kind")
    if kind not in KINDS:
        raise ValidationError("run.kind", f"must be one of {KINDS}, got {kind!r}")
    comments = _comments(cfg)
    if kind == "pulse-speed":
        return _run_pulse_speed(cfg, outdir, comments)
    if kind == "conductor-decay":
        return _run_conductor_decay(cfg, outdir, comments)
    if kind == "surface-launch":
        return _run_surface_launch(cfg, outdir, comments)
    return _run_slit(cfg, outdir, comments, workers)


def _run_pulse_speed(cfg: ConfigFile, outdir: Path, comments: list[str]) -> list[Path]:
    sep = cfg.get_int("grid", "probe_separation_cells", default=300)
    width = cfg.get_int("grid", "pulse_width_cells", default=12)
    v = measure_vacuum_pulse_speed(probe_separation_cells=sep, pulse_width_cells=width)
    out = outdir / "pulse_summary.csv"
    write_csv(out, ["speed_m_s", "c_m_s", "rel_error"], [[v, C0, abs(v - C0) / C0]], comments)
    return [out]


def _run_conductor_decay(cfg: ConfigFile, outdir: Path, comments: list[str]) -> list[Path]:
    sigma = cfg.get_float("conductor", "sigma_s_m")
    freq = cfg.get_float("source", "frequency_hz")
    cells = cfg.get_int("conductor", "cells_per_skin_depth", default=8)
    gow = cfg.get_float("conductor", "gamma_over_omega", default=30.0)
    measured = measure_conductor_skin_depth(
        sigma, freq, cells_per_skin_depth=cells, gamma_over_omega=gow
    )
    formula = skin_depth(sigma, Frequency(freq))
    out = outdir / "conductor_summary.csv"
    write_csv(
        out,
        ["delta_measured_m", "delta_formula_m", "rel_error"],
        [[measured, formula, abs(measured - formula) / formula]],
        comments,
    )
    return [out]


def _run_surface_launch(cfg: ConfigFile, outdir: Path, comments: list[str]) -> list[Path]:
    freq = cfg.get_float("source", "frequency_hz")
    amp = cfg.get_float("source", "amplitude", default=1.0)
    metal = _medium_from(cfg, "interface", freq)
    eps1 = cfg.get_float("interface", "eps1", default=1.0)
    iface = Interface(Dielectric(eps1), metal)
    src = SourceSpec(kind="tip", frequency=freq, amplitude=amp)
    cpw = cfg.get_int("grid", "cells_per_wavelength", default=48)
    steps = cfg.get_int("run", "steps", default=0)
    want_snapshot = cfg.get_bool("output", "snapshot", default=False)
    res = run_surface_launch(
        iface,
        src,
        duration_steps=steps if steps > 0 else None,
        cells_per_wavelength=cpw,
        keep_final_field=want_snapshot,
    )
    paths = []
    out = outdir / "surface_summary.csv"
    write_csv(
        out,
        ["lambda_measured_m", "drift", "parallel_amplitude", "perpendicular_amplitude"],
        [[res.lambda_measured_m, res.drift, res.parallel_amplitude, res.perpendicular_amplitude]],
        comments,
    )
    paths.append(out)
    out = outdir / "surface_profile_along.csv"
    write_csv(
        out,
        ["distance_m", "amplitude"],
        [[float(x), float(a)] for x, a in zip(res.along_positions_m, res.along_amplitude)],
        comments,
    )
    paths.append(out)
    out = outdir / "surface_profile_vertical.csv"
    write_csv(
        out,
        ["height_m", "amplitude"],
        [[float(y), float(a)] for y, a in zip(res.vertical_positions_m, res.vertical_amplitude)],
        comments,
    )
    paths.append(out)
    if want_snapshot and res.final_parallel_field is not None:
        snap = outdir / "surface_ex_final.f64"
        n_steps = steps if steps > 0 else 60 * res.steps_per_period
        write_snapshot(snap, res.final_parallel_field, dx=res.dx_m, field="ex", step=n_steps)
        paths.append(snap)
    return paths


def _run_slit(cfg: ConfigFile, outdir: Path, comments: list[str], workers: int | None) -> list[Path]:
    freq = cfg.get_float("source", "frequency_hz")
    amp = cfg.get_float("source", "amplitude", default=1.0)
    metal = _medium_from(cfg, "wall", freq)
    wall = SlitWall(
        medium=metal,
        thickness_cells=cfg.get_int("wall", "thickness_cells"),
        slit_width_cells=cfg.get_int("wall", "slit_width_cells"),
    )
    src = SourceSpec(kind="sheet", frequency=freq, amplitude=amp)
    cpw = cfg.get_int("grid", "cells_per_wavelength", default=60)
    periods = cfg.get_int("run", "periods", default=28)
    a = wall.slit_width_cells
    sew = (a,) if a > 0 else ()
    res = run_slit_study(
        wall, src, tem_widths=(a,), sew_widths=sew,
        cells_per_wavelength=cpw, periods=periods, workers=workers,
    )
    rows = []
    for width in sorted(res.t_tem):
        rows.append([
            width,
            res.t_tem[width],
            res.t_sew.get(width, float("nan")),
            res.p_trans_tem[width],
            res.p_inc_tem,
            res.p_inc_sew,
        ])
    out = outdir / "slit_summary.csv"
    write_csv(
        out,
        ["width_cells", "t_tem", "t_sew", "p_trans_tem", "p_inc_tem", "p_inc_sew"],
        rows,
        comments,
    )
    return [out]
