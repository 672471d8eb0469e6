"""Command-line entry point: one subcommand per toolkit module.

Exit codes: 0 success, 2 on validation errors (reported as
``error: <field>: <reason>`` on stderr), 1 on numerical failures
(instability, non-convergence).  Outputs are CSV with '#' provenance
comments; float cells use shortest round-trip formatting, so repeated
runs are byte-identical.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

import numpy as np

from ._version import __version__
from .antenna import HelixGeometry, TuningState, resonant_frequency, s11_sweep, tip_enhancement
from .aperture import ApertureSpec, bethe_sew, bethe_tem, sew_enhancement
from .config import ConfigFile, load_config
from .csvio import provenance_comments, write_csv
from .dispersion import Interface, NoBoundMode, dispersion_curve
from .errors import NotConverged, UnstableSimulation, ValidationError
from .linkbudget import decay_profile, evaluate, format_breakdown, load_scenario
from .materials import Dielectric, DrudeMedium, Frequency, drude_permittivity, skin_depth

__all__ = ["main"]


def _args_signature(args: argparse.Namespace, keys: list[str]) -> str:
    return "\n".join(f"{k}={getattr(args, k)}" for k in keys)


def _write_table(out: str | None, header, rows, signature: str) -> None:
    comments = provenance_comments(__version__, signature)
    if out is None:
        write_csv(sys.stdout, header, rows, comments)
    else:
        write_csv(out, header, rows, comments)


def _write_gnuplot(out: str | None, gnuplot: bool, ycol: int, title: str) -> None:
    if not gnuplot or out is None:
        return
    path = Path(out).with_suffix(".gp")
    csv_name = Path(out).name
    path.write_text(
        "set datafile separator ','\n"
        f"set title '{title}'\n"
        f"plot '{csv_name}' using 1:{ycol} with lines notitle\n",
        encoding="utf-8",
    )


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------


def _cmd_skin_depth(args) -> int:
    delta = skin_depth(args.sigma, Frequency(args.freq))
    print(f"{delta!r} m")
    return 0


def _cmd_drude(args) -> int:
    medium = DrudeMedium(omega_p=args.omega_p, gamma=args.gamma)
    if args.freq is not None:
        eps = drude_permittivity(medium, Frequency(args.freq))
        print(f"eps_re={eps.real!r} eps_im={eps.imag!r}")
        return 0
    if args.freq_start is None or args.freq_stop is None:
        raise ValidationError("freq", "give --freq or both --freq-start and --freq-stop")
    freqs = np.linspace(args.freq_start, args.freq_stop, args.points)
    rows = []
    for nu in freqs:
        eps = drude_permittivity(medium, Frequency(float(nu)))
        rows.append([float(nu), eps.real, eps.imag])
    sig = _args_signature(args, ["omega_p", "gamma", "freq_start", "freq_stop", "points"])
    _write_table(args.out, ["frequency_hz", "eps_re", "eps_im"], rows, sig)
    _write_gnuplot(args.out, args.gnuplot, 2, "Drude permittivity (real part)")
    return 0


def _interface_from_args(args) -> Interface:
    return Interface(Dielectric(args.eps1), DrudeMedium(omega_p=args.omega_p, gamma=args.gamma))


def _interface_from_config(cfg: ConfigFile) -> Interface:
    eps1 = cfg.get_float("interface", "eps1", default=1.0)
    omega_p = cfg.get_float("interface", "omega_p")
    gamma = cfg.get_float("interface", "gamma", default=0.0)
    return Interface(Dielectric(eps1), DrudeMedium(omega_p=omega_p, gamma=gamma))


def _cmd_dispersion(args) -> int:
    if args.config is not None:
        cfg = load_config(args.config)
        iface = _interface_from_config(cfg)
        w0 = cfg.get_float("grid", "omega_start")
        w1 = cfg.get_float("grid", "omega_stop")
        n = cfg.get_int("grid", "points", default=200)
        signature = Path(args.config).read_text(encoding="utf-8")
    else:
        for name in ("omega_p", "omega_start", "omega_stop"):
            if getattr(args, name) is None:
                raise ValidationError(name.replace("_", "-"), "required without --config")
        iface = _interface_from_args(args)
        w0, w1, n = args.omega_start, args.omega_stop, args.points
        signature = _args_signature(
            args, ["eps1", "omega_p", "gamma", "omega_start", "omega_stop", "points"]
        )
    if not 0 < w0 < w1:
        raise ValidationError("omega-start/omega-stop", "need 0 < start < stop")
    grid = np.linspace(w0, w1, n)
    header, rows = dispersion_curve(iface, [float(w) for w in grid])
    _write_table(args.out, header, rows, signature)
    _write_gnuplot(args.out, args.gnuplot, 2, "surface-mode dispersion Re k(omega)")
    return 0


def _cmd_aperture(args) -> int:
    ap = ApertureSpec(a=args.size)
    tem = bethe_tem(ap, args.lambda_free)
    print(f"tem_t_rel={tem.t_rel!r}")
    if args.lambda_sew is not None:
        sew = bethe_sew(ap, args.lambda_sew)
        print(f"sew_t_rel={sew.t_rel!r}")
        print(f"enhancement={sew_enhancement(args.lambda_free, args.lambda_sew)!r}")
    return 0


def _cmd_antenna(args) -> int:
    geom = HelixGeometry(
        length=args.length,
        diameter=args.diameter,
        turns=args.turns,
        wire_radius=args.wire_radius,
        tip_radius=args.tip_radius,
    )
    tune = TuningState(tap_fraction=args.tap, plane_distance=args.plane_distance)
    f_res = resonant_frequency(geom, tune)
    print(f"f_res_hz={f_res!r}")
    print(f"tip_enhancement={tip_enhancement(geom)!r}")
    if args.f_start is not None and args.f_stop is not None:
        band = np.linspace(args.f_start, args.f_stop, args.points)
        resp = s11_sweep(geom, tune, band)
        rows = [[float(f), float(s)] for f, s in zip(resp.frequencies_hz, resp.s11_db)]
        sig = _args_signature(
            args,
            ["length", "diameter", "turns", "wire_radius", "tip_radius",
             "tap", "plane_distance", "f_start", "f_stop", "points"],
        )
        _write_table(args.out, ["frequency_hz", "s11_db"], rows, sig)
        _write_gnuplot(args.out, args.gnuplot, 2, "S11 (dB)")
        if not resp.resonance_in_band:
            print("note: resonance lies outside the swept band", file=sys.stderr)
    return 0


def _cmd_link(args) -> int:
    scenario = load_scenario(args.scenario)
    result = evaluate(scenario)
    print(format_breakdown(result))
    rows = [
        [d, rx, ok]
        for d, rx, ok in zip(result.distances_m, result.received_dbm, result.detectable)
    ]
    header = ["distance_m", "received_dbm", "detectable"]
    if args.out is not None:
        _write_table(args.out, header, rows, scenario.source_text)
        _write_gnuplot(args.out, args.gnuplot, 2, "received power (dBm)")
    else:
        _write_table(None, header, rows, scenario.source_text)
    return 0


def _cmd_fdtd(args) -> int:
    from .fdtd import scenario_io

    cfg = load_config(args.config)
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = scenario_io.run_from_config(cfg, outdir, workers=args.workers)
    for path in written:
        print(path)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sewlink",
        description=(
            "Surface-electromagnetic-wave link toolkit: material response, "
            "surface-mode dispersion, aperture transmission, a 2D field "
            "simulator, and enclosure link budgets."
        ),
    )
    parser.add_argument("--version", action="version", version=f"sewlink {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("skin-depth", help="RF skin depth of a conductor")
    p.add_argument("--sigma", type=float, required=True, help="conductivity (S/m)")
    p.add_argument("--freq", type=float, required=True, help="frequency (Hz)")
    p.set_defaults(func=_cmd_skin_depth)

    p = sub.add_parser("drude", help="Drude permittivity at one frequency or over a band")
    p.add_argument("--omega-p", type=float, required=True, help="plasma frequency (rad/s)")
    p.add_argument("--gamma", type=float, default=0.0, help="damping rate (rad/s)")
    p.add_argument("--freq", type=float, help="single evaluation frequency (Hz)")
    p.add_argument("--freq-start", type=float)
    p.add_argument("--freq-stop", type=float)
    p.add_argument("--points", type=int, default=200)
    p.add_argument("--out", help="CSV output path (default stdout)")
    p.add_argument("--gnuplot", action="store_true", help="also write a plot script")
    p.set_defaults(func=_cmd_drude)

    p = sub.add_parser("dispersion", help="surface-mode dispersion curve (CSV)")
    p.add_argument("--config", help="INI config ([interface], [grid] sections)")
    p.add_argument("--eps1", type=float, default=1.0)
    p.add_argument("--omega-p", type=float, dest="omega_p")
    p.add_argument("--gamma", type=float, default=0.0)
    p.add_argument("--omega-start", type=float, dest="omega_start", help="rad/s")
    p.add_argument("--omega-stop", type=float, dest="omega_stop", help="rad/s")
    p.add_argument("--points", type=int, default=200)
    p.add_argument("--out", help="CSV output path (default stdout)")
    p.add_argument("--gnuplot", action="store_true")
    p.set_defaults(func=_cmd_dispersion)

    p = sub.add_parser("aperture", help="fourth-power aperture transmission estimates")
    p.add_argument("--size", type=float, required=True, help="aperture size (m)")
    p.add_argument("--lambda-free", type=float, required=True, dest="lambda_free")
    p.add_argument("--lambda-sew", type=float, dest="lambda_sew")
    p.set_defaults(func=_cmd_aperture)

    p = sub.add_parser("antenna", help="helical monopole resonance, S11 sweep, tip factor")
    p.add_argument("--length", type=float, default=0.03)
    p.add_argument("--diameter", type=float, default=0.007)
    p.add_argument("--turns", type=int, default=5)
    p.add_argument("--wire-radius", type=float, default=0.0005, dest="wire_radius")
    p.add_argument("--tip-radius", type=float, default=0.0002, dest="tip_radius")
    p.add_argument("--tap", type=float, default=0.5)
    p.add_argument("--plane-distance", type=float, default=0.0, dest="plane_distance")
    p.add_argument("--f-start", type=float, dest="f_start")
    p.add_argument("--f-stop", type=float, dest="f_stop")
    p.add_argument("--points", type=int, default=201)
    p.add_argument("--out", help="CSV output path (default stdout)")
    p.add_argument("--gnuplot", action="store_true")
    p.set_defaults(func=_cmd_antenna)

    p = sub.add_parser("fdtd", help="run a field-simulator scenario config")
    p.add_argument("--config", required=True, help="INI scenario file")
    p.add_argument("--outdir", default=".", help="directory for output CSV/snapshots")
    p.add_argument("--workers", type=int, help="parallel independent runs (default: env/machine)")
    p.set_defaults(func=_cmd_fdtd)

    p = sub.add_parser("link", help="evaluate an enclosure link-budget scenario")
    p.add_argument("--scenario", required=True, help="INI scenario file")
    p.add_argument("--out", help="CSV output path (default stdout)")
    p.add_argument("--gnuplot", action="store_true")
    p.set_defaults(func=_cmd_link)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc.field}: {exc.reason}", file=sys.stderr)
        return 2
    except NoBoundMode as exc:
        print(f"error: freq: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: input: {exc}", file=sys.stderr)
        return 2
    except (NotConverged, UnstableSimulation) as exc:
        print(f"error: numerical: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
