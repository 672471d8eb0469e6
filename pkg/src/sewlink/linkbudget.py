"""End-to-end dB accounting for radio transmission out of a shielded enclosure.

The model compares two transmit modes through the same wall:

* ``conventional-dipole``: the rated cage isolation applies, plus the
  fourth-power small-aperture penalty at the free-space wavelength, plus
  free-space spreading outside.
* ``sew-antenna``: the surface-wave path bypasses the rated isolation.
  Its losses are a tip-coupling term (gap-dependent, with an optional
  tip-enhancement credit), the fourth-power aperture penalty at the much
  shorter *surface* wavelength, and then, outside the wall, the stronger
  of two branches: exponential surface decay hugging the outer wall
  (affine in dB vs distance) or corner-scattered far-field spreading.
  Branches combine by max, not coherent addition; a budget has no phase.

Everything is additive in dB and itemized: the received power equals the
transmit power minus the exact sum of the breakdown items.  The split of
the surface-wave advantage among coupling, aperture, and scattering terms
is a declared parameterization with exactly one fitted constant (the
coupling offset) in the shipped scenario file.

Sign conventions: ``cage_isolation_db`` and ``corner_scatter_db`` are
gains, i.e. negative numbers (an enclosure rated at -90 dB isolation has
``cage_isolation_db = -90``).  Breakdown items are positive losses.

The model deliberately exposes no ground-connection parameter: grounding
the enclosure does not interrupt a surface wave running along its walls,
so a ground knob would have nothing to do.

Receiver model: hard threshold at ``rx_sensitivity_dbm``, no fading margin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Sequence

from .aperture import ApertureSpec
from .config import ConfigFile, load_config
from .errors import ValidationError

__all__ = [
    "CouplingModel",
    "LinkScenario",
    "LinkResult",
    "evaluate",
    "decay_profile",
    "tip_gap_sweep",
    "load_scenario",
    "format_breakdown",
    "DB_PER_NEPER",
    "MODE_DIPOLE",
    "MODE_SEW",
]

DB_PER_NEPER = 10.0 / math.log(10.0)  # 4.342944819...: exp(-d/L) in dB per unit d/L

MODE_DIPOLE = "conventional-dipole"
MODE_SEW = "sew-antenna"


@dataclass(frozen=True)
class CouplingModel:
    """Antenna-to-surface-wave coupling loss as a function of tip gap.

    loss_db(gap) = offset_db + DB_PER_NEPER*gap/gap_scale_m
                   - 10*log10(tip_enhancement)

    ``offset_db`` is the single fitted constant of a calibrated scenario.
    The loss is finite at gap 0 (its documented minimum) and affine in the
    gap, i.e. an exponential exp(-gap/gap_scale) coupling efficiency.
    ``tip_enhancement`` credits a sharpened-tip field-enhancement factor
    as a multiplicative heuristic (default 1 = no credit).
    """

    offset_db: float
    gap_scale_m: float
    tip_enhancement: float = 1.0

    def __post_init__(self) -> None:
        if not math.isfinite(self.offset_db):
            raise ValidationError("coupling.offset_db", "must be finite")
        if not self.gap_scale_m > 0:
            raise ValidationError("coupling.gap_scale_m", "must be > 0")
        if not self.tip_enhancement >= 1.0:
            raise ValidationError("coupling.tip_enhancement", "must be >= 1")

    def loss_db(self, tip_gap_m: float) -> float:
        return (
            self.offset_db
            + DB_PER_NEPER * tip_gap_m / self.gap_scale_m
            - 10.0 * math.log10(self.tip_enhancement)
        )


@dataclass(frozen=True)
class LinkScenario:
    """Immutable description of one enclosure transmission experiment."""

    tx_power_dbm: float
    antenna_mode: str
    cage_isolation_db: float
    aperture: ApertureSpec
    lambda_free_m: float
    rx_sensitivity_dbm: float
    distances_m: tuple[float, ...]
    near_wall_reference_m: float = 0.1
    lambda_sew_m: float | None = None
    surface_decay_length_m: float | None = None
    corner_scatter_db: float | None = None
    tip_gap_m: float = 0.0
    coupling: CouplingModel | None = None
    label: str = ""
    source_text: str = field(default="", compare=False)  # raw file body, for provenance

    def __post_init__(self) -> None:
        if not math.isfinite(self.tx_power_dbm):
            raise ValidationError("scenario.tx_power_dbm", "must be finite")
        if self.antenna_mode not in (MODE_DIPOLE, MODE_SEW):
            raise ValidationError(
                "scenario.antenna_mode",
                f"must be {MODE_DIPOLE!r} or {MODE_SEW!r}, got {self.antenna_mode!r}",
            )
        if self.cage_isolation_db > 0:
            raise ValidationError(
                "scenario.cage_isolation_db", "isolation is a gain <= 0 dB (e.g. -90)"
            )
        if not self.lambda_free_m > 0:
            raise ValidationError("scenario.lambda_free_m", "must be > 0")
        if not math.isfinite(self.rx_sensitivity_dbm):
            raise ValidationError("scenario.rx_sensitivity_dbm", "must be finite")
        if not self.distances_m or any(d <= 0 for d in self.distances_m):
            raise ValidationError("scenario.distances_m", "need at least one positive distance")
        if not self.near_wall_reference_m > 0:
            raise ValidationError("scenario.near_wall_reference_m", "must be > 0")
        if self.tip_gap_m < 0:
            raise ValidationError("scenario.tip_gap_m", "must be >= 0")
        if self.antenna_mode == MODE_SEW:
            if self.lambda_sew_m is None:
                raise ValidationError("scenario.lambda_sew_m", "required in sew-antenna mode")
            if not self.lambda_sew_m > 0:
                raise ValidationError("scenario.lambda_sew_m", "must be > 0")
            if self.surface_decay_length_m is None or not self.surface_decay_length_m > 0:
                raise ValidationError(
                    "scenario.surface_decay_length_m", "required (> 0) in sew-antenna mode"
                )
            if self.corner_scatter_db is None:
                raise ValidationError(
                    "scenario.corner_scatter_db", "required in sew-antenna mode"
                )
            if self.corner_scatter_db > 0:
                raise ValidationError(
                    "scenario.corner_scatter_db", "scattering is a gain <= 0 dB (e.g. -25)"
                )
            if self.coupling is None:
                raise ValidationError("scenario.coupling", "required in sew-antenna mode")


@dataclass(frozen=True)
class LinkResult:
    """Per-distance received power with itemized dB bookkeeping.

    For every index i: tx_power_dbm - sum(breakdowns[i].values()) equals
    received_dbm[i] exactly (the received power is computed *from* the sum).
    """

    scenario: LinkScenario
    distances_m: tuple[float, ...]
    received_dbm: tuple[float, ...]
    detectable: tuple[bool, ...]
    breakdowns: tuple[dict[str, float], ...]


def _aperture_loss_db(a: float, wavelength: float) -> float:
    # fourth-power small-aperture law, expressed as a dB loss
    return 40.0 * math.log10(wavelength / a)


def _spreading_loss_db(d: float, d_ref: float) -> float:
    return 20.0 * math.log10(d / d_ref)


def _branch_items(scn: LinkScenario, d: float) -> dict[str, float]:
    """Loss items (positive dB) of the winning path at distance d."""
    if scn.antenna_mode == MODE_DIPOLE:
        return {
            "cage_isolation": -scn.cage_isolation_db,
            "aperture_tem": _aperture_loss_db(scn.aperture.a, scn.lambda_free_m),
            "spreading": _spreading_loss_db(d, scn.near_wall_reference_m),
        }
    assert scn.coupling is not None and scn.lambda_sew_m is not None
    common = {
        "sew_coupling": scn.coupling.loss_db(scn.tip_gap_m),
        "aperture_sew": _aperture_loss_db(scn.aperture.a, scn.lambda_sew_m),
    }
    surface = dict(common)
    surface["surface_decay"] = DB_PER_NEPER * d / scn.surface_decay_length_m
    far = dict(common)
    far["corner_scatter"] = -scn.corner_scatter_db
    far["spreading"] = _spreading_loss_db(d, scn.near_wall_reference_m)
    # stronger branch wins; no coherent addition in a power budget
    return surface if sum(surface.values()) <= sum(far.values()) else far


def evaluate(scenario: LinkScenario) -> LinkResult:
    """Received power, detectability, and itemized losses at each distance."""
    received: list[float] = []
    detectable: list[bool] = []
    breakdowns: list[dict[str, float]] = []
    for d in scenario.distances_m:
        items = _branch_items(scenario, d)
        rx = scenario.tx_power_dbm - sum(items.values())
        received.append(rx)
        detectable.append(rx >= scenario.rx_sensitivity_dbm)
        breakdowns.append(items)
    return LinkResult(
        scenario=scenario,
        distances_m=scenario.distances_m,
        received_dbm=tuple(received),
        detectable=tuple(detectable),
        breakdowns=tuple(breakdowns),
    )


def decay_profile(scenario: LinkScenario) -> list[tuple[float, float]]:
    """(distance, received_dbm) rows across the scenario's distance list.

    In the surface-dominated segment the rows are exactly affine in
    distance with slope -DB_PER_NEPER/surface_decay_length dB per meter;
    past the crossover the corner-scattered spreading branch takes over.
    """
    if len(scenario.distances_m) < 2:
        raise ValidationError("scenario.distances_m", "decay profile needs >= 2 distances")
    res = evaluate(scenario)
    return list(zip(res.distances_m, res.received_dbm))


def tip_gap_sweep(scenario: LinkScenario, gaps_m: Sequence[float]) -> list[tuple[float, float]]:
    """(gap, received_dbm at the near-wall reference distance) per gap.

    Received power is strictly decreasing in the gap under the default
    coupling model (affine dB loss in gap).
    """
    if scenario.antenna_mode != MODE_SEW:
        raise ValidationError("scenario.antenna_mode", "tip gap sweep needs sew-antenna mode")
    gaps = list(gaps_m)
    if not gaps or any(g < 0 for g in gaps):
        raise ValidationError("gaps", "need at least one gap >= 0")
    if any(b <= a for a, b in zip(gaps, gaps[1:])):
        raise ValidationError("gaps", "must be strictly ascending")
    out = []
    for g in gaps:
        scn = replace(scenario, tip_gap_m=g, distances_m=(scenario.near_wall_reference_m,))
        out.append((g, evaluate(scn).received_dbm[0]))
    return out


def format_breakdown(result: LinkResult) -> str:
    """Human-readable per-distance breakdown table."""
    lines = []
    scn = result.scenario
    title = scn.label or scn.antenna_mode
    lines.append(f"scenario: {title} ({scn.antenna_mode}), tx {scn.tx_power_dbm:+.2f} dBm, "
                 f"rx sensitivity {scn.rx_sensitivity_dbm:+.2f} dBm")
    for d, rx, ok, items in zip(
        result.distances_m, result.received_dbm, result.detectable, result.breakdowns
    ):
        terms = "  ".join(f"{name} {loss:.2f}" for name, loss in items.items())
        verdict = "DETECTABLE" if ok else "below sensitivity"
        lines.append(f"  d={d:6.3f} m  received {rx:+9.2f} dBm  [{verdict}]  losses(dB): {terms}")
    return "\n".join(lines)


def load_scenario(path: str | Path) -> LinkScenario:
    """Read a link scenario from an INI file.

    Required sections/keys (units in names):

    * ``[scenario]``: tx_power_dbm, antenna_mode, cage_isolation_db,
      lambda_free_m, rx_sensitivity_dbm, distances_m (comma list);
      optional lambda_sew_m, surface_decay_length_m, corner_scatter_db,
      tip_gap_m, near_wall_reference_m, label.
    * ``[aperture]``: size_m; optional wall_thickness_m, periodic.
    * ``[coupling]`` (sew mode): offset_db, gap_scale_m; optional
      tip_enhancement.
    """
    cfg = load_config(path)
    return scenario_from_config(cfg)


def scenario_from_config(cfg: ConfigFile) -> LinkScenario:
    s = "scenario"
    try:
        aperture = ApertureSpec(
            a=cfg.get_float("aperture", "size_m"),
            wall_thickness=cfg.get_float("aperture", "wall_thickness_m", default=0.0),
            periodic=cfg.get_bool("aperture", "periodic", default=False),
        )
    except ValueError as exc:
        if isinstance(exc, ValidationError):
            raise
        raise ValidationError("aperture.size_m", str(exc)) from None
    coupling = None
    if cfg.has_section("coupling"):
        coupling = CouplingModel(
            offset_db=cfg.get_float("coupling", "offset_db"),
            gap_scale_m=cfg.get_float("coupling", "gap_scale_m"),
            tip_enhancement=cfg.get_float("coupling", "tip_enhancement", default=1.0),
        )
    lambda_sew = cfg.get_float(s, "lambda_sew_m") if cfg.has(s, "lambda_sew_m") else None
    decay = (
        cfg.get_float(s, "surface_decay_length_m")
        if cfg.has(s, "surface_decay_length_m")
        else None
    )
    corner = cfg.get_float(s, "corner_scatter_db") if cfg.has(s, "corner_scatter_db") else None
    source_text = Path(cfg.source).read_text(encoding="utf-8")
    return LinkScenario(
        tx_power_dbm=cfg.get_float(s, "tx_power_dbm"),
        antenna_mode=cfg.get_str(s, "antenna_mode"),
        cage_isolation_db=cfg.get_float(s, "cage_isolation_db"),
        aperture=aperture,
        lambda_free_m=cfg.get_float(s, "lambda_free_m"),
        rx_sensitivity_dbm=cfg.get_float(s, "rx_sensitivity_dbm"),
        distances_m=tuple(cfg.get_float_list(s, "distances_m")),
        near_wall_reference_m=cfg.get_float(s, "near_wall_reference_m", default=0.1),
        lambda_sew_m=lambda_sew,
        surface_decay_length_m=decay,
        corner_scatter_db=corner,
        tip_gap_m=cfg.get_float(s, "tip_gap_m", default=0.0),
        coupling=coupling,
        label=cfg.get_str(s, "label", default=""),
        source_text=source_text,
    )
