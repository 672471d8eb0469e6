"""Post-processing of probe records: wavelengths, decay fits, averages."""

from __future__ import annotations

import math

import numpy as np

__all__ = [
    "zero_crossing_wavelength",
    "fit_exponential_decay",
    "peak_time",
    "periodic_drift",
    "mean_tail",
]


def zero_crossing_wavelength(positions: np.ndarray, snapshot: np.ndarray,
                             min_crossings: int = 5) -> float:
    """Wavelength from the mean spacing of sign changes in a spatial snapshot.

    Crossing positions are linearly interpolated; the result averages at
    least (min_crossings - 1) half-wavelength gaps.
    """
    x = np.asarray(positions, dtype=float)
    v = np.asarray(snapshot, dtype=float)
    if x.shape != v.shape or x.ndim != 1:
        raise ValueError("positions and snapshot must be equal-length 1-D arrays")
    sign_change = np.where(np.diff(np.signbit(v)))[0]
    crossings = []
    for idx in sign_change:
        y0, y1 = v[idx], v[idx + 1]
        if y1 == y0:
            continue
        frac = -y0 / (y1 - y0)
        crossings.append(x[idx] + frac * (x[idx + 1] - x[idx]))
    if len(crossings) < min_crossings:
        raise ValueError(
            f"only {len(crossings)} zero crossings in window, need >= {min_crossings}"
        )
    gaps = np.diff(np.asarray(crossings))
    return 2.0 * float(gaps.mean())


def fit_exponential_decay(positions: np.ndarray, amplitudes: np.ndarray,
                          floor: float = 0.0) -> tuple[float, float]:
    """Fit A(x) = A0*exp(-x/L); returns (L, r_squared of the log-linear fit).

    Points with amplitude <= floor (or <= 0) are excluded.
    """
    x = np.asarray(positions, dtype=float)
    a = np.asarray(amplitudes, dtype=float)
    keep = a > max(floor, 0.0)
    if keep.sum() < 3:
        raise ValueError("need at least 3 positive amplitudes to fit a decay")
    x, la = x[keep], np.log(a[keep])
    slope, intercept = np.polyfit(x, la, 1)
    pred = slope * x + intercept
    ss_res = float(np.sum((la - pred) ** 2))
    ss_tot = float(np.sum((la - la.mean()) ** 2))
    r2 = 1.0 - ss_res / ss_tot if ss_tot > 0 else 0.0
    if slope >= 0:
        return math.inf, r2
    return -1.0 / slope, r2


def peak_time(times: np.ndarray, values: np.ndarray) -> float:
    """Arrival time of max |value|, refined by parabolic interpolation."""
    t = np.asarray(times, dtype=float)
    v = np.abs(np.asarray(values, dtype=float))
    k = int(np.argmax(v))
    if k == 0 or k == v.size - 1:
        return float(t[k])
    y0, y1, y2 = v[k - 1], v[k], v[k + 1]
    denom = y0 - 2.0 * y1 + y2
    if denom == 0:
        return float(t[k])
    offset = 0.5 * (y0 - y2) / denom
    return float(t[k] + offset * (t[k + 1] - t[k]))


def periodic_drift(values: np.ndarray, steps_per_period: int, n_periods: int) -> float:
    """Relative spread of per-period peak amplitude over the last n periods.

    Returns (max - min)/mean of the per-period max |value|; small means a
    converged steady state.
    """
    v = np.abs(np.asarray(values, dtype=float))
    need = steps_per_period * n_periods
    if v.size < need:
        raise ValueError(f"series too short: {v.size} < {need} samples")
    tail = v[v.size - need :]
    peaks = tail.reshape(n_periods, steps_per_period).max(axis=1)
    mean = float(peaks.mean())
    if mean == 0.0:
        return 0.0
    return float((peaks.max() - peaks.min()) / mean)


def mean_tail(values: np.ndarray, n_samples: int) -> float:
    """Mean of the last n_samples entries (time-averaged flux, etc.)."""
    v = np.asarray(values, dtype=float)
    if v.size < n_samples:
        raise ValueError(f"series too short: {v.size} < {n_samples} samples")
    return float(v[v.size - n_samples :].mean())
