"""Field-snapshot dumps: one JSON header line + little-endian float64 data.

Format: the file begins with a single UTF-8 JSON object on its own line
(keys: nx, ny, dx, field, step, order="C"), followed immediately by
nx*ny raw '<f8' values in C (row-major, x-major) order.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

__all__ = ["write_snapshot", "read_snapshot"]


def write_snapshot(path: str | Path, array: np.ndarray, *, dx: float, field: str, step: int) -> None:
    arr = np.ascontiguousarray(array, dtype="<f8")
    if arr.ndim != 2:
        raise ValueError(f"snapshot must be 2-D, got shape {arr.shape}")
    header = {
        "nx": int(arr.shape[0]),
        "ny": int(arr.shape[1]),
        "dx": float(dx),
        "field": field,
        "step": int(step),
        "order": "C",
    }
    with open(path, "wb") as fh:
        fh.write(json.dumps(header, sort_keys=True).encode("utf-8") + b"\n")
        fh.write(arr.tobytes(order="C"))


def read_snapshot(path: str | Path) -> tuple[np.ndarray, dict]:
    with open(path, "rb") as fh:
        header_line = fh.readline()
        meta = json.loads(header_line.decode("utf-8"))
        data = fh.read()
    nx, ny = meta["nx"], meta["ny"]
    arr = np.frombuffer(data, dtype="<f8", count=nx * ny).reshape(nx, ny)
    return arr.copy(), meta
