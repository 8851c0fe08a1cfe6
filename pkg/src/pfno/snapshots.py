"""Bit-exact snapshot files for multi-channel fields.

Layout (little-endian):
    bytes 0-7   magic ``PFNOSNAP``
    u32         version (1)
    u32         channels
    u32         rows
    u32         cols
    then channels*rows*cols f64 values, channel-major, row-major per channel.

An optional UTF-8 sidecar ``<path>.meta`` carries ``key=value`` lines
(time, step, parameter digests) and never affects the binary payload.
"""

from __future__ import annotations

import struct
from pathlib import Path
from typing import Sequence

import numpy as np

from .fields import Field2D, Grid2D, require_same_grid

MAGIC = b"PFNOSNAP"
VERSION = 1


class SnapshotFormatError(Exception):
    """Raised for malformed snapshot files (bad magic, version, or size)."""


def snapshot_write(channels: Sequence[Field2D], path, meta: dict | None = None) -> None:
    if not channels:
        raise ValueError("snapshot needs at least one channel")
    grid = require_same_grid(*channels)
    path = Path(path)
    with open(path, "wb") as fh:
        fh.write(MAGIC)
        fh.write(struct.pack("<IIII", VERSION, len(channels), grid.n, grid.n))
        for ch in channels:
            fh.write(np.ascontiguousarray(ch.values, dtype="<f8").tobytes())
    if meta:
        write_meta(path, meta)


def write_meta(path, meta: dict) -> None:
    lines = [f"{k}={meta[k]}" for k in meta]
    Path(str(path) + ".meta").write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_meta(path) -> dict:
    mpath = Path(str(path) + ".meta")
    if not mpath.exists():
        return {}
    out = {}
    for line in mpath.read_text(encoding="utf-8").splitlines():
        if "=" in line:
            k, v = line.split("=", 1)
            out[k.strip()] = v.strip()
    return out


def snapshot_read(path, length: float = 1.0) -> list[Field2D]:
    path = Path(path)
    raw = path.read_bytes()
    if len(raw) < 24:
        raise SnapshotFormatError(f"{path}: truncated header")
    if raw[:8] != MAGIC:
        raise SnapshotFormatError(f"{path}: bad magic {raw[:8]!r}")
    version, nchan, rows, cols = struct.unpack("<IIII", raw[8:24])
    if version != VERSION:
        raise SnapshotFormatError(f"{path}: unsupported version {version}")
    if rows != cols:
        raise SnapshotFormatError(f"{path}: non-square field {rows}x{cols}")
    expected = 24 + nchan * rows * cols * 8
    if len(raw) != expected:
        raise SnapshotFormatError(
            f"{path}: payload size {len(raw)} != expected {expected}"
        )
    grid = Grid2D(rows, length)
    out = []
    offset = 24
    count = rows * cols
    for _ in range(nchan):
        vals = np.frombuffer(raw, dtype="<f8", count=count, offset=offset)
        out.append(Field2D(grid, vals.reshape(rows, cols).copy()))
        offset += count * 8
    return out
