import json
import logging
import os
import struct
import warnings

import numpy as np

from ..exceptions import ConsistencyWarning
from ..utils import content_hash
from ._grid import Grid, SampledFunction

logger = logging.getLogger(__name__)

MAGIC = b"TFWEYLFLD\0".ljust(16, b"\0")


def _sidecar(path):
    return str(path) + ".json"


def save_field(f, path, kind=None, convention=0, meta=None):
    """Save a sampled function in the binary field format

    The file holds the 16-byte magic, the little-endian header (u32 dims, then per
    axis u32 N, f64 L, u8 space tag) and the values as complex128 in row-major
    order. When `kind` is given a trailer follows: u8 kind, u8 convention, u32
    length and a JSON metadata block. A JSON sidecar `path + ".json"` stores the
    provenance and the SHA-256 of the binary file.

    Parameters
    ----------
    f : SampledFunction
        Function to save.
    path : str
        Destination file.
    kind : int, optional
        Kind byte of a phase-space field or an operator, by default None (no trailer)
    convention : int, optional
        Convention byte stored in the trailer, by default 0
    meta : dict, optional
        JSON-serializable metadata stored in the trailer, by default None

    Returns
    -------
    digest : str
        SHA-256 of the written binary file.
    """
    chunks = [MAGIC, struct.pack("<I", f.ndim)]
    for (n, half), tag in zip(f.grid.axes, f.tags):
        chunks.append(struct.pack("<IdB", n, half, int(tag)))
    chunks.append(np.ascontiguousarray(f.values, dtype="<c16").tobytes())
    if kind is not None:
        block = json.dumps(meta or {}, sort_keys=True).encode()
        chunks.append(struct.pack("<BBI", int(kind), int(convention), len(block)))
        chunks.append(block)
    data = b"".join(chunks)
    with open(path, "wb") as file:
        file.write(data)

    digest = content_hash(data)
    sidecar = {
        "file": os.path.basename(path),
        "sha256": digest,
        "truncated": f.truncated,
        "provenance": f.provenance,
    }
    with open(_sidecar(path), "w") as file:
        json.dump(sidecar, file, sort_keys=True, indent=2, default=str)
    logger.debug("saved field %s shape=%s sha256=%s", path, f.grid.shape, digest[:12])
    return digest


def load_field(path, with_trailer=False):
    """Load a sampled function saved by `save_field`

    Parameters
    ----------
    path : str
        Binary field file.
    with_trailer : bool, optional
        Also return the trailer as a dict `{"kind", "convention", "meta"}` (None when
        absent), by default False

    Returns
    -------
    f : SampledFunction
        Provenance and truncation flag are restored from the sidecar when it exists.
    trailer : dict or None
        Only when `with_trailer` is True.
    """
    with open(path, "rb") as file:
        data = file.read()
    if data[:16] != MAGIC:
        raise ValueError(f"{path} is not a field file (bad magic {data[:16]!r})")
    offset = 16
    dims, = struct.unpack_from("<I", data, offset)
    offset += 4
    axes, tags = [], []
    for _ in range(dims):
        n, half, tag = struct.unpack_from("<IdB", data, offset)
        offset += struct.calcsize("<IdB")
        axes.append((n, half))
        tags.append(tag)
    grid = Grid(tuple(axes))
    count = grid.size * 16
    if len(data) < offset + count:
        raise ValueError(f"{path} is truncated: expected {count} value bytes after the header")
    values = np.frombuffer(data, dtype="<c16", count=grid.size, offset=offset).reshape(grid.shape)
    offset += count

    trailer = None
    if len(data) > offset:
        kind, convention, length = struct.unpack_from("<BBI", data, offset)
        offset += struct.calcsize("<BBI")
        trailer = {"kind": kind, "convention": convention,
                   "meta": json.loads(data[offset:offset + length].decode())}

    provenance, truncated = {}, False
    if os.path.exists(_sidecar(path)):
        with open(_sidecar(path)) as file:
            sidecar = json.load(file)
        if sidecar.get("sha256") != content_hash(data):
            warnings.warn(f"Checksum of {path} differs from its sidecar", ConsistencyWarning)
        provenance = dict(sidecar.get("provenance") or {})
        truncated = bool(sidecar.get("truncated", False))
    provenance["sha256"] = content_hash(data)

    f = SampledFunction(grid, values, tags=tuple(tags), truncated=truncated, provenance=provenance)
    if with_trailer:
        return f, trailer
    return f
