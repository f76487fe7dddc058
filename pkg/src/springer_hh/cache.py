"""On-disk cache of Weyl group enumerations.

File layout (little endian)::

    b"SHH1"  u16 format version  u8 type letter  u8 rank  u32 element count
    then per element: u32 record length, u8 word length, word bytes,
    rank*rank i32 matrix entries (row major)

Files are write-once (temp file + atomic rename).  ``decode`` re-derives
every matrix from its word and checks group closure; a file failing any
check is ignored and rebuilt.
"""

from __future__ import annotations

import logging
import os
import struct
import tempfile
from pathlib import Path

from .rootdata import (
    DEFAULT_WEYL_BOUND,
    RootSystem,
    WeylElement,
    WeylGroup,
    enumerate_weyl,
    identity_matrix,
    install_weyl_group,
    mat_mul,
    simple_reflection_matrix,
)

log = logging.getLogger(__name__)

MAGIC = b"SHH1"
FORMAT_VERSION = 1
ENV_VAR = "SPRINGER_HH_CACHE"
_HEADER = struct.Struct("<4sHBBI")


def cache_path(rs: RootSystem, cache_dir: str | os.PathLike, version: int = FORMAT_VERSION) -> Path:
    return Path(cache_dir) / f"weyl-{rs.type_label}{rs.rank}-v{version}.shh"


def encode(rs: RootSystem, elements: list[WeylElement], version: int = FORMAT_VERSION) -> bytes:
    n = rs.rank
    parts = [_HEADER.pack(MAGIC, version, ord(rs.type_label), n, len(elements))]
    mat_fmt = struct.Struct(f"<{n * n}i")
    for w in elements:
        payload = bytes([len(w.word)]) + bytes(w.word)
        payload += mat_fmt.pack(*(x for row in w.matrix for x in row))
        parts.append(struct.pack("<I", len(payload)) + payload)
    return b"".join(parts)


def decode(rs: RootSystem, data: bytes, version: int = FORMAT_VERSION) -> list[WeylElement]:
    """Parse and validate a cache file; raises ValueError on any inconsistency."""
    try:
        magic, ver, letter, n, count = _HEADER.unpack_from(data, 0)
    except struct.error as exc:
        raise ValueError("truncated header") from exc
    if magic != MAGIC or ver != version or chr(letter) != rs.type_label or n != rs.rank:
        raise ValueError("cache key or version mismatch")
    mat_fmt = struct.Struct(f"<{n * n}i")
    gens = [simple_reflection_matrix(rs, i) for i in range(n)]
    pos = _HEADER.size
    out = []
    seen = set()
    try:
        for _ in range(count):
            (length,) = struct.unpack_from("<I", data, pos)
            pos += 4
            rec = data[pos : pos + length]
            if len(rec) != length:
                raise ValueError("truncated record")
            pos += length
            wl = rec[0]
            word = tuple(rec[1 : 1 + wl])
            flat = mat_fmt.unpack(rec[1 + wl :])
            matrix = tuple(tuple(flat[r * n : (r + 1) * n]) for r in range(n))
            check = identity_matrix(n)
            for i in word:
                if i >= n:
                    raise ValueError("bad generator index")
                check = mat_mul(check, gens[i])
            if check != matrix or matrix in seen:
                raise ValueError("record does not match its word")
            seen.add(matrix)
            out.append(WeylElement(word, matrix))
    except struct.error as exc:
        raise ValueError("malformed record") from exc
    if pos != len(data):
        raise ValueError("trailing bytes")
    # closed under the generators and containing e, hence all of W
    if identity_matrix(n) not in seen or any(mat_mul(m, g) not in seen for m in seen for g in gens):
        raise ValueError("stored elements do not form the whole group")
    return out


def cache_weyl(
    rs: RootSystem,
    cache_dir: str | os.PathLike | None,
    bound: int = DEFAULT_WEYL_BOUND,
    version: int = FORMAT_VERSION,
) -> WeylGroup:
    """Load the enumeration for ``rs`` from ``cache_dir`` or build and persist it.

    The result is also installed as the in-memory group for ``rs``.
    """
    elements = None
    path = cache_path(rs, cache_dir, version) if cache_dir else None
    if path is not None and path.exists():
        try:
            elements = decode(rs, path.read_bytes(), version)
        except (OSError, ValueError) as exc:
            log.warning("ignoring unusable Weyl cache %s: %s", path, exc)
    if elements is None:
        elements = enumerate_weyl(rs, bound)
        if path is not None:
            _write_atomic(path, encode(rs, elements, version))
    group = WeylGroup(rs, elements)
    install_weyl_group(group)
    return group


def _write_atomic(path: Path, data: bytes) -> None:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".weyl-", suffix=".tmp")
        try:
            with os.fdopen(fd, "wb") as fh:
                fh.write(data)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
    except OSError as exc:
        log.warning("cannot write Weyl cache %s (%s); continuing in memory", path, exc)
