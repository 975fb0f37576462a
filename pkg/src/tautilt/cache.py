"""On-disk cache of uniform-family counts.

The file is JSON with a version tag; values are decimal strings so that
arbitrarily large integers survive any JSON reader.
"""

from __future__ import annotations

import json
import logging
import os
from pathlib import Path
from typing import Dict, Optional, Tuple

from .counting import FAMILIES, CountEngine

log = logging.getLogger(__name__)

CACHE_ENV = "TAUTILT_CACHE"
FORMAT_TAG = "tautilt-cache"
VERSION = 1

Key = Tuple[str, int, int]


def resolve_path(flag: Optional[str]) -> Optional[Path]:
    path = flag or os.environ.get(CACHE_ENV)
    return Path(path) if path else None


def cache_load(path: Path) -> Dict[Key, int]:
    """Read cached counts.  A missing, corrupt or foreign file yields ``{}`` and a warning."""
    path = Path(path)
    if not path.exists():
        return {}
    try:
        data = json.loads(path.read_text())
        if data.get("format") != FORMAT_TAG:
            raise ValueError("not a tautilt cache file")
        if data.get("version") != VERSION:
            log.warning("cache %s has version %r, expected %d; ignoring it", path, data.get("version"), VERSION)
            return {}
        entries: Dict[Key, int] = {}
        for e in data["entries"]:
            family = str(e["family"])
            if family not in FAMILIES:
                raise ValueError(f"unknown family {family!r}")
            key = (family, int(e["r"]), int(e["n"]))
            value = int(e["value"])
            if not isinstance(e["value"], str) or value < 0 or key in entries:
                raise ValueError(f"bad entry {e!r}")
            entries[key] = value
        return entries
    except (ValueError, KeyError, TypeError, AttributeError) as exc:
        log.warning("ignoring corrupt cache %s: %s", path, exc)
        return {}


def cache_store(path: Path, entries: Dict[Key, int]) -> None:
    path = Path(path)
    payload = {
        "format": FORMAT_TAG,
        "version": VERSION,
        "entries": [
            {"family": f, "r": r, "n": n, "value": str(v)}
            for (f, r, n), v in sorted(entries.items())
        ],
    }
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(json.dumps(payload, indent=1))
    os.replace(tmp, path)


def load_into(engine: CountEngine, path: Optional[Path]) -> int:
    if path is None:
        return 0
    entries = cache_load(path)
    engine.preload(entries)
    return len(entries)


def store_from(engine: CountEngine, path: Optional[Path]) -> None:
    if path is None:
        return
    with engine._lock:
        snapshot = dict(engine.memo)
    cache_store(path, snapshot)
