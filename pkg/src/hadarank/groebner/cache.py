"""Optional on-disk store of reduced Groebner bases.

Disabled unless a directory is configured via :func:`set_cache_dir` or the
``HADARANK_CACHE_DIR`` environment variable.  Entries are JSON files named by
(ideal hash, order).
"""

from __future__ import annotations

import json
import os
from pathlib import Path

_cache_dir: Path | None = None
_env_checked = False


def set_cache_dir(path) -> None:
    global _cache_dir, _env_checked
    _cache_dir = Path(path) if path else None
    _env_checked = True
    if _cache_dir is not None:
        _cache_dir.mkdir(parents=True, exist_ok=True)


def cache_dir() -> Path | None:
    global _env_checked
    if not _env_checked:
        _env_checked = True
        env = os.environ.get("HADARANK_CACHE_DIR")
        if env:
            set_cache_dir(env)
    return _cache_dir


def _path(ideal, order) -> Path | None:
    d = cache_dir()
    if d is None:
        return None
    return d / f"{ideal.key()}-{order.name}.json"


def load(ideal, order):
    """``(rows, steps)`` from the store, or None."""
    path = _path(ideal, order)
    if path is None or not path.exists():
        return None
    from ..exactalg.parse import parse_polynomial

    data = json.loads(path.read_text())
    if tuple(data["ring"]) != ideal.ring.names or data["order"] != order.name:
        return None
    rows = []
    for text in data["basis"]:
        g = parse_polynomial(text, ideal.ring).raw()
        rows.append((order.leading(g), g))
    return rows, int(data.get("steps", 0))


def store(ideal, order, rows, steps: int = 0) -> None:
    path = _path(ideal, order)
    if path is None:
        return
    from ..exactalg.polynomial import Polynomial

    data = {
        "ring": list(ideal.ring.names),
        "order": order.name,
        "generators": [str(g) for g in ideal.generators],
        "basis": [str(Polynomial._raw(ideal.ring, g)) for _, g in rows],
        "steps": steps,
    }
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(data, indent=1))
    tmp.replace(path)
