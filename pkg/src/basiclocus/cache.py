"""On-disk cache of Bruhat comparisons and reduced words, one JSON-lines file per root datum.

Line 1 is a header ``{"format":..., "version":..., "datum":[family, rank, model]}``.
Every other line is ``{"t": "b"|"w", "d": payload, "h": sha256(payload)}``.
A header mismatch (other package version or datum) makes the whole file a
miss; a line whose checksum does not match is skipped with a warning.
Cached values only ever short-circuit computations, so results never
depend on the cache.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
from pathlib import Path

from . import __version__
from . import affweyl

log = logging.getLogger(__name__)

ENV_VAR = "BASICLOCUS_CACHE_DIR"
FORMAT = "basiclocus-cache/1"


def default_dir() -> Path | None:
    d = os.environ.get(ENV_VAR)
    return Path(d) if d else None


def _digest(payload: str) -> str:
    return hashlib.sha256(payload.encode()).hexdigest()


def cache_path(directory: Path, datum_key: tuple) -> Path:
    fam, rank, model = datum_key
    return Path(directory) / f"{fam}{rank}-{model}-v{__version__}.jsonl"


def _header(datum_key, version) -> dict:
    return {"format": FORMAT, "version": version, "datum": list(datum_key)}


def _tup(x):
    return tuple(_tup(y) for y in x) if isinstance(x, list) else x


def load(directory, datum_key: tuple, version: str = __version__) -> dict:
    """Read a cache file into the in-memory tables; returns counts of loaded entries."""
    stats = {"bruhat": 0, "word": 0, "skipped": 0, "hit": False}
    if directory is None:
        return stats
    # activates reduced-word recording even on a cold cache
    affweyl._WORD_INDEX.setdefault(tuple(datum_key), {})
    path = cache_path(directory, datum_key)
    if not path.exists():
        return stats
    with path.open() as fh:
        first = fh.readline()
        try:
            header = json.loads(first)
        except json.JSONDecodeError:
            log.warning("cache %s: unreadable header, ignored", path)
            return stats
        if header != _header(datum_key, version):
            return stats
        stats["hit"] = True
        bmemo = affweyl._BRUHAT_MEMO.setdefault(tuple(datum_key), {})
        wmemo = affweyl._WORD_INDEX.setdefault(tuple(datum_key), {})
        for lineno, line in enumerate(fh, start=2):
            try:
                rec = json.loads(line)
                payload = rec["d"]
                if _digest(payload) != rec["h"]:
                    raise ValueError("checksum mismatch")
                data = json.loads(payload)
                if rec["t"] == "b":
                    x, w, r = data
                    bmemo[(_tup(x), _tup(w))] = bool(r)
                    stats["bruhat"] += 1
                elif rec["t"] == "w":
                    k, word, om = data
                    wmemo[_tup(k)] = (tuple(word), _tup(om))
                    stats["word"] += 1
            except (ValueError, KeyError, TypeError) as exc:
                log.warning("cache %s line %d skipped: %s", path, lineno, exc)
                stats["skipped"] += 1
    return stats


def store(directory, datum_key: tuple, version: str = __version__) -> Path | None:
    """Write the in-memory tables for one datum (sorted, so the file is deterministic)."""
    if directory is None:
        return None
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    path = cache_path(directory, datum_key)
    bmemo = affweyl._BRUHAT_MEMO.get(tuple(datum_key), {})
    wmemo = affweyl._WORD_INDEX.get(tuple(datum_key), {})
    lines = [json.dumps(_header(datum_key, version), sort_keys=True)]
    for (x, w), r in sorted(bmemo.items()):
        payload = json.dumps([x, w, r], separators=(",", ":"))
        lines.append(json.dumps({"t": "b", "d": payload, "h": _digest(payload)}))
    for k, (word, om) in sorted(wmemo.items()):
        payload = json.dumps([k, word, om], separators=(",", ":"))
        lines.append(json.dumps({"t": "w", "d": payload, "h": _digest(payload)}))
    tmp = path.with_suffix(".tmp")
    tmp.write_text("\n".join(lines) + "\n")
    tmp.replace(path)
    return path
