"""On-disk store of simple characters, one JSON file per (p, lam).

Files are named ``<p>_<entries>`` with entries joined by ``_`` and a minus
sign written as ``m``, e.g. ``3_2_1_0.json`` or ``5_0_m1.json``.  Writes go
to a temporary file in the same directory and are renamed into place, so a
reader never sees a half-written entry.
"""

from __future__ import annotations

import json
import logging
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import __version__
from .gram_oracle import Character, set_character_store
from .weights import Weight, as_weight

log = logging.getLogger(__name__)

ENV_VAR = "GLWEDGE_CACHE_DIR"


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "glwedge"


@dataclass
class CacheEntry:
    p: int
    lam: Weight
    character: Character
    tool_version: str = __version__

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "lambda": list(self.lam),
            "tool_version": self.tool_version,
            "character": self.character.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "CacheEntry":
        return cls(int(data["p"]), tuple(data["lambda"]), Character.from_json(data["character"]), data["tool_version"])


def entry_filename(p: int, lam: Sequence[int]) -> str:
    parts = [str(p)] + [str(a).replace("-", "m") for a in lam]
    return "_".join(parts) + ".json"


class CharacterCache:
    """Directory of :class:`CacheEntry` files; usable as a gram_oracle character store."""

    def __init__(self, directory: str | os.PathLike | None = None, version: str = __version__):
        self.directory = Path(directory) if directory is not None else default_cache_dir()
        self.version = version
        self.hits = 0
        self.misses = 0

    def path(self, lam: Sequence[int], p: int) -> Path:
        return self.directory / entry_filename(p, lam)

    def store(self, entry: CacheEntry) -> Path:
        self.directory.mkdir(parents=True, exist_ok=True)
        target = self.path(entry.lam, entry.p)
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(entry.to_json(), fh, indent=1)
            os.replace(tmp, target)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        return target

    def load(self, lam: Sequence[int], p: int) -> CacheEntry | None:
        lam = as_weight(lam)
        path = self.path(lam, p)
        if not path.exists():
            return None
        try:
            with open(path) as fh:
                entry = CacheEntry.from_json(json.load(fh))
        except (OSError, ValueError, KeyError, TypeError) as exc:
            log.warning("ignoring corrupt cache entry %s: %s", path, exc)
            return None
        if entry.tool_version != self.version:
            log.info("cache entry %s is from version %s, recomputing", path, entry.tool_version)
            return None
        if entry.p != p or entry.lam != lam:
            log.warning("cache entry %s does not match its name, recomputing", path)
            return None
        return entry

    # store protocol used by gram_oracle.simple_character
    def get(self, lam: Weight, p: int) -> Character | None:
        entry = self.load(lam, p)
        if entry is None:
            self.misses += 1
            return None
        self.hits += 1
        return entry.character

    def put(self, lam: Weight, p: int, ch: Character) -> None:
        self.store(CacheEntry(p, as_weight(lam), ch, self.version))


def cache_store(entry: CacheEntry, directory=None) -> Path:
    return CharacterCache(directory).store(entry)


def cache_load(lam: Sequence[int], p: int, directory=None) -> CacheEntry | None:
    return CharacterCache(directory).load(lam, p)


class use_cache:
    """Context manager routing simple-character computations through a cache."""

    def __init__(self, cache: CharacterCache | None):
        self.cache = cache

    def __enter__(self) -> CharacterCache | None:
        set_character_store(self.cache)
        return self.cache

    def __exit__(self, *exc) -> None:
        set_character_store(None)
