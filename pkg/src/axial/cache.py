"""Content-addressed disk cache for expensive interval builds.

Entries are keyed by a hash of the build parameters plus a schema version;
bumping the version invalidates every old entry.  Access is process-exclusive
through a lock file next to the cache directory.
"""

from __future__ import annotations

import hashlib
import json
import os
import time
from pathlib import Path

SCHEMA_VERSION = 1
CACHE_DIR_ENV = "AXIAL_CACHE_DIR"


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_DIR_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "axial"


def cache_key(**params) -> str:
    """Stable content hash of the build parameters and schema version."""
    payload = {"schema": SCHEMA_VERSION, **params}
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:32]


class CacheLock:
    """Exclusive lock on a cache directory via an O_EXCL lock file."""

    def __init__(self, directory: Path, timeout: float = 30.0):
        self.path = Path(directory) / ".lock"
        self.timeout = timeout
        self._fd: int | None = None

    def __enter__(self) -> "CacheLock":
        self.path.parent.mkdir(parents=True, exist_ok=True)
        deadline = time.monotonic() + self.timeout
        while True:
            try:
                self._fd = os.open(self.path, os.O_CREAT | os.O_EXCL | os.O_WRONLY)
                os.write(self._fd, str(os.getpid()).encode())
                return self
            except FileExistsError:
                if time.monotonic() > deadline:
                    raise TimeoutError(f"cache lock busy: {self.path}")
                time.sleep(0.05)

    def __exit__(self, *exc):
        if self._fd is not None:
            os.close(self._fd)
            self._fd = None
        self.path.unlink(missing_ok=True)


def load(directory: Path, key: str) -> dict | None:
    """Cached JSON payload for the key, or None."""
    path = Path(directory) / f"{key}.json"
    with CacheLock(directory):
        if not path.exists():
            return None
        with open(path) as fh:
            entry = json.load(fh)
    if entry.get("schema") != SCHEMA_VERSION:
        return None
    return entry["payload"]


def store(directory: Path, key: str, payload: dict) -> None:
    """Write a payload atomically (tmp file + rename) under the lock."""
    directory = Path(directory)
    path = directory / f"{key}.json"
    tmp = directory / f"{key}.tmp"
    entry = {"schema": SCHEMA_VERSION, "payload": payload}
    with CacheLock(directory):
        with open(tmp, "w") as fh:
            json.dump(entry, fh, sort_keys=True, separators=(",", ":"))
        os.replace(tmp, path)
