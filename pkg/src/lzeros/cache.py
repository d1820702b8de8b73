"""Append-only zero cache.

One record per line: ``family_id,n,mode,digits,t_n,residual`` in plain
decimal text.  Appending never rewrites history; on read, the record with
the most digits wins per (family_id, n, mode) key.  Requests for fewer
digits than a cached record are served by rounding the cached ordinate.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

from mpmath import mp

CACHE_ENV_VAR = "LZEROS_CACHE_DIR"
_FILE_NAME = "zeros.csv"


@dataclass(frozen=True)
class CachedZero:
    family_id: str
    n: int
    mode: str
    digits: int
    ordinate_str: str
    residual: float

    @property
    def ordinate(self):
        with mp.workdps(self.digits + 10):
            return mp.mpf(self.ordinate_str)


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV_VAR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "lzeros"


class ZeroCache:
    """File-backed store of solved ordinates keyed by (family_id, n, mode)."""

    def __init__(self, directory: Path | str | None = None):
        self.directory = Path(directory) if directory else default_cache_dir()
        self.path = self.directory / _FILE_NAME
        self._records: dict[tuple, CachedZero] = {}
        self._load()

    def _load(self):
        if not self.path.exists():
            return
        for line in self.path.read_text().splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            rec = self._parse(line)
            if rec is not None:
                self._consider(rec)

    @staticmethod
    def _parse(line: str) -> CachedZero | None:
        parts = line.split(",")
        if len(parts) != 6:
            return None
        try:
            return CachedZero(
                family_id=parts[0],
                n=int(parts[1]),
                mode=parts[2],
                digits=int(parts[3]),
                ordinate_str=parts[4],
                residual=float(parts[5]),
            )
        except ValueError:
            return None

    def _consider(self, rec: CachedZero):
        key = (rec.family_id, rec.n, rec.mode)
        old = self._records.get(key)
        if old is None or rec.digits > old.digits:
            self._records[key] = rec

    def get(self, family_id: str, n: int, mode: str = "exact",
            min_digits: int = 0) -> CachedZero | None:
        rec = self._records.get((family_id, n, mode))
        if rec is not None and rec.digits >= min_digits:
            return rec
        return None

    def put(self, family_id: str, n: int, mode: str, digits: int,
            ordinate_str: str, residual: float) -> CachedZero:
        rec = CachedZero(family_id, n, mode, digits, ordinate_str, residual)
        key = (family_id, n, mode)
        old = self._records.get(key)
        self._consider(rec)
        if old is None or rec.digits > old.digits:
            self.directory.mkdir(parents=True, exist_ok=True)
            with open(self.path, "a") as fh:
                fh.write(f"{family_id},{n},{mode},{digits},"
                         f"{ordinate_str},{residual:.6e}\n")
        return self._records[key]

    def put_record(self, record) -> CachedZero:
        """Store a solver ZeroRecord."""
        return self.put(record.family_id, record.n, record.mode,
                        record.achieved_digits, record.ordinate_str,
                        record.residual)

    def __len__(self):
        return len(self._records)
