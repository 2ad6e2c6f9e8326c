"""Persistent value cache: append-only JSON Lines with advisory locking.

One record per line, schema_version 1, kinds mzv / li_half /
transport_coeff.  Values travel as decimal strings so the file stays
precision-faithful and diff-able; unknown kinds and corrupt lines are
tolerated on read (the latter skipped with a warning) so an old reader
survives a newer writer and a torn write never poisons the file.
"""

import json
import os
import warnings
from datetime import datetime, timezone

import fcntl
import mpmath as mp

SCHEMA_VERSION = 1
KNOWN_KINDS = ("mzv", "li_half", "transport_coeff")
_FILENAME = "values.jsonl"


def default_cache_dir(cli_value=None):
    if cli_value:
        return cli_value
    env = os.environ.get("MZV_CACHE_DIR")
    if env:
        return env
    return os.path.join(os.path.expanduser("~"), ".cache", "mzv")


def index_key(index):
    return ",".join(str(k) for k in index)


def word_key(word):
    return "".join(str(b) for b in word)


def mzv_key(index, backend):
    return "backend=%s;index=%s" % (backend, index_key(index))


class ValueCache:
    def __init__(self, directory):
        self.directory = directory
        self.path = os.path.join(directory, _FILENAME)
        self._records = None
        self.corrupt_lines = 0

    def _ensure_loaded(self):
        if self._records is not None:
            return
        self._records = {}
        self.corrupt_lines = 0
        if not os.path.exists(self.path):
            return
        with open(self.path, "r") as f:
            fcntl.flock(f.fileno(), fcntl.LOCK_SH)
            try:
                for lineno, line in enumerate(f, 1):
                    line = line.strip()
                    if not line:
                        continue
                    try:
                        rec = json.loads(line)
                        key = (rec["kind"], rec["key"],
                               int(rec["precision"]))
                        if not isinstance(rec["value"], str) or \
                                not isinstance(rec["bound"], str):
                            raise TypeError("value fields must be strings")
                    except (ValueError, KeyError, TypeError):
                        self.corrupt_lines += 1
                        warnings.warn("skipping corrupt cache line %d in %s"
                                      % (lineno, self.path))
                        continue
                    self._records[key] = rec
            finally:
                fcntl.flock(f.fileno(), fcntl.LOCK_UN)

    def get(self, kind, key, precision):
        self._ensure_loaded()
        return self._records.get((kind, key, int(precision)))

    def put(self, kind, key, precision, value, bound, created_at=None):
        self._ensure_loaded()
        rec = {
            "schema_version": SCHEMA_VERSION,
            "kind": kind,
            "key": key,
            "precision": int(precision),
            "value": str(value),
            "bound": str(bound),
            "created_at": created_at or
            datetime.now(timezone.utc).isoformat(),
        }
        os.makedirs(self.directory, exist_ok=True)
        with open(self.path, "a") as f:
            fcntl.flock(f.fileno(), fcntl.LOCK_EX)
            try:
                f.write(json.dumps(rec, sort_keys=True) + "\n")
                f.flush()
            finally:
                fcntl.flock(f.fileno(), fcntl.LOCK_UN)
        self._records[(kind, key, int(precision))] = rec
        return rec

    def stats(self):
        self._ensure_loaded()
        kinds = {}
        for (kind, _, _) in self._records:
            kinds[kind] = kinds.get(kind, 0) + 1
        return {
            "path": self.path,
            "records": len(self._records),
            "kinds": kinds,
            "corrupt_lines": self.corrupt_lines,
        }


def cached_mzv(cache, index, prec, backend="holder"):
    """Evaluator front door: serve from cache or compute and store.
    Returns (MzvValue, hit_flag)."""
    from .evaluator import MzvValue, evaluate
    from .precision import PrecReal
    index = tuple(int(k) for k in index)
    key = mzv_key(index, backend)
    if cache is not None:
        rec = cache.get("mzv", key, prec)
        if rec is not None:
            with mp.workdps(prec + 10):
                val = mp.mpf(rec["value"])
                err = mp.mpf(rec["bound"]) + abs(val) * mp.mpf(10) ** (
                    -(prec + 8))
            return MzvValue(index, PrecReal(val, err), backend), True
    with mp.workdps(prec + 12):
        out = evaluate(index, prec, backend)
        if cache is not None:
            cache.put("mzv", key, prec,
                      mp.nstr(out.value.val, prec + 8),
                      mp.nstr(out.error_bound, 8) if out.error_bound
                      else "0")
    return out, False
