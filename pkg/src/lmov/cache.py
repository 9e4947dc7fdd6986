"""Content-addressed on-disk cache for exact invariants.

Each entry is one JSON file named by the SHA-256 of its key.  Writes go to a
temporary file in the same directory and are moved into place with
os.replace, so concurrent readers never see a partial file.
"""

import hashlib
import json
import os
import tempfile

from .qt_ring import RationalQT

ENV_VAR = "LMOV_CACHE_DIR"


def _key_text(key):
    return json.dumps(key, sort_keys=True, default=list, separators=(",", ":"))


class DiskCache:
    def __init__(self, root):
        self.root = os.path.abspath(root)
        os.makedirs(self.root, exist_ok=True)

    def path(self, key):
        h = hashlib.sha256(_key_text(key).encode()).hexdigest()
        return os.path.join(self.root, h[:2], h + ".json")

    def get(self, key):
        p = self.path(key)
        try:
            with open(p) as fh:
                data = json.load(fh)
        except (OSError, ValueError):
            return None
        if data.get("key") != _key_text(key):
            return None
        return RationalQT.from_json(data["value"])

    def put(self, key, value):
        p = self.path(key)
        os.makedirs(os.path.dirname(p), exist_ok=True)
        payload = json.dumps({"key": _key_text(key), "value": value.to_json()}, sort_keys=True)
        fd, tmp = tempfile.mkstemp(dir=os.path.dirname(p), suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(payload)
            os.replace(tmp, p)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def __len__(self):
        n = 0
        for _, _, files in os.walk(self.root):
            n += sum(1 for f in files if f.endswith(".json"))
        return n


def from_environment(default=None):
    """DiskCache at $LMOV_CACHE_DIR (or `default`), or None when neither is set."""
    root = os.environ.get(ENV_VAR) or default
    return DiskCache(root) if root else None
