"""Append-only JSON-lines result cache."""

from __future__ import annotations

import hashlib
import json
import os
import threading
import time


def digest(command: str, params: dict) -> str:
    blob = json.dumps({"command": command, "params": params}, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


class ResultCache:
    """Records are ``{command, digest, params, result, witnesses, timestamp}``, one per line.

    Writes go through one lock; the file is only ever appended to.
    """

    def __init__(self, path: str | None):
        self.path = path
        self._lock = threading.Lock()
        self._index: dict[str, dict] | None = None

    def _load(self):
        index = {}
        if self.path and os.path.exists(self.path):
            with open(self.path) as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    try:
                        rec = json.loads(line)
                    except json.JSONDecodeError:
                        continue  # a torn final line from an interrupted run
                    index.setdefault(rec["digest"], rec)
        self._index = index

    def get(self, command: str, params: dict):
        if self.path is None:
            return None
        with self._lock:
            if self._index is None:
                self._load()
            rec = self._index.get(digest(command, params))
        if rec is None or rec.get("params") != params or rec.get("command") != command:
            return None
        return rec["result"]

    def put(self, command: str, params: dict, result, witnesses=()):
        if self.path is None:
            return
        d = digest(command, params)
        rec = {
            "command": command,
            "digest": d,
            "params": params,
            "result": result,
            "witnesses": list(witnesses),
            "timestamp": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        }
        with self._lock:
            if self._index is None:
                self._load()
            if d in self._index:
                return
            parent = os.path.dirname(os.path.abspath(self.path))
            os.makedirs(parent, exist_ok=True)
            with open(self.path, "a") as fh:
                fh.write(json.dumps(rec, sort_keys=True) + "\n")
            self._index[d] = rec
