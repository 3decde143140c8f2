"""Append-only results cache for search subcommands.

Line-delimited JSON records ``{"query": ..., "outcome": ..., "witness_hash":
..., "seed": ..., "version": ...}``.  The path comes from the PARTSAT_CACHE
environment variable, defaulting to ``~/.cache/partsat/results.jsonl``.
Lookups scan the whole file and return the last record whose query matches,
so re-running a search is free; ``--no-cache`` on the CLI bypasses both
directions.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

ENV_VAR = "PARTSAT_CACHE"


def cache_path() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME", os.path.join(os.path.expanduser("~"), ".cache"))
    return Path(base) / "partsat" / "results.jsonl"


def lookup(query: dict) -> dict | None:
    path = cache_path()
    if not path.exists():
        return None
    hit = None
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError:
                continue
            if rec.get("query") == query:
                hit = rec
    return hit


def append(query: dict, outcome: dict, witness_hash: str | None,
           seed: int | None, version: str) -> None:
    path = cache_path()
    path.parent.mkdir(parents=True, exist_ok=True)
    rec = {"query": query, "outcome": outcome, "witness_hash": witness_hash,
           "seed": seed, "version": version}
    with open(path, "a") as fh:
        fh.write(json.dumps(rec, sort_keys=True) + "\n")
