"""Append-only JSON-lines cache of oracle counts.

One record per line: ``{"moves": [[c,d], ...], "q": int, "n": int,
"count": "decimal-string"}``.  Counts are decimal strings so no reader
needs to assume an integer width.  Corrupt lines are skipped with a
warning, never trusted.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import Optional, Union

from .core import MoveSet
from .enumerator import CountRecord

ENV_VAR = "QQUEENS_CACHE"

Key = tuple[tuple[tuple[int, int], ...], int, int]


class CountCache:
    def __init__(self, path: Union[str, Path]):
        self.path = Path(path)
        self._entries: dict[Key, int] = {}
        self._load()

    def _load(self) -> None:
        if not self.path.exists():
            return
        with self.path.open("r", encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    obj = json.loads(line)
                    moves = MoveSet.from_pairs((int(c), int(d)) for c, d in obj["moves"])
                    key = (moves.canonical_key(), int(obj["q"]), int(obj["n"]))
                    count = int(obj["count"])
                    if count < 0:
                        raise ValueError("negative count")
                except (ValueError, KeyError, TypeError) as err:
                    print(
                        f"warning: skipping corrupt cache line {lineno} in {self.path}: {err}",
                        file=sys.stderr,
                    )
                    continue
                self._entries[key] = count

    def get(self, moves: MoveSet, q: int, n: int) -> Optional[int]:
        return self._entries.get((moves.canonical_key(), q, n))

    def put(self, record: CountRecord) -> None:
        key = (record.moves.canonical_key(), record.q, record.n)
        if key in self._entries:
            return
        self._entries[key] = record.count
        line = json.dumps(
            {
                "moves": [list(cd) for cd in record.moves.canonical_key()],
                "q": record.q,
                "n": record.n,
                "count": str(record.count),
            }
        )
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a", encoding="utf-8") as fh:
            fh.write(line + "\n")

    def __len__(self) -> int:
        return len(self._entries)
