"""Plain-text sequence files: optional '# seq=<id> count=<N>' header, then 'index value' lines."""
from __future__ import annotations

import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__


@dataclass
class CacheFile:
    seq: str
    start: int
    values: list = field(default_factory=list)  # decimal strings, contiguous from start
    version: str = __version__

    @property
    def count(self) -> int:
        return len(self.values)

    def get(self, n: int):
        i = n - self.start
        return self.values[i] if 0 <= i < len(self.values) else None

    def extend_to(self, stop: int, compute) -> None:
        """Fill indices through stop (inclusive) with str(compute(n))."""
        for n in range(self.start + len(self.values), stop + 1):
            self.values.append(str(compute(n)))

    def dumps(self) -> str:
        lines = [f"# seq={self.seq} count={self.count} start={self.start} version={self.version}"]
        lines += [f"{self.start + i} {v}" for i, v in enumerate(self.values)]
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str, seq: str | None = None, start: int | None = None) -> "CacheFile":
        header: dict = {}
        records = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            if line.startswith("#"):
                for tok in line[1:].split():
                    key, _, val = tok.partition("=")
                    header[key] = val
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"line {lineno}: expected 'index value'")
            records.append((int(parts[0]), parts[1]))
        name = header.get("seq", seq or "anonymous")
        if records:
            first = records[0][0]
        elif "start" in header:
            first = int(header["start"])
        else:
            first = start if start is not None else 0
        for i, (idx, _) in enumerate(records):
            if idx != first + i:
                raise ValueError(f"indices not contiguous at {idx}")
        if "count" in header and int(header["count"]) != len(records):
            raise ValueError("header count does not match the records")
        return cls(name, first, [v for _, v in records], header.get("version", __version__))

    @classmethod
    def read(cls, path: Path) -> "CacheFile":
        return cls.loads(Path(path).read_text(encoding="ascii"))

    def write(self, path: Path) -> None:
        """Atomic replace so a crash never leaves a half-written cache."""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
        with os.fdopen(fd, "w", encoding="ascii", newline="\n") as fh:
            fh.write(self.dumps())
        os.replace(tmp, path)


def cache_path(cache_dir: Path, seq: str) -> Path:
    return Path(cache_dir) / f"{seq}.txt"


def load_or_new(cache_dir: Path | None, seq: str, start: int) -> CacheFile:
    if cache_dir is not None:
        path = cache_path(cache_dir, seq)
        if path.exists():
            cf = CacheFile.read(path)
            if cf.seq == seq and cf.start == start:
                return cf
    return CacheFile(seq, start)
