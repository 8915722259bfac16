"""Uniform index -> integer access to the three sequences (v, nd, qd)."""
from __future__ import annotations

from typing import Callable, Union

SEQUENCES = ("v", "nd", "qd")
FIRST_INDEX = {"v": 0, "nd": 1, "qd": 1}

_memo: dict[str, list] = {"nd": [], "qd": []}


def _extend(name: str, upto: int) -> list:
    from . import curves

    have = _memo[name]
    if len(have) < upto:
        target = max(upto, 2 * len(have))
        if name == "nd":
            _memo[name] = list(curves.kontsevich(target).values)
        else:
            counts = curves.extract_instantons(target)
            _memo[name] = [int(q) for q in counts.values]
    return _memo[name]


def value(name: str, n: int) -> int:
    if name == "v":
        from .lines import v_defn

        return v_defn(n)
    if name not in _memo:
        raise ValueError(f"unknown sequence {name!r}")
    if n < 1:
        raise ValueError(f"{name} starts at index 1")
    return _extend(name, n)[n - 1]


SequenceSource = Union[str, Callable[[int], int]]


def accessor(source: SequenceSource) -> Callable[[int], int]:
    if callable(source):
        return source
    if source not in SEQUENCES:
        raise ValueError(f"unknown sequence {source!r}")
    return lambda n: value(source, n)
