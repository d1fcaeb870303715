"""Run-length codec for binary words that start with a 1-run."""

from __future__ import annotations

from typing import Sequence

Run = tuple[int, int]  # (bit, exponent >= 1)


def rle_validate(runs: Sequence[Run]) -> None:
    if not runs:
        raise ValueError("empty run list")
    if runs[0][0] != 1:
        raise ValueError("first run must be a 1-run")
    prev = None
    for bit, exp in runs:
        if bit not in (0, 1):
            raise ValueError(f"bad bit {bit}")
        if exp < 1:
            raise ValueError(f"bad exponent {exp}")
        if prev is not None and bit == prev:
            raise ValueError("adjacent runs must alternate")
        prev = bit


def rle_encode(x: Sequence[int]) -> list[Run]:
    if not x:
        raise ValueError("cannot encode the empty word")
    if any(s not in (0, 1) for s in x):
        raise ValueError("input must be binary")
    if x[0] != 1:
        raise ValueError("input must start with 1")
    runs: list[Run] = []
    for s in x:
        if runs and runs[-1][0] == s:
            runs[-1] = (s, runs[-1][1] + 1)
        else:
            runs.append((s, 1))
    return runs


def rle_decode(runs: Sequence[Run]) -> list[int]:
    rle_validate(runs)
    out: list[int] = []
    for bit, exp in runs:
        out.extend([bit] * exp)
    return out


def rle_length(runs: Sequence[Run]) -> int:
    return sum(exp for _, exp in runs)
