"""Fibonacci numbers and the Zeckendorf numeration system.

ZF-words are plain strings over ``"01"``, most significant digit first.
The rightmost digit carries weight ``F_2 = 1``, the next ``F_3 = 2``, and so
on; leading zeros are insignificant. The canonical zero word is ``"0"``.
"""
from __future__ import annotations

from functools import lru_cache


class ZFWordError(ValueError):
    """A word containing ``11`` or a letter other than 0/1."""


_FIBS = [0, 1, 1]


def fib(i: int) -> int:
    """``F_1 = F_2 = 1``, ``F_i = F_{i-1} + F_{i-2}``."""
    if i < 1:
        raise ValueError(f"fib index must be >= 1, got {i}")
    while len(_FIBS) <= i:
        _FIBS.append(_FIBS[-1] + _FIBS[-2])
    return _FIBS[i]


def is_zf_word(word: str) -> bool:
    return bool(word) and set(word) <= {"0", "1"} and "11" not in word


def check_zf_word(word: str) -> str:
    if word == "":
        return "0"
    if not set(word) <= {"0", "1"}:
        raise ZFWordError(f"not a binary word: {word!r}")
    if "11" in word:
        raise ZFWordError(f"{word!r} contains the factor 11")
    return word


def canonical(word: str) -> str:
    return check_zf_word(word).lstrip("0") or "0"


@lru_cache(maxsize=4096)
def zeckendorf(k: int) -> str:
    """Greedy Zeckendorf expansion of ``k >= 0``."""
    if k < 0:
        raise ValueError(f"cannot expand negative {k}")
    if k == 0:
        return "0"
    top = 2
    while fib(top + 1) <= k:
        top += 1
    digits = []
    r = k
    for i in range(top, 1, -1):
        if fib(i) <= r:
            digits.append("1")
            r -= fib(i)
        else:
            digits.append("0")
    return "".join(digits)


def zf_value(word: str) -> int:
    word = check_zf_word(word)
    return sum(fib(pos) for pos, ch in enumerate(reversed(word), start=2) if ch == "1")


def pad(word: str, length: int) -> str:
    return word.rjust(length, "0")


def leading_change_index(m: int) -> int:
    """Largest digit position where the expansions of ``m-1`` and ``m`` differ.

    Positions follow the weights: the rightmost digit is position 2.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    u, v = zeckendorf(m - 1), zeckendorf(m)
    width = max(len(u), len(v))
    u, v = pad(u, width), pad(v, width)
    for idx, (a, b) in enumerate(zip(u, v)):
        if a != b:
            return width - idx + 1
    raise AssertionError("consecutive integers have equal expansions")


def ones(word: str) -> int:
    return word.count("1")
