"""Gray-like code on ZF-words and the reflected binary Gray code.

Blocks ``N_n`` hold the ZF-words of length ``n`` that start with ``1``; their
concatenation ``N_1 + N_2 + ...`` lists every nonzero ZF-word once.
"""
from __future__ import annotations

from functools import lru_cache

from .numeration import fib


def _rev(words):
    return tuple(reversed(words))


@lru_cache(maxsize=None)
def gray_block_mirror(n: int) -> tuple[str, ...]:
    """``N_n = 10 rev(N'_{n-1}) + 10 rev(N_{n-2})`` where ``'`` drops the first letter."""
    if n < 0:
        raise ValueError(f"negative block index {n}")
    if n == 0:
        return ()
    if n == 1:
        return ("1",)
    head = ["10" + w[1:] for w in _rev(gray_block_mirror(n - 1))]
    tail = ["10" + w for w in _rev(gray_block_mirror(n - 2))]
    return tuple(head + tail)


def gray_list(n: int, pad: bool = True, method: str = "mirror") -> list[str]:
    """Words ``g_1 .. g_{F_{n+2}-1}``, left-padded with zeros to length ``n``."""
    if n < 1:
        raise ValueError(f"gray_list needs n >= 1, got {n}")
    block = {"mirror": gray_block_mirror, "demirror": gray_block_demirror}[method]
    words = []
    for i in range(1, n + 1):
        words.extend(gray_block_mirror(i) if i < 2 else block(i))
    return [w.rjust(n, "0") for w in words] if pad else words


def _sigma_fixed_point(length: int) -> str:
    """Prefix of the fixed point of a -> ab, b -> a."""
    word = "a"
    while len(word) < length:
        word = "".join("ab" if ch == "a" else "a" for ch in word)
    return word[:length]


def tau_prefix(length: int) -> str:
    """``tau_1 .. tau_length``: ``tau_1 = 1``, ``tau_i = 1`` iff sigma_{floor(i/2)-1} = b."""
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    sigma = _sigma_fixed_point(length // 2 + 1)
    return "1" + "".join("1" if sigma[i // 2 - 1] == "b" else "0" for i in range(2, length + 1))


@lru_cache(maxsize=None)
def gray_block_demirror(n: int) -> tuple[str, ...]:
    """Block ``N_n`` grown from ``N_2 = (10,)`` without any reversal.

    Each word of the previous block is kept once if it ends with 1 and twice
    otherwise; the word at global index ``i`` then gets the digit ``tau_i``.
    """
    if n < 2:
        raise ValueError(f"demirror construction starts at n = 2, got {n}")
    if n == 2:
        return ("10",)
    prev = gray_block_demirror(n - 1)
    doubled = []
    for w in prev:
        doubled.append(w)
        if w.endswith("0"):
            doubled.append(w)
    start = fib(n + 1)
    tau = tau_prefix(start + len(doubled) - 1)
    block = tuple(w + tau[start + j - 1] for j, w in enumerate(doubled))
    for w in block:
        assert "11" not in w, f"demirrored word {w} is not a ZF-word"
    return block


def q_offset(words: tuple[str, ...], m: int) -> int | None:
    """Smallest-magnitude ``q`` in -2..2 with ``words[m+q]`` ending in 1.

    Returns ``None`` when no such offset exists or when ``-|q|`` and ``+|q|``
    both qualify.
    """
    for size in range(3):
        hits = [q for q in {-size, size} if 0 <= m + q < len(words) and words[m + q].endswith("1")]
        if len(hits) == 1:
            return hits[0]
        if len(hits) > 1:
            return None
    return None


def gray_block_by_offsets(n: int) -> tuple[str, ...]:
    """Block ``N_n`` (n >= 4) built from ``N_{n-1}`` through the offset rule."""
    if n < 4:
        raise ValueError("the offset rule applies from n = 4")
    prev = gray_block_mirror(n - 1)
    out = []
    for m, w in enumerate(prev):
        q = q_offset(prev, m)
        if q is None:
            raise AssertionError(f"offset undefined at m={m} in N_{n - 1}")
        if q == 0:
            out.append(w + "0")
        elif q in (-1, 2):
            out.extend((w + "0", w + "1"))
        else:
            out.extend((w + "1", w + "0"))
    return tuple(out)


def hamming(w: str, v: str) -> int:
    """Differing positions after right-aligning with leading zeros."""
    width = max(len(w), len(v))
    return sum(a != b for a, b in zip(w.rjust(width, "0"), v.rjust(width, "0")))


def classical_gray(n: int) -> list[str]:
    """Reflected binary Gray code on ``n`` bits (``[""]`` for ``n = 0``)."""
    if n < 0:
        raise ValueError(f"negative length {n}")
    words = [""]
    for _ in range(n):
        words = ["0" + w for w in words] + ["1" + w for w in reversed(words)]
    return words
