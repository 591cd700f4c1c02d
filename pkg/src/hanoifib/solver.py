"""Optimal solutions, move counts and the direction words of disk 1."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .core_state import (
    LINEAR,
    Move,
    Peg,
    RuleSet,
    State,
    UnsupportedVariantError,
    apply_move,
    legal_moves,
    third_peg,
)
from .numeration import fib, leading_change_index, ones, zeckendorf


@dataclass(frozen=True)
class Solution:
    rules: RuleSet
    n: int
    moves: tuple[Move, ...]
    states: tuple[State, ...]

    def __post_init__(self) -> None:
        if len(self.states) != len(self.moves) + 1:
            raise ValueError("a solution has one more state than moves")

    def __len__(self) -> int:
        return len(self.moves)

    def per_disk(self) -> dict[int, int]:
        counts = {k: 0 for k in range(1, self.n + 1)}
        for m in self.moves:
            counts[m.k] += 1
        return counts


@dataclass(frozen=True)
class MoveCountTable:
    m: dict[int, int]
    per_disk: dict[int, int]


def _kind(rules: RuleSet) -> str:
    if rules.family == "fibonacci":
        if rules.unrestricted:
            return "fib"
        if rules.peg_digraph == LINEAR and not rules.variant:
            return "linear"
    elif rules.unrestricted:
        return rules.family
    raise UnsupportedVariantError(f"no solver for {rules.describe()} rules")


@lru_cache(maxsize=None)
def _pq_counts(p: int, q: int, n: int) -> tuple[int, ...]:
    m = [0] * (n + 1)
    for i in range(1, n + 1):
        a, b = i - p, i - p - q
        m[i] = (m[a] if a > 0 else 0) + (m[b] if b > 0 else 0) + 1
    return tuple(m)


@lru_cache(maxsize=None)
def _linear_counts(n: int) -> tuple[int, ...]:
    m = [0, 2, 5][: n + 1]
    for i in range(3, n + 1):
        m.append(m[i - 1] + m[i - 2] + m[i - 3] + 3)
    return tuple(m)


def min_moves(n: int, rules: RuleSet) -> int:
    """Minimal number of moves from ``(1..n, -, -)`` to ``(-, -, 1..n)``."""
    if n < 0:
        raise ValueError(f"negative disk count {n}")
    kind = _kind(rules)
    if kind == "classical":
        return 2 ** n - 1
    if kind == "fib":
        return fib(n + 2) - 1
    if kind == "linear":
        return _linear_counts(n)[n]
    return _pq_counts(rules.p, rules.q, n)[n]


def move_count_table(n: int, rules: RuleSet | None = None) -> MoveCountTable:
    """Minimal counts for ``0..n`` and, for fibonacci rules, per-disk counts at ``n``."""
    rules = rules or RuleSet.fibonacci()
    m = {i: min_moves(i, rules) for i in range(n + 1)}
    per_disk = {}
    if _kind(rules) == "fib":
        per_disk = {k: k_move_count(n, k) for k in range(1, n + 1)}
    return MoveCountTable(m, per_disk)


def k_move_count(n: int, k: int) -> int:
    """Number of ``k``-Fibonacci moves in the optimal solution for ``n`` disks."""
    if not 1 <= k <= n:
        raise ValueError(f"disk {k} out of range 1..{n}")
    return fib(n + 1 - k)


class _Recorder:
    def __init__(self, n: int, rules: RuleSet):
        self.rules = rules
        self.state = State.initial(n)
        self.states = [self.state]
        self.moves: list[Move] = []

    def move(self, k: int, x: Peg, y: Peg | None, z: Peg) -> None:
        if self.rules.family == "classical":
            y = None
        move = Move(k, x, y, z, self.rules.move_kind)
        self.state = apply_move(self.state, move, self.rules)
        self.moves.append(move)
        self.states.append(self.state)

    def solution(self) -> Solution:
        return Solution(self.rules, self.state.n, tuple(self.moves), tuple(self.states))


def _fib_tower(rec: _Recorder, j: int, src: Peg, dst: Peg) -> None:
    """Carry the tower ``1..j`` from ``src`` to ``dst``."""
    if j <= 0:
        return
    aux = third_peg(src, dst)
    if j == 1:
        rec.move(1, src, aux, dst)
        return
    _fib_tower(rec, j - 1, src, aux)
    rec.move(j, src, aux, dst)
    # variant moves leave 1..j-2 on src, original leaves them on aux
    _fib_tower(rec, j - 2, src if rec.rules.variant else aux, dst)


def _pq_tower(rec: _Recorder, j: int, src: Peg, dst: Peg) -> None:
    p, q = rec.rules.p, rec.rules.q
    if j <= 0:
        return
    aux = third_peg(src, dst)
    if j <= p:
        rec.move(j, src, aux, dst)
        return
    _pq_tower(rec, j - p, src, aux)
    rec.move(j, src, aux, dst)
    _pq_tower(rec, j - p - q, aux, dst)


@lru_cache(maxsize=None)
def _linear_base(j: int) -> tuple[tuple[int, Peg, Peg, Peg], ...]:
    """Moves carrying ``1..j`` from A to C under linear rules, found by BFS (j <= 2)."""
    from .state_graph import build_graph, shortest_path

    rules = RuleSet.linear_fibonacci()
    g = build_graph(j, rules)
    result = shortest_path(g, State.initial(j), State.final(j))
    return tuple((m.k, m.src_x, m.src_y, m.dst) for m in result.moves)


_MIRROR = {Peg.A: Peg.C, Peg.B: Peg.B, Peg.C: Peg.A}


def _linear_tower(rec: _Recorder, j: int, src: Peg, dst: Peg) -> None:
    """Carry ``1..j`` between the end pegs A and C under linear rules."""
    if j <= 0:
        return
    if j <= 2:
        relabel: Callable[[Peg], Peg] = (lambda p: p) if src == Peg.A else _MIRROR.__getitem__
        for k, x, y, z in _linear_base(j):
            rec.move(k, relabel(x), relabel(y), relabel(z))
        return
    mid = Peg.B
    _linear_tower(rec, j - 1, src, dst)
    # (j, -, 1..j-1) -> (-, {j-1, j}, 1..j-2)
    rec.move(j, src, dst, mid)
    # -> ({j-2, j-1}, j, 1..j-3)
    rec.move(j - 1, mid, dst, src)
    _linear_tower(rec, j - 3, dst, src)
    # (1..j-1, j, -) -> (1..j-2, -, {j-1, j})
    rec.move(j, mid, src, dst)
    _linear_tower(rec, j - 2, src, dst)


def solve_recursive(n: int, rules: RuleSet | None = None) -> Solution:
    """Optimal solution by the recursive decomposition of each rule family."""
    rules = rules or RuleSet.fibonacci()
    if n < 0:
        raise ValueError(f"negative disk count {n}")
    kind = _kind(rules)
    rec = _Recorder(n, rules)
    if kind == "fib":
        _fib_tower(rec, n, Peg.A, Peg.C)
    elif kind == "linear":
        _linear_tower(rec, n, Peg.A, Peg.C)
    else:
        _pq_tower(rec, n, Peg.A, Peg.C)
    return rec.solution()


def disk_for_move(m: int, n: int) -> int:
    """Principal disk of the ``m``-th move of the optimal fibonacci solution."""
    if not 1 <= m <= fib(n + 2) - 1:
        raise ValueError(f"move index {m} out of range for n={n}")
    return leading_change_index(m) - 1


_RIGHT = {(Peg.A, Peg.B), (Peg.B, Peg.C), (Peg.C, Peg.A)}


def direction(src: Peg, dst: Peg) -> str:
    """``r`` for A->B, B->C, C->A; ``l`` otherwise."""
    return "r" if (src, dst) in _RIGHT else "l"


def _star(word: str) -> str:
    return word.translate(str.maketrans("lr", "rl"))


@lru_cache(maxsize=None)
def mu_word(n: int, style: str = "original") -> str:
    """Directions of the disk-1 moves in the optimal fibonacci solution.

    Original style obeys ``mu_n = (mu_{n-1} mu_{n-2})*``; in the variant the
    second subtower starts on A instead of B, so its word is not starred.
    """
    if n < 0:
        raise ValueError(f"negative disk count {n}")
    if n == 0:
        return ""
    if n == 1:
        return "l"
    if style == "variant":
        return _star(mu_word(n - 1, style)) + mu_word(n - 2, style)
    return _star(mu_word(n - 1) + mu_word(n - 2))


@lru_cache(maxsize=None)
def _parity_calibration(n_parity: int) -> int:
    """Popcount parity of the first move's index that yields ``r`` for this n-parity.

    Read off the recursive solver for the smallest instance of that parity.
    """
    n = 2 if n_parity == 0 else 1
    first = solve_recursive(n).moves[0]
    letter = direction(first.src_x, first.dst)
    pc = ones(zeckendorf(1)) % 2
    return pc if letter == "r" else 1 - pc


def mu_letter_by_parity(m: int, n: int) -> str:
    """Direction of the disk-1 move at global move index ``m``.

    The direction depends only on the parity of the number of 1s in the
    Zeckendorf expansion of ``m`` and on the parity of ``n``.
    """
    if disk_for_move(m, n) != 1:
        raise ValueError(f"move {m} for n={n} does not move disk 1 alone")
    r_parity = _parity_calibration(n % 2)
    return "r" if ones(zeckendorf(m)) % 2 == r_parity else "l"


def _variant_letter(n: int) -> str:
    # every disk-1 move goes the same way: l for odd n, r for even n
    return "l" if n % 2 else "r"


_TURN = {"r": {Peg.A: Peg.B, Peg.B: Peg.C, Peg.C: Peg.A},
         "l": {Peg.A: Peg.C, Peg.C: Peg.B, Peg.B: Peg.A}}


def solve_iterative(n: int, rules: RuleSet | None = None) -> Solution:
    """Optimal fibonacci solution driven by Zeckendorf expansions of move indices."""
    rules = rules or RuleSet.fibonacci()
    if rules.family != "fibonacci" or not rules.unrestricted:
        raise UnsupportedVariantError("the iterative solver needs unrestricted fibonacci rules")
    state = State.initial(n)
    states = [state]
    moves: list[Move] = []
    letters = []
    for m in range(1, fib(n + 2)):
        k = disk_for_move(m, n)
        if k == 1:
            letter = _variant_letter(n) if rules.variant else mu_letter_by_parity(m, n)
            x = state.peg_of(1)
            z = _TURN[letter][x]
            move = Move(1, x, third_peg(x, z), z, "fib")
            letters.append(letter)
        else:
            options = [mv for mv in legal_moves(state, rules) if mv.k == k]
            assert len(options) == 1, f"expected one {k}-Fibonacci move at step {m}, got {options}"
            move = options[0]
        state = apply_move(state, move, rules)
        moves.append(move)
        states.append(state)
    assert "".join(letters) == mu_word(n, rules.style), "disk-1 directions drifted from mu"
    return Solution(rules, n, tuple(moves), tuple(states))
