"""Disks, pegs, states and the move rules of every puzzle variant.

A state is an ordered 3-partition of the disks ``1..n`` over pegs A, B, C.
Disks on a peg are always stacked by radius, so a peg is just a set.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from typing import Iterable, Optional


class StructureError(ValueError):
    """A state that is not an ordered 3-partition of ``1..n``."""


class IllegalMoveError(ValueError):
    """A move that the rule set does not allow from the given state."""


class UnsupportedVariantError(ValueError):
    """A rule combination for which no solver or count is known."""


class Peg(IntEnum):
    A = 0
    B = 1
    C = 2

    def __str__(self) -> str:
        return self.name


PEGS = (Peg.A, Peg.B, Peg.C)


def third_peg(x: Peg, y: Peg) -> Peg:
    return Peg(3 - x - y)


def disk_range(lo: int, hi: int) -> frozenset[int]:
    """The disks ``lo..hi``; empty when ``lo > hi``, and ``lo`` is clamped to 1."""
    return frozenset(range(max(lo, 1), hi + 1))


def tower(n: int) -> frozenset[int]:
    return disk_range(1, n)


ALL_PAIRS = frozenset((x, y) for x in PEGS for y in PEGS if x != y)
LINEAR = frozenset({(Peg.A, Peg.B), (Peg.B, Peg.A), (Peg.B, Peg.C), (Peg.C, Peg.B)})
CLOCKWISE = frozenset({(Peg.A, Peg.B), (Peg.B, Peg.C), (Peg.C, Peg.A)})

RESTRICTIONS = {"none": ALL_PAIRS, "linear": LINEAR, "clockwise": CLOCKWISE}


def _fmt_peg(disks: frozenset[int], sep: str) -> str:
    return sep.join(str(d) for d in sorted(disks)) if disks else "-"


@dataclass(frozen=True)
class State:
    """A regular state: three disjoint disk sets covering ``1..n``."""

    n: int
    pegs: tuple[frozenset[int], frozenset[int], frozenset[int]]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise StructureError(f"negative disk count {self.n}")
        if len(self.pegs) != 3:
            raise StructureError("a state needs exactly three pegs")
        pegs = tuple(frozenset(p) for p in self.pegs)
        object.__setattr__(self, "pegs", pegs)
        a, b, c = pegs
        if a & b or a & c or b & c:
            raise StructureError(f"pegs overlap: {self}")
        if a | b | c != tower(self.n):
            raise StructureError(f"pegs do not hold exactly disks 1..{self.n}: {self}")

    @classmethod
    def initial(cls, n: int, peg: Peg = Peg.A) -> "State":
        pegs = [frozenset(), frozenset(), frozenset()]
        pegs[peg] = tower(n)
        return cls(n, tuple(pegs))

    @classmethod
    def final(cls, n: int) -> "State":
        return cls.initial(n, Peg.C)

    @classmethod
    def from_assignment(cls, assignment: Iterable[int]) -> "State":
        """Build from the peg index of disk 1, disk 2, ..."""
        assignment = list(assignment)
        pegs: list[set[int]] = [set(), set(), set()]
        for disk, peg in enumerate(assignment, start=1):
            pegs[peg].add(disk)
        return cls(len(assignment), tuple(frozenset(p) for p in pegs))

    @classmethod
    def from_code(cls, code: int, n: int) -> "State":
        """Inverse of :meth:`code` (ternary, disk 1 least significant)."""
        assignment = []
        for _ in range(n):
            code, peg = divmod(code, 3)
            assignment.append(peg)
        if code:
            raise StructureError(f"code out of range for n={n}")
        return cls.from_assignment(assignment)

    @classmethod
    def parse(cls, text: str) -> "State":
        """Parse ``"2345,-,1"`` or ``"(2345,∅,1)"``. Space-separated radii are accepted."""
        body = text.strip().strip("()")
        parts = body.split(",") if "," in body else body.split("|")
        if len(parts) != 3:
            raise StructureError(f"cannot parse state {text!r}")
        pegs = []
        for part in parts:
            part = part.strip()
            if part in ("", "-", "∅"):
                pegs.append(frozenset())
            elif " " in part:
                pegs.append(frozenset(int(t) for t in part.split()))
            else:
                pegs.append(frozenset(int(ch) for ch in part))
        n = sum(len(p) for p in pegs)
        return cls(n, tuple(pegs))

    def assignment(self) -> tuple[int, ...]:
        where = [0] * self.n
        for peg, disks in enumerate(self.pegs):
            for d in disks:
                where[d - 1] = peg
        return tuple(where)

    def code(self) -> int:
        value = 0
        for peg in reversed(self.assignment()):
            value = value * 3 + peg
        return value

    def peg_of(self, disk: int) -> Peg:
        for peg, disks in zip(PEGS, self.pegs):
            if disk in disks:
                return peg
        raise StructureError(f"disk {disk} not in state")

    def top(self, peg: Peg) -> Optional[int]:
        disks = self.pegs[peg]
        return min(disks) if disks else None

    def label(self, sep: str = "|") -> str:
        """Peg contents joined by ``sep``; radii are space-joined once n >= 10."""
        inner = " " if self.n >= 10 else ""
        return sep.join(_fmt_peg(p, inner) for p in self.pegs)

    def __str__(self) -> str:
        return "(" + self.label(",") + ")"


@dataclass(frozen=True)
class RuleSet:
    """Which moves are legal.

    ``family`` is ``classical``, ``fibonacci`` or ``pq``. ``style`` only matters
    for fibonacci: ``original`` leaves the remainder tower on the supplying peg,
    ``variant`` carries it over to the principal disk's old peg.
    ``peg_digraph`` restricts the principal disk's trajectory only.
    """

    family: str = "fibonacci"
    style: str = "original"
    p: int = 1
    q: int = 1
    peg_digraph: frozenset = field(default=ALL_PAIRS)

    def __post_init__(self) -> None:
        if self.family == "classical":
            object.__setattr__(self, "p", 1)
            object.__setattr__(self, "q", 0)
        elif self.family == "fibonacci":
            object.__setattr__(self, "p", 1)
            object.__setattr__(self, "q", 1)
        elif self.family == "pq":
            if self.p < 1 or self.q < 0:
                raise ValueError(f"pq rules need p >= 1 and q >= 0, got ({self.p}, {self.q})")
        else:
            raise ValueError(f"unknown rule family {self.family!r}")
        if self.style not in ("original", "variant"):
            raise ValueError(f"unknown style {self.style!r}")
        if self.style == "variant" and self.family != "fibonacci":
            raise ValueError("the variant style is only defined for fibonacci moves")
        digraph = frozenset((Peg(x), Peg(y)) for x, y in self.peg_digraph)
        if any(x == y for x, y in digraph):
            raise ValueError("peg digraph may not contain loops")
        object.__setattr__(self, "peg_digraph", digraph)

    @classmethod
    def classical(cls, restrict: str = "none") -> "RuleSet":
        return cls("classical", peg_digraph=RESTRICTIONS[restrict])

    @classmethod
    def fibonacci(cls, style: str = "original", restrict: str = "none") -> "RuleSet":
        return cls("fibonacci", style, peg_digraph=RESTRICTIONS[restrict])

    @classmethod
    def pq_rules(cls, p: int, q: int, restrict: str = "none") -> "RuleSet":
        return cls("pq", "original", p, q, peg_digraph=RESTRICTIONS[restrict])

    @classmethod
    def linear_fibonacci(cls) -> "RuleSet":
        return cls.fibonacci("original", "linear")

    @property
    def variant(self) -> bool:
        return self.style == "variant"

    @property
    def unrestricted(self) -> bool:
        return self.peg_digraph == ALL_PAIRS

    @property
    def move_kind(self) -> str:
        return {"classical": "single", "fibonacci": "fib", "pq": "pq"}[self.family]

    def digraph_mask(self) -> int:
        """Bit ``3*x + y`` is set when the principal disk may go from x to y."""
        mask = 0
        for x, y in self.peg_digraph:
            mask |= 1 << (3 * x + y)
        return mask

    def describe(self) -> str:
        if self.family == "pq":
            base = f"pq({self.p},{self.q})"
        elif self.family == "fibonacci":
            base = f"fibonacci/{self.style}"
        else:
            base = "classical"
        for name, pairs in RESTRICTIONS.items():
            if pairs == self.peg_digraph:
                return base if name == "none" else f"{base}+{name}"
        return base + "+custom"


@dataclass(frozen=True)
class Move:
    """A legal transition.

    ``k`` is the principal disk (the largest one moved). ``src_x`` holds it,
    ``src_y`` is the peg supplying the lower tower (``None`` for classical
    single-disk moves), and ``dst`` receives the moved disks.
    """

    k: int
    src_x: Peg
    src_y: Optional[Peg]
    dst: Peg
    kind: str = "fib"

    def __post_init__(self) -> None:
        if self.src_x == self.dst:
            raise ValueError("a move needs distinct source and destination pegs")
        if self.src_y is not None and self.src_y in (self.src_x, self.dst):
            raise ValueError("the supplying peg must be the third peg")

    def key(self) -> tuple:
        return (self.k, self.src_x, self.src_y, self.dst)

    def __str__(self) -> str:
        tag = {"single": "d", "fib": "F", "pq": "P"}.get(self.kind, "?")
        return f"{tag}{self.k} {self.src_x.name}->{self.dst.name}"


def _candidate_moves(state: State, rules: RuleSet) -> list[Move]:
    """All moves matching the definition, before the peg restriction."""
    p, q = rules.p, rules.q
    kind = rules.move_kind
    found = []
    for k in range(1, state.n + 1):
        x = state.peg_of(k)
        run = disk_range(k - p + 1, k)
        if not run <= state.pegs[x]:
            continue
        # the run must be the top of X: no smaller disk above it
        if any(d < min(run) for d in state.pegs[x]):
            continue
        lower = tower(k - p)
        if lower:
            y = state.peg_of(1)
            if y == x or not lower <= state.pegs[y]:
                continue
            ys = [y]
        else:
            ys = [peg for peg in PEGS if peg != x]
        for y in ys:
            z = third_peg(x, y)
            if any(d < k for d in state.pegs[z]):
                continue
            src_y = None if rules.family == "classical" else y
            found.append(Move(k, x, src_y, z, kind))
    return found


def legal_moves(state: State, rules: RuleSet) -> list[Move]:
    """Moves legal from ``state``, ordered by principal disk then destination."""
    if state.n and state.pegs[0] | state.pegs[1] | state.pegs[2] != tower(state.n):
        raise StructureError(f"invalid state {state}")
    moves = [m for m in _candidate_moves(state, rules) if (m.src_x, m.dst) in rules.peg_digraph]
    moves.sort(key=lambda m: (m.k, m.dst))
    return moves


def _why_illegal(state: State, move: Move, rules: RuleSet) -> str:
    p = rules.p
    k = move.k
    if move.kind != rules.move_kind:
        return f"move kind {move.kind!r} does not belong to {rules.describe()} rules"
    if not 1 <= k <= state.n:
        return f"disk {k} does not exist"
    if state.peg_of(k) != move.src_x:
        return f"disk {k} is not on peg {move.src_x.name}"
    run = disk_range(k - p + 1, k)
    if not run <= state.pegs[move.src_x] or any(d < min(run) for d in state.pegs[move.src_x]):
        return f"peg {move.src_x.name} is not topped by disks {sorted(run)}"
    if tower(k - p) and move.src_y is not None and not tower(k - p) <= state.pegs[move.src_y]:
        return f"peg {move.src_y.name} is not topped by the tower 1..{k - p}"
    if (move.src_x, move.dst) not in rules.peg_digraph:
        return f"disk {k} may not travel {move.src_x.name}->{move.dst.name}"
    return "move does not match any legal move"


def apply_move(state: State, move: Move, rules: RuleSet) -> State:
    """Return the successor of ``state`` under ``move``.

    Raises :class:`IllegalMoveError` naming the violated condition.
    """
    legal = {m.key(): m for m in legal_moves(state, rules)}
    if move.key() not in legal or move.kind != rules.move_kind:
        raise IllegalMoveError(_why_illegal(state, move, rules))
    k, p, q = move.k, rules.p, rules.q
    moved = disk_range(k - p + 1 - q, k)
    remainder = tower(k - p - q)
    pegs = [set(d) for d in state.pegs]
    for peg in pegs:
        peg -= moved
    pegs[move.dst] |= moved
    if rules.variant and remainder and move.src_y is not None:
        pegs[move.src_y] -= remainder
        pegs[move.src_x] |= remainder
    return State(state.n, tuple(frozenset(p) for p in pegs))


def successors(state: State, rules: RuleSet) -> list[tuple[Move, State]]:
    return [(m, apply_move(state, m, rules)) for m in legal_moves(state, rules)]


def all_states(n: int) -> Iterable[State]:
    """Every regular state, in ternary-code order."""
    for code in range(3 ** n):
        yield State.from_code(code, n)
