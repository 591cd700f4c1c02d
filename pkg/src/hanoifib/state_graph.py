"""The directed graph of all 3^n states, its structure and its drawing.

Vertex ``i`` is the state whose ternary code is ``i`` (disk 1 least
significant), so vertex order is deterministic and compact.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple, Optional

import numpy as np

from . import kernels
from .core_state import PEGS, Move, Peg, RuleSet, State, apply_move, legal_moves
from .numeration import fib

DEFAULT_CAP = 3 ** 10


class ResourceCapError(RuntimeError):
    """The requested graph exceeds the enumeration cap."""


@dataclass(frozen=True, eq=False)
class StateGraph:
    n: int
    rules: RuleSet
    indptr: np.ndarray
    targets: np.ndarray
    ks: np.ndarray
    xs: np.ndarray
    ys: np.ndarray
    zs: np.ndarray

    @property
    def num_vertices(self) -> int:
        return len(self.indptr) - 1

    @property
    def num_edges(self) -> int:
        return len(self.targets)

    def vertex(self, state: State) -> int:
        if state.n != self.n:
            raise ValueError(f"state has {state.n} disks, graph has {self.n}")
        return state.code()

    def state(self, v: int) -> State:
        return State.from_code(int(v), self.n)

    def vertices(self) -> Iterator[State]:
        for v in range(self.num_vertices):
            yield self.state(v)

    def move(self, e: int) -> Move:
        y: Optional[Peg] = Peg(int(self.ys[e]))
        if self.rules.family == "classical":
            y = None
        return Move(int(self.ks[e]), Peg(int(self.xs[e])), y, Peg(int(self.zs[e])),
                    self.rules.move_kind)

    def out_edges(self, v: int) -> Iterator[tuple[Move, int]]:
        for e in range(self.indptr[v], self.indptr[v + 1]):
            yield self.move(e), int(self.targets[e])

    def edges(self) -> Iterator[tuple[int, Move, int]]:
        for v in range(self.num_vertices):
            for move, w in self.out_edges(v):
                yield v, move, w

    def edge_set(self) -> set[tuple[int, int]]:
        src = np.repeat(np.arange(self.num_vertices), np.diff(self.indptr))
        return set(zip(src.tolist(), self.targets.tolist()))


def build_graph(n: int, rules: RuleSet, cap: int = DEFAULT_CAP) -> StateGraph:
    if n < 0:
        raise ValueError(f"negative disk count {n}")
    if 3 ** n > cap:
        raise ResourceCapError(f"3^{n} states exceed the cap of {cap}")
    arrays = kernels.build_csr(n, rules.p, rules.q, rules.variant, rules.digraph_mask())
    return StateGraph(n, rules, *arrays)


class PathResult(NamedTuple):
    distance: Optional[int]
    count: int
    path: tuple[State, ...]
    moves: tuple[Move, ...]


def shortest_path(g: StateGraph, s: State, t: State) -> PathResult:
    """BFS distance, exact number of shortest paths, and one witness.

    The witness walks back through the smallest predecessor at each layer.
    An unreachable target gives ``distance=None`` and ``count=0``.
    """
    src, dst = g.vertex(s), g.vertex(t)
    dist, pred, counts = kernels.bfs(g.indptr, g.targets, src)
    if dist[dst] < 0:
        return PathResult(None, 0, (), ())
    chain = [dst]
    while chain[-1] != src:
        chain.append(int(pred[chain[-1]]))
    chain.reverse()
    moves = []
    for u, w in zip(chain, chain[1:]):
        # smallest-ordered edge u -> w
        moves.append(next(m for m, x in g.out_edges(u) if x == w))
    return PathResult(int(dist[dst]), counts[dst], tuple(g.state(v) for v in chain), tuple(moves))


def scc_count(g: StateGraph) -> int:
    return kernels.scc_labels(g.indptr, g.targets)[1]


def is_strongly_connected(g: StateGraph) -> tuple[bool, int]:
    count = scc_count(g)
    return count == 1, count


_V_PRIME = ((frozenset({1, 2}), frozenset(), frozenset()),
            (frozenset(), frozenset({1, 2}), frozenset()),
            (frozenset(), frozenset(), frozenset({1, 2})))
_MERGED = (
    ("a", ("-,1,2", "-,2,1")),
    ("b", ("1,-,2", "2,-,1")),
    ("c", ("1,2,-", "2,1,-")),
)


def k33_minor_f2(rules: RuleSet | None = None) -> bool:
    """Contract the three vertex pairs of the 2-disk graph and test for K3,3.

    True when every merged vertex is joined (in either direction) to each of
    the three one-peg towers.
    """
    rules = rules or RuleSet.fibonacci()
    g = build_graph(2, rules)
    cls = {}
    for name, members in _MERGED:
        for text in members:
            cls[g.vertex(State.parse(text))] = name
    for v in range(g.num_vertices):
        cls.setdefault(v, v)
    contracted = set()
    for u, w in g.edge_set():
        a, b = cls[u], cls[w]
        if a != b:
            contracted.add(frozenset((a, b)))
    towers = [g.vertex(State(2, pegs)) for pegs in _V_PRIME]
    return all(frozenset((name, t)) in contracted for name, _ in _MERGED for t in towers)


_CORNER = {Peg.A: (0, 0), Peg.B: (2, 0), Peg.C: (1, 1)}


def embed(s: State) -> tuple[int, int]:
    """Sierpinski-style integer coordinates; ``y`` is in units of sqrt(3).

    The largest disk picks a corner of the current triangle, and the two other
    pegs swap roles for the disks below it.
    """
    relabel = {peg: peg for peg in PEGS}
    x = y = 0
    where = s.assignment()
    for k in range(s.n, 0, -1):
        v = relabel[Peg(where[k - 1])]
        cx, cy = _CORNER[v]
        x += cx << (k - 1)
        y += cy << (k - 1)
        a, b = (p for p in PEGS if p != v)
        swap = {a: b, b: a, v: v}
        relabel = {peg: swap[relabel[peg]] for peg in PEGS}
    return x, y


@lru_cache(maxsize=4)
def _coords(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(embed(State.from_code(code, n)) for code in range(3 ** n))


def pseudo_edge_origins(n: int) -> Iterator[tuple[State, int]]:
    """States with a legal k-Fibonacci move for some k >= 2, with that k."""
    rules = RuleSet.fibonacci("variant")
    for code in range(3 ** n):
        for k, *_ in kernels.successors(code, n, 1, 1, True, rules.digraph_mask()):
            if k >= 2:
                yield State.from_code(code, n), k


def pseudo_edge_target(v: State, k: int, n: int | None = None,
                       classical: StateGraph | None = None) -> State:
    """Follow the classical d_k edge at ``v`` in a straight line for 2^(k-2)+1 steps."""
    n = v.n if n is None else n
    if k < 2:
        raise ValueError("pseudo-edges start at k = 2")
    g = classical if classical is not None else build_graph(n, RuleSet.classical())
    start = g.vertex(v)
    first = [w for m, w in g.out_edges(start) if m.k == k]
    if len(first) != 1:
        raise AssertionError(f"{v} has no unique classical d_{k} edge")
    coords = _coords(n)
    here = coords[start]
    nxt = first[0]
    there = coords[nxt]
    dx, dy = there[0] - here[0], there[1] - here[1]
    cur = nxt
    for _ in range(2 ** (k - 2)):
        p = coords[cur]
        ahead = []
        for e in range(g.indptr[cur], g.indptr[cur + 1]):
            w = int(g.targets[e])
            qx, qy = coords[w]
            ex, ey = qx - p[0], qy - p[1]
            # exact test: parallel and pointing the same way (y scaled by sqrt 3)
            if ex * dy - ey * dx == 0 and ex * dx + 3 * ey * dy > 0:
                ahead.append(w)
        if len(ahead) != 1:
            raise AssertionError(f"no unique straight continuation at {g.state(cur)}")
        cur = ahead[0]
    return g.state(cur)


def variant_move_target(v: State, k: int) -> State:
    rules = RuleSet.fibonacci("variant")
    (move,) = [m for m in legal_moves(v, rules) if m.k == k]
    return apply_move(v, move, rules)


def check_somme_mignonne(n: int) -> bool:
    """2^n = F_{n+2} + sum_{k=0}^{n-2} 2^k F_{n-1-k}, plus a re-count of 2^n.

    The re-count tallies the classical optimal path as the fibonacci solution
    with each k-move (k >= 2) stretched into a straight run of 2^(k-2)+1
    classical moves.
    """
    if n < 0:
        raise ValueError(f"negative disk count {n}")
    from .solver import k_move_count

    lhs = 2 ** n
    rhs = fib(n + 2) + sum(2 ** k * fib(n - 1 - k) for k in range(0, n - 1))
    recount = 1 + sum(k_move_count(n, k) * (1 if k == 1 else 2 ** (k - 2) + 1)
                      for k in range(1, n + 1))
    return lhs == rhs == recount


def export_dot(g: StateGraph, with_coords: bool = False) -> str:
    """Deterministic Graphviz text: one node line per state, one edge line per move."""
    name = {"classical": "H", "fibonacci": "F", "pq": "P"}[g.rules.family]
    lines = [f'digraph {name}{g.n} {{',
             f'  graph [rules="{g.rules.describe()}"];']
    scale = 2 * max(2 ** g.n - 1, 1)
    for v in range(g.num_vertices):
        s = g.state(v)
        attrs = f'label="{s.label()}"'
        if with_coords:
            x, y = embed(s)
            attrs += f', pos="{x / scale:.6f},{y * 3 ** 0.5 / scale:.6f}!"'
        lines.append(f"  s{v} [{attrs}];")
    for v, move, w in g.edges():
        lines.append(f'  s{v} -> s{w} [kind="{move.kind}", k={move.k}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def count_dot(text: str) -> tuple[int, int]:
    """Node and edge line counts of a DOT text produced by :func:`export_dot`."""
    body = [ln.strip() for ln in text.splitlines()]
    edges = sum(1 for ln in body if "->" in ln)
    nodes = sum(1 for ln in body if ln.startswith("s") and "->" not in ln)
    return nodes, edges
