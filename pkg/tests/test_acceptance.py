"""Acceptance criteria 1-11, exact (zero tolerance) with wall-clock limits.

Each criterion prints one PASS/FAIL line; the lines are also collected into a
summary section at the end of the pytest run.
"""
import itertools
import subprocess
import sys
import time
from contextlib import contextmanager

from hanoifib.core_state import RuleSet
from hanoifib.graycode import (
    classical_gray,
    gray_block_demirror,
    gray_block_mirror,
    gray_list,
    hamming,
)
from hanoifib.numeration import fib, leading_change_index
from hanoifib.solver import (
    direction,
    disk_for_move,
    min_moves,
    mu_letter_by_parity,
    mu_word,
    solve_iterative,
    solve_recursive,
)
from hanoifib.state_graph import (
    build_graph,
    check_somme_mignonne,
    is_strongly_connected,
    k33_minor_f2,
    pseudo_edge_origins,
    pseudo_edge_target,
    variant_move_target,
)
from hanoifib.verify import check, oracle_min_moves

from conftest import ACCEPTANCE_LINES
from oracles import bfs_counts

FIB = RuleSet.fibonacci()
VAR = RuleSet.fibonacci("variant")

TRACE_N5 = [
    "(12345,-,-)", "(2345,-,1)", "(345,12,-)", "(45,1,23)", "(45,-,123)", "(5,34,12)",
    "(15,34,2)", "(5,1234,-)", "(-,123,45)", "(-,23,145)", "(12,3,45)", "(1,-,2345)",
    "(-,-,12345)",
]

TABLE_N6 = [
    "000001", "000010", "000100", "000101", "001001", "001000", "001010",
    "010010", "010000", "010001", "010101", "010100", "100100", "100101",
    "100001", "100000", "100010", "101010", "101000", "101001",
]


@contextmanager
def criterion(number, title, limit=None):
    start = time.perf_counter()
    status, note = "FAIL", ""
    try:
        yield
        elapsed = time.perf_counter() - start
        if limit is not None and elapsed >= limit:
            note = f" over limit {limit}s"
            raise AssertionError(f"criterion {number} took {elapsed:.2f}s (limit {limit}s)")
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - start
        bound = f" < {limit}s" if limit is not None else ""
        line = f"{status} criterion {number:2d}: {title} [{elapsed:.2f}s{bound}]{note}"
        print(line)
        ACCEPTANCE_LINES.append((number, line))


def test_c01_n5_trace():
    with criterion(1, "n=5 trace via the CLI", limit=1.0):
        out = subprocess.run(
            [sys.executable, "-m", "hanoifib", "solve", "-n", "5", "--family", "fibonacci",
             "--style", "original"], capture_output=True, text=True, check=True).stdout
        lines = out.splitlines()
        assert [ln.split()[-1] for ln in lines] == TRACE_N5
        assert len(lines) - 1 == 12


def test_c02_optimal_counts():
    with criterion(2, "optimal counts F(n+2)-1, BFS unique to n=10", limit=30.0):
        for n in range(21):
            assert min_moves(n, FIB) == min_moves(n, VAR) == fib(n + 2) - 1
            assert len(solve_recursive(n)) == fib(n + 2) - 1
        # kernel BFS for every n <= 10, both styles
        r = check("optimality.fibonacci_bfs", {"max_n": 10})
        assert r.passed and r.parameters["max_n"] == 10, r.details
        # and the independent dict-based BFS on the small instances
        for rules in (FIB, VAR):
            for n in range(7):
                assert bfs_counts(n, rules) == (fib(n + 2) - 1, 1)


def test_c03_iterative_equals_recursive():
    with criterion(3, "iterative = recursive, n <= 16, both styles", limit=5.0):
        for rules in (FIB, VAR):
            for n in range(17):
                assert solve_iterative(n, rules).moves == solve_recursive(n, rules).moves


def test_c04_per_disk_counts():
    with criterion(4, "k-move counts F(n+1-k), n <= 16"):
        for n in range(1, 17):
            per = solve_recursive(n).per_disk()
            assert all(per[k] == fib(n + 1 - k) for k in range(1, n + 1))


def test_c05_mu_words():
    with criterion(5, "mu words: trace, recursion, four-factor, balance, parity"):
        d1 = "".join(direction(m.src_x, m.dst) for m in solve_recursive(5).moves if m.k == 1)
        assert mu_word(5) == d1 == "lrrrl"
        star = str.maketrans("lr", "rl")
        for n in range(25):
            w = mu_word(n)
            if n >= 2:
                assert w == (mu_word(n - 1) + mu_word(n - 2)).translate(star)
            if n >= 4:
                assert w == mu_word(n - 2) + mu_word(n - 3) + mu_word(n - 3) + mu_word(n - 4)
            assert w.count("r") - w.count("l") == {0: 0, 1: -1, 2: 1}[n % 3]
            if n >= 1:
                idx = [m for m in range(1, fib(n + 2)) if disk_for_move(m, n) == 1]
                assert "".join(mu_letter_by_parity(m, n) for m in idx) == w


def test_c06_gray_code():
    with criterion(6, "gray code: table, Hamming pattern, demirror, bijection, lower bound",
                   limit=10.0):
        out = subprocess.run([sys.executable, "-m", "hanoifib", "gray", "--n", "6"],
                             capture_output=True, check=True).stdout
        assert out == ("\n".join(TABLE_N6) + "\n").encode()
        words = gray_list(16, pad=False)
        fibs = {fib(k) for k in range(3, 20)}
        for m in range(1, len(words)):
            assert hamming(words[m - 1], words[m]) == (2 if m + 1 in fibs else 1)
        for n in range(2, 17):
            assert gray_block_demirror(n) == gray_block_mirror(n)
        for n in range(1, 17):
            got = gray_list(n, pad=False)
            want = ["1" + "".join(t) for length in range(1, n + 1)
                    for t in itertools.product("01", repeat=length - 1)
                    if "11" not in "1" + "".join(t)]
            assert sorted(got) == sorted(want) and len(set(got)) == len(got)
        r = check("gray.hamming_lower_bound", {"max_len": 5})
        assert r.passed and r.parameters["orderings"] == 1440


def test_c07_graph_structure():
    with criterion(7, "strong connectivity, K3,3 minor, pseudo-edges n <= 8", limit=60.0):
        for rules in (FIB, VAR):
            for n in range(8):
                assert is_strongly_connected(build_graph(n, rules))[0]
        assert k33_minor_f2(FIB) and k33_minor_f2(VAR)
        assert not k33_minor_f2(RuleSet.classical())
        origins = 0
        for n in range(2, 9):
            h = build_graph(n, RuleSet.classical())
            for v, k in pseudo_edge_origins(n):
                origins += 1
                assert pseudo_edge_target(v, k, n, classical=h) == variant_move_target(v, k)
        assert origins > 0


def test_c08_identity():
    with criterion(8, "power-of-two identity n <= 30 with recount"):
        for n in range(31):
            assert check_somme_mignonne(n)
        assert 32 == fib(7) + sum(2 ** k * fib(4 - k) for k in range(4)) == 13 + 19
        assert check("identity.classical_path_recount", {"max_n": 7}).passed


def test_c09_pq_family():
    with criterion(9, "(p,q) recurrence n <= 9, BFS unique n <= 7"):
        for p, q in ((1, 0), (1, 1), (1, 2), (2, 1), (2, 2), (3, 1)):
            rules = RuleSet.pq_rules(p, q)
            m = [len(solve_recursive(n, rules)) for n in range(10)]
            for n in range(10):
                assert m[n] == (m[n - p] if n - p > 0 else 0) + (m[n - p - q] if n - p - q > 0 else 0) + (1 if n else 0)
            for n in range(8):
                assert oracle_min_moves(n, rules) == (m[n], 1)
            if (p, q) == (1, 0):
                assert m == [2 ** n - 1 for n in range(10)]
            if (p, q) == (2, 2):
                assert all(m[2 * n - 1] == m[2 * n] for n in range(1, 5))


def test_c10_tribonacci():
    with criterion(10, "linear restriction: Tribonacci counts, BFS optimal n <= 6"):
        lin = RuleSet.linear_fibonacci()
        seq = [len(solve_recursive(n, lin)) for n in range(9)]
        assert seq[:6] == [0, 2, 5, 10, 20, 38]
        for n in range(3, 9):
            assert seq[n] == seq[n - 1] + seq[n - 2] + seq[n - 3] + 3
        for n in range(7):
            assert bfs_counts(n, lin)[0] == seq[n]


def test_c11_classical():
    with criterion(11, "classical baselines"):
        for n in range(13):
            sol = solve_recursive(n, RuleSet.classical())
            assert len(sol) == 2 ** n - 1
            assert sol.per_disk() == {k: 2 ** (n - k) for k in range(1, n + 1)}
        for n in range(13):
            g = classical_gray(n)
            assert all(hamming(a, b) == 1 for a, b in zip(g, g[1:]))
        for n in range(1, 11):
            moves = solve_recursive(n, RuleSet.classical()).moves
            for i, mv in enumerate(moves):
                a, b = format(i, f"0{n}b"), format(i + 1, f"0{n}b")
                leftmost = next(j for j in range(n) if a[j] != b[j])
                assert n - leftmost == mv.k
        assert leading_change_index(1) == 2
