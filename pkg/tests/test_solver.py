import pytest

from hanoifib.core_state import RuleSet, State, UnsupportedVariantError, apply_move
from hanoifib.numeration import fib
from hanoifib.solver import (
    direction,
    disk_for_move,
    k_move_count,
    min_moves,
    move_count_table,
    mu_letter_by_parity,
    mu_word,
    solve_iterative,
    solve_recursive,
)

from oracles import bfs_counts

FIB = RuleSet.fibonacci()
VAR = RuleSet.fibonacci("variant")

TRACE_N5 = [
    "(12345,-,-)", "(2345,-,1)", "(345,12,-)", "(45,1,23)", "(45,-,123)", "(5,34,12)",
    "(15,34,2)", "(5,1234,-)", "(-,123,45)", "(-,23,145)", "(12,3,45)", "(1,-,2345)",
    "(-,-,12345)",
]


def test_n5_trace():
    sol = solve_recursive(5)
    assert [str(s) for s in sol.states] == TRACE_N5
    assert len(sol) == 12


def test_n0_is_empty():
    sol = solve_recursive(0)
    assert sol.moves == () and len(sol.states) == 1


def test_solution_replays(any_rules):
    try:
        sol = solve_recursive(6, any_rules)
    except UnsupportedVariantError:
        pytest.skip("no solver for this family")
    s = State.initial(6)
    for m, t in zip(sol.moves, sol.states[1:]):
        s = apply_move(s, m, any_rules)
        assert s == t
    assert s == State.final(6)
    assert len(sol) == min_moves(6, any_rules)


@pytest.mark.parametrize("n", range(0, 21))
def test_fibonacci_count_formula(n):
    assert len(solve_recursive(n)) == fib(n + 2) - 1


@pytest.mark.parametrize("rules", [FIB, VAR], ids=["original", "variant"])
@pytest.mark.parametrize("n", range(0, 8))
def test_fibonacci_optimal_and_unique_by_bfs(rules, n):
    assert bfs_counts(n, rules) == (fib(n + 2) - 1, 1)


@pytest.mark.parametrize("rules", [FIB, VAR], ids=["original", "variant"])
def test_iterative_equals_recursive(rules):
    for n in range(17):
        it, rec = solve_iterative(n, rules), solve_recursive(n, rules)
        assert it.moves == rec.moves
        assert it.states == rec.states


def test_iterative_rejects_other_families():
    with pytest.raises(UnsupportedVariantError):
        solve_iterative(3, RuleSet.classical())
    with pytest.raises(UnsupportedVariantError):
        solve_iterative(3, RuleSet.linear_fibonacci())


def test_per_disk_counts():
    for n in range(1, 17):
        per = solve_recursive(n).per_disk()
        assert per == {k: fib(n + 1 - k) for k in range(1, n + 1)}
        assert per == {k: k_move_count(n, k) for k in range(1, n + 1)}


def test_k_move_count_examples():
    assert k_move_count(5, 1) == 5
    assert k_move_count(5, 5) == 1


def test_move_count_table():
    t = move_count_table(6)
    assert t.m == {i: fib(i + 2) - 1 for i in range(7)}
    assert sum(t.per_disk.values()) == t.m[6]


def test_disk_for_move_examples():
    assert disk_for_move(5, 5) == 4
    assert disk_for_move(8, 5) == 5


def test_disk_for_move_matches_solution():
    for n in range(1, 13):
        sol = solve_recursive(n)
        assert [disk_for_move(i, n) for i in range(1, len(sol) + 1)] == [m.k for m in sol.moves]


def test_mu_words_match_solution():
    for style, rules in (("original", FIB), ("variant", VAR)):
        for n in range(1, 17):
            word = "".join(direction(m.src_x, m.dst) for m in solve_recursive(n, rules).moves
                           if m.k == 1)
            assert word == mu_word(n, style)


def test_mu_5():
    assert mu_word(5) == "lrrrl"


def test_mu_recurrence_up_to_24():
    star = str.maketrans("lr", "rl")
    assert mu_word(1) == "l" and mu_word(2) == "r"
    for n in range(3, 25):
        assert mu_word(n) == (mu_word(n - 1) + mu_word(n - 2)).translate(star)
        assert len(mu_word(n)) == fib(n)


def test_variant_direction_is_constant():
    for n in range(1, 15):
        assert set(mu_word(n, "variant")) == {"l" if n % 2 else "r"}


def test_parity_letters_n5():
    assert [mu_letter_by_parity(m, 5) for m in (1, 4, 12)] == ["l", "r", "l"]


def test_parity_rule_up_to_24():
    for n in range(1, 25):
        idx = [m for m in range(1, fib(n + 2)) if disk_for_move(m, n) == 1]
        assert "".join(mu_letter_by_parity(m, n) for m in idx) == mu_word(n)


def test_parity_rejects_non_disk1():
    with pytest.raises(ValueError):
        mu_letter_by_parity(5, 5)


def test_classical_baseline():
    for n in range(0, 15):
        sol = solve_recursive(n, RuleSet.classical())
        assert len(sol) == 2 ** n - 1
        assert sol.per_disk() == {k: 2 ** (n - k) for k in range(1, n + 1)}
    for n in range(0, 7):
        assert bfs_counts(n, RuleSet.classical()) == (2 ** n - 1, 1)


PQ_PAIRS = [(1, 0), (1, 1), (1, 2), (2, 1), (2, 2), (3, 1)]


def _pq_oracle(p, q, n):
    # M_n = M_{n-p} + M_{n-p-q} + 1, with M_j = 0 for j <= 0
    memo = {}

    def m(i):
        if i <= 0:
            return 0
        if i not in memo:
            memo[i] = m(i - p) + m(i - p - q) + 1
        return memo[i]
    return m(n)


@pytest.mark.parametrize("p,q", PQ_PAIRS)
def test_pq_counts(p, q):
    rules = RuleSet.pq_rules(p, q)
    for n in range(10):
        assert len(solve_recursive(n, rules)) == min_moves(n, rules) == _pq_oracle(p, q, n)


@pytest.mark.parametrize("p,q", PQ_PAIRS)
@pytest.mark.parametrize("n", range(0, 6))
def test_pq_optimal_by_bfs(p, q, n):
    assert bfs_counts(n, RuleSet.pq_rules(p, q)) == (_pq_oracle(p, q, n), 1)


def test_linear_tribonacci():
    lin = RuleSet.linear_fibonacci()
    want = [0, 2, 5, 10, 20, 38, 71, 132, 244, 450]
    assert [min_moves(n, lin) for n in range(10)] == want
    for n in range(10):
        assert len(solve_recursive(n, lin)) == want[n]
    for n in range(3, 10):
        assert want[n] == want[n - 1] + want[n - 2] + want[n - 3] + 3


@pytest.mark.parametrize("n", range(0, 6))
def test_linear_optimal_by_bfs(n):
    assert bfs_counts(n, RuleSet.linear_fibonacci())[0] == min_moves(n, RuleSet.linear_fibonacci())


def test_restricted_solver_unsupported():
    with pytest.raises(UnsupportedVariantError):
        solve_recursive(3, RuleSet.fibonacci(restrict="clockwise"))
    with pytest.raises(UnsupportedVariantError):
        min_moves(3, RuleSet.classical("linear"))


def test_mu_four_factor_and_balance():
    for n in range(0, 25):
        w = mu_word(n)
        if n >= 4:
            assert w == mu_word(n - 2) + mu_word(n - 3) + mu_word(n - 3) + mu_word(n - 4)
        assert w.count("r") - w.count("l") == {0: 0, 1: -1, 2: 1}[n % 3]


def test_k_move_count_trace():
    # the 3-moves of the 5-disk trace are steps 3 and 11
    sol = solve_recursive(5)
    assert [i for i, m in enumerate(sol.moves, 1) if m.k == 3] == [3, 11]
    assert k_move_count(5, 3) == 2


@pytest.mark.parametrize("rules", [FIB, VAR], ids=["original", "variant"])
def test_single_disk_iterative(rules):
    (move,) = solve_iterative(1, rules).moves
    assert (move.k, move.src_x.name, move.dst.name) == (1, "A", "C")
