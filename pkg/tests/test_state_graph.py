import pytest

from hanoifib.core_state import RuleSet, State, apply_move, legal_moves
from hanoifib.numeration import fib
from hanoifib.state_graph import (
    ResourceCapError,
    build_graph,
    check_somme_mignonne,
    count_dot,
    embed,
    export_dot,
    is_strongly_connected,
    k33_minor_f2,
    pseudo_edge_origins,
    pseudo_edge_target,
    shortest_path,
    variant_move_target,
)

from oracles import reachable_everywhere

FIB = RuleSet.fibonacci()
VAR = RuleSet.fibonacci("variant")


def test_sizes():
    g = build_graph(2, FIB)
    assert (g.num_vertices, g.num_edges) == (9, 24)
    assert build_graph(0, FIB).num_vertices == 1


def test_cap():
    with pytest.raises(ResourceCapError):
        build_graph(11, FIB)
    assert build_graph(3, FIB, cap=27).num_vertices == 27
    with pytest.raises(ResourceCapError):
        build_graph(4, FIB, cap=27)


def test_edges_are_legal_moves(any_rules):
    for n in range(5):
        g = build_graph(n, any_rules)
        for v in range(g.num_vertices):
            s = g.state(v)
            out = list(g.out_edges(v))
            assert [m.key() for m, _ in out] == [m.key() for m in legal_moves(s, any_rules)]
            for m, w in out:
                assert apply_move(s, m, any_rules) == g.state(w)


@pytest.mark.parametrize("rules", [FIB, VAR], ids=["original", "variant"])
def test_shortest_path_fibonacci(rules):
    for n in range(0, 9):
        g = build_graph(n, rules)
        res = shortest_path(g, State.initial(n), State.final(n))
        assert res.distance == fib(n + 2) - 1
        assert res.count == 1
        assert len(res.path) == res.distance + 1


def test_witness_is_the_recursive_solution():
    from hanoifib.solver import solve_recursive
    g = build_graph(6, FIB)
    res = shortest_path(g, State.initial(6), State.final(6))
    assert res.path == solve_recursive(6).states


def test_clockwise_detour():
    g = build_graph(1, RuleSet.classical("clockwise"))
    assert g.num_edges == 3
    res = shortest_path(g, State.initial(1), State.final(1))
    assert res.distance == 2  # A->B->C


def test_unreachable_target():
    # no edges at all when every peg pair is forbidden
    g = build_graph(1, RuleSet("classical", peg_digraph=frozenset()))
    res = shortest_path(g, State.initial(1), State.final(1))
    assert (res.distance, res.count, res.path) == (None, 0, ())


def test_classical_path_counts():
    for n in range(1, 7):
        g = build_graph(n, RuleSet.classical())
        res = shortest_path(g, State.initial(n), State.final(n))
        assert (res.distance, res.count) == (2 ** n - 1, 1)


@pytest.mark.parametrize("rules", [FIB, VAR, RuleSet.classical()], ids=str)
def test_strong_connectivity(rules):
    for n in range(8):
        ok, count = is_strongly_connected(build_graph(n, rules))
        assert ok and count == 1
    for n in range(5):
        assert reachable_everywhere(n, rules)


def test_clockwise_fibonacci_connectivity_matches_oracle():
    rules = RuleSet.fibonacci(restrict="clockwise")
    for n in range(5):
        assert is_strongly_connected(build_graph(n, rules))[0] == reachable_everywhere(n, rules)


def test_k33():
    assert k33_minor_f2(FIB) is True
    assert k33_minor_f2(VAR) is True
    assert k33_minor_f2(RuleSet.classical()) is False


def test_embed_examples():
    assert embed(State.parse("-,-,-")) == (0, 0)
    assert embed(State.initial(2)) == (0, 0)
    assert embed(State.parse("2,1,-")) == (1, 1)
    assert embed(State.final(2)) == (3, 3)
    n = 5
    span = 2 ** n - 1
    assert embed(State.initial(n, 1)) == (2 * span, 0)
    assert embed(State.final(n)) == (span, span)


def test_embed_injective():
    for n in range(9):
        g = build_graph(n, RuleSet.classical())
        pts = {embed(s) for s in g.vertices()}
        assert len(pts) == 3 ** n


def test_classical_edges_have_unit_length():
    # every classical d_1 edge spans one lattice step (dx^2 + 3 dy^2 = 4)
    g = build_graph(4, RuleSet.classical())
    for v, m, w in g.edges():
        if m.k == 1:
            (x0, y0), (x1, y1) = embed(g.state(v)), embed(g.state(w))
            assert (x1 - x0) ** 2 + 3 * (y1 - y0) ** 2 == 4


def test_pseudo_edge_examples():
    assert pseudo_edge_target(State.parse("2,1,-"), 2) == State.parse("-,-,12")
    assert pseudo_edge_target(State.parse("3,12,-"), 3, 3) == State.parse("1,-,23")
    with pytest.raises(ValueError):
        pseudo_edge_target(State.parse("1,-,-"), 1)


def test_pseudo_edges_exhaustive_n6():
    for n in range(2, 7):
        h = build_graph(n, RuleSet.classical())
        for v, k in pseudo_edge_origins(n):
            assert pseudo_edge_target(v, k, n, classical=h) == variant_move_target(v, k)


@pytest.mark.parametrize("n", range(0, 31))
def test_identity(n):
    assert check_somme_mignonne(n)


def test_identity_n5_instance():
    assert 2 ** 5 == 32 == fib(7) + 19
    assert sum(2 ** k * fib(4 - k) for k in range(0, 4)) == 19


def test_dot_counts():
    assert count_dot(export_dot(build_graph(1, FIB))) == (3, 6)
    assert count_dot(export_dot(build_graph(2, FIB))) == (9, 24)


def test_dot_layout():
    text = export_dot(build_graph(1, FIB))
    lines = text.splitlines()
    assert lines[0] == "digraph F1 {"
    assert lines[2] == '  s0 [label="1|-|-"];'
    assert '  s0 -> s1 [kind="fib", k=1];' in lines
    assert lines[-1] == "}"
    assert text == export_dot(build_graph(1, FIB))


def test_dot_coords():
    text = export_dot(build_graph(3, FIB), with_coords=True)
    nodes = [ln for ln in text.splitlines() if "label=" in ln]
    assert len(nodes) == 27 and all('pos="' in ln for ln in nodes)
    assert 'pos="0.000000,0.000000!"' in nodes[0]
