import itertools

import pytest

from hanoifib.core_state import RuleSet


def brute_zf(k, max_pos=30):
    """All digit-position sets (weights F_2..) without neighbours summing to k."""
    fibs = [0, 1, 1]
    while len(fibs) <= max_pos:
        fibs.append(fibs[-1] + fibs[-2])
    positions = [i for i in range(2, max_pos + 1) if fibs[i] <= k]
    hits = []
    for r in range(len(positions) + 1):
        for combo in itertools.combinations(positions, r):
            if any(b - a == 1 for a, b in zip(combo, combo[1:])):
                continue
            if sum(fibs[i] for i in combo) == k:
                hits.append(combo)
    return hits


def positions_to_word(combo):
    if not combo:
        return "0"
    top = max(combo)
    return "".join("1" if i in combo else "0" for i in range(top, 1, -1))


ALL_RULES = [
    RuleSet.classical(),
    RuleSet.fibonacci(),
    RuleSet.fibonacci("variant"),
    RuleSet.linear_fibonacci(),
    RuleSet.pq_rules(1, 0),
    RuleSet.pq_rules(1, 2),
    RuleSet.pq_rules(2, 1),
    RuleSet.pq_rules(2, 2),
    RuleSet.pq_rules(3, 1),
]


@pytest.fixture(params=ALL_RULES, ids=lambda r: r.describe())
def any_rules(request):
    return request.param


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line[1])
