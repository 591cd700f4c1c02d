"""Tower of Hanoi-Fibonacci: optimal solvers, Zeckendorf numeration, Gray-like
codes on ZF-words and the full state graph."""
from .core_state import (
    IllegalMoveError,
    Move,
    Peg,
    RuleSet,
    State,
    StructureError,
    UnsupportedVariantError,
    apply_move,
    legal_moves,
)
from .graycode import classical_gray, gray_block_demirror, gray_block_mirror, gray_list, hamming, tau_prefix
from .kernels import BACKEND
from .numeration import fib, leading_change_index, zeckendorf, zf_value
from .solver import (
    Solution,
    disk_for_move,
    k_move_count,
    min_moves,
    mu_letter_by_parity,
    mu_word,
    solve_iterative,
    solve_recursive,
)
from .state_graph import (
    StateGraph,
    build_graph,
    check_somme_mignonne,
    embed,
    export_dot,
    is_strongly_connected,
    k33_minor_f2,
    pseudo_edge_target,
    shortest_path,
)

__version__ = "0.1.0"
