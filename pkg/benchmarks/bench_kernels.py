"""Compare the compiled and pure-Python kernels on full state graphs.

    python benchmarks/bench_kernels.py [--n 8 9 10] [--repeat 3]
"""
import argparse
import timeit

from hanoifib import kernels
from hanoifib.core_state import RuleSet


def bench(backend, n, rules, repeat):
    args = (n, rules.p, rules.q, rules.variant, rules.digraph_mask())
    indptr, targets, *_ = backend.build_csr(*args)
    timings = {
        "build_csr": lambda: backend.build_csr(*args),
        "bfs": lambda: backend.bfs(indptr, targets, 0),
        "scc": lambda: backend.scc_labels(indptr, targets),
    }
    return {name: min(timeit.repeat(fn, number=1, repeat=repeat)) for name, fn in timings.items()}


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, nargs="+", default=[8, 9, 10])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    compiled = kernels.compiled_backend()
    backends = [kernels.python_backend] + ([compiled] if compiled else [])
    if compiled is None:
        print("compiled extension not built; timing the Python kernels only")
    rules = RuleSet.fibonacci()
    print(f"{'n':>3} {'kernel':<10} " + " ".join(f"{b.BACKEND:>10}" for b in backends)
          + ("    speedup" if compiled else ""))
    for n in args.n:
        results = [bench(b, n, rules, args.repeat) for b in backends]
        for name in results[0]:
            cells = " ".join(f"{r[name] * 1e3:>8.1f}ms" for r in results)
            speed = f"   {results[0][name] / results[1][name]:>7.1f}x" if compiled else ""
            print(f"{n:>3} {name:<10} {cells}{speed}")


if __name__ == "__main__":
    main()
