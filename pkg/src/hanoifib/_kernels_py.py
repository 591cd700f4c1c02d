"""Pure-Python state-graph kernels.

States are ternary codes, disk 1 least significant. Both this module and the
compiled ``_kernels`` expose the same functions with the same results.

A ``(p, q)`` move exists from a state in two situations, given ``r``, the
number of disks in the run ``1..r`` sharing disk 1's peg:

* ``k <= min(p, r)``: the tower ``1..k`` goes to either other peg;
* ``k = r + p <= n`` when disks ``r+1..r+p`` share one peg: disks
  ``max(1, r+1-q)..k`` go to the third peg.
"""
from __future__ import annotations

import numpy as np

BACKEND = "python"


def _pow3(n):
    return [3 ** i for i in range(n + 1)]


def _decode(code, n):
    pegs = [0] * n
    for i in range(n):
        code, pegs[i] = divmod(code, 3)
    return pegs


def successors(code, n, p, q, variant, mask):
    """Moves from ``code`` as ``(k, x, y, z, target)`` tuples, sorted by (k, z)."""
    out = []
    if n == 0:
        return out
    pow3 = _pow3(n)
    pegs = _decode(code, n)
    home = pegs[0]
    r = 1
    while r < n and pegs[r] == home:
        r += 1
    for k in range(1, min(p, r) + 1):
        for z in range(3):
            if z == home or not mask >> (3 * home + z) & 1:
                continue
            target = code
            for d in range(k):
                target += (z - home) * pow3[d]
            out.append((k, home, 3 - home - z, z, target))
    k = r + p
    if k <= n:
        x = pegs[r]
        if all(pegs[d] == x for d in range(r, k)):
            z = 3 - home - x
            if mask >> (3 * x + z) & 1:
                target = code
                for d in range(max(0, r - q), k):
                    target += (z - pegs[d]) * pow3[d]
                if variant:
                    for d in range(0, r - q):
                        target += (x - home) * pow3[d]
                out.append((k, x, home, z, target))
    return out


def build_csr(n, p, q, variant, mask):
    """Adjacency of all ``3**n`` states.

    Returns ``(indptr, targets, ks, xs, ys, zs)`` as int64 arrays.
    """
    size = 3 ** n
    indptr = np.zeros(size + 1, dtype=np.int64)
    rows = []
    for code in range(size):
        succ = successors(code, n, p, q, variant, mask)
        rows.extend(succ)
        indptr[code + 1] = indptr[code] + len(succ)
    cols = np.array(rows, dtype=np.int64).reshape(-1, 5)
    return (indptr, cols[:, 4].copy(), cols[:, 0].copy(), cols[:, 1].copy(),
            cols[:, 2].copy(), cols[:, 3].copy())


def bfs(indptr, targets, source):
    """Breadth-first search from ``source``.

    Returns ``(dist, pred, counts)``: ``dist`` is -1 for unreachable vertices,
    ``pred`` is the smallest predecessor on some shortest path, ``counts`` is
    a list of exact shortest-path counts.
    """
    size = len(indptr) - 1
    dist = np.full(size, -1, dtype=np.int64)
    pred = np.full(size, -1, dtype=np.int64)
    counts = [0] * size
    dist[source] = 0
    counts[source] = 1
    queue = [source]
    head = 0
    ip = indptr.tolist()
    tg = targets.tolist()
    dl = dist.tolist()
    pl = pred.tolist()
    while head < len(queue):
        u = queue[head]
        head += 1
        du = dl[u] + 1
        cu = counts[u]
        for e in range(ip[u], ip[u + 1]):
            v = tg[e]
            if dl[v] == -1:
                dl[v] = du
                pl[v] = u
                queue.append(v)
                counts[v] = cu
            elif dl[v] == du:
                counts[v] += cu
                if u < pl[v]:
                    pl[v] = u
    return np.array(dl, dtype=np.int64), np.array(pl, dtype=np.int64), counts


def scc_labels(indptr, targets):
    """Tarjan's algorithm, iterative. Returns ``(labels, count)``."""
    size = len(indptr) - 1
    ip = indptr.tolist()
    tg = targets.tolist()
    index = [-1] * size
    low = [0] * size
    on_stack = [False] * size
    labels = [-1] * size
    stack = []
    counter = 0
    ncomp = 0
    for root in range(size):
        if index[root] != -1:
            continue
        work = [(root, ip[root])]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, e = work[-1]
            if e < ip[v + 1]:
                work[-1] = (v, e + 1)
                w = tg[e]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, ip[w]))
                elif on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    labels[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
    return np.array(labels, dtype=np.int64), ncomp
