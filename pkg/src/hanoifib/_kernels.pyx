# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled state-graph kernels; same contract as ``_kernels_py``."""
import numpy as np
cimport numpy as cnp

cnp.import_array()

BACKEND = "cython"

ctypedef cnp.int64_t i64

cdef enum:
    MAXN = 40


cdef inline int _decode(i64 code, int n, int* pegs) nogil:
    cdef int i
    for i in range(n):
        pegs[i] = <int>(code % 3)
        code = code // 3
    return 0


cdef int _succ(i64 code, int n, int p, int q, bint variant, int mask,
               i64* pow3, i64* out) nogil:
    """Write up to 2p+1 rows of (k, x, y, z, target) into ``out``; return row count."""
    cdef int pegs[MAXN]
    cdef int home, r, k, z, x, d, lim, rows = 0
    cdef i64 target
    cdef bint same
    if n == 0:
        return 0
    _decode(code, n, pegs)
    home = pegs[0]
    r = 1
    while r < n and pegs[r] == home:
        r += 1
    lim = p if p < r else r
    for k in range(1, lim + 1):
        for z in range(3):
            if z == home or not ((mask >> (3 * home + z)) & 1):
                continue
            target = code
            for d in range(k):
                target += (z - home) * pow3[d]
            out[5 * rows] = k
            out[5 * rows + 1] = home
            out[5 * rows + 2] = 3 - home - z
            out[5 * rows + 3] = z
            out[5 * rows + 4] = target
            rows += 1
    k = r + p
    if k <= n:
        x = pegs[r]
        same = True
        for d in range(r, k):
            if pegs[d] != x:
                same = False
                break
        if same:
            z = 3 - home - x
            if (mask >> (3 * x + z)) & 1:
                target = code
                d = r - q if r - q > 0 else 0
                while d < k:
                    target += (z - pegs[d]) * pow3[d]
                    d += 1
                if variant:
                    for d in range(0, r - q):
                        target += (x - home) * pow3[d]
                out[5 * rows] = k
                out[5 * rows + 1] = x
                out[5 * rows + 2] = home
                out[5 * rows + 3] = z
                out[5 * rows + 4] = target
                rows += 1
    return rows


def successors(i64 code, int n, int p, int q, bint variant, int mask):
    if n > MAXN:
        raise ValueError("too many disks for the compiled kernel")
    cdef i64 pow3[MAXN + 1]
    cdef i64 buf[5 * (2 * MAXN + 1)]
    cdef int i, rows
    pow3[0] = 1
    for i in range(1, n + 1):
        pow3[i] = pow3[i - 1] * 3
    rows = _succ(code, n, p, q, variant, mask, pow3, buf)
    return [(int(buf[5 * i]), int(buf[5 * i + 1]), int(buf[5 * i + 2]),
             int(buf[5 * i + 3]), int(buf[5 * i + 4])) for i in range(rows)]


def build_csr(int n, int p, int q, bint variant, int mask):
    if n > 20:
        raise ValueError("state graph too large for the compiled kernel")
    cdef i64 size = 1
    cdef int i, j, rows
    for i in range(n):
        size *= 3
    cdef int per = 2 * (p if p < n else n) + 1
    cdef i64 pow3[MAXN + 1]
    pow3[0] = 1
    for i in range(1, n + 1):
        pow3[i] = pow3[i - 1] * 3
    indptr_a = np.zeros(size + 1, dtype=np.int64)
    cols_a = np.empty((size * per, 5), dtype=np.int64)
    cdef i64[::1] indptr = indptr_a
    cdef i64[:, ::1] cols = cols_a
    cdef i64 buf[5 * (2 * MAXN + 1)]
    cdef i64 code, e = 0
    with nogil:
        for code in range(size):
            rows = _succ(code, n, p, q, variant, mask, pow3, buf)
            for i in range(rows):
                for j in range(5):
                    cols[e, j] = buf[5 * i + j]
                e += 1
            indptr[code + 1] = e
    cols_a = cols_a[:e]
    return (indptr_a, np.ascontiguousarray(cols_a[:, 4]), np.ascontiguousarray(cols_a[:, 0]),
            np.ascontiguousarray(cols_a[:, 1]), np.ascontiguousarray(cols_a[:, 2]),
            np.ascontiguousarray(cols_a[:, 3]))


def bfs(indptr_in, targets_in, i64 source):
    cdef i64[::1] indptr = np.ascontiguousarray(indptr_in, dtype=np.int64)
    cdef i64[::1] targets = np.ascontiguousarray(targets_in, dtype=np.int64)
    cdef i64 size = indptr.shape[0] - 1
    dist_a = np.full(size, -1, dtype=np.int64)
    pred_a = np.full(size, -1, dtype=np.int64)
    queue_a = np.empty(max(size, 1), dtype=np.int64)
    cdef i64[::1] dist = dist_a
    cdef i64[::1] pred = pred_a
    cdef i64[::1] queue = queue_a
    counts = [0] * size
    cdef i64 head = 0, tail = 0, u, v, e, du
    dist[source] = 0
    counts[source] = 1
    queue[tail] = source
    tail += 1
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u] + 1
        cu = counts[u]
        for e in range(indptr[u], indptr[u + 1]):
            v = targets[e]
            if dist[v] == -1:
                dist[v] = du
                pred[v] = u
                queue[tail] = v
                tail += 1
                counts[v] = cu
            elif dist[v] == du:
                counts[v] += cu
                if u < pred[v]:
                    pred[v] = u
    return dist_a, pred_a, counts


def scc_labels(indptr_in, targets_in):
    cdef i64[::1] indptr = np.ascontiguousarray(indptr_in, dtype=np.int64)
    cdef i64[::1] targets = np.ascontiguousarray(targets_in, dtype=np.int64)
    cdef i64 size = indptr.shape[0] - 1
    index_a = np.full(size, -1, dtype=np.int64)
    low_a = np.zeros(size, dtype=np.int64)
    labels_a = np.full(size, -1, dtype=np.int64)
    onstack_a = np.zeros(size, dtype=np.uint8)
    stack_a = np.empty(max(size, 1), dtype=np.int64)
    wv_a = np.empty(max(size, 1), dtype=np.int64)
    we_a = np.empty(max(size, 1), dtype=np.int64)
    cdef i64[::1] index = index_a
    cdef i64[::1] low = low_a
    cdef i64[::1] labels = labels_a
    cdef cnp.uint8_t[::1] onstack = onstack_a
    cdef i64[::1] stack = stack_a
    cdef i64[::1] wv = wv_a
    cdef i64[::1] we = we_a
    cdef i64 sp = 0, wp = 0, counter = 0, ncomp = 0
    cdef i64 root, v, e, w, parent
    with nogil:
        for root in range(size):
            if index[root] != -1:
                continue
            index[root] = counter
            low[root] = counter
            counter += 1
            stack[sp] = root
            sp += 1
            onstack[root] = 1
            wv[wp] = root
            we[wp] = indptr[root]
            wp += 1
            while wp > 0:
                v = wv[wp - 1]
                e = we[wp - 1]
                if e < indptr[v + 1]:
                    we[wp - 1] = e + 1
                    w = targets[e]
                    if index[w] == -1:
                        index[w] = counter
                        low[w] = counter
                        counter += 1
                        stack[sp] = w
                        sp += 1
                        onstack[w] = 1
                        wv[wp] = w
                        we[wp] = indptr[w]
                        wp += 1
                    elif onstack[w] and index[w] < low[v]:
                        low[v] = index[w]
                    continue
                wp -= 1
                if wp > 0:
                    parent = wv[wp - 1]
                    if low[v] < low[parent]:
                        low[parent] = low[v]
                if low[v] == index[v]:
                    while True:
                        sp -= 1
                        w = stack[sp]
                        onstack[w] = 0
                        labels[w] = ncomp
                        if w == v:
                            break
                    ncomp += 1
    return labels_a, int(ncomp)
