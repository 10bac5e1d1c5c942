# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Same signatures and results as ``fchromatic._pure``."""

from libc.stdlib cimport malloc, calloc, free


cdef int* _to_ints(seq, Py_ssize_t size) except NULL:
    cdef int* out = <int*> malloc((size if size > 0 else 1) * sizeof(int))
    if out == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(size):
        out[i] = seq[i]
    return out


cdef inline int _find(int* parent, int x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef int _components(int n, int m, int* eu, int* ev, int* ecol,
                     unsigned long long removed, int stop_at, int* parent) noexcept nogil:
    """Component count after deleting colors in ``removed``; stops early once
    the count drops to ``stop_at`` (pass -1 for an exact count)."""
    cdef int i, a, b
    cdef int count = n
    for i in range(n):
        parent[i] = i
    for i in range(m):
        if (removed >> ecol[i]) & 1ULL:
            continue
        a = _find(parent, eu[i])
        b = _find(parent, ev[i])
        if a != b:
            parent[b] = a
            count -= 1
            if count <= stop_at:
                return count
    return count


def count_components(int n, eu, ev, ecol, unsigned long long removed_mask):
    cdef Py_ssize_t m = len(eu)
    cdef int* u = _to_ints(eu, m)
    cdef int* v = _to_ints(ev, m)
    cdef int* c = _to_ints(ecol, m)
    cdef int* parent = <int*> malloc((n if n > 0 else 1) * sizeof(int))
    try:
        return _components(n, <int> m, u, v, c, removed_mask, -1, parent)
    finally:
        free(u); free(v); free(c); free(parent)


def first_violation(int n, eu, ev, ecol, caps, int w):
    cdef Py_ssize_t m = len(eu)
    cdef int k = len(caps)
    if k > 63:
        raise ValueError("at most 63 colors supported by the compiled kernel")
    cdef int* u = _to_ints(eu, m)
    cdef int* v = _to_ints(ev, m)
    cdef int* c = _to_ints(ecol, m)
    cdef int* cap = _to_ints(caps, k)
    cdef int* parent = <int*> malloc((n if n > 0 else 1) * sizeof(int))
    cdef int* idx = <int*> malloc((k + 1) * sizeof(int))
    cdef int size, i, j, omega
    cdef long long bound
    cdef unsigned long long mask
    cdef bint found = False
    cdef unsigned long long found_mask = 0
    cdef int found_omega = 0
    try:
        with nogil:
            for size in range(k + 1):
                for i in range(size):
                    idx[i] = i
                while True:
                    bound = w
                    mask = 0
                    for i in range(size):
                        bound += cap[idx[i]]
                        mask |= 1ULL << idx[i]
                    if bound < n:
                        omega = _components(n, <int> m, u, v, c, mask, <int> bound, parent)
                        if omega > bound:
                            found = True
                            found_mask = mask
                            found_omega = omega
                            break
                    # next combination in lexicographic order
                    i = size - 1
                    while i >= 0 and idx[i] == k - size + i:
                        i -= 1
                    if i < 0:
                        break
                    idx[i] += 1
                    for j in range(i + 1, size):
                        idx[j] = idx[j - 1] + 1
                if found:
                    break
        if found:
            return int(found_mask), found_omega
        return None
    finally:
        free(u); free(v); free(c); free(cap); free(parent); free(idx)


def first_premise_failure(mult, caps, long long target):
    cdef int k = len(caps)
    if k > 63:
        raise ValueError("at most 63 colors supported by the compiled kernel")
    cdef int* mu = _to_ints(mult, k)
    cdef int* cap = _to_ints(caps, k)
    cdef int* idx = <int*> malloc((k + 1) * sizeof(int))
    cdef long long total = 0
    cdef long long edges, inside, x
    cdef unsigned long long mask
    cdef int size, i, j
    cdef bint found = False
    cdef unsigned long long found_mask = 0
    for i in range(k):
        total += cap[i]
    try:
        with nogil:
            for size in range(1, k + 1):
                for i in range(size):
                    idx[i] = i
                while True:
                    edges = 0
                    inside = 0
                    mask = 0
                    for i in range(size):
                        edges += mu[idx[i]]
                        inside += cap[idx[i]]
                        mask |= 1ULL << idx[i]
                    x = target - (total - inside)
                    if 4 * edges <= x * x:
                        found = True
                        found_mask = mask
                        break
                    i = size - 1
                    while i >= 0 and idx[i] == k - size + i:
                        i -= 1
                    if i < 0:
                        break
                    idx[i] += 1
                    for j in range(i + 1, size):
                        idx[j] = idx[j - 1] + 1
                if found:
                    break
        return int(found_mask) if found else None
    finally:
        free(mu); free(cap); free(idx)


cdef int _augment(int n, int m, int k, int* eu, int* ev, int* ecol, int* caps,
                  char* in_set, int* path) noexcept nogil:
    """Write the lexicographically least shortest augmenting path into ``path``;
    return its length, 0 if none exists, -1 on allocation failure."""
    cdef int nn = n if n > 0 else 1
    cdef int mm = m if m > 0 else 1
    cdef int kk = k if k > 0 else 1
    cdef int* usage = <int*> calloc(kk, sizeof(int))
    cdef int* deg = <int*> calloc(nn + 1, sizeof(int))
    cdef int* adj_v = <int*> malloc(2 * mm * sizeof(int))
    cdef int* adj_e = <int*> malloc(2 * mm * sizeof(int))
    cdef int* fill = <int*> malloc(((nn if nn > kk else kk) + 1) * sizeof(int))
    cdef int* comp = <int*> malloc(nn * sizeof(int))
    cdef int* parent = <int*> malloc(nn * sizeof(int))
    cdef int* parent_edge = <int*> malloc(nn * sizeof(int))
    cdef int* depth = <int*> malloc(nn * sizeof(int))
    cdef int* queue = <int*> malloc((nn + mm) * sizeof(int))
    cdef char* outside = <char*> calloc(mm, 1)
    cdef char* is_source = <char*> calloc(mm, 1)
    cdef char* is_sink = <char*> calloc(mm, 1)
    cdef int* cyc = <int*> malloc(<size_t> mm * nn * sizeof(int))
    cdef int* cyc_len = <int*> calloc(mm, sizeof(int))
    cdef int* occ_off = <int*> calloc(mm + 1, sizeof(int))
    cdef int* occ = <int*> malloc(<size_t> mm * nn * sizeof(int))
    cdef int* blk_off = <int*> calloc(kk + 1, sizeof(int))
    cdef int* blk = <int*> malloc(mm * sizeof(int))
    cdef int* mem_off = <int*> calloc(kk + 1, sizeof(int))
    cdef int* mem = <int*> malloc(mm * sizeof(int))
    cdef int* dist = <int*> malloc(mm * sizeof(int))
    cdef int i, e, z, y, x, a, d, head, tail, root, uu, vv, plen, best, want, lo, hi, t
    cdef int result = 0
    if (usage == NULL or deg == NULL or adj_v == NULL or adj_e == NULL or fill == NULL
            or comp == NULL or parent == NULL or parent_edge == NULL or depth == NULL
            or queue == NULL or outside == NULL or is_source == NULL or is_sink == NULL
            or cyc == NULL or cyc_len == NULL or occ_off == NULL or occ == NULL
            or blk_off == NULL or blk == NULL or mem_off == NULL or mem == NULL or dist == NULL):
        result = -1
    else:
        # forest adjacency (CSR) of the current set
        for e in range(m):
            if in_set[e]:
                usage[ecol[e]] += 1
                deg[eu[e] + 1] += 1
                deg[ev[e] + 1] += 1
        for i in range(n):
            deg[i + 1] += deg[i]
            fill[i] = deg[i]
        for e in range(m):
            if in_set[e]:
                adj_v[fill[eu[e]]] = ev[e]; adj_e[fill[eu[e]]] = e; fill[eu[e]] += 1
                adj_v[fill[ev[e]]] = eu[e]; adj_e[fill[ev[e]]] = e; fill[ev[e]] += 1
        for i in range(n):
            comp[i] = -1
            parent[i] = -1
            parent_edge[i] = -1
            depth[i] = 0
        for root in range(n):
            if comp[root] != -1:
                continue
            comp[root] = root
            head = 0
            tail = 0
            queue[tail] = root; tail += 1
            while head < tail:
                x = queue[head]; head += 1
                for i in range(deg[x], deg[x + 1]):
                    y = adj_v[i]
                    if comp[y] == -1:
                        comp[y] = root
                        parent[y] = x
                        parent_edge[y] = adj_e[i]
                        depth[y] = depth[x] + 1
                        queue[tail] = y; tail += 1

        for z in range(m):
            if not in_set[z] and caps[ecol[z]] > 0:
                outside[z] = 1
                is_source[z] = comp[eu[z]] != comp[ev[z]]
                is_sink[z] = usage[ecol[z]] < caps[ecol[z]]
                if is_source[z] and is_sink[z]:
                    path[0] = z
                    result = 1
                    break

        if result == 0:
            # cycles closed by non-source outside edges
            for z in range(m):
                if outside[z] and not is_source[z]:
                    uu = eu[z]
                    vv = ev[z]
                    plen = 0
                    while depth[uu] > depth[vv]:
                        cyc[<size_t> z * nn + plen] = parent_edge[uu]; plen += 1
                        uu = parent[uu]
                    while depth[vv] > depth[uu]:
                        cyc[<size_t> z * nn + plen] = parent_edge[vv]; plen += 1
                        vv = parent[vv]
                    while uu != vv:
                        cyc[<size_t> z * nn + plen] = parent_edge[uu]; plen += 1
                        cyc[<size_t> z * nn + plen] = parent_edge[vv]; plen += 1
                        uu = parent[uu]
                        vv = parent[vv]
                    cyc_len[z] = plen
                    for i in range(plen):
                        occ_off[cyc[<size_t> z * nn + i] + 1] += 1
            for i in range(m):
                occ_off[i + 1] += occ_off[i]
            for i in range(m):
                dist[i] = occ_off[i]  # temporary fill cursor
            for z in range(m):
                if outside[z] and not is_source[z]:
                    for i in range(cyc_len[z]):
                        y = cyc[<size_t> z * nn + i]
                        occ[dist[y]] = z
                        dist[y] += 1
            # per-color lists: blocked outside edges and current members
            for z in range(m):
                if outside[z] and not is_sink[z]:
                    blk_off[ecol[z] + 1] += 1
                if in_set[z]:
                    mem_off[ecol[z] + 1] += 1
            for i in range(k):
                blk_off[i + 1] += blk_off[i]
                mem_off[i + 1] += mem_off[i]
            for i in range(k):
                fill[i] = blk_off[i]
            for z in range(m):
                if outside[z] and not is_sink[z]:
                    blk[fill[ecol[z]]] = z
                    fill[ecol[z]] += 1
            for i in range(k):
                fill[i] = mem_off[i]
            for z in range(m):
                if in_set[z]:
                    mem[fill[ecol[z]]] = z
                    fill[ecol[z]] += 1

            # backward BFS from the sinks
            for i in range(m):
                dist[i] = -1
            head = 0
            tail = 0
            for z in range(m):
                if outside[z] and is_sink[z]:
                    dist[z] = 0
                    queue[tail] = z; tail += 1
            while head < tail:
                a = queue[head]; head += 1
                d = dist[a] + 1
                if in_set[a]:
                    lo = blk_off[ecol[a]]
                    hi = blk_off[ecol[a] + 1]
                    for i in range(lo, hi):
                        t = blk[i]
                        if dist[t] == -1:
                            dist[t] = d
                            queue[tail] = t; tail += 1
                else:
                    for i in range(cyc_len[a]):
                        t = cyc[<size_t> a * nn + i]
                        if dist[t] == -1:
                            dist[t] = d
                            queue[tail] = t; tail += 1

            best = -1
            for z in range(m):
                if outside[z] and is_source[z] and dist[z] != -1:
                    if best == -1 or dist[z] < dist[best]:
                        best = z
            if best != -1:
                plen = 0
                path[plen] = best; plen += 1
                a = best
                while dist[a] > 0:
                    want = dist[a] - 1
                    if in_set[a]:
                        lo = occ_off[a]
                        hi = occ_off[a + 1]
                        for i in range(lo, hi):
                            if dist[occ[i]] == want:
                                a = occ[i]
                                break
                    else:
                        lo = mem_off[ecol[a]]
                        hi = mem_off[ecol[a] + 1]
                        for i in range(lo, hi):
                            if dist[mem[i]] == want:
                                a = mem[i]
                                break
                    path[plen] = a; plen += 1
                result = plen

    free(usage); free(deg); free(adj_v); free(adj_e); free(fill); free(comp); free(parent)
    free(parent_edge); free(depth); free(queue); free(outside); free(is_source); free(is_sink)
    free(cyc); free(cyc_len); free(occ_off); free(occ); free(blk_off); free(blk)
    free(mem_off); free(mem); free(dist)
    return result


def augmenting_path(int n, eu, ev, ecol, caps, in_set):
    cdef Py_ssize_t m = len(eu)
    cdef int k = len(caps)
    cdef int* u = _to_ints(eu, m)
    cdef int* v = _to_ints(ev, m)
    cdef int* c = _to_ints(ecol, m)
    cdef int* cap = _to_ints(caps, k)
    cdef char* flags = <char*> malloc(m if m > 0 else 1)
    cdef int* path = <int*> malloc((2 * m + 1) * sizeof(int))
    cdef Py_ssize_t i
    cdef int plen
    try:
        for i in range(m):
            flags[i] = 1 if in_set[i] else 0
        plen = _augment(n, <int> m, k, u, v, c, cap, flags, path)
        if plen < 0:
            raise MemoryError()
        if plen == 0:
            return None
        return [path[i] for i in range(plen)]
    finally:
        free(u); free(v); free(c); free(cap); free(flags); free(path)


def intersect(int n, eu, ev, ecol, caps, int target):
    cdef Py_ssize_t m = len(eu)
    cdef int k = len(caps)
    cdef int* u = _to_ints(eu, m)
    cdef int* v = _to_ints(ev, m)
    cdef int* c = _to_ints(ecol, m)
    cdef int* cap = _to_ints(caps, k)
    cdef char* flags = <char*> calloc(m if m > 0 else 1, 1)
    cdef int* path = <int*> malloc((2 * m + 1) * sizeof(int))
    cdef int size = 0
    cdef int plen = 0
    cdef int i
    try:
        with nogil:
            while size < target:
                plen = _augment(n, <int> m, k, u, v, c, cap, flags, path)
                if plen <= 0:
                    break
                for i in range(plen):
                    flags[path[i]] = 1 - flags[path[i]]
                size += 1
        if plen < 0 and size < target:
            raise MemoryError()
        return [i for i in range(m) if flags[i]]
    finally:
        free(u); free(v); free(c); free(cap); free(flags); free(path)
