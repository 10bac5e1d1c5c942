"""Pure-Python kernels. Reference behaviour for ``_kernels.pyx``.

Every function takes a graph in array form: ``n`` vertices and parallel edge
lists ``eu``, ``ev``, ``ecol`` where ``ecol`` holds dense color indices
``0 .. k-1``.  Color subsets are bitmasks over those indices.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations


def _adjacency(n, eu, ev, ecol, k):
    full = [0] * n
    by_color = [[] for _ in range(k)]
    for u, v, c in zip(eu, ev, ecol):
        full[u] |= 1 << v
        full[v] |= 1 << u
        by_color[c].append((u, 1 << v))
        by_color[c].append((v, 1 << u))
    return full, by_color


def _count_bitset(n, adj):
    remaining = (1 << n) - 1
    count = 0
    while remaining:
        seed = remaining & -remaining
        comp = frontier = seed
        while frontier:
            reach = 0
            while frontier:
                bit = frontier & -frontier
                reach |= adj[bit.bit_length() - 1]
                frontier ^= bit
            frontier = reach & ~comp
            comp |= frontier
        remaining &= ~comp
        count += 1
    return count


def count_components(n, eu, ev, ecol, removed_mask):
    """Components of the graph after deleting every edge whose color bit is set."""
    adj = [0] * n
    for u, v, c in zip(eu, ev, ecol):
        if not (removed_mask >> c) & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return _count_bitset(n, adj)


def first_violation(n, eu, ev, ecol, caps, w):
    """First color subset R (by size, then lexicographic) with
    components(G - E_R) > w + sum(caps[R]).  Returns ``(mask, components)`` or None."""
    k = len(caps)
    full, by_color = _adjacency(n, eu, ev, ecol, k)
    for size in range(k + 1):
        for R in combinations(range(k), size):
            bound = w
            for c in R:
                bound += caps[c]
            if bound >= n:
                continue
            adj = full[:]
            for c in R:
                for v, bit in by_color[c]:
                    adj[v] &= ~bit
            omega = _count_bitset(n, adj)
            if omega > bound:
                mask = 0
                for c in R:
                    mask |= 1 << c
                return mask, omega
    return None


def first_premise_failure(mult, caps, target):
    """First nonempty R (by size, then lexicographic) where
    4 * mult(R) <= (target - caps(complement of R))**2.  Returns the mask or None."""
    k = len(caps)
    total = sum(caps)
    for size in range(1, k + 1):
        for R in combinations(range(k), size):
            edges = 0
            inside = 0
            for c in R:
                edges += mult[c]
                inside += caps[c]
            x = target - (total - inside)
            if 4 * edges <= x * x:
                mask = 0
                for c in R:
                    mask |= 1 << c
                return mask
    return None


def _forest_paths(n, eu, ev, members):
    """Root every tree of the forest ``members``; return (comp, parent, parent_edge, depth)."""
    adj = [[] for _ in range(n)]
    for e in members:
        adj[eu[e]].append((ev[e], e))
        adj[ev[e]].append((eu[e], e))
    comp = [-1] * n
    parent = [-1] * n
    parent_edge = [-1] * n
    depth = [0] * n
    for root in range(n):
        if comp[root] != -1:
            continue
        comp[root] = root
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, e in adj[x]:
                if comp[y] == -1:
                    comp[y] = root
                    parent[y] = x
                    parent_edge[y] = e
                    depth[y] = depth[x] + 1
                    queue.append(y)
    return comp, parent, parent_edge, depth


def _tree_path(u, v, parent, parent_edge, depth):
    path = []
    while depth[u] > depth[v]:
        path.append(parent_edge[u])
        u = parent[u]
    while depth[v] > depth[u]:
        path.append(parent_edge[v])
        v = parent[v]
    while u != v:
        path.append(parent_edge[u])
        path.append(parent_edge[v])
        u = parent[u]
        v = parent[v]
    return path


def augmenting_path(n, eu, ev, ecol, caps, in_set):
    """Lexicographically least shortest augmenting path in the exchange graph of
    (graphic matroid, capacitated partition matroid), or None if ``in_set`` is maximum.

    ``in_set`` is a list of booleans over edges.  The path alternates
    out, in, out, ..., out and starts at an edge that keeps the forest acyclic
    when added and ends at an edge whose color has spare capacity.
    """
    m = len(eu)
    k = len(caps)
    members = [e for e in range(m) if in_set[e]]
    usage = [0] * k
    for e in members:
        usage[ecol[e]] += 1
    outside = [e for e in range(m) if not in_set[e] and caps[ecol[e]] > 0]
    comp, parent, parent_edge, depth = _forest_paths(n, eu, ev, members)
    is_source = [False] * m
    is_sink = [False] * m
    for z in outside:
        is_source[z] = comp[eu[z]] != comp[ev[z]]
        is_sink[z] = usage[ecol[z]] < caps[ecol[z]]
        if is_source[z] and is_sink[z]:
            return [z]
    # cycle[z]: members y with (I - y + z) a forest, for non-source z
    cycle = {}
    on_cycle_of = {y: [] for y in members}
    for z in outside:
        if not is_source[z]:
            cyc = _tree_path(eu[z], ev[z], parent, parent_edge, depth)
            cycle[z] = cyc
            for y in cyc:
                on_cycle_of[y].append(z)
    blocked_by_color = [[] for _ in range(k)]
    for z in outside:
        if not is_sink[z]:
            blocked_by_color[ecol[z]].append(z)
    members_by_color = [[] for _ in range(k)]
    for y in members:
        members_by_color[ecol[y]].append(y)

    # backward BFS from the sinks
    dist = {}
    queue = deque()
    for z in outside:
        if is_sink[z]:
            dist[z] = 0
            queue.append(z)
    while queue:
        a = queue.popleft()
        d = dist[a] + 1
        if in_set[a]:
            preds = blocked_by_color[ecol[a]]  # arcs z -> y
        else:
            preds = cycle.get(a, ())           # arcs y -> z
        for p in preds:
            if p not in dist:
                dist[p] = d
                queue.append(p)

    best = None
    for z in outside:
        if is_source[z] and z in dist and (best is None or dist[z] < dist[best]):
            best = z
    if best is None:
        return None
    path = [best]
    a = best
    while dist[a] > 0:
        want = dist[a] - 1
        if in_set[a]:
            succ = on_cycle_of[a]
        else:
            succ = members_by_color[ecol[a]]
        a = min(x for x in succ if dist.get(x) == want)
        path.append(a)
    return path


def intersect(n, eu, ev, ecol, caps, target):
    """Grow a common independent set by shortest augmentations until it has
    ``target`` edges or no augmenting path exists.  Returns sorted edge ordinals."""
    in_set = [False] * len(eu)
    size = 0
    while size < target:
        path = augmenting_path(n, eu, ev, ecol, caps, in_set)
        if path is None:
            break
        for e in path:
            in_set[e] = not in_set[e]
        size += 1
    return [e for e in range(len(eu)) if in_set[e]]
