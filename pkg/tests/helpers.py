"""Independent oracles and small named graphs for the test suite.

Everything here is deliberately written without using the package's own
algorithms (beyond the Graph container): brute-force isomorphism, a naive
2^C(n,2) isomorphism-class enumerator, an eigendecomposition-based main
eigenvalue count via numpy, an independent graph6 reader, and a subset
brute-force cycle counter.  These act as ground truth for the library.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import numpy as np

from qmain.graph_core import Graph

# ---------------------------------------------------------------------------
# named graphs
# ---------------------------------------------------------------------------


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves):
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph():
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, i + 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
    return Graph.from_edges(10, edges)


def theta_graph():
    """Two degree-3 vertices joined by paths of lengths 1, 2, 2."""
    return Graph.from_edges(4, [(0, 1), (0, 2), (2, 1), (0, 3), (3, 1)])


def random_graph(n, p, rng: random.Random) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_connected_graph(n, extra_edges, rng: random.Random) -> Graph:
    """Random tree plus `extra_edges` random chords."""
    edges = set()
    for v in range(1, n):
        edges.add((rng.randrange(v), v))
    non_edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in edges
    ]
    rng.shuffle(non_edges)
    edges.update(non_edges[:extra_edges])
    return Graph.from_edges(n, sorted(edges))


def relabel_randomly(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


# ---------------------------------------------------------------------------
# brute-force isomorphism
# ---------------------------------------------------------------------------


def brute_force_isomorphic(g: Graph, h: Graph) -> bool:
    """Try every degree-compatible vertex bijection.  Fine up to n ~ 8."""
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    gd = g.degrees()
    hd = h.degrees()
    for perm in itertools.permutations(range(g.n)):
        if any(gd[v] != hd[perm[v]] for v in range(g.n)):
            continue
        if all(
            (g.rows[v] >> u & 1) == (h.rows[perm[v]] >> perm[u] & 1)
            for v in range(g.n)
            for u in range(v + 1, g.n)
        ):
            return True
    return False


# ---------------------------------------------------------------------------
# naive isomorphism-class enumeration over all labeled graphs
# ---------------------------------------------------------------------------


def edge_pairs(n):
    """Column-major upper-triangle pair order (same layout graph6 uses)."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def mask_to_graph(n, mask) -> Graph:
    pairs = edge_pairs(n)
    return Graph.from_edges(n, [pairs[k] for k in range(len(pairs)) if mask >> k & 1])


def naive_isomorphism_classes(n):
    """Orbit-min representative masks of every isomorphism class on n vertices.

    Walks all 2^C(n,2) labeled graphs, marking each discovered orbit with the
    full symmetric group.  Ascending discovery order makes every new unseen
    mask the minimum of its orbit.
    """
    pairs = edge_pairs(n)
    index = {p: k for k, p in enumerate(pairs)}
    c = len(pairs)
    perm_maps = []
    for perm in itertools.permutations(range(n)):
        pm = []
        for i, j in pairs:
            a, b = perm[i], perm[j]
            if a > b:
                a, b = b, a
            pm.append(1 << index[(a, b)])
        perm_maps.append(pm)
    seen = bytearray(1 << c)
    reps = []
    for mask in range(1 << c):
        if seen[mask]:
            continue
        reps.append(mask)
        for pm in perm_maps:
            mm = mask
            t = 0
            while mm:
                low = mm & -mm
                t |= pm[low.bit_length() - 1]
                mm ^= low
            seen[t] = 1
    return reps


def _mask_connected(n, mask) -> bool:
    pairs = edge_pairs(n)
    adj = [0] * n
    for k in range(len(pairs)):
        if mask >> k & 1:
            i, j = pairs[k]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    reached = 1
    frontier = 1
    while frontier:
        grow = 0
        mm = frontier
        while mm:
            low = mm & -mm
            grow |= adj[low.bit_length() - 1]
            mm ^= low
        frontier = grow & ~reached
        reached |= frontier
    return reached == (1 << n) - 1


def naive_connected_reps(n, reps=None):
    """Map edge count m -> list of representative masks of connected classes."""
    if reps is None:
        reps = naive_isomorphism_classes(n)
    by_m: dict[int, list[int]] = {}
    for mask in reps:
        if _mask_connected(n, mask):
            by_m.setdefault(bin(mask).count("1"), []).append(mask)
    return by_m


# ---------------------------------------------------------------------------
# float spectral oracle (numpy)
# ---------------------------------------------------------------------------


def numpy_q_matrix(g: Graph):
    q = np.zeros((g.n, g.n))
    for v in range(g.n):
        q[v, v] = g.degree(v)
        for u in g.neighbors(v):
            q[v, u] = 1.0
    return q


def numpy_q_eigvals(g: Graph):
    return np.linalg.eigvalsh(numpy_q_matrix(g))


def numpy_main_count(g: Graph, group_tol=1e-6, proj_tol=1e-6) -> int:
    """Count eigenvalue groups of Q whose eigenspace is not orthogonal to the
    all-ones vector, straight from a numpy eigendecomposition."""
    w, vecs = np.linalg.eigh(numpy_q_matrix(g))
    j = np.ones(g.n)
    count = 0
    start = 0
    for i in range(1, g.n + 1):
        if i == g.n or w[i] - w[i - 1] > group_tol:
            block = vecs[:, start:i]
            if np.linalg.norm(block.T @ j) > proj_tol * np.sqrt(g.n):
                count += 1
            start = i
    return count


def fraction_matrix_rank(rows) -> int:
    """Plain Gaussian elimination over Fraction — independent rank oracle."""
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for col in range(cols):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


# ---------------------------------------------------------------------------
# independent graph6 reader
# ---------------------------------------------------------------------------


def independent_g6_decode(text: str):
    """Minimal reader for the published graph6 layout; returns (n, edge set)."""
    vals = [ord(ch) - 63 for ch in text]
    assert all(0 <= v <= 63 for v in vals), "character out of graph6 range"
    if vals[0] == 63:
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    bits = "".join(format(v, "06b") for v in body)
    edges = set()
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k] == "1":
                edges.add((i, j))
            k += 1
    assert set(bits[k:]) <= {"0"}, "nonzero padding"
    return n, edges


# ---------------------------------------------------------------------------
# subset brute-force cycle counting
# ---------------------------------------------------------------------------


def brute_count_cycles(g: Graph) -> int:
    """Count edge subsets that form a single cycle.  Exponential in m."""
    es = list(g.edges())
    assert len(es) <= 16, "too many edges for the subset oracle"
    count = 0
    for sub in range(1, 1 << len(es)):
        chosen = [es[k] for k in range(len(es)) if sub >> k & 1]
        deg: dict[int, int] = {}
        for u, v in chosen:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        if any(d != 2 for d in deg.values()):
            continue
        support = set(deg)
        adj = {v: [] for v in support}
        for u, v in chosen:
            adj[u].append(v)
            adj[v].append(u)
        stack = [next(iter(support))]
        visited = set(stack)
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in visited:
                    visited.add(y)
                    stack.append(y)
        if visited == support:
            count += 1
    return count
