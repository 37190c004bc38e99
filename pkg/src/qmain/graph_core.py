"""Core graph type and small-graph utilities.

Graphs are simple, undirected and labeled 0..n-1.  Adjacency is stored as a
tuple of per-vertex bit masks (bit u of row v is set iff u ~ v), which keeps
connectivity tests, vertex deletion and isomorphism search cheap for the
orders this package enumerates (n <= 64 on the enumeration paths; plain
analysis of a single graph has no hard bound because Python ints are
unbounded).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Invalid graph input for an operation (wrong structure, bad arguments)."""


class Graph6Error(GraphError):
    """Malformed graph6 text.  `offset` is the byte position of the defect."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n: int, rows: Sequence[int]):
        if n < 1:
            raise GraphError("graph must have at least one vertex")
        if len(rows) != n:
            raise GraphError("adjacency rows do not match vertex count")
        mask_all = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~mask_all:
                raise GraphError(f"row {v} has bits outside 0..{n - 1}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
        for v in range(n):
            for u in _bits(rows[v]):
                if not rows[u] >> v & 1:
                    raise GraphError(f"adjacency not symmetric at ({v},{u})")
        self.n = n
        self.rows = tuple(rows)
        self._hash = hash((n, self.rows))

    # -- construction -----------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) outside vertex range 0..{n - 1}")
            if rows[u] >> v & 1:
                raise GraphError(f"duplicate edge ({u},{v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    def with_edge(self, u: int, v: int) -> "Graph":
        """Copy of this graph with edge (u,v) added."""
        if u == v or self.rows[u] >> v & 1:
            raise GraphError(f"cannot add edge ({u},{v})")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, rows)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Image under the permutation mapping old vertex v to perm[v]."""
        rows = [0] * self.n
        for v in range(self.n):
            r = 0
            for u in _bits(self.rows[v]):
                r |= 1 << perm[u]
            rows[perm[v]] = r
        return Graph(self.n, rows)

    # -- basic queries ----------------------------------------------------

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.rows)

    def neighbors(self, v: int) -> Iterator[int]:
        return _bits(self.rows[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for u in _bits(self.rows[v] >> v):
                yield (v, u + v)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class DegreeProfile:
    """Per-vertex degree d(v) and neighbor degree sum S(v) = sum of d(u), u ~ v."""

    degrees: tuple[int, ...]
    neighbor_sums: tuple[int, ...]


def degree_profile(g: Graph) -> DegreeProfile:
    degs = g.degrees()
    sums = tuple(sum(degs[u] for u in _bits(row)) for row in g.rows)
    return DegreeProfile(degs, sums)


def is_connected(g: Graph) -> bool:
    reached = 1
    frontier = 1
    while frontier:
        grow = 0
        for v in _bits(frontier):
            grow |= g.rows[v]
        frontier = grow & ~reached
        reached |= frontier
    return reached == (1 << g.n) - 1


def is_regular(g: Graph) -> bool:
    degs = g.degrees()
    return min(degs) == max(degs)


def pendant_vertices(g: Graph) -> set[int]:
    """Vertices of degree one."""
    return {v for v in range(g.n) if g.rows[v].bit_count() == 1}


def cyclomatic_number(g: Graph) -> int:
    """|E| - |V| + 1 for a connected graph; 0 means a tree, 3 means tricyclic."""
    if not is_connected(g):
        raise GraphError("not connected")
    return g.m - g.n + 1


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on `keep`, plus the map new index -> old vertex id."""
    order = sorted(set(keep))
    index = {old: new for new, old in enumerate(order)}
    rows = [0] * len(order)
    for new, old in enumerate(order):
        for u in _bits(g.rows[old]):
            if u in index:
                rows[new] |= 1 << index[u]
    return Graph(len(order), rows), tuple(order)


def base(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """Strip pendant vertices repeatedly until none remain.

    Returns the pendant-free core plus the injection new index -> original
    vertex id.  Defined only for connected graphs containing a cycle (a tree
    would be deleted entirely).
    """
    if not is_connected(g):
        raise GraphError("not connected")
    if g.m - g.n + 1 < 1:
        raise GraphError("base undefined for acyclic graph")
    alive = set(range(g.n))
    rows = list(g.rows)
    while True:
        drop = [v for v in alive if rows[v].bit_count() == 1]
        if not drop:
            break
        for v in drop:
            for u in _bits(rows[v]):
                rows[u] &= ~(1 << v)
            rows[v] = 0
            alive.discard(v)
    return induced_subgraph(g, alive)


# ---------------------------------------------------------------------------
# canonical forms
# ---------------------------------------------------------------------------

_CANON_CAP = 64


def _refine_colors(g: Graph) -> list[int]:
    """Iterated neighborhood refinement; colors are isomorphism-invariant ranks."""
    n = g.n
    ranks = {d: i for i, d in enumerate(sorted(set(g.degrees())))}
    col = [ranks[d] for d in g.degrees()]
    while True:
        keys = [
            (col[v], tuple(sorted(col[u] for u in _bits(g.rows[v]))))
            for v in range(n)
        ]
        order = {k: i for i, k in enumerate(sorted(set(keys)))}
        new = [order[k] for k in keys]
        if new == col:
            return col
        col = new


def _canonical_rows(g: Graph) -> list[int]:
    """Lexicographically minimal rows-vs-prefix adjacency encoding.

    Candidate vertex orders are restricted to refined color classes taken in
    an invariant order (smaller classes first); within that restriction every
    order is tried, with prefix pruning against the best encoding found.
    The result determines the graph up to isomorphism.
    """
    n = g.n
    if n > _CANON_CAP:
        raise GraphError(f"canonical form supports n <= {_CANON_CAP}")
    if n == 1:
        return []
    col = _refine_colors(g)
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(col):
        classes.setdefault(c, []).append(v)
    class_order = sorted(classes, key=lambda c: (len(classes[c]), c))
    slot_class = [c for c in class_order for _ in classes[c]]

    inf = 1 << n
    best = [inf] * n
    chosen: list[int] = []
    used = [False] * n
    rows = g.rows

    def descend(k: int) -> None:
        if k == n:
            return
        for v in classes[slot_class[k]]:
            if used[v]:
                continue
            row = 0
            rv = rows[v]
            for i, u in enumerate(chosen):
                if rv >> u & 1:
                    row |= 1 << i
            if row > best[k]:
                continue
            if row < best[k]:
                best[k] = row
                for j in range(k + 1, n):
                    best[j] = inf
            used[v] = True
            chosen.append(v)
            descend(k + 1)
            chosen.pop()
            used[v] = False

    descend(0)
    return best[1:]


def canonical_form(g: Graph) -> bytes:
    """Total-order key equal for two graphs iff they are isomorphic (n <= 64)."""
    rows = _canonical_rows(g)
    return bytes([g.n]) + b"".join(r.to_bytes(8, "big") for r in rows)


def canonical_graph(g: Graph) -> Graph:
    """A canonically labeled copy of g: equal (as labeled graph) across all
    labelings of the same isomorphism class."""
    rows = _canonical_rows(g)
    edges = [(i, j + 1) for j, row in enumerate(rows) for i in _bits(row)]
    return Graph.from_edges(g.n, edges)


# ---------------------------------------------------------------------------
# cycle counting
# ---------------------------------------------------------------------------


def count_cycles(g: Graph) -> int:
    """Number of distinct cycles (as edge sets); guarded to cyclomatic number <= 3.

    Every cycle is a sum (symmetric difference) of fundamental cycles, so for
    c <= 3 it suffices to test the 2^c - 1 nonempty combinations for being a
    single cycle.
    """
    if not is_connected(g):
        raise GraphError("not connected")
    c = g.m - g.n + 1
    if c > 3:
        raise GraphError("unsupported cyclomatic number")
    if c <= 0:
        return 0

    edge_list = list(g.edges())
    edge_index = {e: i for i, e in enumerate(edge_list)}

    # BFS spanning tree
    parent: dict[int, int] = {0: -1}
    order = [0]
    seen = 1
    tree_edges = set()
    queue = [0]
    while queue:
        v = queue.pop(0)
        for u in _bits(g.rows[v]):
            if not seen >> u & 1:
                seen |= 1 << u
                parent[u] = v
                tree_edges.add(edge_index[(min(u, v), max(u, v))])
                order.append(u)
                queue.append(u)

    def path_to_root(v: int) -> list[int]:
        path = []
        while parent[v] != -1:
            p = parent[v]
            path.append(edge_index[(min(v, p), max(v, p))])
            v = p
        return path

    fundamentals = []
    for i, (u, v) in enumerate(edge_list):
        if i in tree_edges:
            continue
        mask = 1 << i
        for e in path_to_root(u):
            mask ^= 1 << e
        for e in path_to_root(v):
            mask ^= 1 << e
        fundamentals.append(mask)

    count = 0
    for combo in range(1, 1 << len(fundamentals)):
        mask = 0
        for i, f in enumerate(fundamentals):
            if combo >> i & 1:
                mask ^= f
        if mask and _is_single_cycle(edge_list, mask):
            count += 1
    return count


def _is_single_cycle(edge_list: list[tuple[int, int]], mask: int) -> bool:
    deg: dict[int, int] = {}
    adj: dict[int, list[int]] = {}
    for i in _bits(mask):
        u, v = edge_list[i]
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    if any(d != 2 for d in deg.values()):
        return False
    # connected over the support vertices?
    start = next(iter(adj))
    stack = [start]
    visited = {start}
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u not in visited:
                visited.add(u)
                stack.append(u)
    return len(visited) == len(adj)


# ---------------------------------------------------------------------------
# graph6 text format
# ---------------------------------------------------------------------------

_G6_MAX_N = 258047  # largest order of the 4-byte length form


def graph6_encode(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = [n + 63]
    elif n <= _G6_MAX_N:
        head = [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    else:
        raise GraphError(f"graph6 encoding supports n <= {_G6_MAX_N}")
    out = list(head)
    acc = 0
    nbits = 0
    for j in range(1, n):
        col = g.rows[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return "".join(chr(c) for c in out)


def graph6_decode(text: str) -> Graph:
    if text == "":
        raise Graph6Error("empty graph6 string", 0)
    data = text.encode("ascii", errors="replace")
    for i, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"invalid graph6 character {text[i]!r}", i)
    if data[0] != 126:
        n = data[0] - 63
        body_at = 1
    else:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("8-byte length form not supported", 1)
        if len(data) < 4:
            raise Graph6Error("truncated extended length header", len(data))
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        body_at = 4
    if n < 1:
        raise Graph6Error("graph6 order must be at least 1", 0)
    nbits = n * (n - 1) // 2
    want = (nbits + 5) // 6
    have = len(data) - body_at
    if have != want:
        raise Graph6Error(
            f"graph6 body has {have} characters, expected {want}", body_at + min(have, want)
        )
    rows = [0] * n
    pos = 0
    for k in range(want):
        chunk = data[body_at + k] - 63
        for b in range(5, -1, -1):
            bit = chunk >> b & 1
            if pos < nbits:
                if bit:
                    i, j = _g6_bit_position(pos)
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                pos += 1
            elif bit:
                raise Graph6Error("nonzero padding bits", body_at + k)
    return Graph(n, rows)


def _g6_bit_position(pos: int) -> tuple[int, int]:
    """Map a flat upper-triangle bit index (column-major) to (i, j), i < j."""
    j = 1
    while pos >= j:
        pos -= j
        j += 1
    return pos, j
