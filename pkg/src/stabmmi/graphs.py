"""Simple graphs for graph states: adjacency bitmasks, local complementation,
LC orbits, bipartition submatrices, adjacency-rank entropies, induced
four-star detection, and graph6 / JSON edge-list I/O.

Vertices are 1-based in the public edge API; `adj[v]` is the neighborhood
bitmask of vertex v+1 with bit w = vertex w+1.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .gf2 import BitMatrix, rank

__all__ = [
    "Graph",
    "from_edges",
    "local_complement",
    "lc_orbit",
    "submatrix",
    "entropy",
    "induced_four_stars",
    "minimal_edge_representative",
    "to_graph6",
    "from_graph6",
    "to_json",
    "from_json",
]


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count must equal n")
        for v, row in enumerate(self.adj):
            if row >> self.n:
                raise ValueError("adjacency bits beyond vertex range")
            if (row >> v) & 1:
                raise ValueError("self-loop")
            for w in range(v + 1, self.n):
                if ((row >> w) & 1) != ((self.adj[w] >> v) & 1):
                    raise ValueError("adjacency not symmetric")

    def edges(self) -> list[tuple[int, int]]:
        """Sorted 1-based edge list."""
        out = []
        for v in range(self.n):
            for w in range(v + 1, self.n):
                if (self.adj[v] >> w) & 1:
                    out.append((v + 1, w + 1))
        return out

    def edge_count(self) -> int:
        return sum(bin(r).count("1") for r in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u - 1] >> (v - 1)) & 1)

    def adjacency_matrix(self) -> BitMatrix:
        return BitMatrix(self.adj, self.n)


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    adj = [0] * n
    for u, v in edges:
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValueError(f"vertex out of range in edge ({u},{v})")
        if u == v:
            raise ValueError(f"self-loop ({u},{v})")
        adj[u - 1] |= 1 << (v - 1)
        adj[v - 1] |= 1 << (u - 1)
    return Graph(n, tuple(adj))


def local_complement(g: Graph, a: int) -> Graph:
    """Complement the subgraph induced by the open neighborhood of a."""
    if not 1 <= a <= g.n:
        raise IndexError(f"vertex {a} out of range")
    nb = g.adj[a - 1]
    adj = list(g.adj)
    v = nb
    while v:
        low = v & -v
        i = low.bit_length() - 1
        adj[i] ^= nb ^ low
        v ^= low
    return Graph(g.n, tuple(adj))


def lc_orbit(g: Graph, node_budget: int = 10**6) -> set[Graph]:
    """BFS closure under local complementation, deduped by labeled adjacency."""
    seen = {g}
    queue = deque([g])
    while queue:
        cur = queue.popleft()
        for a in range(1, g.n + 1):
            if cur.adj[a - 1] == 0:
                continue
            nxt = local_complement(cur, a)
            if nxt not in seen:
                if len(seen) >= node_budget:
                    raise RuntimeError(
                        f"LC orbit exceeded node budget {node_budget} "
                        f"(partial size {len(seen)})"
                    )
                seen.add(nxt)
                queue.append(nxt)
    return seen


def submatrix(g: Graph, a_mask: int) -> BitMatrix:
    """|A|×|Ā| block of the adjacency matrix, both sides in ascending order."""
    full = (1 << g.n) - 1
    if a_mask == 0 or a_mask == full:
        raise ValueError("subsystem must be nonempty and proper")
    if a_mask >> g.n:
        raise ValueError("mask outside vertex range")
    comp_cols = [w for w in range(g.n) if not (a_mask >> w) & 1]
    rows = []
    for v in range(g.n):
        if (a_mask >> v) & 1:
            row = g.adj[v]
            rows.append(sum(((row >> w) & 1) << out for out, w in enumerate(comp_cols)))
    return BitMatrix(tuple(rows), len(comp_cols))


def entropy(g: Graph, a_mask: int) -> int:
    """S_A of the graph state = GF(2) rank of the A-vs-complement block."""
    if a_mask == 0:
        raise ValueError("empty subsystem")
    if a_mask == (1 << g.n) - 1:
        return 0
    return rank(submatrix(g, a_mask))


def induced_four_stars(g: Graph) -> list[tuple[int, tuple[int, int, int]]]:
    """All induced K_{1,3} subgraphs as (center, (leaf, leaf, leaf)), 1-based."""
    out = []
    for quad in combinations(range(g.n), 4):
        for c in quad:
            leaves = [v for v in quad if v != c]
            if all((g.adj[c] >> v) & 1 for v in leaves) and not any(
                (g.adj[u] >> v) & 1 for u, v in combinations(leaves, 2)
            ):
                out.append((c + 1, tuple(v + 1 for v in leaves)))
    return out


def minimal_edge_representative(orbit: Iterable[Graph]) -> Graph:
    """Fewest-edge member; ties broken by smallest graph6 string."""
    members = list(orbit)
    if not members:
        raise ValueError("empty orbit")
    return min(members, key=lambda g: (g.edge_count(), to_graph6(g)))


def to_graph6(g: Graph) -> str:
    if g.n > 62:
        raise ValueError("only the short graph6 form (n ≤ 62) is supported")
    bits = []
    for w in range(1, g.n):
        for v in range(w):
            bits.append((g.adj[v] >> w) & 1)
    chars = [chr(63 + g.n)]
    for i in range(0, len(bits), 6):
        chunk = bits[i : i + 6] + [0] * (6 - len(bits[i : i + 6]))
        chars.append(chr(63 + sum(b << (5 - k) for k, b in enumerate(chunk))))
    return "".join(chars)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if not s:
        raise ValueError("empty graph6 string")
    n = ord(s[0]) - 63
    if not 1 <= n <= 62:
        raise ValueError("unsupported graph6 size byte")
    need = (n * (n - 1) // 2 + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise ValueError(f"graph6 body length {len(body)}, expected {need}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise ValueError(f"invalid graph6 character {ch!r}")
        bits.extend((val >> (5 - k)) & 1 for k in range(6))
    adj = [0] * n
    idx = 0
    for w in range(1, n):
        for v in range(w):
            if bits[idx]:
                adj[v] |= 1 << w
                adj[w] |= 1 << v
            idx += 1
    if any(bits[idx:]):
        raise ValueError("nonzero padding bits")
    return Graph(n, tuple(adj))


def to_json(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges()]})


def from_json(text: str) -> Graph:
    data = json.loads(text)
    return from_edges(int(data["n"]), [tuple(e) for e in data["edges"]])


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """Every labeled simple graph on n vertices, ascending edge-mask order."""
    if not 1 <= n <= 8:
        raise ValueError("graph enumeration capped at n ≤ 8")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        m = mask
        while m:
            low = m & -m
            v, w = pairs[low.bit_length() - 1]
            adj[v] |= 1 << w
            adj[w] |= 1 << v
            m ^= low
        yield Graph(n, tuple(adj))
