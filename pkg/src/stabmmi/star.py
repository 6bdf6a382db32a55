"""Generalized-star partitions of graphs and the column-space analysis of
MMI over (C∪I, C∪J): block column spaces, the four-case distributivity /
intersection taxonomy, anchoring guarantees, and partition search.

A generalized star splits the vertices into a center C and blocks I, J, K
with no edges among I, J, K pairwise.  Everything below works with the
column spaces W_I, W_J, W_K of the C×I, C×J, C×K adjacency blocks inside
Z_2^{|C|}.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .entropy import MmiOutcome
from .gf2 import (
    BitMatrix,
    Subspace,
    column_space,
    intersect,
    is_distributive,
    rank,
    sum_spaces,
    triple_intersect,
)
from .graphs import Graph

__all__ = [
    "StarPartition",
    "BlockSpaces",
    "StarClassification",
    "is_generalized_star",
    "is_anchored_single_center",
    "block_spaces",
    "classify",
    "mmi_cij_colspace",
    "entropies_from_blocks",
    "generalized_anchoring",
    "find_star_partition",
    "four_star_witness",
]


@dataclass(frozen=True)
class StarPartition:
    """Disjoint masks c, i, j, k covering all vertices, each nonempty."""

    c: int
    i: int
    j: int
    k: int

    def __post_init__(self) -> None:
        parts = (self.c, self.i, self.j, self.k)
        if any(p == 0 for p in parts):
            raise ValueError("all four parts must be nonempty")
        union = 0
        for p in parts:
            if union & p:
                raise ValueError("parts must be disjoint")
            union |= p

    def validate_for(self, n: int) -> None:
        if (self.c | self.i | self.j | self.k) != (1 << n) - 1:
            raise ValueError("partition must cover all vertices")

    @staticmethod
    def from_sets(n: int, c, i, j, k) -> "StarPartition":
        def mask(vs) -> int:
            out = 0
            for v in vs:
                if not 1 <= v <= n:
                    raise ValueError(f"vertex {v} out of range")
                out |= 1 << (v - 1)
            return out

        p = StarPartition(mask(c), mask(i), mask(j), mask(k))
        p.validate_for(n)
        return p


@dataclass(frozen=True)
class BlockSpaces:
    w_i: Subspace
    w_j: Subspace
    w_k: Subspace


@dataclass(frozen=True)
class StarClassification:
    nontrivial_intersection: bool
    distributive: bool
    case: int
    predicted: MmiOutcome | None  # None means undetermined (case 4)

    def to_json(self, p: StarPartition, outcome: MmiOutcome) -> str:
        def bits(mask: int) -> list[int]:
            return [v + 1 for v in range(mask.bit_length()) if (mask >> v) & 1]

        return json.dumps(
            {
                "partition": {
                    "C": bits(p.c),
                    "I": bits(p.i),
                    "J": bits(p.j),
                    "K": bits(p.k),
                },
                "case": self.case,
                "distributive": self.distributive,
                "nontrivial_intersection": self.nontrivial_intersection,
                "outcome": outcome.value,
            },
            sort_keys=True,
        )


def _bits(mask: int) -> list[int]:
    return [v for v in range(mask.bit_length()) if (mask >> v) & 1]


def is_generalized_star(g: Graph, p: StarPartition) -> bool:
    """No edge may join any two of the blocks I, J, K."""
    p.validate_for(g.n)
    for v in _bits(p.i):
        if g.adj[v] & (p.j | p.k):
            return False
    for v in _bits(p.j):
        if g.adj[v] & p.k:
            return False
    return True


def is_anchored_single_center(g: Graph, p: StarPartition) -> bool:
    """Single-center anchoring: every block touches the center vertex."""
    if bin(p.c).count("1") != 1:
        raise ValueError("anchoring test requires |C| == 1")
    if not is_generalized_star(g, p):
        raise ValueError("partition is not a generalized star")
    nb = g.adj[p.c.bit_length() - 1]
    return bool(nb & p.i) and bool(nb & p.j) and bool(nb & p.k)


def _block(g: Graph, rows_mask: int, cols_mask: int) -> BitMatrix:
    rows = _bits(rows_mask)
    cols = _bits(cols_mask)
    packed = []
    for r in rows:
        packed.append(sum(((g.adj[r] >> c) & 1) << out for out, c in enumerate(cols)))
    return BitMatrix(tuple(packed), len(cols))


def block_spaces(g: Graph, p: StarPartition) -> BlockSpaces:
    if not is_generalized_star(g, p):
        raise ValueError("partition is not a generalized star")
    return BlockSpaces(
        column_space(_block(g, p.c, p.i)),
        column_space(_block(g, p.c, p.j)),
        column_space(_block(g, p.c, p.k)),
    )


_CASE_PREDICTION = {
    # (distributive, nontrivial_intersection) -> (case, predicted outcome)
    (False, False): (1, MmiOutcome.SATISFIES),
    (True, False): (2, MmiOutcome.SATURATES),
    (True, True): (3, MmiOutcome.FAILS),
    (False, True): (4, None),
}


def classify(g: Graph, p: StarPartition) -> StarClassification:
    w = block_spaces(g, p)
    nontrivial = triple_intersect(w.w_i, w.w_j, w.w_k).dim > 0
    dist = is_distributive(w.w_i, w.w_j, w.w_k)
    case, predicted = _CASE_PREDICTION[(dist, nontrivial)]
    return StarClassification(nontrivial, dist, case, predicted)


def mmi_cij_colspace(g: Graph, p: StarPartition) -> MmiOutcome:
    """MMI over (C∪I, C∪J, rest) from block column spaces alone.

    dim(W_I∩W_K) + dim(W_J∩W_K) below / at / above dim((W_I+W_J)∩W_K)
    means the inequality holds strictly / with equality / fails.
    """
    w = block_spaces(g, p)
    lhs = intersect(w.w_i, w.w_k).dim + intersect(w.w_j, w.w_k).dim
    rhs = intersect(sum_spaces(w.w_i, w.w_j), w.w_k).dim
    if lhs < rhs:
        return MmiOutcome.SATISFIES
    if lhs == rhs:
        return MmiOutcome.SATURATES
    return MmiOutcome.FAILS


def entropies_from_blocks(g: Graph, p: StarPartition) -> dict[str, int]:
    """The seven subsystem entropies of the (C∪I, C∪J) instance, from block
    ranks and intersection dimensions only."""
    if not is_generalized_star(g, p):
        raise ValueError("partition is not a generalized star")
    ci = _block(g, p.c, p.i)
    cj = _block(g, p.c, p.j)
    ck = _block(g, p.c, p.k)
    w_i, w_j, w_k = column_space(ci), column_space(cj), column_space(ck)
    r_ci, r_cj, r_ck = rank(ci), rank(cj), rank(ck)
    return {
        "S_C": r_ci
        + r_cj
        + r_ck
        - intersect(w_i, w_j).dim
        - intersect(sum_spaces(w_i, w_j), w_k).dim,
        "S_I": r_ci,
        "S_J": r_cj,
        "S_CI": r_cj + r_ck - intersect(w_j, w_k).dim,
        "S_CJ": r_ci + r_ck - intersect(w_i, w_k).dim,
        "S_IJ": r_ci + r_cj - intersect(w_i, w_j).dim,
        "S_CIJ": r_ck,
    }


def generalized_anchoring(g: Graph, p: StarPartition) -> bool:
    """All three block column spaces coincide (possibly trivially)."""
    w = block_spaces(g, p)
    return w.w_i == w.w_j and w.w_j == w.w_k


def four_star_witness(
    g: Graph, p: StarPartition
) -> tuple[int, int, int, int] | None:
    """An induced four-star (center in C, one leaf in each block), if any."""
    for c in _bits(p.c):
        nb = g.adj[c]
        for i in _bits(nb & p.i):
            for j in _bits(nb & p.j):
                if (g.adj[i] >> j) & 1:
                    continue
                for k in _bits(nb & p.k):
                    if (g.adj[i] >> k) & 1 or (g.adj[j] >> k) & 1:
                        continue
                    return (c + 1, i + 1, j + 1, k + 1)
    return None


def _partitions(g: Graph):
    """All generalized-star partitions: pick M = I∪J∪K, then assign the
    connected components of G[M] to the three blocks surjectively."""
    n = g.n
    full = (1 << n) - 1
    for m_mask in range(1, full):  # C = complement stays nonempty
        # connected components of the induced subgraph on m_mask
        comps = []
        left = m_mask
        while left:
            seed = left & -left
            comp = seed
            frontier = seed
            while frontier:
                grown = comp
                f = frontier
                while f:
                    low = f & -f
                    grown |= g.adj[low.bit_length() - 1] & m_mask
                    f ^= low
                frontier = grown & ~comp
                comp = grown
            comps.append(comp)
            left &= ~comp
        if len(comps) < 3:
            continue
        for assign in range(3 ** len(comps)):
            i_mask = j_mask = k_mask = 0
            a = assign
            for comp in comps:
                part = a % 3
                a //= 3
                if part == 0:
                    i_mask |= comp
                elif part == 1:
                    j_mask |= comp
                else:
                    k_mask |= comp
            if i_mask and j_mask and k_mask:
                yield StarPartition(full ^ m_mask, i_mask, j_mask, k_mask)


def find_star_partition(
    g: Graph, require_nontrivial: bool = False, maximize_cij: bool = False
) -> StarPartition | None:
    """Search all generalized-star partitions, optionally requiring a
    nontrivial triple intersection and maximizing |C∪I∪J| (ties broken by
    smallest (c, i, j) mask triple)."""
    best: StarPartition | None = None
    best_key = None
    for p in _partitions(g):
        if require_nontrivial:
            w = block_spaces(g, p)
            if triple_intersect(w.w_i, w.w_j, w.w_k).dim == 0:
                continue
        key = (
            -bin(p.c | p.i | p.j).count("1") if maximize_cij else 0,
            p.c,
            p.i,
            p.j,
        )
        if best_key is None or key < best_key:
            best, best_key = p, key
    return best
