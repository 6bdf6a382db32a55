"""Exhaustive censuses of labeled graphs and unsigned stabilizer groups.

Entropy vectors are aggregated into distinct-vector sets and qubit-exchange
classes with MMI tallies.  The per-state entropy vector is computed by
support counting: for a stabilizer group S, the number of elements supported
inside A is 2^(|A| − S_A), so one pass over the 2^n group elements plus a
subset-sum (zeta) transform yields every subsystem entropy at once.  Small
sizes run in plain Python; n ≥ 6 runs through vectorized numpy batches.

Unsigned stabilizer groups are enumerated through an exact parametrization:
a maximal symplectically self-orthogonal subspace of Z_2^{2n} is determined
by the subspace T spanned by the X-parts of its elements together with a
symmetric binary matrix over a basis of T.  Summing over dim T reproduces
the product formula ∏(2^k + 1).
"""

from __future__ import annotations

import multiprocessing
from collections import deque
from dataclasses import dataclass
from itertools import combinations, permutations

import numpy as np

from . import entropy as entmod
from . import graphs as graphmod
from . import star as starmod
from .entropy import EntropyVector, MmiTally, mmi_tally
from .gf2 import BitMatrix, rref
from .graphs import Graph, enumerate_graphs
from .tableau import Tableau

__all__ = [
    "CensusRow",
    "ClassInfo",
    "CensusResult",
    "enumerate_graphs",
    "enumerate_stabilizer_groups",
    "stabilizer_group_count",
    "vector_census",
    "state_census",
    "four_star_conjecture_scan",
    "nontrivial_intersection_scan",
]


@dataclass(frozen=True)
class CensusRow:
    n: int
    total_states: int
    saturate_all: int
    satisfy_some_fail_none: int
    fail_some: int
    distinct_vectors: int
    classes_up_to_exchange: int
    failing_vector_count: int

    def __post_init__(self) -> None:
        if self.saturate_all + self.satisfy_some_fail_none + self.fail_some != self.total_states:
            raise ValueError("state buckets must sum to total_states")
        if self.total_states != (1 << self.n) * stabilizer_group_count(self.n):
            raise ValueError("total_states disagrees with the group-count formula")


@dataclass
class ClassInfo:
    canonical: tuple[int, ...]
    tally: MmiTally
    state_count: int
    member_vectors: int


@dataclass
class CensusResult:
    n: int
    source: str
    # distinct entropy-value tuples -> (multiplicity, representative)
    vectors: dict[tuple[int, ...], int]
    representatives: dict[tuple[int, ...], Graph | None]
    classes: dict[tuple[int, ...], ClassInfo]


def stabilizer_group_count(n: int) -> int:
    total = 1
    for k in range(1, n + 1):
        total *= (1 << k) + 1
    return total


# ---------------------------------------------------------------------------
# support-counting entropy vectors


def _support_entropy_values(x_rows, z_rows, n: int) -> tuple[int, ...]:
    """Entropy values for all nonempty masks from generator rows.

    Walks the 2^n group elements in Gray-code order, histograms their
    support masks, subset-sums the histogram, and reads off
    S_A = |A| − log2(#elements supported inside A).
    """
    size = 1 << n
    counts = [0] * size
    counts[0] = 1
    xm = zm = 0
    for t in range(1, size):
        v = (t & -t).bit_length() - 1
        xm ^= x_rows[v]
        zm ^= z_rows[v]
        counts[xm | zm] += 1
    for b in range(n):
        bit = 1 << b
        for m in range(size):
            if m & bit:
                counts[m] += counts[m ^ bit]
    return tuple(
        bin(m).count("1") - (counts[m].bit_length() - 1) for m in range(1, size)
    )


def graph_entropy_values(g: Graph) -> tuple[int, ...]:
    """Entropy vector of a graph state (values for masks 1..2^n−1)."""
    ident = [1 << v for v in range(g.n)]
    return _support_entropy_values(ident, list(g.adj), g.n)


def tableau_entropy_values(t: Tableau) -> tuple[int, ...]:
    return _support_entropy_values(list(t.x.rows), list(t.z.rows), t.n)


# ---------------------------------------------------------------------------
# stabilizer group enumeration


def _rref_matrices(n: int, t: int):
    """All full-rank t×n matrices in RREF, as (rows, pivots)."""
    if t == 0:
        yield [], ()
        return
    for pivots in combinations(range(n), t):
        pivot_set = set(pivots)
        slots = [
            (i, c)
            for i in range(t)
            for c in range(pivots[i] + 1, n)
            if c not in pivot_set
        ]
        base = [1 << pivots[i] for i in range(t)]
        for bits in range(1 << len(slots)):
            rows = base.copy()
            for s, (i, c) in enumerate(slots):
                if (bits >> s) & 1:
                    rows[i] |= 1 << c
            yield rows, pivots


def _kernel_basis(rows, pivots, n: int) -> list[int]:
    """Basis of {v : every row · v = 0} for an RREF matrix."""
    pivot_set = set(pivots)
    out = []
    for f in range(n):
        if f in pivot_set:
            continue
        v = 1 << f
        for i, p in enumerate(pivots):
            if (rows[i] >> f) & 1:
                v |= 1 << p
        out.append(v)
    return out


def _group_generators(n: int):
    """Generator rows (x_rows, z_rows) of every unsigned stabilizer group."""
    for t in range(n + 1):
        for rows, pivots in _rref_matrices(n, t):
            kernel = _kernel_basis(rows, pivots, n)
            tri = [(i, j) for i in range(t) for j in range(i, t)]
            for bits in range(1 << len(tri)):
                a = [[0] * t for _ in range(t)]
                for s, (i, j) in enumerate(tri):
                    if (bits >> s) & 1:
                        a[i][j] = a[j][i] = 1
                x_rows = list(rows) + [0] * (n - t)
                z_rows = [
                    sum(a[i][j] << pivots[j] for j in range(t)) for i in range(t)
                ] + kernel
                yield x_rows, z_rows


def enumerate_stabilizer_groups(n: int):
    """Each unsigned stabilizer group once, as a canonical-RREF Tableau."""
    if not 1 <= n <= 6:
        raise ValueError("group enumeration capped at n ≤ 6")
    for x_rows, z_rows in _group_generators(n):
        combined = BitMatrix(
            tuple(xr | (zr << n) for xr, zr in zip(x_rows, z_rows)), 2 * n
        )
        reduced, _ = rref(combined)
        low = (1 << n) - 1
        yield Tableau(
            n,
            BitMatrix(tuple(r & low for r in reduced.rows), n),
            BitMatrix(tuple(r >> n for r in reduced.rows), n),
        )


# ---------------------------------------------------------------------------
# numpy fast paths


def _zeta_and_values(counts: np.ndarray, n: int) -> np.ndarray:
    """In-place subset-sum of support histograms, then entropy values."""
    size = 1 << n
    for b in range(n):
        bit = 1 << b
        upper = [m for m in range(size) if m & bit]
        lower = [m ^ bit for m in upper]
        counts[:, upper] += counts[:, lower]
    pop = np.array([bin(m).count("1") for m in range(size)], dtype=np.int16)
    log2 = np.zeros(size + 1, dtype=np.int16)
    for e in range(n + 1):
        log2[1 << e] = e
    return (pop[None, 1:] - log2[counts[:, 1:]]).astype(np.uint8)


def _graph_batch_values(n: int, start: int, stop: int) -> np.ndarray:
    """Entropy-value rows for labeled graphs with edge masks start..stop−1."""
    pairs = list(combinations(range(n), 2))
    masks = np.arange(start, stop, dtype=np.int64)
    batch = masks.shape[0]
    cols = np.zeros((batch, n), dtype=np.int16)
    for e, (v, w) in enumerate(pairs):
        bit = ((masks >> e) & 1).astype(np.int16)
        cols[:, v] |= bit << w
        cols[:, w] |= bit << v
    size = 1 << n
    counts = np.zeros((batch, size), dtype=np.uint16)
    rows_idx = np.arange(batch)
    z = np.zeros(batch, dtype=np.int16)
    counts[:, 0] = 1
    for t in range(1, size):
        v = ((t & -t).bit_length()) - 1
        z ^= cols[:, v]
        supp = z | np.int16(t ^ (t >> 1))
        counts[rows_idx, supp] += 1
    return _zeta_and_values(counts, n)


def _graph_chunk_tally(args) -> dict[bytes, tuple[int, int]]:
    n, start, stop = args
    vals = _graph_batch_values(n, start, stop)
    out: dict[bytes, tuple[int, int]] = {}
    for offset, row in enumerate(vals):
        key = row.tobytes()
        prev = out.get(key)
        if prev is None:
            out[key] = (1, start + offset)
        else:
            out[key] = (prev[0] + 1, prev[1])
    return out


def _vector_counts_graphs(n: int, jobs: int = 1) -> dict[bytes, tuple[int, int]]:
    """Distinct entropy vectors over all labeled graphs.

    Returns vector-bytes -> (graph count, smallest realizing edge mask).
    """
    total = 1 << (n * (n - 1) // 2)
    if n <= 5:
        out: dict[bytes, tuple[int, int]] = {}
        for mask, g in enumerate(enumerate_graphs(n)):
            key = bytes(graph_entropy_values(g))
            prev = out.get(key)
            out[key] = (1, mask) if prev is None else (prev[0] + 1, prev[1])
        return out
    batch = 1 << 15
    chunks = [(n, s, min(s + batch, total)) for s in range(0, total, batch)]
    if jobs > 1:
        with multiprocessing.Pool(jobs) as pool:
            partials = pool.map(_graph_chunk_tally, chunks)
    else:
        partials = [_graph_chunk_tally(c) for c in chunks]
    merged: dict[bytes, tuple[int, int]] = {}
    for part in partials:
        for key, (cnt, rep) in part.items():
            prev = merged.get(key)
            merged[key] = (cnt, rep) if prev is None else (prev[0] + cnt, min(prev[1], rep))
    return merged


def _group_batch_values(n: int, rows, pivots, a_lo: int, a_hi: int) -> np.ndarray:
    """Entropy-value rows for the groups built on one X-part subspace,
    sweeping the symmetric-matrix index from a_lo to a_hi−1."""
    t = len(rows)
    kernel = _kernel_basis(rows, pivots, n)
    tri = [(i, j) for i in range(t) for j in range(i, t)]
    slot = {(i, j): s for s, (i, j) in enumerate(tri)}
    a_idx = np.arange(a_lo, a_hi, dtype=np.int64)
    batch = a_idx.shape[0]
    # pivot-bit pattern of each symmetric-matrix row, per group in the batch
    zrows_piv = np.zeros((t, batch), dtype=np.int16)
    for i in range(t):
        for j in range(t):
            s = slot[(min(i, j), max(i, j))]
            zrows_piv[i] |= (((a_idx >> s) & 1) << j).astype(np.int16)
    # spread t pivot bits back to vertex positions
    lut = np.zeros(1 << t, dtype=np.int16)
    for pat in range(1 << t):
        lut[pat] = sum(((pat >> j) & 1) << pivots[j] for j in range(t))
    kern_xor = [0] * (1 << (n - t))
    for s in range(1, 1 << (n - t)):
        v = (s & -s).bit_length() - 1
        kern_xor[s] = kern_xor[s ^ (s & -s)] ^ kernel[v]
    x_xor = [0] * (1 << t)
    for s in range(1, 1 << t):
        v = (s & -s).bit_length() - 1
        x_xor[s] = x_xor[s ^ (s & -s)] ^ rows[v]
    size = 1 << n
    counts = np.zeros((batch, size), dtype=np.uint16)
    rows_idx = np.arange(batch)
    zp = np.zeros(batch, dtype=np.int16)
    for s1_step in range(1 << t):
        if s1_step:
            v = (s1_step & -s1_step).bit_length() - 1
            zp ^= zrows_piv[v]
        s1 = s1_step ^ (s1_step >> 1)
        zvert = lut[zp]
        xmask = x_xor[s1]
        for s2 in range(1 << (n - t)):
            supp = (zvert ^ np.int16(kern_xor[s2])) | np.int16(xmask)
            counts[rows_idx, supp] += 1
    return _zeta_and_values(counts, n)


def _vector_counts_groups(n: int) -> dict[bytes, int]:
    """Distinct entropy vectors over all unsigned stabilizer groups."""
    out: dict[bytes, int] = {}
    if n <= 5:
        for x_rows, z_rows in _group_generators(n):
            key = bytes(_support_entropy_values(x_rows, z_rows, n))
            out[key] = out.get(key, 0) + 1
        return out
    batch = 1 << 15
    for t in range(n + 1):
        total_a = 1 << (t * (t + 1) // 2)
        for rows, pivots in _rref_matrices(n, t):
            for a_lo in range(0, total_a, batch):
                vals = _group_batch_values(n, rows, pivots, a_lo, min(a_lo + batch, total_a))
                for row in vals:
                    key = row.tobytes()
                    out[key] = out.get(key, 0) + 1
    return out


# ---------------------------------------------------------------------------
# canonicalization and census aggregation


def _perm_table(n: int) -> np.ndarray:
    full = (1 << n) - 1
    perms = list(permutations(range(n)))
    table = np.zeros((len(perms), full), dtype=np.int32)
    for pi, perm in enumerate(perms):
        for m in range(1, full + 1):
            table[pi, m - 1] = entmod.permute_mask(m, perm) - 1
    return table


def _canonical_values(vals: tuple[int, ...], table: np.ndarray) -> tuple[int, ...]:
    arr = np.frombuffer(bytes(vals), dtype=np.uint8)
    cand = arr[table]
    active = np.arange(cand.shape[0])
    for col in range(cand.shape[1]):
        column = cand[active, col]
        best = column.min()
        active = active[column == best]
        if active.shape[0] == 1:
            break
    return tuple(int(v) for v in cand[active[0]])


def vector_census(
    n: int, source: str = "graphs", jobs: int = 1, allow_heavy: bool = False
) -> CensusResult:
    """Distinct entropy vectors and exchange classes over one source family."""
    if source == "graphs":
        if n > 8 or (n == 8 and not allow_heavy):
            raise ValueError("graph census capped at n ≤ 7 (8 with allow_heavy)")
        raw = _vector_counts_graphs(n, jobs)
        vectors = {tuple(key): cnt for key, (cnt, _rep) in raw.items()}
        reps: dict[tuple[int, ...], Graph | None] = {}
        pairs = list(combinations(range(n), 2))
        for key, (_cnt, rep_mask) in raw.items():
            edges = [
                (pairs[e][0] + 1, pairs[e][1] + 1)
                for e in range(len(pairs))
                if (rep_mask >> e) & 1
            ]
            reps[tuple(key)] = graphmod.from_edges(n, edges)
    elif source == "groups":
        if n > 6:
            raise ValueError("group census capped at n ≤ 6")
        raw_g = _vector_counts_groups(n)
        vectors = {tuple(key): cnt for key, cnt in raw_g.items()}
        reps = {vals: None for vals in vectors}
    else:
        raise ValueError(f"unknown source {source!r}")

    table = _perm_table(n) if n >= 6 else None
    classes: dict[tuple[int, ...], ClassInfo] = {}
    multiplier = (1 << n) if source == "groups" else 1
    for vals, cnt in vectors.items():
        if table is not None:
            canon = _canonical_values(vals, table)
        else:
            canon = entmod.canonicalize(EntropyVector(n, vals)).values
        info = classes.get(canon)
        if info is None:
            tally = mmi_tally(EntropyVector(n, canon))
            classes[canon] = ClassInfo(canon, tally, cnt * multiplier, 1)
        else:
            info.state_count += cnt * multiplier
            info.member_vectors += 1
    return CensusResult(n, source, vectors, reps, classes)


def state_census(n: int, jobs: int = 1) -> CensusRow:
    """Per-state MMI bucket counts over all signed stabilizer states."""
    if n > 6:
        raise ValueError("state census capped at n ≤ 6")
    counts = _vector_counts_groups(n)
    saturate = satisfy = fail = 0
    distinct = len(counts)
    failing_vectors = 0
    tally_cache: dict[bytes, MmiTally] = {}
    for key, cnt in counts.items():
        tally = tally_cache.get(key)
        if tally is None:
            tally = mmi_tally(EntropyVector(n, tuple(key)))
            tally_cache[key] = tally
        states = cnt << n
        if tally.fails:
            fail += states
            failing_vectors += 1
        elif tally.satisfies:
            satisfy += states
        else:
            saturate += states
    result = vector_census_classes_count(n, counts)
    return CensusRow(
        n,
        (1 << n) * stabilizer_group_count(n),
        saturate,
        satisfy,
        fail,
        distinct,
        result,
        failing_vectors,
    )


def vector_census_classes_count(n: int, counts: dict[bytes, int]) -> int:
    table = _perm_table(n) if n >= 6 else None
    canon_set = set()
    for key in counts:
        vals = tuple(key)
        if table is not None:
            canon_set.add(_canonical_values(vals, table))
        else:
            canon_set.add(entmod.canonicalize(EntropyVector(n, vals)).values)
    return len(canon_set)


# ---------------------------------------------------------------------------
# conjecture scans


def _orbit_four_star_search(g: Graph, budget: int) -> tuple[Graph | None, int]:
    """BFS the LC orbit until a member has an induced four-star."""
    seen = {g}
    queue = deque([g])
    while queue:
        cur = queue.popleft()
        if graphmod.induced_four_stars(cur):
            return cur, len(seen)
        for a in range(1, g.n + 1):
            if cur.adj[a - 1] == 0:
                continue
            nxt = graphmod.local_complement(cur, a)
            if nxt not in seen:
                if len(seen) >= budget:
                    return None, len(seen)
                seen.add(nxt)
                queue.append(nxt)
    return None, len(seen)


def four_star_conjecture_scan(n: int, budget: int = 10**6, jobs: int = 1) -> dict:
    """For every MMI-failing entropy vector, search a realizing graph's LC
    orbit for an induced four-star; counterexamples are expected empty."""
    if n > 8:
        raise ValueError("scan capped at n ≤ 8")
    if n < 4:
        return {"n": n, "failing_vectors": 0, "witnesses": [], "counterexamples": []}
    raw = _vector_counts_graphs(n, jobs)
    pairs = list(combinations(range(n), 2))
    witnesses = []
    counterexamples = []
    budget_exceeded = []
    idx = 0
    for key, (_cnt, rep_mask) in sorted(raw.items()):
        tally = mmi_tally(EntropyVector(n, tuple(key)))
        if not tally.fails:
            continue
        idx += 1
        edges = [
            (pairs[e][0] + 1, pairs[e][1] + 1)
            for e in range(len(pairs))
            if (rep_mask >> e) & 1
        ]
        g = graphmod.from_edges(n, edges)
        member, searched = _orbit_four_star_search(g, budget)
        record = {
            "vector_id": idx,
            "representative": graphmod.to_graph6(g),
            "orbit_searched": searched,
        }
        if member is not None:
            record["witness"] = graphmod.to_graph6(member)
            witnesses.append(record)
        elif searched >= budget:
            budget_exceeded.append(record)
        else:
            counterexamples.append(record)
    return {
        "n": n,
        "failing_vectors": idx,
        "witnesses": witnesses,
        "counterexamples": counterexamples,
        "budget_exceeded": budget_exceeded,
    }


def has_nontrivial_partition(g: Graph) -> bool:
    """Whether some generalized-star partition has a nontrivial triple
    intersection of block column spaces."""
    return (
        starmod.find_star_partition(g, require_nontrivial=True) is not None
    )


def nontrivial_intersection_scan(n: int, jobs: int = 1) -> dict:
    """Verify: a nontrivial-intersection partition implies the state fails
    some MMI instance.  Only graphs whose vector fails nothing need the
    partition search; any hit there is a counterexample."""
    if n > 7:
        raise ValueError("scan capped at n ≤ 7")
    counterexamples = []
    searched = 0
    tally_cache: dict[tuple[int, ...], bool] = {}
    for g in enumerate_graphs(n):
        vals = graph_entropy_values(g)
        fails = tally_cache.get(vals)
        if fails is None:
            fails = mmi_tally(EntropyVector(n, vals)).fails > 0
            tally_cache[vals] = fails
        if fails:
            continue  # implication holds whatever the partitions are
        searched += 1
        if n >= 4 and has_nontrivial_partition(g):
            counterexamples.append(graphmod.to_graph6(g))
    return {
        "n": n,
        "graphs_searched": searched,
        "counterexamples": counterexamples,
    }
