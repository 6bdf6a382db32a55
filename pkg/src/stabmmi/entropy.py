"""Entropy vectors, MMI instances, outcomes, tallies, and qubit-exchange
canonicalization.

Subsets of qubits are bitmasks with qubit t at bit t−1.  An entropy vector
stores S_A for every nonempty mask A; entries are exact naturals (bits).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import permutations
import json

from . import graphs as graphmod
from . import tableau as tabmod

__all__ = [
    "EntropyVector",
    "MmiInstance",
    "MmiOutcome",
    "MmiTally",
    "entropy_vector",
    "mmi_instances",
    "evaluate_mmi",
    "mmi_tally",
    "canonicalize",
]


class MmiOutcome(Enum):
    SATISFIES = "Satisfies"
    SATURATES = "Saturates"
    FAILS = "Fails"


@dataclass(frozen=True)
class EntropyVector:
    """S_A for all nonempty masks A; values[m-1] holds mask m."""

    n: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        full = (1 << self.n) - 1
        if len(self.values) != full:
            raise ValueError("entropy vector needs one value per nonempty mask")
        if self.values[full - 1] != 0:
            raise ValueError("pure state: full-system entropy must be zero")
        for mask in range(1, full):
            if self.values[mask - 1] != self.values[(full ^ mask) - 1]:
                raise ValueError("pure state: S_A must equal S_complement")
            if self.values[mask - 1] < 0:
                raise ValueError("negative entropy")

    def __getitem__(self, mask: int) -> int:
        if mask == 0:
            return 0
        return self.values[mask - 1]

    def to_json(self, canonical: bool = False) -> str:
        ent = {str(mask): self.values[mask - 1] for mask in range(1, (1 << self.n))}
        return json.dumps({"n": self.n, "entropies": ent, "canonical": canonical}, sort_keys=True)

    @staticmethod
    def from_json(text: str) -> "EntropyVector":
        data = json.loads(text)
        n = int(data["n"])
        vals = [0] * ((1 << n) - 1)
        for key, val in data["entropies"].items():
            vals[int(key) - 1] = int(val)
        return EntropyVector(n, tuple(vals))


@dataclass(frozen=True)
class MmiInstance:
    """Unordered triple of disjoint nonempty subsystem masks, stored i<j<k."""

    i: int
    j: int
    k: int

    def __post_init__(self) -> None:
        i, j, k = self.i, self.j, self.k
        if not (0 < i and 0 < j and 0 < k):
            raise ValueError("subsystems must be nonempty")
        if i & j or i & k or j & k:
            raise ValueError("subsystems must be pairwise disjoint")
        if not i < j < k:
            lo, mid, hi = sorted((i, j, k))
            object.__setattr__(self, "i", lo)
            object.__setattr__(self, "j", mid)
            object.__setattr__(self, "k", hi)


@dataclass(frozen=True)
class MmiTally:
    satisfies: int
    saturates: int
    fails: int

    def as_triple(self) -> tuple[int, int, int]:
        return (self.satisfies, self.saturates, self.fails)


def entropy_vector(source) -> EntropyVector:
    """Full entropy vector of a Graph or a Tableau."""
    if isinstance(source, graphmod.Graph):
        n = source.n
        vals = [graphmod.entropy(source, m) for m in range(1, (1 << n) - 1)] + [0]
    elif isinstance(source, tabmod.Tableau):
        n = source.n
        vals = [tabmod.entropy(source, m) for m in range(1, 1 << n)]
    else:
        raise TypeError(f"unsupported source {type(source).__name__}")
    return EntropyVector(n, tuple(vals))


def _submasks(mask: int):
    """Nonempty submasks of mask."""
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


def mmi_instances(n: int, include_full_union: bool = True) -> list[MmiInstance]:
    """All unordered triples of pairwise-disjoint nonempty subsystems."""
    if n < 3:
        raise ValueError("MMI needs at least three subsystems")
    full = (1 << n) - 1
    out = []
    for i in range(1, full + 1):
        comp_i = full ^ i
        for j in _submasks(comp_i):
            if j <= i:
                continue
            comp_ij = comp_i ^ j
            for k in _submasks(comp_ij):
                if k <= j:
                    continue
                if not include_full_union and (i | j | k) == full:
                    continue
                out.append(MmiInstance(i, j, k))
    out.sort(key=lambda t: (t.i, t.j, t.k))
    return out


def evaluate_mmi(ev: EntropyVector, inst: MmiInstance) -> MmiOutcome:
    """Compare S_IJ + S_IK + S_JK against S_I + S_J + S_K + S_IJK."""
    i, j, k = inst.i, inst.j, inst.k
    lhs = ev[i | j] + ev[i | k] + ev[j | k]
    rhs = ev[i] + ev[j] + ev[k] + ev[i | j | k]
    if lhs > rhs:
        return MmiOutcome.SATISFIES
    if lhs == rhs:
        return MmiOutcome.SATURATES
    return MmiOutcome.FAILS


def mmi_tally(ev: EntropyVector, include_full_union: bool = True) -> MmiTally:
    counts = {MmiOutcome.SATISFIES: 0, MmiOutcome.SATURATES: 0, MmiOutcome.FAILS: 0}
    instances = mmi_instances(ev.n, include_full_union) if ev.n >= 3 else []
    for inst in instances:
        counts[evaluate_mmi(ev, inst)] += 1
    return MmiTally(
        counts[MmiOutcome.SATISFIES], counts[MmiOutcome.SATURATES], counts[MmiOutcome.FAILS]
    )


def permute_mask(mask: int, perm: tuple[int, ...]) -> int:
    """Relabel mask bits: bit v goes to bit perm[v]."""
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << perm[low.bit_length() - 1]
        mask ^= low
    return out


def canonicalize(ev: EntropyVector) -> EntropyVector:
    """Minimum over all qubit relabelings of the mask-ordered value tuple."""
    n = ev.n
    best = ev.values
    for perm in permutations(range(n)):
        cand = tuple(ev.values[permute_mask(m, perm) - 1] for m in range(1, 1 << n))
        if cand < best:
            best = cand
    return EntropyVector(n, best)
