"""Entanglement-entropy vectors and monogamy-of-mutual-information (MMI)
analysis for stabilizer and graph states over GF(2).

Submodules:
    gf2      — bit-packed GF(2) matrices and subspace lattice operations
    tableau  — stabilizer tableaux, Clifford updates, rank entropies
    graphs   — graph states, local complementation, LC orbits, graph6 I/O
    entropy  — entropy vectors, MMI instances, tallies, canonicalization
    star     — generalized-star partitions and column-space classification
    census   — exhaustive graph/group censuses and conjecture scans
    cli      — the `stabmmi` command-line tool
"""

from . import census, cli, entropy, gf2, graphs, star, tableau

__all__ = ["gf2", "tableau", "graphs", "entropy", "star", "census", "cli"]
__version__ = "0.1.0"
