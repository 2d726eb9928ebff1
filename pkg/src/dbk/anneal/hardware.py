"""Chimera-style hardware connectivity graphs.

A Chimera graph of grid parameter m is an m x m lattice of K4,4 unit cells:
four "left" qubits fully coupled to four "right" qubits inside each cell,
left qubit i coupled to left qubit i of the cell below, and right qubit j
coupled to right qubit j of the cell to the right. Qubit ids are linear:
id = 8*(row*m + col) + 4*side + k with side 0 = left, 1 = right, k in 0..3.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class HardwareGraph:
    qubits: frozenset[int]
    couplers: frozenset[tuple[int, int]]
    family: str
    m: int

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {q: set() for q in self.qubits}
        for a, b in self.couplers:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def has_coupler(self, a: int, b: int) -> bool:
        key = (a, b) if a < b else (b, a)
        return key in self.couplers


def chimera_qubit(m: int, row: int, col: int, side: int, k: int) -> int:
    """Linear id of the qubit at cell (row, col), side 0=left/1=right, index k."""
    return 8 * (row * m + col) + 4 * side + k


def build_chimera(m: int) -> HardwareGraph:
    """Chimera hardware graph with 8*m^2 qubits and 16*m^2 + 8*m*(m-1) couplers."""
    if m < 1:
        raise ValueError("grid parameter m must be >= 1")
    couplers: set[tuple[int, int]] = set()

    def add(a: int, b: int) -> None:
        couplers.add((a, b) if a < b else (b, a))

    for row in range(m):
        for col in range(m):
            for i in range(4):
                left = chimera_qubit(m, row, col, 0, i)
                # intra-cell K4,4
                for j in range(4):
                    add(left, chimera_qubit(m, row, col, 1, j))
                # left side couples vertically
                if row + 1 < m:
                    add(left, chimera_qubit(m, row + 1, col, 0, i))
                # right side couples horizontally
                if col + 1 < m:
                    add(
                        chimera_qubit(m, row, col, 1, i),
                        chimera_qubit(m, row, col + 1, 1, i),
                    )
    qubits = frozenset(range(8 * m * m))
    return HardwareGraph(qubits=qubits, couplers=frozenset(couplers), family="chimera", m=m)
