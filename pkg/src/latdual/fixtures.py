"""Small named lattices and spaces used in examples, tests and the CLI.

Element names: in ``C3`` the middle element ``m`` is 1. In ``B2`` the
atoms are ``a = 1`` and ``b = 2``. The points of ``X3`` are ``a, b, c = 0, 1, 2``.
"""

from __future__ import annotations

from .order import FiniteLattice, boolean_lattice, chain
from .topology import FiniteSpace, discrete, indiscrete, validate_topology

A, B, C = 0, 1, 2

C1 = chain(1)  # trivial lattice, 0 = 1
C2 = chain(2)
C3 = chain(3)
B2 = boolean_lattice(2)
B3 = boolean_lattice(3)

# 0 < x, y, z < 1 with x, y, z pairwise incomparable
M3_RELATION = tuple(
    tuple(a == b or a == 0 or b == 4 for b in range(5)) for a in range(5))

D0 = discrete(0)
D1 = discrete(1)
D2 = discrete(2)
D3 = discrete(3)
X3 = validate_topology(3, [0, 1 << B, 1 << A | 1 << B, 1 << B | 1 << C, 0b111])
SIERPINSKI = validate_topology(2, [0, 0b10, 0b11])
INDISCRETE2 = indiscrete(2)

L5 = X3.lattice

LATTICES: dict[str, FiniteLattice] = {
    "C1": C1, "C2": C2, "C3": C3, "B2": B2, "B3": B3, "L5": L5,
}
SPACES: dict[str, FiniteSpace] = {
    "D0": D0, "D1": D1, "D2": D2, "D3": D3, "X3": X3,
    "S2": SIERPINSKI, "I2": INDISCRETE2,
}
