"""The three reference trees, with fixed vertex numbering.

T (6 vertices)::

    0           0 = off-path leaf at v1
     \\
      2 - 3 - 4 - 5     2 = v1, 3 = v (center), 4 = v2
     /
    1

S (7 vertices)::

    0 (u1)
     \\
      2 (v1) - 3 (v) - 4 (v2) - 5 (u3) - 6 (v3)
     /
    1 (u2)

P6 is the path 0-1-2-3-4-5 with centers 2 and 3.
"""

from __future__ import annotations

from .tree import Tree

T = Tree.from_edges(6, [(0, 2), (1, 2), (2, 3), (3, 4), (4, 5)])
T_NAMES = {"leaf0": 0, "leaf1": 1, "v1": 2, "v": 3, "v2": 4, "end": 5}

S = Tree.from_edges(7, [(0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6)])
S_NAMES = {"u1": 0, "u2": 1, "v1": 2, "v": 3, "v2": 4, "u3": 5, "v3": 6}

P6 = Tree.path(6)

FIXTURES = {"T": T, "S": S, "P6": P6}
