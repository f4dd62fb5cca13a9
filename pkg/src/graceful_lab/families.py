"""Free trees up to isomorphism, and filters over their profiles.

Generation walks center-rooted level sequences in the order of Wright,
Richmond, Odlyzko and McKay: each step produces the next canonical rooted
tree and skips the ones whose root is not a center.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Literal

from .tree import Tree, canonical_code

MAX_GENERATE_N = 12


def _next_rooted(seq: list[int], p: int | None = None) -> list[int] | None:
    if p is None:
        p = len(seq) - 1
        while seq[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    out = list(seq)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split(seq: list[int]) -> tuple[list[int], list[int]]:
    """First root subtree (levels shifted up by one) and the remainder."""
    m = len(seq)
    ones = [i for i, x in enumerate(seq) if x == 1]
    if len(ones) > 1:
        m = ones[1]
    left = [x - 1 for x in seq[1:m]]
    rest = [0] + seq[m:]
    return left, rest


def _next_free(seq: list[int]) -> list[int]:
    """Advance ``seq`` until the root is a center of the tree."""
    left, rest = _split(seq)
    lh, rh = max(left), max(rest)
    ok = rh >= lh
    if ok and rh == lh:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            ok = False
    if ok:
        return seq
    p = len(left)
    nxt = _next_rooted(seq, p)
    if seq[p] > 2:
        new_left, _ = _split(nxt)
        tail = list(range(1, max(new_left) + 2))
        nxt[-len(tail):] = tail
    return nxt


def _from_levels(seq: list[int]) -> Tree:
    edges = []
    stack: list[int] = []
    for v, depth in enumerate(seq):
        del stack[depth:]
        if stack:
            edges.append((stack[-1], v))
        stack.append(v)
    return Tree.from_edges(len(seq), edges)


def _level_sequences(n: int) -> Iterator[list[int]]:
    if n == 1:
        yield [0]
        return
    seq: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while seq is not None:
        seq = _next_free(seq)
        yield seq
        seq = _next_rooted(seq)


def generate_trees(n: int) -> list[Tree]:
    """One tree per isomorphism class on ``n`` vertices, sorted by canonical code."""
    if not 1 <= n <= MAX_GENERATE_N:
        raise ValueError(f"n must be in 1..{MAX_GENERATE_N}, got {n}")
    by_code: dict[str, Tree] = {}
    for seq in _level_sequences(n):
        t = _from_levels(seq)
        code = canonical_code(t)
        if code in by_code:
            raise AssertionError(f"generator produced {code} twice")
        by_code[code] = t
    return [by_code[c] for c in sorted(by_code)]


def trees_up_to(n_max: int) -> list[Tree]:
    return [t for n in range(1, n_max + 1) for t in generate_trees(n)]


@dataclass(frozen=True)
class FamilyFilter:
    """A conjunction of profile predicates; ``None`` means unconstrained.

    ``center_parity`` asks that every center have a degree of that parity.
    """

    min_diameter: int | None = None
    max_diameter: int | None = None
    max_k_distance: int | None = None
    center_parity: Literal["even", "odd"] | None = None
    center_count: int | None = None

    @classmethod
    def diameter(cls, d: int, **kw) -> "FamilyFilter":
        return cls(min_diameter=d, max_diameter=d, **kw)

    def accepts(self, tree: Tree) -> bool:
        prof = tree.profile
        if self.min_diameter is not None and prof.diameter < self.min_diameter:
            return False
        if self.max_diameter is not None and prof.diameter > self.max_diameter:
            return False
        if self.max_k_distance is not None and prof.k_distance > self.max_k_distance:
            return False
        if self.center_count is not None and len(prof.centers) != self.center_count:
            return False
        if self.center_parity is not None:
            want = 0 if self.center_parity == "even" else 1
            if any(tree.degree(c) % 2 != want for c in prof.centers):
                return False
        return True

    def to_dict(self) -> dict:
        return {
            "min_diameter": self.min_diameter,
            "max_diameter": self.max_diameter,
            "max_k_distance": self.max_k_distance,
            "center_parity": self.center_parity,
            "center_count": self.center_count,
        }


def filter_family(trees: Iterable[Tree], spec: FamilyFilter) -> list[Tree]:
    return [t for t in trees if spec.accepts(t)]

