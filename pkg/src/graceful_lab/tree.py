"""Tree representation, parsing and structural classification.

Trees live on vertices ``0..n-1``.  Everything here is immutable; a
:class:`Tree` is validated once on construction and every derived quantity
(:class:`TreeProfile`, canonical code) is a pure function of it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

MAX_VERTICES = 64
DEFAULT_PATH_LIMIT = 10_000


class TreeError(ValueError):
    """Raised for malformed edge lists or edge sets that are not trees."""


@dataclass(frozen=True)
class Tree:
    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = self.n
        if not isinstance(n, int) or n < 1:
            raise TreeError(f"vertex count must be a positive integer, got {n!r}")
        if n > MAX_VERTICES:
            raise TreeError(f"trees with more than {MAX_VERTICES} vertices are not supported")
        norm = []
        for e in self.edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise TreeError(f"edge ({u}, {v}): vertex out of range 0..{n - 1}")
            if u == v:
                raise TreeError(f"self-loop at vertex {u}")
            norm.append((min(u, v), max(u, v)))
        if len(set(norm)) != len(norm):
            raise TreeError("duplicate edge")
        if len(norm) != n - 1:
            raise TreeError(f"a tree on {n} vertices needs {n - 1} edges, got {len(norm)}")
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in norm:
            adj[u].append(v)
            adj[v].append(u)
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != n:
            raise TreeError("edge set is disconnected")
        object.__setattr__(self, "edges", tuple(sorted(norm)))
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Tree":
        return cls(n, tuple((int(u), int(v)) for u, v in edges))

    @classmethod
    def path(cls, n: int) -> "Tree":
        return cls(n, tuple((i, i + 1) for i in range(n - 1)))

    @classmethod
    def star(cls, leaves: int) -> "Tree":
        return cls(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def relabel(self, perm: Sequence[int]) -> "Tree":
        """Return the isomorphic copy where vertex ``v`` becomes ``perm[v]``."""
        return Tree(self.n, tuple((perm[u], perm[v]) for u, v in self.edges))

    def distances_from(self, sources: Iterable[int]) -> list[int]:
        dist = [-1] * self.n
        queue = deque()
        for s in sources:
            dist[s] = 0
            queue.append(s)
        while queue:
            u = queue.popleft()
            for w in self.adjacency[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def path_between(self, u: int, v: int) -> tuple[int, ...]:
        parent = [-1] * self.n
        parent[u] = u
        queue = deque([u])
        while queue:
            x = queue.popleft()
            if x == v:
                break
            for w in self.adjacency[x]:
                if parent[w] < 0:
                    parent[w] = x
                    queue.append(w)
        out = [v]
        while out[-1] != u:
            out.append(parent[out[-1]])
        return tuple(reversed(out))

    def to_edge_list(self, single_line: bool = False) -> str:
        parts = [str(self.n)] + [f"{u} {v}" for u, v in self.edges]
        if single_line:
            return ";".join(parts)
        return "\n".join(parts) + "\n"

    @cached_property
    def profile(self) -> "TreeProfile":
        return profile(self)

    @cached_property
    def code(self) -> str:
        return canonical_code(self)


def parse_tree(text: str) -> Tree:
    """Parse the edge-list format.

    The first record is ``n``, each later record is ``u v``.  Records are
    separated by newlines or by ``;`` (the single-line form written by
    ``gen``).  Anything after ``#`` on a line is ignored.
    """
    records: list[tuple[int, str]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0]
        for chunk in line.split(";"):
            chunk = chunk.strip()
            if chunk:
                records.append((lineno, chunk))
    if not records:
        raise TreeError("empty edge list")
    lineno, head = records[0]
    try:
        n = int(head)
    except ValueError:
        raise TreeError(f"line {lineno}: expected vertex count, got {head!r}") from None
    edges = []
    for lineno, rec in records[1:]:
        fields = rec.split()
        if len(fields) != 2:
            raise TreeError(f"line {lineno}: expected 'u v', got {rec!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise TreeError(f"line {lineno}: non-integer vertex in {rec!r}") from None
        edges.append((u, v))
    return Tree(n, tuple(edges))


@dataclass(frozen=True)
class TreeProfile:
    diameter: int
    centers: tuple[int, ...]
    longest_paths: tuple[tuple[int, ...], ...]
    k_distance: int
    almost_central: frozenset[int]
    bipartition: tuple[frozenset[int], frozenset[int]]
    paths_truncated: bool = False

    @property
    def is_path(self) -> bool:
        return self.k_distance == 0

    @property
    def is_caterpillar(self) -> bool:
        return self.k_distance <= 1

    @property
    def is_lobster(self) -> bool:
        return self.k_distance <= 2

    def side_of(self, v: int) -> frozenset[int]:
        a, b = self.bipartition
        return a if v in a else b


def find_centers(tree: Tree) -> tuple[int, ...]:
    """Centers by repeatedly stripping leaves."""
    n = tree.n
    if n <= 2:
        return tuple(range(n))
    deg = [tree.degree(v) for v in range(n)]
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for leaf in layer:
            for w in tree.adjacency[leaf]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return tuple(sorted(layer))


def longest_paths(tree: Tree, limit: int = DEFAULT_PATH_LIMIT) -> tuple[tuple[tuple[int, ...], ...], bool]:
    """All diametral paths, each oriented from its smaller endpoint.

    Returns the paths in lexicographic order and whether ``limit`` cut the
    enumeration short.
    """
    if tree.n == 1:
        return ((0,),), False
    d0 = tree.distances_from([0])
    far = max(range(tree.n), key=lambda v: d0[v])
    diameter = max(tree.distances_from([far]))
    paths = []
    truncated = False
    for u in range(tree.n):
        du = tree.distances_from([u])
        if max(du) != diameter:
            continue
        for v in range(u + 1, tree.n):
            if du[v] == diameter:
                if len(paths) >= limit:
                    truncated = True
                    break
                paths.append(tree.path_between(u, v))
        if truncated:
            break
    return tuple(sorted(paths)), truncated


def bipartition(tree: Tree) -> tuple[frozenset[int], frozenset[int]]:
    """The 2-coloring classes, the one holding vertex 0 first."""
    dist = tree.distances_from([0])
    a = frozenset(v for v in range(tree.n) if dist[v] % 2 == 0)
    b = frozenset(v for v in range(tree.n) if dist[v] % 2 == 1)
    return a, b


def profile(tree: Tree, path_limit: int = DEFAULT_PATH_LIMIT) -> TreeProfile:
    centers = find_centers(tree)
    paths, truncated = longest_paths(tree, path_limit)
    diameter = len(paths[0]) - 1
    k = min(max(tree.distances_from(p)) for p in paths)
    on_paths = set().union(*paths)
    almost = frozenset(
        w
        for c in centers
        for w in tree.adjacency[c]
        if w in on_paths and w not in centers
    )
    return TreeProfile(
        diameter=diameter,
        centers=centers,
        longest_paths=paths,
        k_distance=k,
        almost_central=almost,
        bipartition=bipartition(tree),
        paths_truncated=truncated,
    )


def _rooted_code(tree: Tree, root: int, parent: int) -> str:
    # iterative post-order; recursion depth would be fine at n <= 64 but
    # this keeps the function usable on any input size
    codes: dict[int, str] = {}
    stack = [(root, parent, False)]
    while stack:
        v, p, done = stack.pop()
        if done:
            kids = sorted(codes.pop(w) for w in tree.adjacency[v] if w != p)
            codes[v] = "(" + "".join(kids) + ")"
            continue
        stack.append((v, p, True))
        for w in tree.adjacency[v]:
            if w != p:
                stack.append((w, v, False))
    return codes[root]


def canonical_code(tree: Tree) -> str:
    """Isomorphism-invariant string: minimal AHU encoding over the centers."""
    return min(_rooted_code(tree, c, -1) for c in find_centers(tree))
