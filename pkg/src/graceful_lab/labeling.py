"""Vertex labelings and the graceful / alpha predicates on them."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence, Union

from .tree import Tree


class LabelingError(ValueError):
    pass


@dataclass(frozen=True)
class Labeling:
    """Injective map vertex -> label, stored as ``labels[v]``."""

    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        labels = tuple(int(x) for x in self.labels)
        n = len(labels)
        if sorted(labels) != list(range(n)):
            if len(set(labels)) != n:
                raise LabelingError(f"labeling is not injective: {list(labels)}")
            raise LabelingError(f"labels must be exactly 0..{n - 1}: {list(labels)}")
        object.__setattr__(self, "labels", labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __getitem__(self, v: int) -> int:
        return self.labels[v]

    def __iter__(self):
        return iter(self.labels)

    def vertex_of(self, label: int) -> int:
        return self.labels.index(label)

    def to_json(self) -> str:
        return json.dumps({"labels": list(self.labels)})

    @classmethod
    def from_json(cls, text: str) -> "Labeling":
        data = json.loads(text)
        if isinstance(data, dict):
            data = data["labels"]
        return cls(tuple(data))


LabelingLike = Union[Labeling, Sequence[int]]


def as_labeling(tree: Tree, labeling: LabelingLike) -> Labeling:
    lab = labeling if isinstance(labeling, Labeling) else Labeling(tuple(labeling))
    if len(lab) != tree.n:
        raise LabelingError(f"labeling has {len(lab)} entries but the tree has {tree.n} vertices")
    return lab


@dataclass(frozen=True)
class AlphaResult:
    is_bipartite_labeling: bool
    critical: int | None = None
    low_side: frozenset[int] | None = None


def edge_weights(tree: Tree, labeling: LabelingLike) -> tuple[int, ...]:
    """``|f(u) - f(v)|`` for each edge, in ``tree.edges`` order."""
    lab = as_labeling(tree, labeling)
    return tuple(abs(lab[u] - lab[v]) for u, v in tree.edges)


def is_graceful(tree: Tree, labeling: LabelingLike) -> bool:
    weights = edge_weights(tree, labeling)
    return set(weights) == set(range(1, tree.n)) and len(weights) == tree.n - 1


def bipartite_critical(tree: Tree, labeling: LabelingLike) -> AlphaResult:
    """Find the separating number, if any.

    The low side of a bipartite labeling of a connected tree is one whole
    color class, so only the two classes need to be tried.  The returned
    critical number is the largest label on the low side.
    """
    lab = as_labeling(tree, labeling)
    for side in tree.profile.bipartition:
        if not side:
            continue
        c = max(lab[v] for v in side)
        if all((lab[u] <= c) != (lab[v] <= c) for u, v in tree.edges):
            return AlphaResult(True, c, frozenset(v for v in range(tree.n) if lab[v] <= c))
    return AlphaResult(False)


def is_alpha(tree: Tree, labeling: LabelingLike) -> int | None:
    """Critical number of an alpha-labeling, ``None`` if not one."""
    lab = as_labeling(tree, labeling)
    if not is_graceful(tree, lab):
        return None
    return bipartite_critical(tree, lab).critical


def complement(labeling: LabelingLike) -> Labeling:
    lab = labeling if isinstance(labeling, Labeling) else Labeling(tuple(labeling))
    top = len(lab) - 1
    return Labeling(tuple(top - x for x in lab))


def weight_report(tree: Tree, labeling: LabelingLike) -> dict:
    """JSON-ready summary used by ``verify`` and certificates."""
    lab = as_labeling(tree, labeling)
    weights = edge_weights(tree, lab)
    alpha = bipartite_critical(tree, lab)
    graceful = is_graceful(tree, lab)
    return {
        "labels": list(lab.labels),
        "edges": [[u, v] for u, v in tree.edges],
        "weights": list(weights),
        "graceful": graceful,
        "bipartite": alpha.is_bipartite_labeling,
        "critical": alpha.critical,
        "alpha": alpha.critical if graceful else None,
    }
