"""Exhaustive search for graceful and alpha-labelings under constraints.

Two independent routes produce the same :class:`SearchCertificate`:

* :func:`search_graceful`, a backtracking engine that assigns labels along a
  BFS order from a center.  Every placed vertex fixes one edge weight, and
  used labels / used weights are kept as bitmasks.
* :func:`brute_force_oracle`, which walks all ``n!`` permutations and checks
  each one against the definitions directly.

In alpha mode the engine uses the forced critical number: a low side of
size ``a`` must carry exactly the labels ``0..a-1``, so ``c = a - 1`` and
every vertex domain is cut down before the search starts.
"""

from __future__ import annotations

import itertools
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Literal, Mapping

from .labeling import Labeling, is_alpha, is_graceful
from .tree import Tree, canonical_code

Mode = Literal["first", "all", "count"]
MODES = ("first", "all", "count")
ORACLE_MAX_N = 9
THREADS_ENV = "GRACEFUL_LAB_THREADS"


class ConstraintError(ValueError):
    """Constraints that contradict each other or the tree."""


@dataclass(frozen=True)
class ConstraintSet:
    fixed: Mapping[int, int] = field(default_factory=dict)
    require_alpha: bool = False
    critical_on: int | None = None
    max_on: int | None = None
    zero_on: int | None = None

    def __post_init__(self) -> None:
        fixed = {int(v): int(l) for v, l in dict(self.fixed).items()}
        if len(set(fixed.values())) != len(fixed):
            raise ConstraintError(f"two vertices fixed to the same label: {fixed}")
        object.__setattr__(self, "fixed", dict(sorted(fixed.items())))
        # the critical number only exists for bipartite labelings
        if self.critical_on is not None and not self.require_alpha:
            object.__setattr__(self, "require_alpha", True)

    def __hash__(self) -> int:
        return hash((tuple(self.fixed.items()), self.require_alpha, self.critical_on, self.max_on, self.zero_on))

    def to_dict(self) -> dict:
        return {
            "fixed": {str(v): l for v, l in self.fixed.items()},
            "require_alpha": self.require_alpha,
            "critical_on": self.critical_on,
            "max_on": self.max_on,
            "zero_on": self.zero_on,
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "ConstraintSet":
        return cls(
            fixed={int(k): int(v) for k, v in data.get("fixed", {}).items()},
            require_alpha=bool(data.get("require_alpha", False)),
            critical_on=data.get("critical_on"),
            max_on=data.get("max_on"),
            zero_on=data.get("zero_on"),
        )

    def pins(self, n: int) -> dict[int, int]:
        """Every vertex whose label is known up front (critical excluded)."""
        pins: dict[int, int] = {}
        wanted = list(self.fixed.items())
        if self.zero_on is not None:
            wanted.append((self.zero_on, 0))
        if self.max_on is not None:
            wanted.append((self.max_on, n - 1))
        for v, l in wanted:
            if not 0 <= v < n:
                raise ConstraintError(f"vertex {v} out of range 0..{n - 1}")
            if not 0 <= l < n:
                raise ConstraintError(f"label {l} out of range 0..{n - 1}")
            if pins.get(v, l) != l:
                raise ConstraintError(f"vertex {v} required to carry both {pins[v]} and {l}")
            pins[v] = l
        if len(set(pins.values())) != len(pins):
            raise ConstraintError(f"constraints put one label on two vertices: {pins}")
        if self.critical_on is not None and not 0 <= self.critical_on < n:
            raise ConstraintError(f"vertex {self.critical_on} out of range 0..{n - 1}")
        return pins


@dataclass
class SearchCertificate:
    tree_code: str
    n: int
    constraints: ConstraintSet
    mode: str
    status: Literal["SAT", "UNSAT"]
    witnesses: list[tuple[int, ...]]
    nodes_explored: int
    oracle_checked: bool = False
    count: int | None = None
    forced_critical: int | None = None
    oracle_assignments: int | None = None

    @property
    def sat(self) -> bool:
        return self.status == "SAT"

    def witness_set(self) -> set[tuple[int, ...]]:
        return set(self.witnesses)

    def to_dict(self) -> dict:
        return {
            "tree": self.tree_code,
            "n": self.n,
            "constraints": self.constraints.to_dict(),
            "mode": self.mode,
            "status": self.status,
            "witnesses": [list(w) for w in self.witnesses],
            "count": self.count,
            "forced_critical": self.forced_critical,
            "nodes_explored": self.nodes_explored,
            "oracle_checked": self.oracle_checked,
            "oracle_assignments": self.oracle_assignments,
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def forced_critical(tree: Tree, critical_on: int) -> int:
    """``c`` for an alpha-labeling whose low side contains ``critical_on``."""
    return len(tree.profile.side_of(critical_on)) - 1


@dataclass(frozen=True)
class _Plan:
    """One concrete search problem: vertex order plus per-vertex label masks."""

    n: int
    order: tuple[int, ...]
    parent: tuple[int, ...]
    domains: tuple[int, ...]
    adjacency: tuple[frozenset[int], ...]


def _plans(tree: Tree, cs: ConstraintSet) -> tuple[list[_Plan], int | None]:
    n = tree.n
    pins = cs.pins(n)
    full = (1 << n) - 1
    base = [full] * n
    for v, l in pins.items():
        base[v] = 1 << l

    splits: list[list[int]] = []
    forced = None
    if not cs.require_alpha:
        splits.append(base)
    else:
        prof = tree.profile
        if cs.critical_on is not None:
            low = prof.side_of(cs.critical_on)
            if cs.max_on is not None and cs.max_on in low and n > 1:
                raise ConstraintError(
                    f"max_on={cs.max_on} lies on the low side with critical_on={cs.critical_on}"
                )
            forced = len(low) - 1
            if pins.get(cs.critical_on, forced) != forced:
                raise ConstraintError(
                    f"vertex {cs.critical_on} must carry the critical number {forced}"
                )
            candidates = [(low, {cs.critical_on: forced})]
        else:
            candidates = [(side, {}) for side in prof.bipartition if side]
        for low, extra in candidates:
            c = len(low) - 1
            low_mask = (1 << (c + 1)) - 1
            doms = [
                base[v] & (low_mask if v in low else full & ~low_mask)
                for v in range(n)
            ]
            for v, l in extra.items():
                doms[v] &= 1 << l
            splits.append(doms)

    root = tree.profile.centers[0]
    order = [root]
    parent = [-1] * n
    seen = {root}
    for v in order:
        for w in tree.adjacency[v]:
            if w not in seen:
                seen.add(w)
                parent[w] = v
                order.append(w)
    adjacency = tuple(frozenset(a) for a in tree.adjacency)
    plans = [_Plan(n, tuple(order), tuple(parent), tuple(d), adjacency) for d in splits]
    return plans, forced


def _run_plan(plan: _Plan, root_label: int, mode: str) -> tuple[list[tuple[int, ...]], int, int]:
    """Backtrack with the root pinned to ``root_label``.

    Returns (witnesses, count, nodes).  A node is a partial assignment that
    survived every pruning check, the root included.
    """
    n = plan.n
    order, parent, domains, adjacency = plan.order, plan.parent, plan.domains, plan.adjacency
    top = n - 1
    labels = [-1] * n
    where = [-1] * n
    found: list[tuple[int, ...]] = []
    count = 0
    nodes = 0

    root = order[0]
    if not domains[root] >> root_label & 1:
        return found, 0, 0

    def extreme_ok(v: int, label: int) -> bool:
        # the weight n-1 can only come from an edge joining labels 0 and n-1
        if label == 0:
            other = where[top]
        elif label == top:
            other = where[0]
        else:
            return True
        return other < 0 or other in adjacency[v]

    def place(i: int, used_labels: int, used_weights: int) -> bool:
        nonlocal count, nodes
        if i == n:
            count += 1
            if mode != "count":
                found.append(tuple(labels))
            return mode == "first"
        v = order[i]
        p = labels[parent[v]]
        avail = domains[v] & ~used_labels
        while avail:
            bit = avail & -avail
            avail ^= bit
            label = bit.bit_length() - 1
            wbit = 1 << abs(label - p)
            if used_weights & wbit or not extreme_ok(v, label):
                continue
            nodes += 1
            labels[v] = label
            where[label] = v
            if place(i + 1, used_labels | bit, used_weights | wbit):
                return True
            labels[v] = -1
            where[label] = -1
        return False

    nodes = 1
    labels[root] = root_label
    where[root_label] = root
    place(1, 1 << root_label, 0)
    if mode == "all":
        found.sort()
    return found, count, nodes


def _run_task(args: tuple[_Plan, int, str]) -> tuple[list[tuple[int, ...]], int, int]:
    return _run_plan(*args)


def resolve_threads(threads: int | None) -> int:
    if threads is None:
        threads = int(os.environ.get(THREADS_ENV, "1") or 1)
    return max(1, threads)


def search_graceful(
    tree: Tree,
    constraints: ConstraintSet | None = None,
    mode: Mode = "first",
    threads: int | None = None,
) -> SearchCertificate:
    """Exhaustively search for graceful labelings meeting ``constraints``.

    The space is split into tasks by (alpha side choice, root label).  With
    ``threads > 1`` the tasks run in worker processes; results are merged in
    task order so the certificate, ``nodes_explored`` included, does not
    depend on the thread count.  In ``first`` mode only the tasks up to the
    first satisfiable one are counted, which is exactly what a sequential
    run visits.
    """
    cs = constraints or ConstraintSet()
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    plans, forced = _plans(tree, cs)
    tasks = [(plan, label, mode) for plan in plans for label in range(tree.n)]

    workers = resolve_threads(threads)
    results: list[tuple[list[tuple[int, ...]], int, int]] = []
    if workers == 1:
        for t in tasks:
            results.append(_run_task(t))
            if mode == "first" and results[-1][1]:
                break
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_task, tasks))
        if mode == "first":
            for i, r in enumerate(results):
                if r[1]:
                    results = results[: i + 1]
                    break

    witnesses: list[tuple[int, ...]] = []
    count = 0
    nodes = 0
    for found, c, k in results:
        witnesses.extend(found)
        count += c
        nodes += k
    if mode == "first":
        witnesses = witnesses[:1]
    elif mode == "all":
        witnesses.sort()
    return SearchCertificate(
        tree_code=canonical_code(tree),
        n=tree.n,
        constraints=cs,
        mode=mode,
        status="SAT" if count else "UNSAT",
        witnesses=witnesses,
        nodes_explored=nodes,
        count=count if mode != "first" else min(count, 1),
        forced_critical=forced,
    )


def _separators(tree: Tree, labels: tuple[int, ...]) -> list[int]:
    return [
        c
        for c in range(tree.n)
        if all((labels[u] <= c) != (labels[v] <= c) for u, v in tree.edges)
    ]


def brute_force_oracle(tree: Tree, constraints: ConstraintSet | None = None) -> SearchCertificate:
    """Check every permutation of ``0..n-1`` straight from the definitions.

    Shares no code with the backtracking engine: constraints are checked
    literally, and the alpha condition by trying every separator ``c``.
    """
    cs = constraints or ConstraintSet()
    n = tree.n
    if n > ORACLE_MAX_N:
        raise ValueError(f"brute force oracle is limited to n <= {ORACLE_MAX_N}, got {n}")
    cs.pins(n)
    target = set(range(1, n))
    edges = tree.edges
    witnesses = []
    examined = 0
    for labels in itertools.permutations(range(n)):
        examined += 1
        if any(labels[v] != l for v, l in cs.fixed.items()):
            continue
        if cs.zero_on is not None and labels[cs.zero_on] != 0:
            continue
        if cs.max_on is not None and labels[cs.max_on] != n - 1:
            continue
        weights = {abs(labels[u] - labels[v]) for u, v in edges}
        if weights != target:
            continue
        if cs.require_alpha:
            seps = _separators(tree, labels)
            if not seps:
                continue
            if cs.critical_on is not None and labels[cs.critical_on] not in seps:
                continue
        witnesses.append(labels)
    return SearchCertificate(
        tree_code=canonical_code(tree),
        n=n,
        constraints=cs,
        mode="all",
        status="SAT" if witnesses else "UNSAT",
        witnesses=witnesses,
        nodes_explored=examined,
        oracle_checked=True,
        count=len(witnesses),
        oracle_assignments=examined,
    )


def assert_consistent(cert: SearchCertificate, oracle: SearchCertificate) -> None:
    """Raise ``AssertionError`` if the engine and oracle disagree."""
    assert cert.status == oracle.status, (cert.status, oracle.status)
    found = oracle.witness_set()
    if cert.mode == "all":
        assert cert.witness_set() == found
    elif cert.mode == "count":
        assert cert.count == len(found)
    else:
        assert all(w in found for w in cert.witnesses)


def cross_check(cert: SearchCertificate, tree: Tree) -> SearchCertificate:
    """Re-derive ``cert`` with the oracle and mark it checked."""
    oracle = brute_force_oracle(tree, cert.constraints)
    assert_consistent(cert, oracle)
    cert.oracle_checked = True
    cert.oracle_assignments = oracle.nodes_explored
    return cert


def validate_witness(tree: Tree, cs: ConstraintSet, labels: tuple[int, ...]) -> None:
    """Re-check a witness with the labeling predicates only."""
    lab = Labeling(labels)
    if not is_graceful(tree, lab):
        raise AssertionError(f"witness {labels} is not graceful")
    for v, l in cs.fixed.items():
        if lab[v] != l:
            raise AssertionError(f"witness {labels} breaks fixed label {v}={l}")
    if cs.zero_on is not None and lab[cs.zero_on] != 0:
        raise AssertionError(f"witness {labels} does not put 0 on {cs.zero_on}")
    if cs.max_on is not None and lab[cs.max_on] != tree.n - 1:
        raise AssertionError(f"witness {labels} does not put {tree.n - 1} on {cs.max_on}")
    if cs.require_alpha:
        c = is_alpha(tree, lab)
        if c is None:
            raise AssertionError(f"witness {labels} is not an alpha-labeling")
        if cs.critical_on is not None and lab[cs.critical_on] != c:
            raise AssertionError(f"witness {labels}: vertex {cs.critical_on} is not at c={c}")


def exists_alpha_with(tree: Tree, critical_on: int, max_on: int, mode: Mode = "first",
                      threads: int | None = None) -> SearchCertificate:
    """Alpha-labeling with ``critical_on`` at the critical number and ``max_on`` at ``n-1``."""
    if critical_on == max_on:
        raise ConstraintError("critical_on and max_on must be different vertices")
    cs = ConstraintSet(require_alpha=True, critical_on=critical_on, max_on=max_on)
    return search_graceful(tree, cs, mode=mode, threads=threads)


__all__ = [
    "ConstraintError",
    "ConstraintSet",
    "SearchCertificate",
    "brute_force_oracle",
    "cross_check",
    "exists_alpha_with",
    "forced_critical",
    "search_graceful",
    "validate_witness",
]
