"""Labeling questions asked of a single tree, and sweeps over tree families.

Each probe decides whether it applies to a tree, runs the constrained
searches, and returns a :class:`ProbeVerdict`.  A verdict *fails* when the
probe applies and every search it ran came back UNSAT.  For ``n`` up to
:data:`~graceful_lab.search.ORACLE_MAX_N` each certificate is re-derived by
the brute force oracle before it is reported.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable

from .families import FamilyFilter, filter_family, trees_up_to
from .fixtures import S, S_NAMES
from .search import (
    ORACLE_MAX_N,
    ConstraintSet,
    SearchCertificate,
    cross_check,
    exists_alpha_with,
    search_graceful,
    validate_witness,
)
from .tree import Tree, canonical_code


@dataclass
class ProbeVerdict:
    probe: str
    code: str
    n: int
    applicable: bool
    reason: str = ""
    certificates: dict[str, SearchCertificate] = field(default_factory=dict)

    @property
    def verdicts(self) -> dict[str, str]:
        return {k: c.status for k, c in self.certificates.items()}

    @property
    def sat_assignments(self) -> list[str]:
        return [k for k, c in self.certificates.items() if c.sat]

    @property
    def failed(self) -> bool:
        return self.applicable and bool(self.certificates) and not self.sat_assignments

    def to_dict(self) -> dict:
        return {
            "probe": self.probe,
            "code": self.code,
            "n": self.n,
            "applicable": self.applicable,
            "reason": self.reason,
            "verdicts": self.verdicts,
            "sat_assignments": self.sat_assignments,
            "failed": self.failed,
            "certificates": {k: c.to_dict() for k, c in self.certificates.items()},
        }


def _certify(tree: Tree, cert: SearchCertificate, oracle: bool) -> SearchCertificate:
    for w in cert.witnesses:
        validate_witness(tree, cert.constraints, w)
    if oracle and tree.n <= ORACLE_MAX_N:
        cross_check(cert, tree)
    return cert


def _verdict(probe: str, tree: Tree, applicable: bool, reason: str = "") -> ProbeVerdict:
    return ProbeVerdict(probe, canonical_code(tree), tree.n, applicable, reason)


def probe_q1(tree: Tree, oracle: bool = True, threads: int | None = None) -> ProbeVerdict:
    """Alpha-labeling with the two centers at the critical number and at n-1.

    Applies to lobsters of diameter at most 5 with two centers; both ways of
    assigning {critical, max} to the centers are tried.
    """
    prof = tree.profile
    applicable = len(prof.centers) == 2 and prof.diameter <= 5 and prof.is_lobster
    verdict = _verdict("q1", tree, applicable)
    if not applicable:
        verdict.reason = "needs two centers, diameter <= 5 and a lobster"
        return verdict
    a, b = prof.centers
    for crit, top in ((a, b), (b, a)):
        cert = exists_alpha_with(tree, critical_on=crit, max_on=top, threads=threads)
        verdict.certificates[f"critical={crit},max={top}"] = _certify(tree, cert, oracle)
    return verdict


def probe_q2(tree: Tree, oracle: bool = True, threads: int | None = None) -> ProbeVerdict:
    """Graceful labeling with the center at n-1, for diameter 4 and even center degree."""
    prof = tree.profile
    applicable = (
        prof.diameter == 4 and len(prof.centers) == 1 and tree.degree(prof.centers[0]) % 2 == 0
    )
    verdict = _verdict("q2", tree, applicable)
    if not applicable:
        verdict.reason = "needs diameter 4 and a center of even degree"
        return verdict
    center = prof.centers[0]
    cert = search_graceful(tree, ConstraintSet(max_on=center), threads=threads)
    verdict.certificates[f"max={center}"] = _certify(tree, cert, oracle)
    return verdict


def probe_q3(tree: Tree, oracle: bool = True, threads: int | None = None) -> ProbeVerdict:
    """Alpha-labeling with the center at c and an almost central vertex at n-1.

    Applies to single-center lobsters with diameter between 3 and 5, which
    leaves diameter 4; below that the almost central vertices are leaves.
    """
    prof = tree.profile
    applicable = len(prof.centers) == 1 and 3 <= prof.diameter <= 5 and prof.is_lobster
    verdict = _verdict("q3", tree, applicable)
    if not applicable:
        verdict.reason = "needs one center, diameter 3..5 and a lobster"
        return verdict
    center = prof.centers[0]
    for w in sorted(prof.almost_central):
        cert = exists_alpha_with(tree, critical_on=center, max_on=w, threads=threads)
        verdict.certificates[f"critical={center},max={w}"] = _certify(tree, cert, oracle)
    return verdict


def zero_centered(tree: Tree, oracle: bool = True, threads: int | None = None) -> ProbeVerdict:
    """Graceful labeling with the single center labeled 0."""
    prof = tree.profile
    applicable = len(prof.centers) == 1
    verdict = _verdict("zero", tree, applicable)
    if not applicable:
        verdict.reason = "needs a single center"
        return verdict
    center = prof.centers[0]
    cert = search_graceful(tree, ConstraintSet(zero_on=center), threads=threads)
    verdict.certificates[f"zero={center}"] = _certify(tree, cert, oracle)
    return verdict


def is_zero_centered(tree: Tree) -> bool:
    v = zero_centered(tree)
    if not v.applicable:
        raise ValueError("zero-centering is defined for single-center trees")
    return not v.failed


PROBES: dict[str, Callable[..., ProbeVerdict]] = {
    "q1": probe_q1,
    "q2": probe_q2,
    "q3": probe_q3,
    "zero": zero_centered,
}


def run_probe(name: str, tree: Tree, **kw) -> ProbeVerdict:
    try:
        fn = PROBES[name]
    except KeyError:
        raise ValueError(f"unknown probe {name!r}; choose from {sorted(PROBES)}") from None
    return fn(tree, **kw)


@dataclass
class HuntReport:
    probe: str
    n_max: int
    family: FamilyFilter
    entries: list[ProbeVerdict]

    @property
    def applicable(self) -> list[ProbeVerdict]:
        return [e for e in self.entries if e.applicable]

    @property
    def failures(self) -> list[ProbeVerdict]:
        return [e for e in self.entries if e.failed]

    def to_dict(self) -> dict:
        return {
            "probe": self.probe,
            "n_max": self.n_max,
            "family": self.family.to_dict(),
            "trees": len(self.entries),
            "applicable": len(self.applicable),
            "failures": [e.code for e in self.failures],
            "entries": [e.to_dict() for e in self.entries],
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def hunt(n_max: int, family: FamilyFilter | None = None, probe: str = "q1",
         oracle: bool = True, threads: int | None = None) -> HuntReport:
    """Run ``probe`` on every isomorphism class in ``family`` with ``n <= n_max``.

    Entries are ordered by vertex count, then canonical code.
    """
    if probe not in PROBES:
        raise ValueError(f"unknown probe {probe!r}; choose from {sorted(PROBES)}")
    family = family or FamilyFilter()
    trees = filter_family(trees_up_to(n_max), family)
    entries = [run_probe(probe, t, oracle=oracle, threads=threads) for t in trees]
    return HuntReport(probe, n_max, family, entries)


def relaxed_s_check(oracle: bool = True) -> dict[str, SearchCertificate]:
    """The two relaxations on S that do have alpha-labelings.

    ``critical``: v2 carries the critical number.  ``max``: v2 carries n-1.
    """
    v2 = S_NAMES["v2"]
    checks = {
        "critical": ConstraintSet(require_alpha=True, critical_on=v2),
        "max": ConstraintSet(require_alpha=True, max_on=v2),
    }
    out = {}
    for name, cs in checks.items():
        cert = search_graceful(S, cs, mode="all")
        out[name] = _certify(S, cert, oracle)
    return out
