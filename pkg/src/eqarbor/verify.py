"""Checks that a proposed coloring is an equitable (q,r)-tree-coloring.

Two independent routes: fast composition rules (the induced subgraph of a
class in a complete multipartite graph is determined by its count vector up to
isomorphism), and an explicit-graph check that materializes the adjacency and
runs union-find cycle detection.  Tests hold the two routes to full agreement.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

from .errors import InstanceTooLarge, MalformedColoring, MissingVertexAssignment
from .model import ClassComposition, TreeColoring

REASON_SIZE_IMBALANCE = "size-imbalance"
REASON_PART_OVERSUBSCRIBED = "part-oversubscribed"
REASON_NOT_FOREST = "not-forest"
REASON_DEGREE_EXCEEDED = "degree-exceeded"

DEFAULT_EXPLICIT_MAX_N = 64

CountsLike = Union[ClassComposition, Sequence[int]]


@dataclass(frozen=True)
class Failure:
    """One verification violation; class_index / part_index where applicable."""

    reason: str
    class_index: Optional[int] = None
    part_index: Optional[int] = None
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    failures: Tuple[Failure, ...] = ()


def _raw_counts(counts: CountsLike) -> Tuple[int, ...]:
    if isinstance(counts, ClassComposition):
        return counts.counts
    return tuple(counts)


def composition_violation(counts: CountsLike, r: int) -> Optional[str]:
    """Classify why a class shape fails at degree bound r, or None if it is fine.

    A class drawn from one part induces no edges.  A class drawn from exactly
    two parts with counts {1, s} induces the star K_{1,s}, a tree of maximum
    degree s.  Everything else contains a 4-cycle (two parts, both counts >= 2)
    or a triangle (three or more parts).
    """
    nonzero = sorted(c for c in _raw_counts(counts) if c > 0)
    if len(nonzero) <= 1:
        return None
    if len(nonzero) >= 3:
        return REASON_NOT_FOREST
    lo, hi = nonzero
    if lo >= 2:
        return REASON_NOT_FOREST
    if hi > r:
        return REASON_DEGREE_EXCEEDED
    return None


def composition_valid(counts: CountsLike, r: int) -> bool:
    """True iff a class with these per-part counts induces a forest of max degree <= r."""
    return composition_violation(counts, r) is None


def verify_coloring(coloring: TreeColoring) -> VerificationReport:
    """Full composition-based verdict with every violation enumerated."""
    spec = coloring.spec
    width = len(spec.parts)
    failures = []

    for idx, cls in enumerate(coloring.classes):
        if len(cls.counts) != width:
            # unreachable for model-validated colorings, kept for defense
            raise MalformedColoring(f"class {idx} has wrong count-vector length")

    for part in range(width):
        col = sum(cls.counts[part] for cls in coloring.classes)
        if col != spec.parts[part]:
            failures.append(
                Failure(
                    REASON_PART_OVERSUBSCRIBED,
                    part_index=part,
                    detail=f"part {part} has {spec.parts[part]} vertices, classes use {col}",
                )
            )

    sizes = [cls.size for cls in coloring.classes]
    if max(sizes) - min(sizes) > 1:
        failures.append(
            Failure(
                REASON_SIZE_IMBALANCE,
                detail=f"class sizes range from {min(sizes)} to {max(sizes)}",
            )
        )

    for idx, cls in enumerate(coloring.classes):
        reason = composition_violation(cls, coloring.r)
        if reason is not None:
            failures.append(
                Failure(reason, class_index=idx, detail=f"counts {cls.counts}")
            )

    return VerificationReport(valid=not failures, failures=tuple(failures))


class _DisjointSet:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        """Merge the sets of a and b; False if they were already joined (cycle)."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def verify_explicit(coloring: TreeColoring, max_n: int = DEFAULT_EXPLICIT_MAX_N) -> bool:
    """Independent verdict from the materialized graph.

    Requires explicit vertex lists.  Checks that every vertex is used exactly
    once, that class sizes differ by at most one, and that each class induces
    an acyclic subgraph of maximum degree <= r.  Two vertices are adjacent iff
    they lie in different parts.
    """
    if coloring.vertices is None:
        raise MissingVertexAssignment("explicit verification needs vertex lists")
    spec = coloring.spec
    if spec.n > max_n:
        raise InstanceTooLarge(f"{spec.n} vertices exceeds explicit bound {max_n}")

    seen = set()
    for vs in coloring.vertices:
        for v in vs:
            if v in seen:
                return False
            seen.add(v)
    if len(seen) != spec.n:
        return False

    sizes = [len(vs) for vs in coloring.vertices]
    if max(sizes) - min(sizes) > 1:
        return False

    for vs in coloring.vertices:
        per_part = {}
        for part, _ in vs:
            per_part[part] = per_part.get(part, 0) + 1
        for part, _ in vs:
            degree = len(vs) - per_part[part]
            if degree > coloring.r:
                return False
        dsu = _DisjointSet(len(vs))
        for i in range(len(vs)):
            for j in range(i + 1, len(vs)):
                if vs[i][0] != vs[j][0]:
                    if not dsu.union(i, j):
                        return False
    return True
