"""Exhaustive ground truth for small instances.

Searches over class shapes (per-part count vectors) rather than labeled
vertex sets: vertices inside a part are interchangeable, so a coloring exists
iff a multiset of valid shapes with the right sizes packs the part sizes
exactly.  Classes of equal size are filled in non-increasing shape order to
prune permutations, and dead states are memoized per call.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Set, Tuple

from .errors import InstanceTooLarge, PreconditionViolated
from .model import ClassComposition, GraphSpec, OracleCertificate, TreeColoring, normalize

DEFAULT_MAX_N = 32

Shape = Tuple[int, ...]


def _candidate_shapes(
    rem: Shape, size: int, r: int, proper_only: bool, bound: Optional[Shape]
) -> List[Shape]:
    """All fillable count vectors for one class of the given size, descending.

    A valid class is independent (one part) or, when stars are allowed, one
    center vertex in part i plus size-1 <= r leaves in part j.
    """
    width = len(rem)
    shapes: Set[Shape] = set()
    if size == 0:
        shapes.add((0,) * width)
    else:
        for i in range(width):
            if rem[i] >= size:
                vec = [0] * width
                vec[i] = size
                shapes.add(tuple(vec))
        if not proper_only and size >= 2 and size - 1 <= r:
            for i in range(width):
                if rem[i] < 1:
                    continue
                for j in range(width):
                    if j == i or rem[j] < size - 1:
                        continue
                    vec = [0] * width
                    vec[i] = 1
                    vec[j] = size - 1
                    shapes.add(tuple(vec))
    ordered = sorted(shapes, reverse=True)
    if bound is not None:
        ordered = [s for s in ordered if s <= bound]
    return ordered


def _materialize(spec: GraphSpec, q: int, r: int, shapes: Sequence[Shape]) -> TreeColoring:
    """Attach explicit vertices (consecutive indices per part) to chosen shapes."""
    next_index = [0] * len(spec.parts)
    classes = []
    vertices = []
    for shape in shapes:
        vs = []
        for part, cnt in enumerate(shape):
            for _ in range(cnt):
                vs.append((part, next_index[part]))
                next_index[part] += 1
        classes.append(ClassComposition(shape))
        vertices.append(tuple(vs))
    return TreeColoring(spec=spec, r=r, classes=tuple(classes), vertices=tuple(vertices))


def exists_coloring(
    parts: Sequence[int],
    q: int,
    r: int = 2,
    proper_only: bool = False,
    max_n: int = DEFAULT_MAX_N,
) -> OracleCertificate:
    """Decide by exhaustive search whether an equitable (q, r)-tree-coloring exists.

    With proper_only, classes must be independent sets, so the search decides
    equitable proper q-colorability instead.
    """
    spec = normalize(parts)
    if q < 1:
        raise PreconditionViolated(f"q must be >= 1, got {q}")
    if spec.n > max_n:
        raise InstanceTooLarge(f"{spec.n} vertices exceeds the search bound {max_n}")
    k, s0 = divmod(spec.n, q)
    sizes = [k + 1] * s0 + [k] * (q - s0)
    failed: Set[Tuple[int, Shape, Optional[Shape]]] = set()
    chosen: List[Shape] = []

    def dfs(t: int, rem: Shape, bound: Optional[Shape]) -> bool:
        if t == len(sizes):
            return True  # size bookkeeping guarantees rem is all zeros here
        key = (t, rem, bound)
        if key in failed:
            return False
        for shape in _candidate_shapes(rem, sizes[t], r, proper_only, bound):
            chosen.append(shape)
            nxt_bound = shape if t + 1 < len(sizes) and sizes[t + 1] == sizes[t] else None
            if dfs(t + 1, tuple(a - b for a, b in zip(rem, shape)), nxt_bound):
                return True
            chosen.pop()
        failed.add(key)
        return False

    instance = (spec, q, r)
    if dfs(0, spec.parts, None):
        return OracleCertificate(True, _materialize(spec, q, r, chosen), instance)
    return OracleCertificate(False, None, instance)


def brute_va(parts: Sequence[int], r: int = 2, max_n: int = DEFAULT_MAX_N) -> int:
    """Strong equitable vertex r-arboricity by direct search over all q.

    Every q > N admits the singletons-plus-empty-classes coloring, so only
    q in [1, N] can fail and the answer is one past the largest failure.
    """
    spec = normalize(parts)
    if spec.n > max_n:
        raise InstanceTooLarge(f"{spec.n} vertices exceeds the search bound {max_n}")
    worst = 0
    for q in range(1, spec.n + 1):
        if not exists_coloring(spec.parts, q, r, max_n=max_n).exists:
            worst = q
    return worst + 1


def brute_threshold(parts: Sequence[int], q: int, max_n: int = DEFAULT_MAX_N) -> int:
    """Least p such that proper equitable q'-colorings exist for all q' in [p, q]."""
    spec = normalize(parts)
    if spec.n > max_n:
        raise InstanceTooLarge(f"{spec.n} vertices exceeds the search bound {max_n}")
    if not exists_coloring(spec.parts, q, 1, proper_only=True, max_n=max_n).exists:
        raise PreconditionViolated(
            f"parts {spec.parts} admit no proper equitable {q}-coloring"
        )
    p = q
    for lower in range(q - 1, 0, -1):
        if not exists_coloring(spec.parts, lower, 1, proper_only=True, max_n=max_n).exists:
            break
        p = lower
    return p
