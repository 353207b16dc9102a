"""Exact strong equitable vertex 2-arboricity for 2 and 3 parts.

The dispatch splits N = 4b + c and tests residue patterns of the part sizes
mod 4.  When a pattern matches, the answer is the threshold function p
evaluated at q = b; otherwise it is b + 1, except in the three-part c = 3
regime, which needs the finer Condition A / Condition B analysis and can reach
b + 2.  Graphs with fewer than four vertices are answered directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .errors import PreconditionViolated
from .model import CaseTag, VaResult, decompose_n, normalize


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of a residue-pattern test, with the matched pattern named."""

    holds: bool
    matched_pattern: Optional[str] = None

    def __post_init__(self) -> None:
        if self.holds != (self.matched_pattern is not None):
            raise ValueError("matched_pattern must be present exactly when holds")

    def __bool__(self) -> bool:
        return self.holds


def has_proper_equitable_coloring(parts: Sequence[int], q: int) -> bool:
    """True iff a proper coloring with q near-equal classes exists.

    Every class of a proper coloring lies inside one part, so the question is
    whether each part splits into classes of sizes k and k+1 (k = N // q) with
    exactly q - (N mod q) small and N mod q big classes overall.  Decided by a
    DP over parts on (small classes used, big classes used).
    """
    spec = normalize(parts)
    if q < 1:
        raise PreconditionViolated(f"q must be >= 1, got {q}")
    k, s0 = divmod(spec.n, q)
    if k == 0:
        # more classes than vertices: singletons plus empty classes
        return True
    r0 = q - s0
    states = {(0, 0)}
    for part in spec.parts:
        nxt = set()
        for used_small, used_big in states:
            for big in range(part // (k + 1) + 1):
                rest = part - big * (k + 1)
                if rest % k:
                    continue
                small = rest // k
                if used_small + small <= r0 and used_big + big <= s0:
                    nxt.add((used_small + small, used_big + big))
        states = nxt
        if not states:
            return False
    return (r0, s0) in states


def p_value_detail(q: int, parts: Sequence[int]) -> Tuple[int, int]:
    """The threshold function p together with the divisor d it used.

    d is the least integer greater than N // q such that either at least two
    entries of the part list are not divisible by d, or some part n_j cannot
    be covered by classes of sizes d and d+1 (n_j > (d+1) * (n_j // d), which
    holds in particular when n_j < d).  Then p = sum of ceil(n_i / d).

    Requires that a proper equitable q-coloring exists at all.
    """
    spec = normalize(parts)
    if not has_proper_equitable_coloring(spec.parts, q):
        raise PreconditionViolated(
            f"parts {spec.parts} admit no proper equitable {q}-coloring"
        )
    d = spec.n // q + 1
    while True:
        if sum(1 for n in spec.parts if n % d) >= 2:
            break
        if any(n > (d + 1) * (n // d) for n in spec.parts):
            break
        d += 1
    p = sum(-(-n // d) for n in spec.parts)
    return p, d


def p_value(q: int, parts: Sequence[int]) -> int:
    return p_value_detail(q, parts)[0]


def _residues(parts: Sequence[int]) -> Tuple[int, ...]:
    return tuple(n % 4 for n in parts)


def bipartite_b_condition(m: int, n: int, c: int) -> ConditionReport:
    """Residue test deciding whether the two-part answer drops to p(b).

    The minimum sizes attached to each pattern encode that the pattern's
    scale integers are at least 1.
    """
    spec = normalize([m, n])
    lo, hi = spec.parts
    rl, rh = lo % 4, hi % 4
    res = tuple(sorted((rl, rh)))
    if c == 0:
        if res == (0, 0):
            return ConditionReport(True, "both parts = 0 (mod 4)")
    elif c == 1:
        if res == (0, 1):
            one = lo if rl == 1 else hi
            if one >= 5:
                return ConditionReport(True, "parts = {1 >= 5, 0} (mod 4)")
    elif c == 2:
        if res == (0, 2):
            two = lo if rl == 2 else hi
            if two >= 10:
                return ConditionReport(True, "parts = {2 >= 10, 0} (mod 4)")
        if res == (1, 1) and lo >= 5:
            return ConditionReport(True, "parts = {1 >= 5, 1 >= 5} (mod 4)")
    elif c == 3:
        if (lo, hi) == (5, 6):
            return ConditionReport(True, "pair (5, 6)")
        if res == (0, 3):
            three = lo if rl == 3 else hi
            if three >= 15:
                return ConditionReport(True, "parts = {3 >= 15, 0} (mod 4)")
        if res == (1, 2):
            one = lo if rl == 1 else hi
            two = lo if rl == 2 else hi
            if two >= 10 and one >= 5:
                return ConditionReport(True, "parts = {2 >= 10, 1 >= 5} (mod 4)")
    return ConditionReport(False)


def tripartite_b_condition(l: int, m: int, n: int, c: int) -> ConditionReport:
    """Residue test deciding whether the three-part c <= 2 answer drops to p(b)."""
    spec = normalize([l, m, n])
    parts = spec.parts
    res = tuple(sorted(_residues(parts)))
    if c == 0:
        if res == (0, 0, 0):
            return ConditionReport(True, "all parts = 0 (mod 4)")
    elif c == 1:
        if res == (0, 0, 1):
            one = next(p for p in parts if p % 4 == 1)
            if one >= 5:
                return ConditionReport(True, "parts = {1 >= 5, 0, 0} (mod 4)")
    elif c == 2:
        if res == (0, 0, 2):
            two = next(p for p in parts if p % 4 == 2)
            if two >= 10:
                return ConditionReport(True, "parts = {2 >= 10, 0, 0} (mod 4)")
        if res == (0, 1, 1):
            ones = [p for p in parts if p % 4 == 1]
            if all(p >= 5 for p in ones):
                return ConditionReport(True, "parts = {1 >= 5, 1 >= 5, 0} (mod 4)")
    return ConditionReport(False)


def condition_a(l: int, m: int, n: int) -> ConditionReport:
    """Residue test for existence of an equitable (b+1, 2)-tree-coloring, N = 4b+3.

    No size thresholds: any positive sizes in these residue classes qualify.
    """
    res = tuple(sorted(_residues(normalize([l, m, n]).parts)))
    if res == (0, 0, 3):
        return ConditionReport(True, "residues {0, 0, 3}")
    if res == (0, 1, 2):
        return ConditionReport(True, "residues {0, 1, 2}")
    return ConditionReport(False)


def condition_b(l: int, m: int, n: int) -> ConditionReport:
    """Residue test for existence of an equitable (b, 2)-tree-coloring, N = 4b+3."""
    parts = normalize([l, m, n]).parts
    res = tuple(sorted(_residues(parts)))
    if res == (0, 0, 3):
        three = next(p for p in parts if p % 4 == 3)
        if three >= 15:
            return ConditionReport(True, "parts = {3 >= 15, 0, 0} (mod 4)")
    if res == (0, 1, 2):
        one = next(p for p in parts if p % 4 == 1)
        two = next(p for p in parts if p % 4 == 2)
        if two >= 10 and one >= 5:
            return ConditionReport(True, "parts = {2 >= 10, 1 >= 5, 0} (mod 4)")
    if res == (1, 1, 1) and all(p >= 5 for p in parts):
        return ConditionReport(True, "parts = {1 >= 5, 1 >= 5, 1 >= 5} (mod 4)")
    return ConditionReport(False)


def va2_bipartite(m: int, n: int) -> VaResult:
    """Strong equitable vertex 2-arboricity of the complete bipartite graph."""
    spec = normalize([m, n])
    if spec.n <= 3:
        # the 2- and 3-vertex graphs: a single class already works
        return VaResult(1, CaseTag.BIP_SMALL)
    b, c = decompose_n(spec)
    if bipartite_b_condition(spec.parts[0], spec.parts[1], c).holds:
        return VaResult(p_value(b, spec.parts), CaseTag[f"BIP_C{c}_COND"], b=b, c=c)
    return VaResult(b + 1, CaseTag[f"BIP_C{c}_ELSE"], b=b, c=c)


def va2_tripartite(l: int, m: int, n: int) -> VaResult:
    """Strong equitable vertex 2-arboricity of the complete tripartite graph."""
    spec = normalize([l, m, n])
    if spec.parts == (1, 1, 1):
        return VaResult(2, CaseTag.TRI_SMALL)
    b, c = decompose_n(spec)
    parts = spec.parts
    if c <= 2:
        if tripartite_b_condition(*parts, c).holds:
            return VaResult(p_value(b, parts), CaseTag[f"TRI_C{c}_COND"], b=b, c=c)
        return VaResult(b + 1, CaseTag[f"TRI_C{c}_ELSE"], b=b, c=c)
    if not condition_a(*parts).holds:
        return VaResult(b + 2, CaseTag.TRI_C3_NOT_A, b=b, c=c)
    if not condition_b(*parts).holds:
        return VaResult(b + 1, CaseTag.TRI_C3_A_NOT_B, b=b, c=c)
    # both conditions: the value drops all the way to p(b)
    return VaResult(p_value(b, parts), CaseTag.TRI_C3_A_AND_B, b=b, c=c)
