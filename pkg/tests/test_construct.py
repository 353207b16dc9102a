"""Block partitioning and the pattern witnesses."""

import pytest

from eqarbor import (
    NoWitnessFound,
    PreconditionViolated,
    UnsupportedArity,
    algorithm_a,
    arrange,
    construct_pattern_witness,
    decompose_n,
    normalize,
    verify_coloring,
    verify_explicit,
)


def test_arrangement_orders():
    assert arrange(normalize([2, 5])).order == (
        (0, 0), (0, 1), (1, 0), (1, 1), (1, 2), (1, 3), (1, 4)
    )
    # largest part goes in the middle
    assert arrange(normalize([1, 2, 4])).order == (
        (0, 0), (2, 0), (2, 1), (2, 2), (2, 3), (1, 0), (1, 1)
    )
    assert arrange(normalize([1, 1])).order == ((0, 0), (1, 0))


def test_arrangement_block_counts():
    plan = arrange(normalize([2, 5]), q=3)
    assert (plan.k, plan.r0, plan.s0) == (2, 2, 1)
    assert arrange(normalize([2, 5])).k is None


def test_arrange_rejects_extra_parts():
    with pytest.raises(UnsupportedArity):
        arrange(normalize([1, 1, 1, 1]))


def test_block_walk_examples():
    col = algorithm_a(normalize([2, 5]), 3)
    assert [c.counts for c in col.classes] == [(2, 1), (0, 2), (0, 2)]
    assert col.vertices == (
        ((0, 0), (0, 1), (1, 0)),
        ((1, 1), (1, 2)),
        ((1, 3), (1, 4)),
    )

    col = algorithm_a(normalize([1, 1]), 2)
    assert [c.counts for c in col.classes] == [(1, 0), (0, 1)]

    col = algorithm_a(normalize([3, 4, 4]), 4)
    assert sorted(c.size for c in col.classes) == [2, 3, 3, 3]
    assert verify_coloring(col).valid
    assert verify_explicit(col)


def test_block_walk_preconditions():
    with pytest.raises(PreconditionViolated):
        algorithm_a(normalize([5, 6]), 2)  # blocks of 5 cannot work
    with pytest.raises(PreconditionViolated):
        algorithm_a(normalize([5, 5, 5]), 4)  # k = 3 with a single size-3 block
    with pytest.raises(PreconditionViolated):
        algorithm_a(normalize([2, 2]), 5)  # more classes than vertices
    with pytest.raises(PreconditionViolated):
        algorithm_a(normalize([2, 2]), 0)


def test_block_walk_rejects_sub_threshold_q():
    # the walk completes but the single block induces a triangle
    with pytest.raises(PreconditionViolated):
        algorithm_a(normalize([1, 1, 1]), 1)


def test_pattern_witness_proper_split():
    col = construct_pattern_witness(normalize([4, 5, 10]), 4)
    assert [c.counts for c in col.classes] == [(4, 0, 0), (0, 5, 0), (0, 0, 5), (0, 0, 5)]
    assert verify_coloring(col).valid
    assert verify_explicit(col)


def test_pattern_witness_straddle():
    col = construct_pattern_witness(normalize([1, 2, 4]), 2)
    assert [c.counts for c in col.classes] == [(0, 0, 4), (1, 2, 0)]
    assert verify_coloring(col).valid
    assert verify_explicit(col)


def test_pattern_witness_in_part_remainder():
    # residues {0, 0, 3}: the size-3 class sits inside the odd part,
    # which the proper-split route already produces
    col = construct_pattern_witness(normalize([3, 4, 4]), 3)
    assert sorted(c.size for c in col.classes) == [3, 4, 4]
    assert verify_coloring(col).valid


def test_pattern_witness_failure():
    with pytest.raises(NoWitnessFound):
        construct_pattern_witness(normalize([7, 7]), 3)
    with pytest.raises(PreconditionViolated):
        construct_pattern_witness(normalize([2, 2]), 5)


def test_block_walk_covers_promised_range():
    for parts in [(1, 2), (2, 3), (4, 4), (3, 5), (1, 2, 4), (2, 3, 4), (3, 4, 4), (2, 2, 5)]:
        spec = normalize(parts)
        b, c = decompose_n(spec)
        start = b + 2 if len(parts) == 3 and c == 3 else b + 1
        for q in range(max(start, 1), spec.n + 1):
            col = algorithm_a(spec, q)
            assert verify_coloring(col).valid
            assert verify_explicit(col)
            for cls in col.classes:
                nonzero = [x for x in cls.counts if x]
                if cls.size >= 4:
                    assert len(nonzero) == 1
                if len(nonzero) > 1:
                    assert len(nonzero) == 2 and cls.size in (2, 3)
