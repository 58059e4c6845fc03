"""Partition lattice operations and both Rouquier-block computation paths."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heckeblocks.engine import (
    Hyperplane,
    Specialization,
    blocks_no_hyperplane,
    blocks_one_hyperplane,
    hyperplanes_containing,
    join,
    meet,
    rouquier_from_tables,
)
from heckeblocks.groupblocks import Partition
from heckeblocks.store import load_group


@pytest.fixture(scope="module")
def g4():
    return load_group("G4")


@pytest.fixture(scope="module")
def g7():
    return load_group("G7")


# ---------------------------------------------------------------------------
# partition lattice laws
# ---------------------------------------------------------------------------

SIZE = 6


@st.composite
def partitions(draw):
    labels = draw(st.lists(st.integers(0, 3), min_size=SIZE, max_size=SIZE))
    parts = {}
    for i, lab in enumerate(labels, start=1):
        parts.setdefault(lab, []).append(i)
    return Partition.of(list(parts.values()), SIZE)


def refines(p1, p2):
    return all(set(a) <= set(p2.part_of(a[0])) for a in p1.parts)


@given(partitions(), partitions())
@settings(max_examples=200, deadline=None)
def test_meet_refines_both_and_join_coarsens_both(p1, p2):
    m = meet(p1, p2)
    j = join([p1, p2])
    assert refines(m, p1) and refines(m, p2)
    assert refines(p1, j) and refines(p2, j)
    assert meet(p1, p1) == p1 == join([p1, p1])
    assert meet(p1, p2) == meet(p2, p1)
    assert join([p1, p2]) == join([p2, p1])


@given(partitions(), partitions(), partitions())
@settings(max_examples=100, deadline=None)
def test_meet_and_join_are_associative(p1, p2, p3):
    assert meet(meet(p1, p2), p3) == meet(p1, meet(p2, p3))
    assert join([join([p1, p2]), p3]) == join([p1, p2, p3])


def test_meet_join_degenerate():
    s = Partition.singletons(4)
    full = Partition.of([[1, 2, 3, 4]], 4)
    assert meet(s, full) == s
    assert join([s, full]) == full
    with pytest.raises(ValueError):
        join([])
    with pytest.raises(ValueError):
        meet(s, Partition.singletons(5))


# ---------------------------------------------------------------------------
# hyperplane rendering and membership
# ---------------------------------------------------------------------------


def test_hyperplane_rendering():
    names = ["a0", "a1", "c0", "c1", "c2"]
    h = Hyperplane.of((1, -1, 2, -1, -1))
    assert h.render(names) == "a_0-a_1+2c_0-c_1-c_2=0"
    assert Hyperplane.of((0, 0, 0, 1, -1)).render(names) == "c_1-c_2=0"
    # sign canonicalization and primitivization
    assert Hyperplane.of((0, 0, 0, -2, 2)) == Hyperplane.of((0, 0, 0, 1, -1))
    with pytest.raises(ValueError):
        Hyperplane.of((0, 0, 0, 0, 0))


def test_hyperplane_contains():
    h = Hyperplane.of((0, 1, -1))
    assert h.contains((5, 2, 2))
    assert not h.contains((0, 1, 2))


# ---------------------------------------------------------------------------
# table path on the stored data
# ---------------------------------------------------------------------------


def test_rouquier_from_tables_published_example(g4):
    blocks = rouquier_from_tables(g4, Specialization((0, 1, 2)))
    assert blocks.as_lists() == [[1], [2, 5, 7], [3], [4], [6]]
    hit = hyperplanes_containing(g4.hyperplane_tables, Specialization((0, 1, 2)))
    assert [t.normal for t in hit] == [(1, -2, 1)]


def test_rouquier_from_tables_group_algebra_limit(g4):
    blocks = rouquier_from_tables(g4, Specialization((0, 0, 0)))
    assert blocks.as_lists() == [[1, 2, 3, 4, 5, 6, 7]]


def test_rouquier_from_tables_generic_point(g4):
    # off every essential hyperplane: the baseline (all singletons for G4)
    blocks = rouquier_from_tables(g4, Specialization((0, 1, 5)))
    assert blocks == Partition.singletons(7)


def test_rouquier_from_tables_respects_baseline(g7):
    # a generic point for G7 keeps the printed baseline pairs/triples
    blocks = rouquier_from_tables(g7, Specialization((0, 1, 0, 2, 7, 0, 11, 25)))
    assert [37, 39, 41] in blocks.as_lists()
    assert [28, 36] in blocks.as_lists()


# ---------------------------------------------------------------------------
# heuristic (Schur) path on the partial G7 payload
# ---------------------------------------------------------------------------


def test_no_hyperplane_blocks_keep_trivial_character_alone(g7):
    for p in (2, 3):
        blocks = blocks_no_hyperplane(g7, p)
        assert blocks.part_of(1) == (1,)
    # p not dividing the group order
    assert blocks_no_hyperplane(g7, 5) == Partition.singletons(42)


def test_one_hyperplane_blocks_on_difference_hyperplane(g7):
    h = Hyperplane.of((0, 0, 0, 0, 0, 1, -1, 0))
    blocks = blocks_one_hyperplane(g7, 3, h)
    # the three stored characters have pairwise different a+A on c0=c1,
    # except where the stored table joins them; the trivial character must
    # not merge with the degree-3 representative
    assert blocks.part_of(1) != blocks.part_of(39)


def test_heuristic_path_without_schur_payload_meets_group_blocks(g4):
    # G4 ships no Schur payload: the heuristic degenerates to the group
    # p-block meet, which keeps everything singleton
    assert blocks_no_hyperplane(g4, 3) == Partition.singletons(7)
    assert blocks_no_hyperplane(g4, 2) == Partition.singletons(7)
