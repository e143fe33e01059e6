import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lieposet.errors import (CoverViolation, GroundSetError, OrderViolation, ValidationError,
                             ZeroRelation)
from lieposet.poset import (HeightPair, disjoint_union, drop_zero, dump, from_generators,
                            ground_set, height, height_pair, induced, is_separable, load,
                            positive_part, transitive_closure)


def test_example_two_three_closure():
    p = from_generators("C", 3, [(-2, 1), (-2, 3), (-3, 2), (-1, 2)])
    # the four generators are two mirror pairs and nothing composes
    assert p.sorted_relations() == [(-3, 2), (-2, 1), (-2, 3), (-1, 2)]
    assert height(p) == 1
    assert height_pair(p) == HeightPair(0, 1)
    assert not is_separable(p)


def test_figure_three_poset(fig3):
    assert fig3.sorted_relations() == [(-3, -2), (-3, 1), (-3, 3), (-1, 3), (2, 3)]
    assert height_pair(fig3) == HeightPair(1, 1)


def test_ground_sets():
    assert ground_set("C", 2) == (-2, -1, 1, 2)
    assert ground_set("B", 2) == (-2, -1, 0, 1, 2)


def test_order_violation_message():
    with pytest.raises(OrderViolation, match="2 ≺ −1"):
        from_generators("C", 2, [(2, -1)])


def test_cover_violation_type_d():
    with pytest.raises(CoverViolation, match="1 covers −1"):
        from_generators("D", 2, [(-1, 1)])


def test_type_d_allows_non_covering_opposite_pair():
    p = from_generators("D", 2, [(-2, -1), (-1, 2)])
    assert (-2, 2) in p.relations and (-2, 2) not in p.covers()
    assert height(p) == 2


def test_ground_set_errors():
    with pytest.raises(GroundSetError):
        from_generators("C", 2, [(0, 1)])
    with pytest.raises(GroundSetError):
        from_generators("C", 2, [(-3, 1)])
    with pytest.raises(GroundSetError):
        from_generators("C", 2, [(1, 1)])


def test_relating_zero_forces_height_two():
    # mirror symmetry turns -1 ≺ 0 into the chain -1 ≺ 0 ≺ 1
    p = from_generators("B", 2, [(-1, 0)])
    assert height(p) == 2 and not is_separable(p)
    with pytest.raises(ZeroRelation):
        drop_zero(p)


def test_order_violation_negative_pair():
    with pytest.raises(OrderViolation):
        from_generators("C", 2, [(-1, -2)])


def test_bad_family_and_n():
    with pytest.raises(ValidationError):
        from_generators("A", 2, [])
    with pytest.raises(ValidationError):
        from_generators("C", 0, [])


def test_parts_and_induced(fig3):
    assert positive_part(fig3).relations == {(2, 3)}
    sub = induced(fig3, [-3, 1, 3])
    assert sub.relations == {(-3, 1), (-3, 3)}
    assert sub.height() == 1


def test_drop_zero():
    b = from_generators("B", 2, [(-1, 2)])
    c = drop_zero(b)
    assert c.family == "C" and c.relations == b.relations


def test_disjoint_union_shifts_labels(one_edge, dashed_edge):
    u = disjoint_union(one_edge, dashed_edge)
    assert u.n == 4
    assert u.sorted_relations() == [(-4, -3), (-2, 1), (-1, 2), (3, 4)]


def test_load_and_dump_roundtrip(path3):
    assert load(dump(path3)) == path3
    with pytest.raises(ValidationError):
        load("[1, 2]")
    with pytest.raises(ValidationError):
        load(json.dumps({"family": "C", "n": 2}))
    with pytest.raises(ValidationError):
        load("not json")


def test_covers(fig3):
    assert (-3, 3) in fig3.covers()
    chain = from_generators("C", 2, [(-2, -1), (-1, 1)])
    assert (-2, 2) not in chain.covers()
    assert (-2, -1) in chain.covers()


signed_pairs = st.tuples(st.integers(-3, 3), st.integers(-3, 3)).filter(
    lambda r: r[0] < r[1] and 0 not in r)


@given(st.lists(signed_pairs, max_size=5))
def test_valid_posets_are_symmetric_and_closed(gens):
    try:
        p = from_generators("C", 3, gens)
    except ValidationError:
        return
    rels = p.relations
    assert all((-y, -x) in rels for x, y in rels)
    assert all(x < y for x, y in rels)
    assert transitive_closure(p.elements, rels) == set(rels)
    # idempotent: regenerating from the closure changes nothing
    assert from_generators("C", 3, rels) == p
