import pytest

from lieposet.enumeration import (CandidateAssignment, build, candidate_count, candidates,
                                  generate_height_one, generate_trees, generate_with_encoding,
                                  rewrite_trace, verify_theorems)
from lieposet.errors import ValidationError
from lieposet.invariants import graph_of
from lieposet.poset import height


def test_candidate_counts():
    assert candidate_count("C", 1) == 2
    assert candidate_count("C", 2) == 12
    assert candidate_count("C", 3) == 216
    assert candidate_count("D", 3) == 27
    assert candidate_count("C", 4) == 11664
    assert sum(1 for _ in candidates("C", 3)) == 216


def test_c1_both_valid():
    ps = list(generate_height_one("C", 1))
    assert len(ps) == 2
    assert any((-1, 1) in p.relations and height(p) == 1 for p in ps)


def test_c2_rejects_dashed_with_low_loop():
    bad = [c.encoding for c in candidates("C", 2) if build(c) is None]
    assert bad == ["d|l.", "d|ll"]


def test_no_loops_in_type_d():
    for p in generate_height_one("D", 3):
        assert not graph_of(p).loops


def test_enumeration_duplicate_free():
    for fam, n in (("C", 3), ("D", 3), ("B", 3)):
        seen = [p for p in generate_height_one(fam, n)]
        assert len(seen) == len(set(seen))


def test_encoding_roundtrip_through_graph():
    for encoding, p in generate_with_encoding("C", 3):
        g = graph_of(p)
        c = next(c for c in candidates("C", 3) if c.encoding == encoding)
        assert len(g.edges) == sum(k != 0 for k in c.pairs) + sum(c.loops)


def test_trees_are_trees():
    ts = list(generate_trees("C", 4))
    assert ts and all(len(graph_of(p).edges) == 3 and graph_of(p).is_connected() for p in ts)


def test_rewrite_trace_ends_without_dashed():
    for p in generate_height_one("C", 3):
        g = graph_of(p)
        if g.is_connected() and (g.solid or g.loops):
            trace = rewrite_trace(g)
            final = trace[-1][2] if trace else g
            assert not final.dashed


@pytest.mark.parametrize("family,n,count", [("C", 2, 12), ("C", 3, 216), ("D", 3, 27), ("B", 3, 27)])
def test_verify_small(family, n, count):
    s = verify_theorems(family, n)
    assert s.candidateCount == count
    assert s.validCount > 0
    assert s.failures == []


def test_verify_parallel_matches_serial():
    a = verify_theorems("C", 3, jobs=1)
    b = verify_theorems("C", 3, jobs=2)
    assert (a.candidateCount, a.validCount, a.checksRun, a.failures) == \
        (b.candidateCount, b.validCount, b.checksRun, b.failures)


def test_unknown_family():
    with pytest.raises(ValidationError):
        verify_theorems("A", 2)


def test_generators_follow_edge_encoding():
    c = CandidateAssignment("C", 3, (1, 0, 2), (False, False, True))
    assert c.generators() == [(-1, 2), (-3, -2), (-3, 3)]
    assert c.encoding == "s-d|..l"
