import random

import pytest

from lieposet.invariants import find_sign_combination, sign_combination_holds
from lieposet.lemmas import GENERATORS, MAX_ROWS, instances


@pytest.mark.parametrize("lemma", sorted(GENERATORS))
def test_instances_are_reproducible(lemma):
    assert instances(lemma, 5, seed=3) == instances(lemma, 5, seed=3)


@pytest.mark.parametrize("lemma", sorted(GENERATORS))
def test_instance_shape(lemma):
    for inst in instances(lemma, 40):
        assert 1 <= len(inst.rows) <= MAX_ROWS
        assert len(set(inst.vertices)) == len(inst.vertices)
        width = len(inst.target)
        assert all(len(r) == width for r in inst.rows)


def test_cone_rows_avoid_first_coordinate():
    for name in ("cone-path", "cone-cycle", "cone-cycle-reversed"):
        for inst in instances(name, 30):
            assert 1 not in inst.vertices
            assert all(r[0] == 1 for r in inst.rows)


def test_cone_tilings_pair_up():
    for inst in instances("cone-path", 50) + instances("cone-cycle", 50):
        k = inst.kinds
        for a, b in zip(k, k[1:]):
            assert (a == "pm") == (b == "mp")
        assert k[0] != "mp" and k[-1] != "pm"


def test_closed_walk_parity():
    for inst in instances("odd-cycle", 30):
        assert inst.kinds.count("sum") % 2 == 1
    for inst in instances("even-cycle", 30):
        assert inst.kinds.count("sum") % 2 == 0


@pytest.mark.parametrize("lemma", sorted(GENERATORS))
def test_small_batch_found(lemma):
    for inst in instances(lemma, 25, seed=11):
        signs = find_sign_combination(inst.rows, inst.target)
        assert signs is not None and sign_combination_holds(inst.rows, signs, inst.target)


def test_wrong_parity_target_missed():
    # the odd-cycle target is unreachable from an even closed walk
    for inst in instances("even-cycle", 20):
        wrong = [0] * len(inst.target)
        wrong[inst.vertices[0] - 1] = -2
        assert find_sign_combination(inst.rows, wrong) is None
