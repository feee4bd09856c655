from itertools import combinations

import pytest

from weylzip import (
    build_group,
    howlett_decompose,
    kilmoyer_subset,
    min_double_coset_reps,
    min_left_coset_reps,
    min_right_coset_reps,
    refined_length_count,
)
from weylzip.errors import NotDoubleCosetRep, NotMinimalRep
from weylzip.oracles import iw_oracle


def words(elements):
    return sorted(w.canonical_word() for w in elements)


def test_min_left_examples(a2):
    assert words(min_left_coset_reps(a2, {1})) == [(), (2,), (2, 1)]
    assert words(min_left_coset_reps(a2, {1, 2})) == [()]
    assert len(min_left_coset_reps(a2, set())) == 6


def test_min_right_examples(a2):
    assert words(min_right_coset_reps(a2, {2})) == [(), (1,), (2, 1)]
    assert words(min_right_coset_reps(a2, {1, 2})) == [()]
    # root criterion: [2,1] sends alpha_2 to a positive root
    w = a2.from_word([2, 1])
    image = w.act_on_root(a2.simple_root_index(2))
    assert a2.is_positive_root(image)


def test_right_reps_are_inverse_left_reps(a3):
    for k in range(4):
        for J in map(frozenset, combinations(a3.simple_indices, k)):
            lefts = {w.perm for w in min_left_coset_reps(a3, J)}
            rights = {w.inverse().perm for w in min_right_coset_reps(a3, J)}
            assert lefts == rights


def test_double_reps_examples(a2):
    assert words(min_double_coset_reps(a2, {1}, {2})) == [(), (2, 1)]
    assert words(min_double_coset_reps(a2, {1, 2}, {1, 2})) == [()]
    assert len(min_double_coset_reps(a2, set(), set())) == 6


def test_min_reps_match_bruteforce_oracle(a3, b2):
    for g in (a3, b2):
        for k in range(g.rank + 1):
            for I in map(frozenset, combinations(g.simple_indices, k)):
                assert min_left_coset_reps(g, I) == iw_oracle(g, I)


def test_kilmoyer_examples(a2):
    e = a2.identity
    assert kilmoyer_subset(a2, {1}, {2}, e) == frozenset()
    assert kilmoyer_subset(a2, {1}, {2}, a2.from_word([2, 1])) == frozenset({2})
    assert kilmoyer_subset(a2, {1, 2}, {1, 2}, e) == frozenset({1, 2})
    with pytest.raises(NotDoubleCosetRep):
        kilmoyer_subset(a2, {1}, {2}, a2.simple(2))


def test_kilmoyer_set_equality(b2):
    I, J = frozenset({1}), frozenset({2})
    w_i = set(b2.parabolic_elements(I))
    for x in min_double_coset_reps(b2, I, J):
        I_x = kilmoyer_subset(b2, I, J, x)
        lhs = set(b2.parabolic_elements(I_x))
        rhs = {v for v in b2.parabolic_elements(J) if x * v * x.inverse() in w_i}
        assert lhs == rhs


def test_howlett_examples(a2):
    I, J = {1}, {2}
    hd = howlett_decompose(a2, I, J, a2.from_word([1, 2]))
    assert hd.left == a2.simple(1) and hd.middle == a2.identity and hd.right == a2.simple(2)
    hd = howlett_decompose(a2, I, J, a2.longest_element())
    assert hd.left == a2.simple(1)
    assert hd.middle == a2.from_word([2, 1])
    assert hd.right == a2.identity
    hd = howlett_decompose(a2, I, J, a2.identity)
    assert hd.left == hd.middle == hd.right == a2.identity


def exhaustive_howlett(group, I, J, w):
    """All triples (a, x, b) with a in W_I, x double-minimal, b minimal in
    W_{I_x} cosets, and a*x*b == w with additive lengths."""
    from weylzip.cosets import min_left_coset_reps as mreps

    found = []
    for x in min_double_coset_reps(group, I, J):
        I_x = kilmoyer_subset(group, I, J, x)
        for a in group.parabolic_elements(I):
            for b in mreps(group, I_x, universe=J):
                if a * x * b == w and a.length + x.length + b.length == w.length:
                    found.append((a, x, b))
    return found


@pytest.mark.parametrize("label,I,J", [("A2", {1}, {2}), ("B2", {2}, {1}), ("A2", {1, 2}, {1, 2})])
def test_howlett_unique_vs_exhaustive(label, I, J):
    g = build_group(label)
    for w in g.elements():
        triples = exhaustive_howlett(g, I, J, w)
        hd = howlett_decompose(g, I, J, w)
        assert triples == [(hd.left, hd.middle, hd.right)]
        assert hd.element() == w


def test_refined_length_examples(a2):
    I, J = {1}, {2}
    assert refined_length_count(a2, I, J, a2.simple(2)) == 0
    assert refined_length_count(a2, I, J, a2.from_word([2, 1])) == 2
    assert refined_length_count(a2, I, J, a2.identity) == 0
    with pytest.raises(NotMinimalRep):
        refined_length_count(a2, I, J, a2.simple(1))


def test_refined_length_equals_middle_length(a3):
    I, J = frozenset({1, 3}), frozenset({2, 3})
    for w in min_left_coset_reps(a3, I):
        hd = howlett_decompose(a3, I, J, w)
        assert refined_length_count(a3, I, J, w) == hd.middle.length


@pytest.mark.parametrize("label", ["A1", "A1xA1", "A2", "B2", "G2", "A3", "B3", "C3"])
def test_coset_identity_sweep(label):
    """Representative assembly from double cosets, its dual, the Kilmoyer
    set equality, and Howlett additivity, over every (I, J) pair."""
    from weylzip.verify import check_coset_identities

    assert check_coset_identities(build_group(label)) == []
