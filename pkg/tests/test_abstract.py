import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weylzip import AbstractZipDatum, FiniteGroup
from weylzip.abstract import inverse, mult
from weylzip.errors import ElementNotInGroup, LatticeTooLarge, NotAHomomorphism
from weylzip.serialize import parse_cycles


def s3_datum():
    """Gamma = S3 acting as the rank-2 symmetric group on roots of A2 does:
    here simply on 3 points; Delta = <(1 2)>, psi sends it to (2 3)."""
    group = FiniteGroup(3, [parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)])
    return AbstractZipDatum.from_generators(
        group, [parse_cycles("(1 2)", 3)], [parse_cycles("(2 3)", 3)]
    )


def weyl_a2_datum(a2):
    from weylzip import ZipDatum

    return ZipDatum(a2, {1}, {2}, {1: 2}).abstract_datum()


def test_stable_subgroup_examples(a2):
    a = weyl_a2_datum(a2)
    e = a.group.identity
    assert a.stable_subgroup(e) == frozenset({e})
    gamma = (a2.from_word([2, 1])).perm
    s2 = a2.simple(2).perm
    assert a.stable_subgroup(gamma) == frozenset({e, s2})
    with pytest.raises(ElementNotInGroup):
        a.stable_subgroup(tuple(range(len(e) + 2)))


def test_stable_subgroup_full_delta(a2):
    from weylzip import ZipDatum

    a = ZipDatum(a2, {1, 2}, {1, 2}, {1: 2, 2: 1}).abstract_datum()
    for gamma in a.group.elements():
        assert a.stable_subgroup(gamma) == a.group.element_set()


def test_orbit_examples(a2):
    a = weyl_a2_datum(a2)
    e = a.group.identity
    s1, s2 = a2.simple(1).perm, a2.simple(2).perm
    s1s2 = (a2.simple(1) * a2.simple(2)).perm
    assert a.orbit(e) == frozenset({e, s1s2})
    assert a.orbit(s2) == frozenset({s1, s2})


def test_orbit_trivial_delta():
    group = FiniteGroup(3, [parse_cycles("(1 2 3)", 3)])
    e = group.identity
    a = AbstractZipDatum(group, frozenset({e}), {e: e})
    for gamma in group.elements():
        assert a.orbit(gamma) == frozenset({gamma})


def test_all_classes_examples(a2):
    a = weyl_a2_datum(a2)
    classes = a.equivalence_classes()
    assert len(classes) == 3
    assert all(len(c) == 2 for c in classes)
    union = set().union(*classes)
    assert union == set(a.group.element_set())


def test_class_cardinality_identity_psi():
    group = FiniteGroup(4, [parse_cycles("(1 2)", 4), parse_cycles("(1 2 3 4)", 4)])
    delta = group.element_set()
    a = AbstractZipDatum(group, delta, {d: d for d in delta})
    assert a.equivalence_classes() == (delta,)


def test_noninjective_psi_uses_lattice():
    group = FiniteGroup(4, [parse_cycles("(1 2)", 4), parse_cycles("(1 2 3 4)", 4)])
    a = AbstractZipDatum.from_generators(
        group, [parse_cycles("(1 2 3 4)", 4)], [parse_cycles("(1 3)(2 4)", 4)]
    )
    assert not a.psi_injective
    classes = a.equivalence_classes()
    assert all(len(c) == 4 for c in classes) and len(classes) == 6
    tight = AbstractZipDatum(a.group, a.delta, a.psi, lattice_bound=2)
    with pytest.raises(LatticeTooLarge):
        tight.stable_subgroup(a.group.identity)


def test_homomorphism_validation():
    group = FiniteGroup(4, [parse_cycles("(1 2)", 4), parse_cycles("(1 2 3 4)", 4)])
    with pytest.raises(NotAHomomorphism):
        # (1 2) has order 2; a 4-cycle image cannot extend
        AbstractZipDatum.from_generators(
            group, [parse_cycles("(1 2)", 4)], [parse_cycles("(1 2 3 4)", 4)]
        )
    with pytest.raises(ElementNotInGroup):
        a4 = FiniteGroup(4, [parse_cycles("(1 2 3)", 4), parse_cycles("(1 2)(3 4)", 4)])
        AbstractZipDatum.from_generators(
            a4, [parse_cycles("(1 2)", 4)], [parse_cycles("(1 2)", 4)]
        )


def test_twisted_conjugation_of_stable_subgroups():
    a = s3_datum()
    for gamma in a.group.elements():
        E = a.stable_subgroup(gamma)
        assert a.group.identity in E
        for d in a.delta:
            pd = a.psi[d]
            expected = frozenset(mult(mult(pd, e), inverse(pd)) for e in E)
            for e in E:
                moved = mult(mult(mult(d, gamma), e), inverse(pd))
                assert a.stable_subgroup(moved) == expected


def test_stable_subgroup_exact_fixedness():
    a = s3_datum()
    for gamma in a.group.elements():
        E = a.stable_subgroup(gamma)
        gi = inverse(gamma)
        image = frozenset(a.psi[mult(mult(gamma, e), gi)] for e in E)
        assert image == E


def test_induced_datum_examples(a2):
    a = weyl_a2_datum(a2)
    e = a.group.identity
    s2 = a2.simple(2).perm
    sub = a.induced_at(e)
    assert sub.group.element_set() == frozenset({e, s2})
    assert sub.delta == frozenset({e})
    xi = a2.from_word([2, 1]).perm
    sub = a.induced_at(xi)
    assert sub.delta == frozenset({e, s2})
    assert sub.psi[s2] == s2


def test_induced_bijection_s3():
    a = s3_datum()
    image = frozenset(a.psi.values())
    xi = a.group.identity
    sub = a.induced_at(xi)
    double = {mult(mult(d, xi), h) for d in a.delta for h in image}
    inside = {frozenset(a.orbit(g)) for g in double}
    assert len(inside) == len(sub.equivalence_classes())
    for gamma in image:
        orb = a.orbit(mult(xi, gamma))
        restricted = frozenset(g for g in (mult(inverse(xi), h) for h in orb) if g in image)
        assert restricted in {frozenset(c) for c in sub.equivalence_classes()}


@given(st.integers(min_value=0, max_value=23))
@settings(max_examples=24, deadline=None)
def test_class_sizes_uniform_s4(index):
    group = FiniteGroup(4, [parse_cycles("(1 2)", 4), parse_cycles("(1 2 3 4)", 4)])
    a = AbstractZipDatum.from_generators(
        group, [parse_cycles("(1 2)", 4)], [parse_cycles("(3 4)", 4)]
    )
    gamma = group.elements()[index]
    assert len(a.orbit(gamma)) == len(a.delta)
