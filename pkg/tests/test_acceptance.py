"""Acceptance gate: one test per criterion, each printing a pass/fail line.

All tolerances are exact (set/value equality); the only numeric bounds are
the stated wall-clock limits.  Run with `pytest tests/test_acceptance.py -v -s`.
"""

import time

import pytest

from weylzip import CoxeterAutomorphism, ExtendedZipDatum, ZipDatum, build_group
from weylzip import verify as V
from weylzip.oracles import classes_bruteforce
from weylzip.serialize import extended_str, word_str

SWEEP_TYPES = ("A1", "A2", "A3", "B2", "B3", "C3", "G2")
RANK2_TYPES = ("A1", "A1xA1", "A2", "B2", "G2")

_sweeps: dict[str, tuple] = {}


def sweep(label):
    if label not in _sweeps:
        _sweeps[label] = V.sweep_zip_data(build_group(label))
    return _sweeps[label]


class Criterion:
    def __init__(self, number, title):
        self.number = number
        self.title = title
        self.start = time.perf_counter()

    def finish(self, failures, limit=None):
        elapsed = time.perf_counter() - self.start
        ok = not failures and (limit is None or elapsed < limit)
        print(f"criterion {self.number} ({self.title}): "
              f"{'PASS' if ok else 'FAIL'} in {elapsed:.1f}s")
        for f in failures[:10]:
            print(f"  {f}")
        assert not failures, failures[:10]
        if limit is not None:
            assert elapsed < limit, f"criterion {self.number} took {elapsed:.1f}s >= {limit}s"


def test_criterion_1_partition_and_representatives():
    crit = Criterion(1, "partition / representative theorem")
    failures = []
    for label in SWEEP_TYPES:
        for z in sweep(label):
            failures += V.check_partition_and_reps(z)
    crit.finish(failures, limit=60.0)


def test_criterion_2_class_cardinality():
    crit = Criterion(2, "class cardinality")
    failures = []
    for label in SWEEP_TYPES:
        for z in sweep(label):
            failures += V.check_class_cardinality(z.abstract_datum(), repr(z))
    catalog = V.abstract_catalog()
    assert len(catalog) >= 20
    assert any(a.group.order == 24 and a.group.degree == 4 for _, a in catalog)
    assert any(not a.psi_injective for _, a in catalog)
    assert all(a.group.order <= 48 for _, a in catalog)
    for name, a in catalog:
        failures += V.check_class_cardinality(a, name)
    crit.finish(failures, limit=30.0)


def test_criterion_3_sigma_duality():
    crit = Criterion(3, "sigma duality and order isomorphism")
    failures = []
    for label in SWEEP_TYPES:
        for z in sweep(label):
            failures += V.check_sigma_duality(z)
    crit.finish(failures)


def test_criterion_4_closure_order():
    crit = Criterion(4, "closure partial order")
    failures = []
    for label in SWEEP_TYPES:
        for z in sweep(label):
            failures += V.check_closure_order(z, "iw")
            failures += V.check_closure_order(z, "wj")
    crit.finish(failures)


def test_criterion_5_refined_length():
    crit = Criterion(5, "refined length formula")
    failures = []
    for label in SWEEP_TYPES:
        for z in sweep(label):
            failures += V.check_refined_length(z)
    crit.finish(failures)


def test_criterion_6_oracle_equivalence():
    crit = Criterion(6, "oracle equivalence")
    failures = []
    for label in SWEEP_TYPES + ("A1xA1", "A4"):
        group = build_group(label)
        if group.order <= 120:
            failures += V.check_bruhat_oracle_all_pairs(group)
    failures += V.check_bruhat_oracle_sampled(build_group("F4"), V.F4_SAMPLE_PAIRS)
    for label in SWEEP_TYPES:
        for z in sweep(label):
            failures += V.check_kw(z)
    for label in RANK2_TYPES:
        for z in sweep(label):
            failures += V.check_abstract_oracles(z.abstract_datum(), repr(z))
    for name, a in V.abstract_catalog():
        failures += V.check_abstract_oracles(a, name)
    crit.finish(failures, limit=300.0)


def test_criterion_7_worked_a2_dataset():
    crit = Criterion(7, "worked A2 dataset, bit exact")
    failures = []
    g = build_group("A2")
    z = ZipDatum(g, {1}, {2}, {1: 2})
    pieces = z.pieces()
    table = [
        (word_str(p.rep), p.length, p.dimension, p.inf_stab_dim,
         tuple(sorted(p.stable_subset)))
        for p in pieces
    ]
    if table != [("e", 0, 6, 2, ()), ("2", 1, 7, 2, ()), ("2,1", 2, 8, 0, (2,))]:
        failures.append(f"pieces table differs: {table}")
    sigma_map = {word_str(p.rep): word_str(p.dual_rep) for p in pieces}
    if sigma_map != {"e": "e", "2": "1", "2,1": "2,1"}:
        failures.append(f"sigma map differs: {sigma_map}")
    expected_classes = {
        frozenset({g.identity.perm, g.from_word([1, 2]).perm}),
        frozenset({g.simple(1).perm, g.simple(2).perm}),
        frozenset({g.from_word([2, 1]).perm, g.longest_element().perm}),
    }
    a = z.abstract_datum()
    if {frozenset(c) for c in a.equivalence_classes()} != expected_classes:
        failures.append("equivalence classes differ from the worked values")
    if {frozenset(c) for c in classes_bruteforce(a)} != expected_classes:
        failures.append("oracle classes differ from the worked values")
    poset = z.hasse_poset()
    if poset.cover_edges != ((0, 1), (1, 2)):
        failures.append(f"closure chain differs: {poset.cover_edges}")
    crit.finish(failures)


def test_criterion_8_nonconnected_consistency():
    crit = Criterion(8, "non-connected consistency")
    failures = []
    for label in RANK2_TYPES:
        for z in sweep(label):
            failures += V.check_extended_trivial_omega(z)
    g = build_group("A1xA1")
    z = ZipDatum(g, set(), set(), {})
    swap = CoxeterAutomorphism(g, (2, 1))
    ext = ExtendedZipDatum(z, [swap], [swap], [swap])
    orbits = ext.pieces("iw")
    shown = [tuple(extended_str(e) for e in orb) for orb in orbits]
    expected = [
        ("e",),
        ("e|2,1",),
        ("1", "2"),
        ("1|2,1", "2|2,1"),
        ("1,2",),
        ("1,2|2,1",),
    ]
    if shown != expected:
        failures.append(f"swap dataset orbits differ: {shown}")
    for what in ext.param_set("iw"):
        for u in ext.omega_I:
            if ext.sigma_hat(ext.act(u, what)) != ext.act(u, ext.sigma_hat(what), "wj"):
                failures.append(f"sigma_hat not equivariant at {extended_str(what)}")
    crit.finish(failures)


def test_criterion_9_isogeny_layer():
    crit = Criterion(9, "isogeny / reparametrized closures")
    failures = []
    from weylzip.isogeny import zip_datum_from_isogeny

    a2 = build_group("A2")
    flip = CoxeterAutomorphism(a2, (2, 1))
    iso = zip_datum_from_isogeny(a2, flip, a2.identity_automorphism(), {1}, a2.identity)
    if (iso.zip.I, iso.zip.J, iso.zip.psi) != (frozenset({1}), frozenset({2}), {1: 2}):
        failures.append("A2 flip example differs")
    a3 = build_group("A3")
    ident = a3.identity_automorphism()
    iso = zip_datum_from_isogeny(a3, ident, ident, {1}, a3.from_word([1, 2]))
    if (iso.zip.I, iso.zip.J, iso.zip.psi) != (frozenset({1}), frozenset({2}), {1: 2}):
        failures.append("A3 example differs")
    for label in SWEEP_TYPES + ("A1xA1",):
        failures += V.check_lusztig_consistency(build_group(label))
    crit.finish(failures)


def test_criterion_10_performance():
    crit = Criterion(10, "performance bounds")
    failures = []
    start = time.perf_counter()
    f4 = build_group("F4")
    z = ZipDatum(f4, {1, 2}, {1, 2}, {1: 1, 2: 2})
    pieces = z.pieces()
    poset = z.hasse_poset()
    f4_elapsed = time.perf_counter() - start
    if len(pieces) != len(poset.nodes) or f4_elapsed >= 60.0:
        failures.append(f"F4 pieces+poset took {f4_elapsed:.1f}s (limit 60s)")
    start = time.perf_counter()
    results = V.group_suites("B3", include_abstract_oracles=False)
    b3_elapsed = time.perf_counter() - start
    for r in results:
        failures += list(r.failures)
    if b3_elapsed >= 10.0:
        failures.append(f"B3 verify took {b3_elapsed:.1f}s (limit 10s)")
    print(f"  F4 pieces+poset: {f4_elapsed:.1f}s; B3 verify: {b3_elapsed:.1f}s")
    crit.finish(failures)
