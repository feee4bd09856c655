"""Naive reference implementations used to validate the fast paths.

Each oracle transcribes a definition as literally as practical and shares
nothing with the fast implementations beyond element arithmetic:

* Bruhat order via the subword property of one fixed reduced word,
* minimal coset representatives by exhaustive coset minimum search,
* the largest twist-stable subgroup by filtering the full subgroup
  lattice (enumerated here by closing single-element extensions, a
  different algorithm than the cyclic-join enumeration of the fast path),
* equivalence classes by symmetric-transitive closure of one-step moves,
* the stable subset K_w by testing all subsets.
"""

from __future__ import annotations

from itertools import chain, combinations

from .abstract import AbstractZipDatum, Perm, close_subgroup, identity_perm, inverse, mult
from .coxeter import CoxeterGroup, Element
from .errors import LatticeTooLarge, NonUniqueMinimum
from .zipdata import ZipDatum


def bruhat_subword_oracle(x: Element, w: Element) -> bool:
    """x <= w iff one (equivalently any) reduced word of w contains a
    reduced word of x as a subsequence.  Fixes the canonical word of w and
    searches subsequences left to right with memoization."""
    group = x.group
    word = w.canonical_word()
    memo: dict[tuple[int, tuple[int, ...]], bool] = {}

    def search(i: int, u: Element) -> bool:
        if u.length == 0:
            return True
        if len(word) - i < u.length:
            return False
        key = (i, u.perm)
        got = memo.get(key)
        if got is None:
            got = search(i + 1, u)
            if not got and u.has_left_descent(word[i]):
                got = search(i + 1, group.simple(word[i]) * u)
            memo[key] = got
        return got

    return search(0, x)


def iw_oracle(group: CoxeterGroup, I) -> tuple[Element, ...]:
    """Minimal left-coset representatives by brute force: group all of W
    into cosets W_I w and pick each unique shortest element."""
    I = frozenset(I)
    parabolic = group.parabolic_elements(I)
    seen: set[tuple[int, ...]] = set()
    reps = []
    for w in group.elements():
        if w.perm in seen:
            continue
        coset = [y * w for y in parabolic]
        seen.update(c.perm for c in coset)
        shortest = min(c.length for c in coset)
        mins = [c for c in coset if c.length == shortest]
        if len(mins) != 1:
            raise NonUniqueMinimum(f"coset of {w!r} has {len(mins)} shortest elements")
        reps.append(mins[0])
    return tuple(sorted(reps, key=lambda w: w.sort_key))


def _all_subgroups_by_extension(elements: frozenset[Perm]) -> list[frozenset[Perm]]:
    degree = len(next(iter(elements)))
    trivial = frozenset([identity_perm(degree)])
    found = {trivial}
    frontier = [trivial]
    while frontier:
        new = []
        for H in frontier:
            for g in elements:
                if g in H:
                    continue
                ext = close_subgroup(degree, tuple(H) + (g,))
                if ext not in found:
                    found.add(ext)
                    new.append(ext)
        frontier = new
    return sorted(found, key=lambda H: (len(H), sorted(H)))


def e_gamma_bruteforce(a: AbstractZipDatum, gamma: Perm, bound: int = 48) -> frozenset[Perm]:
    """The largest subgroup of gamma^{-1} Delta gamma fixed by
    psi * inn(gamma): filter the full subgroup lattice and take the
    subgroup generated by every fixed member."""
    gamma = tuple(gamma)
    gi = inverse(gamma)
    conj = frozenset(mult(mult(gi, d), gamma) for d in a.delta)
    if len(conj) > bound:
        raise LatticeTooLarge(f"|conjugate subgroup| = {len(conj)} exceeds {bound}")

    def twist(e: Perm) -> Perm:
        return a.psi[mult(mult(gamma, e), gi)]

    fixed = [
        H for H in _all_subgroups_by_extension(conj) if {twist(h) for h in H} == H
    ]
    generated = close_subgroup(a.group.degree, list(chain.from_iterable(fixed)))
    assert {twist(h) for h in generated} == generated
    return generated


def classes_bruteforce(a: AbstractZipDatum, bound: int = 48) -> tuple[frozenset[Perm], ...]:
    """Equivalence classes by symmetric-transitive closure of the one-step
    moves gamma -> d gamma e psi(d)^{-1}, with e ranging over the
    brute-forced stable subgroup."""
    elements = a.group.elements()
    neighbors: dict[Perm, set[Perm]] = {}
    for gamma in elements:
        E = e_gamma_bruteforce(a, gamma, bound)
        out = set()
        for d in a.delta:
            head = mult(d, gamma)
            tail = inverse(a.psi[d])
            for e in E:
                out.add(mult(mult(head, e), tail))
        neighbors[gamma] = out
    undirected: dict[Perm, set[Perm]] = {g: set() for g in elements}
    for g, outs in neighbors.items():
        for h in outs:
            undirected[g].add(h)
            undirected[h].add(g)
    seen: set[Perm] = set()
    classes = []
    for g in elements:
        if g in seen:
            continue
        stack, comp = [g], set()
        while stack:
            v = stack.pop()
            if v in comp:
                continue
            comp.add(v)
            stack.extend(undirected[v] - comp)
        seen |= comp
        classes.append(frozenset(comp))
    return tuple(classes)


def kw_bruteforce(z: ZipDatum, w: Element) -> frozenset[int]:
    """The stable subset by testing every subset of the candidate domain
    for psi(inn(w)(K)) = K and taking the union of the passing ones."""
    g = z.group
    domain = {}
    for s in z.universe:
        i = g.simple_index_of_root(w.act_on_root(g.simple_root_index(s)))
        if i is not None and i in z.I:
            domain[s] = z.psi[i]
    items = sorted(domain)
    passing = []
    for k in range(len(items) + 1):
        for K in combinations(items, k):
            if {domain[s] for s in K} == set(K):
                passing.append(set(K))
    union = set().union(*passing) if passing else set()
    assert {domain[s] for s in union} == union
    return frozenset(union)
