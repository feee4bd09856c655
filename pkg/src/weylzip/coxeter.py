"""Finite Weyl groups acting on their root systems.

A group element is stored as a permutation of the root list (the left
action on roots), which gives O(#roots) multiplication, exact length as
the count of positive roots sent negative, and cheap descent tests.
Canonical words are ShortLex-minimal reduced words, derived on demand by
stripping the smallest left descent.

Roots are integer coordinate vectors in the simple-root basis, listed
positives first; the negative of the root at index r sits at index
r + num_positive (mod 2 * num_positive).
"""

from __future__ import annotations

import threading
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import cartan
from .errors import (
    GroupMismatch,
    IndexOutOfRange,
    InvalidAutomorphism,
    TooLargeToEnumerate,
)

#: Largest group order for which full element enumeration is allowed.
ENUMERATION_BOUND = 100_000

#: Largest group order for which the dense Bruhat-order matrix is built;
#: larger groups fall back to a memoized descent recursion.
BRUHAT_MATRIX_BOUND = 10_000


class Element:
    """One group element, as a permutation of the full root list."""

    __slots__ = ("group", "perm", "_length", "_word", "_inverse", "_hash")

    def __init__(self, group: "CoxeterGroup", perm: tuple[int, ...]):
        self.group = group
        self.perm = perm
        self._length: int | None = None
        self._word: tuple[int, ...] | None = None
        self._inverse: "Element | None" = None
        self._hash: int | None = None

    # -- group arithmetic --

    def __mul__(self, other: "Element") -> "Element":
        if self.group is not other.group:
            raise GroupMismatch("cannot multiply elements of different groups")
        p, q = self.perm, other.perm
        return Element(self.group, tuple(p[i] for i in q))

    def inverse(self) -> "Element":
        if self._inverse is None:
            inv = [0] * len(self.perm)
            for i, j in enumerate(self.perm):
                inv[j] = i
            w = Element(self.group, tuple(inv))
            w._inverse = self
            self._inverse = w
        return self._inverse

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Element)
            and self.group is other.group
            and self.perm == other.perm
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.perm)
        return self._hash

    # -- root action --

    def act_on_root(self, r: int) -> int:
        """Index of the image of root r under the left action."""
        return self.perm[r]

    # -- length, words, descents --

    @property
    def length(self) -> int:
        if self._length is None:
            m = self.group.num_positive
            self._length = sum(1 for r in range(m) if self.perm[r] >= m)
        return self._length

    def is_identity(self) -> bool:
        return self.length == 0

    def canonical_word(self) -> tuple[int, ...]:
        """ShortLex-minimal reduced word, as a tuple of 1-based indices."""
        if self._word is None:
            word = []
            w = self
            while w.length > 0:
                s = min(w.left_descents())
                word.append(s)
                w = self.group.simple(s) * w
            self._word = tuple(word)
        return self._word

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        word = self.canonical_word()
        return (len(word), word)

    def right_descents(self) -> frozenset[int]:
        g = self.group
        m = g.num_positive
        return frozenset(
            i for i in g.simple_indices if self.perm[g.simple_root_index(i)] >= m
        )

    def left_descents(self) -> frozenset[int]:
        return self.inverse().right_descents()

    def descents(self, side: str = "left") -> frozenset[int]:
        if side == "left":
            return self.left_descents()
        if side == "right":
            return self.right_descents()
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")

    def has_left_descent(self, i: int) -> bool:
        g = self.group
        m = g.num_positive
        return self.inverse().perm[g.simple_root_index(i)] >= m

    def has_right_descent(self, i: int) -> bool:
        g = self.group
        return self.perm[g.simple_root_index(i)] >= g.num_positive

    def __repr__(self) -> str:
        from .serialize import word_str

        return f"Element({self.group.label}: {word_str(self)})"


class CoxeterAutomorphism:
    """Automorphism of (W, S) given by a Coxeter-matrix preserving
    permutation of the simple reflections."""

    __slots__ = ("group", "images")

    def __init__(self, group: "CoxeterGroup", images: Sequence[int]):
        images = tuple(int(i) for i in images)
        n = group.rank
        if sorted(images) != list(range(1, n + 1)):
            raise InvalidAutomorphism(f"{images} is not a permutation of 1..{n}")
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if group.coxeter_m(i, j) != group.coxeter_m(images[i - 1], images[j - 1]):
                    raise InvalidAutomorphism(
                        f"{images} does not preserve the Coxeter matrix"
                    )
        self.group = group
        self.images = images

    def apply_index(self, i: int) -> int:
        return self.images[i - 1]

    def apply_subset(self, subset: Iterable[int]) -> frozenset[int]:
        return frozenset(self.images[i - 1] for i in subset)

    def apply_element(self, w: Element) -> Element:
        g = self.group
        out = g.identity
        for i in w.canonical_word():
            out = out * g.simple(self.images[i - 1])
        return out

    def __call__(self, arg):
        if isinstance(arg, Element):
            return self.apply_element(arg)
        if isinstance(arg, (set, frozenset)):
            return self.apply_subset(arg)
        return self.apply_index(arg)

    def __mul__(self, other: "CoxeterAutomorphism") -> "CoxeterAutomorphism":
        if self.group is not other.group:
            raise GroupMismatch("automorphisms of different groups")
        n = self.group.rank
        return CoxeterAutomorphism(
            self.group, tuple(self.images[other.images[i] - 1] for i in range(n))
        )

    def inverse(self) -> "CoxeterAutomorphism":
        n = self.group.rank
        inv = [0] * n
        for i, j in enumerate(self.images):
            inv[j - 1] = i + 1
        return CoxeterAutomorphism(self.group, tuple(inv))

    def is_identity(self) -> bool:
        return all(self.images[i] == i + 1 for i in range(self.group.rank))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CoxeterAutomorphism)
            and self.group is other.group
            and self.images == other.images
        )

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"CoxeterAutomorphism{self.images}"


class CoxeterGroup:
    """A finite Weyl group with its root system.

    Construct through :func:`build_group`; instances are immutable after
    construction apart from internal caches, which are lock-protected, so
    concurrent reads are safe.
    """

    def __init__(self, factors, cartan_matrix_, coxeter_matrix_, label: str,
                 enumeration_bound: int = ENUMERATION_BOUND):
        self.factors = tuple(factors)
        self.label = label
        self.rank = len(cartan_matrix_)
        self.cartan = tuple(tuple(row) for row in cartan_matrix_)
        self._coxeter = tuple(tuple(row) for row in coxeter_matrix_)
        self.order = cartan.weyl_order(self.factors)
        self.enumeration_bound = enumeration_bound
        self.simple_indices = tuple(range(1, self.rank + 1))

        self._build_roots()
        self._build_simple_reflections()

        self._lock = threading.RLock()
        self._elements: tuple[Element, ...] | None = None
        self._element_index: dict[tuple[int, ...], int] | None = None
        self._bruhat_rows: np.ndarray | None = None
        self._bruhat_memo: dict[tuple[tuple[int, ...], tuple[int, ...]], bool] = {}
        self._parabolic_cache: dict[frozenset[int], tuple[Element, ...]] = {}
        self._longest: Element | None = None

    # -- construction of the root system --

    def _build_roots(self) -> None:
        n = self.rank
        C = self.cartan
        simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]

        def reflect(v: tuple[int, ...], j: int) -> tuple[int, ...]:
            pairing = sum(v[i] * C[i][j] for i in range(n))
            out = list(v)
            out[j] -= pairing
            return tuple(out)

        roots = set(simples) | {tuple(-c for c in v) for v in simples}
        frontier = list(roots)
        while frontier:
            new = []
            for v in frontier:
                for j in range(n):
                    im = reflect(v, j)
                    if im not in roots:
                        roots.add(im)
                        new.append(im)
            frontier = new
        positives = [v for v in roots if all(c >= 0 for c in v)]
        positives.sort(key=lambda v: (sum(v), v))
        # simple roots occupy indices 0..n-1 in Bourbaki order
        assert positives[:n] == sorted(simples, key=lambda v: (sum(v), v))
        positives[:n] = simples
        self.num_positive = len(positives)
        assert 2 * self.num_positive == cartan.root_count(self.factors)
        self.roots = tuple(positives) + tuple(
            tuple(-c for c in v) for v in positives
        )
        self._root_index = {v: r for r, v in enumerate(self.roots)}
        self._reflect_tables = [
            tuple(self._root_index[reflect(v, j)] for v in self.roots)
            for j in range(n)
        ]
        # root index -> 1-based simple index when the root is +-alpha_i
        self._simple_of_root: dict[int, int] = {}
        for i in range(n):
            self._simple_of_root[i] = i + 1
            self._simple_of_root[i + self.num_positive] = i + 1

    def _build_simple_reflections(self) -> None:
        self.identity = Element(self, tuple(range(2 * self.num_positive)))
        self.identity._word = ()
        self.identity._length = 0
        self._simples = {
            i + 1: Element(self, self._reflect_tables[i]) for i in range(self.rank)
        }

    # -- basic queries --

    def simple(self, i: int) -> Element:
        try:
            return self._simples[i]
        except KeyError:
            raise IndexOutOfRange(f"simple index {i} not in 1..{self.rank}") from None

    def coxeter_m(self, i: int, j: int) -> int:
        if not (1 <= i <= self.rank and 1 <= j <= self.rank):
            raise IndexOutOfRange(f"indices ({i},{j}) not in 1..{self.rank}")
        return self._coxeter[i - 1][j - 1]

    def simple_root_index(self, i: int) -> int:
        if not 1 <= i <= self.rank:
            raise IndexOutOfRange(f"simple index {i} not in 1..{self.rank}")
        return i - 1

    def is_positive_root(self, r: int) -> bool:
        return r < self.num_positive

    def negate_root(self, r: int) -> int:
        m = self.num_positive
        return r + m if r < m else r - m

    def simple_index_of_root(self, r: int) -> int | None:
        """1-based simple index i when root r is +-alpha_i, else None."""
        return self._simple_of_root.get(r)

    def from_word(self, word: Iterable[int]) -> Element:
        out = self.identity
        for i in word:
            out = out * self.simple(i)
        return out

    def phi(self, subset: Iterable[int]) -> frozenset[int]:
        """Indices of all roots supported on the given simple subset."""
        cols = {self.simple_root_index(i) for i in subset}
        return frozenset(
            r
            for r, v in enumerate(self.roots)
            if all(c == 0 or k in cols for k, c in enumerate(v))
        )

    def phi_plus(self, subset: Iterable[int]) -> frozenset[int]:
        return frozenset(r for r in self.phi(subset) if r < self.num_positive)

    # -- enumeration --

    def elements(self) -> tuple[Element, ...]:
        """All group elements in ShortLex order of their canonical words."""
        if self._elements is None:
            with self._lock:
                if self._elements is None:
                    if self.order > self.enumeration_bound:
                        raise TooLargeToEnumerate(
                            f"|W| = {self.order} exceeds bound {self.enumeration_bound}"
                        )
                    self._elements = self._close_under_products(
                        [self.identity], [self._simples[i] for i in self.simple_indices]
                    )
                    self._element_index = {
                        w.perm: k for k, w in enumerate(self._elements)
                    }
        return self._elements

    def _close_under_products(self, seeds, gens) -> tuple[Element, ...]:
        seen = {w.perm: w for w in seeds}
        frontier = list(seeds)
        while frontier:
            new = []
            for w in frontier:
                for s in gens:
                    ws = w * s
                    if ws.perm not in seen:
                        seen[ws.perm] = ws
                        new.append(ws)
            frontier = new
        return tuple(sorted(seen.values(), key=lambda w: w.sort_key))

    def element_index(self, w: Element) -> int:
        self.elements()
        assert self._element_index is not None
        return self._element_index[w.perm]

    def parabolic_elements(self, subset: Iterable[int]) -> tuple[Element, ...]:
        """All elements of the standard parabolic subgroup W_I, ShortLex."""
        key = frozenset(subset)
        got = self._parabolic_cache.get(key)
        if got is None:
            gens = [self.simple(i) for i in sorted(key)]
            got = self._close_under_products([self.identity], gens)
            with self._lock:
                self._parabolic_cache[key] = got
        return got

    def longest_element(self) -> Element:
        """The longest element w0 (sends all positive roots negative)."""
        if self._longest is None:
            m = self.num_positive
            w = self.identity
            while w.length < m:
                i = next(i for i in self.simple_indices if not w.has_right_descent(i))
                w = w * self.simple(i)
            self._longest = w
        return self._longest

    # -- Bruhat order --

    def _bruhat_matrix(self) -> np.ndarray:
        """Row w: boolean downset mask, rows/columns in elements() order."""
        if self._bruhat_rows is None:
            with self._lock:
                if self._bruhat_rows is None:
                    elems = self.elements()
                    n = len(elems)
                    idx = self._element_index
                    assert idx is not None
                    lmul = {
                        s: np.array(
                            [idx[(self._simples[s] * w).perm] for w in elems],
                            dtype=np.int32,
                        )
                        for s in self.simple_indices
                    }
                    rows = np.zeros((n, n), dtype=bool)
                    rows[0, 0] = True  # identity is first in ShortLex order
                    for k in range(1, n):
                        w = elems[k]
                        s = min(w.left_descents())
                        k2 = lmul[s][k]  # index of s*w, shorter than w
                        down = rows[k2]
                        rows[k] = down | down[lmul[s]]
                    self._bruhat_rows = rows
        return self._bruhat_rows

    def bruhat_leq(self, x: Element, w: Element) -> bool:
        """Bruhat order test x <= w (memoized descent recursion; a dense
        matrix is used for groups up to BRUHAT_MATRIX_BOUND elements)."""
        if x.group is not self or w.group is not self:
            raise GroupMismatch("elements of a different group")
        if x.length > w.length:
            return False
        if x.length == w.length:
            return x == w
        if self.order <= BRUHAT_MATRIX_BOUND:
            M = self._bruhat_matrix()
            return bool(M[self.element_index(w), self.element_index(x)])
        return self._bruhat_recursive(x, w)

    def _bruhat_recursive(self, x: Element, w: Element) -> bool:
        if x.length > w.length:
            return False
        if x.length == 0 or x == w:
            return True
        if w.length == 0:
            return False
        key = (x.perm, w.perm)
        got = self._bruhat_memo.get(key)
        if got is None:
            s = self.simple(min(w.left_descents()))
            sw = s * w
            sx = s * x
            if sx.length < x.length:
                got = self._bruhat_recursive(sx, sw)
            else:
                got = self._bruhat_recursive(x, sw)
            self._bruhat_memo[key] = got
        return got

    def coxeter_automorphisms(self) -> tuple[CoxeterAutomorphism, ...]:
        """All Coxeter-matrix preserving permutations of the simple set."""
        from itertools import permutations

        out = []
        for images in permutations(self.simple_indices):
            if all(
                self.coxeter_m(i, j) == self.coxeter_m(images[i - 1], images[j - 1])
                for i in self.simple_indices
                for j in self.simple_indices
            ):
                out.append(CoxeterAutomorphism(self, images))
        return tuple(out)

    def identity_automorphism(self) -> CoxeterAutomorphism:
        return CoxeterAutomorphism(self, self.simple_indices)

    def __repr__(self) -> str:
        return f"CoxeterGroup({self.label}, order={self.order})"


@lru_cache(maxsize=None)
def _build_cached(key, enumeration_bound: int) -> CoxeterGroup:
    if isinstance(key, str):
        factors, cart, cox = cartan.matrices_for_label(key)
        label = key
    else:
        factors, cart, label = cartan.classify_coxeter_matrix(key)
        cox = [list(row) for row in key]
    return CoxeterGroup(factors, cart, cox, label, enumeration_bound)


def build_group(spec, enumeration_bound: int = ENUMERATION_BOUND) -> CoxeterGroup:
    """Build a finite Weyl group from a Cartan type label ("A2", "B3",
    "A1xA1", ...) or an explicit Coxeter matrix of finite Weyl type.

    Repeated calls with equal specs return the same instance.
    """
    if isinstance(spec, str):
        return _build_cached(spec, enumeration_bound)
    key = cartan.validate_coxeter_matrix(spec)
    return _build_cached(key, enumeration_bound)
