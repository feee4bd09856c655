"""Coxeter-type zip data and their piece combinatorics.

A zip datum is (W, I, J, psi) with psi: I -> J a bijection of simple
subsets preserving Coxeter matrix entries, so that it extends to an
isomorphism W_I -> W_J of Coxeter groups.  The module computes:

* the piece parameter sets (minimal coset representatives on either side),
* the largest psi*inn(w)-stable subset K_w of each piece,
* the canonical representative of any group element under the twisted
  equivalence relation (so membership of w in a piece is decidable),
* the length-preserving bijection sigma between the two parameter sets,
* the closure partial order, closure sets and the full Hasse poset,
* dimension and infinitesimal-stabilizer counts from root data.

Data may carry a `universe` subset U, in which case everything lives in
the standard parabolic W_U; this is how the induction step to a smaller
datum is realized without rebuilding groups.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

import numpy as np

from . import cosets
from .abstract import AbstractZipDatum, FiniteGroup
from .coxeter import BRUHAT_MATRIX_BOUND, CoxeterGroup, Element
from .errors import (
    GroupMismatch,
    NotDoubleCosetRep,
    NotMinimalRep,
    PsiNotBijective,
    PsiNotCoxeter,
    SubsetMismatch,
)

SIDES = ("iw", "wj")


def _check_side(side: str) -> None:
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, got {side!r}")


class ZipDatum:
    """A validated Coxeter-type zip datum, immutable after construction.

    `psi` maps 1-based simple indices of I to those of J.  All caches are
    internal and lock-protected; public methods are pure.
    """

    def __init__(self, group: CoxeterGroup, I, J, psi: dict, universe=None):
        self.group = group
        self.I = frozenset(int(i) for i in I)
        self.J = frozenset(int(j) for j in J)
        self.psi = {int(a): int(b) for a, b in psi.items()}
        if universe is None:
            universe = group.simple_indices
        self.universe = frozenset(int(u) for u in universe)
        self._validate()
        self._lock = threading.Lock()
        self._psi_elements: dict[Element, Element] = {}
        self._psi_inv_elements: dict[Element, Element] = {}
        self._canonical: dict[Element, Element] = {}
        self._sigma: dict[Element, Element] = {}
        self._induced: dict[Element, "ZipDatum"] = {}
        self._params: dict[str, tuple[Element, ...]] = {}

    def _validate(self) -> None:
        allowed = self.universe
        for i in self.I | self.J:
            if i not in allowed:
                raise SubsetMismatch(f"index {i} outside the universe {sorted(allowed)}")
        if len(self.I) != len(self.J):
            raise SubsetMismatch(f"|I| = {len(self.I)} but |J| = {len(self.J)}")
        if set(self.psi) != self.I or set(self.psi.values()) != self.J or len(
            set(self.psi.values())
        ) != len(self.psi):
            raise PsiNotBijective("psi must be a bijection I -> J")
        g = self.group
        for s in self.I:
            for t in self.I:
                if g.coxeter_m(s, t) != g.coxeter_m(self.psi[s], self.psi[t]):
                    raise PsiNotCoxeter(
                        f"m({s},{t}) = {g.coxeter_m(s, t)} != "
                        f"m(psi {s},psi {t}) = {g.coxeter_m(self.psi[s], self.psi[t])}"
                    )

    def __repr__(self) -> str:
        return (
            f"ZipDatum({self.group.label}, I={sorted(self.I)}, J={sorted(self.J)}, "
            f"psi={dict(sorted(self.psi.items()))})"
        )

    # -- psi as a map of parabolic subgroups --

    def w_I(self) -> tuple[Element, ...]:
        return self.group.parabolic_elements(self.I)

    def psi_element(self, w: Element) -> Element:
        """Image of w in W_I under the Coxeter isomorphism W_I -> W_J."""
        got = self._psi_elements.get(w)
        if got is None:
            word = w.canonical_word()
            if any(i not in self.I for i in word):
                raise GroupMismatch("element does not lie in W_I")
            got = self.group.from_word([self.psi[i] for i in word])
            with self._lock:
                self._psi_elements[w] = got
        return got

    def psi_inverse_element(self, w: Element) -> Element:
        got = self._psi_inv_elements.get(w)
        if got is None:
            inv = {b: a for a, b in self.psi.items()}
            word = w.canonical_word()
            if any(j not in self.J for j in word):
                raise GroupMismatch("element does not lie in W_J")
            got = self.group.from_word([inv[j] for j in word])
            with self._lock:
                self._psi_inv_elements[w] = got
        return got

    # -- parameter sets and membership --

    def in_universe(self, w: Element) -> bool:
        return all(i in self.universe for i in w.canonical_word())

    def contains_param(self, w: Element, side: str = "iw") -> bool:
        _check_side(side)
        if not self.in_universe(w):
            return False
        if side == "iw":
            return cosets.in_min_left(w, self.I)
        return cosets.in_min_right(w, self.J)

    def _require_param(self, w: Element, side: str) -> None:
        if not self.contains_param(w, side):
            kind = "minimal left-coset" if side == "iw" else "minimal right-coset"
            raise NotMinimalRep(f"element is not a {kind} representative in the universe")

    def param_set(self, side: str = "iw") -> tuple[Element, ...]:
        """The piece parameter set: minimal left reps of W_I (side "iw") or
        minimal right reps of W_J (side "wj"), ShortLex ordered."""
        _check_side(side)
        got = self._params.get(side)
        if got is None:
            if side == "iw":
                got = cosets.min_left_coset_reps(self.group, self.I, self.universe)
            else:
                got = cosets.min_right_coset_reps(self.group, self.J, self.universe)
            with self._lock:
                self._params[side] = got
        return got

    # -- induction step --

    def induced_at(self, x: Element) -> "ZipDatum":
        """The induced datum at a minimal double-coset representative x:
        universe J, subsets I_x and J_x = psi(I n xJx^{-1}), twist psi*inn(x)."""
        got = self._induced.get(x)
        if got is not None:
            return got
        g = self.group
        if not (cosets.in_min_left(x, self.I) and cosets.in_min_right(x, self.J)) or (
            not self.in_universe(x)
        ):
            raise NotDoubleCosetRep("x is not minimal in W_I x W_J")
        psi_x = {}
        for t in self.J:
            i = g.simple_index_of_root(x.act_on_root(g.simple_root_index(t)))
            if i is not None and i in self.I:
                psi_x[t] = self.psi[i]
        got = ZipDatum(
            g, frozenset(psi_x), frozenset(psi_x.values()), psi_x, universe=self.J
        )
        with self._lock:
            self._induced[x] = got
        return got

    # -- the stable subset K_w --

    def stable_subset(self, w: Element) -> frozenset[int]:
        """The largest subset K of the simple indices with w K w^{-1}
        contained in I (as reflections) and psi(w K w^{-1}) = K.

        Since s -> psi(w s w^{-1}) is an injective partial map, the largest
        stable subset is the union of its cycles, found by a decreasing
        fixpoint."""
        self._require_param(w, "iw")
        g = self.group
        f = {}
        for s in self.universe:
            i = g.simple_index_of_root(w.act_on_root(g.simple_root_index(s)))
            if i is not None and i in self.I:
                f[s] = self.psi[i]
        K = set(f)
        while True:
            K2 = {s for s in K if f[s] in K}
            if K2 == K:
                return frozenset(K)
            K = K2

    # -- canonical representatives --

    def canonical_rep(self, w: Element) -> Element:
        """The unique parameter-set element equivalent to w.

        Algorithm: write w = w_I * x * w_J (Howlett), replace it by the
        equivalent x * w_J * psi(w_I), and recurse in the induced datum at
        x, whose universe is strictly smaller unless I equals the whole
        universe (then the class is everything and e is returned)."""
        if not self.in_universe(w):
            raise GroupMismatch("element lies outside the universe")
        got = self._canonical.get(w)
        if got is None:
            if self.I == self.universe:
                got = self.group.identity
            else:
                hd = cosets.howlett_decompose(self.group, self.I, self.J, w)
                v = hd.right * self.psi_element(hd.left)
                sub = self.induced_at(hd.middle)
                got = hd.middle * sub.canonical_rep(v)
            with self._lock:
                self._canonical[w] = got
        return got

    # -- sigma --

    def sigma(self, w: Element) -> Element:
        """The image of w under the unique bijection from the "iw" to the
        "wj" parameter set of the form y w psi(y)^{-1}, y in W_I."""
        self._require_param(w, "iw")
        got = self._sigma.get(w)
        if got is None:
            for y in self.w_I():
                cand = y * w * self.psi_element(y).inverse()
                if cosets.in_min_right(cand, self.J):
                    got = cand
                    break
            else:  # unreachable: existence is a theorem, re-checked in tests
                raise AssertionError("sigma search failed")
            with self._lock:
                self._sigma[w] = got
        return got

    def sigma_inverse(self, wj: Element) -> Element:
        """Inverse of sigma: the unique w with sigma(w) = wj."""
        self._require_param(wj, "wj")
        for y in self.w_I():
            cand = y.inverse() * wj * self.psi_element(y)
            if cosets.in_min_left(cand, self.I):
                return cand
        raise AssertionError("sigma_inverse search failed")

    # -- closure order --

    def precedes(self, wp: Element, w: Element, side: str = "iw") -> bool:
        """The closure partial order: wp precedes w iff some y in W_I has
        y wp psi(y)^{-1} below w in Bruhat order."""
        _check_side(side)
        self._require_param(wp, side)
        self._require_param(w, side)
        for y in self.w_I():
            cand = y * wp * self.psi_element(y).inverse()
            if self.group.bruhat_leq(cand, w):
                return True
        return False

    def closure_set(self, w: Element, side: str = "iw") -> tuple[Element, ...]:
        """All parameter-set elements preceding w, ShortLex ordered."""
        self._require_param(w, side)
        return tuple(wp for wp in self.param_set(side) if self.precedes(wp, w, side))

    def _relation_matrix(self, side: str) -> np.ndarray:
        """Boolean matrix R with R[a, b] = (params[a] precedes params[b])."""
        params = self.param_set(side)
        k = len(params)
        g = self.group
        if g.order <= BRUHAT_MATRIX_BOUND:
            M = g._bruhat_matrix()
            pidx = np.array([g.element_index(w) for w in params], dtype=np.int64)
            rel = np.zeros((k, k), dtype=bool)
            for y in self.w_I():
                py_inv = self.psi_element(y).inverse()
                tidx = np.array(
                    [g.element_index(y * w * py_inv) for w in params], dtype=np.int64
                )
                rel |= M[np.ix_(pidx, tidx)].T
            return rel
        rel = np.zeros((k, k), dtype=bool)
        for a, wp in enumerate(params):
            for b, w in enumerate(params):
                rel[a, b] = self.precedes(wp, w, side)
        return rel

    def hasse_poset(self, side: str = "iw", central_rank: int = 0) -> "ClosurePoset":
        """The full closure poset on the chosen parameter set, with cover
        edges (transitive reduction) and per-node piece data."""
        _check_side(side)
        rel = self._relation_matrix(side)
        k = rel.shape[0]
        strict = rel & ~np.eye(k, dtype=bool)
        covers = strict & ~(strict.astype(np.uint8) @ strict.astype(np.uint8)).astype(
            bool
        )
        edges = tuple(
            (int(a), int(b)) for a, b in np.argwhere(covers)
        )
        return ClosurePoset(
            datum=self,
            side=side,
            nodes=self.pieces(side=side, central_rank=central_rank),
            leq=rel,
            cover_edges=edges,
        )

    # -- numeric reports --

    def dim_levi_deficit(self) -> int:
        """#Phi^+ - #Phi_J^+ within the universe (the unipotent-radical
        dimension on the J side)."""
        g = self.group
        return len(g.phi_plus(self.universe)) - len(g.phi_plus(self.J))

    def dim_parabolic(self, central_rank: int = 0) -> int:
        g = self.group
        return (
            len(self.universe)
            + central_rank
            + len(g.phi_plus(self.universe))
            + len(g.phi_plus(self.I))
        )

    def dim_group(self, central_rank: int = 0) -> int:
        g = self.group
        return len(self.universe) + central_rank + 2 * len(g.phi_plus(self.universe))

    def piece_dimension(self, w: Element, central_rank: int = 0) -> int:
        """dim P + l(w): torus rank (plus a user-supplied central rank),
        Borel unipotent, Levi negatives, and the length of the piece."""
        self._require_param(w, "iw")
        return self.dim_parabolic(central_rank) + w.length

    def inf_stab_dim(self, w: Element) -> int:
        """dim V - l(x) with x the double-coset part of w: the dimension of
        the infinitesimal stabilizer in the vanishing-differential case."""
        self._require_param(w, "iw")
        hd = cosets.howlett_decompose(self.group, self.I, self.J, w)
        out = self.dim_levi_deficit() - hd.middle.length
        assert out >= 0
        return out

    def pieces(self, side: str = "iw", central_rank: int = 0) -> tuple["Piece", ...]:
        """One Piece per parameter, ordered ShortLex by the chosen side's
        label.  In orbitally-finite data each piece is a single orbit and
        this doubles as the orbit-representative list."""
        _check_side(side)
        out = []
        for w in self.param_set("iw"):
            hd = cosets.howlett_decompose(self.group, self.I, self.J, w)
            out.append(
                Piece(
                    rep=w,
                    dual_rep=self.sigma(w),
                    stable_subset=self.stable_subset(w),
                    length=w.length,
                    x_part=hd.middle,
                    right_part=hd.right,
                    dimension=self.piece_dimension(w, central_rank),
                    inf_stab_dim=self.inf_stab_dim(w),
                )
            )
        if side == "wj":
            out.sort(key=lambda p: p.dual_rep.sort_key)
        return tuple(out)

    # -- bridge to the abstract-group machinery --

    def abstract_datum(self) -> AbstractZipDatum:
        """This datum as an abstract zip datum on the permutation group
        generated by the universe's simple reflections."""
        g = self.group
        universe_elements = g.parabolic_elements(self.universe)
        gamma = FiniteGroup.from_elements(
            2 * g.num_positive,
            [w.perm for w in universe_elements],
            generators=[g.simple(i).perm for i in sorted(self.universe)],
        )
        delta = frozenset(w.perm for w in self.w_I())
        psi = {w.perm: self.psi_element(w).perm for w in self.w_I()}
        return AbstractZipDatum(gamma, delta, psi)


@dataclass(frozen=True)
class Piece:
    """One stratum: its parameter w (and dual label sigma(w)), the largest
    psi*inn(w)-stable subset, Howlett parts, and dimension counts."""

    rep: Element
    dual_rep: Element
    stable_subset: frozenset[int]
    length: int
    x_part: Element
    right_part: Element
    dimension: int
    inf_stab_dim: int


@dataclass(frozen=True)
class ClosurePoset:
    """The closure order on a parameter set.

    `leq[a, b]` says node a lies in the closure of node b; `cover_edges`
    is the transitive reduction, each edge pointing from the smaller to
    the larger piece.  Node order matches `nodes`.
    """

    datum: ZipDatum
    side: str
    nodes: tuple[Piece, ...]
    leq: np.ndarray
    cover_edges: tuple[tuple[int, int], ...]

    def label(self, k: int) -> Element:
        p = self.nodes[k]
        return p.rep if self.side == "iw" else p.dual_rep

    def to_dot(self) -> str:
        from .serialize import word_str

        lines = ["digraph closure {"]
        for k, piece in enumerate(self.nodes):
            w = self.label(k)
            lines.append(
                f'  n{k} [label="{word_str(w)}\\nl={piece.length} dim={piece.dimension}"];'
            )
        for a, b in self.cover_edges:
            lines.append(f"  n{a} -> n{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        from .serialize import word_str

        return {
            "side": self.side,
            "nodes": [
                {
                    "word": word_str(self.label(k)),
                    "length": p.length,
                    "dim": p.dimension,
                }
                for k, p in enumerate(self.nodes)
            ],
            "cover_edges": [[a, b] for a, b in self.cover_edges],
        }
