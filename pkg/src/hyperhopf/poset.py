"""Finite posets stored as dense order matrices.

A :class:`FinitePoset` is immutable: a tuple of hashable labels plus a
read-only boolean matrix ``leq`` with ``leq[i, j]`` true iff element ``i`` is
below element ``j``.  Everything exact (Möbius values, sums) is done with
Python integers.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Sequence

import numpy as np

from . import limits
from .errors import (
    NoGreatestElement,
    NoLeastElement,
    NotAPartialOrder,
    NotBounded,
    NotComparable,
)


class _Top:
    """Label of the greatest element adjoined by :func:`augment`."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "TOP"

    def __reduce__(self):
        return (_Top, ())


TOP = _Top()


class FinitePoset:
    """Immutable finite poset.

    Use :func:`validate` (or the constructor) on untrusted input; the order
    axioms are checked and a :class:`NotAPartialOrder` carrying a witness is
    raised on failure.
    """

    __slots__ = ("elements", "leq", "_index", "_mu", "_cache")

    def __init__(self, elements: Sequence[Hashable], leq, *, check: bool = True):
        elements = tuple(elements)
        matrix = np.array(leq, dtype=bool)
        n = len(elements)
        if matrix.shape != (n, n):
            raise ValueError(f"order matrix has shape {matrix.shape}, expected {(n, n)}")
        if check:
            _check_partial_order(matrix)
        matrix.setflags(write=False)
        self.elements = elements
        self.leq = matrix
        self._index = {label: i for i, label in enumerate(elements)}
        if len(self._index) != n:
            raise ValueError("element labels must be distinct")
        self._mu: dict[int, dict[int, int]] = {}
        self._cache: dict[str, object] = {}

    @classmethod
    def _trusted(cls, elements, leq) -> "FinitePoset":
        return cls(elements, leq, check=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, label) -> bool:
        return label in self._index

    def __repr__(self) -> str:
        return f"FinitePoset(<{len(self)} elements>)"

    def index(self, label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"{label!r} is not an element of this poset") from None

    def le(self, x, y) -> bool:
        return bool(self.leq[self.index(x), self.index(y)])

    def _cached(self, key, compute):
        if key not in self._cache:
            self._cache[key] = compute()
        return self._cache[key]

    @property
    def least_index(self) -> int | None:
        def compute():
            hits = np.flatnonzero(self.leq.all(axis=1))
            return int(hits[0]) if len(hits) else None

        return self._cached("least", compute)

    @property
    def greatest_index(self) -> int | None:
        def compute():
            hits = np.flatnonzero(self.leq.all(axis=0))
            return int(hits[0]) if len(hits) else None

        return self._cached("greatest", compute)

    @property
    def least(self):
        i = self.least_index
        if i is None:
            raise NoLeastElement("poset has no least element")
        return self.elements[i]

    @property
    def greatest(self):
        i = self.greatest_index
        if i is None:
            raise NoGreatestElement("poset has no greatest element")
        return self.elements[i]

    @property
    def is_bounded(self) -> bool:
        return self.least_index is not None and self.greatest_index is not None

    @property
    def down_sizes(self) -> np.ndarray:
        """Number of elements below each element (itself included)."""
        return self._cached("down_sizes", lambda: self.leq.sum(axis=0))

    def linear_extension(self) -> np.ndarray:
        return self._cached(
            "linext", lambda: np.argsort(self.down_sizes, kind="stable")
        )

    def cover_pairs(self) -> list[tuple[int, int]]:
        """Index pairs (i, j) with j covering i."""

        def compute():
            strict = self.leq & ~np.eye(len(self), dtype=bool)
            out = []
            for i in range(len(self)):
                above = np.flatnonzero(strict[i])
                if len(above) == 0:
                    continue
                # j covers i when nothing strictly above i sits strictly below j
                between = strict[np.ix_(above, above)].any(axis=0)
                out.extend((i, int(j)) for j in above[~between])
            return out

        return self._cached("covers", compute)

    def _mu_from(self, x: int) -> dict[int, int]:
        if x in self._mu:
            return self._mu[x]
        above_x = self.leq[x]
        up = np.flatnonzero(above_x)
        order = up[np.argsort(self.down_sizes[up], kind="stable")]
        mu: dict[int, int] = {}
        for z in order:
            z = int(z)
            if z == x:
                mu[z] = 1
                continue
            below = np.flatnonzero(above_x & self.leq[:, z])
            mu[z] = -sum(mu[int(w)] for w in below if w != z)
        self._mu[x] = mu
        return mu


def _check_partial_order(m: np.ndarray) -> None:
    n = m.shape[0]
    if n == 0:
        raise NotAPartialOrder("non-empty")
    diag = np.diagonal(m)
    if not diag.all():
        i = int(np.flatnonzero(~diag)[0])
        raise NotAPartialOrder("reflexive", (i,))
    both = m & m.T
    np.fill_diagonal(both, False)
    if both.any():
        i, j = (int(v) for v in np.argwhere(both)[0])
        raise NotAPartialOrder("antisymmetric", (i, j))
    for i in range(n):
        up = m[i]
        rows = m[up]
        bad = rows & ~up
        if bad.any():
            r, k = np.argwhere(bad)[0]
            j = int(np.flatnonzero(up)[r])
            raise NotAPartialOrder("transitive", (i, j, int(k)))


def validate(relation, elements: Sequence[Hashable] | None = None) -> FinitePoset:
    """Check a raw relation matrix and wrap it as a poset.

    ``relation[i][j]`` truthy means ``i <= j``.  Labels default to
    ``0..n-1``.
    """
    matrix = np.array(relation, dtype=bool)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        if matrix.size == 0:
            raise NotAPartialOrder("non-empty")
        raise ValueError("relation must be a square matrix")
    if elements is None:
        elements = range(matrix.shape[0])
    return FinitePoset(elements, matrix)


def from_pairs(elements: Sequence[Hashable], pairs: Iterable[tuple]) -> FinitePoset:
    """Poset whose order is exactly ``pairs`` plus the diagonal (no closure)."""
    elements = tuple(elements)
    idx = {e: i for i, e in enumerate(elements)}
    m = np.eye(len(elements), dtype=bool)
    for a, b in pairs:
        m[idx[a], idx[b]] = True
    return validate(m, elements)


def from_covers(elements: Sequence[Hashable], covers: Iterable[tuple]) -> FinitePoset:
    """Poset generated by a cover (or any generating) relation.

    The reflexive-transitive closure is computed and the result re-validated,
    so a cyclic input raises :class:`NotAPartialOrder`.
    """
    elements = tuple(elements)
    idx = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    m = np.eye(n, dtype=bool)
    for a, b in covers:
        m[idx[a], idx[b]] = True
    # Warshall on rows
    for k in range(n):
        col = m[:, k].copy()
        m[col] |= m[k]
    return validate(m, elements)


def chain(length: int) -> FinitePoset:
    """Total order 0 < 1 < ... < length-1."""
    return FinitePoset._trusted(range(length), np.triu(np.ones((length, length), dtype=bool)))


def antichain(size: int) -> FinitePoset:
    return FinitePoset._trusted(range(size), np.eye(size, dtype=bool))


def boolean_lattice(n: int) -> FinitePoset:
    subsets = [frozenset(i for i in range(n) if mask >> i & 1) for mask in range(1 << n)]
    masks = np.arange(1 << n)
    m = (masks[:, None] & ~masks[None, :]) == 0
    return FinitePoset._trusted(subsets, m)


def trivial() -> FinitePoset:
    return chain(1)


def subposet(P: FinitePoset, indices) -> FinitePoset:
    idx = np.asarray(indices, dtype=int)
    return FinitePoset._trusted([P.elements[i] for i in idx], P.leq[np.ix_(idx, idx)])


def interval(P: FinitePoset, x, y) -> FinitePoset:
    """The closed interval ``[x, y]``."""
    i, j = P.index(x), P.index(y)
    if not P.leq[i, j]:
        raise NotComparable(f"{x!r} is not below {y!r}")
    members = np.flatnonzero(P.leq[i] & P.leq[:, j])
    return subposet(P, members)


def half_open_upper(P: FinitePoset, x) -> FinitePoset:
    """``[x, 1)``: everything at or above ``x`` except the greatest element."""
    top = P.greatest_index
    if top is None:
        raise NoGreatestElement("half-open upper interval needs a greatest element")
    i = P.index(x)
    mask = P.leq[i].copy()
    mask[top] = False
    if not mask.any():
        raise NotComparable(f"{x!r} is the greatest element")
    return subposet(P, np.flatnonzero(mask))


def upper_set(P: FinitePoset, x) -> FinitePoset:
    """Everything at or above ``x``; equals ``[x, 1)`` of the augmented poset."""
    return subposet(P, np.flatnonzero(P.leq[P.index(x)]))


def augment(P: FinitePoset, top=TOP) -> FinitePoset:
    """Adjoin a new greatest element labelled ``top``."""
    n = len(P)
    m = np.zeros((n + 1, n + 1), dtype=bool)
    m[:n, :n] = P.leq
    m[:, n] = True
    return FinitePoset._trusted(P.elements + (top,), m)


def remove_greatest(P: FinitePoset) -> FinitePoset:
    top = P.greatest_index
    if top is None:
        raise NoGreatestElement("poset has no greatest element")
    keep = [i for i in range(len(P)) if i != top]
    if not keep:
        raise NotComparable("removing the greatest element would leave nothing")
    return subposet(P, keep)


def direct_product(P: FinitePoset, Q: FinitePoset) -> FinitePoset:
    """Cartesian product with the componentwise order; labels are pairs."""
    labels = [(p, q) for p in P.elements for q in Q.elements]
    return FinitePoset._trusted(labels, np.kron(P.leq, Q.leq).astype(bool))


def product_of(factors: Sequence[FinitePoset]) -> FinitePoset:
    """Iterated direct product; the empty product is the trivial poset.

    Labels are flat tuples with one entry per factor.
    """
    if not factors:
        return FinitePoset._trusted([()], np.ones((1, 1), dtype=bool))
    labels = [(e,) for e in factors[0].elements]
    leq = factors[0].leq
    for f in factors[1:]:
        labels = [a + (b,) for a in labels for b in f.elements]
        leq = np.kron(leq, f.leq).astype(bool)
    return FinitePoset._trusted(labels, leq)


def moebius(P: FinitePoset, x, y) -> int:
    i, j = P.index(x), P.index(y)
    if not P.leq[i, j]:
        raise NotComparable(f"{x!r} is not below {y!r}")
    return P._mu_from(i)[j]


def moebius_number(P: FinitePoset) -> int:
    """``mu(0, 1)`` of a bounded poset."""
    lo, hi = P.least_index, P.greatest_index
    if lo is None or hi is None:
        raise NotBounded("Möbius number needs both a least and a greatest element")
    return P._mu_from(lo)[hi]


def sum_function(P: FinitePoset) -> int:
    """Sum of ``mu(0, x)`` over all ``x``; equals minus the Möbius number of P with a top added."""
    lo = P.least_index
    if lo is None:
        raise NoLeastElement("sum function needs a least element")
    return sum(P._mu_from(lo).values())


# isomorphism


def _refine_colours(posets: Sequence[FinitePoset]) -> list[np.ndarray]:
    """Joint colour refinement on the strict order (1-WL style).

    Colours are comparable across the given posets, so differing colour
    histograms prove non-isomorphism.
    """
    stricts = []
    for P in posets:
        s = P.leq & ~np.eye(len(P), dtype=bool)
        stricts.append(s.astype(np.float64))
    colours = [np.zeros(len(P), dtype=np.int64) for P in posets]
    n_colours = 1
    while True:
        rows = []
        for s, c in zip(stricts, colours):
            onehot = np.zeros((len(c), n_colours))
            onehot[np.arange(len(c)), c] = 1.0
            below = s.T @ onehot
            above = s @ onehot
            rows.append(np.hstack([c[:, None].astype(np.float64), below, above]))
        stacked = np.vstack(rows)
        _, inverse = np.unique(stacked, axis=0, return_inverse=True)
        inverse = inverse.reshape(-1)
        new_count = int(inverse.max()) + 1
        splits = np.cumsum([len(c) for c in colours])[:-1]
        colours = [part.astype(np.int64) for part in np.split(inverse, splits)]
        if new_count == n_colours:
            return colours
        n_colours = new_count


def find_isomorphism(P: FinitePoset, Q: FinitePoset, max_elements: int | None = None):
    """Return an order isomorphism P -> Q as an index array, or None."""
    limits.check("isomorphism test elements", max(len(P), len(Q)), max_elements, "isomorphism_elements")
    n = len(P)
    if n != len(Q) or int(P.leq.sum()) != int(Q.leq.sum()):
        return None
    cp, cq = _refine_colours([P, Q])
    if not np.array_equal(np.sort(cp), np.sort(cq)):
        return None

    classes: dict[int, np.ndarray] = {}
    for colour in np.unique(cq):
        classes[int(colour)] = np.flatnonzero(cq == colour)
    class_size = {c: len(v) for c, v in classes.items()}

    # Next element to place: most relations to already placed ones, then rarest colour.
    comparable = (P.leq | P.leq.T).astype(np.int64)
    placed = np.zeros(n, dtype=bool)
    links = np.zeros(n, dtype=np.int64)
    rarity = np.array([class_size[int(c)] for c in cp])
    order = []
    for _ in range(n):
        score = np.where(placed, -1, links * (n + 1) - rarity)
        p = int(np.argmax(score))
        order.append(p)
        placed[p] = True
        links += comparable[p]
    order = np.array(order)

    image = np.full(n, -1, dtype=np.int64)
    used = np.zeros(n, dtype=bool)
    pending: list = [None] * n
    t = 0
    while 0 <= t < n:
        if pending[t] is None:
            p = order[t]
            cands = classes[int(cp[p])]
            cands = cands[~used[cands]]
            if t and len(cands):
                prev_p = order[:t]
                prev_q = image[:t]
                ok = (Q.leq[np.ix_(prev_q, cands)] == P.leq[prev_p, p][:, None]).all(axis=0)
                ok &= (Q.leq[np.ix_(cands, prev_q)] == P.leq[p, prev_p][None, :]).all(axis=1)
                cands = cands[ok]
            pending[t] = iter(cands.tolist())
        q = next(pending[t], None)
        if q is None:
            pending[t] = None
            t -= 1
            if t >= 0:
                used[image[t]] = False
            continue
        image[t] = q
        used[q] = True
        t += 1
    if t < 0:
        return None
    mapping = np.empty(n, dtype=np.int64)
    mapping[order] = image
    return mapping


def are_isomorphic(P: FinitePoset, Q: FinitePoset, max_elements: int | None = None) -> bool:
    """Backtracking isomorphism test, pruned by joint colour refinement.

    Raises :class:`SizeLimitExceeded` above the configured element cap.
    """
    return find_isomorphism(P, Q, max_elements) is not None
