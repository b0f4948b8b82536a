"""Labeled hypertrees on {1..n} and the hypertree poset.

A hypertree is stored canonically: each edge is a sorted vertex tuple and the
edges are sorted lexicographically.  ``T <= U`` when every edge of ``T`` is a
union of edges of ``U`` (so the single-edge hypertree is the least element).
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Sequence

import numpy as np

from . import limits
from .errors import (
    EdgeTooSmall,
    HasCycle,
    NotConnected,
    SizeMismatch,
    VertexOutOfRange,
)
from .partition import set_partitions
from .poset import FinitePoset, augment
from .profile import Profile


@dataclass(frozen=True)
class Hypertree:
    n: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", _canonical(self.edges))

    @property
    def edge_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(e) for e in self.edges)

    def valencies(self) -> dict[int, int]:
        val = dict.fromkeys(range(1, self.n + 1), 0)
        for e in self.edges:
            for v in e:
                val[v] += 1
        return val

    def edge_sizes(self) -> list[int]:
        return sorted(len(e) for e in self.edges)

    def relabel(self, perm: dict[int, int]) -> "Hypertree":
        return Hypertree(self.n, tuple(tuple(perm[v] for v in e) for e in self.edges))

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data: dict) -> "Hypertree":
        return validate_hypertree(data["n"], data["edges"])

    def __str__(self) -> str:
        return " ".join("{" + ",".join(map(str, e)) + "}" for e in self.edges) or "{}"


def _canonical(edges) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(tuple(sorted(e)) for e in edges))


@dataclass(frozen=True)
class RootedHypertree:
    tree: Hypertree
    root: int

    def __post_init__(self):
        if not 1 <= self.root <= self.tree.n:
            raise VertexOutOfRange(f"root {self.root} not in 1..{self.tree.n}")

    @property
    def n(self) -> int:
        return self.tree.n

    def to_json(self) -> dict:
        return {**self.tree.to_json(), "root": self.root}

    @classmethod
    def from_json(cls, data: dict) -> "RootedHypertree":
        return cls(Hypertree.from_json(data), int(data["root"]))


@dataclass(frozen=True)
class BipartiteTreeView:
    """Incidence tree: labelled nodes are vertices 1..n, unlabelled nodes edge indices."""

    n: int
    edge_nodes: int
    adjacency: tuple[tuple[int, int], ...]  # (vertex, edge index) pairs

    def degree(self) -> tuple[dict[int, int], dict[int, int]]:
        labelled = Counter(v for v, _ in self.adjacency)
        unlabelled = Counter(e for _, e in self.adjacency)
        return dict(labelled), dict(unlabelled)

    def is_tree(self) -> bool:
        nodes = self.n + self.edge_nodes
        if len(self.adjacency) != nodes - 1:
            return False
        return _connected(self.n, self.edge_nodes, self.adjacency)

    def leaves_are_labelled(self) -> bool:
        _, unlabelled = self.degree()
        return all(d >= 2 for d in unlabelled.values())


def _connected(n: int, m: int, adjacency) -> bool:
    # node ids: vertices 1..n, edges n+1..n+m
    if n + m == 0:
        return True
    nbrs: dict[int, list[int]] = {i: [] for i in range(1, n + m + 1)}
    for v, e in adjacency:
        nbrs[v].append(n + 1 + e)
        nbrs[n + 1 + e].append(v)
    seen = {1}
    todo = [1]
    while todo:
        x = todo.pop()
        for y in nbrs[x]:
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return len(seen) == n + m


def validate_hypertree(n: int, raw_edges: Iterable[Iterable[int]]) -> Hypertree:
    edges = [tuple(sorted(set(e))) for e in raw_edges]
    for e in edges:
        if len(e) < 2:
            raise EdgeTooSmall(f"edge {e} has fewer than two vertices")
        for v in e:
            if not 1 <= v <= n:
                raise VertexOutOfRange(f"vertex {v} of edge {e} not in 1..{n}")
    if len(set(edges)) != len(edges):
        raise HasCycle("repeated edge")
    adjacency = tuple((v, i) for i, e in enumerate(edges) for v in e)
    if n == 1 and not edges:
        return Hypertree(1, ())
    if not _connected(n, len(edges), adjacency):
        raise NotConnected(f"edges {edges} do not connect 1..{n}")
    if sum(len(e) - 1 for e in edges) != n - 1:
        raise HasCycle(f"edges {edges} contain a cycle")
    return Hypertree(n, tuple(edges))


def is_hypertree(n: int, raw_edges) -> bool:
    try:
        validate_hypertree(n, raw_edges)
    except (EdgeTooSmall, VertexOutOfRange, NotConnected, HasCycle):
        return False
    return True


def to_bipartite_tree(T: Hypertree) -> BipartiteTreeView:
    adjacency = tuple((v, i) for i, e in enumerate(T.edges) for v in e)
    return BipartiteTreeView(T.n, len(T.edges), adjacency)


def from_bipartite_tree(view: BipartiteTreeView) -> Hypertree:
    members: dict[int, list[int]] = {i: [] for i in range(view.edge_nodes)}
    for v, e in view.adjacency:
        members[e].append(v)
    return validate_hypertree(view.n, members.values())


# enumeration


def enumerate_hypertrees(n: int, max_n: int | None = None) -> list[Hypertree]:
    """All hypertrees on {1..n}, ordered by edge count then edges.

    The edge count is one more than the rank in the hypertree poset, so the
    order is a linear extension with the single-edge hypertree first.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    limits.check("hypertree n", n, max_n, "hypertree_n")
    return list(_enumerate(n))


@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[Hypertree, ...]:
    rest = frozenset(range(2, n + 1))
    trees = [Hypertree(n, edges) for edges in _rooted(1, rest)]
    return tuple(sorted(trees, key=lambda t: (len(t.edges), t.edges)))


@lru_cache(maxsize=None)
def _rooted(root: int, rest: frozenset[int]) -> tuple[tuple[frozenset[int], ...], ...]:
    # every hypertree on {root} | rest splits uniquely into the branches at root
    if not rest:
        return ((),)
    out = []
    for groups in set_partitions(sorted(rest)):
        options = [_branches(root, frozenset(g)) for g in groups]
        for combo in product(*options):
            out.append(tuple(e for branch in combo for e in branch))
    return tuple(out)


@lru_cache(maxsize=None)
def _branches(root: int, group: frozenset[int]) -> tuple[tuple[frozenset[int], ...], ...]:
    # one edge at root, plus sub-hypertrees hanging from that edge's other vertices
    out = []
    members = sorted(group)
    for size in range(1, len(members) + 1):
        for chosen in combinations(members, size):
            edge = frozenset(chosen) | {root}
            leftover = sorted(group.difference(chosen))
            for owners in product(chosen, repeat=len(leftover)):
                hang: dict[int, set[int]] = {v: set() for v in chosen}
                for v, owner in zip(leftover, owners):
                    hang[owner].add(v)
                subs = [_rooted(v, frozenset(hang[v])) for v in chosen]
                for combo in product(*subs):
                    out.append((edge,) + tuple(e for sub in combo for e in sub))
    return tuple(out)


# order


def hypertree_leq(T: Hypertree, U: Hypertree) -> bool:
    """True iff every edge of T is a union of edges of U."""
    if T.n != U.n:
        raise SizeMismatch(f"hypertrees on {T.n} and {U.n} vertices")
    t_sets = T.edge_sets
    covered: list[set[int]] = [set() for _ in t_sets]
    for u in U.edge_sets:
        # edges of T share at most one vertex, so u (size >= 2) fits in at most one
        home = next((i for i, t in enumerate(t_sets) if u <= t), None)
        if home is None:
            return False
        covered[home] |= u
    return all(c == t for c, t in zip(covered, t_sets))


def coarsenings(U: Hypertree) -> list[Hypertree]:
    """Every T <= U: merge, at each vertex, the blocks of a partition of its edges."""
    incident: dict[int, list[int]] = {v: [] for v in range(1, U.n + 1)}
    for i, e in enumerate(U.edges):
        for v in e:
            incident[v].append(i)
    choices = [list(set_partitions(es)) for es in incident.values() if len(es) >= 2]
    out = []
    for pick in product(*choices):
        parent = list(range(len(U.edges)))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for partition in pick:
            for block in partition:
                for other in block[1:]:
                    parent[find(other)] = find(block[0])
        merged: dict[int, set[int]] = {}
        for i, e in enumerate(U.edges):
            merged.setdefault(find(i), set()).update(e)
        out.append(Hypertree(U.n, tuple(tuple(s) for s in merged.values())))
    return out


def build_hypertree_poset(n: int, augmented: bool = False, max_n: int | None = None) -> FinitePoset:
    """HT_n, or the augmented poset with a greatest element ``TOP`` adjoined."""
    trees = enumerate_hypertrees(n, max_n)
    limits.check("poset elements", len(trees) + int(augmented), None, "poset_elements")
    P = _hypertree_poset(n)
    return augment(P) if augmented else P


@lru_cache(maxsize=8)
def _hypertree_poset(n: int) -> FinitePoset:
    trees = _enumerate(n)
    index = {t: i for i, t in enumerate(trees)}
    m = np.zeros((len(trees), len(trees)), dtype=bool)
    for j, U in enumerate(trees):
        for T in coarsenings(U):
            m[index[T], j] = True
    return FinitePoset(trees, m)


# profiles and factorizations


def profile_of(T: Hypertree) -> Profile:
    """Valency and edge-size multiplicities of ``T``."""
    alpha = Counter(T.valencies().values())
    pi = Counter(len(e) for e in T.edges)
    alpha.pop(0, None)
    a = [alpha.get(i, 0) for i in range(1, max(alpha, default=0) + 1)]
    p = [pi.get(j, 0) for j in range(2, max(pi, default=1) + 1)]
    return Profile(tuple(a), tuple(p))


def upper_interval_factors(T: Hypertree) -> list[int]:
    """Edge sizes of T: ``[T, 1)`` is the product of HT_j over these."""
    return T.edge_sizes()


def lower_interval_factors(T: Hypertree) -> list[int]:
    """Vertex valencies of T: ``[0, T]`` is the product of partition posets over these."""
    return sorted(T.valencies().values())


def relabel_all(trees: Sequence[Hypertree], perm: dict[int, int]) -> list[Hypertree]:
    return [t.relabel(perm) for t in trees]


def root_distances(T: Hypertree, root: int) -> tuple[dict[int, int], list[int]]:
    """BFS over the incidence tree from ``root``.

    Returns the depth of every vertex and, for each edge, the vertex through
    which it is reached (the vertex of the edge closest to the root).
    """
    incident: dict[int, list[int]] = {v: [] for v in range(1, T.n + 1)}
    for i, e in enumerate(T.edges):
        for v in e:
            incident[v].append(i)
    depth = {root: 0}
    parent_vertex = [-1] * len(T.edges)
    todo = deque([root])
    while todo:
        v = todo.popleft()
        for i in incident[v]:
            if parent_vertex[i] != -1:
                continue
            parent_vertex[i] = v
            for w in T.edges[i]:
                if w not in depth:
                    depth[w] = depth[v] + 1
                    todo.append(w)
    return depth, parent_vertex
