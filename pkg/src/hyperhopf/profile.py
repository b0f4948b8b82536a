"""Valency / edge-size profiles ``(alpha, pi)`` of hypertrees.

``alpha[i-1]`` counts vertices of valency i and ``pi[j-2]`` counts edges of
size j.  Both vectors are stored with trailing zeros trimmed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import InfeasibleProfile


def _trim(values) -> tuple[int, ...]:
    out = [int(v) for v in values]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class Profile:
    alpha: tuple[int, ...]
    pi: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "alpha", _trim(self.alpha))
        object.__setattr__(self, "pi", _trim(self.pi))
        if any(v < 0 for v in self.alpha + self.pi):
            raise ValueError("profile entries must be non-negative")

    @property
    def n(self) -> int:
        return sum(self.alpha)

    @property
    def edge_count(self) -> int:
        return sum(self.pi)

    @property
    def k(self) -> int:
        """Length of the code words attached to this profile."""
        return self.edge_count - 1

    def a(self, i: int) -> int:
        return self.alpha[i - 1] if 1 <= i <= len(self.alpha) else 0

    def p(self, j: int) -> int:
        return self.pi[j - 2] if 2 <= j < len(self.pi) + 2 else 0

    def sort_key(self):
        # fewer edges first; within that, larger pi first, then alpha ascending
        return (self.edge_count, tuple(-x for x in self.pi), self.alpha)

    def to_json(self) -> dict:
        return {"alpha": list(self.alpha), "pi": list(self.pi)}

    @classmethod
    def from_json(cls, data: dict) -> "Profile":
        return cls(tuple(data["alpha"]), tuple(data["pi"]))

    def __str__(self) -> str:
        a = ",".join(map(str, self.alpha))
        p = ",".join(map(str, self.pi))
        return f"alpha=({a}) pi=({p})"


def is_feasible(p: Profile) -> bool:
    n = p.n
    vertices_ok = n >= 1
    edges_ok = sum((j - 1) * p.p(j) for j in range(2, len(p.pi) + 2)) == n - 1
    degree_ok = sum(i * p.a(i) for i in range(1, len(p.alpha) + 1)) == n + p.edge_count - 1
    return vertices_ok and edges_ok and degree_ok


def euler_characteristic(p: Profile) -> int:
    """Vertices minus edges of the incidence graph, counted from the profile."""
    edges = sum(p.pi)
    return edges - sum(j * p.p(j) for j in range(2, len(p.pi) + 2)) + sum(p.alpha)


def integer_partitions(total: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``total`` as non-increasing tuples."""
    if max_part is None:
        max_part = total
    if total == 0:
        yield ()
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in integer_partitions(total - first, first):
            yield (first,) + rest


def _multiplicities(parts: tuple[int, ...]) -> tuple[int, ...]:
    # counts[m - 1] = how many parts equal m
    counts = [0] * (max(parts, default=0))
    for part in parts:
        counts[part - 1] += 1
    return tuple(counts)


def enumerate_profiles(n: int) -> list[Profile]:
    """All feasible profiles on n vertices, in :meth:`Profile.sort_key` order."""
    if n < 2:
        raise ValueError("profiles are defined for n >= 2")
    out = []
    # edge sizes: j - 1 summing to n - 1
    for edge_parts in integer_partitions(n - 1):
        pi = _multiplicities(edge_parts)
        k = len(edge_parts) - 1
        # valencies above one: i - 1 summing to k
        for vertex_parts in integer_partitions(k):
            if len(vertex_parts) > n:
                continue
            higher = _multiplicities(vertex_parts)
            alpha = (n - len(vertex_parts),) + higher
            out.append(Profile(alpha, pi))
    out = [p for p in out if is_feasible(p)]
    return sorted(out, key=Profile.sort_key)


def pi2_from_rest(p: Profile) -> int:
    """Number of size-2 edges forced by the larger edges."""
    if not is_feasible(p):
        raise InfeasibleProfile(str(p))
    return p.n - 1 - sum((j - 1) * p.p(j) for j in range(3, len(p.pi) + 2))
