"""Orbit decomposition of the union of two unique-bond structures.

The union of two matchings has maximum degree 2, so its connected
components are simple paths (linear orbits, singletons included) and even
cycles (cyclic orbits). A contact shared by both structures is a special
case: its two nodes form a cyclic orbit of length 2. Orbit length
statistics drive the closed forms of the higher metrics and the chain
counts a_k.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import LengthMismatch, NotSecondary
from .structures import (
    ContactStructure,
    is_secondary,
    symmetric_difference_count,
    union,
)


class OrbitKind(enum.Enum):
    LINEAR = "linear"
    CYCLIC = "cyclic"


@dataclass(frozen=True)
class Orbit:
    """One connected component, nodes listed in traversal order."""

    nodes: tuple[int, ...]
    kind: OrbitKind

    @property
    def length(self) -> int:
        return len(self.nodes)

    @property
    def is_trivial(self) -> bool:
        return self.length == 1


@dataclass(frozen=True)
class OrbitStats:
    """Orbit counts by length: lambda for linear, theta for cyclic."""

    n: int
    lambda_by_length: tuple[tuple[int, int], ...]
    theta_by_length: tuple[tuple[int, int], ...]

    def lambda_count(self, m: int) -> int:
        return dict(self.lambda_by_length).get(m, 0)

    def theta_count(self, m: int) -> int:
        return dict(self.theta_by_length).get(m, 0)

    def lambda_geq(self, k: int) -> int:
        return sum(c for m, c in self.lambda_by_length if m >= k)

    @property
    def node_total(self) -> int:
        return sum(m * c for m, c in self.lambda_by_length) + sum(
            m * c for m, c in self.theta_by_length
        )

    def delta_contacts(self) -> int:
        """Contacts lying in exactly one input, recovered from the counts:
        cyclic orbits of length m > 2 hold m of them, linear orbits of
        length m hold m - 1."""
        return sum(m * c for m, c in self.theta_by_length if m >= 4) + sum(
            (m - 1) * c for m, c in self.lambda_by_length
        )


def decompose(
    a: ContactStructure, b: ContactStructure
) -> tuple[list[Orbit], OrbitStats]:
    """Split the union graph into orbits and tally length statistics.

    Both inputs must be unique-bond structures; the statistics and every
    formula downstream assume it. Deterministic: orbits are reported in
    order of their smallest node, paths starting from their smaller
    endpoint, cycles from their smallest node toward its smaller neighbor.
    """
    if a.n != b.n:
        raise LengthMismatch(f"lengths differ: {a.n} vs {b.n}")
    if not is_secondary(a) or not is_secondary(b):
        raise NotSecondary("orbit decomposition requires unique bonds")

    u = union(a, b)
    adj = u.adjacency()
    shared = a.contact_set & b.contact_set
    shared_pairs = {c.as_pair() for c in shared}

    seen: set[int] = set()
    orbits: list[Orbit] = []
    for start in range(1, u.n + 1):
        if start in seen:
            continue
        comp = _component(start, adj)
        seen.update(comp)
        orbits.append(_classify(comp, adj, shared_pairs))

    lam: dict[int, int] = {}
    theta: dict[int, int] = {}
    for orbit in orbits:
        table = lam if orbit.kind is OrbitKind.LINEAR else theta
        table[orbit.length] = table.get(orbit.length, 0) + 1
    stats = OrbitStats(
        n=u.n,
        lambda_by_length=tuple(sorted(lam.items())),
        theta_by_length=tuple(sorted(theta.items())),
    )
    assert stats.node_total == u.n
    assert stats.delta_contacts() == symmetric_difference_count(a, b)
    return orbits, stats


def _component(start: int, adj: dict[int, list[int]]) -> list[int]:
    comp = [start]
    members = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in members:
                members.add(w)
                comp.append(w)
                stack.append(w)
    return comp


def _classify(
    comp: list[int], adj: dict[int, list[int]], shared_pairs: set[tuple[int, int]]
) -> Orbit:
    if len(comp) == 1:
        return Orbit((comp[0],), OrbitKind.LINEAR)
    if len(comp) == 2:
        i, j = sorted(comp)
        kind = OrbitKind.CYCLIC if (i, j) in shared_pairs else OrbitKind.LINEAR
        return Orbit((i, j), kind)
    edge_count = sum(len(adj[v]) for v in comp) // 2
    if edge_count == len(comp):
        return Orbit(_walk_cycle(comp, adj), OrbitKind.CYCLIC)
    return Orbit(_walk_path(comp, adj), OrbitKind.LINEAR)


def _walk_path(comp: list[int], adj: dict[int, list[int]]) -> tuple[int, ...]:
    ends = [v for v in comp if len(adj[v]) == 1]
    cur = min(ends)
    order = [cur]
    prev = None
    while True:
        nxt = [w for w in adj[cur] if w != prev]
        if not nxt:
            break
        prev, cur = cur, nxt[0]
        order.append(cur)
    return tuple(order)


def _walk_cycle(comp: list[int], adj: dict[int, list[int]]) -> tuple[int, ...]:
    start = min(comp)
    order = [start]
    prev, cur = start, min(adj[start])
    while cur != start:
        order.append(cur)
        step = [w for w in adj[cur] if w != prev]
        prev, cur = cur, step[0]
    return tuple(order)


def a_k(
    a: ContactStructure,
    b: ContactStructure,
    k: int,
    stats: OrbitStats | None = None,
) -> int:
    """Number of k-contact simple chains (k+1 distinct nodes) in the union,
    computed from orbit statistics: cyclic orbits of length m > k supply m
    chains each, linear orbits of length m supply max(m - k, 0)."""
    if k < 2:
        raise ValueError(f"chain length k must be >= 2, got {k}")
    if stats is None:
        _, stats = decompose(a, b)
    delta = symmetric_difference_count(a, b)
    theta_part = sum(
        m * c for m, c in stats.theta_by_length if 4 <= m <= k
    )
    lambda_part = sum(stats.lambda_geq(i) for i in range(2, k + 1))
    return delta - theta_part - lambda_part


def sgr_indistinguishable(a: ContactStructure, b: ContactStructure) -> bool:
    """True iff every contact of each structure connects two nodes lying in
    one connected component of the other structure. This is exactly the
    vanishing locus of the subgroup pseudometric; no group is built."""
    if a.n != b.n:
        raise LengthMismatch(f"lengths differ: {a.n} vs {b.n}")
    return _contacts_chained(a, b) and _contacts_chained(b, a)


def _contacts_chained(src: ContactStructure, host: ContactStructure) -> bool:
    label = _component_labels(host)
    return all(label[c.i] == label[c.j] for c in src.contacts)


def _component_labels(s: ContactStructure) -> dict[int, int]:
    adj = s.adjacency()
    label: dict[int, int] = {}
    mark = 0
    for v in range(1, s.n + 1):
        if v in label:
            continue
        mark += 1
        stack = [v]
        label[v] = mark
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in label:
                    label[y] = mark
                    stack.append(y)
    return label
