"""Monomials and monomial ideals over n variables.

Membership in a monomial ideal is divisibility by some generator, so an
ideal is represented purely by its minimal generator set (no coefficient
arithmetic is ever needed). Edge ideals of contact structures are the
degree-2 square-free case.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .combinat import binomial, monomial_count
from .errors import BudgetExceeded, DimensionMismatch
from .structures import ContactStructure

DEFAULT_ENUMERATION_BUDGET = 5_000_000


@dataclass(frozen=True, order=True)
class Monomial:
    """Sparse monomial: sorted ((variable, exponent), ...) with exponents >= 1.

    The empty tuple is the monomial 1.
    """

    exps: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if any(e < 1 or v < 1 for v, e in self.exps):
            raise ValueError(f"bad exponent data {self.exps}")
        if tuple(sorted(self.exps)) != self.exps:
            object.__setattr__(self, "exps", tuple(sorted(self.exps)))

    @classmethod
    def from_map(cls, exponents: Mapping[int, int]) -> "Monomial":
        if any(e < 0 for e in exponents.values()):
            raise ValueError(f"negative exponent in {exponents}")
        return cls(tuple(sorted((v, e) for v, e in exponents.items() if e > 0)))

    @classmethod
    def product_of(cls, *variables: int) -> "Monomial":
        acc: dict[int, int] = {}
        for v in variables:
            acc[v] = acc.get(v, 0) + 1
        return cls.from_map(acc)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(v for v, _ in self.exps)

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.exps)

    def exponent(self, variable: int) -> int:
        for v, e in self.exps:
            if v == variable:
                return e
        return 0

    def divides(self, other: "Monomial") -> bool:
        it = dict(other.exps)
        return all(it.get(v, 0) >= e for v, e in self.exps)

    def lcm(self, other: "Monomial") -> "Monomial":
        acc = dict(self.exps)
        for v, e in other.exps:
            acc[v] = max(acc.get(v, 0), e)
        return Monomial.from_map(acc)

    def __str__(self) -> str:
        if not self.exps:
            return "1"
        parts = [f"x{v}^{e}" if e > 1 else f"x{v}" for v, e in self.exps]
        return "*".join(parts)


def _minimalize(monomials: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Drop every monomial divisible by another one (duplicates included)."""
    pool = sorted(set(monomials), key=lambda m: (m.degree, m.exps))
    kept: list[Monomial] = []
    for m in pool:
        if not any(g.divides(m) for g in kept):
            kept.append(m)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """Minimal generating set of a monomial ideal in variables x1..xn.

    An empty generator tuple is the zero ideal. Use make() to construct;
    it minimalizes and sorts, so equal ideals compare equal.
    """

    n: int
    generators: tuple[Monomial, ...]

    @classmethod
    def make(cls, n: int, monomials: Iterable[Monomial]) -> "MonomialIdeal":
        gens = _minimalize(monomials)
        for g in gens:
            if any(v > n for v in g.support):
                raise DimensionMismatch(f"generator {g} uses variable beyond x{n}")
        return cls(n, gens)

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    def is_zero(self) -> bool:
        return not self.generators

    def __str__(self) -> str:
        if self.is_zero():
            return "<0>"
        return "<" + ", ".join(str(g) for g in self.generators) + ">"


def edge_ideal(s: ContactStructure) -> MonomialIdeal:
    """Ideal generated by x_i*x_j over the contacts i-j of s."""
    gens = tuple(
        Monomial(((c.i, 1), (c.j, 1))) for c in s.contacts
    )
    # degree-2 generators on distinct pairs are already minimal
    return MonomialIdeal(s.n, gens)


def contains(ideal: MonomialIdeal, m: Monomial) -> bool:
    """Membership: some generator divides m."""
    return any(g.divides(m) for g in ideal.generators)


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_same_n(a, b)
    return MonomialIdeal.make(a.n, a.generators + b.generators)


def intersection_generators(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Minimal generators of the intersection: pairwise lcms, minimalized.

    Valid for arbitrary monomial ideals; for edge ideals the result consists
    of shared degree-2 generators, degree-3 chains sharing one node, and
    degree-4 products of node-disjoint exclusive contacts.
    """
    _check_same_n(a, b)
    if a.is_zero() or b.is_zero():
        return MonomialIdeal.zero(a.n)
    lcms = [g.lcm(h) for g in a.generators for h in b.generators]
    return MonomialIdeal.make(a.n, lcms)


def enumerate_members(
    ideal: MonomialIdeal,
    max_degree: int,
    budget: int | None = None,
) -> set[Monomial]:
    """All monomials of total degree <= max_degree that belong to the ideal,
    by exhaustive scan of the whole degree-bounded monomial space.

    Raises BudgetExceeded when that space is larger than the budget
    (default 5e6 monomials). This is the ground-truth membership engine;
    it never approximates.
    """
    limit = DEFAULT_ENUMERATION_BUDGET if budget is None else budget
    space = monomial_count(ideal.n, max_degree)
    if space > limit:
        raise BudgetExceeded(
            f"{space} monomials of degree <= {max_degree} exceed budget {limit}"
        )
    if ideal.is_zero() or max_degree < 0:
        return set()
    gens = [dict(g.exps) for g in ideal.generators]
    members: set[Monomial] = set()
    for vec in _exponent_vectors(ideal.n, max_degree):
        for g in gens:
            if all(vec[v - 1] >= e for v, e in g.items()):
                members.add(
                    Monomial(tuple((k + 1, e) for k, e in enumerate(vec) if e))
                )
                break
    return members


def _exponent_vectors(n: int, max_degree: int) -> Iterator[tuple[int, ...]]:
    """Dense exponent vectors of total degree <= max_degree, lexicographic."""
    vec = [0] * n

    def rec(pos: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if pos == n - 1:
            for e in range(remaining + 1):
                vec[pos] = e
                yield tuple(vec)
            vec[pos] = 0
            return
        for e in range(remaining + 1):
            vec[pos] = e
            yield from rec(pos + 1, remaining - e)
        vec[pos] = 0

    if n == 0:
        yield ()
        return
    yield from rec(0, max_degree)


# --- square-free member counting via independent sets ---

def sf_count(s: ContactStructure, k: int) -> int:
    """Number of square-free degree-k members of the edge ideal of s:
    k-subsets of nodes that contain at least one contact, i.e. C(n, k)
    minus the independent k-subsets of the contact graph."""
    if k < 0 or k > s.n:
        raise ValueError(f"k must lie in 0..{s.n}, got {k}")
    return binomial(s.n, k) - independent_set_counts(s)[k]


@functools.lru_cache(maxsize=8192)
def independent_set_counts(s: ContactStructure) -> tuple[int, ...]:
    """Counts of independent k-subsets of the contact graph, k = 0..n.

    Branches on a maximum-degree node v: subsets avoiding v plus subsets
    through v (which then avoid its neighbors), with memoization on the
    residual node set. Isolated nodes never branch; they contribute
    binomial factors at the base case.
    """
    edges = [c.as_pair() for c in s.contacts]
    neighbors: dict[int, frozenset[int]] = {}
    for (i, j) in edges:
        neighbors[i] = neighbors.get(i, frozenset()) | {j}
        neighbors[j] = neighbors.get(j, frozenset()) | {i}
    touched = frozenset(neighbors)
    free = s.n - len(touched)  # nodes with no contact at all

    memo: dict[frozenset[int], tuple[int, ...]] = {}

    def poly(active: frozenset[int]) -> tuple[int, ...]:
        """Coefficients by subset size for the graph induced on active."""
        live = [v for v in active if neighbors[v] & active]
        if not live:
            iso = len(active)
            return tuple(binomial(iso, k) for k in range(iso + 1))
        key = active
        cached = memo.get(key)
        if cached is not None:
            return cached
        v = max(live, key=lambda u: len(neighbors[u] & active))
        without = poly(active - {v})
        closed = poly(active - {v} - neighbors[v])
        out = list(without) + [0]
        for k, c in enumerate(closed):
            out[k + 1] += c
        result = tuple(out)
        memo[key] = result
        return result

    core = poly(touched)
    # multiply by (1 + x)^free for the untouched nodes
    counts = [0] * (s.n + 1)
    for k, c in enumerate(core):
        if c == 0:
            continue
        for extra in range(free + 1):
            counts[k + extra] += c * binomial(free, extra)
    return tuple(counts)


def _check_same_n(a: MonomialIdeal, b: MonomialIdeal) -> None:
    if a.n != b.n:
        raise DimensionMismatch(f"variable counts differ: {a.n} vs {b.n}")
