"""Affine Hilbert functions of edge ideals, by three independent routes.

H(m) counts the monomials of total degree <= m outside the ideal. The
generic route subtracts square-free member counts weighted binomially
(valid for any contact structure, radical ideals make it exact); the
closed route is an alternating-sign formula valid for unique-bond
structures, where H depends only on (n, number of contacts); the
enumerated route counts survivors one by one and serves as ground truth.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinat import binomial, monomial_count
from .errors import NotSecondary
from .ideals import edge_ideal, enumerate_members, sf_count
from .structures import ContactStructure, is_secondary


def hilbert_generic(s: ContactStructure, m: int) -> int:
    """H(m) for the edge ideal of any contact structure:
    C(n+m, n) minus sum over k of C(m, k) * SF_k."""
    _check_degree(m)
    total = monomial_count(s.n, m)
    for k in range(1, min(m, s.n) + 1):
        weight = binomial(m, k)
        if weight:
            total -= weight * sf_count(s, k)
    return total

def hilbert_secondary_closed(q: int, n: int, m: int) -> int:
    """H(m) for any unique-bond structure of length n with q contacts:
    sum_{j=0}^{floor(m/2)} (-1)^j C(q, j) C(n+m-2j, n)."""
    _check_degree(m)
    if q < 0 or 2 * q > n:
        raise ValueError(f"contact count {q} impossible for length {n}")
    total = 0
    for j in range(m // 2 + 1):
        coeff = binomial(q, j)
        if coeff:
            total += (-1) ** j * coeff * binomial(n + m - 2 * j, n)
    return total


def hilbert_enumerated(
    s: ContactStructure, m: int, budget: int | None = None
) -> int:
    """H(m) by exhaustive enumeration; exact but budget-bounded."""
    _check_degree(m)
    members = enumerate_members(edge_ideal(s), m, budget=budget)
    return monomial_count(s.n, m) - len(members)


@dataclass(frozen=True)
class HilbertTable:
    """Values H(0..max degree) for one structure."""

    subject: str
    values: tuple[tuple[int, int], ...]

    @classmethod
    def for_structure(
        cls, s: ContactStructure, max_degree: int, method: str = "generic",
        budget: int | None = None,
    ) -> "HilbertTable":
        if method == "closed" and not is_secondary(s):
            raise NotSecondary("closed Hilbert route requires unique bonds")
        fn = {
            "generic": lambda d: hilbert_generic(s, d),
            "closed": lambda d: hilbert_secondary_closed(len(s.contacts), s.n, d),
            "enumerate": lambda d: hilbert_enumerated(s, d, budget=budget),
        }[method]
        vals = tuple((d, fn(d)) for d in range(max_degree + 1))
        return cls(subject=str(s), values=vals)


def _check_degree(m: int) -> None:
    if m < 0:
        raise ValueError(f"degree must be >= 0, got {m}")
