"""Exact combinatorial primitives shared by every counting formula."""

from __future__ import annotations

import math


def binomial(a: int, b: int) -> int:
    """Binomial coefficient C(a, b) with the boundary conventions used
    throughout the library: C(a, b) = 0 whenever b < 0 or a < b (this
    covers C(0, j) = 0 for j > 0 and C(i, n) = 0 for i < n), and
    C(0, 0) = 1. Exact arbitrary-precision integer."""
    if b < 0 or a < b:
        return 0
    return math.comb(a, b)


def monomial_count(n: int, max_degree: int) -> int:
    """Number of monomials in n variables of total degree <= max_degree."""
    if max_degree < 0:
        return 0
    return binomial(n + max_degree, n)
