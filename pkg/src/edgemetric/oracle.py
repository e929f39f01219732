"""Independent brute-force engines for self-verification.

Nothing here shares a code path with the counting formulas it checks:
membership comes from exhaustive monomial enumeration, chain counts from
explicit walks, and the subgroup test from closure in the symmetric group.
Budgets are hard limits; exceeding one raises, it never degrades silently.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .combinat import binomial
from .errors import BudgetExceeded, LengthMismatch
from .ideals import edge_ideal, enumerate_members
from .metrics import d_prime, d3_closed, d4_closed_general, d4_closed_rna, \
    d5_closed_rna, d6_closed_rna, normalizer
from .orbits import a_k, decompose, sgr_indistinguishable
from .structures import ContactStructure, is_secondary, union

MAX_CLOSURE_LENGTH = 7
DEFAULT_WALK_BUDGET = 10_000_000


def symdiff_monomial_count(
    a: ContactStructure,
    b: ContactStructure,
    m: int,
    budget: int | None = None,
) -> int:
    """Monomials of degree <= m-1 in exactly one of the two edge ideals,
    counted by exhaustive enumeration."""
    if a.n != b.n:
        raise LengthMismatch(f"lengths differ: {a.n} vs {b.n}")
    members_a = enumerate_members(edge_ideal(a), m - 1, budget=budget)
    members_b = enumerate_members(edge_ideal(b), m - 1, budget=budget)
    return len(members_a ^ members_b)


def simple_path_count(
    a: ContactStructure,
    b: ContactStructure,
    k: int,
    budget: int | None = None,
) -> int:
    """Sets of k contacts of the union forming a simple chain on k+1
    pairwise distinct nodes, counted by exhaustive walks (each chain is
    seen once from either end, so the walk total is halved)."""
    count, _ = _count_walks(union(a, b), k, budget)
    return count


def _count_walks(
    g: ContactStructure, k: int, budget: int | None = None
) -> tuple[int, int]:
    if k < 1:
        raise ValueError(f"chain length must be >= 1, got {k}")
    limit = DEFAULT_WALK_BUDGET if budget is None else budget
    adj = g.adjacency()
    steps = 0
    walks = 0

    def extend(node: int, seen: tuple[int, ...], remaining: int) -> int:
        nonlocal steps
        if remaining == 0:
            return 1
        found = 0
        for w in adj[node]:
            steps += 1
            if steps > limit:
                raise BudgetExceeded(f"walk budget {limit} exhausted")
            if w not in seen:
                found += extend(w, seen + (w,), remaining - 1)
        return found

    for v in range(1, g.n + 1):
        walks += extend(v, (v,), k)
    assert walks % 2 == 0
    return walks // 2, steps


def transposition_subgroup(s: ContactStructure) -> frozenset[tuple[int, ...]]:
    """Closure under composition of the transpositions given by the
    contacts; permutations are image tuples on 0..n-1."""
    if s.n > MAX_CLOSURE_LENGTH:
        raise BudgetExceeded(
            f"subgroup closure limited to length {MAX_CLOSURE_LENGTH}, got {s.n}"
        )
    identity = tuple(range(s.n))
    generators = []
    for c in s.contacts:
        image = list(identity)
        image[c.i - 1], image[c.j - 1] = image[c.j - 1], image[c.i - 1]
        generators.append(tuple(image))
    group = {identity}
    frontier = [identity]
    while frontier:
        fresh = []
        for g in frontier:
            for h in generators:
                composed = tuple(g[h[x]] for x in range(s.n))
                if composed not in group:
                    group.add(composed)
                    fresh.append(composed)
        frontier = fresh
    return frozenset(group)


def subgroup_closure_equal(a: ContactStructure, b: ContactStructure) -> bool:
    """Ground truth for sgr_indistinguishable on small lengths."""
    if a.n != b.n:
        raise LengthMismatch(f"lengths differ: {a.n} vs {b.n}")
    return transposition_subgroup(a) == transposition_subgroup(b)


@dataclass(frozen=True)
class CheckResult:
    name: str
    fast: str
    oracle: str
    agree: bool


@dataclass
class OracleReport:
    checked: list[CheckResult] = field(default_factory=list)
    budget_used: dict[str, int] = field(default_factory=dict)

    @property
    def all_agree(self) -> bool:
        return all(c.agree for c in self.checked)

    def add(self, name: str, fast: object, oracle: object) -> None:
        self.checked.append(
            CheckResult(name, str(fast), str(oracle), fast == oracle)
        )

    def to_dict(self) -> dict:
        return {
            "agree": self.all_agree,
            "checked": [
                {"name": c.name, "fast": c.fast, "oracle": c.oracle, "agree": c.agree}
                for c in self.checked
            ],
            "budget_used": dict(self.budget_used),
        }


def run_checks(
    a: ContactStructure,
    b: ContactStructure,
    max_m: int = 6,
    budget: int | None = None,
) -> OracleReport:
    """Cross-check every fast route against its brute-force twin for one
    pair of structures. The report lists each quantity; nothing is skipped
    silently (inapplicable routes simply do not appear)."""
    report = OracleReport()
    monomials = 0
    secondary = is_secondary(a) and is_secondary(b)

    for m in range(3, max_m + 1):
        oracle_raw = symdiff_monomial_count(a, b, m, budget=budget)
        monomials += 2 * binomial(a.n + m - 1, a.n)
        report.add(
            f"d_prime[m={m}]", d_prime(a, b, m, max_index=max(max_m, 3)), oracle_raw
        )
        if m == 3:
            report.add("d3_closed", d3_closed(a, b), oracle_raw)
        elif m == 4:
            report.add(
                "d4_closed_general",
                d4_closed_general(a, b) * normalizer(a.n, 4),
                oracle_raw,
            )
            if secondary:
                report.add(
                    "d4_closed_rna",
                    d4_closed_rna(a, b) * normalizer(a.n, 4),
                    oracle_raw,
                )
        elif m == 5 and secondary:
            report.add(
                "d5_closed_rna", d5_closed_rna(a, b) * normalizer(a.n, 5), oracle_raw
            )
        elif m == 6 and secondary:
            report.add(
                "d6_closed_rna", d6_closed_rna(a, b) * normalizer(a.n, 6), oracle_raw
            )
    report.budget_used["monomials_enumerated"] = monomials

    walk_steps = 0
    if secondary:
        _, stats = decompose(a, b)
        g = union(a, b)
        for k in (2, 3, 4):
            count, steps = _count_walks(g, k, budget=None)
            walk_steps += steps
            report.add(f"a_k[k={k}]", a_k(a, b, k, stats=stats), count)
    report.budget_used["walk_steps"] = walk_steps

    if a.n <= MAX_CLOSURE_LENGTH:
        ga = transposition_subgroup(a)
        gb = transposition_subgroup(b)
        report.budget_used["group_elements"] = len(ga) + len(gb)
        report.add("sgr_indistinguishable", sgr_indistinguishable(a, b), ga == gb)
    return report
