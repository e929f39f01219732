"""Shared generators and reference structures for the test suite."""

from __future__ import annotations

import functools
import itertools
import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from edgemetric.structures import (
    ContactStructure,
    StructureKind,
    all_contacts,
    validate,
)

settings.register_profile(
    "suite",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


# --- exhaustive enumerations (desk scale) ---

@functools.lru_cache(maxsize=None)
def all_secondary_structures(n: int) -> tuple[ContactStructure, ...]:
    """Every unique-bond structure of length n (matchings avoiding
    consecutive pairs), built by matching-or-skipping the smallest node."""
    out: list[ContactStructure] = []

    def rec(avail: tuple[int, ...], chosen: tuple[tuple[int, int], ...]) -> None:
        if not avail:
            out.append(validate(n, chosen, StructureKind.SECONDARY))
            return
        v, rest = avail[0], avail[1:]
        rec(rest, chosen)
        for w in rest:
            if w != v + 1:
                rec(tuple(x for x in rest if x != w), chosen + ((v, w),))
    rec(tuple(range(1, n + 1)), ())
    return tuple(out)


@functools.lru_cache(maxsize=None)
def all_contact_structures(n: int) -> tuple[ContactStructure, ...]:
    """Every contact structure of length n (subsets of admissible pairs);
    only sane for very small n."""
    pool = all_contacts(n)
    out = []
    for size in range(len(pool) + 1):
        for combo in itertools.combinations(pool, size):
            out.append(validate(n, combo))
    return tuple(out)


# --- randomized generators (seeded, reproducible) ---

def random_secondary(rng: random.Random, n: int, q: int | None = None) -> ContactStructure:
    """Random matching avoiding consecutive pairs. With an explicit q the
    result has exactly q contacts (reshuffles until the greedy pass is not
    blocked; any q <= n // 2 is reachable)."""
    pool = list(all_contacts(n))
    target = rng.randint(0, n // 2) if q is None else q
    for _ in range(10_000):
        rng.shuffle(pool)
        used: set[int] = set()
        chosen: list[tuple[int, int]] = []
        for (i, j) in pool:
            if len(chosen) == target:
                break
            if i not in used and j not in used:
                chosen.append((i, j))
                used.update((i, j))
        if len(chosen) == target or q is None:
            return validate(n, chosen, StructureKind.SECONDARY)
    raise AssertionError(f"could not reach q={target} contacts on n={n}")


def random_contact_structure(
    rng: random.Random, n: int, density: float | None = None
) -> ContactStructure:
    p = rng.uniform(0.05, 0.4) if density is None else density
    chosen = [c for c in all_contacts(n) if rng.random() < p]
    return validate(n, chosen)


def secondary_with_contacts(n: int, q: int) -> ContactStructure:
    """First unique-bond structure of length n with exactly q contacts."""
    def rec(avail: tuple[int, ...], chosen: tuple[tuple[int, int], ...]):
        if len(chosen) == q:
            return chosen
        if not avail:
            return None
        v, rest = avail[0], avail[1:]
        for w in rest:
            if w != v + 1:
                hit = rec(tuple(x for x in rest if x != w), chosen + ((v, w),))
                if hit is not None:
                    return hit
        return rec(rest, chosen)

    found = rec(tuple(range(1, n + 1)), ())
    assert found is not None, f"no secondary structure with q={q} on n={n}"
    return validate(n, found, StructureKind.SECONDARY)


# --- hypothesis strategies ---

@st.composite
def secondary_structures_st(draw, min_n: int = 3, max_n: int = 12):
    n = draw(st.integers(min_n, max_n))
    pool = draw(st.permutations(all_contacts(n)))
    target = draw(st.integers(0, n // 2))
    used: set[int] = set()
    chosen: list[tuple[int, int]] = []
    for (i, j) in pool:
        if len(chosen) == target:
            break
        if i not in used and j not in used:
            chosen.append((i, j))
            used.update((i, j))
    return validate(n, chosen, StructureKind.SECONDARY)


@st.composite
def contact_structures_st(draw, min_n: int = 3, max_n: int = 10):
    n = draw(st.integers(min_n, max_n))
    subset = draw(st.lists(st.sampled_from(all_contacts(n)), unique=True, max_size=8))
    return validate(n, subset)


@st.composite
def secondary_pair_st(draw, min_n: int = 3, max_n: int = 12):
    n = draw(st.integers(min_n, max_n))
    return (
        draw(secondary_structures_st(min_n=n, max_n=n)),
        draw(secondary_structures_st(min_n=n, max_n=n)),
    )


@st.composite
def contact_pair_st(draw, min_n: int = 3, max_n: int = 10):
    n = draw(st.integers(min_n, max_n))
    return (
        draw(contact_structures_st(min_n=n, max_n=n)),
        draw(contact_structures_st(min_n=n, max_n=n)),
    )


# --- reference structures used across modules ---

@pytest.fixture(scope="session")
def mod9():
    """A two-contact structure of length 9 and seven one-step variants."""
    base = validate(9, [(1, 3), (4, 6)])
    variants = {
        1: validate(9, [(1, 3), (4, 6), (7, 9)]),
        2: validate(9, [(1, 3), (4, 6), (6, 9)]),
        3: validate(9, [(1, 3), (4, 6), (1, 6)]),
        4: validate(9, [(1, 3), (4, 7)]),
        5: validate(9, [(1, 3), (3, 6)]),
        6: validate(9, [(1, 3), (3, 5)]),
        7: validate(9, [(1, 3), (5, 7)]),
    }
    return base, variants


@pytest.fixture(scope="session")
def au16():
    from edgemetric.notation import parse_dotbracket

    return (
        parse_dotbracket(".((((((...))))))"),
        parse_dotbracket("((((((...))))))."),
        parse_dotbracket("((((((....))))))"),
    )


@pytest.fixture(scope="session")
def hairpin21():
    from edgemetric.notation import parse_dotbracket

    return {
        "g0": parse_dotbracket("((.((((...)))).....))"),
        "g1": parse_dotbracket("((..(((...)))(...).))"),
        "g1p": parse_dotbracket("(((.(((...)))).....))"),
        "g2": parse_dotbracket("((...((...))((...))))"),
        "g2p": parse_dotbracket("((((.((...)))).....))"),
        "g0t": parse_dotbracket("...((((...))))......."),
        "g1t": parse_dotbracket("....(((...)))(...)..."),
    }


@pytest.fixture(scope="session")
def quad15():
    from edgemetric.notation import parse_dotbracket

    return (
        parse_dotbracket("(.).(.).(.).(.)"),
        parse_dotbracket("....(.(.).(.).)"),
        parse_dotbracket("..(.).(.).(.).."),
    )
