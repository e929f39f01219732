"""Monomial ideals: generators, membership, sums, intersections, and
square-free member counting."""

import itertools
import random

import pytest
from hypothesis import given

from conftest import (
    contact_pair_st,
    contact_structures_st,
    random_contact_structure,
    random_secondary,
    secondary_structures_st,
)
from edgemetric.combinat import binomial, monomial_count
from edgemetric.errors import BudgetExceeded, DimensionMismatch
from edgemetric.ideals import (
    Monomial,
    MonomialIdeal,
    contains,
    edge_ideal,
    enumerate_members,
    ideal_sum,
    independent_set_counts,
    intersection_generators,
    sf_count,
)
from edgemetric.structures import (
    angle_count,
    empty_structure,
    triangle_count,
    union,
    validate,
)


def mono(*variables):
    return Monomial.product_of(*variables)


class TestMonomial:
    def test_text_form(self):
        assert str(mono(1, 1, 3)) == "x1^2*x3"
        assert str(mono()) == "1"

    def test_degree_and_squarefree(self):
        m = mono(2, 5, 5)
        assert m.degree == 3
        assert not m.is_squarefree()
        assert mono(2, 5).is_squarefree()

    def test_divides(self):
        assert mono(1, 3).divides(mono(1, 2, 3))
        assert not mono(1, 3).divides(mono(1, 2, 2))

    def test_lcm(self):
        assert mono(1, 1, 3).lcm(mono(3, 4)) == mono(1, 1, 3, 4)


class TestEdgeIdeal:
    def test_two_contacts(self):
        ideal = edge_ideal(validate(9, [(1, 3), (4, 6)]))
        assert ideal.generators == (mono(1, 3), mono(4, 6))

    def test_empty_structure_gives_zero_ideal(self):
        assert edge_ideal(empty_structure(6)).is_zero()

    def test_triangle(self):
        ideal = edge_ideal(validate(5, [(1, 3), (3, 5), (1, 5)]))
        assert set(ideal.generators) == {mono(1, 3), mono(1, 5), mono(3, 5)}


class TestContains:
    def test_multiple_of_generator(self):
        ideal = MonomialIdeal.make(5, [mono(1, 3)])
        assert contains(ideal, mono(1, 2, 3))
        assert not contains(ideal, mono(1, 2, 2))

    def test_edge_ideal_membership(self):
        ideal = edge_ideal(validate(9, [(1, 3), (4, 6)]))
        assert contains(ideal, mono(4, 6, 6))

    def test_zero_ideal_holds_nothing(self):
        assert not contains(MonomialIdeal.zero(4), mono(1, 2))


class TestIdealSum:
    def test_edge_ideals_merge_to_union_ideal(self):
        a = validate(5, [(1, 3), (3, 5)])
        b = validate(5, [(1, 5), (3, 5)])
        assert ideal_sum(edge_ideal(a), edge_ideal(b)) == edge_ideal(union(a, b))
        assert set(ideal_sum(edge_ideal(a), edge_ideal(b)).generators) == {
            mono(1, 3), mono(3, 5), mono(1, 5),
        }

    def test_zero_is_identity(self):
        ideal = MonomialIdeal.make(4, [mono(1, 3)])
        assert ideal_sum(ideal, MonomialIdeal.zero(4)) == ideal

    def test_minimalization_drops_multiples(self):
        a = MonomialIdeal.make(3, [mono(1, 2)])
        b = MonomialIdeal.make(3, [mono(1, 2, 3)])
        assert ideal_sum(a, b) == a

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            ideal_sum(MonomialIdeal.zero(3), MonomialIdeal.zero(4))

    @given(contact_pair_st(max_n=8))
    def test_sum_equals_union_ideal(self, pair):
        a, b = pair
        assert ideal_sum(edge_ideal(a), edge_ideal(b)) == edge_ideal(union(a, b))


def intersection_member_oracle(ia, ib, max_degree):
    """Ground truth: conjunction of memberships, degree-bounded."""
    full = MonomialIdeal.make(ia.n, [Monomial(((v, 1),)) for v in range(1, ia.n + 1)])
    space = enumerate_members(full, max_degree) | {mono()}
    return {m for m in space if contains(ia, m) and contains(ib, m)}


class TestIntersection:
    def test_sharing_one_node(self):
        ia = edge_ideal(validate(5, [(1, 3)]))
        ib = edge_ideal(validate(5, [(3, 5)]))
        result = intersection_generators(ia, ib)
        assert result.generators == (mono(1, 3, 5),)

    def test_disjoint_contacts(self):
        ia = edge_ideal(validate(6, [(1, 3)]))
        ib = edge_ideal(validate(6, [(4, 6)]))
        assert intersection_generators(ia, ib).generators == (mono(1, 3, 4, 6),)

    def test_idempotent(self):
        ideal = edge_ideal(validate(6, [(1, 4), (2, 6)]))
        assert intersection_generators(ideal, ideal) == ideal

    def test_membership_is_conjunction(self):
        rng = random.Random(99)
        for _ in range(25):
            n = rng.randint(4, 7)
            ia = edge_ideal(random_contact_structure(rng, n))
            ib = edge_ideal(random_contact_structure(rng, n))
            inter = intersection_generators(ia, ib)
            want = intersection_member_oracle(ia, ib, 5)
            got = {m for m in want | enumerate_members(inter, 5) if contains(inter, m)}
            assert got == want

    def test_degree_four_block_needs_disjoint_pairs(self):
        """For one-contact ideals with node-disjoint contacts, the
        intersection is generated by the degree-4 product; a generating
        recipe that keeps only node-overlapping exclusive pairs at degree 4
        generates nothing here and misses x1*x3*x4*x6. The oracle fixes the
        disjoint reading."""
        a = validate(6, [(1, 3)])
        b = validate(6, [(4, 6)])
        ia, ib = edge_ideal(a), edge_ideal(b)
        witness = mono(1, 3, 4, 6)
        assert contains(ia, witness) and contains(ib, witness)

        shared = a.contact_set & b.contact_set
        only_a = a.contact_set - b.contact_set
        only_b = b.contact_set - a.contact_set
        deg2 = [mono(c.i, c.j) for c in shared]
        deg3 = [
            mono(*(ca.nodes | cb.nodes))
            for ca in only_a for cb in only_b
            if len(ca.nodes & cb.nodes) == 1
        ]
        overlap_reading = MonomialIdeal.make(6, deg2 + deg3 + [
            mono(*(ca.nodes | cb.nodes))
            for ca in only_a for cb in only_b
            if ca.nodes & cb.nodes and len(ca.nodes | cb.nodes) == 4
        ])
        disjoint_reading = MonomialIdeal.make(6, deg2 + deg3 + [
            mono(*(ca.nodes | cb.nodes))
            for ca in only_a for cb in only_b
            if not (ca.nodes & cb.nodes)
        ])
        assert not contains(overlap_reading, witness)
        assert contains(disjoint_reading, witness)
        assert disjoint_reading == intersection_generators(ia, ib)


class TestEnumerateMembers:
    def test_zero_ideal(self):
        assert enumerate_members(MonomialIdeal.zero(5), 4) == set()

    def test_single_generator_small_space(self):
        members = enumerate_members(MonomialIdeal.make(2, [mono(1, 2)]), 3)
        assert members == {mono(1, 2), mono(1, 1, 2), mono(1, 2, 2)}

    def test_budget_exceeded(self):
        ideal = edge_ideal(validate(10, [(1, 3)]))
        with pytest.raises(BudgetExceeded):
            enumerate_members(ideal, 8, budget=1000)

    def test_contains_agrees_pointwise(self):
        rng = random.Random(3)
        for _ in range(10):
            s = random_contact_structure(rng, 5)
            ideal = edge_ideal(s)
            members = enumerate_members(ideal, 4)
            full = MonomialIdeal.make(5, [Monomial(((v, 1),)) for v in range(1, 6)])
            space = enumerate_members(full, 4) | {mono()}
            for m in space:
                assert (m in members) == contains(ideal, m)

    def test_membership_depends_only_on_support(self):
        # edge ideals are radical: a monomial belongs iff the square-free
        # monomial on its support does
        rng = random.Random(44)
        full = MonomialIdeal.make(6, [Monomial(((v, 1),)) for v in range(1, 7)])
        space = enumerate_members(full, 5) | {mono()}
        for _ in range(8):
            ideal = edge_ideal(random_contact_structure(rng, 6))
            for m in space:
                squarefree = Monomial.product_of(*m.support)
                assert contains(ideal, m) == contains(ideal, squarefree)

    def test_member_count_from_squarefree_counts(self):
        # weighted square-free counts reproduce the full member count
        rng = random.Random(17)
        for _ in range(12):
            n = rng.randint(4, 7)
            s = random_contact_structure(rng, n)
            for m in range(0, 6):
                total = sum(
                    binomial(m, k) * sf_count(s, k) for k in range(1, min(m, n) + 1)
                )
                assert total == len(enumerate_members(edge_ideal(s), m))


class TestSfCount:
    def test_degree_one_and_two(self):
        rng = random.Random(8)
        for _ in range(20):
            s = random_contact_structure(rng, rng.randint(4, 9))
            assert sf_count(s, 1) == 0
            assert sf_count(s, 2) == len(s.contacts)

    @given(contact_structures_st())
    def test_degree_three_from_angles_and_triangles(self, s):
        expected = (s.n - 2) * len(s.contacts) - angle_count(s) + triangle_count(s)
        assert sf_count(s, 3) == expected

    def test_degree_four_union_of_matchings(self):
        # for unions of two unique-bond structures:
        # C(n-2,2)|Qu| - C(|Qu|,2) - (n-4) A2 + A3 - T4
        from edgemetric.oracle import simple_path_count
        from edgemetric.orbits import decompose

        rng = random.Random(21)
        for _ in range(20):
            n = rng.randint(5, 10)
            a = random_secondary(rng, n)
            b = random_secondary(rng, n)
            u = union(a, b)
            qu = len(u.contacts)
            a2 = simple_path_count(a, b, 2)
            a3 = simple_path_count(a, b, 3)
            _, stats = decompose(a, b)
            t4 = stats.theta_count(4)
            expected = (
                binomial(n - 2, 2) * qu - binomial(qu, 2) - (n - 4) * a2 + a3 - t4
            )
            assert sf_count(u, 4) == expected

    def test_exhaustive_against_enumeration(self):
        rng = random.Random(5)
        for _ in range(10):
            n = rng.randint(4, 8)
            s = random_contact_structure(rng, n)
            members = enumerate_members(edge_ideal(s), 6)
            for k in range(0, min(6, n) + 1):
                direct = sum(
                    1 for m in members if m.degree == k and m.is_squarefree()
                )
                assert sf_count(s, k) == direct

    def test_out_of_range(self):
        s = empty_structure(4)
        with pytest.raises(ValueError):
            sf_count(s, -1)
        with pytest.raises(ValueError):
            sf_count(s, 5)

    @given(secondary_structures_st(max_n=14))
    def test_independent_counts_on_matchings(self, s):
        # inclusion-exclusion over the q disjoint contacts gives an
        # independent closed form for matchings
        q = len(s.contacts)
        counts = independent_set_counts(s)
        for k in range(s.n + 1):
            expected = sum(
                (-1) ** j * binomial(q, j) * binomial(s.n - 2 * j, k - 2 * j)
                for j in range(min(q, k // 2) + 1)
            )
            assert counts[k] == expected


def test_minimality_invariant():
    ideal = MonomialIdeal.make(4, [mono(1, 2), mono(1, 2, 3), mono(3, 4), mono(3, 4)])
    assert ideal.generators == (mono(1, 2), mono(3, 4))
    for g, h in itertools.permutations(ideal.generators, 2):
        assert not g.divides(h)


def test_monomial_space_size():
    assert monomial_count(3, 2) == 10
    assert monomial_count(5, 0) == 1
