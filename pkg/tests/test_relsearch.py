import random
from fractions import Fraction

import pytest

from helpers import exhaustive_zero_subsum, relation_count_oracle
from unitcycle.backends import SearchTooLarge
from unitcycle.relsearch import (
    CEILING_ENV,
    DEFAULT_TERM_CEILING,
    PN_MINUS_2,
    TWIN,
    TWO_P_PLUS_1,
    Relation,
    SearchConfig,
    admits_4cycle,
    ap_relation,
    canonicalize_values,
    check_bb_inequality,
    doubleton_family,
    find_relations,
    has_zero_proper_subsum,
    resolve_ceiling,
    singleton_mod_obstruction,
    term_table,
)
from unitcycle.sring import InversionSet


class TestSearchConfig:
    def test_constructors(self):
        assert SearchConfig.linear() == SearchConfig("linear", 1)
        assert SearchConfig.npower(3).bound == 3
        assert SearchConfig.general(0).bound == 0

    def test_parse(self):
        assert SearchConfig.parse("linear") == SearchConfig.linear()
        assert SearchConfig.parse("npower:3") == SearchConfig.npower(3)
        assert SearchConfig.parse("general:8") == SearchConfig.general(8)
        with pytest.raises(ValueError):
            SearchConfig.parse("cubic")
        with pytest.raises(ValueError):
            SearchConfig.parse("npower:x")

    def test_labels(self):
        assert SearchConfig.linear().label == "linear"
        assert SearchConfig.npower(2).label == "npower:2"
        assert SearchConfig.general(8).label == "general:8"

    def test_validation(self):
        with pytest.raises(ValueError):
            SearchConfig("linear", 2)
        with pytest.raises(ValueError):
            SearchConfig("npower", 0)
        with pytest.raises(ValueError):
            SearchConfig("general", -1)
        with pytest.raises(ValueError):
            SearchConfig("bogus", 1)


class TestSubsumFilter:
    def test_examples(self):
        assert has_zero_proper_subsum((1, -1, 1, -1)) is True
        assert has_zero_proper_subsum((7, -1, -1, -5)) is False
        assert has_zero_proper_subsum((5, -5, 1, -1)) is True

    def test_vanishing_triple_with_nonzero_total(self):
        assert has_zero_proper_subsum((3, -2, -1, 10)) is True

    def test_validation(self):
        with pytest.raises(ValueError):
            has_zero_proper_subsum((1, 2, 3))
        with pytest.raises(ValueError):
            has_zero_proper_subsum((1, 0, 2, -3))

    def test_matches_exhaustive_oracle(self):
        rng = random.Random(404)
        checked_zero_total = 0
        for _ in range(3000):
            quad = [rng.choice([v for v in range(-9, 10) if v != 0]) for _ in range(4)]
            if rng.random() < 0.5:
                # steer towards zero totals to hit the triple shortcut
                quad[3] = -sum(quad[:3]) or quad[3]
            if any(v == 0 for v in quad):
                continue
            if sum(quad) == 0:
                checked_zero_total += 1
            assert has_zero_proper_subsum(quad) == exhaustive_zero_subsum(quad), quad
        assert checked_zero_total > 100


class TestCanonicalization:
    def test_ordering(self):
        assert canonicalize_values((-1, -1, -1, 3)) == (3, -1, -1, -1)
        assert canonicalize_values((1, 1, -25, 23)) == (25, -23, -1, -1)
        assert canonicalize_values((7, -1, -1, -5)) == (7, -5, -1, -1)

    def test_tie_break_puts_positive_first(self):
        # equal magnitudes: +v sorts before -v
        assert canonicalize_values((-5, 5, 1, -1)) == (5, -5, 1, -1)

    def test_idempotent_on_random_input(self):
        rng = random.Random(5150)
        for _ in range(500):
            vs = [rng.choice([v for v in range(-99, 100) if v != 0]) for _ in range(4)]
            once = canonicalize_values(vs)
            assert canonicalize_values(once) == once
            assert once[0] > 0


class TestRelation:
    def test_from_signed_values_canonicalizes(self):
        s = InversionSet.of(3)
        rel = Relation.from_signed_values(s, (-1, 3, -1, -1))
        assert rel.values == (3, -1, -1, -1)
        assert rel.pretty() == "3 = 1 + 1 + 1"

    def test_pretty_mixed_signs(self):
        s = InversionSet.of(5, 7)
        rel = Relation.from_signed_values(s, (7, -5, -1, -1))
        assert rel.pretty() == "7 = 5 + 1 + 1"

    def test_rejects_nonvanishing(self):
        with pytest.raises(ValueError):
            Relation.from_signed_values(InversionSet.of(3), (3, -1, -1, -2))

    def test_rejects_subsum(self):
        with pytest.raises(ValueError):
            Relation.from_signed_values(InversionSet.of(2), (2, -2, 4, -4))

    def test_rejects_values_outside_ring(self):
        with pytest.raises(ValueError):
            Relation.from_signed_values(InversionSet.of(3), (7, -5, -1, -1))

    def test_rejects_noncanonical_direct_construction(self):
        s = InversionSet.of(3)
        good = Relation.from_signed_values(s, (3, -1, -1, -1))
        with pytest.raises(ValueError):
            Relation(s, good.terms, (-1, 3, -1, -1))

    def test_json_round_trip(self):
        s = InversionSet.of(5, 23)
        rel = Relation.from_signed_values(s, (23, 1, 1, -25))
        assert Relation.from_json_dict(rel.to_json_dict()) == rel


class TestTermTable:
    def test_contents(self):
        table = term_table(InversionSet.of(5, 7), 1)
        assert table == {1: (0, 0), 5: (1, 0), 7: (0, 1), 35: (1, 1)}

    def test_ceiling(self):
        with pytest.raises(SearchTooLarge):
            term_table(InversionSet.of(2, 3, 5), 100, ceiling=1000)

    def test_resolve_ceiling_precedence(self, monkeypatch):
        monkeypatch.delenv(CEILING_ENV, raising=False)
        assert resolve_ceiling() == DEFAULT_TERM_CEILING
        monkeypatch.setenv(CEILING_ENV, "123")
        assert resolve_ceiling() == 123
        assert resolve_ceiling(7) == 7  # explicit beats the environment


class TestFindRelations:
    def test_singleton_three(self):
        rels = find_relations(InversionSet.of(3), SearchConfig.general(1))
        assert (3, -1, -1, -1) in [r.values for r in rels]

    def test_singleton_five_empty(self):
        assert find_relations(InversionSet.of(5), SearchConfig.general(10)) == []

    def test_five_seven_linear(self):
        rels = find_relations(InversionSet.of(5, 7), SearchConfig.linear())
        assert (7, -5, -1, -1) in [r.values for r in rels]

    def test_empty_set_rejected(self):
        with pytest.raises(ValueError):
            find_relations(InversionSet(()), SearchConfig.linear())

    def test_rows_sorted_and_well_formed(self):
        s = InversionSet.of(2, 3, 5)
        rels = find_relations(s, SearchConfig.general(2))
        values = [r.values for r in rels]
        assert values == sorted(values)
        assert len(set(values)) == len(values)
        for r in rels:
            assert sum(r.values) == 0
            assert not exhaustive_zero_subsum(r.values)
            assert r.values == canonicalize_values(r.values)
            for t in r.terms:
                assert all(0 <= e <= 2 for e in t.exponents)

    def test_counts_match_oracle(self):
        for primes in [(2, 3), (3, 5), (2, 3, 5), (5, 7, 11), (2, 3, 5, 7)]:
            s = InversionSet(primes)
            got = len(find_relations(s, SearchConfig.linear()))
            assert got == relation_count_oracle(primes, 1), primes

    def test_mode_monotone_in_bound(self):
        s = InversionSet.of(2, 3)
        prev: set = set()
        for bound in range(4):
            cur = {r.values for r in find_relations(s, SearchConfig.general(bound))}
            assert prev <= cur
            prev = cur

    def test_linear_equals_general_one(self):
        for primes in [(3,), (5, 7), (2, 3, 5)]:
            s = InversionSet(primes)
            a = find_relations(s, SearchConfig.linear())
            b = find_relations(s, SearchConfig.general(1))
            assert [r.values for r in a] == [r.values for r in b]

    def test_npower_equals_general_same_bound(self):
        s = InversionSet.of(5, 23)
        a = find_relations(s, SearchConfig.npower(2))
        b = find_relations(s, SearchConfig.general(2))
        assert a == b


class TestAdmits:
    def test_examples(self):
        ok, witness = admits_4cycle(InversionSet.of(3), SearchConfig.general(3))
        assert ok and witness.values == (3, -1, -1, -1)
        ok, witness = admits_4cycle(InversionSet.of(5, 11), SearchConfig.linear())
        assert ok and witness.values == (11, -5, -5, -1)
        ok, witness = admits_4cycle(InversionSet.of(5, 17, 257), SearchConfig.linear())
        assert not ok and witness is None


class TestSingletonObstruction:
    def test_small_primes_not_obstructed(self):
        assert singleton_mod_obstruction(2) is False
        assert singleton_mod_obstruction(3) is False

    def test_larger_primes_obstructed(self):
        for p in (5, 7, 11, 13, 97):
            assert singleton_mod_obstruction(p) is True

    def test_rejects_composite(self):
        with pytest.raises(ValueError):
            singleton_mod_obstruction(9)


class TestApRelation:
    def test_examples(self):
        assert ap_relation(3, 5, 7).values == (7, -5, -5, 3)
        assert ap_relation(3, 7, 11).values == (11, -7, -7, 3)

    def test_rejects_non_progression(self):
        with pytest.raises(ValueError):
            ap_relation(3, 5, 11)

    def test_rejects_composites_and_disorder(self):
        with pytest.raises(ValueError):
            ap_relation(3, 6, 9)
        with pytest.raises(ValueError):
            ap_relation(7, 5, 3)


class TestDoubletonFamilies:
    def test_twin(self):
        rel = doubleton_family(5, TWIN)
        assert rel.inversion_set.primes == (5, 7)
        assert rel.values == (7, -5, -1, -1)

    def test_pn_minus_2(self):
        rel = doubleton_family(5, PN_MINUS_2, n=2)
        assert rel.inversion_set.primes == (5, 23)
        assert rel.values == (25, -23, -1, -1)

    def test_two_p_plus_1(self):
        rel = doubleton_family(5, TWO_P_PLUS_1)
        assert rel.inversion_set.primes == (5, 11)
        assert rel.values == (11, -5, -5, -1)

    def test_inapplicable_partner(self):
        with pytest.raises(ValueError):
            doubleton_family(7, TWIN)  # 9 is composite
        with pytest.raises(ValueError):
            doubleton_family(13, TWO_P_PLUS_1)  # 27 is composite

    def test_pn_minus_2_needs_power(self):
        with pytest.raises(ValueError):
            doubleton_family(5, PN_MINUS_2)

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            doubleton_family(5, "cousin")

    def test_rediscovered_by_search(self):
        rel = doubleton_family(5, TWIN)
        assert rel in find_relations(rel.inversion_set, SearchConfig.linear())
        rel = doubleton_family(5, PN_MINUS_2, n=2)
        assert rel in find_relations(rel.inversion_set, SearchConfig.npower(2))


class TestBbInequality:
    def test_examples(self):
        r3 = Relation.from_signed_values(InversionSet.of(3), (3, -1, -1, -1))
        assert check_bb_inequality(r3, 1, 1) is True
        r57 = Relation.from_signed_values(InversionSet.of(5, 7), (7, -1, -1, -5))
        assert check_bb_inequality(r57, 1, 1) is True
        assert check_bb_inequality(r3, Fraction(1, 28), 0) is False

    def test_exact_boundary(self):
        # 3 <= C * 3^3 becomes an equality at C = 1/9: must count as holding
        r3 = Relation.from_signed_values(InversionSet.of(3), (3, -1, -1, -1))
        assert check_bb_inequality(r3, Fraction(1, 9), 0) is True
        assert check_bb_inequality(r3, Fraction(1, 10), 0) is False

    def test_fractional_epsilon(self):
        r3 = Relation.from_signed_values(InversionSet.of(3), (3, -1, -1, -1))
        assert check_bb_inequality(r3, Fraction(1, 9), Fraction(1, 2)) is True

    def test_common_factor_divided_out(self):
        # (6,-2,-2,-2) reduces to (3,-1,-1,-1): same verdicts as the reduced form
        r = Relation.from_signed_values(InversionSet.of(2, 3), (6, -2, -2, -2))
        assert check_bb_inequality(r, Fraction(1, 9), 0) is True
        assert check_bb_inequality(r, Fraction(1, 10), 0) is False

    def test_validation(self):
        r3 = Relation.from_signed_values(InversionSet.of(3), (3, -1, -1, -1))
        with pytest.raises(ValueError):
            check_bb_inequality(r3, 0, 1)
        with pytest.raises(ValueError):
            check_bb_inequality(r3, 1, -1)
