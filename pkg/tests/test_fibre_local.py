"""Jump profiles, torsion-order walks, and admissible coefficients."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from plurigenera import (
    InvalidInputError,
    achievable_torsion_lengths,
    admissible_coefficients,
    enumerate_jump_profiles,
    second_jump_candidates,
)


class TestCoefficients:
    def test_wild_t1(self):
        assert admissible_coefficients(4, 2, 2, 1).values == frozenset({3, 1})

    def test_tame(self):
        cs = admissible_coefficients(2, 2, 0, 0)
        assert cs.values == frozenset({1}) and cs.sharp

    def test_wild_t2(self):
        assert admissible_coefficients(8, 2, 2, 2).sorted() == [1, 3, 5, 7]

    def test_h1_flag_narrows_t2(self):
        assert admissible_coefficients(8, 2, 2, 2, h1_at_most_one=True).sorted() == [5, 7]

    def test_t3_not_sharp(self):
        cs = admissible_coefficients(16, 2, 2, 3)
        assert not cs.sharp
        assert all((a + 1) % 2 == 0 and 0 <= a < 16 for a in cs.values)

    def test_inconsistent_data_rejected(self):
        with pytest.raises(InvalidInputError):
            admissible_coefficients(6, 2, 2, 1)  # 6 != 2 * 2^e
        with pytest.raises(InvalidInputError):
            admissible_coefficients(4, 2, 0, 1)  # wild needs prime characteristic
        with pytest.raises(InvalidInputError):
            admissible_coefficients(4, 2, 2, 0)  # tame stores nu = m

    @settings(max_examples=100)
    @given(st.integers(1, 6), st.integers(1, 2), st.sampled_from((2, 3, 5)),
           st.integers(1, 3))
    def test_divisibility_invariant(self, nu, e, p, t):
        m = nu * p**e
        cs = admissible_coefficients(m, nu, p, t)
        assert all((a + 1) % nu == 0 and 0 <= a < m for a in cs.values)
        assert m - 1 in cs.values


class TestSecondJump:
    def test_nu2_p2(self):
        assert second_jump_candidates(2, 2) == frozenset({5, 7})

    def test_nu1_p2(self):
        # 2*1 + 1 = 3 and (2+1)*1 + 1 = 4; both occur in the profile walk
        assert second_jump_candidates(1, 2) == frozenset({3, 4})

    def test_nu2_p3(self):
        assert second_jump_candidates(2, 3) == frozenset({5, 9})


def profile_oracle(m, nu, p):
    """Independent walk: next jump = position + current order; the order
    may stay or pick up a factor p at each jump."""
    done = []

    def go(orders, jumps, nxt, order):
        pos = len(orders) + 1
        if pos > m:
            done.append((tuple(orders), tuple(jumps)))
            return
        if pos == nxt:
            for o2 in (order, p * order):
                go(orders + [o2], jumps + [pos], pos + o2, o2)
        else:
            go(orders + [order], jumps, nxt, order)

    go([nu], [], nu + 1, nu)
    return sorted(done)


class TestProfiles:
    def test_minimal_wild(self):
        profs = enumerate_jump_profiles(2, 1, 2)
        assert any(p.jumps == (2,) and p.torsion_length == 1 for p in profs)
        assert all(p.jumps[0] == 2 for p in profs)

    def test_first_jump_is_nu_plus_one(self):
        for prof in enumerate_jump_profiles(4, 2, 2):
            assert prof.jumps[0] == 3

    def test_second_jump_dichotomy(self):
        seconds = {
            p.jumps[1]
            for p in enumerate_jump_profiles(4, 1, 2)
            if len(p.jumps) >= 2
        }
        assert seconds <= {3, 4}
        assert seconds == {3, 4}

    def test_matches_oracle(self):
        for m, nu, p in ((2, 1, 2), (4, 1, 2), (4, 2, 2), (8, 2, 2), (9, 1, 3),
                        (6, 2, 3), (12, 3, 2)):
            got = sorted((p_.orders, p_.jumps) for p_ in enumerate_jump_profiles(m, nu, p))
            assert got == profile_oracle(m, nu, p)

    def test_invariants(self):
        for m, nu, p in ((8, 1, 2), (9, 1, 3), (8, 2, 2), (12, 3, 2)):
            for prof in enumerate_jump_profiles(m, nu, p):
                jumps = set(prof.jumps)
                assert prof.orders[0] == nu
                for n in range(1, m):
                    ratio_step = prof.orders[n] // prof.orders[n - 1]
                    assert prof.orders[n] % prof.orders[n - 1] == 0
                    assert ratio_step in (1, p)
                    if ratio_step == p:
                        assert (n + 1) in jumps
                # h^0 is 1 + #jumps so far, nondecreasing, ending at t+1
                assert prof.h0(m) == prof.torsion_length + 1
                values = [prof.h0(n) for n in range(1, m + 1)]
                assert values == sorted(values)
                if len(prof.jumps) >= 2:
                    assert prof.jumps[1] in second_jump_candidates(nu, p)

    def test_second_jump_cross_validation(self):
        for nu, p in ((2, 3), (1, 2), (3, 2), (2, 2)):
            m = nu * p**2
            seconds = {
                prof.jumps[1]
                for prof in enumerate_jump_profiles(m, nu, p)
                if len(prof.jumps) >= 2
            }
            assert seconds <= second_jump_candidates(nu, p)


class TestAchievableTorsion:
    def test_e1_p2(self):
        assert achievable_torsion_lengths(2, 1, 2) == frozenset({1})

    def test_e2(self):
        assert achievable_torsion_lengths(1, 2, 2) == frozenset({2, 3})

    def test_e1_p3(self):
        assert achievable_torsion_lengths(2, 1, 3) == frozenset({1, 2})

    def test_tame_exponent(self):
        assert achievable_torsion_lengths(5, 0, 2) == frozenset({0})

    def test_matches_profiles(self):
        for nu, e, p in ((1, 1, 2), (2, 1, 2), (1, 2, 2), (2, 1, 3), (1, 1, 5),
                        (3, 1, 3), (2, 2, 2)):
            m = nu * p**e
            from_profiles = {
                prof.torsion_length for prof in enumerate_jump_profiles(m, nu, p)
            }
            assert achievable_torsion_lengths(nu, e, p) == from_profiles

    def test_minimum_is_exponent(self):
        for p in (2, 3, 5):
            for nu in (1, 2, 3):
                for e in (1, 2):
                    assert min(achievable_torsion_lengths(nu, e, p)) == e
