"""Condition U deciders, the residue oracle, and floor-sum utilities."""

import random
from fractions import Fraction
from math import lcm

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from plurigenera import (
    ConditionUInstance,
    FibrationNumericalType,
    OracleBoundExceededError,
    QuasiLinearForm,
    UnsupportedInputError,
    check_all_U,
    check_condition_U,
    check_condition_U_bruteforce,
    divisibility_closure_r3,
    floor_sum,
)


def inst(ms, nus, i):
    return ConditionUInstance(tuple(ms), tuple(nus), i)


class TestFixtures:
    def test_u4_fails_for_2223(self):
        assert check_condition_U(inst((2, 2, 2, 3), (2, 2, 2, 3), 4)) is False
        assert check_condition_U_bruteforce(inst((2, 2, 2, 3), (2, 2, 2, 3), 4)) is False

    def test_u1_fails_for_8_2(self):
        assert check_condition_U(inst((8, 2), (2, 2), 1)) is False

    def test_u1_fails_for_8_4(self):
        assert check_condition_U(inst((8, 4), (4, 4), 1)) is False

    def test_266_satisfies_all(self):
        for i in (1, 2, 3):
            assert check_condition_U(inst((2, 6, 6), (2, 6, 6), i)) is True
            assert check_condition_U_bruteforce(inst((2, 6, 6), (2, 6, 6), i)) is True

    def test_single_fibre(self):
        assert check_condition_U_bruteforce(inst((2,), (1,), 1)) is True
        assert check_condition_U(inst((6,), (2,), 1)) is False


class TestAllU:
    def test_266(self):
        assert check_all_U(FibrationNumericalType.tame_type((2, 6, 6))) is True

    def test_2223(self):
        assert check_all_U(FibrationNumericalType.tame_type((2, 2, 2, 3))) is False

    def test_empty_conjunction(self):
        assert check_all_U(FibrationNumericalType.tame_type(())) is True

    def test_hypothesis_unmet(self):
        with pytest.raises(UnsupportedInputError):
            check_all_U(FibrationNumericalType.tame_type((2, 3), chi=1))
        with pytest.raises(UnsupportedInputError):
            check_all_U(FibrationNumericalType.tame_type((2, 3), g=1))
        with pytest.raises(UnsupportedInputError):
            check_all_U(
                FibrationNumericalType.tame_type((2, 3), p=2, quasi_elliptic=True)
            )


def divisor_pairs(max_m):
    return [
        (m, nu) for m in range(2, max_m + 1) for nu in range(1, m + 1) if m % nu == 0
    ]


class TestOracleAgreement:
    def test_exhaustive_small(self):
        # quick tier: r <= 3, m <= 10 (the acceptance suite runs r <= 4, m <= 12)
        from itertools import combinations_with_replacement

        pairs = divisor_pairs(10)
        for r in range(1, 4):
            for combo in combinations_with_replacement(pairs, r):
                ms = tuple(m for m, _ in combo)
                nus = tuple(nu for _, nu in combo)
                seen = set()
                for idx, pv in enumerate(combo):
                    if pv in seen:
                        continue
                    seen.add(pv)
                    ci = inst(ms, nus, idx + 1)
                    assert check_condition_U(ci) == check_condition_U_bruteforce(ci)

    def test_random_instances(self):
        rng = random.Random(20260809)
        checked = 0
        while checked < 200:
            r = rng.randint(1, 4)
            ms, nus = [], []
            for _ in range(r):
                m = rng.randint(2, 14)
                divs = [d for d in range(1, m + 1) if m % d == 0]
                ms.append(m)
                nus.append(rng.choice(divs))
            if lcm(*ms) > 2000:
                continue
            i = rng.randint(1, r)
            ci = inst(tuple(ms), tuple(nus), i)
            assert check_condition_U(ci) == check_condition_U_bruteforce(ci)
            checked += 1

    def test_permutation_invariance(self):
        rng = random.Random(7)
        for _ in range(100):
            r = rng.randint(2, 4)
            ms, nus = [], []
            for _ in range(r):
                m = rng.randint(2, 12)
                divs = [d for d in range(1, m + 1) if m % d == 0]
                ms.append(m)
                nus.append(rng.choice(divs))
            base = check_condition_U(inst(tuple(ms), tuple(nus), 1))
            order = list(range(1, r))
            rng.shuffle(order)
            perm = [0] + order
            assert (
                check_condition_U(
                    inst(tuple(ms[j] for j in perm), tuple(nus[j] for j in perm), 1)
                )
                == base
            )

    def test_oracle_bound(self):
        big = inst((128, 128, 128, 128), (1, 1, 1, 1), 1)
        with pytest.raises(OracleBoundExceededError):
            check_condition_U_bruteforce(big, max_combos=1000)


class TestClosure:
    def test_366(self):
        assert divisibility_closure_r3(3, 6, 6) is True

    def test_223(self):
        assert divisibility_closure_r3(2, 2, 3) is False

    def test_444(self):
        assert divisibility_closure_r3(4, 4, 4) is True

    def test_matches_condition_u_on_tame_triples(self):
        from itertools import combinations_with_replacement

        for ms in combinations_with_replacement(range(2, 31), 3):
            t = FibrationNumericalType.tame_type(ms)
            assert divisibility_closure_r3(*ms) == check_all_U(t)


class TestFloorSum:
    def test_feeds_p13_of_266(self):
        assert floor_sum(13, ((1, 2), (5, 6), (5, 6))) == 26

    def test_n_zero(self):
        assert floor_sum(0, ((1, 2), (9, 10))) == 0

    def test_feeds_p12_of_2510(self):
        assert floor_sum(12, ((1, 2), (4, 5), (9, 10))) == 25

    @settings(max_examples=80)
    @given(
        st.lists(
            st.tuples(st.integers(0, 9), st.integers(2, 10)).filter(
                lambda am: am[0] < am[1]
            ),
            min_size=1,
            max_size=4,
        ),
        st.integers(0, 30),
    )
    def test_periodicity(self, pairs, n):
        period = lcm(*(m for _, m in pairs))
        growth = sum(Fraction(a, m) for a, m in pairs)
        assert floor_sum(n + period, pairs) == floor_sum(n, pairs) + period * growth


class TestQuasiLinearForm:
    def test_eventually_at_least_matches_scan(self):
        form = QuasiLinearForm(1, -2, ((1, 2), (5, 6), (5, 6)))
        # direct scan over two periods past any threshold
        for threshold, target in ((14, 2), (13, 2), (4, 1), (8, 2)):
            period = form.period()
            scan = all(
                form.value(n) >= target
                for n in range(threshold, threshold + 2 * period)
            )
            grows = form.growth() > 0
            expected = scan and grows
            assert form.eventually_at_least(threshold, target) == expected

    def test_zero_growth_periodic(self):
        form = QuasiLinearForm(0, 0, ((1, 2),))
        assert form.eventually_at_least(1, 0) is True
        assert form.eventually_at_least(1, 1) is False

    def test_negative_growth(self):
        form = QuasiLinearForm(5, -1, ())
        assert form.eventually_at_least(1, 1) is False
