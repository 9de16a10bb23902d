"""Condition U and shared floor-sum / quasi-linear utilities.

Condition U_i on sequences (m_1..m_r | nu_1..nu_r) asks for integers
n_1..n_r with n_i = 1 mod nu_i and sum n_j/m_j integral.  Two deciders
are provided: a gcd-based procedure (fast, derived) and an exhaustive
residue search (the oracle the fast one is validated against).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd, lcm

from .errors import (
    InvalidInputError,
    OracleBoundExceededError,
    UnsupportedInputError,
)

DEFAULT_ORACLE_BOUND = 10**6
ORACLE_BOUND_ENV = "PLURI_MAX_ORACLE"


def oracle_bound() -> int:
    raw = os.environ.get(ORACLE_BOUND_ENV)
    if raw is None:
        return DEFAULT_ORACLE_BOUND
    try:
        return int(raw)
    except ValueError as exc:
        raise InvalidInputError(f"{ORACLE_BOUND_ENV} must be an integer") from exc


@dataclass(frozen=True)
class ConditionUInstance:
    """Multiplicities, torsion orders, and a distinguished 1-based index."""

    m: tuple[int, ...]
    nu: tuple[int, ...]
    i: int

    def __post_init__(self):
        object.__setattr__(self, "m", tuple(self.m))
        object.__setattr__(self, "nu", tuple(self.nu))
        if len(self.m) != len(self.nu) or not self.m:
            raise InvalidInputError("m and nu must be nonempty lists of equal length")
        for m_j, nu_j in zip(self.m, self.nu):
            if m_j < 2:
                raise InvalidInputError(f"multiplicities must be >= 2, got {m_j}")
            if nu_j < 1 or m_j % nu_j != 0:
                raise InvalidInputError(f"need nu | m, got nu={nu_j}, m={m_j}")
        if not 1 <= self.i <= len(self.m):
            raise InvalidInputError(f"index i out of range: {self.i}")


def check_condition_U(inst: ConditionUInstance) -> bool:
    """Decide condition U_i by linear-congruence solvability.

    With M = lcm(m_j), writing n_i = 1 + k*nu_i, the residues reachable
    by the free variables form the subgroup of Z/M generated by
    nu_i*M/m_i and the M/m_j (j != i); solvability is divisibility of
    M/m_i by the subgroup's generator gcd.
    """
    i = inst.i - 1
    big_m = lcm(*inst.m)
    g = gcd(big_m, inst.nu[i] * big_m // inst.m[i])
    for j, m_j in enumerate(inst.m):
        if j != i:
            g = gcd(g, big_m // m_j)
    return (big_m // inst.m[i]) % g == 0


def check_condition_U_bruteforce(
    inst: ConditionUInstance, max_combos: int | None = None
) -> bool:
    """Exhaustive search over residues modulo each m_j; the independent
    oracle for ``check_condition_U``."""
    if max_combos is None:
        max_combos = oracle_bound()
    i = inst.i - 1
    big_m = lcm(*inst.m)
    combos = 1
    for j, m_j in enumerate(inst.m):
        combos *= (m_j // inst.nu[j]) if j == i else m_j
    if combos > max_combos:
        raise OracleBoundExceededError(
            f"{combos} residue combinations exceed the oracle bound {max_combos}"
        )
    weights = [big_m // m_j for m_j in inst.m]
    ranges = [
        range(1, m_j + 1, inst.nu[j]) if j == i else range(m_j)
        for j, m_j in enumerate(inst.m)
    ]
    for combo in product(*ranges):
        total = 0
        for n_j, w_j in zip(combo, weights):
            total += n_j * w_j
        if total % big_m == 0:
            return True
    return False


def check_all_U(fibration) -> bool:
    """Conjunction of U_i over all multiple fibres of an elliptic
    fibration over the projective line with chi = 0."""
    if fibration.g != 0 or fibration.chi != 0:
        raise UnsupportedInputError("condition U applies only when g = 0 and chi = 0")
    if fibration.quasi_elliptic:
        raise UnsupportedInputError("condition U is stated for elliptic fibrations")
    r = fibration.r
    if r == 0:
        return True
    m = tuple(f.m for f in fibration.fibres)
    nu = tuple(f.nu for f in fibration.fibres)
    return all(check_condition_U(ConditionUInstance(m, nu, i)) for i in range(1, r + 1))


def divisibility_closure_r3(m1: int, m2: int, m3: int) -> bool:
    """Each multiplicity divides the lcm of the other two (tame triples)."""
    return (
        lcm(m2, m3) % m1 == 0
        and lcm(m1, m3) % m2 == 0
        and lcm(m1, m2) % m3 == 0
    )


def floor_sum(n: int, pairs) -> int:
    """sum floor(n*a/m) with exact integer arithmetic (n >= 0, a >= 0)."""
    if n < 0:
        raise InvalidInputError(f"n must be >= 0, got {n}")
    total = 0
    for a, m in pairs:
        if m < 1 or a < 0:
            raise InvalidInputError(f"need m >= 1 and a >= 0, got ({a}, {m})")
        total += (n * a) // m
    return total


def lcm_all(values, default: int = 1) -> int:
    out = default
    for v in values:
        out = lcm(out, v)
    return out


@dataclass(frozen=True)
class QuasiLinearForm:
    """const + linear*n + sum floor(n*a/m): the shape of every exact
    plurigenus formula and every branch bound used here."""

    const: int
    linear: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple((a, m) for a, m in self.pairs))

    def value(self, n: int) -> int:
        return self.const + self.linear * n + floor_sum(n, self.pairs)

    def growth(self) -> Fraction:
        g = Fraction(self.linear)
        for a, m in self.pairs:
            g += Fraction(a, m)
        return g

    def period(self) -> int:
        return lcm_all(m for _, m in self.pairs)

    def fractional_loss(self) -> Fraction:
        """Max total defect of the floors below their linear parts."""
        loss = Fraction(0)
        for _, m in self.pairs:
            loss += Fraction(m - 1, m)
        return loss

    def eventually_at_least(self, threshold: int, target: int) -> bool:
        """Exact decision of ``value(n) >= target for all n >= threshold``.

        Beyond n* = (target - const + loss)/growth the linear envelope
        const + n*growth - loss already clears the target, so only the
        finite window [threshold, n*) needs scanning.  Zero growth is
        periodic (scan one period); negative growth fails eventually.
        """
        s = self.growth()
        if s > 0:
            cutoff = (Fraction(target - self.const) + self.fractional_loss()) / s
            n_hi = max(threshold, _ceil_fraction(cutoff))
            return all(self.value(n) >= target for n in range(threshold, n_hi))
        if s == 0:
            window = self.period()
            return all(
                self.value(n) >= target for n in range(threshold, threshold + window)
            )
        return False

    def first_at_least(self, target: int, n_max: int) -> int | None:
        """Least n in [1, n_max] with max(0, value(n)) >= target."""
        for n in range(1, n_max + 1):
            if max(0, self.value(n)) >= target:
                return n
        return None


def _ceil_fraction(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)
