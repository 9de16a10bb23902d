"""Local invariants of a multiple fibre: torsion-order walks, jumping
values, and the admissible canonical coefficients.

The section-ring dimension h^0(O_{nF'}) of thickenings of a wild fibre
grows by one exactly at its jumping values.  The model implemented here
is a forced walk: starting from position 1 with torsion order nu, the
next jump sits at (current position) + (current order), and at each jump
the order either stays or is multiplied by the characteristic p.  The
growth choice is the only nondeterminism; order growth never happens off
a jump.  This reproduces the known first jumping value nu + 1 and the
second-jump dichotomy {2*nu + 1, (p+1)*nu + 1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidInputError
from .model import is_prime


@dataclass(frozen=True)
class CoefficientSet:
    """Admissible canonical coefficients; ``sharp`` is false when no rule
    narrows the divisibility-constrained superset (t >= 3)."""

    values: frozenset[int]
    sharp: bool

    def __contains__(self, a: int) -> bool:
        return a in self.values

    def sorted(self) -> list[int]:
        return sorted(self.values)


def _power_exponent(m: int, nu: int, p: int) -> int:
    """The e >= 1 with m = nu * p**e, or raise."""
    if m % nu != 0:
        raise InvalidInputError(f"torsion order must divide multiplicity: {nu} | {m}")
    q, e = m // nu, 0
    while q % p == 0:
        q //= p
        e += 1
    if q != 1 or e < 1:
        raise InvalidInputError(
            f"inconsistent wild fibre: m={m} is not nu*p^e for nu={nu}, p={p}"
        )
    return e


def admissible_coefficients(
    m: int, nu: int, p: int, t: int, h1_at_most_one: bool = False
) -> CoefficientSet:
    """The set of canonical coefficients a allowed for a fibre with the
    given multiplicity, torsion order, and torsion length t.

    Tame (t=0): {m-1}.  t=1, or h^1(O_S) <= 1: {m-1, m-1-nu}.
    t=2: {m-1, m-1-nu, m-1-2nu, m-1-(p+1)nu}.  t >= 3: every a with
    nu | a+1, flagged as not sharp.  Negative values are dropped.
    """
    if m < 2 or nu < 1 or t < 0:
        raise InvalidInputError(f"bad fibre data m={m}, nu={nu}, t={t}")
    if t == 0:
        if nu != m:
            raise InvalidInputError(
                f"tame fibres carry torsion order nu = m, got nu={nu}, m={m}"
            )
        return CoefficientSet(frozenset({m - 1}), True)
    if p == 0 or not is_prime(p):
        raise InvalidInputError("wild fibres need prime characteristic")
    _power_exponent(m, nu, p)
    if t == 1 or h1_at_most_one:
        raw = {m - 1, m - 1 - nu}
    elif t == 2:
        raw = {m - 1, m - 1 - nu, m - 1 - 2 * nu, m - 1 - (p + 1) * nu}
    else:
        return CoefficientSet(
            frozenset(a for a in range(m) if (a + 1) % nu == 0), False
        )
    return CoefficientSet(frozenset(a for a in raw if a >= 0), True)


def second_jump_candidates(nu: int, p: int) -> frozenset[int]:
    """The two possible second jumping values."""
    if nu < 1 or not is_prime(p):
        raise InvalidInputError(f"need nu >= 1 and p prime, got nu={nu}, p={p}")
    return frozenset({2 * nu + 1, (p + 1) * nu + 1})


@dataclass(frozen=True)
class JumpProfile:
    """Torsion orders o_1..o_m of O_{nF'}(F') together with the jumping
    values <= m.  ``torsion_length`` is the number of those jumps, and
    h^0(O_{nF'}) = 1 + #{jumps <= n}."""

    p: int
    nu: int
    orders: tuple[int, ...]
    jumps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "orders", tuple(self.orders))
        object.__setattr__(self, "jumps", tuple(sorted(self.jumps)))
        if not self.orders or self.orders[0] != self.nu:
            raise InvalidInputError("order sequence must start at nu")
        jumps = set(self.jumps)
        for n in range(1, len(self.orders)):
            prev, cur = self.orders[n - 1], self.orders[n]
            if cur not in (prev, self.p * prev):
                raise InvalidInputError("order steps must be 1 or p")
            if cur != prev and (n + 1) not in jumps:
                raise InvalidInputError("order growth is only allowed at a jump")
        if any(j < 2 or j > len(self.orders) for j in self.jumps):
            raise InvalidInputError("jumping values lie in [2, m]")

    @property
    def torsion_length(self) -> int:
        return len(self.jumps)

    def h0(self, n: int) -> int:
        return 1 + sum(1 for j in self.jumps if j <= n)

    def to_dict(self) -> dict:
        return {"orders": list(self.orders), "jumps": list(self.jumps)}


def enumerate_jump_profiles(m: int, nu: int, p: int) -> list[JumpProfile]:
    """All forced-walk profiles of length m for a wild fibre m = nu*p^e.

    The walk branches once per jump (order stays or grows), so the output
    has 2^(#jumps within m) profiles.
    """
    if not is_prime(p):
        raise InvalidInputError(f"p must be prime, got {p}")
    _power_exponent(m, nu, p)
    profiles: list[JumpProfile] = []

    def walk(pos: int, orders: list[int], jumps: list[int], next_jump: int, order: int):
        if pos > m:
            profiles.append(JumpProfile(p, nu, tuple(orders), tuple(jumps)))
            return
        if pos == next_jump:
            for grown in (order, p * order):
                walk(
                    pos + 1,
                    orders + [grown],
                    jumps + [pos],
                    pos + grown,
                    grown,
                )
        else:
            walk(pos + 1, orders + [order], jumps, next_jump, order)

    walk(2, [nu], [], nu + 1, nu)
    return profiles


@lru_cache(maxsize=None)
def achievable_torsion_lengths(nu: int, e: int, p: int) -> frozenset[int]:
    """Torsion lengths t realizable by some jump profile on m = nu*p^e.

    Derived mechanically from the forced walk; e = 0 gives t = 0 (the
    first jump nu + 1 falls beyond m = nu).
    """
    if not is_prime(p) or nu < 1 or e < 0:
        raise InvalidInputError(f"bad wild data nu={nu}, e={e}, p={p}")
    m = nu * p**e
    seen: dict[tuple[int, int], frozenset[int]] = {}

    def counts(next_jump: int, order: int) -> frozenset[int]:
        if next_jump > m:
            return frozenset({0})
        key = (next_jump, order)
        if key not in seen:
            out: set[int] = set()
            for grown in (order, p * order):
                out.update(1 + c for c in counts(next_jump + grown, grown))
            seen[key] = frozenset(out)
        return seen[key]

    return counts(nu + 1, nu)
