"""Build fibration types from finite-abelian-group cover data.

A Galois cover of the projective line branched over r points, with
abelian Galois group G given by invariant factors and one local
monodromy per branch point, exists when the monodromies sum to zero and
generate G.  The induced elliptic fibration acquires a tame multiple
fibre of multiplicity equal to each monodromy's order, and the cover
curve's genus follows from Riemann-Hurwitz.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm, prod

from .errors import InvalidInputError
from .model import FibrationNumericalType, FibreDatum


@dataclass(frozen=True)
class AbelianGroupData:
    invariant_factors: tuple[int, ...]
    monodromies: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        factors = tuple(int(d) for d in self.invariant_factors)
        if not factors or any(d < 2 for d in factors):
            raise InvalidInputError("invariant factors must be integers >= 2")
        monos = []
        for g in self.monodromies:
            g = tuple(int(x) for x in g)
            if len(g) != len(factors):
                raise InvalidInputError(
                    "each monodromy needs one residue per invariant factor"
                )
            monos.append(tuple(x % d for x, d in zip(g, factors)))
        object.__setattr__(self, "invariant_factors", factors)
        object.__setattr__(self, "monodromies", tuple(monos))
        if any(
            sum(g[k] for g in self.monodromies) % d != 0
            for k, d in enumerate(factors)
        ):
            raise InvalidInputError("local monodromies must sum to zero in the group")
        if self.subgroup_order(self.monodromies) != self.group_order:
            raise InvalidInputError("local monodromies must generate the group")

    @property
    def group_order(self) -> int:
        return prod(self.invariant_factors)

    def element_order(self, g: tuple[int, ...]) -> int:
        return lcm(*(d // gcd(d, x) for x, d in zip(g, self.invariant_factors)))

    def subgroup_order(self, generators) -> int:
        factors = self.invariant_factors
        zero = tuple(0 for _ in factors)
        seen = {zero}
        frontier = [zero]
        while frontier:
            cur = frontier.pop()
            for g in generators:
                nxt = tuple((c + x) % d for c, x, d in zip(cur, g, factors))
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        return len(seen)


def cover_to_type(data: AbelianGroupData) -> FibrationNumericalType:
    """The tame genus-zero type with one multiple fibre per nontrivial
    local monodromy, of multiplicity its order.  Admissibility (slope
    positivity in particular) is checked downstream, not here."""
    multiplicities = [
        data.element_order(g) for g in data.monodromies if data.element_order(g) > 1
    ]
    return FibrationNumericalType(
        p=0,
        g=0,
        chi=0,
        quasi_elliptic=False,
        fibres=tuple(FibreDatum.tame(m) for m in multiplicities),
    )


def bad_characteristics(data: AbelianGroupData) -> tuple[int, ...]:
    """Advisory: primes dividing some local monodromy order.  The cover
    construction is only guaranteed to behave away from these; the
    emitted type still carries characteristic zero."""
    primes: set[int] = set()
    for g in data.monodromies:
        m = data.element_order(g)
        d = 2
        while d * d <= m:
            if m % d == 0:
                primes.add(d)
                while m % d == 0:
                    m //= d
            d += 1
        if m > 1:
            primes.add(m)
    return tuple(sorted(primes))


def riemann_hurwitz_genus(data: AbelianGroupData) -> int:
    """Genus of the cover curve: 2g - 2 = |G| (-2 + sum (1 - 1/m_j))."""
    rhs = Fraction(-2)
    for g in data.monodromies:
        m = data.element_order(g)
        if m > 1:
            rhs += 1 - Fraction(1, m)
    rhs *= data.group_order
    if rhs.denominator != 1:
        raise InvalidInputError("non-integral Euler term: inconsistent cover data")
    val = rhs.numerator
    if val < -2 or val % 2 != 0:
        raise InvalidInputError(f"no curve has 2g - 2 = {val}")
    return (val + 2) // 2
