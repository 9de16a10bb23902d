"""Numerical model of a relatively minimal (quasi-)elliptic fibration of
Kodaira dimension one, together with the exact plurigenus arithmetic.

A fibration over a base curve of genus ``g`` is recorded by the
characteristic ``p`` of the ground field, ``chi`` = chi(O_S), a flag for
the quasi-elliptic case, and the list of multiple fibres.  Each multiple
fibre carries its multiplicity ``m``, the canonical-bundle coefficient
``a`` (the numerical class of the canonical divisor is
``d*F + sum a_i F'_i`` with ``d = 2g - 2 + chi + t``), the torsion order
``nu`` of the normal sheaf of the reduced fibre, the exponent ``e`` with
``m = nu * p**e``, and the local torsion length ``t``.

On a genus-zero base the n-th plurigenus is exactly

    P_n = max(0, 1 + n*d + sum_i floor(n * a_i / m_i))        (n >= 1)

and everything here is integer / ``Fraction`` arithmetic; no floats.
On a positive-genus base only lower bounds are determined by the
numerical data, and results are flagged accordingly.

Constructors enforce structural well-formedness only (field types and
ranges).  The model-level rules (torsion divisibility, tame coefficient
forcing, the wild power relation, slope positivity, condition U, the
quasi-elliptic restrictions) are checked by ``verifier.is_admissible``,
which reports named violations instead of raising.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from fractions import Fraction

from .errors import InvalidInputError, UnsupportedInputError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def validate_characteristic(p: int) -> int:
    """A characteristic is 0 or a prime number."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise InvalidInputError(f"characteristic must be an integer, got {p!r}")
    if p != 0 and not is_prime(p):
        raise InvalidInputError(f"characteristic must be 0 or prime, got {p}")
    return p


def _check_int(name: str, value, minimum=None) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise InvalidInputError(f"{name} must be an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise InvalidInputError(f"{name} must be >= {minimum}, got {value}")
    return value


@dataclass(frozen=True)
class FibreDatum:
    """One multiple fibre: multiplicity m, canonical coefficient a,
    torsion order nu, power exponent e, and local torsion length t.

    ``t == 0`` means the fibre is tame, ``t >= 1`` wild.  Only shape
    constraints are enforced here; see the module docstring.
    """

    m: int
    a: int
    nu: int
    e: int
    t: int

    def __post_init__(self):
        _check_int("m", self.m, 2)
        _check_int("a", self.a, 0)
        if self.a >= self.m:
            raise InvalidInputError(f"need 0 <= a < m, got a={self.a}, m={self.m}")
        _check_int("nu", self.nu, 1)
        _check_int("e", self.e, 0)
        _check_int("t", self.t, 0)

    @property
    def wild(self) -> bool:
        return self.t >= 1

    @property
    def sort_key(self) -> tuple[int, int, int, int]:
        return (self.m, self.nu, self.t, self.a)

    @classmethod
    def tame(cls, m: int) -> "FibreDatum":
        """Tame fibre: coefficient m-1 and torsion order m."""
        return cls(m=m, a=m - 1, nu=m, e=0, t=0)

    @classmethod
    def wild_fibre(cls, p: int, nu: int, e: int, t: int, a: int) -> "FibreDatum":
        """Wild fibre with multiplicity nu * p**e."""
        validate_characteristic(p)
        if p == 0:
            raise InvalidInputError("wild fibres need positive characteristic")
        _check_int("e", e, 1)
        _check_int("t", t, 1)
        return cls(m=nu * p**e, a=a, nu=nu, e=e, t=t)

    def to_dict(self) -> dict:
        return {"m": self.m, "a": self.a, "nu": self.nu, "e": self.e, "t": self.t}

    @classmethod
    def from_dict(cls, data: dict) -> "FibreDatum":
        if not isinstance(data, dict):
            raise InvalidInputError(f"fibre must be an object, got {data!r}")
        keys = {"m", "a", "nu", "e", "t"}
        if set(data) != keys:
            raise InvalidInputError(
                f"fibre keys must be exactly {sorted(keys)}, got {sorted(data)}"
            )
        return cls(m=data["m"], a=data["a"], nu=data["nu"], e=data["e"], t=data["t"])


@dataclass(frozen=True)
class FibrationNumericalType:
    """Complete numeric record of a fibration of Kodaira dimension one.

    Fibres are canonicalized on construction: sorted ascending by
    (m, nu, t, a).  All values are immutable and hashable, so types can
    be shared freely between concurrent workers.
    """

    p: int
    g: int
    chi: int
    quasi_elliptic: bool
    fibres: tuple[FibreDatum, ...]
    existence_unknown: bool = False

    def __post_init__(self):
        validate_characteristic(self.p)
        _check_int("g", self.g, 0)
        _check_int("chi", self.chi)  # negative chi is a reported violation
        if not isinstance(self.quasi_elliptic, bool):
            raise InvalidInputError("quasi_elliptic must be a boolean")
        if not isinstance(self.existence_unknown, bool):
            raise InvalidInputError("existence_unknown must be a boolean")
        fibres = tuple(sorted(self.fibres, key=lambda f: f.sort_key))
        for f in fibres:
            if not isinstance(f, FibreDatum):
                raise InvalidInputError(f"fibres must contain FibreDatum, got {f!r}")
        object.__setattr__(self, "fibres", fibres)

    @property
    def r(self) -> int:
        """Number of multiple fibres."""
        return len(self.fibres)

    @property
    def torsion_length(self) -> int:
        """Total length t of the torsion part of the direct image."""
        return sum(f.t for f in self.fibres)

    @property
    def sort_key(self):
        return (
            self.p,
            self.g,
            self.chi,
            self.torsion_length,
            int(self.quasi_elliptic),
            self.r,
            tuple(f.sort_key + (f.e,) for f in self.fibres),
            int(self.existence_unknown),
        )

    @classmethod
    def tame_type(
        cls,
        multiplicities,
        *,
        p: int = 0,
        g: int = 0,
        chi: int = 0,
        quasi_elliptic: bool = False,
    ) -> "FibrationNumericalType":
        return cls(
            p=p,
            g=g,
            chi=chi,
            quasi_elliptic=quasi_elliptic,
            fibres=tuple(FibreDatum.tame(m) for m in multiplicities),
        )

    def with_characteristic(self, p: int) -> "FibrationNumericalType":
        return replace(self, p=p)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "g": self.g,
            "chi": self.chi,
            "quasi_elliptic": self.quasi_elliptic,
            "fibres": [f.to_dict() for f in self.fibres],
            "existence_unknown": self.existence_unknown,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "FibrationNumericalType":
        if not isinstance(data, dict):
            raise InvalidInputError(f"type must be a JSON object, got {data!r}")
        required = {"p", "g", "chi", "quasi_elliptic", "fibres"}
        allowed = required | {"existence_unknown"}
        if not required <= set(data) or not set(data) <= allowed:
            raise InvalidInputError(
                f"type keys must be {sorted(required)} (+ optional existence_unknown), "
                f"got {sorted(data)}"
            )
        if not isinstance(data["fibres"], list):
            raise InvalidInputError("fibres must be a list")
        return cls(
            p=data["p"],
            g=data["g"],
            chi=data["chi"],
            quasi_elliptic=data["quasi_elliptic"],
            fibres=tuple(FibreDatum.from_dict(f) for f in data["fibres"]),
            existence_unknown=data.get("existence_unknown", False),
        )

    @classmethod
    def from_json(cls, text: str) -> "FibrationNumericalType":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidInputError(f"invalid JSON: {exc}") from exc
        return cls.from_dict(data)


@dataclass(frozen=True)
class PlurigenusValue:
    """An n-th plurigenus: exact when ``exact`` is true, otherwise a
    guaranteed lower bound (positive-genus base)."""

    n: int
    value: int
    exact: bool

    def __post_init__(self):
        _check_int("n", self.n, 0)
        _check_int("value", self.value, 0)
        if self.n == 0 and (self.value != 1 or not self.exact):
            raise InvalidInputError("P_0 is exactly 1")


def delta_degree(t: FibrationNumericalType) -> int:
    """Degree d = 2g - 2 + chi + t of the base divisor in the canonical
    bundle formula."""
    return 2 * t.g - 2 + t.chi + t.torsion_length


def slope(t: FibrationNumericalType) -> Fraction:
    """Per-n growth rate d + sum a_i/m_i of the pluricanonical degree.

    Positive slope is the admissibility surrogate for Kodaira dimension
    one on a relatively minimal fibration with K^2 = 0.
    """
    s = Fraction(delta_degree(t))
    for f in t.fibres:
        s += Fraction(f.a, f.m)
    return s


def geometric_genus(t: FibrationNumericalType) -> int:
    """p_g = max(0, d + 1); established only over a genus-zero base."""
    if t.g != 0:
        raise UnsupportedInputError(
            "geometric genus from numerical data is only available for g = 0"
        )
    return max(0, delta_degree(t) + 1)


def _floor_part(t: FibrationNumericalType, n: int) -> int:
    return sum((n * f.a) // f.m for f in t.fibres)


def linear_part(t: FibrationNumericalType, n: int) -> int:
    """L(n) = 1 + n*d + sum floor(n*a_i/m_i); P_n = max(0, L(n)) for g=0."""
    return 1 + n * delta_degree(t) + _floor_part(t, n)


def plurigenus(t: FibrationNumericalType, n: int) -> PlurigenusValue:
    """The n-th plurigenus: exact for g = 0, the strongest applicable
    lower bound (flagged) for g >= 1."""
    _check_int("n", n, 0)
    if n == 0:
        return PlurigenusValue(0, 1, True)
    if t.g == 0:
        return PlurigenusValue(n, max(0, linear_part(t, n)), True)
    return PlurigenusValue(n, generic_lower_bound(t, n), False)


def plurigenera_series(t: FibrationNumericalType, n_max: int) -> list[PlurigenusValue]:
    _check_int("n_max", n_max, 0)
    return [plurigenus(t, n) for n in range(n_max + 1)]


def generic_lower_bound(t: FibrationNumericalType, n: int) -> int:
    """Guaranteed lower bound for P_n on the branches where one is known:

    - g >= 1, chi + t >= 1   ->  g + n - 1
    - g >= 2, chi = t = 0    ->  (2n - 1)(g - 1)
    - g = 1,  chi = t = 0    ->  sum floor(n*a_i/m_i)
    - g = 0,  chi + t = 2, no wild fibres  ->  1 + sum floor(n*(m_i-1)/m_i)
    - g = 0,  chi + t >= 3   ->  n + 1

    The branch inequalities hold for n >= 1; n = 0 returns the exact 1.
    Rejects g = 0 with chi + t <= 1 (computed exactly by ``plurigenus``)
    and g = 0, chi + t = 2 with wild fibres (no single branch formula).
    """
    _check_int("n", n, 0)
    if n == 0:
        return 1
    ct = t.chi + t.torsion_length
    if t.g >= 1:
        if ct >= 1:
            return t.g + n - 1
        if t.g >= 2:
            return (2 * n - 1) * (t.g - 1)
        return _floor_part(t, n)
    if ct >= 3:
        return n + 1
    if ct == 2 and t.torsion_length == 0:
        return 1 + _floor_part(t, n)
    if ct == 2:
        raise UnsupportedInputError(
            "no generic branch bound for g=0, chi+t=2 with wild fibres; "
            "use the exact plurigenus"
        )
    raise UnsupportedInputError(
        "g=0 with chi+t <= 1 is handled exactly by plurigenus"
    )
