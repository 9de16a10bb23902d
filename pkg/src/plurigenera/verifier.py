"""Admissibility checking, bounded exhaustive enumeration, and machine
verification of the four plurigenus growth statements:

    (1) P_12 >= 2,
    (2) some n <= 4 has P_n >= 1,
    (3) some n <= 8 has P_n >= 2,
    (4) P_n >= 2 for every n >= 14,

with statement (4) decided exactly through the quasi-linear structure of
the plurigenus formula.

``verify_all`` runs the sweep in one of two modes.  The certified mode
(default) mirrors the structure of the genus-zero case analysis: shapes
the analysis handles uniformly (for example "five or more tame fibres")
are covered by class certificates - quasi-linear bounds whose statement
checks are decided exactly - while the finitely many remaining shapes
(triples and quadruples with no base term, small wild configurations)
are materialized and checked one by one.  ``materialize_all=True``
enumerates every admissible type in bounds instead; it is exact but only
practical for small bounds.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, replace
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb

from .cases import (
    class_certificates,
    exact_form,
    replay_type,
    section4_label,
)
from .congruence import check_all_U, lcm_all
from .errors import (
    InadmissibleTypeError,
    InvalidInputError,
    UnsupportedInputError,
)
from .fibre_local import (
    achievable_torsion_lengths,
    admissible_coefficients,
)
from .model import (
    FibrationNumericalType,
    FibreDatum,
    is_prime,
    plurigenus,
    slope,
)

MATERIAL_GUARD = 5_000_000


@dataclass(frozen=True)
class AdmissibilityReport:
    admissible: bool
    violations: tuple[str, ...]

    def __post_init__(self):
        if self.admissible != (not self.violations):
            raise InvalidInputError("admissible iff violations empty")

    def to_dict(self) -> dict:
        return {"admissible": self.admissible, "violations": list(self.violations)}


def _h1_at_most_one(t: FibrationNumericalType) -> bool:
    # On a genus-zero base h^1(O_S) is determined: chi = 1 - h + p_g with
    # p_g = max(0, d+1), giving h = t when chi + t >= 1 and h = 1 otherwise.
    if t.g != 0:
        return False
    tl = t.torsion_length
    h = tl if t.chi + tl >= 1 else 1
    return h <= 1


def is_admissible(t: FibrationNumericalType) -> AdmissibilityReport:
    """Apply every model rule and report all named violations."""
    violations: list[str] = []
    if t.chi < 0:
        violations.append("chi-negative")
    h1_flag = _h1_at_most_one(t)
    for f in t.fibres:
        if f.t == 0:
            if f.nu != f.m or f.e != 0:
                violations.append("tame-torsion-order")
            if f.a != f.m - 1:
                violations.append("tame-coefficient")
            continue
        if t.p == 0:
            violations.append("wild-char-zero")
            continue
        power_ok = f.e >= 1 and f.m == f.nu * t.p**f.e
        if not power_ok:
            violations.append("wild-power-relation")
        elif f.t not in achievable_torsion_lengths(f.nu, f.e, t.p):
            violations.append("wild-torsion-length")
        if (f.a + 1) % f.nu != 0:
            violations.append("coefficient-divisibility")
        elif power_ok:
            allowed = admissible_coefficients(f.m, f.nu, t.p, f.t, h1_flag)
            if f.a not in allowed:
                violations.append("wild-coefficient")
    if slope(t) <= 0:
        violations.append("slope-nonpositive")
    if t.quasi_elliptic:
        if t.p not in (2, 3):
            violations.append("quasi-elliptic-char")
        if t.g == 0 and t.chi == 0:
            violations.append("quasi-elliptic-chi0-base-P1")
    if (
        not t.quasi_elliptic
        and t.g == 0
        and t.chi == 0
        and all(f.m % f.nu == 0 for f in t.fibres)
    ):
        if not check_all_U(t):
            violations.append("condition-U")
    return AdmissibilityReport(not violations, tuple(violations))


@dataclass(frozen=True)
class MainTheoremReport:
    p12: int
    stmt1: bool
    stmt2_witness: int | None
    stmt3_witness: int | None
    stmt4: bool
    exact: bool
    series: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "p12": self.p12,
            "stmt1": self.stmt1,
            "stmt2_witness": self.stmt2_witness,
            "stmt3_witness": self.stmt3_witness,
            "stmt4": self.stmt4,
            "exact": self.exact,
            "series": list(self.series),
        }


def _require_admissible(t: FibrationNumericalType) -> None:
    report = is_admissible(t)
    if not report.admissible:
        raise InadmissibleTypeError(report.violations)


def verify_main_theorem(t: FibrationNumericalType) -> MainTheoremReport:
    """Evaluate the four statements.  Exact for g = 0; computed from the
    guaranteed lower bounds (hence conservative) for g >= 1.

    The audit series covers P_0 .. P_(14 + 2*lcm) when the multiplicity
    lcm is small enough to print (<= 120), and P_0 .. P_40 otherwise;
    statement (4) is always decided exactly either way."""
    _require_admissible(t)
    period = lcm_all((f.m for f in t.fibres), 1)
    upto = 14 + 2 * period if period <= 120 else 40
    series = tuple(plurigenus(t, n).value for n in range(upto + 1))
    exact = t.g == 0
    if exact:
        form = exact_form(t)
        p12 = max(0, form.value(12))
        stmt2 = form.first_at_least(1, 4)
        stmt3 = form.first_at_least(2, 8)
        stmt4 = form.eventually_at_least(14, 2)
    else:
        form = _genus_bound_form(t)
        p12 = max(0, form.value(12))
        stmt2 = form.first_at_least(1, 4)
        stmt3 = form.first_at_least(2, 8)
        stmt4 = form.eventually_at_least(14, 2)
    return MainTheoremReport(
        p12=p12,
        stmt1=p12 >= 2,
        stmt2_witness=stmt2,
        stmt3_witness=stmt3,
        stmt4=stmt4,
        exact=exact,
        series=series,
    )


def _genus_bound_form(t: FibrationNumericalType):
    from .congruence import QuasiLinearForm

    ct = t.chi + t.torsion_length
    if ct >= 1:
        return QuasiLinearForm(t.g - 1, 1, ())
    if t.g >= 2:
        return QuasiLinearForm(-(t.g - 1), 2 * (t.g - 1), ())
    return QuasiLinearForm(0, 0, tuple((f.a, f.m) for f in t.fibres))


def verify_tail(t: FibrationNumericalType, threshold: int, target: int) -> bool:
    """Exactly decide ``P_n >= target for all n >= threshold`` (g = 0)."""
    if t.g != 0:
        raise UnsupportedInputError("verify_tail requires a genus-zero base")
    _require_admissible(t)
    if target <= 0:
        return True
    return exact_form(t).eventually_at_least(threshold, target)


# ---------------------------------------------------------------------------
# enumeration


@dataclass(frozen=True)
class EnumerationBounds:
    max_mult: int = 30
    max_fibres: int = 8
    max_chi_plus_t: int = 4
    characteristics: tuple[int, ...] = (0, 2, 3, 5, 7)
    include_wild: bool = True
    include_quasi_elliptic: bool = True

    def __post_init__(self):
        if self.max_mult < 2 or self.max_fibres < 1 or self.max_chi_plus_t < 0:
            raise InvalidInputError("enumeration bounds must be positive")
        ps = tuple(sorted(set(self.characteristics)))
        for p in ps:
            if p != 0 and not is_prime(p):
                raise InvalidInputError(f"bad characteristic {p}")
        object.__setattr__(self, "characteristics", ps)

    def to_dict(self) -> dict:
        return {
            "max_mult": self.max_mult,
            "max_fibres": self.max_fibres,
            "max_chi_plus_t": self.max_chi_plus_t,
            "characteristics": list(self.characteristics),
            "include_wild": self.include_wild,
            "include_quasi_elliptic": self.include_quasi_elliptic,
        }


@lru_cache(maxsize=None)
def _factorization(n: int) -> tuple[tuple[int, int], ...]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@lru_cache(maxsize=None)
def _wild_data(p: int, t_j: int, max_mult: int) -> tuple[FibreDatum, ...]:
    """All wild fibre records with torsion length t_j and m <= max_mult."""
    out = []
    for e in (1, 2):
        q = p**e
        for nu in range(1, max_mult // q + 1):
            if t_j not in achievable_torsion_lengths(nu, e, p):
                continue
            m = nu * q
            for a in admissible_coefficients(m, nu, p, t_j).sorted():
                out.append(FibreDatum(m=m, a=a, nu=nu, e=e, t=t_j))
    return tuple(sorted(out, key=lambda f: f.sort_key))


def _torsion_partitions(t: int) -> list[tuple[int, int]]:
    """(count of t_j=1 fibres, count of t_j=2 fibres) decompositions."""
    return [(t - 2 * k2, k2) for k2 in range(t // 2 + 1)]


def _wild_combos(p: int, t: int, max_fibres: int, max_mult: int):
    if t == 0:
        yield ()
        return
    ones = _wild_data(p, 1, max_mult)
    twos = _wild_data(p, 2, max_mult)
    for k1, k2 in _torsion_partitions(t):
        if k1 + k2 > max_fibres or k1 < 0:
            continue
        for singles in combinations_with_replacement(ones, k1):
            for doubles in combinations_with_replacement(twos, k2):
                yield singles + doubles


def _multisets_upto(max_mult: int, max_size: int):
    values = range(2, max_mult + 1)
    for k in range(max_size + 1):
        yield from combinations_with_replacement(values, k)


def _count_multisets_upto(max_mult: int, max_size: int) -> int:
    n = max_mult - 1
    return sum(comb(n + k - 1, k) for k in range(max_size + 1))


def _covered_companions(max_mult: int, max_size: int, wilds: tuple[FibreDatum, ...]):
    """Tame companion multisets compatible with condition U (streamed).

    Condition U_i is equivalent to: for every prime p dividing nu_i, the
    p-valuation of m_i is matched by some other fibre.  Tame fibres have
    nu = m, so each of their prime peaks must be matched; wild fibres
    only constrain the primes of their nu.  The walk places values in
    descending order, so an unmatched peak p^b prunes the branch as soon
    as the position drops below p^b.
    """
    wild_vals: dict[int, list[int]] = {}
    for w in wilds:
        for q, al in _factorization(w.m):
            wild_vals.setdefault(q, []).append(al)
    wild_cover = {q: max(vals) for q, vals in wild_vals.items()}
    req: dict[int, int] = {}
    for w in wilds:
        mv = dict(_factorization(w.m))
        for q, _ in _factorization(w.nu):
            v = mv[q]
            others = list(wild_vals[q])
            others.remove(v)
            if not others or max(others) < v:
                req[q] = max(req.get(q, 0), v)
    for q, b in req.items():
        if q**b > max_mult:
            return  # no tame value can match the wild peak

    top: dict[int, tuple[int, int]] = {}
    placed: list[int] = []

    def blocked(v: int) -> bool:
        # an unmatched tame peak, or an unmet wild requirement, that no
        # value <= v can reach
        for q, (b, second) in top.items():
            if b > 0 and second < b and wild_cover.get(q, 0) < b and q**b > v:
                return True
        for q, b in req.items():
            if top.get(q, (0, 0))[0] < b and q**b > v:
                return True
        return False

    def walk(v: int, slots: int):
        if blocked(v):
            return
        if v == 1:
            yield tuple(sorted(placed))
            return
        yield from walk(v - 1, slots)
        snapshot = {q: top.get(q, (0, 0)) for q, _ in _factorization(v)}
        placed_here = 0
        for k in range(1, slots + 1):
            for q, al in _factorization(v):
                b, second = top.get(q, (0, 0))
                if k >= 2 and al >= b:
                    top[q] = (al, al)
                elif al > b:
                    top[q] = (al, b)
                else:
                    top[q] = (b, max(second, al))
            placed.append(v)
            placed_here += 1
            yield from walk(v - 1, slots - k)
        del placed[len(placed) - placed_here :]
        for q, state in snapshot.items():
            top[q] = state

    yield from walk(max_mult, max_size)


def _cell_order(bounds: EnumerationBounds):
    """Cells (p, chi, t, quasi_elliptic) for the genus-zero enumeration."""
    cells = []
    for p in bounds.characteristics:
        for chi in range(bounds.max_chi_plus_t + 1):
            for t in range(bounds.max_chi_plus_t - chi + 1):
                if t > 0 and (p == 0 or not bounds.include_wild):
                    continue
                for quasi in (False, True):
                    if quasi and (
                        not bounds.include_quasi_elliptic
                        or p not in (2, 3)
                        or chi == 0  # no quasi-elliptic fibration over P^1 with chi=0
                    ):
                        continue
                    cells.append((p, chi, t, quasi))
    return cells


def _finalize(t: FibrationNumericalType) -> FibrationNumericalType:
    """Attach the existence-doubt flag for the single doubly-wild shape."""
    if (
        t.chi == 0
        and t.g == 0
        and t.r == 1
        and t.fibres[0].t == 2
    ):
        return replace(t, existence_unknown=True)
    return t


def _cell_types_material(bounds: EnumerationBounds, cell, guard: int | None):
    """Every admissible type of one cell, canonically sorted."""
    p, chi, t, quasi = cell
    found = []
    candidates = 0
    slots_total = bounds.max_fibres
    u_applies = chi == 0 and not quasi
    for wilds in _wild_combos(p, t, slots_total, bounds.max_mult):
        slots = slots_total - len(wilds)
        if u_applies:
            companions = _covered_companions(bounds.max_mult, slots, wilds)
        else:
            if guard is not None:
                est = _count_multisets_upto(bounds.max_mult, slots)
                if est > guard:
                    raise UnsupportedInputError(
                        f"cell {cell} would materialize ~{est} candidate types; "
                        "tighten the bounds or use the certified sweep"
                    )
            companions = _multisets_upto(bounds.max_mult, slots)
        for comp in companions:
            candidates += 1
            if guard is not None and candidates > guard:
                raise UnsupportedInputError(
                    f"cell {cell} exceeds the materialization guard ({guard}); "
                    "tighten the bounds or use the certified sweep"
                )
            fibres = wilds + tuple(FibreDatum.tame(m) for m in comp)
            cand = FibrationNumericalType(
                p=p, g=0, chi=chi, quasi_elliptic=quasi, fibres=fibres
            )
            if is_admissible(cand).admissible:
                found.append(_finalize(cand))
    found.sort(key=lambda x: x.sort_key)
    return found


def enumerate_types(bounds: EnumerationBounds, guard: int | None = MATERIAL_GUARD):
    """Every admissible genus-zero type within bounds, exactly once, in
    canonical order.  Raises when a cell would materialize more than
    ``guard`` candidates (default five million)."""
    for cell in _cell_order(bounds):
        yield from _cell_types_material(bounds, cell, guard)


def _enumerate_cell_worker(args):
    bounds_dict, cell, guard = args
    types = _cell_types_material(EnumerationBounds(**bounds_dict), cell, guard)
    return cell, [t.to_dict() for t in types]


def enumerate_types_parallel(
    bounds: EnumerationBounds, jobs: int = 1, guard: int | None = MATERIAL_GUARD
) -> list[FibrationNumericalType]:
    """Partitioned materialization; the result is identical for any
    ``jobs`` value (cells are independent and reassembled in order)."""
    cells = _cell_order(bounds)
    if jobs <= 1 or len(cells) <= 1:
        return list(enumerate_types(bounds, guard))
    args = [(bounds.to_dict(), cell, guard) for cell in cells]
    with multiprocessing.Pool(processes=jobs) as pool:
        results = pool.map(_enumerate_cell_worker, args)
    by_cell = dict((tuple(cell), payload) for cell, payload in results)
    out: list[FibrationNumericalType] = []
    for cell in cells:
        out.extend(
            FibrationNumericalType.from_dict(d) for d in by_cell[tuple(cell)]
        )
    return out


# ---------------------------------------------------------------------------
# the sweep


def _statement_stats(t: FibrationNumericalType):
    form = exact_form(t)
    p12 = max(0, form.value(12))
    p13 = max(0, form.value(13))
    first1 = form.first_at_least(1, 4)
    first2 = form.first_at_least(2, 8)
    stmt4 = form.eventually_at_least(14, 2)
    failed = []
    if p12 < 2:
        failed.append("stmt1")
    if first1 is None:
        failed.append("stmt2")
    if first2 is None:
        failed.append("stmt3")
    if not stmt4:
        failed.append("stmt4")
    # exact least witnesses for the extremal statistics
    n = 1
    while max(0, form.value(n)) < 1:
        n += 1
    exact_first1 = n
    n = 1
    while max(0, form.value(n)) < 2:
        n += 1
    exact_first2 = n
    return p12, p13, exact_first1, exact_first2, failed


def _materialize_certified(bounds: EnumerationBounds, cell):
    """The finitely many shapes of one cell that the class certificates do
    not cover (plus small representatives for reporting)."""
    p, chi, t, quasi = cell
    ct = chi + t
    types = []

    def add_tame(ms):
        if len(ms) <= bounds.max_fibres and all(m <= bounds.max_mult for m in ms):
            cand = FibrationNumericalType.tame_type(
                ms, p=p, chi=chi, quasi_elliptic=quasi
            )
            if is_admissible(cand).admissible:
                types.append(cand)

    def add_wild_only():
        for wilds in _wild_combos(p, t, bounds.max_fibres, bounds.max_mult):
            if not wilds:
                continue
            cand = FibrationNumericalType(
                p=p, g=0, chi=chi, quasi_elliptic=quasi, fibres=wilds
            )
            if is_admissible(cand).admissible:
                types.append(_finalize(cand))

    if ct >= 3:
        if t == 0:
            add_tame(())
        else:
            add_wild_only()
    elif (chi, t) == (0, 0):
        for ms in _multisets_upto(bounds.max_mult, min(4, bounds.max_fibres)):
            add_tame(ms)
    elif (chi, t) == (0, 1):
        slots = min(2, bounds.max_fibres - 1)
        for wilds in _wild_combos(p, t, bounds.max_fibres, bounds.max_mult):
            for comp in _multisets_upto(bounds.max_mult, slots):
                fibres = wilds + tuple(FibreDatum.tame(m) for m in comp)
                cand = FibrationNumericalType(
                    p=p, g=0, chi=chi, quasi_elliptic=quasi, fibres=fibres
                )
                if is_admissible(cand).admissible:
                    types.append(cand)
    elif (chi, t) in ((0, 2), (1, 1)):
        add_wild_only()
    elif (chi, t) == (1, 0):
        add_tame((2, 3))
        add_tame((2, 2, 2))
    elif (chi, t) == (2, 0):
        add_tame((2,))
    types.sort(key=lambda x: x.sort_key)
    return types


def _sweep_cell(
    bounds: EnumerationBounds, cell, materialize_all: bool, keep_rows: bool = False
) -> dict:
    p, chi, t, quasi = cell
    if materialize_all:
        types = _cell_types_material(bounds, cell, MATERIAL_GUARD)
    else:
        types = _materialize_certified(bounds, cell)
    labels: dict[str, int] = {}
    counterexamples = []
    replay_failures = []
    first1_max, first1_attainers = 0, []
    first2_max, first2_attainers = 0, []
    p13_low = []
    for ty in types:
        label = section4_label(ty)
        labels[label] = labels.get(label, 0) + 1
        p12, p13, f1, f2, failed = _statement_stats(ty)
        if failed:
            counterexamples.append({"type": ty.to_dict(), "failed": failed})
        rep = replay_type(ty)
        if not rep.ok:
            replay_failures.append(
                {"type": ty.to_dict(), "claims": list(rep.claim_failures)}
            )
        if f1 > first1_max:
            first1_max, first1_attainers = f1, [ty.to_dict()]
        elif f1 == first1_max:
            first1_attainers.append(ty.to_dict())
        if f2 > first2_max:
            first2_max, first2_attainers = f2, [ty.to_dict()]
        elif f2 == first2_max:
            first2_attainers.append(ty.to_dict())
        if p13 <= 1:
            p13_low.append(ty.to_dict())
    certified = []
    if not materialize_all:
        for cert in class_certificates(chi, t):
            ok = cert.statements_pass()
            entry = {
                "name": cert.name,
                "label": cert.label,
                "cell": {"p": p, "chi": chi, "t": t, "quasi_elliptic": quasi},
                "statements_ok": ok,
                "first_ge1_ceiling": cert.bound.first_at_least(1, 14),
                "first_ge2_ceiling": cert.bound.first_at_least(2, 14),
                "p13_ge_2": cert.bound.value(13) >= 2,
            }
            certified.append(entry)
            if not ok:
                counterexamples.append({"certificate": cert.name, "cell": entry["cell"]})
    rows = []
    if keep_rows:
        rows = [
            {
                "type": ty.to_dict(),
                "label": section4_label(ty),
                "series": [plurigenus(ty, n).value for n in range(1, 15)],
            }
            for ty in types
        ]
    return {
        "cell": {"p": p, "chi": chi, "t": t, "quasi_elliptic": quasi},
        "materialized": len(types),
        "labels": labels,
        "counterexamples": counterexamples,
        "replay_failures": replay_failures,
        "first1": (first1_max, first1_attainers),
        "first2": (first2_max, first2_attainers),
        "p13_le_1": p13_low,
        "certified": certified,
        "rows": rows,
    }


def _sweep_worker(args) -> dict:
    bounds_dict, cell, materialize_all, keep_rows = args
    return _sweep_cell(
        EnumerationBounds(**bounds_dict), cell, materialize_all, keep_rows
    )


def verify_all(
    bounds: EnumerationBounds,
    jobs: int = 1,
    materialize_all: bool = False,
    keep_rows: bool = False,
) -> dict:
    """Sweep all cells and aggregate.  The report is identical for any
    ``jobs`` value: cells are independent work units and the merge is
    associative and commutative, with a final canonical sort."""
    cells = _cell_order(bounds)
    args = [(bounds.to_dict(), cell, materialize_all, keep_rows) for cell in cells]
    if jobs > 1 and len(cells) > 1:
        with multiprocessing.Pool(processes=jobs) as pool:
            results = pool.map(_sweep_worker, args)
    else:
        results = [_sweep_worker(a) for a in args]
    results.sort(key=lambda r: (
        r["cell"]["p"], r["cell"]["chi"], r["cell"]["t"], r["cell"]["quasi_elliptic"]
    ))

    labels: dict[str, int] = {}
    counterexamples = []
    replay_failures = []
    certified = []
    p13_low = []
    rows = []
    total = 0
    first1_max, first1_attainers = 0, []
    first2_max, first2_attainers = 0, []
    for res in results:
        total += res["materialized"]
        for k, v in res["labels"].items():
            labels[k] = labels.get(k, 0) + v
        counterexamples.extend(res["counterexamples"])
        replay_failures.extend(res["replay_failures"])
        certified.extend(res["certified"])
        p13_low.extend(res["p13_le_1"])
        if keep_rows:
            rows.extend(res["rows"])
        f1, att1 = res["first1"]
        if f1 > first1_max:
            first1_max, first1_attainers = f1, list(att1)
        elif f1 == first1_max:
            first1_attainers.extend(att1)
        f2, att2 = res["first2"]
        if f2 > first2_max:
            first2_max, first2_attainers = f2, list(att2)
        elif f2 == first2_max:
            first2_attainers.extend(att2)

    cert_f1 = [c["first_ge1_ceiling"] for c in certified]
    cert_f2 = [c["first_ge2_ceiling"] for c in certified]
    extremes_exact = (
        all(c is not None and c <= first1_max for c in cert_f1)
        and all(c is not None and c <= first2_max for c in cert_f2)
    )
    p13_exact = all(c["p13_ge_2"] for c in certified)
    report = {
        "bounds": bounds.to_dict(),
        "mode": "material" if materialize_all else "certified",
        "counterexamples": counterexamples,
        "cases": dict(sorted(labels.items())),
        "certified_classes": certified,
        "replay_failures": replay_failures,
        "extremes": {
            "max_first_nonzero": first1_max,
            "max_first_nonzero_attainers": first1_attainers,
            "max_first_ge2": first2_max,
            "max_first_ge2_attainers": first2_attainers,
            "p13_le_1_types": p13_low,
            "exact": extremes_exact,
            "p13_list_exact": p13_exact,
        },
        "total_materialized": total,
    }
    if keep_rows:
        report["rows"] = rows
    return report


# ---------------------------------------------------------------------------
# sharp / limit cases

_PREDICATES = {
    "p123-zero": lambda v: v[1] == 0 and v[2] == 0 and v[3] == 0,
    "pn-le-1-through-7": lambda v: max(v[1:8]) <= 1,
    "p13-equals-1": lambda v: v[13] == 1,
}


def find_sharp_cases(bounds: EnumerationBounds, predicate_id: str):
    """All admissible enumerated types satisfying a named sharpness
    predicate (full materialization within the given bounds)."""
    if predicate_id not in _PREDICATES:
        raise InvalidInputError(
            f"unknown predicate {predicate_id!r}; choose from "
            f"{sorted(_PREDICATES)}"
        )
    pred = _PREDICATES[predicate_id]
    hits = []
    for ty in enumerate_types(bounds):
        form = exact_form(ty)
        values = [1] + [max(0, form.value(n)) for n in range(1, 14)]
        if pred(values):
            hits.append(ty)
    return hits
