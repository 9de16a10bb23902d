"""Case labels, branch-bound replay, and the class certificates."""

from math import lcm

import pytest

from plurigenera import (
    EnumerationBounds,
    FibrationNumericalType,
    FibreDatum,
    UnsupportedInputError,
    enumerate_types,
)
from plurigenera.cases import (
    case4_sharp_family,
    class_certificates,
    exact_form,
    form_dominates,
    replay_type,
    section4_label,
)
from plurigenera.congruence import QuasiLinearForm
from plurigenera.verifier import _cell_order, _materialize_certified


def tame(ms, chi=0, g=0, p=0, quasi=False):
    return FibrationNumericalType.tame_type(ms, p=p, g=g, chi=chi, quasi_elliptic=quasi)


SMALL = EnumerationBounds(
    max_mult=10, max_fibres=4, max_chi_plus_t=2, characteristics=(0, 2, 3)
)


class TestLabels:
    def test_partition(self):
        w1 = FibreDatum.wild_fibre(p=2, nu=2, e=1, t=1, a=1)
        w2 = FibreDatum.wild_fibre(p=2, nu=2, e=2, t=2, a=1)
        mk = lambda chi, fibres: FibrationNumericalType(
            p=2, g=0, chi=chi, quasi_elliptic=False, fibres=fibres
        )
        assert section4_label(mk(1, (w1,))) == "case1"
        assert section4_label(mk(0, (w2,))) == "case2"
        assert section4_label(mk(0, (w1, FibreDatum.tame(2)))) == "case3"
        assert section4_label(tame((2, 6, 6))) == "case4"
        assert section4_label(tame((2, 3), chi=1)) == "case3-tame"
        assert section4_label(tame((2,), chi=2)) == "easy-chi-2"
        assert section4_label(tame((), chi=3)) == "easy-large-degree"
        assert section4_label(tame((), g=1, chi=1)) == "easy-positive-genus"
        assert section4_label(tame((), g=2)) == "easy-genus-ge-2"
        assert section4_label(tame((2, 2), g=1)) == "easy-genus-1"

    def test_sharp_families(self):
        assert case4_sharp_family((2, 5, 10)) == "2-b-2b"
        assert case4_sharp_family((2, 6, 6)) == "2-2a-2a"
        assert case4_sharp_family((2, 3, 6)) is None
        assert case4_sharp_family((2, 4, 4)) is None
        assert case4_sharp_family((3, 6, 6)) is None


class TestDomination:
    def test_termwise_certificate(self):
        exact = QuasiLinearForm(1, -2, ((1, 2), (5, 6), (5, 6)))
        assert form_dominates(exact, QuasiLinearForm(1, -2, ((1, 2), (1, 2), (1, 2))))
        assert not form_dominates(exact, QuasiLinearForm(1, -2, ((5, 6), (5, 6), (5, 6))))
        assert not form_dominates(exact, QuasiLinearForm(2, -2, ()))

    def test_certificate_implies_pointwise(self):
        exact = QuasiLinearForm(1, -1, ((5, 8), (1, 2)))
        bound = QuasiLinearForm(1, -1, ((1, 2), (1, 2)))
        assert form_dominates(exact, bound)
        for n in range(0, 120):
            assert bound.value(n) <= exact.value(n)


class TestReplay:
    def test_case1_wild_alone(self):
        w = FibreDatum.wild_fibre(p=2, nu=2, e=1, t=1, a=1)
        t = FibrationNumericalType(p=2, g=0, chi=1, quasi_elliptic=False, fibres=(w,))
        rep = replay_type(t)
        assert rep.ok and rep.bound.pairs == ((1, 4),)

    def test_case4_family_bound_is_exact(self):
        rep = replay_type(tame((2, 6, 6)))
        assert rep.ok
        assert rep.bound == exact_form(tame((2, 6, 6)))

    def test_rejects_positive_genus(self):
        with pytest.raises(UnsupportedInputError):
            replay_type(tame((), g=1, chi=1))

    def test_all_enumerated_types_replay_clean(self):
        count = 0
        for t in enumerate_types(SMALL):
            rep = replay_type(t)
            assert rep.ok, (t, rep)
            count += 1
        assert count > 3000

    def test_bounds_hold_over_full_window(self):
        # belt and suspenders for the termwise certificate: numeric scan
        # over a common period of the exact form and the bound
        for t in enumerate_types(
            EnumerationBounds(max_mult=8, max_fibres=3, max_chi_plus_t=2,
                              characteristics=(0, 2))
        ):
            rep = replay_type(t)
            form = exact_form(t)
            window = lcm(form.period(), rep.bound.period())
            assert rep.bound.growth() <= form.growth()
            for n in range(1, 2 * window + 1):
                assert rep.bound.value(n) <= max(0, form.value(n))


class TestClassCertificates:
    def test_all_certificates_pass_statements(self):
        for chi in range(0, 5):
            for t in range(0, 5 - chi):
                for cert in class_certificates(chi, t):
                    assert cert.statements_pass(), cert.name

    def test_certificates_cover_everything_not_materialized(self):
        # every admissible type is either materialized by the certified
        # sweep or termwise-dominated by a certificate of its cell
        for cell in _cell_order(SMALL):
            p, chi, t, quasi = cell
            materialized = set(_materialize_certified(SMALL, cell))
            certs = class_certificates(chi, t)
            from plurigenera.verifier import _cell_types_material

            for ty in _cell_types_material(SMALL, cell, None):
                if ty in materialized:
                    continue
                assert any(
                    form_dominates(exact_form(ty), cert.bound) for cert in certs
                ), (cell, ty)
