"""Exceptional classes: Diophantine checks, certification, obstructions."""

from fractions import Fraction

import pytest

from sympstairs.classes import (
    ExceptionalClass,
    certification_trace,
    certify,
    check_dio_ball,
    check_dio_polydisc,
    closed_form_mu_E,
    closed_form_mu_F,
    enumerate_dio_solutions,
    error_report,
    gen_E,
    gen_F,
    gen_G,
    intersection_product,
    obstruction_mu,
    psi_push,
    real_b_obstructions,
)
from sympstairs.cremona import is_terminal_exceptional
from sympstairs.curve import volume_bound
from sympstairs.numbers import sign


def brute_force_solutions(d, e, max_len):
    """Oracle: unconstrained recursive search for solutions of the polydisc
    Diophantine system, non-increasing positive entries."""
    lin = 2 * (d + e) - 1
    quad = 2 * d * e + 1
    found = []

    def rec(prefix, cap, lin_left, quad_left):
        if lin_left == 0 and quad_left == 0:
            found.append(tuple(prefix))
            return
        if len(prefix) == max_len or lin_left <= 0 or quad_left <= 0:
            return
        for m in range(min(cap, lin_left), 0, -1):
            if m * m <= quad_left:
                rec(prefix + [m], m, lin_left - m, quad_left - m * m)

    if lin >= 0:
        rec([], lin, lin, quad)
    return found


# -- Diophantine systems --------------------------------------------------------


def test_check_dio_polydisc_examples():
    assert check_dio_polydisc(6, 3, (3,) + (2,) * 7)
    assert check_dio_polydisc(10, 5, (4,) * 6 + (1,) * 5)
    assert not check_dio_polydisc(2, 1, (2, 2))


def test_check_dio_ball_examples():
    assert check_dio_ball(0, (-1,))  # the terminal pattern solves the system
    assert check_dio_ball(1, (1, 1))
    assert check_dio_ball(2, (1, 1, 1, 1, 1))
    assert not check_dio_ball(2, (2, 1))


# -- psi push --------------------------------------------------------------------


def test_psi_push_examples():
    v = psi_push(5, 1, (1,) * 11)  # E_5 -> (5; 4, 0, 1^10)
    assert v.head == 5
    assert v.sorted().trimmed().tail == (4,) + (Fraction(1),) * 10
    f1 = psi_push(2, 2, (2, 1, 1, 1, 1, 1))
    assert f1.head == 2
    assert f1.sorted().trimmed().tail == (Fraction(1),) * 5
    e0 = psi_push(1, 0, (1,))
    assert e0.head == 0 and tuple(e0.tail) == (0, -1)
    assert e0.basis == "homology"


def test_psi_push_requires_sorted_m():
    with pytest.raises(ValueError):
        psi_push(2, 2, (1, 2))


def test_psi_transport_of_diophantine_system():
    # every polydisc solution maps to a ball solution
    cases = []
    for d in range(0, 12):
        for e in range(0, 5):
            cases += [(d, e, m) for m in enumerate_dio_solutions(d, e, 2 * (d + e) + 1)]
    for n in range(1, 21):
        cases.append((n, 1, gen_E(n).m))
        cases.append((n * (n + 1), n + 1, gen_F(n).m))
    assert len(cases) > 100
    for d, e, m in cases:
        assert check_dio_polydisc(d, e, m)
        v = psi_push(d, e, m)
        assert check_dio_ball(int(v.head), [int(t) for t in v.tail])


# -- families ---------------------------------------------------------------------


def test_family_shapes():
    assert (gen_E(5).d, gen_E(5).e, gen_E(5).m) == (5, 1, (1,) * 11)
    assert (gen_F(2).d, gen_F(2).e, gen_F(2).m) == (6, 3, (3,) + (2,) * 7)
    assert (gen_G(2).d, gen_G(2).e, gen_G(2).m) == (10, 5, (4,) * 6 + (1,) * 5)
    assert gen_E(0).m == (1,)


def test_families_certify_with_expected_move_counts():
    for n in range(0, 31):
        c = gen_E(n)
        assert c.certified
        assert certification_trace(c).step_count == n
    for n in range(1, 31):
        c = gen_F(n)
        assert c.certified
        expected = 2 if n == 1 else 2 * n + 1
        assert certification_trace(c).step_count == expected
    for b in range(1, 21):
        assert gen_G(b).certified


def test_certify_rejects_non_exceptional():
    with pytest.raises(ValueError):
        certify(ExceptionalClass(2, 1, (2, 2)))


# -- obstruction function ----------------------------------------------------------


def test_obstruction_examples():
    assert obstruction_mu(gen_F(2), 2, 8) == Fraction(17, 12)
    for a in (1, Fraction(7, 3), 12, 100):
        assert obstruction_mu(gen_E(0), 3, a) == 1
    assert obstruction_mu(gen_G(2), 2, Fraction(25, 4)) == Fraction(5, 4)


def test_closed_forms_match_spot_values():
    assert closed_form_mu_E(4, 1, 11) == Fraction(11, 9)
    assert closed_form_mu_F(3, 10) == Fraction(31, 24)
    assert closed_form_mu_F(2, 8) == Fraction(17, 12)


def test_closed_forms_domain_errors():
    with pytest.raises(ValueError):
        closed_form_mu_E(2, 3, 11)  # k > floor(sqrt(2b))
    with pytest.raises(ValueError):
        closed_form_mu_E(2, 1, 3)  # a below 2b+2k
    with pytest.raises(ValueError):
        closed_form_mu_F(2, 5)  # a below 2b+3


def test_closed_forms_agree_with_obstruction_mu():
    for b in (2, 3, 5):
        for k in range(0, 3):
            if k * k > 2 * b:
                continue
            lo = 2 * b + 2 * k
            for i in range(100):
                a = Fraction(lo) + Fraction(i, 50)  # sweeps rising and flat branch
                assert closed_form_mu_E(b, k, a) == obstruction_mu(gen_E(b + k), b, a)
        for i in range(100):
            a = Fraction(2 * b + 3) + Fraction(i, 50)
            assert closed_form_mu_F(b, a) == obstruction_mu(gen_F(b), b, a)


def test_real_b_obstruction_list():
    # b = 5/2 at a = 7: E_3 is binding with 14/11; E_2 is on its flat branch
    vals = dict(real_b_obstructions(Fraction(5, 2), 7))
    assert vals["E0"] == 1
    assert vals["E2"] == Fraction(10, 9)
    assert vals["E3"] == Fraction(14, 11)
    assert vals["E4"] == Fraction(14, 13)
    assert not any(k.startswith("F") for k in vals)  # eps = 1/2 outside the window

    # integer b = 2 at a = 8: F_2 contributes 17/12 (eps = 0 is inside)
    vals = dict(real_b_obstructions(2, 8))
    assert vals["F2"] == Fraction(17, 12)
    assert set(vals) == {"E0", "E2", "E3", "E4", "F2"}

    # b = 13/2: classes E_6..E_10, no F (eps = 1/2 outside (-6/49, 1/8))
    vals = dict(real_b_obstructions(Fraction(13, 2), 20))
    assert set(vals) == {"E0", "E6", "E7", "E8", "E9", "E10"}


# -- error vector -------------------------------------------------------------------


def test_error_report_examples():
    # E_{b+k} at the step edge lies above the volume
    rep = error_report(gen_E(2), 2, 5)
    assert rep.obstructive and sign(rep.eps_inner_w) > 0

    # E_0 at a = 2b: equality with the volume, not obstructive
    rep = error_report(gen_E(0), 2, 4)
    assert not rep.obstructive and sign(rep.eps_inner_w) == 0

    # F_2 at beta_2 = 8 + 1/36: value meets the volume exactly
    rep = error_report(gen_F(2), 2, Fraction(289, 36))
    assert not rep.obstructive and sign(rep.eps_inner_w) == 0


def test_error_report_obstructive_equivalence_and_filter():
    classes = [gen_E(n) for n in range(0, 7)] + [gen_F(n) for n in (1, 2, 3)] + [gen_G(2)]
    for b in (2, 3):
        for i in range(1, 40):
            a = Fraction(4 * i + 1, 4)
            vol = volume_bound(b, a)
            for c in classes:
                rep = error_report(c, b, a)
                mu = obstruction_mu(c, b, a)
                assert rep.obstructive == (sign(mu - vol) > 0)
                if rep.obstructive:
                    h = rep.h
                    assert h * h < 2 * b
                    assert sign(rep.eps_norm_sq - (1 - h * h / Fraction(2 * b))) < 0


# -- enumeration ---------------------------------------------------------------------


def test_enumerate_examples():
    assert enumerate_dio_solutions(1, 0) == [(1,)]
    assert enumerate_dio_solutions(4, 1, 9) == [(1,) * 9]
    assert (3,) + (2,) * 7 in enumerate_dio_solutions(6, 3, 17)


def test_enumerate_against_brute_force():
    for d in range(0, 8):
        for e in range(0, 4):
            max_len = 2 * (d + e) + 1
            got = sorted(enumerate_dio_solutions(d, e, max_len))
            want = sorted(brute_force_solutions(d, e, max_len))
            assert got == want, (d, e)


def test_enumerate_max_tail_from_target_a():
    # max_tail defaults to the flat length of the weight expansion of a
    sols = enumerate_dio_solutions(4, 1, a=Fraction(17, 2))
    assert sols == [(1,) * 9]  # l(17/2) = 10 >= 9 admits the solution
    assert enumerate_dio_solutions(4, 1, a=5) == []  # l(5) = 5 < 9 excludes it


# -- intersection products -------------------------------------------------------------


def test_intersection_examples():
    assert intersection_product(gen_G(2), gen_F(2)) == 4
    for n in (1, 2, 5):
        assert intersection_product(gen_E(n), gen_E(n)) == -1
        assert intersection_product(gen_E(0), gen_E(n)) == 0


def test_selfintersection_and_chern_of_certified():
    family = (
        [gen_E(n) for n in range(0, 21)]
        + [gen_F(n) for n in range(1, 21)]
        + [gen_G(b) for b in range(1, 21)]
    )
    for c in family:
        assert intersection_product(c, c) == -1
        assert sum(c.m) == 2 * (c.d + c.e) - 1


def test_pairwise_positivity():
    family = (
        [gen_E(n) for n in range(0, 21)]
        + [gen_F(n) for n in range(1, 21)]
        + [gen_G(b) for b in range(1, 21)]
    )
    for i, c1 in enumerate(family):
        for c2 in family[i + 1 :]:
            if (c1.d, c1.e, c1.m) == (c2.d, c2.e, c2.m):
                continue
            assert intersection_product(c1, c2) >= 0, (str(c1), str(c2))


def test_terminal_check_on_certification():
    trace = certification_trace(gen_G(2))
    assert is_terminal_exceptional(trace.final)
