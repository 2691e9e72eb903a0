from fractions import Fraction

import mpmath
import pytest

from fpgrover.emulator import iter_fixed, measured_l2
from fpgrover.reference import GroverParams, iter_ideal
from fpgrover.tracker import (
    ENVELOPE_CONSTANT,
    TrackerState,
    asymptotic_bounds,
    init_tracker,
    iter_tracker,
    probability_errors,
    run_tracker,
    theoretical_l2,
    tracker_iterate,
    within_envelope,
)

mpmath.mp.prec = 200


def test_init_even():
    s = init_tracker(GroverParams(2, 10, 1))
    assert (s.psi_fp_NS, s.psi_fp_S, s.eps_NS, s.eps_S) == (Fraction(1, 2), Fraction(1, 2), 0, 0)
    s = init_tracker(GroverParams(8, 16, 1))
    assert s.psi_fp_S == Fraction(1, 16) and s.eps_S == 0


def test_init_odd_n():
    s = init_tracker(GroverParams(3, 8, 1))
    assert s.psi_fp_S == Fraction(90, 256)
    expected = mpmath.mpf(2) ** -1.5 - mpmath.mpf(90) / 256  # 1.99089e-3
    assert float(s.eps_S) == pytest.approx(float(expected), rel=1e-15)
    assert 0 <= s.eps_S < Fraction(1, 256)


def test_iterate_hand_trace(n2):
    s1 = tracker_iterate(init_tracker(n2), n2)
    assert (s1.psi_fp_S, s1.psi_fp_NS, s1.eps_S, s1.eps_NS) == (1, 0, 0, 0)
    s2 = tracker_iterate(s1, n2)
    assert (s2.psi_fp_S, s2.psi_fp_NS, s2.eps_S, s2.eps_NS) == (Fraction(1, 2), Fraction(-1, 2), 0, 0)


def test_zero_error_stays_zero():
    # raw scaled sum = 2/4 - 2**-3 * (1/4 + 1/4) = 7/16, a multiple of 2**-10
    p = GroverParams(4, 10, 1)
    s = tracker_iterate(init_tracker(p), p)
    assert s.eps_NS == 0 and s.eps_S == 0
    assert (s.psi_fp_S, s.psi_fp_NS) == (Fraction(11, 16), Fraction(3, 16))


def test_probability_errors_examples(n2):
    comp = probability_errors(run_tracker(n2), n2)
    assert (comp.eps_sq_NS, comp.eps_sq_S, comp.eps_p_NS, comp.eps_p_S) == (0, 0, 0, 0)

    p = GroverParams(4, 4, 1)
    s = TrackerState(Fraction(3, 16), Fraction(3, 16), Fraction(0), Fraction(0))
    comp = probability_errors(s, p)
    assert comp.eps_sq_S == Fraction(9, 256) and comp.eps_p_S == Fraction(9, 256)

    eps = Fraction(3, 1000)
    s = TrackerState(Fraction(0), Fraction(0), eps, eps)
    comp = probability_errors(s, p)
    assert comp.eps_p_NS == eps**2 and comp.eps_p_S == eps**2


@pytest.mark.parametrize(
    "n, f, expected",
    [(8, 24, 4.459e-6), (16, 28, 1.143e-4)],
)
def test_theoretical_l2_table_points(n, f, expected):
    assert theoretical_l2(GroverParams(n, f, 1)) == pytest.approx(expected, rel=0.02)


def test_theoretical_l2_exact_zero(n2):
    assert theoretical_l2(n2) == 0.0


MIRROR_GRID = [
    (n, f, n_s)
    for n in (1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 16)
    for f in (1, 4, 8, 12, 16, 20, 28, 40)
    for n_s in (1, 2, 4)
    if n_s < 2**n
]


@pytest.mark.parametrize("n, f, n_s", MIRROR_GRID)
def test_mirror_and_reconstruction(n, f, n_s):
    p = GroverParams(n, f, n_s)
    ulp = Fraction(1, 2**f)
    ideal_exact = iter_ideal(n, n_s, exact=True, bits=p.exact_bits)
    ideal_float = iter_ideal(n, n_s)
    for tr, fx, ie, ifl in zip(iter_tracker(p), iter_fixed(p), ideal_exact, ideal_float):
        assert tr.psi_fp_S == fx.amp_fixed_S.to_fraction()
        assert tr.psi_fp_NS == fx.amp_fixed_NS.to_fraction()
        assert (tr.psi_fp_S / ulp).denominator == 1
        assert tr.reconstruct() == (ie.amp_S, ie.amp_NS)
        assert abs(float(tr.psi_fp_S + tr.eps_S) - ifl.amp_S) <= 1e-12
        assert abs(float(tr.psi_fp_NS + tr.eps_NS) - ifl.amp_NS) <= 1e-12


def test_probability_error_decomposition():
    # eps_p equals ideal probability minus truncated fixed probability, exactly
    from fpgrover.emulator import fixed_probabilities, ideal_probabilities, run_fixed

    for n, f in [(8, 16), (10, 13), (12, 28)]:
        p = GroverParams(n, f, 1)
        comp = probability_errors(run_tracker(p), p)
        pf_S, pf_NS = fixed_probabilities(run_fixed(p))
        p_S, p_NS = ideal_probabilities(p)
        assert comp.eps_p_S == p_S - pf_S
        assert comp.eps_p_NS == p_NS - pf_NS
        assert 0 <= comp.eps_sq_S < Fraction(1, 2**f)
        assert 0 <= comp.eps_sq_NS < Fraction(1, 2**f)


def test_measured_theoretical_agree():
    for n in (8, 12, 16):
        for f in range(16, 41, 3):
            p = GroverParams(n, f, 1)
            t = theoretical_l2(p)
            assert abs(measured_l2(p) - t) <= 1e-6 * t


def test_asymptotic_bounds_examples():
    env = asymptotic_bounds(GroverParams(12, 28, 1))
    assert env.l2 == 2.0**-16
    assert 7.490e-6 < env.l2
    env = asymptotic_bounds(GroverParams(8, 40, 1))
    assert env.l2 == 2.0**-32 and 4.900e-11 < env.l2
    a, b = asymptotic_bounds(GroverParams(10, 20, 1)), asymptotic_bounds(GroverParams(10, 21, 1))
    assert all(x == 2 * y for x, y in zip(a, b))


def test_envelope_holds_on_validation_grid():
    assert ENVELOPE_CONSTANT == 4
    for n in (4, 6, 8, 10, 12, 14, 16):
        for f in range(n + 1, 41, 3):
            for n_s in (1, 2, 4):
                p = GroverParams(n, f, n_s)
                assert within_envelope(run_tracker(p), p, theoretical_l2(p)), (n, f, n_s)


@pytest.mark.parametrize("n", [3, 5, 9, 13])
def test_odd_n_agreement(n):
    for f in (n + 2, 2 * n, 30):
        p = GroverParams(n, f, 1)
        t = theoretical_l2(p)
        assert abs(measured_l2(p) - t) <= 1e-9 * t
