from fractions import Fraction as F
from math import factorial

import mpmath
import pytest
from hypothesis import given, strategies as st

from enumseq.asympk import DecimalSequence, extract_coefficients
from enumseq.core import BigDecimal
from enumseq.derivation import (LOG_CONSTANT, GaussWeightedPoly, convert_D_to_n, convert_to_2n_form, derive,
                                gaussian_moment, integrand_expansion, log_form, log_phi_expansion,
                                vn_asymptotic_D)
from enumseq.lines import v_defn

A_PRINTED = [F(1), F(-9, 4), F(969, 160), F(-61479, 3200), F(25225773, 358400),
             F(-10092025737, 35840000), F(2271842858513, 2007040000), F(-4442983688169, 1146880000)]


def test_log_phi_rows():
    t = log_phi_expansion(3, 5)
    assert t[1] == {1: F(-1, 3), -1: F(1, 3)}
    assert t[2] == {1: F(1, 5), -1: F(-1, 3), -3: F(2, 15)}
    assert max(t[3]) == 1 and t[3][1] == F(-1, 7)
    assert t[3][-1] == F(1, 3)


def test_log_phi_matches_direct_sum():
    # the row for t^{2j} against the defining odd-power sum at a few odd D
    t = log_phi_expansion(3, 12)
    for D in (5, 7, 9):
        for j in (1, 2, 3):
            direct = F((-1) ** (j - 1), j) * sum(F(r ** (2 * j), D ** (2 * j)) - 1 for r in range(1, D + 1, 2))
            assert sum(c * F(D) ** e for e, c in t[j].items()) == direct


def test_log_phi_rejects_bad_args():
    with pytest.raises(ValueError):
        log_phi_expansion(0, 3)


def test_integrand_terms():
    g = integrand_expansion(3)
    assert g[0].in_x() == {2: 1}
    assert g[1].in_x() == {6: F(1, 5), 4: -2}
    assert g[2].in_x() == {10: F(1, 50), 8: F(-19, 35), 6: 3, 4: F(1, 3)}
    assert g[3].in_x() == {14: F(1, 750), 12: F(-12, 175), 10: F(314, 315), 8: F(-59, 15), 6: -1}


def test_integrand_order_seven_extremes():
    top = integrand_expansion(7)[7].in_x()
    assert top[30] == F(1, 393750000)
    assert top[28] == F(-11, 19687500)
    assert top[10] == F(355, 162)
    assert top[8] == F(2, 45)
    assert min(top) == 8 and len(top) == 12


def test_gaussian_moment_values():
    assert [gaussian_moment(m) for m in range(3)] == [1, F(3, 2), F(27, 4)]


@given(st.integers(0, 40))
def test_gaussian_moment_recurrence(m):
    assert gaussian_moment(m + 1) / gaussian_moment(m) == F(3, 4) * (2 * m + 1) * (2 * m + 2) / (m + 1)


def test_gaussian_moment_quadrature():
    mpmath.mp.dps = 30
    for m in range(5):
        num = mpmath.quad(lambda x: mpmath.e ** (-x * x / 3) * x ** (2 * m), [-mpmath.inf, mpmath.inf])
        ref = num / mpmath.sqrt(3 * mpmath.pi)
        q = gaussian_moment(m)
        assert abs(ref - mpmath.mpf(q.numerator) / q.denominator) < mpmath.mpf(10) ** -20


def test_weighted_poly_integrates():
    assert GaussWeightedPoly(integrand_expansion(0)[0].poly).integrate() == F(3, 2)


def test_D_coefficients():
    a = vn_asymptotic_D(7)
    assert list(a.coeffs) == A_PRINTED
    assert a.order == 7 and a[0] == 1


def test_n_form():
    assert convert_D_to_n(vn_asymptotic_D(4), 4) == [F(-9, 8), F(-111, 640), F(-9999, 25600), F(87261, 5734400)]


def test_2n_form():
    assert convert_to_2n_form(vn_asymptotic_D(4), 4) == [F(15, 8), F(1689, 640), F(79281, 25600),
                                                          F(19691853, 5734400)]


def test_log_form():
    L = log_form(4)
    assert (L.slope, L.log_coeff) == (2, -4)
    assert L.tail == [F(11, 6), F(141, 160), F(9973, 28800), F(59673, 179200)]
    assert L.constant == LOG_CONSTANT
    # C = -3 - log pi - (3/2) log(8/3)
    assert (L.constant.unit, L.constant.log2, L.constant.log3, L.constant.logpi) == (-3, F(-9, 2), F(3, 2), -1)


def test_derive_dispatch():
    assert derive("D", 2) == [F(-9, 4), F(969, 160)]
    assert derive("n", 1) == [F(-9, 8)]
    assert derive("2n", 1) == [F(15, 8)]
    assert derive("log", 2).tail == [F(11, 6), F(141, 160)]
    with pytest.raises(ValueError):
        derive("x", 3)
    with pytest.raises(ValueError):
        derive("D", 0)


def test_log_json_shape():
    doc = log_form(2).to_json()
    assert doc["form"] == "log" and doc["coefficients"] == ["11/6", "141/160"]
    assert doc["slope"] == "2" and doc["log_coeff"] == "-4"


def _D_model_relerr(n, a):
    mpmath.mp.dps = 80
    D = mpmath.mpf(2 * n - 3)
    model = mpmath.sqrt(27 / mpmath.pi) * D ** (D - mpmath.mpf(1) / 2) * sum(
        mpmath.mpf(c.numerator) / c.denominator * D ** -j for j, c in enumerate(a))
    return abs(model / v_defn(n) - 1)


def test_D_form_numeric_consistency():
    a = vn_asymptotic_D(7).coeffs
    errs = [_D_model_relerr(n, a) for n in (50, 100, 200)]
    assert errs[0] / errs[1] >= 2 ** 7
    assert errs[1] / errs[2] >= 2 ** 7


def test_log_form_against_direct():
    n = 300
    M = 8
    L = log_form(M)
    omitted = abs(log_form(M + 1).tail[M]) / F(n) ** (M + 1)
    mpmath.mp.dps = 80
    direct = mpmath.log(mpmath.mpf(v_defn(n))) - mpmath.loggamma(2 * n + 1)
    model = mpmath.mpf(str(L.evaluate(n, 70)))
    assert abs(direct - model) < 2 * mpmath.mpf(omitted.numerator) / omitted.denominator


def test_log_form_constant_numeric():
    # the printed form of C against the evaluated symbolic constant
    mpmath.mp.dps = 50
    C = -3 - mpmath.log(mpmath.pi) - mpmath.mpf(3) / 2 * mpmath.log(mpmath.mpf(8) / 3)
    assert abs(mpmath.mpf(str(LOG_CONSTANT.evaluate(45))) - C) < mpmath.mpf(10) ** -40


def test_derived_matches_extrapolated():
    # log(v_n/(2n)!) - 2n + 4 log n, extrapolated from exact v_n
    mpmath.mp.dps = 80
    N = 200
    vals = []
    for n in range(2, N + 1):
        x = mpmath.log(mpmath.mpf(v_defn(n))) - mpmath.loggamma(2 * n + 1) - 2 * n + 4 * mpmath.log(n)
        vals.append(mpmath.nstr(x, 70, strip_zeros=False))
    s = DecimalSequence.from_function(lambda n: vals[n - 2], 2, N, 60)
    m = extract_coefficients(s, 8, 3)
    L = log_form(3)
    want = [LOG_CONSTANT.evaluate(60).to_fraction()] + L.tail
    for c, d, w in zip(m.coefficients, m.digits, want):
        assert d >= 5
        assert abs(c.to_fraction() - w) < F(1, 10 ** (d - 1))
