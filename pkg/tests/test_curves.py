from decimal import Decimal
from fractions import Fraction as F
from math import factorial

import pytest

from enumseq.asympk import DecimalSequence, variant_III
from enumseq.core import BigDecimal
from enumseq.core.bignum import _ctx
from enumseq.core.series import TruncatedSeries
from enumseq.curves import (extract_instantons, inverse_mirror_map, kontsevich, kontsevich_term, lambert_rebuild,
                            mirror_map, nd_asymptotics, nd_congruence_report, nd_log_sequence,
                            picard_fuchs_solutions, qd_congruence_report, yukawa_series)

A_REF = "0.138009346634518656829562628891755541716014121072"
B0_REF = "6.0358078488159024106383768720948935"
B1_REF = "-2.2352424409362074"
B2_REF = "0.054313787925"


def test_first_values():
    n = kontsevich(4)
    assert n.values == (1, 1, 12, 620)
    assert n[4] == 620
    with pytest.raises(IndexError):
        n[5]


def test_d2_bracket():
    assert kontsevich_term([0, 1], 2, 1) == 1


def test_reverse_order_agrees():
    assert kontsevich(60).values == kontsevich(60, reverse=True).values


def test_positive_and_growing():
    v = kontsevich(80).values
    assert all(x > 0 for x in v)
    assert all(a < b for a, b in zip(v[2:], v[3:]))


def test_bad_dmax():
    with pytest.raises(ValueError):
        kontsevich(0)
    with pytest.raises(ValueError):
        nd_congruence_report(5)


def test_nd_report_at_60():
    reps = {r.part: r for r in nd_congruence_report(60)}
    for name in ("nd.pow2.l1", "nd.pow2.l3", "nd.pow2.l5", "nd.mod3.zero", "nd.mod3.one", "nd.mod6.four",
                 "nd.mod3.alternating", "nd.mod5", "nd.mod25"):
        assert reps[name].passed, name
    assert not any(r.asserted for r in reps.values())


def test_nd_report_strict_and_specifics():
    reps = {r.part: r for r in nd_congruence_report(40, strict=True)}
    assert all(r.asserted for r in reps.values())
    n = kontsevich(40)
    assert n[2] % 2 == 1 and n[8] % 3 == 1
    assert all(n[d] % 5 == 0 for d in range(9, 41))


def test_regularity_reports():
    reps = {r.part: r for r in nd_congruence_report(300)}
    for p in (7, 13, 19):
        r = reps[f"nd.regular.mod{p}"]
        assert r.passed, p
        assert r.details["periodic_from"] <= p


def test_picard_fuchs():
    y0, y1 = picard_fuchs_solutions(3)
    assert y0[0] == 1 and y0[1] == 120
    assert y1[0] == 0 and y1[1] == 770


def test_mirror_map_and_inverse():
    N = 10
    q = mirror_map(N)
    assert q[0] == 0 and q[1] == 1 and q[2] == 770
    x = inverse_mirror_map(N)
    assert x[1] == 1 and x[2] == -770
    assert q.compose(x) == TruncatedSeries.variable(N)
    assert x.compose(q) == TruncatedSeries.variable(N)


def test_yukawa_head():
    Y = yukawa_series(4)
    assert [Y[i] for i in range(3)] == [5, 2875, 4876875]


def test_instantons():
    q = extract_instantons(20)
    assert q[1] == 2875 and q[2] == 609250
    assert q[2] == F(4876875 - 2875, 8)
    assert all(q.integral)
    assert lambert_rebuild(q.values, 20) == yukawa_series(20)


def test_qd_report_at_16():
    reps = {r.part: r for r in qd_congruence_report(16)}
    assert reps["qd.even"].passed
    assert reps["qd.mod25"].passed and reps["qd.mod5"].passed
    assert reps["qd.no_zero_row32"].passed
    with pytest.raises(ValueError):
        qd_congruence_report(8)


def test_nd_log_sequence():
    s = nd_log_sequence(5, 40)
    assert abs(float(s[1].to_fraction()) - (-0.6931471805599453)) < 1e-15
    assert abs(float(s[4].to_fraction()) - float(Decimal(620 / factorial(11)).ln())) < 1e-12


def _ag(x: BigDecimal, ref: str) -> int:
    return x.agreeing_digits(BigDecimal.parse(ref, 60))


def test_lambda_from_variant_III():
    n = kontsevich(200)
    P = 60
    A = Decimal(A_REF)
    vals = []
    c = _ctx(P + 20)
    for d in range(1, 201):
        vals.append(c.divide(c.divide(Decimal(n[d]), Decimal(factorial(3 * d - 1))), c.power(A, d)))
    s = DecimalSequence(1, [_ctx(P).plus(v) for v in vals], P)
    m = variant_III(s, 8, 1)
    assert m.leading["lambda"].agreeing_digits(BigDecimal.of(F(-7, 2), P)) >= 6


@pytest.mark.slow
def test_nd_asymptotics():
    r = nd_asymptotics(300, 60)
    assert _ag(r.A, A_REF) >= 15
    assert _ag(r.B0, B0_REF) >= 10
    assert _ag(r.B1, B1_REF) >= 8
    assert _ag(r.B2, B2_REF) >= 6
    assert r.model.leading_digits["B"] >= 15
    assert set(r.to_json()) == {"A", "B0", "B1", "B2", "model"}
