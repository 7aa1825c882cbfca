"""Catalog model: manifest grammar, validation, round-trip, realization."""

import math

import pytest

from integra import catalog as cat
from integra import special_functions as sf
from integra.errors import ParseError, UnboundParameter, ValidationError

from oracles import simpson
import numpy as np


def by_id(rid):
    for rec in cat.builtin_catalog():
        if rec.id == rid:
            return rec
    raise AssertionError(f"missing {rid}")


REQUIRED_IDS = """
PAPER-2.11 GR-4.327.1 GR-4.327.3 GR-4.325.1 GR-4.325.4 GR-4.325.5 GR-4.325.7
GR-4.325.8 GR-4.325.12 GR-4.229.1 GR-4.229.3 GR-4.229.11 GR-4.229.5 GR-4.229.6
GR-TBL-4.213 GR-TBL-4.214 BDH-147.1 BDH-147.7 BDH-147.9 BDH-129-THM PAPER-3.47
PAPER-PRIMEPI GR-4.241.11 GR-4.247.2 GR-4.274 GR-4.275.1 GR-4.261.21 GR-4.253.1
GR-4.246 GR-4.256 GR-4.267.12 GR-4.267.14 GR-4.267.30 GR-4.267.38 GR-4.267.39
GR-3.237 PRUD-2.6.3.1 PRUD-2.6.4.1 PRUD-2.6.5.2 PRUD-2.6.19.5 PAPER-BETA
PAPER-EULER-FIRST NAHIN-4.2.6 NAHIN-C4.1 NAHIN-5.1.2 NAHIN-5.5 BRY-4.1.5.126
BRY-4.1.5.7a BRY-4.1.5.7b PAPER-ELLIPTIC-F GR-3.138.1 GR-3.138.4 GR-3.121.1
PAPER-12.1 PAPER-15.1 GR-4.382.5 PAPER-SING-1 PAPER-SING-2 PAPER-SING-3
""".split()


def test_builtin_size_and_required_ids():
    recs = cat.builtin_catalog()
    ids = {r.id for r in recs}
    assert len(recs) >= 50
    assert len(ids) == len(recs)  # unique
    missing = [r for r in REQUIRED_IDS if r not in ids]
    assert not missing, missing


def test_round_trip_identity():
    recs = cat.builtin_catalog()
    text = cat.serialize(recs)
    again = cat.load_catalog(text)
    assert recs == again
    assert cat.serialize(again) == text


def test_defaults_satisfy_constraints():
    for rec in cat.builtin_catalog():
        assert rec.check_constraints(rec.defaults()), rec.id


def test_closed_vocabulary_schema():
    for rec in cat.builtin_catalog():
        if rec.rhs_closed is not None:
            free = cat.check_closed_vocabulary(rec.rhs_closed, rec.id)
            assert free <= set(rec.defaults()), rec.id


def test_empty_manifest():
    assert cat.load_catalog("") == []
    assert cat.load_catalog("\n\n# just a comment\n") == []


def test_parse_error_reports_position():
    bad = "id: X\nsource: s\nlhs: pow(x, 1) * nosuch(1) * interval(1)\nconstraints:\ndefaults:\n"
    with pytest.raises(ParseError) as exc:
        cat.load_catalog(bad)
    assert "nosuch" in str(exc.value)
    assert "line" in str(exc.value)


def test_validation_defaults_violate_constraints():
    bad = (
        "id: X\nsource: s\nlhs: pow(x, m) * interval(1)\n"
        "rhs_closed: 1/(1+m)\nconstraints: re(m) in [2.0, 3.0]\ndefaults: m=0.5\n"
    )
    with pytest.raises(ValidationError):
        cat.load_catalog(bad)


def test_validation_requires_some_rhs():
    bad = "id: X\nsource: s\nlhs: pow(x, 1) * interval(1)\nconstraints:\ndefaults:\n"
    with pytest.raises(ValidationError):
        cat.load_catalog(bad)


def test_lookup_examples():
    rec = by_id("GR-4.325.1")
    val = cat.evaluate_closed_form(rec.rhs_closed, {})
    assert abs(val - (-math.log(2) ** 2 / 2)) < 1e-15

    rec = by_id("PAPER-BETA")
    val = cat.evaluate_closed_form(rec.rhs_closed, {"p": 3.0, "q": 4.0})
    assert abs(val - 1.0 / 60.0) < 1e-14

    rec = by_id("GR-4.267.38")
    assert rec.erratum is not None
    p = rec.defaults()
    corrected = cat.evaluate_closed_form(rec.erratum.corrected_form, p)
    published = cat.evaluate_closed_form(rec.erratum.published_form, p)
    # discrepancy is exactly log(2pq/(p+q)) at the defaults
    expected_gap = math.log(2 * 2.5 * 1.5 / 4.0)
    assert abs((corrected - published) - expected_gap) < 1e-12


def test_evaluate_closed_form_constants_and_errors():
    assert abs(cat.evaluate_closed_form(cat.parse_expr("pi"), {})
               - math.pi) < 1e-15
    val = cat.evaluate_closed_form(
        cat.parse_expr("-(sqrt(2*pi)/8)*gamma(1/4)^2"), {})
    assert abs(val - (-(math.sqrt(2 * math.pi) / 8) * math.gamma(0.25) ** 2)) < 1e-12
    val = cat.evaluate_closed_form(
        cat.parse_expr("(pi/2)*log(sqrt(2*pi)*gamma(3/4)/gamma(1/4))"), {})
    target = (math.pi / 2) * math.log(
        math.sqrt(2 * math.pi) * math.gamma(0.75) / math.gamma(0.25))
    assert abs(val - target) < 1e-13
    with pytest.raises(UnboundParameter):
        cat.evaluate_closed_form(cat.parse_expr("gamma(q)"), {})


def test_realize_integrand_pointwise():
    # x^(m-1)(-log x)^k/(1+c x^b) at m=1, k=1, c=1, b=2, x=0.5
    spec = cat._parse_factor_list(
        "pow(x, m-1) * logpow(1, k) * binom(c, b, -1) * interval(1)", 0)
    handle = cat.realize_integrand(spec, {"m": 1.0, "k": 1.0, "c": 1.0, "b": 2.0})
    got = handle.evaluate(0.5)
    expected = (-math.log(0.5)) / 1.25
    assert abs(got - expected) < 1e-15

    # log(-log x) at x = e^{-1} evaluates to log(1) = 0
    spec = cat._parse_factor_list("loglogrecip(1) * interval(1)", 0)
    handle = cat.realize_integrand(spec, {})
    assert abs(handle.evaluate(math.exp(-1.0))) < 1e-14

    # Bessel factor pointwise against the series oracle J0(0.6)
    j0 = sum((-1) ** l * (0.3) ** (2 * l) / (math.factorial(l) ** 2)
             for l in range(20))
    spec = cat._parse_factor_list("besselj(0, 1) * interval(1)", 0)
    handle = cat.realize_integrand(spec, {})
    assert abs(handle.evaluate(0.6) - j0) < 1e-13


def test_realize_carries_singular_points():
    rec = by_id("PAPER-SING-1")
    handle = cat.realize_integrand(rec.lhs, rec.defaults())
    assert handle.singular_points == [0.5]


def test_principal_branch_of_nested_log():
    rec = by_id("PAPER-SING-1")
    handle = cat.realize_integrand(rec.lhs, {})
    # past the branch point the integrand picks up +i pi times the factor
    v = handle.evaluate(0.75)
    assert v.imag > 0


def test_prime_pi_record_interval():
    rec = by_id("PAPER-PRIMEPI")
    lo, hi = cat.realized_interval(rec.lhs, {})
    assert (lo, hi) == (2.0, 10.0)
    handle = cat.realize_integrand(rec.lhs, {})
    # matches 1/log x pointwise
    assert abs(handle.evaluate(5.0) - 1 / math.log(5.0)) < 1e-15
    # closed form agrees with the Simpson oracle of the defining integral
    closed = cat.evaluate_closed_form(rec.rhs_closed, {})
    oracle = simpson(lambda x: 1 / np.log(x), 2.0, 10.0, 200_000)
    assert abs(closed.real - oracle) < 1e-10
    assert abs(closed.imag) < 1e-12


def test_erratum_records_flagged():
    flagged = {r.id for r in cat.builtin_catalog() if r.erratum is not None}
    assert flagged == {"GR-4.267.30", "GR-4.267.38", "PRUD-2.6.5.2"}


def test_derivative_closed_forms_get_relaxed_tolerance():
    rec = by_id("PAPER-FIG1")
    assert rec.uses_derivative_closed_form
    assert rec.tolerance == 1e-6


def test_sampling_boxes_exposed():
    rec = by_id("PAPER-BETA")
    boxes = rec.sampling_boxes()
    names = {n for _, n, _, _ in boxes}
    assert names == {"p", "q"}
