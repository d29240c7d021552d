import math

import pytest

from rfcalc.elementary import exp_construct, log_construct
from rfcalc.errors import HypothesisViolation, InvalidArgumentError
from rfcalc.theorems import (
    CSV_HEADER,
    CheckReport,
    check_parts,
    check_u_sub,
    derivative_table_check,
    ftc_forward_check,
    ftc_reverse_check,
    functional_equation_check,
    make_report,
    product_chain_check,
    reports_to_csv,
    run_catalog,
    substitution_showcases,
)


def test_make_report_pass_and_fail():
    good = make_report("x", 1.0, 1.0 + 1e-9, 1e-6, "a")
    bad = make_report("x", 1.0, 1.1, 1e-6, "a")
    assert good.passed and not bad.passed
    assert bad.abs_diff == pytest.approx(0.1)


def test_csv_header_and_shape():
    rows = [make_report("demo", 1.0, 2.0, 0.5, "lhs = rhs")]
    text = reports_to_csv(rows)
    lines = text.splitlines()
    assert lines[0] == CSV_HEADER
    assert lines[1] == "demo,1,2,1,0.5,false,lhs = rhs"


def test_csv_is_deterministic():
    rows = run_catalog(1e-4, name_filter="cube")
    assert reports_to_csv(rows) == reports_to_csv(rows)


def test_catalog_filter_selects_subset():
    rows = run_catalog(1e-4, name_filter="arcsin")
    names = [r.name for r in rows]
    assert names == sorted(names)
    assert names and all("arcsin" in n for n in names)


def test_catalog_names_are_sorted_and_unique(catalog_run):
    reports, _ = catalog_run
    names = [r.name for r in reports]
    assert names == sorted(names)
    assert len(names) == len(set(names))


def test_catalog_all_pass_at_default_tolerance(catalog_run):
    reports, _ = catalog_run
    assert len(reports) >= 24
    failing = [r.name for r in reports if not r.passed]
    assert failing == []


def test_catalog_anchors_are_csv_safe(catalog_run):
    reports, _ = catalog_run
    assert all("," not in r.anchor for r in reports)


def test_derivative_table_all_pass(table_reports):
    assert len(table_reports) == 14
    assert all(r.passed for r in table_reports)
    names = {r.name for r in table_reports}
    assert "deriv-exp" in names and "deriv-arcsin" in names


def test_product_and_chain_rules():
    rows = product_chain_check(1e-5)
    assert [r.name for r in rows] == ["product-rule", "chain-rule"]
    assert all(r.passed for r in rows)


def test_u_sub_accepts_honest_triple():
    # u = t^2 with du = 2t dt over [0, 1]
    rep = check_u_sub(
        lambda u: 1.0 / (1.0 + u * u),
        lambda t: t * t,
        lambda t: 2.0 * t,
        0.0,
        1.0,
        1e-7,
    )
    assert rep.passed
    assert rep.abs_diff <= 1e-7


def test_u_sub_rejects_wrong_inner_derivative():
    # G(t) = t^2 but claimed g(t) = 2t + 0.01t drifts from G'
    with pytest.raises(HypothesisViolation) as err:
        check_u_sub(
            lambda u: u,
            lambda t: t * t,
            lambda t: 2.0 * t + 0.01 * t,
            0.0,
            1.0,
            1e-7,
        )
    assert "drifts" in str(err.value)
    assert 0.0 < err.value.point < 1.0


def test_parts_accepts_polynomial_pair():
    rep = check_parts(
        lambda t: t,
        lambda t: 1.0,
        lambda t: t * t / 2.0,
        lambda t: t,
        0.0,
        2.0,
        1e-7,
    )
    assert rep.passed


def test_parts_rejects_fake_antiderivative():
    with pytest.raises(HypothesisViolation):
        check_parts(
            lambda t: t,
            lambda t: 1.0,
            lambda t: t * t,  # claims derivative t but it is 2t
            lambda t: t,
            0.0,
            2.0,
            1e-7,
        )


def test_showcases_pass_and_names():
    rows = substitution_showcases(1e-6)
    assert [r.name for r in rows] == [
        "usub-arctan",
        "usub-identity",
        "usub-half-log",
        "parts-log",
        "parts-tt",
        "parts-arctan",
    ]
    assert all(r.passed for r in rows)


def test_ftc_forward_on_cos():
    rep = ftc_forward_check(math.cos, 0.0, 1.5, 16, 2.0 ** -13, 1e-5)
    assert rep.name == "ftc-forward"
    assert rep.passed
    assert rep.abs_diff < 1e-6


def test_ftc_forward_validates_step():
    with pytest.raises(InvalidArgumentError, match="too large"):
        ftc_forward_check(math.cos, 0.0, 1.0, 100, 0.5, 1e-5)


def test_ftc_reverse_three_pairs():
    cases = [
        (math.sin, math.cos, 0.0, 1.2),
        (lambda t: t ** 4 / 4.0, lambda t: t ** 3, 0.0, 2.0),
        (lambda t: exp_construct(t, 1e-13), lambda t: exp_construct(t, 1e-13), -1.0, 1.0),
    ]
    for big_g, dg, a, b in cases:
        rep = ftc_reverse_check(big_g, dg, a, b, 1e-6)
        assert rep.passed, rep


def test_functional_equation_is_seeded():
    a = functional_equation_check(7)
    b = functional_equation_check(7)
    c = functional_equation_check(8)
    assert a == b
    assert a.passed
    # a different seed samples different pairs
    assert (a.lhs, a.rhs) != (c.lhs, c.rhs)


def test_functional_equation_tight():
    rep = functional_equation_check(42)
    assert rep.abs_diff <= 3e-12


def test_report_is_frozen():
    rep = make_report("demo", 0.0, 0.0, 1.0, "")
    assert isinstance(rep, CheckReport)
    with pytest.raises(AttributeError):
        rep.passed = False


def test_log_closed_forms_agree_with_quadrature():
    # spot check one catalog identity by hand: integral of 1/t over [1, 4]
    # against the certified log, oracle value log 4 = 1.3862943611198906
    approx = log_construct(4.0, 1e-13)
    assert approx.value == pytest.approx(1.3862943611198906, abs=1e-12)
