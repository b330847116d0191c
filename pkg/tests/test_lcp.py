from __future__ import annotations

import json

import pytest

from groupcodes import (
    BUDGET_EXCEEDED,
    UNDEFINED,
    GroupAlgebra,
    GroupCode,
    LcpReport,
    VerificationError,
    check_idempotent,
    code_right_ideal,
    code_two_sided,
    field_make,
    group_cyclic,
    group_dihedral,
    idempotent_sweep,
    lcp_analyze,
    lcp_check,
    lcp_split_unity,
    lcp_uniqueness_check,
    lcp_verify_theorem,
    sweep,
)
from groupcodes.lcp import distances_agree, security_parameter

from conftest import brute_idempotents


def pair(e):
    return code_right_ideal([e.algebra.one - e]), code_right_ideal([e])


def test_lcp_check_examples(c7, d14, d14_e):
    assert lcp_check(*pair(d14_e))
    assert lcp_check(GroupCode.full(c7), GroupCode.zero(c7))
    c = code_right_ideal([c7.parse("1+a")])
    assert not lcp_check(c, c)
    assert not lcp_check(GroupCode.zero(c7), GroupCode.zero(c7))
    with pytest.raises(ValueError):
        lcp_check(GroupCode.full(c7), GroupCode.zero(d14))


def test_split_unity_recovers_idempotent(d14, d14_e):
    f, e = lcp_split_unity(*pair(d14_e))
    assert e == d14_e
    assert f == d14.one - d14_e
    assert str(f) == "a+a^2+a^4+b+a^2*b+a^5*b+a^6*b"
    assert lcp_split_unity(*pair(d14_e)) == (f, e)


def test_split_unity_c7(c7):
    e = c7.parse("a+a^2+a^4")
    f, got = lcp_split_unity(*pair(e))
    assert got == e and f == c7.parse("1+a+a^2+a^4")
    with pytest.raises(ValueError):
        lcp_split_unity(GroupCode.full(c7), GroupCode.full(c7))


def test_split_requires_right_ideals(c7):
    left = GroupCode.from_vectors(c7, [(1, 0, 0, 0, 0, 0, 0)])
    rest = GroupCode.from_vectors(c7, [tuple(int(i == j) for j in range(7)) for i in range(1, 7)])
    assert lcp_check(left, rest)
    with pytest.raises(ValueError, match="right ideals"):
        lcp_split_unity(left, rest)
    report = lcp_analyze(left, rest)
    assert report.is_lcp and report.e is None and report.theorem_holds is None


def test_analyze_dihedral7(d14_e):
    report = lcp_analyze(*pair(d14_e))
    assert report.is_lcp
    assert (report.dim_c, report.dim_d) == (8, 6)
    assert report.e_idempotent and not report.e_central
    assert report.dual_formula_holds
    assert report.theorem_holds is False
    assert (report.dist_c, report.dist_dperp) == (2, 3)
    assert report.distances_agree is False
    assert report.security_parameter == 2
    assert report.c_sidedness.right and not report.c_sidedness.two_sided


def test_report_roundtrip(d14, d14_e):
    report = lcp_analyze(*pair(d14_e))
    doc = json.loads(json.dumps(report.to_dict()))
    assert LcpReport.from_dict(doc, d14) == report


def test_analyze_budget_marker(d14_e):
    report = lcp_analyze(*pair(d14_e), budget=10)
    assert report.dist_c == BUDGET_EXCEEDED
    assert report.security_parameter == BUDGET_EXCEEDED
    assert report.distances_agree is None
    assert report.theorem_holds is False


def test_analyze_zero_code(c7):
    report = lcp_analyze(GroupCode.zero(c7), GroupCode.full(c7))
    assert report.dist_c == UNDEFINED and report.dist_dperp == UNDEFINED
    assert report.distances_agree is True
    assert report.security_parameter == UNDEFINED


def test_marker_helpers():
    assert security_parameter(2, 3) == 2
    assert security_parameter(UNDEFINED, 4) == 4
    assert security_parameter(BUDGET_EXCEEDED, 4) == BUDGET_EXCEEDED
    assert distances_agree(3, 3) and distances_agree(3, 2) is False
    assert distances_agree(UNDEFINED, 3) is None


def test_analyze_not_lcp(c7):
    c = code_right_ideal([c7.parse("1+a")])
    report = lcp_analyze(c, c)
    assert not report.is_lcp
    assert report.e is None and report.dual_formula_holds is None


def test_verify_theorem_abelian():
    for alg in (
        GroupAlgebra(field_make(2), group_cyclic(7)),
        GroupAlgebra(field_make(3), group_cyclic(4)),
    ):
        for e in brute_idempotents(alg):
            report = lcp_verify_theorem(*pair(e))
            assert report.theorem_holds and report.e_central


def test_verify_theorem_rejects_one_sided(d14_e):
    with pytest.raises(ValueError, match="two-sided"):
        lcp_verify_theorem(*pair(d14_e))


def test_verify_theorem_central_d14(d14):
    central = [e for e in idempotent_sweep(d14) if e.is_central()]
    assert len(central) == 4
    for e in central:
        c, d = pair(e)
        assert c == code_two_sided([d14.one - e])
        lcp_verify_theorem(c, d)


def test_verify_theorem_hermitian(gf4):
    alg = GroupAlgebra(gf4, group_cyclic(5))
    for e in idempotent_sweep(alg):
        report = lcp_verify_theorem(*pair(e), mode="hermitian")
        assert report.dual_formula_holds


def test_hermitian_mode_requires_square_field(c7, d14_e):
    with pytest.raises(ValueError):
        lcp_analyze(*pair(c7.parse("a+a^2+a^4")), "hermitian")
    with pytest.raises(ValueError):
        lcp_analyze(*pair(d14_e), "bogus")


def test_verification_error_is_assertion():
    assert issubclass(VerificationError, AssertionError)


def test_idempotent_sweep_matches_brute(d14):
    fast = idempotent_sweep(d14)
    assert fast == brute_idempotents(d14)
    assert idempotent_sweep(d14, workers=4, chunk=1000) == fast
    assert len(fast) == 148


def test_sweep_d14_summary(d14, d14_e):
    summary = sweep(d14)
    counts = summary.counts()
    assert counts["idempotents"] == 148
    assert counts["central"] == 4 and counts["theorem_pass"] == 4
    assert counts["adjoint_dim_pass"] == counts["dual_formula_pass"] == 148
    hit = next(c for c in summary.checks if c.e == d14_e)
    assert hit in summary.counterexamples
    assert sweep(d14, workers=3) == summary


def test_check_idempotent_dihedral(d14_e):
    chk = check_idempotent(d14_e)
    assert chk.adjoint_dim_equal and chk.dual_formula_holds and not chk.theorem_holds
    assert (chk.dist_c, chk.dist_dperp) == (2, 3)
    assert chk.to_dict()["dim_e"] == 6


def test_uniqueness(c7, d14):
    assert lcp_uniqueness_check(code_right_ideal([c7.parse("1+a+a^2+a^4")])) == 1
    assert lcp_uniqueness_check(GroupCode.full(c7)) == 1
    assert lcp_uniqueness_check(GroupCode.zero(c7)) == 1
    assert lcp_uniqueness_check(GroupCode.full(d14)) == 1
    with pytest.raises(ValueError):
        lcp_uniqueness_check(code_right_ideal([d14.parse(
            "1+a+a^2+a^4+b+a^2b+a^5b+a^6b")]))


@pytest.mark.parametrize("p,k,m", [(2, 1, 3), (3, 1, 3), (2, 1, 5), (2, 1, 7), (2, 2, 3)])
def test_two_sided_splits_are_central(p, k, m):
    alg = GroupAlgebra(field_make(p, k), group_dihedral(m))
    two_sided = [
        e for e in idempotent_sweep(alg)
        if code_right_ideal([e]).is_two_sided() and code_right_ideal([alg.one - e]).is_two_sided()
    ]
    assert two_sided
    assert all(e.is_central() for e in two_sided)
