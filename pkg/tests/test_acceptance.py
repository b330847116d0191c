"""Acceptance criteria, one test each; every test prints a PASS/FAIL line.

The exhaustive criteria use the numpy oracles in conftest (brute-force
idempotent search, annihilators by enumerating the whole ambient space, spans
by enumerating every combination), not the library's linear algebra.
"""

from __future__ import annotations

import io
import random
import time
from contextlib import redirect_stdout
from pathlib import Path

import pytest

from groupcodes import (
    GroupAlgebra,
    code_left_ideal,
    code_right_ideal,
    field_make,
    group_cyclic,
    group_dihedral,
    lcp_analyze,
    lcp_check,
    lcp_uniqueness_check,
    sweep,
)
from groupcodes.cli import main as cli_main

from conftest import D14_E, brute_idempotents, np_annihilator, np_span
from test_algebra import ALGEBRAS, _law_check

pytestmark = pytest.mark.acceptance

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def report(capsys):
    def emit(number: int, title: str, ok: bool, detail: str = "") -> None:
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (f" ({detail})" if detail else ""))
        assert ok, f"criterion {number} failed: {detail}"

    return emit


def sweep_algebras():
    gf2, gf3 = field_make(2), field_make(3)
    algs = [GroupAlgebra(gf2, group_cyclic(n)) for n in (2, 3, 4, 6, 7)]
    algs.append(GroupAlgebra(gf3, group_cyclic(4)))
    algs.append(GroupAlgebra(gf2, group_dihedral(7)))
    return algs


_ORACLE_CACHE: dict = {}


def oracle_sweep(alg):
    """Per idempotent: (e, central, eKG words, (1-e)KG words, kernel-dual of eKG)."""
    if alg not in _ORACLE_CACHE:
        f, n = alg.field, alg.dim
        rows = []
        for e in brute_idempotents(alg):
            d = code_right_ideal([e])
            c = code_right_ideal([alg.one - e])
            rows.append((e, e.is_central(), d, c, np_annihilator(f, d.space.basis, n)))
        _ORACLE_CACHE[alg] = rows
    return _ORACLE_CACHE[alg]


def min_weight(words):
    ws = [sum(1 for x in w if x) for w in words if any(w)]
    return min(ws) if ws else None


def hat_words(alg, words):
    inv = alg.group.inv
    out = set()
    for w in words:
        v = [0] * len(w)
        for g, x in enumerate(w):
            v[inv[g]] = x
        out.add(tuple(v))
    return out


def test_criterion_1_d14_example(report, d14):
    start = time.perf_counter()
    e = d14.parse(D14_E)
    one = d14.one
    c, d = code_right_ideal([one - e]), code_right_ideal([e])
    r = lcp_analyze(c, d)
    checks = {
        "e*e == e": e * e == e,
        "e not central": not e.is_central(),
        "dist((1-e)KG) == 2": c.min_distance() == 2,
        "dist(KG(1-e)) == 3": code_left_ideal([one - e]).min_distance() == 3,
        "dist(D^perp) == 3": d.dual().min_distance() == 3,
        "dist((1-e^)KG) == 3": code_right_ideal([one - e.adjoint()]).min_distance() == 3,
        "security parameter == 2": r.security_parameter == 2,
        "pair is an LCP": lcp_check(c, d) and r.is_lcp,
    }
    elapsed = time.perf_counter() - start
    failed = [k for k, v in checks.items() if not v]
    report(1, "dihedral example", not failed and elapsed < 1.0, f"{elapsed:.3f}s" + (f"; failed: {failed}" if failed else ""))


def test_criterion_2_dual_formula_holds(report):
    start = time.perf_counter()
    total = bad = 0
    for alg in sweep_algebras():
        f, n = alg.field, alg.dim
        for e, _, _, _, dperp in oracle_sweep(alg):
            total += 1
            predicted = code_right_ideal([alg.one - e.adjoint()])
            if np_span(f, predicted.space.basis, n) != dperp or code_right_ideal([e]).dual() != predicted:
                bad += 1
    elapsed = time.perf_counter() - start
    report(2, "kernel-dual of eKG equals (1-e^)KG", bad == 0 and elapsed < 120,
           f"{total} idempotents, {bad} exceptions, {elapsed:.1f}s")


def test_criterion_3_adjoint_dim_equal(report):
    total = bad = 0
    for alg in sweep_algebras():
        f, n = alg.field, alg.dim
        for e, _, d, _, _ in oracle_sweep(alg):
            total += 1
            hat_words_count = len(np_span(f, code_right_ideal([e.adjoint()]).space.basis, n))
            if hat_words_count != len(np_span(f, d.space.basis, n)):
                bad += 1
    report(3, "dim e^KG == dim eKG", bad == 0, f"{total} idempotents, {bad} exceptions")


def test_criterion_4_theorem(report):
    checked = bad = 0
    abelian_all_central = True
    for alg in sweep_algebras():
        f, n = alg.field, alg.dim
        for e, central, _, c, dperp in oracle_sweep(alg):
            if alg.group.is_abelian() and not central:
                abelian_all_central = False
            if not central:
                continue
            checked += 1
            c_words = np_span(f, c.space.basis, n)
            if dperp != hat_words(alg, c_words) or min_weight(dperp) != min_weight(c_words):
                bad += 1
            elif code_right_ideal([e]).dual() != c.hat_image():
                bad += 1
    report(4, "central idempotents: D^perp is the hat image of C", bad == 0 and abelian_all_central,
           f"{checked} central idempotents, {bad} failures")


def test_criterion_5_sharpness(report, d14):
    summary = sweep(d14)
    e = d14.parse(D14_E)
    hit = next((c for c in summary.checks if c.e == e), None)
    ok = (
        hit is not None
        and not hit.central
        and hit.theorem_holds is False
        and (hit.dist_c, hit.dist_dperp) == (2, 3)
        and hit.dual_formula_holds
    )
    n_fail = sum(not c.theorem_holds for c in summary.checks if not c.central)
    report(5, "non-central idempotent breaks the equivalence", ok,
           f"{n_fail} non-central hat-witness failures; e distances {hit and (hit.dist_c, hit.dist_dperp)}")


def test_criterion_6_hermitian(report, gf4):
    start = time.perf_counter()
    conj = lambda x: gf4.power(x, 2)  # noqa: E731
    total = central_n = bad = 0
    for m in (3, 5):
        alg = GroupAlgebra(gf4, group_cyclic(m))
        for e in brute_idempotents(alg):
            total += 1
            d = code_right_ideal([e])
            dperp = np_annihilator(gf4, d.space.basis, m, conj)
            predicted = code_right_ideal([alg.one - e.frobenius(2).adjoint()])
            if np_span(gf4, predicted.space.basis, m) != dperp or d.hermitian_dual() != predicted:
                bad += 1
            if e.is_central():
                central_n += 1
                c_words = np_span(gf4, code_right_ideal([alg.one - e]).space.basis, m)
                if min_weight(dperp) != min_weight(c_words):
                    bad += 1
    elapsed = time.perf_counter() - start
    report(6, "Hermitian dual equals (1-e^(q)^)KG", bad == 0 and elapsed < 60,
           f"{total} idempotents, {central_n} central, {bad} failures, {elapsed:.1f}s")


def test_criterion_7_uniqueness(report, c7):
    n = lcp_uniqueness_check(code_right_ideal([c7.parse("1+a+a^2+a^4")]))
    report(7, "unique complementary ideal in GF(2)C7", n == 1, f"count {n}")


def test_criterion_8_algebra_laws(report):
    alg4 = GroupAlgebra(field_make(2), group_cyclic(4))
    els = list(alg4.elements())
    basis4 = [alg4.basis(g) for g in range(4)]
    exhaustive = 0
    for a in els:
        for b in els:
            for c in els:
                _law_check(a, b, c, basis4)
                exhaustive += 1
    rng = random.Random(8)
    sampled = 0
    for alg in ALGEBRAS:
        basis = [alg.basis(g) for g in range(alg.dim)]
        for _ in range(1000):
            a, b, c = (alg._raw(tuple(rng.randrange(alg.field.order) for _ in range(alg.dim))) for _ in range(3))
            _law_check(a, b, c, basis)
            sampled += 1
    report(8, "anti-automorphism, involution, adjoint transfer, G-invariance", True,
           f"{exhaustive} exhaustive triples, {sampled} random triples over {len(ALGEBRAS)} algebras")


def _cli(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = cli_main(argv)
    return code, buf.getvalue()


def test_criterion_9_cli_golden(report):
    cases = {
        "analyze_dihedral7.json": [
            "analyze", "--field", "2", "--group", "dihedral:7", "--idempotent",
            "1+a+a^2+a^4+b+a^2b+a^5b+a^6b", "--format", "structured",
        ],
        "sweep_cyclic7.json": ["sweep", "--field", "2", "--group", "cyclic:7", "--list", "--format", "structured"],
    }
    mismatches = []
    for name, argv in cases.items():
        want = (GOLDEN / name).read_text()
        for workers in ("1", "4", "1", "8"):
            code, out = _cli(argv + ["--workers", workers])
            if code != 0 or out != want:
                mismatches.append(f"{name} workers={workers}")
    report(9, "CLI golden reports are byte-identical", not mismatches,
           "; ".join(mismatches) or "2 reports x 4 runs")
