"""Linear complementary pairs of group codes.

For right ideals ``C`` and ``D`` with ``C + D = KG`` and ``C & D = 0`` the
identity splits uniquely as ``1 = f + e`` with ``f`` in ``C`` and ``e`` in
``D``; then ``e`` is idempotent, ``f = 1 - e``, ``C = fKG`` and ``D = eKG``.
Everything here is derived from that split:

* the dual formula ``D^perp = (1 - e^)KG`` (Euclidean) and
  ``D^perp = (1 - (e^(q))^)KG`` (Hermitian), with ``^`` the adjoint;
* the hat witness: ``D^perp`` equals the image of ``C`` (Euclidean) or of
  ``C^(q)`` (Hermitian) under ``g -> g^-1``, which holds whenever ``e`` is
  central and can fail for one-sided ideals;
* the security parameter ``min(d(C), d(D^perp))``.

:func:`lcp_verify_theorem` raises on a failed check; :func:`lcp_analyze`
only records verdicts.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .algebra import AlgebraElement, GroupAlgebra
from .codes import GroupCode, Sidedness, code_right_ideal
from .errors import BudgetExceededError, VerificationError
from .linalg import solve_in_sum
from .weights import DEFAULT_BUDGET, check_budget

SWEEP_BUDGET = 1 << 20
BUDGET_EXCEEDED = "budget-exceeded"
UNDEFINED = "undefined"

EUCLIDEAN = "euclidean"
HERMITIAN = "hermitian"
MODES = (EUCLIDEAN, HERMITIAN)

Distance = Union[int, str]


def lcp_check(c: GroupCode, d: GroupCode) -> bool:
    """``C & D = 0`` and ``C + D = KG``."""
    if c.algebra != d.algebra:
        raise ValueError("codes live in different ambient algebras")
    n = c.algebra.dim
    return c.dim + d.dim == n and (c + d).dim == n


def lcp_split_unity(c: GroupCode, d: GroupCode) -> tuple[AlgebraElement, AlgebraElement]:
    """The unique ``(f, e)`` with ``f`` in C, ``e`` in D and ``f + e = 1``.

    Checks afterwards that ``e`` is idempotent, ``f = 1 - e``, ``C = fKG``
    and ``D = eKG``; a failure there means the inputs were not what they
    claimed to be.
    """
    if not lcp_check(c, d):
        raise ValueError("(C, D) is not a linear complementary pair")
    if not (c.is_right_ideal() and d.is_right_ideal()):
        raise ValueError("both codes must be right ideals")
    algebra = c.algebra
    one = algebra.one
    fv, ev = solve_in_sum(one.values, c.space, d.space)
    f, e = AlgebraElement(algebra, fv), AlgebraElement(algebra, ev)
    if not e.is_idempotent():
        raise VerificationError("split component e is not idempotent")
    if f != one - e:
        raise VerificationError("split components do not satisfy f = 1 - e")
    if code_right_ideal([f]) != c or code_right_ideal([e]) != d:
        raise VerificationError("split idempotents do not generate the pair")
    return f, e


def _distance(code: GroupCode, budget: int, workers: int) -> Distance:
    if code.dim == 0:
        return UNDEFINED
    try:
        return code.min_distance(budget, workers=workers)
    except BudgetExceededError:
        return BUDGET_EXCEEDED


def distances_agree(dist_c: Distance, dist_dperp: Distance) -> bool | None:
    """Whether ``d(C) == d(D^perp)``; None when either value is unknown."""
    if isinstance(dist_c, int) and isinstance(dist_dperp, int):
        return dist_c == dist_dperp
    if dist_c == dist_dperp == UNDEFINED:
        return True
    return None


def security_parameter(dist_c: Distance, dist_dperp: Distance) -> Distance:
    """``min(d(C), d(D^perp))`` with explicit markers for unknown values."""
    values = (dist_c, dist_dperp)
    if BUDGET_EXCEEDED in values:
        return BUDGET_EXCEEDED
    known = [v for v in values if isinstance(v, int)]
    return min(known) if known else UNDEFINED


def _check_mode(algebra: GroupAlgebra, mode: str) -> int | None:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if mode == HERMITIAN:
        return algebra.field.hermitian_q()
    return None


def _perp(code: GroupCode, q: int | None) -> GroupCode:
    return code.dual() if q is None else code.hermitian_dual(q)


def dual_formula(e: AlgebraElement, q: int | None = None) -> GroupCode:
    """Predicted dual of ``eKG``: ``(1 - e^)KG``, or ``(1 - (e^(q))^)KG`` when Hermitian."""
    x = e if q is None else e.frobenius(q)
    return code_right_ideal([e.algebra.one - x.adjoint()])


def hat_witness(c: GroupCode, q: int | None = None) -> GroupCode:
    """The code ``D^perp`` must equal for the hat map to certify equivalence with C."""
    return (c if q is None else c.frobenius_image(q)).hat_image()


@dataclass(frozen=True)
class LcpReport:
    """Verdicts and measurements for a pair ``(C, D)``.

    Verdicts that need the split of unity are None when the pair is not an
    LCP.  Distances are ints, or :data:`BUDGET_EXCEEDED` / :data:`UNDEFINED`.
    """

    mode: str
    is_lcp: bool
    dim_c: int
    dim_d: int
    c_sidedness: Sidedness
    d_sidedness: Sidedness
    f: AlgebraElement | None
    e: AlgebraElement | None
    e_idempotent: bool | None
    e_central: bool | None
    dual_formula_holds: bool | None
    theorem_holds: bool | None
    dist_c: Distance
    dist_dperp: Distance
    distances_agree: bool | None
    security_parameter: Distance
    codewords_enumerated: int = field(default=0, compare=False)

    def to_dict(self) -> dict:
        fmt = (lambda a: None if a is None else str(a))
        return {
            "mode": self.mode,
            "verdicts": {
                "is_lcp": self.is_lcp,
                "e_idempotent": self.e_idempotent,
                "e_central": self.e_central,
                "c_sidedness": self.c_sidedness.as_dict(),
                "d_sidedness": self.d_sidedness.as_dict(),
                "dual_formula_holds": self.dual_formula_holds,
                "theorem_holds": self.theorem_holds,
                "distances_agree": self.distances_agree,
            },
            "idempotent": {"e": fmt(self.e), "f": fmt(self.f)},
            "distances": {
                "dim_c": self.dim_c,
                "dim_d": self.dim_d,
                "dist_c": self.dist_c,
                "dist_dperp": self.dist_dperp,
            },
            "security_parameter": self.security_parameter,
        }

    @classmethod
    def from_dict(cls, doc: dict, algebra: GroupAlgebra) -> LcpReport:
        v, dist, idem = doc["verdicts"], doc["distances"], doc["idempotent"]
        parse = (lambda s: None if s is None else algebra.parse(s))
        side = (lambda s: Sidedness(right=s["right"], left=s["left"]))
        return cls(
            mode=doc["mode"] if "mode" in doc else doc["input"]["mode"],
            is_lcp=v["is_lcp"],
            dim_c=dist["dim_c"],
            dim_d=dist["dim_d"],
            c_sidedness=side(v["c_sidedness"]),
            d_sidedness=side(v["d_sidedness"]),
            f=parse(idem["f"]),
            e=parse(idem["e"]),
            e_idempotent=v["e_idempotent"],
            e_central=v["e_central"],
            dual_formula_holds=v["dual_formula_holds"],
            theorem_holds=v["theorem_holds"],
            dist_c=dist["dist_c"],
            dist_dperp=dist["dist_dperp"],
            distances_agree=v["distances_agree"],
            security_parameter=doc["security_parameter"],
        )


def lcp_analyze(
    c: GroupCode,
    d: GroupCode,
    mode: str = EUCLIDEAN,
    *,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> LcpReport:
    """Full report on ``(C, D)`` without assuming two-sidedness; never raises on a failed verdict."""
    if c.algebra != d.algebra:
        raise ValueError("codes live in different ambient algebras")
    q = _check_mode(c.algebra, mode)
    is_lcp = lcp_check(c, d)
    dperp = _perp(d, q)
    dist_c = _distance(c, budget, workers)
    dist_dperp = _distance(dperp, budget, workers)
    f = e = None
    e_idem = e_central = dual_ok = theorem = None
    if is_lcp and c.is_right_ideal() and d.is_right_ideal():
        f, e = lcp_split_unity(c, d)
        e_idem = e.is_idempotent()
        e_central = e.is_central()
        dual_ok = dperp == dual_formula(e, q)
        theorem = dperp == hat_witness(c, q)
    enumerated = sum(
        c.algebra.field.order**x.dim for x, dist in ((c, dist_c), (dperp, dist_dperp)) if isinstance(dist, int)
    )
    return LcpReport(
        mode=mode,
        is_lcp=is_lcp,
        dim_c=c.dim,
        dim_d=d.dim,
        c_sidedness=c.sidedness,
        d_sidedness=d.sidedness,
        f=f,
        e=e,
        e_idempotent=e_idem,
        e_central=e_central,
        dual_formula_holds=dual_ok,
        theorem_holds=theorem,
        dist_c=dist_c,
        dist_dperp=dist_dperp,
        distances_agree=distances_agree(dist_c, dist_dperp),
        security_parameter=security_parameter(dist_c, dist_dperp),
        codewords_enumerated=enumerated,
    )


def lcp_verify_theorem(
    c: GroupCode,
    d: GroupCode,
    mode: str = EUCLIDEAN,
    *,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> LcpReport:
    """Check the two-sided statement on one instance, raising on any failure.

    For an LCP of two-sided ideals: the split idempotent is central,
    ``D^perp`` is the hat image of ``C`` (of ``C^(q)`` when Hermitian), and
    the two minimum distances agree when both are within budget.
    """
    if not lcp_check(c, d):
        raise ValueError("(C, D) is not a linear complementary pair")
    if not (c.is_two_sided() and d.is_two_sided()):
        raise ValueError("both codes must be two-sided ideals; use lcp_analyze instead")
    report = lcp_analyze(c, d, mode, budget=budget, workers=workers)
    if not report.e_central:
        raise VerificationError("split idempotent of a two-sided pair is not central")
    if not report.dual_formula_holds:
        raise VerificationError("D^perp differs from the dual formula")
    if not report.theorem_holds:
        raise VerificationError("D^perp is not the hat image of C")
    if report.distances_agree is False:
        raise VerificationError(f"distances differ: d(C)={report.dist_c}, d(D^perp)={report.dist_dperp}")
    return report


def idempotent_sweep(
    algebra: GroupAlgebra, budget: int = SWEEP_BUDGET, *, workers: int = 1, chunk: int = 1 << 16
) -> list[AlgebraElement]:
    """Every ``e`` in KG with ``e*e == e``, in lexicographic coefficient order."""
    total = check_budget(algebra.field.order, algebra.dim, budget, "algebra elements")
    starts = list(range(0, total, chunk))

    def run(start: int) -> np.ndarray:
        rows = algebra.decode_batch(np.arange(start, min(start + chunk, total), dtype=np.int64))
        hit = (algebra.square_batch(rows) == rows).all(axis=1)
        return rows[hit]

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            found = list(pool.map(run, starts))
    else:
        found = [run(s) for s in starts]
    return [AlgebraElement(algebra, tuple(int(x) for x in row)) for part in found for row in part]


@dataclass(frozen=True)
class IdempotentCheck:
    """Per-idempotent outcome of a sweep, for the pair ``((1-e)KG, eKG)``."""

    e: AlgebraElement
    central: bool
    dim_e: int
    adjoint_dim_equal: bool
    dual_formula_holds: bool
    theorem_holds: bool
    dist_c: Distance
    dist_dperp: Distance

    @property
    def distances_agree(self) -> bool | None:
        return distances_agree(self.dist_c, self.dist_dperp)

    def to_dict(self) -> dict:
        return {
            "e": str(self.e),
            "central": self.central,
            "dim_e": self.dim_e,
            "adjoint_dim_equal": self.adjoint_dim_equal,
            "dual_formula_holds": self.dual_formula_holds,
            "theorem_holds": self.theorem_holds,
            "dist_c": self.dist_c,
            "dist_dperp": self.dist_dperp,
        }


def check_idempotent(
    e: AlgebraElement, mode: str = EUCLIDEAN, *, budget: int = DEFAULT_BUDGET
) -> IdempotentCheck:
    q = _check_mode(e.algebra, mode)
    one = e.algebra.one
    d = code_right_ideal([e])
    c = code_right_ideal([one - e])
    dperp = _perp(d, q)
    return IdempotentCheck(
        e=e,
        central=e.is_central(),
        dim_e=d.dim,
        adjoint_dim_equal=code_right_ideal([e.adjoint()]).dim == d.dim,
        dual_formula_holds=dperp == dual_formula(e, q),
        theorem_holds=dperp == hat_witness(c, q),
        dist_c=_distance(c, budget, 1),
        dist_dperp=_distance(dperp, budget, 1),
    )


@dataclass(frozen=True)
class SweepSummary:
    mode: str
    elements_scanned: int
    checks: tuple[IdempotentCheck, ...]

    @property
    def central(self) -> list[IdempotentCheck]:
        return [c for c in self.checks if c.central]

    @property
    def counterexamples(self) -> list[IdempotentCheck]:
        """Idempotents whose pair has ``d(C) != d(D^perp)``."""
        return [c for c in self.checks if c.distances_agree is False]

    def counts(self) -> dict:
        central = self.central
        return {
            "idempotents": len(self.checks),
            "central": len(central),
            "adjoint_dim_pass": sum(c.adjoint_dim_equal for c in self.checks),
            "dual_formula_pass": sum(c.dual_formula_holds for c in self.checks),
            "theorem_checked": len(central),
            "theorem_pass": sum(c.theorem_holds and c.distances_agree is not False for c in central),
            "hat_witness_fail": sum(not c.theorem_holds for c in self.checks),
            "distance_counterexamples": len(self.counterexamples),
        }


def sweep(
    algebra: GroupAlgebra,
    mode: str = EUCLIDEAN,
    *,
    budget: int = SWEEP_BUDGET,
    distance_budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> SweepSummary:
    """Run :func:`check_idempotent` on every idempotent of KG."""
    _check_mode(algebra, mode)
    idempotents = idempotent_sweep(algebra, budget, workers=workers)

    def run(e: AlgebraElement) -> IdempotentCheck:
        return check_idempotent(e, mode, budget=distance_budget)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            checks = tuple(pool.map(run, idempotents))
    else:
        checks = tuple(run(e) for e in idempotents)
    return SweepSummary(mode, algebra.size, checks)


def lcp_uniqueness_check(c: GroupCode, budget: int = SWEEP_BUDGET, *, workers: int = 1) -> int:
    """Number of distinct ideals ``eKG``, ``e`` a central idempotent, complementary to C."""
    if not c.is_two_sided():
        raise ValueError("C must be a two-sided ideal")
    seen = set()
    for e in idempotent_sweep(c.algebra, budget, workers=workers):
        if not e.is_central():
            continue
        d = code_right_ideal([e])
        if lcp_check(c, d):
            seen.add(d.space.basis)
    return len(seen)
