"""Group codes: subspaces of KG generated as one- or two-sided ideals.

A :class:`GroupCode` is a subspace of ``K^|G|`` with coordinates indexed by
group elements.  Sidedness is a property of the subspace and is computed on
demand, not trusted from the constructor that produced it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .algebra import AlgebraElement, GroupAlgebra
from .errors import ZeroCodeError
from .linalg import Subspace, Vector
from .weights import DEFAULT_BUDGET, weight_distribution, weight_distribution_gf2_packed


@dataclass(frozen=True)
class Sidedness:
    right: bool
    left: bool

    @property
    def two_sided(self) -> bool:
        return self.right and self.left

    def as_dict(self) -> dict:
        return {"right": self.right, "left": self.left, "two_sided": self.two_sided}


@dataclass(frozen=True)
class GroupCode:
    """A linear code of length ``|G|`` viewed inside the group algebra."""

    algebra: GroupAlgebra
    space: Subspace

    def __post_init__(self) -> None:
        if self.space.n != self.algebra.dim or self.space.field != self.algebra.field:
            raise ValueError("subspace does not live in the algebra's ambient space")

    @classmethod
    def from_vectors(cls, algebra: GroupAlgebra, vectors: Iterable[Sequence[int]]) -> GroupCode:
        return cls(algebra, Subspace.span(algebra.field, algebra.dim, vectors))

    @classmethod
    def zero(cls, algebra: GroupAlgebra) -> GroupCode:
        return cls(algebra, Subspace.zero(algebra.field, algebra.dim))

    @classmethod
    def full(cls, algebra: GroupAlgebra) -> GroupCode:
        return cls(algebra, Subspace.full(algebra.field, algebra.dim))

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def length(self) -> int:
        return self.space.n

    def __repr__(self) -> str:
        return f"GroupCode({self.algebra!r}, dim={self.dim})"

    def codeword(self, i: int) -> AlgebraElement:
        return AlgebraElement(self.algebra, self.space.basis[i])

    def basis_elements(self) -> list[AlgebraElement]:
        return [AlgebraElement(self.algebra, row) for row in self.space.basis]

    def __contains__(self, a: AlgebraElement) -> bool:
        return self.space.contains(a.values)

    # -- sidedness ---------------------------------------------------------

    def _closed_under(self, translate) -> bool:
        n = self.algebra.dim
        for a in self.basis_elements():
            for g in range(n):
                if not self.space.contains(translate(a, g).values):
                    return False
        return True

    @cached_property
    def sidedness(self) -> Sidedness:
        # Race-benign: concurrent first calls compute the same value.
        return Sidedness(
            right=self._closed_under(AlgebraElement.right_translate),
            left=self._closed_under(AlgebraElement.left_translate),
        )

    def is_right_ideal(self) -> bool:
        return self.sidedness.right

    def is_left_ideal(self) -> bool:
        return self.sidedness.left

    def is_two_sided(self) -> bool:
        return self.sidedness.two_sided

    # -- derived codes -----------------------------------------------------

    def dual(self) -> GroupCode:
        """Annihilator under the Euclidean form ``sum_g a_g b_g``."""
        return GroupCode(self.algebra, self.space.orthogonal())

    def hermitian_dual(self, q: int | None = None) -> GroupCode:
        """Annihilator under ``sum_g a_g b_g^q`` over GF(q^2).

        ``v`` is orthogonal to every ``c`` iff ``sum c_g^q v_g = 0``, so this
        is the Euclidean annihilator of the coefficientwise ``q``-th power.
        """
        f = self.algebra.field
        if q is None:
            q = f.hermitian_q()
        elif f.order != q * q:
            raise ValueError(f"Hermitian dual with q={q} needs a field of order {q * q}, got {f!r}")
        return self.frobenius_image(q).dual()

    def frobenius_image(self, q: int) -> GroupCode:
        """``{c^(q) : c in C}``, the coefficientwise ``q``-power image."""
        f = self.algebra.field
        f.check_frobenius_exponent(q)
        return GroupCode(self.algebra, self.space.map(lambda row: tuple(f.power(x, q) for x in row)))

    def hat_image(self) -> GroupCode:
        """Image under the coordinate permutation ``g -> g^-1``."""
        inv = self.algebra.group.inv

        def permute(row: Vector) -> Vector:
            out = [0] * len(row)
            for g, x in enumerate(row):
                out[inv[g]] = x
            return tuple(out)

        return GroupCode(self.algebra, self.space.map(permute))

    def __add__(self, other: GroupCode) -> GroupCode:
        return GroupCode(self.algebra, self.space + other.space)

    def intersect(self, other: GroupCode) -> GroupCode:
        return GroupCode(self.algebra, self.space.intersect(other.space))

    # -- weights -------------------------------------------------------------

    def weight_enumerator(
        self, budget: int = DEFAULT_BUDGET, *, workers: int = 1, method: str = "auto"
    ) -> list[int]:
        """``counts[w]`` = number of codewords of weight ``w``, for ``w = 0..|G|``.

        ``method`` is ``"auto"``, ``"generic"`` (blocked numpy enumeration) or
        ``"packed"`` (pure bit-packed Gray-code walk, GF(2) only).
        """
        f, n = self.algebra.field, self.length
        if method == "packed":
            if f.order != 2:
                raise ValueError("packed enumeration is only valid over GF(2)")
            return weight_distribution_gf2_packed(self.space.packed_basis(), n, budget=budget)
        if method not in ("auto", "generic"):
            raise ValueError(f"unknown enumeration method {method!r}")
        return weight_distribution(f, self.space.basis, n, budget=budget, workers=workers)

    def min_distance(self, budget: int = DEFAULT_BUDGET, *, workers: int = 1, method: str = "auto") -> int:
        """Exact minimum weight of a nonzero codeword."""
        if self.dim == 0:
            raise ZeroCodeError("minimum distance of the zero code is undefined")
        counts = self.weight_enumerator(budget, workers=workers, method=method)
        return next(w for w in range(1, len(counts)) if counts[w])


def _check_gens(algebra: GroupAlgebra | None, gens: Sequence[AlgebraElement]) -> GroupAlgebra:
    if not gens:
        raise ValueError("an ideal needs at least one generator")
    algebra = algebra or gens[0].algebra
    for g in gens:
        if g.algebra != algebra:
            raise ValueError("generators live in different algebras")
    return algebra


def code_right_ideal(gens: Sequence[AlgebraElement]) -> GroupCode:
    """``sum_i gens[i] KG``, spanned by ``gen * g`` over all group elements."""
    algebra = _check_gens(None, gens)
    n = algebra.dim
    return GroupCode.from_vectors(algebra, (x.right_translate(g).values for x in gens for g in range(n)))


def code_left_ideal(gens: Sequence[AlgebraElement]) -> GroupCode:
    """``sum_i KG gens[i]``, spanned by ``g * gen``."""
    algebra = _check_gens(None, gens)
    n = algebra.dim
    return GroupCode.from_vectors(algebra, (x.left_translate(g).values for x in gens for g in range(n)))


def code_two_sided(gens: Sequence[AlgebraElement]) -> GroupCode:
    """``sum_i KG gens[i] KG``, spanned by ``g * gen * h``."""
    algebra = _check_gens(None, gens)
    n = algebra.dim
    lefts = [x.left_translate(g) for x in gens for g in range(n)]
    return GroupCode.from_vectors(algebra, (y.right_translate(h).values for y in lefts for h in range(n)))


def code_from_side(gens: Sequence[AlgebraElement], side: str) -> GroupCode:
    builders = {"right": code_right_ideal, "left": code_left_ideal, "two-sided": code_two_sided}
    try:
        return builders[side](gens)
    except KeyError:
        raise ValueError(f"side must be one of {sorted(builders)}, got {side!r}") from None
