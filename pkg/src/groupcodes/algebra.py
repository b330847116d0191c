"""The group algebra KG and its elements.

An element ``a = sum_g a_g g`` is stored as a tuple of encoded field values
indexed by group element.  Besides ring arithmetic this module provides the
adjoint ``g -> g^-1``, the Hamming weight, the Euclidean and Hermitian
forms, and idempotent / centrality tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from .expr import parse_expression
from .field import FieldElement, FieldSpec
from .group import Group


@dataclass(frozen=True)
class GroupAlgebra:
    """KG for a finite field K and finite group G."""

    field: FieldSpec
    group: Group

    @property
    def dim(self) -> int:
        return self.group.order

    @property
    def size(self) -> int:
        """Number of elements of KG, ``q^|G|``."""
        return self.field.order**self.group.order

    def __repr__(self) -> str:
        return f"GroupAlgebra({self.field!r}, {self.group.name})"

    def element(self, values: Sequence[int | FieldElement]) -> AlgebraElement:
        if len(values) != self.dim:
            raise ValueError(f"expected {self.dim} coefficients, got {len(values)}")
        out = []
        for v in values:
            if isinstance(v, FieldElement):
                if v.spec != self.field:
                    raise ValueError(f"coefficient {v} is not in {self.field!r}")
                out.append(v.value)
            else:
                out.append(self.field(int(v)).value)
        return AlgebraElement(self, tuple(out))

    def _raw(self, values: Sequence[int]) -> AlgebraElement:
        return AlgebraElement(self, tuple(values))

    @cached_property
    def zero(self) -> AlgebraElement:
        return self._raw((0,) * self.dim)

    @cached_property
    def one(self) -> AlgebraElement:
        return self.basis(0)

    def basis(self, g: int) -> AlgebraElement:
        values = [0] * self.dim
        values[g] = 1
        return self._raw(values)

    def scalar(self, c: int | FieldElement) -> AlgebraElement:
        if isinstance(c, int):
            c = self.field(c)
        values = [0] * self.dim
        values[0] = c.value
        return self._raw(values)

    def parse(self, text: str) -> AlgebraElement:
        """Parse an element written in the group's generator symbols.

        ``w`` denotes the field generator in extension fields; group labels
        such as ``g3`` are accepted for table groups.
        """
        return parse_expression(text, _AlgebraEvaluator(self))

    def format(self, a: AlgebraElement) -> str:
        """Canonical text form, terms in group-index order: ``1+a+a^2*b``."""
        terms = []
        for g, v in enumerate(a.values):
            if not v:
                continue
            label = self.group.labels[g]
            coeff = self.field.format(v)
            if v == 1:
                terms.append(label)
            else:
                if "+" in coeff:
                    coeff = f"({coeff})"
                terms.append(coeff if g == 0 else f"{coeff}*{label}")
        return "+".join(terms) if terms else "0"

    def elements(self) -> Iterator[AlgebraElement]:
        """Every element of KG in lexicographic order of coefficient vectors."""
        q, n = self.field.order, self.dim
        for k in range(self.size):
            values = [0] * n
            for i in range(n - 1, -1, -1):
                k, values[i] = divmod(k, q)
            yield self._raw(values)

    # -- batched arithmetic for sweeps --------------------------------------

    @cached_property
    def _np_tables(self) -> tuple[np.ndarray, np.ndarray]:
        f = self.field
        if f.add_table is None:
            raise ValueError(f"batched arithmetic needs a field of order <= 256, got {f!r}")
        return np.array(f.add_table, dtype=np.int64), np.array(f.mul_table, dtype=np.int64)

    def decode_batch(self, indices: np.ndarray) -> np.ndarray:
        """Coefficient rows for lexicographic element indices (first coordinate most significant)."""
        q, n = self.field.order, self.dim
        out = np.empty((len(indices), n), dtype=np.int64)
        k = np.asarray(indices, dtype=np.int64).copy()
        for i in range(n - 1, -1, -1):
            k, out[:, i] = np.divmod(k, q)
        return out

    def square_batch(self, rows: np.ndarray) -> np.ndarray:
        """Square every row of a coefficient matrix in KG."""
        g = self.group
        n, p = self.dim, self.field.p
        table = g.table
        acc = np.zeros_like(rows)
        if self.field.is_prime_field:
            for h in range(n):
                # (a*a)_x gets a_h * a_{h^-1 x}
                cols = table[g.inv[h]]
                acc += rows[:, h : h + 1] * rows[:, cols]
                acc %= p
            return acc
        add, mul = self._np_tables
        for h in range(n):
            cols = table[g.inv[h]]
            acc = add[acc, mul[rows[:, h : h + 1], rows[:, cols]]]
        return acc


@dataclass(frozen=True)
class AlgebraElement:
    """An element ``sum_g a_g g`` of a :class:`GroupAlgebra`."""

    algebra: GroupAlgebra
    values: tuple[int, ...]

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    @property
    def group(self) -> Group:
        return self.algebra.group

    @property
    def coeffs(self) -> tuple[FieldElement, ...]:
        f = self.field
        return tuple(FieldElement(f, v) for v in self.values)

    def __getitem__(self, g: int) -> FieldElement:
        return FieldElement(self.field, self.values[g])

    def __len__(self) -> int:
        return len(self.values)

    def __str__(self) -> str:
        return self.algebra.format(self)

    def __repr__(self) -> str:
        return f"AlgebraElement({self.algebra.format(self)!r})"

    def _check(self, other: AlgebraElement) -> None:
        if not isinstance(other, AlgebraElement):
            raise TypeError(f"expected AlgebraElement, got {type(other).__name__}")
        if other.algebra != self.algebra:
            raise ValueError(f"mismatched ambient algebras {self.algebra!r} and {other.algebra!r}")

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._check(other)
        add = self.field.add
        return AlgebraElement(self.algebra, tuple(add(x, y) for x, y in zip(self.values, other.values)))

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        self._check(other)
        sub = self.field.sub
        return AlgebraElement(self.algebra, tuple(sub(x, y) for x, y in zip(self.values, other.values)))

    def __neg__(self) -> AlgebraElement:
        neg = self.field.neg
        return AlgebraElement(self.algebra, tuple(neg(x) for x in self.values))

    def scale(self, s: FieldElement | int) -> AlgebraElement:
        if isinstance(s, int):
            s = self.field(s)
        elif s.spec != self.field:
            raise ValueError(f"scalar {s} is not in {self.field!r}")
        mul = self.field.mul
        return AlgebraElement(self.algebra, tuple(mul(s.value, x) for x in self.values))

    def __mul__(self, other):
        if isinstance(other, (FieldElement, int)):
            return self.scale(other)
        self._check(other)
        f = self.field
        add, mul = f.add, f.mul
        cayley = self.group.cayley
        out = [0] * len(self.values)
        bs = [(k, y) for k, y in enumerate(other.values) if y]
        for h, x in enumerate(self.values):
            if not x:
                continue
            row = cayley[h]
            for k, y in bs:
                g = row[k]
                out[g] = add(out[g], mul(x, y))
        return AlgebraElement(self.algebra, tuple(out))

    def __rmul__(self, other):
        if isinstance(other, (FieldElement, int)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> AlgebraElement:
        if k < 0:
            return self.inverse() ** (-k)
        result = self.algebra.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> AlgebraElement:
        """Inverse of a monomial ``c*g``; other elements are not inverted."""
        support = [g for g, v in enumerate(self.values) if v]
        if len(support) != 1:
            raise ValueError("only monomials c*g can be inverted")
        g = support[0]
        values = [0] * len(self.values)
        values[self.group.inv[g]] = self.field.inv(self.values[g])
        return AlgebraElement(self.algebra, tuple(values))

    def right_translate(self, g: int) -> AlgebraElement:
        """``a * g``; a coordinate permutation ``h -> hg``."""
        cayley = self.group.cayley
        out = [0] * len(self.values)
        for h, x in enumerate(self.values):
            out[cayley[h][g]] = x
        return AlgebraElement(self.algebra, tuple(out))

    def left_translate(self, g: int) -> AlgebraElement:
        """``g * a``; a coordinate permutation ``h -> gh``."""
        row = self.group.cayley[g]
        out = [0] * len(self.values)
        for h, x in enumerate(self.values):
            out[row[h]] = x
        return AlgebraElement(self.algebra, tuple(out))

    def adjoint(self) -> AlgebraElement:
        """``sum_g a_g g^-1``."""
        inv = self.group.inv
        out = [0] * len(self.values)
        for g, x in enumerate(self.values):
            out[inv[g]] = x
        return AlgebraElement(self.algebra, tuple(out))

    def frobenius(self, q: int) -> AlgebraElement:
        """Coefficientwise ``q``-th power."""
        f = self.field
        f.check_frobenius_exponent(q)
        return AlgebraElement(self.algebra, tuple(f.power(x, q) for x in self.values))

    def weight(self) -> int:
        return sum(1 for x in self.values if x)

    def is_zero(self) -> bool:
        return not any(self.values)

    def is_idempotent(self) -> bool:
        return self * self == self

    def is_central(self) -> bool:
        # Commuting with every group element suffices by bilinearity.
        return all(
            self.right_translate(g) == self.left_translate(g) for g in range(len(self.values))
        )

    def is_self_adjoint(self) -> bool:
        return self.adjoint() == self


def euclidean_form(a: AlgebraElement, b: AlgebraElement) -> FieldElement:
    """``sum_g a_g b_g``: the form with the group elements orthonormal."""
    a._check(b)
    f = a.field
    acc = 0
    for x, y in zip(a.values, b.values):
        if x and y:
            acc = f.add(acc, f.mul(x, y))
    return FieldElement(f, acc)


def hermitian_form(a: AlgebraElement, b: AlgebraElement, q: int) -> FieldElement:
    """``sum_g a_g b_g^q`` over a field of order ``q^2``."""
    a._check(b)
    f = a.field
    if f.order != q * q:
        raise ValueError(f"Hermitian form with q={q} needs a field of order {q * q}, got {f!r}")
    acc = 0
    for x, y in zip(a.values, b.values):
        if x and y:
            acc = f.add(acc, f.mul(x, f.power(y, q)))
    return FieldElement(f, acc)


class _AlgebraEvaluator:
    def __init__(self, algebra: GroupAlgebra):
        self.algebra = algebra

    def integer(self, n: int) -> AlgebraElement:
        return self.algebra.scalar(n)

    def symbol(self, name: str) -> AlgebraElement:
        group = self.algebra.group
        if name in group.generators:
            return self.algebra.basis(group.generators[name])
        if name in group.label_index:
            return self.algebra.basis(group.label_index[name])
        if name == "w" and self.algebra.field.m > 1:
            return self.algebra.scalar(self.algebra.field.generator)
        raise ValueError(f"unknown symbol {name!r}")

    def power(self, x: AlgebraElement, k: int) -> AlgebraElement:
        return x**k
