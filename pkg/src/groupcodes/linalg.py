"""Exact linear algebra over finite fields.

Vectors and matrix rows are tuples of encoded field values (see
:mod:`groupcodes.field`).  Subspaces are always kept in canonical reduced
row-echelon form, so two subspaces are equal exactly when their stored
bases are identical.

Over GF(2) rows are packed into Python ints (bit ``j`` = column ``j``) and
eliminated with XOR; the result is identical to the generic path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .field import FieldSpec

Vector = tuple[int, ...]


def pack(row: Sequence[int]) -> int:
    bits = 0
    for j, x in enumerate(row):
        if x:
            bits |= 1 << j
    return bits


def unpack(bits: int, ncols: int) -> Vector:
    return tuple((bits >> j) & 1 for j in range(ncols))


def rref_gf2(rows: Iterable[int], ncols: int) -> tuple[list[int], list[int]]:
    """RREF of packed GF(2) rows; returns (nonzero rows, pivot columns)."""
    mat = [r for r in rows if r]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        bit = 1 << c
        for i in range(r, len(mat)):
            if mat[i] & bit:
                break
        else:
            continue
        mat[r], mat[i] = mat[i], mat[r]
        prow = mat[r]
        for i in range(len(mat)):
            if i != r and mat[i] & bit:
                mat[i] ^= prow
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rref_generic(f: FieldSpec, rows: Iterable[Sequence[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    mat = [list(row) for row in rows if any(row)]
    add, mul, neg, inv = f.add, f.mul, f.neg, f.inv
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        for i in range(r, len(mat)):
            if mat[i][c]:
                break
        else:
            continue
        mat[r], mat[i] = mat[i], mat[r]
        prow = mat[r]
        if prow[c] != 1:
            s = inv(prow[c])
            prow = mat[r] = [mul(s, x) for x in prow]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                s = neg(mat[i][c])
                row = mat[i]
                mat[i] = [add(x, mul(s, y)) if y else x for x, y in zip(row, prow)]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rref(f: FieldSpec, rows: Iterable[Sequence[int]], ncols: int, *, packed: bool | None = None) -> tuple[list[Vector], list[int]]:
    """Canonical RREF of a matrix given as rows of encoded values.

    Returns the nonzero RREF rows and their pivot columns; the rank is the
    number of rows.  ``packed`` forces (True) or forbids (False) the GF(2)
    bit-packed path; by default it is used whenever the field is GF(2).
    """
    rows = list(rows)
    for row in rows:
        if len(row) != ncols:
            raise ValueError(f"row of length {len(row)} in a matrix with {ncols} columns")
    if packed is None:
        packed = f.order == 2
    if packed:
        if f.order != 2:
            raise ValueError("packed elimination is only valid over GF(2)")
        prows, pivots = rref_gf2((pack(r) for r in rows), ncols)
        return [unpack(b, ncols) for b in prows], pivots
    grows, pivots = rref_generic(f, rows, ncols)
    return [tuple(r) for r in grows], pivots


def rank(f: FieldSpec, rows: Iterable[Sequence[int]], ncols: int) -> int:
    return len(rref(f, rows, ncols)[1])


def _kernel_from_rref(f: FieldSpec, rows: Sequence[Vector], pivots: Sequence[int], ncols: int) -> list[Vector]:
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [0] * ncols
        v[free] = 1
        for row, pc in zip(rows, pivots):
            if row[free]:
                v[pc] = f.neg(row[free])
        basis.append(tuple(v))
    return basis


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``K^n`` stored by its canonical RREF basis."""

    field: FieldSpec
    n: int
    basis: tuple[Vector, ...]
    pivots: tuple[int, ...] = field(compare=False, default=())

    def __post_init__(self) -> None:
        pivots = []
        for row in self.basis:
            if len(row) != self.n:
                raise ValueError(f"basis row of length {len(row)} in ambient dimension {self.n}")
            nz = [j for j, x in enumerate(row) if x]
            if not nz or row[nz[0]] != 1:
                raise ValueError("basis is not in reduced row-echelon form")
            pivots.append(nz[0])
        if any(a >= b for a, b in zip(pivots, pivots[1:])):
            raise ValueError("basis pivots are not strictly increasing")
        for i, pc in enumerate(pivots):
            if any(row[pc] for k, row in enumerate(self.basis) if k != i):
                raise ValueError("basis is not in reduced row-echelon form")
        object.__setattr__(self, "pivots", tuple(pivots))

    @classmethod
    def span(cls, f: FieldSpec, n: int, vectors: Iterable[Sequence[int]]) -> Subspace:
        rows, pivots = rref(f, vectors, n)
        return cls(f, n, tuple(rows), tuple(pivots))

    @classmethod
    def zero(cls, f: FieldSpec, n: int) -> Subspace:
        return cls(f, n, (), ())

    @classmethod
    def full(cls, f: FieldSpec, n: int) -> Subspace:
        rows = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        return cls(f, n, rows, tuple(range(n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __repr__(self) -> str:
        return f"Subspace({self.field!r}, n={self.n}, dim={self.dim})"

    def _check(self, other: Subspace) -> None:
        if other.n != self.n or other.field != self.field:
            raise ValueError(
                f"ambient mismatch: {self.field!r}^{self.n} vs {other.field!r}^{other.n}"
            )

    def packed_basis(self) -> list[int]:
        return [pack(r) for r in self.basis]

    def reduce(self, vec: Sequence[int]) -> Vector:
        """Residual of ``vec`` after eliminating the pivot columns."""
        if len(vec) != self.n:
            raise ValueError(f"vector of length {len(vec)} in ambient dimension {self.n}")
        f = self.field
        v = list(vec)
        for row, pc in zip(self.basis, self.pivots):
            c = v[pc]
            if c:
                s = f.neg(c)
                v = [f.add(x, f.mul(s, y)) if y else x for x, y in zip(v, row)]
        return tuple(v)

    def contains(self, vec_or_space: Sequence[int] | Subspace) -> bool:
        if isinstance(vec_or_space, Subspace):
            self._check(vec_or_space)
            return all(self.contains(row) for row in vec_or_space.basis)
        if self.field.order == 2 and len(vec_or_space) == self.n:
            bits = pack(vec_or_space)
            for row, pc in zip(self._packed, self.pivots):
                if bits >> pc & 1:
                    bits ^= row
            return bits == 0
        return not any(self.reduce(vec_or_space))

    __contains__ = contains

    @cached_property
    def _packed(self) -> list[int]:
        return self.packed_basis()

    def __add__(self, other: Subspace) -> Subspace:
        self._check(other)
        return Subspace.span(self.field, self.n, self.basis + other.basis)

    def orthogonal(self) -> Subspace:
        """Annihilator under the standard dot product ``sum_i u_i v_i``."""
        return kernel(self.field, self.basis, self.n)

    def intersect(self, other: Subspace) -> Subspace:
        """``U & V = (U^perp + V^perp)^perp``; valid for any non-degenerate form."""
        self._check(other)
        return (self.orthogonal() + other.orthogonal()).orthogonal()

    __and__ = intersect

    def map(self, fn) -> Subspace:
        """Image under a map sending a basis to a spanning set (linear or semilinear bijection)."""
        return Subspace.span(self.field, self.n, (fn(row) for row in self.basis))


def kernel(f: FieldSpec, rows: Iterable[Sequence[int]], ncols: int) -> Subspace:
    """``{v : M v^T = 0}`` for the matrix ``M`` with the given rows."""
    rrows, pivots = rref(f, rows, ncols)
    return Subspace.span(f, ncols, _kernel_from_rref(f, rrows, pivots, ncols))


def sub_sum(u: Subspace, v: Subspace) -> Subspace:
    return u + v


def sub_intersect(u: Subspace, v: Subspace) -> Subspace:
    return u.intersect(v)


def sub_equal(u: Subspace, v: Subspace) -> bool:
    u._check(v)
    return u == v


def sub_contains(u: Subspace, v: Sequence[int] | Subspace) -> bool:
    return u.contains(v)


def solve_in_sum(target: Sequence[int], u: Subspace, v: Subspace) -> tuple[Vector, Vector]:
    """The unique ``(x, y)`` with ``x`` in ``u``, ``y`` in ``v`` and ``x + y = target``.

    Requires ``u & v == 0``; raises ValueError if the decomposition is not
    unique or ``target`` is not in ``u + v``.
    """
    u._check(v)
    f, n = u.field, u.n
    if len(target) != n:
        raise ValueError(f"target of length {len(target)} in ambient dimension {n}")
    k1, k2 = u.dim, v.dim
    stacked = u.basis + v.basis
    if rank(f, stacked, n) != k1 + k2:
        raise ValueError("subspaces intersect nontrivially; decomposition is not unique")
    # Columns are the stacked basis vectors, augmented with the target.
    k = k1 + k2
    aug = [[stacked[j][i] for j in range(k)] + [target[i]] for i in range(n)]
    rows, pivots = rref(f, aug, k + 1)
    if k in pivots:
        raise ValueError("target is not in the sum of the subspaces")
    coeffs = [0] * k
    for row, pc in zip(rows, pivots):
        coeffs[pc] = row[k]

    def combo(vectors, cs):
        out = [0] * n
        for vec, c in zip(vectors, cs):
            if c:
                out = [f.add(x, f.mul(c, y)) for x, y in zip(out, vec)]
        return tuple(out)

    return combo(u.basis, coeffs[:k1]), combo(v.basis, coeffs[k1:])
