"""Finite groups given by explicit Cayley tables.

Elements are indices ``0..n-1`` with the identity always at index 0, so
coordinate positions of codes in ``K^|G|`` are stable across runs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Mapping, Sequence

import numpy as np

from .errors import ParseError

MAX_ORDER = 1 << 12
# Associativity is checked on all triples up to this order, sampled above it.
EXHAUSTIVE_ASSOCIATIVITY_LIMIT = 256
ASSOCIATIVITY_SAMPLES = 100_000


@dataclass(frozen=True, eq=False)
class Group:
    """A validated finite group.

    ``cayley[i][j]`` is the index of ``g_i * g_j``; ``inv[i]`` the index of
    ``g_i^-1``.  ``generators`` maps symbols used in element expressions to
    element indices.
    """

    cayley: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]
    labels: tuple[str, ...]
    generators: Mapping[str, int] = field(default_factory=dict)
    name: str = "group"

    @property
    def order(self) -> int:
        return len(self.cayley)

    def __len__(self) -> int:
        return len(self.cayley)

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, Group):
            return NotImplemented
        return self.cayley == other.cayley and self.labels == other.labels

    def __hash__(self) -> int:
        return hash((self.order, self.labels))

    def __repr__(self) -> str:
        return f"Group({self.name}, order={self.order})"

    def mul(self, i: int, j: int) -> int:
        return self.cayley[i][j]

    def power(self, i: int, k: int) -> int:
        if k < 0:
            i, k = self.inv[i], -k
        result = 0
        for _ in range(k):
            result = self.cayley[result][i]
        return result

    @cached_property
    def table(self) -> np.ndarray:
        return np.array(self.cayley, dtype=np.int64)

    @cached_property
    def label_index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def is_abelian(self) -> bool:
        t = self.table
        return bool(np.array_equal(t, t.T))

    def element_order(self, i: int) -> int:
        k, x = 1, i
        while x != 0:
            x = self.cayley[x][i]
            k += 1
        return k


def validate_table(cayley: Sequence[Sequence[int]], *, seed: int = 0) -> tuple[int, ...]:
    """Check the group axioms and return the inverse table.

    Raises ValueError naming the first violated axiom.
    """
    n = len(cayley)
    if n < 1:
        raise ValueError("Cayley table is empty")
    if n > MAX_ORDER:
        raise ValueError(f"group order {n} exceeds supported maximum {MAX_ORDER}")
    if any(len(row) != n for row in cayley):
        raise ValueError("Cayley table is not square")
    t = np.asarray(cayley, dtype=np.int64)
    if t.min() < 0 or t.max() >= n:
        raise ValueError(f"Cayley table entries must lie in 0..{n - 1}")
    idx = np.arange(n)
    if not (np.array_equal(t[0], idx) and np.array_equal(t[:, 0], idx)):
        raise ValueError("index 0 is not a two-sided identity")
    bad_rows = np.flatnonzero((np.sort(t, axis=1) != idx).any(axis=1))
    if len(bad_rows):
        raise ValueError(f"row {bad_rows[0]} is not a permutation")
    bad_cols = np.flatnonzero((np.sort(t, axis=0) != idx[:, None]).any(axis=0))
    if len(bad_cols):
        raise ValueError(f"column {bad_cols[0]} is not a permutation")
    if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT:
        ts = t.astype(np.int16)
        lhs = ts[ts]  # lhs[a, b, c] = (ab)c
        rhs = ts[idx[:, None, None], ts[None, :, :]]  # rhs[a, b, c] = a(bc)
        bad = np.argwhere(lhs != rhs)
    else:
        rng = np.random.default_rng(seed)
        a, b, c = rng.integers(0, n, size=(3, ASSOCIATIVITY_SAMPLES))
        mask = t[t[a, b], c] != t[a, t[b, c]]
        bad = np.stack([a[mask], b[mask], c[mask]], axis=1)
    if len(bad):
        a, b, c = (int(x) for x in bad[0])
        raise ValueError(f"associativity fails for ({a}, {b}, {c})")
    inv = [0] * n
    for i in range(n):
        hits = np.flatnonzero(t[i] == 0)
        j = int(hits[0])
        if t[j, i] != 0:
            raise ValueError(f"element {i} has no two-sided inverse")
        inv[i] = j
    return tuple(inv)


def _make(cayley, labels, generators, name) -> Group:
    cayley = tuple(tuple(int(x) for x in row) for row in cayley)
    inv = validate_table(cayley)
    return Group(cayley, inv, tuple(labels), dict(generators), name)


def _power_label(sym: str, k: int) -> str:
    if k == 0:
        return "1"
    return sym if k == 1 else f"{sym}^{k}"


def group_cyclic(m: int) -> Group:
    """C_m with generator ``a``; index ``i`` is ``a^i``."""
    if m < 1:
        raise ValueError(f"cyclic group order must be >= 1, got {m}")
    cayley = [[(i + j) % m for j in range(m)] for i in range(m)]
    labels = [_power_label("a", i) for i in range(m)]
    gens = {"a": 1 % m}
    return _make(cayley, labels, gens, f"cyclic:{m}")


def group_dihedral(m: int) -> Group:
    """Dihedral group of order 2m, ``<a, b | a^m = b^2 = 1, b a b = a^-1>``.

    Element ``a^i b^j`` has index ``i + m*j``: the m rotations come first.
    """
    if m < 1:
        raise ValueError(f"dihedral parameter must be >= 1, got {m}")
    n = 2 * m

    def mul(x: int, y: int) -> int:
        i, j = x % m, x // m
        k, l = y % m, y // m
        # b^j a^k = a^((-1)^j k) b^j
        return (i + (k if j == 0 else -k)) % m + m * ((j + l) % 2)

    cayley = [[mul(x, y) for y in range(n)] for x in range(n)]
    labels = []
    for x in range(n):
        i, j = x % m, x // m
        if j == 0:
            labels.append(_power_label("a", i))
        else:
            labels.append("b" if i == 0 else f"{_power_label('a', i)}*b")
    gens = {"a": 1 % m, "b": m}
    return _make(cayley, labels, gens, f"dihedral:{m}")


_SYMBOL = re.compile(r"[A-Za-z]\d*")


def group_direct_product(groups: Sequence[Group]) -> Group:
    """Direct product in list order, with mixed-radix indices.

    The first factor is the least significant digit:
    ``index = i_1 + n_1 * (i_2 + n_2 * (...))``.  A factor with a single
    generator has it renamed ``x<k>`` (1-based factor position); factors
    with several generators get ``<symbol><k>``.
    """
    groups = list(groups)
    if not groups:
        raise ValueError("direct product of an empty list")
    orders = [g.order for g in groups]
    n = int(np.prod(orders))
    if n > MAX_ORDER:
        raise ValueError(f"group order {n} exceeds supported maximum {MAX_ORDER}")

    def digits(x: int) -> list[int]:
        out = []
        for o in orders:
            x, d = divmod(x, o)
            out.append(d)
        return out

    def encode(ds: Sequence[int]) -> int:
        x = 0
        for d, o in zip(reversed(ds), reversed(orders)):
            x = x * o + d
        return x

    all_digits = [digits(x) for x in range(n)]
    cayley = [
        [encode([g.cayley[a][b] for g, a, b in zip(groups, da, db)]) for db in all_digits]
        for da in all_digits
    ]

    renames: list[dict[str, str]] = []
    gens: dict[str, int] = {}
    for k, g in enumerate(groups, start=1):
        if len(g.generators) == 1:
            ren = {sym: f"x{k}" for sym in g.generators}
        else:
            ren = {sym: f"{sym}{k}" for sym in g.generators}
        renames.append(ren)
        for sym, idx in g.generators.items():
            ds = [0] * len(groups)
            ds[k - 1] = idx
            gens[ren[sym]] = encode(ds)

    labels = []
    for ds in all_digits:
        parts = []
        for g, d, ren in zip(groups, ds, renames):
            if d == 0:
                continue
            parts.append(_SYMBOL.sub(lambda mt: ren.get(mt.group(0), mt.group(0)), g.labels[d]))
        labels.append("*".join(parts) if parts else "1")
    name = "x".join(g.name for g in groups)
    return _make(cayley, labels, gens, name)


def group_from_table(cayley: Sequence[Sequence[int]]) -> Group:
    """Validate an arbitrary Cayley table; elements are labelled ``g0..g(n-1)``."""
    n = len(cayley)
    labels = ["1"] + [f"g{i}" for i in range(1, n)]
    return _make(cayley, labels, {}, f"table:{n}")


def group_is_abelian(g: Group) -> bool:
    return g.is_abelian()


def group_from_spec(spec: str) -> Group:
    """Build a group from ``cyclic:m``, ``abelian:m1,m2,...``, ``dihedral:m`` or ``table:<path>``."""
    kind, sep, arg = spec.partition(":")
    if not sep:
        raise ParseError(f"group spec {spec!r} has no ':'", 0, spec)
    kind = kind.strip().lower()
    offset = len(kind) + 1
    try:
        if kind == "cyclic":
            return group_cyclic(_parse_int(arg, spec, offset))
        if kind == "dihedral":
            return group_dihedral(_parse_int(arg, spec, offset))
        if kind == "abelian":
            ms = [_parse_int(part, spec, offset) for part in arg.split(",")]
            return group_direct_product([group_cyclic(m) for m in ms])
        if kind == "table":
            return group_from_table(_read_table(Path(arg.strip())))
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc), offset, spec) from exc
    raise ParseError(f"unknown group kind {kind!r}", 0, spec)


def _parse_int(text: str, spec: str, offset: int) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise ParseError(f"expected integer, got {text.strip()!r}", offset, spec) from None


def _read_table(path: Path) -> list[list[int]]:
    try:
        text = path.read_text()
    except OSError as exc:
        raise ValueError(f"cannot read table {path}: {exc.strerror}") from exc
    return [[int(x) for x in line.split()] for line in text.splitlines() if line.strip()]
