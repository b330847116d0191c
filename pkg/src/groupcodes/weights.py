"""Exhaustive codeword enumeration for weight distributions.

All ``q^k`` linear combinations of a ``k``-row basis are visited.  The basis
is split into an inner block, whose ``q^L`` combinations are materialised
once as a numpy array, and an outer prefix walked in modular Gray-code
order: consecutive outer vectors differ by adding a single basis row (an
XOR over GF(2)).  Each outer step offsets the whole inner block at once.

The outer index range can be cut into contiguous chunks handled by worker
threads.  Chunk results are integer histograms, so the merged result does
not depend on the number of workers.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

import numpy as np

from .errors import BudgetExceededError
from .field import FieldSpec

DEFAULT_BUDGET = 1 << 24
# Target size of the materialised inner block.
_BLOCK = 1 << 14


def check_budget(q: int, k: int, budget: int, what: str = "codewords") -> int:
    if budget < 1:
        raise ValueError(f"budget must be >= 1, got {budget}")
    total = q**k
    if total > budget:
        raise BudgetExceededError(total, budget, what)
    return total


def gray_step_position(i: int, q: int) -> int:
    """Digit of the modular ``q``-ary Gray code that changes from ``i`` to ``i+1``.

    It is the number of trailing ``q-1`` digits of ``i`` in base ``q``; that
    Gray digit increases by one modulo ``q``.
    """
    j = 0
    while i % q == q - 1:
        i //= q
        j += 1
    return j


def gray_digits(i: int, q: int, length: int) -> list[int]:
    """Modular Gray code of ``i``: ``g_t = (d_t - d_{t+1}) mod q``."""
    d = []
    for _ in range(length + 1):
        i, r = divmod(i, q)
        d.append(r)
    return [(d[t] - d[t + 1]) % q for t in range(length)]


def _np_field(f: FieldSpec):
    if f.is_prime_field:
        p = f.p
        return (lambda x, y: (x + y) % p), (lambda c, v: (c * v) % p)
    if f.add_table is None:
        raise ValueError(f"enumeration needs a field of order <= 256, got {f!r}")
    add = np.array(f.add_table, dtype=np.int16)
    mul = np.array(f.mul_table, dtype=np.int16)
    return (lambda x, y: add[x, y]), (lambda c, v: mul[c, v])


def _inner_block(f: FieldSpec, rows: np.ndarray, n: int) -> np.ndarray:
    add, smul = _np_field(f)
    words = np.zeros((1, n), dtype=np.int16)
    for row in rows:
        parts = [words]
        for c in range(1, f.order):
            parts.append(add(words, smul(c, row)[None, :]))
        words = np.concatenate(parts, axis=0)
    return words


def _outer_chunk(f, block, outer, start, stop, n) -> np.ndarray:
    q = f.order
    add, smul = _np_field(f)
    counts = np.zeros(n + 1, dtype=np.int64)
    h = len(outer)
    v = np.zeros(n, dtype=np.int16)
    for t, g in enumerate(gray_digits(start, q, h)):
        if g:
            v = add(v, smul(g, outer[t]))
    for i in range(start, stop):
        if f.order == 2:
            words = block ^ v
        else:
            words = add(block, v[None, :])
        counts += np.bincount(np.count_nonzero(words, axis=1), minlength=n + 1)
        if i + 1 < stop:
            v = add(v, outer[gray_step_position(i, q)])
    return counts


def weight_distribution(
    f: FieldSpec,
    basis: Sequence[Sequence[int]],
    n: int,
    *,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> list[int]:
    """Counts of codewords of each weight ``0..n`` in the row space of ``basis``.

    ``basis`` must be linearly independent (an RREF basis is).
    """
    k = len(basis)
    q = f.order
    check_budget(q, k, budget)
    if k == 0:
        return [1] + [0] * n
    rows = np.array(basis, dtype=np.int16).reshape(k, n)
    inner = min(k, max(1, int(math.log(_BLOCK, q))))
    block = _inner_block(f, rows[k - inner :], n)
    outer = rows[: k - inner]
    n_outer = q ** len(outer)
    workers = max(1, min(workers, n_outer))
    bounds = [n_outer * w // workers for w in range(workers + 1)]
    spans = [(bounds[w], bounds[w + 1]) for w in range(workers) if bounds[w] < bounds[w + 1]]
    if workers == 1:
        parts = [_outer_chunk(f, block, outer, a, b, n) for a, b in spans]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda s: _outer_chunk(f, block, outer, s[0], s[1], n), spans))
    total = np.sum(parts, axis=0)
    return [int(x) for x in total]


def weight_distribution_gf2_packed(rows: Sequence[int], n: int, *, budget: int = DEFAULT_BUDGET) -> list[int]:
    """Binary Gray-code walk over bit-packed rows, one XOR per codeword."""
    k = len(rows)
    check_budget(2, k, budget)
    counts = [0] * (n + 1)
    counts[0] = 1
    word = 0
    for i in range(1, 1 << k):
        word ^= rows[(i & -i).bit_length() - 1]
        counts[word.bit_count()] += 1
    return counts
