from __future__ import annotations

import itertools

import numpy as np
import pytest

from groupcodes import GroupAlgebra, field_make, group_cyclic, group_dihedral

D14_E = "1+a + a^2 +a^4 +b +a^2b +a^5b +a^6b"


@pytest.fixture(scope="session")
def gf2():
    return field_make(2)


@pytest.fixture(scope="session")
def gf4():
    return field_make(2, 2)


@pytest.fixture(scope="session")
def d14(gf2):
    return GroupAlgebra(gf2, group_dihedral(7))


@pytest.fixture(scope="session")
def c7(gf2):
    return GroupAlgebra(gf2, group_cyclic(7))


@pytest.fixture(scope="session")
def d14_e(d14):
    return d14.parse(D14_E)


def all_vectors(q: int, n: int) -> np.ndarray:
    """Every vector of GF(q)^n as rows of encoded values."""
    return np.array(list(itertools.product(range(q), repeat=n)), dtype=np.int64).reshape(-1, n)


def brute_span(f, basis, n):
    """Set of all linear combinations, by direct enumeration of coefficients."""
    words = set()
    for coeffs in itertools.product(range(f.order), repeat=len(basis)):
        word = [0] * n
        for c, row in zip(coeffs, basis):
            word = [f.add(x, f.mul(c, y)) for x, y in zip(word, row)]
        words.add(tuple(word))
    return words


def brute_annihilator(f, basis, n, conj=None):
    """All v with sum_g b_g * conj(v_g) = 0 for every basis row b."""
    conj = conj or (lambda x: x)
    out = set()
    for v in itertools.product(range(f.order), repeat=n):
        cv = [conj(x) for x in v]
        ok = True
        for row in basis:
            acc = 0
            for x, y in zip(row, cv):
                acc = f.add(acc, f.mul(x, y))
            if acc:
                ok = False
                break
        if ok:
            out.add(v)
    return out


def _np_tables(f):
    add = np.array([[f.add(x, y) for y in range(f.order)] for x in range(f.order)], dtype=np.int64)
    mul = np.array([[f.mul(x, y) for y in range(f.order)] for x in range(f.order)], dtype=np.int64)
    return add, mul


def np_span(f, basis, n):
    """All codewords of the row space, as a set of tuples (numpy enumeration)."""
    add, mul = _np_tables(f)
    words = np.zeros((1, n), dtype=np.int64)
    for row in basis:
        row = np.asarray(row, dtype=np.int64)
        words = np.concatenate([add[words, mul[c, row][None, :]] for c in range(f.order)])
    return set(map(tuple, words.tolist()))


def np_annihilator(f, basis, n, conj=None):
    """All v in K^n with sum_g b_g * conj(v_g) = 0 for every basis row b."""
    add, mul = _np_tables(f)
    vs = all_vectors(f.order, n)
    cv = vs if conj is None else np.vectorize(conj)(vs)
    ok = np.ones(len(vs), dtype=bool)
    for row in basis:
        acc = np.zeros(len(vs), dtype=np.int64)
        for g, b in enumerate(row):
            acc = add[acc, mul[b, cv[:, g]]]
        ok &= acc == 0
    return set(map(tuple, vs[ok].tolist()))


def brute_idempotents(alg):
    """Every e with e*e == e, squaring straight from the Cayley table."""
    f, grp = alg.field, alg.group
    add, mul = _np_tables(f)
    n = grp.order
    vs = all_vectors(f.order, n)
    sq = np.zeros_like(vs)
    for h in range(n):
        for k in range(n):
            g = grp.cayley[h][k]
            sq[:, g] = add[sq[:, g], mul[vs[:, h], vs[:, k]]]
    hit = (sq == vs).all(axis=1)
    return [alg._raw(tuple(int(x) for x in row)) for row in vs[hit]]
