"""Arithmetic in finite fields GF(p^m).

Elements are encoded as integers ``v = c_0 + c_1 p + ... + c_{m-1} p^{m-1}``
where ``c_0 + c_1 x + ...`` is the residue polynomial modulo the field's
irreducible modulus.  For prime fields this is just ``v mod p``.  In an
extension field the residue of ``x`` is written ``w`` and encodes to ``p``.

Hot loops elsewhere in the package work on these raw integers through
:meth:`FieldSpec.add`, :meth:`FieldSpec.mul` and friends; :class:`FieldElement`
is the checked, user-facing scalar type.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import product
from typing import Sequence

from .errors import ParseError

# Low-to-high coefficients.
BUILTIN_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),  # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),  # x^3 + x + 1
    (3, 2): (1, 0, 1),  # x^2 + 1
}

# Multiplication tables are precomputed up to this field order.
_TABLE_LIMIT = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, m)`` with ``q == p**m`` and ``p`` prime, or None."""
    if q < 2:
        return None
    p = 2
    while p * p <= q and q % p:
        p += 1
    if q % p:
        p = q
    m = 0
    while q % p == 0:
        q //= p
        m += 1
    return (p, m) if q == 1 else None


def _trim(poly: Sequence[int]) -> tuple[int, ...]:
    poly = list(poly)
    while poly and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


def _poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[int, ...]:
    """Remainder of ``a`` divided by ``b`` over GF(p); ``b`` must be nonzero."""
    a = list(_trim(a))
    b = _trim(b)
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        coef = (a[-1] * inv_lead) % p
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bc) % p
        while a and a[-1] == 0:
            a.pop()
    return tuple(a)


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    modulus = _trim(modulus)
    deg = len(modulus) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for low in product(range(p), repeat=d):
            if not _poly_mod(modulus, (*low, 1), p):
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The finite field GF(p^m) defined by a monic irreducible ``modulus``.

    Construct through :func:`field_make` or :func:`field_from_order`, which
    validate their input; the constructor itself also re-checks invariants.
    """

    p: int
    m: int
    modulus: tuple[int, ...]

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"characteristic {self.p} is not prime")
        if self.m < 1:
            raise ValueError(f"extension degree must be >= 1, got {self.m}")
        mod = tuple(int(c) % self.p for c in self.modulus)
        if len(mod) != self.m + 1 or mod[-1] != 1:
            raise ValueError(f"modulus {self.modulus} is not monic of degree {self.m}")
        if self.m > 1 and not is_irreducible(mod, self.p):
            raise ValueError(
                f"modulus {format_poly(mod, 'x')} is reducible over GF({self.p})"
            )
        object.__setattr__(self, "modulus", mod)

    @property
    def order(self) -> int:
        return self.p**self.m

    q = order

    @property
    def is_prime_field(self) -> bool:
        return self.m == 1

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.order}; {format_poly(self.modulus, 'x')})"

    # -- raw integer arithmetic -------------------------------------------

    def to_poly(self, v: int) -> tuple[int, ...]:
        """Residue coefficients (low-to-high, length m) of the encoded value."""
        out = []
        for _ in range(self.m):
            v, c = divmod(v, self.p)
            out.append(c)
        return tuple(out)

    def from_poly(self, coeffs: Sequence[int]) -> int:
        """Encode a polynomial, reducing it modulo the field modulus."""
        if len(coeffs) > self.m:
            coeffs = _poly_mod(coeffs, self.modulus, self.p)
        v = 0
        for c in reversed(coeffs):
            v = v * self.p + (c % self.p)
        return v

    def _mul_slow(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        pa, pb = self.to_poly(a), self.to_poly(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(pa):
            if x:
                for j, y in enumerate(pb):
                    prod[i + j] += x * y
        return self.from_poly(prod)

    def _add_slow(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        pa, pb = self.to_poly(a), self.to_poly(b)
        return self.from_poly([x + y for x, y in zip(pa, pb)])

    @cached_property
    def add_table(self) -> tuple[tuple[int, ...], ...] | None:
        if self.order > _TABLE_LIMIT:
            return None
        q = self.order
        return tuple(tuple(self._add_slow(a, b) for b in range(q)) for a in range(q))

    @cached_property
    def mul_table(self) -> tuple[tuple[int, ...], ...] | None:
        if self.order > _TABLE_LIMIT:
            return None
        q = self.order
        return tuple(tuple(self._mul_slow(a, b) for b in range(q)) for a in range(q))

    @cached_property
    def neg_table(self) -> tuple[int, ...]:
        return tuple(self.from_poly([-c for c in self.to_poly(v)]) for v in range(self.order))

    @cached_property
    def _inv_cache(self) -> dict[int, int]:
        return {}

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        t = self.add_table
        return t[a][b] if t is not None else self._add_slow(a, b)

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        t = self.mul_table
        return t[a][b] if t is not None else self._mul_slow(a, b)

    def neg(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        return self.neg_table[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def inv(self, a: int) -> int:
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        cache = self._inv_cache
        if a not in cache:
            cache[a] = self.from_poly(_poly_inverse(self.to_poly(a), self.modulus, self.p))
        return cache[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        result = 1
        while k:
            if k & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            k >>= 1
        return result

    def frobenius(self, a: int, q: int) -> int:
        self.check_frobenius_exponent(q)
        return self.power(a, q)

    def check_frobenius_exponent(self, q: int) -> None:
        pm = prime_power(q)
        if pm is None or pm[0] != self.p or pm[1] > self.m:
            raise ValueError(f"{q} is not a power p^k of p={self.p} with k <= {self.m}")

    def hermitian_q(self) -> int:
        """The ``q`` with ``|K| = q^2``; raises if the order is not a square."""
        if self.m % 2:
            raise ValueError(f"Hermitian form needs a field of square order, got {self!r}")
        return self.p ** (self.m // 2)

    # -- elements ---------------------------------------------------------

    def __call__(self, value: int | Sequence[int]) -> FieldElement:
        """Coerce an integer (reduced mod p) or a residue coefficient list."""
        if isinstance(value, int):
            v = self.from_poly([value]) if self.m > 1 else value % self.p
        else:
            v = self.from_poly(list(value))
        return FieldElement(self, v)

    def element(self, encoded: int) -> FieldElement:
        """Wrap an already-encoded value in ``range(order)``."""
        if not 0 <= encoded < self.order:
            raise ValueError(f"encoded value {encoded} out of range for {self!r}")
        return FieldElement(self, encoded)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def generator(self) -> FieldElement:
        """The residue ``w`` of the modulus variable in an extension field."""
        if self.m == 1:
            raise ValueError(f"{self!r} is a prime field and has no symbol w")
        return FieldElement(self, self.p)

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, v) for v in range(self.order)]

    def format(self, v: int) -> str:
        if self.m == 1:
            return str(v)
        return format_poly(self.to_poly(v), "w")

    def parse(self, text: str) -> FieldElement:
        """Parse a field literal such as ``3``, ``w``, ``w+1`` or ``2*w^2``."""
        from .expr import parse_expression

        return parse_expression(text, _FieldEvaluator(self))


def _poly_inverse(a: Sequence[int], modulus: Sequence[int], p: int) -> tuple[int, ...]:
    r0, r1 = _trim(modulus), _trim(a)
    s0, s1 = (), (1,)
    while r1:
        quo, rem = _poly_divmod(r0, r1, p)
        r0, r1 = r1, rem
        s0, s1 = s1, _poly_sub(s0, _poly_mul(quo, s1, p), p)
    # r0 is a nonzero constant since the modulus is irreducible.
    c = pow(r0[0], p - 2, p)
    return tuple((x * c) % p for x in s0)


def _poly_divmod(a, b, p):
    a = list(_trim(a))
    b = _trim(b)
    inv_lead = pow(b[-1], p - 2, p)
    quo = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        coef = (a[-1] * inv_lead) % p
        shift = len(a) - len(b)
        quo[shift] = coef
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bc) % p
        while a and a[-1] == 0:
            a.pop()
    return _trim(quo), tuple(a)


def _poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _poly_sub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def format_poly(coeffs: Sequence[int], var: str) -> str:
    """Render low-to-high coefficients as ``w^2+w+1`` (highest degree first)."""
    terms = []
    for deg in range(len(coeffs) - 1, -1, -1):
        c = coeffs[deg]
        if not c:
            continue
        if deg == 0:
            terms.append(str(c))
            continue
        mono = var if deg == 1 else f"{var}^{deg}"
        terms.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(terms) if terms else "0"


@dataclass(frozen=True)
class FieldElement:
    """A scalar in a specific :class:`FieldSpec`.

    Mixing elements of different fields is an error rather than a coercion.
    Plain ``int`` operands are promoted into the element's own field.
    """

    spec: FieldSpec = field(repr=False)
    value: int

    @property
    def rep(self) -> tuple[int, ...]:
        return self.spec.to_poly(self.value)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise ValueError(f"cannot combine elements of {self.spec!r} and {other.spec!r}")
            return other.value
        if isinstance(other, int):
            return self.spec(other).value
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.spec, self.spec.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.spec, self.spec.sub(self.value, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.spec, self.spec.sub(o, self.value))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.spec, self.spec.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.spec, self.spec.mul(self.value, self.spec.inv(o)))

    def __neg__(self) -> FieldElement:
        return FieldElement(self.spec, self.spec.neg(self.value))

    def __pow__(self, k: int) -> FieldElement:
        return FieldElement(self.spec, self.spec.power(self.value, k))

    def __bool__(self) -> bool:
        return self.value != 0

    def inverse(self) -> FieldElement:
        return FieldElement(self.spec, self.spec.inv(self.value))

    def frobenius(self, q: int) -> FieldElement:
        """``self ** q`` for ``q`` a power of the characteristic."""
        return FieldElement(self.spec, self.spec.frobenius(self.value, q))

    def __str__(self) -> str:
        return self.spec.format(self.value)


def field_make(p: int, m: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Build GF(p^m), using a built-in modulus for GF(p), GF(4), GF(8), GF(9).

    Equal arguments return the same instance, so arithmetic tables are
    built once per field.
    """
    return _field_make(p, m, None if modulus is None else tuple(modulus))


@lru_cache(maxsize=None)
def _field_make(p: int, m: int, modulus: tuple[int, ...] | None) -> FieldSpec:
    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if m < 1:
        raise ValueError(f"extension degree must be >= 1, got {m}")
    if modulus is None:
        if m == 1:
            modulus = (0, 1)
        elif (p, m) in BUILTIN_MODULI:
            modulus = BUILTIN_MODULI[(p, m)]
        else:
            raise ValueError(f"no built-in modulus for GF({p}^{m}); supply one")
    return FieldSpec(p, m, tuple(modulus))


def field_from_order(q: int) -> FieldSpec:
    pm = prime_power(q)
    if pm is None:
        raise ValueError(f"{q} is not a prime power")
    return field_make(*pm)


_FIELD_LITERAL = re.compile(r"^\s*(?:GF\(\s*(\d+)\s*\)|(\d+))\s*$", re.IGNORECASE)


def field_from_literal(text: str) -> FieldSpec:
    """Parse a CLI field literal: the field order, e.g. ``2``, ``4`` or ``GF(9)``."""
    match = _FIELD_LITERAL.match(text)
    if not match:
        raise ParseError(f"invalid field literal {text!r}", 0, text)
    try:
        return field_from_order(int(match.group(1) or match.group(2)))
    except ValueError as exc:
        raise ParseError(str(exc), 0, text) from exc


class _FieldEvaluator:
    def __init__(self, spec: FieldSpec):
        self.spec = spec

    def integer(self, n: int) -> FieldElement:
        return self.spec(n)

    def symbol(self, name: str) -> FieldElement:
        if name == "w" and self.spec.m > 1:
            return self.spec.generator
        raise ValueError(f"unknown symbol {name!r}")

    def power(self, x: FieldElement, k: int) -> FieldElement:
        return x**k
