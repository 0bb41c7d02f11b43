"""Arithmetic in GF(p^e) for the prime powers the plane constructions need.

Field elements are encoded as integers 0..q-1: the element with coefficient
vector (c_0, ..., c_{e-1}) over GF(p) (constant term first) is encoded as
sum(c_i * p**i).  The encoding doubles as the canonical element order, which
keeps constructed planes identical across runs and machines.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from psca.errors import InputError

DEFAULT_SIZE_CAP = 81


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Decompose q = p**e with p prime, or raise InputError."""
    if q < 2:
        raise InputError(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            e = 0
            m = q
            while m % p == 0:
                m //= p
                e += 1
            if m == 1:
                return p, e
            raise InputError(f"{q} is not a prime power")
    raise InputError(f"{q} is not a prime power")


# -- polynomial helpers over GF(p); coefficient lists, constant term first --


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    # m must be monic
    a = a[:]
    while len(a) >= len(m):
        coef = a[-1]
        if coef:
            shift = len(a) - len(m)
            for i, mi in enumerate(m):
                a[shift + i] = (a[shift + i] - coef * mi) % p
        a.pop()
    return _poly_trim(a)


def _encode(coeffs: list[int], p: int) -> int:
    val = 0
    for c in reversed(coeffs):
        val = val * p + c
    return val


def _decode(x: int, p: int, length: int) -> list[int]:
    out = []
    for _ in range(length):
        out.append(x % p)
        x //= p
    return out


def _monic_poly(enc: int, p: int, degree: int) -> list[int]:
    """The monic degree-d polynomial whose non-leading coefficients encode enc."""
    return _decode(enc, p, degree) + [1]


def _is_irreducible(f: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg(f)//2."""
    degree = len(f) - 1
    for d in range(1, degree // 2 + 1):
        for enc in range(p**d):
            g = _monic_poly(enc, p, d)
            if not _poly_mod(f, g, p):
                return False
    return degree >= 1


def smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically smallest (by encoding) monic irreducible of degree e."""
    for enc in range(p**e):
        f = _monic_poly(enc, p, e)
        if _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError(f"no irreducible of degree {e} over GF({p})")  # cannot happen


@dataclass(frozen=True)
class FiniteField:
    """GF(p^e) with full add/mul/inv tables (built once; q is capped small)."""

    p: int
    e: int
    modulus: tuple[int, ...]
    _add: tuple[tuple[int, ...], ...] = field(repr=False)
    _mul: tuple[tuple[int, ...], ...] = field(repr=False)
    _inv: tuple[int, ...] = field(repr=False)

    @property
    def order(self) -> int:
        return self.p**self.e

    def elements(self) -> range:
        return range(self.order)

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self.neg(b)]

    def neg(self, a: int) -> int:
        return self._inv_add(a)

    def _inv_add(self, a: int) -> int:
        coeffs = _decode(a, self.p, self.e)
        return _encode([(-c) % self.p for c in coeffs], self.p)

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise InputError("0 has no multiplicative inverse")
        return self._inv[a]

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Coefficient vector of an element, constant term first."""
        return tuple(_decode(a, self.p, self.e))


def make_field(p: int, e: int = 1, size_cap: int = DEFAULT_SIZE_CAP) -> FiniteField:
    """GF(p^e) with the deterministically chosen smallest irreducible modulus."""
    if not is_prime(p):
        raise InputError(f"p={p} is not prime")
    if e < 1:
        raise InputError(f"extension degree must be >= 1, got {e}")
    q = p**e
    if q > size_cap:
        raise InputError(f"field size {q} exceeds cap {size_cap}")

    modulus = list(smallest_irreducible(p, e)) if e > 1 else [0, 1]

    polys = [_decode(x, p, e) for x in range(q)]
    add_table = tuple(
        tuple(_encode([(ai + bi) % p for ai, bi in zip(a, b)], p) for b in polys)
        for a in polys
    )
    mul_table = []
    for a in polys:
        row = []
        for b in polys:
            prod = _poly_mod(_poly_mul(_poly_trim(a[:]), _poly_trim(b[:]), p), modulus, p)
            row.append(_encode(prod, p))
        mul_table.append(tuple(row))
    inv_table = [0] * q
    for a in range(1, q):
        for b in range(1, q):
            if mul_table[a][b] == 1:
                inv_table[a] = b
                break
        else:
            raise AssertionError(f"no inverse for element {a}: modulus not irreducible?")

    return FiniteField(
        p=p,
        e=e,
        modulus=tuple(modulus),
        _add=add_table,
        _mul=tuple(mul_table),
        _inv=tuple(inv_table),
    )
