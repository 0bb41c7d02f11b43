"""Field laws under full enumeration for every field the planes use."""

import pytest

from psca.errors import InputError
from psca.fields import is_prime, make_field, prime_power, smallest_irreducible

FIELD_PARAMS = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (3, 2), (3, 4)]


def test_is_prime():
    primes = [p for p in range(2, 40) if is_prime(p)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]
    assert not is_prime(1)


def test_prime_power():
    assert prime_power(8) == (2, 3)
    assert prime_power(9) == (3, 2)
    assert prime_power(7) == (7, 1)
    for bad in [1, 6, 12, 100]:
        with pytest.raises(InputError):
            prime_power(bad)


def test_rejects_bad_parameters():
    with pytest.raises(InputError):
        make_field(4, 1)
    with pytest.raises(InputError):
        make_field(3, 0)
    with pytest.raises(InputError):
        make_field(3, 5)  # 243 over the default cap


def test_gf3_inverse_of_two():
    gf = make_field(3)
    assert gf.inv(2) == 2


def test_gf2_add_is_xor():
    gf = make_field(2)
    for a in gf.elements():
        for b in gf.elements():
            assert gf.add(a, b) == a ^ b


def test_gf9_multiplicative_order_divides_eight():
    gf = make_field(3, 2)
    for x in range(1, 9):
        y = 1
        for _ in range(8):
            y = gf.mul(y, x)
        assert y == 1


def test_gf9_modulus_is_smallest_irreducible():
    # x^2 + 1 has no root mod 3, and every smaller encoding (x^2) factors
    assert smallest_irreducible(3, 2) == (1, 0, 1)


@pytest.mark.parametrize("p,e", FIELD_PARAMS)
def test_field_laws_full_enumeration(p, e):
    gf = make_field(p, e)
    q = gf.order
    elems = list(gf.elements())
    for a in elems:
        assert gf.add(a, 0) == a
        assert gf.mul(a, 1) == a
        assert gf.mul(a, 0) == 0
        assert gf.add(a, gf.neg(a)) == 0
        if a != 0:
            assert gf.mul(a, gf.inv(a)) == 1
    for a in elems:
        for b in elems:
            assert gf.add(a, b) == gf.add(b, a)
            assert gf.mul(a, b) == gf.mul(b, a)
    # associativity and distributivity on a full triple sweep for small q,
    # on a deterministic subsample for GF(81)
    triples = (
        [(a, b, c) for a in elems for b in elems for c in elems]
        if q <= 16
        else [(a, b, c) for a in elems[::5] for b in elems[::3] for c in elems[::4]]
    )
    for a, b, c in triples:
        assert gf.add(gf.add(a, b), c) == gf.add(a, gf.add(b, c))
        assert gf.mul(gf.mul(a, b), c) == gf.mul(a, gf.mul(b, c))
        assert gf.mul(a, gf.add(b, c)) == gf.add(gf.mul(a, b), gf.mul(a, c))


def test_zero_has_no_inverse():
    gf = make_field(5)
    with pytest.raises(InputError):
        gf.inv(0)


def test_coeff_vectors():
    gf = make_field(3, 2)
    assert gf.coeffs(0) == (0, 0)
    assert gf.coeffs(5) == (2, 1)  # 2 + 1*x  ->  encoding 2 + 3*1
