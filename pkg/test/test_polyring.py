import random

import pytest

from steinercodes import polyring
from steinercodes.error import ParameterRangeError
from steinercodes.field import field_new
from steinercodes.polyring import BinPoly

galois = pytest.importorskip('galois')


def test_carry_less_arithmetic():
    assert polyring.clmul(0b11, 0b11) == 0b101
    assert polyring.cldivmod(0b10011, 0b11) == (0b1110, 0b1)
    rng = random.Random(1)
    for _ in range(200):
        a = rng.getrandbits(40)
        b = rng.getrandbits(20) | 1
        q, r = polyring.cldivmod(a, b)
        assert polyring.clmul(q, b) ^ r == a
        assert polyring.degree(r) < polyring.degree(b)
    with pytest.raises(ZeroDivisionError):
        polyring.cldivmod(5, 0)


@pytest.mark.parametrize('poly, irreducible', [
    (0x13, True),
    (0x19, True),
    (0x1F, True),
    (0x15, False),
    (0x11D, True),
    (0x11B, True),
    (0x101, False),
])
def test_irreducibility(poly, irreducible):
    assert polyring.is_irreducible(poly) == irreducible


def test_bin_poly_operators():
    p = BinPoly(0x13)
    assert str(p) == 'x^4 + x + 1'
    assert p.degree == 4
    assert p.exponents() == [0, 1, 4]
    assert BinPoly.from_exponents([4, 1, 0]) == p
    q, r = divmod(p * BinPoly(0b111) + BinPoly(1), BinPoly(0b111))
    assert q == p and r == BinPoly(1)
    assert p + p == BinPoly(0)
    assert str(BinPoly(0)) == '0'
    with pytest.raises(ValueError):
        BinPoly(-1)


def test_minimal_poly_of_alpha_is_the_field_polynomial(gf256):
    assert polyring.minimal_poly(gf256, 1) == BinPoly(gf256.primitive_poly)
    assert polyring.minimal_poly(gf256, 0) == BinPoly(0b11)


@pytest.mark.parametrize('m', [4, 6, 8])
def test_minimal_polys_match_galois(m):
    ctx = field_new(m)
    gf = galois.GF(2 ** m, irreducible_poly=galois.Poly.Int(ctx.primitive_poly))
    for s in (1, 3, 5, 1 + (1 << (m // 2)), ctx.n - 1):
        expected = gf(ctx.element(s)).minimal_poly()
        assert polyring.minimal_poly(ctx, s).mask == int(expected)


@pytest.mark.parametrize('m, e, degree', [
    (4, 1, 8),
    (4, 2, 6),
    (5, 2, 10),
    (6, 3, 9),
    (8, 2, 16),
    (8, 4, 12),
])
def test_generator_poly_degree(m, e, degree):
    ctx = field_new(m)
    g = polyring.generator_poly(ctx, e)
    assert g.degree == degree
    assert g.divides_xn_minus_1(ctx.n)
    assert g * polyring.parity_check_poly(ctx, e) == BinPoly.x_pow_minus_1(ctx.n)


def test_generator_poly_rejects_e(gf64):
    with pytest.raises(ParameterRangeError):
        polyring.generator_poly(gf64, 4)
    with pytest.raises(ParameterRangeError):
        polyring.generator_poly(gf64, 0)


def test_poly_lcm():
    a = BinPoly(0b111)
    b = BinPoly(0x13)
    assert polyring.poly_lcm([a, b, a]) == a * b
