"""
Polynomials over GF(2)

Polynomials are packed as Python integers: bit ``i`` holds the coefficient of ``x^i``. Python integers have arbitrary
precision, so the same representation serves ``x^4 + x + 1`` and polynomials of degree 65535 alike.

The module has two layers:

* plain functions on integer masks (`clmul`, `cldivmod`, `clgcd`, `clpowmod`) used wherever speed matters, e.g. by
  the irreducibility test in `steinercodes.field`,
* the `BinPoly` value type with operator support and the constructions of minimal, generator and parity-check
  polynomials of the codes C_E.
"""
from functools import reduce
from typing import Iterable, List, Tuple, TYPE_CHECKING

import logwood

from steinercodes import cyclotomic
from steinercodes.error import InconsistencyError, ParameterRangeError

if TYPE_CHECKING:
    from steinercodes.field import FieldCtx


def degree(a: int) -> int:
    """
    Degree of the polynomial packed in ``a``; -1 for the zero polynomial
    """
    return a.bit_length() - 1


def clmul(a: int, b: int) -> int:
    """
    Carry-less product of two packed polynomials
    """
    if a.bit_length() < b.bit_length():
        a, b = b, a
    result = 0
    shift = 0
    while b:
        if b & 1:
            result ^= a << shift
        b >>= 1
        shift += 1
    return result


def cldivmod(a: int, b: int) -> Tuple[int, int]:
    """
    Long division of packed polynomials

    :raises ZeroDivisionError: if ``b`` is the zero polynomial
    """
    if b == 0:
        raise ZeroDivisionError('Division by the zero polynomial')
    db = degree(b)
    quotient = 0
    while a and degree(a) >= db:
        shift = degree(a) - db
        quotient |= 1 << shift
        a ^= b << shift
    return quotient, a


def clmod(a: int, b: int) -> int:
    return cldivmod(a, b)[1]


def clgcd(a: int, b: int) -> int:
    while b:
        a, b = b, clmod(a, b)
    return a


def clmulmod(a: int, b: int, modulus: int) -> int:
    return clmod(clmul(a, b), modulus)


def clpowmod(base: int, exponent: int, modulus: int) -> int:
    """
    ``base^exponent mod modulus`` by square-and-multiply
    """
    result = clmod(1, modulus)
    base = clmod(base, modulus)
    while exponent:
        if exponent & 1:
            result = clmulmod(result, base, modulus)
        base = clmulmod(base, base, modulus)
        exponent >>= 1
    return result


def is_irreducible(p: int) -> bool:
    """
    Ben-Or irreducibility test over GF(2)

    ``p`` of degree ``d`` is irreducible iff ``gcd(x^(2^i) - x, p) = 1`` for all ``1 <= i <= d/2``.
    """
    d = degree(p)
    if d < 1:
        return False
    x = 0b10
    power = x
    for _ in range(d // 2):
        power = clmulmod(power, power, p)
        if clgcd(p, power ^ x) != 1:
            return False
    return True


def divides_xn_minus_1(g: int, n: int) -> bool:
    """
    Check ``g | x^n - 1`` without materialising ``x^n - 1``
    """
    return clpowmod(0b10, n, g) == clmod(1, g)


class BinPoly:
    """
    Immutable polynomial over GF(2)

    Supports ``+`` (XOR), ``*``, ``divmod``, ``//``, ``%`` and equality. The zero polynomial has degree -1.
    """

    __slots__ = ['_mask']

    def __init__(self, mask: int):
        if mask < 0:
            raise ValueError(f'Invalid polynomial mask {mask}')
        self._mask = mask

    @staticmethod
    def from_exponents(exponents: Iterable[int]) -> 'BinPoly':
        mask = 0
        for i in exponents:
            mask ^= 1 << i
        return BinPoly(mask)

    @staticmethod
    def x_pow_minus_1(n: int) -> 'BinPoly':
        return BinPoly((1 << n) | 1)

    @property
    def mask(self) -> int:
        return self._mask

    @property
    def degree(self) -> int:
        return degree(self._mask)

    @property
    def is_zero(self) -> bool:
        return self._mask == 0

    def exponents(self) -> List[int]:
        return [i for i in range(self._mask.bit_length()) if (self._mask >> i) & 1]

    def coefficients(self) -> List[int]:
        """
        Coefficient list ``[c_0, ..., c_deg]``
        """
        return [(self._mask >> i) & 1 for i in range(self._mask.bit_length())]

    def to_hex(self) -> str:
        return hex(self._mask)

    def divides_xn_minus_1(self, n: int) -> bool:
        return divides_xn_minus_1(self._mask, n)

    def __add__(self, other: 'BinPoly') -> 'BinPoly':
        return BinPoly(self._mask ^ other._mask)

    __sub__ = __add__

    def __mul__(self, other: 'BinPoly') -> 'BinPoly':
        return BinPoly(clmul(self._mask, other._mask))

    def __divmod__(self, other: 'BinPoly') -> Tuple['BinPoly', 'BinPoly']:
        q, r = cldivmod(self._mask, other._mask)
        return BinPoly(q), BinPoly(r)

    def __floordiv__(self, other: 'BinPoly') -> 'BinPoly':
        return divmod(self, other)[0]

    def __mod__(self, other: 'BinPoly') -> 'BinPoly':
        return divmod(self, other)[1]

    def __eq__(self, other):
        if not isinstance(other, BinPoly):
            return NotImplemented
        return self._mask == other._mask

    def __hash__(self):
        return hash(self._mask)

    def __repr__(self):
        return f'BinPoly({hex(self._mask)})'

    def __str__(self):
        if self._mask == 0:
            return '0'
        terms = []
        for i in reversed(self.exponents()):
            if i == 0:
                terms.append('1')
            elif i == 1:
                terms.append('x')
            else:
                terms.append(f'x^{i}')
        return ' + '.join(terms)


def poly_mul(a: BinPoly, b: BinPoly) -> BinPoly:
    return a * b


def poly_divmod(a: BinPoly, b: BinPoly) -> Tuple[BinPoly, BinPoly]:
    return divmod(a, b)


def poly_gcd(a: BinPoly, b: BinPoly) -> BinPoly:
    return BinPoly(clgcd(a.mask, b.mask))


def poly_lcm(polys: Iterable[BinPoly]) -> BinPoly:
    """
    Least common multiple via the gcd chain ``lcm(a, b) = a * b / gcd(a, b)``
    """

    def lcm2(a: BinPoly, b: BinPoly) -> BinPoly:
        quotient, remainder = divmod(a * b, poly_gcd(a, b))
        assert remainder.is_zero
        return quotient

    return reduce(lcm2, polys, BinPoly(1))


def minimal_poly(ctx: 'FieldCtx', s: int) -> BinPoly:
    """
    Minimal polynomial of ``alpha^s`` over GF(2)

    Expands ``prod_{j in C_s} (x - alpha^j)`` with coefficients in GF(2^m). All coefficients must land in GF(2).

    :raises InconsistencyError: if a coefficient outside {0, 1} appears
    """
    if not 0 <= s < ctx.n:
        raise ParameterRangeError(f'Exponent {s} outside [0, {ctx.n})')
    # coefficients[i] is the coefficient of x^i, as field elements
    coefficients = [1]
    for j in cyclotomic.coset(s, ctx.n).elements:
        root = ctx.element(j)
        shifted = [0] + coefficients
        for i, c in enumerate(coefficients):
            shifted[i] ^= ctx.mul(c, root)
        coefficients = shifted
    mask = 0
    for i, c in enumerate(coefficients):
        if c not in (0, 1):
            raise InconsistencyError(f'Minimal polynomial of alpha^{s} has coefficient {c:#x} at x^{i}')
        mask |= c << i
    return BinPoly(mask)


def check_e(m: int, e: int) -> None:
    if not 1 <= e <= m // 2:
        raise ParameterRangeError(f'e={e} out of range, expected 1 <= e <= {m // 2} for m={m}')


def generator_poly(ctx: 'FieldCtx', e: int) -> BinPoly:
    """
    Generator polynomial ``g_E(x) = M_alpha(x) * M_{alpha^(1+2^e)}(x)`` of the cyclic code C_E, E = {e}
    """
    check_e(ctx.m, e)
    m1 = minimal_poly(ctx, 1)
    mu = minimal_poly(ctx, (1 + (1 << e)) % ctx.n)
    if poly_gcd(m1, mu) != BinPoly(1):
        raise InconsistencyError(f'Minimal polynomials {m1} and {mu} are not coprime')
    g = m1 * mu
    if not g.divides_xn_minus_1(ctx.n):
        raise InconsistencyError(f'g_E = {g} does not divide x^{ctx.n} - 1')
    logwood.get_logger('polyring').debug('g_E for m={}, e={}: {} (degree {})',
                                        ctx.m, e, g.to_hex(), g.degree)
    return g


def parity_check_poly(ctx: 'FieldCtx', e: int) -> BinPoly:
    """
    Parity-check polynomial ``h(x) = (x^n - 1) / g_E(x)``
    """
    g = generator_poly(ctx, e)
    h, remainder = divmod(BinPoly.x_pow_minus_1(ctx.n), g)
    if not remainder.is_zero:
        raise InconsistencyError(f'x^{ctx.n} - 1 is not divisible by {g}')
    return h
