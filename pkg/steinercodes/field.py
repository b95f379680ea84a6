"""
Arithmetic in GF(2^m), 2 <= m <= 16

Elements are integers in ``[0, 2^m)`` holding their coordinates in the polynomial basis ``1, α, ..., α^(m-1)``, where
α is a root of the chosen primitive polynomial. Multiplication goes through log/antilog tables.

Scalar operations (`FieldCtx.mul`, `FieldCtx.pow`, ...) use plain Python lists; the ``*_array`` and ``*_table``
variants work on numpy arrays and serve the vectorised code paths of `steinercodes.designs`.

Default primitive polynomials are fixed per ``m`` in `DEFAULT_PRIMITIVE_POLYS` and revalidated on construction.
"""
from typing import Dict, List, Optional

import logwood
import numpy

from steinercodes import polyring
from steinercodes.error import NonPrimitivePolynomialError, ParameterRangeError, ReduciblePolynomialError, \
    ConfigurationError

MIN_M = 2
MAX_M = 16

DEFAULT_PRIMITIVE_POLYS = {
    2: 0x7,  # x^2 + x + 1
    3: 0xB,  # x^3 + x + 1
    4: 0x13,  # x^4 + x + 1
    5: 0x25,  # x^5 + x^2 + 1
    6: 0x43,  # x^6 + x + 1
    7: 0x89,  # x^7 + x^3 + 1
    8: 0x11D,  # x^8 + x^4 + x^3 + x^2 + 1
    9: 0x211,  # x^9 + x^4 + 1
    10: 0x409,  # x^10 + x^3 + 1
    11: 0x805,  # x^11 + x^2 + 1
    12: 0x1053,  # x^12 + x^6 + x^4 + x + 1
    13: 0x201B,  # x^13 + x^4 + x^3 + x + 1
    14: 0x4443,  # x^14 + x^10 + x^6 + x + 1
    15: 0x8003,  # x^15 + x + 1
    16: 0x1100B,  # x^16 + x^12 + x^3 + x + 1
}
"""
:type: Dict[int, int]

Primitive polynomial per extension degree, as bitmask (bit ``i`` = coefficient of ``x^i``)
"""

FieldElement = int


def _prime_factors(n: int) -> List[int]:
    factors = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            factors.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        factors.append(n)
    return factors


def _order_of_x(poly: int, n: int) -> int:
    """
    Multiplicative order of x modulo an irreducible ``poly`` whose unit group has order ``n``
    """
    order = n
    for p in _prime_factors(n):
        while order % p == 0 and polyring.clpowmod(0b10, order // p, poly) == 1:
            order //= p
    return order


class FieldCtx:
    """
    Immutable GF(2^m) arithmetic context

    Use `field_new` to construct it. All operations are pure, so a context can be shared by concurrent workers.
    """

    def __init__(self, m: int, primitive_poly: int):
        if not MIN_M <= m <= MAX_M:
            raise ParameterRangeError(f'm={m} not supported, expected {MIN_M} <= m <= {MAX_M}')
        if polyring.degree(primitive_poly) != m:
            raise ConfigurationError(f'Polynomial {primitive_poly:#x} has degree {polyring.degree(primitive_poly)}, '
                                     f'expected {m}')
        n = (1 << m) - 1
        if not polyring.is_irreducible(primitive_poly):
            raise ReduciblePolynomialError(f'Polynomial {primitive_poly:#x} is reducible over GF(2)')
        order = _order_of_x(primitive_poly, n)
        if order != n:
            raise NonPrimitivePolynomialError(f'Polynomial {primitive_poly:#x} is irreducible, but its root has '
                                              f'order {order} != {n}')
        self.m = m
        self.n = n
        self.size = n + 1
        self.primitive_poly = primitive_poly

        # antilog is stored twice over so that log(x) + log(y) never needs a reduction
        antilog = [0] * (2 * n)
        log = [-1] * (n + 1)
        x = 1
        for i in range(n):
            antilog[i] = x
            antilog[i + n] = x
            log[x] = i
            x <<= 1
            if x >> m:
                x ^= primitive_poly
        self._antilog = antilog
        self._log = log

        self.antilog_table = numpy.array(antilog[:n], dtype=numpy.int64)
        """
        :type: numpy.ndarray

        ``antilog_table[i] = α^i`` for ``0 <= i < n``
        """

        self.log_table = numpy.array(log, dtype=numpy.int64)
        """
        :type: numpy.ndarray

        ``log_table[x] = i`` with ``α^i = x`` for nonzero ``x``; ``log_table[0] = -1``
        """

        self._power_tables: Dict[int, numpy.ndarray] = {}

    def __repr__(self):
        return f'FieldCtx(m={self.m}, primitive_poly={self.primitive_poly:#x})'

    @property
    def alpha(self) -> FieldElement:
        return self._antilog[1]

    def element(self, i: int) -> FieldElement:
        """
        ``α^i`` for any integer ``i``
        """
        return self._antilog[i % self.n]

    def log(self, x: FieldElement) -> int:
        if x == 0:
            raise ZeroDivisionError('Logarithm of zero')
        return self._log[x]

    @staticmethod
    def add(x: FieldElement, y: FieldElement) -> FieldElement:
        return x ^ y

    def mul(self, x: FieldElement, y: FieldElement) -> FieldElement:
        if x == 0 or y == 0:
            return 0
        return self._antilog[self._log[x] + self._log[y]]

    def inv(self, x: FieldElement) -> FieldElement:
        if x == 0:
            raise ZeroDivisionError(f'Zero has no inverse in GF(2^{self.m})')
        return self._antilog[(self.n - self._log[x]) % self.n]

    def div(self, x: FieldElement, y: FieldElement) -> FieldElement:
        return self.mul(x, self.inv(y))

    def pow(self, x: FieldElement, k: int) -> FieldElement:
        if x == 0:
            if k < 0:
                raise ZeroDivisionError('Negative power of zero')
            return 1 if k == 0 else 0
        return self._antilog[(self._log[x] * k) % self.n]

    def frob_pow(self, x: FieldElement, e: int) -> FieldElement:
        """
        ``x^(2^e)``; ``e`` is reduced modulo ``m``
        """
        return self.pow(x, 1 << (e % self.m))

    def elements(self) -> numpy.ndarray:
        """
        All field elements ``0, 1, ..., 2^m - 1`` as array
        """
        return numpy.arange(self.size, dtype=numpy.int64)

    def mul_array(self, x, y) -> numpy.ndarray:
        x = numpy.asarray(x, dtype=numpy.int64)
        y = numpy.asarray(y, dtype=numpy.int64)
        product = self.antilog_table[(self.log_table[x] + self.log_table[y]) % self.n]
        return numpy.where((x == 0) | (y == 0), 0, product)

    def power_table(self, k: int) -> numpy.ndarray:
        """
        Array ``t`` with ``t[x] = x^k`` for every element ``x``, ``k >= 1``
        """
        if k < 1:
            raise ValueError(f'Power table needs k >= 1, got {k}')
        k_reduced = (k - 1) % self.n + 1
        table = self._power_tables.get(k_reduced)
        if table is None:
            table = numpy.zeros(self.size, dtype=numpy.int64)
            exponents = (numpy.arange(self.n, dtype=numpy.int64) * k_reduced) % self.n
            table[self.antilog_table] = self.antilog_table[exponents]
            table.setflags(write=False)
            self._power_tables[k_reduced] = table
        return table

    def frob_table(self, e: int) -> numpy.ndarray:
        return self.power_table(1 << (e % self.m))


def field_new(m: int, primitive_poly: Optional[int] = None) -> FieldCtx:
    """
    Create a GF(2^m) context

    :param m: Extension degree, ``2 <= m <= 16``
    :param primitive_poly: Bitmask of a primitive polynomial of degree ``m``. Defaults to `DEFAULT_PRIMITIVE_POLYS`.
    :raises ReduciblePolynomialError: if the polynomial factors
    :raises NonPrimitivePolynomialError: if the polynomial is irreducible but its root has order below ``2^m - 1``
    """
    if not MIN_M <= m <= MAX_M:
        raise ParameterRangeError(f'm={m} not supported, expected {MIN_M} <= m <= {MAX_M}')
    if primitive_poly is None:
        primitive_poly = DEFAULT_PRIMITIVE_POLYS[m]
    ctx = FieldCtx(m, primitive_poly)
    logwood.get_logger('field').debug('Created {}', ctx)
    return ctx
