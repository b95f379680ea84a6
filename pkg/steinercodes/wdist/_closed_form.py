"""
Closed-form weight distributions of the extended codes and their duals

The dual distributions come in three cases, selected by ``m`` and ``e``:

* ``a``: ``m / gcd(m, e)`` odd, five weights, ``h = (m - gcd(m, e)) / 2``
* ``b``: ``m`` even and ``e = m / 2``, five weights
* ``c``: ``m / gcd(m, e)`` even and ``e < m / 2``, seven weights, ``ℓ = 2 gcd(m, e)``; tagged ``c4`` when ``ℓ = 4``

For ``m ≡ 0 (mod 4)`` and ``gcd(m, e) = 2`` the code distribution itself follows from the ``c4`` dual table by
an explicit expansion of the MacWilliams transform (`closed_form_code_wd`), and its low weights have the closed
forms returned by `a468`.
"""
from dataclasses import dataclass
from math import comb, gcd
from typing import List, NamedTuple, Optional, Tuple

import logwood

from steinercodes.error import ParameterRangeError, InconsistencyError
from steinercodes.util import exact_div
from ._distribution import WeightDistribution

CASE_A = 'a'
CASE_B = 'b'
CASE_C = 'c'
CASE_C4 = 'c4'


@dataclass(frozen=True)
class ClosedFormCase:
    """
    Case of the dual weight distribution table for given ``(m, e)``

    ``u`` counts the outermost weights ``2^(m-1) ± δ``, ``w`` the weight ``2^(m-1)`` and, in case ``c``, ``v`` the
    inner pair of weights. ``v`` is zero in the five-weight cases.
    """

    tag: str
    m: int
    e: int
    h: Optional[int]
    ell: Optional[int]
    u: int
    v: int
    w: int
    outer_offset: int
    """
    :type: int

    Distance ``δ`` of the outermost weights from ``2^(m-1)``
    """

    inner_offset: Optional[int]

    @property
    def dual_dimension(self) -> int:
        if self.tag == CASE_B:
            return 1 + 3 * self.m // 2
        return 2 * self.m + 1

    @property
    def code_dimension(self) -> int:
        return (1 << self.m) - self.dual_dimension

    def table(self) -> List[Tuple[int, int]]:
        """
        Rows ``(weight, count)`` in ascending weight order
        """
        half = 1 << (self.m - 1)
        rows = [(0, 1), (half - self.outer_offset, self.u)]
        if self.inner_offset is not None:
            rows.append((half - self.inner_offset, self.v))
        rows.append((half, self.w))
        if self.inner_offset is not None:
            rows.append((half + self.inner_offset, self.v))
        rows += [(half + self.outer_offset, self.u), (1 << self.m, 1)]
        return rows


def _check_range(m: int, e: int) -> None:
    if m < 4:
        raise ParameterRangeError(f'Closed forms need m >= 4, got m={m}')
    if not 1 <= e <= m // 2:
        raise ParameterRangeError(f'e={e} out of range, expected 1 <= e <= {m // 2} for m={m}')


def classify(m: int, e: int) -> ClosedFormCase:
    _check_range(m, e)
    g = gcd(m, e)
    q = 1 << m
    if (m // g) % 2 == 1:
        h = (m - g) // 2
        return ClosedFormCase(
            tag=CASE_A, m=m, e=e, h=h, ell=None,
            u=(q - 1) << (2 * h),
            v=0,
            w=(q - 1) * ((q << 1) - (1 << (2 * h + 1)) + 2),
            outer_offset=1 << (m - 1 - h), inner_offset=None)
    if 2 * e == m:
        return ClosedFormCase(
            tag=CASE_B, m=m, e=e, h=None, ell=None,
            u=((1 << (m // 2)) - 1) << m,
            v=0,
            w=(q << 1) - 2,
            outer_offset=1 << ((m - 2) // 2), inner_offset=None)
    ell = 2 * g
    denominator = (1 << (ell // 2)) + 1
    return ClosedFormCase(
        tag=CASE_C4 if ell == 4 else CASE_C, m=m, e=e, h=None, ell=ell,
        u=exact_div((1 << (m - ell)) * (q - 1), denominator, 'case c outer count'),
        v=exact_div((1 << ((2 * m + ell) // 2)) * (q - 1), denominator, 'case c inner count'),
        w=2 * (((1 << (ell // 2)) - 1) * (1 << (m - ell)) + 1) * (q - 1),
        outer_offset=1 << ((m + ell - 2) // 2), inner_offset=1 << ((m - 2) // 2))


def closed_form_dual_wd(m: int, e: int) -> Tuple[ClosedFormCase, WeightDistribution]:
    """
    Weight distribution of the dual of the extended code from the case tables

    :raises InconsistencyError: if the table does not sum to ``2^dim``
    """
    case = classify(m, e)
    wd = WeightDistribution(1 << m, dict(case.table()))
    if wd.total != 1 << case.dual_dimension:
        raise InconsistencyError(f'Case {case.tag} table for m={m}, e={e} sums to {wd.total}, '
                                 f'expected 2^{case.dual_dimension}')
    return case, wd


def _check_code_form_hypothesis(m: int, e: int) -> ClosedFormCase:
    _check_range(m, e)
    if m % 4 != 0 or gcd(m, e) != 2:
        raise ParameterRangeError(f'The code distribution closed form needs m ≡ 0 (mod 4) and gcd(m, e) = 2, '
                                  f'got m={m}, e={e}')
    case = classify(m, e)
    if case.tag != CASE_C4:
        logwood.get_logger('wdist.closed_form').warning(
            'm={}, e={} falls in dual case {}, not c4; evaluating the c4 closed form at this boundary', m, e, case.tag)
    return case


class _CodeFormTerms(NamedTuple):
    u: int
    v: int
    w: int
    outer: Tuple[int, int]
    inner: Tuple[int, int]


def _code_form_terms(m: int) -> _CodeFormTerms:
    q = 1 << m
    half = q >> 1
    outer = 1 << ((m + 2) // 2)
    inner = 1 << ((m - 2) // 2)
    return _CodeFormTerms(
        u=exact_div((1 << (m - 4)) * (q - 1), 5, 'u'),
        v=exact_div((1 << (m + 2)) * (q - 1), 5, 'v'),
        w=2 * (3 * (1 << (m - 4)) + 1) * (q - 1),
        outer=(half - outer, half + outer),
        inner=(half - inner, half + inner))


def _symmetric_sum(k: int, a: int, b: int) -> int:
    """
    ``sum_{i+j=k, 0<=i<=a, 0<=j<=b} ((-1)^i + (-1)^j) C(a, i) C(b, j)``
    """
    total = 0
    for i in range(max(0, k - b), min(a, k) + 1):
        j = k - i
        sign = (-1) ** i + (-1) ** j
        if sign:
            total += sign * comb(a, i) * comb(b, j)
    return total


def closed_form_code_wd(m: int, e: int, k: int) -> int:
    """
    Number of codewords of weight ``k`` in the extended code, for ``m ≡ 0 (mod 4)`` and ``gcd(m, e) = 2``

    ``2^(2m+1) A_k = (1 + (-1)^k) C(2^m, k) + w E_0(k) + u E_1(k) + v E_2(k)``

    :raises InconsistencyError: if the division by ``2^(2m+1)`` is not exact
    """
    _check_code_form_hypothesis(m, e)
    return _code_count(m, k, _code_form_terms(m))


def _code_count(m: int, k: int, terms: _CodeFormTerms) -> int:
    q = 1 << m
    if not 0 <= k <= q:
        raise ParameterRangeError(f'Weight {k} outside [0, {q}]')
    even = k % 2 == 0
    e0 = (-1) ** (k // 2) * comb(q >> 1, k // 2) if even else 0
    e1 = _symmetric_sum(k, *terms.outer)
    e2 = _symmetric_sum(k, *terms.inner)
    total = (2 if even else 0) * comb(q, k) + terms.w * e0 + terms.u * e1 + terms.v * e2
    return exact_div(total, 1 << (2 * m + 1), f'closed-form A_{k} for m={m}')


def closed_form_code_distribution(m: int, e: int) -> WeightDistribution:
    """
    Full distribution of the extended code, ``A_k`` for every ``0 <= k <= 2^m``
    """
    _check_code_form_hypothesis(m, e)
    terms = _code_form_terms(m)
    return WeightDistribution(1 << m, {k: _code_count(m, k, terms) for k in range((1 << m) + 1)})


class A468(NamedTuple):
    a4: int
    a6: int
    a8: int


def a468(m: int) -> A468:
    """
    Closed forms for the numbers of codewords of weight 4, 6 and 8

    Stated for ``m ≡ 0 (mod 4)``; other even ``m`` are evaluated as extrapolation and logged as such.

    :raises InconsistencyError: if a division is not exact
    """
    if m < 4 or m % 2:
        raise ParameterRangeError(f'Weight 4/6/8 closed forms need even m >= 4, got m={m}')
    logger = logwood.get_logger('wdist.closed_form')
    if m % 4:
        logger.warning('Evaluating weight 4/6/8 closed forms at m={} ≢ 0 (mod 4): extrapolation', m)
    elif m == 4:
        logger.warning('m=4 is the boundary of the weight 4/6/8 closed forms (dual case b)')
    q = 1 << m
    a4 = exact_div(q * (q - 1), 12, f'A_4 for m={m}')
    a6 = exact_div(q * (q - 1) * ((1 << (2 * m - 4)) + (1 << (m - 1)) + 6), 45, f'A_6 for m={m}')
    a8 = exact_div((1 << (m - 3)) * (q - 1) * _octic(m), 315, f'A_8 for m={m}')
    return A468(a4, a6, a8)


def _octic(m: int) -> int:
    return (1 << (4 * m - 4)) - 27 * (1 << (3 * m - 4)) + 23 * (1 << (2 * m - 1)) + 261 * (1 << (m - 2)) + 403
