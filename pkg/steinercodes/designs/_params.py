"""
Design parameters predicted by closed forms

Every λ below is also re-derived from the corresponding weight count through ``b C(k, t) = λ C(v, t)``
(`lambda_from_count`), so a formula and its count can never silently drift apart.
"""
from dataclasses import dataclass
from math import comb, gcd
from typing import List, Optional

import logwood

from steinercodes.error import InconsistencyError, ParameterRangeError, VerificationMismatch
from steinercodes.util import exact_div
from steinercodes.wdist import WeightDistribution, a468, classify, closed_form_dual_wd, CASE_A, CASE_B
from ._design import DesignParams


def lambda_from_count(b: int, v: int, k: int, t: int) -> int:
    """
    Index of a ``t-(v, k, λ)`` design with ``b`` blocks, ``λ = b C(k, t) / C(v, t)``

    :raises VerificationMismatch: if λ is not an integer, i.e. the numbers are not a design parameter set
    """
    if not (b >= 1 and v >= k >= t >= 1):
        raise ParameterRangeError(f'Expected b >= 1 and v >= k >= t >= 1, got b={b}, v={v}, k={k}, t={t}')
    lam, remainder = divmod(b * comb(k, t), comb(v, t))
    if remainder:
        raise VerificationMismatch(f'b={b}, v={v}, k={k}, t={t} is not a design parameter set '
                                   f'(λ = {b * comb(k, t)}/{comb(v, t)})', details=(b, v, k, t))
    return lam


def _dual_rows(m: int, e: int) -> List[DesignParams]:
    case = classify(m, e)
    q = 1 << m
    half = q >> 1
    v = q
    rows = []
    if case.tag == CASE_A:
        h = case.h
        for sign in (-1, 1):
            k = half + sign * (1 << (m - 1 - h))
            lam = ((1 << (2 * h - 1)) + sign * (1 << (h - 1))) * (k - 1)
            rows.append(DesignParams(2, v, k, lam, 'dual case a'))
        rows.append(DesignParams(2, v, half, (half - 1) * (q - (1 << (2 * h)) + 1), 'dual case a'))
    elif case.tag == CASE_B:
        r = 1 << ((m - 2) // 2)
        for sign in (-1, 1):
            rows.append(DesignParams(2, v, half + sign * r, r * ((1 << (m // 2)) - 1) * (r + sign), 'dual case b'))
        rows.append(DesignParams(2, v, half, half - 1, 'dual case b'))
    else:
        ell = case.ell
        root = (1 << (ell // 2)) + 1
        outer = 1 << ((m + ell - 2) // 2)
        inner = 1 << ((m - 2) // 2)
        source = f'dual case {case.tag}'
        for sign in (-1, 1):
            k = half + sign * outer
            rows.append(DesignParams(2, v, k, exact_div(k * (k - 1), (1 << ell) * root, f'λ for k={k}'), source))
        for sign in (-1, 1):
            k = half + sign * inner
            numerator = outer * ((1 << (m // 2)) + sign) * (k - 1)
            rows.append(DesignParams(2, v, k, exact_div(numerator, root, f'λ for k={k}'), source))
        rows.append(DesignParams(2, v, half, (((1 << (ell // 2)) - 1) * (1 << (m - ell)) + 1) * (half - 1), source))
    return sorted(rows, key=lambda p: p.k)


def dual_design_params(m: int, e: int) -> List[DesignParams]:
    """
    2-designs held by the dual of the extended code, one row per weight ``0 < k < 2^m``, ascending ``k``

    Each λ is checked against the count of its weight in `closed_form_dual_wd`.

    :raises InconsistencyError: if a λ formula is not integral or disagrees with its weight count
    """
    rows = _dual_rows(m, e)
    _, wd = closed_form_dual_wd(m, e)
    for row in rows:
        try:
            from_count = lambda_from_count(wd[row.k], row.v, row.k, row.t)
        except VerificationMismatch as error:
            raise InconsistencyError(str(error)) from error
        if from_count != row.lam:
            raise InconsistencyError(f'm={m}, e={e}, k={row.k}: λ formula gives {row.lam}, '
                                     f'weight count gives {from_count}')
    return rows


def _check_even(m: int, what: str) -> None:
    if m < 4 or m % 2:
        raise ParameterRangeError(f'{what} needs even m >= 4, got m={m}')
    if m % 4:
        logwood.get_logger('designs.params').warning('Evaluating {} at m={} ≢ 0 (mod 4): extrapolation',
                                                     what, m)


def wt6_lambda(m: int) -> int:
    """
    λ of the 2-design formed by the weight-6 supports, ``(2^(2m-3) + 2^m + 12) / 3``
    """
    _check_even(m, 'weight-6 λ')
    return exact_div((1 << (2 * m - 3)) + (1 << m) + 12, 3, f'weight-6 λ for m={m}')


def wt8_lambda(m: int) -> int:
    """
    λ of the 2-design formed by the weight-8 supports,
    ``(2^(4m-4) - 27 2^(3m-4) + 23 2^(2m-1) + 261 2^(m-2) + 403) / 45``
    """
    _check_even(m, 'weight-8 λ')
    numerator = (1 << (4 * m - 4)) - 27 * (1 << (3 * m - 4)) + 23 * (1 << (2 * m - 1)) + 261 * (1 << (m - 2)) + 403
    return exact_div(numerator, 45, f'weight-8 λ for m={m}')


@dataclass(frozen=True)
class LambdaIdentity:
    m: int
    k: int
    count: int
    lam_formula: int
    lam_from_count: int

    @property
    def holds(self) -> bool:
        return self.lam_formula == self.lam_from_count


def lambda_identities(m: int) -> List[LambdaIdentity]:
    """
    Compare the weight-6 and weight-8 λ formulas with the weight counts of `a468`
    """
    counts = a468(m)
    v = 1 << m
    return [
        LambdaIdentity(m, 6, counts.a6, wt6_lambda(m), lambda_from_count(counts.a6, v, 6, 2)),
        LambdaIdentity(m, 8, counts.a8, wt8_lambda(m), lambda_from_count(counts.a8, v, 8, 2)),
    ]


def check_steiner_hypothesis(m: int, e: int) -> None:
    """
    :raises ParameterRangeError: unless ``m >= 4`` is even, ``2 <= e <= m/2`` and ``gcd(m, e) = 2``
    """
    if m < 4 or m % 2:
        raise ParameterRangeError(f'Weight-4 Steiner systems need even m >= 4, got m={m}')
    if not 2 <= e <= m // 2:
        raise ParameterRangeError(f'Weight-4 Steiner systems need 2 <= e <= m/2, got e={e}')
    if gcd(m, e) != 2:
        raise ParameterRangeError(f'Weight-4 Steiner systems need gcd(m, e) = 2, got gcd({m}, {e}) = {gcd(m, e)}')


def code_design_params(m: int, e: int) -> List[DesignParams]:
    """
    2-designs held by the low weights of the extended code

    * weight 4: Steiner system ``S(2, 4, 2^m)`` for even ``m`` and ``gcd(m, e) = 2``
    * weights 6 and 8: closed-form λ, for ``m ≡ 0 (mod 4)`` only
    """
    check_steiner_hypothesis(m, e)
    v = 1 << m
    rows = [DesignParams(2, v, 4, 1, 'weight-4 Steiner system')]
    if m % 4 == 0:
        rows.append(DesignParams(2, v, 6, wt6_lambda(m), 'weight-6 closed form'))
        rows.append(DesignParams(2, v, 8, wt8_lambda(m), 'weight-8 closed form'))
    return rows


def support_design_params(wd: WeightDistribution, t: int = 2, source: str = 'weight count') -> List[DesignParams]:
    """
    Parameters of the ``t``-designs that every nonzero weight class of ``wd`` holds, assuming it holds one

    :raises VerificationMismatch: if a weight count gives a non-integral λ
    """
    return [DesignParams(t, wd.length, k, lambda_from_count(count, wd.length, k, t), source)
            for k, count in wd.counts.items() if k >= t]


@dataclass(frozen=True)
class AMReport:
    """
    Outcome of the Assmus-Mattson condition ``s <= d - t``
    """

    t: int
    d: int
    w: int
    w_dual: Optional[int]
    s: int
    holds: bool
    code_weights: List[int]
    """
    :type: List[int]

    Weights of the code whose supports the condition certifies as ``t``-designs
    """

    dual_weights: List[int]


def _largest_w(v: int, d: int, q: int = 2) -> int:
    for w in range(v, -1, -1):
        if w - (w + q - 2) // (q - 1) < d:
            return w
    return 0


def am_check(wd: WeightDistribution, wd_dual: WeightDistribution, d: int, d_dual: Optional[int],
             t: int) -> AMReport:
    """
    Evaluate the Assmus-Mattson condition for a binary code

    ``s`` counts the nonzero weights ``1 <= i <= v - t`` present in the dual.

    :param wd: Distribution of the code
    :param wd_dual: Distribution of its dual
    :param d: Minimum distance of the code
    :param d_dual: Minimum distance of the dual, `None` if the dual is the zero code
    :param t: Strength, ``t >= 1``
    """
    if t < 1:
        raise ParameterRangeError(f'Strength must be positive, got t={t}')
    v = wd.length
    w = _largest_w(v, d)
    w_dual = _largest_w(v, d_dual) if d_dual is not None else None
    s = sum(1 for i in wd_dual.nonzero_weights() if i <= v - t)
    holds = t < d and s <= d - t
    code_weights = []
    dual_weights = []
    if holds:
        code_weights = [i for i in wd.nonzero_weights() if d <= i <= w]
        if d_dual is not None:
            dual_weights = [i for i in wd_dual.nonzero_weights() if d_dual <= i <= min(v - t, w_dual)]
    return AMReport(t, d, w, w_dual, s, holds, code_weights, dual_weights)
