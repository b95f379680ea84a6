"""
Weight distributions, computed three independent ways

* `enumerate_wd`: exhaustive enumeration of all codewords (the empirical oracle)
* `macwilliams`: exact transform between a code and its dual
* `closed_form_dual_wd`, `closed_form_code_wd`, `a468`: closed forms

`cross_validate` compares all engines that are feasible for given ``(m, e)``.
"""
from dataclasses import dataclass, field
from math import gcd
from typing import Dict, Optional

import logwood

from steinercodes.code import build_cyclic, dual, extend
from steinercodes.field import FieldCtx, field_new
from ._closed_form import ClosedFormCase, classify, closed_form_dual_wd, closed_form_code_wd, \
    closed_form_code_distribution, a468, A468, CASE_A, CASE_B, CASE_C, CASE_C4
from ._distribution import WeightDistribution, min_distance
from ._enumerate import enumerate_wd, iter_codewords, check_guard, DEFAULT_GUARD
from ._transform import macwilliams, krawtchouk_row

CODE_CLOSED_FORM_MAX_M = 8
"""
:type: int

Largest m for which the full code distribution is evaluated from its closed form during cross-validation
"""

ROUND_TRIP_MAX_M = 12
"""
:type: int

Largest m for which cross-validation falls back to transforming the closed-form dual distribution there and back
"""

FROM_ENUMERATION = 'enumeration'
FROM_CODE_CLOSED_FORM = 'closed-form code distribution'
FROM_ROUND_TRIP = 'round-trip'
"""
:type: str

Source of a transformed distribution that is the closed-form dual distribution transformed there and back. It only
checks that every intermediate count is exact, not the closed form itself.
"""

__all__ = [
    'WeightDistribution', 'min_distance',
    'ClosedFormCase', 'classify', 'closed_form_dual_wd', 'closed_form_code_wd', 'closed_form_code_distribution',
    'a468', 'A468', 'CASE_A', 'CASE_B', 'CASE_C', 'CASE_C4',
    'enumerate_wd', 'iter_codewords', 'check_guard', 'DEFAULT_GUARD',
    'macwilliams', 'krawtchouk_row',
    'CrossValidation', 'cross_validate', 'CODE_CLOSED_FORM_MAX_M', 'ROUND_TRIP_MAX_M',
    'FROM_ENUMERATION', 'FROM_CODE_CLOSED_FORM', 'FROM_ROUND_TRIP',
]


@dataclass
class CrossValidation:
    """
    Dual distributions of one ``(m, e)`` obtained by the available engines

    An engine that could not run is `None` and the reason is listed in ``skipped``.
    """

    m: int
    e: int
    case: ClosedFormCase
    closed: WeightDistribution
    enumerated: Optional[WeightDistribution] = None
    transformed: Optional[WeightDistribution] = None
    transformed_from: Optional[str] = None
    skipped: Dict[str, str] = field(default_factory=dict)

    @property
    def transformed_is_independent(self) -> bool:
        return self.transformed is not None and self.transformed_from != FROM_ROUND_TRIP

    @property
    def agree(self) -> bool:
        return all(wd == self.closed for wd in (self.enumerated, self.transformed) if wd is not None)


def cross_validate(m: int, e: int, ctx: FieldCtx = None, guard: int = DEFAULT_GUARD,
                   shards: int = 1) -> CrossValidation:
    """
    Compare the closed-form dual distribution with the other engines

    * ``enumerated``: enumeration of the dual code, if its dimension is within the guard
    * ``transformed``: MacWilliams transform of the code distribution, which is enumerated if within the guard and
      otherwise taken from its closed form where that applies (``m ≡ 0 (mod 4)``, ``gcd(m, e) = 2``,
      ``m <= CODE_CLOSED_FORM_MAX_M``), and as a last resort up to `ROUND_TRIP_MAX_M` the closed-form dual
      distribution transformed there and back, which still checks that every intermediate count is exact

    :param ctx: Field context; created with the default polynomial if omitted
    """
    case, closed = closed_form_dual_wd(m, e)
    result = CrossValidation(m, e, case, closed)
    code_dimension = case.code_dimension
    extended = None
    if case.dual_dimension <= guard or code_dimension <= guard:
        extended = extend(build_cyclic(ctx or field_new(m), e))
    if case.dual_dimension <= guard:
        result.enumerated = enumerate_wd(dual(extended), guard=guard, shards=shards)
    else:
        result.skipped['enumerated'] = f'dual dimension {case.dual_dimension} above guard {guard}'
    if code_dimension <= guard:
        result.transformed = macwilliams(enumerate_wd(extended, guard=guard, shards=shards), code_dimension)
        result.transformed_from = FROM_ENUMERATION
    elif m % 4 == 0 and gcd(m, e) == 2 and m <= CODE_CLOSED_FORM_MAX_M:
        result.transformed = macwilliams(closed_form_code_distribution(m, e), code_dimension)
        result.transformed_from = FROM_CODE_CLOSED_FORM
    elif m <= ROUND_TRIP_MAX_M:
        code_wd = macwilliams(closed, case.dual_dimension)
        result.transformed = macwilliams(code_wd, code_dimension)
        result.transformed_from = FROM_ROUND_TRIP
    else:
        result.skipped['transformed'] = f'code dimension {code_dimension} above guard {guard}, ' \
                                        f'no closed-form code distribution and m > {ROUND_TRIP_MAX_M}'
    logwood.get_logger('wdist').info('Cross-validation m={}, e={}: {} (transformed from {})', m, e,
                                     'agree' if result.agree else 'MISMATCH', result.transformed_from)
    return result
