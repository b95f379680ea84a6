"""
Reproduction report: closed forms against the empirical engines

Every row compares a closed-form value (``formula``) with up to two independent values:

* ``enumerated``: from exhaustive enumeration or block extraction plus coverage counting
* ``transformed``: from the MacWilliams transform

A column that could not be computed within the configured limits holds ``skipped``. A transformed column that is
only the closed-form table transformed there and back is marked ``(round-trip)``; it is no independent check. Block
extraction and the affine spot check run up to ``steiner_max_m`` only. A row is ``OK`` if every computed column
equals the formula, ``MISMATCH`` otherwise. A row whose block count gives a non-integral λ is also flagged
``inconsistent``. Row order depends on the configuration only, so reports are byte-stable.

Sections:

* ``dual-wd``: dual weight distribution, one row per weight
* ``dual-design``: λ of the 2-design of each dual weight class
* ``code-wd``: numbers of codewords of weight 4, 6 and 8 (``m ≡ 0 (mod 4)``)
* ``code-design``: λ of the weight 4, 6 and 8 designs of the code (``gcd(m, e) = 2``)
* ``affine``: affine invariance spot check of the extended code
"""
import json
import random
from dataclasses import asdict, dataclass
from math import gcd
from typing import List, Optional, Tuple

import logwood

from steinercodes.code import affine_spot_check, build_cyclic, extend, dual
from steinercodes.config import FORMAT_JSON, RunConfig
from steinercodes.designs import code_design_params, dual_design_params, extract_designs_by_enumeration, \
    extract_weight4_blocks, lambda_from_count, verify_design, Design, DesignParams
from steinercodes.error import ParameterRangeError, VerificationMismatch
from steinercodes.wdist import a468, closed_form_dual_wd, cross_validate, macwilliams, FROM_ROUND_TRIP

STATUS_OK = 'OK'
STATUS_MISMATCH = 'MISMATCH'
SKIPPED = 'skipped'

SECTION_DUAL_WD = 'dual-wd'
SECTION_DUAL_DESIGN = 'dual-design'
SECTION_CODE_WD = 'code-wd'
SECTION_CODE_DESIGN = 'code-design'
SECTION_AFFINE = 'affine'

AFFINE_MAPS = 100
AFFINE_WORDS = 20


@dataclass(frozen=True)
class ReportRow:
    section: str
    m: int
    e: int
    quantity: str
    formula: str
    enumerated: str
    transformed: str
    status: str
    inconsistent: bool = False


def _row(section: str, m: int, e: int, quantity: str, formula, enumerated, transformed, transformed_note: str = '',
         inconsistent: bool = False) -> ReportRow:
    computed = [value for value in (enumerated, transformed) if value is not None]
    status = STATUS_OK if all(value == formula for value in computed) else STATUS_MISMATCH
    transformed_text = SKIPPED if transformed is None else str(transformed)
    if transformed is not None and transformed_note:
        transformed_text += f' ({transformed_note})'
    return ReportRow(section, m, e, quantity, str(formula),
                     SKIPPED if enumerated is None else str(enumerated), transformed_text, status, inconsistent)


def _lambda_from_count(count: int, params: DesignParams) -> Tuple[object, bool]:
    """
    λ for ``count`` blocks with the parameters of ``params``, or a marker when the count gives none

    :return: λ or marker, and whether the count contradicts exact arithmetic (a non-integral λ)
    """
    if count < 1:
        return 'no blocks', False
    try:
        return lambda_from_count(count, params.v, params.k, params.t), False
    except VerificationMismatch:
        return f'non-integral ({count} blocks)', True


def _verified_lambda(design: Design, shards: int):
    if design.b == 0:
        return 'no blocks'
    coverage = verify_design(design, shards=shards)
    return coverage.lam if coverage.holds else 'unequal coverage'


def _e_values(m: int, config: RunConfig) -> List[int]:
    if config.e is not None:
        return [config.e]
    return list(range(1, m // 2 + 1))


def dual_rows(m: int, e: int, config: RunConfig) -> List[ReportRow]:
    """
    Rows of the ``dual-wd`` and ``dual-design`` sections
    """
    validation = cross_validate(m, e, config.field_ctx(m), config.enumeration_guard, config.shard_count)
    rows = []
    note = '' if validation.transformed_is_independent else FROM_ROUND_TRIP
    for weight, count in validation.closed.counts.items():
        rows.append(_row(SECTION_DUAL_WD, m, e, f'A_{weight} (case {validation.case.tag})', count,
                         validation.enumerated[weight] if validation.enumerated is not None else None,
                         validation.transformed[weight] if validation.transformed is not None else None, note))

    designs = {}
    if validation.case.dual_dimension <= config.enumeration_guard and m <= config.steiner_max_m:
        dual_code = dual(extend(build_cyclic(config.field_ctx(m), e)))
        designs = extract_designs_by_enumeration(dual_code, guard=config.enumeration_guard)
    for params in dual_design_params(m, e):
        empirical = None
        if params.k in designs:
            empirical = _verified_lambda(designs[params.k], config.shard_count)
        from_count, inconsistent = None, False
        if validation.transformed is not None:
            from_count, inconsistent = _lambda_from_count(validation.transformed[params.k], params)
        rows.append(_row(SECTION_DUAL_DESIGN, m, e, f'λ for k={params.k}', params.lam, empirical, from_count, note,
                         inconsistent))
    return rows


def code_rows(m: int, e: int, config: RunConfig) -> List[ReportRow]:
    """
    Rows of the ``code-wd`` and ``code-design`` sections, empty unless ``m`` is even and ``gcd(m, e) = 2``
    """
    if m % 2 or gcd(m, e) != 2:
        return []
    ctx = config.field_ctx(m)
    case, dual_wd = closed_form_dual_wd(m, e)
    code_wd = macwilliams(dual_wd, case.dual_dimension)
    designs = {}
    if case.code_dimension <= config.enumeration_guard and m <= config.steiner_max_m:
        designs = extract_designs_by_enumeration(extend(build_cyclic(ctx, e)), [4, 6, 8],
                                                 guard=config.enumeration_guard)

    rows = []
    if m % 4 == 0:
        for weight, count in zip((4, 6, 8), a468(m)):
            rows.append(_row(SECTION_CODE_WD, m, e, f'A_{weight}', count,
                             designs[weight].b if weight in designs else None, code_wd[weight]))

    for params in code_design_params(m, e):
        empirical = None
        if params.k in designs:
            empirical = _verified_lambda(designs[params.k], config.shard_count)
        elif params.k == 4 and m <= config.steiner_max_m:
            empirical = _verified_lambda(extract_weight4_blocks(ctx, e, config.shard_count), config.shard_count)
        from_count, inconsistent = _lambda_from_count(code_wd[params.k], params)
        rows.append(_row(SECTION_CODE_DESIGN, m, e, f'λ for k={params.k}', params.lam, empirical, from_count,
                         inconsistent=inconsistent))
    return rows


def affine_row(m: int, e: int, config: RunConfig) -> ReportRow:
    failures = None
    if m <= config.steiner_max_m:
        ctx = config.field_ctx(m)
        extended = extend(build_cyclic(ctx, e))
        failures = affine_spot_check(ctx, extended, random.Random(config.seed), AFFINE_MAPS, AFFINE_WORDS)
    return _row(SECTION_AFFINE, m, e, f'{AFFINE_MAPS} maps x {AFFINE_WORDS} codewords, failures', 0, failures, None)


def build_report(config: RunConfig) -> List[ReportRow]:
    """
    All rows for the configured ``m`` values, ``m >= 4``
    """
    if not config.m_values:
        raise ParameterRangeError('The report needs at least one --m')
    rows = []
    for m in config.m_values:
        if m < 4:
            raise ParameterRangeError(f'The report covers m >= 4, got m={m}')
        for e in _e_values(m, config):
            logwood.get_logger('report').info('Report rows for m={}, e={}', m, e)
            rows += dual_rows(m, e, config)
            rows += code_rows(m, e, config)
            rows.append(affine_row(m, e, config))
    return rows


def has_mismatch(rows: List[ReportRow]) -> bool:
    return any(row.status == STATUS_MISMATCH for row in rows)


def has_inconsistency(rows: List[ReportRow]) -> bool:
    return any(row.inconsistent for row in rows)


def to_markdown(rows: List[ReportRow]) -> str:
    columns = ['section', 'm', 'e', 'quantity', 'formula', 'enumerated', 'transformed', 'status']
    lines = ['| ' + ' | '.join(columns) + ' |', '|' + '---|' * len(columns)]
    for row in rows:
        values = asdict(row)
        if row.inconsistent:
            values['status'] += ' (inconsistent)'
        lines.append('| ' + ' | '.join(str(values[c]) for c in columns) + ' |')
    ok = sum(1 for row in rows if row.status == STATUS_OK)
    lines.append('')
    lines.append(f'{ok} of {len(rows)} rows OK')
    return '\n'.join(lines) + '\n'


def to_json(rows: List[ReportRow]) -> str:
    data = {
        'rows': [asdict(row) for row in rows],
        'ok': not has_mismatch(rows),
    }
    return json.dumps(data, indent=2, ensure_ascii=False) + '\n'


def render(rows: List[ReportRow], fmt: Optional[str]) -> str:
    return to_json(rows) if fmt == FORMAT_JSON else to_markdown(rows)
