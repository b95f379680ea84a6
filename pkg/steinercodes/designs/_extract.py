"""
Block extraction

Two independent extractors:

* `extract_weight4_blocks` solves for the weight-4 supports algebraically. A support ``{a, b, c, d}`` of the extended
  code satisfies ``a + b + c + d = 0`` and ``a^u + b^u + c^u + d^u = 0`` with ``u = 1 + 2^e``. Fixing ``s = a + b``
  forces ``d = c + s`` and turns the second condition into the affine equation
  ``L_s(c) = a^u + b^u + s^u`` for the GF(2)-linear map ``L_s(c) = s^(2^e) c + s c^(2^e)``.
  Per ``s`` the map is tabulated once, all pairs ``{a, a + s}`` are solved at once with numpy.
* `extract_blocks_by_enumeration` collects the supports of all codewords of one weight.
"""
from typing import Dict, Iterable, List, Optional

import logwood
import numpy

from steinercodes.code import LinearCode
from steinercodes.error import ConfigurationError, InconsistencyError, ParameterRangeError, \
    VerificationMismatch
from steinercodes.field import FieldCtx, field_new
from steinercodes.util import popcount, run_sharded, split_range
from steinercodes.wdist import DEFAULT_GUARD, closed_form_dual_wd, iter_codewords, macwilliams
from ._design import Design
from ._params import check_steiner_hypothesis

SOURCE_PAIR_SOLVE = 'weight-4 pair solve'
SOURCE_ENUMERATION = 'enumeration'


def _solve_range(m: int, primitive_poly: int, e: int, s_lo: int, s_hi: int) -> numpy.ndarray:
    """
    Blocks ``[a, b, c, d]`` with ``a + b = s`` for ``s_lo <= s < s_hi``

    Each block is produced for exactly one ``s``: ``a`` is its smallest point and ``s`` is the smallest of
    ``a + b``, ``a + c``, ``a + d``.
    """
    ctx = field_new(m, primitive_poly)
    elements = ctx.elements()
    power_u = ctx.power_table(1 + (1 << e))
    frob = ctx.frob_table(e)
    found: List[numpy.ndarray] = []
    for s in range(s_lo, s_hi):
        table = ctx.mul_array(frob[s], elements) ^ ctx.mul_array(s, frob)
        kernel = elements[table == 0]
        preimage = numpy.full(ctx.size, -1, dtype=numpy.int64)
        preimage[table] = elements

        a = elements[elements < (elements ^ s)]
        b = a ^ s
        c0 = preimage[power_u[a] ^ power_u[b] ^ power_u[s]]
        solvable = c0 >= 0
        a, b, c0 = a[solvable], b[solvable], c0[solvable]

        c = c0[:, None] ^ kernel[None, :]
        d = c ^ s
        a_ = numpy.broadcast_to(a[:, None], c.shape)
        b_ = numpy.broadcast_to(b[:, None], c.shape)
        keep = (c < d) & (a_ < c) & (s < (a_ ^ c)) & (s < (a_ ^ d))
        if numpy.any(keep):
            found.append(numpy.stack([a_[keep], b_[keep], c[keep], d[keep]], axis=1))
    if not found:
        return numpy.zeros((0, 4), dtype=numpy.int64)
    return numpy.concatenate(found)


def expected_weight4_count(m: int, e: int) -> int:
    """
    Number of weight-4 codewords of the extended code, via MacWilliams from the closed-form dual distribution
    """
    case, dual_wd = closed_form_dual_wd(m, e)
    return macwilliams(dual_wd, case.dual_dimension)[4]


def extract_weight4_blocks(ctx: FieldCtx, e: int, shards: int = 1) -> Design:
    """
    Supports of the weight-4 codewords of the extended code, by the per-pair linearized solve

    :param ctx: Field with even ``m >= 4``
    :param e: ``2 <= e <= m/2`` with ``gcd(m, e) = 2``
    :param shards: Number of worker processes; the range of ``s`` is split evenly
    :raises ParameterRangeError: if the parameters are outside the Steiner system hypothesis
    :raises VerificationMismatch: if the number of blocks differs from the weight-4 count
    """
    logger = logwood.get_logger('designs.extract')
    check_steiner_hypothesis(ctx.m, e)
    ranges = split_range(1, ctx.size, shards)
    logger.info('Solving weight-4 supports for m={}, e={} in {} shard(s)', ctx.m, e, len(ranges))
    parts = run_sharded(_solve_range, [(ctx.m, ctx.primitive_poly, e, lo, hi) for lo, hi in ranges])
    for (lo, hi), part in zip(ranges, parts):
        logger.debug('Pair solve for s in [{}, {}) found {} blocks', lo, hi, len(part))
    blocks = numpy.concatenate(parts)
    design = Design(ctx.size, 4, blocks, m=ctx.m, e=e, source=SOURCE_PAIR_SOLVE)
    expected = expected_weight4_count(ctx.m, e)
    if design.b != expected:
        raise VerificationMismatch(f'Extracted {design.b} weight-4 blocks, expected A_4 = {expected}', details=design)
    logger.info('Extracted {} weight-4 blocks', design.b)
    return design


def _words_to_points(words: List[int], code: LinearCode, k: int) -> numpy.ndarray:
    if not words:
        return numpy.zeros((0, k), dtype=numpy.int64)
    n_bytes = (code.length + 7) // 8
    raw = numpy.frombuffer(b''.join(w.to_bytes(n_bytes, 'little') for w in words), dtype=numpy.uint8)
    bits = numpy.unpackbits(raw.reshape(len(words), n_bytes), axis=1, bitorder='little')[:, :code.length]
    positions = numpy.nonzero(bits)[1].reshape(len(words), k)
    points = numpy.array([code.point(i) for i in range(code.length)], dtype=numpy.int64)
    return points[positions]


def extract_designs_by_enumeration(code: LinearCode, weights: Optional[Iterable[int]] = None,
                                   guard: int = DEFAULT_GUARD) -> Dict[int, Design]:
    """
    Supports of all codewords, grouped by weight, in a single pass over the code

    :param weights: Weights to collect; all nonzero weights if omitted
    :raises EnumerationGuardError: if the code dimension exceeds ``guard``
    :raises InconsistencyError: if two codewords share a support
    """
    wanted = set(weights) if weights is not None else None
    words: Dict[int, List[int]] = {}
    for word in iter_codewords(code, guard):
        weight = popcount(word)
        if weight and (wanted is None or weight in wanted):
            words.setdefault(weight, []).append(word)
    designs = {}
    for k in sorted(words if wanted is None else wanted):
        if k < 1 or k > code.length:
            continue
        try:
            designs[k] = Design(code.length, k, _words_to_points(words.get(k, []), code, k),
                                m=code.m, e=code.e, source=f'{SOURCE_ENUMERATION} of {code.kind} code')
        except ValueError as error:
            raise InconsistencyError(f'Weight-{k} supports of {code!r} are not distinct: {error}') from error
    logger = logwood.get_logger('designs.extract')
    logger.info('Collected supports of {!r} for weights {}', code,
                ', '.join(f'{k} ({d.b})' for k, d in designs.items()))
    return designs


def extract_blocks_by_enumeration(code: LinearCode, k: int, guard: int = DEFAULT_GUARD) -> Design:
    """
    Supports of all codewords of weight ``k``

    :raises EnumerationGuardError: if the code dimension exceeds ``guard``
    """
    if not 1 <= k <= code.length:
        raise ParameterRangeError(f'Block size {k} outside [1, {code.length}]')
    return extract_designs_by_enumeration(code, [k], guard)[k]


def affine_image(design: Design, ctx: FieldCtx, a: int, b: int) -> Design:
    """
    Image of every block under ``x -> ax + b``
    """
    if a == 0:
        raise ConfigurationError('σ(x) = ax + b needs a != 0')
    image = ctx.mul_array(a, design.blocks) ^ b
    return Design(design.v, design.k, image, t=design.t, lam=design.lam, m=design.m, e=design.e,
                  source=f'affine image of {design.source}')

