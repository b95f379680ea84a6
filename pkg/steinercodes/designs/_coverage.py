"""
Exact coverage counting for 1- and 2-designs

Pairs ``{i, j}``, ``i < j``, are numbered row by row: ``index = i (2v - i - 1) / 2 + (j - i - 1)``.
Small blocks add their ``C(k, 2)`` pair indices to a flat counter through `numpy.bincount`; large blocks
accumulate the Gram matrix ``N^T N`` of the incidence matrix instead, whose off-diagonal entries are the pair counts.
"""
from dataclasses import dataclass, field
from math import comb
from typing import List, Optional, Tuple

import logwood
import numpy

from steinercodes.error import InconsistencyError, ParameterRangeError
from steinercodes.util import run_sharded, split_range
from ._design import Design
from ._params import lambda_from_count

MAX_OFFENDING = 10

_CHUNK_INDICES = 1 << 22
_CHUNK_ROWS = 4096


@dataclass(frozen=True)
class CoverageReport:
    """
    Result of `verify_design`

    ``lam`` is the common count if every ``t``-subset is covered equally often, otherwise `None` and ``offending``
    lists up to `MAX_OFFENDING` subsets whose count differs from the most frequent one.
    """

    t: int
    v: int
    k: int
    b: int
    lam: Optional[int]
    min_count: int
    max_count: int
    offending: List[Tuple[Tuple[int, ...], int]] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.lam is not None


def _pair_starts(v: int) -> numpy.ndarray:
    i = numpy.arange(v, dtype=numpy.int64)
    return i * (2 * v - i - 1) // 2


def _pair_counts_flat(blocks: numpy.ndarray, v: int) -> numpy.ndarray:
    k = blocks.shape[1]
    starts = _pair_starts(v)
    left, right = numpy.triu_indices(k, 1)
    counts = numpy.zeros(comb(v, 2), dtype=numpy.int64)
    rows_per_chunk = max(1, _CHUNK_INDICES // len(left))
    for lo in range(0, len(blocks), rows_per_chunk):
        chunk = blocks[lo:lo + rows_per_chunk]
        i = chunk[:, left]
        j = chunk[:, right]
        counts += numpy.bincount((starts[i] + j - i - 1).ravel(), minlength=len(counts))
    return counts


def _pair_counts_gram(blocks: numpy.ndarray, v: int) -> numpy.ndarray:
    gram = numpy.zeros((v, v), dtype=numpy.float64)
    for lo in range(0, len(blocks), _CHUNK_ROWS):
        chunk = blocks[lo:lo + _CHUNK_ROWS]
        incidence = numpy.zeros((len(chunk), v), dtype=numpy.float64)
        incidence[numpy.arange(len(chunk))[:, None], chunk] = 1
        gram += incidence.T @ incidence
    return gram[numpy.triu_indices(v, 1)].astype(numpy.int64)


def pair_counts(blocks: numpy.ndarray, v: int) -> numpy.ndarray:
    """
    Number of blocks through each pair, in flat pair order
    """
    k = blocks.shape[1]
    if comb(k, 2) > v:
        return _pair_counts_gram(blocks, v)
    return _pair_counts_flat(blocks, v)


def _decode_pair(index: int, starts: numpy.ndarray) -> Tuple[int, int]:
    i = int(numpy.searchsorted(starts, index, side='right')) - 1
    return i, int(index - starts[i]) + i + 1


def verify_design(design: Design, t: int = 2, shards: int = 1) -> CoverageReport:
    """
    Count how often every ``t``-subset of points lies in a block

    Unequal coverage is a finding and is reported, never raised.

    :param t: 1 (replication number) or 2 (pair coverage)
    :param shards: Number of worker processes; blocks are split evenly and the counters added up
    :raises ParameterRangeError: for an empty design or ``t`` outside ``{1, 2}``
    :raises InconsistencyError: if the common count contradicts ``b C(k, t) = λ C(v, t)``
    """
    logger = logwood.get_logger('designs.coverage')
    if design.b == 0:
        raise ParameterRangeError('Cannot verify a design without blocks')
    if t not in (1, 2) or t > design.k:
        raise ParameterRangeError(f'Coverage counting supports t in {{1, 2}} with t <= k, got t={t}, k={design.k}')
    if t == 1:
        counts = numpy.bincount(design.blocks.ravel(), minlength=design.v)
    else:
        ranges = split_range(0, design.b, shards)
        parts = run_sharded(pair_counts, [(design.blocks[lo:hi], design.v) for lo, hi in ranges])
        counts = sum(parts[1:], parts[0])
    low, high = int(counts.min()), int(counts.max())
    if low == high:
        lam = low
        if lam != lambda_from_count(design.b, design.v, design.k, t):
            raise InconsistencyError(f'Uniform coverage {lam} contradicts b={design.b} blocks')
        logger.info('{!r} is a {}-design with λ={}', design, t, lam)
        return CoverageReport(t, design.v, design.k, design.b, lam, low, high)

    values, frequencies = numpy.unique(counts, return_counts=True)
    majority = values[numpy.argmax(frequencies)]
    bad = numpy.flatnonzero(counts != majority)[:MAX_OFFENDING]
    if t == 1:
        offending = [((int(x),), int(counts[x])) for x in bad]
    else:
        starts = _pair_starts(design.v)
        offending = [(_decode_pair(int(index), starts), int(counts[index])) for index in bad]
    logger.warning('{!r} is not a {}-design: coverage ranges over [{}, {}]',
                   design, t, low, high)
    return CoverageReport(t, design.v, design.k, design.b, None, low, high, offending)
