"""
Exhaustive codeword enumeration in Gray-code order

Successive messages of the binary reflected Gray code differ in one bit, so every step costs one row XOR plus a
popcount. The message space is split into ``2^p`` shards by fixing the top ``p`` message bits; every shard walks its
own Gray code over the remaining rows and owns a private histogram.
"""
from typing import Iterator, List, Sequence

import logwood

from steinercodes.code import LinearCode
from steinercodes.error import ConfigurationError, EnumerationGuardError
from steinercodes.util import popcount, run_sharded
from ._distribution import WeightDistribution

DEFAULT_GUARD = 22
"""
:type: int

Largest code dimension enumerated by default
"""


def check_guard(code: LinearCode, guard: int) -> None:
    if code.dimension > guard:
        raise EnumerationGuardError(
            f'{code!r} has dimension {code.dimension} above the enumeration guard {guard}. '
            f'Use the MacWilliams transform of the dual distribution instead, or raise --guard.')


def _prefix_bits(shards: int, dimension: int) -> int:
    if shards < 1 or shards & (shards - 1):
        raise ConfigurationError(f'Shard count must be a power of two, got {shards}')
    return min(shards.bit_length() - 1, dimension)


def _shard_start(rows: Sequence[int], free: int, prefix: int) -> int:
    word = 0
    for i, row in enumerate(rows[free:]):
        if (prefix >> i) & 1:
            word ^= row
    return word


def _gray_walk(rows: Sequence[int], free: int, start: int) -> Iterator[int]:
    word = start
    yield word
    for i in range(1, 1 << free):
        word ^= rows[(i & -i).bit_length() - 1]
        yield word


def _shard_histogram(rows: Sequence[int], length: int, free: int, prefix: int) -> List[int]:
    histogram = [0] * (length + 1)
    for word in _gray_walk(rows, free, _shard_start(rows, free, prefix)):
        histogram[popcount(word)] += 1
    return histogram


def enumerate_wd(code: LinearCode, guard: int = DEFAULT_GUARD, shards: int = 1) -> WeightDistribution:
    """
    Weight distribution by visiting all ``2^k`` codewords

    :param code: Code of dimension ``k <= guard``
    :param guard: Enumeration guard
    :param shards: Number of message-space shards (a power of two); shards run in separate processes
    :raises EnumerationGuardError: if the dimension exceeds the guard
    """
    check_guard(code, guard)
    p = _prefix_bits(shards, code.dimension)
    free = code.dimension - p
    logwood.get_logger('wdist.enumerate').info('Enumerating {} codewords of {!r} in {} shard(s)',
                                               1 << code.dimension, code, 1 << p)
    histograms = run_sharded(_shard_histogram, [(code.rows, code.length, free, prefix) for prefix in range(1 << p)])
    result = WeightDistribution(code.length, {})
    for histogram in histograms:
        result = result + WeightDistribution(code.length, dict(enumerate(histogram)))
    if result.total != 1 << code.dimension:
        raise AssertionError(f'Enumeration visited {result.total} codewords, expected {1 << code.dimension}')
    return result


def iter_codewords(code: LinearCode, guard: int = DEFAULT_GUARD) -> Iterator[int]:
    """
    All codewords as packed integers, in Gray-code order starting with zero
    """
    check_guard(code, guard)
    return _gray_walk(code.rows, code.dimension, 0)
