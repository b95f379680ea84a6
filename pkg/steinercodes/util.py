import asyncio
import re
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Sequence, Tuple, TypeVar

import logwood
from logwood import global_config

from steinercodes.error import InconsistencyError

R = TypeVar('R')


def parse_int_list(value: str) -> List[int]:
    """
    Parse a comma-separated list of integers, e.g. ``4,6,8``.

    :param value: Input string. Whitespace around the items is ignored.
    """
    if not re.match(r'^\s*\d+(\s*,\s*\d+)*\s*$', value):
        raise ValueError(f'Invalid integer list {value}')
    return [int(item) for item in value.split(',')]


def parse_hex(value: str) -> int:
    """
    Parse a hex bitmask with or without ``0x`` prefix, e.g. ``0x11D``.
    """
    m = re.match(r'^(0[xX])?([0-9a-fA-F]+)$', value.strip())
    if not m:
        raise ValueError(f'Invalid hex value {value}')
    return int(m.group(2), 16)


def popcount(x: int) -> int:
    return bin(x).count('1')


def split_range(start: int, stop: int, parts: int) -> List[Tuple[int, int]]:
    """
    Split ``[start, stop)`` into at most ``parts`` contiguous, nearly equal, non-empty ranges.
    """
    total = stop - start
    parts = max(1, min(parts, total))
    bounds = [start + (total * i) // parts for i in range(parts + 1)]
    return [(lo, hi) for lo, hi in zip(bounds, bounds[1:]) if hi > lo]


def run_sharded(func: Callable[..., R], shard_args: Sequence[tuple], workers: int = None) -> List[R]:
    """
    Run ``func`` once per argument tuple and return the results in shard order.

    A single shard (or ``workers == 1``) runs inline. Otherwise the shards are submitted to a process pool through
    ``loop.run_in_executor`` and gathered in an asyncio event loop, so ``func`` and its arguments must be picklable,
    i.e. ``func`` is a module-level function.

    :param func: Function computing one shard
    :param shard_args: One argument tuple per shard
    :param workers: Maximum number of worker processes, defaults to the number of shards
    """
    if len(shard_args) <= 1 or workers == 1:
        return [func(*args) for args in shard_args]
    return asyncio.run(_gather_in_executor(func, shard_args, workers or len(shard_args)))


def _configure_worker_logging(level: int, log_format: str) -> None:
    # Forked workers inherit the configuration, spawned ones start without it
    if not logwood.state.config_called:
        logwood.basic_config(level=level, format=log_format)


async def _gather_in_executor(func: Callable[..., R], shard_args: Sequence[tuple], workers: int) -> List[R]:
    loop = asyncio.get_running_loop()
    with ProcessPoolExecutor(max_workers=workers, initializer=_configure_worker_logging,
                             initargs=(global_config.default_log_level, global_config.default_format)) as executor:
        futures = [loop.run_in_executor(executor, func, *args) for args in shard_args]
        return list(await asyncio.gather(*futures))


def exact_div(numerator: int, denominator: int, what: str = 'quotient') -> int:
    """
    Integer division that must not leave a remainder.

    :param what: Name of the computed quantity, used in the error message
    :raises InconsistencyError: if ``denominator`` does not divide ``numerator``
    """
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise InconsistencyError(f'{what}: {numerator} is not divisible by {denominator}')
    return quotient
