import random
from math import comb

import pytest

from steinercodes.code import LinearCode, dual
from steinercodes.error import InconsistencyError
from steinercodes.wdist import WeightDistribution, enumerate_wd, krawtchouk_row, macwilliams


def _random_code(rng: random.Random) -> LinearCode:
    length = rng.randint(4, 14)
    dimension = rng.randint(1, min(length - 1, 9))
    rows = [(1 << i) | (rng.getrandbits(length - dimension) << dimension) for i in range(dimension)]
    return LinearCode(length, rows, 'random')


def test_krawtchouk_rows():
    assert krawtchouk_row(6, 0) == [comb(6, j) for j in range(7)]
    assert krawtchouk_row(4, 4) == [1, -4, 6, -4, 1]
    assert krawtchouk_row(3, 1) == [1, 1, -1, -1]
    assert krawtchouk_row(0, 0) == [1]


def test_transform_of_random_codes():
    rng = random.Random(2)
    for _ in range(100):
        code = _random_code(rng)
        wd = enumerate_wd(code)
        dual_wd = macwilliams(wd, code.dimension)
        assert dual_wd == enumerate_wd(dual(code))
        assert macwilliams(dual_wd, code.length - code.dimension) == wd


def test_hamming_code_is_self_dual():
    wd = WeightDistribution(8, {0: 1, 4: 14, 8: 1})
    assert macwilliams(wd, 4) == wd


def test_wrong_dimension():
    with pytest.raises(InconsistencyError):
        macwilliams(WeightDistribution(8, {0: 1, 4: 14, 8: 1}), 3)


def test_not_a_code():
    with pytest.raises(InconsistencyError):
        macwilliams(WeightDistribution(3, {0: 1, 3: 3}), 2)
