import pytest

from steinercodes.code import Codeword, build_cyclic, dual, extend
from steinercodes.error import ConfigurationError, EnumerationGuardError
from steinercodes.wdist import WeightDistribution, enumerate_wd, iter_codewords, min_distance

CASE_B_DUAL_16 = {0: 1, 6: 48, 8: 30, 10: 48, 16: 1}
CASE_C_DUAL_16 = {0: 1, 4: 20, 6: 160, 8: 150, 10: 160, 12: 20, 16: 1}


def test_extended_code_m4_e1(extended_4_1):
    assert enumerate_wd(extended_4_1) == WeightDistribution(16, CASE_B_DUAL_16)
    assert enumerate_wd(dual(extended_4_1)) == WeightDistribution(16, CASE_C_DUAL_16)


def test_extended_code_m4_e2(extended_4_2):
    wd = enumerate_wd(extended_4_2)
    assert wd == WeightDistribution(16, CASE_C_DUAL_16)
    assert min_distance(wd) == 4
    assert enumerate_wd(dual(extended_4_2)) == WeightDistribution(16, CASE_B_DUAL_16)


def test_cyclic_code(gf16):
    wd = enumerate_wd(build_cyclic(gf16, 2))
    assert wd.total == 1 << 9
    assert min_distance(wd) == 3


@pytest.mark.parametrize('shards', [2, 4, 16])
def test_sharded_enumeration(extended_4_2, shards):
    assert enumerate_wd(extended_4_2, shards=shards) == enumerate_wd(extended_4_2)


def test_sharded_enumeration_m6(gf64):
    dual_code = dual(extend(build_cyclic(gf64, 2)))
    wd = enumerate_wd(dual_code, shards=8)
    assert wd.total == 1 << 13
    assert wd == enumerate_wd(dual_code)


def test_guard(extended_4_2):
    with pytest.raises(EnumerationGuardError):
        enumerate_wd(extended_4_2, guard=8)
    with pytest.raises(EnumerationGuardError):
        list(iter_codewords(extended_4_2, guard=8))


def test_shard_count_must_be_power_of_two(extended_4_2):
    with pytest.raises(ConfigurationError):
        enumerate_wd(extended_4_2, shards=3)


def test_iter_codewords(extended_4_1):
    words = list(iter_codewords(extended_4_1))
    assert words[0] == 0
    assert len(set(words)) == len(words) == 1 << extended_4_1.dimension
    assert all(extended_4_1.contains(Codeword(word, 16)) for word in words)
