import pytest

from steinercodes import cyclotomic
from steinercodes.error import ParameterRangeError


@pytest.mark.parametrize('m', [4, 6, 8, 12])
def test_cosets_partition(m):
    n = (1 << m) - 1
    cosets = cyclotomic.cyclotomic_cosets(n)
    members = [x for c in cosets for x in c.elements]
    assert sorted(members) == list(range(n))
    assert all(m % len(c) == 0 for c in cosets)
    assert [c.leader for c in cosets] == sorted(cyclotomic.coset_leaders(n))


def test_coset():
    assert cyclotomic.coset(1, 15).elements == (1, 2, 4, 8)
    assert cyclotomic.coset(10, 15).elements == (5, 10)
    assert cyclotomic.coset(10, 15).leader == 5
    assert 8 in cyclotomic.coset(1, 15)
    with pytest.raises(ParameterRangeError):
        cyclotomic.coset(15, 15)


def test_even_modulus_rejected():
    with pytest.raises(ParameterRangeError):
        cyclotomic.cyclotomic_cosets(16)


@pytest.mark.parametrize('m, e', [(m, e) for m in range(4, 13) for e in range(1, m // 2 + 1)])
def test_defining_set_size(m, e):
    defining_set = cyclotomic.defining_set(m, e)
    assert len(defining_set.cosets) == 2
    assert len(defining_set.cosets[1]) == cyclotomic.expected_coset_size(m, e)
    assert len(defining_set) == m + cyclotomic.expected_coset_size(m, e)


def test_defining_set_range():
    with pytest.raises(ParameterRangeError):
        cyclotomic.defining_set(6, 4)
