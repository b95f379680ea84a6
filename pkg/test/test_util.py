from operator import add

import logwood
import pytest
from logwood import global_config
from logwood.testing import reset_state

from steinercodes.error import InconsistencyError
from steinercodes.util import _configure_worker_logging, exact_div, parse_hex, parse_int_list, popcount, run_sharded, \
    split_range


def test_parse_int_list():
    assert parse_int_list('4, 6,8') == [4, 6, 8]
    assert parse_int_list('12') == [12]
    with pytest.raises(ValueError):
        parse_int_list('4;6')


@pytest.mark.parametrize('text, value', [('0x11D', 0x11D), ('11d', 0x11D), (' 0X13 ', 0x13)])
def test_parse_hex(text, value):
    assert parse_hex(text) == value


def test_parse_hex_rejects_garbage():
    with pytest.raises(ValueError):
        parse_hex('0xg1')


def test_split_range():
    assert split_range(1, 16, 4) == [(1, 4), (4, 8), (8, 12), (12, 16)]
    assert split_range(0, 3, 8) == [(0, 1), (1, 2), (2, 3)]
    assert split_range(5, 6, 1) == [(5, 6)]


@pytest.mark.parametrize('workers', [None, 1, 2])
def test_run_sharded_keeps_order(workers):
    assert run_sharded(add, [(i, 10 * i) for i in range(6)], workers) == [0, 11, 22, 33, 44, 55]


def test_exact_div():
    assert exact_div(12, 4) == 3
    with pytest.raises(InconsistencyError):
        exact_div(13, 4, 'A_4')


def test_popcount():
    assert popcount(0) == 0
    assert popcount((1 << 200) - 1) == 200


def test_worker_logging_setup():
    reset_state()
    _configure_worker_logging(logwood.WARNING, '%(message)s')
    assert logwood.state.config_called
    assert global_config.default_log_level == logwood.WARNING
    logwood.get_logger('worker').warning('configured')
    # Already configured, e.g. a forked worker
    _configure_worker_logging(logwood.DEBUG, '%(message)s')
    assert global_config.default_log_level == logwood.WARNING
