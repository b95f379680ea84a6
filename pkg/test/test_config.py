import argparse
from pathlib import Path

import pytest

from steinercodes.config import RunConfig, RunConfigurator, read_config_file
from steinercodes.error import ConfigurationError, NonPrimitivePolynomialError
from steinercodes.wdist import DEFAULT_GUARD


@pytest.fixture
def parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser()
    RunConfigurator().add_app_arguments(parser)
    return parser


def test_defaults(parser):
    config = RunConfigurator.config_from_args(parser.parse_args([]))
    assert config == RunConfig()
    assert config.enumeration_guard == DEFAULT_GUARD
    assert config.shard_count == 1
    assert config.output_dir == Path('.')


def test_flags(parser):
    args = parser.parse_args(['--m', '4,8', '--e', '2', '--guard', '17', '--shards', '4', '--out', 'results',
                              '--format', 'json', '--seed', '9'])
    config = RunConfigurator.config_from_args(args)
    assert config.m_values == [4, 8]
    assert config.require_e() == 2
    assert config.enumeration_guard == 17
    assert config.shard_count == 4
    assert config.output_dir == Path('results')
    assert config.format == 'json'
    assert config.seed == 9


def test_config_file_with_flag_override(parser, tmp_path):
    path = tmp_path / 'run.conf'
    path.write_text('# scale run\nm = 12\n\ne = 2\nshards=8\nfield.poly.12 = 0x1053\nreport.steiner_max_m = 12\n')
    config = RunConfigurator.config_from_args(parser.parse_args(['--config', str(path), '--shards', '2']))
    assert config.m == 12
    assert config.e == 2
    assert config.shard_count == 2
    assert config.field_polys == {12: 0x1053}
    assert config.steiner_max_m == 12
    assert config.field_ctx(12).primitive_poly == 0x1053


def test_read_config_file(tmp_path):
    path = tmp_path / 'run.conf'
    path.write_text('m=4\n  # comment\nguard = 20\n')
    assert read_config_file(path) == {'m': '4', 'guard': '20'}
    path.write_text('m 4\n')
    with pytest.raises(ConfigurationError):
        read_config_file(path)
    with pytest.raises(ConfigurationError):
        read_config_file(tmp_path / 'missing.conf')


@pytest.mark.parametrize('values', [
    {'shards': '3'},
    {'guard': '0'},
    {'format': 'xml'},
    {'colour': 'blue'},
    {'m': 'four'},
    {'field.poly.4': 'x^4'},
])
def test_invalid_values(parser, tmp_path, values):
    path = tmp_path / 'run.conf'
    path.write_text(''.join(f'{key} = {value}\n' for key, value in values.items()))
    with pytest.raises(ConfigurationError):
        RunConfigurator.config_from_args(parser.parse_args(['--config', str(path)]))


def test_single_m_and_e_are_required():
    with pytest.raises(ConfigurationError):
        RunConfig(m_values=[4, 6]).m
    with pytest.raises(ConfigurationError):
        RunConfig().m
    with pytest.raises(ConfigurationError):
        RunConfig(m_values=[4]).require_e()


def test_field_polynomial_override_is_validated():
    with pytest.raises(NonPrimitivePolynomialError):
        RunConfig(field_polys={4: 0x1F}).field_ctx(4)
