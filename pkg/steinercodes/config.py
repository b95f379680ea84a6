"""
Run configuration

Values come from three layers, later ones winning: built-in defaults, a ``key=value`` config file (``--config``) and
command-line flags. Config file keys::

    m = 4,6,8
    e = 2
    guard = 22
    shards = 4
    format = json
    out = results
    seed = 1
    field.poly.12 = 0x1053
    report.steiner_max_m = 8

Blank lines and lines starting with ``#`` are ignored.
"""
import argparse
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional

from steinercodes.error import ConfigurationError
from steinercodes.field import FieldCtx, field_new
from steinercodes.util import parse_hex, parse_int_list
from steinercodes.wdist import DEFAULT_GUARD

FORMAT_TEXT = 'text'
FORMAT_JSON = 'json'

DEFAULT_STEINER_MAX_M = 8
"""
:type: int

Largest m for which `report` runs block extraction and the affine spot check
"""


@dataclass
class RunConfig:
    """
    Configuration shared by all commands
    """

    m_values: List[int] = field(default_factory=list)
    """
    :type: List[int]

    Extension degrees; most commands need exactly one
    """

    e: Optional[int] = None
    """
    :type: Optional[int]

    Defining set parameter; `None` lets `report` cover every ``1 <= e <= m/2``
    """

    enumeration_guard: int = DEFAULT_GUARD
    shard_count: int = 1
    output_dir: Path = Path('.')
    format: str = FORMAT_TEXT
    seed: int = 1
    field_polys: Dict[int, int] = field(default_factory=dict)
    """
    :type: Dict[int, int]

    Primitive polynomial overrides per m
    """

    steiner_max_m: int = DEFAULT_STEINER_MAX_M

    def __post_init__(self):
        if self.enumeration_guard < 1:
            raise ConfigurationError(f'Enumeration guard must be positive, got {self.enumeration_guard}')
        if self.shard_count < 1 or self.shard_count & (self.shard_count - 1):
            raise ConfigurationError(f'Shard count must be a power of two, got {self.shard_count}')
        if self.format not in (FORMAT_TEXT, FORMAT_JSON):
            raise ConfigurationError(f'Unknown format {self.format}')

    @property
    def m(self) -> int:
        if len(self.m_values) != 1:
            raise ConfigurationError(f'Expected a single --m, got {self.m_values or "none"}')
        return self.m_values[0]

    def require_e(self) -> int:
        if self.e is None:
            raise ConfigurationError('Missing --e')
        return self.e

    def field_ctx(self, m: int) -> FieldCtx:
        return field_new(m, self.field_polys.get(m))


def read_config_file(path: Path) -> Dict[str, str]:
    """
    Parse a ``key=value`` config file into raw strings
    """
    values = {}
    try:
        text = Path(path).read_text()
    except OSError as error:
        raise ConfigurationError(f'Cannot read config file {path}: {error}') from error
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        match = re.match(r'^([\w.]+)\s*=\s*(.*)$', line)
        if not match:
            raise ConfigurationError(f'{path}:{number}: expected key=value, got {line}')
        values[match.group(1)] = match.group(2).strip()
    return values


class RunConfigurator:
    """
    Registers the shared flags and builds a `RunConfig` from argparse output
    """

    def add_app_arguments(self, parser: argparse.ArgumentParser) -> None:
        group = parser.add_argument_group('Run', 'Flags override values from --config.')
        group.add_argument('--config', metavar='PATH', help='key=value config file')
        group.add_argument('--m', metavar='M[,M...]', help='Extension degree(s) of GF(2^m)')
        group.add_argument('--e', metavar='E', type=int, help='Defining set parameter, 1 <= e <= m/2')
        group.add_argument('--guard', metavar='DIM', type=int,
                           help=f'Largest code dimension to enumerate (default {DEFAULT_GUARD})')
        group.add_argument('--shards', metavar='N', type=int, help='Number of worker processes, a power of two')
        group.add_argument('--out', metavar='DIR', help='Output directory for block files')
        group.add_argument('--format', choices=[FORMAT_TEXT, FORMAT_JSON], help='Output format')
        group.add_argument('--seed', metavar='SEED', type=int, help='Seed of randomized spot checks (default 1)')

    @staticmethod
    def config_from_args(args) -> RunConfig:
        """
        Get configuration from argparse output
        """
        values = read_config_file(args.config) if getattr(args, 'config', None) else {}
        flags = {
            'm': args.m,
            'e': args.e,
            'guard': args.guard,
            'shards': args.shards,
            'out': args.out,
            'format': args.format,
            'seed': args.seed,
        }
        values.update({key: str(value) for key, value in flags.items() if value is not None})
        try:
            return RunConfigurator.config_from_values(values)
        except ValueError as error:
            raise ConfigurationError(str(error)) from error

    @staticmethod
    def config_from_values(values: Dict[str, str]) -> RunConfig:
        known = {'m', 'e', 'guard', 'shards', 'out', 'format', 'seed', 'report.steiner_max_m'}
        field_polys = {}
        for key, value in values.items():
            match = re.match(r'^field\.poly\.(\d+)$', key)
            if match:
                field_polys[int(match.group(1))] = parse_hex(value)
            elif key not in known:
                raise ConfigurationError(f'Unknown config key {key}')
        kwargs = {'field_polys': field_polys}
        if 'm' in values:
            kwargs['m_values'] = parse_int_list(values['m'])
        if 'e' in values:
            kwargs['e'] = int(values['e'])
        if 'guard' in values:
            kwargs['enumeration_guard'] = int(values['guard'])
        if 'shards' in values:
            kwargs['shard_count'] = int(values['shards'])
        if 'out' in values:
            kwargs['output_dir'] = Path(values['out'])
        if 'format' in values:
            kwargs['format'] = values['format']
        if 'seed' in values:
            kwargs['seed'] = int(values['seed'])
        if 'report.steiner_max_m' in values:
            kwargs['steiner_max_m'] = int(values['report.steiner_max_m'])
        return RunConfig(**kwargs)
