"""
Command-line interface

Commands :code:`code`, :code:`wdist`, :code:`steiner`, :code:`designs` and :code:`report`. All commands share the
flags of `RunConfigurator`; a ``key=value`` config file passed with ``--config`` supplies defaults for them.

Exit codes:

* `EXIT_OK`: success, every comparison agreed
* `EXIT_USAGE`: invalid parameters or usage
* `EXIT_MISMATCH`: an empirical result disagrees with a closed form (a finding)
* `EXIT_INTERNAL`: internal inconsistency, e.g. a non-exact division (a bug)
"""
import argparse
import json
import random
import sys
from math import gcd
from typing import Dict, List, Optional

import argcomplete
import logwood

from steinercodes import report
from steinercodes.code import LinearCode, build_cyclic, code_descriptor, dual, extend, spectral_spot_check, \
    affine_spot_check
from steinercodes.config import FORMAT_JSON, RunConfig, RunConfigurator
from steinercodes.designs import code_design_params, dual_design_params, extract_designs_by_enumeration, \
    extract_weight4_blocks, support_design_params, verify_design, write_blocks, FORMAT_TEXT as BLOCKS_TEXT, \
    FORMAT_JSON as BLOCKS_JSON
from steinercodes.error import ConfigurationError, InconsistencyError, VerificationMismatch, EnumerationGuardError, \
    ParameterRangeError
from steinercodes.wdist import WeightDistribution, a468, closed_form_dual_wd, cross_validate, enumerate_wd, \
    macwilliams, min_distance, FROM_ROUND_TRIP

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_INTERNAL = 3

METHOD_ENUM = 'enum'
METHOD_MACWILLIAMS = 'macwilliams'
METHOD_CLOSED = 'closed'
METHOD_ALL = 'all'

SOURCE_CLOSED_FORM = 'formula'
SOURCE_BLOCK_COUNT = 'from count'

LOG_FORMAT = '%(timestamp).6f %(level)-5s %(name)s: %(message)s'

MIN_CLI_M = 4
"""
:type: int

Smallest extension degree the commands accept. Below it the codes degenerate, e.g. C_E is the zero code for m=2.
"""


class Command:
    """
    Abstract base class of the subcommands

    .. automethod:: __call__
    """

    @property
    def name(self) -> str:
        """
        Name of the subcommand
        """
        raise NotImplementedError

    @property
    def help(self) -> str:
        """
        Help text used in the command line interface
        """
        raise NotImplementedError

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """
        Override to register command specific arguments

        :param parser:
        """
        pass

    def __call__(self, args, config: RunConfig) -> None:
        """
        Override to define the command logic. Signal findings by raising `VerificationMismatch` after printing.

        :param args: Arguments parsed by argparse
        :param config: Shared run configuration
        """
        raise NotImplementedError


def _print(config: RunConfig, data: Dict, text: str) -> None:
    if config.format == FORMAT_JSON:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)


def _wd_data(wd: Optional[WeightDistribution]) -> Optional[Dict]:
    return wd.to_dict() if wd is not None else None


def _code_and_dual_wd(code: LinearCode, config: RunConfig):
    """
    Distributions of an extended code and its dual, each enumerated if within the guard, else transformed
    """
    guard = config.enumeration_guard
    dual_dimension = code.length - code.dimension
    dual_wd = None
    if dual_dimension <= guard:
        dual_wd = enumerate_wd(dual(code), guard, config.shard_count)
    elif code.m >= 4:
        dual_wd = closed_form_dual_wd(code.m, code.e)[1]
    if code.dimension <= guard:
        code_wd = enumerate_wd(code, guard, config.shard_count)
    elif dual_wd is not None:
        code_wd = macwilliams(dual_wd, dual_dimension)
    else:
        raise EnumerationGuardError(f'{code!r} and its dual both exceed the guard {guard}')
    if dual_wd is None:
        dual_wd = macwilliams(code_wd, code.dimension)
    return code_wd, dual_wd


class CodeCommand(Command):
    name = 'code'
    help = 'Build C_E, its extension and dual, print parameters [n, k, d]'

    def __call__(self, args, config: RunConfig):
        ctx = config.field_ctx(config.m)
        e = config.require_e()
        cyclic = build_cyclic(ctx, e)
        extended = extend(cyclic)
        dual_code = dual(extended)
        code_wd, dual_wd = _code_and_dual_wd(extended, config)

        cyclic_d = None
        if cyclic.dimension <= config.enumeration_guard:
            cyclic_d = min_distance(enumerate_wd(cyclic, config.enumeration_guard, config.shard_count))
        rng = random.Random(config.seed)
        affine_failures = affine_spot_check(ctx, extended, rng, report.AFFINE_MAPS, report.AFFINE_WORDS)
        spectral_failures = spectral_spot_check(ctx, e, extended, rng)

        entries = [(cyclic, cyclic_d), (extended, min_distance(code_wd)), (dual_code, min_distance(dual_wd))]
        data = {
            'field': {'m': ctx.m, 'primitive_poly': hex(ctx.primitive_poly)},
            'codes': [dict(code_descriptor(code), min_distance=d) for code, d in entries],
            'spot_checks': {'affine_failures': affine_failures, 'spectral_disagreements': spectral_failures},
        }
        lines = [f'{code.kind:>8}: [{code.length}, {code.dimension}, {d if d is not None else "?"}]'
                 for code, d in entries]
        lines.append(f'generator polynomial: {cyclic.generator_poly} ({cyclic.generator_poly.to_hex()})')
        lines.append(f'affine spot check failures: {affine_failures}, '
                     f'spectral/matrix membership disagreements: {spectral_failures}')
        _print(config, data, '\n'.join(lines))
        if affine_failures or spectral_failures:
            raise VerificationMismatch('Spot checks failed', details=data['spot_checks'])


class WdistCommand(Command):
    name = 'wdist'
    help = 'Weight distributions by enumeration, MacWilliams transform or closed form'

    def add_arguments(self, parser: argparse.ArgumentParser):
        group = parser.add_argument_group('Weight distribution')
        group.add_argument('--method', choices=[METHOD_ENUM, METHOD_MACWILLIAMS, METHOD_CLOSED, METHOD_ALL],
                           default=METHOD_ALL, help='Engine; "all" compares the engines on the dual side')

    def __call__(self, args, config: RunConfig):
        m = config.m
        e = config.require_e()
        method = args.method
        if method == METHOD_ALL:
            self._all(config, m, e)
        elif method == METHOD_ENUM:
            self._enum(config, m, e)
        elif method == METHOD_MACWILLIAMS:
            case, closed = closed_form_dual_wd(m, e)
            validation = cross_validate(m, e, config.field_ctx(m), config.enumeration_guard, config.shard_count)
            code_wd = macwilliams(closed, case.dual_dimension)
            data = {'code': code_wd.to_dict(), 'dual': _wd_data(validation.transformed),
                    'dual_from': validation.transformed_from, 'skipped': validation.skipped}
            source = validation.transformed_from or validation.skipped.get('transformed')
            dual_text = str(validation.transformed) if validation.transformed is not None else 'skipped'
            _print(config, data, f'code: {code_wd}\ndual: {dual_text} ({source})')
        else:
            case, closed = closed_form_dual_wd(m, e)
            data = {'case': case.tag, 'dual': closed.to_dict()}
            text = f'case {case.tag}\ndual: {closed}'
            if m % 4 == 0 and gcd(m, e) == 2:
                counts = a468(m)
                data['code_low_weights'] = {'4': str(counts.a4), '6': str(counts.a6), '8': str(counts.a8)}
                text += f'\ncode: A_4={counts.a4}, A_6={counts.a6}, A_8={counts.a8}'
            _print(config, data, text)

    @staticmethod
    def _enum(config: RunConfig, m: int, e: int):
        extended = extend(build_cyclic(config.field_ctx(m), e))
        guard = config.enumeration_guard
        if extended.dimension > guard and extended.length - extended.dimension > guard:
            raise EnumerationGuardError(f'{extended!r} and its dual both exceed the enumeration guard {guard}, '
                                        f'use --method macwilliams or raise --guard')
        code_wd = enumerate_wd(extended, guard, config.shard_count) if extended.dimension <= guard else None
        dual_code = dual(extended)
        dual_wd = enumerate_wd(dual_code, guard, config.shard_count) if dual_code.dimension <= guard else None
        _print(config, {'code': _wd_data(code_wd), 'dual': _wd_data(dual_wd)},
               f'code: {code_wd if code_wd is not None else "skipped (guard)"}\n'
               f'dual: {dual_wd if dual_wd is not None else "skipped (guard)"}')

    @staticmethod
    def _all(config: RunConfig, m: int, e: int):
        validation = cross_validate(m, e, config.field_ctx(m), config.enumeration_guard, config.shard_count)
        transformed_name = 'round-trip' if validation.transformed_from == FROM_ROUND_TRIP else 'macwilliams'
        columns = [('closed', validation.closed), ('enumerated', validation.enumerated),
                   (transformed_name, validation.transformed)]
        weights = sorted(set().union(*(wd.counts for _, wd in columns if wd is not None)))
        lines = ['weight | ' + ' | '.join(name for name, _ in columns)]
        for w in weights:
            lines.append(f'{w} | ' + ' | '.join(str(wd[w]) if wd is not None else 'skipped' for _, wd in columns))
        lines.append('total | ' + ' | '.join(str(wd.total) if wd is not None else 'skipped' for _, wd in columns))
        lines.append('agree' if validation.agree else 'MISMATCH')
        data = {
            'case': validation.case.tag,
            'closed': validation.closed.to_dict(),
            'enumerated': _wd_data(validation.enumerated),
            'macwilliams': _wd_data(validation.transformed),
            'macwilliams_from': validation.transformed_from,
            'skipped': validation.skipped,
            'agree': validation.agree,
        }
        _print(config, data, '\n'.join(lines))
        if not validation.agree:
            raise VerificationMismatch(f'Weight distribution engines disagree for m={m}, e={e}', details=validation)


class SteinerCommand(Command):
    name = 'steiner'
    help = 'Extract the weight-4 blocks, verify S(2, 4, 2^m) and write the block file'

    def __call__(self, args, config: RunConfig):
        ctx = config.field_ctx(config.m)
        e = config.require_e()
        design = extract_weight4_blocks(ctx, e, config.shard_count)
        coverage = verify_design(design, shards=config.shard_count)
        path = None
        if coverage.holds:
            design = design.with_lambda(coverage.lam)
            config.output_dir.mkdir(parents=True, exist_ok=True)
            fmt = BLOCKS_JSON if config.format == FORMAT_JSON else BLOCKS_TEXT
            suffix = 'json' if fmt == BLOCKS_JSON else 'blocks'
            path = write_blocks(design, config.output_dir / f'steiner_m{ctx.m}_e{e}.{suffix}', fmt)
        data = {'m': ctx.m, 'e': e, 'v': design.v, 'b': design.b, 'lambda': coverage.lam,
                'offending': [[list(pair), count] for pair, count in coverage.offending],
                'block_file': str(path) if path else None}
        verdict = f'S(2, 4, {design.v})' if coverage.lam == 1 else 'not a Steiner system'
        _print(config, data, f'{design.b} blocks, λ={coverage.lam if coverage.holds else "unequal"}: {verdict}'
                             + (f'\nblocks written to {path}' if path else ''))
        if coverage.lam != 1:
            raise VerificationMismatch(f'Weight-4 supports for m={ctx.m}, e={e} do not form S(2, 4, {design.v})',
                                       details=coverage)


class DesignsCommand(Command):
    name = 'designs'
    help = 'Verify the 2-designs of every weight class of the extended code and its dual'

    def __call__(self, args, config: RunConfig):
        m = config.m
        e = config.require_e()
        extended = extend(build_cyclic(config.field_ctx(m), e))
        guard = config.enumeration_guard
        expected = {('dual', p.k): p.lam for p in dual_design_params(m, e)}
        if m % 2 == 0 and gcd(m, e) == 2:
            expected.update({('code', p.k): p.lam for p in code_design_params(m, e)})
        rows = []
        for side, code in (('code', extended), ('dual', dual(extended))):
            if code.dimension > guard:
                rows.append({'side': side, 'skipped': f'dimension {code.dimension} above guard {guard}'})
                continue
            designs = extract_designs_by_enumeration(code, guard=guard)
            wd = WeightDistribution(code.length, {k: d.b for k, d in designs.items()})
            predicted = {p.k: p.lam for p in support_design_params(wd)}
            for k, design in designs.items():
                if k < 2:
                    continue
                coverage = verify_design(design, shards=config.shard_count)
                if (side, k) in expected:
                    formula, source = expected[side, k], SOURCE_CLOSED_FORM
                else:
                    formula, source = predicted[k], SOURCE_BLOCK_COUNT
                rows.append({'side': side, 'k': k, 'b': design.b, 'lambda': coverage.lam, 'formula': formula,
                             'formula_source': source,
                             'status': report.STATUS_OK if coverage.lam == formula else report.STATUS_MISMATCH})
        lines = []
        for row in rows:
            if 'skipped' in row:
                lines.append(f'{row["side"]}: skipped, {row["skipped"]}')
            else:
                lines.append(f'{row["side"]} k={row["k"]}: b={row["b"]}, λ={row["lambda"]}, '
                             f'{row["formula_source"]} {row["formula"]}, {row["status"]}')
        _print(config, {'m': m, 'e': e, 'rows': rows}, '\n'.join(lines))
        if any(row.get('status') == report.STATUS_MISMATCH for row in rows):
            raise VerificationMismatch(f'Design verification failed for m={m}, e={e}', details=rows)


class ReportCommand(Command):
    name = 'report'
    help = 'Reproduce the closed-form tables and design parameters with empirical columns'

    def __call__(self, args, config: RunConfig):
        rows = report.build_report(config)
        sys.stdout.write(report.render(rows, config.format))
        if report.has_inconsistency(rows):
            raise InconsistencyError('Report contains block counts with a non-integral λ')
        if report.has_mismatch(rows):
            raise VerificationMismatch('Report contains MISMATCH rows', details=rows)


class _ArgumentParser(argparse.ArgumentParser):

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f'{self.prog}: error: {message}\n')


class Launcher:
    """
    Main entry point of the :code:`steinercodes` command line application
    """

    def __init__(self):
        self._configurator = RunConfigurator()
        self._commands: Dict[str, Command] = {}
        self.parser = _ArgumentParser(prog='steinercodes')
        self.parser.add_argument('-v', '--verbose', action='count', default=0)
        self.parser.add_argument('-q', '--quiet', action='count', default=0)

        # noinspection PyProtectedMember
        self.subparsers: argparse._SubParsersAction = self.parser.add_subparsers(help='command', dest='command',
                                                                                 parser_class=_ArgumentParser)

    @property
    def commands(self) -> List[Command]:
        return [CodeCommand(), WdistCommand(), SteinerCommand(), DesignsCommand(), ReportCommand()]

    def main(self, args=None):
        """
        Launch the commandline interface.

        :param args: Optionally pass arguments. If not given, the arguments passed to the program will be parsed.
        """
        self._configure_parser()
        argcomplete.autocomplete(self.parser)
        args = self.parser.parse_args(args)
        logwood.basic_config(
            format=LOG_FORMAT,
            level=self._get_loglevel(args),
        )
        logger = logwood.get_logger(self.__class__.__name__)

        if not args.command:
            self.parser.print_usage()
            sys.exit(EXIT_USAGE)
        try:
            config = self._configurator.config_from_args(args)
            if any(m < MIN_CLI_M for m in config.m_values):
                raise ParameterRangeError(f'Commands need m >= {MIN_CLI_M}, got m={config.m_values}; '
                                          f'try e.g. --m 4 --e 2')
            self._commands[args.command](args, config)
        except ConfigurationError as error:
            logger.error('{}', error)
            print(f'error: {error}', file=sys.stderr)
            sys.exit(EXIT_USAGE)
        except VerificationMismatch as error:
            logger.error('Verification mismatch: {}', error)
            sys.exit(EXIT_MISMATCH)
        except InconsistencyError as error:
            logger.critical('Internal inconsistency: {}', error)
            sys.exit(EXIT_INTERNAL)

    def _configure_parser(self):
        for command in self.commands:
            cmd_parser = self.subparsers.add_parser(command.name, help=command.help)  # type: argparse.ArgumentParser
            command.add_arguments(cmd_parser)
            self._configurator.add_app_arguments(cmd_parser)
            self._commands[command.name] = command

    @staticmethod
    def _get_loglevel(args):
        verbosity = args.verbose - args.quiet
        if verbosity <= -3:
            return logwood.CRITICAL
        elif verbosity == -2:
            return logwood.ERROR
        elif verbosity == -1:
            return logwood.WARNING
        elif verbosity == 0:
            return logwood.INFO
        else:
            return logwood.DEBUG


def main():
    Launcher().main()
