"""
Block files

Text format::

    v=16 k=4 b=20 t=2 lambda=1 m=4 e=2
    0 1 6 7
    ...

one block per line as space-separated hex point encodings, blocks in canonical order. ``m`` and ``e`` are omitted for
designs that do not come from a code. The JSON mirror holds the same fields plus ``blocks`` as lists of integers.
"""
import json
import re
from pathlib import Path
from typing import Dict, Union

import numpy

from steinercodes.util import parse_hex
from ._design import Design

FORMAT_TEXT = 'text'
FORMAT_JSON = 'json'

_HEADER_KEYS = ('v', 'k', 'b', 't', 'lambda', 'm', 'e')


def _header(design: Design) -> Dict[str, int]:
    if design.lam is None:
        raise ValueError(f'{design!r} has no verified λ, verify it before writing')
    header = {'v': design.v, 'k': design.k, 'b': design.b, 't': design.t, 'lambda': design.lam}
    if design.m is not None:
        header['m'] = design.m
    if design.e is not None:
        header['e'] = design.e
    return header


def format_blocks(design: Design) -> str:
    width = max(1, (int(design.v - 1).bit_length() + 3) // 4)
    lines = [' '.join(f'{key}={value}' for key, value in _header(design).items())]
    lines += [' '.join(f'{int(x):0{width}x}' for x in row) for row in design.blocks]
    return '\n'.join(lines) + '\n'


def blocks_to_json(design: Design) -> str:
    data = dict(_header(design))
    data['blocks'] = design.blocks.tolist()
    return json.dumps(data)


def write_blocks(design: Design, path: Union[str, Path], fmt: str = FORMAT_TEXT) -> Path:
    """
    Write a verified design to ``path``

    :param fmt: `FORMAT_TEXT` or `FORMAT_JSON`
    """
    path = Path(path)
    if fmt == FORMAT_TEXT:
        path.write_text(format_blocks(design))
    elif fmt == FORMAT_JSON:
        path.write_text(blocks_to_json(design) + '\n')
    else:
        raise ValueError(f'Unknown block file format {fmt}')
    return path


def _design_from(header: Dict[str, int], blocks) -> Design:
    missing = [key for key in ('v', 'k', 'b', 't', 'lambda') if key not in header]
    if missing:
        raise ValueError(f'Block file header lacks {", ".join(missing)}')
    design = Design(header['v'], header['k'], numpy.array(blocks, dtype=numpy.int64).reshape(-1, header['k']),
                    t=header['t'], lam=header['lambda'], m=header.get('m'), e=header.get('e'), source='block file')
    if design.b != header['b']:
        raise ValueError(f'Block file announces b={header["b"]}, but holds {design.b} blocks')
    return design


def parse_blocks(text: str) -> Design:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ValueError('Empty block file')
    header = {}
    for item in lines[0].split():
        match = re.match(r'^(\w+)=(\d+)$', item)
        if not match or match.group(1) not in _HEADER_KEYS:
            raise ValueError(f'Invalid header item {item}')
        header[match.group(1)] = int(match.group(2))
    blocks = [[parse_hex(x) for x in line.split()] for line in lines[1:]]
    return _design_from(header, blocks)


def read_blocks(path: Union[str, Path]) -> Design:
    """
    Read a block file written by `write_blocks`; the format is detected from the content
    """
    text = Path(path).read_text()
    if text.lstrip().startswith('{'):
        data = json.loads(text)
        return _design_from({key: int(data[key]) for key in _HEADER_KEYS if data.get(key) is not None},
                            data['blocks'])
    return parse_blocks(text)
