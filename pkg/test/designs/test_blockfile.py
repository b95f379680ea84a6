import json

import pytest

from steinercodes.designs import Design, FORMAT_JSON, FORMAT_TEXT, extract_weight4_blocks, format_blocks, \
    parse_blocks, read_blocks, verify_design, write_blocks


@pytest.fixture
def steiner_16(gf16) -> Design:
    design = extract_weight4_blocks(gf16, 2)
    return design.with_lambda(verify_design(design).lam)


def test_text_format(steiner_16):
    lines = format_blocks(steiner_16).splitlines()
    assert lines[0] == 'v=16 k=4 b=20 t=2 lambda=1 m=4 e=2'
    assert len(lines) == 21
    assert '0 1 6 7' in lines


def test_points_are_zero_padded():
    design = Design(256, 2, [[3, 200], [0, 17]], lam=1)
    assert format_blocks(design).splitlines() == ['v=256 k=2 b=2 t=2 lambda=1', '00 11', '03 c8']


@pytest.mark.parametrize('fmt, name', [(FORMAT_TEXT, 'steiner.blocks'), (FORMAT_JSON, 'steiner.json')])
def test_written_files_read_back(tmp_path, steiner_16, fmt, name):
    path = write_blocks(steiner_16, tmp_path / name, fmt)
    design = read_blocks(path)
    assert design.same_blocks(steiner_16)
    assert (design.lam, design.t, design.m, design.e) == (1, 2, 4, 2)


def test_json_content(tmp_path, steiner_16):
    data = json.loads(write_blocks(steiner_16, tmp_path / 'steiner.json', FORMAT_JSON).read_text())
    assert data['b'] == 20
    assert data['lambda'] == 1
    assert data['blocks'][0] == [0, 1, 6, 7]


def test_unverified_design_is_not_written(tmp_path, gf16):
    with pytest.raises(ValueError):
        write_blocks(extract_weight4_blocks(gf16, 2), tmp_path / 'steiner.blocks')


@pytest.mark.parametrize('text', [
    '',
    'v=7 k=3 b=2 t=2 lambda=1\n0 1 3\n',
    'v=7 k=3 t=2 lambda=1\n0 1 3\n',
    'v=7 k=3 b=1 t=2 lambda=1 color=3\n0 1 3\n',
    'v=7 k=3 b=1 t=2 lambda=1\n0 1 x\n',
])
def test_invalid_block_files(text):
    with pytest.raises(ValueError):
        parse_blocks(text)


def test_unknown_format(tmp_path, steiner_16):
    with pytest.raises(ValueError):
        write_blocks(steiner_16, tmp_path / 'steiner.xml', 'xml')
