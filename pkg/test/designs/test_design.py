import numpy
import pytest

from steinercodes.designs import Design, DesignParams

FANO = [[(i + d) % 7 for d in (0, 1, 3)] for i in range(7)]


def test_blocks_are_canonical():
    design = Design(7, 3, FANO[::-1])
    assert design.b == 7
    assert design.blocks[0].tolist() == [0, 1, 3]
    assert design.blocks.tolist() == sorted(sorted(block) for block in FANO)
    assert not design.blocks.flags.writeable
    assert (0, 1, 3) in design.block_set()
    assert repr(design) == 'Design(2-(7, 3, ?), b=7)'


def test_same_blocks_ignores_input_order():
    assert Design(7, 3, FANO).same_blocks(Design(7, 3, [block[::-1] for block in reversed(FANO)]))
    assert not Design(7, 3, FANO).same_blocks(Design(7, 3, FANO[:6]))


def test_with_lambda():
    design = Design(7, 3, FANO, source='fano').with_lambda(1)
    assert design.lam == 1
    assert design.source == 'fano'
    assert repr(design) == 'Design(2-(7, 3, 1), b=7)'


@pytest.mark.parametrize('v, k, blocks', [
    (7, 3, FANO + [[3, 1, 0]]),
    (7, 3, [[0, 0, 1]]),
    (7, 3, [[0, 1, 7]]),
    (7, 8, []),
    (7, 0, []),
])
def test_invalid_designs(v, k, blocks):
    with pytest.raises(ValueError):
        Design(v, k, numpy.array(blocks, dtype=numpy.int64))


def test_design_params():
    params = DesignParams(2, 16, 4, 1)
    assert params.b == 20
    with pytest.raises(ValueError):
        DesignParams(2, 16, 4, 0)
