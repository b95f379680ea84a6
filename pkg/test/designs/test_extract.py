import pytest

from steinercodes.code import dual
from steinercodes.designs import affine_image, expected_weight4_count, extract_blocks_by_enumeration, \
    extract_designs_by_enumeration, extract_weight4_blocks, verify_design
from steinercodes.error import ConfigurationError, EnumerationGuardError, ParameterRangeError, VerificationMismatch
from steinercodes.field import field_new


def _gf4(ctx):
    return [0, 1, ctx.element(ctx.n // 3), ctx.element(2 * ctx.n // 3)]


def test_steiner_system_m4(gf16, extended_4_2):
    design = extract_weight4_blocks(gf16, 2)
    assert design.b == 20
    assert (0, 1, 6, 7) in design.block_set()
    assert design.same_blocks(extract_blocks_by_enumeration(extended_4_2, 4))
    assert verify_design(design).lam == 1


@pytest.mark.parametrize('m, e, b', [
    (6, 2, 336),
    (8, 2, 5440),
    (10, 2, 87296),
    pytest.param(12, 2, 1397760, marks=pytest.mark.slow),
])
def test_steiner_systems(m, e, b):
    design = extract_weight4_blocks(field_new(m), e, shards=4)
    assert design.b == b == expected_weight4_count(m, e)
    assert design.m == m and design.e == e
    assert verify_design(design, shards=4).lam == 1


def test_sharding_does_not_change_blocks(gf64):
    assert extract_weight4_blocks(gf64, 2, shards=1).same_blocks(extract_weight4_blocks(gf64, 2, shards=8))


@pytest.mark.parametrize('m', [4, 6, 8])
def test_blocks_are_gf4_lines(m):
    ctx = field_new(m)
    gf4 = _gf4(ctx)
    for a, b, c, d in extract_weight4_blocks(ctx, 2).blocks.tolist():
        assert {a ^ ctx.mul(b ^ a, f) for f in gf4} == {a, b, c, d}


@pytest.mark.parametrize('m, e', [(5, 2), (6, 3), (8, 4), (4, 1)])
def test_hypothesis_is_checked(m, e):
    with pytest.raises(ParameterRangeError):
        extract_weight4_blocks(field_new(m), e)


def test_count_mismatch_is_reported(gf16, monkeypatch):
    monkeypatch.setattr('steinercodes.designs._extract.expected_weight4_count', lambda m, e: 21)
    with pytest.raises(VerificationMismatch):
        extract_weight4_blocks(gf16, 2)


@pytest.mark.parametrize('a, b', [(1, 0), (1, 5), (6, 0), (11, 9)])
def test_affine_images_preserve_the_system(gf16, a, b):
    design = extract_weight4_blocks(gf16, 2)
    image = affine_image(design, gf16, a, b)
    assert image.same_blocks(design)


def test_affine_image_needs_invertible_map(gf16):
    with pytest.raises(ConfigurationError):
        affine_image(extract_weight4_blocks(gf16, 2), gf16, 0, 1)


def test_designs_of_the_dual_m4_e1(extended_4_1):
    designs = extract_designs_by_enumeration(dual(extended_4_1))
    assert {k: d.b for k, d in designs.items()} == {4: 20, 6: 160, 8: 150, 10: 160, 12: 20, 16: 1}
    assert {k: verify_design(designs[k]).lam for k in (4, 6, 8, 10, 12)} == {4: 1, 6: 20, 8: 35, 10: 60, 12: 11}


def test_selected_weights(extended_4_2):
    designs = extract_designs_by_enumeration(extended_4_2, [4, 5])
    assert designs[4].b == 20
    assert designs[5].b == 0


def test_enumeration_limits(extended_4_2):
    with pytest.raises(ParameterRangeError):
        extract_blocks_by_enumeration(extended_4_2, 17)
    with pytest.raises(EnumerationGuardError):
        extract_blocks_by_enumeration(extended_4_2, 4, guard=8)
