import logwood
import pytest
from logwood.handlers.stderr import ColoredStderrHandler
from logwood.testing import reset_state

from steinercodes.code import LinearCode, build_cyclic, extend
from steinercodes.field import FieldCtx, field_new


@pytest.fixture(autouse=True)
def configure_logging():
    reset_state()
    logwood.basic_config(
        level=logwood.DEBUG,
        handlers=[ColoredStderrHandler()],
        format='%(timestamp).6f %(level)-5s %(name)s: %(message)s',
    )
    yield
    reset_state()


@pytest.fixture
def gf16() -> FieldCtx:
    return field_new(4)


@pytest.fixture
def gf64() -> FieldCtx:
    return field_new(6)


@pytest.fixture
def gf256() -> FieldCtx:
    return field_new(8)


@pytest.fixture
def extended_4_1(gf16) -> LinearCode:
    return extend(build_cyclic(gf16, 1))


@pytest.fixture
def extended_4_2(gf16) -> LinearCode:
    return extend(build_cyclic(gf16, 2))
