from dataclasses import dataclass, replace
from math import comb
from typing import Optional, Set, Tuple

import numpy


@dataclass(frozen=True, eq=False)
class Design:
    """
    Simple incidence structure on the points ``0, ..., v - 1``

    Points are field elements under the coordinate convention of `steinercodes.code`. Blocks are kept canonical:
    every row of ``blocks`` is sorted ascending and the rows are in lexicographic order. Construction canonicalises
    any input and rejects repeated blocks or repeated points within a block.
    """

    v: int
    k: int
    blocks: numpy.ndarray
    """
    :type: numpy.ndarray

    Read-only ``(b, k)`` integer array of canonical blocks
    """

    t: int = 2
    lam: Optional[int] = None
    """
    :type: Optional[int]

    Index λ, `None` until the design has been verified
    """

    m: Optional[int] = None
    e: Optional[int] = None
    source: str = ''

    def __post_init__(self):
        if not 1 <= self.k <= self.v:
            raise ValueError(f'Block size {self.k} outside [1, {self.v}]')
        blocks = numpy.array(self.blocks, dtype=numpy.int64).reshape(-1, self.k)
        blocks.sort(axis=1)
        if len(blocks):
            if blocks.min() < 0 or blocks.max() >= self.v:
                raise ValueError(f'Block points must lie in [0, {self.v})')
            if self.k > 1 and numpy.any(blocks[:, 1:] == blocks[:, :-1]):
                raise ValueError('Block with repeated point')
            blocks = blocks[numpy.lexsort(blocks.T[::-1])]
            if len(blocks) > 1 and numpy.any(numpy.all(blocks[1:] == blocks[:-1], axis=1)):
                raise ValueError('Repeated block, only simple designs are supported')
        blocks.setflags(write=False)
        object.__setattr__(self, 'blocks', blocks)

    @property
    def b(self) -> int:
        return len(self.blocks)

    def block_set(self) -> Set[Tuple[int, ...]]:
        return {tuple(int(x) for x in row) for row in self.blocks}

    def same_blocks(self, other: 'Design') -> bool:
        return self.v == other.v and self.k == other.k and numpy.array_equal(self.blocks, other.blocks)

    def with_lambda(self, lam: int) -> 'Design':
        return replace(self, blocks=self.blocks, lam=lam)

    def __repr__(self):
        return f'Design({self.t}-({self.v}, {self.k}, {self.lam if self.lam is not None else "?"}), b={self.b})'


@dataclass(frozen=True)
class DesignParams:
    """
    Parameters ``t-(v, k, λ)`` predicted for a weight class
    """

    t: int
    v: int
    k: int
    lam: int
    source: str = ''
    """
    :type: str

    Human readable origin of the prediction, e.g. ``dual case c`` or ``weight-6 closed form``
    """

    def __post_init__(self):
        if self.lam < 1:
            raise ValueError(f'λ must be positive, got {self.lam}')

    @property
    def b(self) -> int:
        """
        Block count implied by ``b C(k, t) = λ C(v, t)``
        """
        return self.lam * comb(self.v, self.t) // comb(self.k, self.t)
