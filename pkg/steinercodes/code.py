"""
The codes C_E, their extensions and duals

Codewords are packed into Python integers, bit ``i`` holding coordinate ``i``.

Coordinate convention for extended codes: position ``i < n`` carries the field element ``α^i`` and the appended parity
position ``n`` carries the element ``0``. Under this convention the affine group acts by literal maps ``x -> ax + b`` on
coordinates, and the spectral membership test (`spectral_member`) treats the parity coordinate uniformly.
"""
import json
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import logwood

from steinercodes import cyclotomic, polyring
from steinercodes.cyclotomic import DefiningSet
from steinercodes.error import ConfigurationError, InconsistencyError
from steinercodes.field import FieldCtx, FieldElement
from steinercodes.polyring import BinPoly
from steinercodes.util import popcount

KIND_CYCLIC = 'cyclic'
KIND_EXTENDED = 'extended'
KIND_DUAL = 'dual'


@dataclass(frozen=True)
class Codeword:
    """
    Binary vector of fixed length
    """

    bits: int
    """
    :type: int

    Packed coordinates, bit ``i`` = coordinate ``i``
    """

    length: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError(f'Vector {self.bits:#x} does not fit length {self.length}')

    @cached_property
    def weight(self) -> int:
        return popcount(self.bits)

    def support(self) -> List[int]:
        return [i for i in range(self.length) if (self.bits >> i) & 1]


@dataclass(frozen=True)
class CyclicCodeSpec:
    """
    The binary cyclic code C_E of length ``n = 2^m - 1`` generated by ``g_E(x)``
    """

    m: int
    e: int
    n: int
    generator: BinPoly
    defining_set: DefiningSet

    @property
    def dimension(self) -> int:
        return self.n - self.generator.degree


class _EchelonBasis:
    """
    Row space basis with pairwise distinct lowest set bits ("pivots")

    Reducing a vector by the pivot rows in order of its lowest set bit terminates with zero iff the vector lies in
    the row space.
    """

    def __init__(self):
        self.rows: Dict[int, int] = {}

    def insert(self, v: int) -> bool:
        while v:
            pivot = (v & -v).bit_length() - 1
            row = self.rows.get(pivot)
            if row is None:
                self.rows[pivot] = v
                return True
            v ^= row
        return False

    def contains(self, v: int) -> bool:
        while v:
            row = self.rows.get((v & -v).bit_length() - 1)
            if row is None:
                return False
            v ^= row
        return True

    def reduced_rows(self) -> Dict[int, int]:
        """
        Reduced echelon form: each pivot bit occurs in its own row only
        """
        reduced = dict(self.rows)
        pivots = sorted(reduced)
        for i, p in enumerate(reversed(pivots)):
            row_p = reduced[p]
            for q in pivots[:len(pivots) - 1 - i]:
                if (reduced[q] >> p) & 1:
                    reduced[q] ^= row_p
        return reduced


class LinearCode:
    """
    Binary linear code given by a generator matrix

    Immutable after construction. The generator rows must be linearly independent.
    """

    def __init__(self, length: int, rows: Sequence[int], kind: str, m: int = None, e: int = None,
                 ctx: FieldCtx = None, generator_poly: BinPoly = None,
                 coordinate_map: Sequence[FieldElement] = None):
        """
        :param length: Code length
        :param rows: Generator rows as packed vectors
        :param kind: One of `KIND_CYCLIC`, `KIND_EXTENDED`, `KIND_DUAL`
        :param m: Extension degree of the underlying field, if any
        :param e: Parameter of the defining set, if any
        :param ctx: Field context the code was built over
        :param generator_poly: Generator polynomial of the cyclic code the code derives from
        :param coordinate_map: Field element carried by each position (extended coordinate convention)
        """
        self.length = length
        self.rows: Tuple[int, ...] = tuple(rows)
        self.kind = kind
        self.m = m
        self.e = e
        self.ctx = ctx
        self.generator_poly = generator_poly
        self.coordinate_map: Optional[Tuple[FieldElement, ...]] = \
            tuple(coordinate_map) if coordinate_map is not None else None
        if self.coordinate_map is not None and len(self.coordinate_map) != length:
            raise ValueError(f'Coordinate map has {len(self.coordinate_map)} entries for length {length}')
        self._basis = _EchelonBasis()
        for row in self.rows:
            if row >> length:
                raise ValueError(f'Row {row:#x} exceeds length {length}')
            if not self._basis.insert(row):
                raise InconsistencyError(f'Generator rows of {self.kind} code are linearly dependent')

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def __repr__(self):
        return f'LinearCode({self.kind}, [{self.length}, {self.dimension}], m={self.m}, e={self.e})'

    def contains(self, word: Codeword) -> bool:
        if word.length != self.length:
            raise ValueError(f'Word of length {word.length} tested against code of length {self.length}')
        return self._basis.contains(word.bits)

    def codeword(self, message: int) -> Codeword:
        """
        Encode the message whose bit ``i`` selects generator row ``i``
        """
        bits = 0
        i = 0
        while message:
            if message & 1:
                bits ^= self.rows[i]
            message >>= 1
            i += 1
        return Codeword(bits, self.length)

    def point(self, position: int) -> FieldElement:
        """
        Field element at a coordinate position; the position itself if the code carries no coordinate map
        """
        if self.coordinate_map is None:
            return position
        return self.coordinate_map[position]

    def reduced_rows(self) -> Dict[int, int]:
        return self._basis.reduced_rows()


def cyclic_code_spec(ctx: FieldCtx, e: int) -> CyclicCodeSpec:
    generator = polyring.generator_poly(ctx, e)
    return CyclicCodeSpec(ctx.m, e, ctx.n, generator, cyclotomic.defining_set(ctx.m, e))


def build_cyclic(ctx: FieldCtx, e: int) -> LinearCode:
    """
    The cyclic code C_E, generated by the shifts ``x^i g_E(x)`` for ``0 <= i < n - deg g_E``

    The shifts already form an echelon basis: row ``i`` has its lowest set bit at position ``i``.
    """
    spec = cyclic_code_spec(ctx, e)
    g = spec.generator.mask
    rows = [g << i for i in range(spec.dimension)]
    code = LinearCode(spec.n, rows, KIND_CYCLIC, m=ctx.m, e=e, ctx=ctx, generator_poly=spec.generator)
    logwood.get_logger('code').info('Built cyclic code [{}, {}] for m={}, e={}', code.length, code.dimension, ctx.m, e)
    return code


def extended_coordinate_map(ctx: FieldCtx) -> Tuple[FieldElement, ...]:
    return tuple(ctx.element(i) for i in range(ctx.n)) + (0,)


def extend(code: LinearCode) -> LinearCode:
    """
    Append an overall parity coordinate
    """
    if code.kind != KIND_CYCLIC:
        raise ConfigurationError(f'Only cyclic codes can be extended, got {code.kind}')
    n = code.length
    rows = [row | ((popcount(row) & 1) << n) for row in code.rows]
    coordinate_map = extended_coordinate_map(code.ctx) if code.ctx is not None else None
    extended = LinearCode(n + 1, rows, KIND_EXTENDED, m=code.m, e=code.e, ctx=code.ctx,
                          generator_poly=code.generator_poly, coordinate_map=coordinate_map)
    logwood.get_logger('code').info('Extended code to [{}, {}]', extended.length, extended.dimension)
    return extended


def dual(code: LinearCode) -> LinearCode:
    """
    Dual code, computed as the null space of the generator matrix
    """
    reduced = code.reduced_rows()
    pivot_mask = 0
    for p in reduced:
        pivot_mask |= 1 << p
    rows = []
    for f in range(code.length):
        if (pivot_mask >> f) & 1:
            continue
        v = 1 << f
        for p, row in reduced.items():
            if (row >> f) & 1:
                v |= 1 << p
        rows.append(v)
    result = LinearCode(code.length, rows, KIND_DUAL, m=code.m, e=code.e, ctx=code.ctx,
                        generator_poly=code.generator_poly, coordinate_map=code.coordinate_map)
    logwood.get_logger('code').info('Computed dual [{}, {}]', result.length, result.dimension)
    return result


def is_orthogonal(rows_a: Iterable[int], rows_b: Iterable[int]) -> bool:
    rows_b = list(rows_b)
    return all(popcount(a & b) % 2 == 0 for a in rows_a for b in rows_b)


def position_of(ctx: FieldCtx, x: FieldElement) -> int:
    """
    Coordinate position of the field element ``x`` under the extended coordinate convention
    """
    return ctx.n if x == 0 else ctx.log(x)


def word_from_support(ctx: FieldCtx, support: Iterable[FieldElement]) -> Codeword:
    bits = 0
    for x in support:
        bits ^= 1 << position_of(ctx, x)
    return Codeword(bits, ctx.size)


def support_elements(ctx: FieldCtx, word: Codeword) -> List[FieldElement]:
    coordinate_map = extended_coordinate_map(ctx)
    return [coordinate_map[i] for i in word.support()]


def spectral_member(ctx: FieldCtx, e: int, support: Iterable[FieldElement]) -> bool:
    """
    Membership in the extended code via the defining set

    The characteristic vector of ``support`` lies in the extended code iff ``sum 1``, ``sum x`` and ``sum x^(1+2^e)``
    over the support all vanish.
    """
    u = 1 + (1 << e)
    size = 0
    linear = 0
    power = 0
    for x in support:
        size += 1
        linear ^= x
        power ^= ctx.pow(x, u)
    return size % 2 == 0 and linear == 0 and power == 0


def affine_permute(ctx: FieldCtx, word: Codeword, a: FieldElement, b: FieldElement) -> Codeword:
    """
    Apply ``σ(x) = ax + b`` to the coordinates: the output at position ``σ(x)`` equals the input at ``x``
    """
    if a == 0:
        raise ConfigurationError('σ(x) = ax + b needs a != 0')
    if word.length != ctx.size:
        raise ValueError(f'Affine maps act on words of length {ctx.size}, got {word.length}')
    coordinate_map = extended_coordinate_map(ctx)
    bits = 0
    for i in word.support():
        bits |= 1 << position_of(ctx, ctx.mul(a, coordinate_map[i]) ^ b)
    return Codeword(bits, word.length)


def code_descriptor(code: LinearCode) -> Dict:
    return {
        'm': code.m,
        'e': code.e,
        'kind': code.kind,
        'length': code.length,
        'dimension': code.dimension,
        'generator_poly_hex': code.generator_poly.to_hex() if code.generator_poly is not None else None,
    }


def to_json(code: LinearCode) -> str:
    return json.dumps(code_descriptor(code), sort_keys=True)


def random_codeword(code: LinearCode, rng: random.Random) -> Codeword:
    return code.codeword(rng.getrandbits(code.dimension) if code.dimension else 0)


def affine_spot_check(ctx: FieldCtx, code: LinearCode, rng: random.Random, maps: int = 100,
                      words: int = 20) -> int:
    """
    Apply random affine maps ``x -> ax + b`` to random codewords of an extended code

    :return: Number of images that left the code
    """
    failures = 0
    for _ in range(maps):
        a = rng.randrange(1, ctx.size)
        b = rng.randrange(ctx.size)
        for _ in range(words):
            if not code.contains(affine_permute(ctx, random_codeword(code, rng), a, b)):
                failures += 1
    logwood.get_logger('code').info('Affine spot check on {!r}: {} of {} images outside the code',
                                code, failures, maps * words)
    return failures


def random_even_word(length: int, rng: random.Random) -> Codeword:
    """
    Uniformly random word of even weight: random leading bits, the last bit fixes the parity
    """
    bits = rng.getrandbits(length - 1)
    bits |= (popcount(bits) % 2) << (length - 1)
    return Codeword(bits, length)


def spectral_spot_check(ctx: FieldCtx, e: int, code: LinearCode, rng: random.Random, vectors: int = 1000,
                        codewords: int = 0) -> int:
    """
    Compare `spectral_member` with matrix membership on uniformly random even-weight vectors of the extended code's
    length

    :param vectors: Number of random even-weight vectors; few of them are codewords
    :param codewords: Number of additional random codewords, which must pass both tests
    :return: Number of vectors on which the two tests disagree
    """
    coordinate_map = extended_coordinate_map(ctx)
    words = [random_even_word(code.length, rng) for _ in range(vectors)]
    words += [random_codeword(code, rng) for _ in range(codewords)]
    disagreements = 0
    for word in words:
        support = [coordinate_map[j] for j in word.support()]
        if spectral_member(ctx, e, support) != code.contains(word):
            disagreements += 1
    return disagreements
