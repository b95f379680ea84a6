"""
2-cyclotomic cosets modulo n

All functions work for the binary case only. A coset is stored sorted; its leader is the numeric minimum.
"""
from dataclasses import dataclass
from typing import List, Set, Tuple

from steinercodes.error import ParameterRangeError


@dataclass(frozen=True)
class CyclotomicCoset:
    """
    The 2-cyclotomic coset ``C_s = {s, 2s, 4s, ...} mod n``
    """

    leader: int
    """
    :type: int

    Smallest member
    """

    elements: Tuple[int, ...]
    """
    :type: Tuple[int, ...]

    All members in ascending order
    """

    def __len__(self):
        return len(self.elements)

    def __contains__(self, item):
        return item in self.elements


@dataclass(frozen=True)
class DefiningSet:
    """
    Defining set ``T = C_1 ∪ C_{1+2^e}`` of the cyclic code C_E
    """

    cosets: Tuple[CyclotomicCoset, ...]
    exponents: Tuple[int, ...]

    def __len__(self):
        return len(self.exponents)


def coset(s: int, n: int) -> CyclotomicCoset:
    if not 0 <= s < n:
        raise ParameterRangeError(f'Coset representative {s} outside [0, {n})')
    members = [s]
    t = (2 * s) % n
    while t != s:
        members.append(t)
        t = (2 * t) % n
    elements = tuple(sorted(members))
    return CyclotomicCoset(elements[0], elements)


def cyclotomic_cosets(n: int) -> List[CyclotomicCoset]:
    """
    All 2-cyclotomic cosets modulo ``n``, ordered by leader
    """
    if n < 1 or n % 2 == 0:
        raise ParameterRangeError(f'Cyclotomic cosets need an odd modulus, got {n}')
    seen = bytearray(n)
    cosets = []
    for s in range(n):
        if seen[s]:
            continue
        c = coset(s, n)
        for x in c.elements:
            seen[x] = 1
        cosets.append(c)
    return cosets


def coset_leaders(n: int) -> Set[int]:
    return {c.leader for c in cyclotomic_cosets(n)}


def defining_set(m: int, e: int) -> DefiningSet:
    if not 1 <= e <= m // 2:
        raise ParameterRangeError(f'e={e} out of range, expected 1 <= e <= {m // 2} for m={m}')
    n = (1 << m) - 1
    c1 = coset(1, n)
    cu = coset((1 + (1 << e)) % n, n)
    if cu.leader == c1.leader:
        cosets = (c1,)
    else:
        cosets = (c1, cu)
    exponents = tuple(sorted(set(c1.elements) | set(cu.elements)))
    return DefiningSet(cosets, exponents)


def expected_coset_size(m: int, e: int) -> int:
    """
    Size of ``C_{1+2^e}`` predicted from the dual dimensions 2m+1 and 1+3m/2
    """
    if m % 2 == 0 and e == m // 2:
        return m // 2
    return m
