import json
from dataclasses import dataclass
from typing import Dict, List, Mapping


@dataclass(frozen=True)
class WeightDistribution:
    """
    Exact weight distribution ``(A_0, ..., A_v)`` of a binary code of length ``v``

    Only nonzero counts are stored. Counts are Python integers, so they never overflow.

    Distributions of disjoint codeword sets (e.g. enumeration shards) add up with ``+``.
    """

    length: int
    """
    :type: int

    Code length ``v``
    """

    counts: Mapping[int, int]
    """
    :type: Mapping[int, int]

    Weight -> number of codewords, nonzero entries only, ascending weights
    """

    def __post_init__(self):
        cleaned = {}
        for weight, count in sorted(self.counts.items()):
            weight = int(weight)
            count = int(count)
            if not 0 <= weight <= self.length:
                raise ValueError(f'Weight {weight} outside [0, {self.length}]')
            if count < 0:
                raise ValueError(f'Negative count {count} at weight {weight}')
            if count:
                cleaned[weight] = count
        object.__setattr__(self, 'counts', cleaned)

    def __getitem__(self, weight: int) -> int:
        return self.counts.get(weight, 0)

    def __add__(self, other: 'WeightDistribution') -> 'WeightDistribution':
        if self.length != other.length:
            raise ValueError('Cannot add weight distributions of different lengths')
        merged = dict(self.counts)
        for weight, count in other.counts.items():
            merged[weight] = merged.get(weight, 0) + count
        return WeightDistribution(self.length, merged)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def weights(self) -> List[int]:
        return list(self.counts)

    def nonzero_weights(self) -> List[int]:
        """
        Weights ``w > 0`` with ``A_w != 0``
        """
        return [w for w in self.counts if w > 0]

    def as_list(self) -> List[int]:
        return [self[w] for w in range(self.length + 1)]

    def is_symmetric(self) -> bool:
        return all(self[self.length - w] == count for w, count in self.counts.items())

    def to_dict(self) -> Dict:
        return {'length': self.length, 'counts': {str(w): str(c) for w, c in self.counts.items()}}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @staticmethod
    def from_dict(data: Mapping) -> 'WeightDistribution':
        return WeightDistribution(int(data['length']), {int(w): int(c) for w, c in data['counts'].items()})

    @staticmethod
    def from_json(text: str) -> 'WeightDistribution':
        return WeightDistribution.from_dict(json.loads(text))

    def __str__(self):
        return '{' + ', '.join(f'{w}: {c}' for w, c in self.counts.items()) + '}'


def min_distance(wd: WeightDistribution) -> int:
    """
    Smallest positive weight with a nonzero count

    :raises ValueError: for the distribution of the zero code
    """
    weights = wd.nonzero_weights()
    if not weights:
        raise ValueError('Distribution has no nonzero weight, minimum distance undefined')
    return weights[0]
