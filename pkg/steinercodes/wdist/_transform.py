"""
Exact MacWilliams transform for binary codes

``A'(z) = 2^-k (1 + z)^v A((1 - z) / (1 + z))``. Expanding the term of weight ``i`` gives the binomial convolution

``(1 - z)^i (1 + z)^(v - i) = sum_j K_j(i) z^j``,  ``K_j(i) = sum_s (-1)^s C(i, s) C(v - i, j - s)``,

whose coefficients (Krawtchouk values) follow the three-term recurrence
``(j + 1) K_{j+1}(i) = (v - 2i) K_j(i) - (v - j + 1) K_{j-1}(i)``.
That keeps the cost at ``O(v)`` big-integer operations per nonzero weight.
"""
from typing import List

from steinercodes.error import InconsistencyError
from steinercodes.util import exact_div
from ._distribution import WeightDistribution


def krawtchouk_row(v: int, i: int) -> List[int]:
    """
    ``[K_0(i), ..., K_v(i)]``: coefficients of ``(1 - z)^i (1 + z)^(v - i)``
    """
    row = [1]
    if v == 0:
        return row
    row.append(v - 2 * i)
    for j in range(1, v):
        row.append(exact_div((v - 2 * i) * row[j] - (v - j + 1) * row[j - 1], j + 1, 'Krawtchouk recurrence'))
    return row


def macwilliams(wd: WeightDistribution, dim: int) -> WeightDistribution:
    """
    Weight distribution of the dual code

    :param wd: Distribution of a code of dimension ``dim``
    :param dim: Dimension of that code
    :raises InconsistencyError: if ``wd`` does not sum to ``2^dim``, or if the transform leaves a remainder or a
                                negative count
    """
    if wd.total != 1 << dim:
        raise InconsistencyError(f'Distribution sums to {wd.total}, expected 2^{dim}')
    v = wd.length
    accumulated = [0] * (v + 1)
    for i, count in wd.counts.items():
        for j, k in enumerate(krawtchouk_row(v, i)):
            accumulated[j] += count * k
    counts = {}
    for j, value in enumerate(accumulated):
        if value < 0:
            raise InconsistencyError(f'MacWilliams transform produced negative value {value} at weight {j}')
        counts[j] = exact_div(value, 1 << dim, f'MacWilliams count at weight {j}')
    result = WeightDistribution(v, counts)
    if result.total != 1 << (v - dim):
        raise InconsistencyError(f'Dual distribution sums to {result.total}, expected 2^{v - dim}')
    return result
