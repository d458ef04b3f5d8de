# Copyright 2024 Schreier Lab Contributors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Exhaustive subset tables.

Subsets of {0..n-1} are bitmasks; every table is a numpy array indexed by
mask and filled by doubling (the table for vertices < i+1 is the table for
vertices < i followed by its shift with vertex i added).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from core.errors import SizeGuardError
from labeled_graph.multigraph import Multigraph

EXHAUSTIVE_LIMIT = 20


def guard(operation: str, size: int, limit: int = EXHAUSTIVE_LIMIT) -> None:
    if size > limit:
        raise SizeGuardError(operation, size, limit)


def subset_sums(values: Sequence[int]) -> np.ndarray:
    """sums[mask] = sum of values[i] over bits i of mask."""
    sums = np.zeros(1, dtype=np.int64)
    for value in values:
        sums = np.concatenate([sums, sums + int(value)])
    return sums


def subset_images(perm: Sequence[int]) -> np.ndarray:
    """images[mask] = mask of {perm[i] : i in mask}."""
    images = np.zeros(1, dtype=np.int64)
    for target in perm:
        images = np.concatenate([images, images | (1 << int(target))])
    return images


def popcounts(n: int) -> np.ndarray:
    return subset_sums([1] * n)


def masks_to_vertices(mask: int) -> List[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def vertices_to_mask(vertices: Sequence[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << int(v)
    return mask


def submasks(mask: int) -> np.ndarray:
    """All submasks of mask, the empty set first."""
    return subset_sums([1 << v for v in masks_to_vertices(mask)])


def lexicographic_witness(masks: np.ndarray) -> List[int]:
    """
    The mask whose sorted vertex tuple is lexicographically smallest.

    A proper prefix sorts first, so a finished tuple stops the scan.
    """
    remaining = np.asarray(masks, dtype=np.int64)
    if remaining.size == 0:
        raise ValueError("no candidate masks")
    chosen: List[int] = []
    while not np.any(remaining == 0):
        low = remaining & -remaining
        best = int(low.min())
        remaining = remaining[low == best] ^ best
        chosen.append(best.bit_length() - 1)
    return chosen


def minimum_ratio(
    numerators: np.ndarray,
    denominators: np.ndarray,
    admissible: np.ndarray,
) -> Tuple[Optional[Fraction], List[int]]:
    """
    Exact minimum of numerators/denominators over admissible masks.

    Returns:
        (minimum, lexicographically smallest minimizing set); (None, [])
        when nothing is admissible
    """
    candidates = np.nonzero(admissible)[0]
    if candidates.size == 0:
        return None, []
    num = numerators[candidates]
    den = denominators[candidates]
    best: Optional[Fraction] = None
    for size in np.unique(den).tolist():
        value = Fraction(int(num[den == size].min()), int(size))
        if best is None or value < best:
            best = value
    ties = candidates[num * best.denominator == den * best.numerator]
    return best, lexicographic_witness(ties)


@dataclass(frozen=True, eq=False)
class SubsetTables:
    """
    Per-subset counts of a multigraph.

    Attributes:
        n: Vertex count
        popcount: |S|
        inner: Edges with both ends in S, loops included
        degree_sum: Sum of degrees over S, loops counted twice
        boundary: Edges with exactly one end in S
    """

    n: int
    popcount: np.ndarray
    inner: np.ndarray
    degree_sum: np.ndarray
    boundary: np.ndarray


def subset_tables(m: Multigraph, operation: str = "subset enumeration", limit: int = EXHAUSTIVE_LIMIT) -> SubsetTables:
    """
    Raises:
        SizeGuardError: n exceeds limit
    """
    guard(operation, m.n, limit)
    counts = m.adjacency_counts()
    inner = np.zeros(1, dtype=np.int64)
    for i in range(m.n):
        loops = int(counts[i, i]) // 2
        inner = np.concatenate([inner, inner + subset_sums(counts[i, :i]) + loops])
    degree_sum = subset_sums(m.degrees)
    return SubsetTables(
        n=m.n,
        popcount=popcounts(m.n),
        inner=inner,
        degree_sum=degree_sum,
        boundary=degree_sum - 2 * inner,
    )
