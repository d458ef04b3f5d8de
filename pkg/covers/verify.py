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
Covering-map verification and the old/new eigenvalue split.

A vertex x of the total graph is defective when proj(x·s) != proj(x)·s
for some letter s. The map is an epsilon-covering for epsilon equal to the
defective fraction, provided every base vertex and every base edge has a
preimage.
"""

import logging
from fractions import Fraction
from typing import TYPE_CHECKING, List, Sequence, Tuple

import numpy as np

from core.errors import (
    AlphabetMismatchError,
    DisconnectedGraphError,
    EigenMatchError,
    NotSurjectiveError,
    OutOfRangeError,
    ShapeMismatchError,
)
from labeled_graph.graph import SLabeledGraph
from labeled_graph.multigraph import connected_components, undirected_view
from spectral.eigen import eigenvalues

if TYPE_CHECKING:
    from covers.lifts import CoveringMap

logger = logging.getLogger(__name__)

EIGEN_TOLERANCE = 1e-6


def verify_covering(total: SLabeledGraph, base: SLabeledGraph, proj: Sequence[int]) -> Fraction:
    """
    Fraction of total vertices where proj fails to be label-equivariant.

    Raises:
        AlphabetMismatchError: the graphs use different alphabets
        ShapeMismatchError: proj does not have one entry per total vertex
        OutOfRangeError: proj hits a non-vertex of the base
        NotSurjectiveError: a base vertex or base edge has no preimage
    """
    if total.alphabet != base.alphabet:
        raise AlphabetMismatchError(total.alphabet, base.alphabet)
    proj = np.asarray(proj, dtype=np.int64)
    if proj.shape != (total.n,):
        raise ShapeMismatchError(f"projection has {proj.size} entries for {total.n} vertices")
    bad = np.nonzero((proj < 0) | (proj >= base.n))[0]
    if bad.size:
        raise OutOfRangeError(int(proj[bad[0]]), base.n)

    hit = np.bincount(proj, minlength=base.n)
    missing = np.nonzero(hit == 0)[0]
    if missing.size:
        raise NotSurjectiveError(int(missing[0]))

    defective = np.zeros(total.n, dtype=bool)
    for index in range(total.k):
        agrees = proj[total.perms[index]] == base.perms[index][proj]
        defective |= ~agrees
        covered = np.zeros(base.n, dtype=bool)
        covered[proj[agrees]] = True
        uncovered = np.nonzero(~covered)[0]
        if uncovered.size:
            raise NotSurjectiveError(int(uncovered[0]), base.alphabet.letters[index])

    epsilon = Fraction(int(defective.sum()), total.n)
    if epsilon:
        logger.debug(f"Projection is an epsilon-covering with epsilon = {epsilon}")
    return epsilon


def new_eigenvalues(
    cover: "CoveringMap",
    tolerance: float = EIGEN_TOLERANCE,
) -> Tuple[List[float], List[float]]:
    """
    Split the total spectrum into the lifted base spectrum and the rest.

    Base eigenvalues are matched greedily, largest first, to the nearest
    unmatched total eigenvalue.

    Raises:
        DisconnectedGraphError: the base is disconnected
        EigenMatchError: a base eigenvalue has no partner within tolerance
    """
    components = connected_components(undirected_view(cover.base))
    if len(components) > 1:
        raise DisconnectedGraphError(len(components))

    base_values = eigenvalues(cover.base)
    total_values = eigenvalues(cover.total)
    used = np.zeros(total_values.size, dtype=bool)
    old: List[float] = []
    for value in base_values:
        distance = np.where(used, np.inf, np.abs(total_values - value))
        best = int(np.argmin(distance))
        if distance[best] > tolerance:
            raise EigenMatchError(float(value), tolerance)
        used[best] = True
        old.append(float(total_values[best]))
    new = [float(v) for v in total_values[~used]]
    return old, new
