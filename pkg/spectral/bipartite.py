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
Bipartiteness constants of small multigraphs.

For a vertex set S, e(S) is the number of edges of the span of S that must
be deleted to make it bipartite and k(S) the number of edges leaving S.
With inner(T) the edges spanned by T,

    e(S) = min over T ⊆ S of inner(T) + inner(S \\ T),

since the kept edges of an optimal deletion form a cut (T, S \\ T). Loops
are never cut.
"""

import logging
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np

from core.errors import InvariantViolation
from core.models.reports import BipartitenessReport
from labeled_graph.multigraph import Multigraph, induced_subgraph
from spectral.enumeration import (
    guard,
    masks_to_vertices,
    minimum_ratio,
    submasks,
    subset_tables,
    vertices_to_mask,
)
from spectral.expansion import crossing_edges

logger = logging.getLogger(__name__)

PSI_LIMIT = 14


def max_cut(m: Multigraph) -> Tuple[int, List[int]]:
    """
    Maximum cut by enumeration.

    Returns:
        (cut size, side containing the smallest-index maximizing mask)

    Raises:
        SizeGuardError: more than 20 vertices
    """
    tables = subset_tables(m, "max_cut")
    best = int(np.argmax(tables.boundary))
    return int(tables.boundary[best]), masks_to_vertices(best)


def bipartite_costs(m: Multigraph, vertices: Sequence[int]) -> Tuple[int, int]:
    """
    (e(S), k(S)) for one vertex set.

    Raises:
        SizeGuardError: the span has more than 20 vertices
    """
    chosen = sorted(set(int(v) for v in vertices))
    guard("bipartite_costs", len(chosen))
    span = induced_subgraph(m, chosen)
    e_s = 0
    if chosen:
        cut, _ = max_cut(span)
        e_s = len(span.edges) - cut
    return e_s, crossing_edges(m, chosen)


def _deletion_table(inner: np.ndarray, n: int) -> np.ndarray:
    full = (1 << n) - 1
    deletion = np.zeros(1 << n, dtype=np.int64)
    for mask in range(1, full + 1):
        parts = submasks(mask)
        deletion[mask] = int(np.min(inner[parts] + inner[mask ^ parts]))
    return deletion


def psi(m: Multigraph) -> BipartitenessReport:
    """
    psi(G) = min over nonempty S of (e(S) + k(S))/|S|, with c(G) and r(G).

    c(G) is the edge Cheeger constant (None for one vertex); r(G) = e(V)/n.

    Raises:
        SizeGuardError: more than 14 vertices
    """
    guard("psi", m.n, PSI_LIMIT)
    tables = subset_tables(m, "psi", PSI_LIMIT)
    deletion = _deletion_table(tables.inner, m.n)
    cost = deletion + tables.boundary

    value, witness = minimum_ratio(cost, tables.popcount, tables.popcount >= 1)
    small = (tables.popcount >= 1) & (2 * tables.popcount <= m.n)
    c_value, c_witness = minimum_ratio(tables.boundary, tables.popcount, small)

    full = (1 << m.n) - 1
    removed = int(deletion[full])
    cut_value, cut_side = max_cut(m)
    if len(m.edges) - cut_value != removed:
        raise InvariantViolation(
            "max-cut recount", {"from_cut": len(m.edges) - cut_value, "from_deletion": removed}
        )

    psi_mask = vertices_to_mask(witness)
    return BipartitenessReport(
        n=m.n,
        e_s=int(deletion[psi_mask]),
        k_s=int(tables.boundary[psi_mask]),
        psi=value,
        c=c_value,
        r=Fraction(removed, m.n),
        edges_removed=removed,
        psi_witness=witness,
        c_witness=c_witness,
        cut_side=cut_side,
    )


def bipartite_ratio(m: Multigraph) -> Fraction:
    """r(G) = (|E| - maxcut)/n."""
    cut, _ = max_cut(m)
    return Fraction(len(m.edges) - cut, m.n)


def independence_ratio(m: Multigraph) -> Fraction:
    """
    alpha(G)/n; a vertex with a loop is never independent.

    Raises:
        SizeGuardError: more than 20 vertices
    """
    tables = subset_tables(m, "independence_ratio")
    independent = tables.popcount[tables.inner == 0]
    return Fraction(int(independent.max()), m.n)
