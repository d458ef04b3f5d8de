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
Turning regular multigraphs back into labeled graphs.

Both decompositions write a regular bipartite count matrix as a sum of
permutation matrices by peeling off perfect matchings (Hopcroft-Karp).
"""

import logging
from typing import List, Optional

import networkx as nx
import numpy as np

from core.errors import MatchingFailureError, NotRegularError, NotSymmetricError
from labeled_graph.graph import SLabeledGraph, build_graph
from labeled_graph.multigraph import Multigraph
from labeled_graph.words import Alphabet

logger = logging.getLogger(__name__)


def _check_regular(m: Multigraph, k: int) -> None:
    for vertex, degree in enumerate(m.degrees):
        if degree != k:
            raise NotRegularError(k, vertex, degree)


def permutation_decomposition(counts: np.ndarray) -> List[np.ndarray]:
    """
    Split a square count matrix with constant row and column sums r into
    r permutations (perm[x] = y for a unit taken from counts[x, y]).
    """
    counts = counts.copy()
    n = counts.shape[0]
    perms = []
    remaining = int(counts[0].sum()) if n else 0
    while remaining > 0:
        bipartite = nx.Graph()
        left = [("L", x) for x in range(n)]
        bipartite.add_nodes_from(left, bipartite=0)
        bipartite.add_nodes_from((("R", y) for y in range(n)), bipartite=1)
        rows, cols = np.nonzero(counts)
        bipartite.add_edges_from((("L", int(x)), ("R", int(y))) for x, y in zip(rows, cols))
        matching = nx.bipartite.hopcroft_karp_matching(bipartite, top_nodes=left)
        perm = np.empty(n, dtype=np.int64)
        for x in range(n):
            partner = matching.get(("L", x))
            if partner is None:
                raise MatchingFailureError(remaining)
            perm[x] = partner[1]
        counts[np.arange(n), perm] -= 1
        perms.append(perm)
        remaining -= 1
    return perms


def edge_label_decomposition(
    m: Multigraph, k: int, alphabet: Optional[Alphabet] = None
) -> SLabeledGraph:
    """
    Label a k-regular multigraph with k letters so that every edge is used
    exactly once in each direction (a loop supplies both directions).

    The adjacency matrix (loops contribute 2) is a sum of k permutation
    matrices; each permutation becomes a letter. symmetric_view inverts it.
    """
    _check_regular(m, k)
    alphabet = alphabet or Alphabet.standard(k)
    if len(alphabet) != k:
        raise ValueError(f"Need {k} letters, got {len(alphabet)}")
    perms = permutation_decomposition(m.adjacency_counts())
    logger.debug(f"Decomposed {k}-regular multigraph on {m.n} vertices")
    return build_graph(m.n, alphabet, perms)


def symmetric_view(g: SLabeledGraph) -> Multigraph:
    """
    Pair every directed labeled edge with a reverse one and keep one
    undirected edge per pair. Loops at a vertex pair up among themselves.

    Raises:
        NotSymmetricError: some pair of vertices has unequal edge counts in
            the two directions, or a vertex has an odd number of loops
    """
    directed = np.zeros((g.n, g.n), dtype=np.int64)
    sources = np.arange(g.n)
    for perm in g.perms:
        np.add.at(directed, (sources, perm), 1)
    edges = []
    for u in range(g.n):
        if directed[u, u] % 2:
            raise NotSymmetricError(u, u)
        edges.extend([(u, u)] * int(directed[u, u] // 2))
        for v in range(u + 1, g.n):
            if directed[u, v] != directed[v, u]:
                raise NotSymmetricError(u, v)
            edges.extend([(u, v)] * int(directed[u, v]))
    return Multigraph(n=g.n, edges=tuple(edges))


def schreier_labeling(m: Multigraph, alphabet: Optional[Alphabet] = None) -> SLabeledGraph:
    """
    Label a 2j-regular multigraph with j letters so that undirected_view
    of the result is m itself.

    Every component is oriented along an Euler circuit (loops are oriented
    on their own), giving in- and out-degree j everywhere; the out->in
    count matrix then splits into j permutations.
    """
    degree = m.regular_degree()
    if degree is None:
        degrees = m.degrees
        target = degrees[0]
        vertex = next(v for v, d in enumerate(degrees) if d != target)
        raise NotRegularError(target, vertex, degrees[vertex])
    if degree % 2:
        raise NotRegularError(degree + 1, 0, degree)
    j = degree // 2
    alphabet = alphabet or Alphabet.standard(j)
    if len(alphabet) != j:
        raise ValueError(f"Need {j} letters, got {len(alphabet)}")

    oriented = np.zeros((m.n, m.n), dtype=np.int64)
    without_loops = nx.MultiGraph()
    without_loops.add_nodes_from(range(m.n))
    for u, v in m.edges:
        if u == v:
            oriented[u, u] += 1
        else:
            without_loops.add_edge(u, v)
    for component in nx.connected_components(without_loops):
        if len(component) < 2:
            continue
        sub = without_loops.subgraph(component)
        for u, v in nx.eulerian_circuit(sub):
            oriented[u, v] += 1

    perms = permutation_decomposition(oriented)
    return build_graph(m.n, alphabet, perms)
