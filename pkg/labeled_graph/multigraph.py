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
Undirected multigraphs and the labeled-to-undirected view.

Loops count 2 towards the degree. Girth conventions: a loop gives girth 1,
a parallel pair gives girth 2, a forest has infinite girth.
"""

import logging
import math
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, Sequence, Tuple, Union

import networkx as nx
import numpy as np

from core.errors import OutOfRangeError
from core.models.reports import GraphStats
from labeled_graph.graph import SLabeledGraph

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Multigraph:
    """
    Vertices 0..n-1 and a multiset of unordered edges.

    Edges are stored canonically (u <= v) and sorted, so two multigraphs
    compare equal exactly when their edge multisets agree.
    """

    n: int
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        canonical = []
        for u, v in self.edges:
            u, v = int(u), int(v)
            for endpoint in (u, v):
                if not 0 <= endpoint < self.n:
                    raise OutOfRangeError(endpoint, self.n)
            canonical.append((u, v) if u <= v else (v, u))
        object.__setattr__(self, "edges", tuple(sorted(canonical)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Multigraph":
        return cls(n=n, edges=tuple((e[0], e[1]) for e in edges))

    @cached_property
    def degrees(self) -> List[int]:
        degree = [0] * self.n
        for u, v in self.edges:
            degree[u] += 1
            degree[v] += 1
        return degree

    def edge_counter(self) -> Counter:
        return Counter(self.edges)

    @property
    def loops(self) -> int:
        return sum(1 for u, v in self.edges if u == v)

    def regular_degree(self) -> Union[int, None]:
        """Common degree, or None when the multigraph is not regular."""
        degrees = set(self.degrees)
        return degrees.pop() if len(degrees) == 1 else None

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    def adjacency_counts(self) -> np.ndarray:
        """Integer adjacency matrix; a loop adds 2 to the diagonal."""
        matrix = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            if u == v:
                matrix[u, u] += 2
            else:
                matrix[u, v] += 1
                matrix[v, u] += 1
        return matrix


def undirected_view(g: SLabeledGraph) -> Multigraph:
    """One undirected edge {x, x·s} per letter s and vertex x."""
    sources = np.arange(g.n)
    edges: List[Edge] = []
    for perm in g.perms:
        edges.extend(zip(sources.tolist(), perm.tolist()))
    return Multigraph(n=g.n, edges=tuple(edges))


def induced_subgraph(m: Multigraph, vertices: Sequence[int]) -> Multigraph:
    """Span of the given vertices, relabeled in the given order."""
    position = {v: i for i, v in enumerate(vertices)}
    edges = [
        (position[u], position[v])
        for u, v in m.edges
        if u in position and v in position
    ]
    return Multigraph(n=len(vertices), edges=tuple(edges))


def connected_components(m: Multigraph) -> List[List[int]]:
    """Components as sorted vertex lists, ordered by smallest vertex."""
    components = [sorted(c) for c in nx.connected_components(m.to_networkx())]
    return sorted(components, key=lambda c: c[0])


def is_connected(m: Multigraph) -> bool:
    return len(connected_components(m)) == 1


def girth(m: Multigraph) -> Union[int, float]:
    """Shortest cycle length; math.inf for a forest."""
    counts = m.edge_counter()
    if any(u == v for u, v in counts):
        return 1
    if any(c > 1 for c in counts.values()):
        return 2
    simple = nx.Graph()
    simple.add_nodes_from(range(m.n))
    simple.add_edges_from(counts)
    return nx.girth(simple)


def graph_stats(m: Multigraph) -> GraphStats:
    """Girth, components, degree sequence and regularity."""
    g = girth(m)
    regular = m.regular_degree()
    return GraphStats(
        n=m.n,
        edges=len(m.edges),
        girth=None if g == math.inf else int(g),
        components=connected_components(m),
        degrees=list(m.degrees),
        regular=regular is not None,
        degree=regular,
    )
