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
Raising the girth by covers.

A single random cover need not raise the girth (a loop survives whenever
its sheet permutation has a fixed point), so girth_boosting_cover samples
iterated 2-covers of growing depth until the girth goes up.

cycle_killing_spec builds a 2-cover directly: a shortest cycle closes up
in a 2-cover iff an even number of its edges swap sheets, so a solution
of "odd on every shortest cycle" over GF(2) raises the girth in one step.
"""

import logging
import math
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from core.errors import RetriesExhaustedError
from covers.lifts import CoverSpec, Tower, iterated_random_cover
from covers.rng import SeedLike, as_stream
from labeled_graph.graph import SLabeledGraph
from labeled_graph.multigraph import girth, undirected_view

logger = logging.getLogger(__name__)

Slot = Tuple[int, int]
Cycle = FrozenSet[Slot]


def graph_girth(g: SLabeledGraph):
    return girth(undirected_view(g))


def girth_boosting_cover(
    g: SLabeledGraph,
    seed: SeedLike,
    max_tries: int = 50,
    max_depth: int = 8,
    max_vertices: int = 4096,
) -> Tower:
    """
    Iterated 2-covers of depth 1, 2, 3, ... until the girth strictly grows.

    Attempt i uses stream seed/i and depth min(i + 1, max_depth), further
    limited so the top level stays within max_vertices.

    Raises:
        ValueError: max_tries < 1 or even one 2-cover exceeds max_vertices
        RetriesExhaustedError: no attempt raised the girth
    """
    if max_tries < 1:
        raise ValueError(f"max_tries must be positive, got {max_tries}")
    depth_cap = min(max_depth, int(math.floor(math.log2(max_vertices / g.n))) if g.n <= max_vertices else 0)
    if depth_cap < 1:
        raise ValueError(f"a 2-cover of {g.n} vertices exceeds max_vertices={max_vertices}")

    stream = as_stream(seed)
    base_girth = graph_girth(g)
    for attempt in range(max_tries):
        depth = min(attempt + 1, depth_cap)
        tower = iterated_random_cover(g, [2] * depth, stream.child(attempt))
        top_girth = graph_girth(tower.top)
        logger.debug(f"Girth boosting attempt {attempt + 1}: depth {depth}, girth {base_girth} -> {top_girth}")
        if top_girth > base_girth:
            return tower
    raise RetriesExhaustedError("girth_boosting_cover", max_tries)


def shortest_cycles(g: SLabeledGraph) -> List[Cycle]:
    """
    Every shortest cycle of the undirected view as a set of (letter, vertex)
    slots; slot (s, x) is the edge from x to x·s.
    """
    value = graph_girth(g)
    if value == math.inf:
        return []

    slots: List[Slot] = [(s, x) for s in range(g.k) for x in range(g.n)]
    if value == 1:
        return [frozenset([(s, x)]) for s, x in slots if g.image(x, s) == x]

    by_pair: Dict[FrozenSet[int], List[Slot]] = {}
    for s, x in slots:
        by_pair.setdefault(frozenset((x, g.image(x, s))), []).append((s, x))
    if value == 2:
        cycles = []
        for pair, parallel in by_pair.items():
            if len(pair) == 2:
                for i in range(len(parallel)):
                    for j in range(i + 1, len(parallel)):
                        cycles.append(frozenset([parallel[i], parallel[j]]))
        return cycles

    neighbours: Dict[int, List[int]] = {v: [] for v in range(g.n)}
    for pair in by_pair:
        u, v = tuple(pair)
        neighbours[u].append(v)
        neighbours[v].append(u)

    found = set()
    length = int(value)
    for root in range(g.n):
        stack = [(root, [root])]
        while stack:
            vertex, path = stack.pop()
            if len(path) == length:
                if root in neighbours[vertex]:
                    edges = [frozenset(e) for e in zip(path, path[1:] + [root])]
                    found.add(frozenset(by_pair[e][0] for e in edges))
                continue
            for w in neighbours[vertex]:
                if w > root and w not in path:
                    stack.append((w, path + [w]))
    return sorted(found, key=lambda c: sorted(c))


def _solve_gf2(rows: np.ndarray, rng: np.random.Generator) -> Optional[np.ndarray]:
    """A random solution of rows·x = 1 over GF(2), or None."""
    m, width = rows.shape
    aug = np.concatenate([rows, np.ones((m, 1), dtype=bool)], axis=1)
    pivots: List[int] = []
    row = 0
    for col in range(width):
        if row == m:
            break
        hits = np.nonzero(aug[row:, col])[0]
        if hits.size == 0:
            continue
        pivot = row + int(hits[0])
        if pivot != row:
            aug[[row, pivot]] = aug[[pivot, row]]
        others = np.nonzero(aug[:, col])[0]
        others = others[others != row]
        aug[others] ^= aug[row]
        pivots.append(col)
        row += 1

    if np.any(~aug[:, :width].any(axis=1) & aug[:, width]):
        return None

    x = np.zeros(width, dtype=bool)
    free = np.ones(width, dtype=bool)
    free[pivots] = False
    x[free] = rng.integers(0, 2, size=int(free.sum())).astype(bool)
    for i, col in enumerate(pivots):
        x[col] = aug[i, width] ^ bool(np.count_nonzero(aug[i, :width] & x) % 2)
    return x


def cycle_killing_spec(graphs: Sequence[SLabeledGraph], rng: np.random.Generator) -> Optional[CoverSpec]:
    """
    One 2-cover table that opens every shortest cycle of every graph.

    The graphs must share vertex count and alphabet; the same table then
    raises the girth of each of them. Returns None when the parity system
    has no solution.
    """
    first = graphs[0]
    index = {(s, x): s * first.n + x for s in range(first.k) for x in range(first.n)}
    cycles = [c for g in graphs for c in shortest_cycles(g)]
    if not cycles:
        return None
    rows = np.zeros((len(cycles), len(index)), dtype=bool)
    for i, cycle in enumerate(cycles):
        for slot in cycle:
            rows[i, index[slot]] = True

    solution = _solve_gf2(rows, rng)
    if solution is None:
        logger.debug(f"No cycle-killing 2-cover for {len(cycles)} shortest cycles")
        return None
    swaps = solution.reshape(first.k, first.n)
    table = np.where(swaps[:, :, None], np.array([1, 0]), np.array([0, 1]))
    return CoverSpec(d=2, table=table)
