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
Covers of S-labeled graphs.

A d-cover is given by sheet permutations f(s, x) of {0..d-1}; the lift has
vertex (x, k) stored at index x*d + k and (x, k)·s = (x·s, f(s, x)[k]).
The projection is integer division by d.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from core.errors import BaseMismatchError, InvariantViolation, ShapeMismatchError
from core.models.reports import GraphStats
from covers.rng import SeedLike, SeedStream, as_stream
from covers.verify import verify_covering
from labeled_graph.graph import SLabeledGraph, disjoint_union
from labeled_graph.multigraph import graph_stats, undirected_view

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class CoverSpec:
    """
    Sheet permutations of a d-cover.

    Attributes:
        d: Number of sheets
        table: Array of shape (letters, base vertices, d); every row is a
            permutation of 0..d-1
    """

    d: int
    table: np.ndarray

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"a cover needs at least one sheet, got d={self.d}")
        table = np.array(self.table, dtype=np.int64)
        if table.ndim != 3 or table.shape[2] != self.d:
            raise ShapeMismatchError(f"sheet table of shape {table.shape} for d={self.d}")
        if not np.array_equal(np.sort(table, axis=2), np.broadcast_to(np.arange(self.d), table.shape)):
            raise ValueError("every sheet table row must be a permutation of 0..d-1")
        table.setflags(write=False)
        object.__setattr__(self, "table", table)

    @classmethod
    def identity(cls, k: int, n: int, d: int) -> "CoverSpec":
        return cls(d=d, table=np.tile(np.arange(d, dtype=np.int64), (k, n, 1)))


@dataclass(frozen=True, eq=False)
class CoveringMap:
    """
    A covering total -> base.

    Attributes:
        total: The covering graph
        base: The covered graph
        proj: proj[x] is the base vertex under total vertex x
        spec: Sheet table when the map is a plain lift
    """

    total: SLabeledGraph
    base: SLabeledGraph
    proj: np.ndarray
    spec: Optional[CoverSpec] = None

    def __post_init__(self):
        proj = np.asarray(self.proj, dtype=np.int64)
        proj.setflags(write=False)
        object.__setattr__(self, "proj", proj)

    @property
    def degree(self) -> int:
        return self.total.n // self.base.n

    def fiber(self, vertex: int) -> List[int]:
        return np.nonzero(self.proj == vertex)[0].tolist()

    def compose(self, lower: "CoveringMap") -> "CoveringMap":
        """self followed by lower: total -> lower.base."""
        if self.base != lower.total:
            raise BaseMismatchError()
        return CoveringMap(total=self.total, base=lower.base, proj=lower.proj[self.proj])


def lift(g: SLabeledGraph, spec: CoverSpec) -> CoveringMap:
    """
    The cover of g defined by spec.

    Raises:
        ShapeMismatchError: spec does not match g's letters and vertices
        InvariantViolation: the result fails covering verification
    """
    if spec.table.shape[:2] != (g.k, g.n):
        raise ShapeMismatchError(
            f"sheet table for {spec.table.shape[:2]} (letters, vertices), graph has {(g.k, g.n)}"
        )
    d = spec.d
    perms = []
    for index, perm in enumerate(g.perms):
        perms.append((perm[:, None] * d + spec.table[index]).reshape(-1))
    total = SLabeledGraph(n=g.n * d, alphabet=g.alphabet, perms=tuple(perms))
    proj = np.arange(g.n * d, dtype=np.int64) // d

    epsilon = verify_covering(total, g, proj)
    if epsilon != 0:
        raise InvariantViolation("lift is a covering", {"epsilon": str(epsilon)})
    return CoveringMap(total=total, base=g, proj=proj, spec=spec)


def random_cover_spec(g: SLabeledGraph, d: int, rng: np.random.Generator) -> CoverSpec:
    """Independent uniform sheet permutations, one Fisher-Yates shuffle per (letter, vertex)."""
    if d < 1:
        raise ValueError(f"a cover needs at least one sheet, got d={d}")
    rows = np.tile(np.arange(d, dtype=np.int64), (g.k, g.n, 1))
    return CoverSpec(d=d, table=rng.permuted(rows, axis=2))


def random_cover(g: SLabeledGraph, d: int, seed: SeedLike) -> CoveringMap:
    """Uniformly random d-cover drawn from the given seed stream."""
    stream = as_stream(seed)
    return lift(g, random_cover_spec(g, d, stream.generator()))


@dataclass(frozen=True)
class Tower:
    """
    Successive covers; maps[i] covers levels[i] by levels[i + 1].

    Attributes:
        levels: Graphs from the base upwards
        maps: One covering map per step
    """

    levels: Tuple[SLabeledGraph, ...]
    maps: Tuple[CoveringMap, ...] = field(default=())

    def __post_init__(self):
        if len(self.maps) != len(self.levels) - 1:
            raise ShapeMismatchError(f"{len(self.maps)} maps for {len(self.levels)} levels")
        for i, cover in enumerate(self.maps):
            if cover.base != self.levels[i] or cover.total != self.levels[i + 1]:
                raise ShapeMismatchError(f"map {i} does not connect levels {i} and {i + 1}")

    @property
    def base(self) -> SLabeledGraph:
        return self.levels[0]

    @property
    def top(self) -> SLabeledGraph:
        return self.levels[-1]

    def projection(self) -> CoveringMap:
        """Top level onto the base."""
        if not self.maps:
            return CoveringMap(total=self.base, base=self.base, proj=np.arange(self.base.n))
        composite = self.maps[-1]
        for cover in reversed(self.maps[:-1]):
            composite = composite.compose(cover)
        return composite

    def stats(self) -> List[GraphStats]:
        return [graph_stats(undirected_view(level)) for level in self.levels]


def iterated_random_cover(g: SLabeledGraph, degrees: Sequence[int], seed: SeedLike) -> Tower:
    """
    Random (d_1, ..., d_r)-cover; level i uses stream seed/i.

    Raises:
        ValueError: degrees is empty or contains a value below 2
    """
    if not degrees or any(d < 2 for d in degrees):
        raise ValueError(f"degrees must be a nonempty list of integers >= 2, got {list(degrees)}")
    stream: SeedStream = as_stream(seed)
    levels = [g]
    maps = []
    for level, d in enumerate(degrees):
        cover = random_cover(levels[-1], d, stream.child(level))
        levels.append(cover.total)
        maps.append(cover)
    logger.debug(f"Iterated cover {list(degrees)}: {g.n} -> {levels[-1].n} vertices")
    return Tower(levels=tuple(levels), maps=tuple(maps))


def disjoint_union_cover(first: CoveringMap, second: CoveringMap) -> CoveringMap:
    """Two covers of the same base side by side."""
    if first.base != second.base:
        raise BaseMismatchError()
    return CoveringMap(
        total=disjoint_union(first.total, second.total),
        base=first.base,
        proj=np.concatenate([first.proj, second.proj]),
    )
