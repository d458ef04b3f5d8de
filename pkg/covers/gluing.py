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
Gluing two covers of the same base into one.

Given covers P1, P2, a letter s and vertices p1, p2 over the same base
vertex, the s-edges (p1, p1·s) and (p2, p2·s) of the disjoint union are
replaced by (p1, p2·s) and (p2, p1·s). The result is again a cover, and
V(P1) is a cut of exactly two edges.
"""

import logging
from fractions import Fraction
from typing import List, Union

import numpy as np

from core.errors import (
    BaseMismatchError,
    FiberMismatchError,
    GirthTooSmallError,
    InvariantViolation,
    OutOfRangeError,
)
from covers.lifts import CoveringMap, disjoint_union_cover
from covers.verify import verify_covering
from labeled_graph.graph import SLabeledGraph
from labeled_graph.multigraph import girth, is_connected, undirected_view
from spectral.expansion import crossing_edges

logger = logging.getLogger(__name__)

GLUE_CROSSING = 2


def swap_letter_images(g: SLabeledGraph, index: int, u: int, v: int) -> SLabeledGraph:
    """Copy of g with u·s and v·s exchanged for letter s = alphabet[index]."""
    perms = [p.copy() for p in g.perms]
    perms[index][u], perms[index][v] = perms[index][v], perms[index][u]
    return SLabeledGraph(n=g.n, alphabet=g.alphabet, perms=tuple(perms))


def glue(
    first: CoveringMap,
    second: CoveringMap,
    letter: Union[str, int],
    p1: int,
    p2: int,
) -> CoveringMap:
    """
    Two-edge surgery joining two covers.

    Args:
        first, second: Covers of the same base, both of girth > 2
        letter: Letter whose edges are exchanged
        p1: Vertex of first.total
        p2: Vertex of second.total over the same base vertex

    Raises:
        BaseMismatchError: the covers have different bases
        FiberMismatchError: p1 and p2 lie over different base vertices
        GirthTooSmallError: an input has a loop or a parallel edge pair
        InvariantViolation: the glued map breaks a gluing contract
    """
    if first.base != second.base:
        raise BaseMismatchError()
    for vertex, cover in ((p1, first), (p2, second)):
        if not 0 <= vertex < cover.total.n:
            raise OutOfRangeError(vertex, cover.total.n)
    b1, b2 = int(first.proj[p1]), int(second.proj[p2])
    if b1 != b2:
        raise FiberMismatchError(p1, p2, b1, b2)

    views = [undirected_view(first.total), undirected_view(second.total)]
    girths = [girth(view) for view in views]
    for value in girths:
        if value <= 2:
            raise GirthTooSmallError(value)

    index = first.total.alphabet.index(letter)
    union = disjoint_union_cover(first, second)
    n1 = first.total.n
    total = swap_letter_images(union.total, index, p1, p2 + n1)
    glued = CoveringMap(total=total, base=first.base, proj=union.proj)

    view = undirected_view(total)
    epsilon = verify_covering(total, glued.base, glued.proj)
    crossing = crossing_edges(view, range(n1))
    glued_girth = girth(view)
    contracts = {
        "covering": epsilon == 0,
        "two crossing edges": crossing == GLUE_CROSSING,
        "girth": glued_girth >= min(girths),
        "connected": not all(is_connected(v) for v in views) or is_connected(view),
    }
    broken = [name for name, ok in contracts.items() if not ok]
    if broken:
        raise InvariantViolation(
            f"gluing contract ({', '.join(broken)})",
            {"epsilon": str(epsilon), "crossing": crossing, "girth": str(glued_girth)},
        )
    logger.debug(f"Glued covers of sizes {n1} and {second.total.n} along letter {letter}")
    return glued


def glue_cut(first: CoveringMap) -> List[int]:
    """Vertices of the first summand: the two-edge cut of a glued cover."""
    return list(range(first.total.n))


def glue_cut_bound(first: CoveringMap, second: CoveringMap) -> Fraction:
    """Ch of the glued cover is at most 2/min(|P1|, |P2|)."""
    return Fraction(GLUE_CROSSING, min(first.total.n, second.total.n))


def default_glue_points(first: CoveringMap, second: CoveringMap) -> tuple:
    """First vertices of the two fibers over base vertex 0."""
    return int(np.argmax(first.proj == 0)), int(np.argmax(second.proj == 0))
