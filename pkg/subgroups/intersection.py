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
Intersections of finite-index subgroups via product actions.

H_1 ∩ ... ∩ H_r is the stabilizer of (b_1, ..., b_r) in the diagonal
action on the product of the coset spaces; its index is the size of that
point's orbit.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from core.errors import AlphabetMismatchError, IndexCapExceededError, InvariantViolation
from labeled_graph.graph import SLabeledGraph, build_graph
from subgroups.subgroup import SubgroupRep

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ProductOrbit:
    """
    Orbit of a point of a product action.

    Attributes:
        graph: Action on the orbit, vertex 0 = the starting point
        coords: coords[v, i] is the i-th factor coordinate of vertex v
    """

    graph: SLabeledGraph
    coords: np.ndarray


def product_orbit(
    actions: Sequence[SLabeledGraph],
    basepoints: Sequence[int],
    cap: Optional[int] = None,
) -> ProductOrbit:
    """
    Breadth-first orbit of basepoints under the diagonal action.

    Raises:
        AlphabetMismatchError: factors use different alphabets
        IndexCapExceededError: the orbit grows beyond cap
    """
    if not actions or len(actions) != len(basepoints):
        raise ValueError("need one basepoint per action")
    alphabet = actions[0].alphabet
    for action in actions[1:]:
        if action.alphabet != alphabet:
            raise AlphabetMismatchError(alphabet, action.alphabet)

    sizes = np.array([a.n for a in actions], dtype=np.int64)
    strides = np.ones(len(actions), dtype=np.int64)
    for i in range(len(actions) - 2, -1, -1):
        strides[i] = strides[i + 1] * sizes[i + 1]

    def decode(codes: np.ndarray) -> np.ndarray:
        return (codes[:, None] // strides[None, :]) % sizes[None, :]

    def step(coords: np.ndarray, letter: int) -> np.ndarray:
        images = np.empty_like(coords)
        for i, action in enumerate(actions):
            images[:, i] = action.perms[letter][coords[:, i]]
        return images @ strides

    start = int(np.dot(np.asarray(basepoints, dtype=np.int64), strides))
    seen = {start: 0}
    order: List[int] = [start]
    frontier = np.array([start], dtype=np.int64)
    while frontier.size:
        coords = decode(frontier)
        discovered: List[int] = []
        for letter in range(len(alphabet)):
            for code in np.unique(step(coords, letter)).tolist():
                if code not in seen:
                    seen[code] = len(order)
                    order.append(code)
                    discovered.append(code)
                    if cap is not None and len(order) > cap:
                        raise IndexCapExceededError(len(order), cap)
        frontier = np.array(discovered, dtype=np.int64)

    codes = np.array(order, dtype=np.int64)
    coords = decode(codes)
    sorter = np.argsort(codes)
    perms = []
    for letter in range(len(alphabet)):
        images = step(coords, letter)
        perms.append(sorter[np.searchsorted(codes, images, sorter=sorter)])
    graph = build_graph(len(order), alphabet, perms)
    return ProductOrbit(graph=graph, coords=coords)


def intersection_orbit(a: SubgroupRep, b: SubgroupRep, cap: Optional[int] = None) -> ProductOrbit:
    """
    Orbit of (basepoint_a, basepoint_b), with its coordinates in both actions.

    Raises:
        AlphabetMismatchError: the subgroups live in different free groups
        IndexCapExceededError: the index exceeds cap
        InvariantViolation: the index falls outside max(i_a, i_b)..i_a * i_b
    """
    if a.alphabet != b.alphabet:
        raise AlphabetMismatchError(a.alphabet, b.alphabet)
    orbit = product_orbit([a.action, b.action], [a.basepoint, b.basepoint], cap=cap)
    index = orbit.graph.n
    if not max(a.index, b.index) <= index <= a.index * b.index:
        raise InvariantViolation(
            "intersection index bounds",
            {"index_a": a.index, "index_b": b.index, "index": index},
        )
    logger.debug(f"Intersected subgroups of index {a.index} and {b.index}: index {index}")
    return orbit


def intersect_actions(a: SubgroupRep, b: SubgroupRep, cap: Optional[int] = None) -> SubgroupRep:
    """H_a ∩ H_b as the stabilizer of (basepoint_a, basepoint_b)."""
    return SubgroupRep(action=intersection_orbit(a, b, cap=cap).graph, basepoint=0)
