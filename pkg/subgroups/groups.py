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
Small finite groups as right-regular actions.

A FiniteGroup is the Cayley graph Cay(G, S) viewed as an S-labeled graph:
vertex 0 is the identity and vertex v is the element reached by the
transversal word of v. Fixtures cover the groups of order at most 12 used
by the averaging and distortion audits.
"""

import logging
import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Sequence, Tuple

import numpy as np

from core.errors import NotRegularActionError, OutOfRangeError
from labeled_graph.graph import SLabeledGraph, build_graph, cyclic_action, word_permutation
from labeled_graph.words import Alphabet, Word
from subgroups.subgroup import schreier_machinery

logger = logging.getLogger(__name__)

Perm = Tuple[int, ...]


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """
    A finite group through its right-regular action.

    Attributes:
        name: Fixture name, e.g. "z6"
        action: Cayley graph; must be a regular action
    """

    name: str
    action: SLabeledGraph

    def __post_init__(self):
        _, generators = schreier_machinery(self.action, 0)
        identity = np.arange(self.action.n)
        for word in generators:
            if not np.array_equal(word_permutation(self.action, word), identity):
                raise NotRegularActionError(word.format(self.action.alphabet))

    @property
    def order(self) -> int:
        return self.action.n

    @cached_property
    def elements(self) -> Tuple[Word, ...]:
        """Transversal word of every element."""
        trans, _ = schreier_machinery(self.action, 0)
        return trans.reps

    @cached_property
    def table(self) -> np.ndarray:
        """table[a, g] = a*g."""
        columns = [word_permutation(self.action, w) for w in self.elements]
        table = np.stack(columns, axis=1)
        table.setflags(write=False)
        return table

    @cached_property
    def inverses(self) -> np.ndarray:
        inverse = np.argmax(self.table == 0, axis=1)
        inverse.setflags(write=False)
        return inverse

    def multiply(self, a: int, g: int) -> int:
        for x in (a, g):
            if not 0 <= x < self.order:
                raise OutOfRangeError(x, self.order)
        return int(self.table[a, g])

    def translate(self, subset: Sequence[int], g: int) -> List[int]:
        """The right translate subset*g, sorted."""
        return sorted(self.multiply(a, g) for a in subset)


def permutation_group(name: str, alphabet: Alphabet, generators: Sequence[Perm]) -> FiniteGroup:
    """
    Cayley graph of the group generated by permutations of a small set.

    The product is (p*q)(i) = q[p[i]]; elements are discovered breadth-first
    from the identity.
    """
    if len(generators) != len(alphabet):
        raise ValueError(f"{len(generators)} generators for {len(alphabet)} letters")
    degree = len(generators[0])
    identity: Perm = tuple(range(degree))
    index: Dict[Perm, int] = {identity: 0}
    elements: List[Perm] = [identity]
    queue = deque([identity])
    while queue:
        p = queue.popleft()
        for s in generators:
            q = tuple(s[p[i]] for i in range(degree))
            if q not in index:
                index[q] = len(elements)
                elements.append(q)
                queue.append(q)

    perms = []
    for s in generators:
        perms.append([index[tuple(s[p[i]] for i in range(degree))] for p in elements])
    return FiniteGroup(name=name, action=build_graph(len(elements), alphabet, perms))


def cyclic_group(m: int) -> FiniteGroup:
    return FiniteGroup(name=f"z{m}", action=cyclic_action(m, [1], Alphabet(("a",))))


def dihedral_group(m: int) -> FiniteGroup:
    """Symmetries of the m-gon, order 2m."""
    if m < 3:
        raise ValueError(f"dihedral group needs m >= 3, got {m}")
    rotation = tuple((i + 1) % m for i in range(m))
    reflection = tuple((-i) % m for i in range(m))
    return permutation_group(f"d{m}", Alphabet(("r", "f")), [rotation, reflection])


def symmetric_group_3() -> FiniteGroup:
    return permutation_group("s3", Alphabet(("a", "b")), [(1, 0, 2), (1, 2, 0)])


def alternating_group_4() -> FiniteGroup:
    return permutation_group("a4", Alphabet(("a", "b")), [(1, 2, 0, 3), (1, 0, 3, 2)])


_NAMED = re.compile(r"^(z|d)(\d+)$")


def group_by_name(name: str) -> FiniteGroup:
    """
    Resolve a fixture name: z<m>, d<m> (order 2m), s3, a4.

    Raises:
        ValueError: unknown name
    """
    key = name.strip().lower()
    if key == "s3":
        return symmetric_group_3()
    if key == "a4":
        return alternating_group_4()
    match = _NAMED.match(key)
    if match:
        family, m = match.group(1), int(match.group(2))
        if family == "z" and m >= 1:
            return cyclic_group(m)
        if family == "d" and m >= 3:
            return dihedral_group(m)
    raise ValueError(f"Unknown group '{name}' (expected z<m>, d<m>, s3 or a4)")


def small_groups(max_order: int = 12) -> List[FiniteGroup]:
    """Every fixture of order at most max_order."""
    groups = [cyclic_group(m) for m in range(1, max_order + 1)]
    groups.extend(dihedral_group(m) for m in range(3, max_order // 2 + 1))
    if max_order >= 6:
        groups.append(symmetric_group_3())
    if max_order >= 12:
        groups.append(alternating_group_4())
    return groups
