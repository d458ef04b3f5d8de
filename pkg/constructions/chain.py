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
Intersection chains of bad family stabilizers.

Γ_n = Γ^(1) ∩ ... ∩ Γ^(n) is followed as the orbit of the basepoint tuple in
the product of the member actions. Each member's sheet-0 witness lifts
through the product coordinates, and the smallest lifted ratio bounds the
Cheeger constant of the subgroup generators' action on Γ/Γ_n.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence

import numpy as np

from constructions.bad_family import build_bad_family_member
from core.errors import IndexCapExceededError
from core.models.audits import ChainLevel, ChainReport
from labeled_graph.graph import SLabeledGraph, word_permutation
from labeled_graph.words import Word
from subgroups.intersection import intersection_orbit
from subgroups.subgroup import SubgroupRep

logger = logging.getLogger(__name__)

DEFAULT_MAX_INDEX = 200000


def _orbit_size(perms: Sequence[np.ndarray], start: int, n: int) -> int:
    tables = list(perms)
    for perm in perms:
        inverse = np.empty_like(perm)
        inverse[perm] = np.arange(n)
        tables.append(inverse)
    seen = np.zeros(n, dtype=bool)
    seen[start] = True
    frontier = np.array([start], dtype=np.int64)
    while frontier.size:
        images = np.unique(np.concatenate([table[frontier] for table in tables]))
        frontier = images[~seen[images]]
        seen[frontier] = True
    return int(np.count_nonzero(seen))


def _witness_ratio(in_witness: np.ndarray, perms: Sequence[np.ndarray]) -> tuple:
    crossing = sum(int(np.count_nonzero(in_witness != in_witness[perm])) for perm in perms)
    size = int(np.count_nonzero(in_witness))
    smaller = min(size, in_witness.size - size)
    ratio = Fraction(crossing, smaller) if smaller else None
    return crossing, size, ratio


def intersection_chain_report(
    members: Sequence[SubgroupRep],
    generators: Sequence[Word],
    witnesses: Sequence[Sequence[int]],
    max_index: int = DEFAULT_MAX_INDEX,
) -> ChainReport:
    """
    Witness bounds along Γ_1 ⊇ Γ_1 ∩ Γ_2 ⊇ ...

    Args:
        members: Finite-index subgroups, all over the same alphabet
        generators: Words whose action on Γ/Γ_n is measured
        witnesses: One vertex set per member, in that member's action
        max_index: Stop once an intersection index would exceed this

    Returns:
        ChainReport; truncated is set when the cap stopped the chain
    """
    if len(members) != len(witnesses):
        raise ValueError("need one witness per member")

    levels: List[ChainLevel] = []
    truncated = False
    current: Optional[SubgroupRep] = None
    coords: Optional[np.ndarray] = None
    running: Optional[Fraction] = None

    for level, member in enumerate(members, start=1):
        try:
            if current is None:
                if member.index > max_index:
                    raise IndexCapExceededError(member.index, max_index)
                current = member
                coords = np.arange(member.index, dtype=np.int64)[:, None]
            else:
                orbit = intersection_orbit(current, member, cap=max_index)
                coords = np.column_stack([coords[orbit.coords[:, 0]], orbit.coords[:, 1]])
                current = SubgroupRep(action=orbit.graph, basepoint=0)
        except IndexCapExceededError as exc:
            logger.warning(f"Chain truncated at level {level}: {exc.message}")
            truncated = True
            break
        graph = current.action

        perms = [word_permutation(graph, w) for w in generators]
        member_ratio = None
        crossing = size = 0
        for position, (owner, witness) in enumerate(zip(members[:level], witnesses[:level])):
            in_witness = np.zeros(owner.index, dtype=bool)
            in_witness[list(witness)] = True
            c, s, ratio = _witness_ratio(in_witness[coords[:, position]], perms)
            if ratio is not None and (running is None or ratio < running):
                running = ratio
            if position == level - 1:
                member_ratio, crossing, size = ratio, c, s

        if running is None or member_ratio is None:
            raise ValueError(f"witness of member {level} is empty or everything")
        levels.append(
            ChainLevel(
                level=level,
                index=graph.n,
                orbit_size=_orbit_size(perms, current.basepoint, graph.n),
                bound=running,
                member_bound=member_ratio,
                crossing=crossing,
                witness_size=size,
            )
        )
        logger.info(f"Chain level {level}: index {graph.n}, bound {running}")

    monotone = all(b.bound <= a.bound for a, b in zip(levels, levels[1:]))
    return ChainReport(max_index=max_index, levels=levels, truncated=truncated, monotone=monotone)


def bad_family_chain_report(bases: Sequence[SLabeledGraph], max_index: int = DEFAULT_MAX_INDEX) -> ChainReport:
    """Intersection chain of the stabilizers of the bad family over bases."""
    members = [build_bad_family_member(base) for base in bases]
    if not members:
        return ChainReport(max_index=max_index, levels=[], truncated=False, monotone=True)
    return intersection_chain_report(
        [m.stabilizer for m in members],
        members[0].generators.words,
        [m.witness for m in members],
        max_index=max_index,
    )
