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
Restriction of an action to a subgroup given by generator words.

If g is the coset action of F_S on F_S/K and H = <T>, the orbit of a vertex
under T is the coset action of H on H/(H ∩ K^x), written in a new alphabet
with one letter per word of T.
"""

import logging
from collections import deque
from typing import List, Optional, Sequence

import numpy as np

from core.errors import AlphabetMismatchError, OutOfRangeError, WordNotInSubgroupError
from labeled_graph.graph import SLabeledGraph, build_graph, word_permutation
from labeled_graph.words import Alphabet, Word
from subgroups.subgroup import GeneratorSet, SubgroupRep

logger = logging.getLogger(__name__)


def word_action_graph(
    g: SLabeledGraph,
    words: Sequence[Word],
    alphabet: Optional[Alphabet] = None,
) -> SLabeledGraph:
    """The same vertex set acted on by the given words, letters t1..tm."""
    if not words:
        raise ValueError("need at least one word")
    alphabet = alphabet or Alphabet.standard(len(words), prefix="t")
    return build_graph(g.n, alphabet, [word_permutation(g, w) for w in words])


def word_orbit(g: SLabeledGraph, words: Sequence[Word], v0: int) -> List[int]:
    """Sorted orbit of v0 under the words and their inverses."""
    if not 0 <= v0 < g.n:
        raise OutOfRangeError(v0, g.n)
    tables = []
    for w in words:
        perm = word_permutation(g, w)
        inverse = np.empty_like(perm)
        inverse[perm] = np.arange(g.n)
        tables.extend([perm, inverse])

    seen = {v0}
    queue = deque([v0])
    while queue:
        u = queue.popleft()
        for table in tables:
            v = int(table[u])
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return sorted(seen)


def restrict_to_subgroup(
    g: SLabeledGraph,
    sub: SubgroupRep,
    generators: GeneratorSet,
    v0: int = 0,
) -> SLabeledGraph:
    """
    Orbit graph of v0 under the subgroup's generator words.

    Args:
        g: Action of the ambient free group
        sub: Subgroup the words must lie in
        generators: Words generating sub, one letter each in the result
        v0: Starting vertex of g

    Returns:
        Labeled graph on the orbit (relabeled in increasing vertex order)

    Raises:
        AlphabetMismatchError: g and sub use different alphabets
        WordNotInSubgroupError: a word moves sub's basepoint
    """
    if g.alphabet != sub.alphabet or generators.alphabet != sub.alphabet:
        raise AlphabetMismatchError(g.alphabet, sub.alphabet)
    for w in generators:
        image = int(word_permutation(sub.action, w)[sub.basepoint])
        if image != sub.basepoint:
            raise WordNotInSubgroupError(w.format(sub.alphabet), image)

    orbit = word_orbit(g, generators.words, v0)
    position = np.full(g.n, -1, dtype=np.int64)
    position[orbit] = np.arange(len(orbit))
    perms = []
    for w in generators:
        image = word_permutation(g, w)[orbit]
        perms.append(position[image])

    restricted = build_graph(len(orbit), Alphabet.standard(len(generators), prefix="t"), perms)
    logger.debug(f"Restricted {g.n}-vertex action to an orbit of {len(orbit)} under {len(generators)} words")
    return restricted
