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
Finite-index subgroups of free groups as pointed transitive actions.

A subgroup H of index k is never enumerated: it is the stabilizer of a
basepoint in a transitive action on k points. Conjugation moves the
basepoint; transversals and Nielsen-Schreier generators are read off a
breadth-first search of the action.
"""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from core.errors import (
    InvariantViolation,
    NotTransitiveError,
    OutOfRangeError,
    RetriesExhaustedError,
)
from labeled_graph.graph import SLabeledGraph, apply_word, build_graph, orbit_words
from labeled_graph.words import Alphabet, Word

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SubgroupRep:
    """
    H = Stab(basepoint) for a transitive action.

    Attributes:
        action: Transitive S-labeled graph
        basepoint: Vertex whose stabilizer is H
    """

    action: SLabeledGraph
    basepoint: int = 0

    def __post_init__(self):
        if not 0 <= self.basepoint < self.action.n:
            raise OutOfRangeError(self.basepoint, self.action.n)
        order, _ = orbit_words(self.action, self.basepoint)
        if len(order) != self.action.n:
            raise NotTransitiveError(len(order), self.action.n)

    @property
    def index(self) -> int:
        return self.action.n

    @property
    def alphabet(self) -> Alphabet:
        return self.action.alphabet

    def contains(self, word: Word) -> bool:
        return apply_word(self.action, self.basepoint, word) == self.basepoint


@dataclass(frozen=True)
class Transversal:
    """
    Right coset representatives: reps[v] carries the basepoint to v.

    reps[basepoint] is the empty word.
    """

    basepoint: int
    reps: Tuple[Word, ...]

    def __len__(self) -> int:
        return len(self.reps)

    def rep(self, vertex: int) -> Word:
        return self.reps[vertex]


@dataclass(frozen=True)
class GeneratorSet:
    """
    Words generating a subgroup; one representative per inverse pair.

    Attributes:
        words: Freely reduced, non-identity words
        alphabet: Alphabet the words are written in
    """

    words: Tuple[Word, ...]
    alphabet: Alphabet

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def symmetric(self) -> Tuple[Word, ...]:
        """Each word followed by its formal inverse."""
        closed: List[Word] = []
        for word in self.words:
            closed.append(word)
            closed.append(word.inverse())
        return tuple(closed)

    def format(self) -> List[str]:
        return [word.format(self.alphabet) for word in self.words]


def transversal(g: SLabeledGraph, basepoint: int = 0) -> Transversal:
    """Shortest-word transversal, ties broken by letter index then sign."""
    order, reps = orbit_words(g, basepoint)
    if len(order) != g.n:
        raise NotTransitiveError(len(order), g.n)
    return Transversal(basepoint=basepoint, reps=tuple(reps[v] for v in range(g.n)))


def schreier_machinery(g: SLabeledGraph, basepoint: int = 0) -> Tuple[Transversal, GeneratorSet]:
    """
    Transversal C and Nielsen-Schreier generators N(S, C) of Stab(basepoint).

    For each coset vertex c and letter s the word c*s*p^-1 is formed, with p
    the representative of the coset c*s lands in. Inverse letters only
    produce inverses of these words, so one representative per inverse pair
    is kept; identity words are dropped.

    Raises:
        NotTransitiveError: g has more than one orbit
    """
    trans = transversal(g, basepoint)
    words: List[Word] = []
    seen = set()
    for c in range(g.n):
        for index in range(g.k):
            target = g.image(c, index, 1)
            word = (trans.reps[c] * Word.letter(index) * trans.reps[target].inverse()).reduce()
            if word.is_identity:
                continue
            if word.syllables in seen or word.inverse().syllables in seen:
                continue
            seen.add(word.syllables)
            words.append(word)

    for word in words:
        image = apply_word(g, basepoint, word)
        if image != basepoint:
            raise InvariantViolation(
                "generator fixes basepoint",
                {"word": word.format(g.alphabet), "image": image},
            )

    logger.debug(f"Schreier generators: index {g.n}, {len(words)} words over {g.k} letters")
    return trans, GeneratorSet(words=tuple(words), alphabet=g.alphabet)


def conjugate(sub: SubgroupRep, word: Word) -> SubgroupRep:
    """H^w = w^-1 H w, the stabilizer of basepoint*w."""
    return SubgroupRep(action=sub.action, basepoint=apply_word(sub.action, sub.basepoint, word))


def cyclic_quotient(alphabet: Alphabet, weights: Sequence[int], modulus: int) -> SubgroupRep:
    """
    Kernel of the map F_S -> Z/modulus sending letter i to weights[i].

    Raises:
        NotTransitiveError: the weights do not generate Z/modulus
    """
    if len(weights) != len(alphabet):
        raise ValueError(f"{len(weights)} weights for {len(alphabet)} letters")
    if modulus < 1:
        raise ValueError(f"modulus must be positive, got {modulus}")
    perms = [[(x + w) % modulus for x in range(modulus)] for w in weights]
    return SubgroupRep(action=build_graph(modulus, alphabet, perms))


def random_transitive_action(
    alphabet: Alphabet,
    k: int,
    rng: np.random.Generator,
    max_tries: int = 1000,
) -> SubgroupRep:
    """
    Index-k subgroup from uniformly random letter permutations.

    Samples are rejected until the action is transitive.
    """
    if k < 1:
        raise ValueError(f"index must be positive, got {k}")
    for attempt in range(max_tries):
        perms = [rng.permutation(k) for _ in alphabet]
        action = build_graph(k, alphabet, perms)
        order, _ = orbit_words(action, 0)
        if len(order) == k:
            logger.debug(f"Transitive index-{k} action after {attempt + 1} samples")
            return SubgroupRep(action=action)
    raise RetriesExhaustedError(f"transitive action of degree {k}", max_tries)
