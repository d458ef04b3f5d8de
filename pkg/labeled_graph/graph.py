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
S-labeled graphs: finite Schreier graphs of free groups.

An SLabeledGraph stores one permutation of 0..n-1 per letter; vertex x
has an s-labeled edge to x·s. Words act on the right.
"""

import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Mapping, Sequence, Tuple, Union

import numpy as np

from core.errors import (
    AlphabetMismatchError,
    LengthMismatchError,
    NonBijectionError,
    OutOfRangeError,
    ShapeMismatchError,
)
from labeled_graph.words import Alphabet, Word

logger = logging.getLogger(__name__)

PermInput = Union[Mapping[str, Sequence[int]], Sequence[Sequence[int]]]


def _frozen_array(values) -> np.ndarray:
    array = np.array(values, dtype=np.int64)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class SLabeledGraph:
    """
    A free-group action on {0..n-1}, one permutation per letter.

    Attributes:
        n: Vertex count
        alphabet: Letter names
        perms: perms[i][x] = x·s_i
    """

    n: int
    alphabet: Alphabet
    perms: Tuple[np.ndarray, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"A labeled graph needs at least one vertex, got n={self.n}")
        if len(self.perms) != len(self.alphabet):
            raise ShapeMismatchError(
                f"{len(self.perms)} permutations for {len(self.alphabet)} letters"
            )
        object.__setattr__(self, "perms", tuple(_frozen_array(p) for p in self.perms))

    @property
    def k(self) -> int:
        return len(self.alphabet)

    @cached_property
    def inverse_perms(self) -> Tuple[np.ndarray, ...]:
        inverses = []
        for perm in self.perms:
            inverse = np.empty_like(perm)
            inverse[perm] = np.arange(self.n, dtype=np.int64)
            inverse.setflags(write=False)
            inverses.append(inverse)
        return tuple(inverses)

    def perm(self, letter: Union[str, int]) -> np.ndarray:
        return self.perms[self.alphabet.index(letter)]

    def image(self, v: int, index: int, sign: int = 1) -> int:
        table = self.perms[index] if sign == 1 else self.inverse_perms[index]
        return int(table[v])

    def __eq__(self, other) -> bool:
        if not isinstance(other, SLabeledGraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.alphabet == other.alphabet
            and all(np.array_equal(a, b) for a, b in zip(self.perms, other.perms))
        )

    def __hash__(self) -> int:
        return hash((self.n, self.alphabet, tuple(p.tobytes() for p in self.perms)))

    def __repr__(self) -> str:
        return f"SLabeledGraph(n={self.n}, letters={list(self.alphabet)})"

    def to_dict(self) -> Dict[str, object]:
        return {
            "n": self.n,
            "letters": list(self.alphabet),
            "perms": {name: [int(v) for v in perm] for name, perm in zip(self.alphabet, self.perms)},
        }


def build_graph(n: int, alphabet: Union[Alphabet, Sequence[str]], perms: PermInput) -> SLabeledGraph:
    """
    Validate permutation arrays and build an SLabeledGraph.

    Args:
        n: Vertex count
        alphabet: Letter names
        perms: Either a mapping name -> array or a sequence in alphabet order

    Raises:
        LengthMismatchError: an array does not have length n
        OutOfRangeError: an image is not a vertex
        NonBijectionError: some vertex is hit twice
    """
    if not isinstance(alphabet, Alphabet):
        alphabet = Alphabet(tuple(alphabet))
    if isinstance(perms, Mapping):
        missing = [name for name in alphabet if name not in perms]
        if missing:
            raise ShapeMismatchError(f"missing permutations for letters {missing}")
        ordered = [perms[name] for name in alphabet]
    else:
        ordered = list(perms)
        if len(ordered) != len(alphabet):
            raise ShapeMismatchError(f"{len(ordered)} permutations for {len(alphabet)} letters")

    arrays = []
    for name, values in zip(alphabet, ordered):
        array = np.asarray(values, dtype=np.int64)
        if array.ndim != 1 or array.shape[0] != n:
            raise LengthMismatchError(name, n, int(array.size))
        bad = np.nonzero((array < 0) | (array >= n))[0]
        if bad.size:
            raise OutOfRangeError(int(array[bad[0]]), n)
        hits = np.bincount(array, minlength=n)
        doubled = np.nonzero(hits > 1)[0]
        if doubled.size:
            raise NonBijectionError(name, int(doubled[0]))
        arrays.append(array)
    return SLabeledGraph(n=n, alphabet=alphabet, perms=tuple(arrays))


def apply_word(g: SLabeledGraph, v: int, w: Word) -> int:
    """Image of v under the right action of w."""
    if not 0 <= v < g.n:
        raise OutOfRangeError(v, g.n)
    if w.max_letter() >= g.k:
        raise ValueError(f"Word uses letter index {w.max_letter()} but alphabet has {g.k} letters")
    for index, sign in w:
        v = g.image(v, index, sign)
    return v


def word_permutation(g: SLabeledGraph, w: Word) -> np.ndarray:
    """Array img with img[x] = x·w for every vertex."""
    if w.max_letter() >= g.k:
        raise ValueError(f"Word uses letter index {w.max_letter()} but alphabet has {g.k} letters")
    image = np.arange(g.n, dtype=np.int64)
    for index, sign in w:
        table = g.perms[index] if sign == 1 else g.inverse_perms[index]
        image = table[image]
    return image


def edit_distance(g: SLabeledGraph, h: SLabeledGraph) -> Fraction:
    """
    |E(g) △ E(h)| / n over directed labeled edges.

    Each (letter, vertex) slot whose target differs contributes one edge
    to each side of the symmetric difference.
    """
    if g.n != h.n:
        raise ShapeMismatchError(f"vertex counts differ ({g.n} vs {h.n})")
    if g.alphabet != h.alphabet:
        raise ShapeMismatchError(f"alphabets differ ({list(g.alphabet)} vs {list(h.alphabet)})")
    differing = sum(int(np.count_nonzero(a != b)) for a, b in zip(g.perms, h.perms))
    return Fraction(2 * differing, g.n)


def disjoint_union(g1: SLabeledGraph, g2: SLabeledGraph) -> SLabeledGraph:
    """Vertices of g2 are shifted by g1.n."""
    if g1.alphabet != g2.alphabet:
        raise AlphabetMismatchError(g1.alphabet, g2.alphabet)
    perms = tuple(np.concatenate([a, b + g1.n]) for a, b in zip(g1.perms, g2.perms))
    return SLabeledGraph(n=g1.n + g2.n, alphabet=g1.alphabet, perms=perms)


def replace_letter(g: SLabeledGraph, index: int, perm: Sequence[int]) -> SLabeledGraph:
    """Copy of g with one letter's permutation replaced (validated)."""
    perms = [p for p in g.perms]
    perms[index] = np.asarray(perm, dtype=np.int64)
    return build_graph(g.n, g.alphabet, perms)


def orbit_words(g: SLabeledGraph, start: int = 0) -> Tuple[List[int], Dict[int, Word]]:
    """
    Breadth-first search over letters and inverses.

    Neighbours are explored by letter index with the letter before its
    inverse, so every vertex gets a shortest word and ties are broken
    deterministically.

    Returns:
        (visit order, word carrying start to each visited vertex)
    """
    if not 0 <= start < g.n:
        raise OutOfRangeError(start, g.n)
    reps: Dict[int, Word] = {start: Word()}
    order = [start]
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for index in range(g.k):
            for sign in (1, -1):
                v = g.image(u, index, sign)
                if v not in reps:
                    reps[v] = reps[u] * Word.letter(index, sign)
                    order.append(v)
                    queue.append(v)
    return order, reps


def is_transitive(g: SLabeledGraph) -> bool:
    order, _ = orbit_words(g, 0)
    return len(order) == g.n


# Small graph families used by the CLI, the constructions and the tests.

def bouquet(k: int, alphabet: Union[Alphabet, None] = None) -> SLabeledGraph:
    """One vertex with k loops."""
    alphabet = alphabet or Alphabet.standard(k)
    return build_graph(1, alphabet, [[0] for _ in range(k)])


def cycle_graph(n: int, letter: str = "a") -> SLabeledGraph:
    """Z/n acted on by +1: a directed labeled n-cycle."""
    return build_graph(n, Alphabet((letter,)), [[(x + 1) % n for x in range(n)]])


def cyclic_action(n: int, steps: Sequence[int], alphabet: Union[Alphabet, None] = None) -> SLabeledGraph:
    """Z/n with letter i acting by +steps[i]."""
    alphabet = alphabet or Alphabet.standard(len(steps))
    return build_graph(n, alphabet, [[(x + step) % n for x in range(n)] for step in steps])
