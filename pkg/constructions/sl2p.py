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
Congruence quotients of F_2 onto SL(2, p).

x1 maps to [[1, 1], [0, 1]] and x2 to [[1, 0], [1, 1]]; the two matrices
generate SL(2, p), and F_2 acts on its p(p^2 - 1) elements by right
multiplication. Vertex 0 is the identity matrix.
"""

import logging
from collections import deque
from typing import Dict, List, Sequence, Tuple

from core.errors import InvariantViolation, NotPrimeError
from labeled_graph.graph import SLabeledGraph, build_graph, is_transitive
from labeled_graph.words import Alphabet

logger = logging.getLogger(__name__)

Matrix = Tuple[int, int, int, int]

SL2_ALPHABET = Alphabet(("x1", "x2"))


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    factor = 2
    while factor * factor <= p:
        if p % factor == 0:
            return False
        factor += 1
    return True


def sl2p_action(p: int) -> SLabeledGraph:
    """
    Right-multiplication action of F_2 on SL(2, p).

    Raises:
        NotPrimeError: p is not a prime >= 5
        InvariantViolation: the orbit of the identity is not all of SL(2, p)
    """
    if p < 5 or not is_prime(p):
        raise NotPrimeError(p)

    def times_x1(m: Matrix) -> Matrix:
        a, b, c, d = m
        return (a, (a + b) % p, c, (c + d) % p)

    def times_x2(m: Matrix) -> Matrix:
        a, b, c, d = m
        return ((a + b) % p, b, (c + d) % p, d)

    identity: Matrix = (1, 0, 0, 1)
    index: Dict[Matrix, int] = {identity: 0}
    elements: List[Matrix] = [identity]
    queue = deque([identity])
    while queue:
        m = queue.popleft()
        for step in (times_x1, times_x2):
            image = step(m)
            if image not in index:
                index[image] = len(elements)
                elements.append(image)
                queue.append(image)

    order = p * (p * p - 1)
    if len(elements) != order:
        raise InvariantViolation("SL(2,p) generated", {"p": p, "size": len(elements), "order": order})

    perms = [[index[step(m)] for m in elements] for step in (times_x1, times_x2)]
    action = build_graph(order, SL2_ALPHABET, perms)
    if not is_transitive(action):
        raise InvariantViolation("SL(2,p) action transitive", {"p": p})
    logger.info(f"Built SL(2,{p}) action on {order} vertices")
    return action


def sl2p_family(primes: Sequence[int]) -> List[SLabeledGraph]:
    """One SL(2, p) action per prime."""
    return [sl2p_action(p) for p in primes]
