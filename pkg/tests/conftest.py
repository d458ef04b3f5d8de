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
Shared fixtures for the Schreier Lab tests.
"""

from pathlib import Path

import numpy as np
import pytest

from covers.rng import SeedStream
from labeled_graph.graph import SLabeledGraph, build_graph
from labeled_graph.multigraph import is_connected, undirected_view
from labeled_graph.words import Alphabet

FIXTURES = Path(__file__).parent / "fixtures"


def random_labeled_graph(n: int, k: int, rng: np.random.Generator) -> SLabeledGraph:
    """k uniformly random permutations of n points."""
    return build_graph(n, Alphabet.standard(k), [rng.permutation(n) for _ in range(k)])


def random_connected_graph(n: int, k: int, rng: np.random.Generator) -> SLabeledGraph:
    while True:
        g = random_labeled_graph(n, k, rng)
        if is_connected(undirected_view(g)):
            return g


@pytest.fixture
def c4_path() -> Path:
    return FIXTURES / "c4.json"


@pytest.fixture
def rng() -> np.random.Generator:
    return SeedStream(20240101).generator()
