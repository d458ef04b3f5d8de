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
Covers - random and iterated lifts, covering verification, gluing and
girth boosting.
"""

from covers.friedman import friedman_ceiling, friedman_sweep, ramanujan_window
from covers.girth import cycle_killing_spec, girth_boosting_cover, shortest_cycles
from covers.gluing import glue, glue_cut, glue_cut_bound
from covers.lifts import (
    CoveringMap,
    CoverSpec,
    Tower,
    disjoint_union_cover,
    iterated_random_cover,
    lift,
    random_cover,
    random_cover_spec,
)
from covers.rng import SeedStream
from covers.verify import new_eigenvalues, verify_covering

__all__ = [
    "SeedStream",
    # Lifts
    "CoverSpec",
    "CoveringMap",
    "Tower",
    "lift",
    "random_cover_spec",
    "random_cover",
    "iterated_random_cover",
    "disjoint_union_cover",
    # Verification
    "verify_covering",
    "new_eigenvalues",
    # Surgery
    "glue",
    "glue_cut",
    "glue_cut_bound",
    "girth_boosting_cover",
    "shortest_cycles",
    "cycle_killing_spec",
    # Random lifts
    "ramanujan_window",
    "friedman_ceiling",
    "friedman_sweep",
]
