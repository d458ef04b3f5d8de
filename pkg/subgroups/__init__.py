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
Subgroup calculus - finite-index subgroups of free groups, their
generators, restrictions and intersections, plus small finite groups.
"""

from subgroups.averaging import averaging_identity_check, averaging_sweep, greedy_translate_cover
from subgroups.groups import FiniteGroup, group_by_name, permutation_group, small_groups
from subgroups.intersection import ProductOrbit, intersect_actions, intersection_orbit, product_orbit
from subgroups.restriction import restrict_to_subgroup, word_action_graph, word_orbit
from subgroups.subgroup import (
    GeneratorSet,
    SubgroupRep,
    Transversal,
    conjugate,
    cyclic_quotient,
    random_transitive_action,
    schreier_machinery,
    transversal,
)

__all__ = [
    # Subgroups
    "SubgroupRep",
    "Transversal",
    "GeneratorSet",
    "transversal",
    "schreier_machinery",
    "conjugate",
    "cyclic_quotient",
    "random_transitive_action",
    # Restriction and intersection
    "word_action_graph",
    "word_orbit",
    "restrict_to_subgroup",
    "ProductOrbit",
    "product_orbit",
    "intersect_actions",
    "intersection_orbit",
    # Finite groups
    "FiniteGroup",
    "permutation_group",
    "group_by_name",
    "small_groups",
    "averaging_identity_check",
    "averaging_sweep",
    "greedy_translate_cover",
]
