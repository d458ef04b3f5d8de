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
Constructions - the SL(2, p) family, the index-2 bad family and its
intersection chain, the glued tower pair and the distortion audit.
"""

from constructions.bad_family import (
    BAD_FAMILY_ALPHABET,
    BadFamilyMember,
    build_bad_family_member,
    doubled_action,
    kernel_of_sheet_swap,
)
from constructions.chain import bad_family_chain_report, intersection_chain_report
from constructions.distortion import distortion_audit, distortion_bound, distortion_sweep, standard_subgroup
from constructions.glued_tower import TowerParameters, build_glued_towers
from constructions.sl2p import SL2_ALPHABET, is_prime, sl2p_action, sl2p_family

__all__ = [
    # SL(2, p)
    "SL2_ALPHABET",
    "is_prime",
    "sl2p_action",
    "sl2p_family",
    # Bad family
    "BAD_FAMILY_ALPHABET",
    "BadFamilyMember",
    "build_bad_family_member",
    "doubled_action",
    "kernel_of_sheet_swap",
    "intersection_chain_report",
    "bad_family_chain_report",
    # Glued towers
    "TowerParameters",
    "build_glued_towers",
    # Distortion
    "distortion_bound",
    "distortion_audit",
    "distortion_sweep",
    "standard_subgroup",
]
