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
Audit reports for the named constructions.

Covers the glued tower levels, the index-2 bad family, the intersection
chain and the distortion audit.
"""

from typing import List, Optional

from pydantic import BaseModel, Field

from core.models.fields import Rational
from core.models.reports import PropertyCheck


class LevelStats(BaseModel):
    """One level of the glued tower pair (G_n, K_n)."""

    level: int = Field(..., description="Level number, 1 = start graph")
    vertices: int = Field(..., description="|X_n|")
    girth_g: Optional[int] = Field(None, description="girth(G_n)")
    girth_k: Optional[int] = Field(None, description="girth(K_n)")
    g_connected: bool = Field(..., description="G_n is connected")
    first_degree: Optional[int] = Field(None, description="Sheets of the first lift pair")
    second_degree: Optional[int] = Field(None, description="Sheets of the second lift pair")
    cheeger_upper_bound: Optional[Rational] = Field(
        None, description="Witness bound on Ch(G_n): crossing / min part"
    )
    cheeger_exact: Optional[Rational] = Field(None, description="Exact Ch(G_n) when small")
    witness_size: Optional[int] = Field(None, description="|V(L)| of the glue witness")
    witness_crossing_g: Optional[int] = Field(None, description="Edges leaving V(L) in G_n")
    witness_crossing_k: Optional[int] = Field(None, description="Edges leaving V(L) in K_n")
    edit_distance: Rational = Field(..., description="d_e(G_n, K_n)")
    k_components: int = Field(..., description="Number of components of K_n")
    largest_component_fraction: Rational = Field(..., description="|T_n| / |X_n|")
    largest_component_lambda1: Optional[float] = Field(
        None, description="Second eigenvalue of the largest K_n component"
    )
    spectral_cheeger_lower: Optional[float] = Field(
        None, description="(d - lambda1)/2, a lower bound on Ch(T_n)"
    )

    class Config:
        arbitrary_types_allowed = True


class GluedTowerReport(BaseModel):
    """Per-level statistics and the property checks of a glued tower run."""

    d: int = Field(..., description="Degree of the views (2|S|)")
    b: float = Field(..., description="New-eigenvalue ceiling")
    delta: Rational = Field(..., description="Target gap constant")
    max_edit_distance: Rational = Field(..., description="Threshold for d_e(G_n, K_n)")
    min_component_fraction: Rational = Field(..., description="Threshold for |T_n|/|X_n|")
    seed: int = Field(..., description="Root seed")
    levels: List[LevelStats] = Field(default_factory=list, description="Level 1 first")
    checks: List[PropertyCheck] = Field(default_factory=list, description="Asserted properties")

    class Config:
        arbitrary_types_allowed = True

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


class BadFamilyReport(BaseModel):
    """Index-2 distortion example built over one base action."""

    base_vertices: int = Field(..., description="n, the base vertex count")
    vertices: int = Field(..., description="2n")
    generators: List[str] = Field(..., description="Nielsen-Schreier words of H")
    crossing_count: int = Field(..., description="Generator edges leaving the sheet-0 witness")
    ch_bound: Rational = Field(..., description="crossing_count / n")
    relations_hold: bool = Field(..., description="x1 = t x1 t^-1, x2 = t x2 t^-1, t^2 = 1")
    restricted_vertices: int = Field(..., description="Size of the H-orbit graph")
    passed: bool = Field(..., description="All assertions hold")

    class Config:
        arbitrary_types_allowed = True


class ChainLevel(BaseModel):
    """One intersection level Γ_n = H_1 ∩ ... ∩ H_n."""

    level: int = Field(..., description="n")
    index: int = Field(..., description="Index of the intersection")
    orbit_size: int = Field(..., description="Vertices reached by the subgroup generators")
    bound: Rational = Field(..., description="Running witness bound on the Cheeger constant")
    member_bound: Rational = Field(..., description="Bound from lifting member n's witness")
    crossing: int = Field(..., description="Crossing edges of member n's lifted witness")
    witness_size: int = Field(..., description="Size of member n's lifted witness")

    class Config:
        arbitrary_types_allowed = True


class ChainReport(BaseModel):
    """Witness bounds along an intersection chain."""

    max_index: int = Field(..., description="Index cap")
    levels: List[ChainLevel] = Field(default_factory=list, description="Level 1 first")
    truncated: bool = Field(False, description="The cap stopped the chain early")
    monotone: bool = Field(..., description="Bounds are non-increasing")

    @property
    def passed(self) -> bool:
        return self.monotone


class DistortionReport(BaseModel):
    """h(O,T) against the distortion lower bound for one subgroup."""

    group: str = Field(..., description="Group name")
    order: int = Field(..., description="|G|")
    k: int = Field(..., description="Subgroup index")
    generators: List[str] = Field(..., description="Nielsen-Schreier words")
    orbit_size: int = Field(..., description="|O|")
    h_group: Optional[Rational] = Field(None, description="h(G,S); None = infinite")
    h_orbit: Optional[Rational] = Field(None, description="h(O,T); None = infinite")
    h_orbit_witness: List[int] = Field(default_factory=list, description="Set attaining h(O,T)")
    bound: float = Field(..., description="min{h(G,S)/k^2, 1} / (8 k^(3 - log2 3))")
    passed: bool = Field(..., description="h(O,T) > bound")

    class Config:
        arbitrary_types_allowed = True
