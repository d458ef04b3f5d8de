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
Graph, spectral and expansion reports.

Every report is recomputable from its witness fields; exact quantities are
Rationals, eigenvalues are floats rounded to 1e-9.
"""

from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from core.models.fields import Rational


class GraphStats(BaseModel):
    """Girth, components and degrees of an undirected multigraph."""

    n: int = Field(..., description="Vertex count")
    edges: int = Field(..., description="Edge count (loops included)")
    girth: Optional[int] = Field(None, description="Shortest cycle length; None when acyclic")
    components: List[List[int]] = Field(..., description="Connected components")
    degrees: List[int] = Field(..., description="Degree per vertex, loops counted twice")
    regular: bool = Field(..., description="All degrees equal")
    degree: Optional[int] = Field(None, description="Common degree when regular")


class SpectrumReport(BaseModel):
    """Adjacency spectrum sorted in descending order."""

    n: int = Field(..., description="Vertex count")
    eigenvalues: List[float] = Field(..., description="Eigenvalues with multiplicity, descending")
    lambda0: float = Field(..., description="Largest eigenvalue")
    lambda1: Optional[float] = Field(None, description="Second largest eigenvalue")
    lambda_minus: float = Field(..., description="Smallest eigenvalue")
    gap: Optional[float] = Field(None, description="lambda0 - lambda1")

    def csv_row(self) -> List[Any]:
        return [self.n, self.lambda0, self.lambda1, self.lambda_minus, self.gap]


class ExpansionKind(str, Enum):
    """Which expansion constant a report holds."""
    EDGE_CHEEGER = "edge-cheeger"
    SET_EXPANSION = "set-expansion"


class ExpansionReport(BaseModel):
    """
    Exact minimum of a cut ratio with the set attaining it.

    value is None when no admissible set exists (a one-vertex domain);
    read it as +infinity.
    """

    kind: ExpansionKind = Field(..., description="Edge Cheeger or set expansion")
    value: Optional[Rational] = Field(None, description="Exact minimum ratio")
    witness: List[int] = Field(default_factory=list, description="Minimizing vertex set")
    domain_size: int = Field(..., description="Size of the enumerated domain")

    class Config:
        use_enum_values = True
        arbitrary_types_allowed = True

    @property
    def is_infinite(self) -> bool:
        return self.value is None


class BipartitenessReport(BaseModel):
    """Desai-Rao style bipartiteness constants of a small multigraph."""

    n: int = Field(..., description="Vertex count")
    e_s: int = Field(..., description="Edges to delete to make the psi-witness span bipartite")
    k_s: int = Field(..., description="Boundary edges of the psi-witness")
    psi: Rational = Field(..., description="min over S of (e(S)+k(S))/|S|")
    c: Optional[Rational] = Field(None, description="Edge Cheeger constant; None for n=1")
    r: Rational = Field(..., description="e(V)/n")
    edges_removed: int = Field(..., description="e(V) = |E| - maxcut")
    psi_witness: List[int] = Field(..., description="Set attaining psi")
    c_witness: List[int] = Field(default_factory=list, description="Set attaining c")
    cut_side: List[int] = Field(..., description="One side of a maximum cut of V")

    class Config:
        arbitrary_types_allowed = True


class BoundCheckReport(BaseModel):
    """The two eigenvalue/bipartiteness inequalities on one graph."""

    d: int = Field(..., description="Degree")
    lambda_minus: float = Field(..., description="Smallest adjacency eigenvalue")
    psi: Rational = Field(..., description="Exact psi")
    c: Optional[Rational] = Field(None, description="Exact Cheeger constant")
    r: Rational = Field(..., description="Exact bipartite edit ratio")
    desai_rao_bound: float = Field(..., description="-d + psi^2/(4d)")
    desai_rao_passed: bool = Field(..., description="lambda_minus >= bound - 1e-6")
    psi_lower_bound: Rational = Field(..., description="min{c, rc/2d, r/4}")
    psi_lower_passed: bool = Field(..., description="psi >= lower bound")

    class Config:
        arbitrary_types_allowed = True

    @property
    def passed(self) -> bool:
        return self.desai_rao_passed and self.psi_lower_passed


class UpwardVariationReport(BaseModel):
    """Sum of upward jumps of a vertex function against its spread."""

    value: float = Field(..., description="Sum over v of max(0, max_w f(w) - f(v))")
    spread: float = Field(..., description="max f - min f")
    passed: bool = Field(..., description="value >= spread - 1e-12")


class CheegerSandwichReport(BaseModel):
    """(d - lambda1)/2 <= Ch <= sqrt(2d(d - lambda1))."""

    d: int = Field(..., description="Degree")
    lambda1: float = Field(..., description="Second largest eigenvalue")
    cheeger: Rational = Field(..., description="Exact edge Cheeger constant")
    lower: float = Field(..., description="Spectral lower bound")
    upper: float = Field(..., description="Spectral upper bound")
    passed: bool = Field(..., description="Both sides hold within 1e-9")

    class Config:
        arbitrary_types_allowed = True


class SmallSetExpansionReport(BaseModel):
    """Worst small set for |AT \\ A|/|A| against h(X,S)/k."""

    n: int = Field(..., description="Vertex count")
    k: int = Field(..., description="Subgroup index")
    h: Optional[Rational] = Field(None, description="h(X,S); None when infinite")
    bound: Optional[Rational] = Field(None, description="h(X,S)/k")
    min_ratio: Optional[Rational] = Field(None, description="Smallest ratio over admissible sets")
    witness: List[int] = Field(default_factory=list, description="Set attaining min_ratio")
    sets_checked: int = Field(..., description="Number of admissible sets")
    violations: int = Field(..., description="Sets below the bound")
    passed: bool = Field(..., description="No violations")

    class Config:
        arbitrary_types_allowed = True


class ExpansionProfile(BaseModel):
    """Exact set expansion of each tower level and its running infimum."""

    values: List[Optional[Rational]] = Field(..., description="h per level; None = infinite")
    running_infimum: List[Optional[Rational]] = Field(..., description="Running minimum")
    non_increasing: bool = Field(..., description="values never increase along the tower")

    class Config:
        arbitrary_types_allowed = True


class AveragingReport(BaseModel):
    """Mean of |Ag ∩ B|/|G| over g against mu(A)mu(B)."""

    order: int = Field(..., description="Group order")
    size_a: int = Field(..., description="|A|")
    size_b: int = Field(..., description="|B|")
    mean: Rational = Field(..., description="Exact mean")
    product: Rational = Field(..., description="mu(A)mu(B)")
    passed: bool = Field(..., description="mean == product")

    class Config:
        arbitrary_types_allowed = True


class AveragingSweepReport(BaseModel):
    """Averaging identity over every pair of subsets of one group."""

    group: str = Field(..., description="Group name")
    order: int = Field(..., description="Group order")
    pairs_checked: int = Field(..., description="Number of (A, B) pairs")
    violations: int = Field(..., description="Pairs where the identity fails")

    @property
    def passed(self) -> bool:
        return self.violations == 0


class TranslateCoverReport(BaseModel):
    """Greedy right translates of A covering the group."""

    order: int = Field(..., description="Group order")
    size_a: int = Field(..., description="|A|")
    count: int = Field(..., description="Number of translates")
    chosen: List[int] = Field(..., description="Chosen translating elements")
    coverage: Rational = Field(..., description="mu(AX)")
    lower_bound: Rational = Field(..., description="1 - (1 - mu(A))^count")
    passed: bool = Field(..., description="coverage >= lower_bound")
    exponential_bound_checked: bool = Field(False, description="count == ceil(1/mu(A))")
    exponential_bound_passed: Optional[bool] = Field(None, description="coverage > 1 - 1/e")

    class Config:
        arbitrary_types_allowed = True


class FriedmanSweepReport(BaseModel):
    """Fraction of random lifts whose new eigenvalues stay in a window."""

    base: str = Field(..., description="Base graph name")
    base_degree: int = Field(..., description="Degree of the base view")
    cover_degree: int = Field(..., description="Sheets per lift")
    trials: int = Field(..., description="Number of lifts sampled")
    window: float = Field(..., description="Half-width of the acceptance window")
    ramanujan_bound: float = Field(..., description="sqrt(2d sqrt(d-1))")
    inside: int = Field(..., description="Lifts with every new eigenvalue inside the window")
    fraction: float = Field(..., description="inside / trials")
    max_abs_new: float = Field(..., description="Largest |new eigenvalue| seen")
    target_fraction: float = Field(..., description="Required fraction")
    passed: bool = Field(..., description="fraction >= target_fraction")


class PropertyCheck(BaseModel):
    """One asserted property with the quantities that decided it."""

    name: str = Field(..., description="Check name")
    passed: bool = Field(..., description="Outcome")
    quantities: Dict[str, Any] = Field(default_factory=dict, description="Values compared")
    witness: Optional[Any] = Field(None, description="Serialized witness for failures")
