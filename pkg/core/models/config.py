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
Experiment configuration models.

Loaded from YAML or JSON by core.config_loader.ConfigLoader. Unknown keys
are rejected; stochastic experiments require an explicit seed.
"""

from fractions import Fraction
from typing import List, Optional

from pydantic import BaseModel, Field, field_validator

from core.models.fields import Rational, check_seed


class _Strict(BaseModel):
    class Config:
        extra = "forbid"
        arbitrary_types_allowed = True


class TowerConfig(_Strict):
    """
    Parameters of the glued tower construction.

    The default thresholds are delta/50 for d_e(G_n, K_n) and
    1 - delta/(100 d) for the largest K_n component; either can be
    overridden for runs that must stay small.
    """

    seed: int = Field(..., description="Root seed (64-bit)")
    delta: Rational = Field(default=Fraction(1), description="Target gap constant, > 0")
    b: Optional[float] = Field(None, description="New-eigenvalue ceiling; derived from d if unset")
    levels: int = Field(default=3, ge=0, description="Number of glue steps")
    max_vertices: int = Field(default=2000, ge=1, description="Vertex cap for any level")
    max_tries: int = Field(default=200, ge=1, description="Samples per lift pair")
    max_edit_distance: Optional[Rational] = Field(None, description="Override for delta/50")
    min_component_fraction: Optional[Rational] = Field(
        None, description="Override for 1 - delta/(100 d)"
    )
    glue_letter: int = Field(default=0, ge=0, description="Letter whose edges are swapped")
    start: str = Field(default="k4-matching", description="Named start graph")
    output_dir: Optional[str] = Field(None, description="Artifact directory")

    @field_validator("seed")
    @classmethod
    def _seed_range(cls, value: int) -> int:
        return check_seed(value)

    @field_validator("delta")
    @classmethod
    def _positive_delta(cls, value: Fraction) -> Fraction:
        if value <= 0:
            raise ValueError("delta must be positive")
        return value


class CoverConfig(_Strict):
    """Random (iterated) cover of a graph file or named graph."""

    seed: int = Field(..., description="Root seed (64-bit)")
    degrees: List[int] = Field(default_factory=lambda: [2], description="Sheets per level")
    graph: str = Field(default="bouquet2", description="Graph file path or named graph")
    boost_girth: bool = Field(default=False, description="Grow depth until girth increases")
    max_tries: int = Field(default=50, ge=1, description="Girth boosting attempts")
    output_dir: Optional[str] = Field(None, description="Artifact directory")

    @field_validator("seed")
    @classmethod
    def _seed_range(cls, value: int) -> int:
        return check_seed(value)

    @field_validator("degrees")
    @classmethod
    def _positive_degrees(cls, value: List[int]) -> List[int]:
        if not value or any(d < 1 for d in value):
            raise ValueError("degrees must be a nonempty list of positive integers")
        return value


class FriedmanSweepConfig(_Strict):
    """Monte-Carlo window test for new eigenvalues of random lifts."""

    seed: int = Field(..., description="Root seed (64-bit)")
    base: str = Field(default="bouquet2", description="Named base graph")
    degree: int = Field(default=50, ge=1, description="Sheets per lift")
    trials: int = Field(default=200, ge=1, description="Number of lifts")
    window: float = Field(default=3.9, gt=0, description="Half-width of the window")
    target_fraction: float = Field(default=0.9, ge=0, le=1, description="Required fraction")
    output_dir: Optional[str] = Field(None, description="Artifact directory")

    @field_validator("seed")
    @classmethod
    def _seed_range(cls, value: int) -> int:
        return check_seed(value)


class DistortionConfig(_Strict):
    """Distortion audit of one subgroup inside a finite group."""

    group: str = Field(..., description="Group name, e.g. z6, d4, s3, a4")
    index: int = Field(..., ge=1, description="Subgroup index k")
    seed: Optional[int] = Field(None, description="Seed for a random index-k subgroup")
    random_subgroup: bool = Field(default=False, description="Sample the subgroup at random")
    output_dir: Optional[str] = Field(None, description="Artifact directory")


class ChainConfig(_Strict):
    """Intersection chain over bad-family members."""

    bases: List[str] = Field(..., description="Base actions over two letters, e.g. sl2-5, sl2-7")
    max_index: int = Field(default=200000, ge=1, description="Index cap")
    output_dir: Optional[str] = Field(None, description="Artifact directory")
