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
Report and configuration models for Schreier Lab.

- Reports: graph statistics, spectra, expansion and bipartiteness constants
- Audits: glued towers, the index-2 bad family, intersection chains,
  the distortion audit
- Config: experiment parameters loaded from YAML/JSON
"""

from core.models.audits import (
    BadFamilyReport,
    ChainLevel,
    ChainReport,
    DistortionReport,
    GluedTowerReport,
    LevelStats,
)
from core.models.config import (
    ChainConfig,
    CoverConfig,
    DistortionConfig,
    FriedmanSweepConfig,
    TowerConfig,
)
from core.models.fields import Rational
from core.models.reports import (
    AveragingReport,
    AveragingSweepReport,
    BipartitenessReport,
    BoundCheckReport,
    CheegerSandwichReport,
    ExpansionKind,
    ExpansionProfile,
    ExpansionReport,
    FriedmanSweepReport,
    GraphStats,
    PropertyCheck,
    SmallSetExpansionReport,
    SpectrumReport,
    TranslateCoverReport,
    UpwardVariationReport,
)

__all__ = [
    "Rational",
    # Reports
    "GraphStats",
    "SpectrumReport",
    "ExpansionKind",
    "ExpansionReport",
    "BipartitenessReport",
    "BoundCheckReport",
    "UpwardVariationReport",
    "CheegerSandwichReport",
    "SmallSetExpansionReport",
    "ExpansionProfile",
    "AveragingReport",
    "AveragingSweepReport",
    "TranslateCoverReport",
    "FriedmanSweepReport",
    "PropertyCheck",
    # Audits
    "LevelStats",
    "GluedTowerReport",
    "BadFamilyReport",
    "ChainLevel",
    "ChainReport",
    "DistortionReport",
    # Config
    "TowerConfig",
    "CoverConfig",
    "FriedmanSweepConfig",
    "DistortionConfig",
    "ChainConfig",
]
