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
Property Checks: Recording asserted properties and their outcomes.
"""

import logging
import math
from fractions import Fraction
from typing import Any, Dict, List, Optional

import numpy as np
from pydantic import BaseModel

from core.models.reports import PropertyCheck

logger = logging.getLogger(__name__)


def to_plain(value: Any) -> Any:
    """Convert fractions, numpy values and containers into JSON-friendly values."""
    if isinstance(value, BaseModel):
        return to_plain(value.model_dump(mode="json"))
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.floating,)):
        value = float(value)
    if isinstance(value, float) and math.isinf(value):
        return "inf" if value > 0 else "-inf"
    if isinstance(value, np.ndarray):
        return [to_plain(v) for v in value.tolist()]
    if isinstance(value, dict):
        return {str(k): to_plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [to_plain(v) for v in items]
    return value


class PropertyCheckTracker:
    """
    Track property checks of a run for reporting and exit codes.
    """

    def __init__(self):
        self._checks: List[PropertyCheck] = []
        logger.debug("Property check tracker initialized")

    def record(
        self,
        name: str,
        passed: bool,
        quantities: Optional[Dict[str, Any]] = None,
        witness: Any = None,
    ) -> PropertyCheck:
        """
        Record one check.

        Args:
            name: Check name
            passed: Outcome
            quantities: Values the outcome was decided on
            witness: Object proving a failure (kept for failures only)

        Returns:
            The recorded check
        """
        check = PropertyCheck(
            name=name,
            passed=bool(passed),
            quantities=to_plain(quantities or {}),
            witness=None if passed else to_plain(witness),
        )
        self._checks.append(check)

        if not check.passed:
            logger.warning(f"Property check failed: {name} {check.quantities}")
        return check

    def get_checks(self, name: Optional[str] = None, failed_only: bool = False) -> List[PropertyCheck]:
        checks = self._checks
        if name:
            checks = [c for c in checks if c.name == name]
        if failed_only:
            checks = [c for c in checks if not c.passed]
        return list(checks)

    @property
    def failures(self) -> List[PropertyCheck]:
        return self.get_checks(failed_only=True)

    @property
    def passed(self) -> bool:
        return not self.failures

    def get_stats(self) -> Dict[str, Any]:
        by_name: Dict[str, Dict[str, int]] = {}
        for check in self._checks:
            entry = by_name.setdefault(check.name, {"passed": 0, "failed": 0})
            entry["passed" if check.passed else "failed"] += 1
        return {
            "total": len(self._checks),
            "failed": len(self.failures),
            "by_name": by_name,
        }

    def reset(self):
        self._checks = []


# Global tracker instance
_tracker: Optional[PropertyCheckTracker] = None


def get_tracker() -> PropertyCheckTracker:
    """Get global property check tracker instance."""
    global _tracker
    if _tracker is None:
        _tracker = PropertyCheckTracker()
    return _tracker
