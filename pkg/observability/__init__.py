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

"""Observability package: property checks and report artifacts."""

from observability.artifacts import ArtifactWriter, canonical_json, csv_text, write_atomic
from observability.checks import PropertyCheckTracker, get_tracker, to_plain

__all__ = [
    "PropertyCheckTracker",
    "get_tracker",
    "to_plain",
    "ArtifactWriter",
    "canonical_json",
    "csv_text",
    "write_atomic",
]
