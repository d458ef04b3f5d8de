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
Artifact Storage: Report files written atomically.

JSON artifacts are canonical (sorted keys, compact separators, trailing
newline) so identical runs produce byte-identical files.
"""

import csv
import io
import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Any, List, Sequence, Union

from pydantic import BaseModel

from observability.checks import to_plain

logger = logging.getLogger(__name__)


def canonical_json(data: Any) -> str:
    if isinstance(data, BaseModel):
        data = data.model_dump(mode="json")
    return json.dumps(to_plain(data), sort_keys=True, separators=(",", ":")) + "\n"


def csv_text(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(["" if v is None else to_plain(v) for v in row])
    return buffer.getvalue()


def write_atomic(path: Union[str, Path], text: str) -> Path:
    """Write text to a temporary file in the target directory, then rename."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with tempfile.NamedTemporaryFile(
        "w", encoding="utf-8", dir=path.parent, prefix=f".{path.name}.", delete=False
    ) as handle:
        handle.write(text)
        temp_name = handle.name
    os.replace(temp_name, path)
    logger.debug(f"Artifact written: {path}")
    return path


class ArtifactWriter:
    """
    Writes the JSON and CSV artifacts of one command into a directory.
    """

    def __init__(self, out_dir: Union[str, Path]):
        self.out_dir = Path(out_dir)
        self._written: List[Path] = []

    def write_json(self, name: str, data: Any) -> Path:
        path = write_atomic(self.out_dir / f"{name}.json", canonical_json(data))
        self._written.append(path)
        return path

    def write_csv(self, name: str, header: Sequence[str], rows: Sequence[Sequence[Any]]) -> Path:
        path = write_atomic(self.out_dir / f"{name}.csv", csv_text(header, rows))
        self._written.append(path)
        return path

    @property
    def written(self) -> List[Path]:
        return list(self._written)
