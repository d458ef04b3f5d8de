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
Named, splittable seed streams.

A SeedStream is a root seed plus a key path. Its generator is PCG64 seeded
by numpy's SeedSequence(seed, spawn_key=path), so the stream for
(seed, level, attempt) is reproducible on its own, independent of how
many other streams were drawn before it.
"""

from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np

from core.models.fields import check_seed


@dataclass(frozen=True)
class SeedStream:
    """
    Attributes:
        seed: Root seed, 0 <= seed < 2**64
        path: Child keys leading to this stream
    """

    seed: int
    path: Tuple[int, ...] = ()

    def __post_init__(self):
        check_seed(self.seed)
        for key in self.path:
            if key < 0:
                raise ValueError(f"stream keys must be non-negative, got {key}")

    def child(self, *keys: int) -> "SeedStream":
        return SeedStream(seed=self.seed, path=self.path + tuple(int(k) for k in keys))

    def generator(self) -> np.random.Generator:
        sequence = np.random.SeedSequence(self.seed, spawn_key=self.path)
        return np.random.Generator(np.random.PCG64(sequence))

    def __str__(self) -> str:
        return f"{self.seed}/" + "/".join(str(k) for k in self.path)


SeedLike = Union[int, SeedStream]


def as_stream(seed: SeedLike) -> SeedStream:
    return seed if isinstance(seed, SeedStream) else SeedStream(seed=int(seed))
