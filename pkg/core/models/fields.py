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
Shared field types for report and config models.

Exact ratios are fractions.Fraction in memory and "p/q" strings on the wire.
"""

from fractions import Fraction
from typing import Annotated, Any

from pydantic import PlainSerializer, PlainValidator

SEED_LIMIT = 2**64


def to_fraction(value: Any) -> Fraction:
    if isinstance(value, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ValueError:
            raise ValueError(f"not a rational: {value!r}") from None
    raise ValueError(f"not a rational: {value!r}")


Rational = Annotated[
    Fraction,
    PlainValidator(to_fraction),
    PlainSerializer(lambda q: f"{q.numerator}/{q.denominator}", return_type=str),
]


def check_seed(value: int) -> int:
    if not 0 <= value < SEED_LIMIT:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {value}")
    return value
