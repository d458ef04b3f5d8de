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
Error hierarchy for Schreier Lab.

Every error carries a message, a CLI exit code and a details dict so the
command line can serialize the failing witness next to the message.
"""

from typing import Any, Dict, Optional

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PROPERTY_FAILED = 2


class SchreierLabError(Exception):
    """Base exception for all library errors."""

    def __init__(
        self,
        message: str,
        exit_code: int = EXIT_USAGE,
        details: Optional[Dict[str, Any]] = None,
    ):
        self.message = message
        self.exit_code = exit_code
        self.details = details or {}
        super().__init__(self.message)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "error": type(self).__name__,
            "message": self.message,
            "details": self.details,
        }


# Labeled graphs

class NonBijectionError(SchreierLabError):
    """Raised when a letter's permutation hits some vertex twice."""

    def __init__(self, letter: str, image: int):
        super().__init__(
            message=f"Letter '{letter}' is not a bijection: vertex {image} is hit twice",
            details={"error_type": "non_bijection", "letter": letter, "image": image},
        )


class LengthMismatchError(SchreierLabError):
    """Raised when a permutation array does not have length n."""

    def __init__(self, letter: str, expected: int, actual: int):
        super().__init__(
            message=f"Letter '{letter}' has {actual} images, expected {expected}",
            details={
                "error_type": "length_mismatch",
                "letter": letter,
                "expected": expected,
                "actual": actual,
            },
        )


class ShapeMismatchError(SchreierLabError):
    """Raised when two graphs are not on the same vertex set and alphabet."""

    def __init__(self, reason: str):
        super().__init__(
            message=f"Shape mismatch: {reason}",
            details={"error_type": "shape_mismatch"},
        )


class AlphabetMismatchError(SchreierLabError):
    """Raised when two objects are labeled by different alphabets."""

    def __init__(self, left, right):
        super().__init__(
            message=f"Alphabet mismatch: {list(left)} vs {list(right)}",
            details={"error_type": "alphabet_mismatch", "left": list(left), "right": list(right)},
        )


class NotRegularError(SchreierLabError):
    """Raised when a multigraph is not k-regular."""

    def __init__(self, k: int, vertex: int, degree: int):
        super().__init__(
            message=f"Multigraph is not {k}-regular: vertex {vertex} has degree {degree}",
            details={"error_type": "not_regular", "k": k, "vertex": vertex, "degree": degree},
        )


class NotSymmetricError(SchreierLabError):
    """Raised when directed labeled edges cannot be paired with reverse edges."""

    def __init__(self, u: int, v: int):
        super().__init__(
            message=f"Directed edges between {u} and {v} cannot be paired",
            details={"error_type": "not_symmetric", "u": u, "v": v},
        )


class MatchingFailureError(SchreierLabError):
    """Raised when a regular bipartite double has no perfect matching."""

    def __init__(self, remaining_degree: int):
        super().__init__(
            message=f"No perfect matching found with {remaining_degree} matchings left",
            exit_code=EXIT_PROPERTY_FAILED,
            details={"error_type": "matching_failure", "remaining_degree": remaining_degree},
        )


# Subgroups and groups

class NotTransitiveError(SchreierLabError):
    """Raised when an action that must be transitive has several orbits."""

    def __init__(self, orbit_size: int, n: int):
        super().__init__(
            message=f"Action is not transitive: orbit of size {orbit_size} in {n} points",
            details={"error_type": "not_transitive", "orbit_size": orbit_size, "n": n},
        )


class WordNotInSubgroupError(SchreierLabError):
    """Raised when a generator word moves the subgroup's basepoint."""

    def __init__(self, word: str, image: int):
        super().__init__(
            message=f"Word {word} moves the basepoint to {image}",
            details={"error_type": "word_not_in_subgroup", "word": word, "image": image},
        )


class OutOfRangeError(SchreierLabError):
    """Raised when an element or vertex index is out of range."""

    def __init__(self, value: int, size: int):
        super().__init__(
            message=f"Index {value} is out of range for size {size}",
            details={"error_type": "out_of_range", "value": value, "size": size},
        )


class NotRegularActionError(SchreierLabError):
    """Raised when a group fixture is not a regular (Cayley) action."""

    def __init__(self, word: str):
        super().__init__(
            message=f"Action is not regular: stabilizer element {word} acts non-trivially",
            details={"error_type": "not_regular_action", "word": word},
        )


# Spectral and enumeration guards

class SizeGuardError(SchreierLabError):
    """Raised when an exhaustive computation would exceed its size guard."""

    def __init__(self, operation: str, size: int, limit: int):
        super().__init__(
            message=f"{operation}: size {size} exceeds the exhaustive limit {limit}",
            details={"error_type": "size_guard", "operation": operation, "size": size, "limit": limit},
        )


class DisconnectedGraphError(SchreierLabError):
    """Raised when an operation needs a connected graph."""

    def __init__(self, components: int):
        super().__init__(
            message=f"Graph is disconnected ({components} components)",
            details={"error_type": "disconnected", "components": components},
        )


class DomainNotInvariantError(SchreierLabError):
    """Raised when a word moves a vertex out of the expansion domain."""

    def __init__(self, word: str, vertex: int):
        super().__init__(
            message=f"Word {word} maps domain vertex {vertex} outside the domain",
            details={"error_type": "domain_not_invariant", "word": word, "vertex": vertex},
        )


# Covers

class NotSurjectiveError(SchreierLabError):
    """Raised when a candidate covering map misses a base edge."""

    def __init__(self, vertex: int, letter: Optional[str] = None):
        what = f"edge ({vertex}, {letter})" if letter is not None else f"vertex {vertex}"
        super().__init__(
            message=f"Projection is not surjective: base {what} has no preimage",
            details={"error_type": "not_surjective", "vertex": vertex, "letter": letter},
        )


class EigenMatchError(SchreierLabError):
    """Raised when a base eigenvalue has no partner in the cover spectrum."""

    def __init__(self, eigenvalue: float, tolerance: float):
        super().__init__(
            message=f"Base eigenvalue {eigenvalue:.9f} not found in the cover within {tolerance}",
            exit_code=EXIT_PROPERTY_FAILED,
            details={"error_type": "eigen_match", "eigenvalue": eigenvalue, "tolerance": tolerance},
        )


class BaseMismatchError(SchreierLabError):
    """Raised when two covering maps do not share their base graph."""

    def __init__(self):
        super().__init__(
            message="Covering maps have different base graphs",
            details={"error_type": "base_mismatch"},
        )


class FiberMismatchError(SchreierLabError):
    """Raised when gluing points do not lie over the same base vertex."""

    def __init__(self, p1: int, p2: int, b1: int, b2: int):
        super().__init__(
            message=f"Vertices {p1} and {p2} project to {b1} and {b2}",
            details={"error_type": "fiber_mismatch", "p1": p1, "p2": p2, "b1": b1, "b2": b2},
        )


class GirthTooSmallError(SchreierLabError):
    """Raised when a gluing input has girth at most 2."""

    def __init__(self, girth):
        super().__init__(
            message=f"Gluing needs girth > 2, got {girth}",
            details={"error_type": "girth_too_small", "girth": girth},
        )


class RetriesExhaustedError(SchreierLabError):
    """Raised when a sampling loop runs out of retries."""

    def __init__(self, operation: str, max_tries: int):
        super().__init__(
            message=f"{operation}: no acceptable sample within {max_tries} tries",
            exit_code=EXIT_PROPERTY_FAILED,
            details={"error_type": "retries_exhausted", "operation": operation, "max_tries": max_tries},
        )


class CapExceededError(SchreierLabError):
    """Raised when a construction would exceed its vertex cap."""

    def __init__(self, needed: int, cap: int):
        super().__init__(
            message=f"Construction needs {needed} vertices, cap is {cap}",
            details={"error_type": "cap_exceeded", "needed": needed, "cap": cap},
        )


# Constructions

class IndexCapExceededError(SchreierLabError):
    """Raised when an intersection chain exceeds its index cap."""

    def __init__(self, index: int, cap: int):
        super().__init__(
            message=f"Intersection index {index} exceeds cap {cap}",
            details={"error_type": "index_cap_exceeded", "index": index, "cap": cap},
        )


class TooSmallError(SchreierLabError):
    """Raised when a base action is too small for a construction."""

    def __init__(self, n: int, minimum: int):
        super().__init__(
            message=f"Base action has {n} points, need at least {minimum}",
            details={"error_type": "too_small", "n": n, "minimum": minimum},
        )


class NotPrimeError(SchreierLabError):
    """Raised when a modulus is not an admissible prime."""

    def __init__(self, p: int):
        super().__init__(
            message=f"{p} is not a prime >= 5",
            details={"error_type": "not_prime", "p": p},
        )


# File formats and configuration

class ParseError(SchreierLabError):
    """Raised when a graph or config file cannot be parsed."""

    def __init__(self, line: int, reason: str):
        super().__init__(
            message=f"Parse error at line {line}: {reason}",
            details={"error_type": "parse_error", "line": line, "reason": reason},
        )


class ConfigError(SchreierLabError):
    """Raised when an experiment configuration is invalid."""

    def __init__(self, reason: str):
        super().__init__(
            message=f"Invalid configuration: {reason}",
            details={"error_type": "config_error"},
        )


class InvariantViolation(SchreierLabError):
    """Raised when an asserted mathematical property fails."""

    def __init__(self, check: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(
            message=f"Property check failed: {check}",
            exit_code=EXIT_PROPERTY_FAILED,
            details={"error_type": "invariant_violation", "check": check, **(details or {})},
        )
