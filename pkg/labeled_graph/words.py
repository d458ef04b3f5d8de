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
Alphabets and words of the free group F_S.

Letters are referred to by index into an Alphabet; a Word is a tuple of
(letter index, sign) pairs with sign +1 for a letter and -1 for its formal
inverse. Formal inverses never appear as alphabet entries.
"""

from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple, Union

from core.errors import ParseError

INVERSE_SUFFIX = "^-1"
IDENTITY = "e"


@dataclass(frozen=True)
class Alphabet:
    """
    Ordered set of letter names.

    Attributes:
        letters: Distinct names, at least one.
    """

    letters: Tuple[str, ...]

    def __post_init__(self):
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))
        if not self.letters:
            raise ValueError("Alphabet needs at least one letter")
        if len(set(self.letters)) != len(self.letters):
            raise ValueError(f"Alphabet letters must be unique: {list(self.letters)}")
        for name in self.letters:
            if not name or name == IDENTITY or name.endswith(INVERSE_SUFFIX) or "*" in name:
                raise ValueError(f"Invalid letter name: '{name}'")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)

    def index(self, letter: Union[str, int]) -> int:
        """Resolve a letter name (or pass through a valid index)."""
        if isinstance(letter, int):
            if not 0 <= letter < len(self.letters):
                raise ValueError(f"Letter index {letter} out of range for {len(self.letters)} letters")
            return letter
        try:
            return self.letters.index(letter)
        except ValueError:
            raise ValueError(f"Unknown letter '{letter}' (alphabet: {list(self.letters)})") from None

    @classmethod
    def standard(cls, k: int, prefix: str = "s") -> "Alphabet":
        """Alphabet s1..sk."""
        return cls(tuple(f"{prefix}{i + 1}" for i in range(k)))


@dataclass(frozen=True)
class Word:
    """
    Element of the free group written as a sequence of signed letters.

    The empty word is the identity. Words are not reduced automatically;
    call reduce() for the freely reduced form.
    """

    syllables: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        if not isinstance(self.syllables, tuple):
            object.__setattr__(self, "syllables", tuple(tuple(s) for s in self.syllables))
        for index, sign in self.syllables:
            if index < 0 or sign not in (1, -1):
                raise ValueError(f"Invalid syllable ({index}, {sign})")

    @classmethod
    def letter(cls, index: int, sign: int = 1) -> "Word":
        return cls(((index, sign),))

    def __len__(self) -> int:
        return len(self.syllables)

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.syllables)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.syllables + other.syllables)

    def inverse(self) -> "Word":
        return Word(tuple((index, -sign) for index, sign in reversed(self.syllables)))

    def reduce(self) -> "Word":
        """Cancel adjacent x x^-1 pairs until none remain."""
        stack = []
        for syllable in self.syllables:
            if stack and stack[-1][0] == syllable[0] and stack[-1][1] == -syllable[1]:
                stack.pop()
            else:
                stack.append(syllable)
        return Word(tuple(stack))

    @property
    def is_identity(self) -> bool:
        return not self.syllables

    def max_letter(self) -> int:
        return max((index for index, _ in self.syllables), default=-1)

    def format(self, alphabet: Alphabet) -> str:
        """Render as 'x1*t^-1'; the identity renders as 'e'."""
        if not self.syllables:
            return IDENTITY
        parts = []
        for index, sign in self.syllables:
            name = alphabet.letters[index]
            parts.append(name if sign == 1 else f"{name}{INVERSE_SUFFIX}")
        return "*".join(parts)


def power(word: Word, exponent: int) -> Word:
    """word^exponent; negative exponents use the inverse."""
    base = word if exponent >= 0 else word.inverse()
    return Word(base.syllables * abs(exponent))


def parse_word(text: str, alphabet: Alphabet) -> Word:
    """
    Parse the format produced by Word.format.

    Accepts 'e' or '' for the identity and '*'-separated letters, each
    optionally suffixed with '^-1'.
    """
    text = text.strip()
    if text in ("", IDENTITY):
        return Word()
    syllables = []
    for token in text.split("*"):
        token = token.strip()
        sign = 1
        if token.endswith(INVERSE_SUFFIX):
            token = token[: -len(INVERSE_SUFFIX)]
            sign = -1
        if token not in alphabet.letters:
            raise ParseError(1, f"unknown letter '{token}' in word '{text}'")
        syllables.append((alphabet.letters.index(token), sign))
    return Word(tuple(syllables))


def words_from_letters(alphabet: Alphabet, names: Sequence[str] = ()) -> Tuple[Word, ...]:
    """One single-letter word per name (all letters when names is empty)."""
    chosen = names or alphabet.letters
    return tuple(Word.letter(alphabet.index(name)) for name in chosen)
