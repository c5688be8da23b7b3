"""Words, permutations and labels: the value types shared by every module.

All positions and values are 1-based at the interface level.  Words are
immutable; algorithms that mutate entries work on private copies.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterator

#: Largest n for which exhaustive word streams run by default (n**n words).
DEFAULT_WORD_CAP = 7


class BudgetError(ValueError):
    """Raised when an operation would exceed a configured size cap."""


@dataclass(frozen=True)
class Word:
    """An n-tuple whose entries all lie in [1, n]."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        n = len(self.values)
        if n == 0:
            raise ValueError("a word needs at least one entry")
        for v in self.values:
            if not isinstance(v, int) or not 1 <= v <= n:
                raise ValueError(f"word entry {v!r} outside [1, {n}]")

    @property
    def n(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> int:
        """1-based entry access: word[1] is the first entry."""
        if not 1 <= i <= self.n:
            raise IndexError(f"position {i} outside [1, {self.n}]")
        return self.values[i - 1]

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __str__(self) -> str:
        return self.compact() or ",".join(map(str, self.values))

    def compact(self) -> str | None:
        """Digit-string form such as "4213"; defined only for n <= 9."""
        if self.n <= 9:
            return "".join(map(str, self.values))
        return None

    def to_json(self) -> list[int]:
        return list(self.values)

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Parse a JSON array, a comma-separated list, or a digit string (n <= 9)."""
        text = text.strip()
        if text.startswith("["):
            return cls(tuple(int(v) for v in json.loads(text)))
        if "," in text:
            return cls(tuple(int(part) for part in text.split(",")))
        if text.isdigit():
            if len(text) > 9:
                raise ValueError("digit-string input is only accepted for n <= 9")
            return cls(tuple(int(ch) for ch in text))
        raise ValueError(f"cannot parse a word from {text!r}")


@dataclass(frozen=True)
class Permutation:
    """A bijection on [n]; images[i-1] is the image of i."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "images", tuple(self.images))
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"{self.images!r} is not a bijection on [1, {n}]")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """(self.compose(other))(i) = self(other(i))."""
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, image in enumerate(self.images, start=1):
            inv[image - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(image == i for i, image in enumerate(self.images, start=1))


@dataclass(frozen=True)
class Label:
    """A vector of positive integers attached to a region.

    Labels of the arrangements handled here happen to stay within [1, n];
    that stronger property is checked by the verification harness rather
    than assumed by the type.
    """

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        if not self.entries:
            raise ValueError("a label needs at least one entry")
        for v in self.entries:
            if not isinstance(v, int) or v < 1:
                raise ValueError(f"label entry {v!r} is not a positive integer")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        if self.n <= 9 and max(self.entries) <= 9:
            return "".join(map(str, self.entries))
        return ",".join(map(str, self.entries))

    def to_json(self) -> list[int]:
        return list(self.entries)


def compose(a: Word, w: Permutation) -> Word:
    """Rearrange a by w: entry i of the result is a[w(i)]."""
    if a.n != w.n:
        raise ValueError(f"dimension mismatch: word n={a.n}, permutation n={w.n}")
    vals = a.values
    return Word(tuple(vals[j - 1] for j in w.images))


def all_words(n: int, cap: int = DEFAULT_WORD_CAP) -> Iterator[Word]:
    """Yield all n**n words over [1, n] in lexicographic order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > cap:
        raise BudgetError(f"all_words(n={n}) exceeds the cap of {cap} ({n}**{n} words)")
    for vals in itertools.product(range(1, n + 1), repeat=n):
        yield Word(vals)
