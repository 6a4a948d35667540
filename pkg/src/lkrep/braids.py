"""Braid words in the Artin generators, their algebra, and distinguished elements.

A braid on n strands is a word in the generators sigma_1 .. sigma_{n-1}.
Words are kept verbatim: no free reduction or normal form is ever applied,
since representation evaluation is insensitive to it.  The text format is
whitespace-separated signed integers, e.g. "1 -2 1" for
sigma_1 sigma_2^{-1} sigma_1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass


@dataclass(frozen=True)
class BraidWord:
    """A word in B_n: strand count plus an ordered tuple of (index, sign)."""

    strands: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("strand count must be positive")
        for idx, sign in self.letters:
            if not 1 <= idx <= self.strands - 1:
                raise ValueError(
                    f"letter index {idx} out of range 1..{self.strands - 1}"
                )
            if sign not in (1, -1):
                raise ValueError(f"letter sign must be +-1, got {sign}")

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(str(idx * sign) for idx, sign in self.letters)

    @property
    def is_identity(self) -> bool:
        return not self.letters


def parse_braid(text: str, strands: int) -> BraidWord:
    """Parse whitespace-separated signed generator indices.

    Token k > 0 means sigma_k, k < 0 means sigma_{|k|}^{-1}.  The empty
    string is the identity braid.
    """
    letters = []
    for token in text.split():
        try:
            k = int(token)
        except ValueError:
            raise ValueError(f"invalid braid token {token!r}: not an integer") from None
        if k == 0:
            raise ValueError("invalid braid token '0': generator indices start at 1")
        idx = abs(k)
        if idx > strands - 1:
            raise ValueError(
                f"invalid braid token {token!r}: index {idx} >= strand count {strands}"
            )
        letters.append((idx, 1 if k > 0 else -1))
    return BraidWord(strands, tuple(letters))


def compose(a: BraidWord, b: BraidWord) -> BraidWord:
    """Concatenation a then b; strand counts must agree."""
    if a.strands != b.strands:
        raise ValueError(f"strand count mismatch: {a.strands} != {b.strands}")
    return BraidWord(a.strands, a.letters + b.letters)


def invert(a: BraidWord) -> BraidWord:
    """Group inverse: reverse the word and flip every sign."""
    return BraidWord(a.strands, tuple((idx, -sign) for idx, sign in reversed(a.letters)))


def exponent_sum(a: BraidWord) -> int:
    """Image under the homomorphism B_n -> Z sending every generator to 1."""
    return sum(sign for _, sign in a.letters)


def full_twist(n: int, k: int) -> BraidWord:
    """(sigma_1 ... sigma_{k-1})^k in B_n: the full twist of the first k strands.

    For k = n this is the square of the half twist, which generates the
    center of B_n.
    """
    if not 2 <= k <= n:
        raise ValueError(f"full twist needs 2 <= k <= n, got k={k}, n={n}")
    block = tuple((i, 1) for i in range(1, k))
    return BraidWord(n, block * k)


def include(a: BraidWord, target_strands: int, offset: int = 0) -> BraidWord:
    """Include B_m into B_n by shifting every generator index by `offset`.

    Offset 0 realizes the standard inclusion on the first strands.
    """
    if offset < 0:
        raise ValueError("offset must be non-negative")
    if offset + a.strands > target_strands:
        raise ValueError(
            f"cannot include {a.strands} strands at offset {offset} "
            f"into {target_strands} strands"
        )
    return BraidWord(
        target_strands, tuple((idx + offset, sign) for idx, sign in a.letters)
    )


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}, stored as the tuple of images (1-based)."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int) -> "Permutation":
        """The adjacent transposition (i, i+1) in S_n."""
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(tuple(images))

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self . other)(x) = self(other(x))."""
        return Permutation(tuple(self(other(x)) for x in range(1, len(self.images) + 1)))

    def inverse(self) -> "Permutation":
        images = [0] * len(self.images)
        for x, y in enumerate(self.images, start=1):
            images[y - 1] = x
        return Permutation(tuple(images))

    def fixed_points(self) -> int:
        return sum(1 for x, y in enumerate(self.images, start=1) if x == y)

    @property
    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.images, start=1))


def permutation_of(a: BraidWord) -> Permutation:
    """Underlying permutation: each letter maps to (i, i+1), signs ignored.

    The composition convention matches matrix products of the
    representations: the first letter of the word acts outermost.
    """
    p = Permutation.identity(a.strands)
    for idx, _ in a.letters:
        p = p.compose(Permutation.transposition(a.strands, idx))
    return p


def random_word(strands: int, length: int, rng: random.Random) -> BraidWord:
    """Uniform word of the given length over the signed generators."""
    if strands < 2:
        raise ValueError("need at least 2 strands to draw letters")
    letters = tuple(
        (rng.randint(1, strands - 1), rng.choice((1, -1))) for _ in range(length)
    )
    return BraidWord(strands, letters)
