"""Words of the free semigroup on x_1..x_d, multidegrees and the order on them.

A word is a tuple of 1-based letter indices, a multidegree is a tuple of
non-negative per-letter counts.  Words of equal multidegree have equal length,
so plain tuple comparison realizes the lexicographic order "first differing
letter decides"; words of different multidegree are never compared.
"""

from __future__ import annotations

import math
from itertools import permutations

Word = tuple[int, ...]
Multidegree = tuple[int, ...]


def mdeg(w: Word, d: int) -> Multidegree:
    """Multidegree of ``w`` over the alphabet x_1..x_d."""
    counts = [0] * d
    for letter in w:
        if not 1 <= letter <= d:
            raise ValueError(f"letter {letter} out of range 1..{d}")
        counts[letter - 1] += 1
    return tuple(counts)


def norm(delta: Multidegree) -> int:
    return sum(delta)


def compare(u: Word, v: Word) -> int:
    """-1 / 0 / +1 for u < v / u = v / u > v.  Requires equal multidegrees."""
    if sorted(u) != sorted(v):
        raise ValueError("words of different multidegree are incomparable")
    return (u > v) - (u < v)


def enumerate_words(delta: Multidegree):
    """All words of multidegree ``delta`` in ascending lexicographic order.

    Iterative next-permutation on the letter multiset; the count is the
    multinomial |delta|! / prod(delta_i!).
    """
    if norm(delta) < 1:
        raise ValueError("empty multidegree has no words")
    if any(e < 0 for e in delta):
        raise ValueError("negative multidegree entry")
    current = []
    for i, e in enumerate(delta, start=1):
        current.extend([i] * e)
    n = len(current)
    while True:
        yield tuple(current)
        # next lexicographic permutation
        k = n - 2
        while k >= 0 and current[k] >= current[k + 1]:
            k -= 1
        if k < 0:
            return
        j = n - 1
        while current[j] <= current[k]:
            j -= 1
        current[k], current[j] = current[j], current[k]
        current[k + 1:] = reversed(current[k + 1:])


def count_words(delta: Multidegree) -> int:
    """Multinomial count of words of multidegree ``delta``."""
    total = math.factorial(norm(delta))
    for e in delta:
        total //= math.factorial(e)
    return total


def occurrences(w: Word, letter: int) -> list[int]:
    return [pos for pos, l in enumerate(w) if l == letter]


def is_canonical(w: Word, letter: int) -> bool:
    """Whether the occurrences of ``letter`` in ``w`` match a canonical shape.

    Allowed shapes: absent, single, an adjacent square, or an adjacent square
    followed by one more occurrence with a non-empty gap.
    """
    pos = occurrences(w, letter)
    k = len(pos)
    if k <= 1:
        return True
    if k == 2:
        return pos[1] == pos[0] + 1
    if k == 3:
        return pos[1] == pos[0] + 1 and pos[2] > pos[1] + 1
    return False


def is_canonical_word(w: Word) -> bool:
    return all(is_canonical(w, letter) for letter in set(w))


def is_even_permutation_word(w: Word) -> bool:
    """Parity of the multilinear word w = x_{s(1)}...x_{s(d)}; True iff s even."""
    d = len(w)
    if sorted(w) != list(range(1, d + 1)):
        raise ValueError("parity is defined for multilinear words only")
    inversions = sum(
        1 for i in range(d) for j in range(i + 1, d) if w[i] > w[j]
    )
    return inversions % 2 == 0


def multilinear(d: int) -> Multidegree:
    return (1,) * d


def all_multilinear_words(d: int):
    return (tuple(p) for p in permutations(range(1, d + 1)))


def relabel(w: Word, mapping) -> Word:
    """Apply a letter substitution given as a dict or callable."""
    if callable(mapping):
        return tuple(mapping(l) for l in w)
    return tuple(mapping[l] for l in w)
