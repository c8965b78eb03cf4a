"""
Symmetric group combinatorics in one-line notation.

A permutation of {1, ..., n} is a tuple `w` with `w[i-1] == w(i)`. The group
law is composition, ``compose(u, v)(i) == u(v(i))``; multiplying by the
adjacent transposition `s_i` on the right swaps positions i, i+1 of the
one-line word, while multiplying on the left swaps the values i, i+1.

Conjugacy classes are indexed by modified cycle types: the cycle type with
every nontrivial cycle length reduced by one and the fixed points dropped.
A partition `lam` labels a nonempty class of S_n exactly when
``sum(lam) + len(lam) <= n``.

>>> compose((2, 1, 3), (1, 3, 2))
(2, 3, 1)
>>> length((2, 3, 1))
2
>>> modified_cycle_type((2, 3, 1))
(2,)
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import EmptyClassError, InvalidInputError

__all__ = [
    "Perm", "Partition",
    "identity", "is_permutation", "compose", "inverse", "length",
    "right_gen", "left_gen", "reduced_word", "from_word", "transposition",
    "modified_cycle_type", "fits_rank", "class_representative",
    "conjugacy_class", "minimal_length_elements", "min_rep",
    "partitions_of", "partitions_up_to", "check_partition",
]

# one-line notation, 1-based values
Perm = tuple[int, ...]

# weakly decreasing positive parts; () is the empty partition
Partition = tuple[int, ...]


def identity(n: int) -> Perm:
    """
    >>> identity(3)
    (1, 2, 3)
    """
    return tuple(range(1, n + 1))


def is_permutation(word: Sequence[int]) -> bool:
    """
    >>> [is_permutation(w) for w in [(), (1, 2), (2, 2), (3, 1, 2)]]
    [True, True, False, True]
    """
    return sorted(word) == list(range(1, len(word) + 1))


def compose(u: Perm, v: Perm) -> Perm:
    """
    Product u*v under the convention (u*v)(i) = u(v(i)).

    >>> compose((2, 1, 3), (2, 1, 3))
    (1, 2, 3)
    """
    if len(u) != len(v):
        raise InvalidInputError(f"rank mismatch: {len(u)} vs {len(v)}")
    return tuple(u[x - 1] for x in v)


def inverse(w: Perm) -> Perm:
    """
    >>> inverse((2, 3, 1))
    (3, 1, 2)
    """
    out = [0] * len(w)
    for i, x in enumerate(w):
        out[x - 1] = i + 1
    return tuple(out)


@lru_cache(maxsize=None)
def length(w: Perm) -> int:
    """
    Coxeter length: the number of inversions of the one-line word.

    >>> length((3, 2, 1))
    3
    """
    n = len(w)
    total = 0
    for a in range(n):
        wa = w[a]
        for b in range(a + 1, n):
            if wa > w[b]:
                total += 1
    return total


def right_gen(w: Perm, i: int) -> Perm:
    """w * s_i: swap positions i, i+1 of the one-line word."""
    if not 1 <= i <= len(w) - 1:
        raise InvalidInputError(f"generator index {i} out of range for n={len(w)}")
    return w[: i - 1] + (w[i], w[i - 1]) + w[i + 1 :]


def left_gen(w: Perm, i: int) -> Perm:
    """s_i * w: swap the values i, i+1 in the one-line word."""
    if not 1 <= i <= len(w) - 1:
        raise InvalidInputError(f"generator index {i} out of range for n={len(w)}")
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)


@lru_cache(maxsize=None)
def reduced_word(w: Perm) -> tuple[int, ...]:
    """
    Canonical reduced word for w, as generator indices read left to right.

    Repeatedly strips the smallest descent on the right, so the emitted word
    recomposes to w via ``from_word`` and has exactly ``length(w)`` letters.

    >>> reduced_word((2, 1, 3))
    (1,)
    >>> from_word(3, reduced_word((2, 3, 1))) == (2, 3, 1)
    True
    """
    cur = list(w)
    n = len(w)
    out: list[int] = []
    while True:
        for i in range(n - 1):
            if cur[i] > cur[i + 1]:
                cur[i], cur[i + 1] = cur[i + 1], cur[i]
                out.append(i + 1)
                break
        else:
            break
    out.reverse()
    return tuple(out)


def from_word(n: int, word: Iterable[int]) -> Perm:
    """Compose the generators named by `word` left to right in S_n."""
    w = identity(n)
    for i in word:
        w = right_gen(w, i)
    return w


def transposition(n: int, i: int, j: int) -> Perm:
    """The transposition (i j) as an element of S_n."""
    if not (1 <= i <= n and 1 <= j <= n and i != j):
        raise InvalidInputError(f"bad transposition ({i} {j}) for n={n}")
    out = list(range(1, n + 1))
    out[i - 1], out[j - 1] = out[j - 1], out[i - 1]
    return tuple(out)


def modified_cycle_type(w: Perm) -> Partition:
    """
    Cycle type with each nontrivial cycle length reduced by one.

    >>> modified_cycle_type((1, 2, 3))
    ()
    >>> modified_cycle_type((2, 1, 4, 3))
    (1, 1)
    """
    seen = [False] * len(w)
    parts = []
    for start in range(len(w)):
        if seen[start]:
            continue
        clen = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = w[j] - 1
            clen += 1
        if clen > 1:
            parts.append(clen - 1)
    parts.sort(reverse=True)
    return tuple(parts)


def check_partition(parts: Sequence[int]) -> Partition:
    """Validate weakly decreasing positive parts; return as a tuple."""
    lam = tuple(parts)
    if any(p < 1 for p in lam):
        raise InvalidInputError(f"partition parts must be positive: {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise InvalidInputError(f"parts must be weakly decreasing: {lam}")
    return lam


def fits_rank(lam: Partition, n: int) -> bool:
    """Whether the class of modified type lam is nonempty in S_n."""
    return sum(lam) + len(lam) <= n


def class_representative(lam: Partition, n: int) -> Perm:
    """One element of modified type lam, built from consecutive cycles."""
    lam = check_partition(lam)
    if not fits_rank(lam, n):
        raise EmptyClassError(f"no class of modified type {lam} in S_{n}")
    out = list(range(1, n + 1))
    pos = 1
    for part in lam:
        # cycle (pos, pos+1, ..., pos+part)
        for i in range(pos, pos + part):
            out[i - 1] = i + 1
        out[pos + part - 1] = pos
        pos += part + 1
    return tuple(out)


@lru_cache(maxsize=None)
def conjugacy_class(lam: Partition, n: int) -> frozenset[Perm]:
    """
    All w in S_n of modified type lam, by closing one representative under
    conjugation by the adjacent transpositions.

    >>> sorted(conjugacy_class((1,), 3))
    [(1, 3, 2), (2, 1, 3), (3, 2, 1)]
    """
    rep = class_representative(lam, n)
    seen = {rep}
    queue = deque([rep])
    while queue:
        w = queue.popleft()
        for i in range(1, n):
            c = left_gen(right_gen(w, i), i)
            if c not in seen:
                seen.add(c)
                queue.append(c)
    return frozenset(seen)


@lru_cache(maxsize=None)
def minimal_length_elements(lam: Partition, n: int) -> frozenset[Perm]:
    """The elements of minimal Coxeter length within the class of lam."""
    cls = conjugacy_class(lam, n)
    best = min(length(w) for w in cls)
    return frozenset(w for w in cls if length(w) == best)


@lru_cache(maxsize=None)
def min_rep(lam: Partition, n: int) -> Perm:
    """
    Canonical class representative: the lexicographically least one-line
    word among the minimal length elements.

    >>> min_rep((1,), 3)
    (1, 3, 2)
    >>> min_rep((2,), 3)
    (2, 3, 1)
    """
    return min(minimal_length_elements(lam, n))


def _partitions_rec(total: int, max_part: int) -> Iterable[Partition]:
    if total == 0:
        yield ()
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in _partitions_rec(total - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partitions_of(k: int) -> tuple[Partition, ...]:
    """
    Partitions of k in reverse lexicographic order, (k) first.

    >>> partitions_of(4)
    ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    """
    if k < 0:
        raise InvalidInputError("k must be nonnegative")
    return tuple(_partitions_rec(k, k)) if k else ((),)


@lru_cache(maxsize=None)
def partitions_up_to(k: int) -> tuple[Partition, ...]:
    """
    All partitions of size at most k: size ascending, reverse
    lexicographic within a size.

    >>> partitions_up_to(2)
    ((), (1,), (2,), (1, 1))
    """
    if k < 0:
        raise InvalidInputError("k must be nonnegative")
    out: list[Partition] = []
    for size in range(k + 1):
        out.extend(partitions_of(size))
    return tuple(out)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
