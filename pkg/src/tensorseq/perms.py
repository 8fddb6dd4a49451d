"""Permutations of {1..n} in one-line notation.

A permutation is a tuple `t` with `t[k-1] = t(k)`.  Composition is
function composition, `(s * t)(k) = s(t(k))`, and permutations act on
letter tuples by moving the letter at position k to position t(k).
"""

from __future__ import annotations

from itertools import permutations as _itertools_perms
from typing import Iterator, Sequence

Perm = tuple

# adjacent-transposition factorizations; index i swaps positions i, i+1
Word = tuple


def is_perm(t: Sequence[int]) -> bool:
    """
    >>> is_perm((2, 1, 3)), is_perm((1, 1, 2))
    (True, False)
    """
    return sorted(t) == list(range(1, len(t) + 1))


def identity_perm(n: int) -> Perm:
    return tuple(range(1, n + 1))


def adjacent_transposition(n: int, i: int) -> Perm:
    """The transposition swapping i and i+1, for 1 <= i <= n-1."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"transposition index {i} out of range for n={n}")
    t = list(range(1, n + 1))
    t[i - 1], t[i] = t[i], t[i - 1]
    return tuple(t)


def compose(s: Perm, t: Perm) -> Perm:
    """Function composition s . t (t applied first).

    >>> compose((2, 1, 3), (1, 3, 2))
    (2, 3, 1)
    """
    if len(s) != len(t):
        raise ValueError("size mismatch")
    return tuple(s[t[k] - 1] for k in range(len(t)))


def inverse(t: Perm) -> Perm:
    out = [0] * len(t)
    for k, v in enumerate(t):
        out[v - 1] = k + 1
    return tuple(out)


def apply_to_positions(t: Perm, letters: Sequence) -> tuple:
    """Move the entry at position k to position t(k): out[t(k)] = in[k].

    Equivalently out[h] = in[t^{-1}(h)], so this is a left action:
    applying s after t agrees with applying `compose(s, t)`.

    >>> apply_to_positions((2, 1, 3), (7, 8, 9))
    (8, 7, 9)
    """
    if len(t) != len(letters):
        raise ValueError("size mismatch")
    out = [None] * len(t)
    for k, v in enumerate(t):
        out[v - 1] = letters[k]
    return tuple(out)


def parity(t: Perm) -> int:
    """0 for even permutations, 1 for odd ones."""
    seen = [False] * len(t)
    odd = 0
    for k in range(len(t)):
        if seen[k]:
            continue
        length = 0
        pos = k
        while not seen[pos]:
            seen[pos] = True
            pos = t[pos] - 1
            length += 1
        odd ^= (length - 1) & 1
    return odd


def all_perms(n: int) -> Iterator[Perm]:
    return _itertools_perms(range(1, n + 1))


def alternating_perms(n: int) -> Iterator[Perm]:
    return (t for t in all_perms(n) if parity(t) == 0)


def compose_word(n: int, word: Sequence[int]) -> Perm:
    """The permutation of a transposition word, first letter applied first."""
    t = identity_perm(n)
    for i in word:
        t = compose(adjacent_transposition(n, i), t)
    return t


def perm_word(t: Perm) -> Word:
    """Factor t into adjacent transpositions with a bubble-sort network.

    Sorting the one-line form records swaps i_1, ..., i_s in order, and
    then t = tau_{i_s} ... tau_{i_1} with tau_{i_1} applied first.  The
    word is reduced: its length is the inversion count, at most n(n-1)/2.

    >>> perm_word((1, 2, 3))
    ()
    >>> perm_word((2, 1, 3))
    (1,)
    >>> perm_word((2, 3, 1))
    (2, 1)
    """
    a = list(t)
    n = len(a)
    word = []
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            if a[i] > a[i + 1]:
                a[i], a[i + 1] = a[i + 1], a[i]
                word.append(i + 1)
                changed = True
    return tuple(word)


def perm_word_alt(t: Perm) -> Word:
    """A second factorization, via a selection network: bubble the largest
    misplaced value into place, largest target position first.  Differs
    from `perm_word` on most permutations; used to cross-check results
    that must not depend on the factorization.
    """
    a = list(t)
    n = len(a)
    word = []
    for target in range(n - 1, 0, -1):
        pos = a.index(target + 1)
        for i in range(pos, target):
            a[i], a[i + 1] = a[i + 1], a[i]
            word.append(i + 1)
    return tuple(word)
