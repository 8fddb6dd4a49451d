"""Exterior powers with canonical sign normalization.

Degree-n alternating elements are stored directly on the strictly
increasing word basis; `wedge_canon` folds the sorting sign into the
coefficient and kills words with a repeated letter.  Signs are computed
by counting inversions, which works in every characteristic.
"""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Iterator, Mapping

from . import linalg
from .fields import Scalar
from .tensor import (Space, TensorElement, Word, _SparseElement,
                     _normalized_terms, check_word, coeff_to_json)


def wedge_canon(letters: Word) -> tuple[int, Word] | None:
    """Sort `letters`; return (sign, sorted word) or None when a letter repeats.

    >>> wedge_canon((2, 1))
    (-1, (1, 2))
    >>> wedge_canon((1, 1)) is None
    True
    >>> wedge_canon((3, 1, 2))
    (1, (1, 2, 3))
    """
    letters = tuple(letters)
    inversions = 0
    for i in range(len(letters)):
        for j in range(i + 1, len(letters)):
            if letters[i] == letters[j]:
                return None
            if letters[i] > letters[j]:
                inversions += 1
    return (-1 if inversions & 1 else 1), tuple(sorted(letters))


class ExtElement(_SparseElement):
    """Homogeneous alternating element on strictly increasing words."""


def ext_element(space: Space, degree: int, terms: Mapping[Word, Scalar]) -> ExtElement:
    checked = {}
    for w, c in terms.items():
        w = check_word(space, w)
        if len(w) != degree:
            raise ValueError(f"word {w} does not have degree {degree}")
        if any(w[i] >= w[i + 1] for i in range(len(w) - 1)):
            raise ValueError(f"word {w} is not strictly increasing")
        checked[w] = c
    return ExtElement(space, degree, _normalized_terms(space.field, checked))


def wedge_word_element(space: Space, letters: Word, coeff: Scalar = 1) -> ExtElement:
    """Canonicalize arbitrary letters into a basis multiple (or zero)."""
    canon = wedge_canon(check_word(space, letters))
    if canon is None:
        return ExtElement(space, len(tuple(letters)), {})
    sign, w = canon
    c = space.field.coerce(coeff)
    if sign < 0:
        c = space.field.neg(c)
    return ext_element(space, len(w), {w: c})


def all_wedge_words(m: int, n: int) -> Iterator[Word]:
    """Strictly increasing length-n words over {1..m}, lexicographically."""
    return combinations(range(1, m + 1), n)


def dim_wedge(m: int, n: int) -> int:
    """
    >>> dim_wedge(3, 2), dim_wedge(2, 3), dim_wedge(4, 2)
    (3, 0, 6)
    """
    if m < 0 or n < 0:
        raise ValueError("m, n must be >= 0")
    return comb(m, n)


def wedge_to_tensor(a: ExtElement) -> TensorElement:
    """Degree-2 embedding sending u ^ v to u (x) v - v (x) u."""
    if a.degree != 2:
        raise ValueError(f"expected degree 2, got {a.degree}")
    f = a.space.field
    out: dict = {}
    for (i, j), c in a.terms.items():
        for w, v in (((i, j), c), ((j, i), f.neg(c))):
            s = f.add(out[w], v) if w in out else v
            if s:
                out[w] = s
            else:
                out.pop(w, None)
    return TensorElement(a.space, 2, out)


def wedge_to_tensor_matrix(space: Space) -> linalg.Matrix:
    """Matrix of the degree-2 embedding: rows = wedge pairs (lex order),
    columns = length-2 words (lex order)."""
    m = space.dim
    field = space.field
    word_index = {(i, j): (i - 1) * m + (j - 1)
                  for i in range(1, m + 1) for j in range(1, m + 1)}
    rows = []
    for (i, j) in all_wedge_words(m, 2):
        row = [field.zero] * (m * m)
        row[word_index[(i, j)]] = field.one
        row[word_index[(j, i)]] = field.neg(field.one)
        rows.append(tuple(row))
    return linalg.Matrix(field, m * m, tuple(rows))


def element_to_json(a: ExtElement) -> dict:
    f = a.space.field
    return {
        "degree": a.degree,
        "wedge": True,
        "terms": [{"word": list(w), "coeff": coeff_to_json(f, c)}
                  for w, c in a.sorted_terms()],
    }


def element_from_json(space: Space, doc: Mapping) -> ExtElement:
    terms = {tuple(t["word"]): space.field.parse(str(t["coeff"])) for t in doc["terms"]}
    return ext_element(space, doc["degree"], terms)
