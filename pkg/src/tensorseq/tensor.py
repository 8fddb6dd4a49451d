"""The graded tensor algebra on an ordered basis, and its symmetric quotient.

Degree-n tensors are sparse maps from length-n words over the basis
index set {1..m} to scalars; symmetric elements use weakly increasing
words (monomials).  `symmetrize` is the degreewise projection sending a
word to its sorted monomial; its kernel is the two-sided ideal generated
by the commutators uv - vu.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _iproduct
from math import comb
from typing import Iterator, Mapping

from . import linalg, perms
from .fields import Field, Scalar

Word = tuple


@dataclass(frozen=True)
class Space:
    """An m-dimensional base space with a totally ordered basis 1..m."""

    dim: int
    field: Field

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("dimension must be >= 0")


def check_word(space: Space, word: Word) -> Word:
    word = tuple(word)
    for x in word:
        if not 1 <= x <= space.dim:
            raise ValueError(f"letter {x} out of range 1..{space.dim}")
    return word


def all_words(m: int, n: int) -> Iterator[Word]:
    """All length-n words over {1..m} in lexicographic order."""
    return _iproduct(range(1, m + 1), repeat=n)


def all_monomials(m: int, n: int) -> Iterator[Word]:
    """All weakly increasing length-n words, lexicographically."""
    return (w for w in all_words(m, n) if all(w[i] <= w[i + 1] for i in range(n - 1)))


class _SparseElement:
    """Shared sparse-term behavior; subclasses fix the key validation."""

    __slots__ = ("space", "degree", "terms")

    def __init__(self, space: Space, degree: int, terms: Mapping):
        self.space = space
        self.degree = degree
        self.terms = dict(terms)

    def _like(self, terms) -> "_SparseElement":
        return type(self)(self.space, self.degree, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (type(other) is type(self) and other.space == self.space
                and other.degree == self.degree and other.terms == self.terms)

    def __add__(self, other):
        _check_compatible(self, other)
        f = self.space.field
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = f.add(out.get(k, f.zero), c)
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return self._like(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        neg = self.space.field.neg
        return self._like({k: neg(c) for k, c in self.terms.items()})

    def scale(self, c):
        f = self.space.field
        c = f.coerce(c)
        if not c:
            return self._like({})
        mul = f.mul
        return self._like({k: mul(c, v) for k, v in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        f = self.space.field
        return " + ".join(f"{f.fmt(c)}*{k}" for k, c in self.sorted_terms())


def _check_compatible(a: _SparseElement, b: _SparseElement) -> None:
    if a.space != b.space:
        raise ValueError("elements live over different spaces")
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} != {b.degree}")


class TensorElement(_SparseElement):
    """Homogeneous element of the degree-n tensor component."""


class SymElement(_SparseElement):
    """Homogeneous element of the degree-n symmetric component."""


def _normalized_terms(field: Field, terms: Mapping) -> dict:
    out = {}
    for k, c in terms.items():
        c = field.coerce(c)
        if c:
            out[k] = c
    return out


def tensor_element(space: Space, degree: int, terms: Mapping[Word, Scalar]) -> TensorElement:
    checked = {check_word(space, w): c for w, c in terms.items()}
    for w in checked:
        if len(w) != degree:
            raise ValueError(f"word {w} does not have degree {degree}")
    return TensorElement(space, degree, _normalized_terms(space.field, checked))


def word_element(space: Space, word: Word, coeff: Scalar = 1) -> TensorElement:
    word = check_word(space, word)
    return tensor_element(space, len(word), {word: coeff})


def sym_element(space: Space, degree: int, terms: Mapping[Word, Scalar]) -> SymElement:
    checked = {}
    for w, c in terms.items():
        w = check_word(space, w)
        if len(w) != degree:
            raise ValueError(f"monomial {w} does not have degree {degree}")
        if any(w[i] > w[i + 1] for i in range(len(w) - 1)):
            raise ValueError(f"monomial {w} is not weakly increasing")
        checked[w] = c
    return SymElement(space, degree, _normalized_terms(space.field, checked))


def tensor_product(a: TensorElement, b: TensorElement) -> TensorElement:
    """Bilinear product; on words it is concatenation."""
    if a.space != b.space:
        raise ValueError("elements live over different spaces")
    mul = a.space.field.mul
    add = a.space.field.add
    out: dict = {}
    for wa, ca in a.terms.items():
        for wb, cb in b.terms.items():
            w = wa + wb
            s = add(out.get(w, 0), mul(ca, cb)) if w in out else mul(ca, cb)
            if s:
                out[w] = s
            else:
                out.pop(w, None)
    return TensorElement(a.space, a.degree + b.degree, out)


def commutator(a: TensorElement, b: TensorElement) -> TensorElement:
    """a (x) b - b (x) a."""
    return tensor_product(a, b) - tensor_product(b, a)


def perm_action(t: perms.Perm, a: TensorElement) -> TensorElement:
    """Left action permuting tensor positions: out[t(k)] = in[k] per word."""
    if len(t) != a.degree:
        raise ValueError(f"permutation size {len(t)} != degree {a.degree}")
    add = a.space.field.add
    out: dict = {}
    for w, c in a.terms.items():
        w2 = perms.apply_to_positions(t, w)
        if w2 in out:
            s = add(out[w2], c)
            if s:
                out[w2] = s
            else:
                del out[w2]
        else:
            out[w2] = c
    return TensorElement(a.space, a.degree, out)


def symmetrize(a: TensorElement) -> SymElement:
    """Project a tensor onto the symmetric component: sort each word."""
    add = a.space.field.add
    out: dict = {}
    for w, c in a.terms.items():
        mono = tuple(sorted(w))
        if mono in out:
            s = add(out[mono], c)
            if s:
                out[mono] = s
            else:
                del out[mono]
        else:
            out[mono] = c
    return SymElement(a.space, a.degree, out)


def sym_product(a: SymElement, b: SymElement) -> SymElement:
    """Commutative product: merge the monomials."""
    if a.space != b.space:
        raise ValueError("elements live over different spaces")
    mul = a.space.field.mul
    add = a.space.field.add
    out: dict = {}
    for wa, ca in a.terms.items():
        for wb, cb in b.terms.items():
            w = tuple(sorted(wa + wb))
            s = add(out.get(w, 0), mul(ca, cb)) if w in out else mul(ca, cb)
            if s:
                out[w] = s
            else:
                out.pop(w, None)
    return SymElement(a.space, a.degree + b.degree, out)


def dim_tensor(m: int, n: int) -> int:
    """m**n words of length n.

    >>> dim_tensor(2, 3)
    8
    """
    if m < 0 or n < 0:
        raise ValueError("m, n must be >= 0")
    return m ** n


def dim_sym(m: int, n: int) -> int:
    """Weakly increasing words: C(m+n-1, n).

    >>> dim_sym(2, 3), dim_sym(3, 3)
    (4, 10)
    """
    if m < 0 or n < 0:
        raise ValueError("m, n must be >= 0")
    if n == 0:
        return 1
    if m == 0:
        return 0
    return comb(m + n - 1, n)


def symmetrize_matrix(space: Space, n: int) -> linalg.Matrix:
    """Matrix of the degree-n projection, one row per word (lex order),
    columns indexed by monomials (lex order)."""
    mono_index = {w: j for j, w in enumerate(all_monomials(space.dim, n))}
    field = space.field
    one = field.one
    zero = field.zero
    rows = []
    width = len(mono_index)
    for w in all_words(space.dim, n):
        row = [zero] * width
        row[mono_index[tuple(sorted(w))]] = one
        rows.append(tuple(row))
    return linalg.Matrix(field, width, tuple(rows))


def coeff_to_json(field: Field, c) -> str | int:
    """Rationals serialize as 'p/q' strings, prime-field values as ints."""
    if field.char == 0:
        return field.fmt(c)
    return int(c)


def element_to_json(a: TensorElement) -> dict:
    f = a.space.field
    return {
        "degree": a.degree,
        "terms": [{"word": list(w), "coeff": coeff_to_json(f, c)}
                  for w, c in a.sorted_terms()],
    }


def element_from_json(space: Space, doc: Mapping) -> TensorElement:
    terms = {tuple(t["word"]): space.field.parse(str(t["coeff"])) for t in doc["terms"]}
    return tensor_element(space, doc["degree"], terms)
