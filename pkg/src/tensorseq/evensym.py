"""The quotient of the tensor algebra by cyclic three-letter shifts.

Dividing the tensor algebra by the two-sided ideal generated by
xyz - yzx identifies two degree-n words exactly when one is an even
permutation of the other.  A word with a repeated letter is then
equivalent to every permutation of itself, while a word with distinct
letters belongs to one of two classes: the sorted word ("plain") or the
sorted word with its first two letters swapped ("twisted").  Elements
are stored directly on these orbit representatives; sorting a word and
counting inversions computes its class in O(n log n), with no linear
algebra.  `verify_relation_span` rebuilds the quotient the slow way, in
tensor coordinates, and certifies that the shortcut matches.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Mapping

from . import perms
from .certificates import Certificate, CheckResult
from .errors import SizeCapError
from .exterior import ExtElement, all_wedge_words, dim_wedge
from .fields import Scalar
from .linalg import Matrix, echelon_rows, kernel_basis, residue_list, transpose
from .tensor import (Space, SymElement, Word, _SparseElement, all_monomials,
                     all_words, check_word, coeff_to_json, dim_sym, dim_tensor)

DEFAULT_SIZE_CAP = 20_000


@dataclass(frozen=True, order=True)
class OrbitWord:
    """A basis class: a weakly increasing word, twisted or plain.

    The twisted class exists only for strictly increasing words of
    length at least 2; it is the orbit of the sorted word with its
    first two letters swapped.
    """

    word: Word
    twisted: bool = False

    def __post_init__(self):
        if self.twisted:
            if len(self.word) < 2:
                raise ValueError("twisted classes need degree >= 2")
            if any(self.word[i] >= self.word[i + 1] for i in range(len(self.word) - 1)):
                raise ValueError(f"twisted word {self.word} must be strictly increasing")
        else:
            if any(self.word[i] > self.word[i + 1] for i in range(len(self.word) - 1)):
                raise ValueError(f"word {self.word} must be weakly increasing")

    @property
    def degree(self) -> int:
        return len(self.word)


def _inversions(word: Word) -> int:
    count = 0
    for i in range(len(word)):
        for j in range(i + 1, len(word)):
            if word[i] > word[j]:
                count += 1
    return count


def normal_form(word: Word) -> OrbitWord:
    """The class of a word: sort it; a repeated letter always gives the
    plain class, otherwise the parity of the sort decides the flag.
    Coefficients never pick up signs here.

    >>> normal_form((2, 1, 3))
    OrbitWord(word=(1, 2, 3), twisted=True)
    >>> normal_form((1, 1, 2))
    OrbitWord(word=(1, 1, 2), twisted=False)
    """
    word = tuple(word)
    sorted_word = tuple(sorted(word))
    if len(set(word)) < len(word):
        return OrbitWord(sorted_word, False)
    return OrbitWord(sorted_word, _inversions(word) & 1 == 1)


def representative(e: OrbitWord) -> Word:
    """A word in the class: the sorted word, with its first two letters
    swapped for twisted classes.  Round-trips through `normal_form`.

    >>> representative(OrbitWord((1, 2, 3), True))
    (2, 1, 3)
    """
    if e.twisted:
        w = e.word
        return (w[1], w[0]) + w[2:]
    return e.word


class EvenSymElement(_SparseElement):
    """Homogeneous element on the orbit-word basis."""


def orbit_element(space: Space, degree: int,
                  terms: Mapping[OrbitWord, Scalar]) -> EvenSymElement:
    checked = {}
    for k, c in terms.items():
        check_word(space, k.word)
        if k.degree != degree:
            raise ValueError(f"class {k} does not have degree {degree}")
        checked[k] = c
    out = {}
    for k, c in checked.items():
        c = space.field.coerce(c)
        if c:
            out[k] = c
    return EvenSymElement(space, degree, out)


def from_word(space: Space, word: Word, coeff: Scalar = 1) -> EvenSymElement:
    word = check_word(space, word)
    return orbit_element(space, len(word), {normal_form(word): coeff})


def swap_first_two(a: EvenSymElement) -> EvenSymElement:
    """The involution swapping the first two factors: toggles the flag
    of distinct-letter classes, fixes classes with a repeat."""
    if a.degree < 2:
        raise ValueError(f"need degree >= 2, got {a.degree}")
    out = {}
    for k, c in a.terms.items():
        if len(set(k.word)) == len(k.word):
            k = OrbitWord(k.word, not k.twisted)
        out[k] = c
    return EvenSymElement(a.space, a.degree, out)


def evensym_product(a: EvenSymElement, b: EvenSymElement) -> EvenSymElement:
    """Concatenate representatives, then renormalize.  Associative, with
    the empty word as unit; independent of the representative choice."""
    if a.space != b.space:
        raise ValueError("elements live over different spaces")
    f = a.space.field
    out: dict = {}
    for ka, ca in a.terms.items():
        ra = representative(ka)
        for kb, cb in b.terms.items():
            k = normal_form(ra + representative(kb))
            v = f.mul(ca, cb)
            s = f.add(out[k], v) if k in out else v
            if s:
                out[k] = s
            else:
                del out[k]
    return EvenSymElement(a.space, a.degree + b.degree, out)


def to_sym(a: EvenSymElement) -> SymElement:
    """Forget the flag; an algebra morphism onto the symmetric part."""
    f = a.space.field
    out: dict = {}
    for k, c in a.terms.items():
        w = k.word
        s = f.add(out[w], c) if w in out else c
        if s:
            out[w] = s
        else:
            del out[w]
    return SymElement(a.space, a.degree, out)


def wedge_embed(a: ExtElement) -> EvenSymElement:
    """Embed a degree-n alternating element (n >= 2): a strictly
    increasing word maps to (plain class) - (twisted class)."""
    if a.degree < 2:
        raise ValueError(f"need degree >= 2, got {a.degree}")
    f = a.space.field
    out: dict = {}
    for w, c in a.terms.items():
        out[OrbitWord(w, False)] = c
        out[OrbitWord(w, True)] = f.neg(c)
    return EvenSymElement(a.space, a.degree, out)


def dim_evensym(m: int, n: int) -> int:
    """Plain classes count weakly increasing words; twisted classes count
    strictly increasing words and need degree >= 2.

    >>> dim_evensym(3, 3), dim_evensym(2, 3), dim_evensym(3, 2)
    (11, 4, 9)
    """
    return dim_sym(m, n) + (dim_wedge(m, n) if n >= 2 else 0)


def basis_words(m: int, n: int) -> list[OrbitWord]:
    """Canonical basis order: plain classes lexicographically, then
    twisted classes lexicographically."""
    out = [OrbitWord(w, False) for w in all_monomials(m, n)]
    if n >= 2:
        out.extend(OrbitWord(w, True) for w in all_wedge_words(m, n))
    return out


def _basis_index(m: int, n: int) -> dict:
    return {k: i for i, k in enumerate(basis_words(m, n))}


def to_sym_matrix(space: Space, n: int) -> Matrix:
    """Rows = basis classes (canonical order), columns = monomials."""
    field = space.field
    mono_index = {w: j for j, w in enumerate(all_monomials(space.dim, n))}
    width = len(mono_index)
    rows = []
    for k in basis_words(space.dim, n):
        row = [field.zero] * width
        row[mono_index[k.word]] = field.one
        rows.append(tuple(row))
    return Matrix(field, width, tuple(rows))


def wedge_embed_matrix(space: Space, n: int) -> Matrix:
    """Rows = strictly increasing words, columns = basis classes."""
    if n < 2:
        raise ValueError("need degree >= 2")
    field = space.field
    index = _basis_index(space.dim, n)
    width = len(index)
    rows = []
    for w in all_wedge_words(space.dim, n):
        row = [field.zero] * width
        row[index[OrbitWord(w, False)]] = field.one
        row[index[OrbitWord(w, True)]] = field.neg(field.one)
        rows.append(tuple(row))
    return Matrix(field, width, tuple(rows))


def normal_form_matrix(space: Space, n: int) -> Matrix:
    """Matrix of word -> class on the tensor basis: rows = words (lex),
    columns = basis classes."""
    field = space.field
    index = _basis_index(space.dim, n)
    width = len(index)
    rows = []
    for w in all_words(space.dim, n):
        row = [field.zero] * width
        row[index[normal_form(w)]] = field.one
        rows.append(tuple(row))
    return Matrix(field, width, tuple(rows))


def cyclic_ideal_rows(space: Space, n: int) -> list[list]:
    """Degree-n span of the defining ideal, in tensor coordinates: all
    two-sided word translates of xyz - yzx over basis letters."""
    m = space.dim
    field = space.field
    word_index = {w: i for i, w in enumerate(all_words(m, n))}
    width = len(word_index)
    rows = []
    if n < 3:
        return rows
    one, neg_one = field.one, field.neg(field.one)
    for p in range(n - 2):
        q = n - 3 - p
        for left in all_words(m, p):
            for right in all_words(m, q):
                for x in range(1, m + 1):
                    for y in range(1, m + 1):
                        for z in range(1, m + 1):
                            w1 = left + (x, y, z) + right
                            w2 = left + (y, z, x) + right
                            if w1 == w2:
                                continue
                            row = [field.zero] * width
                            row[word_index[w1]] = one
                            row[word_index[w2]] = neg_one
                            rows.append(row)
    return rows


def even_orbit_rows(space: Space, n: int) -> list[list]:
    """Span of w - (even permutation of w) over all words, in tensor
    coordinates."""
    m = space.dim
    field = space.field
    word_index = {w: i for i, w in enumerate(all_words(m, n))}
    width = len(word_index)
    one, neg_one = field.one, field.neg(field.one)
    rows = []
    evens = [s for s in perms.alternating_perms(n) if s != perms.identity_perm(n)]
    for w in all_words(m, n):
        for s in evens:
            w2 = perms.apply_to_positions(s, w)
            if w2 == w:
                continue
            row = [field.zero] * width
            row[word_index[w]] = one
            row[word_index[w2]] = neg_one
            rows.append(row)
    return rows


def _contained(field, rows, pivots, vectors) -> bool:
    for v in vectors:
        if any(residue_list(field, list(v), rows, pivots)):
            return False
    return True


def verify_relation_span(space: Space, n: int, size_cap: int | None = None) -> Certificate:
    """Certify that the defining ideal, the even-orbit span, and the
    kernel of the normal-form shortcut all agree in degree n."""
    start = time.perf_counter()
    m = space.dim
    field = space.field
    cap = DEFAULT_SIZE_CAP if size_cap is None else size_cap
    t_dim = dim_tensor(m, n)
    if t_dim > cap:
        raise SizeCapError(t_dim, cap, "tensor dimension")
    q_dim = dim_evensym(m, n)

    ideal_rows, ideal_piv = echelon_rows(field, cyclic_ideal_rows(space, n))
    orbit_rows, orbit_piv = echelon_rows(field, even_orbit_rows(space, n))
    nf_kernel = kernel_basis(transpose(normal_form_matrix(space, n)))
    nf_rows, nf_piv = echelon_rows(field, [list(v) for v in nf_kernel])

    checks = []
    same_io = (_contained(field, ideal_rows, ideal_piv, orbit_rows)
               and _contained(field, orbit_rows, orbit_piv, ideal_rows))
    checks.append(CheckResult(
        "ideal_equals_orbit_span", same_io,
        f"ideal rank {len(ideal_rows)}, orbit rank {len(orbit_rows)}"))
    same_nf = (_contained(field, ideal_rows, ideal_piv, nf_rows)
               and _contained(field, nf_rows, nf_piv, ideal_rows))
    checks.append(CheckResult(
        "normal_form_kernel_matches", same_nf,
        f"normal-form kernel rank {len(nf_rows)}, ideal rank {len(ideal_rows)}"))
    checks.append(CheckResult(
        "corank_matches_basis", len(ideal_rows) == t_dim - q_dim,
        f"rank {len(ideal_rows)}, tensor dim {t_dim}, basis size {q_dim}"))

    elapsed = (time.perf_counter() - start) * 1000.0
    return Certificate(
        sequence="S'-relations", m=m, n=n, field_name=field.name,
        dims={"t_dim": t_dim, "sprime_dim": q_dim, "relation_rank": len(ideal_rows)},
        checks=tuple(checks), elapsed_ms=round(elapsed, 3))


def verify_sequence(space: Space, n: int, size_cap: int | None = None) -> Certificate:
    """Certify degree-n exactness of wedge -> quotient -> symmetric:
    the wedge embedding is injective, its image is exactly the kernel of
    the flag-forgetting projection, that projection is onto, and the
    dimensions add up."""
    if n < 2:
        raise ValueError(f"degree must be >= 2, got {n}")
    start = time.perf_counter()
    m = space.dim
    field = space.field
    cap = DEFAULT_SIZE_CAP if size_cap is None else size_cap
    q_dim = dim_evensym(m, n)
    if q_dim > cap:
        raise SizeCapError(q_dim, cap, "basis size")
    lam_dim = dim_wedge(m, n)
    s_dim = dim_sym(m, n)

    checks = []

    emb_rows, emb_piv = echelon_rows(field, [list(r) for r in wedge_embed_matrix(space, n).rows])
    checks.append(CheckResult(
        "injective_rank", len(emb_rows) == lam_dim,
        f"rank of wedge embedding = {len(emb_rows)}, wedge dim = {lam_dim}"))

    sym_m = to_sym_matrix(space, n)
    sym_rows, _ = echelon_rows(field, [list(r) for r in sym_m.rows])
    checks.append(CheckResult(
        "surjective_rank", len(sym_rows) == s_dim,
        f"rank of projection = {len(sym_rows)}, symmetric dim = {s_dim}"))

    ker = kernel_basis(transpose(sym_m))
    ker_rows, ker_piv = echelon_rows(field, [list(v) for v in ker])
    img_in_ker = _contained(field, ker_rows, ker_piv, emb_rows)
    ker_in_img = _contained(field, emb_rows, emb_piv, ker_rows)
    checks.append(CheckResult(
        "image_equals_kernel", img_in_ker and ker_in_img,
        f"image rank {len(emb_rows)}, kernel rank {len(ker_rows)}, "
        f"image<=kernel {img_in_ker}, kernel<=image {ker_in_img}"))

    checks.append(CheckResult(
        "dimension_identity", q_dim == s_dim + lam_dim,
        f"basis size {q_dim}, symmetric dim {s_dim}, wedge dim {lam_dim}"))

    elapsed = (time.perf_counter() - start) * 1000.0
    return Certificate(
        sequence="Lambda->S'->S", m=m, n=n, field_name=field.name,
        dims={"lambda_dim": lam_dim, "sprime_dim": q_dim, "s_dim": s_dim},
        checks=tuple(checks), elapsed_ms=round(elapsed, 3))


def element_to_json(a: EvenSymElement) -> dict:
    f = a.space.field
    return {
        "degree": a.degree,
        "terms": [{"word": list(k.word), "twisted": k.twisted,
                   "coeff": coeff_to_json(f, c)}
                  for k, c in a.sorted_terms()],
    }


def element_from_json(space: Space, doc: Mapping) -> EvenSymElement:
    terms = {
        OrbitWord(tuple(t["word"]), bool(t["twisted"])): space.field.parse(str(t["coeff"]))
        for t in doc["terms"]
    }
    return orbit_element(space, doc["degree"], terms)
