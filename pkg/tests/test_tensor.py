import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tensorseq import linalg, perms, tensor
from tensorseq.fields import GF, QQ


def elements(space, degree):
    coeffs = st.integers(-6, 6)
    words = st.tuples(*[st.integers(1, space.dim)] * degree)
    return st.dictionaries(words, coeffs, max_size=4).map(
        lambda terms: tensor.tensor_element(space, degree, terms))


def rand_element(rng, space, degree, nterms=3):
    terms = {}
    for _ in range(nterms):
        w = tuple(rng.randint(1, space.dim) for _ in range(degree))
        c = Fraction(rng.randint(-5, 5), rng.randint(1, 4)) if space.field.char == 0 \
            else rng.randint(0, space.field.char - 1)
        terms[w] = space.field.add(terms.get(w, space.field.zero), space.field.coerce(c))
    return tensor.tensor_element(space, degree, terms)


def test_product_is_concatenation():
    sp = tensor.Space(2, QQ)
    a = tensor.word_element(sp, (1,))
    b = tensor.word_element(sp, (2,))
    assert tensor.tensor_product(a, b).terms == {(1, 2): Fraction(1)}


def test_product_bilinear():
    sp = tensor.Space(2, QQ)
    a = tensor.word_element(sp, (1,)) + tensor.word_element(sp, (2,))
    b = tensor.word_element(sp, (1,))
    assert tensor.tensor_product(a, b).terms == {(1, 1): Fraction(1), (2, 1): Fraction(1)}


def test_empty_word_is_unit():
    sp = tensor.Space(2, QQ)
    one = tensor.word_element(sp, ())
    a = tensor.word_element(sp, (2, 1), Fraction(3, 2))
    assert tensor.tensor_product(one, a) == a
    assert tensor.tensor_product(a, one) == a


def test_commutator_examples():
    sp = tensor.Space(2, QQ)
    v1, v2 = tensor.word_element(sp, (1,)), tensor.word_element(sp, (2,))
    c = tensor.commutator(v1, v2)
    assert c.terms == {(1, 2): Fraction(1), (2, 1): Fraction(-1)}
    assert tensor.commutator(v1, v1).is_zero()
    sp2 = tensor.Space(2, GF(2))
    c2 = tensor.commutator(tensor.word_element(sp2, (1,)), tensor.word_element(sp2, (2,)))
    assert c2.terms == {(1, 2): 1, (2, 1): 1}


def test_space_mismatch_rejected():
    a = tensor.word_element(tensor.Space(2, QQ), (1,))
    b = tensor.word_element(tensor.Space(3, QQ), (1,))
    c = tensor.word_element(tensor.Space(2, GF(2)), (1,))
    for other in (b, c):
        with pytest.raises(ValueError):
            tensor.tensor_product(a, other)


def test_perm_action_examples():
    sp = tensor.Space(3, QQ)
    w = tensor.word_element(sp, (1, 2, 3))
    assert tensor.perm_action(perms.adjacent_transposition(3, 1), w).terms == \
        {(2, 1, 3): Fraction(1)}
    assert tensor.perm_action(perms.identity_perm(3), w) == w
    cyc = (2, 3, 1)
    assert tensor.perm_action(perms.inverse(cyc), tensor.perm_action(cyc, w)) == w
    with pytest.raises(ValueError):
        tensor.perm_action(perms.identity_perm(2), w)


def test_perm_action_group_property():
    rng = random.Random(5)
    sp = tensor.Space(3, QQ)
    for _ in range(50):
        n = rng.randint(1, 5)
        s = tuple(rng.sample(range(1, n + 1), n))
        t = tuple(rng.sample(range(1, n + 1), n))
        a = rand_element(rng, sp, n)
        assert tensor.perm_action(perms.compose(s, t), a) == \
            tensor.perm_action(s, tensor.perm_action(t, a))


def test_symmetrize_examples():
    sp = tensor.Space(3, QQ)
    assert tensor.symmetrize(tensor.word_element(sp, (2, 1, 3))).terms == \
        {(1, 2, 3): Fraction(1)}
    v1, v2 = tensor.word_element(sp, (1,)), tensor.word_element(sp, (2,))
    assert tensor.symmetrize(tensor.commutator(v1, v2)).is_zero()
    assert tensor.symmetrize(tensor.word_element(sp, (1, 1))).terms == \
        {(1, 1): Fraction(1)}


def test_symmetrize_is_algebra_morphism():
    rng = random.Random(6)
    for field in (QQ, GF(3)):
        sp = tensor.Space(3, field)
        for _ in range(30):
            a = rand_element(rng, sp, rng.randint(0, 3))
            b = rand_element(rng, sp, rng.randint(0, 3))
            lhs = tensor.symmetrize(tensor.tensor_product(a, b))
            rhs = tensor.sym_product(tensor.symmetrize(a), tensor.symmetrize(b))
            assert lhs == rhs


def test_symmetrize_permutation_invariant():
    rng = random.Random(7)
    sp = tensor.Space(3, QQ)
    for _ in range(30):
        n = rng.randint(1, 5)
        t = tuple(rng.sample(range(1, n + 1), n))
        a = rand_element(rng, sp, n)
        assert tensor.symmetrize(tensor.perm_action(t, a)) == tensor.symmetrize(a)


_SP2 = tensor.Space(2, QQ)


@given(elements(_SP2, 1), elements(_SP2, 2), elements(_SP2, 1))
def test_product_associative(a, b, c):
    assert tensor.tensor_product(tensor.tensor_product(a, b), c) == \
        tensor.tensor_product(a, tensor.tensor_product(b, c))


@given(elements(_SP2, 1), elements(_SP2, 1), elements(_SP2, 2))
def test_product_distributes_over_sum(a, b, c):
    assert tensor.tensor_product(a + b, c) == \
        tensor.tensor_product(a, c) + tensor.tensor_product(b, c)


def test_dims():
    assert tensor.dim_tensor(2, 3) == 8
    assert tensor.dim_sym(2, 3) == 4
    assert tensor.dim_sym(3, 3) == 10
    assert tensor.dim_tensor(0, 0) == 1 and tensor.dim_sym(0, 0) == 1
    assert tensor.dim_sym(0, 2) == 0
    with pytest.raises(ValueError):
        tensor.dim_sym(-1, 2)


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("n", [0, 1])
def test_projection_bijective_in_low_degree(m, n):
    mat = tensor.symmetrize_matrix(tensor.Space(m, QQ), n)
    assert mat.nrows == mat.ncols == tensor.dim_tensor(m, n)
    assert linalg.rank(mat) == mat.ncols


@pytest.mark.parametrize("m,n", [(2, 2), (2, 3), (3, 3), (3, 4)])
def test_projection_surjective(m, n):
    for field in (QQ, GF(2)):
        mat = tensor.symmetrize_matrix(tensor.Space(m, field), n)
        assert linalg.rank(mat) == tensor.dim_sym(m, n)


def test_degree_mismatch_rejected():
    sp = tensor.Space(2, QQ)
    with pytest.raises(ValueError):
        tensor.word_element(sp, (1,)) + tensor.word_element(sp, (1, 2))
    with pytest.raises(ValueError):
        tensor.tensor_element(sp, 2, {(1,): 1})


def test_letter_range_checked():
    sp = tensor.Space(2, QQ)
    with pytest.raises(ValueError):
        tensor.word_element(sp, (1, 3))
    with pytest.raises(ValueError):
        tensor.word_element(sp, (0,))


def test_json_roundtrip():
    sp = tensor.Space(3, QQ)
    a = tensor.tensor_element(sp, 2, {(1, 2): Fraction(-1, 3), (3, 3): 2})
    doc = tensor.element_to_json(a)
    assert doc["terms"][0]["coeff"] == "-1/3"
    assert tensor.element_from_json(sp, doc) == a
    sp2 = tensor.Space(3, GF(5))
    b = tensor.tensor_element(sp2, 2, {(1, 2): 3})
    assert tensor.element_from_json(sp2, tensor.element_to_json(b)) == b
