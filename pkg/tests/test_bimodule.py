import random
from fractions import Fraction
from itertools import product

import pytest

from tensorseq import bimodule, linalg, perms, tensor
from tensorseq.errors import SizeCapError
from tensorseq.fields import GF, QQ


def test_ambient_dim():
    assert bimodule.ambient_dim(2, 3) == 4
    assert bimodule.ambient_dim(3, 3) == 18
    assert bimodule.ambient_dim(2, 2) == 1
    assert bimodule.ambient_dim(3, 1) == 0 and bimodule.ambient_dim(3, 0) == 0
    for m, n in [(2, 2), (2, 3), (3, 3), (3, 4), (4, 3)]:
        assert len(bimodule.all_bimod_terms(m, n)) == bimodule.ambient_dim(m, n)


def test_bimod_element_validation():
    sp = tensor.Space(3, QQ)
    with pytest.raises(ValueError):
        bimodule.bimod_element(sp, 3, {((1,), (2, 1), ()): 1})
    with pytest.raises(ValueError):
        bimodule.bimod_element(sp, 3, {((1,), (1, 4), ()): 1})
    with pytest.raises(ValueError):
        bimodule.bimod_element(sp, 4, {((1,), (1, 2), ()): 1})


def test_bimodule_mult_examples():
    sp = tensor.Space(2, QQ)
    x = bimodule.bimod_element(sp, 2, {((), (1, 2), ()): 1})
    one = tensor.word_element(sp, ())
    assert bimodule.bimodule_mult(one, x, one) == x
    v1 = tensor.word_element(sp, (1,))
    v2 = tensor.word_element(sp, (2,))
    prod = bimodule.bimodule_mult(v1, x, v2)
    assert prod.terms == {((1,), (1, 2), (2,)): Fraction(1)}
    lin = bimodule.bimodule_mult(v1 + v2, x, one)
    assert lin.terms == {((1,), (1, 2), ()): Fraction(1), ((2,), (1, 2), ()): Fraction(1)}


def test_generators_expand_to_zero_all_instantiations():
    """Both relation families land in the kernel of the expansion, for
    every basis instantiation including repeated letters."""
    for field in (QQ, GF(2), GF(3)):
        sp = tensor.Space(3, field)
        for x, y, z in product(range(1, 4), repeat=3):
            assert bimodule.expand_wedge(bimodule.jacobi_cycle(sp, x, y, z)).is_zero()
        for x, y, z, t in product(range(1, 4), repeat=4):
            for mid in [(), (2,), (1, 3)]:
                g = bimodule.commutator_transfer(sp, x, y, mid, z, t)
                assert bimodule.expand_wedge(g).is_zero()


def _full_relation_rows(space, n):
    """Naive spanning family: cores over all index tuples, not just the
    ordered ones the library enumerates."""
    m = space.dim
    rows = []
    cores = []
    if n >= 3:
        cores += [bimodule.jacobi_cycle(space, x, y, z)
                  for x, y, z in product(range(1, m + 1), repeat=3)]
    for k in range(n - 3):
        for x, y, z, t in product(range(1, m + 1), repeat=4):
            for mid in tensor.all_words(m, k):
                cores.append(bimodule.commutator_transfer(space, x, y, mid, z, t))
    index = {term: i for i, term in enumerate(bimodule.all_bimod_terms(m, n))}
    for core in cores:
        if core.is_zero():
            continue
        for g in bimodule._two_sided_closure(space, core, n):
            vec = [space.field.zero] * len(index)
            for key, c in g.terms.items():
                vec[index[key]] = c
            rows.append(vec)
    return rows


@pytest.mark.parametrize("field", [QQ, GF(2)])
@pytest.mark.parametrize("m,n", [(2, 3), (3, 3), (2, 4), (3, 4), (2, 5), (3, 5)])
def test_reduced_generators_span_the_full_family(m, n, field):
    """Oracle for the ordered-tuple enumeration: its span equals the span
    of all basis instantiations, also in characteristic 2 where signs
    degenerate."""
    sp = tensor.Space(m, field)
    ctx = bimodule.build_context(sp, n)
    full, piv = linalg.echelon_rows(field, _full_relation_rows(sp, n))
    assert len(full) == ctx.rel_rank
    full_m = linalg.matrix(field, full, ncols=ctx.ambient_dim)
    red_m = linalg.matrix(field, [list(r) for r in ctx.rel_rows], ncols=ctx.ambient_dim)
    assert linalg.mutual_residues_vanish(full_m, red_m)


def test_context_ranks_and_dims(ctx_cache):
    assert ctx_cache(2, 3).rel_rank == 0
    assert ctx_cache(3, 3).rel_rank == 1
    assert ctx_cache(3, 3).quotient_dim == 17 == 27 - 10
    c22 = ctx_cache(2, 2)
    assert c22.rel_rank == 0 and c22.quotient_dim == 1


def test_build_context_rejects_low_degree_and_cap():
    sp = tensor.Space(3, QQ)
    with pytest.raises(ValueError):
        bimodule.build_context(sp, 1)
    with pytest.raises(SizeCapError):
        bimodule.build_context(sp, 4, size_cap=10)


def test_normal_form_examples(ctx_cache):
    c33 = ctx_cache(3, 3)
    sp3 = c33.space
    for g in bimodule.relation_generators(sp3, 3):
        assert not any(bimodule.normal_form(c33, g))
    assert not any(bimodule.normal_form(c33, bimodule.jacobi_cycle(sp3, 1, 2, 3)))
    c23 = ctx_cache(2, 3)
    single = bimodule.bimod_element(c23.space, 3, {((1,), (1, 2), ()): 1})
    vec = bimodule.normal_form(c23, single)
    assert bimodule.element_of(c23, vec) == single


def test_normal_form_degree_mismatch(ctx_cache):
    c23 = ctx_cache(2, 3)
    wrong = bimodule.bimod_element(c23.space, 2, {((), (1, 2), ()): 1})
    with pytest.raises(ValueError):
        bimodule.normal_form(c23, wrong)


def test_normal_form_separates_classes(ctx_cache):
    """Equal residues exactly when the difference lies in the span."""
    ctx = ctx_cache(3, 3)
    sp = ctx.space
    x = bimodule.bimod_element(sp, 3, {((1,), (2, 3), ()): 1})
    jac = bimodule.jacobi_cycle(sp, 1, 2, 3)
    assert bimodule.normal_form(ctx, x) == bimodule.normal_form(ctx, x + jac)
    y = bimodule.bimod_element(sp, 3, {((2,), (1, 3), ()): 1})
    assert bimodule.normal_form(ctx, x) != bimodule.normal_form(ctx, y)


def test_expand_wedge_example():
    sp = tensor.Space(2, QQ)
    x = bimodule.bimod_element(sp, 2, {((), (1, 2), ()): 1})
    assert bimodule.expand_wedge(x).terms == {(1, 2): Fraction(1), (2, 1): Fraction(-1)}


def test_wedge_at_examples():
    sp = tensor.Space(3, QQ)
    f1 = bimodule.wedge_at(tensor.word_element(sp, (1, 2, 3)), 1)
    assert f1.terms == {((), (1, 2), (3,)): Fraction(1)}
    assert bimodule.wedge_at(tensor.word_element(sp, (1, 1, 2)), 1).is_zero()
    f2 = bimodule.wedge_at(tensor.word_element(sp, (1, 3, 2)), 2)
    assert f2.terms == {((1,), (2, 3), ()): Fraction(-1)}
    with pytest.raises(ValueError):
        bimodule.wedge_at(tensor.word_element(sp, (1, 2, 3)), 3)
    with pytest.raises(ValueError):
        bimodule.wedge_at(tensor.word_element(sp, (1, 2, 3)), 0)


@pytest.mark.parametrize("m,n", [(2, 3), (3, 3), (3, 4), (2, 4)])
def test_expansion_of_wedge_at_is_difference(m, n):
    """Exhaustive: expanding wedge_at(w, i) gives w - (swap at i)(w)."""
    for field in (QQ, GF(2)):
        sp = tensor.Space(m, field)
        for w in tensor.all_words(m, n):
            e = tensor.word_element(sp, w)
            for i in range(1, n):
                lhs = bimodule.expand_wedge(bimodule.wedge_at(e, i))
                rhs = e - tensor.perm_action(perms.adjacent_transposition(n, i), e)
                assert lhs == rhs


def test_telescoping_sum():
    """Random transposition words: expanding the accumulated wedge
    insertions recovers 1 - (composed permutation) on every basis word."""
    rng = random.Random(17)
    for m, n in [(2, 3), (3, 3), (2, 4), (3, 4)]:
        sp = tensor.Space(m, QQ)
        for _ in range(20):
            word = tuple(rng.randint(1, n - 1) for _ in range(rng.randint(0, 6)))
            composed = perms.compose_word(n, word)
            for w in tensor.all_words(m, n):
                a = tensor.word_element(sp, w)
                acc = bimodule.BimodElement(sp, n, {})
                cur = a
                for i in word:
                    acc = acc + bimodule.wedge_at(cur, i)
                    cur = tensor.perm_action(perms.adjacent_transposition(n, i), cur)
                assert bimodule.expand_wedge(acc) == a - tensor.perm_action(composed, a)


def test_cocycle_identity_and_special_values(ctx_cache):
    ctx = ctx_cache(2, 4)
    sp = ctx.space
    a = tensor.word_element(sp, (1, 2, 2, 1))
    assert not any(bimodule.cocycle(ctx, perms.identity_perm(4), a))
    t1 = perms.adjacent_transposition(4, 1)
    assert bimodule.cocycle(ctx, t1, a) == \
        bimodule.normal_form(ctx, bimodule.wedge_at(a, 1))


def test_cocycle_braid_words(ctx_cache):
    ctx = ctx_cache(3, 3)
    sp = ctx.space
    t = perms.compose_word(3, (1, 2, 1))
    assert t == perms.compose_word(3, (2, 1, 2))
    for w in tensor.all_words(3, 3):
        a = tensor.word_element(sp, w)
        assert bimodule.cocycle(ctx, t, a, word=(1, 2, 1)) == \
            bimodule.cocycle(ctx, t, a, word=(2, 1, 2))


def test_cocycle_factorization_independent(ctx_cache):
    rng = random.Random(23)
    ctx = ctx_cache(3, 4)
    sp = ctx.space
    for _ in range(40):
        t = tuple(rng.sample(range(1, 5), 4))
        w = tuple(rng.randint(1, 3) for _ in range(4))
        a = tensor.word_element(sp, w)
        base = bimodule.cocycle(ctx, t, a)
        assert bimodule.cocycle(ctx, t, a, word=perms.perm_word_alt(t)) == base
        padded = perms.perm_word(t) + (2, 2)
        assert bimodule.cocycle(ctx, t, a, word=padded) == base


def test_cocycle_mid_word_square_insertion(ctx_cache):
    """A repeated-swap pair inserted anywhere in the factorization, not
    just appended, leaves the value unchanged."""
    rng = random.Random(99)
    ctx = ctx_cache(3, 4)
    sp = ctx.space
    for _ in range(30):
        t = tuple(rng.sample(range(1, 5), 4))
        w = tuple(rng.randint(1, 3) for _ in range(4))
        a = tensor.word_element(sp, w)
        base = bimodule.cocycle(ctx, t, a)
        word = perms.perm_word(t)
        k = rng.randint(0, len(word))
        i = rng.randint(1, 3)
        padded = word[:k] + (i, i) + word[k:]
        assert bimodule.cocycle(ctx, t, a, word=padded) == base


def test_verify_sequence_empty_space():
    cert = bimodule.verify_sequence(tensor.Space(0, QQ), 3)
    assert cert.passed
    assert cert.dims == {"ambient": 0, "wm_rank": 0, "m_dim": 0, "t_dim": 0, "s_dim": 0}


def test_cocycle_rejects_wrong_word(ctx_cache):
    ctx = ctx_cache(2, 3)
    a = tensor.word_element(ctx.space, (1, 2, 1))
    with pytest.raises(ValueError):
        bimodule.cocycle(ctx, perms.identity_perm(3), a, word=(1,))
    with pytest.raises(ValueError):
        bimodule.cocycle(ctx, perms.identity_perm(2), a)


def test_cocycle_sum_rule(ctx_cache):
    """cocycle(s . t) = cocycle(t) + cocycle(s) after acting by t."""
    rng = random.Random(29)
    for m, n in [(2, 3), (3, 4)]:
        ctx = ctx_cache(m, n)
        sp = ctx.space
        add = sp.field.add
        for _ in range(60):
            s = tuple(rng.sample(range(1, n + 1), n))
            t = tuple(rng.sample(range(1, n + 1), n))
            w = tuple(rng.randint(1, m) for _ in range(n))
            a = tensor.word_element(sp, w)
            lhs = bimodule.cocycle(ctx, perms.compose(s, t), a)
            h_t = bimodule.cocycle(ctx, t, a)
            h_s = bimodule.cocycle(ctx, s, tensor.perm_action(t, a))
            assert lhs == tuple(add(x, y) for x, y in zip(h_t, h_s))


def test_cocycle_expansion_rule(ctx_cache):
    """Expanding a cocycle value recovers a - t(a)."""
    rng = random.Random(31)
    for m, n in [(2, 3), (3, 4)]:
        ctx = ctx_cache(m, n)
        sp = ctx.space
        for _ in range(40):
            t = tuple(rng.sample(range(1, n + 1), n))
            w = tuple(rng.randint(1, m) for _ in range(n))
            a = tensor.word_element(sp, w)
            vec = bimodule.cocycle(ctx, t, a)
            expanded = bimodule.expand_wedge(bimodule.element_of(ctx, vec))
            assert expanded == a - tensor.perm_action(t, a)


@pytest.mark.parametrize("m,n", [(2, 2), (2, 3), (2, 4), (3, 3), (3, 4), (4, 2)])
def test_verify_sequence_small_cells(m, n, fields_qf23):
    for field in fields_qf23:
        cert = bimodule.verify_sequence(tensor.Space(m, field), n)
        assert cert.passed, cert.to_json_dict()
        assert cert.dims["m_dim"] == tensor.dim_tensor(m, n) - tensor.dim_sym(m, n)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_verify_sequence_degenerate_line(n):
    """m=1: no wedge pairs at all, so the quotient is zero and the
    projection onto the symmetric part is an isomorphism."""
    cert = bimodule.verify_sequence(tensor.Space(1, QQ), n)
    assert cert.passed
    assert cert.dims["ambient"] == 0 and cert.dims["m_dim"] == 0
    assert cert.dims["t_dim"] == cert.dims["s_dim"] == 1


def test_verify_sequence_cap_propagates():
    with pytest.raises(SizeCapError):
        bimodule.verify_sequence(tensor.Space(3, QQ), 5, size_cap=100)


def test_certificate_json_shape():
    cert = bimodule.verify_sequence(tensor.Space(2, QQ), 3)
    doc = cert.to_json_dict()
    assert doc["sequence"] == "M->T->S"
    assert set(doc["dims"]) == {"ambient", "wm_rank", "m_dim", "t_dim", "s_dim"}
    assert {c["name"] for c in doc["checks"]} == \
        {"injective_rank", "image_equals_kernel", "dimension_identity"}
    assert doc["pass"] is True


def test_relation_generators_deterministic():
    sp = tensor.Space(3, QQ)
    a = [g.terms for g in bimodule.relation_generators(sp, 4)]
    b = [g.terms for g in bimodule.relation_generators(sp, 4)]
    assert a == b
