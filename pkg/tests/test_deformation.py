"""The worked 2-dimensional deformation: parameter tables, the square
bracket, rewriting, confluence, and normal-form counting.

Group algebra elements appear as dense coefficient tuples indexed by the
power of g, so e.g. (0, 0, 2) over F_3 is 2*g^2.
"""

import dataclasses
import itertools
import math
import random

import pytest

from skewcoh import (
    AlgebraElement,
    Field,
    PrerequisiteFailed,
    UnsupportedKappaShape,
    builtin_transvection_gamma,
    confluence_check,
    hilbert_check,
    orbifold_algebra,
    square_bracket_transvection,
    transvection_group,
    zero_params,
)
from skewcoh.deformation import g_letter, word_str
from skewcoh.group_action import group_from_generator

F3 = Field.prime(3)
V1 = ("v", 1)
V2 = ("v", 2)


def ga(f, N, **powers):
    """Group algebra element from keyword powers: ga(f, 3, g2=2) = 2*g^2."""
    out = [f.zero()] * N
    for key, c in powers.items():
        out[int(key[1:])] = f.coerce(c)
    return tuple(out)


def monomial_word(a, b, c, N):
    return (V1,) * a + (V2,) * b + g_letter(c, N)


# -- parameter tables ---------------------------------------------------------

def test_builtin_table_p3():
    params = builtin_transvection_gamma(3)
    f = params.group.field
    t = params.lambda_table
    assert t[(0, 1)] == ga(f, 3)
    assert t[(1, 1)] == ga(f, 3, g2=-1)
    assert t[(2, 1)] == ga(f, 3, g0=-2)          # g^3 wraps to 1
    assert t[(0, 2)] == ga(f, 3)
    assert t[(1, 2)] == ga(f, 3, g2=-1)
    assert t[(2, 2)] == ga(f, 3)                 # binomial 3 reduces to 0
    assert params.kappa_v1 == ga(f, 3)
    assert params.kappa_v2 == ga(f, 3, g1=1)


def test_builtin_table_p5():
    params = builtin_transvection_gamma(5)
    f = params.group.field
    t = params.lambda_table
    assert t[(3, 1)] == ga(f, 5, g4=-3)
    assert t[(4, 1)] == ga(f, 5, g0=-4)
    assert t[(1, 2)] == ga(f, 5, g2=-1)
    assert t[(4, 2)] == ga(f, 5)                 # C(5,2) = 10 = 0 mod 5
    assert t[(3, 2)] == ga(f, 5, g4=-6)


def test_transvection_group_order():
    for p in (3, 5, 7):
        assert transvection_group(p).order == p


def test_zero_params():
    params = zero_params(transvection_group(3))
    assert all(all(x == 0 for x in v) for v in params.lambda_table.values())
    assert all(x == 0 for x in params.kappa_v1 + params.kappa_v2)


# -- square bracket ---------------------------------------------------------------

@pytest.mark.parametrize("p", [3, 5, 7])
def test_square_bracket_vanishes(p):
    params = builtin_transvection_gamma(p)
    values = square_bracket_transvection(params)
    assert len(values) == p
    for v in values:
        assert all(x == 0 for x in v)


def test_square_bracket_i2_p3_term_by_term():
    # gamma(g^2 x v2) = 0, gamma(g^2 x v1) = -2 = 1 in F_3 so the middle
    # term is gamma(1 x v2) = 0; everything cancels before it starts
    params = builtin_transvection_gamma(3)
    assert params.lambda_table[(2, 2)] == (0, 0, 0)
    assert square_bracket_transvection(params)[2] == (0, 0, 0)


def test_square_bracket_zero_params():
    values = square_bracket_transvection(zero_params(transvection_group(5)))
    assert all(all(x == 0 for x in v) for v in values)


def test_square_bracket_needs_transvection():
    gr = group_from_generator(Field.prime(5), [[1, 0], [0, -1]])
    with pytest.raises(ValueError):
        square_bracket_transvection(zero_params(gr))


def test_square_bracket_kappa_shape_guard():
    params = builtin_transvection_gamma(3)
    f = params.group.field
    bad1 = dataclasses.replace(params, kappa_v1=ga(f, 3, g1=1))
    with pytest.raises(UnsupportedKappaShape):
        square_bracket_transvection(bad1)
    bad2 = dataclasses.replace(params, kappa_v2=ga(f, 3, g0=1))
    with pytest.raises(UnsupportedKappaShape):
        square_bracket_transvection(bad2)


# -- rewriting ----------------------------------------------------------------------

def test_rewrite_rules_builtin_p3():
    rs = orbifold_algebra(builtin_transvection_gamma(3))
    assert rs.normal_form((("g", 1), V1)) == AlgebraElement(F3, {
        (V1, ("g", 1)): 1, (("g", 2),): 2})
    assert rs.normal_form((V2, V1)) == AlgebraElement(F3, {
        (V1, V2): 1, (V2, ("g", 1)): 1})


def test_rewrite_rules_zero_params():
    rs = orbifold_algebra(zero_params(transvection_group(3)))
    # plain skew group algebra: g v1 = v1 g, g v2 = (v1 + v2) g, v2 v1 = v1 v2
    assert rs.normal_form((("g", 1), V1)) == AlgebraElement(F3, {(V1, ("g", 1)): 1})
    assert rs.normal_form((("g", 1), V2)) == AlgebraElement(F3, {
        (V1, ("g", 1)): 1, (V2, ("g", 1)): 1})
    assert rs.normal_form((V2, V1)) == AlgebraElement(F3, {(V1, V2): 1})


def test_normal_form_examples():
    rs = orbifold_algebra(builtin_transvection_gamma(3))
    assert rs.normal_form((V1, V2)) == AlgebraElement(F3, {(V1, V2): 1})
    assert rs.normal_form((V2, V1, ("g", 1))) == AlgebraElement(F3, {
        (V1, V2, ("g", 1)): 1, (V2, ("g", 2)): 1})
    assert rs.normal_form((("g", 2), ("g", 2))) == AlgebraElement(F3, {(("g", 1),): 1})
    assert rs.normal_form((("g", 1), ("g", 2))) == AlgebraElement(F3, {(): 1})


def test_normal_form_idempotent():
    rs = orbifold_algebra(builtin_transvection_gamma(3))
    rng = random.Random(31)
    letters = rs.alphabet()
    for _ in range(50):
        w = tuple(rng.choice(letters) for _ in range(rng.randint(0, 4)))
        nf = rs.normal_form(w)
        assert rs.normal_form(dict(nf.terms)) == nf
        for word in nf.terms:
            assert rs.is_normal(word)


def test_multiply_matches_concatenation():
    rs = orbifold_algebra(builtin_transvection_gamma(3))
    a = rs.normal_form((("g", 1), V2))
    b = rs.normal_form((V2, V1))
    left = rs.multiply(a, b)
    assert left == rs.normal_form((("g", 1), V2, V2, V1))


def test_multiply_is_associative_spot_check():
    rs = orbifold_algebra(builtin_transvection_gamma(5))
    rng = random.Random(14)
    letters = rs.alphabet()
    for _ in range(25):
        x, y, z = (AlgebraElement(rs.field,
                                  {tuple(rng.choice(letters)
                                         for _ in range(rng.randint(0, 2))): 1})
                   for _ in range(3))
        assert rs.multiply(rs.multiply(x, y), z) == rs.multiply(x, rs.multiply(y, z))


def test_word_str():
    assert word_str(()) == "1"
    assert word_str((V1, V2, ("g", 2))) == "v1*v2*g^2"
    assert word_str((("g", 1),)) == "g"
    assert g_letter(3, 3) == ()
    assert g_letter(4, 3) == (("g", 1),)


def test_rewrite_layer_is_two_dimensional_only():
    gr = group_from_generator(Field.prime(5), [[2, 0, 0], [0, 3, 0], [0, 0, 4]])
    with pytest.raises(ValueError):
        orbifold_algebra(zero_params(gr))


def test_zero_params_recover_skew_group_product():
    """With no deformation terms the multiplication must agree with the
    skew product (s x g^c)(s' x g^C) = s . (g^c s') x g^{c+C}, checked on
    all monomials of v-degree <= 2 by independent binomial expansion."""
    p = 3
    rs = orbifold_algebra(zero_params(transvection_group(p)))
    f = rs.field
    N = rs.N
    monos = [(a, b, c) for a in range(3) for b in range(3 - a) for c in range(N)]
    for (a, b, c), (A, B, C) in itertools.product(monos, monos):
        x = AlgebraElement(f, {monomial_word(a, b, c, N): 1})
        y = AlgebraElement(f, {monomial_word(A, B, C, N): 1})
        got = rs.multiply(x, y)
        # ^{g^c} v1 = v1 and ^{g^c} v2 = c v1 + v2, so
        # v2^B expands to sum_j C(B,j) c^j v1^j v2^{B-j}
        expected = {}
        for j in range(B + 1):
            coef = f.coerce(math.comb(B, j) * c ** j)
            if coef != 0:
                w = monomial_word(a + A + j, b + B - j, (c + C) % N, N)
                expected[w] = f.add(expected.get(w, f.zero()), coef)
        assert got == AlgebraElement(f, expected)


# -- confluence --------------------------------------------------------------------

@pytest.mark.parametrize("p", [3, 5])
def test_builtin_is_confluent(p):
    rep = confluence_check(orbifold_algebra(builtin_transvection_gamma(p)))
    assert rep.ok
    assert rep.witness is None


def test_confluence_word_count_p3():
    rep = confluence_check(orbifold_algebra(builtin_transvection_gamma(3)))
    assert rep.words_checked == 63


def test_zero_params_are_confluent():
    rep = confluence_check(orbifold_algebra(zero_params(transvection_group(3))))
    assert rep.ok


def adversarial_params():
    """Builtin tables over F_3 with lambda(g x v1) replaced by 1; the g.v2.v1
    overlap then resolves two different ways."""
    params = builtin_transvection_gamma(3)
    f = params.group.field
    table = dict(params.lambda_table)
    table[(1, 1)] = ga(f, 3, g0=1)
    return dataclasses.replace(params, lambda_table=table)


def test_adversarial_fixture_fails_confluence():
    rep = confluence_check(orbifold_algebra(adversarial_params()))
    assert not rep.ok
    assert rep.witness == "g*v2*v1"
    assert len(rep.witness_forms) == 2
    assert rep.witness_forms[0] != rep.witness_forms[1]


# -- normal form counting --------------------------------------------------------------

def test_hilbert_counts():
    rs = orbifold_algebra(builtin_transvection_gamma(3))
    conf = confluence_check(rs)
    rep = hilbert_check(rs, 4, confluence=conf)
    assert rep.ok and rep.count == 45 and rep.expected == 45
    rep = hilbert_check(rs, 0, confluence=conf)
    assert rep.ok and rep.count == 3


def test_hilbert_p5_degree2():
    rep = hilbert_check(orbifold_algebra(builtin_transvection_gamma(5)), 2)
    assert rep.ok and rep.count == 30


def test_hilbert_up_to_degree5():
    rs = orbifold_algebra(builtin_transvection_gamma(3))
    conf = confluence_check(rs)
    for d in range(6):
        rep = hilbert_check(rs, d, confluence=conf)
        assert rep.ok
        assert rep.expected == 3 * (d + 2) * (d + 1) // 2


def test_hilbert_requires_confluence():
    with pytest.raises(PrerequisiteFailed):
        hilbert_check(orbifold_algebra(adversarial_params()), 2)
