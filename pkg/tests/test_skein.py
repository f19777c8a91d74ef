import random

import pytest

from traceskein.intersect import Multiloop
from traceskein.oracle import RepresentationError, random_modular_rep
from traceskein.skein import (SkeinElement, direct_trace, evaluate, expand,
                              goldman_bracket, loop, loop_bracket, product)
from traceskein.surface import canonical_class, inverse
from traceskein.sweeps import random_multiloop
from traceskein.valuation import random_multicurve


def ml(surface, *texts):
    return Multiloop.of(*(surface.parse(t) for t in texts))


def test_multicurve_expands_to_itself(torus, sphere):
    rng = random.Random(1)
    for s in (torus, sphere):
        for _ in range(30):
            mu = random_multicurve(s, rng, 5, 3)
            assert expand(s, mu).terms == {mu: 1}


def test_expand_two_generators(torus):
    f = expand(torus, ml(torus, "a", "b"))
    assert f.terms == {ml(torus, "ab"): 1, ml(torus, "aB"): 1}


def test_expand_frozen_values(torus):
    # checked against direct trace products at random SL2 matrices below
    assert expand(torus, ml(torus, "aa")).terms == {ml(torus, "a", "a"): 1, Multiloop(): -2}
    assert expand(torus, ml(torus, "aabb")).terms == {ml(torus, "ab", "ab"): 1,
                                                      ml(torus, "abAB"): -1}


def test_sphere_example_product_and_bracket(sphere):
    c = {n: canonical_class(sphere.curve(n)) for n, _ in sphere.curves}
    alpha, beta = loop(sphere, sphere.curve("alpha")), loop(sphere, sphere.curve("beta"))
    prod = alpha * beta
    assert prod.terms == {Multiloop((c["c1"], c["c3"])): 1, Multiloop((c["c2"], c["c4"])): 1,
                          Multiloop((c["gamma"],)): -1, Multiloop((c["delta"],)): -1}
    br = goldman_bracket(alpha, beta)
    assert br.terms == {Multiloop((c["delta"],)): 2, Multiloop((c["gamma"],)): -2}
    assert br.format() == "+2·t[δ] −2·t[γ]"


def test_sphere_example_words_agree_with_modular_traces(sphere):
    rng = random.Random(5)
    alpha, beta = loop(sphere, sphere.curve("alpha")), loop(sphere, sphere.curve("beta"))
    prod = alpha * beta
    for _ in range(20):
        images = random_modular_rep(sphere, rng)
        assert evaluate(prod, images) == direct_trace(
            images, [sphere.curve("alpha"), sphere.curve("beta")])


def test_torus_bracket_sign(torus):
    br = goldman_bracket(loop(torus, torus.parse("a")), loop(torus, torus.parse("b")))
    assert br.terms == {ml(torus, "ab"): 1, ml(torus, "aB"): -1}


def test_unit_and_disjoint_products(torus, sphere):
    rng = random.Random(2)
    one = SkeinElement.one(sphere)
    f = expand(sphere, random_multiloop(sphere, rng, 8))
    assert f * one == f and one * f == f
    mu, nu = ml(sphere, "x1x2"), ml(sphere, "x1")
    assert product(SkeinElement.basis(sphere, mu), SkeinElement.basis(sphere, nu)).terms == {
        mu | nu: 1}


def test_expand_product_compatibility(torus, sphere):
    rng = random.Random(3)
    for s in (torus, sphere):
        for _ in range(100):
            m1, m2 = random_multiloop(s, rng, 6, 2), random_multiloop(s, rng, 6, 2)
            assert expand(s, m1) * expand(s, m2) == expand(s, m1 | m2)


def test_product_associative_commutative(sphere):
    rng = random.Random(4)
    for _ in range(20):
        f, g, h = (expand(sphere, random_multiloop(sphere, rng, 5, 2)) for _ in range(3))
        assert f * g == g * f
        assert (f * g) * h == f * (g * h)


def test_evaluate_matches_traces(torus, sphere):
    rng = random.Random(6)
    for s in (torus, sphere):
        for _ in range(40):
            m = random_multiloop(s, rng, 12)
            f = expand(s, m)
            for _ in range(5):
                images = random_modular_rep(s, rng)
                assert evaluate(f, images) == direct_trace(images, m)


def test_trace_identity_hundred_reps(torus):
    rng = random.Random(7)
    f = expand(torus, ml(torus, "a", "b"))
    for _ in range(100):
        images = random_modular_rep(torus, rng)
        assert evaluate(f, images) == direct_trace(images, [(1,), (2,)])


def test_evaluate_unit_and_bad_determinant(torus):
    rng = random.Random(8)
    assert evaluate(SkeinElement.one(torus), random_modular_rep(torus, rng)) == 1
    with pytest.raises(RepresentationError):
        evaluate(SkeinElement.one(torus), (((2, 0), (0, 2)), ((1, 0), (0, 1))))


def test_resolution_order_does_not_matter(torus, sphere):
    rng = random.Random(9)
    for s in (torus, sphere):
        for _ in range(10):
            m = random_multiloop(s, rng, 10)
            want = expand(s, m)
            for _ in range(10):
                assert expand(s, m, rng=random.Random(rng.random())) == want


def test_bracket_antisymmetry_and_vanishing(sphere):
    rng = random.Random(10)
    for _ in range(30):
        f = SkeinElement.basis(sphere, random_multicurve(sphere, rng, 4, 2))
        g = SkeinElement.basis(sphere, random_multicurve(sphere, rng, 4, 2))
        assert goldman_bracket(f, g) == -goldman_bracket(g, f)
    c1, c2 = ml(sphere, "x1"), ml(sphere, "x2")
    assert goldman_bracket(SkeinElement.basis(sphere, c1),
                           SkeinElement.basis(sphere, c2)).is_zero()


def test_bracket_with_constant_is_zero(torus):
    f = loop(torus, torus.parse("a"))
    assert goldman_bracket(f, SkeinElement.one(torus)).is_zero()


def test_orientation_independence(torus):
    rng = random.Random(11)
    for _ in range(30):
        a, b = torus.random_class(6, rng), torus.random_class(6, rng)
        base = loop_bracket(torus, [a.word], [b.word])
        assert loop_bracket(torus, [inverse(a.word)], [b.word]) == base
        assert loop_bracket(torus, [a.word], [inverse(b.word)]) == base


def test_json_roundtrip(sphere):
    rng = random.Random(12)
    f = expand(sphere, random_multiloop(sphere, rng, 10))
    assert SkeinElement.from_json(sphere, f.to_json()) == f


def test_formatting(torus):
    assert SkeinElement.zero(torus).format() == "0"
    f = expand(torus, ml(torus, "aa"))
    assert f.format(ascii=True) == "+t[a + a] -2"
