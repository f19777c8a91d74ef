import random
from fractions import Fraction

import pytest

from traceskein.intersect import InvariantError, Multiloop, geom_intersection
from traceskein.skein import SkeinElement, expand, goldman_bracket, loop
from traceskein.surface import canonical_class
from traceskein.valuation import (BOTTOM, LaminationError, RationalLamination,
                                  acute_violations, check_bracket_inequality,
                                  check_smoothing_lemma, check_unitarity,
                                  length, luo_products, newton_set,
                                  parse_lamination, random_lamination,
                                  random_multicurve, strict_violations,
                                  valuation)


def ml(surface, *texts):
    return Multiloop.of(*(surface.parse(t) for t in texts))


def lam_of(surface, text):
    return parse_lamination(surface, text)


def test_length_examples(torus):
    lam = lam_of(torus, "b: 1")
    assert length(lam, torus.parse("b")) == 0
    assert length(lam, torus.parse("a")) == 1
    assert length(lam.scaled(2), torus.parse("a")) == 2 * length(lam, torus.parse("a"))
    assert length(lam_of(torus, "b: 3/2"), ml(torus, "a", "ab")) == 3


def test_parse_lamination(sphere):
    lam = lam_of(sphere, "x1x3: 1/2; x2: 2; x3 x1: 1/2  # comment")
    assert lam.atoms == ((canonical_class(sphere.parse("x1x3")), Fraction(1)),
                         (canonical_class(sphere.parse("x2")), Fraction(2)))
    with pytest.raises(LaminationError):
        lam_of(sphere, "x1x2: 1; x2x3: 1")   # components cross
    with pytest.raises(LaminationError):
        lam_of(sphere, "x1x2: -1")
    with pytest.raises(LaminationError):
        lam_of(sphere, "x1x2x1x2: 1")        # a proper power is not simple
    assert lam_of(sphere, "x1x2").atoms[0][1] == 1


def test_valuation_basics(sphere):
    lam = lam_of(sphere, "x1x3: 1")
    assert valuation(lam, SkeinElement.one(sphere)) == 0
    assert valuation(lam, SkeinElement.zero(sphere)) == BOTTOM
    alpha, beta = loop(sphere, sphere.curve("alpha")), loop(sphere, sphere.curve("beta"))
    prod = alpha * beta
    assert valuation(lam, prod) == max(length(lam, mu) for mu in prod.support())


def test_valuation_multiplicative(torus, sphere):
    rng = random.Random(1)
    for s in (torus, sphere):
        for _ in range(40):
            lam = random_lamination(s, rng)
            f = expand(s, [s.random_class(5, rng)])
            g = expand(s, [s.random_class(5, rng)])
            assert valuation(lam, f * g) == valuation(lam, f) + valuation(lam, g)


def test_valuation_of_loop_is_its_length(torus):
    rng = random.Random(2)
    for _ in range(50):
        lam = random_lamination(torus, rng)
        c = torus.random_class(8, rng)
        assert valuation(lam, expand(torus, [c])) == length(lam, c)


def test_newton_single_term_and_impossible_case(torus):
    a = ml(torus, "a")
    rep = newton_set(SkeinElement.basis(torus, a))
    assert list(rep.certified) == [a]
    f = SkeinElement(torus, {a: 1, a | a: 1})
    rep = newton_set(f)
    assert rep.unknown == [a]
    assert rep.certified[a | a] and rep.verify()


def test_newton_sphere_example(sphere):
    alpha, beta = loop(sphere, sphere.curve("alpha")), loop(sphere, sphere.curve("beta"))
    gamma = ml(sphere, "x1x3")
    delta = Multiloop.of(sphere.curve("delta"))
    rb = newton_set(goldman_bracket(alpha, beta))
    assert set(rb.certified) == {gamma, delta} and not rb.unknown and rb.verify()
    rp = newton_set(alpha * beta)
    assert {gamma, delta} <= set(rp.certified) and rp.verify()
    # the two remaining terms are unions of puncture loops: every curve
    # misses them, so no witness can single them out
    assert sorted(rp.unknown) == sorted(set(rp.coefficients) - {gamma, delta})


def test_newton_json_shape(sphere):
    alpha, beta = loop(sphere, sphere.curve("alpha")), loop(sphere, sphere.curve("beta"))
    data = newton_set(goldman_bracket(alpha, beta)).to_json()
    assert set(data) == {"support", "certified", "unknown", "family_size"}
    assert {d["label"] for d in data["certified"]} == {"gamma", "delta"}


def test_luo_products_examples(torus, sphere):
    a, b = ml(torus, "a"), ml(torus, "b")
    left, right = luo_products(torus, a, b)
    assert {left, right} == {ml(torus, "ab"), ml(torus, "aB")}
    c1, c2 = ml(sphere, "x1"), ml(sphere, "x2")
    assert luo_products(sphere, c1, c2) == (c1 | c2, c1 | c2)
    left, right = luo_products(sphere, ml(sphere, "x1x2"), ml(sphere, "x2x3"))
    assert {left, right} == {ml(sphere, "x1x3"), Multiloop.of(sphere.curve("delta"))}


def test_luo_products_properties(torus, sphere):
    rng = random.Random(3)
    for s in (torus, sphere):
        n = 0
        while n < 15:
            mu, nu = random_multicurve(s, rng, 4, 2), random_multicurve(s, rng, 4, 2)
            i = geom_intersection(s, mu, nu)
            if not i:
                continue
            n += 1
            left, right = luo_products(s, mu, nu)
            assert left != right
            assert geom_intersection(s, left, right) == 2 * i
            for x in (left, right):
                assert geom_intersection(s, mu, x) == geom_intersection(s, nu, x) == i


def test_luo_products_need_multicurves(torus):
    with pytest.raises(ValueError):
        luo_products(torus, ml(torus, "aa"), ml(torus, "b"))
    assert InvariantError  # raised only on internal inconsistency


def test_unitarity_sphere_example(sphere):
    alpha, beta = loop(sphere, sphere.curve("alpha")), loop(sphere, sphere.curve("beta"))
    assert check_unitarity(alpha * beta).ok
    assert check_unitarity(SkeinElement.basis(sphere, ml(sphere, "x1x2"))).ok


def test_bracket_inequality(sphere):
    rng = random.Random(4)
    alpha, beta = loop(sphere, sphere.curve("alpha")), loop(sphere, sphere.curve("beta"))
    lams = [random_lamination(sphere, rng) for _ in range(50)]
    assert check_bracket_inequality(alpha, beta, lams).ok
    rep = check_bracket_inequality(alpha, SkeinElement.one(sphere), lams)
    assert rep.ok and rep.checked == 50


def test_smoothing_lemma(torus, sphere):
    rng = random.Random(5)
    aa = canonical_class(torus.parse("aa"))
    for _ in range(10):
        lam = random_lamination(torus, rng)
        assert check_smoothing_lemma(torus, aa, lam).ok
        assert valuation(lam, expand(torus, [aa])) == max(2 * length(lam, torus.parse("a")), 0)
    ab = sphere.curve("alpha") + sphere.curve("beta")
    assert check_smoothing_lemma(sphere, ab, lam_of(sphere, "x1 x2 x3 X2: 1")).ok
    with pytest.raises(ValueError):
        check_smoothing_lemma(torus, torus.parse("a"), random_lamination(torus, rng))


def test_acute_violations(torus):
    lam = lam_of(torus, "a: 1")
    rep = acute_violations(lam, [(torus.parse("a"), torus.parse("b"))])
    assert not rep.positive and rep.nonpositive == [torus.parse("a")]
    # gamma^n, gamma^m never violate when gamma has positive length
    b = torus.parse("b")
    rep = acute_violations(lam, [(b * 2, b * 3), (b, b * 2)])
    assert rep.violations == [] and rep.positive


def test_acute_violations_found_for_rational_laminations(torus):
    rng = random.Random(6)
    lam = lam_of(torus, "a: 1")
    pairs = [(torus.random_word(4, rng), torus.random_word(4, rng)) for _ in range(40)]
    assert acute_violations(lam, pairs).violations


def test_strict_violations(torus):
    lam = lam_of(torus, "a: 1")
    a = ml(torus, "a")
    assert strict_violations(lam, [a, a | a]) == [(a, a | a)]
    assert strict_violations(lam, [a]) == []


def test_sphere_pattern_fully_certified_on_eight_punctured_sphere():
    # the same picture with every puncture replaced by a pair of punctures:
    # the four product terms now all meet some curve, and all are certified
    from traceskein.surface import punctured_sphere
    from traceskein.valuation import disjoint_unions, simple_classes
    s = punctured_sphere(8)
    alpha, beta = loop(s, (1, 2, 3, 4)), loop(s, (3, 4, 5, 6))
    prod = alpha * beta
    assert sorted(prod.terms.values()) == [-1, -1, 1, 1]
    assert sorted(goldman_bracket(alpha, beta).terms.values()) == [-2, 2]
    rep = newton_set(prod, disjoint_unions(s, simple_classes(s, 4), 2))
    assert len(rep.certified) == 4 and rep.verify()
