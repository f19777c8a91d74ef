import random

import pytest

from traceskein.intersect import geom_intersection, self_intersection
from traceskein.oracle import (PRIME, RepresentationError, axis_linking_count,
                               det, fixed_points, mat_inv, mat_mul,
                               preset_rep, random_modular_rep, trace,
                               word_matrix)
from traceskein.surface import canonical_class, inverse, punctured_sphere


def test_torus_rep_startup_checks(torus):
    rep = preset_rep(torus)
    assert all(det(m) == 1 for m in rep.images)
    assert trace(word_matrix(rep.images, torus.parse("abAB"))) == -2


def test_sphere_rep_boundaries_parabolic(sphere):
    rep = preset_rep(sphere)
    assert all(det(m) == 1 for m in rep.images)
    for w in sphere.boundary_words:
        assert abs(trace(word_matrix(rep.images, w))) == 2


def test_unknown_preset_rejected():
    with pytest.raises(Exception):
        preset_rep(punctured_sphere(5))


def test_fixed_points_are_fixed():
    m = ((2, 1), (1, 1))
    lo, hi = fixed_points(m)
    assert lo.compare(hi) < 0
    # x = (num + irr sqrt(rad)) / den solves r x^2 + (s - p) x - q = 0
    for z in (lo, hi):
        x = float(z.num + z.irr * z.rad ** 0.5) / z.den
        assert abs((2 * x + 1) / (x + 1) - x) < 1e-12
    with pytest.raises(RepresentationError):
        fixed_points(((1, 1), (0, 1)))


def test_axis_linking_examples(torus, sphere):
    rt, rs = preset_rep(torus), preset_rep(sphere)
    p = torus.parse
    assert axis_linking_count(rt, p("a"), p("b")) == 1
    assert axis_linking_count(rt, p("a"), p("abAB")) == 0
    assert axis_linking_count(rs, sphere.curve("alpha"), sphere.curve("beta")) == 2
    assert axis_linking_count(rt, p("aa")) == 1


def test_conjugation_invariance(torus, sphere):
    rng = random.Random(21)
    for s in (torus, sphere):
        rep = preset_rep(s)
        for _ in range(50):
            a, b = s.random_class(6, rng), s.random_class(6, rng)
            if a == b:
                continue
            g = s.random_word(rng.randint(1, 4), rng)
            n = axis_linking_count(rep, a, b)
            assert axis_linking_count(rep, g + a.word + inverse(g), inverse(b.word)) == n


def test_agrees_with_combinatorial_counts_small(torus, sphere):
    rng = random.Random(22)
    for s in (torus, sphere):
        rep = preset_rep(s)
        for _ in range(40):
            a, b = s.random_class(8, rng), s.random_class(8, rng)
            if a != b:
                assert axis_linking_count(rep, a, b) == geom_intersection(s, a, b)
            assert axis_linking_count(rep, a) == self_intersection(s, a)


def test_modular_matrices():
    rng = random.Random(1)
    m = random_modular_rep(punctured_sphere(4), rng)
    for x in m:
        assert det(x, PRIME) == 1
        assert mat_mul(x, mat_inv(x, PRIME), PRIME) == ((1, 0), (0, 1))
