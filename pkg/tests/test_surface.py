import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from traceskein.surface import (TRIVIAL, AlphabetError, Surface, SurfaceError,
                                canonical_class, cyclic_reduce, format_surface,
                                free_reduce, get_surface, inverse, is_trivial,
                                parse_surface, punctured_sphere, punctured_torus)

letters = st.sampled_from([1, -1, 2, -2])
words = st.lists(letters, max_size=14).map(tuple)


def test_free_reduce_examples(torus):
    p = torus.parse
    assert free_reduce(p("a A b")) == p("b")
    assert free_reduce(()) == ()
    assert free_reduce(p("a b B a")) == p("a a")


def test_cyclic_reduce_examples(torus):
    p = torus.parse
    assert cyclic_reduce(p("a b A")) == p("b")
    assert cyclic_reduce(p("a b")) == p("a b")
    assert cyclic_reduce(p("B a b")) == p("a")


def test_canonical_class_examples(torus):
    p = torus.parse
    ab = canonical_class(p("a b"))
    assert ab.word == p("a b")
    assert canonical_class(p("b a")) == ab
    assert canonical_class(p("B A")) == ab
    g = p("a b A")
    assert canonical_class(g + p("a b") + inverse(g)) == ab
    # a b A b a B A reduces to a conjugate of b, not of a b
    assert canonical_class(p("a b A b a B A")) == canonical_class(p("b"))
    assert canonical_class(p("a A")) is TRIVIAL


def test_is_trivial(torus):
    assert is_trivial(torus.parse("a A"))
    assert not is_trivial(torus.parse("a"))
    assert not is_trivial(torus.parse("a b A B"))


def test_parse_variants(torus, sphere):
    assert torus.parse("abAb") == torus.parse("a b A b") == torus.parse("a b a' b")
    assert sphere.parse("x1 X2 x3") == sphere.parse("x1 x2' x3") == (1, -2, 3)
    with pytest.raises(AlphabetError):
        torus.parse("a c")


@given(words)
def test_reductions_idempotent(w):
    r = free_reduce(w)
    assert free_reduce(r) == r and len(r) <= len(w)
    c = cyclic_reduce(w)
    assert cyclic_reduce(c) == c and len(c) <= len(r)


@settings(max_examples=300)
@given(words, words)
def test_canonical_class_is_conjugation_invariant(w, g):
    c = canonical_class(w)
    assert canonical_class(tuple(g) + tuple(w) + inverse(g)) == c
    assert canonical_class(inverse(w)) == c
    if c is not TRIVIAL:
        assert canonical_class(c.word) == c


def test_canonical_class_thousand_random_conjugates(sphere):
    rng = random.Random(7)
    for _ in range(1000):
        w = sphere.random_word(rng.randint(1, 10), rng)
        g = sphere.random_word(rng.randint(0, 6), rng)
        assert canonical_class(g + w + inverse(g)) == canonical_class(w)


def test_presets_pass_euler_check(torus, sphere):
    assert (torus.genus, torus.punctures, torus.rank) == (1, 1, 2)
    assert (sphere.genus, sphere.punctures, sphere.rank) == (0, 4, 3)
    assert torus.boundary_words == ((1, -2, -1, 2),)
    assert sorted(map(len, sphere.boundary_words)) == [1, 1, 1, 3]


def test_corrupted_order_is_rejected():
    with pytest.raises(SurfaceError):
        Surface("bad", 1, 1, ("a", "b"), (1, -1, 2, -2))
    with pytest.raises(SurfaceError):
        Surface("bad", 0, 4, ("x1", "x2", "x3"), (1, 2, 3, -1, -2, -3))


def test_surface_file_roundtrip(tmp_path, sphere):
    text = format_surface(sphere)
    again = parse_surface(text)
    assert again == sphere
    assert dict(again.curves) == dict(sphere.curves)
    path = tmp_path / "s.surface"
    path.write_text(text)
    assert get_surface(str(path)) == sphere
    assert get_surface("s6p") == punctured_sphere(6)
    assert get_surface("t1p") == punctured_torus()


def test_classes_up_to_counts_are_canonical(torus):
    classes = torus.classes_up_to(3)
    assert all(canonical_class(c.word) == c for c in classes)
    assert len(set(classes)) == len(classes)
    # a, b, aa, ab, aB, bb, aaa, aab, aaB, abb, aBB, bbb
    assert len(classes) == 12
