"""Independent ground truth: hyperbolic axes and modular trace evaluation.

The intersection oracle places the surface group in SL(2, Z) as a discrete
faithful representation and works in the upper half plane.  Every hyperbolic
integer matrix has fixed points in a real quadratic field, so all boundary
comparisons are exact sign computations on sums of square roots.  No part of
this module uses the fat-graph cyclic order.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .surface import (TRIVIAL, ConjClass, Surface, SurfaceError, Word,
                      canonical_class, cyclic_reduce, inverse, primitive_root)

PRIME = 2**31 - 1


class RepresentationError(ValueError):
    """A matrix assignment is not in SL(2) or is unusable for the oracle."""


# -- exact real quadratic numbers ---------------------------------------------

def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _sign2(a, b, m) -> int:
    """Sign of ``a + b*sqrt(m)`` for rational a, b and integer m >= 0."""
    sa, sb = _sign(a), _sign(b)
    if sb == 0 or m == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    return sa * _sign(a * a - b * b * m)


def _sign3(a, b, m, c, n) -> int:
    """Sign of ``a + b*sqrt(m) + c*sqrt(n)``."""
    if m == n:
        return _sign2(a, b + c, m)
    sb, sc = _sign(b), _sign(c)
    if sb == 0:
        return _sign2(a, c, n)
    if sc == 0:
        return _sign2(a, b, m)
    sx = sb if sb == sc else sb * _sign(b * b * m - c * c * n)
    sa = _sign(a)
    if sa == 0:
        return sx
    if sx == 0 or sa == sx:
        return sa
    # opposite signs: compare a^2 with (b sqrt m + c sqrt n)^2
    s = _sign2(a * a - b * b * m - c * c * n, -2 * b * c, m * n)
    return sa * s


@dataclass(frozen=True)
class Surd:
    """The real number ``(num + irr * sqrt(rad)) / den`` with ``den > 0``.

    Everything is an integer, so comparisons are exact sign tests.
    """

    num: int
    irr: int
    rad: int
    den: int

    def compare(self, other: "Surd") -> int:
        return _sign3(self.num * other.den - other.num * self.den,
                      self.irr * other.den, self.rad,
                      -other.irr * self.den, other.rad)

    def approx(self, scale: int) -> Fraction:
        """Rational within ``self.irr / scale`` of the value."""
        root = Fraction(math.isqrt(self.rad * scale * scale), scale)
        return (self.num + self.irr * root) / self.den


# -- matrices ------------------------------------------------------------------

def mat_mul(x, y, mod=None):
    (a, b), (c, d) = x
    (e, f), (g, h) = y
    out = ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))
    if mod is not None:
        out = tuple(tuple(v % mod for v in row) for row in out)
    return out


def mat_inv(x, mod=None):
    (a, b), (c, d) = x
    out = ((d, -b), (-c, a))
    if mod is not None:
        out = tuple(tuple(v % mod for v in row) for row in out)
    return out


def det(x, mod=None):
    (a, b), (c, d) = x
    v = a * d - b * c
    return v % mod if mod is not None else v


IDENTITY = ((1, 0), (0, 1))


def word_matrix(images, w: Word, mod=None):
    """Image of ``w`` under generator images ``images`` (list of matrices)."""
    a, b, c, d = 1, 0, 0, 1
    for x in w:
        (e, f), (g, h) = images[abs(x) - 1]
        if x < 0:
            e, f, g, h = h, -f, -g, e
        a, b, c, d = a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h
        if mod is not None:
            a, b, c, d = a % mod, b % mod, c % mod, d % mod
    return ((a, b), (c, d))


def trace(x, mod=None):
    v = x[0][0] + x[1][1]
    return v % mod if mod is not None else v


def fixed_points(m) -> tuple[Surd, Surd]:
    """Boundary fixed points of a hyperbolic integer matrix, in increasing order."""
    (p, q), (r, s) = m
    t = p + s
    disc = t * t - 4
    if disc <= 0:
        raise RepresentationError("matrix is not hyperbolic")
    if r == 0:
        raise RepresentationError("hyperbolic integer matrix fixing infinity")
    sr = 1 if r > 0 else -1
    num, den = (p - s) * sr, 2 * abs(r)
    return Surd(num, -1, disc, den), Surd(num, 1, disc, den)


# -- representations -----------------------------------------------------------

@dataclass(frozen=True)
class HyperbolicRep:
    surface: Surface
    images: tuple
    peripheral_ok: bool

    def matrix(self, w: Word):
        return word_matrix(self.images, w)


def _check_rep(surface: Surface, images) -> HyperbolicRep:
    for m in images:
        if det(m) != 1:
            raise RepresentationError("generator image has determinant != 1")
    ok = all(abs(trace(word_matrix(images, b))) == 2 for b in surface.boundary_words)
    if not ok:
        raise RepresentationError("boundary words are not parabolic")
    return HyperbolicRep(surface, tuple(images), ok)


def preset_rep(surface: Surface) -> HyperbolicRep:
    """Discrete faithful integer representation of a shipped preset."""
    if surface.name == "t1p":
        images = (((1, 1), (1, 2)), ((1, -1), (-1, 2)))
        rep = _check_rep(surface, images)
        comm = word_matrix(images, (1, 2, -1, -2))
        if trace(comm) != -2:
            raise RepresentationError("commutator trace is not -2")
        return rep
    if surface.name == "s4p":
        # index-two subgroup of the level-two congruence group: A^2, (BA)^-1, B^2
        A = ((1, 2), (0, 1))
        B = ((1, 0), (-2, 1))
        images = (mat_mul(A, A), mat_inv(mat_mul(B, A)), mat_mul(B, B))
        return _check_rep(surface, images)
    raise SurfaceError(f"no preset representation for {surface.name!r}")


# -- axis linking ----------------------------------------------------------------

def _linked(pa, pb) -> bool:
    lo, hi = pa
    inside = 0
    for z in pb:
        c1, c2 = z.compare(lo), z.compare(hi)
        if c1 == 0 or c2 == 0:
            return False
        inside += c1 > 0 and c2 < 0
    return inside == 1


def _prefix_matrices(images, w: Word, count: int) -> list:
    """Matrices of the prefixes of length < count of the periodic word w."""
    n = len(w)
    out, m = [IDENTITY], IDENTITY
    for k in range(count - 1):
        x = w[k % n]
        g = images[abs(x) - 1]
        m = mat_mul(m, g if x > 0 else mat_inv(g))
        out.append(m)
    return out


def candidate_lines(rep: HyperbolicRep, a: Word, b: Word) -> set:
    """Matrices ``g b g^-1`` for the conjugators to try.

    ``g = s x y^-1`` where ``x``, ``y`` are prefixes of the two periodic words
    (either direction) up to twice their length and ``s`` runs over every word
    of length at most two.  Conjugating in stages and deduplicating by matrix
    keeps the work proportional to the number of distinct translates.
    """
    images = rep.images
    xs = (_prefix_matrices(images, a, 2 * len(a))
          + _prefix_matrices(images, inverse(a), 2 * len(a)))
    ys = (_prefix_matrices(images, b, 2 * len(b))
          + _prefix_matrices(images, inverse(b), 2 * len(b)))
    r = rep.surface.rank
    letters = [x for x in range(-r, r + 1) if x]
    short = [()] + [(x,) for x in letters] + [(x, y) for x in letters for y in letters if x != -y]
    shorts = {word_matrix(images, s) for s in short}
    mb = rep.matrix(b)
    stage = {_conj(mb, mat_inv(y)) for y in ys}
    stage = {_conj(m, x) for m in stage for x in xs}
    return {_conj(m, s) for m in stage for s in shorts}


def _conj(m, g):
    return mat_mul(mat_mul(g, m), mat_inv(g))


_SCALE = 10**120


def _log_position(pa, pb) -> float:
    """log |T(r1) T(r2)| where T sends the axis of ``a`` to (0, infinity)."""
    # approximate: only picks a translate, never decides a count
    p1, p2 = (z.approx(_SCALE) for z in pa)
    prod = Fraction(1)
    for z in pb:
        x = z.approx(_SCALE)
        num, den = x - p1, x - p2
        if abs(num) * _SCALE < 100 or abs(den) * _SCALE < 100:
            raise RepresentationError("insufficient precision for axis position")
        prod *= num / den
    prod = abs(prod)
    return math.log(prod.numerator) - math.log(prod.denominator)


def _orbit_count(rep: HyperbolicRep, a: Word, b: Word) -> int:
    """Number of <a>-orbits of translates of the axis of ``b`` crossing the
    axis of ``a``.

    A translate ``g.axis(b)`` is the axis of ``g b g^-1``; two conjugators give
    the same translate exactly when they give the same matrix.
    """
    ma, mb = rep.matrix(a), rep.matrix(b)
    ia = mat_inv(ma)
    pa = fixed_points(ma)
    lines = [m for m in candidate_lines(rep, a, b) if _linked(pa, fixed_points(m))]
    if not lines:
        return 0
    t0 = _log_position(pa, fixed_points(lines[0]))
    tau = _log_position(pa, fixed_points(_conj(lines[0], ma))) - t0
    if tau == 0:
        raise RepresentationError("degenerate translation length")
    # move every line near the base window, then merge a-neighbours exactly
    keys = set()
    for m in lines:
        n = math.floor(_log_position(pa, fixed_points(m)) / tau)
        step = ia if n > 0 else ma
        for _ in range(abs(n)):
            m = _conj(m, step)
        keys.add(m)
    parent = {k: k for k in keys}

    def find(k):
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    for k in keys:
        for step in (ma, ia):
            nb = _conj(k, step)
            if nb in parent:
                parent[find(k)] = find(nb)
    return len({find(k) for k in keys})


def _word_of(x) -> Word:
    if isinstance(x, ConjClass):
        return x.word
    if x is TRIVIAL:
        raise RepresentationError("trivial class")
    w = cyclic_reduce(x)
    if not w:
        raise RepresentationError("trivial class")
    return w


def _check_hyperbolic(rep, w):
    if abs(trace(rep.matrix(w))) <= 2:
        raise RepresentationError(
            f"image of {rep.surface.format(w)} is not hyperbolic")


@lru_cache(maxsize=None)
def _mutual_count(rep: HyperbolicRep, a: Word, b: Word) -> int:
    _check_hyperbolic(rep, a)
    _check_hyperbolic(rep, b)
    _, exponent = primitive_root(b)
    return exponent * _orbit_count(rep, a, b)


@lru_cache(maxsize=None)
def _self_count(rep: HyperbolicRep, a: Word) -> int:
    _check_hyperbolic(rep, a)
    _, k = primitive_root(a)
    ordered = k * _orbit_count(rep, a, a)
    if ordered % 2:
        raise RepresentationError("odd number of ordered self-crossings")
    return ordered // 2 + k - 1


def axis_linking_count(rep: HyperbolicRep, a, b=None) -> int:
    """Crossings between closed geodesics ``a`` and ``b``, or self-crossings of
    ``a`` (counting the curls of a proper power) when ``b`` is None.

    Peripheral (parabolic) classes are disjoint from everything and give 0.
    """
    wa = _word_of(a)
    if b is None:
        if abs(trace(rep.matrix(wa))) == 2:
            _, k = primitive_root(canonical_class(wa).word)
            return k - 1
        return _self_count(rep, canonical_class(wa).word)
    wb = _word_of(b)
    if abs(trace(rep.matrix(wa))) == 2 or abs(trace(rep.matrix(wb))) == 2:
        return 0
    return _mutual_count(rep, canonical_class(wa).word, canonical_class(wb).word)


# -- modular trace evaluation -------------------------------------------------------

def random_sl2(rng: random.Random, p: int = PRIME):
    while True:
        a, b, c = (rng.randrange(p) for _ in range(3))
        if a:
            d = (1 + b * c) * pow(a, -1, p) % p
            return ((a, b), (c, d))


def random_modular_rep(surface: Surface, rng: random.Random, p: int = PRIME):
    return tuple(random_sl2(rng, p) for _ in range(surface.rank))


def modular_trace(images, w: Word, p: int = PRIME) -> int:
    return trace(word_matrix(images, w, p), p)


def trace_product(images, words, p: int = PRIME) -> int:
    """Product of traces of ``words`` (a multiloop evaluated directly)."""
    out = 1
    for w in words:
        out = out * modular_trace(images, w, p) % p
    return out
