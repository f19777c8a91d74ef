"""Trace functions in the multicurve basis.

Every product of trace functions of loops is an integer combination of
``t_mu`` over multicurves ``mu``.  Expansion resolves crossings one at a time
using

    t_u t_v = t_{uv} + t_{uv^-1}       (two loops through a crossing)
    t_{uv}  = t_u t_v - t_{uv^-1}       (a loop crossing itself)
    t_1     = 2                          (trivial loop)

Each step lowers the total number of crossings, so the recursion stops at
simple disjoint multiloops, which are basis elements.
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterable, Mapping, Optional

from .intersect import (EMPTY, IntersectionDatum, Multiloop, linked_pairs,
                        self_intersection, self_linked_pairs, smooth)
from .oracle import PRIME, RepresentationError, det, trace, word_matrix
from .surface import ConjClass, Surface, canonical_class

Multicurve = Multiloop

_DISPLAY = {"alpha": "α", "beta": "β", "gamma": "γ", "delta": "δ"}


class SkeinElement:
    """Finite integer combination of multicurves on a fixed surface."""

    __slots__ = ("surface", "_terms")

    def __init__(self, surface: Surface, terms: Optional[Mapping] = None):
        self.surface = surface
        clean = {}
        for mu, c in (terms or {}).items():
            if not isinstance(mu, Multiloop):
                raise TypeError("SkeinElement keys must be Multiloops")
            if c:
                clean[mu] = int(c)
        self._terms = clean

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, surface: Surface) -> "SkeinElement":
        return cls(surface)

    @classmethod
    def one(cls, surface: Surface) -> "SkeinElement":
        return cls(surface, {EMPTY: 1})

    @classmethod
    def basis(cls, surface: Surface, mu: Multiloop, coefficient: int = 1) -> "SkeinElement":
        return cls(surface, {mu: coefficient})

    # -- inspection ----------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def support(self) -> list:
        return sorted(self._terms)

    def coefficient(self, mu: Multiloop) -> int:
        return self._terms.get(mu, 0)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, SkeinElement):
            return NotImplemented
        return self.surface == other.surface and self._terms == other._terms

    def __hash__(self):
        return hash((self.surface, frozenset(self._terms.items())))

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "SkeinElement"):
        if self.surface != other.surface:
            raise ValueError("elements live on different surfaces")

    def __add__(self, other: "SkeinElement") -> "SkeinElement":
        self._check(other)
        out = dict(self._terms)
        for mu, c in other._terms.items():
            out[mu] = out.get(mu, 0) + c
        return SkeinElement(self.surface, out)

    def __neg__(self) -> "SkeinElement":
        return SkeinElement(self.surface, {mu: -c for mu, c in self._terms.items()})

    def __sub__(self, other: "SkeinElement") -> "SkeinElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SkeinElement(self.surface, {mu: c * other for mu, c in self._terms.items()})
        if isinstance(other, SkeinElement):
            return product(self, other)
        return NotImplemented

    __rmul__ = __mul__

    # -- output --------------------------------------------------------------

    def __repr__(self):
        return f"SkeinElement({self.surface.name}, {self.format(ascii=True)})"

    def __str__(self):
        return self.format()

    def format(self, ascii: bool = False) -> str:
        """Render as ``+2·t[δ] -2·t[γ]``; largest coefficients first."""
        if not self._terms:
            return "0"
        dot = "*" if ascii else "·"
        minus = "-" if ascii else "−"
        parts = []
        for mu, c in sorted(self._terms.items(), key=lambda kv: (-kv[1], kv[0])):
            sign = "+" if c > 0 else minus
            mag = abs(c)
            if not mu.components:
                parts.append(f"{sign}{mag}")
                continue
            body = f"t[{format_multicurve(self.surface, mu, ascii)}]"
            parts.append(f"{sign}{body}" if mag == 1 else f"{sign}{mag}{dot}{body}")
        return " ".join(parts)

    def to_json(self) -> list:
        """Sorted list of ``[[component words...], coefficient]``."""
        return [[[self.surface.format(c.word, ascii=True) for c in mu], c]
                for mu, c in self.items()]

    @classmethod
    def from_json(cls, surface: Surface, data) -> "SkeinElement":
        terms = {}
        for words, c in data:
            mu = Multiloop.of(*(surface.parse(w) for w in words))
            terms[mu] = terms.get(mu, 0) + int(c)
        return cls(surface, terms)


def curve_label(surface: Surface, c: ConjClass, ascii: bool = False) -> str:
    """Name of a shipped curve if ``c`` is one, else its word."""
    for name, word in surface.curves:
        if canonical_class(word) == c:
            return name if ascii else _DISPLAY.get(name, name)
    return surface.format(c.word, ascii=ascii)


def format_multicurve(surface: Surface, mu: Multiloop, ascii: bool = False) -> str:
    if not mu.components:
        return "∅" if not ascii else "empty"
    sep = " + " if ascii else " ∪ "
    return sep.join(sorted(curve_label(surface, c, ascii) for c in mu))


# -- expansion -----------------------------------------------------------------

def _choose_datum(surface: Surface, m: Multiloop) -> Optional[IntersectionDatum]:
    """First datum of the most self-crossing component, else the first
    crossing between two components; None for a multicurve."""
    comps = m.components
    worst, best = None, 0
    for c in comps:
        k = self_intersection(surface, c)
        if k > best:
            worst, best = c, k
    if worst is not None:
        return min(self_linked_pairs(surface, worst), key=lambda d: d.tag)
    for x in range(len(comps)):
        for y in range(x + 1, len(comps)):
            if comps[x] == comps[y]:
                continue
            data = linked_pairs(surface, comps[x], comps[y])
            if data:
                return min(data, key=lambda d: d.tag)
    return None


def _all_data(surface: Surface, m: Multiloop) -> list:
    comps = m.components
    data = []
    for c in sorted(set(comps)):
        data.extend(self_linked_pairs(surface, c))
    distinct = sorted(set(comps))
    for x in range(len(distinct)):
        for y in range(x + 1, len(distinct)):
            data.extend(linked_pairs(surface, distinct[x], distinct[y]))
    return data


def _resolve(surface: Surface, m: Multiloop, d: IntersectionDatum, recurse) -> dict:
    plus, minus = smooth(surface, m, d)
    sgn = 1 if d.kind == "mutual" else -1
    out: dict = {}
    for s, factor in ((plus, 1), (minus, sgn)):
        factor *= 2 ** s.trivial
        for mu, c in recurse(s.loops).items():
            out[mu] = out.get(mu, 0) + factor * c
    return {mu: c for mu, c in out.items() if c}


@lru_cache(maxsize=200_000)
def _expand_cached(surface: Surface, m: Multiloop) -> tuple:
    d = _choose_datum(surface, m)
    if d is None:
        return ((m, 1),)
    terms = _resolve(surface, m, d, lambda s: dict(_expand_cached(surface, s)))
    return tuple(sorted(terms.items()))


def _expand_random(surface: Surface, m: Multiloop, rng: random.Random, memo: dict) -> dict:
    if m in memo:
        return memo[m]
    data = _all_data(surface, m)
    if not data:
        out = {m: 1}
    else:
        d = rng.choice(data)
        out = _resolve(surface, m, d, lambda s: _expand_random(surface, s, rng, memo))
    memo[m] = out
    return out


def _as_multiloop(surface: Surface, m) -> Multiloop:
    if isinstance(m, Multiloop):
        return m
    if isinstance(m, ConjClass):
        return Multiloop((m,))
    return Multiloop.of(*m)


def expand(surface: Surface, m, rng: Optional[random.Random] = None) -> SkeinElement:
    """Multicurve-basis expansion of the product of traces of ``m``.

    ``m`` is a Multiloop, a ConjClass, or an iterable of words/classes.
    With ``rng`` the crossing to resolve is picked at random at every step
    instead of by the fixed rule; the answer must not change.
    """
    m = _as_multiloop(surface, m)
    if rng is None:
        return SkeinElement(surface, dict(_expand_cached(surface, m)))
    return SkeinElement(surface, _expand_random(surface, m, rng, {}))


def loop(surface: Surface, w) -> SkeinElement:
    """The trace function of a single loop (word or class), expanded."""
    return expand(surface, [w])


def product(f: SkeinElement, g: SkeinElement) -> SkeinElement:
    f._check(g)
    surface = f.surface
    out: dict = {}
    for mu, a in f._terms.items():
        for nu, b in g._terms.items():
            for xi, c in _expand_cached(surface, mu | nu):
                out[xi] = out.get(xi, 0) + a * b * c
    return SkeinElement(surface, out)


# -- Goldman bracket --------------------------------------------------------------

def _bracket_terms(surface: Surface, left, right) -> dict:
    """{prod t_a, prod t_b} for loops ``left`` and ``right`` given as words
    (orientation as written) or classes.

    Sum over crossings p of a component of ``left`` with one of ``right`` of
    sign_p (t(rest + u v) - t(rest + u v^-1)).  Summing over every component
    pair is the Leibniz rule; ``rest`` carries the untouched components.
    Pairs of equal classes contribute {t_a, t_a} = 0.
    """
    left = [c.word if isinstance(c, ConjClass) else tuple(c) for c in left]
    right = [c.word if isinstance(c, ConjClass) else tuple(c) for c in right]
    whole = Multiloop.of(*left) | Multiloop.of(*right)
    out: dict = {}
    for a in left:
        for b in right:
            if canonical_class(a) == canonical_class(b):
                continue
            for d in linked_pairs(surface, a, b):
                plus, minus = smooth(surface, whole, d)
                for s, sgn in ((plus, d.sign), (minus, -d.sign)):
                    factor = sgn * 2 ** s.trivial
                    for xi, c in _expand_cached(surface, s.loops):
                        out[xi] = out.get(xi, 0) + factor * c
    return out


def loop_bracket(surface: Surface, left, right) -> SkeinElement:
    """Bracket of the trace products of two lists of loops.

    Words keep the orientation they are written with, so this is the place
    to check that reversing a loop does not change the answer.
    """
    return SkeinElement(surface, _bracket_terms(surface, left, right))


def goldman_bracket(f: SkeinElement, g: SkeinElement) -> SkeinElement:
    """Poisson bracket of two elements, bilinear in both arguments."""
    f._check(g)
    surface = f.surface
    out: dict = {}
    for mu, a in f._terms.items():
        for nu, b in g._terms.items():
            for xi, c in _bracket_terms(surface, mu.components, nu.components).items():
                out[xi] = out.get(xi, 0) + a * b * c
    return SkeinElement(surface, out)


# -- evaluation ---------------------------------------------------------------------

def evaluate(f: SkeinElement, images, p: Optional[int] = PRIME) -> int:
    """Value of ``f`` at the representation sending generator k to
    ``images[k]``; arithmetic is mod ``p`` (exact integers if ``p`` is None).
    """
    images = tuple(images)
    if len(images) != f.surface.rank:
        raise RepresentationError("need one matrix per generator")
    for m in images:
        if det(m, p) != (1 if p is None else 1 % p):
            raise RepresentationError("generator image has determinant != 1")
    total = 0
    for mu, c in f._terms.items():
        term = c
        for comp in mu:
            term *= trace(word_matrix(images, comp.word, p), p)
            if p is not None:
                term %= p
        total += term
    return total % p if p is not None else total


def direct_trace(images, words: Iterable, p: Optional[int] = PRIME) -> int:
    """Product of the traces of the given words (trivial word -> 2)."""
    out = 1
    for w in words:
        w = w.word if isinstance(w, ConjClass) else tuple(w)
        out *= trace(word_matrix(images, w, p), p)
        if p is not None:
            out %= p
    return out
