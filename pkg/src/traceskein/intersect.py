"""Minimal-position intersection points of loops, read off cyclic words.

Lift everything to the universal cover of the fat graph: a tree whose
vertices are group elements and whose edges at every vertex follow the same
cyclic order.  A cyclically reduced word ``w`` has an axis through the
identity, and the ends of the tree sit on a circle in the induced cyclic
order.  Two closed curves cross once for every pair of lifts whose ends
alternate on that circle.

For cyclically reduced ``a`` and ``b`` every crossing pair of lifts can be
moved so that the second axis passes through a vertex ``a[:i]`` of the first
one, entering at position ``j`` of ``b``.  Among all such (i, j) describing the
same double coset exactly one sits at the start of the shared segment (seen
along ``a``), so counting only those gives one candidate per intersection.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Union

from .surface import (TRIVIAL, ConjClass, Surface, Word, canonical_class,
                      cyclic_reduce, free_reduce, inverse)


class IntersectionError(ValueError):
    """Bad input to an intersection routine (trivial class, wrong kind)."""


class InvariantError(RuntimeError):
    """An internal consistency check failed; indicates a bug."""


@dataclass(frozen=True, order=True)
class Multiloop:
    """Multiset of nontrivial free homotopy classes, kept sorted."""

    components: tuple = ()

    def __post_init__(self):
        comps = tuple(sorted(self.components))
        if any(c is TRIVIAL or not isinstance(c, ConjClass) for c in comps):
            raise IntersectionError("multiloop components must be nontrivial ConjClasses")
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "_hash", hash(comps))

    def __hash__(self):
        return self._hash

    @classmethod
    def of(cls, *words) -> "Multiloop":
        """Multiloop from words or classes; trivial words are rejected."""
        comps = []
        for w in words:
            c = w if isinstance(w, ConjClass) else canonical_class(w)
            if c is TRIVIAL:
                raise IntersectionError(f"trivial component {w!r}")
            comps.append(c)
        return cls(tuple(comps))

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __or__(self, other: "Multiloop") -> "Multiloop":
        return Multiloop(self.components + other.components)

    def without(self, *classes: ConjClass) -> "Multiloop":
        rest = list(self.components)
        for c in classes:
            try:
                rest.remove(c)
            except ValueError:
                raise IntersectionError(f"{c} is not a component") from None
        return Multiloop(tuple(rest))


Multicurve = Multiloop
EMPTY = Multiloop()


@dataclass(frozen=True)
class IntersectionDatum:
    """One intersection point of taut representatives.

    ``left`` and ``right`` are the two loops based at the point.  For a
    crossing between two components, they are conjugates of ``first`` and
    ``second``.  For a self-crossing of ``first`` the loop splits as
    ``left * right``.  ``sign`` is the crossing sign of (left, right) for the
    orientations carried by the input words.
    """

    kind: str
    left: Word
    right: Word
    sign: int
    tag: tuple
    first: ConjClass
    second: ConjClass | None = None


class Smoothing(NamedTuple):
    loops: Multiloop
    trivial: int


# -- boundary rays ---------------------------------------------------------

def _common_prefix(r: Word, s: Word, cap: int) -> int:
    n, m = len(r), len(s)
    k = 0
    while k < cap:
        if r[k % n] != s[k % m]:
            return k
        k += 1
    raise InvariantError("rays agree beyond the commensurability bound")


def ray_orientation(surface: Surface, r1: Word, r2: Word, r3: Word) -> int:
    """Cyclic orientation (+1/-1) of the ends ``ri ** infinity`` of the tree.

    Each ``ri`` must be cyclically reduced so that its infinite power is a
    reduced ray from the identity.  The three rays must be distinct.
    """
    cap = 2 * (len(r1) + len(r2) + len(r3))
    m12 = _common_prefix(r1, r2, cap)
    m13 = _common_prefix(r1, r3, cap)
    m23 = _common_prefix(r2, r3, cap)
    top = max(m12, m13, m23)

    def at(r, k):
        return r[k % len(r)]

    if m12 == m13 == m23:
        d = (at(r1, top), at(r2, top), at(r3, top))
    elif m12 == top:
        d = (at(r1, top), at(r2, top), -at(r1, top - 1))
    elif m13 == top:
        d = (at(r1, top), -at(r1, top - 1), at(r3, top))
    else:
        d = (-at(r2, top - 1), at(r2, top), at(r3, top))
    return surface.ccw(*d)


def _crossing(surface: Surface, u: Word, v: Word):
    """Linking test and sign for axes of ``u`` and ``v`` through the identity."""
    ui, vi = inverse(u), inverse(v)
    s_plus = ray_orientation(surface, u, ui, v)
    s_minus = ray_orientation(surface, u, ui, vi)
    if s_plus == s_minus:
        return None
    # v crosses from the right of u to its left: positive
    return ray_orientation(surface, u, v, ui)


def _rotate(w: Word, i: int) -> Word:
    return w[i:] + w[:i]


@lru_cache(maxsize=None)
def _candidates(surface: Surface, a: Word, b: Word, self_pairs: bool):
    """All (i, j, overlap, same_direction, sign) crossing candidates."""
    return tuple(_iter_candidates(surface, a, b, self_pairs))


def _iter_candidates(surface: Surface, a: Word, b: Word, self_pairs: bool):
    n, m = len(a), len(b)
    cap = n + m
    period = len(_root(a)) if self_pairs else None
    for i in range(n):
        back = -a[i - 1]
        for j in range(m):
            if self_pairs and (i - j) % period == 0:
                continue
            if back == b[j] or back == -b[j - 1]:
                continue
            if a[i] == b[j]:
                same = True
                k = 0
                while k < cap and a[(i + k) % n] == b[(j + k) % m]:
                    k += 1
            elif a[i] == -b[j - 1]:
                same = False
                k = 0
                while k < cap and a[(i + k) % n] == -b[(j - 1 - k) % m]:
                    k += 1
            else:
                same, k = True, 0
            if k >= cap:
                continue
            sign = _crossing(surface, _rotate(a, i), _rotate(b, j))
            if sign is not None:
                yield (i, j, k, same, sign)


def _root(w: Word) -> Word:
    n = len(w)
    for p in range(1, n + 1):
        if n % p == 0 and w[p:] + w[:p] == w:
            return w[:p]
    return w


def _as_word(x: Union[ConjClass, Word]) -> Word:
    if isinstance(x, ConjClass):
        return x.word
    if x is TRIVIAL:
        raise IntersectionError("trivial class has no intersections")
    w = cyclic_reduce(x)
    if not w:
        raise IntersectionError("trivial class has no intersections")
    return w


def _as_class(x) -> ConjClass:
    return x if isinstance(x, ConjClass) else canonical_class(x)


def linked_pairs(surface: Surface, a, b) -> list:
    """Intersection data between two distinct loops ``a`` and ``b``.

    Accepts ConjClasses or words; a word keeps its orientation, which fixes
    the crossing signs.
    """
    wa, wb = _as_word(a), _as_word(b)
    ca, cb = _as_class(wa), _as_class(wb)
    if ca == cb:
        raise IntersectionError("same class: use self_linked_pairs")
    data = []
    for i, j, _, _, sign in _candidates(surface, wa, wb, False):
        data.append(IntersectionDatum("mutual", _rotate(wa, i), _rotate(wb, j),
                                      sign, ("x", i, j), ca, cb))
    return data


def self_linked_pairs(surface: Surface, a) -> list:
    """Self-intersection data of a loop, one per double point.

    A proper power ``p**k`` also carries the ``k - 1`` double points of a
    k-fold curl around ``p``; those are tagged ``("power", m)``.
    """
    wa = _as_word(a)
    ca = _as_class(wa)
    n = len(wa)
    data = []
    for i, j, k, same, sign in _candidates(surface, wa, wa, True):
        partner = (j, i) if same else ((j - k) % n, (i + k) % n)
        if partner == (i, j):
            raise InvariantError("crossing paired with itself")
        if (i, j) > partner:
            continue
        u = _rotate(wa, i)
        cut = (j - i) % n
        data.append(IntersectionDatum("self", u[:cut], u[cut:], sign,
                                      ("x", i, j), ca))
    root, power = _root(wa), n // len(_root(wa))
    for m in range(1, power):
        data.append(IntersectionDatum("self", root * m, root * (power - m), 1,
                                      ("power", m), ca))
    return data


@lru_cache(maxsize=None)
def _pair_count(surface: Surface, a: ConjClass, b: ConjClass) -> int:
    if a == b:
        return len(_candidates(surface, a.word, a.word, True))
    return len(_candidates(surface, a.word, b.word, False))


@lru_cache(maxsize=None)
def self_intersection(surface: Surface, a) -> int:
    a = _as_class(_as_word(a))
    return len(self_linked_pairs(surface, a))


@lru_cache(maxsize=None)
def is_simple(surface: Surface, a) -> bool:
    w = _as_word(a)
    w = _as_class(w).word
    if len(_root(w)) != len(w):
        return False
    # stop at the first crossing
    return next(_iter_candidates(surface, w, w, True), None) is None


def geom_intersection(surface: Surface, a, b) -> int:
    """Geometric intersection number, additive over multiloop components.

    For two copies of the same class this is the number of crossings between
    parallel copies, i.e. twice the self-intersection of the underlying
    crossing pattern (curls of proper powers do not count).
    """
    if isinstance(a, Multiloop) or isinstance(b, Multiloop):
        ca = a.components if isinstance(a, Multiloop) else (_as_class(_as_word(a)),)
        cb = b.components if isinstance(b, Multiloop) else (_as_class(_as_word(b)),)
        return sum(_pair_count(surface, x, y) for x in ca for y in cb)
    return _pair_count(surface, _as_class(_as_word(a)), _as_class(_as_word(b)))


@lru_cache(maxsize=200_000)
def total_intersection(surface: Surface, m: Multiloop) -> int:
    comps = m.components
    total = sum(self_intersection(surface, c) for c in comps)
    for x in range(len(comps)):
        for y in range(x + 1, len(comps)):
            total += _pair_count(surface, comps[x], comps[y])
    return total


def is_multicurve(surface: Surface, m: Multiloop) -> bool:
    return total_intersection(surface, m) == 0


def _smoothing(words, rest: Multiloop) -> Smoothing:
    comps = list(rest.components)
    trivial = 0
    for w in words:
        c = canonical_class(w)
        if c is TRIVIAL:
            trivial += 1
        else:
            comps.append(c)
    return Smoothing(Multiloop(tuple(comps)), trivial)


def smooth(surface: Surface, m: Multiloop, d: IntersectionDatum):
    """The two smoothings of ``m`` at ``d`` as ``(plus, minus)``.

    Mutual datum on (u, v): ``{uv}`` and ``{u v^-1}``.  Self datum on ``uv``:
    ``{u, v}`` and ``{u v^-1}``.  Trivial components are counted in
    ``Smoothing.trivial`` rather than kept in the multiloop.
    """
    u, v = d.left, d.right
    if d.kind == "mutual":
        rest = m.without(d.first, d.second)
        plus = _smoothing([free_reduce(u + v)], rest)
    elif d.kind == "self":
        rest = m.without(d.first)
        plus = _smoothing([u, v], rest)
    else:
        raise IntersectionError(f"unknown datum kind {d.kind!r}")
    minus = _smoothing([free_reduce(u + inverse(v))], rest)
    before = total_intersection(surface, m)
    for s in (plus, minus):
        if total_intersection(surface, s.loops) >= before:
            raise InvariantError(
                f"smoothing at {d.tag} did not lower the intersection count")
    return plus, minus


def intersection_report(surface: Surface, data) -> list:
    """JSON-ready description of intersection data."""
    return [{
        "kind": d.kind,
        "left": surface.format(d.left, ascii=True),
        "right": surface.format(d.right, ascii=True),
        "sign": d.sign,
        "tag": list(d.tag),
    } for d in data]
