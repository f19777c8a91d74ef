"""Measured laminations as valuations on trace functions.

A weighted multicurve ``lam`` assigns to ``f = sum m_mu t_mu`` the value
``max { i(lam, mu) : m_mu != 0 }``.  Everything here is exact: weights are
Fractions and the zero function has value ``BOTTOM``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .intersect import (EMPTY, InvariantError, Multiloop, geom_intersection,
                        is_multicurve, is_simple, linked_pairs,
                        self_linked_pairs, smooth)
from .skein import (SkeinElement, expand, format_multicurve, goldman_bracket,
                    product)
from .surface import TRIVIAL, ConjClass, Surface, canonical_class

BOTTOM = float("-inf")


class LaminationError(ValueError):
    """Malformed lamination: non-simple, overlapping, or non-positive weight."""


# -- laminations ------------------------------------------------------------

@dataclass(frozen=True)
class RationalLamination:
    """Weighted multicurve with positive rational weights."""

    surface: Surface
    atoms: tuple  # ((ConjClass, Fraction), ...) sorted, classes distinct

    def __post_init__(self):
        merged: dict = {}
        for c, w in self.atoms:
            if not isinstance(c, ConjClass):
                raise LaminationError(f"atom {c!r} is not a nontrivial class")
            w = Fraction(w)
            if w <= 0:
                raise LaminationError("weights must be positive")
            merged[c] = merged.get(c, 0) + w
        classes = sorted(merged)
        if not all(is_simple(self.surface, c) for c in classes):
            raise LaminationError("lamination components must be simple")
        if not is_multicurve(self.surface, Multiloop(tuple(classes))):
            raise LaminationError("lamination components must be disjoint")
        object.__setattr__(self, "atoms", tuple((c, merged[c]) for c in classes))

    @classmethod
    def of(cls, surface: Surface, pairs) -> "RationalLamination":
        """From ``(word or class, weight)`` pairs."""
        atoms = []
        for w, weight in pairs:
            c = w if isinstance(w, ConjClass) else canonical_class(w)
            if c is TRIVIAL:
                raise LaminationError("trivial component")
            atoms.append((c, Fraction(weight)))
        return cls(surface, tuple(atoms))

    @classmethod
    def from_multicurve(cls, surface: Surface, mu: Multiloop) -> "RationalLamination":
        return cls.of(surface, [(c, 1) for c in mu])

    def scaled(self, k) -> "RationalLamination":
        return RationalLamination(self.surface,
                                  tuple((c, w * Fraction(k)) for c, w in self.atoms))

    def format(self, ascii: bool = True) -> str:
        return "; ".join(f"{self.surface.format(c.word, ascii=ascii)}: {w}"
                         for c, w in self.atoms)

    def to_json(self) -> list:
        return [[self.surface.format(c.word, ascii=True), str(w)] for c, w in self.atoms]


def parse_lamination(surface: Surface, text: str) -> RationalLamination:
    """Parse ``"b: 1; a b: 3/2"`` (atoms split by ``;`` or newlines, weight
    defaults to 1)."""
    pairs = []
    for raw in text.replace("\n", ";").split(";"):
        item = raw.split("#", 1)[0].strip()
        if not item:
            continue
        word, sep, weight = item.rpartition(":")
        if not sep:
            word, weight = item, "1"
        try:
            value = Fraction(weight.strip())
        except ValueError:
            raise LaminationError(f"bad weight {weight.strip()!r}") from None
        pairs.append((surface.parse(word), value))
    if not pairs:
        raise LaminationError("empty lamination")
    return RationalLamination.of(surface, pairs)


# -- lengths and valuations -------------------------------------------------------

def length(lam: RationalLamination, a) -> Fraction:
    """i(lam, a) for a class, word or multiloop."""
    s = lam.surface
    if not isinstance(a, (Multiloop, ConjClass)):
        a = canonical_class(a)
        if a is TRIVIAL:
            return Fraction(0)
    return sum((w * geom_intersection(s, c, a) for c, w in lam.atoms), Fraction(0))


def valuation(lam: RationalLamination, f: SkeinElement):
    """Largest lam-length over the support of ``f``; BOTTOM for ``f = 0``."""
    if f.is_zero():
        return BOTTOM
    return max(length(lam, mu) for mu in f.support())


def random_lamination(surface: Surface, rng: random.Random, max_len: int = 4,
                      max_components: int = 3, max_weight: int = 5) -> RationalLamination:
    """Random weighted multicurve built from short simple classes."""
    mu = random_multicurve(surface, rng, max_len, max_components)
    return RationalLamination.of(
        surface, [(c, Fraction(rng.randint(1, max_weight), rng.randint(1, 3))) for c in mu])


# -- simple classes and multicurves --------------------------------------------------

@lru_cache(maxsize=None)
def simple_classes(surface: Surface, max_len: int) -> tuple:
    """All simple classes of word length at most ``max_len``."""
    return tuple(c for c in surface.classes_up_to(max_len) if is_simple(surface, c))


def random_multicurve(surface: Surface, rng: random.Random, max_len: int = 4,
                      max_components: int = 2) -> Multiloop:
    """Random nonempty multicurve of at most ``max_components`` classes."""
    pool = simple_classes(surface, max_len)
    comps = [rng.choice(pool)]
    for _ in range(rng.randint(1, max_components) - 1):
        c = rng.choice(pool)
        if all(c == d or geom_intersection(surface, c, d) == 0 for d in comps):
            comps.append(c)
    return Multiloop(tuple(comps))


def disjoint_unions(surface: Surface, classes: Sequence[ConjClass],
                    max_components: int) -> list:
    """All multicurves with at most ``max_components`` distinct components
    drawn from ``classes``."""
    classes = sorted(set(classes))
    out = []

    def grow(start, chosen):
        if chosen:
            out.append(Multiloop(tuple(chosen)))
        if len(chosen) == max_components:
            return
        for k in range(start, len(classes)):
            c = classes[k]
            if all(geom_intersection(surface, c, d) == 0 for d in chosen):
                grow(k + 1, chosen + [c])

    grow(0, [])
    return out


# -- Luo products ----------------------------------------------------------------------

def luo_products(surface: Surface, mu: Multiloop, nu: Multiloop) -> tuple:
    """The two extremal smoothings ``(L_mu(nu), L_nu(mu))`` of ``mu + nu``.

    Resolving every crossing of mu with nu the same way (always turning left,
    or always right, when going from mu to nu) gives a multicurve meeting
    both mu and nu exactly i(mu, nu) times; a smoothing that switches turns
    somewhere makes a bigon with mu or nu and meets it fewer times.  Fixing
    the turn at one crossing and expanding the result therefore leaves a
    unique term meeting both i(mu, nu) times, which is the product for that
    turn.  The turn with sign +1 is reported first.

    (Testing against mu alone is not enough when mu has parallel copies of
    a curve: switching turns between two copies creates no bigon with mu.)
    """
    if not is_multicurve(surface, mu) or not is_multicurve(surface, nu):
        raise ValueError("luo_products needs two multicurves")
    n = geom_intersection(surface, mu, nu)
    if n == 0:
        both = mu | nu
        return both, both
    datum = None
    for a in mu:
        for b in nu:
            if a != b:
                data = linked_pairs(surface, a, b)
                if data:
                    datum = min(data, key=lambda d: d.tag)
                    break
        if datum is not None:
            break
    plus, minus = smooth(surface, mu | nu, datum)
    turns = (plus, minus) if datum.sign > 0 else (minus, plus)
    found = []
    for s in turns:
        if s.trivial:
            raise InvariantError("consistent smoothing produced a trivial loop")
        support = expand(surface, s.loops).support()
        top = [xi for xi in support
               if geom_intersection(surface, mu, xi) == n
               and geom_intersection(surface, nu, xi) == n]
        if len(top) != 1:
            raise InvariantError(
                f"expected one smoothing meeting mu and nu {n} times each, "
                f"found {len(top)}")
        xi = top[0]
        if any(geom_intersection(surface, mu, other) > n for other in support):
            raise InvariantError("a smoothing meets mu more than mu meets nu")
        found.append(xi)
    return found[0], found[1]


# -- Newton sets -------------------------------------------------------------------------

@dataclass
class NewtonReport:
    """Certified extremal members of a support, with witnesses."""

    surface: Surface
    certified: dict = field(default_factory=dict)    # Multiloop -> witness Multiloop
    unknown: list = field(default_factory=list)
    coefficients: dict = field(default_factory=dict)  # Multiloop -> int
    family_size: int = 0

    def verify(self) -> bool:
        """Recheck every certificate by direct recomputation."""
        s = self.surface
        for mu, xi in self.certified.items():
            own = geom_intersection(s, xi, mu)
            if any(geom_intersection(s, xi, nu) >= own
                   for nu in self.coefficients if nu != mu):
                return False
        return True

    def to_json(self) -> dict:
        s = self.surface

        def words(m):
            return [s.format(c.word, ascii=True) for c in m]

        return {
            "support": [{"multicurve": words(mu), "label": format_multicurve(s, mu, True),
                         "coefficient": self.coefficients[mu]}
                        for mu in sorted(self.coefficients)],
            "certified": [{"multicurve": words(mu), "label": format_multicurve(s, mu, True),
                           "witness": words(self.certified[mu])}
                          for mu in sorted(self.certified)],
            "unknown": [{"multicurve": words(mu), "label": format_multicurve(s, mu, True)}
                        for mu in sorted(self.unknown)],
            "family_size": self.family_size,
        }


def auto_family(f: SkeinElement, max_len: int = 6, max_components: int = 3,
                twists: int = 1) -> list:
    """Default witness family for ``f``.

    Short simple classes and their disjoint unions, the support itself, and
    Luo products of support pairs, iterated up to ``twists`` times (repeated
    products with the same curve behave like powers of a Dehn twist and
    separate the two products of a pair).
    """
    s = f.surface
    pool = [c for c in simple_classes(s, max_len)]
    family = set(disjoint_unions(s, pool, max_components))
    support = f.support()
    family.update(mu for mu in support if mu.components)
    for mu, nu in itertools.combinations(support, 2):
        if not mu.components or not nu.components:
            continue
        if geom_intersection(s, mu, nu) == 0:
            continue
        for first, second in ((mu, nu), (nu, mu)):
            try:
                cur = luo_products(s, first, second)
                family.update(cur)
                # iterate L_first(.) on both products: twist-like curves
                for _ in range(twists - 1):
                    cur = tuple(luo_products(s, first, x)[k] for k, x in enumerate(cur))
                    family.update(cur)
            except InvariantError:
                # repeated components can spoil uniqueness; witnesses only
                continue
    family.discard(EMPTY)
    # simplest witnesses first
    return sorted(family, key=lambda m: (len(m), sum(len(c) for c in m), m))


def newton_set(f: SkeinElement, family: Optional[Iterable[Multiloop]] = None,
               max_len: int = 6, max_components: int = 3) -> NewtonReport:
    """Certify extremal members of Supp(f).

    ``mu`` is certified by ``xi`` when i(xi, mu) > i(xi, nu) for every other
    support member ``nu``.  Members without a witness in the family are
    reported unknown, never non-extremal.
    """
    s = f.surface
    support = f.support()
    report = NewtonReport(s, coefficients={mu: f.coefficient(mu) for mu in support})
    if len(support) == 1:
        report.certified[support[0]] = EMPTY
        return report
    if family is None:
        family = auto_family(f, max_len, max_components)
    family = list(family)
    report.family_size = len(family)
    # intersection profile of each support member with each component seen
    profiles = []
    cache: dict = {}

    def i_with(c, mu):
        key = (c, mu)
        if key not in cache:
            cache[key] = geom_intersection(s, c, mu)
        return cache[key]

    for xi in family:
        profiles.append((xi, [sum(i_with(c, mu) for c in xi) for mu in support]))
    for k, mu in enumerate(support):
        for xi, prof in profiles:
            own = prof[k]
            if all(prof[j] < own for j in range(len(support)) if j != k):
                report.certified[mu] = xi
                break
        else:
            report.unknown.append(mu)
    return report


# -- identity checks -------------------------------------------------------------------

@dataclass
class CheckReport:
    name: str
    checked: int = 0
    violations: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_unitarity(f: SkeinElement, family=None, report: Optional[NewtonReport] = None) -> CheckReport:
    """Certified extremal coefficients of an expanded multiloop are +-1."""
    rep = report if report is not None else newton_set(f, family)
    out = CheckReport("unitarity")
    for mu in sorted(rep.certified):
        out.checked += 1
        c = rep.coefficients[mu]
        if abs(c) != 1:
            out.violations.append((mu, c))
    out.notes = list(rep.unknown)
    return out


def check_bracket_inequality(f: SkeinElement, g: SkeinElement, lams) -> CheckReport:
    """v({f, g}) <= v(f) + v(g) for every lamination given."""
    br = goldman_bracket(f, g)
    out = CheckReport("bracket-inequality")
    for lam in lams:
        out.checked += 1
        lhs, rhs = valuation(lam, br), valuation(lam, f) + valuation(lam, g)
        if lhs > rhs:
            out.violations.append((lam, lhs, rhs))
    return out


def check_smoothing_lemma(surface: Surface, a, lam: RationalLamination) -> CheckReport:
    """At every self-crossing of ``a``: v(t_a) = max(v(t_{a+}), v(t_{a-}))."""
    c = a if isinstance(a, ConjClass) else canonical_class(a)
    data = self_linked_pairs(surface, c)
    if not data:
        raise ValueError("check_smoothing_lemma needs a non-simple class")
    m = Multiloop((c,))
    lhs = valuation(lam, expand(surface, m))
    out = CheckReport("smoothing-lemma")
    for d in data:
        out.checked += 1
        plus, minus = smooth(surface, m, d)
        vp = valuation(lam, expand(surface, plus.loops))
        vm = valuation(lam, expand(surface, minus.loops))
        if lhs != max(vp, vm):
            out.violations.append((d.tag, lhs, vp, vm))
    return out


@dataclass
class AcuteReport:
    violations: list
    positive: bool
    nonpositive: list


def acute_violations(lam: RationalLamination, pairs) -> AcuteReport:
    """Word pairs (alpha, beta) with v(t_ab) = v(t_a t_b) = v(t_ab^-1), and
    whether every loop supplied has positive value."""
    s = lam.surface
    violations, nonpositive = [], []
    for a, b in pairs:
        a = a.word if isinstance(a, ConjClass) else tuple(a)
        b = b.word if isinstance(b, ConjClass) else tuple(b)
        for w in (a, b):
            if canonical_class(w) is not TRIVIAL and length(lam, w) == 0:
                nonpositive.append(w)
        inv = tuple(-x for x in reversed(b))
        v_ab = _loop_value(lam, a + b)
        v_prod = valuation(lam, expand(s, [x for x in (a, b) if canonical_class(x) is not TRIVIAL]))
        v_abi = _loop_value(lam, a + inv)
        if v_ab == v_prod == v_abi:
            violations.append((a, b, v_ab))
    return AcuteReport(violations, not nonpositive, nonpositive)


def _loop_value(lam, w):
    c = canonical_class(w)
    if c is TRIVIAL:
        return Fraction(0)  # t_1 = 2 is a nonzero constant
    return valuation(lam, expand(lam.surface, [c]))


def strict_violations(lam: RationalLamination, family) -> list:
    """Unordered pairs of distinct multicurves with equal lam-length."""
    family = sorted(set(family))
    lengths = [length(lam, mu) for mu in family]
    return [(family[x], family[y])
            for x in range(len(family)) for y in range(x + 1, len(family))
            if lengths[x] == lengths[y]]
