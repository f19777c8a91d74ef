"""Randomized verification sweeps shared by the command line and the tests.

Each sweep draws its cases from ``random.Random(f"{seed}:{name}")``, so a
seed fixes every case, and returns a :class:`SweepResult` whose failures
carry enough to reproduce the case by hand.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Optional

from .intersect import (Multiloop, geom_intersection, is_simple,
                        self_intersection)
from .oracle import axis_linking_count, preset_rep, random_modular_rep
from .skein import (SkeinElement, direct_trace, evaluate, expand,
                    format_multicurve, goldman_bracket, loop, loop_bracket)
from .surface import (Surface, canonical_class, four_punctured_sphere,
                      inverse, punctured_torus)
from .valuation import (check_bracket_inequality, check_smoothing_lemma,
                        check_unitarity, luo_products, newton_set,
                        random_lamination, random_multicurve, valuation)


@dataclass
class SweepResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, surface: Surface, what: str, **case):
        entry = {"surface": surface.name, "check": what}
        entry.update(case)
        self.failures.append(entry)

    def to_json(self, seed) -> dict:
        return {"suite": self.name, "seed": seed, "checked": self.checked,
                "passed": self.ok, "failures": self.failures, "info": self.info}


def presets() -> list:
    return [punctured_torus(), four_punctured_sphere()]


def _w(surface: Surface, w) -> str:
    return surface.format(getattr(w, "word", w), ascii=True)


def _m(surface: Surface, m: Multiloop) -> list:
    return [_w(surface, c) for c in m]


def random_multiloop(surface: Surface, rng: random.Random, total: int,
                     max_components: int = 3) -> Multiloop:
    """Random multiloop whose component lengths add up to at most ``total``."""
    k = rng.randint(1, max_components)
    comps = []
    budget = total
    for i in range(k):
        if budget < 1:
            break
        n = rng.randint(1, max(1, budget - (k - 1 - i)))
        comps.append(surface.random_class(n, rng))
        budget -= len(comps[-1])
    return Multiloop(tuple(comps))


# -- four-punctured sphere example ------------------------------------------

FIGURE1_PRODUCT = "+t[c1 + c3] +t[c2 + c4] -t[delta] -t[gamma]"
FIGURE1_BRACKET = "+2*t[delta] -2*t[gamma]"


def figure1_elements(surface: Optional[Surface] = None):
    s = surface or four_punctured_sphere()
    alpha, beta = loop(s, s.curve("alpha")), loop(s, s.curve("beta"))
    return s, alpha * beta, goldman_bracket(alpha, beta)


def figure1_expected(s: Surface):
    c = {name: canonical_class(s.curve(name)) for name in
         ("c1", "c2", "c3", "c4", "gamma", "delta")}
    prod = SkeinElement(s, {Multiloop((c["c1"], c["c3"])): 1,
                            Multiloop((c["c2"], c["c4"])): 1,
                            Multiloop((c["gamma"],)): -1,
                            Multiloop((c["delta"],)): -1})
    br = SkeinElement(s, {Multiloop((c["delta"],)): 2, Multiloop((c["gamma"],)): -2})
    return prod, br


def sweep_figure1(seed=0, samples=None) -> SweepResult:
    """Both identities of the four-punctured sphere example, plus the Newton
    sets.  Product-side certification is reported, not asserted: the two
    peripheral products meet every curve zero times."""
    res = SweepResult("figure1")
    s, prod, br = figure1_elements()
    want_prod, want_br = figure1_expected(s)
    res.checked += 1
    if prod != want_prod or prod.format(ascii=True) != FIGURE1_PRODUCT:
        res.fail(s, "product", got=prod.format(ascii=True), want=FIGURE1_PRODUCT)
    res.checked += 1
    if br != want_br or br.format(ascii=True) != FIGURE1_BRACKET:
        res.fail(s, "bracket", got=br.format(ascii=True), want=FIGURE1_BRACKET)
    rb = newton_set(br)
    res.checked += 1
    if set(rb.certified) != set(br.support()) or rb.unknown or not rb.verify():
        res.fail(s, "bracket-newton", certified=sorted(format_multicurve(s, m, True)
                                                       for m in rb.certified))
    rp = newton_set(prod)
    res.checked += 1
    if not rp.verify():
        res.fail(s, "product-newton-soundness")
    res.info = {
        "product": prod.format(ascii=True),
        "bracket": br.format(ascii=True),
        "product_certified": sorted(format_multicurve(s, m, True) for m in rp.certified),
        "product_unknown": sorted(format_multicurve(s, m, True) for m in rp.unknown),
        "bracket_certified": sorted(format_multicurve(s, m, True) for m in rb.certified),
    }
    return res


# -- oracles -------------------------------------------------------------------

def sweep_oracle(seed=0, samples=500, self_samples=200, max_len=12) -> SweepResult:
    """Combinatorial intersection counts against hyperbolic axis linking."""
    res = SweepResult("oracle")
    rng = random.Random(f"{seed}:oracle")
    for s in presets():
        rep = preset_rep(s)
        n = 0
        while n < samples:
            a, b = s.random_class(max_len, rng), s.random_class(max_len, rng)
            if a == b:
                continue
            n += 1
            res.checked += 1
            x, y = geom_intersection(s, a, b), axis_linking_count(rep, a, b)
            if x != y:
                res.fail(s, "pair", words=[_w(s, a), _w(s, b)], combinatorial=x, oracle=y)
        for _ in range(self_samples):
            a = s.random_class(max_len, rng)
            res.checked += 1
            x, y = self_intersection(s, a), axis_linking_count(rep, a)
            if x != y:
                res.fail(s, "self", words=[_w(s, a)], combinatorial=x, oracle=y)
    return res


def sweep_traces(seed=0, samples=100, reps=20, total=16) -> SweepResult:
    """evaluate(expand(m)) against direct trace products mod 2^31 - 1."""
    res = SweepResult("traces")
    rng = random.Random(f"{seed}:traces")
    for s in presets():
        for _ in range(samples):
            m = random_multiloop(s, rng, total)
            f = expand(s, m)
            res.checked += 1
            for _ in range(reps):
                images = random_modular_rep(s, rng)
                if evaluate(f, images) != direct_trace(images, m):
                    res.fail(s, "trace", words=_m(s, m))
                    break
    return res


def sweep_confluence(seed=0, samples=20, orders=10, total=10) -> SweepResult:
    """Expansion does not depend on the order crossings are resolved in."""
    res = SweepResult("confluence")
    rng = random.Random(f"{seed}:confluence")
    for s in presets():
        for _ in range(samples):
            m = random_multiloop(s, rng, total)
            want = expand(s, m)
            res.checked += 1
            for _ in range(orders):
                if expand(s, m, rng=random.Random(rng.random())) != want:
                    res.fail(s, "order", words=_m(s, m))
                    break
    return res


# -- identities ----------------------------------------------------------------

def sweep_unitarity(seed=0, samples=100, total=10) -> SweepResult:
    """Certified extremal coefficients of expanded multiloops are +-1."""
    res = SweepResult("unitarity")
    rng = random.Random(f"{seed}:unitarity")
    certified = unknown = 0
    for s in presets():
        for _ in range(samples):
            m = random_multiloop(s, rng, total)
            f = expand(s, m)
            rep = newton_set(f, max_len=4, max_components=2)
            rep_ok = rep.verify()
            chk = check_unitarity(f, report=rep)
            res.checked += 1
            certified += len(rep.certified)
            unknown += len(rep.unknown)
            if not rep_ok:
                res.fail(s, "certificate", words=_m(s, m))
            for mu, c in chk.violations:
                res.fail(s, "coefficient", words=_m(s, m), term=_m(s, mu), coefficient=c)
    res.info = {"certified_terms": certified, "unknown_terms": unknown}
    return res


def _random_pair(s, rng):
    return (SkeinElement.basis(s, random_multicurve(s, rng, 4, 2)),
            SkeinElement.basis(s, random_multicurve(s, rng, 4, 2)))


def sweep_bracket(seed=0, samples=50) -> SweepResult:
    """Antisymmetry, Jacobi, Leibniz, vanishing, orientation independence."""
    res = SweepResult("bracket")
    rng = random.Random(f"{seed}:bracket")
    for s in presets():
        zero = SkeinElement.zero(s)
        for _ in range(samples):
            f, g = _random_pair(s, rng)
            h = SkeinElement.basis(s, random_multicurve(s, rng, 3, 2))
            words = [_m(s, x.support()[0]) for x in (f, g, h)]
            res.checked += 1
            fg = goldman_bracket(f, g)
            if fg + goldman_bracket(g, f) != zero:
                res.fail(s, "antisymmetry", multicurves=words[:2])
            jac = (goldman_bracket(f, goldman_bracket(g, h))
                   + goldman_bracket(g, goldman_bracket(h, f))
                   + goldman_bracket(h, goldman_bracket(f, g)))
            if jac != zero:
                res.fail(s, "jacobi", multicurves=words)
            if goldman_bracket(f, g * h) != fg * h + g * goldman_bracket(f, h):
                res.fail(s, "leibniz", multicurves=words)
            mu, nu = f.support()[0], g.support()[0]
            if geom_intersection(s, mu, nu) == 0 and not fg.is_zero():
                res.fail(s, "vanishing", multicurves=words[:2])
            a, b = s.random_class(6, rng), s.random_class(6, rng)
            base = loop_bracket(s, [a.word], [b.word])
            g_conj = s.random_word(rng.randint(0, 3), rng)
            b_conj = tuple(g_conj) + b.word + inverse(g_conj)
            for left, right in (([inverse(a.word)], [b.word]),
                                ([a.word], [inverse(b.word)]),
                                ([inverse(a.word)], [inverse(b_conj)])):
                if loop_bracket(s, left, right) != base:
                    res.fail(s, "orientation", words=[_w(s, a), _w(s, b)])
                    break
    return res


def sweep_valuation(seed=0, samples=100) -> SweepResult:
    """v(fg) = v(f) + v(g), v({f,g}) <= v(fg), v({f,g}) <= v(f) + v(g) and
    the max-plus rule for sums."""
    res = SweepResult("valuation")
    rng = random.Random(f"{seed}:valuation")
    for s in presets():
        for _ in range(samples):
            lam = random_lamination(s, rng)
            f = expand(s, random_multiloop(s, rng, 6, 2))
            g = expand(s, random_multiloop(s, rng, 6, 2))
            case = dict(lamination=lam.format(), f=f.format(True), g=g.format(True))
            res.checked += 1
            fg, br = f * g, goldman_bracket(f, g)
            vf, vg = valuation(lam, f), valuation(lam, g)
            if valuation(lam, fg) != vf + vg:
                res.fail(s, "multiplicative", **case)
            if valuation(lam, br) > valuation(lam, fg):
                res.fail(s, "bracket-below-product", **case)
            if not check_bracket_inequality(f, g, [lam]).ok:
                res.fail(s, "bracket-inequality", **case)
            total = f + g
            vt = valuation(lam, total)
            if vt > max(vf, vg) or (vf != vg and vt != max(vf, vg)):
                res.fail(s, "max-plus", **case)
    return res


def sweep_smoothing(seed=0, samples=50, lams=10, max_len=8) -> SweepResult:
    """v(t_a) = max(v(t_a+), v(t_a-)) at every self-crossing."""
    res = SweepResult("smoothing")
    rng = random.Random(f"{seed}:smoothing")
    for s in presets():
        n = 0
        while n < samples:
            a = s.random_class(max_len, rng, min_length=2)
            if is_simple(s, a):
                continue
            n += 1
            for _ in range(lams):
                lam = random_lamination(s, rng)
                res.checked += 1
                if not check_smoothing_lemma(s, a, lam).ok:
                    res.fail(s, "smoothing", words=[_w(s, a)], lamination=lam.format())
    return res


def sweep_luo(seed=0, samples=50) -> SweepResult:
    """Luo products: distinct, meet each other 2 i(mu, nu) times, certified
    in both Newton sets, bracket coefficients of size i(mu, nu)."""
    res = SweepResult("luo")
    rng = random.Random(f"{seed}:luo")
    for s in presets():
        n = 0
        while n < samples:
            mu, nu = random_multicurve(s, rng, 4, 2), random_multicurve(s, rng, 4, 2)
            i = geom_intersection(s, mu, nu)
            if i == 0:
                continue
            n += 1
            res.checked += 1
            case = dict(mu=_m(s, mu), nu=_m(s, nu))
            left, right = luo_products(s, mu, nu)
            f, g = SkeinElement.basis(s, mu), SkeinElement.basis(s, nu)
            prod, br = f * g, goldman_bracket(f, g)
            rp, rb = newton_set(prod), newton_set(br)
            if left == right:
                res.fail(s, "distinct", **case)
            if geom_intersection(s, left, right) != 2 * i:
                res.fail(s, "mutual-intersection", **case)
            for name, x in (("left", left), ("right", right)):
                if x not in rp.certified:
                    res.fail(s, f"{name}-product-certified", **case)
                if x not in rb.certified:
                    res.fail(s, f"{name}-bracket-certified", **case)
                if abs(br.coefficient(x)) != i:
                    res.fail(s, f"{name}-bracket-coefficient", **case,
                             coefficient=br.coefficient(x), expected=i)
    return res


SWEEPS: dict[str, Callable[..., SweepResult]] = {
    "figure1": sweep_figure1,
    "oracle": sweep_oracle,
    "traces": sweep_traces,
    "confluence": sweep_confluence,
    "unitarity": sweep_unitarity,
    "bracket": sweep_bracket,
    "valuation": sweep_valuation,
    "smoothing": sweep_smoothing,
    "luo": sweep_luo,
}
