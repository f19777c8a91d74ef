"""A short tour on the once-punctured torus.

Expands a few non-simple loops, checks the answers against traces of random
SL2 matrices, and evaluates a lamination on them.

    python3 scripts/torus_tour.py
"""

import random

from traceskein import (expand, parse_lamination, punctured_torus,
                        self_intersection, valuation)
from traceskein.oracle import axis_linking_count, preset_rep, random_modular_rep
from traceskein.skein import direct_trace, evaluate

s = punctured_torus()
rep = preset_rep(s)
rng = random.Random(0)
lam = parse_lamination(s, "a: 1; ")

for text in ("a a", "a a b b", "a b A b", "a a a b A B"):
    w = s.parse(text)
    f = expand(s, [w])
    images = random_modular_rep(s, rng)
    print(f"{text:>12}: {self_intersection(s, w)} self-crossings "
          f"(axis oracle {axis_linking_count(rep, w)})")
    print(f"{'':>12}  t = {f}")
    print(f"{'':>12}  trace check: {evaluate(f, images) == direct_trace(images, [w])}, "
          f"v_a = {valuation(lam, f)}")
