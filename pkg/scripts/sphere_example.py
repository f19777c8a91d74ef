"""Walk through the four-punctured sphere example.

Two curves alpha = x1 x2 and beta = x2 x3 meet twice.  Their trace product
splits into four multicurves, their bracket into two, and the Newton set
tells which terms are extremal.

    python3 scripts/sphere_example.py
"""

from traceskein import (four_punctured_sphere, geom_intersection,
                        goldman_bracket, linked_pairs, loop, newton_set)
from traceskein.intersect import intersection_report
from traceskein.skein import format_multicurve

s = four_punctured_sphere()
alpha, beta = s.curve("alpha"), s.curve("beta")
print("alpha =", s.format(alpha), " beta =", s.format(beta))
print("i(alpha, beta) =", geom_intersection(s, alpha, beta))
for d in intersection_report(s, linked_pairs(s, alpha, beta)):
    print("  crossing", d["tag"], "sign", d["sign"], "factors", d["left"], "|", d["right"])

ta, tb = loop(s, alpha), loop(s, beta)
prod = ta * tb
br = goldman_bracket(ta, tb)
print("\nt_alpha t_beta   =", prod)
print("{t_alpha, t_beta} =", br)

for name, f in (("product", prod), ("bracket", br)):
    rep = newton_set(f)
    print(f"\nNewton set of the {name} (witness family of {rep.family_size}):")
    for mu, xi in sorted(rep.certified.items()):
        print("  certified", format_multicurve(s, mu), "by", format_multicurve(s, xi))
    for mu in rep.unknown:
        print("  unknown  ", format_multicurve(s, mu),
              "(made of puncture loops; every curve misses it)")
