"""Luo products are the two extremal terms of a product and of a bracket.

For random pairs of multicurves on the punctured torus, list the two
products, how often they meet, and their coefficients in t_mu t_nu and in
{t_mu, t_nu}.

    python3 scripts/luo_products.py [seed]
"""

import random
import sys

from traceskein import (SkeinElement, geom_intersection, goldman_bracket,
                        luo_products, punctured_torus)
from traceskein.skein import format_multicurve
from traceskein.valuation import random_multicurve

s = punctured_torus()
rng = random.Random(int(sys.argv[1]) if len(sys.argv) > 1 else 0)
shown = 0
while shown < 5:
    mu, nu = random_multicurve(s, rng, 4, 2), random_multicurve(s, rng, 4, 2)
    i = geom_intersection(s, mu, nu)
    if i == 0:
        continue
    shown += 1
    left, right = luo_products(s, mu, nu)
    f, g = SkeinElement.basis(s, mu), SkeinElement.basis(s, nu)
    prod, br = f * g, goldman_bracket(f, g)
    fm = lambda m: format_multicurve(s, m)  # noqa: E731
    print(f"mu = {fm(mu)}, nu = {fm(nu)}, i = {i}, {len(prod)} terms in the product")
    for name, x in (("L_mu(nu)", left), ("L_nu(mu)", right)):
        print(f"  {name} = {fm(x)}: product coefficient {prod.coefficient(x)}, "
              f"bracket coefficient {br.coefficient(x)}")
    print(f"  i(L_mu(nu), L_nu(mu)) = {geom_intersection(s, left, right)}")
