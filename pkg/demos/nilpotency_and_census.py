"""Nilpotency degrees, radicals and a small Monte-Carlo census."""

from multisemi import census
from multisemi.constructions import disconnected_union, no_quasi_idempotent_hypergroup, trivial_multiop
from multisemi.core import MultiOp
from multisemi.nilpotent import maximal_nilpotent_submultisemigroups, nilpotency, radical

graded = MultiOp([[0, 4, 0], [0, 0, 0], [0, 0, 0]], ["x", "y", "xy"])
r = nilpotency(graded)
print("graded table nilpotent:", r.nilpotent, "| degree:", r.degree)

u = disconnected_union(trivial_multiop(2), no_quasi_idempotent_hypergroup(3))
print("union elements:", u.names)
print("radical:", u.labels(radical(u)))
print("maximal nilpotent subsets:", [u.labels(X) for X in maximal_nilpotent_submultisemigroups(u)])

print("exhaustive n=2:", census.exhaustive_census(2).to_dict()["count_associative"], "of 256 associative")
for n in (16, 48, 64):
    rep = census.estimate_fractions(n, 40, seed=1)
    lo, hi = rep.interval()
    print(f"n={n}: associative fraction {rep.fraction():.2f} (95% CI {lo:.2f}-{hi:.2f})")
