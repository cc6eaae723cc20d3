"""Green's relations and the H-quotient of a strongly simple multisemigroup."""

from multisemi import fixture, green
from multisemi.quotients import Partition, canonical_map, is_strong_hom, quotient

m = fixture("kl_b2_T")
print("simplicity:", green.classify_simplicity(m))
for box in green.egg_boxes(m):
    print(green.format_egg_box(m, box))
print("incidence matrix:")
print(green.incidence_matrix(m).astype(int))

p = Partition(m.n, green.green_data(m).H)
q = quotient(m, p)
print("H-quotient has", q.n, "elements:", q.names)
print("canonical map is a strong hom:", bool(is_strong_hom(m, q, canonical_map(p))))

t = fixture("t_531")
v = green.green_commutation(t)
print("t_531: L and R commute?", bool(v), "| witness:", [t.names[i] for i in v.witness])
