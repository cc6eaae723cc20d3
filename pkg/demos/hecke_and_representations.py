"""Build the Boolean Hecke multigroup of A2 and check its regular representation."""

from multisemi import fixture
from multisemi.core import find_identity, is_associative, is_multigroup
from multisemi.hecke import boolean_hecke, build_coxeter, hecke_mul
from multisemi.representations import format_matrix, regular_rep, verify_rep

W = build_coxeter("A2")
print("A2 elements:", W.names)
print("T_s * T_st at q=2:", {W.names[k]: str(v) for k, v in hecke_mul(W, "s", "st", 2).coeffs.items()})

m = boolean_hecke(W, 2)
print("matches stored table:", m == fixture("hecke_a2"))
print("associative:", bool(is_associative(m)), "| identity:", m.names[find_identity(m)])
v = is_multigroup(m)
print("multigroup:", bool(v), "| inverses:", {m.names[a]: m.names[b] for a, b in enumerate(v.witness)})
print("tau_s =")
print(format_matrix(regular_rep(m, "s")))
print("representation identity holds:", bool(verify_rep(m)))
