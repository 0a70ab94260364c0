"""Disjunctive attacks under the local and the split reading."""
from cnarg import Af, DisjAf, delta_af, delta_disjunctive, disjunctive_labellings, enumerate_models

net = DisjAf(("a", "b", "x", "y"), (("a", "b"), ("b", "a")), (("a", ("x", "y")),))
local = enumerate_models(delta_disjunctive(net))
split = enumerate_models(delta_disjunctive(net, reading="split"))
print("local reading:", [m.as_dict() for m in local])
print("oracle:       ", [lab.as_dict() for lab in disjunctive_labellings(net)])
print("split reading:", [m.as_dict() for m in split])

to_x = set(enumerate_models(delta_af(Af(net.arguments, net.direct_attacks + (("a", "x"),)))))
to_y = set(enumerate_models(delta_af(Af(net.arguments, net.direct_attacks + (("a", "y"),)))))
print("split = union of single-target networks:", set(split) == to_x | to_y)
