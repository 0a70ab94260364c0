"""Two-world semantics: validity, countermodels, normalisation and the CN bridge."""
from cnarg import (CNModel, cn_to_two_world, eval_world, evaluate_cn, find_countermodel,
                   inn_imp, inn_not, is_valid, normalize_n, parse_formula, to_text)
from cnarg.formula import Atom

for text in ["N (a & b) <-> N a | N b", "~N a <-> N ~a", "a -> N N a",
             "@1 -> (p -> N ~p)", "@1 <-> N @1"]:
    print(f"{text:28} valid: {is_valid(parse_formula(text))}")

print("~(q & N q) at world 1:", is_valid(parse_formula("~(q & N q)"), "world1"))
print("~(q & N q) countermodel:", find_countermodel(parse_formula("~(q & N q)")))
print("p | (~p & N p):", find_countermodel(parse_formula("p | (~p & N p)"), "world1"))
print("N(N ~q -> q) at world 1:", is_valid(parse_formula("N (N ~q -> q)"), "world1"))

f = parse_formula("N (a -> (b | N c))")
print("normalised:", to_text(normalize_n(f)))

m = CNModel.from_dict({"x": "in", "y": "und"})
g = parse_formula("x & ~y & ~N y")
print("CN:", evaluate_cn(g, m), " world 1:", eval_world(g, cn_to_two_world(m), 1))

p, q = Atom("p"), Atom("q")
print("p => p valid:", is_valid(inn_imp(p, p)))
print("double intuitionistic negation:", to_text(inn_not(inn_not(q))))
