"""Plain networks: compile to a CN theory, enumerate models, compare with the oracle."""
from cnarg import (complete_labellings, delta_af, enumerate_models, grounded_by_entailment,
                   grounded_fixpoint, model_to_labelling, parse_tgf, stable_axioms)

af = parse_tgf("x\ny\n#\nx x\ny x\nx y\n")
theory = delta_af(af)
print("theory:")
print(theory.to_text())

models = enumerate_models(theory)
for m in models:
    print("model", m.as_dict())

print("oracle agrees:", [model_to_labelling(m) for m in models] == complete_labellings(af))
print("grounded via entailment:", sorted(grounded_by_entailment(theory)))
print("grounded via fixpoint:  ", sorted(grounded_fixpoint(af).extension))

stable = enumerate_models(theory | stable_axioms(af.arguments))
print("stable models:", [m.as_dict() for m in stable])
