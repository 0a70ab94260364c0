"""Acceptance-condition networks and support translations."""
from cnarg import BipolarAf, delta_adf, delta_bipolar, enumerate_models, parse_apx

adf = parse_apx('arg(a). arg(b). arg(c). arg(d). '
                'ac(a,"T"). ac(b,"b"). ac(c,"a & b"). ac(d,"~b").')
print(delta_adf(adf).to_text())
for m in enumerate_models(delta_adf(adf)):
    print("model", m.as_dict())

baf = BipolarAf(("a", "b", "c"), (("c", "a"),), (("a", "b"),))
for variant in ("tau1", "tau2"):
    t = delta_bipolar(baf, variant)
    print(variant, [m.as_dict() for m in enumerate_models(t)])
