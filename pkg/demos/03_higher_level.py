"""Attacks on attacks: reduce to joint attacks, and compare with the direct encoding."""
from cnarg import (HigherAf, HigherAttack, delta_higher_direct, delta_joint, enumerate_models,
                   higher_to_joint, joint_labellings, model_to_labelling, to_apx)

chain = HigherAf(("z", "x", "y", "u", "w"), (
    HigherAttack("alpha", "z", "x"), HigherAttack("beta", "y", "alpha"),
    HigherAttack("gamma", "u", "beta"), HigherAttack("delta", "w", "gamma")))
reduced = higher_to_joint(chain).framework
print(to_apx(reduced))
for lab in joint_labellings(reduced):
    print("restricted:", lab.restrict(chain.arguments).as_dict())

two_level = HigherAf(("z", "x", "y"), (HigherAttack("al", "z", "x"),
                                        HigherAttack("be", "y", "al")))
print(delta_higher_direct(two_level).to_text())
direct = {model_to_labelling(m) for m in enumerate_models(delta_higher_direct(two_level))}
via_reduction = {model_to_labelling(m).restrict(two_level.arguments)
                 for m in enumerate_models(delta_joint(higher_to_joint(two_level).framework))}
print("direct encoding agrees with the reduction here:", direct == via_reduction)
