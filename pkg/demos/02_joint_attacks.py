"""Joint attacks and their reduction to single attacks through fresh nodes."""
from cnarg import (JointAf, delta_af, delta_joint, enumerate_models, joint_labellings,
                   joint_to_single, model_to_labelling, to_apx)

jaf = JointAf(("a", "b", "c", "x"),
              ((("b",), "a"), (("a",), "b"), (("c",), "b"), (("b",), "c"),
               (("a", "b", "c"), "x")))
print(delta_joint(jaf).to_text())

for m in enumerate_models(delta_joint(jaf)):
    print("model", m.as_dict())
print("joint labellings:", [lab.as_dict() for lab in joint_labellings(jaf)])

result = joint_to_single(jaf)
print(to_apx(result.framework))
print(result.provenance_json())

restricted = {model_to_labelling(m).restrict(jaf.arguments)
              for m in enumerate_models(delta_af(result.framework), max_atoms=40)}
print("reduction preserves labellings:", restricted == set(joint_labellings(jaf)))
