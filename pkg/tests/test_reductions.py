import json
import random

import pytest

from cnarg import generate
from cnarg.frameworks import Af, HigherAf, HigherAttack, JointAf, parse_apx, to_apx
from cnarg.models import enumerate_models, model_to_labelling
from cnarg.oracle import complete_labellings, joint_labellings
from cnarg.reductions import higher_to_joint, joint_to_single, restrict_labelling
from cnarg.states import Labelling
from cnarg.translate import delta_af, joint_formulas
from cnarg.formula import evaluate_cn

SIX_CHAIN = HigherAf(("z", "x", "y", "u", "w"), (
    HigherAttack("alpha", "z", "x"), HigherAttack("beta", "y", "alpha"),
    HigherAttack("gamma", "u", "beta"), HigherAttack("delta", "w", "gamma")))


def test_joint_pair_construction():
    r = joint_to_single(JointAf(("a", "b", "x"), ((("a", "b"), "x"),)))
    assert r.framework.arguments == ("a", "b", "x", "x__G1", "e__x__G1__a", "e__x__G1__b")
    assert set(r.framework.attacks) == {
        ("a", "e__x__G1__a"), ("b", "e__x__G1__b"), ("e__x__G1__a", "x__G1"),
        ("e__x__G1__b", "x__G1"), ("x__G1", "x")}
    assert r.naming["e__x__G1__b"] == {"kind": "member", "target": "x",
                                        "group": ["a", "b"], "index": 1, "member": "b"}
    assert r.embedded == ("a", "b", "x")


def test_singleton_groups_become_three_arc_chains():
    af = Af(("a", "b"), (("a", "b"),))
    r = joint_to_single(JointAf.from_af(af))
    assert set(r.framework.attacks) == {("a", "e__b__G1__a"), ("e__b__G1__a", "b__G1"),
                                        ("b__G1", "b")}
    restricted = [restrict_labelling(lab, af.arguments) for lab in complete_labellings(r.framework)]
    assert restricted == complete_labellings(af)


def test_no_attacks_is_identity():
    jaf = JointAf(("a", "b"), ())
    r = joint_to_single(jaf)
    assert r.framework == Af(("a", "b"), ()) and r.naming == {}


def test_fresh_names_avoid_collisions_and_are_stable():
    jaf = JointAf(("a", "x", "x__G1"), ((("a",), "x"),))
    r1, r2 = joint_to_single(jaf), joint_to_single(jaf)
    assert r1 == r2
    assert "x__G1_2" in r1.framework.arguments
    assert len(set(r1.framework.arguments)) == len(r1.framework.arguments)


def test_higher_to_joint_chain():
    r = higher_to_joint(SIX_CHAIN)
    assert set(r.framework.joint_attacks) == {
        (("z", "alpha"), "x"), (("y", "beta"), "alpha"),
        (("u", "gamma"), "beta"), (("w", "delta"), "gamma")}
    labs = [lab.restrict(SIX_CHAIN.arguments).as_dict() for lab in joint_labellings(r.framework)]
    assert labs == [dict.fromkeys(SIX_CHAIN.arguments, "in")]


def test_higher_single_arc():
    haf = HigherAf(("z", "x"), (HigherAttack("al", "z", "x"),))
    r = higher_to_joint(haf)
    assert r.framework.joint_attacks == ((("z", "al"), "x"),)
    assert r.framework.arguments == ("z", "x", "al")


def test_restrict():
    lab = Labelling(("x", "x__G1"), ("in", "out"))
    assert restrict_labelling(lab, ["x"]).as_dict() == {"x": "in"}
    assert restrict_labelling(lab, lab.universe) == lab
    with pytest.raises(KeyError):
        restrict_labelling(lab, ["nope"])


def test_reduced_output_parses_and_provenance_is_json():
    r = joint_to_single(JointAf(("a", "b", "x"), ((("a", "b"), "x"),)))
    assert parse_apx(to_apx(r.framework)) == r.framework
    assert json.loads(r.provenance_json())["embedded"] == ["a", "b", "x"]


def test_reduction_preserves_labellings_and_formulas():
    rng = random.Random(17)
    for _ in range(60):
        jaf = generate.random_joint_af(rng, max_args=4, max_attacks=4)
        r = joint_to_single(jaf)
        models = enumerate_models(delta_af(r.framework), max_atoms=40)
        restricted = [model_to_labelling(m).restrict(jaf.arguments) for m in models]
        assert set(restricted) == set(joint_labellings(jaf))
        assert len(restricted) == len(set(restricted)), "each restriction extends uniquely"
        originals = [f for x in jaf.arguments for f in joint_formulas(jaf, x)]
        for m in models:
            assert all(evaluate_cn(f, m) for f in originals)
