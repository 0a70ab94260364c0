import random

import pytest

from cnarg import generate
from cnarg.formula import Atom, Imp, N, Not, Theory, is_cn_flat, parse_formula
from cnarg.frameworks import (AdfSpec, Af, BipolarAf, DisjAf, HigherAf, HigherAttack,
                              JointAf)
from cnarg.models import entails, enumerate_models, model_to_labelling
from cnarg.reductions import higher_to_joint
from cnarg.translate import (delta_adf, delta_af, delta_bipolar, delta_disjunctive,
                             delta_higher_direct, delta_joint, joint_formulas,
                             stable_axioms, theta_n)

P = parse_formula


def th(*lines, universe=()):
    return Theory(tuple(P(s) for s in lines), universe)


def test_theta_n():
    assert theta_n(["x"]) == th("N x -> ~x")
    assert theta_n([]) == Theory((), ())
    assert theta_n(["a", "b"]) == th("N a -> ~a", "N b -> ~b")


def test_stable_axioms():
    assert stable_axioms(["x"]) == th("x | N x")
    assert len(stable_axioms([])) == 0
    assert stable_axioms(["a", "b"]) == th("a | N a", "b | N b")


def test_delta_af_bystander():
    af = Af(("x", "y", "z"), (("x", "y"),))
    expected = th("x", "z", "y <-> N x", "x -> N y", "~x & ~N x -> ~y & ~N y",
                  "N x -> ~x", "N y -> ~y", "N z -> ~z", universe=("x", "y", "z"))
    assert delta_af(af) == expected
    assert delta_af(af).formulas[:2] == (Atom("x"), Atom("z"))


def test_delta_af_self_attack():
    t = delta_af(Af(("x",), (("x", "x"),)))
    assert t == th("x <-> N x", "x -> N x", "~x & ~N x -> ~x & ~N x", "N x -> ~x")


def test_delta_af_unattacked_is_fact():
    t = delta_af(Af(("a",), ()))
    assert t.formulas == (Atom("a"), Imp(N(Atom("a")), Not(Atom("a"))))


def test_delta_joint_single_group():
    jaf = JointAf(("a", "b", "x"), ((("a", "b"), "x"),))
    fs = joint_formulas(jaf, "x")
    assert fs[0] == P("x <-> N a | N b")
    assert fs[1] == P("a & b -> N x")
    assert joint_formulas(jaf, "a") == (Atom("a"),)


def test_delta_joint_three_way_group_has_one_und_formula():
    jaf = JointAf(("a", "b", "c", "x"),
                  ((("b",), "a"), (("a",), "b"), (("c",), "b"), (("b",), "c"),
                   (("a", "b", "c"), "x")))
    und = joint_formulas(jaf, "x")[-1]
    assert und == P("(~a | ~b | ~c) & ((a | ~N a) & (b | ~N b) & (c | ~N c))"
                    " -> ~x & ~N x")


def test_singleton_joint_equals_plain():
    rng = random.Random(11)
    for _ in range(100):
        af = generate.random_af(rng, max_args=5)
        assert delta_joint(JointAf.from_af(af)) == delta_af(af)
        assert delta_joint(JointAf.from_af(af)).formulas == delta_af(af).formulas


def test_empty_disjunction_equals_plain():
    rng = random.Random(12)
    for _ in range(100):
        af = generate.random_af(rng, max_args=5)
        daf = DisjAf(af.arguments, af.attacks, ())
        assert delta_disjunctive(daf).formulas == delta_af(af).formulas


def test_disjunctive_two_targets():
    daf = DisjAf(("x", "a", "b"), (), (("x", ("a", "b")),))
    labs = [model_to_labelling(m).as_dict() for m in enumerate_models(delta_disjunctive(daf))]
    assert labs == [{"x": "in", "a": "in", "b": "out"}, {"x": "in", "a": "out", "b": "in"}]


def test_disjunctive_split_is_union_of_choices():
    daf = DisjAf(("a", "b", "x", "y"), (("a", "b"), ("b", "a")), (("a", ("x", "y")),))
    split = set(enumerate_models(delta_disjunctive(daf, "split")))
    fs3 = set(enumerate_models(delta_af(Af(daf.arguments, daf.direct_attacks + (("a", "x"),)))))
    fs4 = set(enumerate_models(delta_af(Af(daf.arguments, daf.direct_attacks + (("a", "y"),)))))
    assert split == fs3 | fs4
    with pytest.raises(ValueError):
        delta_disjunctive(daf, "other")


def test_delta_adf_shape_and_trivial_cases():
    adf = AdfSpec(("a", "b"), (("a", "T"), ("b", "a & b")))
    assert delta_adf(adf) == th("a <-> T", "b <-> a & b", "N a -> ~a", "N b -> ~b")
    all_top = AdfSpec(("a", "b"), (("a", "T"), ("b", "T")))
    assert [m.as_dict() for m in enumerate_models(delta_adf(all_top))] == [
        {"a": "in", "b": "in"}]


def test_delta_adf_self_negation():
    # x <-> ~x holds in a coherent model iff x is not in and not not-in: impossible
    # for x itself, so no state of x satisfies it
    adf = AdfSpec(("x",), (("x", "~x"),))
    assert enumerate_models(delta_adf(adf)) == []


def test_bipolar_variants():
    baf = BipolarAf(("a", "b"), (), (("a", "b"),))
    assert P("a -> b") in delta_bipolar(baf, "tau1").formulas
    assert P("a -> ~N b") in delta_bipolar(baf, "tau2").formulas
    plain = BipolarAf(("a", "b"), (("a", "b"),), ())
    assert delta_bipolar(plain, "tau1") == delta_af(Af(("a", "b"), (("a", "b"),)))


def test_tau1_entails_tau2():
    rng = random.Random(5)
    for _ in range(40):
        af = generate.random_af(rng, max_args=4)
        supports = tuple((x, y) for x in af.arguments for y in af.arguments
                         if rng.random() < 0.3)
        baf = BipolarAf(af.arguments, af.attacks, supports)
        t1 = delta_bipolar(baf, "tau1")
        for f in delta_bipolar(baf, "tau2"):
            assert entails(t1, f)


def test_higher_direct_out_formula():
    haf = HigherAf(("z", "x", "y"), (HigherAttack("al", "z", "x"),
                                      HigherAttack("be", "y", "al")))
    t = delta_higher_direct(haf)
    assert P("z & N y -> N x") in t.formulas
    assert P("x <-> N z | y") in t.formulas


def test_higher_direct_without_level_two_is_plain():
    haf = HigherAf(("z", "x"), (HigherAttack("al", "z", "x"),))
    assert delta_higher_direct(haf) == delta_af(Af(("z", "x"), (("z", "x"),)))


def test_higher_direct_matches_reduction_on_attacked_arc():
    haf = HigherAf(("z", "x", "y"), (HigherAttack("al", "z", "x"),
                                      HigherAttack("be", "y", "al")))
    direct = {model_to_labelling(m) for m in enumerate_models(delta_higher_direct(haf))}
    reduced = {model_to_labelling(m).restrict(haf.arguments)
               for m in enumerate_models(delta_joint(higher_to_joint(haf).framework))}
    assert direct == reduced


def test_higher_direct_rejects_three_levels():
    haf = HigherAf(("a", "b"), (HigherAttack("i", "a", "b"), HigherAttack("j", "a", "i"),
                                HigherAttack("k", "b", "j")))
    with pytest.raises(ValueError):
        delta_higher_direct(haf)


def test_every_theory_is_flat_with_coherence_axioms():
    rng = random.Random(3)
    for _ in range(30):
        af = generate.random_af(rng, max_args=5)
        jaf = generate.random_joint_af(rng)
        for t in (delta_af(af), delta_joint(jaf)):
            assert all(is_cn_flat(f) for f in t)
            assert set(theta_n(t.universe).formulas) <= set(t.formulas)
