import random

import pytest

from corpus import CHAIN3, MUTUAL, ODD_CYCLE_TAIL, SELF_AND_MUTUAL, SELF_ATTACK, SINGLE, TWO_CYCLES
from cnarg import generate
from cnarg.frameworks import Af, DisjAf, JointAf
from cnarg.oracle import (OracleSizeError, complete_labellings, disjunctive_labellings,
                          grounded_fixpoint, joint_labellings, preferred_labellings,
                          stable_labellings)


def dicts(labs):
    return [lab.as_dict() for lab in labs]


def test_complete_examples():
    assert dicts(complete_labellings(SELF_ATTACK)) == [{"x": "und"}]
    assert dicts(complete_labellings(ODD_CYCLE_TAIL)) == [dict.fromkeys("abcde", "und")]
    assert dicts(complete_labellings(SELF_AND_MUTUAL)) == [{"x": "out", "y": "in"},
                                                           {"x": "und", "y": "und"}]


def test_complete_extensions_of_two_cycles():
    exts = {lab.extension for lab in complete_labellings(TWO_CYCLES)}
    assert exts == {frozenset(), frozenset("a"), frozenset("bd")}
    assert [lab.extension for lab in stable_labellings(TWO_CYCLES)] == [frozenset("bd")]
    assert {lab.extension for lab in preferred_labellings(TWO_CYCLES)} == {
        frozenset("a"), frozenset("bd")}


def test_grounded_examples():
    chain = Af(("a", "b", "c"), (("a", "b"), ("b", "c")))
    assert grounded_fixpoint(chain).as_dict() == {"a": "in", "b": "out", "c": "in"}
    assert grounded_fixpoint(MUTUAL).as_dict() == {"a": "und", "b": "und"}
    assert grounded_fixpoint(SINGLE).as_dict() == {"a": "in"}


def test_stable_and_preferred_examples():
    assert len(stable_labellings(MUTUAL)) == 2
    assert stable_labellings(SELF_ATTACK) == []
    assert dicts(preferred_labellings(CHAIN3)) == [{"x": "in", "y": "out", "z": "in"}]


def test_oracle_cap():
    with pytest.raises(OracleSizeError):
        complete_labellings(Af(tuple(f"a{i}" for i in range(13)), ()))
    assert len(complete_labellings(Af(("a", "b"), ()), cap=2)) == 1


def test_joint_examples():
    three = JointAf(("a", "b", "c", "x"),
                    ((("b",), "a"), (("a",), "b"), (("c",), "b"), (("b",), "c"),
                     (("a", "b", "c"), "x")))
    assert dicts(joint_labellings(three)) == [
        {"a": "in", "b": "out", "c": "in", "x": "in"},
        {"a": "out", "b": "in", "c": "out", "x": "in"},
        {"a": "und", "b": "und", "c": "und", "x": "und"},
    ]
    pair = JointAf(("a", "b", "x"), ((("a", "b"), "x"),))
    assert dicts(joint_labellings(pair)) == [{"a": "in", "b": "in", "x": "out"}]


def test_disjunctive_examples():
    fs2 = DisjAf(("a", "b", "x", "y"), (("a", "b"), ("b", "a")), (("a", ("x", "y")),))
    assert dicts(disjunctive_labellings(fs2)) == [
        {"a": "in", "b": "out", "x": "in", "y": "out"},
        {"a": "in", "b": "out", "x": "out", "y": "in"},
        {"a": "out", "b": "in", "x": "in", "y": "in"},
    ]


def test_properties_on_random_networks():
    rng = random.Random(99)
    for _ in range(150):
        af = generate.random_af(rng, max_args=6)
        complete = complete_labellings(af)
        grounded = grounded_fixpoint(af)
        assert grounded in complete
        assert all(grounded.extension <= lab.extension for lab in complete)
        stable, preferred = stable_labellings(af), preferred_labellings(af)
        assert set(stable) <= set(preferred) <= set(complete)
        assert joint_labellings(JointAf.from_af(af)) == complete
        assert disjunctive_labellings(DisjAf(af.arguments, af.attacks, ())) == complete
