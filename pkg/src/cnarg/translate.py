"""Compile argumentation frameworks into CN theories.

Every compiler emits its formulas in a fixed order: facts, in-formulas,
out-formulas (and supports, for bipolar input), und-formulas, and finally
the coherence axioms ``N q -> ~q``.  Within each group, arguments follow
declaration order.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable

from .formula import (Atom, Formula, Iff, Imp, N, Not, Theory, conj, disj,
                      normalize_n)
from .frameworks import AdfSpec, Af, BipolarAf, DisjAf, HigherAf, JointAf

__all__ = [
    "theta_n", "stable_axioms", "delta_af", "delta_joint", "delta_disjunctive",
    "delta_adf", "delta_bipolar", "delta_higher_direct", "joint_formulas",
]


def _a(name: str) -> Atom:
    return Atom(name)


def _na(name: str) -> N:
    return N(Atom(name))


def _undecided(x: str) -> Formula:
    return conj([Not(_a(x)), Not(_na(x))])


def theta_n(universe: Iterable[str]) -> Theory:
    """Coherence axioms: one ``N q -> ~q`` per atom."""
    universe = tuple(universe)
    return Theory(tuple(Imp(_na(q), Not(_a(q))) for q in universe), universe)


def stable_axioms(universe: Iterable[str]) -> Theory:
    """``x | N x`` for every atom: rules out the undecided state."""
    universe = tuple(universe)
    return Theory(tuple(disj([_a(x), _na(x)]) for x in universe), universe)


def _assemble(universe, facts, ins, outs, unds, extra=()) -> Theory:
    body = tuple(facts) + tuple(ins) + tuple(outs) + tuple(extra) + tuple(unds)
    return Theory(body, universe) | theta_n(universe)


def delta_af(af: Af) -> Theory:
    facts, ins, outs, unds = [], [], [], []
    for x in af.arguments:
        attackers = af.attackers(x)
        if not attackers:
            facts.append(_a(x))
            continue
        ins.append(Iff(_a(x), conj(_na(z) for z in attackers)))
        outs.extend(Imp(_a(z), _na(x)) for z in attackers)
        guard = conj([conj(Not(_a(z)) for z in attackers),
                      disj(Not(_na(z)) for z in attackers)])
        unds.append(Imp(guard, _undecided(x)))
    return _assemble(af.arguments, facts, ins, outs, unds)


def joint_formulas(jaf: JointAf, x: str) -> tuple[Formula, ...]:
    """The in/out/und formulas for one argument of a joint network.

    Returns ``(x,)`` for an unattacked argument.  Out-formulas come one per
    attacking set, which is equivalent to a single disjunctive antecedent.
    For a singleton set the und-formula's per-set disjunct ``z | ~N z`` is
    written ``~N z``; the two agree under the first conjunct ``~z``.
    """
    groups = jaf.attacking_sets(x)
    if not groups:
        return (_a(x),)
    f_in = Iff(_a(x), conj(disj(_na(z) for z in g) for g in groups))
    f_out = tuple(Imp(conj(_a(z) for z in g), _na(x)) for g in groups)

    def not_all_out(g):
        if len(g) == 1:
            return Not(_na(g[0]))
        return conj(disj([_a(z), Not(_na(z))]) for z in g)

    guard = conj([conj(disj(Not(_a(z)) for z in g) for g in groups),
                  disj(not_all_out(g) for g in groups)])
    return (f_in,) + f_out + (Imp(guard, _undecided(x)),)


def delta_joint(jaf: JointAf) -> Theory:
    facts, ins, outs, unds = [], [], [], []
    for x in jaf.arguments:
        fs = joint_formulas(jaf, x)
        if len(fs) == 1:
            facts.append(fs[0])
        else:
            ins.append(fs[0])
            outs.extend(fs[1:-1])
            unds.append(fs[-1])
    return _assemble(jaf.arguments, facts, ins, outs, unds)


def delta_disjunctive(daf: DisjAf, reading: str = "local") -> Theory:
    """Theory of a disjunctive network.

    ``reading="local"`` encodes the per-argument labelling conditions directly.
    ``reading="split"`` takes the disjunction, over every way of choosing one
    target from each disjunctive attack, of the plain theory of the resulting
    network; its models are the union of those networks' complete labellings.
    """
    if reading == "split":
        return _delta_disjunctive_split(daf)
    if reading != "local":
        raise ValueError(f"unknown reading {reading!r}")
    facts, ins, outs, unds = [], [], [], []
    for x in daf.arguments:
        direct = daf.direct_attackers(x)
        indirect = daf.indirect_attacks(x)
        if not direct and not indirect:
            facts.append(_a(x))
            continue
        in_parts = [_na(y) for y in direct]
        in_parts += [Imp(_a(z), disj(_na(u) for u in us)) for z, us in indirect]
        ins.append(Iff(_a(x), conj(in_parts)))
        outs.extend(Imp(_a(y), _na(x)) for y in direct)
        outs.extend(Imp(conj([_a(z)] + [Not(_na(u)) for u in us]), _na(x))
                    for z, us in indirect)
        # no attack succeeds ...
        none_in = [Not(_a(y)) for y in direct]
        none_in += [Not(conj([_a(z)] + [_a(u) for u in us])) for z, us in indirect]
        # ... and some attack is not defeated
        some_und = [Not(_na(y)) for y in direct]
        some_und += [conj([Not(_na(z))] + [Not(_na(u)) for u in us]) for z, us in indirect]
        unds.append(Imp(conj([conj(none_in), disj(some_und)]), _undecided(x)))
    return _assemble(daf.arguments, facts, ins, outs, unds)


def _delta_disjunctive_split(daf: DisjAf) -> Theory:
    choices = [tuple((z, u) for u in h) for z, h in daf.disj_attacks]
    branches = []
    for pick in product(*choices):
        af = Af(daf.arguments, daf.direct_attacks + tuple(pick))
        core = delta_af(af).formulas[: -len(af.arguments)]
        branches.append(conj(core))
    universe = daf.arguments
    return Theory((disj(branches),), universe) | theta_n(universe)


def delta_adf(adf: AdfSpec) -> Theory:
    body = tuple(Iff(_a(x), phi) for x, phi in adf.acceptance)
    return Theory(body, adf.arguments) | theta_n(adf.arguments)


def delta_bipolar(baf: BipolarAf, variant: str = "tau1") -> Theory:
    """Attack part as for plain networks; each support ``x => y`` becomes
    ``x -> y`` (tau1) or ``x -> N~y``, normalised to ``x -> ~N y`` (tau2)."""
    if variant not in ("tau1", "tau2"):
        raise ValueError(f"unknown variant {variant!r}")
    base = delta_af(baf.attack_part)
    if not baf.supports:
        return base
    if variant == "tau1":
        supp = [Imp(_a(x), _a(y)) for x, y in baf.supports]
    else:
        supp = [Imp(_a(x), normalize_n(N(Not(_a(y))))) for x, y in baf.supports]
    facts, ins, outs, unds = [], [], [], []
    for f in base.formulas[: -len(baf.arguments)]:
        if isinstance(f, Atom):
            facts.append(f)
        elif isinstance(f, Iff):
            ins.append(f)
        elif isinstance(f.right, N):
            outs.append(f)
        else:
            unds.append(f)
    return _assemble(baf.arguments, facts, ins, outs, unds, supp)


def delta_higher_direct(haf: HigherAf) -> Theory:
    """Direct encoding of a two-level network (attacks on attacks).

    An attack ``z -> x`` succeeds when ``z`` is in and each of its attackers
    is out, and fails when ``z`` is out or one of its attackers is in.  The
    und-formula fires when no attack on ``x`` succeeds and some attack does
    not fail.  This encoding is exploratory; the reduction route is the
    reference semantics.
    """
    levels = haf.levels
    if len(levels) > 2:
        raise ValueError(f"direct encoding supports two levels, got {len(levels)}")
    level2 = levels[1] if len(levels) == 2 else ()
    on_attack = {}
    for b in level2:
        on_attack.setdefault(b.target, []).append(b.source)
    facts, ins, outs, unds = [], [], [], []
    for x in haf.arguments:
        arcs = [a for a in (levels[0] if levels else ()) if a.target == x]
        if not arcs:
            facts.append(_a(x))
            continue
        succeeds, fails = [], []
        for a in arcs:
            ys = on_attack.get(a.id, [])
            succeeds.append(conj([_a(a.source)] + [_na(y) for y in ys]))
            fails.append(disj([_na(a.source)] + [_a(y) for y in ys]))
        ins.append(Iff(_a(x), conj(fails)))
        outs.extend(Imp(s, _na(x)) for s in succeeds)
        guard = conj([conj(Not(s) for s in succeeds), disj(Not(f) for f in fails)])
        unds.append(Imp(guard, _undecided(x)))
    return _assemble(haf.arguments, facts, ins, outs, unds)
