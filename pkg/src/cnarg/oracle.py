"""Brute-force labelling semantics, independent of the CN pipeline.

Every function builds the full table of 3^n labellings (codes 0=in, 1=out,
2=und, rows in lexicographic order) and keeps the rows meeting the
framework's labelling conditions, each checked as stated.
"""

from __future__ import annotations

from typing import Optional

import numpy as np

from .frameworks import Af, DisjAf, JointAf
from .states import LABELS, Label, Labelling

__all__ = [
    "DEFAULT_ORACLE_CAP", "OracleSizeError", "all_labellings", "complete_labellings",
    "grounded_fixpoint", "stable_labellings", "preferred_labellings",
    "joint_labellings", "disjunctive_labellings",
]

DEFAULT_ORACLE_CAP = 12
IN, OUT, UND = 0, 1, 2


class OracleSizeError(RuntimeError):
    pass


def all_labellings(n: int, cap: Optional[int] = None) -> np.ndarray:
    cap = DEFAULT_ORACLE_CAP if cap is None else cap
    if n > cap:
        raise OracleSizeError(f"{n} arguments exceeds the oracle cap of {cap}")
    if n == 0:
        return np.zeros((1, 0), dtype=np.int8)
    return np.indices((3,) * n, dtype=np.int8).reshape(n, -1).T


def _rows(arguments, table) -> list[Labelling]:
    return [Labelling(arguments, tuple(LABELS[c] for c in row)) for row in table]


def _all(cols: list[np.ndarray], rows: int) -> np.ndarray:
    out = np.ones(rows, dtype=bool)
    for c in cols:
        out &= c
    return out


def _any(cols: list[np.ndarray], rows: int) -> np.ndarray:
    out = np.zeros(rows, dtype=bool)
    for c in cols:
        out |= c
    return out


def complete_labellings(af: Af, cap: Optional[int] = None) -> list[Labelling]:
    """Labellings where in = all attackers out, out = some attacker in, und otherwise."""
    args = af.arguments
    idx = {a: i for i, a in enumerate(args)}
    lab = all_labellings(len(args), cap)
    rows = len(lab)
    ok = np.ones(rows, dtype=bool)
    for x in args:
        att = [idx[z] for z in af.attackers(x)]
        all_out = _all([lab[:, z] == OUT for z in att], rows)
        some_in = _any([lab[:, z] == IN for z in att], rows)
        me = lab[:, idx[x]]
        ok &= (me == IN) == all_out
        ok &= (me == OUT) == some_in
        ok &= (me == UND) == (~all_out & ~some_in)
    return _rows(args, lab[ok])


def grounded_fixpoint(af: Af) -> Labelling:
    """Least fixed point: label in when all attackers are out, out when one is in."""
    state: dict[str, Label] = {}
    changed = True
    while changed:
        changed = False
        for x in af.arguments:
            if x in state:
                continue
            att = af.attackers(x)
            if all(state.get(z) is Label.OUT for z in att):
                state[x] = Label.IN
                changed = True
            elif any(state.get(z) is Label.IN for z in att):
                state[x] = Label.OUT
                changed = True
    return Labelling(af.arguments, tuple(state.get(x, Label.UND) for x in af.arguments))


def stable_labellings(af: Af, cap: Optional[int] = None) -> list[Labelling]:
    return [lab for lab in complete_labellings(af, cap) if not lab.with_label(Label.UND)]


def preferred_labellings(af: Af, cap: Optional[int] = None) -> list[Labelling]:
    complete = complete_labellings(af, cap)
    return [lab for lab in complete
            if not any(lab.extension < other.extension for other in complete)]


def joint_labellings(jaf: JointAf, cap: Optional[int] = None) -> list[Labelling]:
    """Labellings meeting the three joint-attack conditions.

    in  iff every attacking set has a member out;
    out iff some attacking set has all members in;
    und iff every attacking set has a member not in, and some attacking set
        has all members in or und.
    """
    args = jaf.arguments
    idx = {a: i for i, a in enumerate(args)}
    lab = all_labellings(len(args), cap)
    rows = len(lab)
    ok = np.ones(rows, dtype=bool)
    for x in args:
        groups = [[idx[z] for z in g] for g in jaf.attacking_sets(x)]
        each_has_out = _all([_any([lab[:, z] == OUT for z in g], rows) for g in groups], rows)
        some_all_in = _any([_all([lab[:, z] == IN for z in g], rows) for g in groups], rows)
        each_not_all_in = _all([_any([lab[:, z] != IN for z in g], rows) for g in groups], rows)
        some_none_out = _any([_all([lab[:, z] != OUT for z in g], rows) for g in groups], rows)
        me = lab[:, idx[x]]
        ok &= (me == IN) == each_has_out
        ok &= (me == OUT) == some_all_in
        ok &= (me == UND) == (each_not_all_in & some_none_out)
    return _rows(args, lab[ok])


def disjunctive_labellings(daf: DisjAf, cap: Optional[int] = None) -> list[Labelling]:
    """Labellings meeting the three disjunctive-attack conditions.

    With direct attackers y_i and indirect attacks (z_j, co-targets u^j):
    (1) if every y_i is out, and each z_j in has some co-target out, x is in;
    (2) if some y_i is in, or some z_j is in with no co-target out, x is out;
    (3) x is und iff every attack is out or undecided and one is undecided.
    A direct attack has its attacker's status.  An indirect attack is out
    when z or a co-target is out, undecided when none is out and one is und.
    """
    args = daf.arguments
    idx = {a: i for i, a in enumerate(args)}
    lab = all_labellings(len(args), cap)
    rows = len(lab)
    ok = np.ones(rows, dtype=bool)
    for x in args:
        direct = [lab[:, idx[y]] for y in daf.direct_attackers(x)]
        indirect = [(lab[:, idx[z]], [lab[:, idx[u]] for u in us])
                    for z, us in daf.indirect_attacks(x)]
        cond1 = _all([y == OUT for y in direct], rows) & _all(
            [(z != IN) | _any([u == OUT for u in us], rows) for z, us in indirect], rows)
        cond2 = _any([y == IN for y in direct], rows) | _any(
            [(z == IN) & _all([u != OUT for u in us], rows) for z, us in indirect], rows)
        attack_out = [y == OUT for y in direct]
        attack_und = [y == UND for y in direct]
        for z, us in indirect:
            members = [z] + us
            none_out = _all([m != OUT for m in members], rows)
            attack_out.append(~none_out)
            attack_und.append(none_out & _any([m == UND for m in members], rows))
        cond3 = _all([o | u for o, u in zip(attack_out, attack_und)], rows) & _any(attack_und, rows)
        me = lab[:, idx[x]]
        ok &= ~cond1 | (me == IN)
        ok &= ~cond2 | (me == OUT)
        ok &= (me == UND) == cond3
    return _rows(args, lab[ok])
