"""Structure-level reductions between framework families.

``joint_to_single`` replaces each joint attack ``G -> x`` by single attacks
through fresh nodes: every ``z`` in ``G`` attacks ``e__<x>__G<k>__<z>``,
each of those attacks ``<x>__G<k>``, and that node attacks ``x``.  The
index ``k`` counts the attacking sets of ``x`` from 1 in canonical order.

``higher_to_joint`` turns every attack into an argument of its own: an
attack ``a`` from ``z`` on ``t`` becomes the joint attack ``{z, a} -> t``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Union

from .frameworks import Af, HigherAf, JointAf
from .states import Labelling

__all__ = ["ReductionResult", "joint_to_single", "higher_to_joint", "restrict_labelling"]


@dataclass(frozen=True)
class ReductionResult:
    framework: Union[Af, JointAf]
    embedded: tuple[str, ...]
    naming: dict = field(default_factory=dict)

    def provenance_json(self) -> str:
        return json.dumps({"embedded": list(self.embedded), "fresh": self.naming}, indent=2)


def _fresh(name: str, taken: set[str]) -> str:
    candidate, i = name, 1
    while candidate in taken:
        i += 1
        candidate = f"{name}_{i}"
    taken.add(candidate)
    return candidate


def joint_to_single(jaf: JointAf) -> ReductionResult:
    taken = set(jaf.arguments)
    fresh: list[str] = []
    attacks: list[tuple[str, str]] = []
    naming: dict = {}
    for x in jaf.arguments:
        for k, group in enumerate(jaf.attacking_sets(x), 1):
            hub = _fresh(f"{x}__G{k}", taken)
            fresh.append(hub)
            naming[hub] = {"kind": "set", "target": x, "group": list(group), "index": k}
            for z in group:
                e = _fresh(f"e__{x}__G{k}__{z}", taken)
                fresh.append(e)
                naming[e] = {"kind": "member", "target": x, "group": list(group),
                             "index": k, "member": z}
                attacks += [(z, e), (e, hub)]
            attacks.append((hub, x))
    af = Af(jaf.arguments + tuple(fresh), tuple(attacks))
    return ReductionResult(af, jaf.arguments, naming)


def higher_to_joint(haf: HigherAf) -> ReductionResult:
    ids = tuple(a.id for a in haf.attacks)
    joint = tuple(((a.source, a.id), a.target) for a in haf.attacks)
    naming = {a.id: {"kind": "attack", "source": a.source, "target": a.target,
                     "level": haf.level_of(a.id)} for a in haf.attacks}
    return ReductionResult(JointAf(haf.arguments + ids, joint), haf.arguments, naming)


def restrict_labelling(lab: Labelling, keep: Iterable[str]) -> Labelling:
    return lab.restrict(keep)
