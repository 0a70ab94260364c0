"""Two-world semantics for iterated strong negation.

A model assigns each atom a pair of bits ``(w1, w2)`` with persistence:
true at world 1 implies true at world 2.  Classical connectives are
evaluated pointwise; ``N A`` holds at one world iff ``A`` fails at the
other; ``@1`` holds only at world 1.  Validity is decided by sweeping all
3^n persistent valuations at once with numpy.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping, Optional

import numpy as np

from .formula import (And, Atom, Bottom, Formula, Iff, Imp, N, Not, Or, Top,
                      World1, atoms_of, conj)
from .states import CNModel, Label

__all__ = [
    "STATES", "DEFAULT_VALIDITY_CAP", "TwoWorldModel", "ValiditySizeError",
    "eval_world", "is_valid", "find_countermodel", "cn_to_two_world",
    "two_world_to_cn", "inn_not", "inn_imp",
]

STATES = ((0, 0), (0, 1), (1, 1))  # enumeration order of per-atom values
DEFAULT_VALIDITY_CAP = 12


class ValiditySizeError(RuntimeError):
    pass


@dataclass(frozen=True)
class TwoWorldModel:
    universe: tuple[str, ...]
    values: tuple[tuple[int, int], ...]

    def __post_init__(self):
        values = tuple((int(a), int(b)) for a, b in self.values)
        if len(values) != len(self.universe):
            raise ValueError("universe and values differ in length")
        for name, (a, b) in zip(self.universe, values):
            if (a, b) not in STATES:
                raise ValueError(f"atom {name!r} violates persistence: {(a, b)}")
        object.__setattr__(self, "universe", tuple(self.universe))
        object.__setattr__(self, "values", values)

    @classmethod
    def from_dict(cls, valuation: Mapping[str, tuple[int, int]]) -> "TwoWorldModel":
        return cls(tuple(valuation), tuple(tuple(v) for v in valuation.values()))

    def __getitem__(self, name: str) -> tuple[int, int]:
        try:
            return self.values[self.universe.index(name)]
        except ValueError:
            raise KeyError(name) from None

    def to_json(self) -> dict:
        return {a: list(v) for a, v in zip(self.universe, self.values)}

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def _eval(f: Formula, w: int, env) -> object:
    """Truth at world ``w``; ``env`` maps atoms to (w1, w2) scalars or arrays."""
    if isinstance(f, Atom):
        try:
            pair = env[f.name]
        except KeyError:
            raise KeyError(f"atom {f.name!r} not in model") from None
        return pair[w - 1]
    if isinstance(f, Top):
        return True
    if isinstance(f, Bottom):
        return False
    if isinstance(f, World1):
        return w == 1
    if isinstance(f, Not):
        return np.logical_not(_eval(f.child, w, env))
    if isinstance(f, N):
        return np.logical_not(_eval(f.child, 3 - w, env))
    if isinstance(f, And):
        return np.logical_and(_eval(f.left, w, env), _eval(f.right, w, env))
    if isinstance(f, Or):
        return np.logical_or(_eval(f.left, w, env), _eval(f.right, w, env))
    if isinstance(f, Imp):
        return np.logical_or(np.logical_not(_eval(f.left, w, env)), _eval(f.right, w, env))
    if isinstance(f, Iff):
        return np.equal(_eval(f.left, w, env), _eval(f.right, w, env))
    raise TypeError(f"not a formula: {f!r}")


def eval_world(f: Formula, m: TwoWorldModel, w: int) -> bool:
    if w not in (1, 2):
        raise ValueError("world must be 1 or 2")
    env = {a: (bool(x), bool(y)) for a, (x, y) in zip(m.universe, m.values)}
    return bool(_eval(f, w, env))


def _worlds(mode: str) -> tuple[int, ...]:
    if mode == "world1":
        return (1,)
    if mode == "both":
        return (1, 2)
    if mode == "world2":
        return (2,)
    raise ValueError(f"unknown mode {mode!r}")


def find_countermodel(f: Formula, mode: str = "both",
                      cap: Optional[int] = None) -> Optional[tuple[TwoWorldModel, int]]:
    """First persistent valuation (and world) falsifying ``f``, or None if valid."""
    atoms = atoms_of(f)
    cap = DEFAULT_VALIDITY_CAP if cap is None else cap
    if len(atoms) > cap:
        raise ValiditySizeError(f"{len(atoms)} atoms exceeds the cap of {cap}")
    n = len(atoms)
    codes = np.indices((3,) * n).reshape(n, -1).T if n else np.zeros((1, 0), dtype=int)
    table = np.array(STATES, dtype=bool)
    env = {a: (table[codes[:, i], 0], table[codes[:, i], 1]) for i, a in enumerate(atoms)}
    rows = len(codes)
    for w in _worlds(mode):
        truth = np.broadcast_to(np.asarray(_eval(f, w, env), dtype=bool), (rows,))
        bad = np.flatnonzero(~truth)
        if bad.size:
            row = codes[bad[0]]
            return TwoWorldModel(atoms, tuple(STATES[c] for c in row)), w
    return None


def is_valid(f: Formula, mode: str = "both", cap: Optional[int] = None) -> bool:
    return find_countermodel(f, mode, cap) is None


_CN_TO_TW = {Label.IN: (1, 1), Label.OUT: (0, 0), Label.UND: (0, 1)}
_TW_TO_CN = {v: k for k, v in _CN_TO_TW.items()}


def cn_to_two_world(m: CNModel) -> TwoWorldModel:
    return TwoWorldModel(m.universe, tuple(_CN_TO_TW[lab] for lab in m.labels))


def two_world_to_cn(m: TwoWorldModel) -> CNModel:
    return CNModel(m.universe, tuple(_TW_TO_CN[v] for v in m.values))


def inn_not(x: Formula) -> Formula:
    """Intuitionistic negation inside the two-world logic: ``~X & N X``."""
    return And(Not(x), N(x))


def inn_imp(x: Formula, y: Formula) -> Formula:
    """Intuitionistic implication: ``(X -> Y) & N(X & ~Y & N Y)``."""
    return And(Imp(x, y), N(conj([x, Not(y), N(y)])))
