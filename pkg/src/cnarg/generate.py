"""Seeded random frameworks and formulas for differential testing."""

from __future__ import annotations

import random
from typing import Sequence

from .formula import (BOTTOM, TOP, WORLD1, And, Atom, Formula, Iff, Imp, N, Not, Or)
from .frameworks import Af, JointAf

__all__ = ["random_af", "random_joint_af", "random_formula", "random_cn_formula",
           "random_inn_formula"]


def _names(n: int) -> tuple[str, ...]:
    return tuple(f"a{i}" for i in range(n))


def random_af(rng: random.Random, max_args: int = 7, density: float | None = None) -> Af:
    n = rng.randint(1, max_args)
    p = rng.uniform(0.1, 0.5) if density is None else density
    args = _names(n)
    attacks = [(z, y) for z in args for y in args if rng.random() < p]
    return Af(args, tuple(attacks))


def random_joint_af(rng: random.Random, max_args: int = 5, max_group: int = 3,
                    max_attacks: int = 6) -> JointAf:
    n = rng.randint(1, max_args)
    args = _names(n)
    attacks = []
    for _ in range(rng.randint(0, max_attacks)):
        size = rng.randint(1, min(max_group, n))
        attacks.append((tuple(rng.sample(args, size)), rng.choice(args)))
    return JointAf(args, tuple(attacks))


def random_formula(rng: random.Random, atoms: Sequence[str], depth: int = 4,
                   world1: bool = True) -> Formula:
    """Arbitrary formula, N allowed anywhere."""
    if depth == 0 or rng.random() < 0.25:
        r = rng.random()
        if r < 0.06:
            return TOP
        if r < 0.12:
            return BOTTOM
        if world1 and r < 0.18:
            return WORLD1
        return Atom(rng.choice(atoms))
    op = rng.choice(("not", "n", "n", "and", "or", "imp", "iff"))
    if op == "not":
        return Not(random_formula(rng, atoms, depth - 1, world1))
    if op == "n":
        return N(random_formula(rng, atoms, depth - 1, world1))
    cls = {"and": And, "or": Or, "imp": Imp, "iff": Iff}[op]
    return cls(random_formula(rng, atoms, depth - 1, world1),
               random_formula(rng, atoms, depth - 1, world1))


def random_cn_formula(rng: random.Random, atoms: Sequence[str], depth: int = 4) -> Formula:
    """CN-flat formula without @1: N only directly above atoms."""
    if depth == 0 or rng.random() < 0.25:
        r = rng.random()
        if r < 0.05:
            return TOP
        if r < 0.1:
            return BOTTOM
        a = Atom(rng.choice(atoms))
        return N(a) if rng.random() < 0.5 else a
    op = rng.choice(("not", "and", "or", "imp", "iff"))
    if op == "not":
        return Not(random_cn_formula(rng, atoms, depth - 1))
    cls = {"and": And, "or": Or, "imp": Imp, "iff": Iff}[op]
    return cls(random_cn_formula(rng, atoms, depth - 1),
               random_cn_formula(rng, atoms, depth - 1))


def random_inn_formula(rng: random.Random, atoms: Sequence[str], depth: int = 4) -> Formula:
    """Formula built from atoms with conjunction, disjunction and the
    intuitionistic negation and implication."""
    from .twoworld import inn_imp, inn_not

    if depth == 0 or rng.random() < 0.25:
        return Atom(rng.choice(atoms))
    op = rng.choice(("and", "or", "not", "imp"))
    if op == "not":
        return inn_not(random_inn_formula(rng, atoms, depth - 1))
    left = random_inn_formula(rng, atoms, depth - 1)
    right = random_inn_formula(rng, atoms, depth - 1)
    if op == "imp":
        return inn_imp(left, right)
    return (And if op == "and" else Or)(left, right)
