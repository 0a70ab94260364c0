"""Model enumeration, entailment and model/labelling conversion for CN theories.

The search space is the set of coherent assignments, one of three states
per atom.  A depth-first search fixes the leading atoms one at a time and
prunes with three-valued (Kleene) evaluation; the trailing atoms are swept
in one vectorised numpy pass.  Literal facts restrict atom domains before
the search starts.  Output order is lexicographic with in < out < und and
atoms in universe order.
"""

from __future__ import annotations

from typing import Iterator, Optional

import numpy as np

from .formula import (And, Atom, Bottom, Formula, Iff, Imp, N, Not, Or, Theory,
                      Top, atoms_of, evaluate_cn, is_cn_flat, to_text)
from .states import CNModel, Label, LABELS, Labelling

__all__ = [
    "DEFAULT_MAX_ATOMS", "SizeCapError", "InconsistentTheoryError",
    "enumerate_models", "iter_models", "is_model", "entails",
    "entailment_countermodel", "grounded_by_entailment", "model_to_labelling",
    "labelling_to_model",
]

DEFAULT_MAX_ATOMS = 20
_SWEEP = 7  # atoms handled by the vectorised tail


class SizeCapError(RuntimeError):
    """The theory has more atoms than the configured cap."""


class InconsistentTheoryError(ValueError):
    """The theory has no CN model."""


# ---------------------------------------------------------------------------
# evaluators

def _kleene(f: Formula, env: dict) -> Optional[bool]:
    """Three-valued value of ``f`` under a partial assignment of label codes."""
    if isinstance(f, Atom):
        c = env.get(f.name)
        return None if c is None else c == 0
    if isinstance(f, N):
        c = env.get(f.child.name)
        return None if c is None else c == 1
    if isinstance(f, Top):
        return True
    if isinstance(f, Bottom):
        return False
    if isinstance(f, Not):
        v = _kleene(f.child, env)
        return None if v is None else not v
    if isinstance(f, And):
        a = _kleene(f.left, env)
        if a is False:
            return False
        b = _kleene(f.right, env)
        if b is False:
            return False
        return True if (a and b) else None
    if isinstance(f, Or):
        a = _kleene(f.left, env)
        if a is True:
            return True
        b = _kleene(f.right, env)
        if b is True:
            return True
        return False if (a is False and b is False) else None
    if isinstance(f, Imp):
        return _kleene(Or(Not(f.left), f.right), env)
    if isinstance(f, Iff):
        a = _kleene(f.left, env)
        b = _kleene(f.right, env)
        return None if a is None or b is None else a == b
    raise ValueError(f"unsupported node in CN formula: {f!r}")


def _vector(f: Formula, env: dict):
    """Evaluate ``f`` where each atom maps to a scalar or an array of codes."""
    if isinstance(f, Atom):
        return env[f.name] == 0
    if isinstance(f, N):
        return env[f.child.name] == 1
    if isinstance(f, Top):
        return True
    if isinstance(f, Bottom):
        return False
    if isinstance(f, Not):
        return np.logical_not(_vector(f.child, env))
    if isinstance(f, And):
        return np.logical_and(_vector(f.left, env), _vector(f.right, env))
    if isinstance(f, Or):
        return np.logical_or(_vector(f.left, env), _vector(f.right, env))
    if isinstance(f, Imp):
        return np.logical_or(np.logical_not(_vector(f.left, env)), _vector(f.right, env))
    if isinstance(f, Iff):
        return np.equal(_vector(f.left, env), _vector(f.right, env))
    raise ValueError(f"unsupported node in CN formula: {f!r}")


def _literal_domains(theory: Theory) -> dict[str, set[int]] | None:
    """Unit propagation over top-level literals; None when contradictory."""
    dom = {a: {0, 1, 2} for a in theory.universe}
    for f in theory.formulas:
        if isinstance(f, Atom):
            dom[f.name] &= {0}
        elif isinstance(f, N):
            dom[f.child.name] &= {1}
        elif isinstance(f, Not) and isinstance(f.child, Atom):
            dom[f.child.name] -= {0}
        elif isinstance(f, Not) and isinstance(f.child, N):
            dom[f.child.child.name] -= {1}
        elif isinstance(f, Bottom):
            return None
    if any(not d for d in dom.values()):
        return None
    return dom


def _grid(domains: list[list[int]]) -> np.ndarray:
    if not domains:
        return np.zeros((1, 0), dtype=np.int8)
    axes = np.meshgrid(*[np.array(d, dtype=np.int8) for d in domains], indexing="ij")
    return np.stack([a.reshape(-1) for a in axes], axis=1)


# ---------------------------------------------------------------------------
# enumeration

def _check(theory: Theory, max_atoms: Optional[int]):
    for f in theory.formulas:
        if not is_cn_flat(f):
            raise ValueError(f"formula is not CN-flat: {to_text(f)}")
    n = len(theory.universe)
    cap = DEFAULT_MAX_ATOMS if max_atoms is None else max_atoms
    if n > cap:
        raise SizeCapError(f"theory has {n} atoms, cap is {cap} (raise max_atoms to override)")


def iter_models(theory: Theory, max_atoms: Optional[int] = None) -> Iterator[CNModel]:
    """Yield the CN models of ``theory`` lazily, in lexicographic order."""
    _check(theory, max_atoms)
    universe = theory.universe
    dom = _literal_domains(theory)
    if dom is None:
        return
    formulas = [f for f in theory.formulas if not isinstance(f, Top)]
    n = len(universe)
    split = max(0, n - _SWEEP)
    head, tail = universe[:split], universe[split:]
    grid = _grid([sorted(dom[a]) for a in tail])
    touching: dict[str, list[Formula]] = {a: [] for a in head}
    for f in formulas:
        for a in atoms_of(f):
            if a in touching:
                touching[a].append(f)
    env: dict = {}

    def sweep():
        cols = {a: grid[:, i] for i, a in enumerate(tail)}
        local = dict(env)
        local.update(cols)
        keep = np.ones(len(grid), dtype=bool)
        for f in formulas:
            keep &= np.broadcast_to(np.asarray(_vector(f, local), dtype=bool), keep.shape)
            if not keep.any():
                return
        prefix = tuple(LABELS[env[a]] for a in head)
        for row in grid[keep]:
            yield CNModel(universe, prefix + tuple(LABELS[c] for c in row))

    def descend(i):
        if i == split:
            yield from sweep()
            return
        a = head[i]
        for code in sorted(dom[a]):
            env[a] = code
            if all(_kleene(f, env) is not False for f in touching[a]):
                yield from descend(i + 1)
        env.pop(a, None)

    if split == 0:
        yield from sweep()
    else:
        yield from descend(0)


def enumerate_models(theory: Theory, max_atoms: Optional[int] = None) -> list[CNModel]:
    return list(iter_models(theory, max_atoms))


def is_model(theory: Theory, model: CNModel) -> bool:
    if set(model.universe) != set(theory.universe):
        raise ValueError("model and theory have different universes")
    return all(evaluate_cn(f, model) for f in theory.formulas)


def _widen(theory: Theory, f: Formula) -> Theory:
    extra = [a for a in atoms_of(f) if a not in theory.universe]
    return Theory(theory.formulas, theory.universe + tuple(extra)) if extra else theory


def entailment_countermodel(theory: Theory, f: Formula,
                            max_atoms: Optional[int] = None) -> Optional[CNModel]:
    """First model of ``theory`` falsifying ``f``, or None if ``theory`` entails ``f``."""
    if not is_cn_flat(f):
        raise ValueError(f"formula is not CN-flat: {to_text(f)}")
    for m in iter_models(_widen(theory, f), max_atoms):
        if not evaluate_cn(f, m):
            return m
    return None


def entails(theory: Theory, f: Formula, max_atoms: Optional[int] = None) -> bool:
    return entailment_countermodel(theory, f, max_atoms) is None


def grounded_by_entailment(theory: Theory, max_atoms: Optional[int] = None) -> frozenset[str]:
    """Atoms entailed by the theory, i.e. in-labelled in every model."""
    models = iter_models(theory, max_atoms)
    common: Optional[set[str]] = None
    for m in models:
        ins = set(m.with_label(Label.IN))
        common = ins if common is None else common & ins
    if common is None:
        raise InconsistentTheoryError("theory has no CN model")
    return frozenset(common)


def model_to_labelling(m: CNModel) -> Labelling:
    return Labelling(m.universe, m.labels)


def labelling_to_model(lab: Labelling) -> CNModel:
    return CNModel(lab.universe, lab.labels)
