"""Three-state assignments shared by CN models and argument labellings."""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Mapping, Union


class Label(str, Enum):
    """Status of an argument.  Declaration order is the enumeration order."""

    IN = "in"
    OUT = "out"
    UND = "und"

    def __str__(self):
        return self.value

    @property
    def code(self) -> int:
        return _CODES[self]


LABELS = (Label.IN, Label.OUT, Label.UND)
_CODES = {lab: i for i, lab in enumerate(LABELS)}

LabelLike = Union[Label, str]


@dataclass(frozen=True)
class _Assignment:
    universe: tuple[str, ...]
    labels: tuple[Label, ...]

    def __post_init__(self):
        universe = tuple(self.universe)
        labels = tuple(Label(v) for v in self.labels)
        if len(universe) != len(labels):
            raise ValueError("universe and labels differ in length")
        if len(set(universe)) != len(universe):
            raise ValueError("duplicate names in universe")
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_dict(cls, states: Mapping[str, LabelLike], universe: Iterable[str] | None = None):
        """Build from a name -> label mapping, ordered by ``universe`` if given."""
        names = tuple(universe) if universe is not None else tuple(states)
        missing = [a for a in names if a not in states]
        if missing:
            raise ValueError(f"no state for {missing}")
        extra = set(states) - set(names)
        if extra:
            raise ValueError(f"states outside universe: {sorted(extra)}")
        return cls(names, tuple(Label(states[a]) for a in names))

    def __getitem__(self, name: str) -> Label:
        try:
            return self.labels[self.universe.index(name)]
        except ValueError:
            raise KeyError(name) from None

    def __contains__(self, name) -> bool:
        return name in self.universe

    def __iter__(self) -> Iterator[str]:
        return iter(self.universe)

    def __len__(self):
        return len(self.universe)

    def items(self):
        return zip(self.universe, self.labels)

    def as_dict(self) -> dict[str, str]:
        return {a: lab.value for a, lab in self.items()}

    def with_label(self, label: Label) -> frozenset[str]:
        return frozenset(a for a, lab in self.items() if lab is label)

    def sort_key(self) -> tuple[int, ...]:
        return tuple(lab.code for lab in self.labels)

    def restrict(self, keep: Iterable[str]):
        keep = list(keep)
        unknown = [a for a in keep if a not in self.universe]
        if unknown:
            raise KeyError(f"unknown argument(s): {unknown}")
        kept = set(keep)
        pairs = [(a, lab) for a, lab in self.items() if a in kept]
        return type(self)(tuple(a for a, _ in pairs), tuple(lab for _, lab in pairs))

    def __repr__(self):
        body = ", ".join(f"{a}:{lab.value}" for a, lab in self.items())
        return f"{type(self).__name__}({{{body}}})"


class CNModel(_Assignment):
    """A coherent CN valuation: ``in`` is (q,Nq)=(1,0), ``out`` (0,1), ``und`` (0,0)."""

    def truth(self, name: str) -> bool:
        return self[name] is Label.IN

    def strong_truth(self, name: str) -> bool:
        return self[name] is Label.OUT

    def to_json(self) -> dict:
        return {"model": self.as_dict()}


class Labelling(_Assignment):
    """A total argument labelling; its extension is the set of ``in`` arguments."""

    @property
    def extension(self) -> frozenset[str]:
        return self.with_label(Label.IN)

    def to_json(self) -> dict:
        return {"labelling": self.as_dict()}


def dumps(items: Iterable[_Assignment]) -> str:
    return json.dumps([x.to_json() for x in items], sort_keys=False)
