"""Argumentation framework families and their text formats.

Six families are modelled: plain (``Af``), joint attacks (``JointAf``),
attacks on attacks (``HigherAf``), disjunctive attacks (``DisjAf``),
attack plus support (``BipolarAf``) and acceptance-condition networks
(``AdfSpec``).  Constructors canonicalise relation order but do not
reject bad data; :func:`validate` reports invariant violations.

Text formats
------------
TGF: node ids one per line, a line ``#``, then ``src tgt`` edge lines.

Extended APX: facts terminated by ``.``::

    arg(a).  att(a,b).  jatt([a,b],c).  natt(id,a,b).  hatt(id2,z,id1).
    datt(a,[b,c]).  supp(a,b).  ac(x,"a & ~b").

``%`` starts a comment running to the end of the line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .formula import (Formula, FormulaSyntaxError, N, RESERVED, atoms_of,
                      parse_formula, to_text, _walk)

__all__ = [
    "Af", "JointAf", "HigherAttack", "HigherAf", "DisjAf", "BipolarAf", "AdfSpec",
    "Framework", "FrameworkParseError", "parse_tgf", "parse_apx", "to_apx",
    "to_tgf", "validate", "load",
]

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class FrameworkParseError(ValueError):
    """Malformed framework text.  ``line`` is 1-based, or None if global."""

    def __init__(self, message: str, line: int | None = None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line


def _index(arguments: tuple[str, ...]):
    pos = {a: i for i, a in enumerate(arguments)}
    big = len(arguments)
    return lambda a: (pos.get(a, big), a)


def _dedup(items):
    return tuple(dict.fromkeys(items))


@dataclass(frozen=True)
class Af:
    """Plain network ``(S, R)``."""

    arguments: tuple[str, ...]
    attacks: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        args = _dedup(self.arguments)
        key = _index(args)
        atts = sorted(_dedup(tuple(p) for p in self.attacks),
                      key=lambda p: (key(p[1]), key(p[0])))
        object.__setattr__(self, "arguments", args)
        object.__setattr__(self, "attacks", tuple(atts))

    def attackers(self, x: str) -> tuple[str, ...]:
        return tuple(z for z, y in self.attacks if y == x)


@dataclass(frozen=True)
class JointAf:
    """Network with joint attacks ``G R0 x`` where ``G`` is a non-empty set."""

    arguments: tuple[str, ...]
    joint_attacks: tuple[tuple[tuple[str, ...], str], ...] = ()

    def __post_init__(self):
        args = _dedup(self.arguments)
        key = _index(args)
        atts = []
        for group, target in self.joint_attacks:
            group = tuple(sorted(set(group), key=key))
            atts.append((group, target))
        atts = sorted(_dedup(atts), key=lambda p: (key(p[1]), [key(z) for z in p[0]]))
        object.__setattr__(self, "arguments", args)
        object.__setattr__(self, "joint_attacks", tuple(atts))

    def attacking_sets(self, x: str) -> tuple[tuple[str, ...], ...]:
        return tuple(g for g, y in self.joint_attacks if y == x)

    @classmethod
    def from_af(cls, af: Af) -> "JointAf":
        return cls(af.arguments, tuple(((z,), y) for z, y in af.attacks))


@dataclass(frozen=True)
class HigherAttack:
    id: str
    source: str
    target: str


@dataclass(frozen=True)
class HigherAf:
    """Network whose attacks may target other (named) attacks.

    ``attacks`` holds every attack of every level; an attack whose target is
    an argument is level 1, one targeting a level-i attack is level i+1.
    """

    arguments: tuple[str, ...]
    attacks: tuple[HigherAttack, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "arguments", _dedup(self.arguments))
        atts = tuple(a if isinstance(a, HigherAttack) else HigherAttack(*a)
                     for a in self.attacks)
        object.__setattr__(self, "attacks", _dedup(atts))

    def attack(self, ident: str) -> HigherAttack:
        for a in self.attacks:
            if a.id == ident:
                return a
        raise KeyError(ident)

    def level_of(self, ident: str) -> int:
        by_id = {a.id: a for a in self.attacks}
        depth, seen = 1, {ident}
        target = by_id[ident].target
        while target in by_id:
            if target in seen:
                raise ValueError(f"attack {ident!r} lies on a reference cycle")
            seen.add(target)
            depth += 1
            target = by_id[target].target
        return depth

    @property
    def levels(self) -> tuple[tuple[HigherAttack, ...], ...]:
        if not self.attacks:
            return ()
        depth = {a.id: self.level_of(a.id) for a in self.attacks}
        n = max(depth.values())
        return tuple(tuple(a for a in self.attacks if depth[a.id] == i) for i in range(1, n + 1))


@dataclass(frozen=True)
class DisjAf:
    """Network with direct attacks ``R`` and disjunctive attacks ``z rho H``."""

    arguments: tuple[str, ...]
    direct_attacks: tuple[tuple[str, str], ...] = ()
    disj_attacks: tuple[tuple[str, tuple[str, ...]], ...] = ()

    def __post_init__(self):
        args = _dedup(self.arguments)
        key = _index(args)
        direct = sorted(_dedup(tuple(p) for p in self.direct_attacks),
                        key=lambda p: (key(p[1]), key(p[0])))
        disj = []
        for z, targets in self.disj_attacks:
            disj.append((z, tuple(sorted(set(targets), key=key))))
        disj = sorted(_dedup(disj), key=lambda p: (key(p[0]), [key(u) for u in p[1]]))
        object.__setattr__(self, "arguments", args)
        object.__setattr__(self, "direct_attacks", tuple(direct))
        object.__setattr__(self, "disj_attacks", tuple(disj))

    def direct_attackers(self, x: str) -> tuple[str, ...]:
        return tuple(y for y, t in self.direct_attacks if t == x)

    def indirect_attacks(self, x: str) -> tuple[tuple[str, tuple[str, ...]], ...]:
        """Pairs ``(z, co_targets)`` for every disjunctive attack whose set contains x."""
        return tuple((z, tuple(u for u in h if u != x))
                     for z, h in self.disj_attacks if x in h)


@dataclass(frozen=True)
class BipolarAf:
    arguments: tuple[str, ...]
    attacks: tuple[tuple[str, str], ...] = ()
    supports: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        args = _dedup(self.arguments)
        key = _index(args)
        order = lambda p: (key(p[1]), key(p[0]))  # noqa: E731
        object.__setattr__(self, "arguments", args)
        object.__setattr__(self, "attacks",
                           tuple(sorted(_dedup(tuple(p) for p in self.attacks), key=order)))
        object.__setattr__(self, "supports",
                           tuple(sorted(_dedup(tuple(p) for p in self.supports), key=order)))

    @property
    def attack_part(self) -> Af:
        return Af(self.arguments, self.attacks)


@dataclass(frozen=True)
class AdfSpec:
    """Arguments with one classical acceptance formula each."""

    arguments: tuple[str, ...]
    acceptance: tuple[tuple[str, Formula], ...] = ()

    def __post_init__(self):
        args = _dedup(self.arguments)
        key = _index(args)
        acc = self.acceptance
        if isinstance(acc, dict):
            acc = tuple(acc.items())
        acc = tuple((x, parse_formula(f) if isinstance(f, str) else f) for x, f in acc)
        object.__setattr__(self, "arguments", args)
        object.__setattr__(self, "acceptance", tuple(sorted(acc, key=lambda p: key(p[0]))))

    def condition(self, x: str) -> Formula:
        for y, f in self.acceptance:
            if y == x:
                return f
        raise KeyError(x)


Framework = Union[Af, JointAf, HigherAf, DisjAf, BipolarAf, AdfSpec]


# ---------------------------------------------------------------------------
# validation

def validate(fw: Framework) -> list[str]:
    """Return human-readable invariant violations; empty means well formed."""
    out: list[str] = []
    args = fw.arguments
    known = set(args)
    if not args:
        out.append("argument set is empty")
    for a in args:
        if not isinstance(a, str) or not _IDENT.match(a) or a in RESERVED:
            out.append(f"invalid argument name {a!r}")

    def need(name, what):
        if name not in known:
            out.append(f"{what} refers to unknown argument {name!r}")

    if isinstance(fw, (Af, BipolarAf)):
        for z, y in fw.attacks:
            need(z, f"attack ({z},{y})")
            need(y, f"attack ({z},{y})")
        if isinstance(fw, BipolarAf):
            for z, y in fw.supports:
                need(z, f"support ({z},{y})")
                need(y, f"support ({z},{y})")
    elif isinstance(fw, JointAf):
        for g, y in fw.joint_attacks:
            if not g:
                out.append(f"joint attack on {y!r} has an empty attacking set")
            for z in g:
                need(z, f"joint attack on {y}")
            need(y, "joint attack target")
    elif isinstance(fw, HigherAf):
        ids = [a.id for a in fw.attacks]
        dupes = sorted({i for i in ids if ids.count(i) > 1})
        if dupes:
            out.append(f"duplicate attack ids {dupes}")
        clash = sorted(set(ids) & known)
        if clash:
            out.append(f"attack ids collide with arguments {clash}")
        idset = set(ids)
        for a in fw.attacks:
            if not _IDENT.match(a.id) or a.id in RESERVED:
                out.append(f"invalid attack id {a.id!r}")
            need(a.source, f"attack {a.id}")
            if a.target not in known and a.target not in idset:
                out.append(f"attack {a.id} targets unknown argument or attack {a.target!r}")
        if not out:
            for a in fw.attacks:
                try:
                    fw.level_of(a.id)
                except ValueError as exc:
                    out.append(str(exc))
    elif isinstance(fw, DisjAf):
        for z, y in fw.direct_attacks:
            need(z, f"attack ({z},{y})")
            need(y, f"attack ({z},{y})")
        for z, h in fw.disj_attacks:
            need(z, "disjunctive attack source")
            if not h:
                out.append(f"disjunctive attack from {z!r} has an empty target set")
            for u in h:
                need(u, f"disjunctive attack from {z}")
    elif isinstance(fw, AdfSpec):
        names = [x for x, _ in fw.acceptance]
        for x in args:
            if names.count(x) != 1:
                out.append(f"argument {x!r} needs exactly one acceptance condition, "
                           f"has {names.count(x)}")
        for x, f in fw.acceptance:
            need(x, "acceptance condition")
            if any(isinstance(g, N) for g in _walk(f)):
                out.append(f"acceptance condition of {x!r} uses strong negation")
            for a in atoms_of(f):
                need(a, f"acceptance condition of {x}")
    else:
        raise TypeError(f"not a framework: {fw!r}")
    return out


# ---------------------------------------------------------------------------
# TGF

def parse_tgf(text: str) -> Af:
    nodes: list[str] = []
    edges: list[tuple[str, str]] = []
    in_edges = False
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        if line == "#":
            if in_edges:
                raise FrameworkParseError("second '#' separator", lineno)
            in_edges = True
            continue
        parts = line.split()
        if not in_edges:
            # TGF allows a label after the id; the label is ignored
            node = parts[0]
            if not _IDENT.match(node) or node in RESERVED:
                raise FrameworkParseError(f"invalid node id {node!r}", lineno)
            nodes.append(node)
        else:
            if len(parts) < 2:
                raise FrameworkParseError(f"malformed edge line {line!r}", lineno)
            src, tgt = parts[0], parts[1]
            for end in (src, tgt):
                if end not in nodes:
                    raise FrameworkParseError(f"edge endpoint {end!r} is not a node", lineno)
            edges.append((src, tgt))
    if not nodes:
        raise FrameworkParseError("no nodes")
    return Af(tuple(nodes), tuple(edges))


def to_tgf(af: Af) -> str:
    lines = list(af.arguments) + ["#"] + [f"{z} {y}" for z, y in af.attacks]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# extended APX

_FACT_ARITY = {"arg": 1, "att": 2, "jatt": 2, "natt": 3, "hatt": 3, "datt": 2,
               "supp": 2, "ac": 2}
_FAMILY = {"jatt": "joint", "natt": "higher", "hatt": "higher", "datt": "disjunctive",
           "supp": "bipolar", "ac": "adf"}


def _strip_comments(text: str) -> str:
    out = []
    for line in text.splitlines():
        in_str = False
        cut = len(line)
        for i, ch in enumerate(line):
            if ch == '"':
                in_str = not in_str
            elif ch == "%" and not in_str:
                cut = i
                break
        out.append(line[:cut])
    return "\n".join(out)


class _ApxScanner:
    _tok = re.compile(r'\s*(?:(?P<ident>[A-Za-z0-9_]+)|(?P<str>"[^"]*")|(?P<p>[()\[\],.]))')

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def line(self, pos=None) -> int:
        return self.text.count("\n", 0, self.pos if pos is None else pos) + 1

    def next(self):
        m = self._tok.match(self.text, self.pos)
        if m is None:
            rest = self.text[self.pos:]
            if not rest.strip():
                return None
            self.pos += len(rest) - len(rest.lstrip())
            raise FrameworkParseError(f"unexpected character {self.text[self.pos]!r}", self.line())
        self.pos = m.end()
        kind = m.lastgroup
        return kind, m.group(kind)

    def expect(self, value):
        tok = self.next()
        if tok is None or tok[1] != value:
            got = "end of input" if tok is None else repr(tok[1])
            raise FrameworkParseError(f"expected {value!r}, got {got}", self.line())

    def term(self):
        tok = self.next()
        if tok is None:
            raise FrameworkParseError("unexpected end of input", self.line())
        kind, value = tok
        if kind == "ident":
            return value
        if kind == "str":
            return ("str", value[1:-1])
        if value == "[":
            items = []
            while True:
                tok = self.next()
                if tok is None:
                    raise FrameworkParseError("unterminated list", self.line())
                if tok[0] == "ident":
                    items.append(tok[1])
                else:
                    raise FrameworkParseError(f"expected list element, got {tok[1]!r}", self.line())
                tok = self.next()
                if tok == ("p", "]"):
                    return ("list", tuple(items))
                if tok != ("p", ","):
                    raise FrameworkParseError("expected ',' or ']' in list", self.line())
        raise FrameworkParseError(f"unexpected {value!r}", self.line())

    def facts(self):
        while True:
            tok = self.next()
            if tok is None:
                return
            start = self.line()
            if tok[0] != "ident":
                raise FrameworkParseError(f"expected fact name, got {tok[1]!r}", start)
            name = tok[1]
            self.expect("(")
            args = [self.term()]
            while True:
                tok = self.next()
                if tok == ("p", ")"):
                    break
                if tok != ("p", ","):
                    raise FrameworkParseError(f"malformed arguments of {name}", self.line())
                args.append(self.term())
            self.expect(".")
            yield start, name, args


def parse_apx(text: str) -> Framework:
    """Parse extended APX into the most specific framework family present."""
    scanner = _ApxScanner(_strip_comments(text.replace("\r\n", "\n")))
    arguments: list[str] = []
    facts: dict[str, list] = {k: [] for k in _FACT_ARITY}
    for line, name, args in scanner.facts():
        if name not in _FACT_ARITY:
            raise FrameworkParseError(f"unknown fact {name!r}", line)
        if len(args) != _FACT_ARITY[name]:
            raise FrameworkParseError(
                f"{name} takes {_FACT_ARITY[name]} argument(s), got {len(args)}", line)
        if name == "arg":
            a = _name(args[0], line)
            if a in RESERVED:
                raise FrameworkParseError(f"argument name {a!r} is a reserved word", line)
            if not _IDENT.match(a):
                raise FrameworkParseError(f"invalid argument name {a!r}", line)
            arguments.append(a)
        else:
            facts[name].append((line, args))

    declared = set(arguments)

    def arg(term, line):
        a = _name(term, line)
        if a not in declared:
            raise FrameworkParseError(f"undeclared argument {a!r}", line)
        return a

    def arglist(term, line):
        if not (isinstance(term, tuple) and term[0] == "list"):
            raise FrameworkParseError("expected a list [..]", line)
        if not term[1]:
            raise FrameworkParseError("empty argument list", line)
        return tuple(arg(t, line) for t in term[1])

    families = {_FAMILY[k] for k, v in facts.items() if v and k in _FAMILY}
    if len(families) > 1:
        raise FrameworkParseError(f"incompatible fact families: {sorted(families)}")
    family = families.pop() if families else "plain"
    if facts["att"] and family in ("higher", "adf"):
        raise FrameworkParseError(f"att facts cannot be combined with {family} facts")
    if not arguments:
        raise FrameworkParseError("no arguments declared")

    att = [(arg(a, ln), arg(b, ln)) for ln, (a, b) in facts["att"]]
    if family == "plain":
        return Af(tuple(arguments), tuple(att))
    if family == "joint":
        joint = [((z,), y) for z, y in att]
        joint += [(arglist(g, ln), arg(y, ln)) for ln, (g, y) in facts["jatt"]]
        return JointAf(tuple(arguments), tuple(joint))
    if family == "disjunctive":
        disj = [(arg(z, ln), arglist(h, ln)) for ln, (z, h) in facts["datt"]]
        return DisjAf(tuple(arguments), tuple(att), tuple(disj))
    if family == "bipolar":
        supp = [(arg(a, ln), arg(b, ln)) for ln, (a, b) in facts["supp"]]
        return BipolarAf(tuple(arguments), tuple(att), tuple(supp))
    if family == "adf":
        acc = []
        for ln, (x, f) in facts["ac"]:
            x = arg(x, ln)
            if not (isinstance(f, tuple) and f[0] == "str"):
                raise FrameworkParseError("ac expects a quoted formula", ln)
            try:
                phi = parse_formula(f[1])
            except FormulaSyntaxError as exc:
                raise FrameworkParseError(f"formula for {x!r}: {exc}", ln) from exc
            for a in atoms_of(phi):
                if a not in declared:
                    raise FrameworkParseError(f"undeclared argument {a!r} in formula", ln)
            acc.append((x, phi))
        adf = AdfSpec(tuple(arguments), tuple(acc))
        problems = validate(adf)
        if problems:
            raise FrameworkParseError("; ".join(problems))
        return adf
    # higher
    ids: dict[str, HigherAttack] = {}
    pending = []
    for ln, (i, z, x) in facts["natt"]:
        i = _name(i, ln)
        if i in ids or i in declared:
            raise FrameworkParseError(f"attack id {i!r} reused", ln)
        ids[i] = HigherAttack(i, arg(z, ln), arg(x, ln))
    for ln, (i, z, t) in facts["hatt"]:
        i = _name(i, ln)
        if i in ids or i in declared:
            raise FrameworkParseError(f"attack id {i!r} reused", ln)
        ids[i] = HigherAttack(i, arg(z, ln), _name(t, ln))
        pending.append((ln, ids[i]))
    for ln, a in pending:
        if a.target not in ids:
            raise FrameworkParseError(f"dangling attack id {a.target!r}", ln)
    haf = HigherAf(tuple(arguments), tuple(ids.values()))
    problems = validate(haf)
    if problems:
        raise FrameworkParseError("; ".join(problems))
    return haf


def _name(term, line) -> str:
    if not isinstance(term, str):
        raise FrameworkParseError("expected a name", line)
    return term


def to_apx(fw: Framework) -> str:
    """Render any framework as extended APX; :func:`parse_apx` inverts it."""
    lines = [f"arg({a})." for a in fw.arguments]
    if isinstance(fw, (Af, BipolarAf)):
        lines += [f"att({z},{y})." for z, y in fw.attacks]
    if isinstance(fw, BipolarAf):
        lines += [f"supp({z},{y})." for z, y in fw.supports]
    elif isinstance(fw, JointAf):
        lines += [f"jatt([{','.join(g)}],{y})." for g, y in fw.joint_attacks]
    elif isinstance(fw, HigherAf):
        for a in fw.attacks:
            if a.target in fw.arguments:
                lines.append(f"natt({a.id},{a.source},{a.target}).")
            else:
                lines.append(f"hatt({a.id},{a.source},{a.target}).")
    elif isinstance(fw, DisjAf):
        lines += [f"att({z},{y})." for z, y in fw.direct_attacks]
        lines += [f"datt({z},[{','.join(h)}])." for z, h in fw.disj_attacks]
    elif isinstance(fw, AdfSpec):
        lines += [f'ac({x},"{to_text(f)}").' for x, f in fw.acceptance]
    return "\n".join(lines) + "\n"


def load(text: str, fmt: str) -> Framework:
    if fmt == "tgf":
        return parse_tgf(text)
    if fmt == "apx":
        return parse_apx(text)
    raise ValueError(f"unknown format {fmt!r}")
