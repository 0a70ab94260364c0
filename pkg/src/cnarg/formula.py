"""Formula syntax for classical logic with a strong-negation connective ``N``.

Formulas are immutable trees.  The text grammar, loosest binding first::

    iff   := imp ('<->' iff)?          right associative
    imp   := or ('->' imp)?            right associative
    or    := and ('|' and)*
    and   := unary ('&' unary)*
    unary := '~' unary | 'N' unary | atom | 'T' | 'F' | '@1' | '(' iff ')'

``N`` is a keyword, so ``Na`` is an atom named ``Na`` while ``N a`` and
``N(a)`` apply strong negation to ``a``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Iterator, Union

__all__ = [
    "Formula", "Top", "Bottom", "World1", "Atom", "Not", "N", "And", "Or",
    "Imp", "Iff", "TOP", "BOTTOM", "WORLD1", "FormulaSyntaxError", "Theory",
    "parse_formula", "to_text", "atoms_of", "conj", "disj", "is_cn_flat",
    "contains_world1", "normalize_n", "evaluate_cn", "RESERVED",
]

RESERVED = frozenset({"T", "F", "N"})
_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class FormulaSyntaxError(ValueError):
    """Raised on malformed formula text; ``offset`` is a byte offset."""

    def __init__(self, message: str, offset: int, text: str = ""):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset
        self.text = text


@dataclass(frozen=True)
class Top:
    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class Bottom:
    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class World1:
    """The constant true exactly at the actual world."""

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class Atom:
    name: str

    def __post_init__(self):
        if not isinstance(self.name, str) or not _IDENT.match(self.name):
            raise ValueError(f"invalid atom name {self.name!r}")
        if self.name in RESERVED:
            raise ValueError(f"atom name {self.name!r} is a reserved word")

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Not:
    child: "Formula"

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class N:
    """Strong negation."""

    child: "Formula"

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class Imp:
    left: "Formula"
    right: "Formula"

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class Iff:
    left: "Formula"
    right: "Formula"

    def __str__(self):
        return to_text(self)


Formula = Union[Top, Bottom, World1, Atom, Not, N, And, Or, Imp, Iff]

TOP = Top()
BOTTOM = Bottom()
WORLD1 = World1()

_BINARY = {And: "&", Or: "|", Imp: "->", Iff: "<->"}


def conj(items: Iterable[Formula]) -> Formula:
    """Left-folded conjunction; the empty conjunction is ``T``."""
    items = list(items)
    if not items:
        return TOP
    return reduce(And, items)


def disj(items: Iterable[Formula]) -> Formula:
    """Left-folded disjunction; the empty disjunction is ``F``."""
    items = list(items)
    if not items:
        return BOTTOM
    return reduce(Or, items)


# ---------------------------------------------------------------------------
# printing

def to_text(f: Formula) -> str:
    """Canonical, fully parenthesised rendering accepted by :func:`parse_formula`."""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Top):
        return "T"
    if isinstance(f, Bottom):
        return "F"
    if isinstance(f, World1):
        return "@1"
    if isinstance(f, Not):
        return "~" + to_text(f.child)
    if isinstance(f, N):
        return "N " + to_text(f.child)
    op = _BINARY.get(type(f))
    if op is None:
        raise TypeError(f"not a formula: {f!r}")
    return f"({to_text(f.left)} {op} {to_text(f.right)})"


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(
    r"\s*(?:(?P<op><->|->|[~&|()])|(?P<w1>@1)|(?P<ident>[A-Za-z][A-Za-z0-9_]*))"
)


@dataclass
class _Tok:
    kind: str
    value: str
    offset: int


def _tokenize(text: str) -> list[_Tok]:
    raw = text.encode("utf-8")
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None:
            rest = text[pos:]
            if not rest.strip():
                break
            bad = pos + (len(rest) - len(rest.lstrip()))
            raise FormulaSyntaxError(
                f"unexpected character {text[bad]!r}", len(text[:bad].encode("utf-8")), text)
        start = m.start(m.lastgroup)
        offset = len(text[:start].encode("utf-8"))
        if m.group("op"):
            tokens.append(_Tok(m.group("op"), m.group("op"), offset))
        elif m.group("w1"):
            tokens.append(_Tok("@1", "@1", offset))
        else:
            word = m.group("ident")
            kind = word if word in RESERVED else "atom"
            tokens.append(_Tok(kind, word, offset))
        pos = m.end()
    tokens.append(_Tok("eof", "", len(raw)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> _Tok:
        return self.tokens[self.i]

    def take(self) -> _Tok:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message: str, tok: _Tok):
        raise FormulaSyntaxError(message, tok.offset, self.text)

    def parse(self) -> Formula:
        f = self.iff()
        tok = self.peek()
        if tok.kind != "eof":
            self.fail(f"unexpected token {tok.value!r}", tok)
        return f

    def iff(self) -> Formula:
        left = self.imp()
        if self.peek().kind == "<->":
            self.take()
            return Iff(left, self.iff())
        return left

    def imp(self) -> Formula:
        left = self.or_()
        if self.peek().kind == "->":
            self.take()
            return Imp(left, self.imp())
        return left

    def or_(self) -> Formula:
        left = self.and_()
        while self.peek().kind == "|":
            self.take()
            left = Or(left, self.and_())
        return left

    def and_(self) -> Formula:
        left = self.unary()
        while self.peek().kind == "&":
            self.take()
            left = And(left, self.unary())
        return left

    def unary(self) -> Formula:
        tok = self.take()
        if tok.kind == "~":
            return Not(self.unary())
        if tok.kind == "N":
            return N(self.unary())
        if tok.kind == "atom":
            return Atom(tok.value)
        if tok.kind == "T":
            return TOP
        if tok.kind == "F":
            return BOTTOM
        if tok.kind == "@1":
            return WORLD1
        if tok.kind == "(":
            inner = self.iff()
            close = self.take()
            if close.kind != ")":
                self.fail("expected ')'", close)
            return inner
        if tok.kind == "eof":
            self.fail("unexpected end of input", tok)
        self.fail(f"unexpected token {tok.value!r}", tok)


def parse_formula(text: str) -> Formula:
    """Parse formula text into an AST.

    >>> parse_formula("N a -> ~a")
    Imp(left=N(child=Atom(name='a')), right=Not(child=Atom(name='a')))
    """
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# structural queries

def _walk(f: Formula) -> Iterator[Formula]:
    stack = [f]
    while stack:
        g = stack.pop()
        yield g
        if isinstance(g, (Not, N)):
            stack.append(g.child)
        elif isinstance(g, (And, Or, Imp, Iff)):
            stack.append(g.right)
            stack.append(g.left)


def atoms_of(f: Formula) -> tuple[str, ...]:
    """Atom names in order of first occurrence (left to right)."""
    seen: dict[str, None] = {}
    for g in _walk(f):
        if isinstance(g, Atom):
            seen.setdefault(g.name)
    return tuple(seen)


def is_cn_flat(f: Formula) -> bool:
    return all(isinstance(g.child, Atom) for g in _walk(f) if isinstance(g, N))


def contains_world1(f: Formula) -> bool:
    return any(isinstance(g, World1) for g in _walk(f))


# ---------------------------------------------------------------------------
# N-normalisation

def normalize_n(f: Formula) -> Formula:
    """Push strong negation down to the atoms.

    Rewrites ``NN A => A``, ``N(A&B) => NA|NB``, ``N(A|B) => NA&NB``,
    ``N~A => ~NA``, ``N(A->B) => ~NA & NB``, ``NT => F``, ``NF => T`` and
    ``N@1 => @1``.  A biconditional under ``N`` is first expanded into its
    two implications.  The result has ``N`` only directly on atoms.
    """
    return _push(f, False)


def _push(f: Formula, neg: bool) -> Formula:
    if isinstance(f, Atom):
        return N(f) if neg else f
    if isinstance(f, Top):
        return BOTTOM if neg else f
    if isinstance(f, Bottom):
        return TOP if neg else f
    if isinstance(f, World1):
        return f
    if isinstance(f, N):
        return _push(f.child, not neg)
    if isinstance(f, Not):
        return Not(_push(f.child, neg))
    if isinstance(f, And):
        op = Or if neg else And
        return op(_push(f.left, neg), _push(f.right, neg))
    if isinstance(f, Or):
        op = And if neg else Or
        return op(_push(f.left, neg), _push(f.right, neg))
    if isinstance(f, Imp):
        if neg:
            return And(Not(_push(f.left, True)), _push(f.right, True))
        return Imp(_push(f.left, False), _push(f.right, False))
    if isinstance(f, Iff):
        if neg:
            return _push(And(Imp(f.left, f.right), Imp(f.right, f.left)), True)
        return Iff(_push(f.left, False), _push(f.right, False))
    raise TypeError(f"not a formula: {f!r}")


# ---------------------------------------------------------------------------
# theories

@dataclass(frozen=True, eq=False)
class Theory:
    """A finite list of formulas together with its atom universe.

    Equality ignores formula order and duplicates but respects the
    universe order, which fixes model enumeration order.
    """

    formulas: tuple[Formula, ...]
    universe: tuple[str, ...] = field(default=())

    def __post_init__(self):
        formulas = tuple(self.formulas)
        universe = dict.fromkeys(self.universe)
        for f in formulas:
            for a in atoms_of(f):
                universe.setdefault(a)
        object.__setattr__(self, "formulas", formulas)
        object.__setattr__(self, "universe", tuple(universe))

    def __eq__(self, other):
        if not isinstance(other, Theory):
            return NotImplemented
        return (self.universe == other.universe
                and frozenset(self.formulas) == frozenset(other.formulas))

    def __hash__(self):
        return hash((self.universe, frozenset(self.formulas)))

    def __iter__(self):
        return iter(self.formulas)

    def __len__(self):
        return len(self.formulas)

    def __or__(self, other: "Theory") -> "Theory":
        return Theory(self.formulas + other.formulas, self.universe + other.universe)

    def extend(self, formulas: Iterable[Formula]) -> "Theory":
        return Theory(self.formulas + tuple(formulas), self.universe)

    def to_text(self) -> str:
        """One canonical formula per line."""
        return "".join(to_text(f) + "\n" for f in self.formulas)

    @classmethod
    def from_text(cls, text: str, universe: Iterable[str] = ()) -> "Theory":
        lines = [ln.strip() for ln in text.splitlines()]
        return cls(tuple(parse_formula(ln) for ln in lines if ln and not ln.startswith("%")),
                   tuple(universe))


# ---------------------------------------------------------------------------
# evaluation on CN models

def evaluate_cn(f: Formula, model) -> bool:
    """Classical truth of a CN-flat formula under a three-state model.

    ``q`` holds iff ``q`` is in, ``N q`` holds iff ``q`` is out.
    """
    from .states import Label

    def ev(g: Formula) -> bool:
        if isinstance(g, Atom):
            return _state(g.name) is Label.IN
        if isinstance(g, N):
            if not isinstance(g.child, Atom):
                raise ValueError(f"formula is not CN-flat: {to_text(g)}")
            return _state(g.child.name) is Label.OUT
        if isinstance(g, Top):
            return True
        if isinstance(g, Bottom):
            return False
        if isinstance(g, World1):
            raise ValueError("@1 has no meaning in a CN model")
        if isinstance(g, Not):
            return not ev(g.child)
        if isinstance(g, And):
            return ev(g.left) and ev(g.right)
        if isinstance(g, Or):
            return ev(g.left) or ev(g.right)
        if isinstance(g, Imp):
            return (not ev(g.left)) or ev(g.right)
        if isinstance(g, Iff):
            return ev(g.left) == ev(g.right)
        raise TypeError(f"not a formula: {g!r}")

    def _state(name):
        try:
            return model[name]
        except KeyError:
            raise KeyError(f"atom {name!r} not in model universe") from None

    if not is_cn_flat(f):
        raise ValueError(f"formula is not CN-flat: {to_text(f)}")
    return ev(f)
