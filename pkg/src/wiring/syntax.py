"""A small text syntax for free SMC terms and its compiler to wiring diagrams.

::

    ob x y z
    hom f : x -> x * y
    hom g : y * z -> z
    term h = (f * id[z]) ; (id[x] * g)

``*`` is the monoidal product and binds tighter than ``;`` (composition);
both associate to the left. ``I`` is the monoidal unit, ``id[a*b]`` an
identity, ``braid[a|b]`` the symmetry ``a*b -> b*a`` and ``perm[a*b*c | 2 3 1]``
the permutation sending input ``i`` to the output listed at position ``i``.
Earlier terms may be used by name in later ones. ``#`` starts a comment.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from . import smc

KEYWORDS = {"ob", "hom", "term", "id", "braid", "perm", "I"}


class FrontendError(Exception):
    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        where = f"{line}:{col}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line
        self.col = col


class ParseError(FrontendError):
    pass


class UnknownSymbol(FrontendError):
    pass


class TypeCheckError(FrontendError):
    def __init__(self, message, expected=None, actual=None, line=None, col=None):
        super().__init__(message, line, col)
        self.expected = expected
        self.actual = actual


# -- AST -----------------------------------------------------------------------

@dataclass(frozen=True)
class Gen:
    name: str


@dataclass(frozen=True)
class Id:
    types: tuple[str, ...]


@dataclass(frozen=True)
class Braid:
    left: tuple[str, ...]
    right: tuple[str, ...]


@dataclass(frozen=True)
class Perm:
    types: tuple[str, ...]
    sigma: tuple[int, ...]


@dataclass(frozen=True)
class Seq:
    left: "Expression"
    right: "Expression"


@dataclass(frozen=True)
class Tensor:
    left: "Expression"
    right: "Expression"


@dataclass(frozen=True)
class Unit:
    pass


Expression = Gen | Id | Braid | Perm | Seq | Tensor | Unit


@dataclass
class Signature:
    objects: list[str] = field(default_factory=list)
    generators: dict[str, tuple[tuple[str, ...], tuple[str, ...]]] = field(default_factory=dict)


def type_of(e: Expression, sig: Signature) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """Domain and codomain of a well-typed expression."""
    if isinstance(e, Gen):
        if e.name not in sig.generators:
            raise UnknownSymbol(f"unknown generator {e.name!r}")
        return sig.generators[e.name]
    if isinstance(e, Id):
        return e.types, e.types
    if isinstance(e, Unit):
        return (), ()
    if isinstance(e, Braid):
        return e.left + e.right, e.right + e.left
    if isinstance(e, Perm):
        cod = [None] * len(e.types)
        for t, s in zip(e.types, e.sigma):
            cod[s - 1] = t
        return e.types, tuple(cod)
    if isinstance(e, Seq):
        (a, b), (c, d) = type_of(e.left, sig), type_of(e.right, sig)
        if b != c:
            raise TypeCheckError(f"cannot compose: codomain {_obj(b)} != domain {_obj(c)}",
                                 expected=c, actual=b)
        return a, d
    if isinstance(e, Tensor):
        (a, b), (c, d) = type_of(e.left, sig), type_of(e.right, sig)
        return a + c, b + d
    raise TypeError(f"not an expression: {e!r}")


# -- printing ------------------------------------------------------------------------

def _obj(types) -> str:
    return " * ".join(types) if types else "I"


def show(e: Expression) -> str:
    """Render an expression so that it parses back to the same tree."""
    return _show(e, 0)


def _show(e: Expression, prec: int) -> str:
    if isinstance(e, Seq):
        s, p = f"{_show(e.left, 1)} ; {_show(e.right, 2)}", 1
    elif isinstance(e, Tensor):
        s, p = f"{_show(e.left, 2)} * {_show(e.right, 3)}", 2
    else:
        if isinstance(e, Gen):
            return e.name
        if isinstance(e, Unit):
            return "I"
        if isinstance(e, Id):
            return f"id[{_obj(e.types)}]"
        if isinstance(e, Braid):
            return f"braid[{_obj(e.left)} | {_obj(e.right)}]"
        if isinstance(e, Perm):
            return f"perm[{_obj(e.types)} | {' '.join(map(str, e.sigma))}]"
        raise TypeError(f"not an expression: {e!r}")
    return f"({s})" if p < prec else s


def show_program(sig: Signature, terms: dict[str, Expression]) -> str:
    lines = []
    if sig.objects:
        lines.append("ob " + " ".join(sig.objects))
    for name, (dom, cod) in sig.generators.items():
        lines.append(f"hom {name} : {_obj(dom)} -> {_obj(cod)}")
    for name, e in terms.items():
        lines.append(f"term {name} = {show(e)}")
    return "\n".join(lines) + "\n"


# -- parsing -------------------------------------------------------------------------

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r\n]+) | (?P<comment>\#[^\n]*)
  | (?P<arrow>->) | (?P<name>[A-Za-z_][A-Za-z0-9_']*) | (?P<int>\d+)
  | (?P<sym>[:=*;()\[\]|,])
""", re.VERBOSE)


@dataclass
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(source: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(source):
        m = _TOKEN.match(source, pos)
        if not m:
            raise ParseError(f"unexpected character {source[pos]!r}", line, pos - line_start + 1)
        kind, text = m.lastgroup, m.group()
        if kind not in ("ws", "comment"):
            if kind == "name" and text in KEYWORDS:
                kind = "kw"
            tokens.append(Token(kind, text, line, pos - line_start + 1))
        newlines = text.count("\n")
        if newlines:
            line += newlines
            line_start = pos + text.rindex("\n") + 1
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, source: str):
        self.tokens = tokenize(source)
        self.i = 0
        self.sig = Signature()
        self.terms: dict[str, Expression] = {}

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, message, tok=None, cls=ParseError):
        tok = tok or self.tok
        return cls(message, tok.line, tok.col)

    def advance(self) -> Token:
        tok = self.tok
        self.i += 1
        return tok

    def expect(self, text: str) -> Token:
        if self.tok.text != text or self.tok.kind == "eof":
            found = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")
        return self.advance()

    def name(self) -> Token:
        if self.tok.kind != "name":
            found = self.tok.text or "end of input"
            raise self.error(f"expected a name, found {found!r}")
        return self.advance()

    def program(self):
        while self.tok.kind != "eof":
            tok = self.tok
            if tok.text == "ob":
                self.advance()
                if self.tok.kind != "name":
                    raise self.error("expected at least one object name")
                while self.tok.kind == "name":
                    self.declare_object(self.advance())
            elif tok.text == "hom":
                self.advance()
                self.hom()
            elif tok.text == "term":
                self.advance()
                self.term()
            else:
                raise self.error(f"expected 'ob', 'hom' or 'term', found {tok.text!r}")
        return self.sig, self.terms

    def declare_object(self, tok: Token):
        if tok.text in self.sig.objects:
            raise self.error(f"object {tok.text!r} declared twice", tok)
        self.sig.objects.append(tok.text)

    def fresh(self, tok: Token):
        if tok.text in self.sig.generators or tok.text in self.terms:
            raise self.error(f"name {tok.text!r} already defined", tok)

    def hom(self):
        name = self.name()
        self.fresh(name)
        self.expect(":")
        dom = self.obj()
        self.expect("->")
        cod = self.obj()
        self.sig.generators[name.text] = (dom, cod)

    def term(self):
        name = self.name()
        self.fresh(name)
        self.expect("=")
        e, _ = self.expr()
        self.terms[name.text] = e

    def obj(self) -> tuple[str, ...]:
        if self.tok.text == "I":
            self.advance()
            return ()
        types = [self.object_name()]
        while self.tok.text == "*":
            self.advance()
            types.append(self.object_name())
        return tuple(types)

    def object_name(self) -> str:
        tok = self.name()
        if tok.text not in self.sig.objects:
            raise self.error(f"unknown object {tok.text!r}", tok, UnknownSymbol)
        return tok.text

    # expressions carry their type so mismatches are reported where they occur
    def expr(self):
        e, (dom, cod) = self.tensor()
        while self.tok.text == ";":
            op = self.advance()
            right, (dom2, cod2) = self.tensor()
            if cod != dom2:
                raise TypeCheckError(
                    f"cannot compose: codomain {_obj(cod)} != domain {_obj(dom2)}",
                    expected=dom2, actual=cod, line=op.line, col=op.col)
            e, cod = Seq(e, right), cod2
        return e, (dom, cod)

    def tensor(self):
        e, (dom, cod) = self.atom()
        while self.tok.text == "*":
            self.advance()
            right, (dom2, cod2) = self.atom()
            e, dom, cod = Tensor(e, right), dom + dom2, cod + cod2
        return e, (dom, cod)

    def atom(self):
        tok = self.tok
        if tok.text == "(":
            self.advance()
            e = self.expr()
            self.expect(")")
            return e
        if tok.text == "I":
            self.advance()
            return Unit(), ((), ())
        if tok.text == "id":
            self.advance()
            self.expect("[")
            types = self.obj_or_empty("]")
            self.expect("]")
            e = Id(types)
        elif tok.text == "braid":
            self.advance()
            self.expect("[")
            left = self.obj_or_empty("|")
            self.expect("|")
            right = self.obj_or_empty("]")
            self.expect("]")
            e = Braid(left, right)
        elif tok.text == "perm":
            self.advance()
            self.expect("[")
            types = self.obj_or_empty("|")
            self.expect("|")
            sigma = []
            while self.tok.kind == "int":
                sigma.append(int(self.advance().text))
                if self.tok.text == ",":
                    self.advance()
            self.expect("]")
            if sorted(sigma) != list(range(1, len(types) + 1)):
                raise self.error(f"{sigma} is not a permutation of 1..{len(types)}", tok)
            e = Perm(types, tuple(sigma))
        elif tok.kind == "name":
            self.advance()
            if tok.text in self.terms:
                e = self.terms[tok.text]
            elif tok.text in self.sig.generators:
                e = Gen(tok.text)
            else:
                raise self.error(f"unknown generator or term {tok.text!r}", tok, UnknownSymbol)
        else:
            found = tok.text or "end of input"
            raise self.error(f"expected a term, found {found!r}")
        return e, type_of(e, self.sig)

    def obj_or_empty(self, closer: str) -> tuple[str, ...]:
        return () if self.tok.text == closer else self.obj()


def parse(source: str) -> tuple[Signature, dict[str, Expression]]:
    """Parse and typecheck a program, returning its signature and terms."""
    return _Parser(source).program()


# -- compilation ---------------------------------------------------------------------

def compile(e: Expression, sig: Signature) -> smc.Morphism:  # noqa: A001
    """Build the wiring diagram of an expression by structural recursion."""
    if isinstance(e, Gen):
        dom, cod = type_of(e, sig)
        return smc.generator(e.name, dom, cod)
    if isinstance(e, Seq):
        return smc.compose(compile(e.left, sig), compile(e.right, sig))
    if isinstance(e, Tensor):
        return smc.otimes(compile(e.left, sig), compile(e.right, sig))
    if isinstance(e, Id):
        return smc.id(e.types)
    if isinstance(e, Unit):
        return smc.unit()
    if isinstance(e, Braid):
        return smc.braid(e.left, e.right)
    if isinstance(e, Perm):
        return smc.permute(e.types, e.sigma)
    raise TypeError(f"not an expression: {e!r}")


def compile_term(source: str, name: str) -> smc.Morphism:
    sig, terms = parse(source)
    if name not in terms:
        raise UnknownSymbol(f"no term named {name!r}")
    return compile(terms[name], sig)
