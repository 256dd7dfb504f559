"""
A small term language for lattice identities and quasi-identities.

Grammar (tightest binding first: postfix ``'``, ``*``, ``/\\``, ``\\/``,
right-associative ``->``)::

    formula := cmp ('&' cmp)* '=>' cmp | cmp
    cmp     := term ('=' | '<=') term
    term    := disj ('->' term)?
    disj    := conj ('\\/' conj)*
    conj    := prod ('/\\' prod)*
    prod    := post ('*' post)*
    post    := atom "'"*
    atom    := ident | '0' | '1' | '(' term ')'

Terms are evaluated over a :class:`Structure`, i.e. a lattice with optional
tables for ``'``, ``->`` and ``*``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Union

from .algebra import BinaryOpTable, CheckReport, UnaryAlgebra, failed, passed
from .errors import (
    MissingConstant,
    MissingOperation,
    TermSyntaxError,
    UnboundVariable,
    UnknownSymbol,
)
from .lattice import FiniteLattice


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class One:
    pass


@dataclass(frozen=True)
class Join:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Meet:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Comp:
    arg: "Term"


@dataclass(frozen=True)
class Arrow:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Prod:
    left: "Term"
    right: "Term"


Term = Union[Var, Zero, One, Join, Meet, Comp, Arrow, Prod]


@dataclass(frozen=True)
class Equation:
    lhs: Term
    rhs: Term


@dataclass(frozen=True)
class Leq:
    lhs: Term
    rhs: Term


@dataclass(frozen=True)
class QuasiIdentity:
    hypotheses: tuple
    conclusion: Union[Equation, Leq]

    def __post_init__(self):
        if not self.hypotheses:
            raise ValueError("a quasi-identity needs at least one hypothesis")
        object.__setattr__(self, "hypotheses", tuple(self.hypotheses))


Formula = Union[Equation, Leq, QuasiIdentity]


# ---------------------------------------------------------------------------
# Lexing and parsing

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<op>=>|<=|->|\\/|/\\|[()'*=&])
  | (?P<const>[01](?![A-Za-z0-9_]))
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
    """,
    re.VERBOSE,
)


def tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise UnknownSymbol(f"unknown symbol {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append((kind, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def at(self, value):
        kind, tok, _ = self.tokens[self.i]
        return kind == "op" and tok == value

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, tok, pos = self.peek()
        if not (kind == "op" and tok == value):
            found = tok or "end of input"
            raise TermSyntaxError(f"expected {value!r}, found {found!r}", pos)
        self.i += 1

    def formula(self):
        first = self.comparison()
        if not (self.at("&") or self.at("=>")):
            return first
        hyps = [first]
        while self.at("&"):
            self.take()
            hyps.append(self.comparison())
        self.expect("=>")
        return QuasiIdentity(tuple(hyps), self.comparison())

    def comparison(self):
        lhs = self.term()
        if self.at("="):
            self.take()
            return Equation(lhs, self.term())
        if self.at("<="):
            self.take()
            return Leq(lhs, self.term())
        kind, tok, pos = self.peek()
        raise TermSyntaxError(f"expected '=' or '<=', found {tok or 'end of input'!r}", pos)

    def term(self):
        left = self.disj()
        if self.at("->"):
            self.take()
            return Arrow(left, self.term())
        return left

    def disj(self):
        t = self.conj()
        while self.at("\\/"):
            self.take()
            t = Join(t, self.conj())
        return t

    def conj(self):
        t = self.prod()
        while self.at("/\\"):
            self.take()
            t = Meet(t, self.prod())
        return t

    def prod(self):
        t = self.post()
        while self.at("*"):
            self.take()
            t = Prod(t, self.post())
        return t

    def post(self):
        t = self.atom()
        while self.at("'"):
            self.take()
            t = Comp(t)
        return t

    def atom(self):
        kind, tok, pos = self.take()
        if kind == "ident":
            return Var(tok)
        if kind == "const":
            return Zero() if tok == "0" else One()
        if kind == "op" and tok == "(":
            t = self.term()
            self.expect(")")
            return t
        raise TermSyntaxError(f"unexpected {tok or 'end of input'!r}", pos)

    def finish(self, result):
        kind, tok, pos = self.peek()
        if kind != "end":
            raise TermSyntaxError(f"unexpected trailing {tok!r}", pos)
        return result


def parse(text: str):
    """Parse a term or a formula; formulas are recognised by ``=``/``<=``."""
    p = _Parser(text)
    if any(k == "op" and t in ("=", "<=", "=>", "&") for k, t, _ in p.tokens):
        return p.finish(p.formula())
    return p.finish(p.term())


def parse_term(text: str) -> Term:
    p = _Parser(text)
    return p.finish(p.term())


def parse_formula(text: str) -> Formula:
    p = _Parser(text)
    return p.finish(p.formula())


# ---------------------------------------------------------------------------
# Printing

_LEVEL = {Arrow: 0, Join: 1, Meet: 2, Prod: 3, Comp: 4}
_SYMBOL = {Arrow: "->", Join: "\\/", Meet: "/\\", Prod: "*"}


def _level(t):
    return _LEVEL.get(type(t), 5)


def format_term(t: Term) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, One):
        return "1"
    if isinstance(t, Comp):
        inner = format_term(t.arg)
        return (inner if _level(t.arg) >= 4 else f"({inner})") + "'"
    lvl = _LEVEL[type(t)]
    left, right = format_term(t.left), format_term(t.right)
    if isinstance(t, Arrow):
        # right-associative
        if _level(t.left) <= lvl:
            left = f"({left})"
        if _level(t.right) < lvl:
            right = f"({right})"
    else:
        if _level(t.left) < lvl:
            left = f"({left})"
        if _level(t.right) <= lvl:
            right = f"({right})"
    return f"{left} {_SYMBOL[type(t)]} {right}"


def format_formula(f: Formula) -> str:
    if isinstance(f, Equation):
        return f"{format_term(f.lhs)} = {format_term(f.rhs)}"
    if isinstance(f, Leq):
        return f"{format_term(f.lhs)} <= {format_term(f.rhs)}"
    hyps = " & ".join(format_formula(h) for h in f.hypotheses)
    return f"{hyps} => {format_formula(f.conclusion)}"


def variables(obj) -> list[str]:
    """Variable names in order of first occurrence."""
    seen: dict[str, None] = {}

    def walk(t):
        if isinstance(t, Var):
            seen.setdefault(t.name)
        elif isinstance(t, Comp):
            walk(t.arg)
        elif isinstance(t, (Join, Meet, Arrow, Prod)):
            walk(t.left)
            walk(t.right)
        elif isinstance(t, (Equation, Leq)):
            walk(t.lhs)
            walk(t.rhs)
        elif isinstance(t, QuasiIdentity):
            for h in t.hypotheses:
                walk(h)
            walk(t.conclusion)

    walk(obj)
    return list(seen)


# ---------------------------------------------------------------------------
# Evaluation


@dataclass(frozen=True, eq=False)
class Structure:
    """Evaluation context: a lattice plus whichever operation tables exist."""

    lattice: FiniteLattice
    comp: tuple | None = None
    arrow: tuple | None = None
    prod: tuple | None = None

    @classmethod
    def of(cls, *parts, arrow=None, prod=None) -> Structure:
        """Assemble from a UnaryAlgebra or FiniteLattice plus optional tables."""
        base = parts[0]
        if isinstance(base, UnaryAlgebra):
            lattice, comp = base.lattice, base.comp
        else:
            lattice, comp = base, None
        return cls(lattice, comp, _table(arrow), _table(prod))


def _table(t):
    if t is None:
        return None
    if isinstance(t, BinaryOpTable):
        return t.op
    return tuple(tuple(r) for r in t)


def as_structure(alg) -> Structure:
    if isinstance(alg, Structure):
        return alg
    return Structure.of(alg)


def compile_term(t: Term, s: Structure):
    """Return a function ``env -> element`` where ``env`` maps names to ids."""
    L = s.lattice
    J, M = L.join_table, L.meet_table
    if isinstance(t, Var):
        name = t.name

        def var(env):
            try:
                return env[name]
            except KeyError:
                raise UnboundVariable(f"variable {name!r} is not assigned") from None

        return var
    if isinstance(t, Zero):
        if L.bottom is None:
            raise MissingConstant("constant 0 needs a smallest element")
        b = L.bottom
        return lambda env: b
    if isinstance(t, One):
        if L.top is None:
            raise MissingConstant("constant 1 needs a greatest element")
        tp = L.top
        return lambda env: tp
    if isinstance(t, Comp):
        if s.comp is None:
            raise MissingOperation("term uses ' but no unary table is given")
        c = s.comp
        f = compile_term(t.arg, s)
        return lambda env: c[f(env)]
    if isinstance(t, Join):
        table = J
    elif isinstance(t, Meet):
        table = M
    elif isinstance(t, Arrow):
        if s.arrow is None:
            raise MissingOperation("term uses -> but no implication table is given")
        table = s.arrow
    elif isinstance(t, Prod):
        if s.prod is None:
            raise MissingOperation("term uses * but no product table is given")
        table = s.prod
    else:
        raise TypeError(f"not a term: {t!r}")
    f, g = compile_term(t.left, s), compile_term(t.right, s)
    return lambda env: table[f(env)][g(env)]


def evaluate(t, alg, assignment) -> int:
    """Value (element id) of ``t`` under ``assignment`` (names to labels or ids)."""
    if isinstance(t, str):
        t = parse_term(t)
    s = as_structure(alg)
    env = {k: (v if isinstance(v, int) else s.lattice.index(v)) for k, v in assignment.items()}
    return compile_term(t, s)(env)


def _compile_atom(f, s):
    lhs, rhs = compile_term(f.lhs, s), compile_term(f.rhs, s)
    if isinstance(f, Equation):
        return lambda env: lhs(env) == rhs(env), lhs, rhs
    leq = s.lattice.leq_table
    return lambda env: leq[lhs(env)][rhs(env)], lhs, rhs


def holds(f, alg) -> CheckReport:
    """Check ``f`` under every assignment of its variables."""
    if isinstance(f, str):
        f = parse_formula(f)
    s = as_structure(alg)
    L = s.lattice
    names = variables(f)
    if isinstance(f, QuasiIdentity):
        hyps = [_compile_atom(h, s)[0] for h in f.hypotheses]
        concl, lhs, rhs = _compile_atom(f.conclusion, s)
        target = f.conclusion
    else:
        hyps = []
        concl, lhs, rhs = _compile_atom(f, s)
        target = f
    rel = "=" if isinstance(target, Equation) else "<="
    text = format_formula(f)
    for values in product(range(len(L)), repeat=len(names)):
        env = dict(zip(names, values))
        if all(h(env) for h in hyps) and not concl(env):
            witness = {k: L.names[v] for k, v in env.items()}
            detail = (
                f"{format_term(target.lhs)} = {L.names[lhs(env)]}, "
                f"{format_term(target.rhs)} = {L.names[rhs(env)]}, not {rel}"
            )
            return failed(text, witness, detail)
    return passed(text)
