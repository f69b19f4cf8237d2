"""Propositional basic-logic formulas: parsing, printing, and evaluation.

Core connectives are bottom, strong conjunction ``&``, and implication
``->``; negation, lattice meet/join, equivalence, and top are sugar that
desugars deterministically before evaluation:

    !p       ==  p -> 0
    p ^ q    ==  p & (p -> q)
    p | q    ==  ((p -> q) -> q) ^ ((q -> p) -> p)
    p <-> q  ==  (p -> q) & (q -> p)
    1        ==  0 -> 0

Concrete syntax, tightest to loosest: ``!`` (prefix), ``&`` (left), ``^`` and
``|`` (one tier, left), ``->`` (right) with ``<->`` at the same tier but
non-associative.  Atoms match [a-z][a-zA-Z0-9_]*.

Evaluation extends an atom assignment homomorphically: e(0) = 0,
e(p & q) = e(p) * e(q), e(p -> q) = e(p) -> e(q), either over a t-norm on
the unit interval or over the tables of a finite algebra.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DrasticNotResiduated,
    FormulaSyntaxError,
    UnbalancedParens,
    UnboundAtom,
    UnknownToken,
)
from .finite import FiniteAlgebra
from .norms import NormFamily, NormSide, apply_norm, residuum
from .reports import LawReport, Violation
from .unitval import ONE, ZERO, GridSpec, UnitValue


class Formula:
    __slots__ = ()


@dataclass(frozen=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True)
class Bottom(Formula):
    pass


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Conj(Formula):
    lhs: Formula
    rhs: Formula


@dataclass(frozen=True)
class Impl(Formula):
    lhs: Formula
    rhs: Formula


@dataclass(frozen=True)
class Neg(Formula):
    arg: Formula


@dataclass(frozen=True)
class Meet(Formula):
    lhs: Formula
    rhs: Formula


@dataclass(frozen=True)
class Join(Formula):
    lhs: Formula
    rhs: Formula


@dataclass(frozen=True)
class Iff(Formula):
    lhs: Formula
    rhs: Formula


def desugar(f: Formula) -> Formula:
    """Lower sugar to the {atom, 0, &, ->} core; deterministic and idempotent."""
    match f:
        case Atom() | Bottom():
            return f
        case Top():
            return Impl(Bottom(), Bottom())
        case Conj(lhs, rhs):
            return Conj(desugar(lhs), desugar(rhs))
        case Impl(lhs, rhs):
            return Impl(desugar(lhs), desugar(rhs))
        case Neg(arg):
            return Impl(desugar(arg), Bottom())
        case Meet(lhs, rhs):
            a, b = desugar(lhs), desugar(rhs)
            return Conj(a, Impl(a, b))
        case Join(lhs, rhs):
            a, b = desugar(lhs), desugar(rhs)
            return desugar(Meet(Impl(Impl(a, b), b), Impl(Impl(b, a), a)))
        case Iff(lhs, rhs):
            a, b = desugar(lhs), desugar(rhs)
            return Conj(Impl(a, b), Impl(b, a))
    raise TypeError(f"not a formula: {f!r}")


def atoms(f: Formula) -> tuple[str, ...]:
    """Atom names in first-occurrence order."""
    seen: dict[str, None] = {}

    def walk(node):
        match node:
            case Atom(name):
                seen.setdefault(name, None)
            case Bottom() | Top():
                pass
            case Neg(arg):
                walk(arg)
            case Conj(l, r) | Impl(l, r) | Meet(l, r) | Join(l, r) | Iff(l, r):
                walk(l)
                walk(r)

    walk(f)
    return tuple(seen)


# -- tokenizer / parser --------------------------------------------------------

_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)|(?P<atom>[a-z][a-zA-Z0-9_]*)|(?P<iff><->)|(?P<impl>->)"
    r"|(?P<zero>0)|(?P<one>1)|(?P<lparen>\()|(?P<rparen>\))"
    r"|(?P<neg>!)|(?P<conj>&)|(?P<meet>\^)|(?P<join>\|)"
)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    line, line_start = 1, 0
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise UnknownToken(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "ws":
            chunk = m.group()
            newlines = chunk.count("\n")
            if newlines:
                line += newlines
                line_start = m.start() + chunk.rfind("\n") + 1
        else:
            tokens.append(_Token(kind, m.group(), line, m.start() - line_start + 1))
        pos = m.end()
    tokens.append(_Token("eof", "", line, len(text) - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.current
        self.pos += 1
        return tok

    def error(self, message: str, cls=FormulaSyntaxError):
        tok = self.current
        raise cls(message, tok.line, tok.column)

    def parse(self) -> Formula:
        f = self.implication()
        if self.current.kind == "rparen":
            self.error("unmatched closing parenthesis", UnbalancedParens)
        if self.current.kind != "eof":
            self.error(f"unexpected {self.current.text!r}")
        return f

    def implication(self) -> Formula:
        left = self.junction()
        if self.current.kind == "impl":
            self.advance()
            return Impl(left, self.implication())
        if self.current.kind == "iff":
            self.advance()
            right = self.junction()
            if self.current.kind in ("impl", "iff"):
                self.error("'<->' is non-associative; use parentheses")
            return Iff(left, right)
        return left

    def junction(self) -> Formula:
        left = self.conjunction()
        while self.current.kind in ("meet", "join"):
            op = self.advance().kind
            right = self.conjunction()
            left = Meet(left, right) if op == "meet" else Join(left, right)
        return left

    def conjunction(self) -> Formula:
        left = self.unary()
        while self.current.kind == "conj":
            self.advance()
            left = Conj(left, self.unary())
        return left

    def unary(self) -> Formula:
        if self.current.kind == "neg":
            self.advance()
            return Neg(self.unary())
        return self.primary()

    def primary(self) -> Formula:
        tok = self.current
        if tok.kind == "atom":
            self.advance()
            return Atom(tok.text)
        if tok.kind == "zero":
            self.advance()
            return Bottom()
        if tok.kind == "one":
            self.advance()
            return Top()
        if tok.kind == "lparen":
            self.advance()
            inner = self.implication()
            if self.current.kind != "rparen":
                self.error("expected ')'", UnbalancedParens)
            self.advance()
            return inner
        if tok.kind == "eof":
            self.error("unexpected end of input")
        if tok.kind == "rparen":
            self.error("unmatched closing parenthesis", UnbalancedParens)
        self.error(f"unexpected {tok.text!r}")


def parse(text: str) -> Formula:
    """Parse formula text; errors carry 1-based line and column."""
    return _Parser(_tokenize(text)).parse()


_LEVEL = {Impl: 1, Iff: 1, Join: 2, Meet: 2, Conj: 3, Neg: 4, Atom: 5, Bottom: 5, Top: 5}


def to_text(f: Formula) -> str:
    """Minimal-parentheses rendering; parse(to_text(f)) == f."""

    def wrap(node, min_level):
        s = render(node)
        return f"({s})" if _LEVEL[type(node)] < min_level else s

    def render(node):
        match node:
            case Atom(name):
                return name
            case Bottom():
                return "0"
            case Top():
                return "1"
            case Neg(arg):
                return f"!{wrap(arg, 4)}"
            case Conj(l, r):
                return f"{wrap(l, 3)} & {wrap(r, 4)}"
            case Meet(l, r):
                return f"{wrap(l, 2)} ^ {wrap(r, 3)}"
            case Join(l, r):
                return f"{wrap(l, 2)} | {wrap(r, 3)}"
            case Impl(l, r):
                return f"{wrap(l, 2)} -> {wrap(r, 1)}"
            case Iff(l, r):
                return f"{wrap(l, 2)} <-> {wrap(r, 2)}"
        raise TypeError(f"not a formula: {node!r}")

    return render(f)


# -- evaluation ----------------------------------------------------------------

def evaluate(f: Formula, algebra, valuation):
    """Homomorphic extension of the atom assignment.

    ``algebra`` is either a non-drastic t-norm family (values are
    UnitValues) or a FiniteAlgebra (values are carrier labels).
    """
    core = desugar(f)
    if isinstance(algebra, FiniteAlgebra):
        return _evaluate_finite(core, algebra, valuation)
    if isinstance(algebra, NormFamily):
        if algebra.side is not NormSide.TNORM:
            raise ValueError("formula evaluation needs the t-norm side of a family")
        if not algebra.is_residuated:
            raise DrasticNotResiduated("cannot evaluate '->' over the drastic t-norm")
        return _evaluate_tnorm(core, algebra, valuation)
    raise TypeError(f"unsupported algebra: {algebra!r}")


def _evaluate_tnorm(f: Formula, family: NormFamily, valuation) -> UnitValue:
    match f:
        case Atom(name):
            try:
                value = valuation[name]
            except KeyError:
                raise UnboundAtom(f"atom {name!r} has no value") from None
            return value if isinstance(value, UnitValue) else UnitValue(Fraction(value))
        case Bottom():
            return ZERO
        case Conj(l, r):
            return apply_norm(family, _evaluate_tnorm(l, family, valuation), _evaluate_tnorm(r, family, valuation))
        case Impl(l, r):
            return residuum(family, _evaluate_tnorm(l, family, valuation), _evaluate_tnorm(r, family, valuation))
    raise TypeError(f"non-core formula after desugaring: {f!r}")


def _evaluate_finite(f: Formula, alg: FiniteAlgebra, valuation) -> str:
    def run(node) -> int:
        match node:
            case Atom(name):
                try:
                    return alg.index(valuation[name])
                except KeyError:
                    raise UnboundAtom(f"atom {name!r} has no value") from None
            case Bottom():
                return alg.bottom
            case Conj(l, r):
                return alg.star(run(l), run(r))
            case Impl(l, r):
                return alg.arrow(run(l), run(r))
        raise TypeError(f"non-core formula after desugaring: {node!r}")

    return alg.labels[run(f)]


def parse_valuation(text: str, finite: bool = False) -> dict:
    """Valuation text: comma- or newline-separated ``atom = value`` entries.

    Values are rationals (``p/q`` or finite decimals) for unit-interval
    evaluation, or carrier labels when ``finite`` is set.
    """
    assignment: dict = {}
    entries = [e for chunk in text.splitlines() for e in chunk.split(",")]
    for entry in entries:
        entry = entry.strip()
        if not entry or entry.startswith("#"):
            continue
        if "=" not in entry:
            raise ValueError(f"valuation entry {entry!r} is not 'atom = value'")
        name, _, value = entry.partition("=")
        name, value = name.strip(), value.strip()
        assignment[name] = value if finite else UnitValue(Fraction(value))
    return assignment


def sweep_values(f: Formula, algebra, domain) -> dict:
    """Evaluate over every total valuation with values from ``domain``;
    returns {valuation tuple: value} with deterministic ordering."""
    names = atoms(f)
    results = {}
    for combo in itertools.product(domain, repeat=len(names)):
        results[combo] = evaluate(f, algebra, dict(zip(names, combo)))
    return results


def check_prelinearity_tautology(algebra, g: GridSpec | None = None) -> LawReport:
    """(p -> q) | (q -> p) must evaluate to the top value under every
    valuation: grid valuations for t-norm families, carrier valuations for
    finite algebras."""
    formula = parse("(p -> q) | (q -> p)")
    if isinstance(algebra, FiniteAlgebra):
        domain = algebra.labels
        top = algebra.labels[algebra.top]
    else:
        domain = (g or GridSpec()).points()
        top = ONE
    report = LawReport("prelinearity")
    for combo, value in sweep_values(formula, algebra, domain).items():
        report.checked += 1
        if value != top:
            report.register(Violation("prelinearity", combo, value, top))
    return report
