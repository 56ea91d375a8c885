"""Formula AST, text parser and matrix-semantics evaluation.

Core signature: variables, the constants 0 and 1, involutive negation ~,
square *, and join |. On top sits a macro layer (meet, the filter indicators
D[a], the point indicators X[a], crisp and Goedel implication, the
filter-relative connectives ->i / <->i / strong negation, and the indicator
of 1). Macros evaluate by their defining semantics and can be expanded to
the core signature; `expand` and direct evaluation agree pointwise.

Grammar (UTF-8 text): variables p0..pK; constants "0", "1"; unary "~", "*";
binary "|", "&", "->i" (i an integer), "=>c", "=>g"; parameterized "D[k/m](...)"
and "X[k/m](...)". Unary binds tighter than binary; all binary connectives
share one precedence level and associate to the left.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .chain import Chain, ChainElem


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnboundVariable(KeyError):
    pass


class BudgetExceeded(ValueError):
    pass


# ---------------------------------------------------------------- AST nodes

class Formula:
    __slots__ = ()

    def __or__(self, other):
        return Join(self, other)

    def __invert__(self):
        return Neg(self)


@dataclass(frozen=True)
class Var(Formula):
    index: int

    def __str__(self):
        return f"p{self.index}"


@dataclass(frozen=True)
class Const(Formula):
    one: bool

    def __str__(self):
        return "1" if self.one else "0"


@dataclass(frozen=True)
class Neg(Formula):
    child: Formula

    def __str__(self):
        return f"~{_wrap(self.child)}"


@dataclass(frozen=True)
class Star(Formula):
    child: Formula

    def __str__(self):
        return f"*{_wrap(self.child)}"


@dataclass(frozen=True)
class Join(Formula):
    left: Formula
    right: Formula

    def __str__(self):
        return f"({self.left} | {self.right})"


# Macro layer: each node expands to a core formula relative to a chain.

@dataclass(frozen=True)
class Meet(Formula):
    left: Formula
    right: Formula

    def __str__(self):
        return f"({self.left} & {self.right})"


@dataclass(frozen=True)
class Delta(Formula):
    """Indicator of the filter {x >= a}."""

    a: Fraction
    child: Formula

    def __str__(self):
        return f"D[{self.a.numerator}/{self.a.denominator}]({self.child})"


@dataclass(frozen=True)
class Chi(Formula):
    """Indicator of the single value a."""

    a: Fraction
    child: Formula

    def __str__(self):
        return f"X[{self.a.numerator}/{self.a.denominator}]({self.child})"


@dataclass(frozen=True)
class CrispImp(Formula):
    left: Formula
    right: Formula

    def __str__(self):
        return f"({self.left} =>c {self.right})"


@dataclass(frozen=True)
class GoedelImp(Formula):
    left: Formula
    right: Formula

    def __str__(self):
        return f"({self.left} =>g {self.right})"


@dataclass(frozen=True)
class StrongNeg(Formula):
    """~D[i/n](child): the filter-complement negation."""

    i: int
    child: Formula


@dataclass(frozen=True)
class ArrowI(Formula):
    """left ->i right, i.e. ~D[i/n](left) | right."""

    i: int
    left: Formula
    right: Formula

    def __str__(self):
        return f"({self.left} ->{self.i} {self.right})"


@dataclass(frozen=True)
class IffI(Formula):
    i: int
    left: Formula
    right: Formula


@dataclass(frozen=True)
class BaazDelta(Formula):
    """Indicator of 1; the n-fold square."""

    child: Formula


def _wrap(f: Formula) -> str:
    text = str(f)
    return text if isinstance(f, (Var, Const, Neg, Star)) or text.startswith("(") else f"({text})"


def variables(f: Formula) -> list:
    """Sorted variable indices occurring in f."""
    out = set()
    stack = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, Var):
            out.add(node.index)
        else:
            stack.extend(
                getattr(node, name)
                for name in ("child", "left", "right")
                if hasattr(node, name)
            )
    return sorted(out)


def big_join(parts) -> Formula:
    parts = list(parts)
    if not parts:
        return Const(False)
    acc = parts[0]
    for p in parts[1:]:
        acc = Join(acc, p)
    return acc


# ---------------------------------------------------------------- evaluation

def _frac_index(a: Fraction, chain: Chain) -> int:
    num = a * chain.n
    if num.denominator != 1 or not 0 <= num <= chain.n:
        raise ValueError(f"{a} is not an element of {chain}")
    return int(num)


def evaluate(f: Formula, chain: Chain, valuation) -> ChainElem:
    """Homomorphic evaluation; macros are computed by their semantics."""
    top, bot = chain.top, chain.bottom

    def ev(node) -> ChainElem:
        if isinstance(node, Var):
            try:
                v = valuation[node.index]
            except KeyError:
                raise UnboundVariable(f"p{node.index} is unbound") from None
            assert v.den == chain.n
            return v
        if isinstance(node, Const):
            return top if node.one else bot
        if isinstance(node, Neg):
            return ev(node.child).neg()
        if isinstance(node, Star):
            return ev(node.child).star()
        if isinstance(node, Join):
            return ev(node.left).join(ev(node.right))
        if isinstance(node, Meet):
            return ev(node.left).meet(ev(node.right))
        if isinstance(node, Delta):
            k = _frac_index(node.a, chain)
            return top if ev(node.child).num >= k else bot
        if isinstance(node, Chi):
            k = _frac_index(node.a, chain)
            return top if ev(node.child).num == k else bot
        if isinstance(node, CrispImp):
            return ev(node.left).crisp_imp(ev(node.right))
        if isinstance(node, GoedelImp):
            return ev(node.left).goedel_imp(ev(node.right))
        if isinstance(node, StrongNeg):
            return top if ev(node.child).num < node.i else bot
        if isinstance(node, ArrowI):
            lhs = top if ev(node.left).num < node.i else bot
            return lhs.join(ev(node.right))
        if isinstance(node, IffI):
            return ev(ArrowI(node.i, node.left, node.right)).meet(
                ev(ArrowI(node.i, node.right, node.left))
            )
        if isinstance(node, BaazDelta):
            return ev(node.child).baaz()
        raise TypeError(f"not a formula node: {node!r}")

    return ev(f)


def expand(f: Formula, chain: Chain) -> Formula:
    """Rewrite every macro into the core signature for the given chain.

    Filter indicators expand to their synthesized star/plus words, so the
    result witnesses definability rather than shortcutting through order.
    """
    from .terms import delta_formula

    n = chain.n

    def _meet(x: Formula, y: Formula) -> Formula:
        return Neg(Join(Neg(x), Neg(y)))

    def delta(a: Fraction, child: Formula) -> Formula:
        return delta_formula(chain, _frac_index(a, chain), child)

    def chi(a: Fraction, child: Formula) -> Formula:
        k = _frac_index(a, chain)
        if k == n:
            return delta(a, child)
        if k == 0:
            return Neg(delta(Fraction(1, n), child))
        return _meet(delta(a, child), Neg(delta(Fraction(k + 1, n), child)))

    def crisp(x: Formula, y: Formula) -> Formula:
        return big_join(
            _meet(chi(Fraction(k, n), x), delta(Fraction(k, n), y))
            for k in range(n + 1)
        )

    def ex(node: Formula) -> Formula:
        if isinstance(node, (Var, Const)):
            return node
        if isinstance(node, Neg):
            return Neg(ex(node.child))
        if isinstance(node, Star):
            return Star(ex(node.child))
        if isinstance(node, Join):
            return Join(ex(node.left), ex(node.right))
        if isinstance(node, Meet):
            return _meet(ex(node.left), ex(node.right))
        if isinstance(node, Delta):
            return delta(node.a, ex(node.child))
        if isinstance(node, Chi):
            return chi(node.a, ex(node.child))
        if isinstance(node, CrispImp):
            return crisp(ex(node.left), ex(node.right))
        if isinstance(node, GoedelImp):
            return Join(crisp(ex(node.left), ex(node.right)), ex(node.right))
        if isinstance(node, StrongNeg):
            return Neg(delta(Fraction(node.i, n), ex(node.child)))
        if isinstance(node, ArrowI):
            return Join(Neg(delta(Fraction(node.i, n), ex(node.left))), ex(node.right))
        if isinstance(node, IffI):
            return _meet(
                ex(ArrowI(node.i, node.left, node.right)),
                ex(ArrowI(node.i, node.right, node.left)),
            )
        if isinstance(node, BaazDelta):
            out = ex(node.child)
            for _ in range(n):
                out = Star(out)
            return out
        raise TypeError(f"not a formula node: {node!r}")

    return ex(f)


# ---------------------------------------------------------------- parser

_TOKEN = re.compile(
    r"\s*(?:(?P<var>p\d+)|(?P<const>[01])|(?P<arrow>->\d+)|(?P<crisp>=>c)"
    r"|(?P<goedel>=>g)|(?P<macro>[DX]\[\s*\d+\s*(?:/\s*\d+\s*)?\])"
    r"|(?P<punct>[~*|&()]))"
)


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected character {text[pos:].lstrip()[0]!r}", pos)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return tokens


def parse(text: str, expand_macros: bool = False, chain: Optional[Chain] = None) -> Formula:
    """Parse a formula; optionally expand all macros against `chain`."""
    tokens = _tokenize(text)
    idx = 0

    def peek():
        return tokens[idx] if idx < len(tokens) else (None, None, len(text))

    def take():
        nonlocal idx
        tok = peek()
        idx += 1
        return tok

    def parse_formula() -> Formula:
        node = parse_unary()
        while True:
            kind, value, pos = peek()
            if kind == "punct" and value == "|":
                take()
                node = Join(node, parse_unary())
            elif kind == "punct" and value == "&":
                take()
                node = Meet(node, parse_unary())
            elif kind == "arrow":
                take()
                node = ArrowI(int(value[2:]), node, parse_unary())
            elif kind == "crisp":
                take()
                node = CrispImp(node, parse_unary())
            elif kind == "goedel":
                take()
                node = GoedelImp(node, parse_unary())
            else:
                return node

    def parse_unary() -> Formula:
        kind, value, pos = peek()
        if kind == "punct" and value == "~":
            take()
            return Neg(parse_unary())
        if kind == "punct" and value == "*":
            take()
            return Star(parse_unary())
        return parse_atom()

    def parse_atom() -> Formula:
        kind, value, pos = take()
        if kind == "var":
            return Var(int(value[1:]))
        if kind == "const":
            return Const(value == "1")
        if kind == "punct" and value == "(":
            node = parse_formula()
            k, v, p = take()
            if not (k == "punct" and v == ")"):
                raise ParseError("expected ')'", p)
            return node
        if kind == "macro":
            head = value[0]
            body = value[2:-1].replace(" ", "")
            if "/" in body:
                num, den = body.split("/")
                frac = Fraction(int(num), int(den))
            else:
                frac = Fraction(int(body), 1)
            if not 0 <= frac <= 1:
                raise ParseError(f"parameter {body} outside [0, 1]", pos)
            k, v, p = take()
            if not (k == "punct" and v == "("):
                raise ParseError("expected '(' after parameterized macro", p)
            child = parse_formula()
            k, v, p = take()
            if not (k == "punct" and v == ")"):
                raise ParseError("expected ')'", p)
            return Delta(frac, child) if head == "D" else Chi(frac, child)
        raise ParseError(f"unexpected token {value!r}" if value else "unexpected end of input", pos)

    out = parse_formula()
    kind, value, pos = peek()
    if kind is not None:
        raise ParseError(f"trailing input {value!r}", pos)
    if expand_macros:
        if chain is None:
            raise ValueError("macro expansion needs a chain")
        out = expand(out, chain)
    return out


# ---------------------------------------------------------------- matrices

@dataclass(frozen=True)
class Matrix:
    """A chain together with the order filter {x >= i/n} of designated values."""

    n: int
    i: int

    def __post_init__(self):
        if not 1 <= self.i <= self.n:
            raise ValueError(f"filter index {self.i} outside [1, {self.n}]")

    @property
    def chain(self) -> Chain:
        return Chain(self.n)

    def designated(self, x: ChainElem) -> bool:
        return x.num >= self.i


@dataclass(frozen=True)
class ValidityResult:
    valid: bool
    countermodel: Optional[dict] = None

    def __bool__(self):
        return self.valid


def _valuations(chain: Chain, var_indices, budget: int):
    count = (chain.n + 1) ** len(var_indices)
    if count > budget:
        raise BudgetExceeded(
            f"{count} valuations exceed the budget of {budget}"
        )
    universe = chain.universe
    idx = [0] * len(var_indices)
    while True:
        yield {v: universe[idx[j]] for j, v in enumerate(var_indices)}
        j = len(idx) - 1
        while j >= 0:
            idx[j] += 1
            if idx[j] <= chain.n:
                break
            idx[j] = 0
            j -= 1
        if j < 0:
            return


def random_formula(rng, num_vars: int = 2, depth: int = 4) -> Formula:
    """A seeded random formula over the core signature plus meet."""
    if depth == 0:
        leaf = rng.randrange(4)
        if leaf < 2:
            return Var(rng.randrange(num_vars))
        return Const(leaf == 3)
    kind = rng.randrange(6)
    if kind == 0:
        return Var(rng.randrange(num_vars))
    if kind == 1:
        return Neg(random_formula(rng, num_vars, depth - 1))
    if kind == 2:
        return Star(random_formula(rng, num_vars, depth - 1))
    if kind == 3:
        return Join(random_formula(rng, num_vars, depth - 1),
                    random_formula(rng, num_vars, depth - 1))
    if kind == 4:
        return Meet(random_formula(rng, num_vars, depth - 1),
                    random_formula(rng, num_vars, depth - 1))
    return Const(rng.randrange(2) == 1)


DEFAULT_BUDGET = 10**7


def is_valid(m: Matrix, f: Formula, budget: int = DEFAULT_BUDGET) -> ValidityResult:
    """Exhaustive validity check; the first countermodel is returned."""
    chain = m.chain
    for val in _valuations(chain, variables(f), budget):
        if not m.designated(evaluate(f, chain, val)):
            return ValidityResult(False, dict(val))
    return ValidityResult(True)


def consequence(m: Matrix, premises, f: Formula, budget: int = DEFAULT_BUDGET) -> ValidityResult:
    """Designation-preserving consequence over all valuations."""
    chain = m.chain
    premises = list(premises)
    var_indices = set(variables(f))
    for p in premises:
        var_indices.update(variables(p))
    var_indices = sorted(var_indices)
    for val in _valuations(chain, var_indices, budget):
        if all(m.designated(evaluate(p, chain, val)) for p in premises):
            if not m.designated(evaluate(f, chain, val)):
                return ValidityResult(False, dict(val))
    return ValidityResult(True)
