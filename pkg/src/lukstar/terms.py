"""Synthesis of the definable unary operations and implications.

The central construction builds, for each chain value a, a word over
{star, plus} whose evaluation is the indicator of the filter {x >= a}. The
word comes from walking a pair (a, pred(a)) with single applications of
star (both coordinates above 1/2) or plus (both at or below), stopping as
soon as the pair is separated, then appending the separating word. The walk
doubles the pair distance at every non-terminating step, which bounds it by
log2 of the chain size.

Everything works verbatim on subalgebras: the walk only uses star, the
involution and order, all of which restrict.
"""

from __future__ import annotations

import enum
import json
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .chain import Chain, ChainElem
from .classify import in_pi, term_equivalent
from .formulas import BaazDelta, Formula, Join, Meet, Neg, Star, Var, big_join
from .subalgebra import is_strictly_simple


class NotOrdered(ValueError):
    pass


class NotSeparated(ValueError):
    pass


class NotStrictlySimple(ValueError):
    pass


class NoTermFound(RuntimeError):
    pass


class NotTermEquivalent(ValueError):
    def __init__(self, n: int):
        self.verdict = in_pi(n)
        super().__init__(
            f"the implication of the {n + 1}-element chain is not definable "
            f"from join, square and negation (n={n}, in_pi={self.verdict.in_pi})"
        )


class Op(enum.Enum):
    STAR = "star"
    PLUS = "plus"


def _apply_op(struct, op: Op, x):
    if op is Op.STAR:
        return struct.star(x)
    return struct.inv(struct.star(struct.inv(x)))


def apply_word(struct, ops, x):
    """Interpret a star/plus word in any structure (plus is inv-star-inv)."""
    for op in ops:
        x = _apply_op(struct, op, x)
    return x


@dataclass(frozen=True)
class UnaryTerm:
    """A composition of star and plus; ops[0] is applied to the argument first."""

    ops: tuple

    def __len__(self):
        return len(self.ops)

    def apply(self, struct, x):
        for op in self.ops:
            x = _apply_op(struct, op, x)
        return x

    def __str__(self):
        if not self.ops:
            return "id"
        parts = []
        run_sym, run_len = None, 0
        for op in reversed(self.ops):  # outermost first, as compositions are written
            sym = "*" if op is Op.STAR else "+"
            if sym == run_sym:
                run_len += 1
            else:
                if run_sym is not None:
                    parts.append(run_sym if run_len == 1 else f"{run_sym}^{run_len}")
                run_sym, run_len = sym, 1
        parts.append(run_sym if run_len == 1 else f"{run_sym}^{run_len}")
        return "".join(parts)

    def to_json(self) -> str:
        return json.dumps({"ops": [op.value for op in self.ops]})

    def as_formula(self, child: Formula) -> Formula:
        out = child
        for op in self.ops:
            out = Star(out) if op is Op.STAR else Neg(Star(Neg(out)))
        return out


@dataclass(frozen=True)
class SynthTrace:
    """The pair walk behind a filter-indicator synthesis."""

    pairs: tuple  # (x_i, y_i), strictly ordered, last one separated
    steps: tuple  # the op applied at each step


def is_separated(struct, a, b) -> bool:
    """a crosses 1/2 over b, or b is 0, or a is 1."""
    if not a > b:
        raise NotOrdered(f"{a} must be strictly above {b}")
    if struct.is_positive(a) and not struct.is_positive(b):
        return True
    return b == struct.bottom or a == struct.top


def separating_term(struct, a, b) -> UnaryTerm:
    """A word t with t(a) = 1 and t(b) = 0, minimal in its case."""
    if not is_separated(struct, a, b):
        raise NotSeparated(f"({a}, {b}) is not separated")
    top, bottom = struct.top, struct.bottom
    if struct.is_positive(a) and not struct.is_positive(b):
        ops = [Op.STAR]
        x = struct.star(a)
        while x != top:
            x = _apply_op(struct, Op.PLUS, x)
            ops.append(Op.PLUS)
    elif b == bottom:
        ops = []
        x = a
        while x != top:
            x = _apply_op(struct, Op.PLUS, x)
            ops.append(Op.PLUS)
    else:  # a == top
        ops = []
        x = b
        while x != bottom:
            x = struct.star(x)
            ops.append(Op.STAR)
    term = UnaryTerm(tuple(ops))
    assert term.apply(struct, a) == top and term.apply(struct, b) == bottom
    return term


def delta_trace(struct, a) -> SynthTrace:
    """Walk (a, pred a) by single star/plus steps until separated."""
    universe = struct.universe
    x = a
    y = universe[universe.index(a) - 1]
    pairs = [(x, y)]
    steps = []
    guard = 4 * a.den.bit_length() + 16
    while not is_separated(struct, x, y):
        op = Op.STAR if struct.is_positive(x) else Op.PLUS
        nx, ny = _apply_op(struct, op, x), _apply_op(struct, op, y)
        assert nx > ny
        if not is_separated(struct, nx, ny):
            assert nx.num - ny.num == 2 * (x.num - y.num)
        steps.append(op)
        pairs.append((nx, ny))
        x, y = nx, ny
        if len(steps) > guard:
            raise RuntimeError(f"separation walk from {a} did not terminate")
    return SynthTrace(tuple(pairs), tuple(steps))


@lru_cache(maxsize=None)
def delta_ops(n: int, k: int) -> tuple:
    """Ops of the filter indicator for k/n, 0 < k <= n."""
    assert 0 < k <= n
    if k == n:
        return (Op.STAR,) * n
    chain = Chain(n)
    return _delta_ops_on(chain, chain.elem(k))


def _delta_ops_on(struct, a) -> tuple:
    trace = delta_trace(struct, a)
    x, y = trace.pairs[-1]
    return trace.steps + separating_term(struct, x, y).ops


def synth_delta(struct, a) -> Union[UnaryTerm, Formula]:
    """Indicator of the filter {x >= a} on struct (a chain or subalgebra).

    Returns a star/plus word except for a = 0, which needs join and negation
    and therefore comes back as the one-variable formula D1(p0) | ~D1(p0).
    """
    n = struct.ambient_n
    if a == struct.bottom:
        d1 = UnaryTerm((Op.STAR,) * n).as_formula(Var(0))
        return Join(d1, Neg(d1))
    if a == struct.top:
        return UnaryTerm((Op.STAR,) * n)
    if isinstance(struct, Chain):
        return UnaryTerm(delta_ops(struct.n, a.num))
    return UnaryTerm(_delta_ops_on(struct, a))


def delta_formula(chain: Chain, k: int, child: Formula) -> Formula:
    """The filter indicator for k/n as a core formula applied to child."""
    if k == 0:
        d1 = UnaryTerm((Op.STAR,) * chain.n).as_formula(child)
        return Join(d1, Neg(d1))
    return UnaryTerm(delta_ops(chain.n, k)).as_formula(child)


def chi_formula(chain: Chain, k: int, child: Formula) -> Formula:
    """The point indicator for k/n as a formula applied to child."""
    if k == chain.n:
        return delta_formula(chain, k, child)
    if k == 0:
        return Neg(delta_formula(chain, 1, child))
    return Meet(delta_formula(chain, k, child), Neg(delta_formula(chain, k + 1, child)))


def synth_chi(chain: Chain, a: ChainElem) -> Formula:
    """Indicator of the single value a, as a one-variable formula."""
    assert chain.contains(a)
    return chi_formula(chain, a.num, Var(0))


def synth_crisp_imp(chain: Chain) -> Formula:
    """p0 =>c p1 as the join over all values of (point match and filter hit)."""
    return big_join(
        Meet(chi_formula(chain, k, Var(0)), delta_formula(chain, k, Var(1)))
        for k in range(chain.n + 1)
    )


def synth_goedel_imp(chain: Chain) -> Formula:
    return Join(synth_crisp_imp(chain), Var(1))


@dataclass(frozen=True)
class TransferTerm:
    """A star/plus word, optionally applied after one innermost negation."""

    neg_first: bool
    word: UnaryTerm

    def apply(self, struct, x):
        if self.neg_first:
            x = struct.inv(x)
        return self.word.apply(struct, x)

    def as_formula(self, child: Formula) -> Formula:
        return self.word.as_formula(Neg(child) if self.neg_first else child)

    def __str__(self):
        inner = "~" if self.neg_first else ""
        return f"{self.word}{inner}" if self.word.ops or inner else "id"


def _bfs_word(chain: Chain, start: ChainElem, goal: ChainElem):
    if start == goal:
        return ()
    seen = {start: ()}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for op in (Op.STAR, Op.PLUS):
            nxt = _apply_op(chain, op, x)
            if nxt not in seen:
                seen[nxt] = seen[x] + (op,)
                if nxt == goal:
                    return seen[nxt]
                queue.append(nxt)
    return None


def transfer_term(chain: Chain, a: ChainElem, b: ChainElem) -> TransferTerm:
    """Shortest definable word sending a to b; exists on strictly simple chains.

    Negations push through star/plus, so it suffices to search plain words
    from a and from ~a.
    """
    if not is_strictly_simple(chain):
        raise NotStrictlySimple(f"{chain} has a proper non-trivial subalgebra")
    if a.is_bound():
        raise ValueError(f"transfer source {a} must be an interior element")
    direct = _bfs_word(chain, a, b)
    negated = _bfs_word(chain, a.neg(), b)
    candidates = []
    if direct is not None:
        candidates.append((len(direct), 0, TransferTerm(False, UnaryTerm(direct))))
    if negated is not None:
        candidates.append((len(negated) + 1, 1, TransferTerm(True, UnaryTerm(negated))))
    if not candidates:
        raise NoTermFound(f"no word sends {a} to {b}")
    term = min(candidates)[2]
    assert term.apply(chain, a) == b
    return term


def _remark_table_n4(chain: Chain, i: int, j: int) -> Formula:
    x, y = Var(0), Var(1)
    if j == 0:
        return Neg(x)
    if (i, j) == (3, 2):
        return x
    if (i, j) == (3, 1):
        return Star(x)
    assert (i, j) == (2, 1)
    return Neg(y)


def synth_luk_imp(chain: Chain) -> Formula:
    """min(1, 1 - x + y) as a two-variable formula, where definable.

    Raises NotTermEquivalent (with the arithmetic verdict attached) for the
    chain sizes where the implication is not definable.
    """
    n = chain.n
    if not term_equivalent(n):
        raise NotTermEquivalent(n)
    parts = [synth_crisp_imp(chain)]
    for i in range(n, 0, -1):
        for j in range(i - 1, -1, -1):
            if i == n:
                t_ij = Var(1)
            elif n == 4:
                t_ij = _remark_table_n4(chain, i, j)
            else:
                target = chain.elem(n - i + j)
                t_ij = transfer_term(chain, chain.elem(i), target).as_formula(Var(0))
            parts.append(
                Meet(chi_formula(chain, i, Var(0)),
                     Meet(chi_formula(chain, j, Var(1)), t_ij))
            )
    return big_join(parts)
