"""Procedure P, generated subalgebras, enumeration and strict simplicity.

Procedure P iterates "square if positive, else negate" from a starting
element until it would repeat; its range together with {0, 1} is exactly the
subalgebra generated by the start. Since both closure operations are unary,
every subalgebra is a union of one-generated ones, which is what the
enumerator exploits.

All functions taking a `struct` accept anything exposing the small structure
protocol (universe / top / bottom / star / inv / is_positive): chains,
subalgebras, or abstract star-chains.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .chain import Chain, ChainElem


class BoundaryElement(ValueError):
    """Procedure P is undefined on 0 and 1."""


class BoundExceeded(ValueError):
    """Enumeration was asked to run past its configured bound."""


@dataclass(frozen=True)
class PSequence:
    """A maximal duplicate-free run of procedure P.

    `seq` holds a_1..a_k; `ops` holds the symbol applied at each step, with
    ops[-1] mapping a_k to the repeated element seq[loop_target - 1]
    (loop_target is 1-based, matching a_{k+1} = a_j).
    """

    start: object
    seq: tuple
    ops: tuple  # entries are "star" | "inv"
    loop_target: int

    @property
    def image(self) -> frozenset:
        return frozenset(self.seq)

    def negated_image(self, struct) -> frozenset:
        return frozenset(struct.inv(x) for x in self.seq)

    def range_set(self, struct) -> frozenset:
        return self.image | self.negated_image(struct)


def run_p(struct, a) -> PSequence:
    """Run procedure P from a, stopping just before the first repeat."""
    if a == struct.top or a == struct.bottom:
        raise BoundaryElement(f"procedure P is undefined on {a}")
    seq = [a]
    ops = []
    seen = {a: 1}
    x = a
    while True:
        if struct.is_positive(x):
            nxt, op = struct.star(x), "star"
        else:
            nxt, op = struct.inv(x), "inv"
        ops.append(op)
        if nxt in seen:
            ps = PSequence(start=a, seq=tuple(seq), ops=tuple(ops), loop_target=seen[nxt])
            assert len(ps.seq) <= len(struct.universe) - 2
            return ps
        seq.append(nxt)
        seen[nxt] = len(seq)
        x = nxt


def closure(struct, xs) -> frozenset:
    """Least subset containing xs and {0,1}, closed under star and inv."""
    out = {struct.bottom, struct.top}
    stack = list(xs)
    while stack:
        x = stack.pop()
        if x in out:
            continue
        out.add(x)
        stack.append(struct.star(x))
        stack.append(struct.inv(x))
    return frozenset(out)


@dataclass(frozen=True)
class Subalgebra:
    """A subset of a chain containing 0 and 1, closed under neg and star."""

    chain: Chain
    elems: tuple

    def __post_init__(self):
        assert self.elems == tuple(sorted(self.elems, key=lambda e: e.num))
        members = frozenset(self.elems)
        assert self.chain.bottom in members and self.chain.top in members
        for x in self.elems:
            assert x.neg() in members and x.star() in members, f"{x} breaks closure"

    def __len__(self):
        return len(self.elems)

    def __contains__(self, x):
        return isinstance(x, ChainElem) and x.den == self.chain.n and x in set(self.elems)

    def __str__(self):
        return "{" + ", ".join(str(x) for x in self.elems) + "}"

    @property
    def universe(self) -> tuple:
        return self.elems

    @property
    def ambient_n(self) -> int:
        return self.chain.n

    @property
    def bottom(self) -> ChainElem:
        return self.elems[0]

    @property
    def top(self) -> ChainElem:
        return self.elems[-1]

    def coatom(self) -> ChainElem:
        return self.elems[-2]

    def atom(self) -> ChainElem:
        return self.elems[1]

    def star(self, x: ChainElem) -> ChainElem:
        assert x in self
        return x.star()

    def inv(self, x: ChainElem) -> ChainElem:
        assert x in self
        return x.neg()

    def plus(self, x: ChainElem) -> ChainElem:
        assert x in self
        return x.plus()

    def is_positive(self, x: ChainElem) -> bool:
        return x.is_positive()

    def star_table(self) -> tuple:
        """Index form of the star operation, under the order bijection."""
        pos = {x: i for i, x in enumerate(self.elems)}
        return tuple(pos[x.star()] for x in self.elems)

    def to_json(self) -> str:
        return json.dumps({"n": self.chain.n, "elems": [x.num for x in self.elems]})

    @classmethod
    def from_json(cls, text: str) -> "Subalgebra":
        data = json.loads(text)
        chain = Chain(data["n"])
        return cls(chain, tuple(chain.elem(k) for k in sorted(data["elems"])))


def _wrap(chain: Chain, members: frozenset) -> Subalgebra:
    return Subalgebra(chain, tuple(sorted(members, key=lambda e: e.num)))


def generated(chain: Chain, a: ChainElem) -> Subalgebra:
    """<a>*, the subalgebra generated by a single element."""
    assert chain.contains(a)
    if a.is_bound():
        return _wrap(chain, frozenset({chain.bottom, chain.top}))
    ps = run_p(chain, a)
    return _wrap(chain, ps.range_set(chain) | {chain.bottom, chain.top})


def generated_by_set(chain: Chain, xs) -> Subalgebra:
    """<X>*, computed by fixpoint closure under neg and star."""
    for x in xs:
        assert chain.contains(x)
    return _wrap(chain, closure(chain, xs))


def _generator_base(chain: Chain) -> list:
    """Elements a with neg(a) <= a < 1; their closures reach every subalgebra."""
    return [x for x in chain.universe if 2 * x.num >= chain.n and x.num < chain.n]


def all_subalgebras(chain: Chain, bound: int = 64) -> list:
    """Every distinct subalgebra, sorted by size then lexicographically.

    Computed as the union-closure of the one-generated subalgebras (closure
    under the unary ops distributes over union).
    """
    if chain.n > bound:
        raise BoundExceeded(f"n={chain.n} exceeds the enumeration bound {bound}")
    singles = {closure(chain, [a]) for a in _generator_base(chain)}
    family = {frozenset({chain.bottom, chain.top})}
    worklist = list(singles)
    while worklist:
        s = worklist.pop()
        if s in family:
            continue
        family.add(s)
        for d in singles:
            u = s | d
            if u not in family:
                worklist.append(u)
    out = [_wrap(chain, members) for members in family]
    out.sort(key=lambda s: (len(s.elems), tuple(x.num for x in s.elems)))
    return out


def is_strictly_simple(chain: Chain) -> bool:
    """True iff the only proper subalgebra is {0, 1}.

    Exact: every subalgebra is a union of one-generated ones, so it suffices
    that every non-boundary generator reaches the whole chain.
    """
    full = frozenset(chain.universe)
    return all(closure(chain, [a]) == full for a in _generator_base(chain))


def is_strictly_simple_sub(s: Subalgebra) -> bool:
    """True iff every non-boundary generator of s reaches all of s.

    {0,1} and {0,1/2,1} pass vacuously or trivially; callers wanting
    "strictly simple and non-trivial" should additionally test len(s) > 2.
    """
    members = frozenset(s.elems)
    gens = [x for x in s.elems if 2 * x.num >= s.chain.n and x.num < s.chain.n]
    return all(closure(s, [a]) == members for a in gens)
