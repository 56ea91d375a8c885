"""Skeletons, sk-sequences, abstract star-chains and representability.

A skeleton is the symbol trace of procedure P. Interpreted over [0, 1], a
symbol sequence composes x -> max(0, 2x-1) and x -> 1-x into a clamped
affine map with exact rational breakpoints; well-formed sequences have a
unique rational fixed point above 1/2, which is what pins strictly simple
subalgebras to their skeletons.

An abstract chain is given by its size and star table alone: the involution
is forced to index reversal and the Goedel operations come from the order.
`validate_igstar` is the gate; partition, representability and the
representability equations refuse chains that fail it.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Optional

from .report import CheckReport, Failure
from .subalgebra import BoundaryElement, Subalgebra, closure, run_p


class MalformedSequence(ValueError):
    pass


class OutOfRange(ValueError):
    pass


class NotValidated(ValueError):
    def __init__(self, report: CheckReport):
        self.report = report
        super().__init__(str(report))


class Sym(enum.Enum):
    STAR = "*"
    INV = "~"


_ALIASES = {"*": Sym.STAR, "★": Sym.STAR, "~": Sym.INV, "∼": Sym.INV}


@dataclass(frozen=True)
class SkSeq:
    """A sequence over {star, inv}, applied left to right."""

    symbols: tuple

    def __post_init__(self):
        assert all(isinstance(s, Sym) for s in self.symbols)

    def __len__(self):
        return len(self.symbols)

    def __str__(self):
        return "".join(s.value for s in self.symbols)

    @classmethod
    def parse(cls, text: str) -> "SkSeq":
        try:
            return cls(tuple(_ALIASES[ch] for ch in text.strip()))
        except KeyError as e:
            raise MalformedSequence(f"unknown symbol {e.args[0]!r}") from None

    def well_formed(self) -> bool:
        """Star blocks separated by single negations, leading block nonempty."""
        s = self.symbols
        if not s or s[0] is not Sym.STAR or Sym.INV not in s:
            return False
        return all(not (a is Sym.INV and b is Sym.INV) for a, b in zip(s, s[1:]))

    def is_periodic(self) -> bool:
        """True iff the sequence is a whole repetition of a strict prefix."""
        k = len(self.symbols)
        return any(
            k % d == 0 and self.symbols == self.symbols[:d] * (k // d)
            for d in range(1, k)
        )

    def apply(self, struct, x):
        for sym in self.symbols:
            x = struct.star(x) if sym is Sym.STAR else struct.inv(x)
        return x


def skeleton(struct, a) -> SkSeq:
    """The symbol trace of procedure P from a strictly positive element."""
    if a == struct.top or not struct.is_positive(a):
        raise BoundaryElement(f"skeletons are defined for positive elements below 1, not {a}")
    ps = run_p(struct, a)
    return SkSeq(tuple(Sym.STAR if op == "star" else Sym.INV for op in ps.ops))


# ------------------------------------------------------- clamped affine maps

@dataclass(frozen=True)
class PLMap:
    """Composition of star and inv as an exact clamped affine map.

    Increasing: 0 up to lo, affine to 1 at hi. Decreasing: 1 up to lo,
    affine down to 0 at hi.
    """

    lo: Fraction
    hi: Fraction
    increasing: bool

    def __post_init__(self):
        assert 0 <= self.lo < self.hi <= 1

    def apply(self, x: Fraction) -> Fraction:
        x = Fraction(x)
        if self.increasing:
            if x <= self.lo:
                return Fraction(0)
            if x >= self.hi:
                return Fraction(1)
            return (x - self.lo) / (self.hi - self.lo)
        if x <= self.lo:
            return Fraction(1)
        if x >= self.hi:
            return Fraction(0)
        return (self.hi - x) / (self.hi - self.lo)

    def after_star(self) -> "PLMap":
        mid = (self.lo + self.hi) / 2
        if self.increasing:
            return PLMap(mid, self.hi, True)
        return PLMap(self.lo, mid, False)

    def after_inv(self) -> "PLMap":
        return PLMap(self.lo, self.hi, not self.increasing)


IDENTITY_MAP = PLMap(Fraction(0), Fraction(1), True)


def plmap_of(s: SkSeq) -> PLMap:
    m = IDENTITY_MAP
    for sym in s.symbols:
        m = m.after_star() if sym is Sym.STAR else m.after_inv()
    return m


def fixed_point(s: SkSeq) -> Fraction:
    """The unique rational solution of f_s(x) = x strictly between 1/2 and 1."""
    if not s.well_formed():
        raise MalformedSequence(f"{s} is not a well-formed sk-sequence")
    m = plmap_of(s)
    if m.increasing:
        x = m.lo / (1 - m.hi + m.lo)
    else:
        x = m.hi / (1 + m.hi - m.lo)
    assert m.apply(x) == x and x > Fraction(1, 2)
    return x


def solve_preimage(s: SkSeq, d) -> Fraction:
    """The unique x with f_s(x) = d, for 0 < d < 1."""
    d = Fraction(d)
    if not 0 < d < 1:
        raise OutOfRange(f"target {d} must lie strictly between 0 and 1")
    m = plmap_of(s)
    if m.increasing:
        x = m.lo + d * (m.hi - m.lo)
    else:
        x = m.hi - d * (m.hi - m.lo)
    assert m.apply(x) == d
    return x


# ------------------------------------------------------- abstract star-chains

@dataclass(frozen=True)
class AbstractIGChain:
    """A finite chain given by its star table; involution is index reversal."""

    star_table: tuple

    def __post_init__(self):
        object.__setattr__(self, "star_table", tuple(self.star_table))
        m = len(self.star_table)
        if m < 2:
            raise ValueError("a chain needs at least the two bounds")
        for j, v in enumerate(self.star_table):
            if not (isinstance(v, int) and 0 <= v < m):
                raise ValueError(f"star table entry {v!r} at index {j} out of range")

    @property
    def size(self) -> int:
        return len(self.star_table)

    @property
    def universe(self) -> tuple:
        return tuple(range(self.size))

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return self.size - 1

    def star(self, j: int) -> int:
        return self.star_table[j]

    def inv(self, j: int) -> int:
        return self.size - 1 - j

    def is_positive(self, j: int) -> bool:
        return j > self.size - 1 - j

    def to_json(self) -> str:
        return json.dumps({"size": self.size, "star": list(self.star_table)})

    @classmethod
    def from_json(cls, text: str) -> "AbstractIGChain":
        data = json.loads(text)
        table = tuple(data["star"])
        if data.get("size", len(table)) != len(table):
            raise ValueError("size field disagrees with the star table length")
        return cls(table)


def to_igchain(struct) -> AbstractIGChain:
    """Re-present a chain or subalgebra abstractly (indices and star table)."""
    if isinstance(struct, Subalgebra):
        return AbstractIGChain(struct.star_table())
    pos = {x: i for i, x in enumerate(struct.universe)}
    return AbstractIGChain(tuple(pos[struct.star(x)] for x in struct.universe))


# ------------------------------------------------------------------ validator

def _gimp(struct, x, y):
    return struct.top if x <= y else y


def _gneg(struct, x):
    return struct.top if x == struct.bottom else struct.bottom


def _baaz(struct, x):
    return struct.top if x == struct.top else struct.bottom


def _giff(struct, x, y):
    return min(_gimp(struct, x, y), _gimp(struct, y, x))


@lru_cache(maxsize=None)
def validate_igstar(struct) -> CheckReport:
    """Check the involutive-Goedel laws and the five star equations.

    The first star equation is checked in its Boolean form (the indicator of
    x being a bound equals the indicator of x = star x); the remaining four
    pin star to 0 on the lower half and make it strictly increasing,
    strictly deflationary and injective on the positive part.
    """
    top, bottom = struct.top, struct.bottom
    inv, star = struct.inv, struct.star

    def gimp(x, y):
        return _gimp(struct, x, y)

    def bz(x):
        return _baaz(struct, x)

    def giff(x, y):
        return _giff(struct, x, y)

    failures = []
    checked = 0

    def record(law, witness, ok):
        nonlocal checked
        checked += 1
        if not ok:
            failures.append(Failure(law, {}, witness))

    for x in struct.universe:
        w = {"x": str(x)}
        record("IG1", w, inv(inv(x)) == x)
        record("IG2", w, _gneg(struct, x) <= inv(x))
        record("IG4", w, max(bz(x), _gneg(struct, bz(x))) == top)
        record("star1", w, bz(max(x, inv(x))) == bz(giff(x, star(x))))
        record("star2", w, bz(gimp(x, inv(x))) == _gneg(struct, star(x)))
        record("star3", w,
               min(inv(bz(gimp(x, inv(x)))), inv(bz(x)))
               <= inv(bz(gimp(x, star(x)))))
        for y in struct.universe:
            wxy = {"x": str(x), "y": str(y)}
            record("IG3", wxy, bz(gimp(x, y)) == bz(gimp(inv(y), inv(x))))
            record("IG5", wxy, bz(max(x, y)) <= max(bz(x), bz(y)))
            record("IG6", wxy, bz(gimp(x, y)) <= gimp(bz(x), bz(y)))
            pos_pair = min(bz(gimp(inv(x), x)), bz(gimp(inv(y), y)))
            record("star4", wxy,
                   min(pos_pair, inv(bz(gimp(x, y))))
                   <= inv(bz(gimp(star(x), star(y)))))
            record("star5", wxy,
                   min(pos_pair, bz(giff(star(x), star(y)))) <= bz(giff(x, y)))

    return CheckReport(f"star-chain laws size={len(struct.universe)}", checked, tuple(failures))


def _require_valid(struct) -> None:
    report = validate_igstar(struct)
    if not report.ok:
        raise NotValidated(report)


# ------------------------------------------------------------------ partition

@dataclass(frozen=True)
class SimplePartition:
    """Strictly simple cores with the elements attracted to each."""

    blocks: tuple  # pairs (core elements ascending, attracted ascending)

    def core_of(self, x):
        for core, attracted in self.blocks:
            if x in attracted:
                return core
        raise KeyError(x)


def simple_partition(struct) -> SimplePartition:
    """Group the non-boundary universe by the strictly simple core P reaches."""
    _require_valid(struct)
    top, bottom = struct.top, struct.bottom
    interior = [x for x in struct.universe if x != top and x != bottom]
    grouped = {}
    for a in interior:
        ps = run_p(struct, a)
        entry = ps.seq[ps.loop_target - 1]
        core = tuple(sorted(closure(struct, [entry])))
        grouped.setdefault(core, []).append(a)
    blocks = tuple(
        (core, tuple(sorted(members)))
        for core, members in sorted(grouped.items())
    )
    covered = [x for _, members in blocks for x in members]
    assert sorted(covered) == sorted(interior)
    return SimplePartition(blocks)


# ------------------------------------------------------------ representability

@dataclass(frozen=True)
class RepresentVerdict:
    representable: bool
    k: Optional[int] = None
    embedding: Optional[tuple] = None  # numerators over k, aligned with the universe
    violated_condition: Optional[int] = None
    witness: Optional[dict] = None

    def __bool__(self):
        return self.representable

    def to_dict(self) -> dict:
        out = {"representable": self.representable}
        if self.representable:
            out["k"] = self.k
            out["embedding"] = list(self.embedding)
        else:
            out["violated_condition"] = self.violated_condition
            out["witness"] = self.witness
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _block_skeletons(struct, core) -> set:
    top = struct.top
    return {
        skeleton(struct, b)
        for b in core
        if b != top and struct.is_positive(b)
    }


def is_representable(struct) -> RepresentVerdict:
    """Decide embeddability into some finite chain; produce a checked embedding.

    Non-representability comes with the violated condition: a periodic
    skeleton inside one strictly simple core, or one skeleton shared by two
    different cores.
    """
    _require_valid(struct)
    part = simple_partition(struct)
    skel_sets = []
    for core, _ in part.blocks:
        sks = _block_skeletons(struct, core)
        for sk in sks:
            if sk.is_periodic():
                return RepresentVerdict(
                    False, violated_condition=1,
                    witness={"skeleton": str(sk), "core": [str(x) for x in core]},
                )
        skel_sets.append(sks)
    for i in range(len(skel_sets)):
        for j in range(i + 1, len(skel_sets)):
            shared = skel_sets[i] & skel_sets[j]
            if shared:
                sk = sorted(shared, key=str)[0]
                return RepresentVerdict(
                    False, violated_condition=2,
                    witness={
                        "skeleton": str(sk),
                        "cores": [[str(x) for x in part.blocks[i][0]],
                                  [str(x) for x in part.blocks[j][0]]],
                    },
                )
    lam = _build_embedding(struct, part)
    denominators = [v.denominator for v in lam.values()]
    k = lcm(*denominators) if denominators else 1
    numerators = tuple(int(lam[x] * k) for x in struct.universe)
    _verify_embedding(struct, k, numerators)
    return RepresentVerdict(True, k=k, embedding=numerators)


def _star_frac(v: Fraction) -> Fraction:
    return max(Fraction(0), 2 * v - 1)


def _build_embedding(struct, part: SimplePartition) -> dict:
    top, bottom = struct.top, struct.bottom
    lam = {bottom: Fraction(0), top: Fraction(1)}
    for core, attracted in part.blocks:
        interior = [x for x in core if x not in (top, bottom)]
        positives = [x for x in interior if struct.is_positive(x)]
        if not positives:
            # the self-negating midpoint: its core is the three-element chain
            assert len(interior) == 1
            lam[interior[0]] = Fraction(1, 2)
        else:
            coat = max(positives)
            ps = run_p(struct, coat)
            v = fixed_point(skeleton(struct, coat))
            lam[ps.seq[0]] = v
            for elem, op in zip(ps.seq[1:], ps.ops):
                v = _star_frac(v) if op == "star" else 1 - v
                lam[elem] = v
            for elem in list(ps.seq):
                lam[struct.inv(elem)] = 1 - lam[elem]
        for a in attracted:
            if a in lam:
                continue
            ps = run_p(struct, a)
            core_set = set(core)
            idx = next(t for t, e in enumerate(ps.seq) if e in core_set)
            prefix = SkSeq(tuple(Sym.STAR if op == "star" else Sym.INV
                                 for op in ps.ops[:idx]))
            lam[a] = solve_preimage(prefix, lam[ps.seq[idx]])
    return lam


def _verify_embedding(struct, k: int, numerators: tuple) -> None:
    universe = struct.universe
    for i in range(len(universe) - 1):
        assert numerators[i] < numerators[i + 1], "embedding is not order preserving"
    for j, x in enumerate(universe):
        assert 0 <= numerators[j] <= k
        assert numerators[universe.index(struct.inv(x))] == k - numerators[j], \
            "embedding does not preserve the involution"
        assert numerators[universe.index(struct.star(x))] == max(0, 2 * numerators[j] - k), \
            "embedding does not preserve star"


# ------------------------------------------------- representability equations

def well_formed_sequences(max_len: int) -> list:
    """All well-formed sk-sequences of length at most max_len, shortlex order."""
    out = []
    frontier = [(Sym.STAR,)]
    while frontier:
        nxt = []
        for seq in frontier:
            if Sym.INV in seq:
                out.append(SkSeq(seq))
            if len(seq) < max_len:
                nxt.append(seq + (Sym.STAR,))
                if seq[-1] is not Sym.INV:
                    nxt.append(seq + (Sym.INV,))
        frontier = nxt
    out.sort(key=lambda s: (len(s), str(s)))
    return out


def check_r_equations(struct, n: int) -> CheckReport:
    """The two equation families indexed by sk-sequences R and repetitions r.

    The first fails exactly on interior orbits realizing a periodic skeleton;
    the second on two distinct interior fixed points of one sequence map.
    """
    _require_valid(struct)
    universe = struct.universe
    assert len(universe) <= n + 1, "chain is taller than the stated bound"
    top = struct.top

    def bz(x):
        return _baaz(struct, x)

    def gimp(x, y):
        return _gimp(struct, x, y)

    def giff(x, y):
        return _giff(struct, x, y)

    failures = []
    checked = 0
    for seq in well_formed_sequences(n + 1):
        f_r = {x: seq.apply(struct, x) for x in universe}
        max_r = (n + 1) // len(seq)
        # (R2n) does not mention r; one sweep per sequence
        for x in universe:
            for y in universe:
                checked += 1
                ant = bz(min(giff(f_r[x], x), giff(f_r[y], y)))
                lhs = max(struct.inv(x), x, struct.inv(y), y,
                          gimp(ant, bz(giff(x, y))))
                if lhs != top:
                    failures.append(Failure(
                        "R2n", {"R": str(seq)}, {"x": str(x), "y": str(y)}))
        power = {x: x for x in universe}  # f_R iterated r-1 times
        for r in range(1, max_r + 1):
            for x in universe:
                for y in universe:
                    checked += 1
                    lhs = max(
                        struct.inv(x), x, giff(x, y),
                        gimp(bz(giff(f_r[x], y)),
                             struct.inv(bz(giff(power[y], x)))),
                    )
                    if lhs != top:
                        failures.append(Failure(
                            "R1n", {"R": str(seq), "r": r},
                            {"x": str(x), "y": str(y)}))
            power = {x: f_r[power[x]] for x in universe}
    return CheckReport(f"representability equations n={n}", checked, tuple(failures))
