"""Brute-force verifiers for the axiom systems and the defining equations.

`check_hilbert_axioms` sweeps every schema of the filter calculus with its
metavariables read as fresh atoms (compositional evaluation makes that cover
all instances) and every admissible parameter value. `check_lambda_equations`
checks the nine equations that carve out the generated variety; it runs on
any star-structure, so a mutated table is caught rather than assumed away.
"""

from __future__ import annotations

from fractions import Fraction

from .formulas import (
    ArrowI, BaazDelta, Chi, CrispImp, Delta, Formula, IffI, Join, Matrix,
    Meet, Neg, Star, StrongNeg, Var, big_join, consequence, is_valid,
)
from .report import CheckReport, Failure
from .terms import apply_word, delta_ops


def _countermodel(cm) -> dict:
    return {} if cm is None else {f"p{k}": str(v) for k, v in sorted(cm.items())}


A, B, C = Var(0), Var(1), Var(2)


def _schemas(m: Matrix):
    """Yield (name, params, formula) for every axiom schema instance."""
    n, i = m.n, m.i

    def arrow(x, y):
        return ArrowI(i, x, y)

    def iff(x, y):
        return IffI(i, x, y)

    def d(a: Fraction, x):
        return Delta(a, x)

    yield "CPL-1", {}, arrow(A, Join(A, B))
    yield "CPL-2", {}, arrow(A, Join(B, A))
    yield "CPL-3", {}, arrow(arrow(A, C), arrow(arrow(B, C), arrow(Join(A, B), C)))
    yield "CPL-4", {}, arrow(A, arrow(B, A))
    yield "CPL-5", {}, arrow(arrow(A, B), arrow(arrow(B, C), arrow(A, C)))
    yield "CPL-6", {}, Join(A, arrow(A, B))
    # Ax1 needs the filter negation: the status biconditional is no congruence
    # for the involutive one (n=3, i=1, p0=1/3, p1=1 breaks that reading).
    yield "Ax1", {}, arrow(iff(A, B), iff(StrongNeg(i, A), StrongNeg(i, B)))
    yield "Ax2", {}, iff(Neg(Neg(A)), A)
    yield "Ax3", {}, arrow(Neg(Join(A, B)), Neg(A))
    yield "Ax4", {}, arrow(Neg(A), arrow(Neg(B), Neg(Join(A, B))))
    yield "Ax10", {}, arrow(d(Fraction(i, n), A), A)

    values = [Fraction(k, n) for k in range(n + 1)]
    for a in values:
        pa = {"a": str(a)}
        sa = max(Fraction(0), 2 * a - 1)
        if a > 0:
            for b in values:
                yield "Ax5", {"a": str(a), "b": str(b)}, iff(d(a, d(b, A)), d(b, A))
        yield "Ax6", pa, Join(d(a, A), Neg(d(a, A)))
        yield "Ax8", pa, iff(d(a, Join(A, B)), Join(d(a, A), d(a, B)))
        yield "Ax11", pa, arrow(d(a, A), d(sa, Star(A)))
        if a < 1:
            succ = a + Fraction(1, n)
            yield "Ax7", pa, arrow(d(succ, A), d(a, A))
            yield "Ax9", pa, iff(d(1 - a, Neg(A)), Neg(d(succ, A)))
            yield "Ax12", pa, arrow(d(sa + Fraction(1, n), Star(A)), d(succ, A))


def check_hilbert_axioms(m: Matrix) -> CheckReport:
    """Every schema of the calculus, all parameter instances, all valuations."""
    checked = 0
    failures = []
    for name, params, formula in _schemas(m):
        checked += 1
        res = is_valid(m, formula)
        if not res.valid:
            failures.append(Failure(name, params, _countermodel(res.countermodel)))
    return CheckReport(f"axioms n={m.n} i={m.i}", checked, tuple(failures))


def _theorem_items(m: Matrix):
    n, i = m.n, m.i

    def arrow(x, y):
        return ArrowI(i, x, y)

    def iff(x, y):
        return IffI(i, x, y)

    values = [Fraction(k, n) for k in range(n + 1)]
    for a in values:
        pa = {"a": str(a)}
        sa = max(Fraction(0), 2 * a - 1)
        yield "(i)", pa, arrow(Delta(a, A), arrow(Neg(Delta(a, A)), B))
        yield "(iv)", pa, iff(Delta(a, A), Delta(a, Neg(Neg(A))))
        yield "(vii)", pa, arrow(Chi(a, Join(A, B)), Join(Chi(a, A), Chi(a, B)))
        yield "(xii)", pa, iff(Chi(a, A), Chi(1 - a, Neg(A)))
        yield "(xiii)", pa, arrow(Chi(a, A), Chi(sa, Star(A)))
        yield "(xv)", pa, iff(Delta(a, A), big_join(Chi(b, A) for b in values if b >= a))
        if a < 1:
            succ = a + Fraction(1, n)
            yield "(ii)", pa, arrow(Delta(succ, A), arrow(Delta(1 - a, Neg(A)), B))
            yield "(iii)", pa, Join(Delta(succ, A), Delta(1 - a, Neg(A)))
        for b in values:
            pab = {"a": str(a), "b": str(b)}
            yield "(x)", pab, iff(
                arrow(Delta(a, A), Delta(b, B)),
                arrow(Neg(Delta(b, B)), Neg(Delta(a, A))),
            )
            yield "(xi)", pab, arrow(
                Meet(Chi(a, A), Chi(b, B)), Chi(max(a, b), Join(A, B))
            )
            yield "(xiv)", pab, arrow(
                Chi(a, A), Chi(Fraction(1 if a >= b else 0), Delta(b, A))
            )
            if a != b:
                yield "(ix)", pab, arrow(Meet(Chi(a, A), Chi(b, A)), B)
            if b >= a:
                yield "(xvi)", pab, arrow(Delta(b, A), Delta(a, A))
    yield "(v)", {}, arrow(A, Delta(Fraction(i, n), A))
    yield "(vi)", {}, arrow(Meet(A, Neg(Delta(Fraction(i, n), A))), B)
    yield "(viii)", {}, big_join(Chi(a, A) for a in values)


def check_lemma_theorems(m: Matrix) -> CheckReport:
    checked = 0
    failures = []
    for name, params, formula in _theorem_items(m):
        checked += 1
        res = is_valid(m, formula)
        if not res.valid:
            failures.append(Failure(name, params, _countermodel(res.countermodel)))
    return CheckReport(f"theorems n={m.n} i={m.i}", checked, tuple(failures))


def check_consequence_props(m: Matrix) -> CheckReport:
    """The two square-operator properties stated after the theorem list."""
    checked = 0
    failures = []
    for name, formula in [
        ("star-below", CrispImp(Star(A), A)),
        ("star-crisp-monotone", ArrowI(m.i, CrispImp(A, B), CrispImp(Star(A), Star(B)))),
    ]:
        checked += 1
        res = is_valid(m, formula)
        if not res.valid:
            failures.append(Failure(name, {}, _countermodel(res.countermodel)))
    return CheckReport(f"square props n={m.n} i={m.i}", checked, tuple(failures))


# ------------------------------------------------- variety equations (Eq1-Eq9)

def _godel_imp(struct, x, y):
    return struct.top if x <= y else y


def _baaz(struct, x):
    return struct.top if x == struct.top else struct.bottom


def check_lambda_equations(struct) -> CheckReport:
    """Eq1-Eq9 over all elements and parameters of a star-structure.

    The filter indicators are the words synthesized on the honest chain of
    the same size, interpreted through the structure's own star table; a
    mutated table therefore shows up as a failed equation, not as a changed
    yardstick.
    """
    universe = struct.universe
    n = len(universe) - 1
    assert n >= 1
    top, bottom = struct.top, struct.bottom

    words = {k: delta_ops(n, k) for k in range(1, n + 1)}
    dv = {}
    for x in universe:
        for k in range(1, n + 1):
            dv[(k, x)] = apply_word(struct, words[k], x)
        d1 = dv[(n, x)]
        dv[(0, x)] = max(d1, struct.inv(d1))

    def d(k, x):
        return dv[(k, x)]

    def gimp(x, y):
        return _godel_imp(struct, x, y)

    def star_k(k):
        return max(0, 2 * k - n)

    failures = []
    checked = 0

    def record(eq, params, witness, ok):
        nonlocal checked
        checked += 1
        if not ok:
            failures.append(Failure(eq, params, witness))

    for x in universe:
        wx = {"x": str(x)}
        record("Eq1", {}, wx, d(n, x) == _baaz(struct, x) and d(0, x) == top)
        for k in range(n + 1):
            pa = {"a": f"{k}/{n}"}
            record("Eq3", pa, wx, max(d(k, x), struct.inv(d(k, x))) == top)
            record("Eq8", pa, wx, gimp(d(k, x), d(star_k(k), struct.star(x))) == top)
            if k < n:
                record("Eq4", pa, wx, gimp(d(k + 1, x), d(k, x)) == top)
                record("Eq6", pa, wx,
                       gimp(d(n - k, struct.inv(x)), struct.inv(d(k + 1, x))) == top)
                record("Eq9", pa, wx,
                       gimp(d(star_k(k) + 1, struct.star(x)), d(k + 1, x)) == top)
            if k > 0:
                for kb in range(n + 1):
                    record("Eq2", {"a": f"{k}/{n}", "b": f"{kb}/{n}"}, wx,
                           d(k, d(kb, x)) == d(kb, x))
        for y in universe:
            wxy = {"x": str(x), "y": str(y)}
            record("Eq7", {}, wxy,
                   gimp(_baaz(struct, gimp(x, y)),
                        gimp(struct.star(x), struct.star(y))) == top)
            for k in range(n + 1):
                record("Eq5", {"a": f"{k}/{n}"}, wxy,
                       d(k, max(x, y)) == max(d(k, x), d(k, y)))

    return CheckReport(f"variety equations size={n + 1}", checked, tuple(failures))


# ------------------------------------------------------------- translations

def check_translations(n: int, i: int, sample) -> CheckReport:
    """Both translation directions plus the round trips, per sampled (premises, goal)."""
    m_top = Matrix(n, n)
    m_i = Matrix(n, i)

    def tau1(f: Formula) -> Formula:
        return BaazDelta(f)

    def taui(f: Formula) -> Formula:
        return Delta(Fraction(i, n), f)

    checked = 0
    failures = []
    for idx, (gamma, phi) in enumerate(sample):
        gamma = list(gamma)
        cases = [
            ("top-to-filter",
             consequence(m_top, gamma, phi).valid,
             consequence(m_i, [tau1(g) for g in gamma], tau1(phi)).valid),
            ("filter-to-top",
             consequence(m_i, gamma, phi).valid,
             consequence(m_top, [taui(g) for g in gamma], taui(phi)).valid),
            ("roundtrip-top",
             True,
             consequence(m_top, [phi], taui(tau1(phi))).valid
             and consequence(m_top, [taui(tau1(phi))], phi).valid),
            ("roundtrip-filter",
             True,
             consequence(m_i, [phi], tau1(taui(phi))).valid
             and consequence(m_i, [tau1(taui(phi))], phi).valid),
        ]
        for name, lhs, rhs in cases:
            checked += 1
            if lhs != rhs:
                failures.append(Failure(
                    name,
                    {"sample": idx, "goal": str(phi),
                     "premises": [str(g) for g in gamma]},
                    {"left": lhs, "right": rhs},
                ))
    return CheckReport(f"translations n={n} i={i}", checked, tuple(failures))
