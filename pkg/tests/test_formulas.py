import random
from fractions import Fraction

import pytest

from lukstar import (
    ArrowI, BaazDelta, BudgetExceeded, Chain, Chi, Const, CrispImp, Delta,
    GoedelImp, IffI, Join, Matrix, Meet, Neg, ParseError, Star, StrongNeg,
    UnboundVariable, Var, consequence, evaluate, expand, is_valid, parse,
    synth_delta, variables,
)
from lukstar.formulas import random_formula


def test_parse_core():
    assert parse("~(p0 | p1)") == Neg(Join(Var(0), Var(1)))
    assert parse("*p0") == Star(Var(0))
    assert parse("0 | 1") == Join(Const(False), Const(True))
    assert parse("**~p2") == Star(Star(Neg(Var(2))))


def test_parse_macros():
    assert parse("D[8/11](p0)") == Delta(Fraction(8, 11), Var(0))
    assert parse("X[1/3](p1)") == Chi(Fraction(1, 3), Var(1))
    assert parse("p0 ->2 p1") == ArrowI(2, Var(0), Var(1))
    assert parse("p0 =>c p1") == CrispImp(Var(0), Var(1))
    assert parse("p0 =>g p1") == GoedelImp(Var(0), Var(1))
    assert parse("p0 & p1") == Meet(Var(0), Var(1))


def test_binary_connectives_left_associative():
    assert parse("p0 | p1 & p2") == Meet(Join(Var(0), Var(1)), Var(2))
    assert parse("p0 ->1 p1 ->1 p2") == ArrowI(1, ArrowI(1, Var(0), Var(1)), Var(2))


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as err:
        parse("p0 | ?")
    assert err.value.position == 4
    with pytest.raises(ParseError):
        parse("p0 p1")
    with pytest.raises(ParseError):
        parse("(p0 | p1")
    with pytest.raises(ParseError):
        parse("D[7/3](p0)")


def test_delta_macro_expands_to_synthesized_word():
    chain = Chain(11)
    got = parse("D[8/11](p0)", expand_macros=True, chain=chain)
    want = synth_delta(chain, chain.elem(8)).as_formula(Var(0))
    assert got == want


def test_eval_examples():
    c = Chain(11)
    assert evaluate(Star(Var(0)), c, {0: c.elem(7)}) == c.elem(3)
    assert evaluate(Const(True), c, {}) == c.top
    chi = expand(Chi(Fraction(8, 11), Var(0)), c)
    assert evaluate(chi, c, {0: c.elem(8)}) == c.top
    assert evaluate(chi, c, {0: c.elem(7)}) == c.bottom


def test_unbound_variable():
    with pytest.raises(UnboundVariable):
        evaluate(Var(3), Chain(3), {0: Chain(3).top})


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_macros_agree_with_expansion(n):
    c = Chain(n)
    i = min(2, n)
    cases = [
        Meet(Var(0), Var(1)),
        Delta(Fraction(1, n), Var(0)),
        Delta(Fraction(0), Var(0)),
        Chi(Fraction(n - 1, n), Var(0)),
        CrispImp(Var(0), Var(1)),
        GoedelImp(Var(0), Var(1)),
        StrongNeg(i, Var(0)),
        ArrowI(i, Var(0), Var(1)),
        IffI(i, Var(0), Var(1)),
        BaazDelta(Var(0)),
    ]
    for f in cases:
        g = expand(f, c)
        for x in c.universe:
            for y in c.universe:
                env = {0: x, 1: y}
                assert evaluate(f, c, env) == evaluate(g, c, env), f


def _substitute(f, replacement):
    if isinstance(f, Var):
        return replacement if f.index == 0 else f
    if isinstance(f, Const):
        return f
    kwargs = {}
    for name in ("child", "left", "right"):
        if hasattr(f, name):
            kwargs[name] = _substitute(getattr(f, name), replacement)
    if hasattr(f, "a"):
        kwargs["a"] = f.a
    if hasattr(f, "i"):
        kwargs["i"] = f.i
    return type(f)(**kwargs)


def test_substitution_lemma():
    rng = random.Random(7)
    c = Chain(4)
    for _ in range(60):
        f = random_formula(rng, 1, 3)
        g = random_formula(rng, 1, 3)
        for x in c.universe:
            inner = evaluate(g, c, {0: x})
            assert (evaluate(_substitute(f, g), c, {0: x})
                    == evaluate(f, c, {0: inner}))


def test_validity_examples():
    res = is_valid(Matrix(3, 3), parse("p0 | ~p0"))
    assert not res.valid and res.countermodel == {0: Chain(3).elem(1)}
    assert is_valid(Matrix(3, 2), parse("p0 | ~p0")).valid
    for n in range(2, 10):
        ax2 = IffI(1, Neg(Neg(Var(0))), Var(0))
        assert is_valid(Matrix(n, 1), ax2).valid


def test_budget():
    f = Join(Join(Var(0), Var(1)), Join(Var(2), Var(3)))
    with pytest.raises(BudgetExceeded):
        is_valid(Matrix(9, 1), f, budget=100)


def test_consequence_examples():
    for n in range(2, 8):
        for i in range(1, n + 1):
            m = Matrix(n, i)
            assert consequence(m, [Var(0), ArrowI(i, Var(0), Var(1))], Var(1)).valid
    m = Matrix(3, 2)
    assert consequence(m, [Var(0)], Delta(Fraction(2, 3), Var(0))).valid
    f = parse("p0 | ~p0")
    assert consequence(Matrix(3, 3), [], f).valid == is_valid(Matrix(3, 3), f).valid


def test_matrix_guards():
    with pytest.raises(ValueError):
        Matrix(3, 0)
    with pytest.raises(ValueError):
        Matrix(3, 4)


def _strict_equality(lhs, rhs):
    return BaazDelta(Meet(GoedelImp(lhs, rhs), GoedelImp(rhs, lhs)))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_equality_formula_is_discrete(n):
    c = Chain(n)
    theta = _strict_equality(Var(0), Var(1))
    for x in c.universe:
        for y in c.universe:
            val = evaluate(theta, c, {0: x, 1: y})
            assert (val == c.top) == (x == y)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_algebraizability_witnesses(n):
    m = Matrix(n, n)
    p, q, r, s = Var(0), Var(1), Var(2), Var(3)

    def theta(x, y):
        return _strict_equality(x, y)

    assert is_valid(m, theta(p, p)).valid
    assert consequence(m, [theta(p, q)], theta(q, p)).valid
    assert consequence(m, [theta(p, q), theta(q, r)], theta(p, r)).valid
    for wrap in (Neg, Star):
        assert consequence(m, [theta(p, q)], theta(wrap(p), wrap(q))).valid
    assert consequence(m, [theta(p, q), theta(r, s)],
                       theta(Join(p, r), Join(q, s))).valid
    # delta(p) = p and epsilon(p) = the constant-true indicator
    epsilon = Join(BaazDelta(p), Neg(BaazDelta(p)))
    assert consequence(m, [p], theta(p, epsilon)).valid
    assert consequence(m, [theta(p, epsilon)], p).valid


def test_variables_listing():
    assert variables(parse("p3 | ~(p0 & p3)")) == [0, 3]
    assert variables(Const(True)) == []
