import json

import pytest

from lukstar import (
    Chain, Formula, NotOrdered, NotSeparated, NotStrictlySimple,
    NotTermEquivalent, Op, UnaryTerm, all_subalgebras, delta_trace, evaluate,
    generated, is_separated, separating_term, synth_chi, synth_crisp_imp,
    synth_delta, synth_goedel_imp, synth_luk_imp, transfer_term,
)

S, P = Op.STAR, Op.PLUS


def test_term_rendering_and_json():
    assert str(UnaryTerm((S, P, S, S, P))) == "+*^2+*"
    assert str(UnaryTerm((S, S, P, P))) == "+^2*^2"
    assert str(UnaryTerm(())) == "id"
    assert json.loads(UnaryTerm((S, P)).to_json()) == {"ops": ["star", "plus"]}


def test_term_apply_matches_tables():
    c = Chain(11)
    term = UnaryTerm((S, P, S, S))  # *^2 + *
    assert term.apply(c, c.elem(8)) == c.elem(7)
    assert term.apply(c, c.elem(9)) == c.top


def test_is_separated():
    c = Chain(11)
    assert is_separated(c, c.elem(8), c.elem(5))
    assert not is_separated(c, c.elem(8), c.elem(7))
    assert is_separated(c, c.elem(3), c.bottom)
    assert is_separated(c, c.top, c.elem(9))
    with pytest.raises(NotOrdered):
        is_separated(c, c.elem(3), c.elem(8))


@pytest.mark.parametrize("n", range(2, 13))
def test_separating_term_postcondition(n):
    c = Chain(n)
    for a in c.universe:
        for b in c.universe:
            if a > b and is_separated(c, a, b):
                t = separating_term(c, a, b)
                assert t.apply(c, a) == c.top
                assert t.apply(c, b) == c.bottom


def test_separating_term_requires_separation():
    c = Chain(11)
    with pytest.raises(NotSeparated):
        separating_term(c, c.elem(8), c.elem(7))


@pytest.mark.parametrize("n", range(2, 21))
def test_trace_shape(n):
    c = Chain(n)
    for k in range(1, n):
        tr = delta_trace(c, c.elem(k))
        for x, y in tr.pairs:
            assert x > y
        last_x, last_y = tr.pairs[-1]
        assert is_separated(c, last_x, last_y)
        assert len(tr.steps) == len(tr.pairs) - 1


def test_synth_delta_fixtures():
    c = Chain(11)
    assert str(synth_delta(c, c.elem(8))) == "+*^2+*"
    assert str(synth_delta(c, c.elem(9))) == "+^2*^2"
    assert synth_delta(c, c.top) == UnaryTerm((S,) * 11)
    d0 = synth_delta(c, c.bottom)
    assert isinstance(d0, Formula)
    assert all(evaluate(d0, c, {0: x}) == c.top for x in c.universe)


@pytest.mark.parametrize("n", range(2, 15))
def test_delta_is_filter_indicator(n):
    c = Chain(n)
    for k in range(1, n + 1):
        term = synth_delta(c, c.elem(k))
        for x in c.universe:
            assert (term.apply(c, x) == c.top) == (x.num >= k)
            assert term.apply(c, x) in (c.top, c.bottom)


@pytest.mark.parametrize("n", range(2, 15))
def test_delta_terms_are_monotone(n):
    c = Chain(n)
    for k in range(1, n + 1):
        term = synth_delta(c, c.elem(k))
        values = [term.apply(c, x) for x in c.universe]
        assert all(a <= b for a, b in zip(values, values[1:]))


@pytest.mark.parametrize("n", range(2, 15))
def test_delta_antitone_in_threshold(n):
    c = Chain(n)
    for k in range(1, n):
        low = synth_delta(c, c.elem(k))
        high = synth_delta(c, c.elem(k + 1))
        for x in c.universe:
            assert high.apply(c, x) <= low.apply(c, x)


@pytest.mark.parametrize("n", range(2, 13))
def test_delta_on_subalgebras(n):
    for s in all_subalgebras(Chain(n)):
        for a in s.elems[1:]:
            term = synth_delta(s, a)
            for x in s.elems:
                assert (term.apply(s, x) == s.top) == (x >= a)


def test_chi_fixture():
    c = Chain(11)
    f = synth_chi(c, c.elem(8))
    values = [evaluate(f, c, {0: x}) for x in c.universe]
    assert [v.num for v in values] == [0] * 8 + [11] + [0] * 3
    f0 = synth_chi(c, c.bottom)
    assert evaluate(f0, c, {0: c.bottom}) == c.top
    assert evaluate(f0, c, {0: c.atom()}) == c.bottom
    f1 = synth_chi(c, c.top)
    assert evaluate(f1, c, {0: c.top}) == c.top
    assert evaluate(f1, c, {0: c.coatom()}) == c.bottom


@pytest.mark.parametrize("n", [2, 3, 5, 11])
def test_crisp_and_goedel_synthesis(n):
    c = Chain(n)
    fc, fg = synth_crisp_imp(c), synth_goedel_imp(c)
    for x in c.universe:
        for y in c.universe:
            env = {0: x, 1: y}
            assert evaluate(fc, c, env) == x.crisp_imp(y)
            assert evaluate(fg, c, env) == x.goedel_imp(y)


def test_transfer_identity_and_fixtures():
    c5 = Chain(5)
    t = transfer_term(c5, c5.elem(4), c5.elem(4))
    assert not t.neg_first and t.word.ops == ()
    t = transfer_term(c5, c5.elem(4), c5.elem(3))
    assert t.word.ops == (S,) and not t.neg_first
    c7 = Chain(7)
    t = transfer_term(c7, c7.elem(6), c7.elem(1))
    assert t.apply(c7, c7.elem(6)) == c7.elem(1)


def test_transfer_requires_strict_simplicity():
    c = Chain(9)
    with pytest.raises(NotStrictlySimple):
        transfer_term(c, c.elem(8), c.elem(1))


@pytest.mark.parametrize("n", [2, 3, 5, 7, 11])
def test_transfer_reaches_everything(n):
    c = Chain(n)
    for a in c.universe[1:-1]:
        for b in c.universe:
            assert transfer_term(c, a, b).apply(c, a) == b


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_luk_imp_synthesis(n):
    c = Chain(n)
    f = synth_luk_imp(c)
    for x in c.universe:
        for y in c.universe:
            assert evaluate(f, c, {0: x, 1: y}) == x.luk_imp(y)


@pytest.mark.parametrize("n", [9, 17])
def test_luk_imp_refusal(n):
    with pytest.raises(NotTermEquivalent) as err:
        synth_luk_imp(Chain(n))
    assert err.value.verdict.n == n
    assert not err.value.verdict.in_pi


def test_delta_procedure_matches_on_generated_subalgebra():
    s = generated(Chain(9), Chain(9).elem(8))
    for a in s.elems[1:]:
        term = synth_delta(s, a)
        for x in s.elems:
            assert (term.apply(s, x) == s.top) == (x >= a)
