import pytest

from lukstar import Chain, ChainElem, MixedChains


def test_neg_examples():
    assert str(Chain(11).elem(8).neg()) == "3/11"
    for n in (1, 4, 9):
        assert Chain(n).bottom.neg() == Chain(n).top
    assert Chain(9).elem(5).neg() == Chain(9).elem(4)


def test_star_examples():
    c = Chain(11)
    assert c.elem(7).star() == c.elem(3)
    assert c.elem(5).star() == c.bottom
    for n in (1, 4, 7):
        assert Chain(n).top.star() == Chain(n).top


def test_plus_examples():
    c = Chain(11)
    assert c.elem(4).plus() == c.elem(8)
    assert c.elem(6).plus() == c.top
    for n in (1, 4, 7):
        assert Chain(n).bottom.plus() == Chain(n).bottom


def test_join_meet():
    c = Chain(11)
    assert c.elem(3).join(c.elem(8)) == c.elem(8)
    assert c.elem(3).meet(c.elem(8)) == c.elem(3)
    for x in c.universe:
        assert x.join(c.bottom) == x
        assert x.meet(c.top) == x


def test_luk_connectives():
    c = Chain(11)
    assert c.elem(8).luk_imp(c.elem(3)) == c.elem(6)
    assert c.elem(6).oplus(c.elem(6)) == c.top
    for n in range(1, 13):
        for x in Chain(n).universe:
            assert x.luk_conj(x) == x.star()


def test_goedel_and_crisp():
    c = Chain(11)
    assert c.elem(8).goedel_imp(c.elem(3)) == c.elem(3)
    assert c.elem(8).crisp_imp(c.elem(3)) == c.bottom
    for x in c.universe:
        assert x.crisp_imp(x) == c.top
        assert x.goedel_imp(x) == c.top


def test_goedel_from_crisp():
    for n in range(1, 10):
        c = Chain(n)
        for x in c.universe:
            for y in c.universe:
                assert x.goedel_imp(y) == x.crisp_imp(y).join(y)


def test_baaz():
    for n in range(1, 13):
        c = Chain(n)
        assert c.top.baaz() == c.top
        assert c.coatom().baaz() == c.bottom
        for x in c.universe:
            iterated = x
            for _ in range(n):
                iterated = iterated.star()
            assert x.baaz() == iterated


def test_positive_atom_coatom():
    assert not Chain(4).elem(2).is_positive()
    assert Chain(4).elem(3).is_positive()
    assert Chain(17).coatom() == Chain(17).elem(16)
    assert Chain(9).atom() == Chain(9).elem(1)


def test_involution_sweep():
    for n in range(1, 201):
        for x in Chain(n).universe:
            assert x.neg().neg() == x


@pytest.mark.parametrize("n", [1, 2, 3, 4, 7, 12])
def test_de_morgan(n):
    c = Chain(n)
    for x in c.universe:
        for y in c.universe:
            assert x.join(y).neg() == x.neg().meet(y.neg())


@pytest.mark.parametrize("n", range(1, 16))
def test_plus_is_neg_dual_of_star(n):
    for x in Chain(n).universe:
        assert x.plus() == x.neg().star().neg()


@pytest.mark.parametrize("n", range(1, 16))
def test_star_below_identity_below_plus(n):
    for x in Chain(n).universe:
        assert x.star() <= x <= x.plus()
        if x.is_positive():
            assert (x.star() == x) == (x == Chain(n).top)


@pytest.mark.parametrize("n", range(1, 21))
def test_residuation(n):
    c = Chain(n)
    for x in c.universe:
        for y in c.universe:
            for z in c.universe:
                assert (x.luk_conj(y) <= z) == (x <= y.luk_imp(z))


def test_mixed_chains_rejected():
    with pytest.raises(MixedChains):
        Chain(3).elem(1).join(Chain(5).elem(1))
    with pytest.raises(MixedChains):
        Chain(3).elem(1) < Chain(5).elem(1)


def test_ambient_rendering():
    assert str(ChainElem(2, 4)) == "2/4"
    assert str(ChainElem(0, 4)) == "0"
    assert str(ChainElem(4, 4)) == "1"


def test_constructor_guards():
    with pytest.raises(ValueError):
        Chain(0)
    with pytest.raises(ValueError):
        ChainElem(5, 4)
    with pytest.raises(ValueError):
        ChainElem(-1, 4)
