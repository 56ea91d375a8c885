import pytest

from lukstar import (
    BoundaryElement, BoundExceeded, Chain, Subalgebra, all_subalgebras,
    generated, generated_by_set, is_strictly_simple, is_strictly_simple_sub,
    run_p,
)


def nums(s):
    return [x.num for x in s.elems]


def test_run_p_fixtures():
    c = Chain(9)
    ps = run_p(c, c.elem(8))
    assert [x.num for x in ps.seq] == [8, 7, 5, 1]
    c = Chain(5)
    ps = run_p(c, c.elem(4))
    assert [x.num for x in ps.seq] == [4, 3, 1]
    c = Chain(3)
    ps = run_p(c, c.elem(2))
    assert [x.num for x in ps.seq] == [2, 1]
    assert ps.loop_target == 1


def test_run_p_midpoint_self_loop():
    c = Chain(2)
    ps = run_p(c, c.elem(1))
    assert [x.num for x in ps.seq] == [1]
    assert ps.loop_target == 1
    assert ps.ops == ("inv",)


def test_run_p_boundary_rejected():
    c = Chain(7)
    with pytest.raises(BoundaryElement):
        run_p(c, c.bottom)
    with pytest.raises(BoundaryElement):
        run_p(c, c.top)


@pytest.mark.parametrize("n", range(2, 41))
def test_run_p_length_bound(n):
    c = Chain(n)
    for x in c.universe[1:-1]:
        assert len(run_p(c, x).seq) <= n - 1


def test_generated_fixtures():
    assert nums(generated(Chain(9), Chain(9).elem(8))) == [0, 1, 2, 4, 5, 7, 8, 9]
    assert nums(generated(Chain(17), Chain(17).elem(16))) == [
        0, 1, 2, 4, 8, 9, 13, 15, 16, 17]
    for n in (1, 5, 8):
        c = Chain(n)
        assert nums(generated(c, c.top)) == [0, n]
        assert nums(generated(c, c.bottom)) == [0, n]


@pytest.mark.parametrize("n", range(2, 31))
def test_generated_invariant_under_negation(n):
    c = Chain(n)
    for x in c.universe[1:-1]:
        assert generated(c, x) == generated(c, x.neg())


def test_generated_by_set_examples():
    c = Chain(4)
    assert nums(generated_by_set(c, [c.elem(2)])) == [0, 2, 4]
    assert nums(generated_by_set(c, [])) == [0, 4]


@pytest.mark.parametrize("n", range(2, 13))
def test_singleton_closure_agrees_with_run_p(n):
    c = Chain(n)
    for x in c.universe[1:-1]:
        assert generated_by_set(c, [x]) == generated(c, x)


def test_all_subalgebras_small():
    assert [nums(s) for s in all_subalgebras(Chain(2))] == [[0, 2], [0, 1, 2]]
    assert [nums(s) for s in all_subalgebras(Chain(3))] == [[0, 3], [0, 1, 2, 3]]
    four = [nums(s) for s in all_subalgebras(Chain(4))]
    assert [0, 2, 4] in four and [0, 1, 2, 3, 4] in four


@pytest.mark.parametrize("n", range(1, 11))
def test_all_subalgebras_closed_and_distinct(n):
    subs = all_subalgebras(Chain(n))
    seen = set()
    for s in subs:
        key = tuple(nums(s))
        assert key not in seen
        seen.add(key)
        members = set(s.elems)
        for x in s.elems:
            assert x.neg() in members and x.star() in members


def test_all_subalgebras_bound():
    with pytest.raises(BoundExceeded):
        all_subalgebras(Chain(65))


def test_strictly_simple_fixtures():
    assert is_strictly_simple(Chain(2))
    assert not is_strictly_simple(Chain(17))
    assert not is_strictly_simple(Chain(4))


@pytest.mark.parametrize("n", [n for n in range(2, 61) if n != 4])
def test_coatom_criterion(n):
    c = Chain(n)
    assert is_strictly_simple(c) == (len(generated(c, c.coatom())) == n + 1)


def test_strictly_simple_sub_fixtures():
    six = generated(Chain(5), Chain(5).elem(4))
    assert len(six) == 6 and is_strictly_simple_sub(six)
    trivial = generated(Chain(7), Chain(7).top)
    assert is_strictly_simple_sub(trivial)
    full18 = generated_by_set(Chain(17), Chain(17).universe)
    assert not is_strictly_simple_sub(full18)
    # the half-point generates a proper subalgebra of the 5-element chain
    full5 = generated_by_set(Chain(4), Chain(4).universe)
    assert not is_strictly_simple_sub(full5)
    mid = generated(Chain(4), Chain(4).elem(2))
    assert is_strictly_simple_sub(mid)


@pytest.mark.parametrize("n", range(3, 302, 2))
def test_coatom_run_ends_at_atom(n):
    c = Chain(n)
    assert run_p(c, c.coatom()).seq[-1] == c.atom()


@pytest.mark.parametrize("n", range(2, 61))
def test_divisor_images_are_closed(n):
    c = Chain(n)
    for m in range(1, n):
        if n % m == 0:
            image = {c.elem(k * (n // m)) for k in range(m + 1)}
            assert all(x.neg() in image and x.star() in image for x in image)


def test_json_round_trip():
    s = generated(Chain(9), Chain(9).elem(8))
    assert Subalgebra.from_json(s.to_json()) == s
    assert '"n": 9' in s.to_json()
