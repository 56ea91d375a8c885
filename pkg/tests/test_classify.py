import json

import pytest

from lukstar import (
    Chain, PiVerdict, classification, in_pi, is_fermat_prime, is_prime,
    is_strictly_simple, pi_below, term_equivalent,
)

PI_LIST = [3, 5, 7, 11, 13, 19, 23, 29, 37, 47, 53, 59, 61, 67, 71, 79, 83,
           101, 103, 107, 131, 139, 149, 163, 167, 173, 179, 181, 191, 197, 199]


def test_in_pi_examples():
    assert in_pi(7).in_pi
    v = in_pi(17)
    assert not v.in_pi and v.witness_m == 4 and v.sign == -1
    assert pow(2, v.witness_m, 17) == 16
    v9 = in_pi(9)
    assert not v9.in_pi and v9.witness_m is None


def test_witness_is_least():
    for n in range(3, 300, 2):
        v = in_pi(n)
        if v.witness_m is not None:
            assert pow(2, v.witness_m, n) in (1, n - 1)
            for m in range(1, v.witness_m):
                assert pow(2, m, n) not in (1, n - 1)


def test_fermat_primes():
    assert is_fermat_prime(3)
    assert is_fermat_prime(5)
    assert is_fermat_prime(17)
    assert is_fermat_prime(257)
    assert is_fermat_prime(65537)
    assert not is_fermat_prime(11)
    assert not is_fermat_prime(2)
    assert not is_fermat_prime(9)


def test_fermat_primes_above_five_leave_pi():
    for n in (17, 257, 65537):
        assert not in_pi(n).in_pi


def test_term_equivalent():
    assert term_equivalent(2)
    assert term_equivalent(4)
    assert term_equivalent(5)
    assert not term_equivalent(17)
    for n in (6, 8, 10, 100):
        assert not term_equivalent(n)


def test_pi_below():
    assert pi_below(30) == [3, 5, 7, 11, 13, 19, 23, 29]
    assert pi_below(200) == PI_LIST
    assert len(pi_below(200)) == 31
    assert pi_below(3) == []


def test_fermat_little_theorem_consistency():
    for n in range(3, 200, 2):
        if is_prime(n):
            assert pow(2, (n - 1) // 2, n) in (1, n - 1)


@pytest.mark.parametrize("n", range(3, 32, 2))
def test_cross_module_oracle(n):
    assert term_equivalent(n) == is_strictly_simple(Chain(n))


def test_classification_payload():
    info = classification(17)
    assert info == {"n": 17, "prime": True, "in_pi": False,
                    "term_equivalent": False, "fermat": True,
                    "witness_m": 4, "sign": -1}
    assert json.loads(PiVerdict(7, True).to_json()) == {"n": 7, "in_pi": True}


def test_primality_helper():
    primes = [n for n in range(2, 60) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
