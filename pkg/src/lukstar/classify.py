"""Number-theoretic classification of chain sizes.

An odd prime n belongs to the class Pi when no exponent m with
0 < m < (n-1)/2 has 2^m congruent to +-1 mod n; these are exactly the sizes
whose square-and-negation chain recovers the full Lukasiewicz structure
(together with the two small exceptions n = 2 and n = 4).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional


def is_prime(n: int) -> bool:
    """Deterministic trial division; desk scale only."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PiVerdict:
    n: int
    in_pi: bool
    witness_m: Optional[int] = None  # least 0 < m < (n-1)/2 with 2^m = +-1 mod n
    sign: Optional[int] = None  # +1 or -1, the congruence the witness hits

    def to_dict(self) -> dict:
        d = {"n": self.n, "in_pi": self.in_pi}
        if self.witness_m is not None:
            d["witness_m"] = self.witness_m
            d["sign"] = self.sign
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def in_pi(n: int) -> PiVerdict:
    """Decide membership of n in Pi; witness attached for odd primes outside."""
    assert n >= 2
    if n == 2 or not is_prime(n):
        return PiVerdict(n, False)
    # Fermat's little theorem: 2^((n-1)/2) is +-1 mod n for every odd prime.
    assert pow(2, (n - 1) // 2, n) in (1, n - 1)
    p = 1
    for m in range(1, (n - 1) // 2):
        p = (2 * p) % n
        if p == 1:
            return PiVerdict(n, False, witness_m=m, sign=1)
        if p == n - 1:
            return PiVerdict(n, False, witness_m=m, sign=-1)
    return PiVerdict(n, True)


def is_fermat_prime(n: int) -> bool:
    """Primes of the form 2^(2^m) + 1, i.e. odd primes with n-1 a power of two."""
    assert n >= 2
    return n >= 3 and is_prime(n) and (n - 1) & (n - 2) == 0


def term_equivalent(n: int) -> bool:
    """Whether the square-and-negation reduct defines the whole chain.

    n = 2 and n = 4 are the hard-coded small cases; odd n follows the Pi
    criterion; even n > 4 always has the proper subalgebra generated by 1/2.
    """
    assert n >= 2
    if n == 2 or n == 4:
        return True
    if n % 2 == 0:
        return False
    return in_pi(n).in_pi


def pi_below(limit: int) -> list:
    """Ascending members of Pi strictly below limit."""
    assert limit >= 3
    return [n for n in range(3, limit) if in_pi(n).in_pi]


def classification(n: int) -> dict:
    """The combined verdict used by the CLI."""
    verdict = in_pi(n)
    out = {
        "n": n,
        "prime": is_prime(n),
        "in_pi": verdict.in_pi,
        "term_equivalent": term_equivalent(n),
        "fermat": is_fermat_prime(n),
    }
    if verdict.witness_m is not None:
        out["witness_m"] = verdict.witness_m
        out["sign"] = verdict.sign
    return out
