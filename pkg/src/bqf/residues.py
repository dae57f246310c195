"""Legendre symbols, quadratic residue sets, and the scaled-form criteria."""

from __future__ import annotations

import functools
import math
import random

_MR_BASES_SMALL = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_EXTRA_ROUNDS = 40  # error < 4^-40 < 2^-80 for large candidates


def _miller_rabin(n: int, base: int) -> bool:
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    x = pow(base, d, n)
    if x in (1, n - 1):
        return True
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Miller-Rabin: deterministic below 2^64, else 40 extra rounds with
    bases seeded from n (error below 2^-80)."""
    if n < 2:
        return False
    for p in _MR_BASES_SMALL:
        if n == p:
            return True
        if n % p == 0:
            return False
    if not all(_miller_rabin(n, b) for b in _MR_BASES_SMALL):
        return False
    if n < 2**64:
        return True
    rng = random.Random(n)
    return all(
        _miller_rabin(n, rng.randrange(2, n - 1)) for _ in range(_MR_EXTRA_ROUNDS)
    )


# cached so sweeps over many values of the same p validate p only once
@functools.lru_cache(maxsize=4096)
def _require_odd_prime(p: int) -> None:
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")


def legendre(value: int, p: int) -> int:
    """Legendre symbol (value/p) by Euler's criterion; 0 when p divides value."""
    _require_odd_prime(p)
    e = pow(value % p, (p - 1) // 2, p)
    if e == 0:
        return 0
    return 1 if e == 1 else -1


def quadratic_residues(p: int) -> set[int]:
    """The (p - 1)/2 nonzero squares mod p."""
    _require_odd_prime(p)
    return {r * r % p for r in range(1, (p - 1) // 2 + 1)}


def residue_complement_law(p: int, a: int) -> bool:
    """Whether p - a is again a residue, for a residue a of p.

    The answer depends only on p mod 4: yes exactly when p = 1 (mod 4).
    The computed truth is checked against that prediction on every call.
    """
    _require_odd_prime(p)
    if legendre(a, p) != 1:
        raise ValueError(f"{a} is not a quadratic residue of {p}")
    computed = legendre(p - a, p) == 1
    if computed != (p % 4 == 1):
        raise ArithmeticError("complement law mismatch; unreachable for odd primes")
    return computed


def scaled_form_criterion(value: int, p: int) -> bool:
    """Residue test (value/p) == 1 for representing value by X^2 + p Y^2 mod p."""
    return legendre(value, p) == 1


def scaled_representation_oracle(
    value: int, p: int, bound: int
) -> tuple[int, int] | None:
    """Search |r|, |t| <= bound for r^2 + p t^2 == value; None if absent.

    Exhaustive only within the bound: a True criterion need not produce
    a witness (the search is over integers, capped at 10^4).
    """
    _require_odd_prime(p)
    if not 1 <= bound <= 10_000:
        raise ValueError("bound must be between 1 and 10000")
    if value < 0:
        return None
    t_max = min(bound, math.isqrt(value // p))
    for t in range(t_max + 1):
        rest = value - p * t * t
        r = math.isqrt(rest)
        if r <= bound and r * r == rest:
            return (r, t)
    return None
