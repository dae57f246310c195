"""Enumeration of reduced forms and class numbers for negative discriminants."""

from __future__ import annotations

from .forms import QuadraticForm


def validate_discriminant(delta: int) -> None:
    """Admissible discriminants are negative and congruent to 0 or 1 mod 4."""
    if delta >= 0 or delta % 4 not in (0, 1):
        raise ValueError(
            f"invalid discriminant {delta}: need delta < 0 and delta = 0 or 1 (mod 4)"
        )


def _candidates(delta: int):
    # b runs over the parity class of delta with |b| <= a <= sqrt(-delta/3);
    # c is forced by the discriminant and must be integral and >= a.
    a = 1
    while 3 * a * a <= -delta:
        b = -a if (a + delta) % 2 == 0 else -a + 1
        while b <= a:
            num = b * b - delta
            if num % (4 * a) == 0:
                c = num // (4 * a)
                if c >= a:
                    yield QuadraticForm(a, b, c)
            b += 2
        a += 1


def enumerate_reduced(delta: int, primitive_only: bool = False) -> list[QuadraticForm]:
    """All reduced forms of the given discriminant, sorted by (a, b, c)."""
    validate_discriminant(delta)
    out = [
        f
        for f in _candidates(delta)
        if f.is_reduced() and (not primitive_only or f.is_primitive())
    ]
    return sorted(out)


def enumerate_almost_reduced(
    delta: int, primitive_only: bool = False
) -> list[QuadraticForm]:
    """Like enumerate_reduced but keeping both boundary mirrors."""
    validate_discriminant(delta)
    out = [
        f
        for f in _candidates(delta)
        if f.is_almost_reduced() and (not primitive_only or f.is_primitive())
    ]
    return sorted(out)


def class_number(delta: int) -> int:
    """h(delta): the number of primitive reduced forms."""
    return len(enumerate_reduced(delta, primitive_only=True))


def almost_reduced_count(delta: int) -> int:
    """Count of almost reduced forms, primitivity not required."""
    return len(enumerate_almost_reduced(delta))
