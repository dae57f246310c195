"""Gauss reduction of positive definite forms, with explicit witnesses."""

from __future__ import annotations

from dataclasses import dataclass

from .forms import QuadraticForm
from .group import (
    IDENTITY,
    R,
    T,
    GroupElement,
    _translation,
    _translation_word,
    act_on_form,
    compose,
    inverse,
    normalize_word,
)


@dataclass(frozen=True)
class ReductionResult:
    """Reduced form plus the group element carrying the input onto it.

    act_on_form(witness, original) == reduced, word multiplies out to
    witness mod sign, steps counts elementary moves.
    """

    reduced: QuadraticForm
    witness: GroupElement
    word: str
    steps: int


def reduce_form(form: QuadraticForm) -> ReductionResult:
    """Reduce by alternating translations and swaps; always terminates.

    Translation by (TU)^m moves b into the half-open window (-a, a], which
    settles the b == -a tie on its own; the swap T exchanges the outer
    coefficients when a > c, or when a == c with b < 0 to settle the other
    tie. Content is linear through every move, so imprimitive forms reduce
    to their content times a reduced form with the same witness.
    """
    if not form.is_positive_definite():
        raise ValueError("only positive definite forms can be reduced")
    a, b, c = form.a, form.b, form.c
    witness = IDENTITY
    pieces: list[str] = []
    steps = 0
    while True:
        if not -a < b <= a:
            m = -((a - b) // (2 * a))  # ceil((b - a) / (2a))
            c = a * m * m - b * m + c
            b = b - 2 * a * m
            witness = compose(_translation(m), witness)
            pieces.append(_translation_word(m))
            steps += 1
        elif a > c or (a == c and b < 0):
            a, b, c = c, -b, a
            witness = compose(T, witness)
            pieces.append("T")
            steps += 1
        else:
            break
    word = normalize_word("".join(reversed(pieces)))
    return ReductionResult(QuadraticForm(a, b, c), witness, word, steps)


def equivalent(
    form: QuadraticForm, other: QuadraticForm, mode: str = "proper"
) -> GroupElement | None:
    """Witness g with act_on_form(g, other) == form, or None.

    "proper" searches the determinant +1 orbit; "extended" also allows a
    reflection, in which case the witness has determinant -1.
    """
    if mode not in ("proper", "extended"):
        raise ValueError(f"mode must be 'proper' or 'extended', got {mode!r}")
    if not form.is_positive_definite() or not other.is_positive_definite():
        raise ValueError("equivalence test requires positive definite forms")
    if form.discriminant() != other.discriminant():
        return None
    rf = reduce_form(form)
    ro = reduce_form(other)
    if rf.reduced == ro.reduced:
        return compose(inverse(rf.witness), ro.witness)
    if mode == "extended":
        rm = reduce_form(other.mirror())
        if rf.reduced == rm.reduced:
            return compose(compose(inverse(rf.witness), rm.witness), R)
    return None


def minimum_represented(form: QuadraticForm) -> int:
    """Smallest positive integer the form takes on (x, y) != (0, 0)."""
    return reduce_form(form).reduced.a
