"""Exact upper-half-plane points (p + sqrt(D))/q and base-point geometry.

Every positive definite form owns one root in the upper half plane; the
functions here move back and forth between forms and those points without
ever leaving integer/rational arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .forms import QuadraticForm


def _strip_square_factors(p: int, q: int, d: int) -> tuple[int, int, int]:
    # Divide p, q by a prime f whenever f*f also divides d; the endpoint
    # of this greedy loop is the unique minimal representative.
    g = math.gcd(p, q)
    f = 2
    while f * f <= g:
        if g % f == 0:
            ff = f * f
            while g % f == 0 and d % ff == 0:
                p //= f
                q //= f
                d //= ff
                g //= f
            while g % f == 0:
                g //= f
        f += 1
    if g > 1 and d % (g * g) == 0:
        p //= g
        q //= g
        d //= g * g
    return p, q, d


@dataclass(frozen=True, eq=False)
class AlgebraicPoint:
    """The point (p + sqrt(D))/q with D < 0 and q > 0, so Im > 0 always.

    Stored triples are normalized (square factors common to p, q, D
    stripped); equality and hashing go through the exact rational pair
    (Re, |z|^2) and are therefore representation independent.
    """

    p: int
    q: int
    D: int

    def __post_init__(self) -> None:
        if self.q <= 0:
            raise ValueError("denominator q must be positive")
        if self.D >= 0:
            raise ValueError("radicand D must be negative")
        p, q, d = _strip_square_factors(self.p, self.q, self.D)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "D", d)

    @classmethod
    def parse(cls, text: str) -> AlgebraicPoint:
        parts = text.split(",")
        if len(parts) != 3:
            raise ValueError(f"expected 'p,q,D', got {text!r}")
        return cls(int(parts[0]), int(parts[1]), int(parts[2]))

    def __str__(self) -> str:
        return f"{self.p},{self.q},{self.D}"

    def re(self) -> Fraction:
        return Fraction(self.p, self.q)

    def im_sq(self) -> Fraction:
        return Fraction(-self.D, self.q * self.q)

    def abs_sq(self) -> Fraction:
        return Fraction(self.p * self.p - self.D, self.q * self.q)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraicPoint):
            return NotImplemented
        return (
            self.p * other.q == other.p * self.q
            and self.D * other.q * other.q == other.D * self.q * self.q
        )

    def __hash__(self) -> int:
        return hash((Fraction(self.p, self.q), Fraction(self.D, self.q * self.q)))


def base_point(form: QuadraticForm) -> AlgebraicPoint:
    """The root (b + sqrt(disc))/(2a) of form in the upper half plane."""
    if not form.is_positive_definite():
        raise ValueError("base point defined only for positive definite forms")
    return AlgebraicPoint(form.b, 2 * form.a, form.discriminant())


def form_from_point(z: AlgebraicPoint) -> tuple[QuadraticForm, Fraction]:
    """Invert base_point: the primitive integral form with root z.

    Returns (G, scale) where scale * G is the monic-at-c normalization
    [1/|z|^2, 2 Re(z)/|z|^2, 1]. G has positive leading coefficient and
    base_point(G) == z.
    """
    norm_num = z.p * z.p - z.D  # q^2 * |z|^2, positive
    aa = z.q * z.q
    bb = 2 * z.p * z.q
    cc = norm_num
    g = math.gcd(aa, math.gcd(bb, cc))
    return QuadraticForm(aa // g, bb // g, cc // g), Fraction(g, norm_num)


def in_fundamental_domain_pi(z: AlgebraicPoint) -> bool:
    """Closed fundamental region of the rotation subgroup: |Re| <= 1/2, |z| >= 1."""
    return 2 * abs(z.p) <= z.q and z.p * z.p - z.D >= z.q * z.q


def in_fundamental_domain_pibar(z: AlgebraicPoint) -> bool:
    """Fundamental region of the full extended group, boundary ties included.

    Membership is read off the primitive form of z: reduced with b >= 0,
    which pins 0 <= Re(z) <= 1/2 and |z| >= 1 with the same tie
    conventions as is_reduced.
    """
    form, _ = form_from_point(z)
    return form.b >= 0 and form.is_reduced()
