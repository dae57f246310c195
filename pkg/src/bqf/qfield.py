"""Imaginary quadratic irrationals (a + sqrt(-n))/c closed under PSL(2,Z).

Membership requires c | a^2 + n; the quotient b = (a^2 + n)/c makes each
element carry the integral form [c, -2a, b] of discriminant -4n. Moebius
images of members are members again, and orbit exploration pairs with the
form-equivalence test as a cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .forms import QuadraticForm
from .group import GroupElement, generator_element
from .points import AlgebraicPoint
from .reduction import equivalent


@dataclass(frozen=True)
class QuadFieldElement:
    """The point (a + sqrt(-n))/c with n > 0, c != 0 and c | a^2 + n.

    A negative c is absorbed by negating both a and c, so stored elements
    always sit in the upper half plane. Text format "a/c/n".
    """

    a: int
    c: int
    n: int

    def __post_init__(self) -> None:
        if self.n <= 0:
            raise ValueError("n must be a positive integer")
        if self.c == 0:
            raise ValueError("denominator c must be nonzero")
        if (self.a * self.a + self.n) % self.c != 0:
            raise ValueError("c must divide a^2 + n")
        if self.c < 0:
            object.__setattr__(self, "a", -self.a)
            object.__setattr__(self, "c", -self.c)

    @property
    def b(self) -> int:
        return (self.a * self.a + self.n) // self.c

    @classmethod
    def parse(cls, text: str) -> QuadFieldElement:
        parts = text.split("/")
        if len(parts) != 3:
            raise ValueError(f"expected 'a/c/n', got {text!r}")
        return cls(int(parts[0]), int(parts[1]), int(parts[2]))

    def __str__(self) -> str:
        return f"{self.a}/{self.c}/{self.n}"

    def to_point(self) -> AlgebraicPoint:
        return AlgebraicPoint(self.a, self.c, -self.n)


def membership(
    a: int, c: int, n: int, primitive_only: bool = False
) -> QuadFieldElement | None:
    """The element (a + sqrt(-n))/c if the divisibility test passes.

    With primitive_only, additionally require gcd(a, b, c) = 1 for the
    derived b.
    """
    if n <= 0:
        raise ValueError("n must be a positive integer")
    if c == 0 or (a * a + n) % c != 0:
        return None
    if primitive_only and math.gcd(a, (a * a + n) // c, c) != 1:
        return None
    return QuadFieldElement(a, c, n)


def norm(alpha: QuadFieldElement) -> Fraction:
    """Field norm alpha * conj(alpha) = (a^2 + n)/c^2, equal to b/c."""
    return Fraction(alpha.a * alpha.a + alpha.n, alpha.c * alpha.c)


def element_form(alpha: QuadFieldElement) -> QuadraticForm:
    """The attached integral form [c, -2a, b]; discriminant -4n.

    The canonical c > 0 keeps the leading coefficient positive, so the
    form is positive definite.
    """
    return QuadraticForm(alpha.c, -2 * alpha.a, alpha.b)


def act(g: GroupElement, alpha: QuadFieldElement) -> QuadFieldElement:
    """Exact Moebius image of alpha; defined for determinant +1 only.

    The numerator and denominator data stay divisible by c, so closure is
    re-verified by the membership arithmetic on every call.
    """
    if g.det == -1:
        raise ValueError("the quadratic irrational action is restricted to determinant +1")
    a, c, n = alpha.a, alpha.c, alpha.n
    m = g.r * a + g.s * c
    k = g.t * a + g.u * c
    top = m * k + g.r * g.t * n
    bottom = k * k + g.t * g.t * n
    return QuadFieldElement(top // c, bottom // c, n)


def orbit_explore(
    alpha: QuadFieldElement, depth: int, max_depth: int = 12
) -> set[QuadFieldElement]:
    """Breadth-first orbit over generator words in T, U, U^2 up to depth."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if depth > max_depth:
        raise ValueError(f"depth {depth} exceeds the configured maximum {max_depth}")
    gens = [generator_element(ch) for ch in "TUV"]
    seen = {alpha}
    frontier = [alpha]
    for _ in range(depth):
        grown: list[QuadFieldElement] = []
        for el in frontier:
            for g in gens:
                image = act(g, el)
                if image not in seen:
                    seen.add(image)
                    grown.append(image)
        if not grown:
            break
        frontier = grown
    return seen


@dataclass(frozen=True)
class SameOrbitReport:
    """Both sides of the orbit/form-equivalence comparison.

    reachable True with forms_equivalent False would be a genuine
    violation; the converse only means the search depth was too small.
    """

    alpha_form: QuadraticForm
    beta_form: QuadraticForm
    forms_equivalent: bool
    reachable: bool
    depth: int

    @property
    def violation(self) -> bool:
        return self.reachable and not self.forms_equivalent

    @property
    def possibly_truncated(self) -> bool:
        return self.forms_equivalent and not self.reachable

    @property
    def consistent(self) -> bool:
        return not self.violation


def same_orbit_form_check(
    alpha: QuadFieldElement, beta: QuadFieldElement, depth: int
) -> SameOrbitReport:
    """Compare BFS reachability of beta from alpha against form equivalence."""
    if alpha.n != beta.n:
        raise ValueError("elements lie over different n")
    fa = element_form(alpha)
    fb = element_form(beta)
    forms_equivalent = equivalent(fa, fb, "proper") is not None
    reachable = beta in orbit_explore(alpha, depth)
    return SameOrbitReport(fa, fb, forms_equivalent, reachable, depth)
