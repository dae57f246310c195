"""The extended modular group and its actions.

Elements are 2x2 integer matrices (r s / t u) of determinant +-1 taken
modulo global sign. Generators: the inversion T, the order-3 rotation U,
and the reflection R (determinant -1). Words over the letters R, T, U, V
(V stands for U^2) multiply left to right.

Convention fixed here once and for all: points transform by
z -> (r z + s)/(t z + u) for determinant +1 and by the same fraction in
-conj(z) composed with the reflection for determinant -1, while forms
transform by the adjugate substitution (X, Y) -> (uX - sY, -tX + rY).
That substitution gives a genuine left action, g(hF) = (gh)F, for both
determinant signs, and the two actions are intertwined by base_point via
the diagonal conjugate returned by base_point_transform.
"""

from __future__ import annotations

from dataclasses import dataclass

from .forms import QuadraticForm
from .points import AlgebraicPoint

LETTERS = "RTUV"


@dataclass(frozen=True)
class GroupElement:
    """Matrix (r s / t u) with ru - st = +-1, stored modulo sign.

    The canonical representative has t > 0, or t == 0 and u > 0; equality
    and hashing compare canonical representatives. Text format "r,s;t,u".
    """

    r: int
    s: int
    t: int
    u: int

    def __post_init__(self) -> None:
        if self.det not in (1, -1):
            raise ValueError("matrix must have determinant +1 or -1")
        if self.t < 0 or (self.t == 0 and self.u < 0):
            object.__setattr__(self, "r", -self.r)
            object.__setattr__(self, "s", -self.s)
            object.__setattr__(self, "t", -self.t)
            object.__setattr__(self, "u", -self.u)

    @property
    def det(self) -> int:
        return self.r * self.u - self.s * self.t

    @classmethod
    def parse(cls, text: str) -> GroupElement:
        rows = text.split(";")
        if len(rows) != 2:
            raise ValueError(f"expected 'r,s;t,u', got {text!r}")
        top = rows[0].split(",")
        bottom = rows[1].split(",")
        if len(top) != 2 or len(bottom) != 2:
            raise ValueError(f"expected 'r,s;t,u', got {text!r}")
        return cls(int(top[0]), int(top[1]), int(bottom[0]), int(bottom[1]))

    def __str__(self) -> str:
        return f"{self.r},{self.s};{self.t},{self.u}"

    def __mul__(self, other: GroupElement) -> GroupElement:
        return compose(self, other)


IDENTITY = GroupElement(1, 0, 0, 1)
T = GroupElement(0, -1, 1, 0)   # z -> -1/z
U = GroupElement(0, -1, 1, 1)   # z -> -1/(z + 1)
V = GroupElement(-1, -1, 1, 0)  # U^2
R = GroupElement(1, 0, 0, -1)   # z -> -conj(z)

_GENERATORS = {"R": R, "T": T, "U": U, "V": V}


def generator_element(letter: str) -> GroupElement:
    try:
        return _GENERATORS[letter]
    except KeyError:
        raise ValueError(f"unknown generator letter {letter!r}") from None


def compose(g: GroupElement, h: GroupElement) -> GroupElement:
    """Matrix product g*h (apply h first when acting on the left)."""
    return GroupElement(
        g.r * h.r + g.s * h.t,
        g.r * h.s + g.s * h.u,
        g.t * h.r + g.u * h.t,
        g.t * h.s + g.u * h.u,
    )


def inverse(g: GroupElement) -> GroupElement:
    # The adjugate is the inverse up to the sign det, which vanishes mod +-1.
    return GroupElement(g.u, -g.s, -g.t, g.r)


def act_on_form(g: GroupElement, form: QuadraticForm) -> QuadraticForm:
    """Left action of g on a form; preserves discriminant and definiteness.

    Substitutes (X, Y) -> (uX - sY, -tX + rY), i.e. composes the form with
    the adjugate matrix. Valid for both determinant signs; R acts as the
    mirror [a, -b, c].
    """
    a, b, c = form.a, form.b, form.c
    r, s, t, u = g.r, g.s, g.t, g.u
    aa = a * u * u - b * u * t + c * t * t
    bb = -2 * a * u * s + b * (r * u + s * t) - 2 * c * t * r
    cc = a * s * s - b * s * r + c * r * r
    return QuadraticForm(aa, bb, cc)


def act_on_point(g: GroupElement, z: AlgebraicPoint) -> AlgebraicPoint:
    """Exact Moebius action on upper-half-plane points.

    det +1: z -> (rz + s)/(tz + u); det -1: the same fraction evaluated at
    conj(z), which realizes R as z -> -conj(z) and keeps Im > 0. The sqrt
    coefficient comes out as +q times the determinant squared, so both
    cases collapse to one integer formula.
    """
    p, q, d = z.p, z.q, z.D
    m = g.r * p + g.s * q
    n = g.t * p + g.u * q
    return AlgebraicPoint(m * n - g.r * g.t * d, n * n - g.t * g.t * d, q * q * d)


def base_point_transform(g: GroupElement) -> GroupElement:
    """The point map matching the form action of g.

    base_point(act_on_form(g, F)) == act_on_point(base_point_transform(g), base_point(F));
    concretely the conjugate of g by diag(1, -1), a group automorphism.
    """
    return GroupElement(g.r, -g.s, -g.t, g.u)


def _translation(m: int) -> GroupElement:
    return GroupElement(1, m, 0, 1)


def _translation_word(m: int) -> str:
    # TU is the translation z -> z + 1, VT its inverse.
    return "TU" * m if m >= 0 else "VT" * (-m)


def word_to_element(word: str) -> GroupElement:
    """Multiply out a word over R, T, U, V left to right."""
    g = IDENTITY
    for ch in word:
        g = compose(g, generator_element(ch))
    return g


# Conjugation by R, as words: R X R for each letter X.
_R_PUSH = {"T": "T", "U": "TVT", "V": "TUT"}


def normalize_word(word: str) -> str:
    """Rewrite a word to canonical form using the defining relations.

    R^2, T^2 and U^3 collapse to the empty word; R commutes with T and
    conjugates U, V to the parabolic words T V T, T U T, so it bubbles to
    the front. The result has at most one R, in front, followed by letters
    alternating between T and {U, V}; it is the unique such word for the
    element.
    """
    stack: list[str] = []
    pending = [ch for ch in reversed(word)]
    for ch in pending:
        if ch not in LETTERS:
            raise ValueError(f"unknown generator letter {ch!r}")
    while pending:
        ch = pending.pop()
        if not stack:
            stack.append(ch)
            continue
        pair = stack[-1] + ch
        if pair in ("RR", "TT", "UV", "VU"):
            stack.pop()
        elif pair == "UU":
            stack.pop()
            pending.append("V")
        elif pair == "VV":
            stack.pop()
            pending.append("U")
        elif ch == "R":
            # bubble R toward the front through the relations
            top = stack.pop()
            pending.extend(reversed(_R_PUSH[top]))
            pending.append("R")
        else:
            stack.append(ch)
    return "".join(stack)


def element_to_word(g: GroupElement) -> str:
    """Express g as a normalized word in the generators.

    A determinant -1 element gets a leading R; the rotation part is
    decomposed by Euclidean descent on the bottom row, emitting
    translations (TU)^m and inversions T until the row is (0, 1).
    """
    letters: list[str] = []
    x = g
    if x.det == -1:
        letters.append("R")
        x = compose(R, x)
    while x.t != 0:
        q = x.r // x.t
        m = q if abs(x.r - q * x.t) <= abs(x.r - (q + 1) * x.t) else q + 1
        letters.append(_translation_word(m))
        letters.append("T")
        x = compose(T, compose(_translation(-m), x))
    # canonical sign leaves x = (1, s; 0, 1)
    letters.append(_translation_word(x.s))
    return normalize_word("".join(letters))
