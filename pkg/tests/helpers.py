"""Shared generators for the randomized tests."""

import math

from bqf import QuadraticForm, word_to_element


def random_positive_definite(rng, max_coeff=10**6):
    a = rng.randint(1, max_coeff)
    c = rng.randint(1, max_coeff)
    b_max = min(max_coeff, math.isqrt(4 * a * c - 1))
    b = rng.randint(-b_max, b_max)
    return QuadraticForm(a, b, c)


def random_primitive_positive_definite(rng, max_coeff=10**6):
    f = random_positive_definite(rng, max_coeff)
    g = f.content()
    return QuadraticForm(f.a // g, f.b // g, f.c // g)


def random_element(rng, length=20):
    return word_to_element("".join(rng.choice("RTUV") for _ in range(length)))


def random_skewed_form(rng, max_coeff=10**6):
    # walk a small form away from reduced shape while staying under the cap;
    # exercises long reduction chains that uniform sampling rarely hits
    from bqf import act_on_form, generator_element

    form = random_positive_definite(rng, max_coeff=40)
    while True:
        g = random_element(rng, rng.randint(1, 4))
        if g.det == -1:
            continue
        moved = act_on_form(g, form)
        if max(moved.a, abs(moved.b), moved.c) > max_coeff:
            return form
        form = moved
