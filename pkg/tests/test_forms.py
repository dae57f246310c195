"""Coefficient-level behaviour of integral binary quadratic forms."""

import random

import pytest

from bqf import QuadraticForm

from helpers import random_positive_definite


def test_parse_round_trip():
    f = QuadraticForm.parse("11,49,55")
    assert f == QuadraticForm(11, 49, 55)
    assert str(f) == "11,49,55"
    assert QuadraticForm.parse(" 2 , -1 , 3 ") == QuadraticForm(2, -1, 3)


@pytest.mark.parametrize("text", ["", "1,2", "1,2,3,4", "1,x,3", "1;2;3"])
def test_parse_rejects_malformed(text):
    with pytest.raises(ValueError):
        QuadraticForm.parse(text)


def test_discriminant_examples():
    assert QuadraticForm(1, 0, 1).discriminant() == -4
    assert QuadraticForm(1, 1, 1).discriminant() == -3
    assert QuadraticForm(11, 49, 55).discriminant() == -19
    assert QuadraticForm(2, 1, 3).discriminant() == -23
    assert QuadraticForm(1, 0, -1).discriminant() == 4


def test_discriminant_completes_the_square():
    # 4a*f(x, y) == (2ax + by)^2 - disc(f) * y^2 identically
    rng = random.Random(0xF0)
    for _ in range(300):
        f = QuadraticForm(*(rng.randint(-40, 40) for _ in range(3)))
        for x, y in ((1, 0), (0, 1), (1, 1), (2, -3), (-5, 4)):
            lhs = 4 * f.a * f.evaluate(x, y)
            rhs = (2 * f.a * x + f.b * y) ** 2 - f.discriminant() * y * y
            assert lhs == rhs


def test_evaluate_examples():
    assert QuadraticForm(1, 0, 1).evaluate(3, 4) == 25
    assert QuadraticForm(2, -1, 3).evaluate(1, 1) == 4
    assert QuadraticForm(11, 49, 55).evaluate(1, -1) == 17
    assert QuadraticForm(5, 3, -2).evaluate(0, 0) == 0


def test_content_and_primitivity():
    assert QuadraticForm(4, 6, 10).content() == 2
    assert QuadraticForm(4, 6, 10).is_primitive() is False
    assert QuadraticForm(2, 1, 3).content() == 1
    assert QuadraticForm(2, 1, 3).is_primitive() is True
    assert QuadraticForm(0, 0, 7).content() == 7
    assert QuadraticForm(-4, 0, -8).content() == 4


def test_content_of_zero_form_rejected():
    with pytest.raises(ValueError):
        QuadraticForm(0, 0, 0).content()


def test_positive_definite():
    assert QuadraticForm(1, 0, 1).is_positive_definite()
    assert QuadraticForm(2, -1, 3).is_positive_definite()
    assert not QuadraticForm(1, 3, 1).is_positive_definite()  # disc 5 > 0
    assert not QuadraticForm(-1, 0, -1).is_positive_definite()
    assert not QuadraticForm(0, 0, 1).is_positive_definite()
    assert not QuadraticForm(1, 2, 1).is_positive_definite()  # disc 0


def test_positive_definite_means_positive_values():
    rng = random.Random(0xF1)
    for _ in range(200):
        f = random_positive_definite(rng, max_coeff=50)
        assert f.is_positive_definite()
        for _ in range(10):
            x, y = rng.randint(-8, 8), rng.randint(-8, 8)
            if (x, y) != (0, 0):
                assert f.evaluate(x, y) > 0


def test_almost_reduced_and_reduced():
    assert QuadraticForm(2, 1, 3).is_reduced()
    assert QuadraticForm(2, -1, 3).is_reduced()
    assert QuadraticForm(1, 1, 1).is_reduced()
    assert QuadraticForm(3, 3, 5).is_reduced()
    # border cases: reduced forbids b = -a and a = c with b < 0
    assert QuadraticForm(3, -3, 5).is_almost_reduced()
    assert not QuadraticForm(3, -3, 5).is_reduced()
    assert QuadraticForm(2, -1, 2).is_almost_reduced()
    assert not QuadraticForm(2, -1, 2).is_reduced()
    assert QuadraticForm(2, 1, 2).is_reduced()
    # |b| <= a <= c fails
    assert not QuadraticForm(3, 4, 5).is_almost_reduced()
    assert not QuadraticForm(5, 1, 3).is_almost_reduced()
    assert not QuadraticForm(1, 3, 1).is_almost_reduced()


def test_reduced_implies_almost_reduced():
    rng = random.Random(0xF2)
    for _ in range(500):
        f = QuadraticForm(*(rng.randint(-9, 9) for _ in range(3)))
        if f.is_reduced():
            assert f.is_almost_reduced()


def test_mirror():
    assert QuadraticForm(2, 1, 3).mirror() == QuadraticForm(2, -1, 3)
    f = QuadraticForm(11, 49, 55)
    assert f.mirror().mirror() == f
    assert f.mirror().discriminant() == f.discriminant()


def test_ordering_and_hash():
    forms = {QuadraticForm(1, 0, 1), QuadraticForm(1, 0, 1), QuadraticForm(1, 1, 1)}
    assert len(forms) == 2
    assert QuadraticForm(1, 0, 1) < QuadraticForm(1, 1, 1) < QuadraticForm(2, -1, 3)
