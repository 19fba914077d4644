from fractions import Fraction
from random import Random

import pytest

from slicealg.exact import TwoLocalScalar, v2


def test_construction_invariants():
    x = TwoLocalScalar(6, 9)
    assert x.numerator == 2 and x.denominator == 3
    assert TwoLocalScalar(-5, -15).as_fraction() == Fraction(1, 3)
    with pytest.raises(ValueError):
        TwoLocalScalar(1, 2)
    with pytest.raises(ValueError):
        TwoLocalScalar(3, 6)
    # numerator may be even, that is just positive valuation
    assert TwoLocalScalar(4, 3).valuation() == 2


def test_v2():
    assert v2(1) == 0
    assert v2(40) == 3
    assert v2(Fraction(5, 3)) == 0
    assert v2(Fraction(4, 7)) == 2
    assert v2(TwoLocalScalar(12, 5)) == 2
    with pytest.raises(ValueError):
        v2(0)


def test_units_and_division():
    assert TwoLocalScalar(3, 5).is_unit()
    assert not TwoLocalScalar(2).is_unit()
    assert not TwoLocalScalar(0).is_unit()
    assert TwoLocalScalar(6) / 2 == 3
    assert TwoLocalScalar(6) / TwoLocalScalar(3) == 2
    assert TwoLocalScalar(1) / 3 == Fraction(1, 3)
    with pytest.raises(ValueError):
        TwoLocalScalar(6) / 4
    with pytest.raises(ZeroDivisionError):
        TwoLocalScalar(1) / 0
    # dividing zero is always fine
    assert TwoLocalScalar(0) / 2 == 0


def test_pow():
    assert TwoLocalScalar(3, 5) ** -1 == Fraction(5, 3)
    assert TwoLocalScalar(2) ** 3 == 8
    with pytest.raises(ValueError):
        TwoLocalScalar(2) ** -1


def test_matches_fraction_arithmetic():
    # randomized triples checked against exact rationals
    rng = Random(20240817)
    odd = [1, 3, 5, 7, 9, 11]
    for _ in range(1000):
        xs = []
        fs = []
        for _i in range(3):
            num = rng.randrange(-40, 41)
            den = rng.choice(odd)
            xs.append(TwoLocalScalar(num, den))
            fs.append(Fraction(num, den))
        a, b, c = xs
        fa, fb, fc = fs
        assert (a + b * c).as_fraction() == fa + fb * fc
        assert (a - b).as_fraction() == fa - fb
        assert ((a + b) * c).as_fraction() == (fa + fb) * fc
        for x in (a + b * c, a - b, (a + b) * c):
            assert x.denominator % 2 == 1 and x.denominator > 0
        if fc != 0 and fa != 0 and v2(fc) <= v2(fa):
            assert (a / c).as_fraction() == fa / fc
