from fractions import Fraction

import pytest

from fockschur import BasisConfig, Scalar


@pytest.fixture
def rotation_basis_2():
    """Real rational rotation, exactly orthonormal."""
    c = Fraction(3, 5)
    s = Fraction(4, 5)
    rows = [[c, s], [-s, c]]
    return BasisConfig(2, F=rows, G=rows)


@pytest.fixture
def complex_basis_2():
    """Exactly unitary with Gaussian-rational entries."""
    a = Scalar(0, Fraction(3, 5))
    b = Scalar(Fraction(4, 5))
    rows = [[a, b], [-b, -a]]
    return BasisConfig(2, F=rows, G=[[Scalar(0, 1), Scalar(0)], [Scalar(0), Scalar(1)]])


@pytest.fixture
def rotation_basis_3():
    """Rational rotation in modes 1..2, identity on mode 3."""
    c = Fraction(5, 13)
    s = Fraction(12, 13)
    rows = [[c, s, 0], [-s, c, 0], [0, 0, 1]]
    return BasisConfig(3, F=rows, G=rows)
