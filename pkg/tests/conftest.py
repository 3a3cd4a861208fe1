import pytest

from tracelab.finalg import algebra_from_presentation


@pytest.fixture(scope="session")
def chain_algebra():
    """F_2[x]/(x^3): local, Gorenstein, dimension 3."""
    return algebra_from_presentation(2, ("x",), ("x^3",))


@pytest.fixture(scope="session")
def fat_point():
    """F_2[x,y]/(x^2, x*y, y^2): local, not Gorenstein (socle = m)."""
    return algebra_from_presentation(2, ("x", "y"), ("x^2", "x*y", "y^2"))


@pytest.fixture(scope="session")
def square_corner():
    """F_2[x,y]/(x^2, y^2): local, Gorenstein, dimension 4."""
    return algebra_from_presentation(2, ("x", "y"), ("x^2", "y^2"))
