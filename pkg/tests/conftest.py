import pytest

from quadrics.polynomials import parse_poly


@pytest.fixture(scope="session")
def example_net():
    """The built-in line-plus-two-quadrics worked example."""
    q0 = parse_poly("z0^2")
    q1 = parse_poly("z1^2 + z0*z1 + z0*z2 + (1/25)*z1*z2")
    q2 = parse_poly("z2^2 + 50*z0*z1 - 10*z0*z2 + 9*z1*z2")
    return q0, q1, q2


@pytest.fixture(scope="session")
def generic_triple():
    """A quadric triple passing every line-system condition.

    Found by seeded random search; frozen here so the expensive search
    never runs in the test suite.
    """
    return (
        parse_poly("z0^2 - 4*z0*z1 - 3*z0*z2 - 2*z1^2 + 4*z1*z2 + 2*z2^2"),
        parse_poly("-3*z0^2 + 4*z0*z1 - z0*z2 + z1^2 - 4*z1*z2 - 4*z2^2"),
        parse_poly("-3*z0^2 - 3*z0*z1 - z0*z2 + 2*z1^2 - 3*z1*z2 + 2*z2^2"),
    )


@pytest.fixture(scope="session")
def cyclic_triple():
    return (
        parse_poly("z0^2 - z1*z2"),
        parse_poly("z1^2 - z0*z2"),
        parse_poly("z2^2 - z0*z1"),
    )
