import pytest
from hypothesis import HealthCheck, settings

from hadarank.exactalg import Ideal, Ring

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

C_TEXT = "x0*x1 + x0*x2 + x1^2 - 2*x1*x2 + x2^2"
Q_TEXT = "x0*x1 + x0*x2 + x1*x2"
X_TEXT = "x1^2 - 2*x0*x2"
C_SHARP_TEXT = "-3*x0^2 - 2*x1^2 + 4*x2^2 + 5*x0*x1 - 11*x0*x2 + 2*x1*x2"


def plane_ideal(*texts):
    return Ideal.parse(Ring.projective(2), list(texts))


@pytest.fixture
def I_C():
    return plane_ideal(C_TEXT)


@pytest.fixture
def I_Q():
    return plane_ideal(Q_TEXT)


@pytest.fixture
def I_X():
    return plane_ideal(X_TEXT)


@pytest.fixture
def I_C_sharp():
    return plane_ideal(C_SHARP_TEXT)
