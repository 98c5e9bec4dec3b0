import math
import random

import pytest


@pytest.fixture
def rng():
    return random.Random(0xC05)


def rotate(point, angle, offset=(0.0, 0.0)):
    """Rigid motion helper shared by geometry tests."""
    c, s = math.cos(angle), math.sin(angle)
    x, y = point
    return (c * x - s * y + offset[0], s * x + c * y + offset[1])
