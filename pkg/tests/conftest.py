import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from crossprof.geom import Drawing, Point, validate_general_position


def random_drawing(rng: random.Random, n: int, coord: int = 10 ** 4) -> Drawing:
    """Seeded random drawing in general position (rejection sampling)."""
    while True:
        pts = [Point(Fraction(rng.randint(-coord, coord)),
                     Fraction(rng.randint(-coord, coord))) for _ in range(n)]
        if validate_general_position(pts):
            return Drawing(pts)


@pytest.fixture
def rng():
    return random.Random(20240817)
