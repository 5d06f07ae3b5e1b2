from fractions import Fraction
from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"


def naive_mul(a, b, order):
    """Schoolbook Cauchy product, the reference for the packed multiplication."""
    out = [Fraction(0)] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        for j, y in enumerate(b[: order + 1 - i]):
            out[i + j] += x * y
    return out


@pytest.fixture(scope="session")
def a002212():
    lines = (DATA / "a002212.txt").read_text().splitlines()
    return [int(x) for x in lines if x and not x.startswith("#")]
