import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from qmpaths.torus import Shape
from qmpaths.cauchon import Diagram

# exact-arithmetic examples can be slow on a loaded machine; never flake on time
settings.register_profile("exact", deadline=None)
settings.load_profile("exact")


@pytest.fixture
def shape22():
    return Shape(2, 2)


@pytest.fixture
def shape23():
    return Shape(2, 3)


@pytest.fixture
def corner_diagram_2x3():
    """2x3 with the single black square (1,1)."""
    return Diagram.of(Shape(2, 3), [(1, 1)])


@pytest.fixture
def grid_3x3_diagram():
    """3x3 with black squares (1,1), (1,3), (2,3)."""
    return Diagram.of(Shape(3, 3), [(1, 1), (1, 3), (2, 3)])


@pytest.fixture
def grid_4x4_diagram():
    """4x4 with black (1,1), (1,4), (2,1), (2,4), (3,1), (3,2)."""
    return Diagram.of(
        Shape(4, 4), [(1, 1), (1, 4), (2, 1), (2, 4), (3, 1), (3, 2)]
    )


@pytest.fixture
def staircase_3x4_diagram():
    """3x4 with black (1,1), (2,1), (2,2); its kernel has a 5-minor minimal basis."""
    return Diagram.of(Shape(3, 4), [(1, 1), (2, 1), (2, 2)])
