from __future__ import annotations

import pytest

from eblocks import reference as ref
from eblocks.jantzen import jantzen_matrix
from eblocks.orbit import enumerate_system


@pytest.fixture(scope="session")
def example_system():
    return enumerate_system("E8", ref.E8_EXAMPLE_I, ref.E8_EXAMPLE_J)


@pytest.fixture(scope="session")
def example_matrix(example_system):
    return jantzen_matrix(example_system, witnesses=True)


@pytest.fixture(scope="session")
def to_printed(example_system):
    """Our index -> printed index, by exact e-coordinate match."""
    ours = {example_system.paper_coords(k): k for k in range(1, example_system.N + 1)}
    return {ours[w]: i for i, w in ref.E8_EXAMPLE_WEIGHTS.items()}
