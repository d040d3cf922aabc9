import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from permcm import Graph, graph_from_edges  # noqa: E402


@pytest.fixture
def remark_graph() -> Graph:
    """Unmixed permutation graph that is not vertex decomposable:
    a 5-cycle 1-2-3-4-5 with the chords {2,5} and {1,4}."""
    return graph_from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (2, 5), (1, 4)])
