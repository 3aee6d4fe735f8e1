import pytest

from dcpebble import connected_graphs


def diam2_corpus(max_order, min_order=2):
    """All connected graphs with diameter at most 2 and order in range."""
    out = []
    for n in range(min_order, max_order + 1):
        out.extend(g for g in connected_graphs(n) if g.diameter <= 2)
    return out


@pytest.fixture(scope="session")
def diam2_upto5():
    return diam2_corpus(5)


@pytest.fixture(scope="session")
def diam2_upto6():
    return diam2_corpus(6)
