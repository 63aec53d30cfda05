import os

import networkx as nx
import pytest
from hypothesis import HealthCheck, settings

from xbgraphs.constructions import XbParams, build_xb, enumerate_xb_params

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("ci", max_examples=200, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

SURVEY_MS = [3, 4, 5, 6]
SURVEY_NS = [8, 12, 16, 20]


@pytest.fixture(scope="session")
def survey_tuples() -> list[XbParams]:
    return enumerate_xb_params(SURVEY_MS, SURVEY_NS)


def to_nx(g) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.order))
    G.add_edges_from(g.edges)
    return G


def xb(*t) -> object:
    return build_xb(XbParams(*t))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
