from __future__ import annotations

from pathlib import Path

import pytest

from invdiam.graph import parse_labeled_graph, parse_labeled_graphs

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def corpus_n5():
    """Isomorph-free connected graphs on <= 5 vertices with <= 8 edges."""
    graphs = []
    for path in sorted((FIXTURES / "corpus_n5").glob("*.ilg")):
        graph, _ = parse_labeled_graph(path.read_text())
        graphs.append((path.name, graph))
    assert len(graphs) == 29
    return graphs


@pytest.fixture(scope="session")
def outerplanar_corpus():
    graphs = []
    for path in sorted((FIXTURES / "outerplanar").glob("*.ilg")):
        for graph, _ in parse_labeled_graphs(path.read_text()):
            graphs.append(graph)
    return graphs
