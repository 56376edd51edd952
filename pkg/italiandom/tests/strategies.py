"""Hypothesis strategies shared by the test modules"""

from hypothesis import strategies as st

from italiandom.graphs import Graph, from_edge_list
from italiandom.labeling import Labeling, neighborhood_sum


@st.composite
def graphs(draw: st.DrawFn, min_n: int = 1, max_n: int = 8) -> Graph:
    """Arbitrary simple graph on min_n to max_n vertices"""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return from_edge_list(n, chosen)


@st.composite
def labeled_graphs(draw: st.DrawFn, max_n: int = 8) -> tuple[Graph, Labeling]:
    """A graph with an arbitrary, not necessarily valid, labeling"""
    graph = draw(graphs(max_n=max_n))
    values = draw(st.lists(st.sampled_from((0, 1, 2)), min_size=graph.n, max_size=graph.n))
    return graph, Labeling(tuple(values))


def repaired(graph: Graph, labeling: Labeling) -> Labeling:
    """Raise every undominated 0 to 1, which only helps the other vertices."""
    for v in range(graph.n):
        if labeling[v] == 0 and neighborhood_sum(graph, labeling, v) < 2:
            labeling = labeling.replace({v: 1})
    return labeling
