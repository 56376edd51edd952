"""Test graph6, edge-list and labeling text"""

import networkx as nx
from hypothesis import given, settings
from pytest import mark, raises

from italiandom.formats import (
    encode_edge_list,
    encode_graph6,
    parse_edge_list,
    parse_graph6,
    parse_labeling,
    read_graph,
    write_graph,
)
from italiandom.graphs import Family, Graph, SizeLimitError, generate, to_networkx
from italiandom.labeling import Labeling
from italiandom.tests.strategies import graphs


def test_graph6_known_strings() -> None:
    """Standard strings must decode to the expected graphs."""
    assert parse_graph6('Bw') == generate(Family.COMPLETE, 3)
    assert parse_graph6('Bg') == generate(Family.PATH, 3)
    assert parse_graph6('>>graph6<<Bg\n') == generate(Family.PATH, 3)
    assert parse_graph6('@') == generate(Family.EMPTY, 1)
    assert encode_graph6(generate(Family.PATH, 3)) == 'Bg'
    assert encode_graph6(generate(Family.COMPLETE, 3)) == 'Bw'


@settings(max_examples=1000)
@given(graphs(max_n=20))
def test_graph6_agrees_with_networkx(graph: Graph) -> None:
    """Encoding must match the networkx encoder byte for byte and decode back."""
    expected = nx.to_graph6_bytes(to_networkx(graph), header=False).strip().decode()
    assert encode_graph6(graph) == expected
    assert parse_graph6(expected) == graph


@mark.parametrize('text', ['', 'B', 'Bw!', 'Bww', '\x7f'])
def test_graph6_rejects_malformed(text: str) -> None:
    """Empty, truncated, illegal and trailing input must be rejected."""
    with raises(ValueError):  # noqa: PT011
        parse_graph6(text)


def test_graph6_size_limit() -> None:
    """Graphs above 64 vertices must be refused before decoding."""
    with raises(SizeLimitError):
        parse_graph6('~?@@' + '?' * 400)
    with raises(SizeLimitError):
        parse_graph6('~~' + '?' * 10)


def test_edge_list() -> None:
    """Edge lists must carry the vertex count and one edge per line."""
    star = generate(Family.STAR, 2)
    assert encode_edge_list(star) == '3\n0 1\n0 2'
    assert parse_edge_list('3\n0 1\n\n0 2\n') == star
    assert parse_edge_list('2') == generate(Family.EMPTY, 2)


@mark.parametrize('text', ['', 'x', '3\n0', '3\n0 a', '2\n0 2', '2 1\n0 1'])
def test_edge_list_rejects(text: str) -> None:
    """Missing counts, bad pairs and out-of-range vertices must be rejected."""
    with raises(ValueError):  # noqa: PT011
        parse_edge_list(text)


def test_read_and_write_graph() -> None:
    """Readers must detect the format and writers must emit either one."""
    cycle = generate(Family.CYCLE, 5)
    for form in ('graph6', 'edges'):
        assert read_graph(write_graph(cycle, form) + '\n') == cycle
    with raises(ValueError, match='Unknown graph format'):
        write_graph(cycle, 'dot')
    with raises(ValueError, match='No graph'):
        read_graph('  \n')


def test_parse_labeling() -> None:
    """Labelings must be comma-separated 0, 1 and 2 values."""
    assert parse_labeling('2,0,1') == Labeling((2, 0, 1))
    assert parse_labeling(' 1, 0 ,1\n', 3) == Labeling((1, 0, 1))
    assert str(parse_labeling('2,0,1')) == '2,0,1'
    assert parse_labeling('') == Labeling(())
    with raises(ValueError, match='comma-separated'):
        parse_labeling('3,0')
    with raises(ValueError, match='expected 2'):
        parse_labeling('1,0,1', 2)


@mark.parametrize(('text', 'canonical'), [('Bx', 'Bw'), ('Bh', 'Bg'), ('~??Bw', 'Bw')])
def test_graph6_rejects_noncanonical(text: str, canonical: str) -> None:
    """Set padding bits and long size prefixes must be refused, naming the canonical form."""
    with raises(ValueError, match=f"encodes as '{canonical}'"):
        parse_graph6(text)
