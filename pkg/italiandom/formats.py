"""
Text formats for graphs and labelings

graph6 is the standard 6-bit encoding of the upper adjacency triangle; networkx does the bit
packing. The edge list is "n" on the first line and "u v" on each following line. Readers tell
the two apart by the first byte: edge lists start with a digit, graph6 never does.
"""

import networkx as nx

from italiandom.graphs import (
    MAX_VERTICES,
    Graph,
    check_size,
    from_edge_list,
    from_networkx,
    to_networkx,
)
from italiandom.labeling import Labeling

GRAPH6_HEADER = '>>graph6<<'


def _graph6_order(data: str) -> int:
    """Vertex count from the size prefix: one byte, or ~ and three bytes"""
    if data[0] != '~':
        return ord(data[0]) - 63
    if len(data) < 4:
        raise ValueError(f'Truncated graph6 size prefix in {data!r}')
    if data[1] == '~':
        return MAX_VERTICES + 1  # eight-byte prefix, n >= 258048
    return (ord(data[1]) - 63) << 12 | (ord(data[2]) - 63) << 6 | ord(data[3]) - 63


def parse_graph6(text: str) -> Graph:
    """
    Decode one graph6 string, with or without the >>graph6<< header.

    Only the canonical encoding is accepted, so decoding then encoding gives back the input.
    """
    data = text.removesuffix('\n').removeprefix(GRAPH6_HEADER)
    if not data:
        raise ValueError('Empty graph6 string')
    if bad := sorted({c for c in data if not 63 <= ord(c) <= 126}):
        raise ValueError(f'Illegal graph6 character(s) {"".join(bad)!r} in {text!r}')
    check_size(_graph6_order(data))
    try:
        graph = nx.from_graph6_bytes(data.encode('ascii'))
    except (nx.NetworkXError, IndexError) as error:
        raise ValueError(f'Malformed graph6 {text!r}: {error}') from error
    result = from_networkx(graph)
    if (canonical := encode_graph6(result)) != data:
        # Set padding bits or a long size prefix for a small graph
        raise ValueError(
            f'Non-canonical graph6 {text!r}; the same graph encodes as {canonical!r}'
        )
    return result


def encode_graph6(graph: Graph) -> str:
    """Encode without header or trailing newline."""
    return nx.to_graph6_bytes(to_networkx(graph), header=False).decode('ascii').strip()


def parse_edge_list(text: str) -> Graph:
    """Read "n" then one "u v" pair per line; blank lines are ignored."""
    lines = [(number, line.split()) for number, line in enumerate(text.splitlines(), 1)]
    lines = [(number, fields) for number, fields in lines if fields]
    if not lines:
        raise ValueError('Empty edge list')
    (number, header), *rest = lines
    if len(header) != 1 or not header[0].isdigit():
        raise ValueError(f'Line {number}: expected the vertex count, got {" ".join(header)!r}')
    edges = []
    for number, fields in rest:
        if len(fields) != 2 or not all(field.isdigit() for field in fields):
            raise ValueError(f'Line {number}: expected "u v", got {" ".join(fields)!r}')
        edges.append((int(fields[0]), int(fields[1])))
    return from_edge_list(int(header[0]), edges)


def encode_edge_list(graph: Graph) -> str:
    """Vertex count, then one "u v" line per edge with u < v, without a trailing newline"""
    return '\n'.join([str(graph.n), *(f'{u} {v}' for u, v in graph.edges)])


def read_graph(text: str) -> Graph:
    """Parse either format, choosing by the first non-blank byte."""
    stripped = text.strip()
    if not stripped:
        raise ValueError('No graph given')
    if stripped[0].isdigit():
        return parse_edge_list(stripped)
    return parse_graph6(stripped)


def write_graph(graph: Graph, form: str = 'graph6') -> str:
    """Render as 'graph6' or 'edges'."""
    if form == 'graph6':
        return encode_graph6(graph)
    if form == 'edges':
        return encode_edge_list(graph)
    raise ValueError(f'Unknown graph format {form!r}')


def parse_labeling(text: str, n: int | None = None) -> Labeling:
    """Read comma-separated digits such as "2,0,1"."""
    fields = [field.strip() for field in text.strip().split(',')] if text.strip() else []
    if not all(field in {'0', '1', '2'} for field in fields):
        raise ValueError(f'Labeling {text!r} must be comma-separated 0, 1 or 2 values')
    if n is not None and len(fields) != n:
        raise ValueError(f'Labeling {text!r} has {len(fields)} values, expected {n}')
    return Labeling(tuple(map(int, fields)))
