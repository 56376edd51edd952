"""
Simple undirected graphs with dense 0-based vertices

Adjacency is one integer bit mask per vertex, so neighborhood sums and closed-neighborhood
unions are word operations. Vertex counts above MAX_VERTICES are rejected.

Canonical numbering of the generated families:

path       0 - 1 - ... - n-1
cycle      path plus the edge n-1 - 0
complete   every pair
empty      no edges
star       center 0, leaves 1..m
bipartite  part A is 0..p-1, part B is p..p+q-1
"""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from enum import StrEnum
from itertools import combinations
from random import Random

import networkx as nx

MAX_VERTICES = 64
EDGE_PROBABILITIES = (0.2, 0.5, 0.8)


class SizeLimitError(ValueError):
    """A graph is too large for the requested computation."""


class Family(StrEnum):
    """Graph families known to generate()"""

    PATH = 'path'
    CYCLE = 'cycle'
    COMPLETE = 'complete'
    EMPTY = 'empty'
    COMPLETE_BIPARTITE = 'complete_bipartite'
    STAR = 'star'


class TwinRelation(StrEnum):
    """How two distinct vertices relate through their neighborhoods"""

    TRUE = 'true_twins'
    FALSE = 'false_twins'
    NOT = 'not_twins'


def bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def check_size(n: int, limit: int = MAX_VERTICES) -> None:
    """Reject vertex counts above limit."""
    if n > limit:
        raise SizeLimitError(f'{n} vertices exceeds the limit of {limit}')


@dataclass(frozen=True, slots=True)
class Graph:
    """
    Immutable simple graph on vertices 0..n-1.

    masks[v] has bit u set exactly when u and v are adjacent.
    """

    n: int
    masks: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f'Vertex count {self.n} is negative')
        check_size(self.n)
        if len(self.masks) != self.n:
            raise ValueError(f'Expected {self.n} adjacency masks, got {len(self.masks)}')
        everyone = (1 << self.n) - 1
        for v, mask in enumerate(self.masks):
            if mask & ~everyone:
                raise ValueError(f'Vertex {v} has a neighbor outside 0..{self.n - 1}')
            if mask >> v & 1:
                raise ValueError(f'Self-loop at vertex {v}')
            for u in bits(mask):
                if not self.masks[u] >> v & 1:
                    raise ValueError(f'Edge {v}-{u} is missing its reverse')

    def __str__(self) -> str:
        return f'{self.n} vertices, {self.edge_count} edges'

    @property
    def everyone(self) -> int:
        """Mask with every vertex set"""
        return (1 << self.n) - 1

    @property
    def edges(self) -> list[tuple[int, int]]:
        """Edges as (u, v) pairs with u < v, sorted"""
        return [(u, v) for u, mask in enumerate(self.masks) for v in bits(mask) if v > u]

    @property
    def edge_count(self) -> int:
        """Number of edges"""
        return sum(mask.bit_count() for mask in self.masks) // 2

    def check_vertex(self, v: int) -> None:
        """Reject identifiers outside 0..n-1."""
        if not 0 <= v < self.n:
            raise ValueError(f'Vertex {v} is out of range for {self.n} vertices')

    def adjacent(self, u: int, v: int) -> bool:
        """Whether u and v share an edge"""
        return bool(self.masks[u] >> v & 1)

    def degree(self, v: int) -> int:
        """Number of neighbors of v"""
        return self.masks[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        """Open neighborhood N(v), sorted"""
        return list(bits(self.masks[v]))

    def closed_mask(self, v: int) -> int:
        """Closed neighborhood N[v] as a mask"""
        return self.masks[v] | 1 << v


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from unordered pairs, silently dropping repeated edges."""
    if n < 0:
        raise ValueError(f'Vertex count {n} is negative')
    check_size(n)
    masks = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f'Edge {u}-{v} has an endpoint outside 0..{n - 1}')
        if u == v:
            raise ValueError(f'Self-loop {u}-{v} is not allowed in a simple graph')
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return Graph(n, tuple(masks))


def from_networkx(graph: nx.Graph) -> Graph:
    """Convert a networkx graph whose nodes are exactly 0..n-1."""
    n = graph.number_of_nodes()
    if set(graph.nodes) != set(range(n)):
        raise ValueError('Nodes must be the integers 0..n-1')
    return from_edge_list(n, graph.edges)


def to_networkx(graph: Graph) -> nx.Graph:
    """Convert to networkx, adding nodes in index order."""
    result = nx.Graph()
    result.add_nodes_from(range(graph.n))
    result.add_edges_from(graph.edges)
    return result


def generate(family: Family | str, *params: int) -> Graph:
    """
    Build a member of a standard family.

    path, cycle, complete, empty and star take one parameter; complete_bipartite takes p and q.
    """
    family = Family(family)
    expected = 2 if family == Family.COMPLETE_BIPARTITE else 1
    if len(params) != expected:
        raise ValueError(f'{family} takes {expected} parameter(s), got {len(params)}')
    minimum = 3 if family == Family.CYCLE else 1
    if min(params) < minimum:
        raise ValueError(f'{family} needs parameters of at least {minimum}, got {params}')
    size = sum(params) + (family == Family.STAR)
    check_size(size)
    builders = {
        Family.PATH: nx.path_graph,
        Family.CYCLE: nx.cycle_graph,
        Family.COMPLETE: nx.complete_graph,
        Family.EMPTY: nx.empty_graph,
        Family.COMPLETE_BIPARTITE: nx.complete_bipartite_graph,
        Family.STAR: nx.star_graph,
    }
    return from_networkx(builders[family](*params))


def disjoint_union(first: Graph, second: Graph) -> Graph:
    """Place second after first; second's vertices shift by first.n."""
    check_size(first.n + second.n)
    return Graph(first.n + second.n, first.masks + tuple(m << first.n for m in second.masks))


def induced_subgraph(graph: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph on the given vertices, renumbered in increasing order."""
    order = sorted(vertices)
    position = {v: i for i, v in enumerate(order)}
    return Graph(
        len(order),
        tuple(sum(1 << position[u] for u in bits(graph.masks[v]) if u in position) for v in order),
    )


def pendant_vertices(graph: Graph) -> set[int]:
    """Vertices of degree 1"""
    return {v for v in range(graph.n) if graph.degree(v) == 1}


def universal_vertices(graph: Graph) -> set[int]:
    """Vertices adjacent to every other vertex; the lone vertex of K_1 counts."""
    return {v for v in range(graph.n) if graph.closed_mask(v) == graph.everyone}


def is_edgeless(graph: Graph) -> bool:
    """True when no vertex has a neighbor; K_1 counts."""
    return not any(graph.masks)


def twin_relation(graph: Graph, u: int, v: int) -> TwinRelation:
    """Classify u and v as true twins (N[u] = N[v]), false twins (N(u) = N(v)) or neither."""
    graph.check_vertex(u)
    graph.check_vertex(v)
    if u == v:
        raise ValueError(f'Twin relation needs two distinct vertices, got {u} twice')
    if graph.closed_mask(u) == graph.closed_mask(v):
        return TwinRelation.TRUE
    if graph.masks[u] == graph.masks[v]:
        return TwinRelation.FALSE
    return TwinRelation.NOT


def twin_pairs(graph: Graph, relation: TwinRelation) -> list[tuple[int, int]]:
    """Ordered pairs (u, v), u != v, standing in the given relation"""
    return [
        (u, v)
        for u in range(graph.n)
        for v in range(graph.n)
        if u != v and twin_relation(graph, u, v) == relation
    ]


def connected_components(graph: Graph) -> list[set[int]]:
    """Maximal connected vertex sets, ordered by smallest member"""
    components = []
    unseen = graph.everyone
    while unseen:
        frontier = reached = unseen & -unseen
        while frontier:
            grown = 0
            for v in bits(frontier):
                grown |= graph.masks[v]
            frontier = grown & ~reached
            reached |= frontier
        components.append(set(bits(reached)))
        unseen &= ~reached
    return components


def is_connected(graph: Graph) -> bool:
    """One component at most"""
    return len(connected_components(graph)) <= 1


def random_graph(n: int, rng: Random) -> Graph:
    """Erdős–Rényi graph with edge probability drawn from EDGE_PROBABILITIES."""
    probability = rng.choice(EDGE_PROBABILITIES)
    return from_networkx(nx.gnp_random_graph(n, probability, seed=rng.randrange(2**32)))


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled simple graph on n vertices, ordered by edge subset."""
    pairs = list(combinations(range(n), 2))
    for subset in range(1 << len(pairs)):
        masks = [0] * n
        for index in bits(subset):
            u, v = pairs[index]
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        yield Graph(n, tuple(masks))
