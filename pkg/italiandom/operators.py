"""Corona product and twin addition"""

from dataclasses import dataclass

import networkx as nx

from italiandom.graphs import (
    Family,
    Graph,
    TwinRelation,
    check_size,
    from_edge_list,
    from_networkx,
    generate,
    to_networkx,
)


@dataclass(frozen=True, slots=True)
class CoronaMap:
    """
    Vertex layout of G⊙H.

    Vertex i of G keeps index i. Vertex j of the i-th copy of H is n_g + i * n_h + j, so each copy
    is a contiguous block after the G vertices. With H = K_1 the leaf hanging off vertex i is
    n_g + i.
    """

    n_g: int
    n_h: int

    @property
    def n(self) -> int:
        """Vertices of the corona, n_g (1 + n_h)"""
        return self.n_g * (1 + self.n_h)

    def g_vertex(self, i: int) -> int:
        """Index of vertex i of G, which is i itself"""
        if not 0 <= i < self.n_g:
            raise ValueError(f'G has no vertex {i}')
        return i

    def copy_vertex(self, i: int, j: int) -> int:
        """Index of vertex j in the copy of H attached to vertex i of G"""
        if not (0 <= i < self.n_g and 0 <= j < self.n_h):
            raise ValueError(f'Copy {i} has no vertex {j}')
        return self.n_g + i * self.n_h + j

    def leaf(self, i: int) -> int:
        """The K_1 copy attached to vertex i"""
        return self.copy_vertex(i, 0)

    def copy(self, i: int) -> range:
        """Indices of the i-th copy of H"""
        start = self.copy_vertex(i, 0) if self.n_h else self.n_g
        return range(start, start + self.n_h)

    def owner(self, v: int) -> int:
        """Index of the G vertex that v is, or that v's copy hangs from"""
        if not 0 <= v < self.n:
            raise ValueError(f'Corona has no vertex {v}')
        return v if v < self.n_g else (v - self.n_g) // self.n_h


def corona(g: Graph, h: Graph) -> tuple[Graph, CoronaMap]:
    """
    G⊙H: one copy of G and a copy of H per vertex of G, vertex i joined to all of copy i.

    H with no vertices leaves G unchanged.
    """
    if g.n < 1:
        raise ValueError('The corona needs at least one vertex in G')
    layout = CoronaMap(g.n, h.n)
    if not h.n:
        return g, layout
    check_size(layout.n)
    product = nx.corona_product(to_networkx(g), to_networkx(h))
    numbered = nx.relabel_nodes(
        product,
        {
            node: node if isinstance(node, int) else layout.copy_vertex(*node)
            for node in product.nodes
        },
    )
    return from_networkx(numbered), layout


def corona_k1(g: Graph) -> tuple[Graph, CoronaMap]:
    """G⊙K_1: a pendant leaf on every vertex"""
    return corona(g, generate(Family.EMPTY, 1))


def add_twin(g: Graph, u: int, relation: TwinRelation) -> Graph:
    """
    Append vertex n as a twin of u.

    A true twin joins N[u], so it is adjacent to u; a false twin joins N(u) only.
    """
    g.check_vertex(u)
    check_size(g.n + 1)
    if relation == TwinRelation.TRUE:
        joined = g.closed_mask(u)
    elif relation == TwinRelation.FALSE:
        joined = g.masks[u]
    else:
        raise ValueError(f'Cannot add a twin with relation {relation}')
    return from_edge_list(g.n + 1, [*g.edges, *((w, g.n) for w in range(g.n) if joined >> w & 1)])


def add_true_twin(g: Graph, u: int) -> Graph:
    """add_twin with the new vertex adjacent to u"""
    return add_twin(g, u, TwinRelation.TRUE)


def add_false_twin(g: Graph, u: int) -> Graph:
    """add_twin with the new vertex not adjacent to u"""
    return add_twin(g, u, TwinRelation.FALSE)
