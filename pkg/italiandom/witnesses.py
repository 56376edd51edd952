"""
Closed-form values and explicit Italian dominating functions for corona graphs

Vertex names follow CoronaMap: G keeps 0..n-1 and, for H = K_1, the leaf of vertex i is n + i.
Path and cycle vertices v_1..v_n are 0..n-1.
"""

from math import ceil
from typing import NamedTuple

from italiandom.graphs import Family, Graph, disjoint_union, generate, universal_vertices
from italiandom.labeling import Labeling
from italiandom.operators import corona, corona_k1


class Witness(NamedTuple):
    """A graph with a labeling claimed to be an Italian dominating function of it"""

    graph: Graph
    labeling: Labeling


class ClosedForm(NamedTuple):
    """
    What a theorem predicts for given parameters.

    Exactly one of value, bounds or predicate is set.
    """

    theorem_id: str
    params: tuple[int, ...]
    value: int | None = None
    bounds: tuple[int, int] | None = None
    predicate: str | None = None

    def __str__(self) -> str:
        if self.value is not None:
            return f'= {self.value}'
        if self.bounds is not None:
            return f'in [{self.bounds[0]}, {self.bounds[1]}]'
        return str(self.predicate)

    def holds(self, computed: int) -> bool:
        """Whether computed satisfies a value or bounds prediction"""
        if self.value is not None:
            return computed == self.value
        if self.bounds is not None:
            return self.bounds[0] <= computed <= self.bounds[1]
        raise ValueError(f'{self.theorem_id} predicts a predicate, not a number')


def _positive(name: str, value: int, minimum: int = 1) -> None:
    if value < minimum:
        raise ValueError(f'{name} must be at least {minimum}, got {value}')


def formula_path(n: int) -> int:
    """γ_I(P_n) = ceil((n + 1) / 2)"""
    _positive('n', n)
    return (n + 2) // 2


def formula_corona_general(n_g: int) -> int:
    """γ_I(G⊙H) = 2 n_G when H has at least two vertices"""
    return 2 * n_g


def bounds_corona_k1(n: int) -> tuple[int, int]:
    """n + 1 <= γ_I(G⊙K_1) <= 2n"""
    _positive('n', n)
    return n + 1, 2 * n


def realize_corona_k1(n: int, a: int) -> Graph:
    """
    A graph G on n vertices with γ_I(G⊙K_1) = a.

    G is K_{1,m} followed by n - m - 1 isolated vertices, m = 2n - a. The star's center is
    vertex 0 and its leaves are 1..m; with m = 0 the star is a lone vertex and G is edgeless.
    """
    _positive('n', n)
    low, high = bounds_corona_k1(n)
    if not low <= a <= high:
        raise ValueError(f'{a} is not realizable for n = {n}; it must lie in [{low}, {high}]')
    m = 2 * n - a
    star = generate(Family.STAR, m) if m else generate(Family.EMPTY, 1)
    return disjoint_union(star, generate(Family.EMPTY, n - m - 1)) if n - m - 1 else star


def formula_bipartite_corona(p: int, q: int) -> int:
    """γ_I(K_{p,q}⊙K_1): p + q + 1 when p or q is 1, else p + q + 2"""
    _positive('p', p)
    _positive('q', q)
    return p + q + (1 if 1 in (p, q) else 2)


def formula_double_corona(n: int) -> int:
    """γ_I((G⊙K_1)⊙K_1) = 3n"""
    _positive('n', n)
    return 3 * n


def formula_corona_k1_path(n: int) -> int:
    """γ_I(P_n⊙K_1) = ceil(4n / 3)"""
    _positive('n', n)
    return ceil(4 * n / 3)


def formula_corona_k1_cycle(n: int) -> int:
    """γ_I(C_n⊙K_1) = ceil(4n / 3)"""
    _positive('n', n, 3)
    return ceil(4 * n / 3)


def closed_form(theorem_id: str, params: tuple[int, ...]) -> ClosedForm:
    """The prediction for a numeric theorem, by id"""
    predictions = {
        'T1': lambda n: ClosedForm('T1', (n,), value=formula_path(n)),
        'T2': lambda n: ClosedForm('T2', (n,), value=formula_corona_general(n)),
        'T3': lambda n: ClosedForm('T3', (n,), bounds=bounds_corona_k1(n)),
        'T4': lambda n, a: ClosedForm('T4', (n, a), value=a),
        'T5': lambda n: ClosedForm('T5', (n,), predicate=f'= {n + 1} iff a universal vertex'),
        'T6': lambda n: ClosedForm('T6', (n,), predicate=f'= {2 * n} iff edgeless'),
        'T7': lambda p, q: ClosedForm('T7', (p, q), value=formula_bipartite_corona(p, q)),
        'T8': lambda n: ClosedForm('T8', (n,), value=formula_double_corona(n)),
        'T9': lambda n: ClosedForm('T9', (n,), value=formula_corona_k1_path(n)),
        'T10': lambda n: ClosedForm('T10', (n,), value=formula_corona_k1_cycle(n)),
    }
    if theorem_id not in predictions:
        raise ValueError(f'No closed form for {theorem_id}')
    return predictions[theorem_id](*params)


def witness_corona(g: Graph, h: Graph) -> Witness:
    """2 on every vertex of G, 0 on the copies of H; weight 2 n_G"""
    if h.n < 1:
        raise ValueError('H needs at least one vertex')
    graph, layout = corona(g, h)
    return Witness(graph, Labeling.from_mapping(layout.n, dict.fromkeys(range(g.n), 2)))


def witness_leaf_corona(g: Graph) -> Witness:
    """2 on every leaf of G⊙K_1; weight 2n"""
    graph, layout = corona_k1(g)
    leaves = {layout.leaf(i): 2 for i in range(g.n)}
    return Witness(graph, Labeling.from_mapping(layout.n, leaves))


def witness_universal_corona(g: Graph, v: int) -> Witness:
    """2 on the universal vertex v and 1 on every other leaf; weight n + 1"""
    g.check_vertex(v)
    if v not in universal_vertices(g):
        raise ValueError(f'Vertex {v} is not universal')
    graph, layout = corona_k1(g)
    values = {layout.leaf(i): 1 for i in range(g.n) if i != v}
    return Witness(graph, Labeling.from_mapping(layout.n, {**values, v: 2}))


def witness_edge_corona(g: Graph, u: int, v: int) -> Witness:
    """For an edge uv: 2 on u and every vertex off the edge, 1 on the leaf of v; weight 2n - 1"""
    g.check_vertex(u)
    g.check_vertex(v)
    if not g.adjacent(u, v):
        raise ValueError(f'{u}-{v} is not an edge')
    graph, layout = corona_k1(g)
    values = {i: 2 for i in range(g.n) if i != v}
    return Witness(graph, Labeling.from_mapping(layout.n, {**values, layout.leaf(v): 1}))


def witness_realization(n: int, a: int) -> Witness:
    """
    The optimal labeling of realize_corona_k1(n, a)⊙K_1.

    2 on the star center and on each isolated vertex, 1 on the leaves hanging off the star's
    leaves; weight 2(n - m) + m = a.
    """
    g = realize_corona_k1(n, a)
    m = 2 * n - a
    graph, layout = corona_k1(g)
    twos = {i: 2 for i in (0, *range(m + 1, n))}
    ones = {layout.leaf(i): 1 for i in range(1, m + 1)}
    return Witness(graph, Labeling.from_mapping(layout.n, {**twos, **ones}))


def witness_bipartite_corona(p: int, q: int) -> Witness:
    """
    The optimal labeling of K_{p,q}⊙K_1.

    With a part of size 1, 2 on that vertex and 1 on the leaves of the other part. Otherwise
    2 on the first vertex of each part and 1 on the leaves of all the other vertices.
    """
    _positive('p', p)
    _positive('q', q)
    g = generate(Family.COMPLETE_BIPARTITE, p, q)
    graph, layout = corona_k1(g)
    part_a, part_b = range(p), range(p, p + q)
    if p == 1 or q == 1:
        center, others = (part_a[0], part_b) if p == 1 else (part_b[0], part_a)
        values = {center: 2, **{layout.leaf(i): 1 for i in others}}
    else:
        rest = [*part_a[1:], *part_b[1:]]
        values = {part_a[0]: 2, part_b[0]: 2, **{layout.leaf(i): 1 for i in rest}}
    return Witness(graph, Labeling.from_mapping(layout.n, values))


def witness_double_corona(g: Graph) -> Witness:
    """
    1 on u_i, u_i' and v_i' in each P_4 v_i' v_i u_i u_i' of (G⊙K_1)⊙K_1; weight 3n.

    u_i = n + i is the leaf of v_i = i in G⊙K_1; v_i' = 2n + i and u_i' = 3n + i are the leaves
    added by the second corona.
    """
    _positive('n', g.n)
    inner, inner_layout = corona_k1(g)
    graph, layout = corona_k1(inner)
    values = {}
    for i in range(g.n):
        u = inner_layout.leaf(i)
        values |= {u: 1, layout.leaf(u): 1, layout.leaf(i): 1}
    return Witness(graph, Labeling.from_mapping(layout.n, values))


def _path_corona_values(n: int) -> dict[int, int]:
    """
    2 on v_j for j = 2 (mod 3), plus v_n when n = 1 (mod 3); 1 on the other leaves.

    This covers all three residues of n; for n = 3k + 2 it reads the last case as v_2, v_5, ...,
    v_{3k+2}.
    """
    twos = {j for j in range(1, n + 1) if j % 3 == 2}
    if n % 3 == 1:
        twos.add(n)
    values = {j - 1: 2 for j in twos}
    return values | {n + j - 1: 1 for j in range(1, n + 1) if j not in twos}


def witness_path_corona(n: int) -> Witness:
    """The ceil(4n / 3) labeling of P_n⊙K_1"""
    _positive('n', n)
    graph, layout = corona_k1(generate(Family.PATH, n))
    return Witness(graph, Labeling.from_mapping(layout.n, _path_corona_values(n)))


def witness_cycle_corona(n: int) -> Witness:
    """The path labeling on C_n⊙K_1; the closing edge only adds support"""
    _positive('n', n, 3)
    graph, layout = corona_k1(generate(Family.CYCLE, n))
    return Witness(graph, Labeling.from_mapping(layout.n, _path_corona_values(n)))

