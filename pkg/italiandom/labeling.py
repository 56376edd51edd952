"""
Labelings f: V -> {0, 1, 2} and the domination conditions they can satisfy

Italian: every vertex labeled 0 has neighbor labels summing to at least 2.
Roman: every vertex labeled 0 has a neighbor labeled 2.

The normalize_* functions are the equal-weight reassignments used to show that some minimum
Italian dominating function avoids a value at a pendant or twin vertex. They accept any valid
labeling, minimum or not, and raise NormalizationError where no equal-weight reassignment
exists.
"""

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass

from italiandom.graphs import Graph, TwinRelation, bits, twin_relation

VALUES = (0, 1, 2)


class NormalizationError(ValueError):
    """No equal-weight reassignment gives the requested value at the target vertex."""


@dataclass(frozen=True, slots=True)
class Labeling:
    """Value vector indexed by vertex"""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        for v, value in enumerate(self.values):
            if value not in VALUES:
                raise ValueError(f'Vertex {v} has value {value!r}, expected 0, 1 or 2')

    def __str__(self) -> str:
        return ','.join(map(str, self.values))

    def __getitem__(self, v: int) -> int:
        return self.values[v]

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    @classmethod
    def zeros(cls, n: int) -> 'Labeling':
        """All-zero labeling on n vertices"""
        return cls((0,) * n)

    @classmethod
    def from_mapping(cls, n: int, values: Mapping[int, int]) -> 'Labeling':
        """Labeling with the given values and 0 everywhere else"""
        return cls(tuple(values.get(v, 0) for v in range(n)))

    def replace(self, changes: Mapping[int, int]) -> 'Labeling':
        """Copy with some vertex values changed"""
        return Labeling(tuple(changes.get(v, value) for v, value in enumerate(self.values)))

    def mask(self, value: int) -> int:
        """Vertices holding value, as a bit mask"""
        return sum(1 << v for v, held in enumerate(self.values) if held == value)


def weight(labeling: Labeling) -> int:
    """f(V), the sum of all values"""
    return sum(labeling.values)


def v_partition(labeling: Labeling) -> tuple[set[int], set[int], set[int]]:
    """(V_0, V_1, V_2): the vertices holding each value"""
    zero, one, two = set(), set(), set()
    for v, value in enumerate(labeling.values):
        (zero, one, two)[value].add(v)
    return zero, one, two


def _check_bound(graph: Graph, labeling: Labeling) -> None:
    if len(labeling) != graph.n:
        raise ValueError(f'Labeling has {len(labeling)} values for a graph on {graph.n} vertices')


def neighborhood_sum(graph: Graph, labeling: Labeling, v: int) -> int:
    """Sum of f over the open neighborhood N(v)"""
    return sum(labeling.values[u] for u in bits(graph.masks[v]))


def is_idf(graph: Graph, labeling: Labeling) -> bool:
    """Check the Italian condition at every vertex labeled 0."""
    _check_bound(graph, labeling)
    ones, twos = labeling.mask(1), labeling.mask(2)
    return all(
        (mask & ones).bit_count() + 2 * (mask & twos).bit_count() >= 2
        for mask, value in zip(graph.masks, labeling.values, strict=True)
        if value == 0
    )


def is_rdf(graph: Graph, labeling: Labeling) -> bool:
    """Check the Roman condition at every vertex labeled 0."""
    _check_bound(graph, labeling)
    twos = labeling.mask(2)
    return all(
        mask & twos for mask, value in zip(graph.masks, labeling.values, strict=True) if value == 0
    )


def is_dominating(graph: Graph, vertices: Iterable[int]) -> bool:
    """Check that every vertex is in the set or adjacent to it."""
    covered = 0
    for v in vertices:
        graph.check_vertex(v)
        covered |= graph.closed_mask(v)
    return covered == graph.everyone


def _check_idf(graph: Graph, labeling: Labeling) -> None:
    if not is_idf(graph, labeling):
        raise ValueError(f'{labeling} is not an Italian dominating function')


def normalize_pendant(graph: Graph, labeling: Labeling, u: int, *, split: bool = False) -> Labeling:
    """
    Move weight off a pendant vertex labeled 2 onto its support vertex.

    Parameters
    ----------
    graph
        Graph containing the pendant vertex u
    labeling
        Italian dominating function of graph
    u
        Pendant vertex
    split
        Prefer f(u) = f(v) = 1 over f(u) = 0, f(v) = 2 when the support v is labeled 0

    Returns
    -------
    Labeling
        Italian dominating function of equal weight with f(u) != 2
    """
    graph.check_vertex(u)
    if graph.degree(u) != 1:
        raise ValueError(f'Vertex {u} has degree {graph.degree(u)}, not a pendant')
    _check_idf(graph, labeling)
    if labeling[u] != 2:
        return labeling
    (support,) = graph.neighbors(u)
    if labeling[support] == 0:
        return labeling.replace({u: 1, support: 1} if split else {u: 0, support: 2})
    if labeling[support] == 1:
        # u no longer needs domination once it keeps a 1
        return labeling.replace({u: 1, support: 2})
    raise NormalizationError(
        f'Pendant {u} and its support {support} are both labeled 2; no equal-weight reassignment'
    )


def normalize_true_twin(graph: Graph, labeling: Labeling, u: int, twin: int) -> Labeling:
    """
    Reassign weight between true twins u and twin so that twin is labeled 0.

    Cases: twin 2 and u 0 swap; both 1 merge into u = 2; twin 1 and u 0 swap. A combined
    weight above 2 cannot fit on u alone and raises NormalizationError; minimum labelings
    never reach that case.
    """
    if twin_relation(graph, u, twin) != TwinRelation.TRUE:
        raise ValueError(f'Vertices {u} and {twin} are not true twins')
    _check_idf(graph, labeling)
    combined = labeling[u] + labeling[twin]
    if labeling[twin] == 0:
        return labeling
    if combined > 2:
        raise NormalizationError(
            f'True twins {u} and {twin} carry {combined} together; u cannot absorb it'
        )
    return labeling.replace({u: combined, twin: 0})


def normalize_false_twin(graph: Graph, labeling: Labeling, u: int, twin: int) -> Labeling:
    """
    Exchange the values of false twins u and twin when twin is labeled 2.

    The result has f(twin) != 2. Both labeled 2 raises NormalizationError.
    """
    if twin_relation(graph, u, twin) != TwinRelation.FALSE:
        raise ValueError(f'Vertices {u} and {twin} are not false twins')
    _check_idf(graph, labeling)
    if labeling[twin] != 2:
        return labeling
    if labeling[u] == 2:
        raise NormalizationError(f'False twins {u} and {twin} are both labeled 2')
    return labeling.replace({u: 2, twin: labeling[u]})


def extend_to_twin(graph: Graph, labeling: Labeling, u: int, relation: TwinRelation) -> Labeling:
    """
    Extend an Italian dominating function of graph to graph plus a new twin of u.

    The new vertex (index graph.n) gets 0 when the existing values already dominate it:
    for a true twin when f(u) is 0 or 2 or u has a positive neighbor, for a false twin when
    f(u) is 0, u has a neighbor labeled 2, or u has two neighbors labeled 1. Otherwise it gets 1.
    """
    graph.check_vertex(u)
    _check_idf(graph, labeling)
    ones, twos = labeling.mask(1), labeling.mask(2)
    around = graph.masks[u]
    if relation == TwinRelation.TRUE:
        free = labeling[u] != 1 or bool(around & (ones | twos))
    elif relation == TwinRelation.FALSE:
        free = labeling[u] == 0 or bool(around & twos) or (around & ones).bit_count() >= 2
    else:
        raise ValueError(f'Cannot extend with {relation}')
    return Labeling((*labeling.values, 0 if free else 1))
