"""
Exact domination parameters by branch and bound

gamma_italian, gamma_roman and gamma_domination share one search. A vertex is satisfied when it
carries a positive value or its neighbors contribute enough: Italian counts neighbor values
toward 2, Roman counts only neighbors labeled 2, and domination counts chosen neighbors toward
1. The search repeatedly takes the unsatisfied vertex with the fewest undecided vertices in its
closed neighborhood and branches on which of those is the first to carry weight (2 before 1),
fixing the ones skipped to 0. That rule reaches every labeling exactly once.

Pruning uses the current weight plus ceil(unsatisfied / reach), where reach is the most
unsatisfied vertices any single undecided closed neighborhood touches: one unit of weight
placed anywhere helps at most reach vertices.

The graph is split into connected components first; isolated vertices take value 1.

In deterministic mode the certificate is the optimal labeling that comes first in the search's
value order, that is the lexicographically greatest value vector, found by fixing vertices in
index order to the largest value that still admits an optimal completion.
"""

import logging
from dataclasses import dataclass
from enum import StrEnum
from itertools import product
from math import ceil
from time import monotonic

from italiandom.graphs import Graph, bits, check_size, connected_components, induced_subgraph
from italiandom.labeling import Labeling, is_dominating, is_idf, is_rdf

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 60.0  # seconds
DETERMINISTIC_MAX_N = 20
BRUTE_FORCE_MAX_N = 15
ENUMERATION_MAX_N = 12
CLOCK_INTERVAL = 256  # nodes between deadline checks


class Parameter(StrEnum):
    """Domination parameters the solver computes"""

    ITALIAN = 'italian'
    ROMAN = 'roman'
    DOMINATION = 'domination'


@dataclass(frozen=True, slots=True)
class SolveResult:
    """
    An invariant value with the labeling that achieves it.

    For domination the certificate holds 1 on the dominating set and 0 elsewhere.
    optimal is False when value is only an upper bound, which happens only inside
    BudgetExceeded. canonical is True when the certificate is the lexicographically greatest
    optimal labeling.
    """

    parameter: Parameter
    value: int
    certificate: Labeling
    optimal: bool = True
    canonical: bool = False
    nodes: int = 0

    @property
    def vertex_set(self) -> frozenset[int]:
        """Vertices with positive value; the dominating set for domination results"""
        return frozenset(v for v, value in enumerate(self.certificate) if value)

    def validates(self, graph: Graph) -> bool:
        """Check the certificate against the matching predicate and the value."""
        if self.parameter == Parameter.DOMINATION:
            return len(self.vertex_set) == self.value and is_dominating(graph, self.vertex_set)
        valid = is_idf if self.parameter == Parameter.ITALIAN else is_rdf
        return sum(self.certificate) == self.value and valid(graph, self.certificate)


class BudgetExceeded(Exception):
    """The wall-clock budget ran out before the solve finished."""

    def __init__(self, budget: float, best: SolveResult | None = None) -> None:
        self.budget = budget
        self.best = best
        if best is None:
            bound = 'no upper bound'
        elif best.optimal:
            bound = f'optimal value {best.value} without the canonical certificate'
        else:
            bound = f'best upper bound {best.value}'
        super().__init__(f'Budget of {budget:g} s exceeded; {bound}')


@dataclass(frozen=True, slots=True)
class _Rule:
    values: tuple[int, ...]  # branching order
    contribution: tuple[int, int, int]  # what a neighbor labeled 0, 1, 2 adds to support
    threshold: int


RULES = {
    Parameter.ITALIAN: _Rule(values=(2, 1), contribution=(0, 1, 2), threshold=2),
    Parameter.ROMAN: _Rule(values=(2, 1), contribution=(0, 0, 2), threshold=2),
    Parameter.DOMINATION: _Rule(values=(1,), contribution=(0, 1, 1), threshold=1),
}


class _Search:
    """Branch-and-bound state for one connected graph"""

    def __init__(self, graph: Graph, rule: _Rule, deadline: float | None) -> None:
        self.n = graph.n
        self.masks = graph.masks
        self.closed = tuple(graph.closed_mask(v) for v in range(graph.n))
        self.rank = {v: (-graph.degree(v), v) for v in range(graph.n)}
        self.rule = rule
        self.top = rule.contribution[rule.values[0]]
        self.deadline = deadline
        self.nodes = 0
        self.reset()

    def reset(self) -> None:
        self.values = [0] * self.n
        self.support = [0] * self.n
        self.undecided = (1 << self.n) - 1
        self.limit = 0
        self.first_only = False
        self.found: list[int] | None = None

    def assign(self, v: int, value: int) -> None:
        self.values[v] = value
        self.undecided &= ~(1 << v)
        if gain := self.rule.contribution[value]:
            for w in bits(self.masks[v]):
                self.support[w] += gain

    def unassign(self, v: int) -> None:
        if gain := self.rule.contribution[self.values[v]]:
            for w in bits(self.masks[v]):
                self.support[w] -= gain
        self.values[v] = 0
        self.undecided |= 1 << v

    def greedy(self) -> list[int]:
        """Upper bound: top value on a greedy dominating set"""
        uncovered = (1 << self.n) - 1
        chosen = [0] * self.n
        while uncovered:
            _, negated = max(((self.closed[v] & uncovered).bit_count(), -v) for v in range(self.n))
            best = -negated
            chosen[best] = self.rule.values[0]
            uncovered &= ~self.closed[best]
        if sum(chosen) > self.n:
            return [1] * self.n  # every vertex labeled 1 is always valid
        return chosen

    def minimize(self, upper: list[int]) -> list[int]:
        """Optimal values, given a valid labeling to beat"""
        self.reset()
        self.found = upper
        self.limit = sum(upper) - 1
        self.branch(0)
        return self.found

    def complete(self, prefix: list[int], limit: int) -> list[int] | None:
        """Any valid labeling of weight at most limit that starts with prefix"""
        self.reset()
        if sum(prefix) > limit:
            return None
        for v, value in enumerate(prefix):
            self.assign(v, value)
        self.limit = limit
        self.first_only = True
        self.branch(sum(prefix))
        return self.found

    def branch(self, weight: int) -> bool:
        """Explore below the current state; True stops the whole search."""
        self.nodes += 1
        if (
            self.deadline is not None
            and self.nodes % CLOCK_INTERVAL == 1
            and monotonic() > self.deadline
        ):
            raise TimeoutError
        threshold = self.rule.threshold
        unsatisfied = count = 0
        pivot_options = 0
        fewest = self.n + 1
        for v in range(self.n):
            if self.values[v] or self.support[v] >= threshold:
                continue
            options = self.closed[v] & self.undecided
            if not options:
                return False
            if not self.undecided >> v & 1:
                reachable = self.top * (self.masks[v] & self.undecided).bit_count()
                if self.support[v] + reachable < threshold:
                    return False
            unsatisfied |= 1 << v
            count += 1
            if (size := options.bit_count()) < fewest:
                fewest, pivot_options = size, options
        if not count:
            self.found = self.values.copy()
            self.limit = weight - 1
            return self.first_only
        reach = max((self.closed[w] & unsatisfied).bit_count() for w in bits(self.undecided))
        if weight + ceil(count / reach) > self.limit:
            return False

        skipped = 0
        for candidate in sorted(bits(pivot_options), key=self.rank.__getitem__):
            for value in self.rule.values:
                if weight + value > self.limit:
                    continue
                self.assign(candidate, value)
                stop = self.branch(weight + value)
                self.unassign(candidate)
                if stop:
                    self.undecided |= skipped
                    return True
            self.undecided &= ~(1 << candidate)
            skipped |= 1 << candidate
        self.undecided |= skipped
        return False

    def lexicographic(self, optimum: list[int]) -> list[int]:
        """
        Greatest value vector among labelings as light as optimum.

        The witness always agrees with the fixed prefix, so its next value is feasible.
        """
        limit = sum(optimum)
        witness = optimum
        prefix: list[int] = []
        for v in range(self.n):
            for value in (*self.rule.values, 0):
                if value == witness[v]:
                    break
                if (completed := self.complete([*prefix, value], limit)) is not None:
                    witness = completed
                    break
            prefix.append(witness[v])
        return prefix


def _check_solvable(graph: Graph) -> None:
    if graph.n < 1:
        raise ValueError('Domination parameters are not defined for the graph with no vertices')
    check_size(graph.n)


def _upper_bound(graph: Graph, component: list[int], rule: _Rule) -> list[int]:
    if len(component) == 1:
        return [1]
    return _Search(induced_subgraph(graph, component), rule, None).greedy()


def solve(
    graph: Graph,
    parameter: Parameter | str = Parameter.ITALIAN,
    *,
    budget: float | None = DEFAULT_BUDGET,
    deterministic: bool | None = None,
) -> SolveResult:
    """
    Compute an exact domination parameter with a certificate.

    Parameters
    ----------
    graph
        Graph with 1 to 64 vertices
    parameter
        italian, roman or domination
    budget
        Wall-clock seconds for the whole solve, or None for no limit
    deterministic
        Return the lexicographically greatest optimal certificate; defaults to on for graphs
        with at most 20 vertices

    Raises
    ------
    BudgetExceeded
        Carrying the best labeling found so far
    """
    parameter = Parameter(parameter)
    _check_solvable(graph)
    rule = RULES[parameter]
    if deterministic is None:
        deterministic = graph.n <= DETERMINISTIC_MAX_N
    started = monotonic()
    deadline = None if budget is None else started + budget
    components = [sorted(component) for component in connected_components(graph)]
    logger.debug('Solving %s on %s: %d component(s)', parameter, graph, len(components))
    values = [0] * graph.n
    nodes = 0
    for index, component in enumerate(components):
        if len(component) == 1:
            values[component[0]] = 1
            continue
        search = _Search(induced_subgraph(graph, component), rule, deadline)
        upper = search.greedy()
        proven: list[int] | None = None
        try:
            proven = search.minimize(upper)
            best = search.lexicographic(proven) if deterministic else proven
        except TimeoutError:
            # Solved components keep their optimum, the rest fall back to greedy bounds
            best = search.found or proven or upper
            rest = components[index + 1 :]
            for other in rest:
                for v, value in zip(other, _upper_bound(graph, other, rule), strict=True):
                    values[v] = value
            for v, value in zip(component, best, strict=True):
                values[v] = value
            settled = proven is not None and all(len(other) == 1 for other in rest)
            logger.debug('Budget of %s s exceeded after %d node(s)', budget, nodes + search.nodes)
            raise BudgetExceeded(
                budget or 0.0,
                _result(parameter, values, optimal=settled, nodes=nodes + search.nodes),
            ) from None
        nodes += search.nodes
        for v, value in zip(component, best, strict=True):
            values[v] = value
    result = _result(parameter, values, optimal=True, canonical=deterministic, nodes=nodes)
    logger.debug(
        'Solved %s = %d with %d node(s) in %.3f s',
        parameter,
        result.value,
        nodes,
        monotonic() - started,
    )
    return result


def _result(
    parameter: Parameter,
    values: list[int],
    *,
    optimal: bool,
    nodes: int,
    canonical: bool = False,
) -> SolveResult:
    certificate = Labeling(tuple(values))
    value = sum(map(bool, values)) if parameter == Parameter.DOMINATION else sum(values)
    return SolveResult(parameter, value, certificate, optimal, canonical, nodes)


def gamma_italian(
    graph: Graph, *, budget: float | None = DEFAULT_BUDGET, deterministic: bool | None = None
) -> SolveResult:
    """Italian domination number γ_I with a minimum Italian dominating function"""
    return solve(graph, Parameter.ITALIAN, budget=budget, deterministic=deterministic)


def gamma_roman(
    graph: Graph, *, budget: float | None = DEFAULT_BUDGET, deterministic: bool | None = None
) -> SolveResult:
    """Roman domination number γ_R with a minimum Roman dominating function"""
    return solve(graph, Parameter.ROMAN, budget=budget, deterministic=deterministic)


def gamma_domination(
    graph: Graph, *, budget: float | None = DEFAULT_BUDGET, deterministic: bool | None = None
) -> SolveResult:
    """Domination number γ with a minimum dominating set marked by 1"""
    return solve(graph, Parameter.DOMINATION, budget=budget, deterministic=deterministic)


def _scan(graph: Graph, target: int) -> list[Labeling]:
    """Italian dominating functions of weight exactly target, in lexicographic order"""
    # A vertex can be checked once its last closed-neighborhood member is assigned
    ready: list[list[int]] = [[] for _ in range(graph.n)]
    for v in range(graph.n):
        ready[graph.closed_mask(v).bit_length() - 1].append(v)
    found = []
    values = [0] * graph.n

    def extend(v: int, weight: int) -> None:
        if v == graph.n:
            if weight == target:
                found.append(Labeling(tuple(values)))
            return
        for value in (0, 1, 2):
            if weight + value > target:
                break
            values[v] = value
            if all(
                values[w] or sum(values[x] for x in bits(graph.masks[w])) >= 2 for w in ready[v]
            ):
                extend(v + 1, weight + value)
        values[v] = 0

    extend(0, 0)
    return found


def brute_force_gamma_italian(graph: Graph) -> SolveResult:
    """Independent oracle: scan all 3^n labelings."""
    _check_solvable(graph)
    check_size(graph.n, BRUTE_FORCE_MAX_N)
    best: Labeling | None = None
    for values in product((0, 1, 2), repeat=graph.n):
        if best is not None and sum(values) >= sum(best):
            continue
        labeling = Labeling(values)
        if is_idf(graph, labeling):
            best = labeling
    if best is None:  # all-ones always qualifies
        raise AssertionError('No Italian dominating function found')
    return SolveResult(Parameter.ITALIAN, sum(best), best, nodes=3**graph.n)


def enumerate_minimum_idfs(graph: Graph, *, budget: float | None = None) -> list[Labeling]:
    """Every Italian dominating function of weight γ_I, in lexicographic order"""
    _check_solvable(graph)
    check_size(graph.n, ENUMERATION_MAX_N)
    optimum = solve(graph, Parameter.ITALIAN, budget=budget, deterministic=False).value
    return _scan(graph, optimum)
