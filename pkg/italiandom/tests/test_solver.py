"""Test the exact solvers against known values and the brute-force oracle"""

from itertools import count
from typing import NoReturn

from hypothesis import given, settings
from pytest import mark, raises
from pytest_mock import MockerFixture

from italiandom.graphs import Family, Graph, SizeLimitError, disjoint_union, generate
from italiandom.labeling import Labeling, is_idf, weight
from italiandom.solver import (
    BudgetExceeded,
    Parameter,
    _Search,
    brute_force_gamma_italian,
    enumerate_minimum_idfs,
    gamma_domination,
    gamma_italian,
    gamma_roman,
    solve,
)
from italiandom.tests.strategies import graphs, labeled_graphs, repaired


@mark.parametrize(
    ('parameter', 'family', 'params', 'expected'),
    [
        (Parameter.ITALIAN, Family.PATH, (5,), 3),
        (Parameter.ITALIAN, Family.EMPTY, (1,), 1),
        (Parameter.ITALIAN, Family.CYCLE, (4,), 2),
        (Parameter.ITALIAN, Family.CYCLE, (5,), 3),
        (Parameter.ITALIAN, Family.STAR, (5,), 2),
        (Parameter.ITALIAN, Family.COMPLETE_BIPARTITE, (3, 3), 4),
        (Parameter.ROMAN, Family.COMPLETE, (4,), 2),
        (Parameter.ROMAN, Family.PATH, (4,), 3),
        (Parameter.ROMAN, Family.EMPTY, (3,), 3),
        (Parameter.DOMINATION, Family.PATH, (6,), 2),
        (Parameter.DOMINATION, Family.COMPLETE, (5,), 1),
        (Parameter.DOMINATION, Family.EMPTY, (4,), 4),
    ],
)
def test_known_values(
    parameter: Parameter, family: Family, params: tuple[int, ...], expected: int
) -> None:
    """Small families must give their textbook values with valid certificates."""
    graph = generate(family, *params)
    result = solve(graph, parameter)
    assert result.value == expected
    assert result.optimal
    assert result.validates(graph)


def test_deterministic_certificate() -> None:
    """Deterministic mode must return the greatest optimal value vector."""
    assert gamma_italian(generate(Family.CYCLE, 4)).certificate == Labeling((1, 0, 1, 0))
    assert gamma_italian(generate(Family.PATH, 3)).certificate == Labeling((1, 0, 1))
    assert gamma_roman(generate(Family.PATH, 3)).certificate == Labeling((0, 2, 0))
    assert gamma_domination(generate(Family.STAR, 3)).vertex_set == {0}
    assert gamma_italian(generate(Family.CYCLE, 4)).canonical
    assert not gamma_italian(generate(Family.CYCLE, 4), deterministic=False).canonical


def test_disjoint_components() -> None:
    """Components must be solved independently and their values added."""
    path = generate(Family.PATH, 3)
    result = gamma_italian(disjoint_union(path, path))
    assert result.value == 4
    assert result.certificate == Labeling((1, 0, 1, 1, 0, 1))
    isolated = gamma_italian(disjoint_union(generate(Family.EMPTY, 2), path))
    assert isolated.certificate == Labeling((1, 1, 1, 0, 1))


def test_solve_rejects() -> None:
    """The empty graph and unknown parameters must be refused."""
    with raises(ValueError, match='no vertices'):
        gamma_italian(Graph(0, ()))
    with raises(ValueError, match='not a valid Parameter'):
        solve(generate(Family.PATH, 2), 'total')


@mark.parametrize(
    ('graph', 'expected'),
    [
        (generate(Family.PATH, 3), 2),
        (generate(Family.COMPLETE, 2), 2),
        (generate(Family.STAR, 4), 2),
        (generate(Family.CYCLE, 6), 3),
    ],
)
def test_brute_force(graph: Graph, expected: int) -> None:
    """The exhaustive oracle must find the known minima."""
    result = brute_force_gamma_italian(graph)
    assert result.value == expected
    assert is_idf(graph, result.certificate)


def test_brute_force_size_limit() -> None:
    """The oracle must refuse graphs above 15 vertices."""
    with raises(SizeLimitError):
        brute_force_gamma_italian(generate(Family.PATH, 16))


def test_enumerate_minimum_idfs() -> None:
    """Enumeration must list every minimum labeling in lexicographic order."""
    assert enumerate_minimum_idfs(generate(Family.COMPLETE, 2)) == [
        Labeling((0, 2)),
        Labeling((1, 1)),
        Labeling((2, 0)),
    ]
    assert enumerate_minimum_idfs(generate(Family.EMPTY, 1)) == [Labeling((1,))]
    assert enumerate_minimum_idfs(generate(Family.PATH, 3)) == [
        Labeling((0, 2, 0)),
        Labeling((1, 0, 1)),
    ]
    with raises(SizeLimitError):
        enumerate_minimum_idfs(generate(Family.PATH, 13))


@settings(deadline=None)
@given(graphs(max_n=7))
def test_matches_brute_force(graph: Graph) -> None:
    """Branch and bound must agree with the exhaustive scan."""
    result = gamma_italian(graph, budget=None)
    assert result.value == brute_force_gamma_italian(graph).value
    assert result.validates(graph)
    minimum = enumerate_minimum_idfs(graph)
    assert result.certificate == max(minimum, key=tuple)
    assert gamma_italian(graph, budget=None, deterministic=False).value == result.value


@settings(deadline=None)
@given(graphs(max_n=9))
def test_parameter_chain(graph: Graph) -> None:
    """γ <= γ_I <= γ_R <= 2γ must hold on every graph."""
    domination = gamma_domination(graph, budget=None, deterministic=False)
    italian = gamma_italian(graph, budget=None, deterministic=False)
    roman = gamma_roman(graph, budget=None, deterministic=False)
    assert domination.value <= italian.value <= roman.value <= 2 * domination.value
    assert domination.validates(graph)
    assert roman.validates(graph)


@settings(deadline=None)
@given(labeled_graphs(max_n=10))
def test_value_below_any_italian_labeling(case: tuple[Graph, Labeling]) -> None:
    """No Italian dominating function may weigh less than γ_I."""
    graph, labeling = case
    labeling = repaired(graph, labeling)
    assert is_idf(graph, labeling)
    assert gamma_italian(graph, budget=None, deterministic=False).value <= weight(labeling)


def test_budget_exceeded(mocker: MockerFixture) -> None:
    """A spent budget must raise with a valid but unproven labeling."""
    mocker.patch('italiandom.solver.monotonic', side_effect=count(0, 100))
    graph = generate(Family.CYCLE, 12)
    with raises(BudgetExceeded, match='Budget of 60 s exceeded') as error:
        gamma_italian(graph)
    best = error.value.best
    assert best is not None
    assert not best.optimal
    assert best.value >= 6
    assert is_idf(graph, best.certificate)
    assert error.value.budget == 60


def test_budget_exceeded_keeps_proven_optimum(mocker: MockerFixture) -> None:
    """A budget spent while picking the canonical certificate must keep the proven optimum."""

    def interrupted(search: _Search, *_args: object) -> NoReturn:
        search.reset()
        raise TimeoutError

    mocker.patch.object(_Search, 'complete', autospec=True, side_effect=interrupted)
    graph = generate(Family.CYCLE, 12)
    with raises(BudgetExceeded, match='optimal value 6 without the canonical certificate') as error:
        gamma_italian(graph)
    best = error.value.best
    assert best is not None
    assert best.optimal
    assert not best.canonical
    assert best.value == 6
    assert best.validates(graph)
