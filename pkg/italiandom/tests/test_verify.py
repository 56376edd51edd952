"""Test the theorem checks and the suite runner"""

from json import loads

from pytest import fixture, mark, raises
from pytest_mock import MockerFixture

from italiandom.graphs import Family, Graph, generate
from italiandom.labeling import Labeling
from italiandom.solver import BudgetExceeded, Parameter, SolveResult, solve
from italiandom.verify import (
    THEOREM_IDS,
    Session,
    Status,
    SuiteConfig,
    check_theorem,
    render_json,
    run_suite,
    theorem_ids,
)


@fixture
def tiny() -> SuiteConfig:
    """Few samples per check, for runs that take seconds"""
    return SuiteConfig(samples=5, pairs=5, iff_samples=3, double_samples=2, oracle_samples=10)


def test_theorem_ids() -> None:
    """Ids must come in suite order with SANDWICH last."""
    assert theorem_ids() == THEOREM_IDS
    assert theorem_ids()[:3] == ('T1', 'T2', 'T3')
    assert theorem_ids()[-1] == 'SANDWICH'
    assert len(set(theorem_ids())) == 17


def test_path_corona_values() -> None:
    """P_n⊙K_1 must match ceil(4n / 3) with its witness."""
    rows = check_theorem('T9', range(1, 10))
    assert [row.computed for row in rows] == [2, 3, 4, 6, 7, 8, 10, 11, 12]
    assert all(row.status == Status.PASS for row in rows)
    assert rows[0].instance == 'P_1'
    assert rows[0].expected == '= 2'
    assert rows[0].witness is not None


def test_witness_only_rows() -> None:
    """Without params, constructions past corona_n are checked alone."""
    config = SuiteConfig(corona_n=4, witness_n=7)
    rows = check_theorem('T10', config=config)
    assert [row.instance for row in rows] == [
        'C_3',
        'C_4',
        'C_5 witness',
        'C_6 witness',
        'C_7 witness',
    ]
    assert all(row.status == Status.PASS for row in rows)
    assert rows[-1].computed == 10


def test_universal_exhaustive() -> None:
    """T5 must hold on every labeled graph up to four vertices."""
    config = SuiteConfig(exhaustive_n=4, random_n=4, iff_samples=0)
    rows = check_theorem('T5', config=config)
    assert len(rows) == 1 + 2 + 8 + 64
    assert all(row.status == Status.PASS for row in rows)


def test_edgeless_given_graphs() -> None:
    """T6 must accept both sides of the equivalence."""
    rows = check_theorem('T6', [generate(Family.EMPTY, 3), generate(Family.PATH, 3)])
    assert [(row.computed, row.status) for row in rows] == [(6, Status.PASS), (4, Status.PASS)]


def test_realization_rows() -> None:
    """Values outside [n + 1, 2n] must be rejected, values inside realized."""
    rows = check_theorem('T4', [(3, 3), (3, 7), (3, 5)])
    assert [row.computed for row in rows] == ['ValueError', 'ValueError', 5]
    assert [row.status for row in rows] == [Status.PASS] * 3
    assert rows[0].certificate is None
    assert rows[0].expected == 'ValueError'
    assert rows[2].certificate is not None


def test_realization_default_range(tiny: SuiteConfig) -> None:
    """Each n must try a = n through 2n + 1."""
    rows = check_theorem('T4', config=tiny.with_max_n(2))
    assert [row.instance for row in rows] == [
        'realize(n=1, a=1)',
        'realize(n=1, a=2)',
        'realize(n=1, a=3)',
        'realize(n=2, a=2)',
        'realize(n=2, a=3)',
        'realize(n=2, a=4)',
        'realize(n=2, a=5)',
    ]


def test_corona_general_rejects_small_h() -> None:
    """T2 needs H on at least two vertices."""
    with raises(ValueError, match='at least two'):
        check_theorem('T2', [(generate(Family.PATH, 2), generate(Family.EMPTY, 1))])


@mark.parametrize(
    ('theorem_id', 'graph', 'checked'),
    [
        ('L1', generate(Family.PATH, 4), '2 pendant(s)'),
        ('L2', generate(Family.COMPLETE, 3), '6 true twin pair(s)'),
        ('L3', generate(Family.CYCLE, 4), '4 false twin pair(s)'),
        ('TT', generate(Family.STAR, 3), '4 twin pair(s)'),
        ('FT', generate(Family.PATH, 3), '3 twin pair(s)'),
    ],
)
def test_lemma_summary(theorem_id: str, graph: Graph, checked: str) -> None:
    """Given graphs must produce one clean summary row."""
    (row,) = check_theorem(theorem_id, [graph])
    assert row.instance == f'given graphs: {checked}'
    assert row.expected == '0 violations'
    assert row.computed == 0
    assert row.certificate is None
    assert row.status == Status.PASS


def test_lemma_groups_per_vertex_count() -> None:
    """Exhaustive runs must summarize each vertex count."""
    rows = check_theorem('L1', config=SuiteConfig(lemma_n=3))
    assert [row.instance.split(':')[0] for row in rows] == [
        f'labeled graphs on {n} vertices' for n in (1, 2, 3)
    ]
    assert rows[1].instance.endswith('2 pendant(s)')
    assert all(row.status == Status.PASS for row in rows)


def test_oracle_and_sandwich() -> None:
    """The oracle must agree and the parameter chain must report its values."""
    cycle = generate(Family.CYCLE, 5)
    (oracle,) = check_theorem('ORACLE', [cycle])
    assert (oracle.expected, oracle.computed, oracle.status) == ('= 3', 3, Status.PASS)
    (row,) = check_theorem('SANDWICH', [cycle])
    assert row.expected == 'γ = 2, γ_R = 4: γ <= γ_I <= γ_R <= 2γ'
    assert row.computed == 3
    assert row.graph6 == 'Dhc'


def test_budget_exceeded_row(mocker: MockerFixture) -> None:
    """Overruns must be reported with the best labeling, not as failures."""
    best = SolveResult(Parameter.ITALIAN, 2, Labeling((1, 0, 1)), optimal=False)
    mocker.patch('italiandom.verify.solve', side_effect=BudgetExceeded(1.0, best))
    (row,) = check_theorem('T1', [3])
    assert (row.status, row.computed, row.certificate) == (Status.EXCEEDED, 2, '1,0,1')
    rows = check_theorem('TT', [generate(Family.PATH, 2)])
    assert [row.status for row in rows] == [Status.EXCEEDED] * 3
    assert rows[0].computed == 0


def test_session_caches_solves(mocker: MockerFixture) -> None:
    """Repeated solves must hit the cache and record touched graphs."""
    spy = mocker.patch('italiandom.verify.solve', wraps=solve)
    session = Session(SuiteConfig())
    path = generate(Family.PATH, 4)
    first = session.solve(path)
    assert session.solve(path) is first
    session.solve(path, Parameter.ROMAN, touch=False)
    session.solve(generate(Family.PATH, 5), touch=False, remember=False)
    session.solve(generate(Family.PATH, 5), touch=False, remember=False)
    assert spy.call_count == 4
    assert list(session.touched) == [path]
    assert session.rng('T3').random() == session.rng('T3').random()


def test_sweep_graphs_chained(mocker: MockerFixture) -> None:
    """Sweep solves must be chained once per graph and offenders kept with their graph6."""
    results = {
        Parameter.DOMINATION: SolveResult(Parameter.DOMINATION, 1, Labeling((0, 1, 0))),
        Parameter.ITALIAN: SolveResult(Parameter.ITALIAN, 2, Labeling((1, 0, 1))),
        Parameter.ROMAN: SolveResult(Parameter.ROMAN, 3, Labeling((1, 1, 1))),
    }

    def fake_solve(_graph: Graph, parameter: Parameter, **_options: object) -> SolveResult:
        return results[parameter]

    mocker.patch('italiandom.verify.solve', side_effect=fake_solve)
    path = generate(Family.PATH, 3)
    quiet = Session(SuiteConfig())
    quiet.solve(path, sweep=True)
    assert quiet.swept['checked'] == 0
    session = Session(SuiteConfig(), chain_sweeps=True)
    session.solve(path, sweep=True)
    session.solve(path, sweep=True)
    assert (session.swept['checked'], session.swept['violations']) == (1, 1)
    assert not session.touched
    (row,) = session.swept_rows
    assert (row.theorem, row.status, row.graph6) == ('SANDWICH', Status.FAIL, 'Bg')
    assert row.expected == 'γ = 1, γ_R = 3: γ <= γ_I <= γ_R <= 2γ'


def test_unknown_id() -> None:
    """Unknown ids must be refused before anything runs."""
    with raises(ValueError, match='Unknown theorem id'):
        check_theorem('T11')
    with raises(ValueError, match='Unknown theorem id'):
        run_suite(theorem_ids=['T1', 'lemma'])


def test_config_validation() -> None:
    """Negative sizes, non-positive budgets and max_n below 1 must be refused."""
    with raises(ValueError, match='samples must not be negative'):
        SuiteConfig(samples=-1)
    with raises(ValueError, match='budget must be positive'):
        SuiteConfig(budget=0)
    with raises(ValueError, match='max_n must be at least 1'):
        SuiteConfig().with_max_n(0)
    clamped = SuiteConfig().with_max_n(3)
    assert (clamped.max_n, clamped.witness_n, clamped.oracle_n) == (3, 3, 3)
    assert clamped.samples == SuiteConfig().samples
    assert SuiteConfig(budget=None).budget is None


def test_run_suite_is_reproducible(tiny: SuiteConfig) -> None:
    """Equal configs must give byte-identical JSON and a clean run."""
    config = tiny.with_max_n(2)
    report = run_suite(config)
    assert report.ok
    assert report.summary['fail'] == 0
    assert report.summary['pass'] == len(report.results)
    assert render_json(report) == render_json(run_suite(config))
    document = loads(render_json(report))
    assert set(document) == {'results', 'suite', 'summary'}
    assert document['suite']['seed'] == 7
    assert {row['theorem'] for row in document['results']} == set(THEOREM_IDS) - {'T10'}


def test_run_suite_selection(tiny: SuiteConfig) -> None:
    """Selected ids must run in suite order, SANDWICH over what they solved."""
    report = run_suite(tiny, ['SANDWICH', 'T1'])
    theorems = [row.theorem for row in report.results]
    assert theorems == ['T1'] * 16 + ['SANDWICH'] * 16
    assert report.ok


def test_run_suite_chains_sweeps(tiny: SuiteConfig) -> None:
    """SANDWICH must summarize the graphs the lemma and twin sweeps solved."""
    report = run_suite(tiny.with_max_n(3), ['TT', 'L1', 'SANDWICH'])
    (summary,) = [row for row in report.results if row.theorem == 'SANDWICH']
    assert summary.instance.startswith('lemma and twin sweeps: ')
    assert (summary.computed, summary.status) == (0, Status.PASS)
    assert report.ok
    alone = check_theorem('TT', None, tiny.with_max_n(3))
    assert all(row.theorem == 'TT' for row in alone)
