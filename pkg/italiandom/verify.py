"""
Mechanical verification of the corona, twin and pendant results

Every check solves exactly and compares against a closed form, a bound pair or an iff
predicate. Checks that have an explicit construction also validate it: the witness must be an
Italian dominating function of the same graph with exactly the advertised weight.

Ids:

T1        γ_I(P_n) = ceil((n + 1) / 2)
T2        γ_I(G⊙H) = 2 n_G for n_H >= 2
T3        n + 1 <= γ_I(G⊙K_1) <= 2n
T4        every a in [n + 1, 2n] is realized; a outside is rejected
T5        γ_I(G⊙K_1) = n + 1 iff G has a universal vertex
T6        γ_I(G⊙K_1) = 2n iff G is edgeless
T7        γ_I(K_{p,q}⊙K_1)
T8        γ_I((G⊙K_1)⊙K_1) = 3n
T9, T10   γ_I(P_n⊙K_1) = γ_I(C_n⊙K_1) = ceil(4n / 3)
L1        some minimum IDF avoids 2 on a given pendant vertex
L2        some minimum IDF puts 0 on a given true twin
L3        some minimum IDF avoids 2 on a given false twin
TT, FT    adding a true or false twin raises γ_I by 0 or 1
ORACLE    branch and bound agrees with the brute-force scan
SANDWICH  γ <= γ_I <= γ_R <= 2γ on every graph solved in the run; graphs from the lemma and
          twin sweeps share one summary row

Exhaustive lemma and twin checks produce one summary row per vertex count plus one row per
counterexample, which carries the graph6 string of the offending graph.
"""

import logging
from collections import Counter
from collections.abc import Callable, Iterable, Iterator, Sequence
from dataclasses import asdict, dataclass, field, replace
from enum import StrEnum
from json import dumps
from random import Random
from typing import Any, NamedTuple

from italiandom.formats import encode_graph6
from italiandom.graphs import (
    Family,
    Graph,
    TwinRelation,
    all_labeled_graphs,
    generate,
    is_connected,
    is_edgeless,
    pendant_vertices,
    random_graph,
    twin_pairs,
    universal_vertices,
)
from italiandom.labeling import (
    Labeling,
    NormalizationError,
    extend_to_twin,
    is_idf,
    normalize_false_twin,
    normalize_pendant,
    normalize_true_twin,
    weight,
)
from italiandom.operators import add_twin, corona, corona_k1
from italiandom.solver import (
    BudgetExceeded,
    Parameter,
    SolveResult,
    brute_force_gamma_italian,
    enumerate_minimum_idfs,
    solve,
)
from italiandom.witnesses import (
    ClosedForm,
    Witness,
    closed_form,
    formula_bipartite_corona,
    formula_corona_k1_cycle,
    formula_corona_k1_path,
    realize_corona_k1,
    witness_bipartite_corona,
    witness_corona,
    witness_cycle_corona,
    witness_double_corona,
    witness_edge_corona,
    witness_leaf_corona,
    witness_path_corona,
    witness_realization,
    witness_universal_corona,
)

logger = logging.getLogger(__name__)

SANDWICH_CHAIN = 'γ <= γ_I <= γ_R <= 2γ'

THEOREM_IDS = (
    'T1',
    'T2',
    'T3',
    'T4',
    'T5',
    'T6',
    'T7',
    'T8',
    'T9',
    'T10',
    'L1',
    'L2',
    'L3',
    'TT',
    'FT',
    'ORACLE',
    'SANDWICH',
)


def theorem_ids() -> tuple[str, ...]:
    """Every id check_theorem accepts, in suite order"""
    return THEOREM_IDS


class Status(StrEnum):
    """Outcome of one report row"""

    PASS = 'pass'
    FAIL = 'fail'
    EXCEEDED = 'budget_exceeded'


@dataclass(frozen=True, slots=True)
class TheoremReport:
    """
    One checked instance.

    computed is the solver value, or a description of what went wrong for checks without a
    single value. certificate is the labeling behind computed; re-running is_idf and weight on
    it reproduces computed. witness is the explicit construction checked alongside, if any.
    """

    theorem: str
    instance: str
    expected: str
    computed: int | str | None
    certificate: str | None
    status: Status
    graph6: str | None = None
    witness: str | None = None

    def as_dict(self) -> dict[str, Any]:
        """Plain fields for JSON"""
        return asdict(self)


_SIZE_FIELDS = (
    'max_n',
    'pair_n',
    'random_n',
    'realize_n',
    'exhaustive_n',
    'bipartite_max',
    'double_n',
    'double_random_n',
    'corona_n',
    'witness_n',
    'lemma_n',
    'twin_n',
    'oracle_n',
)


@dataclass(frozen=True, slots=True)
class SuiteConfig:
    """Instance ranges, sample counts and the per-solve budget; defaults give the full run"""

    seed: int = 7
    max_n: int = 16  # T1 paths
    pair_n: int = 5  # T2 G; H has 2 or 3 vertices
    pairs: int = 50
    random_n: int = 8  # T3 sizes and the top of the T5/T6 random range
    samples: int = 100
    realize_n: int = 6
    exhaustive_n: int = 5
    iff_samples: int = 30
    bipartite_max: int = 4
    double_n: int = 4
    double_random_n: int = 5
    double_samples: int = 20
    corona_n: int = 9  # T9/T10 solved
    witness_n: int = 30  # T9/T10 witness only
    lemma_n: int = 6
    twin_n: int = 6
    oracle_n: int = 9
    oracle_samples: int = 500
    budget: float | None = 60.0

    def __post_init__(self) -> None:
        for name in (*_SIZE_FIELDS, 'pairs', 'samples', 'iff_samples', 'double_samples'):
            if getattr(self, name) < 0:
                raise ValueError(f'{name} must not be negative, got {getattr(self, name)}')
        if self.budget is not None and self.budget <= 0:
            raise ValueError(f'budget must be positive, got {self.budget}')

    def with_max_n(self, n: int) -> 'SuiteConfig':
        """Copy with every size limit clamped to n"""
        if n < 1:
            raise ValueError(f'max_n must be at least 1, got {n}')
        return replace(self, **{name: min(getattr(self, name), n) for name in _SIZE_FIELDS})


@dataclass(frozen=True, slots=True)
class SuiteReport:
    """Rows of one run with the config that produced them"""

    config: SuiteConfig
    results: tuple[TheoremReport, ...]

    @property
    def summary(self) -> dict[str, int]:
        """Row counts per status"""
        counts = Counter(report.status for report in self.results)
        return {
            'pass': counts[Status.PASS],
            'fail': counts[Status.FAIL],
            'exceeded': counts[Status.EXCEEDED],
        }

    @property
    def ok(self) -> bool:
        """No failures; budget overruns are reported separately."""
        return not self.summary['fail']

    def as_dict(self) -> dict[str, Any]:
        """Config, rows and summary, as render_json writes them"""
        return {
            'suite': asdict(self.config),
            'results': [report.as_dict() for report in self.results],
            'summary': self.summary,
        }


def render_json(report: SuiteReport) -> str:
    """Byte-stable JSON for a report"""
    return dumps(report.as_dict(), indent=2, sort_keys=True)


@dataclass
class Session:
    """
    State shared by the checks of one run.

    Solves are cached per graph and parameter. Every graph solved for a T-check or ORACLE is
    recorded in touched, which SANDWICH revisits one row at a time. Graphs solved by the lemma
    and twin sweeps are too many for a row each: with chain_sweeps on, each is checked against
    γ <= γ_I <= γ_R <= 2γ as it is solved, and only the tally and the offenders are kept.
    """

    config: SuiteConfig
    chain_sweeps: bool = False
    touched: dict[Graph, None] = field(default_factory=dict)
    swept: Counter[str] = field(default_factory=Counter, init=False)
    swept_rows: list[TheoremReport] = field(default_factory=list, init=False)
    _chained: set[Graph] = field(default_factory=set, init=False)
    _results: dict[tuple[Graph, Parameter], SolveResult] = field(default_factory=dict, init=False)
    _minimum: dict[Graph, list[Labeling]] = field(default_factory=dict, init=False)

    def rng(self, theorem_id: str) -> Random:
        """Generator seeded by the suite seed and the check id alone"""
        return Random(f'{self.config.seed}:{theorem_id}')

    def solve(  # noqa: PLR0913
        self,
        graph: Graph,
        parameter: Parameter = Parameter.ITALIAN,
        *,
        touch: bool = True,
        remember: bool = True,
        sweep: bool = False,
    ) -> SolveResult:
        """
        Solve with the configured budget, through the cache.

        Parameters
        ----------
        touch
            Record graph for SANDWICH
        remember
            Cache the result
        sweep
            graph comes from a lemma or twin sweep; chain its γ_I here instead of touching it
        """
        if touch and not sweep:
            self.touched.setdefault(graph)
        key = (graph, parameter)
        result = self._results.get(key)
        if result is None:
            result = solve(graph, parameter, budget=self.config.budget, deterministic=False)
            if remember:
                self._results[key] = result
        chain = sweep and self.chain_sweeps and parameter == Parameter.ITALIAN
        if chain and graph not in self._chained:
            self._chained.add(graph)
            self._chain(graph, result, remember=remember)
        return result

    def _chain(self, graph: Graph, italian: SolveResult, *, remember: bool) -> None:
        self.swept['checked'] += 1
        try:
            gamma = self.solve(graph, Parameter.DOMINATION, touch=False, remember=remember)
            roman = self.solve(graph, Parameter.ROMAN, touch=False, remember=remember)
        except BudgetExceeded as exceeded:
            self.swept['exceeded'] += 1
            graph6 = encode_graph6(graph)
            self.swept_rows.append(
                _exceeded('SANDWICH', f'G={graph6}', SANDWICH_CHAIN, graph6, exceeded)
            )
            return
        if not _chain_holds(graph, gamma, italian, roman):
            self.swept['violations'] += 1
            self.swept_rows.append(_sandwich_report(graph, gamma, italian, roman))

    def minimum_idfs(self, graph: Graph) -> list[Labeling]:
        """Every minimum Italian dominating function of graph, cached"""
        if graph not in self._minimum:
            self._minimum[graph] = enumerate_minimum_idfs(graph, budget=self.config.budget)
        return self._minimum[graph]


def _report(  # noqa: PLR0913
    theorem_id: str,
    instance: str,
    expected: str,
    computed: int | str | None,
    certificate: Labeling | None,
    *,
    passed: bool,
    graph6: str | None = None,
    witness: Witness | None = None,
) -> TheoremReport:
    if not passed:
        logger.warning(
            '%s failed on %s: expected %s, computed %s, graph6 %s',
            theorem_id,
            instance,
            expected,
            computed,
            graph6,
        )
    return TheoremReport(
        theorem_id,
        instance,
        expected,
        computed,
        None if certificate is None else str(certificate),
        Status.PASS if passed else Status.FAIL,
        graph6,
        None if witness is None else str(witness.labeling),
    )


def _exceeded(
    theorem_id: str, instance: str, expected: str, graph6: str | None, exceeded: BudgetExceeded
) -> TheoremReport:
    logger.warning('%s on %s: %s', theorem_id, instance, exceeded)
    best = exceeded.best
    return TheoremReport(
        theorem_id,
        instance,
        expected,
        None if best is None else best.value,
        None if best is None else str(best.certificate),
        Status.EXCEEDED,
        graph6,
    )


def _witness_holds(witness: Witness, graph: Graph, expected_weight: int) -> bool:
    return (
        witness.graph == graph
        and is_idf(graph, witness.labeling)
        and weight(witness.labeling) == expected_weight
    )


def _solved(  # noqa: PLR0913
    session: Session,
    theorem_id: str,
    instance: str,
    graph: Graph,
    expected: ClosedForm,
    judge: Callable[[int], bool] | None = None,
    witness: tuple[Witness, int] | None = None,
) -> TheoremReport:
    """Solve graph for γ_I, judge the value and check the optional (witness, weight) pair."""
    graph6 = encode_graph6(graph)
    try:
        result = session.solve(graph)
    except BudgetExceeded as exceeded:
        return _exceeded(theorem_id, instance, str(expected), graph6, exceeded)
    passed = (judge or expected.holds)(result.value) and result.validates(graph)
    if witness is not None:
        passed = passed and _witness_holds(witness[0], graph, witness[1])
    return _report(
        theorem_id,
        instance,
        str(expected),
        result.value,
        result.certificate,
        passed=passed,
        graph6=graph6,
        witness=None if witness is None else witness[0],
    )


def _iff(target: int, condition: bool) -> Callable[[int], bool]:
    return lambda value: (value == target) == condition


def _family_graphs(limit: int) -> Iterator[Graph]:
    """Small members of every generated family"""
    for n in range(1, limit + 1):
        yield generate(Family.PATH, n)
        if n >= 3:
            yield generate(Family.CYCLE, n)
        yield generate(Family.COMPLETE, n)
        yield generate(Family.EMPTY, n)
        if n >= 2:
            yield generate(Family.STAR, n - 1)
        for p in range(2, n // 2 + 1):
            yield generate(Family.COMPLETE_BIPARTITE, p, n - p)


def _check_path(session: Session, params: Iterable[int] | None) -> list[TheoremReport]:
    sizes = range(1, session.config.max_n + 1) if params is None else params
    return [
        _solved(session, 'T1', f'P_{n}', generate(Family.PATH, n), closed_form('T1', (n,)))
        for n in sizes
    ]


def _check_corona_general(
    session: Session, params: Iterable[tuple[Graph, Graph]] | None
) -> list[TheoremReport]:
    if params is None:
        rng = session.rng('T2')
        params = [
            (
                random_graph(rng.randint(1, session.config.pair_n), rng),
                random_graph(rng.randint(2, 3), rng),
            )
            for _ in range(session.config.pairs)
        ]
    rows = []
    for g, h in params:
        if h.n < 2:
            raise ValueError(f'H needs at least two vertices, got {h.n}')
        graph, _ = corona(g, h)
        rows.append(
            _solved(
                session,
                'T2',
                f'G={encode_graph6(g)} H={encode_graph6(h)}',
                graph,
                closed_form('T2', (g.n,)),
                witness=(witness_corona(g, h), 2 * g.n),
            )
        )
    return rows


def _random_graphs(
    session: Session, theorem_id: str, low: int, high: int, count: int
) -> list[Graph]:
    if low > high:
        return []
    rng = session.rng(theorem_id)
    return [random_graph(rng.randint(low, high), rng) for _ in range(count)]


def _check_corona_bounds(session: Session, params: Iterable[Graph] | None) -> list[TheoremReport]:
    config = session.config
    graphs = params
    if graphs is None:
        graphs = _random_graphs(session, 'T3', 1, config.random_n, config.samples)
    rows = []
    for g in graphs:
        graph, _ = corona_k1(g)
        leaf = witness_leaf_corona(g)
        rows.append(
            _solved(
                session,
                'T3',
                f'G={encode_graph6(g)}',
                graph,
                closed_form('T3', (g.n,)),
                witness=(leaf, 2 * g.n),
            )
        )
    return rows


def _check_realization(
    session: Session, params: Iterable[tuple[int, int]] | None
) -> list[TheoremReport]:
    if params is None:
        top = session.config.realize_n
        params = [(n, a) for n in range(1, top + 1) for a in range(n, 2 * n + 2)]
    rows = []
    for n, a in params:
        instance = f'realize(n={n}, a={a})'
        if not n + 1 <= a <= 2 * n:
            try:
                realize_corona_k1(n, a)
            except ValueError:
                computed = 'ValueError'
            else:
                computed = 'accepted'
            rows.append(
                _report('T4', instance, 'ValueError', computed, None, passed=computed != 'accepted')
            )
            continue
        graph, _ = corona_k1(realize_corona_k1(n, a))
        rows.append(
            _solved(
                session,
                'T4',
                instance,
                graph,
                closed_form('T4', (n, a)),
                witness=(witness_realization(n, a), a),
            )
        )
    return rows


def _iff_graphs(session: Session, theorem_id: str) -> Iterator[Graph]:
    config = session.config
    for n in range(1, config.exhaustive_n + 1):
        yield from all_labeled_graphs(n)
    yield from _random_graphs(
        session, theorem_id, config.exhaustive_n + 1, config.random_n, config.iff_samples
    )


def _check_universal(session: Session, params: Iterable[Graph] | None) -> list[TheoremReport]:
    rows = []
    for g in _iff_graphs(session, 'T5') if params is None else params:
        graph, _ = corona_k1(g)
        universal = universal_vertices(g)
        witness = (witness_universal_corona(g, min(universal)), g.n + 1) if universal else None
        rows.append(
            _solved(
                session,
                'T5',
                f'G={encode_graph6(g)}',
                graph,
                closed_form('T5', (g.n,)),
                judge=_iff(g.n + 1, bool(universal)),
                witness=witness,
            )
        )
    return rows


def _check_edgeless(session: Session, params: Iterable[Graph] | None) -> list[TheoremReport]:
    rows = []
    for g in _iff_graphs(session, 'T6') if params is None else params:
        graph, _ = corona_k1(g)
        edgeless = is_edgeless(g)
        if edgeless:
            witness = (witness_leaf_corona(g), 2 * g.n)
        else:
            witness = (witness_edge_corona(g, *g.edges[0]), 2 * g.n - 1)
        rows.append(
            _solved(
                session,
                'T6',
                f'G={encode_graph6(g)}',
                graph,
                closed_form('T6', (g.n,)),
                judge=_iff(2 * g.n, edgeless),
                witness=witness,
            )
        )
    return rows


def _check_bipartite(
    session: Session, params: Iterable[tuple[int, int]] | None
) -> list[TheoremReport]:
    if params is None:
        top = session.config.bipartite_max
        params = [(p, q) for p in range(1, top + 1) for q in range(p, top + 1)]
    rows = []
    for p, q in params:
        graph, _ = corona_k1(generate(Family.COMPLETE_BIPARTITE, p, q))
        rows.append(
            _solved(
                session,
                'T7',
                f'K_{{{p},{q}}}',
                graph,
                closed_form('T7', (p, q)),
                witness=(witness_bipartite_corona(p, q), formula_bipartite_corona(p, q)),
            )
        )
    return rows


def _check_double_corona(session: Session, params: Iterable[Graph] | None) -> list[TheoremReport]:
    if params is None:
        config = session.config
        connected = [
            g
            for n in range(1, config.double_n + 1)
            for g in all_labeled_graphs(n)
            if is_connected(g)
        ]
        params = connected + _random_graphs(
            session, 'T8', config.double_random_n, config.double_random_n, config.double_samples
        )
    rows = []
    for g in params:
        inner, _ = corona_k1(g)
        graph, _ = corona_k1(inner)
        rows.append(
            _solved(
                session,
                'T8',
                f'G={encode_graph6(g)}',
                graph,
                closed_form('T8', (g.n,)),
                witness=(witness_double_corona(g), 3 * g.n),
            )
        )
    return rows


def _check_leaf_corona(  # noqa: PLR0913
    session: Session,
    theorem_id: str,
    family: Family,
    builder: Callable[[int], Witness],
    formula: Callable[[int], int],
    params: Iterable[int] | None,
) -> list[TheoremReport]:
    config = session.config
    low = 3 if family == Family.CYCLE else 1
    letter = 'C' if family == Family.CYCLE else 'P'
    rows = []
    for n in range(low, config.corona_n + 1) if params is None else params:
        graph, _ = corona_k1(generate(family, n))
        expected = closed_form(theorem_id, (n,))
        witness = (builder(n), formula(n))
        rows.append(_solved(session, theorem_id, f'{letter}_{n}', graph, expected, witness=witness))
    if params is None:
        # Constructions alone, past what the solver is asked to confirm
        for n in range(max(low, config.corona_n + 1), config.witness_n + 1):
            construction = builder(n)
            expected = closed_form(theorem_id, (n,))
            value = weight(construction.labeling)
            rows.append(
                _report(
                    theorem_id,
                    f'{letter}_{n} witness',
                    str(expected),
                    value,
                    construction.labeling,
                    passed=is_idf(construction.graph, construction.labeling)
                    and expected.holds(value),
                    graph6=encode_graph6(construction.graph),
                    witness=construction,
                )
            )
    return rows


def _check_path_corona(session: Session, params: Iterable[int] | None) -> list[TheoremReport]:
    return _check_leaf_corona(
        session, 'T9', Family.PATH, witness_path_corona, formula_corona_k1_path, params
    )


def _check_cycle_corona(session: Session, params: Iterable[int] | None) -> list[TheoremReport]:
    return _check_leaf_corona(
        session, 'T10', Family.CYCLE, witness_cycle_corona, formula_corona_k1_cycle, params
    )


def _catalog(limit: int, params: Iterable[Graph] | None) -> Iterator[tuple[str, Iterable[Graph]]]:
    """(label, graphs) groups: every labeled graph per vertex count, or the given graphs"""
    if params is not None:
        yield 'given graphs', params
        return
    for n in range(1, limit + 1):
        yield f'labeled graphs on {n} vertices', all_labeled_graphs(n)


def _tally_status(tally: Counter[str]) -> Status:
    if tally['violations']:
        return Status.FAIL
    return Status.EXCEEDED if tally['exceeded'] else Status.PASS


def _tally_rows(  # noqa: PLR0913
    session: Session,
    theorem_id: str,
    limit: int,
    params: Iterable[Graph] | None,
    targets: Callable[[Graph], Sequence[tuple[int, int]]],
    failure: Callable[[Session, Graph, int, int], str | None],
    unit: str,
) -> list[TheoremReport]:
    """
    Run failure on every target of every catalog graph.

    failure returns None when the property holds and a description otherwise. Each group gets
    a summary row counting violations; each violation and budget overrun gets its own row.
    """
    rows = []
    for label, graphs in _catalog(limit, params):
        tally: Counter[str] = Counter()
        details = []
        for g in graphs:
            for u, other in targets(g):
                tally['checked'] += 1
                try:
                    problem = failure(session, g, u, other)
                except BudgetExceeded as exceeded:
                    tally['exceeded'] += 1
                    graph6 = encode_graph6(g)
                    instance = f'G={graph6} {unit} ({u}, {other})'
                    details.append(_exceeded(theorem_id, instance, 'holds', graph6, exceeded))
                    continue
                if problem is not None:
                    tally['violations'] += 1
                    graph6 = encode_graph6(g)
                    instance = f'G={graph6} {unit} ({u}, {other})'
                    details.append(
                        _report(
                            theorem_id,
                            instance,
                            'holds',
                            problem,
                            None,
                            passed=False,
                            graph6=graph6,
                        )
                    )
        summary = TheoremReport(
            theorem_id,
            f'{label}: {tally["checked"]} {unit}(s)',
            '0 violations',
            tally['violations'],
            None,
            _tally_status(tally),
        )
        logger.info('%s %s: %s', theorem_id, label, dict(tally))
        rows += [summary, *details]
    return rows


class _Lemma(NamedTuple):
    targets: Callable[[Graph], Sequence[tuple[int, int]]]
    holds: Callable[[Labeling, int, int], bool]
    normalize: Callable[[Graph, Labeling, int, int], Labeling]
    unit: str


def _pendant_targets(g: Graph) -> list[tuple[int, int]]:
    return [(u, g.neighbors(u)[0]) for u in sorted(pendant_vertices(g))]


def _true_twin_targets(g: Graph) -> list[tuple[int, int]]:
    return twin_pairs(g, TwinRelation.TRUE)


def _false_twin_targets(g: Graph) -> list[tuple[int, int]]:
    return twin_pairs(g, TwinRelation.FALSE)


def _avoids_two(f: Labeling, u: int, _support: int) -> bool:
    return f[u] != 2


def _twin_zero(f: Labeling, _u: int, twin: int) -> bool:
    return f[twin] == 0


def _twin_avoids_two(f: Labeling, _u: int, twin: int) -> bool:
    return f[twin] != 2


def _normalize_pendant(g: Graph, f: Labeling, u: int, _support: int) -> Labeling:
    return normalize_pendant(g, f, u)


_LEMMAS = {
    'L1': _Lemma(_pendant_targets, _avoids_two, _normalize_pendant, 'pendant'),
    'L2': _Lemma(_true_twin_targets, _twin_zero, normalize_true_twin, 'true twin pair'),
    'L3': _Lemma(_false_twin_targets, _twin_avoids_two, normalize_false_twin, 'false twin pair'),
}


def _check_lemma(
    session: Session, theorem_id: str, params: Iterable[Graph] | None
) -> list[TheoremReport]:
    lemma = _LEMMAS[theorem_id]

    def failure(session: Session, g: Graph, u: int, other: int) -> str | None:
        if not any(lemma.holds(f, u, other) for f in session.minimum_idfs(g)):
            return 'no minimum IDF has the property'
        certificate = session.solve(g, sweep=True).certificate
        try:
            normalized = lemma.normalize(g, certificate, u, other)
        except NormalizationError as error:
            return f'reassignment failed on {certificate}: {error}'
        if not (
            lemma.holds(normalized, u, other)
            and is_idf(g, normalized)
            and weight(normalized) == weight(certificate)
        ):
            return f'reassignment of {certificate} gave {normalized}'
        return None

    return _tally_rows(
        session, theorem_id, session.config.lemma_n, params, lemma.targets, failure, lemma.unit
    )


def _check_twin_addition(
    session: Session, theorem_id: str, params: Iterable[Graph] | None
) -> list[TheoremReport]:
    relation = TwinRelation.TRUE if theorem_id == 'TT' else TwinRelation.FALSE

    def failure(session: Session, g: Graph, u: int, _twin: int) -> str | None:
        before = session.solve(g, sweep=True)
        grown = add_twin(g, u, relation)
        after = session.solve(grown, remember=False, sweep=True)
        if after.value - before.value not in (0, 1):
            return f'γ_I went from {before.value} to {after.value}'
        extended = extend_to_twin(g, before.certificate, u, relation)
        if not is_idf(grown, extended) or weight(extended) > before.value + 1:
            return f'extension {extended} of {before.certificate} is not an IDF within +1'
        return None

    def targets(g: Graph) -> list[tuple[int, int]]:
        """Each vertex with the index its new twin takes"""
        return [(u, g.n) for u in range(g.n)]

    return _tally_rows(
        session, theorem_id, session.config.twin_n, params, targets, failure, 'twin pair'
    )


def _check_oracle(session: Session, params: Iterable[Graph] | None) -> list[TheoremReport]:
    if params is None:
        config = session.config
        params = [
            *_random_graphs(session, 'ORACLE', 1, config.oracle_n, config.oracle_samples),
            *_family_graphs(config.oracle_n),
        ]
    rows = []
    for g in params:
        scanned = brute_force_gamma_italian(g)
        rows.append(
            _solved(
                session,
                'ORACLE',
                f'G={encode_graph6(g)}',
                g,
                ClosedForm('ORACLE', (g.n,), value=scanned.value),
            )
        )
    return rows


def _chain_holds(
    graph: Graph, gamma: SolveResult, italian: SolveResult, roman: SolveResult
) -> bool:
    return gamma.value <= italian.value <= roman.value <= 2 * gamma.value and all(
        result.validates(graph) for result in (gamma, italian, roman)
    )


def _sandwich_report(
    graph: Graph, gamma: SolveResult, italian: SolveResult, roman: SolveResult
) -> TheoremReport:
    graph6 = encode_graph6(graph)
    return _report(
        'SANDWICH',
        f'G={graph6}',
        f'γ = {gamma.value}, γ_R = {roman.value}: {SANDWICH_CHAIN}',
        italian.value,
        italian.certificate,
        passed=_chain_holds(graph, gamma, italian, roman),
        graph6=graph6,
    )


def _check_sandwich(session: Session, params: Iterable[Graph] | None) -> list[TheoremReport]:
    sweeps: list[TheoremReport] = []
    if params is None:
        params = list(session.touched)
        if session.swept['checked']:
            summary = TheoremReport(
                'SANDWICH',
                f'lemma and twin sweeps: {session.swept["checked"]} graph(s)',
                '0 violations',
                session.swept['violations'],
                None,
                _tally_status(session.swept),
            )
            sweeps = [summary, *session.swept_rows]
        elif not params:
            config = session.config
            params = [
                *_family_graphs(min(config.random_n, 8)),
                *_random_graphs(session, 'SANDWICH', 1, config.random_n, config.samples),
            ]
    rows = []
    for g in params:
        try:
            gamma = session.solve(g, Parameter.DOMINATION, touch=False)
            italian = session.solve(g, touch=False)
            roman = session.solve(g, Parameter.ROMAN, touch=False)
        except BudgetExceeded as exceeded:
            graph6 = encode_graph6(g)
            rows.append(_exceeded('SANDWICH', f'G={graph6}', SANDWICH_CHAIN, graph6, exceeded))
            continue
        rows.append(_sandwich_report(g, gamma, italian, roman))
    return rows + sweeps


_CHECKS: dict[str, Callable[[Session, Any], list[TheoremReport]]] = {
    'T1': _check_path,
    'T2': _check_corona_general,
    'T3': _check_corona_bounds,
    'T4': _check_realization,
    'T5': _check_universal,
    'T6': _check_edgeless,
    'T7': _check_bipartite,
    'T8': _check_double_corona,
    'T9': _check_path_corona,
    'T10': _check_cycle_corona,
    'L1': lambda session, params: _check_lemma(session, 'L1', params),
    'L2': lambda session, params: _check_lemma(session, 'L2', params),
    'L3': lambda session, params: _check_lemma(session, 'L3', params),
    'TT': lambda session, params: _check_twin_addition(session, 'TT', params),
    'FT': lambda session, params: _check_twin_addition(session, 'FT', params),
    'ORACLE': _check_oracle,
    'SANDWICH': _check_sandwich,
}


def _check_id(theorem_id: str) -> None:
    if theorem_id not in _CHECKS:
        known = ', '.join(THEOREM_IDS)
        raise ValueError(f'Unknown theorem id {theorem_id!r}; expected one of {known}')


def _run(session: Session, theorem_id: str, params: Any) -> list[TheoremReport]:
    _check_id(theorem_id)
    rows = _CHECKS[theorem_id](session, params)
    statuses = Counter(row.status for row in rows)
    logger.info('%s: %d row(s), %s', theorem_id, len(rows), dict(sorted(statuses.items())))
    return rows


def check_theorem(
    theorem_id: str, params: Iterable[Any] | None = None, config: SuiteConfig | None = None
) -> list[TheoremReport]:
    """
    Check one theorem or lemma.

    Parameters
    ----------
    theorem_id
        One of theorem_ids()
    params
        Explicit instances instead of the configured ones: n for T1, T9 and T10; (n, a) for
        T4; (p, q) for T7; (G, H) pairs for T2; graphs G for every other id
    config
        Ranges, seed and budget; SuiteConfig() by default

    Returns
    -------
    list[TheoremReport]
        Rows in generation order
    """
    return _run(Session(config or SuiteConfig()), theorem_id, params)


def run_suite(
    config: SuiteConfig | None = None, theorem_ids: Iterable[str] | None = None
) -> SuiteReport:
    """Check every id, or the given ones, in suite order with one shared session."""
    config = config or SuiteConfig()
    selected = THEOREM_IDS if theorem_ids is None else tuple(theorem_ids)
    for theorem_id in selected:
        _check_id(theorem_id)
    session = Session(config, chain_sweeps='SANDWICH' in selected)
    results = []
    # SANDWICH last so that it sees every graph the other checks solved
    for theorem_id in sorted(set(selected), key=THEOREM_IDS.index):
        results += _run(session, theorem_id, None)
    return SuiteReport(config, tuple(results))
