import io
import json
import logging
from pytest import raises, mark, warns
import eigsquares.chromatic
import eigsquares.search
from eigsquares._internal import (
    ColoringBudgetError,
    EigsquaresWarning,
    SearchCapError,
)
from eigsquares.graph import Graph, degree_stats, is_connected
from eigsquares.graph6 import decode, encode
from eigsquares.families import complete, cycle, path, petersen
from eigsquares.labeling import canonical_form
from eigsquares.search import (
    ENUMERATION_CAP, FILTERED_CAP, ORACLE_CAP, RECORD_COLUMNS, SearchConfig,
    enumerate_graphs, brute_force_classes, evaluate_graph, hunt, extremal_report
)

CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}
ALL_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


def test_search_config():
    cfg = SearchConfig(jobs=1)
    assert (cfg.n_min, cfg.n_max, cfg.connected) == (1, 8, True)
    assert cfg.max_degree is None

    SearchConfig(n_max=ENUMERATION_CAP, jobs=1)
    SearchConfig(n_max=FILTERED_CAP, max_degree=4, jobs=1)

    with raises(SearchCapError):
        SearchConfig(n_max=ENUMERATION_CAP + 1, jobs=1)

    with raises(SearchCapError):
        SearchConfig(n_max=FILTERED_CAP + 1, max_degree=4, jobs=1)

    with raises(SearchCapError):
        SearchConfig(n_max=ENUMERATION_CAP + 1, max_degree=5, jobs=1)

    with raises(ValueError):
        SearchConfig(n_min=0, jobs=1)

    with raises(ValueError):
        SearchConfig(n_min=5, n_max=4, jobs=1)

    with raises(ValueError):
        SearchConfig(jobs=0)

    with raises(ValueError):
        SearchConfig(max_degree=-1, jobs=1)


def test_jobs_variable(monkeypatch):
    monkeypatch.setenv('EIGSQUARES_JOBS', '3')
    assert SearchConfig().jobs == 3

    monkeypatch.setenv('EIGSQUARES_JOBS', 'many')
    with raises(ValueError):
        SearchConfig()


def test_census(connected_graphs, all_graphs):
    for n, graphs in connected_graphs.items():
        assert len(graphs) == CONNECTED_COUNTS[n]
        assert all(is_connected(g) for g in graphs)
    for n, graphs in all_graphs.items():
        assert len(graphs) == ALL_COUNTS[n]


def test_enumeration_order(connected_graphs):
    for n in range(1, 7):
        forms = [canonical_form(g) for g in connected_graphs[n]]
        assert forms == sorted(set(forms))
        assert [encode(g).encode('ascii') for g in connected_graphs[n]] == forms


def test_brute_force_agreement(connected_graphs, all_graphs):
    for n in range(1, 7):
        forms = [canonical_form(g) for g in connected_graphs[n]]
        assert brute_force_classes(n) == forms
        forms = [canonical_form(g) for g in all_graphs[n]]
        assert brute_force_classes(n, connected=False) == forms


def test_brute_force_limits():
    with raises(SearchCapError):
        brute_force_classes(ORACLE_CAP + 1)

    with raises(ValueError):
        brute_force_classes(0)


def test_max_degree_filter(connected_graphs):
    cfg = SearchConfig(n_min=1, n_max=6, max_degree=2, jobs=1)
    graphs = list(enumerate_graphs(cfg))
    # Paths and, from 3 vertices on, cycles.
    assert len(graphs) == 1 + 1 + 2 + 2 + 2 + 2
    assert all(degree_stats(g).Delta <= 2 for g in graphs)

    cfg = SearchConfig(n_min=6, n_max=6, max_degree=3, jobs=1)
    expected = [g for g in connected_graphs[6] if degree_stats(g).Delta <= 3]
    assert list(enumerate_graphs(cfg)) == expected


def test_parallel_enumeration():
    serial = list(enumerate_graphs(SearchConfig(n_min=6, n_max=6, jobs=1)))
    parallel = list(enumerate_graphs(SearchConfig(n_min=6, n_max=6, jobs=2)))
    assert serial == parallel


def test_evaluate_graph():
    record = evaluate_graph(complete(4), with_chi=True)
    assert record.graph6 == 'C~'
    assert (record.n, record.m, record.kappa, record.cyclomatic) == (4, 6, 1, 3)
    assert record.status == 'boundary'
    assert abs(record.slack) <= 1e-9
    assert record.chi == 4
    assert record.failed_bounds == ()
    assert 'lemma_pi' in record.flags
    assert 'brualdi' not in record.flags
    assert 'hyper_energetic' not in record.flags

    row = record.csv_row()
    assert len(row) == len(RECORD_COLUMNS)
    assert row[0] == 'C~' and row[-1] == ';'.join(record.flags)

    assert evaluate_graph(petersen()).status == 'ok'
    assert evaluate_graph(path(5), check_bounds=False).status == 'boundary'
    assert evaluate_graph(cycle(5)).chi is None


def test_evaluate_graph_budget(monkeypatch, caplog):
    def exhausted(g):
        raise ColoringBudgetError(1)

    monkeypatch.setattr(eigsquares.chromatic, 'chromatic_number', exhausted)
    with caplog.at_level(logging.WARNING, logger='eigsquares.search'):
        record = evaluate_graph(cycle(5), with_chi=True)
    assert record.chi is None
    assert 'budget' in caplog.text


def test_hunt():
    summary = hunt(SearchConfig(n_min=1, n_max=6, jobs=1))
    assert summary.graphs == 143
    assert summary.per_n == {n: CONNECTED_COUNTS[n] for n in range(1, 7)}
    assert summary.violations == ()
    assert summary.bound_failures == {}
    assert not summary.found_violations
    assert not summary.truncated
    assert abs(summary.min_slack) <= 1e-6
    assert len(summary.records) == 143
    assert sum(count for count, _ in summary.per_cyclomatic.values()) == 143
    assert summary.per_cyclomatic[0][0] == 1 + 1 + 1 + 2 + 3 + 6

    data = json.loads(summary.to_json())
    assert data['graphs'] == 143
    assert data['per_n']['6'] == 112
    assert data['violations'] == []


def test_hunt_boundary():
    summary = hunt(SearchConfig(n_min=6, n_max=6, jobs=1, keep_records=False))
    assert summary.trees_at_zero == 6
    assert summary.complete_at_zero == 1
    assert summary.boundary >= 7
    assert summary.records == ()


@mark.slow
def test_hunt_seven():
    summary = hunt(SearchConfig(n_min=7, n_max=7, jobs=1))
    assert summary.graphs == 853
    assert summary.trees_at_zero == 11
    assert summary.complete_at_zero == 1
    assert not summary.found_violations


@mark.slow
def test_census_large(connected_graphs_8):
    assert len(connected_graphs_8) == CONNECTED_COUNTS[8]
    cfg = SearchConfig(n_min=7, n_max=8, connected=False, jobs=2)
    counts = {7: 0, 8: 0}
    for g in enumerate_graphs(cfg):
        counts[g.n] += 1
        assert decode(encode(g)) == g
    assert counts == {7: ALL_COUNTS[7], 8: ALL_COUNTS[8]}


@mark.slow
def test_brute_force_seven(connected_graphs):
    forms = [canonical_form(g) for g in connected_graphs[7]]
    assert brute_force_classes(7) == forms


def test_hunt_disconnected():
    summary = hunt(SearchConfig(n_min=1, n_max=5, connected=False, jobs=1))
    assert summary.graphs == 1 + 2 + 4 + 11 + 34
    assert not summary.found_violations
    form = canonical_form(Graph(4, [(0, 1), (2, 3)])).decode('ascii')
    two_k2 = [r for r in summary.records if r.graph6 == form]
    assert len(two_k2) == 1 and two_k2[0].status == 'boundary'


def test_hunt_sink():
    sink = io.StringIO()
    hunt(SearchConfig(n_min=4, n_max=4, jobs=1, sink=sink))
    lines = sink.getvalue().splitlines()
    assert lines[0] == ','.join(RECORD_COLUMNS)
    assert len(lines) == 1 + 6


def test_hunt_input_graphs():
    summary = hunt(SearchConfig(jobs=1), [petersen(), cycle(5)])
    assert summary.graphs == 2
    assert summary.per_n == {10: 1, 5: 1}
    assert summary.argmin == 'Dhc'


def test_hunt_parallel():
    serial = hunt(SearchConfig(n_min=5, n_max=6, jobs=1))
    parallel = hunt(SearchConfig(n_min=5, n_max=6, jobs=2))
    assert serial.records == parallel.records
    assert serial.min_slack == parallel.min_slack


def test_hunt_interrupted(monkeypatch):
    evaluate = eigsquares.search._evaluate_task
    calls = []

    def interrupted(task):
        calls.append(task)
        if len(calls) > 2:
            raise KeyboardInterrupt
        return evaluate(task)

    monkeypatch.setattr(eigsquares.search, '_evaluate_task', interrupted)
    sink = io.StringIO()
    with warns(EigsquaresWarning):
        summary = hunt(SearchConfig(n_min=5, n_max=5, jobs=1, sink=sink))
    assert summary.truncated
    assert summary.graphs == 2
    assert sink.getvalue().endswith('# truncated\n')


def test_extremal_report():
    records = hunt(SearchConfig(n_min=1, n_max=5, jobs=1)).records
    report = extremal_report(records, bins=5, smallest=10)
    assert len(report.histogram) == 5
    assert sum(count for _, _, count in report.histogram) == len(records)
    assert len(report.smallest) == 10
    slacks = [r.slack for r in report.smallest]
    assert slacks == sorted(slacks)
    assert slacks[0] == min(r.slack for r in records)
    assert set(report.per_n) == {1, 2, 3, 4, 5}
    assert report.per_n[5][0] == min(r.slack for r in records if r.n == 5)

    data = json.loads(json.dumps(report.to_dict()))
    assert len(data['histogram']) == 5
    assert report.to_table().splitlines()[0].split() == ['low', 'high', 'count']


def test_extremal_report_empty():
    report = extremal_report([])
    assert report.histogram == ()
    assert report.smallest == ()
    assert report.per_n == {}
    assert report.per_cyclomatic == {}
