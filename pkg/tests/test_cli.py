from dataclasses import replace
import json
from pytest import raises
import eigsquares.cli
from eigsquares.bounds import BoundEntry, BoundsReport, Status
from eigsquares.cli import EXIT_OK, EXIT_ERROR, EXIT_VIOLATIONS, build_parser, main
from eigsquares.families import complete_bipartite, petersen
from eigsquares.graph6 import encode
from eigsquares.search import SearchConfig, hunt


def _json_lines(text):
    return [json.loads(line) for line in text.splitlines() if line]


def test_parser():
    parser = build_parser()
    args = parser.parse_args(['search', '--n', '3..6', '--connected'])
    assert args.n == (3, 6)
    assert args.connected
    assert parser.parse_args(['search', '--n', '7']).n == (1, 7)
    assert parser.parse_args(['search']).n == (1, 8)

    args = parser.parse_args(['verify', '--graph6', 'Bw', '--tol', '1e-4'])
    assert (args.graph6, args.path, args.tol) == ('Bw', None, 1e-4)
    assert parser.parse_args(['quotient', 'graphs.g6']).path == 'graphs.g6'


def test_parser_errors(capfd):
    for argv in (
        ['verify'],
        ['verify', 'graphs.g6', '--graph6', 'Bw'],
        ['search', '--n', 'x..3'],
        ['verify', '--graph6', 'Bw', '--tol', '-1'],
        ['family', 'dodecahedron'],
        ['frobnicate'],
    ):
        with raises(SystemExit) as error:
            main(argv)
        assert error.value.code == EXIT_ERROR
    _, err = capfd.readouterr()
    assert 'eigsquares' in err


def test_help(capfd):
    with raises(SystemExit) as error:
        main(['--help'])
    assert error.value.code == 0
    out, _ = capfd.readouterr()
    assert 'bound ids:' in out
    assert 'energy_2n_minus_3' in out


def test_verify(capfd):
    assert main(['verify', '--graph6', 'Bw']) == EXIT_OK
    out, err = capfd.readouterr()
    (document,) = _json_lines(out)
    assert document['graph6'] == 'Bw'
    assert document['bounds']['conjecture']['status'] == 'satisfied'
    assert document['bounds']['conjecture']['equality']
    assert '1 graphs, 0 violations' in err


def test_verify_formats(capfd):
    assert main(['verify', '--graph6', 'Bw', '--format', 'table']) == EXIT_OK
    out, _ = capfd.readouterr()
    assert out.startswith('Bw  n=3  m=3\n')
    assert 'conjecture' in out

    assert main(['verify', '--graph6', 'Bw', '--format', 'csv']) == EXIT_OK
    out, _ = capfd.readouterr()
    lines = out.splitlines()
    assert len(lines) == 2
    assert lines[0].startswith('graph6,n,m,hong_margin,hong_status')
    assert lines[1].startswith('Bw,3,3,')


def test_verify_file(tmp_path, capfd):
    path = tmp_path / 'graphs.g6'
    path.write_text('Bw\n\n' + encode(petersen()) + '\n')
    assert main(['verify', str(path), '--with-chi']) == EXIT_OK
    out, err = capfd.readouterr()
    documents = _json_lines(out)
    assert [d['n'] for d in documents] == [3, 10]
    assert documents[1]['bounds']['brooks']['equality']
    assert 'ando_lin_plus' in documents[0]['bounds']
    assert '2 graphs, 0 violations' in err


def test_verify_errors(tmp_path, capfd):
    assert main(['verify', '--graph6', 'B w']) == EXIT_ERROR
    _, err = capfd.readouterr()
    assert err.startswith('eigsquares: error:')
    assert 'byte 1' in err

    assert main(['verify', str(tmp_path / 'missing.g6')]) == EXIT_ERROR
    _, err = capfd.readouterr()
    assert 'eigsquares: error:' in err


def test_verify_violations(monkeypatch, capfd):
    def violated(g, summary=None, chi=None, tolerances=None):
        entry = BoundEntry('conjecture', 3.0, 2.0, Status.VIOLATED)
        return BoundsReport(encode(g), g.n, g.m, (entry,))

    monkeypatch.setattr(eigsquares.cli, 'full_report', violated)
    assert main(['verify', '--graph6', 'Bw']) == EXIT_VIOLATIONS
    _, err = capfd.readouterr()
    assert '1 graphs, 1 violations' in err


def test_out_file(tmp_path, capfd):
    path = tmp_path / 'report.json'
    assert main(['verify', '--graph6', 'C~', '--out', str(path)]) == EXIT_OK
    out, _ = capfd.readouterr()
    assert out == ''
    (document,) = _json_lines(path.read_text())
    assert document['m'] == 6


def test_search(capfd):
    argv = ['search', '--n', '1..5', '--connected', '--jobs', '1']
    assert main(argv) == EXIT_OK
    out, _ = capfd.readouterr()
    document = json.loads(out)
    assert document['graphs'] == 31
    assert document['violations'] == []
    assert document['trees_at_zero'] == 1 + 1 + 1 + 2 + 3
    assert len(document['extremal']['smallest']) == 20

    assert main(argv + ['--format', 'csv']) == EXIT_OK
    out, _ = capfd.readouterr()
    lines = out.splitlines()
    assert lines[0] == 'graph6,n,m,s_plus,s_minus,slack,flags'
    assert len(lines) == 1 + 31

    assert main(argv + ['--format', 'table', '--no-bounds']) == EXIT_OK
    out, _ = capfd.readouterr()
    assert out.splitlines()[0].split() == ['graphs', '31']


def test_search_disconnected(capfd):
    assert main(['search', '--n', '4', '--jobs', '1']) == EXIT_OK
    out, _ = capfd.readouterr()
    assert json.loads(out)['per_n'] == {'1': 1, '2': 2, '3': 4, '4': 11}


def test_search_input(tmp_path, capfd):
    path = tmp_path / 'graphs.g6'
    path.write_text('Dhc\nC~\n')
    assert main(['search', '--input', str(path), '--jobs', '1']) == EXIT_OK
    out, _ = capfd.readouterr()
    document = json.loads(out)
    assert document['graphs'] == 2
    assert document['per_n'] == {'4': 1, '5': 1}


def test_search_errors(capfd):
    assert main(['search', '--n', '1..11', '--jobs', '1']) == EXIT_ERROR
    _, err = capfd.readouterr()
    assert 'cap' in err

    assert main(['search', '--n', '1..4', '--jobs', '0']) == EXIT_ERROR


def test_search_violations(monkeypatch, capfd):
    def violated(cfg, graphs=None):
        summary = hunt(SearchConfig(n_min=3, n_max=3, jobs=1))
        record = summary.records[0]
        return replace(summary, violations=(record,), min_slack=-1.0)

    monkeypatch.setattr(eigsquares.cli, 'hunt', violated)
    assert main(['search', '--n', '3', '--jobs', '1']) == EXIT_VIOLATIONS


def test_family(capfd):
    assert main(['family', 'barbell', '7']) == EXIT_OK
    out, _ = capfd.readouterr()
    document = json.loads(out)
    assert document['family'] == 'barbell'
    assert document['inertia'] == {'pi': 2, 'nu': 12, 'gamma': 0}
    assert document['barbell_deviation'] <= 1e-8
    bounds = document['report']['bounds']
    assert bounds['barbell_closed_form']['status'] == 'satisfied'

    assert main(['family', 'complete-q-partite', '2,3,4']) == EXIT_OK
    out, _ = capfd.readouterr()
    assert json.loads(out)['inertia']['pi'] == 1

    assert main(['family', 'star', '9']) == EXIT_OK
    out, _ = capfd.readouterr()
    assert json.loads(out)['report']['bounds']['hong']['equality']

    assert main(['family', 'petersen', '--with-chi', '--format', 'table']) == EXIT_OK
    out, _ = capfd.readouterr()
    assert out.startswith(encode(petersen()) + '  n=10  m=15  inertia=(6, 4, 0)\n')

    assert main(['family', 'circulant', '8', '1,2', '--format', 'csv']) == EXIT_OK
    out, _ = capfd.readouterr()
    assert len(out.splitlines()) == 2


def test_family_large_barbell(capfd):
    assert main(['family', 'barbell', '40']) == EXIT_OK
    out, _ = capfd.readouterr()
    document = json.loads(out)
    assert document['report']['n'] == 80
    assert document['barbell_deviation'] <= 1e-8


def test_family_line_graph(capfd):
    assert main(['family', 'line-graph', 'D~{']) == EXIT_OK
    out, _ = capfd.readouterr()
    document = json.loads(out)
    assert document['inertia'] == {'pi': 5, 'nu': 5, 'gamma': 0}
    bounds = document['report']['bounds']
    assert bounds['hyper_energetic']['status'] == 'satisfied'

    assert main(['family', 'line-graph', 'B w']) == EXIT_ERROR
    _, err = capfd.readouterr()
    assert "Invalid parameter 'B w'" in err


def test_family_errors(capfd):
    assert main(['family', 'barbell']) == EXIT_ERROR
    assert main(['family', 'barbell', '2']) == EXIT_ERROR
    assert main(['family', 'cycle', 'five']) == EXIT_ERROR
    _, err = capfd.readouterr()
    assert "Invalid parameter 'five'" in err


def test_quotient(capfd):
    text = encode(complete_bipartite(3, 3))
    assert main(['quotient', '--graph6', text]) == EXIT_OK
    out, _ = capfd.readouterr()
    (document,) = _json_lines(out)
    assert document['graph6'] == text
    assert document['quotient'] == 'A_'
    assert document['multiplicities'] == [3, 3]

    assert main(['quotient', '--graph6', text, '--format', 'csv']) == EXIT_OK
    out, _ = capfd.readouterr()
    assert out.splitlines() == ['graph6,quotient,multiplicities', f'{text},A_,"3,3"']

    assert main(['quotient', '--graph6', text, '--format', 'table']) == EXIT_OK
    out, _ = capfd.readouterr()
    assert out == f'{text}  ->  A_  [3, 3]\n'
