"""Tests for the command line."""
import json

from click.testing import CliRunner

from skeinlab.cli import main
from skeinlab.diagrams.builtins import builtin
from skeinlab.diagrams.evaluate import evaluate
from skeinlab.diagrams.io import dump_diagram


def _run(*args):
    return CliRunner().invoke(main, list(args))


def test_verify_prints_a_text_report():
    result = _run('verify', 'tl', '--k-max', '2')
    assert result.exit_code == 0, result.output
    assert 'PASS tl: encircled identity [k=0] residual=0' in result.output
    assert result.output.rstrip().endswith('6 passed, 0 failed')


def test_verify_emits_json():
    result = _run('verify', 'annulus', '--k', '4', '--json')
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    assert report['ok'] is True
    assert report['failed'] == 0
    assert [s['suite'] for s in report['suites']] == ['annulus']


def test_verify_with_timings():
    result = _run('verify', 'tl', '--k-max', '1', '--timings')
    assert result.exit_code == 0, result.output
    assert ' time=' in result.output


def test_verify_at_one_root():
    result = _run('verify', 'eight', '--xi', '8/1')
    assert result.exit_code == 0, result.output
    assert 'xi=8/1' in result.output


def test_verify_accepts_suite_aliases():
    result = _run('verify', 'theorem1', 'prop61', 'lemma62', 'lemma68', 'prop63', 'phi0',
                  '--n-max', '8', '--N-max', '2', '--k-max', '2', '--json')
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    assert report['ok'] is True
    assert [s['suite'] for s in report['suites']] == [
        'centrality', 'eight', 'roots', 'extremal', 'eigen', 'loops',
    ]


def test_unknown_suite_is_a_usage_error():
    result = _run('verify', 'nope')
    assert result.exit_code == 2
    assert 'unknown suite' in result.output


def test_bad_root_is_a_usage_error():
    result = _run('verify', 'eight', '--xi', 'bad')
    assert result.exit_code == 2


def test_state_limit_above_the_hard_limit_is_a_usage_error():
    result = _run('verify', 'tl', '--max-states', str(2 ** 40))
    assert result.exit_code == 2


def test_root_above_the_cap_is_refused():
    result = _run('verify', 'eight', '--xi', '20/1')
    assert result.exit_code == 1
    assert 'state space too large' in result.output


def test_suites_lists_the_catalog():
    result = _run('suites', '--json')
    assert result.exit_code == 0
    catalog = json.loads(result.stdout)
    assert len(catalog) == 13
    assert catalog[0]['suite'] == 'centrality'

    text = _run('suites').output
    assert text.splitlines()[0].startswith('centrality')


def test_eval_a_diagram_file(tmp_path):
    path = tmp_path / 'eight.json'
    path.write_text(dump_diagram(builtin('eight')))
    result = _run('eval', '--diagram', str(path), '--xi', '4/1')
    assert result.exit_code == 0, result.output
    lines = result.output.splitlines()
    assert lines[0] == str(evaluate(builtin('eight')))
    assert lines[1].startswith('at xi = 4/1: ')


def test_eval_emits_json(tmp_path):
    path = tmp_path / 'unknot.json'
    path.write_text(dump_diagram(builtin('unknot')))
    result = _run('eval', '--diagram', str(path), '--json')
    assert result.exit_code == 0, result.output
    payload = json.loads(result.stdout)
    assert payload['crossings'] == 0
    assert payload['states'] == 1
    assert 'specialized' not in payload


def test_eval_rejects_a_broken_file(tmp_path):
    path = tmp_path / 'broken.json'
    path.write_text('{"strands": "nope"}')
    result = _run('eval', '--diagram', str(path))
    assert result.exit_code == 1
