"""Tests for the verification suites and the suite runner."""
import pytest

from skeinlab.algebra.cyclotomic import RootSpec
from skeinlab.algebra.laurent import LaurentInt
from skeinlab.config import Config
from skeinlab.diagrams.state_sum import StateSpaceTooLarge
from skeinlab.services.suites import (
    CheckLog, OptionError, SuiteOptions, verify_chebyshev_homomorphism, verify_eigen_relations,
    verify_eight_threading,
)
from skeinlab.services.verifier import (
    SUITE_RUNNERS, UnknownSuiteError, describe_suites, resolve_suites, run_suites,
)
from skeinlab.utils.report_format import render_json, render_text


def _assert_clean(report):
    failures = [(s.suite, c.identity, c.parameters, c.residual) for s in report.suites for c in s.checks
                if not c.passed]
    assert not failures
    assert report.ok
    assert report.passed > 0


# Test 1: every suite passes with reduced caps

@pytest.mark.parametrize('suite, options', [
    ('centrality', SuiteOptions(n_max=12)),
    ('skew', SuiteOptions(n_max=12, N_max=3)),
    ('tl', SuiteOptions(k_max=3)),
    ('annulus', SuiteOptions(k_max=8)),
    ('framing', SuiteOptions(k_max=3)),
    ('degrees', SuiteOptions(N_max=2)),
    ('roots', SuiteOptions(n_max=24)),
    ('extremal', SuiteOptions(N_max=2)),
    ('eight', SuiteOptions(n_max=8, N_max=2)),
    ('eigen', SuiteOptions(n_max=8, N_max=2)),
    ('chebhom', SuiteOptions(n_max=8, N_max=2)),
    ('loops', SuiteOptions(n_max=8, N_max=2, k_max=2)),
    ('engine', SuiteOptions(N_max=2)),
])
def test_suite_passes(suite, options):
    _assert_clean(run_suites([suite], options))


# Test 2: single-root operations

@pytest.mark.parametrize('n', [4, 8, 12])
def test_eight_threading_at_a_root(n):
    report = verify_eight_threading(RootSpec(n, 1))
    assert report.checks
    assert all(c.passed for c in report.checks)


def test_eight_threading_at_i_is_the_plain_curve():
    report = verify_eight_threading(RootSpec(4, 1))
    assert {c.parameters.get('N') for c in report.checks} == {'1'}


@pytest.mark.parametrize('element', ['y', 'x1x2', 'gamma'])
def test_eigen_relations_at_zeta8(element):
    report = verify_eigen_relations(RootSpec(8, 1), element)
    assert all(c.passed for c in report.checks)
    assert {c.identity for c in report.checks} >= {'phi0', 'phi1', 'phi2', 'phi3', 'hook', 'rotation'}


def test_eigen_relations_refuse_unknown_elements():
    with pytest.raises(ValueError):
        verify_eigen_relations(RootSpec(8, 1), 'trefoil')


@pytest.mark.parametrize('n', [4, 8])
def test_chebyshev_homomorphism_at_a_root(n):
    report = verify_chebyshev_homomorphism(RootSpec(n, 1))
    assert all(c.passed for c in report.checks)


def test_root_above_the_cap_is_refused():
    # ord(zeta_20^4) = 5
    with pytest.raises(StateSpaceTooLarge, match="2\\^25"):
        verify_eight_threading(RootSpec(20, 1))


# Test 3: runner and options

def test_registry_matches_the_catalog():
    assert list(SUITE_RUNNERS) == list(Config.SUITES)
    assert [entry['suite'] for entry in describe_suites()] == list(Config.SUITES)


def test_unknown_suite():
    with pytest.raises(UnknownSuiteError, match="nope"):
        run_suites(['nope'])


def test_options_are_validated():
    with pytest.raises(OptionError):
        SuiteOptions(max_states=Config.HARD_MAX_STATES + 1)
    with pytest.raises(OptionError):
        SuiteOptions(k_max=-1)
    with pytest.raises(OptionError):
        SuiteOptions(workers=0)


def test_caps_fall_back_to_the_catalog():
    options = SuiteOptions(N_max=2)
    assert options.cap('eight', 'N_max') == 2
    assert options.cap('eight', 'n_max') == Config.SUITES['eight']['n_max']


def test_check_log_records_residuals():
    log = CheckLog('demo', SuiteOptions(), k=3)
    log.record('zero', 'x = x', LaurentInt())
    log.record('nonzero', 'x = y', LaurentInt.monomial(2))
    log.expect('predicate', 'all good', ['first case', 'second case'])
    checks = log.report.checks
    assert [c.status for c in checks] == ['pass', 'fail', 'fail']
    assert checks[0].residual == '0'
    assert checks[1].residual == '1*t^2'
    assert checks[2].residual == 'first case; second case'
    assert log.report.parameters == {'k': '3'}
    assert all(c.wall_time is None for c in checks)


def test_timings_are_opt_in():
    log = CheckLog('demo', SuiteOptions(timings=True))
    log.record('zero', 'x = x', 0)
    assert log.report.checks[0].wall_time is not None


def test_reports_are_deterministic():
    first = render_json(run_suites(['annulus', 'tl'], SuiteOptions(k_max=3)))
    second = render_json(run_suites(['annulus', 'tl'], SuiteOptions(k_max=3)))
    assert first == second
    assert 'wall_time' not in first


def test_text_report():
    text = render_text(run_suites(['tl'], SuiteOptions(k_max=1)))
    lines = text.splitlines()
    assert lines[0].startswith('PASS tl: encircled identity [k=0] residual=0')
    assert lines[-1] == f"{len(lines) - 1} passed, 0 failed"


def test_aliases_resolve_to_registry_names():
    assert resolve_suites(['theorem1', 'lemma62', 'lemma68', 'prop61', 'prop63', 'phi0']) == [
        'centrality', 'roots', 'extremal', 'eight', 'eigen', 'loops',
    ]
    assert resolve_suites(['prop61', 'eight', 'tl']) == ['eight', 'tl']
    assert all(target in SUITE_RUNNERS for target in Config.SUITE_ALIASES.values())
    catalog = {entry['suite']: entry for entry in describe_suites()}
    assert catalog['eight']['aliases'] == ['prop61']
    assert catalog['tl']['aliases'] == []


def test_reports_do_not_depend_on_the_worker_count(monkeypatch):
    monkeypatch.setattr(Config, 'PARALLEL_MIN_CROSSINGS', 2)
    names = ['tl', 'eight']
    serial = render_json(run_suites(names, SuiteOptions(k_max=3, n_max=8, N_max=2, workers=1)))
    parallel = render_json(run_suites(names, SuiteOptions(k_max=3, n_max=8, N_max=2, workers=2)))
    assert serial == parallel
