"""
Suite registry and runner.
"""
import logging
from typing import Callable, Dict, List, Optional, Sequence

from skeinlab.config import Config
from skeinlab.models.report import AggregateReport, SuiteReport
from skeinlab.services.suites import (
    OptionError, SuiteOptions, run_annulus, run_centrality, run_chebhom, run_degrees, run_eigen,
    run_eight, run_engine, run_extremal, run_framing, run_loops, run_roots, run_skew, run_tl,
)

logger = logging.getLogger(__name__)

SUITE_RUNNERS: Dict[str, Callable[[SuiteOptions], SuiteReport]] = {
    'centrality': run_centrality,
    'skew': run_skew,
    'tl': run_tl,
    'annulus': run_annulus,
    'framing': run_framing,
    'degrees': run_degrees,
    'roots': run_roots,
    'extremal': run_extremal,
    'eight': run_eight,
    'eigen': run_eigen,
    'chebhom': run_chebhom,
    'loops': run_loops,
    'engine': run_engine,
}

__all__ = ['OptionError', 'SUITE_RUNNERS', 'SuiteOptions', 'UnknownSuiteError', 'describe_suites', 'run_suites']


class UnknownSuiteError(ValueError):
    def __init__(self, name: str):
        self.name = name
        choices = list(SUITE_RUNNERS) + list(Config.SUITE_ALIASES)
        super().__init__(f"unknown suite {name!r}; choose from {', '.join(choices)}")


def resolve_suites(names: Optional[Sequence[str]]) -> List[str]:
    """
    Validate suite names and map aliases to registry names.

    No names (or 'all') means every suite, in registry order; repeats are dropped.
    """
    if not names or 'all' in names:
        return list(SUITE_RUNNERS)
    resolved = []
    for name in names:
        name = Config.SUITE_ALIASES.get(name, name)
        if name not in SUITE_RUNNERS:
            raise UnknownSuiteError(name)
        resolved.append(name)
    return list(dict.fromkeys(resolved))


def describe_suites() -> List[Dict[str, object]]:
    out = []
    for name in SUITE_RUNNERS:
        info = Config.SUITES[name]
        caps = {k: v for k, v in info.items() if k.endswith('_max')}
        aliases = [alias for alias, target in Config.SUITE_ALIASES.items() if target == name]
        out.append({'suite': name, 'name': info['name'], 'description': info['description'],
                    'aliases': aliases, 'caps': caps})
    return out


def run_suites(names: Optional[Sequence[str]] = None, options: Optional[SuiteOptions] = None) -> AggregateReport:
    """
    Run the named suites and aggregate their reports.

    Raises:
        UnknownSuiteError: a name is not a registered suite
        StateSpaceTooLarge: a requested evaluation exceeds the state limit
    """
    options = options or SuiteOptions()
    selected = resolve_suites(names)
    reports = []
    for name in selected:
        logger.info(f"Running suite {name}")
        report = SUITE_RUNNERS[name](options)
        logger.info(f"Suite {name}: {report.passed} passed, {report.failed} failed")
        reports.append(report)
    aggregate = AggregateReport.from_suites(reports)
    if not aggregate.ok:
        logger.warning(f"{aggregate.failed} checks failed")
    return aggregate
