"""
Kauffman state sums over crossing graphs.

A diagram is reduced to a StateGraph: every crossing k has four ends
4k + slot (slot 0 over-out, 1 over-in, 2 under-out, 3 under-in), edges join
two ends and carry the puncture-parity mask of the curve piece between them,
and boundary points (for tangles) are negative end ids.

The sum is a sweep over crossings in list order. A sweep state is the set of
open paths still waiting to be closed; each state carries a Counter keyed by
(number of A-smoothings, closed curves per class).
"""
from __future__ import annotations

import logging
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product, repeat
from typing import Dict, Iterable, List, Optional, Tuple

from skeinlab.algebra.cyclotomic import UNKNOT
from skeinlab.algebra.laurent import LaurentInt
from skeinlab.config import Config

logger = logging.getLogger(__name__)

Path = Tuple[int, int, int]
StateKey = Tuple[Path, ...]
Tally = Tuple[int, Tuple[int, ...]]
States = Dict[StateKey, Counter]


class StateSpaceTooLarge(ValueError):
    """Raised when an evaluation would enumerate more states than allowed."""

    def __init__(self, crossings: int, limit: int):
        self.crossings = crossings
        self.limit = limit
        super().__init__(
            f"state space too large: 2^{crossings} = {2 ** crossings} states exceeds the limit {limit}"
        )


@dataclass(frozen=True)
class StateGraph:
    """
    Args:
        a_partner: per crossing, the slot (2 or 3) joined to slot 0 by the A-smoothing
        edges: (end, end, mask) curve pieces between crossing ends or boundary points
        loops: masks of crossing-free closed components
    """

    a_partner: Tuple[int, ...]
    edges: Tuple[Path, ...]
    loops: Tuple[int, ...] = ()

    @property
    def crossing_count(self) -> int:
        return len(self.a_partner)

    @property
    def state_count(self) -> int:
        return 2 ** len(self.a_partner)


def state_limit(max_states: Optional[int] = None) -> int:
    limit = Config.MAX_STATES if max_states is None else max_states
    return min(limit, Config.HARD_MAX_STATES)


def check_state_space(crossings: int, max_states: Optional[int] = None):
    limit = state_limit(max_states)
    if 2 ** crossings > limit:
        raise StateSpaceTooLarge(crossings, limit)


def _unpack(key: StateKey) -> Dict[int, Tuple[int, int]]:
    paths = {}
    for a, b, mask in key:
        paths[a] = (b, mask)
        paths[b] = (a, mask)
    return paths


def _pack(paths: Dict[int, Tuple[int, int]]) -> StateKey:
    return tuple(sorted((a, b, mask) for a, (b, mask) in paths.items() if a < b))


def _join(paths: Dict[int, Tuple[int, int]], p: int, q: int) -> Optional[int]:
    """Join the path ends p and q; returns the class mask of a curve that closes."""
    p_other, p_mask = paths.pop(p)
    if p_other == q:
        paths.pop(q)
        return p_mask
    q_other, q_mask = paths.pop(q)
    mask = p_mask ^ q_mask
    paths[p_other] = (q_other, mask)
    paths[q_other] = (p_other, mask)
    return None


def _tally(counts: Tuple[int, ...], closed: Iterable[int]) -> Tuple[int, ...]:
    bumped = list(counts)
    for mask in closed:
        bumped[mask] += 1
    return tuple(bumped)


def initial_states(graph: StateGraph, n_classes: int) -> States:
    paths: Dict[int, Tuple[int, int]] = {}
    closed: List[int] = list(graph.loops)
    for a, b, mask in graph.edges:
        if a in paths or b in paths:
            raise ValueError(f"crossing end used twice in edge ({a}, {b})")
        paths[a] = (b, mask)
        paths[b] = (a, mask)
    counts = _tally((0,) * n_classes, closed)
    return {_pack(paths): Counter({(0, counts): 1})}


def smooth(states: States, k: int, a_partner: int, only: Optional[int] = None) -> States:
    """Resolve crossing k in every state; `only` restricts to A (1) or B (0)."""
    base = 4 * k
    a_joins = ((base, base + a_partner), (base + 1, base + 5 - a_partner))
    b_joins = ((base, base + 5 - a_partner), (base + 1, base + a_partner))
    choices = [(1, a_joins), (0, b_joins)]
    if only is not None:
        choices = [c for c in choices if c[0] == only]
    nxt: States = {}
    for key, values in states.items():
        for is_a, joins in choices:
            paths = _unpack(key)
            closed = [m for m in (_join(paths, p, q) for p, q in joins) if m is not None]
            bucket = nxt.setdefault(_pack(paths), Counter())
            for (a_count, counts), mult in values.items():
                if closed:
                    counts = _tally(counts, closed)
                bucket[(a_count + is_a, counts)] += mult
    return nxt


def _sweep(graph: StateGraph, n_classes: int, prefix: Tuple[int, ...] = ()) -> States:
    states = initial_states(graph, n_classes)
    for k, partner in enumerate(graph.a_partner):
        states = smooth(states, k, partner, prefix[k] if k < len(prefix) else None)
    return states


def _merge(total: States, part: States):
    for key, values in part.items():
        total.setdefault(key, Counter()).update(values)


def expand(graph: StateGraph, n_classes: int, workers: Optional[int] = None,
           max_states: Optional[int] = None) -> States:
    """
    Run the state sum.

    Args:
        graph: Crossing graph
        n_classes: Number of curve classes (2^punctures); class 0 is the trivial curve
        workers: Worker processes (defaults to Config.WORKERS)
        max_states: State limit (defaults to Config.MAX_STATES, capped at 2^30)

    Returns:
        Final states keyed by the remaining boundary paths
    """
    check_state_space(graph.crossing_count, max_states)
    workers = Config.WORKERS if workers is None else workers
    n = graph.crossing_count
    if workers <= 1 or n < Config.PARALLEL_MIN_CROSSINGS:
        return _sweep(graph, n_classes)

    depth = min(n, (workers - 1).bit_length() + 2)
    prefixes = list(product((1, 0), repeat=depth))
    logger.debug(f"Splitting {n} crossings into {len(prefixes)} prefixes over {workers} workers")
    total: States = {}
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_sweep, repeat(graph), repeat(n_classes), prefixes):
            _merge(total, part)
    return total


def collect(values: Counter, crossings: int) -> Dict[Tuple[int, ...], LaurentInt]:
    """
    Turn a tally Counter into coefficients of non-trivial curve monomials.

    Each state contributes t^(#A - #B) and lambda_0 per trivial curve.
    """
    grouped: Dict[Tuple[int, ...], Counter] = defaultdict(Counter)
    for (a_count, counts), mult in values.items():
        grouped[counts][2 * a_count - crossings] += mult
    terms: Dict[Tuple[int, ...], LaurentInt] = defaultdict(LaurentInt)
    for counts, exponents in grouped.items():
        terms[counts[1:]] = terms[counts[1:]] + LaurentInt(exponents) * UNKNOT ** counts[0]
    return {mono: c for mono, c in terms.items() if c}
