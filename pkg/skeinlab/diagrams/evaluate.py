"""Kauffman bracket evaluation of diagrams into the skein algebra of the disk."""
from __future__ import annotations

import logging
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Callable, List, Optional, Sequence, Tuple, Union

from skeinlab.algebra.chebyshev import PolyZ, mixed_thread_plan, thread_plan
from skeinlab.algebra.skein_poly import SkeinPoly
from skeinlab.diagrams.diagram import Diagram, PuncturedDisk, a_smoothing_partner, validate
from skeinlab.diagrams.geometry import Point, path_mask, polygon_mask, segment_param
from skeinlab.diagrams.operations import cable
from skeinlab.diagrams.state_sum import StateGraph, check_state_space, collect, expand

logger = logging.getLogger(__name__)

# (segment, parameter, crossing index, over?)
Occurrence = Tuple[int, Fraction, int, bool]

def _occurrences(d: Diagram) -> List[List[Occurrence]]:
    per_strand: List[List[Occurrence]] = [[] for _ in d.strands]
    for k, c in enumerate(d.crossings):
        for ref, is_over in ((c.over, True), (c.under, False)):
            a, b = d.segment(ref)
            per_strand[ref.strand].append((ref.segment, segment_param(c.at, a, b), k, is_over))
    for occ in per_strand:
        occ.sort()
    return per_strand

def _walk(strand: Sequence[Point], start: Occurrence, end: Occurrence, at_start: Point,
          at_end: Point, wraps: bool) -> List[Point]:
    """Points of the strand from one crossing to the next, in strand direction."""
    s_seg, s_par = start[0], start[1]
    e_seg, e_par = end[0], end[1]
    if s_seg == e_seg and e_par > s_par and not wraps:
        return [at_start, at_end]
    n = len(strand)
    pts = [at_start]
    j = s_seg + 1
    while True:
        pts.append(strand[j % n])
        if j % n == e_seg:
            break
        j += 1
    pts.append(at_end)
    return pts

def state_graph(d: Diagram, disk: PuncturedDisk) -> StateGraph:
    """
    Reduce a diagram to its crossing graph.

    Edges run from the out-end of one crossing passage to the in-end of the
    next along each strand and carry the ray-parity mask of the piece between.
    """
    a_partner = tuple(a_smoothing_partner(d, c) for c in d.crossings)
    edges = []
    loops = []
    for strand_index, occ in enumerate(_occurrences(d)):
        strand = d.strands[strand_index]
        if not occ:
            loops.append(polygon_mask(strand, disk.punctures))
            continue
        for i, here in enumerate(occ):
            nxt = occ[(i + 1) % len(occ)]
            wraps = i + 1 == len(occ)
            at_here = d.crossings[here[2]].at
            at_next = d.crossings[nxt[2]].at
            mask = path_mask(_walk(strand, here, nxt, at_here, at_next, wraps), disk.punctures)
            out_end = 4 * here[2] + (0 if here[3] else 2)
            in_end = 4 * nxt[2] + (1 if nxt[3] else 3)
            edges.append((out_end, in_end, mask))
    return StateGraph(a_partner=a_partner, edges=tuple(edges), loops=tuple(loops))


@lru_cache(maxsize=512)
def _evaluate(d: Diagram, disk: PuncturedDisk, workers: Optional[int],
              max_states: Optional[int]) -> SkeinPoly:
    check_state_space(d.crossing_count, max_states)
    validate(d, disk)
    graph = state_graph(d, disk)
    logger.debug(f"Evaluating {graph.crossing_count} crossings ({graph.state_count} states), "
                 f"{len(graph.loops)} free loops")
    final = expand(graph, disk.class_count, workers=workers, max_states=max_states)
    values = final.get((), Counter())
    return SkeinPoly(disk.generators, collect(values, graph.crossing_count))

def evaluate(d: Diagram, disk: Optional[PuncturedDisk] = None, workers: Optional[int] = None,
             max_states: Optional[int] = None) -> SkeinPoly:
    """
    Kauffman state sum of a diagram.

    Args:
        d: Diagram to evaluate
        disk: Punctured disk (defaults to the standard twice-punctured disk)
        workers: Worker processes for the state sum
        max_states: State limit for this evaluation

    Returns:
        The class of d as a polynomial in the curve classes of the disk

    Raises:
        DiagramError: d is not a valid diagram in the disk
        StateSpaceTooLarge: 2^crossings exceeds the state limit
    """
    return _evaluate(d, disk or PuncturedDisk.standard(), workers, max_states)

def thread_polynomial(d: Diagram, p: Union[PolyZ, Sequence[PolyZ]],
                      disk: Optional[PuncturedDisk] = None, workers: Optional[int] = None,
                      max_states: Optional[int] = None,
                      operator: Optional[Callable[[Diagram], Diagram]] = None) -> SkeinPoly:
    """
    Thread polynomials through the components of d by cabling.

    Args:
        d: Diagram whose components get threaded
        p: One polynomial for every component, or one per component
        operator: Applied to every cable before it is evaluated (e.g. attaching a loop)

    Returns:
        sum over the threading plan of coefficient * evaluate(operator(cable(d, multiplicities)))
    """
    disk = disk or PuncturedDisk.standard()
    if isinstance(p, PolyZ):
        plan = thread_plan(p, d.component_count)
    else:
        if len(p) != d.component_count:
            raise ValueError(f"{len(p)} polynomials for {d.component_count} components")
        plan = mixed_thread_plan(list(p))
    total = SkeinPoly(disk.generators)
    for multiplicities, coefficient in plan:
        cabled = cable(d, multiplicities, disk)
        if operator is not None:
            cabled = operator(cabled)
        value = evaluate(cabled, disk, workers, max_states)
        total = total + value * coefficient
    return total
