"""Evaluation of user-supplied diagrams."""
import logging
from typing import Optional

from skeinlab.algebra.cyclotomic import RootSpec
from skeinlab.diagrams.diagram import Diagram, PuncturedDisk
from skeinlab.diagrams.evaluate import evaluate
from skeinlab.diagrams.state_sum import check_state_space
from skeinlab.models.report import EvaluationResult

logger = logging.getLogger(__name__)


def evaluate_diagram(d: Diagram, disk: Optional[PuncturedDisk] = None, xi: Optional[RootSpec] = None,
                     workers: Optional[int] = None, max_states: Optional[int] = None) -> EvaluationResult:
    """
    Evaluate a diagram and optionally specialize the result at a root of unity.

    Raises:
        DiagramError: the diagram is not valid in the disk
        StateSpaceTooLarge: the diagram has too many crossings for the state limit
    """
    check_state_space(d.crossing_count, max_states)
    value = evaluate(d, disk, workers=workers, max_states=max_states)
    logger.info(f"Evaluated a diagram with {d.crossing_count} crossings")
    return EvaluationResult(
        value=str(value),
        specialized=str(value.specialize(xi)) if xi is not None else None,
        xi=str(xi) if xi is not None else None,
        crossings=d.crossing_count,
        states=2 ** d.crossing_count,
    )
