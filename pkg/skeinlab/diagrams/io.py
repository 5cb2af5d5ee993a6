"""Reading and writing diagram files."""
import logging
from pathlib import Path
from typing import Tuple, Union

from pydantic import ValidationError

from skeinlab.diagrams.diagram import (
    Crossing, Diagram, DiagramError, PuncturedDisk, SegmentRef, find_intersections, validate,
)
from skeinlab.diagrams.geometry import format_fraction, format_point, point, to_fraction
from skeinlab.models.diagram_document import (
    CrossingDocument, DiagramDocument, DiskDocument, SegmentRefDocument,
)

logger = logging.getLogger(__name__)


def _coordinate(p) -> Tuple[str, str]:
    return (format_fraction(p[0]), format_fraction(p[1]))


def _ref(doc: SegmentRefDocument) -> SegmentRef:
    return SegmentRef(doc.strand, doc.segment)


def document_to_diagram(doc: DiagramDocument) -> Tuple[Diagram, PuncturedDisk]:
    """
    Build and validate the diagram a document describes.

    Raises:
        DiagramError: a geometric intersection is missing from the crossing list, a
            listed crossing is not an intersection, or any other geometry violation
    """
    disk = PuncturedDisk(to_fraction(doc.disk.outer_radius),
                         tuple(point(x, y) for x, y in doc.disk.punctures))
    strands = tuple(tuple(point(x, y) for x, y in strand) for strand in doc.strands)
    listed = {}
    for entry in doc.crossings:
        at = point(*entry.at)
        if at in listed:
            raise DiagramError(f"crossing at {format_point(at)} is listed twice")
        listed[at] = entry

    crossings = []
    for at, r1, r2 in find_intersections(strands):
        entry = listed.pop(at, None)
        if entry is None:
            raise DiagramError(f"strands meet at {format_point(at)} but no crossing is listed there")
        over = _ref(entry.over)
        if over not in (r1, r2):
            raise DiagramError(f"over segment {over} does not pass through {format_point(at)}")
        under = r2 if over == r1 else r1
        if entry.under is not None and _ref(entry.under) != under:
            raise DiagramError(f"under segment {_ref(entry.under)} does not pass through {format_point(at)}")
        crossings.append(Crossing(at, over, under))
    if listed:
        stray = min(listed)
        raise DiagramError(f"listed crossing {format_point(stray)} is not an intersection of the strands")

    d = Diagram(strands, tuple(crossings))
    validate(d, disk)
    return d, disk


def diagram_to_document(d: Diagram, disk: PuncturedDisk = None) -> DiagramDocument:
    disk = disk or PuncturedDisk.standard()
    return DiagramDocument(
        disk=DiskDocument(
            outer_radius=format_fraction(disk.outer_radius),
            punctures=[_coordinate(p) for p in disk.punctures],
        ),
        strands=[[_coordinate(v) for v in strand] for strand in d.strands],
        crossings=[
            CrossingDocument(
                at=_coordinate(c.at),
                over=SegmentRefDocument(strand=c.over.strand, segment=c.over.segment),
                under=SegmentRefDocument(strand=c.under.strand, segment=c.under.segment),
            )
            for c in d.crossings
        ],
    )


def parse_diagram(text: str) -> Tuple[Diagram, PuncturedDisk]:
    try:
        doc = DiagramDocument.model_validate_json(text)
    except ValidationError as e:
        raise DiagramError(f"malformed diagram document: {e}") from e
    return document_to_diagram(doc)


def dump_diagram(d: Diagram, disk: PuncturedDisk = None) -> str:
    return diagram_to_document(d, disk).model_dump_json(indent=2)


def read_diagram(path: Union[str, Path]) -> Tuple[Diagram, PuncturedDisk]:
    logger.debug(f"Reading diagram from {path}")
    return parse_diagram(Path(path).read_text())


def write_diagram(d: Diagram, path: Union[str, Path], disk: PuncturedDisk = None):
    Path(path).write_text(dump_diagram(d, disk) + '\n')
