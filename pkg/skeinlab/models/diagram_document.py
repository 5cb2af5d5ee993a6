"""
Pydantic schema of the diagram file.

Rationals are 'p/q' strings so that files round-trip bit-exactly.
"""
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field, field_validator

from skeinlab.diagrams.geometry import to_fraction

Coordinate = Tuple[str, str]


def _exact(value: str) -> str:
    to_fraction(value)
    return value


class SegmentRefDocument(BaseModel):
    strand: int = Field(ge=0)
    segment: int = Field(ge=0)


class CrossingDocument(BaseModel):
    at: Coordinate
    over: SegmentRefDocument
    under: Optional[SegmentRefDocument] = None

    @field_validator('at')
    @classmethod
    def exact_point(cls, value: Coordinate) -> Coordinate:
        return (_exact(value[0]), _exact(value[1]))


class DiskDocument(BaseModel):
    outer_radius: str = '4/1'
    punctures: List[Coordinate] = Field(default_factory=lambda: [('-2/1', '0/1'), ('2/1', '0/1')])

    @field_validator('outer_radius')
    @classmethod
    def exact_radius(cls, value: str) -> str:
        return _exact(value)

    @field_validator('punctures')
    @classmethod
    def exact_punctures(cls, value: List[Coordinate]) -> List[Coordinate]:
        return [(_exact(x), _exact(y)) for x, y in value]


class DiagramDocument(BaseModel):
    disk: DiskDocument = Field(default_factory=DiskDocument)
    strands: List[List[Coordinate]]
    crossings: List[CrossingDocument] = Field(default_factory=list)

    @field_validator('strands')
    @classmethod
    def exact_strands(cls, value: List[List[Coordinate]]) -> List[List[Coordinate]]:
        return [[(_exact(x), _exact(y)) for x, y in strand] for strand in value]
