"""Tests for diagram documents and exact geometry parsing."""
import json
from fractions import Fraction

import pytest

from skeinlab.diagrams.builtins import clasp, eight, x1x2
from skeinlab.diagrams.diagram import DiagramError, PuncturedDisk
from skeinlab.diagrams.geometry import format_fraction, format_point, point, to_fraction
from skeinlab.diagrams.io import dump_diagram, parse_diagram, read_diagram, write_diagram


def test_exact_coordinates():
    assert to_fraction("3/4") == Fraction(3, 4)
    assert to_fraction(-2) == Fraction(-2)
    assert format_fraction(Fraction(-3, 2)) == "-3/2"
    assert format_point(point(1, "1/2")) == "(1/1, 1/2)"


def test_inexact_coordinates_are_refused():
    with pytest.raises(TypeError):
        to_fraction(0.5)
    with pytest.raises(ValueError):
        to_fraction("0.5")
    with pytest.raises(ValueError):
        to_fraction("1/0")


@pytest.mark.parametrize('make', [eight, clasp, x1x2])
def test_document_round_trip(make):
    d, disk = parse_diagram(dump_diagram(make()))
    assert d == make()
    assert disk == PuncturedDisk.standard()


def test_document_uses_rational_text():
    doc = json.loads(dump_diagram(eight()))
    assert doc['disk']['outer_radius'] == "4/1"
    assert doc['strands'][0][0] == ["1/1", "1/1"]
    assert doc['crossings'][0]['at'] == ["0/1", "0/1"]


def test_crossings_may_be_listed_in_any_order():
    doc = json.loads(dump_diagram(clasp()))
    doc['crossings'].reverse()
    d, _ = parse_diagram(json.dumps(doc))
    assert d == clasp()


def test_missing_crossing_is_rejected():
    doc = json.loads(dump_diagram(eight()))
    doc['crossings'] = []
    with pytest.raises(DiagramError, match="no crossing is listed"):
        parse_diagram(json.dumps(doc))


def test_stray_crossing_is_rejected():
    doc = json.loads(dump_diagram(eight()))
    doc['crossings'].append({'at': ["3/1", "3/1"], 'over': {'strand': 0, 'segment': 0}})
    with pytest.raises(DiagramError, match="not an intersection"):
        parse_diagram(json.dumps(doc))


def test_over_segment_must_pass_through_the_crossing():
    doc = json.loads(dump_diagram(eight()))
    doc['crossings'][0]['over'] = {'strand': 0, 'segment': 1}
    doc['crossings'][0].pop('under', None)
    with pytest.raises(DiagramError, match="does not pass through"):
        parse_diagram(json.dumps(doc))


def test_malformed_documents_are_rejected():
    with pytest.raises(DiagramError):
        parse_diagram("{}")
    with pytest.raises(DiagramError):
        parse_diagram(json.dumps({'strands': [[["1/2", "0.5"]]]}))
    with pytest.raises(DiagramError):
        parse_diagram("not json")


def test_bad_disk_is_rejected():
    doc = json.loads(dump_diagram(x1x2()))
    doc['disk']['punctures'] = [["5/1", "0/1"]]
    with pytest.raises(DiagramError, match="puncture"):
        parse_diagram(json.dumps(doc))


def test_files(tmp_path):
    path = tmp_path / 'eight.json'
    write_diagram(eight(), path)
    d, _ = read_diagram(path)
    assert d == eight()
