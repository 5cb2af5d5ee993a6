"""Tests for the HTTP API."""
import json

import pytest
from fastapi.testclient import TestClient

from skeinlab.app import app
from skeinlab.diagrams.builtins import builtin
from skeinlab.diagrams.evaluate import evaluate
from skeinlab.diagrams.io import dump_diagram


@pytest.fixture
def client():
    return TestClient(app)


@pytest.fixture
def eight_document():
    return json.loads(dump_diagram(builtin('eight')))


def test_health(client):
    response = client.get('/api/health')
    assert response.status_code == 200
    body = response.json()
    assert body['status'] == 'healthy'
    assert body['suites'] == 13


def test_list_suites(client):
    response = client.get('/api/suites')
    assert response.status_code == 200
    assert len(response.json()) == 13


def test_verify(client):
    response = client.post('/api/verify', json={'suites': ['tl'], 'k_max': 2})
    assert response.status_code == 200
    body = response.json()
    assert body['ok'] is True
    assert body['passed'] == 6


def test_verify_by_alias(client):
    response = client.post('/api/verify', json={'suites': ['prop61'], 'xi': '8/1'})
    assert response.status_code == 200
    body = response.json()
    assert body['ok'] is True
    assert [s['suite'] for s in body['suites']] == ['eight']


def test_verify_unknown_suite(client):
    response = client.post('/api/verify', json={'suites': ['nope']})
    assert response.status_code == 400


def test_verify_bad_root(client):
    response = client.post('/api/verify', json={'suites': ['eight'], 'xi': 'x/y'})
    assert response.status_code == 400


def test_verify_bad_cap(client):
    response = client.post('/api/verify', json={'suites': ['tl'], 'k_max': -1})
    assert response.status_code == 400


def test_eval(client, eight_document):
    response = client.post('/api/eval', json={'diagram': eight_document, 'xi': '4/1'})
    assert response.status_code == 200
    body = response.json()
    assert body['crossings'] == 1
    assert body['states'] == 2
    assert body['value'] == str(evaluate(builtin('eight')))
    assert body['xi'] == '4/1'


def test_eval_without_crossings_is_rejected(client, eight_document):
    eight_document['crossings'] = []
    response = client.post('/api/eval', json={'diagram': eight_document})
    assert response.status_code == 400


def test_eval_state_limit(client, eight_document):
    response = client.post('/api/eval', json={'diagram': eight_document, 'max_states': 1})
    assert response.status_code == 400
    assert 'state space too large' in response.json()['detail']
