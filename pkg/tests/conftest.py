"""Shared fixtures: catalog curves, a small corpus and an isolated certificate store."""

import json

import pytest

from knot_workbench.auditor import CellResolver, CertificateStore
from knot_workbench.config import SearchBudget
from knot_workbench.curves import TRIVIAL, get_curve
from knot_workbench.search import enumerate_corpus


@pytest.fixture
def trivial():
    return TRIVIAL


@pytest.fixture
def infinity():
    return get_curve("INF")


@pytest.fixture
def trefoil():
    return get_curve("T3")


@pytest.fixture
def flower():
    return get_curve("PF")


@pytest.fixture(scope="session")
def small_corpus():
    """Every curve with at most four double points."""
    return enumerate_corpus(4)


@pytest.fixture(scope="session")
def corpus_to_six():
    """Every curve with at most six double points."""
    return enumerate_corpus(6)


@pytest.fixture
def store():
    return CertificateStore()


@pytest.fixture
def resolver(store):
    return CellResolver(store, SearchBudget(node_cap=200_000, time_cap=60.0))


def _extract_json(output: str) -> str:
    lines = output.splitlines()
    start = next(i for i, line in enumerate(lines) if line[:1] in ("[", "{"))
    closing = "]" if lines[start].startswith("[") else "}"
    end = next(i for i in range(start, len(lines)) if lines[i] == closing)
    return "\n".join(lines[start : end + 1])


@pytest.fixture
def cli_json():
    """Parser for the JSON document printed by the CLI, skipping log lines around it."""
    return lambda output: json.loads(_extract_json(output))
