import json
from functools import lru_cache
from pathlib import Path

import pytest

from knotbounds.analysis import analyze_diagram
from knotbounds.invariants import QEngine
from knotbounds.tables import bundled_table, prime_diagram

DATA = Path(__file__).parent / "data"

# one engine for the whole run: its cache of Q values is shared across tests
ENGINE = QEngine()


@lru_cache(maxsize=None)
def table(name: str):
    return bundled_table(name)


@lru_cache(maxsize=None)
def analysis_of(name: str):
    """Full analysis of a bundled prime knot, computed once per session."""
    cn, idx = (int(x) for x in name.split("_"))
    row = table("knots_le10").lookup(cn, idx)
    return analyze_diagram(prime_diagram(row), row.name, engine=ENGINE)


@lru_cache(maxsize=None)
def knotinfo() -> dict:
    return json.loads((DATA / "knotinfo_le10.json").read_text())


@pytest.fixture(scope="session")
def engine():
    return ENGINE


@pytest.fixture(scope="session")
def reference():
    return knotinfo()


@pytest.fixture(scope="session")
def primes():
    return table("knots_le10")


@pytest.fixture(scope="session")
def analyze():
    return analysis_of


@pytest.fixture(scope="session")
def all_analyses(primes):
    return [analysis_of(row.name) for row in primes]
