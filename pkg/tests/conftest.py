"""Shared fixtures: probe construction runs one automorphism search per q,
so the results are cached for the whole session."""

import pytest

from trigon.exoticity import build_probe
from trigon.singer import singer_datum


@pytest.fixture(scope="session")
def probe_for():
    cache = {}

    def get(q):
        if q not in cache:
            cache[q] = build_probe(singer_datum(q))
        return cache[q]

    return get
