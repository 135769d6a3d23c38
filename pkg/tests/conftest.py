"""Shared helpers for the test suite."""

import random

import pytest

from hypertree_spectra import (
    Hypergraph,
    enumerate_hypertrees,
)

DESK_RANGE = [(2, 8), (3, 6), (4, 5)]  # (r, max m), mirrors the suite sweep


def all_hypertrees(max_m_by_r=None):
    """Every enumerated hypertree class in the desk-scale range."""
    ranges = max_m_by_r or DESK_RANGE
    for r, m_max in ranges:
        for m in range(1, m_max + 1):
            for H in enumerate_hypertrees(m, r):
                yield H


@pytest.fixture
def rng():
    return random.Random(20240917)


def path_graph(n: int) -> Hypergraph:
    """Ordinary path on n vertices as a 2-uniform hypergraph."""
    return Hypergraph(2, n, tuple((i, i + 1) for i in range(n - 1)))
