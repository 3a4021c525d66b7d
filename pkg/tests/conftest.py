"""Shared corpora and cached profiles for the test suite.

The expensive corpora (exhaustive cubic census, random tree/unicyclic
batches) and their exact profiles are computed once per session and
shared between the verification and hunting tests.
"""

from __future__ import annotations

import random

import networkx as nx
import pytest

from nulab import corpus, gio
from nulab.profiling import compute_profile


@pytest.fixture(scope="session")
def cubic_corpus():
    """All connected simple cubic graphs with n <= 12 (census-validated)."""
    return corpus.connected_cubic_graphs(12)


@pytest.fixture(scope="session")
def cubic_corpus_g6(cubic_corpus):
    """The cubic corpus round-tripped through graph6 ingestion."""
    out = []
    for g in cubic_corpus:
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges)
        line = nx.to_graph6_bytes(h, header=False).decode().strip()
        out.append(gio.parse_graph6(line))
    return out


@pytest.fixture(scope="session")
def cubic_profiles(cubic_corpus_g6):
    return [
        compute_profile(g, ks=(1, 2, 3, 4), include_o=False) for g in cubic_corpus_g6
    ]


@pytest.fixture(scope="session")
def tree_corpus():
    return list(corpus.random_trees(500, 20, seed=20260824))


@pytest.fixture(scope="session")
def unicyclic_corpus():
    return list(corpus.random_unicyclics(500, 18, seed=20260825))


@pytest.fixture(scope="session")
def tree_profiles(tree_corpus):
    return [compute_profile(g, ks=(1, 2, 3, 4, 5)) for g in tree_corpus]


@pytest.fixture(scope="session")
def unicyclic_profiles(unicyclic_corpus):
    return [compute_profile(g, ks=(1, 2, 3, 4, 5)) for g in unicyclic_corpus]


@pytest.fixture()
def rng():
    return random.Random(987654321)
