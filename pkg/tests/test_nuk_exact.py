"""Branch-and-bound solver: oracle equivalence, certificates, bounds,
pendant and bridge reductions."""

import pytest

from nulab import corpus, exact, families, oracle
from nulab.errors import NotABridge, NotCubic
from nulab.graph import build


def _check(g, k, expected=None, use_poly=True):
    res = exact.nu_k(g, k, use_poly=use_poly)
    if expected is None:
        expected = oracle.nu_k_oracle(g, k)
    assert res.value == expected
    assert res.certificate.colored_count == res.value
    assert res.certificate.is_proper(g)
    return res


def test_oracle_equivalence_random_multigraphs(rng):
    for _ in range(80):
        g = corpus.random_multigraph(rng.randint(2, 7), rng.randint(1, 9), rng)
        for k in (1, 2, 3, 4):
            want = oracle.nu_k_oracle(g, k)
            _check(g, k, want, use_poly=True)
            _check(g, k, want, use_poly=False)


def test_monotonicity(rng):
    for _ in range(40):
        g = corpus.random_multigraph(rng.randint(3, 8), rng.randint(2, 12), rng)
        nu = {k: exact.nu_k(g, k).value for k in (1, 2, 3, 4)}
        for k in (1, 2, 3):
            assert nu[k] <= nu[k + 1] <= nu[k] + nu[1]


def test_named_small_values():
    _check(families.fig1_graph(), 2, 5)
    _check(families.fig1_graph(), 3, 7)
    _check(families.k4(), 3, 6)
    _check(families.cycle(5), 2, 4)
    _check(families.cycle(5), 3, 5)
    _check(families.cycle(2), 1, 1)
    _check(families.cycle(2), 2, 2)


def test_edge_cases():
    empty = build(0, [])
    assert exact.nu_k(empty, 3).value == 0
    single = build(2, [(0, 1)])
    assert exact.nu_k(single, 1).value == 1
    with pytest.raises(ValueError):
        exact.nu_k(single, 0)


def test_shortcut_cubic_high_k():
    # every multigraph with max degree 3 is 4-edge-colorable
    for g in [families.petersen(), families.fig1_graph(), families.sylvester10()]:
        res = exact.nu_k(g, 4)
        assert res.value == g.m
        assert res.certificate.is_proper(g)
        assert res.certificate.colored_count == g.m


def test_shortcut_vizing_simple():
    g = families.petersen_minus_vertex()  # simple, max degree 3
    res = exact.nu_k(g, 4)
    assert res.value == g.m
    assert res.certificate.is_proper(g)


def test_disconnected_input():
    # fig1 plus a disjoint triangle
    fig1 = families.fig1_graph()
    edges = list(fig1.edges) + [(6, 7), (7, 8), (6, 8)]
    g = build(9, edges)
    assert exact.nu_k(g, 2).value == 5 + 2
    assert exact.nu_k(g, 3).value == 7 + 3


def test_reduce_pendant():
    star = families.star(5)
    assert len(exact.reduce_pendant(star, 1)) == 1
    assert len(exact.reduce_pendant(star, 2)) == 2
    path = families.path(6)
    forced = exact.reduce_pendant(path, 3)
    assert forced == set(range(5))  # whole path collapses
    assert exact.reduce_pendant(families.cycle(5), 2) == set()


def test_resistance_r3():
    assert exact.resistance_r3(families.petersen()) == 2
    assert exact.resistance_r3(families.k4()) == 0
    assert exact.resistance_r3(families.fig1_graph()) == 2
    with pytest.raises(NotCubic):
        exact.resistance_r3(families.cycle(4))


def test_upper_bound_admissible(rng):
    for _ in range(30):
        g = corpus.random_multigraph(rng.randint(2, 7), rng.randint(1, 9), rng)
        for k in (1, 2, 3):
            res = exact.nu_k(g, k)
            assert exact.upper_bound(g, k) >= res.value
            # the bound is consistent with a completed optimal coloring
            assert exact.upper_bound(g, k, res.certificate) >= res.value


def test_decompose_bridge_matches_direct():
    fig1 = families.fig1_graph()
    for k in (1, 2, 3, 4):
        assert exact.decompose_bridge(fig1, 4, k) == exact.nu_k(fig1, k).value
    syl = families.sylvester10()
    stem = next(iter(syl.bridges()))
    for k in (2, 3):
        assert exact.decompose_bridge(syl, stem, k) == exact.nu_k(syl, k).value


def test_decompose_bridge_random(rng):
    for _ in range(25):
        a = corpus.random_multigraph(rng.randint(2, 5), rng.randint(1, 5), rng)
        b = corpus.random_multigraph(rng.randint(2, 5), rng.randint(1, 5), rng)
        edges = list(a.edges)
        edges += [(a.n + u, a.n + v) for u, v in b.edges]
        bridge_id = len(edges)
        edges.append((rng.randrange(a.n), a.n + rng.randrange(b.n)))
        g = build(a.n + b.n, edges)
        k = rng.randint(1, 3)
        assert exact.decompose_bridge(g, bridge_id, k) == exact.nu_k(g, k).value


def test_decompose_bridge_rejects_non_bridge():
    with pytest.raises(NotABridge):
        exact.decompose_bridge(families.cycle(4), 0, 2)


def test_node_count_reported():
    res = exact.nu_k(families.petersen(), 3)
    assert res.value == 13
    assert res.node_count >= 0
