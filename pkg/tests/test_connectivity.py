import pytest

from toughkit import bits, build_jm, connectivity, from_edges
from toughkit.generators import complete, cycle, path, petersen, random_connected_graph, star
from toughkit.graphs import count_components
from toughkit.invariants import connectivity_json

from oracles import connectivity_naive


@pytest.mark.parametrize("build,kappa", [
    (petersen, 3),
    (lambda: cycle(8), 2),
    (lambda: path(5), 1),
    (lambda: star(4), 1),
    (lambda: build_jm(3).graph, 4),
    (lambda: build_jm(4).graph, 4),
    (lambda: build_jm(5).graph, 4),
    (lambda: build_jm(6).graph, 4),
])
def test_frozen_kappa(build, kappa):
    g = build()
    cert = connectivity(g)
    assert cert.kappa == kappa
    assert cert.witness_cut is not None
    assert bin(cert.witness_cut).count("1") == kappa
    # the witness really disconnects
    assert count_components(g, removed=cert.witness_cut) >= 2


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_complete_marker(n):
    cert = connectivity(complete(n))
    assert cert.kappa == n - 1
    assert cert.witness_cut is None
    assert connectivity_json(cert)["witness"] is None


def test_disconnected_is_zero():
    cert = connectivity(from_edges(5, [(0, 1), (2, 3)]))
    assert cert.kappa == 0
    assert cert.witness_cut == 0


def test_matches_naive_on_randoms(rng):
    for _ in range(40):
        n = rng.randrange(2, 9)
        g = from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                           if rng.random() < 0.5])
        cert = connectivity(g)
        assert cert.kappa == connectivity_naive(g)
        if cert.witness_cut is not None and cert.kappa > 0:
            assert count_components(g, removed=cert.witness_cut) >= 2


def test_certificate_validates(rng):
    for _ in range(15):
        g = random_connected_graph(rng.randrange(4, 9), rng, p=0.5)
        cert = connectivity(g)
        cert.validate(g)


def test_witness_vertices_in_range():
    cert = connectivity(build_jm(5).graph)
    assert all(0 <= v < 14 for v in bits(cert.witness_cut))
