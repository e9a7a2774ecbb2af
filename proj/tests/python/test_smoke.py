import pytest

import udgroute


@pytest.fixture(scope="module")
def graph():
    return udgroute.UnitDiskGraph(udgroute.generate("uniform-square", 120, seed=4))


def test_p5_routes_along_the_path():
    g = udgroute.UnitDiskGraph(udgroute.generate("line-path", 5))
    assert g.edge_count == 4
    assert g.diameter() == pytest.approx(3.2)
    scheme = udgroute.HierarchicalScheme(g, 1.0)
    assert scheme.route(g, 0, 4) == [0, 1, 2, 3, 4]
    assert scheme.simulate(g)["max_stretch"] == pytest.approx(1.0)


def test_generation_is_deterministic():
    assert udgroute.generate("snake", 60, seed=2) == udgroute.generate("snake", 60, seed=2)


def test_hierarchical_meets_target(graph):
    scheme = udgroute.HierarchicalScheme(graph, 0.5)
    assert scheme.config["calibrated"]
    report = scheme.simulate(graph)
    assert report["violations"] == 0
    assert report["pairs"] == graph.n * (graph.n - 1)
    assert report["max_stretch"] <= 1.5


def test_uncalibrated_levels_and_port_independence(graph):
    scheme = udgroute.HierarchicalScheme(graph, 0.5, calibrated=False)
    cfg = scheme.config
    assert cfg["epsilon"] == 0.5
    assert cfg["k_max"] > cfg["k0"]
    path = scheme.route(graph, 0, graph.n - 1, port_seed=1)
    assert path == scheme.route(graph, 0, graph.n - 1, port_seed=77)
    assert all(graph.adjacent(a, b) for a, b in zip(path, path[1:]))
    assert graph.path_length(path) >= graph.distance(0, graph.n - 1) * (1 - 1e-12)


def test_label_store_round_trip(graph, tmp_path):
    scheme = udgroute.HierarchicalScheme(graph, 0.5, calibrated=False)
    store = tmp_path / "labels.bin"
    scheme.save(str(store))
    for t in (5, 50, 100):
        assert udgroute.route_stored(str(store), graph, 0, t) == scheme.route(graph, 0, t)


def test_additive_and_lowdiam(graph):
    add = udgroute.AdditiveScheme(graph, 0.25)
    report = add.simulate(graph, sample=500, sample_seed=3)
    assert report["pairs"] == 500 and report["violations"] == 0
    low = udgroute.LowDiamScheme(graph, 0.25)
    assert low.simulate(graph)["max_stretch"] <= 17


def test_verify_all_components(graph):
    for component in udgroute.components:
        for name, passed, detail in udgroute.verify(graph, component):
            assert passed, f"{name}: {detail}"


def test_errors_surface_as_udg_error():
    with pytest.raises(udgroute.UdgError, match="DisconnectedGraph"):
        udgroute.UnitDiskGraph([(0, 0.0, 0.0), (1, 5.0, 0.0)])
    g = udgroute.UnitDiskGraph(udgroute.generate("line-path", 5))
    with pytest.raises(udgroute.UdgError, match="EpsilonTooSmall"):
        udgroute.AdditiveScheme(g, 0.25)
