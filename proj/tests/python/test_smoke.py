import pytest

import trisurg


def test_fixtures_load():
    names = trisurg.fixture_names()
    assert "disk_oct" in names and "mobius_m1" in names
    t = trisurg.Triangulation.fixture("disk_oct")
    assert (t.num_vertices, t.num_faces) == (6, 7)
    assert t.surface() == (1, True, 1)
    assert t.degree_class() == "f4"


def test_m1_has_no_contractible_edge():
    t = trisurg.Triangulation.fixture("mobius_m1")
    assert not any(trisurg.is_contractible(t, u, v) for u, v in t.edges)
    assert trisurg.certify(t, "f4")["verdict"] == "irreducible"


def test_parse_roundtrip_keeps_code():
    t = trisurg.Triangulation.fixture("torus_quasi_oct")
    again = trisurg.Triangulation.parse(t.serialize())
    assert again.canonical_code() == t.canonical_code()


def test_invalid_input_raises():
    with pytest.raises(trisurg.TrisurgError, match="NonManifoldEdge"):
        trisurg.Triangulation([(1, 2, 3), (1, 2, 4), (1, 2, 5)])


def test_reduce_and_replay():
    t = trisurg.Triangulation.fixture("flag_ext_removable")
    out = trisurg.reduce(t, "f0")
    assert out["certificate"]["verdict"] != "not-minimal"
    assert out["certificate"]["all_housed"]
    end = trisurg.replay(t, out["trace"])
    assert end.canonical_code() == out["terminal"].canonical_code()


def test_flips_need_f4():
    t = trisurg.Triangulation.fixture("flag5")
    with pytest.raises(ValueError):
        trisurg.reduce(t, "f0", flips=True)


def test_enumerate_small_disks():
    seeds = [trisurg.Triangulation.fixture("flag5"), trisurg.Triangulation.fixture("disk_oct")]
    levels = trisurg.enumerate_catalog(seeds, "f0", 7)
    assert min(levels) == 5
    assert all(len(codes) == len(set(codes)) for codes in levels.values())
