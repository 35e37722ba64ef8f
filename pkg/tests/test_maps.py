import random

import pytest

from planocc import maps, oracle
from planocc.errors import InvalidMap, NotConnected, NotInvolution, NotPlanar
from planocc.maps import CombinatorialMap, PatternDescriptor, descriptor


def test_loop_and_bridge_are_valid():
    loop, bridge = maps.loop_map(), maps.bridge_map()
    assert (loop.vertex_count, loop.face_count) == (1, 2)
    assert (bridge.vertex_count, bridge.face_count) == (2, 1)


def test_torus_is_rejected():
    with pytest.raises(NotPlanar):
        maps.validate([1, 0, 3, 2], [2, 3, 1, 0], 0)


def test_other_invalid_inputs():
    with pytest.raises(NotInvolution):
        maps.validate([0, 1], [1, 0], 0)
    with pytest.raises(NotConnected):
        maps.validate([1, 0, 3, 2], [0, 1, 2, 3], 0)
    with pytest.raises(InvalidMap):
        maps.validate([1, 0], [0, 0], 0)
    with pytest.raises(InvalidMap):
        maps.validate([1, 0], [1, 0], 5)


def test_face_valencies():
    assert [len(f) for f in maps.faces(maps.bridge_map())] == [2]
    assert [len(f) for f in maps.faces(maps.loop_map())] == [1, 1]
    quad = maps.faces(maps.quad_with_diagonal())
    assert len(quad[0]) == 4
    assert sorted(len(f) for f in quad[1:]) == [3, 3]


@pytest.mark.parametrize(
    "m, expected",
    [
        (maps.quad_with_diagonal(), (4, 1, 0, 6, (3, 3), 2)),
        (maps.hexagon_chord_pendant(), (8, 1, 1, 8, (4, 4), 1)),
        (maps.loop_map(), (1, 0, 0, 1, (1,), 1)),
        (maps.triangle_with_chord(), (3, 1, 0, 5, (2, 3), 1)),
        (maps.triangle_with_pendant(), (5, 0, 1, 3, (3,), 1)),
        (maps.cycle_map(5), (5, 0, 0, 5, (5,), 5)),
    ],
)
def test_descriptors(m, expected):
    d = descriptor(m)
    assert (d.ell, d.k, d.s, d.inner_valency_sum, d.inner_valencies, d.rotational_count) == expected


def test_bridge_descriptor():
    # The root half-edge and its reverse both lie on the single face and give
    # the same rooted map, so two rotational reroots.
    d = descriptor(maps.bridge_map())
    assert (d.ell, d.k, d.s, d.inner_valencies, d.rotational_count) == (2, 0, 1, (), 2)


@pytest.mark.parametrize("ell", range(2, 8))
def test_cycle_rotational_count(ell):
    assert maps.rotational_iso_count(maps.cycle_map(ell)) == ell


def test_descriptor_validation():
    with pytest.raises(ValueError):
        PatternDescriptor(4, 1, 0, 5, (3, 3), 2)
    d = PatternDescriptor(4, 1, 0, 6, (3, 3), 2)
    assert d.edge_count == 5


def test_loop_and_bridge_codes_differ_and_exhaust_one_edge():
    assert maps.canonical_code(maps.loop_map()) != maps.canonical_code(maps.bridge_map())
    codes = set(oracle.enumerate_maps(1).codes)
    assert codes == {maps.code_tuple(maps.loop_map()), maps.code_tuple(maps.bridge_map())}


def _relabel(m, rng):
    perm = list(range(m.half_edge_count))
    rng.shuffle(perm)
    return m.relabeled(perm)


def test_relabeling_invariance():
    rng = random.Random(20261017)
    pool = list(oracle.enumerate_maps(5).maps)
    sample = rng.sample(pool, 17) + [maps.quad_with_diagonal(), maps.hexagon_chord_pendant(), maps.cycle_map(6)]
    assert len(sample) == 20
    for m in sample:
        code = m.code
        for _ in range(100):
            assert _relabel(m, rng).code == code


def test_from_code_round_trip():
    for m in oracle.enumerate_maps(4).maps[:50]:
        assert maps.from_code(m.code) == m
        assert maps.from_code(m.code).code == m.code


def test_file_round_trip(tmp_path, quad):
    path = tmp_path / "m.map"
    maps.save_map(quad, path)
    again = maps.load_map(path)
    assert again == quad and again.sigma == quad.sigma


def test_parse_accepts_comments_and_separators():
    text = "# the loop\nE: 1\nalpha = 1 0\nsigma 1 0  # one vertex\nroot 0\n"
    assert maps.parse_map(text) == maps.loop_map()
    assert maps.parse_map("E 0\nalpha\nsigma\n").is_empty


@pytest.mark.parametrize(
    "text",
    ["E 1\nalpha 1 0\nsigma 1 0\n", "E 1\nalpha 1 0 2\nsigma 1 0\nroot 0", "E x", "alpha 1 0", "E 1 E 1"],
)
def test_parse_errors(text):
    with pytest.raises(InvalidMap):
        maps.parse_map(text)


def test_bundled_fixtures(quad, hexagon):
    assert quad == maps.quad_with_diagonal()
    assert hexagon == maps.hexagon_chord_pendant()
    assert descriptor(hexagon).ell == 8


def test_rerooting_changes_class_but_not_structure():
    m = maps.quad_with_diagonal()
    r = m.rerooted(m.alpha[m.root])
    assert r != m
    assert sorted(len(f) for f in maps.faces(r)) == sorted(len(f) for f in maps.faces(m))


def test_hashable_by_class():
    m = maps.cycle_map(4)
    assert len({m, m.rerooted(2), maps.cycle_map(4)}) == 1
    assert isinstance(m, CombinatorialMap)
