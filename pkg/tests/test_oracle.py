import pytest

from conftest import battery
from planocc import maps, oracle
from planocc.counting import F_ell, M_bivariate, m_count
from planocc.errors import SizeLimitExceeded, UnsupportedValency
from planocc.occurrence import F_pattern, S_submap, T_pattern


@pytest.mark.parametrize("n", range(7))
def test_map_counts(n):
    res = oracle.enumerate_maps(n)
    assert res.m == m_count(n)
    assert len(set(res.codes)) == res.m


@pytest.mark.parametrize("n", range(1, 7))
def test_root_valency_histogram(n):
    hist = oracle.enumerate_maps(n).root_valency_histogram
    row = M_bivariate(n)[n]
    assert {k: int(c) for k, c in enumerate(row.coefficients) if c} == hist


@pytest.mark.parametrize("ell", range(2, 6))
def test_pure_gon_counts(ell):
    f = F_ell(ell, 6)
    assert [oracle.count_pure_gon(n, ell) for n in range(7)] == [int(c) for c in f.coefficients]


def test_pure_gon_small():
    assert oracle.count_pure_gon(2, 2) == 1
    assert oracle.count_pure_gon(2, 3) == 0
    with pytest.raises(UnsupportedValency):
        oracle.count_pure_gon(3, 1)


def test_maps_are_valid_and_canonical():
    for m in oracle.enumerate_maps(4).maps:
        assert m.canonical().code == m.code


def test_size_limit():
    with pytest.raises(SizeLimitExceeded):
        oracle.enumerate_maps(7)
    with pytest.raises(SizeLimitExceeded):
        oracle.enumerate_maps(8, n_max=8)


def test_determinism():
    first = oracle.enumerate_maps(5).codes
    oracle.clear_memory()
    assert oracle.enumerate_maps(5).codes == first


def test_parallel_matches_serial():
    oracle.clear_memory()
    par = oracle.enumerate_maps(6, workers=3)
    oracle.clear_memory()
    ser = oracle.enumerate_maps(6)
    assert par.codes == ser.codes


def test_cache_round_trip(tmp_path):
    res = oracle.enumerate_maps(5)
    path = oracle.save_cache(res, tmp_path)
    assert path.name.endswith(".v1.txt.gz")
    again = oracle.load_cache(5, tmp_path)
    assert again.codes == res.codes and again.unrooted == res.unrooted
    assert oracle.load_cache(4, tmp_path) is None


def test_cache_rejects_other_versions(tmp_path):
    import gzip

    p = tmp_path / "maps-n3.v1.txt.gz"
    with gzip.open(p, "wt") as fh:
        fh.write("planocc-maps 0 n=3 classes=0 rooted=0\n")
    assert oracle.load_cache(3, tmp_path) is None


def test_enumeration_through_cache_dir(tmp_path):
    oracle.clear_memory()
    a = oracle.enumerate_maps(4, cache_dir=tmp_path)
    oracle.clear_memory()
    b = oracle.enumerate_maps(4, cache_dir=tmp_path)
    assert a.codes == b.codes
    assert (tmp_path / "maps-n4.v1.txt.gz").exists()


def test_worked_example_counts(quad):
    assert oracle.count_marked_patterns(quad, 5) == 2
    assert oracle.count_marked_patterns(quad, 6) == 42
    assert oracle.count_marked_submaps(quad, 5) == 2
    assert oracle.count_marked_submaps(quad, 6) == S_submap(quad, 6)[6]
    assert oracle.count_marked_patterns(quad, 4) == 0


@pytest.mark.parametrize("name", list(battery()))
def test_battery_against_series(name):
    m = battery()[name]
    F, T, S = F_pattern(m, 6), T_pattern(m, 6), S_submap(m, 6)
    for n in range(7):
        assert oracle.count_at_root(m, n) == F[n]
        assert oracle.count_marked_patterns(m, n) == T[n]
        assert oracle.count_marked_submaps(m, n) == S[n]


@pytest.mark.slow
@pytest.mark.parametrize("name", ["quad_with_diagonal", "triangle_with_chord"])
def test_battery_at_seven_edges(name):
    m = battery()[name]
    assert oracle.enumerate_maps(7, n_max=7).m == m_count(7)
    assert oracle.count_marked_patterns(m, 7, n_max=7) == T_pattern(m, 7)[7]
    assert oracle.count_marked_submaps(m, 7, n_max=7) == S_submap(m, 7)[7]
