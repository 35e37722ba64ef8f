import os
import random

import pytest

from planocc import _kernels_py, kernels, maps, oracle

try:
    from planocc import _kernels as _kernels_c
except ImportError:  # extension not built
    _kernels_c = None

needs_ext = pytest.mark.skipif(_kernels_c is None, reason="compiled extension not built")


def _split(code):
    return list(code[0::2]), list(code[1::2])


def test_backend_selected():
    assert kernels.BACKEND in ("cython", "python")
    forced = os.environ.get("PLANOCC_PURE_PYTHON", "") not in ("", "0")
    if _kernels_c is not None and not forced:
        assert kernels.BACKEND == "cython"


def test_fallback_forced(monkeypatch):
    import importlib

    monkeypatch.setenv("PLANOCC_PURE_PYTHON", "1")
    mod = importlib.reload(kernels)
    try:
        assert mod.BACKEND == "python"
    finally:
        monkeypatch.delenv("PLANOCC_PURE_PYTHON")
        importlib.reload(kernels)


@needs_ext
def test_basic_functions_agree():
    rng = random.Random(7)
    for code in rng.sample(oracle.enumerate_maps(5).codes, 40):
        s, a = _split(code)
        assert _kernels_c.orbit_labels(s) == _kernels_py.orbit_labels(s)
        assert _kernels_c.face_labels(s, a) == _kernels_py.face_labels(s, a)
        assert _kernels_c.is_connected(s, a) == _kernels_py.is_connected(s, a)
        assert _kernels_c.all_root_codes(s, a) == _kernels_py.all_root_codes(s, a)
        for r in range(len(s)):
            assert _kernels_c.canonical_code(s, a, r) == _kernels_py.canonical_code(s, a, r)


@needs_ext
@pytest.mark.parametrize("mode", [kernels.MODE_PATTERN, kernels.MODE_SUBMAP, kernels.MODE_AT_ROOT])
@pytest.mark.parametrize("pattern", [maps.cycle_map(3), maps.quad_with_diagonal(), maps.triangle_with_pendant(),
                                     maps.digon_map(), maps.bridge_map()])
def test_scan_agrees(pattern, mode):
    key = oracle._pattern_key(pattern)
    rng = random.Random(11)
    for code in rng.sample(oracle.enumerate_maps(6).codes, 150):
        s, a = _split(code)
        args = (s, a, 0, key.edges, key.code, key.ell, key.valencies, mode)
        assert _kernels_c.scan_occurrences(*args) == _kernels_py.scan_occurrences(*args)


def test_disconnected_detection():
    assert not kernels.is_connected([0, 1, 2, 3], [1, 0, 3, 2])
    assert kernels.is_connected([], [])


def test_scan_rejects_oversized_patterns():
    s, a = [1, 0], [1, 0]
    key = oracle._pattern_key(maps.quad_with_diagonal())
    assert kernels.scan_occurrences(s, a, 0, key.edges, key.code, key.ell, key.valencies, 0) == 0
