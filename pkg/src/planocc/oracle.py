"""Brute-force ground truth: all rooted planar maps with few edges.

Maps with ``n`` edges are grown from the isomorphism classes of unrooted
maps with ``n - 1`` edges by adding one edge in every possible way: a new
edge between two corners (a chord, or a loop when both ends share a
vertex) or a pendant edge to a new vertex.  Every planar map arises this
way, since deleting a non-bridge edge or a leaf edge leaves a connected
planar map.  Results of genus > 0 are discarded, unrooted classes are
deduplicated by their least canonical code over all roots, and the rooted
maps of a class are its distinct codes.

Occurrence counts go through :func:`planocc.kernels.scan_occurrences`.
"""

from __future__ import annotations

import gzip
import os
import threading
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

from . import kernels
from .errors import SizeLimitExceeded, UnsupportedValency
from .maps import CombinatorialMap, code_tuple, from_code

DEFAULT_NMAX = 6
HARD_NMAX = 7
CACHE_VERSION = 1

Code = tuple  # flattened (sigma label, alpha label) pairs in BFS order


def _split(code: Sequence[int]) -> tuple[list[int], list[int]]:
    return list(code[0::2]), list(code[1::2])


def _euler(sigma, alpha) -> int:
    v = kernels.orbit_labels(sigma)[1]
    f = kernels.face_labels(sigma, alpha)[1]
    return v - len(sigma) // 2 + f


def _insert_after(sigma: list[int], x: int, new: int) -> None:
    sigma[new] = sigma[x]
    sigma[x] = new


def _children(code: Code) -> Iterable[tuple[list[int], list[int]]]:
    """All one-edge extensions of the map with canonical code ``code``."""
    if not code:
        yield [1, 0], [1, 0]  # loop
        yield [0, 1], [1, 0]  # bridge
        return
    sigma0, alpha0 = _split(code)
    n = len(sigma0)
    a, b = n, n + 1
    alpha = alpha0 + [b, a]
    for x in range(n):
        base = sigma0 + [0, 0]
        _insert_after(base, x, a)
        # pendant edge to a new vertex
        s = list(base)
        s[b] = b
        yield s, alpha
        # chord or loop: second end after any corner, including right after a
        for y in range(n + 1):
            s = list(base)
            _insert_after(s, y, b)
            yield s, alpha


def _grow_shard(parents: Sequence[Code]) -> dict[Code, tuple[Code, ...]]:
    out: dict[Code, tuple[Code, ...]] = {}
    for p in parents:
        for sigma, alpha in _children(p):
            if _euler(sigma, alpha) != 2:
                continue
            codes = kernels.all_root_codes(sigma, alpha)
            key = min(codes)
            if key not in out:
                out[key] = tuple(sorted(set(codes)))
    return out


@dataclass(frozen=True)
class EnumerationResult:
    """All rooted maps with ``n`` edges, as sorted canonical codes."""

    n: int
    codes: tuple[Code, ...]
    unrooted: tuple[Code, ...] = field(repr=False, default=())

    @property
    def m(self) -> int:
        return len(self.codes)

    @cached_property
    def maps(self) -> list[CombinatorialMap]:
        return [from_code(c) for c in self.codes]

    @cached_property
    def root_valency_histogram(self) -> dict[int, int]:
        """``k -> m_{n,k}``."""
        hist: Counter = Counter()
        for c in self.codes:
            sigma, alpha = _split(c)
            hist[_root_face_len(sigma, alpha) if c else 0] += 1
        return dict(sorted(hist.items()))

    @cached_property
    def pure_gon_counts(self) -> dict[int, int]:
        """``ell -> f_{ell,n}`` for ``ell >= 2``."""
        hist: Counter = Counter()
        for c in self.codes:
            if not c:
                continue
            sigma, alpha = _split(c)
            ell = _pure_root_face(sigma, alpha)
            if ell >= 2:
                hist[ell] += 1
        return dict(sorted(hist.items()))


def _root_face(sigma, alpha) -> list[int]:
    cyc = [0]
    h = sigma[alpha[0]]
    while h != 0:
        cyc.append(h)
        h = sigma[alpha[h]]
    return cyc


def _root_face_len(sigma, alpha) -> int:
    return len(_root_face(sigma, alpha))


def _pure_root_face(sigma, alpha) -> int:
    """Valency of the root face if it is a pure polygon, else 0."""
    cyc = _root_face(sigma, alpha)
    vlab = kernels.orbit_labels(sigma)[0]
    edges = {min(h, alpha[h]) for h in cyc}
    verts = {vlab[h] for h in cyc}
    ell = len(cyc)
    return ell if len(edges) == ell and len(verts) == ell else 0


class _Store:
    def __init__(self):
        self._levels: dict[int, EnumerationResult] = {0: EnumerationResult(0, ((),), ((),))}
        self._lock = threading.RLock()

    def get(self, n: int, workers: int, cache_dir: Path | None) -> EnumerationResult:
        with self._lock:
            if n in self._levels:
                return self._levels[n]
            if cache_dir is not None:
                res = load_cache(n, cache_dir)
                if res is not None:
                    self._levels[n] = res
                    return res
            parent = self.get(n - 1, workers, cache_dir)
            res = _grow(parent, workers)
            self._levels[n] = res
            if cache_dir is not None:
                save_cache(res, cache_dir)
            return res

    def clear(self) -> None:
        with self._lock:
            self._levels = {0: self._levels[0]}


_STORE = _Store()


def _grow(parent: EnumerationResult, workers: int) -> EnumerationResult:
    reps = list(parent.unrooted)
    if workers > 1 and len(reps) > 64:
        shards = [reps[i::workers] for i in range(workers)]
        merged: dict[Code, tuple[Code, ...]] = {}
        with ProcessPoolExecutor(max_workers=workers) as ex:
            for part in ex.map(_grow_shard, shards):
                for k, v in part.items():
                    merged.setdefault(k, v)
    else:
        merged = _grow_shard(reps)
    keys = tuple(sorted(merged))
    codes = tuple(sorted(c for k in keys for c in merged[k]))
    return EnumerationResult(parent.n + 1, codes, keys)


def enumerate_maps(
    n: int,
    n_max: int = DEFAULT_NMAX,
    workers: int = 1,
    cache_dir: str | Path | None = None,
) -> EnumerationResult:
    """All rooted planar maps with ``n`` edges, each exactly once.

    ``n_max`` guards against accidental exponential runs; it may be raised
    to 7 at most.  ``workers > 1`` shards the parent classes over processes.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > n_max or n > HARD_NMAX:
        raise SizeLimitExceeded(f"enumeration at n={n} exceeds the limit n_max={min(n_max, HARD_NMAX)}")
    return _STORE.get(n, max(1, workers), Path(cache_dir) if cache_dir is not None else None)


def clear_memory() -> None:
    _STORE.clear()


# --- cache files -------------------------------------------------------------


def _cache_path(n: int, cache_dir: Path) -> Path:
    return cache_dir / f"maps-n{n}.v{CACHE_VERSION}.txt.gz"


def save_cache(res: EnumerationResult, cache_dir: str | Path) -> Path:
    """Write the unrooted class keys of ``res``; rooted codes are rebuilt on load."""
    d = Path(cache_dir)
    d.mkdir(parents=True, exist_ok=True)
    path = _cache_path(res.n, d)
    tmp = path.with_suffix(".tmp")
    with gzip.open(tmp, "wt") as fh:
        fh.write(f"planocc-maps {CACHE_VERSION} n={res.n} classes={len(res.unrooted)} rooted={res.m}\n")
        for key in res.unrooted:
            fh.write(" ".join(map(str, key)) + "\n")
    os.replace(tmp, path)
    return path


def load_cache(n: int, cache_dir: str | Path) -> EnumerationResult | None:
    """Read a cache file; ``None`` if it is missing, of another version, or inconsistent."""
    path = _cache_path(n, Path(cache_dir))
    if not path.exists():
        return None
    with gzip.open(path, "rt") as fh:
        header = fh.readline().split()
        if len(header) < 5 or header[0] != "planocc-maps" or header[1] != str(CACHE_VERSION):
            return None
        fields = dict(h.split("=") for h in header[2:])
        keys = [tuple(int(x) for x in line.split()) for line in fh if line.strip()]
    if int(fields["n"]) != n or len(keys) != int(fields["classes"]):
        return None
    codes = set()
    for k in keys:
        sigma, alpha = _split(k)
        codes.update(kernels.all_root_codes(sigma, alpha))
    if len(codes) != int(fields["rooted"]):
        return None
    return EnumerationResult(n, tuple(sorted(codes)), tuple(keys))


# --- counts --------------------------------------------------------------------


def count_pure_gon(n: int, ell: int, n_max: int = DEFAULT_NMAX) -> int:
    """Rooted ``n``-edge maps whose root face is a pure ``ell``-gon."""
    if ell < 2:
        raise UnsupportedValency(f"pure polygons need ell >= 2, got {ell}")
    return enumerate_maps(n, n_max).pure_gon_counts.get(ell, 0)


@dataclass(frozen=True)
class _PatternKey:
    edges: int
    code: tuple[int, ...]
    ell: int
    valencies: tuple[int, ...]


def _pattern_key(pattern: CombinatorialMap) -> _PatternKey:
    if pattern.is_empty:
        raise ValueError("the empty map is not a pattern")
    faces = kernels.face_labels(pattern.sigma, pattern.alpha)[0]
    vals = tuple(sorted(Counter(faces).values()))
    ell = Counter(faces)[faces[pattern.root]]
    return _PatternKey(pattern.edge_count, code_tuple(pattern), ell, vals)


def _count(pattern: CombinatorialMap, n: int, mode: int, n_max: int) -> int:
    key = _pattern_key(pattern)
    if key.edges > n:
        return 0
    total = 0
    for c in enumerate_maps(n, n_max).codes:
        sigma, alpha = _split(c)
        total += kernels.scan_occurrences(sigma, alpha, 0, key.edges, key.code, key.ell, key.valencies, mode)
    return total


def count_marked_patterns(pattern: CombinatorialMap, n: int, n_max: int = DEFAULT_NMAX) -> int:
    """Pairs (rooted ``n``-edge map, marked pattern occurrence of ``pattern``)."""
    return _count(pattern, n, kernels.MODE_PATTERN, n_max)


def count_marked_submaps(pattern: CombinatorialMap, n: int, n_max: int = DEFAULT_NMAX) -> int:
    """Pairs (rooted ``n``-edge map, marked submap occurrence of ``pattern``)."""
    return _count(pattern, n, kernels.MODE_SUBMAP, n_max)


def count_at_root(pattern: CombinatorialMap, n: int, n_max: int = DEFAULT_NMAX) -> int:
    """Rooted ``n``-edge maps in which ``pattern`` occurs at the root."""
    return _count(pattern, n, kernels.MODE_AT_ROOT, n_max)
