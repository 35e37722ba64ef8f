"""Rooted planar maps as half-edge rotation systems.

A map with ``E`` edges has half-edges ``0..2E-1``.  ``alpha`` pairs the two
halves of every edge, ``sigma`` gives the cyclic order of half-edges around
each vertex, and ``root`` is the root half-edge, directed away from the root
vertex.

Convention used throughout the package: the face to the left of a
half-edge ``h`` is the orbit of ``h`` under ``phi = sigma o alpha``, i.e.
``h -> sigma[alpha[h]]``.  The root face is the face of ``root``.

Map file format
---------------
A whitespace-insensitive text record made of four keyed fields, in any
order::

    # comment lines start with '#'
    E     5
    alpha 1 0 3 2 5 4 7 6 9 8
    sigma 8 0 1 2 9 3 5 4 6 7
    root  0

``E`` is followed by one integer, ``alpha`` and ``sigma`` by ``2E``
integers each (images of half-edges ``0..2E-1``), ``root`` by one integer.
The empty map is ``E 0`` with empty ``alpha``/``sigma`` and no ``root``.
Keys may optionally be followed by ``:`` or ``=``.
"""

from __future__ import annotations

import re
from array import array
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

from . import kernels
from .errors import InvalidMap, NotConnected, NotInvolution, NotPlanar


class CombinatorialMap:
    """A rooted planar map given by ``(alpha, sigma, root)``.

    Construction validates the data; see :func:`validate` for the checks.
    Instances are immutable and hashable by their rooted isomorphism class.
    """

    def __init__(self, alpha: Sequence[int], sigma: Sequence[int], root: int | None):
        self.alpha = tuple(int(x) for x in alpha)
        self.sigma = tuple(int(x) for x in sigma)
        self.root = None if root is None else int(root)
        _check(self)

    @classmethod
    def empty(cls) -> "CombinatorialMap":
        """The vertex map: one vertex, no edges."""
        return cls((), (), None)

    @classmethod
    def from_rotations(cls, rotations: Iterable[Sequence[int]], root: int = 0) -> "CombinatorialMap":
        """Build a map from vertex rotations over the standard edge pairing.

        Edge ``e`` has half-edges ``2e`` and ``2e + 1``; each entry of
        ``rotations`` lists the half-edges at one vertex in rotation order.
        """
        cycles = [list(c) for c in rotations]
        n = sum(len(c) for c in cycles)
        sigma = [-1] * n
        for cyc in cycles:
            for i, h in enumerate(cyc):
                if not 0 <= h < n or sigma[h] != -1:
                    raise InvalidMap(f"half-edge {h} listed twice or out of range")
                sigma[h] = cyc[(i + 1) % len(cyc)]
        alpha = [h ^ 1 for h in range(n)]
        return cls(alpha, sigma, root)

    # basic counts

    @property
    def half_edge_count(self) -> int:
        return len(self.sigma)

    @property
    def edge_count(self) -> int:
        return len(self.sigma) // 2

    @property
    def is_empty(self) -> bool:
        return not self.sigma

    def phi(self, h: int) -> int:
        """Face successor of ``h``."""
        return self.sigma[self.alpha[h]]

    @cached_property
    def _vertex_data(self):
        return kernels.orbit_labels(self.sigma)

    @cached_property
    def _face_data(self):
        return kernels.face_labels(self.sigma, self.alpha)

    @property
    def vertex_count(self) -> int:
        if self.is_empty:
            return 1
        return self._vertex_data[1]

    @property
    def face_count(self) -> int:
        if self.is_empty:
            return 1
        return self._face_data[1]

    def vertex_of(self, h: int) -> int:
        return self._vertex_data[0][h]

    def face_of(self, h: int) -> int:
        return self._face_data[0][h]

    def faces(self) -> list[tuple[int, ...]]:
        return faces(self)

    def edges(self) -> list[tuple[int, int]]:
        return [(h, self.alpha[h]) for h in range(len(self.sigma)) if h < self.alpha[h]]

    def rerooted(self, h: int) -> "CombinatorialMap":
        return CombinatorialMap(self.alpha, self.sigma, h)

    def relabeled(self, perm: Sequence[int]) -> "CombinatorialMap":
        """Rename half-edge ``h`` to ``perm[h]``."""
        n = len(perm)
        alpha = [0] * n
        sigma = [0] * n
        for h in range(n):
            alpha[perm[h]] = perm[self.alpha[h]]
            sigma[perm[h]] = perm[self.sigma[h]]
        root = None if self.root is None else perm[self.root]
        return CombinatorialMap(alpha, sigma, root)

    @cached_property
    def code(self) -> bytes:
        return canonical_code(self)

    def canonical(self) -> "CombinatorialMap":
        """Relabel half-edges in breadth-first order from the root."""
        return from_code(self.code)

    def __eq__(self, other) -> bool:
        if isinstance(other, CombinatorialMap):
            return self.code == other.code
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.code)

    def __repr__(self) -> str:
        if self.is_empty:
            return "CombinatorialMap.empty()"
        return f"CombinatorialMap(alpha={list(self.alpha)}, sigma={list(self.sigma)}, root={self.root})"


def _check(m: CombinatorialMap) -> None:
    n = len(m.sigma)
    if len(m.alpha) != n:
        raise InvalidMap(f"alpha has {len(m.alpha)} entries but sigma has {n}")
    if n == 0:
        if m.root is not None:
            raise InvalidMap("the empty map has no root half-edge")
        return
    if n % 2:
        raise NotInvolution(f"odd number of half-edges ({n})")
    if m.root is None or not 0 <= m.root < n:
        raise InvalidMap(f"root {m.root} is not a half-edge index in 0..{n - 1}")
    for h, a in enumerate(m.alpha):
        if not 0 <= a < n or a == h or m.alpha[a] != h:
            raise NotInvolution(f"alpha is not a fixed-point-free involution at half-edge {h}")
    if sorted(m.sigma) != list(range(n)):
        raise InvalidMap("sigma is not a permutation of the half-edges")
    if not kernels.is_connected(m.sigma, m.alpha):
        raise NotConnected("alpha and sigma do not act transitively on half-edges")
    v = kernels.orbit_labels(m.sigma)[1]
    f = kernels.face_labels(m.sigma, m.alpha)[1]
    e = n // 2
    if v - e + f != 2:
        genus = (2 - (v - e + f)) // 2
        raise NotPlanar(f"Euler characteristic V-E+F = {v - e + f} (genus {genus}), expected 2")


def validate(alpha: Sequence[int], sigma: Sequence[int], root: int | None) -> CombinatorialMap:
    """Check involution, connectivity and genus 0; return the map.

    Raises :class:`NotInvolution`, :class:`NotConnected` or
    :class:`NotPlanar` (all subclasses of :class:`InvalidMap`).
    """
    return CombinatorialMap(alpha, sigma, root)


def faces(m: CombinatorialMap) -> list[tuple[int, ...]]:
    """Face cycles, root face first; the valency of a face is its length."""
    if m.is_empty:
        return []
    out = []
    seen = set()
    starts = [m.root] + [h for h in range(m.half_edge_count) if h != m.root]
    for s in starts:
        if s in seen:
            continue
        cyc = []
        h = s
        while h not in seen:
            seen.add(h)
            cyc.append(h)
            h = m.phi(h)
        out.append(tuple(cyc))
    return out


def canonical_code(m: CombinatorialMap, root: int | None = None) -> bytes:
    """Breadth-first canonical code of ``m`` rooted at ``root`` (default: its root).

    Two rooted maps are isomorphic exactly when their codes are equal.
    """
    if m.is_empty:
        return b""
    r = m.root if root is None else root
    return array("i", kernels.canonical_code(m.sigma, m.alpha, r)).tobytes()


def code_tuple(m: CombinatorialMap, root: int | None = None) -> tuple[int, ...]:
    if m.is_empty:
        return ()
    r = m.root if root is None else root
    return tuple(kernels.canonical_code(m.sigma, m.alpha, r))


def from_code(code: bytes | Sequence[int]) -> CombinatorialMap:
    """Inverse of :func:`canonical_code`: the map in breadth-first labelling, rooted at 0."""
    if isinstance(code, (bytes, bytearray)):
        code = array("i", bytes(code)).tolist()
    if not code:
        return CombinatorialMap.empty()
    sigma = list(code[0::2])
    alpha = list(code[1::2])
    return CombinatorialMap(alpha, sigma, 0)


def rotational_iso_count(m: CombinatorialMap) -> int:
    """Number of reroots within the root face that give a map isomorphic to ``m``.

    The candidate roots are the half-edges whose left face is the root
    face; the identity reroot is among them, so the result is at least 1.
    """
    if m.is_empty:
        raise InvalidMap("the empty map has no root face")
    target = code_tuple(m)
    rf = m.face_of(m.root)
    return sum(
        1
        for h in range(m.half_edge_count)
        if m.face_of(h) == rf and kernels.canonical_code(m.sigma, m.alpha, h) == target
    )


@dataclass(frozen=True)
class PatternDescriptor:
    """Statistics of a pattern map consumed by the generating-function formulas.

    ``ell``: root-face valency.  ``inner_edges``: edges not incident to the
    root face.  ``outer_edges``: bridges incident to the root face.
    ``inner_valencies``: sorted valencies of the inner faces, whose sum is
    ``inner_valency_sum``.  ``rotational_count``: :func:`rotational_iso_count`.
    """

    ell: int
    inner_edges: int
    outer_edges: int
    inner_valency_sum: int
    inner_valencies: tuple[int, ...]
    rotational_count: int

    def __post_init__(self):
        if sum(self.inner_valencies) != self.inner_valency_sum:
            raise ValueError("inner_valency_sum must equal the sum of inner_valencies")
        if self.rotational_count < 1:
            raise ValueError("rotational_count must be at least 1")
        if self.ell < 1 or self.inner_edges < 0 or self.outer_edges < 0:
            raise ValueError("invalid descriptor counts")
        object.__setattr__(self, "inner_valencies", tuple(sorted(self.inner_valencies)))

    @property
    def k(self) -> int:
        return self.inner_edges

    @property
    def s(self) -> int:
        return self.outer_edges

    @property
    def edge_count(self) -> int:
        return (self.ell + self.inner_valency_sum) // 2


def descriptor(m: CombinatorialMap) -> PatternDescriptor:
    if m.is_empty:
        raise InvalidMap("the empty map is not a pattern")
    fl = faces(m)
    root_face = set(fl[0])
    on_root = 0
    bridges_on_root = 0
    for h, a in m.edges():
        hin, ain = h in root_face, a in root_face
        if hin or ain:
            on_root += 1
        if hin and ain:
            bridges_on_root += 1
    inner = tuple(sorted(len(f) for f in fl[1:]))
    return PatternDescriptor(
        ell=len(fl[0]),
        inner_edges=m.edge_count - on_root,
        outer_edges=bridges_on_root,
        inner_valency_sum=sum(inner),
        inner_valencies=inner,
        rotational_count=rotational_iso_count(m),
    )


def is_pure_polygon(m: CombinatorialMap, face: Sequence[int]) -> bool:
    """A face is a pure polygon when its edges and its vertices are all distinct."""
    edges = {min(h, m.alpha[h]) for h in face}
    verts = {m.vertex_of(h) for h in face}
    return len(edges) == len(face) and len(verts) == len(face)


# --- map files ---------------------------------------------------------------

_KEYS = ("E", "alpha", "sigma", "root")


def parse_map(text: str) -> CombinatorialMap:
    """Parse the map file format described in the module docstring."""
    lines = [ln.split("#", 1)[0] for ln in text.splitlines()]
    tokens = re.split(r"[\s:=,]+", " ".join(lines).strip())
    fields: dict[str, list[int]] = {}
    key = None
    for tok in tokens:
        if not tok:
            continue
        if tok in _KEYS:
            if tok in fields:
                raise InvalidMap(f"field {tok!r} given twice")
            key = tok
            fields[key] = []
            continue
        if key is None:
            raise InvalidMap(f"value {tok!r} before any field name")
        try:
            fields[key].append(int(tok))
        except ValueError:
            raise InvalidMap(f"unexpected token {tok!r} in field {key!r}") from None
    for k in ("E", "alpha", "sigma"):
        if k not in fields:
            raise InvalidMap(f"missing field {k!r}")
    if len(fields["E"]) != 1:
        raise InvalidMap("field 'E' takes exactly one integer")
    e = fields["E"][0]
    if e < 0:
        raise InvalidMap("E must be non-negative")
    for k in ("alpha", "sigma"):
        if len(fields[k]) != 2 * e:
            raise InvalidMap(f"field {k!r} has {len(fields[k])} entries, expected {2 * e}")
    if e == 0:
        if fields.get("root"):
            raise InvalidMap("the empty map has no root")
        return CombinatorialMap.empty()
    if "root" not in fields or len(fields["root"]) != 1:
        raise InvalidMap("field 'root' takes exactly one integer")
    return CombinatorialMap(fields["alpha"], fields["sigma"], fields["root"][0])


def format_map(m: CombinatorialMap) -> str:
    out = [f"E     {m.edge_count}", "alpha " + " ".join(map(str, m.alpha)),
           "sigma " + " ".join(map(str, m.sigma))]
    if m.root is not None:
        out.append(f"root  {m.root}")
    return "\n".join(out) + "\n"


def load_map(path: str | Path) -> CombinatorialMap:
    return parse_map(Path(path).read_text())


def save_map(m: CombinatorialMap, path: str | Path) -> None:
    Path(path).write_text(format_map(m))


# --- small named maps --------------------------------------------------------

def loop_map() -> CombinatorialMap:
    return CombinatorialMap.from_rotations([[0, 1]])


def bridge_map() -> CombinatorialMap:
    return CombinatorialMap.from_rotations([[0], [1]])


def cycle_map(ell: int) -> CombinatorialMap:
    """The simple ``ell``-cycle (``ell >= 2``) rooted on one of its faces.

    Edge ``i`` joins vertex ``i`` to vertex ``i+1``; half-edge ``2i`` leaves
    vertex ``i``.
    """
    if ell < 2:
        raise ValueError("a simple cycle needs at least two edges")
    rot = [[2 * i, 2 * ((i - 1) % ell) + 1] for i in range(ell)]
    return CombinatorialMap.from_rotations(rot, root=0)


def quad_with_diagonal() -> CombinatorialMap:
    """Quadrilateral ABCD with diagonal AC, rooted at A->B, root face ABCD.

    Edges: AB=0, BC=1, CD=2, DA=3, AC=4.
    """
    return CombinatorialMap.from_rotations([[0, 8, 7], [2, 1], [4, 9, 3], [6, 5]], root=0)


def hexagon_chord_pendant() -> CombinatorialMap:
    """Hexagon with one chord inside and a pendant edge outside.

    Root-face valency 8, one inner edge (the chord), one outer edge (the
    pendant bridge), two inner quadrilaterals.
    """
    # hexagon vertices 0..5 counterclockwise, edge i: i -> i+1 (half-edges 2i, 2i+1),
    # chord 6: vertex 0 -> vertex 3 (12, 13), pendant 7: vertex 0 -> new vertex 6 (14, 15)
    rot = [
        [0, 12, 11, 14],
        [2, 1],
        [4, 3],
        [6, 13, 5],
        [8, 7],
        [10, 9],
        [15],
    ]
    return CombinatorialMap.from_rotations(rot, root=0)


def triangle_with_chord() -> CombinatorialMap:
    """Triangle with a second edge parallel to one side, drawn inside.

    Inner faces: a digon and a triangle.
    """
    # triangle A->B (0,1), B->C (2,3), C->A (4,5); parallel edge A->B (6,7) inside
    return CombinatorialMap.from_rotations([[0, 6, 5], [2, 7, 1], [4, 3]], root=0)


def triangle_with_pendant() -> CombinatorialMap:
    """Triangle with a pendant edge attached on its outer side."""
    return CombinatorialMap.from_rotations([[0, 5, 6], [2, 1], [4, 3], [7]], root=0)


def digon_map() -> CombinatorialMap:
    """Two parallel edges (the doubled edge)."""
    return cycle_map(2)


def face_valency_histogram(m: CombinatorialMap) -> Counter:
    return Counter(len(f) for f in faces(m))
