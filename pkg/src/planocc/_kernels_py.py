"""Pure-Python combinatorial-map kernels.

Reference implementation of the functions compiled in ``_kernels.pyx``.
Both modules expose the same names with the same semantics; the package
picks one at import time (see :mod:`planocc.kernels`).

A map is given by two integer sequences ``sigma`` (vertex rotation) and
``alpha`` (edge involution) over half-edges ``0..2E-1``.  The face to the
left of ``h`` is the orbit of ``h`` under ``h -> sigma[alpha[h]]``.
"""

from itertools import combinations

MODE_PATTERN = 0
MODE_SUBMAP = 1
MODE_AT_ROOT = 2

BACKEND = "python"


def orbit_labels(perm):
    """Label the cycles of a permutation; returns ``(labels, count)``."""
    n = len(perm)
    labels = [-1] * n
    count = 0
    for start in range(n):
        if labels[start] < 0:
            h = start
            while labels[h] < 0:
                labels[h] = count
                h = perm[h]
            count += 1
    return labels, count


def face_labels(sigma, alpha):
    """Label faces (orbits of ``sigma o alpha``); returns ``(labels, count)``."""
    n = len(sigma)
    labels = [-1] * n
    count = 0
    for start in range(n):
        if labels[start] < 0:
            h = start
            while labels[h] < 0:
                labels[h] = count
                h = sigma[alpha[h]]
            count += 1
    return labels, count


def is_connected(sigma, alpha):
    n = len(sigma)
    if n == 0:
        return True
    seen = [False] * n
    seen[0] = True
    stack = [0]
    reached = 1
    while stack:
        h = stack.pop()
        for x in (sigma[h], alpha[h]):
            if not seen[x]:
                seen[x] = True
                reached += 1
                stack.append(x)
    return reached == n


def canonical_code(sigma, alpha, root):
    """Breadth-first relabelling from ``root``; flattened ``(sigma, alpha)`` pairs.

    Only half-edges reachable from ``root`` through ``sigma`` and ``alpha``
    are visited, so the function also encodes sub-maps embedded in a larger
    half-edge array.
    """
    label = {root: 0}
    order = [root]
    i = 0
    while i < len(order):
        h = order[i]
        i += 1
        s = sigma[h]
        if s not in label:
            label[s] = len(order)
            order.append(s)
        a = alpha[h]
        if a not in label:
            label[a] = len(order)
            order.append(a)
    code = []
    for h in order:
        code.append(label[sigma[h]])
        code.append(label[alpha[h]])
    return tuple(code)


def all_root_codes(sigma, alpha):
    """Canonical code of the map rerooted at every half-edge."""
    return [canonical_code(sigma, alpha, h) for h in range(len(sigma))]


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def scan_occurrences(sigma, alpha, root, p_edges, p_code, p_ell, p_valencies, mode):
    """Count occurrences of a pattern inside the rooted map ``(sigma, alpha, root)``.

    The pattern is described by its edge count, its canonical code, its
    root-face valency and the sorted tuple of all its face valencies.
    Every ``p_edges``-subset of edges is erased down to a sub-map; a copy is
    a pair (edge subset, distinguished face ``O`` of the sub-map) such that
    the sub-map rerooted at some half-edge of ``O`` has the pattern's code.

    ``MODE_PATTERN``: every other face of the copy must be a face of the
    host map and must not be its root face.
    ``MODE_SUBMAP``: the host's root face must lie in the region of ``O``.
    ``MODE_AT_ROOT``: the copy is rooted at the host root itself and obeys
    the pattern face condition.
    """
    n = len(sigma)
    edges = [h for h in range(n) if h < alpha[h]]
    mface, _ = face_labels(sigma, alpha)
    rface = mface[root]
    p_valencies = tuple(p_valencies)
    root_edge = min(root, alpha[root])
    total = 0
    in_s = [False] * n
    sig_s = [0] * n
    for subset in combinations(edges, p_edges):
        if mode == MODE_AT_ROOT and root_edge not in subset:
            continue
        for h in range(n):
            in_s[h] = False
        darts = []
        for e in subset:
            in_s[e] = True
            in_s[alpha[e]] = True
            darts.append(e)
            darts.append(alpha[e])
        for h in darts:
            x = sigma[h]
            while not in_s[x]:
                x = sigma[x]
            sig_s[h] = x
        # connectivity of the erased sub-map
        seen = {darts[0]}
        stack = [darts[0]]
        while stack:
            h = stack.pop()
            for x in (sig_s[h], alpha[h]):
                if x not in seen:
                    seen.add(x)
                    stack.append(x)
        if len(seen) != len(darts):
            continue
        # faces of the sub-map
        sface = {}
        faces = []
        for h in darts:
            if h not in sface:
                cyc = []
                x = h
                while x not in sface:
                    sface[x] = len(faces)
                    cyc.append(x)
                    x = sig_s[alpha[x]]
                faces.append(cyc)
        if tuple(sorted(len(c) for c in faces)) != p_valencies:
            continue
        if mode == MODE_AT_ROOT:
            candidates = [sface[root]] if canonical_code(sig_s, alpha, root) == p_code else []
        else:
            candidates = []
            for fi, cyc in enumerate(faces):
                if len(cyc) != p_ell:
                    continue
                for h in cyc:
                    if canonical_code(sig_s, alpha, h) == p_code:
                        candidates.append(fi)
                        break
        if not candidates:
            continue
        if mode == MODE_SUBMAP:
            parent = list(range(len(mface)))
            for e in edges:
                if not in_s[e]:
                    a, b = _find(parent, mface[e]), _find(parent, mface[alpha[e]])
                    if a != b:
                        parent[a] = b
            rreg = _find(parent, rface)
            for fi in candidates:
                if _find(parent, mface[faces[fi][0]]) == rreg:
                    total += 1
        else:
            for fi in candidates:
                ok = True
                for fj, cyc in enumerate(faces):
                    if fj == fi:
                        continue
                    for h in cyc:
                        if mface[h] == rface or sigma[alpha[h]] != sig_s[alpha[h]]:
                            ok = False
                            break
                    if not ok:
                        break
                if ok:
                    total += 1
    return total
