# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled combinatorial-map kernels.

Same interface and semantics as :mod:`planocc._kernels_py`; see there for
the documentation of each function.
"""

from libc.stdlib cimport malloc, free

MODE_PATTERN = 0
MODE_SUBMAP = 1
MODE_AT_ROOT = 2

BACKEND = "cython"


cdef int* _to_c(seq, Py_ssize_t n) except NULL:
    cdef int* out = <int*>malloc((n + 1) * sizeof(int))
    if out == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = seq[i]
    return out


def orbit_labels(perm):
    cdef Py_ssize_t n = len(perm)
    cdef int* p = _to_c(perm, n)
    cdef int* lab = <int*>malloc((n + 1) * sizeof(int))
    cdef Py_ssize_t start
    cdef int h, count = 0
    try:
        for start in range(n):
            lab[start] = -1
        for start in range(n):
            if lab[start] < 0:
                h = <int>start
                while lab[h] < 0:
                    lab[h] = count
                    h = p[h]
                count += 1
        return [lab[start] for start in range(n)], count
    finally:
        free(p)
        free(lab)


cdef int _faces(int* sigma, int* alpha, int n, int* lab) noexcept nogil:
    cdef int start, h, count = 0
    for start in range(n):
        lab[start] = -1
    for start in range(n):
        if lab[start] < 0:
            h = start
            while lab[h] < 0:
                lab[h] = count
                h = sigma[alpha[h]]
            count += 1
    return count


def face_labels(sigma, alpha):
    cdef Py_ssize_t n = len(sigma)
    cdef int* s = _to_c(sigma, n)
    cdef int* a = _to_c(alpha, n)
    cdef int* lab = <int*>malloc((n + 1) * sizeof(int))
    cdef int count
    cdef Py_ssize_t i
    try:
        count = _faces(s, a, <int>n, lab)
        return [lab[i] for i in range(n)], count
    finally:
        free(s)
        free(a)
        free(lab)


def is_connected(sigma, alpha):
    cdef Py_ssize_t n = len(sigma)
    if n == 0:
        return True
    cdef int* s = _to_c(sigma, n)
    cdef int* a = _to_c(alpha, n)
    cdef int* seen = <int*>malloc(n * sizeof(int))
    cdef int* stack = <int*>malloc(n * sizeof(int))
    cdef int top = 0, reached = 1, h, x, k
    cdef Py_ssize_t i
    try:
        for i in range(n):
            seen[i] = 0
        seen[0] = 1
        stack[top] = 0
        top += 1
        while top > 0:
            top -= 1
            h = stack[top]
            for k in range(2):
                x = s[h] if k == 0 else a[h]
                if not seen[x]:
                    seen[x] = 1
                    reached += 1
                    stack[top] = x
                    top += 1
        return reached == n
    finally:
        free(s)
        free(a)
        free(seen)
        free(stack)


cdef int _code(int* sigma, int* alpha, int n, int root, int* label, int* order,
               int* code) noexcept nogil:
    """Write the canonical code into ``code``; return the number of visited darts."""
    cdef int i, h, x, k, m = 1
    for i in range(n):
        label[i] = -1
    label[root] = 0
    order[0] = root
    i = 0
    while i < m:
        h = order[i]
        i += 1
        for k in range(2):
            x = sigma[h] if k == 0 else alpha[h]
            if label[x] < 0:
                label[x] = m
                order[m] = x
                m += 1
    for i in range(m):
        h = order[i]
        code[2 * i] = label[sigma[h]]
        code[2 * i + 1] = label[alpha[h]]
    return m


def canonical_code(sigma, alpha, int root):
    cdef Py_ssize_t n = len(sigma)
    cdef int* s = _to_c(sigma, n)
    cdef int* a = _to_c(alpha, n)
    cdef int* label = <int*>malloc((n + 1) * sizeof(int))
    cdef int* order = <int*>malloc((n + 1) * sizeof(int))
    cdef int* code = <int*>malloc((2 * n + 2) * sizeof(int))
    cdef int m, i
    try:
        m = _code(s, a, <int>n, root, label, order, code)
        return tuple([code[i] for i in range(2 * m)])
    finally:
        free(s)
        free(a)
        free(label)
        free(order)
        free(code)


def all_root_codes(sigma, alpha):
    cdef Py_ssize_t n = len(sigma)
    cdef int* s = _to_c(sigma, n)
    cdef int* a = _to_c(alpha, n)
    cdef int* label = <int*>malloc((n + 1) * sizeof(int))
    cdef int* order = <int*>malloc((n + 1) * sizeof(int))
    cdef int* code = <int*>malloc((2 * n + 2) * sizeof(int))
    cdef int m, i, h
    out = []
    try:
        for h in range(n):
            m = _code(s, a, <int>n, h, label, order, code)
            out.append(tuple([code[i] for i in range(2 * m)]))
        return out
    finally:
        free(s)
        free(a)
        free(label)
        free(order)
        free(code)


cdef int _find(int* parent, int x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef int _scan(int* sigma, int* alpha, int n, int root, int p_edges, int* p_code,
               int p_code_len, int p_ell, int* p_val, int p_nfaces, int mode,
               int* work) noexcept nogil:
    # work layout: 15 blocks of (n + 2) ints
    cdef int stride = n + 2
    cdef int* edges = work
    cdef int* in_s = work + stride
    cdef int* sig_s = work + 2 * stride
    cdef int* mface = work + 3 * stride
    cdef int* sface = work + 4 * stride
    cdef int* flen = work + 5 * stride
    cdef int* fstart = work + 6 * stride
    cdef int* idx = work + 7 * stride
    cdef int* stack = work + 8 * stride
    cdef int* label = work + 9 * stride
    cdef int* order = work + 10 * stride
    cdef int* parent = work + 11 * stride
    cdef int* code = work + 12 * stride   # needs 2 * stride
    cdef int* cands = work + 14 * stride
    cdef int ne = 0, h, x, i, j, k, t, fi, fj, top, reached, nd, nf, rface, nmf
    cdef int root_edge, has_root, ok, matched, cand_count, total = 0, m, a_, b_

    for h in range(n):
        if h < alpha[h]:
            edges[ne] = h
            ne += 1
    if p_edges > ne or p_edges <= 0:
        return 0
    nmf = _faces(sigma, alpha, n, mface)
    rface = mface[root]
    root_edge = root if root < alpha[root] else alpha[root]

    for i in range(p_edges):
        idx[i] = i
    while True:
        # --- evaluate subset idx[0..p_edges) ---
        has_root = 0
        for h in range(n):
            in_s[h] = 0
        for i in range(p_edges):
            h = edges[idx[i]]
            in_s[h] = 1
            in_s[alpha[h]] = 1
            if h == root_edge:
                has_root = 1
        if mode == 2 and not has_root:
            pass
        else:
            nd = 2 * p_edges
            for h in range(n):
                if in_s[h]:
                    x = sigma[h]
                    while not in_s[x]:
                        x = sigma[x]
                    sig_s[h] = x
            # connectivity
            h = edges[idx[0]]
            for i in range(n):
                label[i] = 0
            label[h] = 1
            top = 0
            stack[top] = h
            top += 1
            reached = 1
            while top > 0:
                top -= 1
                h = stack[top]
                for k in range(2):
                    x = sig_s[h] if k == 0 else alpha[h]
                    if not label[x]:
                        label[x] = 1
                        reached += 1
                        stack[top] = x
                        top += 1
            if reached == nd:
                # faces of the sub-map
                for h in range(n):
                    sface[h] = -1
                nf = 0
                for h in range(n):
                    if in_s[h] and sface[h] < 0:
                        fstart[nf] = h
                        t = 0
                        x = h
                        while sface[x] < 0:
                            sface[x] = nf
                            t += 1
                            x = sig_s[alpha[x]]
                        flen[nf] = t
                        nf += 1
                ok = nf == p_nfaces
                if ok:
                    # compare sorted valencies (insertion sort on a copy in parent)
                    for i in range(nf):
                        parent[i] = flen[i]
                    for i in range(1, nf):
                        t = parent[i]
                        j = i - 1
                        while j >= 0 and parent[j] > t:
                            parent[j + 1] = parent[j]
                            j -= 1
                        parent[j + 1] = t
                    for i in range(nf):
                        if parent[i] != p_val[i]:
                            ok = 0
                            break
                if ok:
                    cand_count = 0
                    if mode == 2:
                        m = _code(sig_s, alpha, n, root, label, order, code)
                        if 2 * m == p_code_len:
                            matched = 1
                            for i in range(p_code_len):
                                if code[i] != p_code[i]:
                                    matched = 0
                                    break
                            if matched:
                                cands[0] = sface[root]
                                cand_count = 1
                    else:
                        for fi in range(nf):
                            if flen[fi] != p_ell:
                                continue
                            x = fstart[fi]
                            for t in range(flen[fi]):
                                m = _code(sig_s, alpha, n, x, label, order, code)
                                matched = 2 * m == p_code_len
                                if matched:
                                    for i in range(p_code_len):
                                        if code[i] != p_code[i]:
                                            matched = 0
                                            break
                                if matched:
                                    cands[cand_count] = fi
                                    cand_count += 1
                                    break
                                x = sig_s[alpha[x]]
                    if cand_count > 0:
                        if mode == 1:
                            for i in range(nmf):
                                parent[i] = i
                            for i in range(ne):
                                h = edges[i]
                                if not in_s[h]:
                                    a_ = _find(parent, mface[h])
                                    b_ = _find(parent, mface[alpha[h]])
                                    if a_ != b_:
                                        parent[a_] = b_
                            t = _find(parent, rface)
                            for i in range(cand_count):
                                if _find(parent, mface[fstart[cands[i]]]) == t:
                                    total += 1
                        else:
                            for i in range(cand_count):
                                fi = cands[i]
                                ok = 1
                                for h in range(n):
                                    if in_s[h] and sface[h] != fi:
                                        if mface[h] == rface or sigma[alpha[h]] != sig_s[alpha[h]]:
                                            ok = 0
                                            break
                                if ok:
                                    total += 1
        # --- next combination ---
        i = p_edges - 1
        while i >= 0 and idx[i] == ne - p_edges + i:
            i -= 1
        if i < 0:
            break
        idx[i] += 1
        for j in range(i + 1, p_edges):
            idx[j] = idx[j - 1] + 1
    return total


def scan_occurrences(sigma, alpha, int root, int p_edges, p_code, int p_ell,
                     p_valencies, int mode):
    cdef Py_ssize_t n = len(sigma)
    cdef int* s = _to_c(sigma, n)
    cdef int* a = _to_c(alpha, n)
    cdef int* pc = _to_c(p_code, len(p_code))
    vals = sorted(p_valencies)
    cdef int* pv = _to_c(vals, len(vals))
    cdef int* work = <int*>malloc(15 * (n + 2) * sizeof(int))
    cdef int total
    if work == NULL:
        raise MemoryError()
    try:
        total = _scan(s, a, <int>n, root, p_edges, pc, <int>len(p_code), p_ell, pv,
                      <int>len(vals), mode, work)
        return total
    finally:
        free(s)
        free(a)
        free(pc)
        free(pv)
        free(work)
