# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernel; semantics identical to ``toruscert._kernel_py``.

The backtracking matcher, leaf filters and canonical labelling run on plain C
arrays; Python objects only appear when a surviving leaf is bucketed into the
result dict.  Graphs are capped at 64 darts, far above the desk-scale sizes
this engine targets.
"""

BACKEND = "compiled"

DEF MAXN = 64


def standard_rotation(degrees):
    """Return ``(vert, rho, rho_inv)`` arrays for the standard rotation."""
    n = sum(degrees)
    vert = [0] * n
    rho = [0] * n
    rho_inv = [0] * n
    base = 0
    for vi, d in enumerate(degrees):
        for i in range(d):
            vert[base + i] = vi
            rho[base + i] = base + (i + 1) % d
            rho_inv[base + (i + 1) % d] = base + i
        base += d
    return vert, rho, rho_inv


cdef int _canonical(int n, int* rho, int* rho_inv, int* M,
                    unsigned char* best) noexcept nogil:
    """Write the 2n-byte canonical code of a connected graph into ``best``.

    Returns 0 on success, -1 if the traversal does not reach every dart.
    """
    cdef int lab[MAXN]
    cdef int order[MAXN]
    cdef unsigned char cand[2 * MAXN]
    cdef int* r
    cdef int ori, start, i, d, cur, m, filled, k, cmp_res
    cdef bint have_best = False
    for ori in range(2):
        r = rho if ori == 0 else rho_inv
        for start in range(n):
            for i in range(n):
                lab[i] = -1
            lab[start] = 0
            order[0] = start
            filled = 1
            i = 0
            while i < filled:
                d = order[i]
                cur = r[d]
                while cur != d:
                    if lab[cur] < 0:
                        lab[cur] = filled
                        order[filled] = cur
                        filled += 1
                    cur = r[cur]
                m = M[d]
                if lab[m] < 0:
                    lab[m] = filled
                    order[filled] = m
                    filled += 1
                i += 1
            if filled != n:
                return -1
            for i in range(n):
                cand[i] = <unsigned char> lab[M[order[i]]]
                cand[n + i] = <unsigned char> lab[r[order[i]]]
            if not have_best:
                for k in range(2 * n):
                    best[k] = cand[k]
                have_best = True
            else:
                cmp_res = 0
                for k in range(2 * n):
                    if cand[k] != best[k]:
                        cmp_res = 1 if cand[k] < best[k] else -1
                        break
                if cmp_res == 1:
                    for k in range(2 * n):
                        best[k] = cand[k]
    return 0


def canonical_code(degrees, matching):
    """Canonical key of a connected fat graph, as bytes."""
    cdef int n = sum(degrees)
    if n > MAXN:
        raise ValueError("graph too large for compiled kernel")
    vert, rho_l, rho_inv_l = standard_rotation(degrees)
    cdef int rho[MAXN]
    cdef int rho_inv[MAXN]
    cdef int M[MAXN]
    cdef int i
    for i in range(n):
        rho[i] = rho_l[i]
        rho_inv[i] = rho_inv_l[i]
        M[i] = matching[i]
    cdef unsigned char buf[2 * MAXN]
    if _canonical(n, rho, rho_inv, M, buf) < 0:
        raise ValueError("canonical_code requires a connected graph")
    return bytes(buf[:2 * n])


def search_matchings(
    degrees,
    triangles_only=False,
    min_face=3,
    require_torus=True,
    require_connected=True,
    first_partner=-1,
):
    """Enumerate dart matchings under face constraints; bucket by canonical key.

    See ``toruscert._kernel_py.search_matchings`` for the full contract; the
    two implementations return identical dicts.
    """
    if not require_connected:
        raise ValueError("canonical bucketing requires connected graphs")
    degrees = tuple(degrees)
    cdef int n = sum(degrees)
    if n == 0 or n % 2:
        raise ValueError("total degree must be positive and even")
    if any(d < 1 for d in degrees):
        raise ValueError("vertex degrees must be >= 1")
    if n > MAXN:
        raise ValueError("graph too large for compiled kernel")
    if first_partner >= n:
        raise ValueError("first_partner out of range")

    vert_l, rho_l, rho_inv_l = standard_rotation(degrees)
    cdef int vert[MAXN]
    cdef int rho[MAXN]
    cdef int rho_inv[MAXN]
    cdef int M[MAXN]
    cdef int i
    for i in range(n):
        vert[i] = vert_l[i]
        rho[i] = rho_l[i]
        rho_inv[i] = rho_inv_l[i]
        M[i] = -1

    cdef bint c_tri = bool(triangles_only)
    cdef bint c_torus = bool(require_torus)
    cdef int c_minface = min_face
    cdef int c_first = first_partner
    cdef int nv = len(degrees)
    cdef int ne = n // 2
    cdef int need_faces = ne - nv
    cdef int mf = 3 if c_tri else c_minface

    # explicit DFS stack over placed pairs, with closure accounting
    cdef int sa[MAXN]
    cdef int sb[MAXN]
    cdef int sfaces[MAXN]
    cdef int sdarts[MAXN]
    cdef int depth = 0
    cdef int closed_faces = 0
    cdef int closed_darts = 0
    cdef int a, b, m, cur, bwd, p, ok
    cdef int cf_new, cd_new, saw_b, closed_a, closed_b, len_a, len_b
    cdef int faces_new, darts_new
    cdef int d0, d, count, v, w
    cdef bint seen[MAXN]
    cdef unsigned long long adj[MAXN]
    cdef unsigned long long reached, rest
    cdef int vstack[MAXN]
    cdef int vtop
    cdef unsigned char codebuf[2 * MAXN]

    out = {}

    a = 0
    b = a  # next candidate is b+1
    if c_first >= 0:
        b = c_first - 1 if c_first > 0 else n

    while True:
        b += 1
        while b < n and M[b] >= 0:
            b += 1
        if b >= n:
            if depth == 0:
                break
            depth -= 1
            a = sa[depth]
            b = sb[depth]
            closed_faces -= sfaces[depth]
            closed_darts -= sdarts[depth]
            M[a] = -1
            M[b] = -1
            if depth == 0 and c_first >= 0:
                break
            continue
        M[a] = b
        M[b] = a
        # face checks on the two new arcs, with closure accounting
        ok = 1
        faces_new = 0
        darts_new = 0
        # walk from a
        len_a = 0
        cur = a
        closed_a = 0
        saw_b = 0
        while True:
            m = M[cur]
            if m < 0:
                break
            cur = rho[m]
            len_a += 1
            if cur == b:
                saw_b = 1
            if cur == a:
                closed_a = 1
                break
        if closed_a:
            if c_tri:
                if len_a != 3:
                    ok = 0
            elif len_a < c_minface:
                ok = 0
            if ok:
                faces_new += 1
                darts_new += len_a
        elif c_tri:
            bwd = 0
            cur = a
            while True:
                p = rho_inv[cur]
                if M[p] < 0:
                    break
                cur = M[p]
                bwd += 1
            if len_a + bwd + 1 > 3:
                ok = 0
        if ok and not (closed_a and saw_b):
            # walk from b (separate face unless one cycle holds both arcs)
            len_b = 0
            cur = b
            closed_b = 0
            while True:
                m = M[cur]
                if m < 0:
                    break
                cur = rho[m]
                len_b += 1
                if cur == b:
                    closed_b = 1
                    break
            if closed_b:
                if c_tri:
                    if len_b != 3:
                        ok = 0
                elif len_b < c_minface:
                    ok = 0
                if ok:
                    faces_new += 1
                    darts_new += len_b
            elif c_tri:
                bwd = 0
                cur = b
                while True:
                    p = rho_inv[cur]
                    if M[p] < 0:
                        break
                    cur = M[p]
                    bwd += 1
                if len_b + bwd + 1 > 3:
                    ok = 0
        if ok and c_torus:
            cf_new = closed_faces + faces_new
            cd_new = closed_darts + darts_new
            if cf_new > need_faces or cf_new + (n - cd_new) // mf < need_faces:
                ok = 0
        if not ok:
            M[a] = -1
            M[b] = -1
            if depth == 0 and c_first >= 0:
                break
            continue
        sa[depth] = a
        sb[depth] = b
        sfaces[depth] = faces_new
        sdarts[depth] = darts_new
        closed_faces += faces_new
        closed_darts += darts_new
        depth += 1
        if depth == ne:
            ok = 1
            if c_torus and closed_faces != need_faces:
                ok = 0
            if ok and nv > 1:
                for v in range(nv):
                    adj[v] = 0
                for i in range(n):
                    adj[vert[i]] |= (<unsigned long long> 1) << vert[M[i]]
                reached = 1
                count = 1
                vstack[0] = 0
                vtop = 1
                while vtop > 0:
                    vtop -= 1
                    v = vstack[vtop]
                    rest = adj[v] & ~reached
                    while rest:
                        w = 0
                        while not (rest & ((<unsigned long long> 1) << w)):
                            w += 1
                        reached |= (<unsigned long long> 1) << w
                        rest &= rest - 1
                        count += 1
                        vstack[vtop] = w
                        vtop += 1
                if count != nv:
                    ok = 0
            if ok:
                if _canonical(n, rho, rho_inv, M, codebuf) == 0:
                    key = bytes(codebuf[:2 * n])
                    cand = tuple(M[i] for i in range(n))
                    prev = out.get(key)
                    if prev is None or cand < prev:
                        out[key] = cand
            depth -= 1
            a = sa[depth]
            b = sb[depth]
            closed_faces -= sfaces[depth]
            closed_darts -= sdarts[depth]
            M[a] = -1
            M[b] = -1
            if depth == 0 and c_first >= 0:
                break
            continue
        a = 0
        while M[a] >= 0:
            a += 1
        b = a
    return out
