"""Pure-Python search kernel.

This module is the reference implementation of the hot enumeration loop: it
defines the exact semantics that the compiled twin (``_kernel.pyx``) must
reproduce bit for bit.  The compiled kernel is selected at import time when
available; see :mod:`toruscert.kernel`.

Representation
--------------

A fat graph with ``V`` vertices of degrees ``d_0, ..., d_{V-1}`` is encoded on
``n = sum(d_i)`` darts.  Darts are numbered consecutively vertex by vertex and
the rotation at every vertex is the *standard* one: dart ``k`` is followed by
the next dart of the same vertex, cyclically.  Every isomorphism class of fat
graphs with this degree sequence contains such a standard representative, so
enumerating perfect matchings of the darts (the edge pairing) covers all
classes.  Faces are the orbits of ``phi(d) = rho[M[d]]`` where ``rho`` is the
standard rotation and ``M`` the matching; the face size is the number of darts
in the orbit.

Pruning
-------

Placing a pair ``(a, b)`` creates the face arcs ``a -> rho[b]`` and ``b ->
rho[a]``; any face cycle closed by the placement passes through ``a`` or
``b`` and is checked against the face-size constraint on the spot.  In
triangle mode, open face paths longer than three darts are dead.  When a
torus is required, the final face count must be exactly ``E - V``, so a
branch dies as soon as the closed-face count exceeds that, or the remaining
darts cannot supply enough faces of the minimum size.
"""

BACKEND = "pure"


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


def canonical_code(degrees, matching):
    """Canonical key of a connected fat graph, as bytes.

    The key is the lexicographic minimum, over all start darts and both
    orientations, of the traversal code ``(relabelled matching, relabelled
    rotation)``.  Two standard-rotation matchings receive equal keys exactly
    when the fat graphs are related by a relabelling of darts preserving the
    rotation system, i.e. by vertex relabelling, rotation of the cyclic
    orders, or a global reflection.
    """
    n = sum(degrees)
    _, rho, rho_inv = standard_rotation(degrees)
    M = matching
    best = None
    lab = [0] * n
    order = [0] * n
    for r in (rho, rho_inv):
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
                raise ValueError("canonical_code requires a connected graph")
            code = bytes(lab[M[order[i]]] for i in range(n)) + bytes(
                lab[r[order[i]]] for i in range(n)
            )
            if best is None or code < best:
                best = code
    return best


def search_matchings(
    degrees,
    triangles_only=False,
    min_face=3,
    require_torus=True,
    require_connected=True,
    first_partner=-1,
):
    """Enumerate dart matchings under face constraints; bucket by canonical key.

    Returns a dict mapping canonical code (bytes) to the lexicographically
    smallest surviving matching (tuple of ints) in that class.

    ``triangles_only`` restricts to matchings all of whose faces are
    triangles; otherwise every closed face must have at least ``min_face``
    sides.  ``require_torus`` keeps only Euler characteristic 0 leaves.
    Disconnected graphs have no canonical key, so ``require_connected`` must
    stay on.  ``first_partner >= 0`` forces the partner of dart 0, which
    partitions the search space for parallel workers; the union of the
    results over all legal first partners equals the unrestricted result.
    """
    if not require_connected:
        raise ValueError("canonical bucketing requires connected graphs")
    degrees = tuple(degrees)
    n = sum(degrees)
    if n == 0 or n % 2:
        raise ValueError("total degree must be positive and even")
    if any(d < 1 for d in degrees):
        raise ValueError("vertex degrees must be >= 1")
    if first_partner >= n:
        raise ValueError("first_partner out of range")
    vert, rho, rho_inv = standard_rotation(degrees)
    nv = len(degrees)
    ne = n // 2
    need_faces = ne - nv  # target count on a torus
    mf = 3 if triangles_only else min_face
    M = [-1] * n
    out = {}

    def walk(start, other):
        """Follow face arcs from ``start``: (closed, length, saw_other)."""
        cnt = 0
        cur = start
        saw = False
        while True:
            m = M[cur]
            if m < 0:
                return False, cnt, saw
            cur = rho[m]
            cnt += 1
            if cur == other:
                saw = True
            if cur == start:
                return True, cnt, saw

    def closures_ok(a, b):
        """Face checks for a fresh pair; returns (ok, faces, darts) closed."""
        closed_a, len_a, saw_b = walk(a, b)
        faces = 0
        darts = 0
        if closed_a:
            bad = (len_a != 3) if triangles_only else (len_a < min_face)
            if bad:
                return False, 0, 0
            faces += 1
            darts += len_a
        elif triangles_only:
            bwd = 0
            cur = a
            while True:
                p = rho_inv[cur]
                if M[p] < 0:
                    break
                cur = M[p]
                bwd += 1
            if len_a + bwd + 1 > 3:
                return False, 0, 0
        if closed_a and saw_b:
            return True, faces, darts  # one cycle through both new arcs
        closed_b, len_b, _ = walk(b, a)
        if closed_b:
            bad = (len_b != 3) if triangles_only else (len_b < min_face)
            if bad:
                return False, 0, 0
            faces += 1
            darts += len_b
        elif triangles_only:
            bwd = 0
            cur = b
            while True:
                p = rho_inv[cur]
                if M[p] < 0:
                    break
                cur = M[p]
                bwd += 1
            if len_b + bwd + 1 > 3:
                return False, 0, 0
        return True, faces, darts

    def leaf():
        if require_connected and nv > 1:
            reached = 1
            stack = [0]
            count = 1
            adj = [0] * nv
            for d in range(n):
                adj[vert[d]] |= 1 << vert[M[d]]
            while stack:
                v = stack.pop()
                rest = adj[v] & ~reached
                while rest:
                    w = (rest & -rest).bit_length() - 1
                    reached |= 1 << w
                    rest &= rest - 1
                    count += 1
                    stack.append(w)
            if count != nv:
                return
        key = canonical_code(degrees, M)
        cand = tuple(M)
        prev = out.get(key)
        if prev is None or cand < prev:
            out[key] = cand

    def rec(lowest, closed_faces, closed_darts):
        a = lowest
        while a < n and M[a] >= 0:
            a += 1
        if a == n:
            if not require_torus or closed_faces == need_faces:
                leaf()
            return
        if a == 0 and first_partner >= 0:
            candidates = (first_partner,) if first_partner > 0 else ()
        else:
            candidates = range(a + 1, n)
        for b in candidates:
            if M[b] >= 0:
                continue
            M[a] = b
            M[b] = a
            ok, faces, darts = closures_ok(a, b)
            if ok and require_torus:
                cf = closed_faces + faces
                cd = closed_darts + darts
                if cf > need_faces or cf + (n - cd) // mf < need_faces:
                    ok = False
            if ok:
                rec(a + 1, closed_faces + faces, closed_darts + darts)
            M[a] = -1
            M[b] = -1

    rec(0, 0, 0)
    return out
