"""Canonical forms and isomorphisms of small square integer matrices.

Two matrices are equivalent when one is obtained from the other by a
simultaneous permutation of rows and columns that also preserves an
optional vertex colouring.  The canonical form uses colour refinement
followed by individualization, which is exact and fast for the sizes
met here (a dozen vertices or so).
"""

from collections import Counter


def _refine(M, colors):
    n = len(M)
    ranks = {c: i for i, c in enumerate(sorted(set(colors)))}
    colors = [ranks[c] for c in colors]
    while True:
        sigs = [
            (colors[v], tuple(sorted((colors[u], M[v][u], M[u][v]) for u in range(n) if u != v)))
            for v in range(n)
        ]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == len(set(colors)):
            return new
        colors = new


def _search(M, colors):
    colors = _refine(M, colors)
    n = len(M)
    if len(set(colors)) == n:
        perm = sorted(range(n), key=colors.__getitem__)
        return tuple(tuple(M[a][b] for b in perm) for a in perm), perm
    counts = Counter(colors)
    target = min(c for c, k in counts.items() if k > 1)
    best = None
    seen = set()
    for v in range(n):
        if colors[v] != target:
            continue
        new = [2 * c for c in colors]
        new[v] = 2 * target - 1
        cand = _search(M, new)
        if cand[0] in seen:
            continue
        seen.add(cand[0])
        if best is None or cand[0] < best[0]:
            best = cand
    return best


def canonical_form(M, colors=None):
    """Return (key, order) with ``order`` listing original indices in canonical order.

    ``key`` is a hashable value equal for two inputs exactly when they are
    isomorphic (colours must be mutually comparable values).
    """
    M = [list(r) for r in M]
    n = len(M)
    if n == 0:
        return ((), ()), []
    base = list(colors) if colors is not None else [0] * n
    matrix, perm = _search(M, base)
    return (tuple(base[p] for p in perm), matrix), perm


def find_isomorphism(A, B, colors_a=None, colors_b=None):
    """Index map p with A[p[i]][p[j]] == B[i][j] (and matching colours), or None."""
    n = len(A)
    if n != len(B):
        return None
    key_a, order_a = canonical_form(A, colors_a)
    key_b, order_b = canonical_form(B, colors_b)
    if key_a != key_b:
        return None
    p = [None] * n
    for ia, ib in zip(order_a, order_b):
        p[ib] = ia
    return p
