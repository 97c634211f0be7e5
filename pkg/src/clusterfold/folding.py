"""Folding along a group action and the cyclic unfolding construction."""

from math import gcd, lcm, prod

from .errors import (
    InconsistentFold,
    MalformedMatrix,
    NonIntegerFold,
    NotAcyclic,
    NotAdmissible,
    NotEquivariant,
    NotFiniteType,
)
from .groups import enumerate_group, orbits, trivial_action, validate_admissible
from .matrices import CartanDatum, ExchangeMatrix


def _require_admissible(obj, action):
    report = validate_admissible(obj, action)
    if not report.equivariant:
        g, a, b = report.equivariance_counterexample
        raise NotEquivariant(f"entry ({a},{b}) changes under {action.as_map(g)}")
    if not report.admissible:
        a, b = report.admissibility_counterexample
        raise NotAdmissible(f"nonzero entry ({a},{b}) inside one orbit")
    return report


def fold_exchange(B, action):
    """Sum rows over orbits: b(Zbar, Xbar) = sum_{Z in Zbar} b(Z, x), x in Xbar."""
    _require_admissible(B, action)
    part = orbits(action)
    cols = set(B.col_labels)
    for o in part.orbits:
        inside = [v in cols for v in o]
        if any(inside) and not all(inside):
            raise NotEquivariant(f"orbit {part.label(o)} mixes mutable and frozen labels")
    mut = [o for o in part.orbits if o[0] in cols]
    frozen = [o for o in part.orbits if o[0] not in cols]
    rows = mut + frozen
    entries = []
    for Z in rows:
        row = []
        for X in mut:
            sums = {sum(B.entry(z, x) for z in Z) for x in X}
            if len(sums) != 1:
                raise InconsistentFold(f"entry ({part.label(Z)},{part.label(X)}) depends on representative")
            row.append(sums.pop())
        entries.append(row)
    return ExchangeMatrix(entries, [part.label(o) for o in rows], [part.label(o) for o in mut])


def fold_cartan(C, action):
    """C(i, j) = (1/#j) * sum over i x j of the unfolded entries."""
    _require_admissible(C, action)
    part = orbits(action)
    out = []
    for I in part.orbits:
        row = []
        for J in part.orbits:
            total = sum(C.entry(i, j) for i in I for j in J)
            if total % len(J):
                raise NonIntegerFold(f"entry ({part.label(I)},{part.label(J)}) = {total}/{len(J)}")
            row.append(total // len(J))
        out.append(row)
    return CartanDatum(out, [part.label(o) for o in part.orbits])


def _cyclic_unfold(labels, d, value):
    """Shared index-multiplication scheme.

    Vertex i becomes n_i = prod_{j != i} d_j copies (i, k), k mod n_i.  The
    entry between (i, k) and (i', k') is value(i, i') when gcd(n_i, n_i')
    divides k - k', else 0.
    """
    n = len(labels)
    counts = [prod(d[j] for j in range(n) if j != i) for i in range(n)]
    verts = [(i, k) for i in range(n) for k in range(counts[i])]
    names = [f"({labels[i]},{k})" for i, k in verts]
    M = []
    for i, k in verts:
        row = []
        for i2, k2 in verts:
            g = gcd(counts[i], counts[i2])
            row.append(value(i, i2) if (k - k2) % g == 0 else 0)
        M.append(row)
    gen = {}
    for (i, k), name in zip(verts, names):
        gen[name] = f"({labels[i]},{(k + 1) % counts[i]})"
    reps = {}
    for i in range(n):
        members = [f"({labels[i]},{k})" for k in range(counts[i])]
        reps[min(members)] = labels[i]
    action = enumerate_group([gen], names, orbit_names=reps)
    return M, names, action


def unfold_cartan(C):
    """Symmetric Cartan matrix with a cyclic action folding back to ``C``."""
    d = C.symmetrizer
    if all(x == 1 for x in d):
        return C, trivial_action(C.labels)
    E = C.entries

    def value(i, j):
        if i == j:
            return 2
        return d[i] * E[i][j] // lcm(d[i], d[j])

    M, names, action = _cyclic_unfold(C.labels, d, value)
    for i in range(len(M)):
        M[i][i] = 2
    return CartanDatum(M, names), action


def is_acyclic_matrix(P):
    """No directed cycle in the graph with an edge i -> j when P[i][j] > 0."""
    n = len(P)
    state = [0] * n

    def visit(v):
        state[v] = 1
        for u in range(n):
            if P[v][u] > 0:
                if state[u] == 1 or (state[u] == 0 and not visit(u)):
                    return False
        state[v] = 2
        return True

    return all(state[v] or visit(v) for v in range(n))


def unfold_exchange(B):
    """Skew-symmetric matrix with a cyclic action folding back to ``B``.

    Only square (coefficient-free) acyclic inputs are accepted.
    """
    if B.frozen_rows:
        raise MalformedMatrix("unfolding is defined for square exchange matrices only")
    P = B.principal()
    if not is_acyclic_matrix(P):
        raise NotAcyclic("principal part has a directed cycle")
    L = B.left_symmetrizer()
    if all(x == 1 for x in L):
        return B, trivial_action(B.col_labels)

    def value(i, j):
        return L[i] * P[i][j] // lcm(L[i], L[j])

    M, names, action = _cyclic_unfold(B.col_labels, L, value)
    return ExchangeMatrix(M, names, names), action


def fold_roots(C, action):
    """Positive roots of C pushed to orbits: coordinate on orbit i is the orbit sum.

    Returns (orbit labels, sorted list of coordinate tuples).
    """
    from .dynkin import recognize_dynkin
    from .weyl import positive_roots

    if recognize_dynkin(C) is None:
        raise NotFiniteType("fold_roots needs a finite-type Cartan matrix")
    _require_admissible(C, action)
    part = orbits(action)
    rs = positive_roots(C)
    idx = {x: i for i, x in enumerate(C.labels)}
    images = set()
    for root in rs.positive_roots:
        images.add(tuple(sum(root[idx[v]] for v in o) for o in part.orbits))
    # well-definedness on orbits: translates of a root give the same image
    return part.labels, sorted(images, key=lambda v: (sum(v), tuple(-x for x in v)))
