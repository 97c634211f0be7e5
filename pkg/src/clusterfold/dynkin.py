"""Finite-type Cartan matrices and Dynkin-type recognition.

Matrices follow the convention a_ij = <alpha_i^vee, alpha_j>, so the row of a
short simple root carries the large off-diagonal entry.  With this choice
B_n has its short root last and C_n its long root last.
"""

import os
from dataclasses import dataclass, field
from functools import lru_cache

from .canonical import find_isomorphism
from .matrices import CartanDatum, _components

DEFAULT_MAX_RANK = int(os.environ.get("CLUSTER_MAX_DYNKIN_RANK", "8"))


def _chain(n):
    C = [[0] * n for _ in range(n)]
    for i in range(n):
        C[i][i] = 2
        if i + 1 < n:
            C[i][i + 1] = C[i + 1][i] = -1
    return C


def cartan_matrix(family, rank):
    """Canonical Cartan matrix (list of lists) for a finite type."""
    n = rank
    if family == "A" and n >= 1:
        return _chain(n)
    if family == "B" and n >= 2:
        C = _chain(n)
        C[n - 1][n - 2] = -2
        return C
    if family == "C" and n >= 2:
        C = _chain(n)
        C[n - 2][n - 1] = -2
        return C
    if family == "D" and n >= 4:
        C = _chain(n - 1) + [[0] * (n - 1)]
        for row in C:
            row.append(0)
        C[n - 2][n - 3] = C[n - 3][n - 2] = -1
        C[n - 2][n - 1] = C[n - 1][n - 2] = 0
        C[n - 1][n - 1] = 2
        C[n - 1][n - 3] = C[n - 3][n - 1] = -1
        return C
    if family == "E" and n in (6, 7, 8):
        C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        # 1-3-4-5-6-7-8 with 2 attached to 4
        edges = [(1, 3), (3, 4), (4, 5), (2, 4)] + [(k, k + 1) for k in range(5, n)]
        for a, b in edges:
            C[a - 1][b - 1] = C[b - 1][a - 1] = -1
        return C
    if family == "F" and n == 4:
        C = _chain(4)
        C[2][1] = -2
        return C
    if family == "G" and n == 2:
        return [[2, -1], [-3, 2]]
    raise ValueError(f"no finite type {family}{rank}")


def finite_types(max_rank=None):
    """All (family, rank) pairs bundled up to ``max_rank`` (B2 is listed, C2 is not)."""
    max_rank = DEFAULT_MAX_RANK if max_rank is None else max_rank
    out = []
    for n in range(1, max_rank + 1):
        out.append(("A", n))
        if n >= 2:
            out.append(("B", n))
        if n >= 3:
            out.append(("C", n))
        if n >= 4:
            out.append(("D", n))
        if n in (6, 7, 8):
            out.append(("E", n))
        if n == 4:
            out.append(("F", 4))
        if n == 2:
            out.append(("G", 2))
    return out


def canonical_datum(family, rank):
    return CartanDatum(cartan_matrix(family, rank), [str(i + 1) for i in range(rank)])


# Weyl group invariant degrees; the oracle for cluster counts and |W|.
def weyl_degrees(family, rank):
    n = rank
    if family == "A":
        return list(range(2, n + 2))
    if family in ("B", "C"):
        return list(range(2, 2 * n + 1, 2))
    if family == "D":
        return sorted(list(range(2, 2 * n - 1, 2)) + [n])
    return {("E", 6): [2, 5, 6, 8, 9, 12], ("E", 7): [2, 6, 8, 10, 12, 14, 18],
            ("E", 8): [2, 8, 12, 14, 18, 20, 24, 30], ("F", 4): [2, 6, 8, 12],
            ("G", 2): [2, 6]}[(family, n)]


@dataclass(frozen=True)
class DynkinType:
    family: str
    rank: int
    relabeling: dict = field(default_factory=dict, compare=False, hash=False)

    @property
    def name(self):
        return f"{self.family}{self.rank}"

    @property
    def components(self):
        return (self,)

    def num_positive_roots(self):
        return sum(d - 1 for d in weyl_degrees(self.family, self.rank))

    def coxeter_number(self):
        return max(weyl_degrees(self.family, self.rank))

    def num_clusters(self):
        """Number of clusters from the product formula prod (d_i + h) / d_i."""
        h = self.coxeter_number()
        num = den = 1
        for d in weyl_degrees(self.family, self.rank):
            num *= d + h
            den *= d
        return num // den

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class DynkinProduct:
    """Disjoint union of finite types; the empty product is named A0."""

    components: tuple

    @property
    def rank(self):
        return sum(c.rank for c in self.components)

    @property
    def relabeling(self):
        out = {}
        for k, c in enumerate(self.components):
            for key, val in c.relabeling.items():
                out[f"{c.name}#{k}:{key}"] = val
        return out

    @property
    def name(self):
        if not self.components:
            return "A0"
        names = sorted(c.name for c in self.components)
        parts = []
        for nm in sorted(set(names), key=names.index):
            k = names.count(nm)
            parts.append(nm if k == 1 else f"({nm})^{k}")
        return "x".join(parts)

    def num_positive_roots(self):
        return sum(c.num_positive_roots() for c in self.components)

    def num_clusters(self):
        out = 1
        for c in self.components:
            out *= c.num_clusters()
        return out

    def __str__(self):
        return self.name


@lru_cache(maxsize=None)
def _catalogue(rank, max_rank):
    return [(f, r, cartan_matrix(f, r)) for f, r in finite_types(max_rank) if r == rank]


def _recognize_connected(M, labels, max_rank):
    n = len(M)
    for family, rank, canon in _catalogue(n, max_rank):
        p = find_isomorphism(M, canon)
        if p is not None:
            relabel = {str(i + 1): labels[p[i]] for i in range(n)}
            return DynkinType(family, rank, relabel)
    return None


def recognize_dynkin(C, max_rank=None):
    """DynkinType (or DynkinProduct when disconnected) of a Cartan datum, else None.

    The relabeling maps canonical vertex names "1".."n" to input labels.
    """
    max_rank = DEFAULT_MAX_RANK if max_rank is None else max_rank
    if not isinstance(C, CartanDatum):
        C = CartanDatum(C)
    M = C.entries
    comps = _components(C.rank, lambda a, b: a != b and M[a][b] != 0)
    found = []
    for comp in comps:
        sub = [[M[a][b] for b in comp] for a in comp]
        t = _recognize_connected(sub, [C.labels[a] for a in comp], max_rank)
        if t is None:
            return None
        found.append(t)
    if len(found) == 1:
        return found[0]
    found.sort(key=lambda t: (t.family, t.rank, sorted(t.relabeling.values())))
    return DynkinProduct(tuple(found))


def verify_relabeling(C, dtype):
    """Check that the canonical matrix pushed through the relabeling equals C."""
    for comp in dtype.components:
        canon = cartan_matrix(comp.family, comp.rank)
        for i in range(comp.rank):
            for j in range(comp.rank):
                a, b = comp.relabeling[str(i + 1)], comp.relabeling[str(j + 1)]
                if C.entry(a, b) != canon[i][j]:
                    return False
    covered = [x for comp in dtype.components for x in comp.relabeling.values()]
    if sorted(covered) != sorted(C.labels):
        return False
    # off-component entries vanish
    owner = {x: k for k, comp in enumerate(dtype.components) for x in comp.relabeling.values()}
    return all(C.entry(a, b) == 0 for a in C.labels for b in C.labels
               if owner[a] != owner[b])


def parse_type_name(name):
    """'B3' -> ('B', 3)."""
    return name[0], int(name[1:])
