"""Labelled integer matrices: exchange matrices and Cartan data.

All bookkeeping is done by string label.  Positions only matter for
serialization, and equality compares label-indexed entries.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from .errors import (
    MalformedCartan,
    MalformedMatrix,
    NotSkewSymmetrizable,
    NotSymmetrizable,
    UnknownColumn,
)


def _as_int_rows(entries):
    return tuple(tuple(int(x) for x in row) for row in entries)


def _components(n, adjacent):
    """Connected components of the graph on range(n) with adjacency test."""
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        stack, comp = [start], []
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in range(n):
                if not seen[u] and adjacent(v, u):
                    seen[u] = True
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def _solve_ratios(n, ratio):
    """Find minimal positive integers x with x[j] = ratio(i, j) * x[i] on edges.

    ``ratio(i, j)`` returns a positive Fraction when i and j are joined,
    ``None`` when they are not, and raises ValueError when the pair itself is
    inconsistent (wrong signs).  Returns None if a cycle is inconsistent.
    """
    x = [None] * n
    for comp in _components(n, lambda a, b: a != b and ratio(a, b) is not None):
        root = comp[0]
        x[root] = Fraction(1)
        stack = [root]
        while stack:
            v = stack.pop()
            for u in comp:
                if u == v:
                    continue
                r = ratio(v, u)
                if r is None:
                    continue
                want = x[v] * r
                if x[u] is None:
                    x[u] = want
                    stack.append(u)
                elif x[u] != want:
                    return None
        den = lcm(*(x[v].denominator for v in comp))
        ints = [int(x[v] * den) for v in comp]
        g = gcd(*ints)
        for v, val in zip(comp, ints):
            x[v] = val // g
    return tuple(x)


def skew_symmetrizer(M):
    """Minimal positive diagonal D with ``M @ diag(D)`` skew-symmetric.

    Returns None when no such diagonal exists.  D is unique up to a positive
    scalar on each connected component; the returned one is primitive there.
    """
    M = _as_int_rows(M)
    n = len(M)
    if any(len(row) != n for row in M):
        raise MalformedMatrix("matrix is not square")
    for i in range(n):
        if M[i][i] != 0:
            return None
        for j in range(n):
            a, b = M[i][j], M[j][i]
            if (a == 0) != (b == 0) or (a != 0 and (a > 0) == (b > 0)):
                return None

    # M[i][j] * D[j] = -M[j][i] * D[i]
    def ratio(i, j):
        if M[i][j] == 0:
            return None
        return Fraction(-M[j][i], M[i][j])

    return _solve_ratios(n, ratio)


def left_skew_symmetrizer(M):
    """Minimal positive L with ``diag(L) @ M`` skew-symmetric, or None."""
    M = _as_int_rows(M)
    transposed = tuple(zip(*M)) if M else ()
    return skew_symmetrizer(transposed)


def _check_cartan_shape(C):
    n = len(C)
    for i, row in enumerate(C):
        if len(row) != n:
            raise MalformedCartan("matrix is not square")
        if row[i] != 2:
            raise MalformedCartan(f"diagonal entry {i} is {row[i]}, expected 2")
        for j, v in enumerate(row):
            if i == j:
                continue
            if v > 0:
                raise MalformedCartan(f"positive off-diagonal entry at ({i},{j})")
            if (v == 0) != (C[j][i] == 0):
                raise MalformedCartan(f"zero pattern not symmetric at ({i},{j})")


def symmetrizer(C):
    """Minimal positive d with ``diag(d) @ C`` symmetric, or None."""
    C = _as_int_rows(C)
    _check_cartan_shape(C)

    # d[i] C[i][j] = d[j] C[j][i]
    def ratio(i, j):
        if C[i][j] == 0:
            return None
        return Fraction(C[i][j], C[j][i])

    return _solve_ratios(len(C), ratio)


@dataclass(frozen=True, eq=False)
class ExchangeMatrix:
    """Integer m x n matrix; columns are the mutable labels, rows add frozen ones.

    ``symmetrizer`` is the right skew-symmetrizer D of the principal part:
    ``principal @ diag(D)`` is skew-symmetric.
    """

    entries: tuple
    row_labels: tuple
    col_labels: tuple
    symmetrizer: tuple = field(default=None)

    def __post_init__(self):
        entries = _as_int_rows(self.entries)
        rows = tuple(str(r) for r in self.row_labels)
        cols = tuple(str(c) for c in self.col_labels)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "row_labels", rows)
        object.__setattr__(self, "col_labels", cols)
        if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
            raise MalformedMatrix("duplicate labels")
        if len(entries) != len(rows) or any(len(r) != len(cols) for r in entries):
            raise MalformedMatrix("entries do not match label counts")
        missing = set(cols) - set(rows)
        if missing:
            raise MalformedMatrix(f"column labels missing from rows: {sorted(missing)}")
        object.__setattr__(self, "_row_index", {r: i for i, r in enumerate(rows)})
        object.__setattr__(self, "_col_index", {c: j for j, c in enumerate(cols)})
        D = skew_symmetrizer(self.principal())
        if D is None:
            raise NotSkewSymmetrizable("principal part admits no skew-symmetrizer")
        if self.symmetrizer is not None:
            given = tuple(int(x) for x in self.symmetrizer)
            P = self.principal()
            n = len(cols)
            ok = len(given) == n and all(x > 0 for x in given) and all(
                P[i][j] * given[j] == -P[j][i] * given[i] for i in range(n) for j in range(n)
            )
            if not ok:
                raise NotSkewSymmetrizable("supplied symmetrizer does not work")
            D = given
        object.__setattr__(self, "symmetrizer", D)

    # construction helpers

    @classmethod
    def from_square(cls, entries, labels=None, frozen=()):
        """Square matrix on ``labels``; labels listed in ``frozen`` become frozen rows."""
        entries = _as_int_rows(entries)
        if labels is None:
            labels = [str(i + 1) for i in range(len(entries))]
        labels = [str(x) for x in labels]
        frozen = {str(f) for f in frozen}
        cols = [i for i, lab in enumerate(labels) if lab not in frozen]
        mut = [i for i in cols] + [i for i, lab in enumerate(labels) if lab in frozen]
        return cls(
            tuple(tuple(entries[i][j] for j in cols) for i in mut),
            tuple(labels[i] for i in mut),
            tuple(labels[j] for j in cols),
        )

    @classmethod
    def from_quiver(cls, vertices, arrows, frozen=()):
        """b_zx = #(z -> x) - #(x -> z); ``arrows`` holds (source, target[, mult])."""
        vertices = [str(v) for v in vertices]
        idx = {v: i for i, v in enumerate(vertices)}
        n = len(vertices)
        M = [[0] * n for _ in range(n)]
        for arrow in arrows:
            s, t = str(arrow[0]), str(arrow[1])
            m = int(arrow[2]) if len(arrow) > 2 else 1
            M[idx[s]][idx[t]] += m
            M[idx[t]][idx[s]] -= m
        return cls.from_square(M, vertices, frozen)

    # accessors

    @property
    def shape(self):
        return (len(self.row_labels), len(self.col_labels))

    @property
    def mutable_cols(self):
        return frozenset(self.col_labels)

    @property
    def frozen_rows(self):
        cols = self.mutable_cols
        return tuple(r for r in self.row_labels if r not in cols)

    def entry(self, row, col):
        try:
            return self.entries[self._row_index[row]][self._col_index[col]]
        except KeyError as exc:
            raise UnknownColumn(f"no entry for ({row}, {col})") from exc

    def row_index(self, label):
        return self._row_index[label]

    def col_index(self, label):
        if label not in self._col_index:
            raise UnknownColumn(f"unknown column {label!r}")
        return self._col_index[label]

    def principal(self):
        return tuple(tuple(self.entries[self._row_index[r]][j] for j in range(len(self.col_labels)))
                     for r in self.col_labels)

    def principal_matrix(self):
        return ExchangeMatrix(self.principal(), self.col_labels, self.col_labels)

    def as_dict(self):
        return {(r, c): self.entries[i][j]
                for i, r in enumerate(self.row_labels)
                for j, c in enumerate(self.col_labels)}

    def reorder(self, row_labels, col_labels=None):
        """Same matrix with rows/columns listed in the given label order."""
        if col_labels is None:
            col_labels = self.col_labels
        if set(row_labels) != set(self.row_labels) or set(col_labels) != set(self.col_labels):
            raise MalformedMatrix("reorder must use the same label sets")
        return ExchangeMatrix(
            tuple(tuple(self.entry(r, c) for c in col_labels) for r in row_labels),
            tuple(row_labels), tuple(col_labels))

    def relabel(self, mapping):
        m = lambda x: str(mapping.get(x, x))
        return ExchangeMatrix(self.entries, tuple(map(m, self.row_labels)),
                              tuple(map(m, self.col_labels)))

    def is_skew_symmetric(self):
        P = self.principal()
        return all(P[i][j] == -P[j][i] for i in range(len(P)) for j in range(len(P)))

    def left_symmetrizer(self):
        return left_skew_symmetrizer(self.principal())

    def __eq__(self, other):
        if not isinstance(other, ExchangeMatrix):
            return NotImplemented
        return (set(self.row_labels) == set(other.row_labels)
                and set(self.col_labels) == set(other.col_labels)
                and self.as_dict() == other.as_dict())

    def __hash__(self):
        return hash(frozenset(self.as_dict().items()))

    def __repr__(self):
        return (f"ExchangeMatrix(rows={list(self.row_labels)}, cols={list(self.col_labels)}, "
                f"entries={[list(r) for r in self.entries]})")

    def to_json(self):
        return {"row_labels": list(self.row_labels), "col_labels": list(self.col_labels),
                "entries": [list(r) for r in self.entries]}


@dataclass(frozen=True, eq=False)
class CartanDatum:
    """Generalized Cartan matrix on labelled vertices with symmetrizer d."""

    entries: tuple
    labels: tuple = None
    symmetrizer: tuple = None

    def __post_init__(self):
        entries = _as_int_rows(self.entries)
        labels = self.labels
        if labels is None:
            labels = [str(i + 1) for i in range(len(entries))]
        labels = tuple(str(x) for x in labels)
        if len(set(labels)) != len(labels) or len(labels) != len(entries):
            raise MalformedCartan("labels do not match matrix size")
        _check_cartan_shape(entries)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_index", {x: i for i, x in enumerate(labels)})
        d = symmetrizer(entries)
        if d is None:
            raise NotSymmetrizable("cycle ratios are inconsistent")
        if self.symmetrizer is not None:
            given = tuple(int(x) for x in self.symmetrizer)
            n = len(entries)
            ok = len(given) == n and all(x > 0 for x in given) and all(
                given[i] * entries[i][j] == given[j] * entries[j][i]
                for i in range(n) for j in range(n))
            if not ok:
                raise NotSymmetrizable("supplied symmetrizer does not symmetrize")
            d = given
        object.__setattr__(self, "symmetrizer", d)

    @property
    def rank(self):
        return len(self.labels)

    def index(self, label):
        return self._index[label]

    def entry(self, a, b):
        return self.entries[self._index[a]][self._index[b]]

    def is_symmetric(self):
        n = self.rank
        return all(self.entries[i][j] == self.entries[j][i] for i in range(n) for j in range(n))

    def restrict(self, labels):
        labels = [x for x in self.labels if x in set(labels)]
        return CartanDatum(tuple(tuple(self.entry(a, b) for b in labels) for a in labels), labels)

    def relabel(self, mapping):
        return CartanDatum(self.entries, tuple(str(mapping.get(x, x)) for x in self.labels),
                           self.symmetrizer)

    def as_dict(self):
        return {(a, b): self.entries[i][j]
                for i, a in enumerate(self.labels) for j, b in enumerate(self.labels)}

    def __eq__(self, other):
        if not isinstance(other, CartanDatum):
            return NotImplemented
        return set(self.labels) == set(other.labels) and self.as_dict() == other.as_dict()

    def __hash__(self):
        return hash(frozenset(self.as_dict().items()))

    def __repr__(self):
        return f"CartanDatum(labels={list(self.labels)}, entries={[list(r) for r in self.entries]})"

    def to_json(self):
        return {"row_labels": list(self.labels), "col_labels": list(self.labels),
                "entries": [list(r) for r in self.entries],
                "symmetrizer": list(self.symmetrizer)}


def cartan_counterpart(B):
    """Cartan matrix with off-diagonal entries -|b_ij| of the principal part."""
    if not isinstance(B, ExchangeMatrix):
        B = ExchangeMatrix.from_square(B)
    P = B.principal()
    n = len(P)
    A = tuple(tuple(2 if i == j else -abs(P[i][j]) for j in range(n)) for i in range(n))
    left = B.left_symmetrizer()
    if left is None:
        raise NotSkewSymmetrizable("principal part admits no skew-symmetrizer")
    return CartanDatum(A, B.col_labels, left)
