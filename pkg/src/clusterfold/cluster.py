"""Laurent seeds, exchange graphs and finite-type recognition."""

import hashlib
import itertools
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .canonical import canonical_form
from .dynkin import DEFAULT_MAX_RANK, DynkinProduct, DynkinType, recognize_dynkin
from .errors import GraphTruncated, InexactDivision, NotAcyclic, SearchBudgetExceeded
from .laurent import LaurentPoly
from .matrices import ExchangeMatrix, _components, cartan_counterpart
from .mutation import mutate


@dataclass(frozen=True, eq=False)
class Seed:
    """Exchange matrix with cluster variables (columns) and frozen coefficients."""

    matrix: ExchangeMatrix
    cluster: dict
    coefficients: dict

    def value(self, label):
        if label in self.cluster:
            return self.cluster[label]
        return self.coefficients[label]

    def key(self):
        """Canonical key: clusters are unordered, frozen rows keep their order."""
        B = self.matrix
        cols = sorted(B.col_labels,
                      key=lambda c: (self.cluster[c].key(),
                                     tuple(B.entry(r, c) for r in B.row_labels)))
        frozen = B.frozen_rows
        rows = list(cols) + list(frozen)
        mat = tuple(tuple(B.entry(r, c) for c in cols) for r in rows)
        return (tuple(self.cluster[c].key() for c in cols), mat)

    def __eq__(self, other):
        return isinstance(other, Seed) and self.key() == other.key() and \
            all(self.coefficients[k] == other.coefficients.get(k) for k in self.coefficients)

    def __hash__(self):
        return hash(self.key())

    def to_json(self):
        return {"matrix": self.matrix.to_json(),
                "cluster": {k: v.to_json() for k, v in self.cluster.items()},
                "coefficients": {k: v.to_json() for k, v in self.coefficients.items()}}


def initial_seed(B):
    """Cluster variable x_i for each column; coefficient x_j for each frozen row."""
    rows = list(B.row_labels)
    names = [f"x{r}" if r.isdigit() else f"x_{r}" for r in rows]
    n = len(rows)
    cluster = {c: LaurentPoly.variable(rows.index(c), n, names) for c in B.col_labels}
    coeffs = {f: LaurentPoly.variable(rows.index(f), n, names) for f in B.frozen_rows}
    return Seed(B, cluster, coeffs)


def mutate_seed(seed, k):
    """Exchange the variable at column k; the division must be exact."""
    B = seed.matrix
    k = str(k)
    j = B.col_index(k)
    n = next(iter(seed.cluster.values()), None) or next(iter(seed.coefficients.values()))
    one = LaurentPoly.constant(1, n.nvars, n.names)
    pos, neg = one, one
    for r, row in zip(B.row_labels, B.entries):
        b = row[j]
        if b > 0:
            pos = pos * seed.value(r) ** b
        elif b < 0:
            neg = neg * seed.value(r) ** (-b)
    try:
        new = (pos + neg).exact_div(seed.cluster[k])
    except InexactDivision as exc:
        raise InexactDivision(f"exchange at {k} is not Laurent: {exc.detail}") from exc
    cluster = dict(seed.cluster)
    cluster[k] = new
    return Seed(mutate(B, k), cluster, seed.coefficients)


def key_digest(key):
    return hashlib.sha256(repr(key).encode()).hexdigest()[:12]


@dataclass
class ExchangeGraph:
    seeds: dict = field(default_factory=dict)
    edges: set = field(default_factory=set)
    variables: set = field(default_factory=set)
    order: list = field(default_factory=list)
    truncated: bool = False
    reason: str = ""

    @property
    def num_seeds(self):
        return len(self.seeds)

    def degrees(self):
        deg = {k: 0 for k in self.seeds}
        for a, _, b in self.edges:
            deg[a] += 1
        return deg

    def is_regular(self, degree):
        return all(d == degree for d in self.degrees().values())

    def is_symmetric(self):
        pairs = {(a, b) for a, _, b in self.edges}
        return all((b, a) in pairs for a, b in pairs)

    def to_json(self):
        ids = {k: key_digest(k) for k in self.order}
        return {
            "truncated": self.truncated,
            "num_seeds": len(self.seeds),
            "num_variables": len(self.variables),
            "seeds": [{"id": ids[k], "cluster": [v.to_json() for v in
                                                  (self.seeds[k].cluster[c] for c in
                                                   sorted(self.seeds[k].cluster,
                                                          key=lambda c: self.seeds[k].cluster[c].key()))]}
                      for k in self.order],
            "edges": sorted([ids[a], lab, ids[b]] for a, lab, b in self.edges),
            "variables": [v.to_json() for v in sorted(self.variables)],
        }

    def to_dot(self):
        ids = {k: key_digest(k) for k in self.order}
        lines = ["graph exchange {"]
        for k in self.order:
            lines.append(f'  "{ids[k]}";')
        done = set()
        for a, lab, b in sorted(self.edges, key=lambda e: (ids[e[0]], e[1], ids[e[2]])):
            pair = frozenset((a, b))
            if pair in done:
                continue
            done.add(pair)
            lines.append(f'  "{ids[a]}" -- "{ids[b]}" [label="{lab}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _expand(seed):
    return [(k, mutate_seed(seed, k)) for k in seed.matrix.col_labels]


def explore(B, max_seeds=10000, max_var_degree=None, jobs=1):
    """Breadth-first closure of the exchange graph under seed mutation.

    Work proceeds level by level; expansions are merged in frontier order,
    so the result does not depend on ``jobs``.
    """
    start = B if isinstance(B, Seed) else initial_seed(B)
    g = ExchangeGraph()
    k0 = start.key()
    g.seeds[k0] = start
    g.order.append(k0)
    g.variables.update(start.cluster.values())
    frontier = [k0]
    pool = ProcessPoolExecutor(jobs) if jobs and jobs > 1 else None
    try:
        while frontier:
            seeds = [g.seeds[k] for k in frontier]
            results = list(pool.map(_expand, seeds)) if pool else [_expand(s) for s in seeds]
            nxt = []
            for src, expansions in zip(frontier, results):
                for lab, s in expansions:
                    if max_var_degree is not None and s.cluster[lab].max_abs_degree() > max_var_degree:
                        g.truncated, g.reason = True, "max_var_degree"
                        continue
                    key = s.key()
                    if key not in g.seeds:
                        if len(g.seeds) >= max_seeds:
                            g.truncated, g.reason = True, "max_seeds"
                            continue
                        g.seeds[key] = s
                        g.order.append(key)
                        nxt.append(key)
                        g.variables.add(s.cluster[lab])
                    g.edges.add((src, lab, key))
            frontier = nxt
    finally:
        if pool:
            pool.shutdown()
    return g


def _component_type(P, budget):
    """Mutation-class search for one connected principal block."""
    n = len(P)
    labels = [str(i) for i in range(n)]
    start = ExchangeMatrix(P, labels, labels)
    key0, _ = canonical_form(P)
    seen = {key0: start}
    queue = deque([start])
    while queue:
        M = queue.popleft()
        E = M.entries
        if any(abs(E[i][j] * E[j][i]) >= 4 for i in range(n) for j in range(i + 1, n)):
            return None, len(seen)
        for k in labels:
            N = mutate(M, k)
            key, _ = canonical_form(N.entries)
            if key not in seen:
                seen[key] = N
                if len(seen) > budget:
                    raise SearchBudgetExceeded(f"mutation class exceeds {budget} matrices")
                queue.append(N)
    ceiling = max(DEFAULT_MAX_RANK, n)
    for M in seen.values():
        t = recognize_dynkin(cartan_counterpart(M), max_rank=ceiling)
        if t is not None:
            return t, len(seen)
    raise AssertionError("finite mutation class without a Dynkin member")


def is_finite_type(B, budget=10**6):
    """DynkinType (or product) of the principal part, or None for infinite type."""
    if not isinstance(B, ExchangeMatrix):
        B = ExchangeMatrix.from_square(B)
    P = B.principal()
    labels = B.col_labels
    ceiling = max(DEFAULT_MAX_RANK, len(P))
    direct = recognize_dynkin(cartan_counterpart(B), max_rank=ceiling) if P else DynkinProduct(())
    if direct is not None and _acyclic_or_tree(P):
        return direct
    found = []
    for comp in _components(len(P), lambda a, b: a != b and P[a][b] != 0):
        sub = [[P[a][b] for b in comp] for a in comp]
        t, _ = _component_type(sub, budget)
        if t is None:
            return None
        relabel = {k: labels[comp[int(v)]] for k, v in t.relabeling.items()}
        found.append(DynkinType(t.family, t.rank, relabel))
    if not found:
        return DynkinProduct(())
    if len(found) == 1:
        return found[0]
    found.sort(key=lambda t: (t.family, t.rank))
    return DynkinProduct(tuple(found))


def _acyclic_or_tree(P):
    """A Dynkin Cartan counterpart certifies finite type when the diagram is a tree."""
    n = len(P)
    edges = sum(1 for i in range(n) for j in range(i + 1, n) if P[i][j] != 0)
    comps = len(_components(n, lambda a, b: a != b and P[a][b] != 0))
    return edges == n - comps


def cluster_monomials(g, max_total_degree):
    """Products of variables from one cluster (coefficients included), deduplicated."""
    if g.truncated:
        raise GraphTruncated("exchange graph exploration was truncated")
    out = {}
    for key in g.order:
        s = g.seeds[key]
        factors = [s.cluster[c] for c in sorted(s.cluster)] + \
                  [s.coefficients[f] for f in sorted(s.coefficients)]
        if not factors:
            continue
        one = LaurentPoly.constant(1, factors[0].nvars, factors[0].names)
        out.setdefault(one.key(), one)
        for d in range(1, max_total_degree + 1):
            for combo in itertools.combinations_with_replacement(range(len(factors)), d):
                p = one
                for i in combo:
                    p = p * factors[i]
                out.setdefault(p.key(), p)
    return [out[k] for k in sorted(out)]


def exact_rank(rows):
    """Rank over Q of a list of rational row vectors."""
    rows = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col] / p[col]
                rows[i] = [a - f * b for a, b in zip(rows[i], p)]
        rank += 1
    return rank


def check_linear_independence(polys):
    """True iff the polynomials are linearly independent over Q."""
    polys = list(polys)
    support = sorted({e for p in polys for e in p.terms})
    index = {e: i for i, e in enumerate(support)}
    rows = []
    for p in polys:
        row = [0] * len(support)
        for e, c in p.terms.items():
            row[index[e]] = c
        rows.append(row)
    return exact_rank(rows) == len(polys)


def ntheta_matrix(Q, slices=1):
    """Exchange matrix of the slice quiver on slices 0..s with the top slice frozen.

    Slice arrows are reversed arrows of Q, each arrow i -> j also gives
    (n+1, i) -> (n, j), and (n, i) -> (n+1, i) are the translation arrows.
    """
    if not Q.is_acyclic():
        raise NotAcyclic("Q has an oriented cycle")
    if slices < 1:
        raise ValueError("need at least one slice above the base")
    name = lambda n, i: f"({n},{i})"
    verts = [name(n, i) for n in range(slices + 1) for i in Q.vertices]
    arrows = []
    for n in range(slices + 1):
        for s, t, m in Q.arrows:
            arrows.append((name(n, t), name(n, s), m))
            if n < slices:
                arrows.append((name(n + 1, s), name(n, t), m))
        if n < slices:
            for i in Q.vertices:
                arrows.append((name(n, i), name(n + 1, i), 1))
    frozen = [name(slices, i) for i in Q.vertices]
    return ExchangeMatrix.from_quiver(verts, arrows, frozen)


def specialize(poly, seed_or_names, labels):
    """Set the variables of the given row labels to 1 and drop them."""
    names = list(poly.names)
    if isinstance(seed_or_names, Seed):
        rows = list(seed_or_names.matrix.row_labels)
        idx = [rows.index(l) for l in labels]
    else:
        idx = [names.index(n) for n in labels]
    return poly.drop_variables(idx)


def specialize_graph(g, labels):
    """Cluster variables of an explored graph with the given frozen labels set to 1."""
    if not g.order:
        return set()
    first = g.seeds[g.order[0]]
    rows = list(first.matrix.row_labels)
    idx = [rows.index(l) for l in labels]
    return {v.drop_variables(idx) for v in g.variables}
