"""Quivers with arrow multiplicities."""

from dataclasses import dataclass

from .errors import MalformedMatrix
from .matrices import ExchangeMatrix


@dataclass(frozen=True, eq=False)
class Quiver:
    """Vertices plus arrows ``(source, target, mult)``; parallel arrows are merged."""

    vertices: tuple
    arrows: tuple = ()

    def __post_init__(self):
        verts = tuple(str(v) for v in self.vertices)
        if len(set(verts)) != len(verts):
            raise MalformedMatrix("duplicate quiver vertices")
        merged = {}
        for arrow in self.arrows:
            s, t = str(arrow[0]), str(arrow[1])
            m = int(arrow[2]) if len(arrow) > 2 else 1
            if s not in verts or t not in verts:
                raise MalformedMatrix(f"arrow {s}->{t} uses an unknown vertex")
            if m < 0:
                raise MalformedMatrix("negative multiplicity")
            merged[(s, t)] = merged.get((s, t), 0) + m
        order = {v: i for i, v in enumerate(verts)}
        arrows = tuple(sorted(((s, t, m) for (s, t), m in merged.items() if m > 0),
                              key=lambda a: (order[a[0]], order[a[1]])))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "arrows", arrows)
        object.__setattr__(self, "_mult", {(s, t): m for s, t, m in arrows})

    def mult(self, s, t):
        return self._mult.get((s, t), 0)

    def adjacency(self):
        return [[self.mult(s, t) for t in self.vertices] for s in self.vertices]

    def exchange_matrix(self, frozen=()):
        return ExchangeMatrix.from_quiver(self.vertices, self.arrows, frozen)

    @classmethod
    def from_exchange_matrix(cls, B):
        """Quiver of a skew-symmetric square matrix (positive entries give arrows)."""
        P = B.principal()
        labs = B.col_labels
        arrows = [(labs[i], labs[j], P[i][j]) for i in range(len(labs))
                  for j in range(len(labs)) if P[i][j] > 0]
        return cls(labs, arrows)

    def underlying_graph(self):
        """Undirected edge multiplicities {frozenset({a,b}): m}."""
        out = {}
        for s, t, m in self.arrows:
            key = frozenset((s, t))
            out[key] = out.get(key, 0) + m
        return out

    def is_acyclic(self):
        indeg = {v: 0 for v in self.vertices}
        for s, t, m in self.arrows:
            if s == t:
                return False
            indeg[t] += 1
        queue = [v for v in self.vertices if indeg[v] == 0]
        seen = 0
        while queue:
            v = queue.pop()
            seen += 1
            for s, t, m in self.arrows:
                if s == v:
                    indeg[t] -= 1
                    if indeg[t] == 0:
                        queue.append(t)
        return seen == len(self.vertices)

    def __eq__(self, other):
        if not isinstance(other, Quiver):
            return NotImplemented
        return set(self.vertices) == set(other.vertices) and self._mult == other._mult

    def __hash__(self):
        return hash((frozenset(self.vertices), frozenset(self._mult.items())))

    def to_json(self):
        return {"vertices": list(self.vertices),
                "arrows": [{"from": s, "to": t, "mult": m} for s, t, m in self.arrows]}


def double_quiver(Q):
    """Add a reverse arrow of equal multiplicity for each arrow."""
    arrows = list(Q.arrows) + [(t, s, m) for s, t, m in Q.arrows]
    return Quiver(Q.vertices, arrows)


def quivers_isomorphic(A, B, colors_a=None, colors_b=None):
    """Vertex bijection (dict) carrying A onto B with multiplicities, or None."""
    from .canonical import find_isomorphism

    p = find_isomorphism(A.adjacency(), B.adjacency(), colors_a, colors_b)
    if p is None:
        return None
    return {A.vertices[p[i]]: B.vertices[i] for i in range(len(B.vertices))}


def graphs_isomorphic(A, B):
    """Isomorphism of underlying undirected multigraphs."""
    def sym(Q):
        n = len(Q.vertices)
        M = Q.adjacency()
        return [[M[i][j] + M[j][i] for j in range(n)] for i in range(n)]

    from .canonical import find_isomorphism
    return find_isomorphism(sym(A), sym(B)) is not None
