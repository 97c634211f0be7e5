"""Finite permutation groups acting on vertex labels."""

import os
from dataclasses import dataclass, field

from .errors import GroupTooLarge, LabelMismatch, NotAPermutation, UnknownVertex


def max_group_size():
    return int(os.environ.get("CLUSTER_MAX_GROUP", "10000"))


def _normalize(gen, labels):
    """Turn a (possibly partial) label map into an image tuple in label order."""
    label_set = set(labels)
    gen = {str(k): str(v) for k, v in dict(gen).items()}
    for k, v in gen.items():
        if k not in label_set or v not in label_set:
            raise NotAPermutation(f"generator moves unknown label {k!r} -> {v!r}")
    images = tuple(gen.get(v, v) for v in labels)
    if len(set(images)) != len(images):
        raise NotAPermutation("generator is not injective")
    return images


@dataclass(frozen=True, eq=False)
class VertexGroupAction:
    """A permutation group on ``vertex_labels`` with all elements materialized.

    Elements are tuples of image labels in vertex order, sorted
    lexicographically.  ``orbit_names`` optionally fixes the display name of
    an orbit (keyed by its representative).
    """

    vertex_labels: tuple
    generators: tuple
    elements: tuple
    orbit_names: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.vertex_labels)})

    # element helpers

    @property
    def order(self):
        return len(self.elements)

    @property
    def identity(self):
        return tuple(self.vertex_labels)

    def apply(self, g, v):
        try:
            return g[self._index[v]]
        except KeyError as exc:
            raise UnknownVertex(f"unknown vertex {v!r}") from exc

    def compose(self, g, h):
        """g after h."""
        return tuple(self.apply(g, x) for x in h)

    def inverse(self, g):
        inv = [None] * len(g)
        for i, img in enumerate(g):
            inv[self._index[img]] = self.vertex_labels[i]
        return tuple(inv)

    def as_map(self, g):
        return dict(zip(self.vertex_labels, g))

    def element_order(self, g):
        k, h = 1, g
        while h != self.identity:
            h = self.compose(g, h)
            k += 1
        return k

    def exponent(self):
        from math import lcm
        return lcm(*(self.element_order(g) for g in self.elements)) if self.elements else 1

    # structure

    def orbit_of(self, v):
        if v not in self._index:
            raise UnknownVertex(f"unknown vertex {v!r}")
        return tuple(sorted({self.apply(g, v) for g in self.elements}))

    def orbits(self):
        return orbits(self)

    def stabilizer(self, v):
        return stabilizer(self, v)

    def transporter(self, src, dst):
        """Lexicographically least element mapping src to dst."""
        for g in self.elements:
            if self.apply(g, src) == dst:
                return g
        raise UnknownVertex(f"{dst!r} is not in the orbit of {src!r}")

    def restrict_to(self, labels):
        """Same group acting on a stable subset of labels (may lose faithfulness)."""
        labels = tuple(labels)
        idx = [self._index[v] for v in labels]
        elems = sorted({tuple(g[i] for i in idx) for g in self.elements})
        gens = tuple(tuple(g[i] for i in idx) for g in self.generators)
        if any(set(g) != set(labels) for g in elems):
            raise LabelMismatch("subset is not stable under the group")
        return VertexGroupAction(labels, gens, tuple(elems), dict(self.orbit_names))

    def to_json(self):
        gens = []
        for g in self.generators:
            gens.append({v: img for v, img in zip(self.vertex_labels, g) if v != img})
        return {"vertices": list(self.vertex_labels), "generators": gens}


def enumerate_group(generators, vertex_labels, orbit_names=None, cap=None):
    """Close the generators under composition.

    ``generators`` are label maps (identity entries may be omitted).
    """
    labels = tuple(str(v) for v in vertex_labels)
    if len(set(labels)) != len(labels):
        raise NotAPermutation("duplicate vertex labels")
    cap = max_group_size() if cap is None else cap
    gens = tuple(_normalize(g, labels) for g in generators)
    index = {v: i for i, v in enumerate(labels)}
    ident = labels
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                gh = tuple(g[index[x]] for x in h)
                if gh not in seen:
                    seen.add(gh)
                    nxt.append(gh)
                    if len(seen) > cap:
                        raise GroupTooLarge(f"group exceeds {cap} elements")
        frontier = nxt
    return VertexGroupAction(labels, gens, tuple(sorted(seen)), dict(orbit_names or {}))


def trivial_action(labels):
    return enumerate_group([], labels)


@dataclass(frozen=True)
class OrbitPartition:
    """Orbits sorted by representative (the least label in each orbit)."""

    orbits: tuple
    representative: dict
    names: dict

    def label(self, orbit):
        return self.names[tuple(orbit)]

    def orbit_of(self, v):
        for o in self.orbits:
            if v in o:
                return o
        raise UnknownVertex(f"unknown vertex {v!r}")

    def by_label(self, name):
        for o in self.orbits:
            if self.names[o] == name:
                return o
        raise UnknownVertex(f"no orbit named {name!r}")

    @property
    def labels(self):
        return [self.names[o] for o in self.orbits]


def default_orbit_name(orbit):
    orbit = sorted(orbit)
    if len(orbit) == 1:
        return orbit[0]
    return "{" + ",".join(orbit) + "}"


def orbits(action):
    found = set()
    for v in action.vertex_labels:
        found.add(action.orbit_of(v))
    ordered = tuple(sorted(found, key=lambda o: o[0]))
    reps = {o: o[0] for o in ordered}
    names = {o: action.orbit_names.get(o[0], default_orbit_name(o)) for o in ordered}
    return OrbitPartition(ordered, reps, names)


def stabilizer(action, v):
    if v not in action._index:
        raise UnknownVertex(f"unknown vertex {v!r}")
    elems = tuple(g for g in action.elements if action.apply(g, v) == v)
    return VertexGroupAction(action.vertex_labels, elems, elems, dict(action.orbit_names))


def subgroup(action, elements):
    elems = tuple(sorted(set(elements)))
    return VertexGroupAction(action.vertex_labels, elems, elems, dict(action.orbit_names))


@dataclass(frozen=True)
class AdmissibilityReport:
    equivariant: bool
    admissible: bool
    equivariance_counterexample: tuple = None
    admissibility_counterexample: tuple = None

    @property
    def ok(self):
        return self.equivariant and self.admissible

    def __bool__(self):
        return self.ok


def _entry_data(obj):
    """(labels, entries dict) for matrices, Cartan data and quivers."""
    from .matrices import CartanDatum, ExchangeMatrix
    from .quiver import Quiver

    if isinstance(obj, ExchangeMatrix):
        return set(obj.row_labels), obj.as_dict()
    if isinstance(obj, CartanDatum):
        d = {k: v for k, v in obj.as_dict().items() if k[0] != k[1]}
        return set(obj.labels), d
    if isinstance(obj, Quiver):
        return set(obj.vertices), {(s, t): m for s, t, m in obj.arrows}
    raise TypeError(f"cannot validate {type(obj).__name__}")


def validate_admissible(obj, action):
    """Check equivariance and the no-arrow-inside-an-orbit condition."""
    labels, data = _entry_data(obj)
    if labels != set(action.vertex_labels):
        raise LabelMismatch(f"labels {sorted(labels)} vs action {list(action.vertex_labels)}")
    eq_bad = None
    for g in action.elements:
        for (a, b), v in data.items():
            key = (action.apply(g, a), action.apply(g, b))
            if key not in data and v != 0:
                eq_bad = (g, a, b)
            elif data.get(key, 0) != v:
                eq_bad = (g, a, b)
            if eq_bad:
                break
        if eq_bad:
            break
    part = orbits(action)
    owner = {v: o for o in part.orbits for v in o}
    ad_bad = None
    for (a, b), v in data.items():
        if a != b and v != 0 and owner[a] == owner[b]:
            ad_bad = (a, b)
            break
        if a == b and v != 0 and not _is_cartan(obj):
            ad_bad = (a, b)
            break
    return AdmissibilityReport(eq_bad is None, ad_bad is None, eq_bad, ad_bad)


def _is_cartan(obj):
    from .matrices import CartanDatum
    return isinstance(obj, CartanDatum)
