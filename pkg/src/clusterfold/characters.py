"""Character tables of small permutation groups with exact cyclotomic values.

Cyclic groups are handled directly.  Other groups are matched against
abstract tables (bundled S3 and Z/2 x Z/2, or user-supplied JSON) by an
explicit isomorphism search.
"""

import json
from dataclasses import dataclass
from importlib import resources
from math import lcm

from .cyclotomic import Cyclo
from .errors import UnsupportedGroup

BUNDLED = ("s3.json", "klein4.json")


@dataclass(frozen=True, eq=False)
class CharacterTable:
    """Irreducible characters of a group of permutations.

    ``classes`` lists conjugacy classes (tuples of elements); ``characters``
    holds one tuple of Cyclo values per character, aligned with ``classes``.
    """

    group: object
    classes: tuple
    characters: tuple
    names: tuple

    def __post_init__(self):
        lookup = {}
        for k, cls in enumerate(self.classes):
            for g in cls:
                lookup[g] = k
        object.__setattr__(self, "_class_of", lookup)

    @property
    def order(self):
        return sum(len(c) for c in self.classes)

    def value(self, char, g):
        return self.characters[char][self._class_of[g]]

    def degree(self, char):
        return self.characters[char][self._class_of[self.identity]].rational()

    @property
    def identity(self):
        for cls in self.classes:
            for g in cls:
                if all(a == b for a, b in zip(g, self.group.vertex_labels)):
                    return g
        raise AssertionError("identity missing")

    def inner(self, a, b):
        """<chi_a, chi_b> times |G|, as a cyclotomic integer."""
        total = Cyclo.integer(0)
        for k, cls in enumerate(self.classes):
            total = total + self.characters[a][k] * self.characters[b][k].conj() * len(cls)
        return total

    def check_orthogonality(self):
        n = self.order
        if len(self.characters) != len(self.classes):
            return False
        for a in range(len(self.characters)):
            for b in range(len(self.characters)):
                if self.inner(a, b) != (n if a == b else 0):
                    return False
        return True


def conjugacy_classes(elements, compose, inverse):
    remaining = list(elements)
    seen = set()
    classes = []
    for g in remaining:
        if g in seen:
            continue
        cls = sorted({compose(compose(h, g), inverse(h)) for h in elements})
        seen.update(cls)
        classes.append(tuple(cls))
    return classes


def _cyclic_table(H):
    n = H.order
    ident = H.identity
    if n == 1:
        return CharacterTable(H, ((ident,),), ((Cyclo.integer(1),),), ("triv",))
    gen = next((g for g in H.elements if H.element_order(g) == n), None)
    if gen is None:
        return None
    powers = [ident]
    for _ in range(n - 1):
        powers.append(H.compose(gen, powers[-1]))
    classes = tuple((p,) for p in powers)
    chars = tuple(tuple(Cyclo.root(n, k * m) for m in range(n)) for k in range(n))
    return CharacterTable(H, classes, chars, tuple(f"chi{k}" for k in range(n)))


@dataclass(frozen=True)
class AbstractTable:
    name: str
    generators: tuple
    class_reps: tuple
    characters: tuple
    char_names: tuple


def _perm_compose(a, b):
    return tuple(a[i] for i in b)


def _perm_closure(gens):
    n = len(gens[0]) if gens else 0
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = _perm_compose(s, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def load_table(data):
    """Parse and validate an abstract character table from JSON data."""
    if isinstance(data, str):
        data = json.loads(data)
    gens = tuple(tuple(int(x) for x in g) for g in data["generators"])
    reps = tuple(tuple(int(x) for x in g) for g in data["classes"])
    chars, names = [], []
    for k, ch in enumerate(data["characters"]):
        vals = ch["values"] if isinstance(ch, dict) else ch
        chars.append(tuple(Cyclo.from_json(v) for v in vals))
        names.append(ch.get("name", str(k)) if isinstance(ch, dict) else str(k))
    table = AbstractTable(data.get("name", "G"), gens, reps, tuple(chars), tuple(names))
    _validate_abstract(table)
    return table


def _abstract_classes(table):
    elems = sorted(_perm_closure(table.generators))
    inv = lambda g: tuple(sorted(range(len(g)), key=g.__getitem__))
    classes = conjugacy_classes(elems, _perm_compose, inv)
    rep_index = {}
    for k, rep in enumerate(table.class_reps):
        for j, cls in enumerate(classes):
            if rep in cls:
                rep_index[j] = k
    return elems, classes, rep_index


def _validate_abstract(table):
    elems, classes, rep_index = _abstract_classes(table)
    if len(rep_index) != len(classes) or len(table.class_reps) != len(classes):
        raise UnsupportedGroup(f"table {table.name}: class representatives do not match the classes")
    if len(table.characters) != len(classes):
        raise UnsupportedGroup(f"table {table.name}: #characters != #classes")
    n = len(elems)
    sizes = [0] * len(classes)
    for j, cls in enumerate(classes):
        sizes[rep_index[j]] = len(cls)
    for ia, a in enumerate(table.characters):
        for ib, b in enumerate(table.characters):
            total = Cyclo.integer(0)
            for k, size in enumerate(sizes):
                total = total + a[k] * b[k].conj() * size
            expect = n if ia == ib else 0
            if total != expect:
                raise UnsupportedGroup(f"table {table.name} fails orthogonality")


def bundled_tables():
    out = []
    pkg = resources.files("clusterfold") / "data"
    for name in BUNDLED:
        out.append(load_table((pkg / name).read_text()))
    return out


def _find_isomorphism(H, table):
    """Map abstract elements to H elements, or None."""
    abs_elems = _perm_closure(table.generators)
    if len(abs_elems) != H.order:
        return None
    ident_a = tuple(range(len(table.generators[0])))

    def order_abs(g):
        k, h = 1, g
        while h != ident_a:
            h = _perm_compose(g, h)
            k += 1
        return k

    candidates = [[h for h in H.elements if H.element_order(h) == order_abs(s)]
                  for s in table.generators]

    def attempt(images):
        phi = {ident_a: H.identity}
        frontier = [ident_a]
        while frontier:
            nxt = []
            for x in frontier:
                for s, hs in zip(table.generators, images):
                    y = _perm_compose(s, x)
                    val = H.compose(hs, phi[x])
                    if y in phi:
                        if phi[y] != val:
                            return None
                    else:
                        phi[y] = val
                        nxt.append(y)
            frontier = nxt
        if len(set(phi.values())) != len(phi) or len(phi) != H.order:
            return None
        return phi

    def search(k, chosen):
        if k == len(candidates):
            return attempt(chosen)
        for h in candidates[k]:
            res = search(k + 1, chosen + [h])
            if res is not None:
                return res
        return None

    return search(0, [])


def character_table(H, extra_tables=()):
    """Character table of a permutation group H (a VertexGroupAction)."""
    cyc = _cyclic_table(H)
    if cyc is not None:
        assert cyc.check_orthogonality()
        return cyc
    tables = [t if isinstance(t, AbstractTable) else load_table(t) for t in extra_tables]
    for table in tables + bundled_tables():
        phi = _find_isomorphism(H, table)
        if phi is None:
            continue
        _, classes, rep_index = _abstract_classes(table)
        h_classes = []
        values = [[None] * len(classes) for _ in table.characters]
        for j, cls in enumerate(classes):
            h_classes.append(tuple(sorted(phi[g] for g in cls)))
            for c, row in enumerate(table.characters):
                values[c][j] = row[rep_index[j]]
        out = CharacterTable(H, tuple(h_classes), tuple(tuple(r) for r in values), table.char_names)
        assert out.check_orthogonality()
        return out
    raise UnsupportedGroup(f"no character table for a non-cyclic group of order {H.order}")


def table_exponent(table):
    return lcm(*(v.N for row in table.characters for v in row))
