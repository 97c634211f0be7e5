"""The equivariant quiver Q_Gamma of an admissible permutation action."""

from .characters import character_table
from .cyclotomic import Cyclo, exact_quotient
from .errors import NotAdmissible, NotEquivariant
from .groups import orbits, stabilizer, subgroup, validate_admissible
from .quiver import Quiver, double_quiver, quivers_isomorphic


def _vertex_name(rep, k, table):
    if len(table.characters) == 1:
        return rep
    return f"{rep}_{table.names[k]}"


def pair_representatives(action, O_i, O_j):
    """Lexicographically least representative of each orbit on O_i x O_j."""
    seen = set()
    reps = []
    for a in sorted(O_i):
        for b in sorted(O_j):
            if (a, b) in seen:
                continue
            reps.append((a, b))
            for g in action.elements:
                seen.add((action.apply(g, a), action.apply(g, b)))
    return reps


def build_q_gamma(Q, action, extra_tables=(), chooser=None):
    """Vertices (orbit representative, irreducible character of its stabilizer).

    The multiplicity from (i, rho) to (j, sigma) sums, over representatives
    (i', j') of the orbits on O_i x O_j, the dimension of
    Hom_H((kappa_i' . rho)|_H (x) A_i'j', (kappa_j' . sigma)|_H) with
    H = Stab(i') & Stab(j').  Parallel arrows carry the trivial action.

    ``chooser(action, rep, v)`` may override the transporter kappa (used to
    check that the choice does not matter).
    """
    report = validate_admissible(Q, action)
    if not report.equivariant:
        raise NotEquivariant("quiver is not invariant under the action")
    if not report.admissible:
        a, b = report.admissibility_counterexample
        raise NotAdmissible(f"arrow {a}->{b} inside one orbit")
    part = orbits(action)
    chooser = chooser or (lambda act, rep, v: act.transporter(rep, v))
    tables = {}
    vertices = []
    for o in part.orbits:
        rep = o[0]
        tab = character_table(stabilizer(action, rep), extra_tables)
        tables[rep] = tab
        for k in range(len(tab.characters)):
            vertices.append((rep, k, _vertex_name(rep, k, tab)))

    def conj_value(rep, v, kappa, char, h):
        # (kappa . rho)(h) = rho(kappa^-1 h kappa)
        inv = action.inverse(kappa)
        return tables[rep].value(char, action.compose(inv, action.compose(h, kappa)))

    arrows = []
    for oi in part.orbits:
        for oj in part.orbits:
            pairs = [(a, b) for a, b in pair_representatives(action, oi, oj) if Q.mult(a, b)]
            if not pairs:
                continue
            ri, rj = oi[0], oj[0]
            for ki in range(len(tables[ri].characters)):
                for kj in range(len(tables[rj].characters)):
                    total = 0
                    for a, b in pairs:
                        H = [g for g in action.elements
                             if action.apply(g, a) == a and action.apply(g, b) == b]
                        ka, kb = chooser(action, ri, a), chooser(action, rj, b)
                        mult = Q.mult(a, b)
                        acc = Cyclo.integer(0)
                        for h in H:
                            left = conj_value(ri, a, ka, ki, h)
                            right = conj_value(rj, b, kb, kj, h)
                            acc = acc + left * right.conj() * mult
                        dim = exact_quotient(acc, len(H))
                        if dim is None or dim < 0:
                            raise AssertionError(f"non-integral multiplicity {acc}/{len(H)}")
                        total += dim
                    if total:
                        arrows.append((_vertex_name(ri, ki, tables[ri]),
                                       _vertex_name(rj, kj, tables[rj]), total))
    return Quiver([v[2] for v in vertices], arrows)


def vertex_fibers(Q, action, extra_tables=()):
    """Colour of each Q_Gamma vertex: (orbit representative, character degree)."""
    part = orbits(action)
    colors = {}
    for o in part.orbits:
        rep = o[0]
        tab = character_table(stabilizer(action, rep), extra_tables)
        for k in range(len(tab.characters)):
            colors[_vertex_name(rep, k, tab)] = (rep, tab.degree(k))
    return colors


def check_double_commutes(Q, action, extra_tables=()):
    """Is (double Q)_Gamma isomorphic to the double of Q_Gamma?"""
    left = build_q_gamma(double_quiver(Q), action, extra_tables)
    right = double_quiver(build_q_gamma(Q, action, extra_tables))
    fibers = vertex_fibers(Q, action, extra_tables)
    colors_l = [fibers[v] for v in left.vertices]
    colors_r = [fibers[v] for v in right.vertices]
    return quivers_isomorphic(left, right, colors_l, colors_r) is not None
