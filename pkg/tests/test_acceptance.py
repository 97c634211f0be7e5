"""One test per acceptance criterion; each prints a PASS/FAIL line with its runtime."""

import itertools
import time

from clusterfold import (
    CartanDatum,
    ExchangeMatrix,
    Quiver,
    build_bik,
    build_q_gamma,
    check_commutation,
    check_double_commutes,
    check_linear_independence,
    classify_flag_case,
    cluster_monomials,
    enumerate_group,
    explore,
    fold_cartan,
    fold_exchange,
    fold_roots,
    initial_seed,
    is_finite_type,
    mutate,
    mutate_seed,
    mutate_sequence,
    orbit_mutate,
    orbits,
    positive_roots,
    random_orbit_sequences,
    trivial_action,
    unfold_cartan,
    unfold_exchange,
)
from clusterfold.dynkin import finite_types
from clusterfold.errors import AdmissibilityLost, InexactDivision
from clusterfold.mutation import make_rng, random_skew_symmetrizable
from clusterfold.quiver import graphs_isomorphic
from clusterfold.weyl import bik_indexing

from builders import FOLDING_FIXTURES, acyclic_orientation, a_odd_z2, cartan, d4_s3, d4_z3, d_z2, \
    e6_z2, swap_action
from test_dynkin import catalan_cluster_count


def report(number, title, ok, elapsed, limit=None, extra=""):
    budget = f" (limit {limit:g} s)" if limit is not None else ""
    status = "PASS" if ok and (limit is None or elapsed < limit) else "FAIL"
    print(f"\n[{status}] criterion {number}: {title}: {elapsed:.3f} s{budget} {extra}".rstrip())
    assert ok, f"criterion {number} failed"
    if limit is not None:
        assert elapsed < limit, f"criterion {number} over time: {elapsed:.3f} s"


def test_criterion_01_intro_fold():
    t = time.perf_counter()
    Q, g = d4_z3()
    F = fold_exchange(Q.exchange_matrix(), g)
    ok = [list(r) for r in F.entries] == [[0, 3], [-1, 0]]
    report(1, "D4/Z3 folds to [[0,3],[-1,0]] exactly", ok, time.perf_counter() - t, 0.1)


def test_criterion_02_flag_fixture():
    t = time.perf_counter()
    C3 = CartanDatum([[2, -1, 0], [-1, 2, -2], [0, -1, 2]], ["a", "b", "c"])
    word = tuple("abacbacbc")
    B = build_bik(C3, word, ["a", "b"])
    idx = bik_indexing(C3, word, ["a", "b"])
    plus = idx["plus"]
    ok = (B.row_labels == ("4", "5", "7", "3", "2", "c") and B.col_labels == ("4", "5", "7")
          and [list(r) for r in B.entries] == [[0, -1, 1], [2, 0, -2], [-1, 1, 0],
                                               [0, -1, 0], [-2, 1, 0], [1, 0, 0]]
          and idx["e"] == [1, 2, 3, 4, 5, 7]
          and (plus["a"], plus["b"], plus["c"]) == (1, 2, 4)
          and [plus[k] for k in (1, 2, 3, 4, 5, 7)] == [3, 5, 6, 7, 8, 9])
    report(2, "C3 flag matrix and index bookkeeping", ok, time.perf_counter() - t, 0.1)


def test_criterion_03_commutation_suite():
    names = ["A3/Z2", "A5/Z2", "D4/Z3", "D4/S3", "D5-type-D/Z2", "E6/Z2"]
    t = time.perf_counter()
    ok, lost, checked = True, {}, 0
    for k, name in enumerate(names):
        Q, g = FOLDING_FIXTURES[name]()
        B = Q.exchange_matrix()
        lost[name] = 0
        for seq in random_orbit_sequences(B, g, 200, 8, seed=1000 + k):
            try:
                ok &= check_commutation(B, g, seq).holds
                checked += 1
            except AdmissibilityLost:
                lost[name] += 1
    ok &= all(v == 0 for v in lost.values())
    report(3, "fold commutes with orbit mutation", ok, time.perf_counter() - t, 10,
           f"checked={checked} admissibility_lost={lost}")


def test_criterion_04_round_trips():
    types = [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("B", 4),
             ("C", 3), ("C", 4), ("D", 4), ("G", 2), ("F", 4)]
    t = time.perf_counter()
    ok = True
    for family, rank in types:
        C = cartan(family, rank)
        Ct, g = unfold_cartan(C)
        ok &= Ct.is_symmetric() and fold_cartan(Ct, g) == C
        B = acyclic_orientation(C)
        Bt, h = unfold_exchange(B)
        ok &= Bt.is_skew_symmetric() and fold_exchange(Bt, h) == B
    report(4, f"unfold/fold round trips on {len(types)} types", ok, time.perf_counter() - t, 1)


def test_criterion_05_classification_table():
    A, D = (lambda n: cartan("A", n)), (lambda n: cartan("D", n))
    rows = [
        ("A3/Z2 J=all", A(3), [("1", "3")], ["1", "2", "3"], "B2"),
        ("A5/Z2 J=c", A(5), [("1", "5"), ("2", "4")], ["3"], "B3"),
        ("D4/Z2 J=leaves", D(4), [("3", "4")], ["3", "4"], "C3"),
        ("A5/Z2 J=first", A(5), [("1", "5"), ("2", "4")], ["1", "5"], "(A1)^2"),
        ("D4/Z2 J=first", D(4), [("3", "4")], ["1"], "(A1)^2"),
        ("A4 J=1", A(4), None, ["1"], "A0"),
        ("A5 J=2", A(5), None, ["2"], "A3"),
        ("A4 J=12", A(4), None, ["1", "2"], "A3"),
        ("A4 J=14", A(4), None, ["1", "4"], "(A1)^3"),
        ("A4 J=23", A(4), None, ["2", "3"], "D4"),
        ("A5 J=13", A(5), None, ["1", "3"], "E6"),
        ("A5 J=123", A(5), None, ["1", "2", "3"], "E7"),
        ("D4 J=34", D(4), None, ["3", "4"], "A5"),
        ("D5 J=1", D(5), None, ["1"], "(A1)^3"),
    ]
    t = time.perf_counter()
    ok, bad = True, []
    for name, C, pairs, J, expected in rows:
        act = swap_action(C.labels, pairs) if pairs else trivial_action(C.labels)
        res = classify_flag_case(C, act, J)
        Dl = res.folded
        r = len(positive_roots(Dl))
        rK = len(positive_roots(Dl.restrict(list(res.K)))) if res.K else 0
        good = (res.type_name == expected and res.num_cluster_variables == r - rK
                and res.num_coefficients == len(orbits(act).orbits))
        if not good:
            bad.append((name, res.type_name))
        ok &= good
    res = classify_flag_case(A(5), swap_action(A(5).labels, [("1", "5"), ("2", "4")]), ["3"])
    ok &= (res.num_cluster_variables, res.num_coefficients) == (6, 3)
    report(5, f"{len(rows)} classification rows", ok, time.perf_counter() - t, 60,
           f"mismatches={bad}" if bad else "")


def test_criterion_06_finite_type_engine():
    t = time.perf_counter()
    ok = is_finite_type(ExchangeMatrix.from_square([[0, 3], [-1, 0]])).name == "G2"
    ok &= is_finite_type(ExchangeMatrix.from_square([[0, 1], [-1, 0]])).name == "A2"
    ok &= is_finite_type(ExchangeMatrix.from_square([[0, 2], [-2, 0]])) is None
    counts = {}
    for family, rank in [("A", 2), ("B", 2), ("G", 2), ("A", 3), ("B", 3), ("C", 3)]:
        g = explore(acyclic_orientation(cartan(family, rank)))
        counts[f"{family}{rank}"] = g.num_seeds
        ok &= not g.truncated and g.num_seeds == catalan_cluster_count(family, rank)
    report(6, "finite-type answers and cluster counts", ok, time.perf_counter() - t, 30, str(counts))


def test_criterion_07_laurent_phenomenon():
    types = [ft for ft in finite_types(4)]
    seeds = {ft: initial_seed(acyclic_orientation(cartan(*ft))) for ft in types}
    rng = make_rng(7)
    t = time.perf_counter()
    inexact = 0
    for path in range(1000):
        ft = types[path % len(types)]
        s = seeds[ft]
        cols = s.matrix.col_labels
        for _ in range(int(rng.integers(1, 13))):
            try:
                s = mutate_seed(s, cols[int(rng.integers(len(cols)))])
            except InexactDivision:
                inexact += 1
                break
    regular = True
    for ft in [("A", 2), ("B", 2), ("G", 2), ("A", 3), ("B", 3), ("C", 3), ("A", 4)]:
        g = explore(acyclic_orientation(cartan(*ft)))
        regular &= (not g.truncated) and g.is_regular(ft[1])
    report(7, "1000 random paths, exact divisions and regular graphs", inexact == 0 and regular,
           time.perf_counter() - t, None, f"inexact={inexact}")


def test_criterion_08_root_folding():
    labels = ["a", "b", "c", "b'", "a'"]
    A5 = CartanDatum(cartan("A", 5).entries, labels)
    z2 = swap_action(labels, [("a", "a'"), ("b", "b'")])
    Q, z3 = d4_z3()
    star = CartanDatum([[2, 0, 0, -1], [0, 2, 0, -1], [0, 0, 2, -1], [-1, -1, -1, 2]], Q.vertices)
    c3_hand = {(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1), (1, 1, 1),
               (0, 2, 1), (1, 2, 1), (2, 2, 1)}
    g2_hand = {(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)}
    t = time.perf_counter()
    _, c3 = fold_roots(A5, z2)
    _, g2 = fold_roots(star, z3)
    elapsed = time.perf_counter() - t
    report(8, "folded roots are C3 and G2", set(c3) == c3_hand and set(g2) == g2_hand, elapsed, 0.1)


def _und(vertices, edges):
    return Quiver(vertices, list(edges))


def test_criterion_09_q_gamma_table():
    path = lambda vs: _und(vs, zip(vs, vs[1:]))
    cases = [
        ("A3/Z2", a_odd_z2(2), path(["p", "c", "m"])),
        ("A5/Z2", a_odd_z2(3), _und(["1", "2", "p", "m"], [("1", "2"), ("2", "p"), ("2", "m")])),
        ("D4/Z2", d_z2(3), path(list("abcde"))),
        ("D4/Z3", d4_z3(), _und(["1", "a", "b", "c"], [("1", "a"), ("1", "b"), ("1", "c")])),
        ("D4/S3", d4_s3(), _und(["1p", "1m", "2p", "22", "2m"],
                                [("1p", "2p"), ("1p", "22"), ("1m", "22"), ("1m", "2m")])),
        ("E6/Z2", e6_z2(), _und(["1", "2", "3p", "4p", "3m", "4m"],
                                [("1", "2"), ("2", "3p"), ("3p", "4p"), ("2", "3m"), ("3m", "4m")])),
    ]
    t = time.perf_counter()
    ok, bad = True, []
    for name, (Q, g), expected in cases:
        good = graphs_isomorphic(build_q_gamma(Q, g), expected) and check_double_commutes(Q, g)
        if not good:
            bad.append(name)
        ok &= good
    report(9, "equivariant quivers match the table", ok, time.perf_counter() - t, 5,
           f"failed={bad}" if bad else "")


def test_criterion_10_independence():
    t = time.perf_counter()
    sizes = {}
    ok = True
    for name, M in [("B2", [[0, 2], [-1, 0]]), ("G2", [[0, 3], [-1, 0]])]:
        mons = cluster_monomials(explore(ExchangeMatrix.from_square(M)), 3)
        sizes[name] = len(mons)
        ok &= check_linear_independence(mons)
    report(10, "cluster monomials of degree <= 3 are independent", ok, time.perf_counter() - t, 30,
           str(sizes))


def _square_orbit_fixture():
    # centre joined to four leaves permuted cyclically: an orbit of size 4
    leaves = ["l0", "l1", "l2", "l3"]
    Q = Quiver(leaves + ["c"], [(x, "c") for x in leaves])
    g = enumerate_group([{"l0": "l1", "l1": "l2", "l2": "l3", "l3": "l0"}], Q.vertices)
    return Q, g


def test_criterion_11_mutation_algebra():
    rng = make_rng(11)
    t = time.perf_counter()
    ok = True
    for _ in range(1000):
        B = random_skew_symmetrizable(int(rng.integers(1, 6)), rng)
        k = B.col_labels[int(rng.integers(B.shape[1]))]
        M = mutate(B, k)
        ok &= mutate(M, k) == B and M.symmetrizer == B.symmetrizer
    orders = 0
    fixtures = [f() for f in FOLDING_FIXTURES.values()] + [_square_orbit_fixture()]
    for Q, g in fixtures:
        B = Q.exchange_matrix()
        for o in orbits(g).orbits:
            if len(o) > 4:
                continue
            ref = orbit_mutate(B, g, o, verify="none")
            for order in itertools.permutations(o):
                ok &= mutate_sequence(B, order) == ref
                orders += 1
    report(11, "involution, symmetrizer and order independence", ok, time.perf_counter() - t, None,
           f"orders_checked={orders}")
