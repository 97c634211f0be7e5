import pytest
from hypothesis import given, settings, strategies as st

from clusterfold import (
    CartanDatum,
    ExchangeMatrix,
    cartan_counterpart,
    enumerate_group,
    fold_cartan,
    fold_exchange,
    fold_roots,
    orbits,
    positive_roots,
    recognize_dynkin,
    trivial_action,
    unfold_cartan,
    unfold_exchange,
    validate_admissible,
)
from clusterfold.dynkin import cartan_matrix, finite_types
from clusterfold.errors import NotAcyclic, NotAdmissible, NotEquivariant
from clusterfold.mutation import make_rng, random_skew_symmetrizable

from builders import FOLDING_FIXTURES, acyclic_orientation, cartan, d4_z3, swap_action

RANK4 = [(f, r) for f, r in finite_types(4)]


def star_cartan():
    Q, g = d4_z3()
    C = CartanDatum([[2, 0, 0, -1], [0, 2, 0, -1], [0, 0, 2, -1], [-1, -1, -1, 2]], Q.vertices)
    return C, g


def test_d4_z3_exchange_fold():
    Q, g = d4_z3()
    F = fold_exchange(Q.exchange_matrix(), g)
    assert F.row_labels == ("{1,1',1''}", "2")
    assert F.entries == ((0, 3), (-1, 0))


def test_trivial_fold_is_identity():
    Q, _ = d4_z3()
    B = Q.exchange_matrix()
    F = fold_exchange(B, trivial_action(B.row_labels))
    assert F.entries == B.entries and F.row_labels == B.row_labels


def test_a3_swap_fold():
    B = ExchangeMatrix.from_quiver(["1", "2", "3"], [("1", "2"), ("3", "2")])
    F = fold_exchange(B, swap_action(["1", "2", "3"], [("1", "3")]))
    assert F.row_labels == ("{1,3}", "2") and F.entries == ((0, 2), (-1, 0))


def test_cartan_folds():
    C, g = star_cartan()
    F = fold_cartan(C, g)
    assert F.entries == ((2, -3), (-1, 2))
    assert recognize_dynkin(F).name == "G2"
    labels = ["a", "b", "c", "b'", "a'"]
    A5 = CartanDatum(cartan_matrix("A", 5), labels)
    F = fold_cartan(A5, swap_action(labels, [("a", "a'"), ("b", "b'")]))
    assert F.entries == ((2, -1, 0), (-1, 2, -2), (0, -1, 2))
    assert recognize_dynkin(F).name == "C3"
    assert fold_cartan(A5, trivial_action(labels)) == A5


def test_fold_errors():
    two = ExchangeMatrix.from_square([[0, 1], [-1, 0]], ["1", "2"])
    swap = enumerate_group([{"1": "2", "2": "1"}], ["1", "2"])
    with pytest.raises(NotEquivariant):
        fold_exchange(two, swap)
    C = CartanDatum([[2, -1], [-1, 2]], ["1", "2"])
    with pytest.raises(NotAdmissible):
        fold_cartan(C, swap)
    # equivariant, admissible, but (1/#j) sum is not integral
    C = CartanDatum([[2, -1, 0], [-1, 2, 0], [0, 0, 2]], ["1", "2", "3"])
    g = enumerate_group([{"2": "3", "3": "2"}], ["1", "2", "3"])
    with pytest.raises(NotEquivariant):
        fold_cartan(C, g)


def test_fold_weights_by_orbit_size():
    labels = ["x", "y1", "y2", "y3"]
    C = CartanDatum([[2, -1, -1, -1], [-2, 2, 0, 0], [-2, 0, 2, 0], [-2, 0, 0, 2]], labels)
    g = enumerate_group([{"y1": "y2", "y2": "y3", "y3": "y1"}], labels)
    # (x, Y) averages over the 3-orbit, (Y, x) sums over it
    assert fold_cartan(C, g).entries == ((2, -1), (-6, 2))
    C = CartanDatum([[2, -1, -1], [-1, 2, 0], [-1, 0, 2]], ["x", "y1", "y2"])
    g = enumerate_group([{"y1": "y2", "y2": "y1"}], ["x", "y1", "y2"])
    assert fold_cartan(C, g).entries == ((2, -1), (-2, 2))


def test_unfold_g2_gives_d4_star():
    G2 = CartanDatum([[2, -1], [-3, 2]], ["1", "2"])
    C, g = unfold_cartan(G2)
    assert set(C.labels) == {"(1,0)", "(2,0)", "(2,1)", "(2,2)"}
    assert C.is_symmetric()
    assert recognize_dynkin(C).name == "D4"
    assert g.order == 3 and orbits(g).orbit_of("(2,0)") == ("(2,0)", "(2,1)", "(2,2)")
    assert fold_cartan(C, g) == G2


def test_unfold_b2_gives_a3():
    B2 = CartanDatum([[2, -2], [-1, 2]], ["1", "2"])
    assert B2.symmetrizer == (1, 2)
    C, g = unfold_cartan(B2)
    assert set(C.labels) == {"(1,0)", "(1,1)", "(2,0)"}
    assert C.entry("(1,0)", "(2,0)") == -1 and C.entry("(1,0)", "(1,1)") == 0
    assert g.order == 2
    assert fold_cartan(C, g) == B2


def test_unfold_simply_laced_is_trivial():
    A3 = cartan("A", 3)
    C, g = unfold_cartan(A3)
    assert C == A3 and g.order == 1


def test_unfold_exchange_examples():
    G = ExchangeMatrix.from_square([[0, 3], [-1, 0]])
    Bt, g = unfold_exchange(G)
    assert Bt.is_skew_symmetric() and g.order == 3
    Q, _ = d4_z3()
    from clusterfold import Quiver, quivers_isomorphic
    assert quivers_isomorphic(Quiver.from_exchange_matrix(Bt), Q) is not None
    assert fold_exchange(Bt, g) == G
    S = ExchangeMatrix.from_square([[0, 1], [-1, 0]])
    Bt, g = unfold_exchange(S)
    assert Bt == S and g.order == 1
    B = ExchangeMatrix.from_square([[0, 2], [-1, 0]])
    Bt, g = unfold_exchange(B)
    assert sorted(Bt.row_labels) == ["(1,0)", "(1,1)", "(2,0)"]
    assert Bt.entry("(1,0)", "(2,0)") == 1 and Bt.entry("(1,1)", "(2,0)") == 1
    assert fold_exchange(Bt, g) == B


def test_unfold_exchange_rejects_cycles():
    cyc = ExchangeMatrix.from_square([[0, 1, -1], [-1, 0, 1], [1, -1, 0]])
    with pytest.raises(NotAcyclic):
        unfold_exchange(cyc)


@pytest.mark.parametrize("family,rank", RANK4)
def test_round_trips_on_bundled_types(family, rank):
    C = cartan(family, rank)
    Ct, g = unfold_cartan(C)
    assert Ct.is_symmetric() and validate_admissible(Ct, g).ok
    assert fold_cartan(Ct, g) == C
    B = acyclic_orientation(C)
    Bt, h = unfold_exchange(B)
    assert Bt.is_skew_symmetric() and validate_admissible(Bt, h).ok
    assert fold_exchange(Bt, h) == B


def _random_symmetrizable_cartan(rng, n):
    B = random_skew_symmetrizable(n, rng, max_entry=3, max_d=3)
    return cartan_counterpart(B)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(0, 2**63 - 1))
def test_random_cartan_round_trip(n, seed):
    C = _random_symmetrizable_cartan(make_rng(seed), n)
    if max(C.symmetrizer) ** (n - 1) > 60:
        return  # keep the unfolded size small
    Ct, g = unfold_cartan(C)
    assert Ct.is_symmetric()
    assert fold_cartan(Ct, g) == C


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(0, 2**63 - 1))
def test_random_acyclic_exchange_round_trip(n, seed):
    B = random_skew_symmetrizable(n, make_rng(seed), max_entry=3, max_d=3)
    P = [list(r) for r in B.principal()]
    # keep only the upper orientation to force acyclicity
    for i in range(n):
        for j in range(i):
            if P[j][i] < 0:
                P[j][i], P[i][j] = -P[j][i], -P[i][j]
    B = ExchangeMatrix.from_square(P, list(B.col_labels))
    if max(B.left_symmetrizer()) ** (n - 1) > 60:
        return
    Bt, g = unfold_exchange(B)
    assert Bt.is_skew_symmetric()
    assert fold_exchange(Bt, g) == B


@pytest.mark.parametrize("name", sorted(FOLDING_FIXTURES))
def test_fixture_fold_invariants(name):
    Q, g = FOLDING_FIXTURES[name]()
    B = Q.exchange_matrix()
    F = fold_exchange(B, g)
    part = orbits(g)
    sizes = [len(part.by_label(c)) for c in F.col_labels]
    P = F.principal()
    n = len(P)
    assert all(P[i][j] * sizes[j] == -P[j][i] * sizes[i] for i in range(n) for j in range(n))
    assert cartan_counterpart(F) == fold_cartan(cartan_counterpart(B), g)


def test_fold_roots_a5_is_c3():
    labels = ["a", "b", "c", "b'", "a'"]
    A5 = CartanDatum(cartan_matrix("A", 5), labels)
    basis, roots = fold_roots(A5, swap_action(labels, [("a", "a'"), ("b", "b'")]))
    C3 = fold_cartan(A5, swap_action(labels, [("a", "a'"), ("b", "b'")]))
    assert set(roots) == set(positive_roots(C3).positive_roots)
    assert len(roots) == 9
    # hand list in the basis (a, b, c) with c long
    hand = {(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1), (1, 1, 1),
            (0, 2, 1), (1, 2, 1), (2, 2, 1)}
    assert tuple(basis) == ("{a,a'}", "{b,b'}", "c") and set(roots) == hand


def test_fold_roots_d4_is_g2():
    C, g = star_cartan()
    basis, roots = fold_roots(C, g)
    assert set(roots) == set(positive_roots(fold_cartan(C, g)).positive_roots)
    assert set(roots) == {(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)}


def test_fold_roots_trivial_group():
    A3 = cartan("A", 3)
    _, roots = fold_roots(A3, trivial_action(A3.labels))
    assert set(roots) == set(positive_roots(A3).positive_roots)


@pytest.mark.parametrize("name", sorted(FOLDING_FIXTURES))
def test_root_orbit_map_is_well_defined(name):
    Q, g = FOLDING_FIXTURES[name]()
    Ct = cartan_counterpart(Q.exchange_matrix())
    basis, roots = fold_roots(Ct, g)
    F = fold_cartan(Ct, g)
    assert len(roots) == len(positive_roots(F).positive_roots)
    part = orbits(g)
    idx = {v: basis.index(part.label(part.orbit_of(v))) for v in Ct.labels}
    image = {}
    for r in positive_roots(Ct).positive_roots:
        folded = [0] * len(basis)
        for v, c in zip(Ct.labels, r):
            folded[idx[v]] += c
        image[r] = tuple(folded)
    for r in image:
        for h in g.elements:
            perm = [r[Ct.labels.index(g.apply(g.inverse(h), v))] for v in Ct.labels]
            assert image[tuple(perm)] == image[r]
