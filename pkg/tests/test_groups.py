import pytest
from hypothesis import given, settings, strategies as st

from clusterfold import (
    CartanDatum,
    ExchangeMatrix,
    Quiver,
    enumerate_group,
    orbits,
    stabilizer,
    trivial_action,
    validate_admissible,
)
from clusterfold.errors import GroupTooLarge, LabelMismatch, NotAPermutation, UnknownVertex

from builders import a_odd_z2, d4_s3, d4_z3

STAR = ["1", "1'", "1''", "2"]


def test_three_cycle_generates_order_three():
    _, g = d4_z3()
    assert g.order == 3


def test_empty_generators_give_trivial_group():
    g = enumerate_group([], STAR)
    assert g.order == 1 and g.elements == (g.identity,)


def test_two_transpositions_generate_s3():
    _, g = d4_s3()
    assert g.order == 6


def test_orbits_of_star_and_a5():
    _, g = d4_z3()
    assert orbits(g).orbits == (("1", "1'", "1''"), ("2",))
    labels = ["a", "b", "c", "b'", "a'"]
    h = enumerate_group([{"a": "a'", "a'": "a", "b": "b'", "b'": "b"}], labels)
    assert sorted(orbits(h).orbits) == [("a", "a'"), ("b", "b'"), ("c",)]
    assert orbits(trivial_action(labels)).orbits == tuple((x,) for x in sorted(labels))


def test_stabilizers():
    _, s3 = d4_s3()
    assert stabilizer(s3, "1").order == 2
    _, z3 = d4_z3()
    assert stabilizer(z3, "1").order == 1
    assert stabilizer(z3, "2").order == 3


def test_admissibility_reports():
    Q, g = a_odd_z2(3)
    assert validate_admissible(Q, g).ok
    two = Quiver(["1", "2"], [("1", "2")])
    swap = enumerate_group([{"1": "2", "2": "1"}], ["1", "2"])
    rep = validate_admissible(two, swap)
    assert not rep.equivariant
    assert validate_admissible(two, trivial_action(["1", "2"])).ok
    sym = Quiver(["1", "2"], [("1", "2"), ("2", "1")])
    rep = validate_admissible(sym, swap)
    assert rep.equivariant and not rep.admissible


def test_validate_accepts_matrices_and_cartan():
    Q, g = d4_z3()
    assert validate_admissible(Q.exchange_matrix(), g).ok
    C = CartanDatum([[2, 0, 0, -1], [0, 2, 0, -1], [0, 0, 2, -1], [-1, -1, -1, 2]], Q.vertices)
    assert validate_admissible(C, g).ok
    with pytest.raises(LabelMismatch):
        validate_admissible(ExchangeMatrix.from_square([[0]], ["z"]), g)


def test_bad_generators():
    with pytest.raises(NotAPermutation):
        enumerate_group([{"1": "2"}], ["1", "2"])
    with pytest.raises(NotAPermutation):
        enumerate_group([{"1": "9", "9": "1"}], ["1", "2"])
    with pytest.raises(UnknownVertex):
        stabilizer(trivial_action(["1"]), "9")


def test_group_cap(monkeypatch):
    labels = [str(i) for i in range(6)]
    gens = [{"0": "1", "1": "0"}, {str(i): str((i + 1) % 6) for i in range(6)}]
    with pytest.raises(GroupTooLarge):
        enumerate_group(gens, labels, cap=100)
    monkeypatch.setenv("CLUSTER_MAX_GROUP", "100")
    with pytest.raises(GroupTooLarge):
        enumerate_group(gens, labels)
    monkeypatch.setenv("CLUSTER_MAX_GROUP", "720")
    assert enumerate_group(gens, labels).order == 720


def _perm_strategy(n):
    return st.permutations(list(range(n)))


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: st.lists(_perm_strategy(n), max_size=3).map(lambda g: (n, g))))
def test_orbit_stabilizer_and_generator_order(data):
    n, perms = data
    labels = [f"v{i}" for i in range(n)]
    gens = [{labels[i]: labels[p[i]] for i in range(n)} for p in perms]
    g = enumerate_group(gens, labels)
    for v in labels:
        assert len(g.orbit_of(v)) * stabilizer(g, v).order == g.order
    assert orbits(enumerate_group(list(reversed(gens)), labels)).orbits == orbits(g).orbits


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 5), st.integers(0, 2**32))
def test_trivial_group_always_admissible(n, seed):
    from clusterfold.mutation import make_rng, random_skew_symmetrizable
    B = random_skew_symmetrizable(n, make_rng(seed))
    assert validate_admissible(B, trivial_action(B.row_labels)).admissible
