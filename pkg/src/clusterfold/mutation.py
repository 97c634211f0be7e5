"""Matrix mutation, orbit mutation and the fold/mutate commutation check."""

import itertools
from dataclasses import dataclass
from math import gcd

import numpy as np

from .errors import (
    AdmissibilityLost,
    FrozenColumn,
    FrozenOrbit,
    NonCommutingOrbit,
    NotEquivariant,
    UnknownColumn,
)
from .folding import fold_exchange
from .groups import orbits, validate_admissible
from .matrices import ExchangeMatrix


def _mutate_entries(E, k_row, k_col):
    out = []
    for z, row in enumerate(E):
        new = []
        bzk = row[k_col]
        for y, b in enumerate(row):
            if z == k_row or y == k_col:
                new.append(-b)
                continue
            bky = E[k_row][y]
            delta = abs(bzk) * bky + bzk * abs(bky)
            assert delta % 2 == 0
            new.append(b + delta // 2)
        out.append(tuple(new))
    return tuple(out)


def mutate(B, k):
    """Fomin-Zelevinsky mutation at the mutable column ``k``."""
    k = str(k)
    if k not in B.row_labels:
        raise UnknownColumn(f"unknown label {k!r}")
    if k not in B.mutable_cols:
        raise FrozenColumn(f"label {k!r} is frozen")
    E = _mutate_entries(B.entries, B.row_index(k), B.col_index(k))
    return ExchangeMatrix(E, B.row_labels, B.col_labels, B.symmetrizer)


def mutate_sequence(B, ks):
    for k in ks:
        B = mutate(B, k)
    return B


def resolve_orbit(action, orbit):
    """Accept an orbit as a label collection or as its display name."""
    part = orbits(action)
    if isinstance(orbit, str):
        for o in part.orbits:
            if part.label(o) == orbit or (len(o) == 1 and o[0] == orbit):
                return o
        raise UnknownColumn(f"no orbit named {orbit!r}")
    key = tuple(sorted(str(v) for v in orbit))
    if key not in part.orbits:
        raise UnknownColumn(f"{list(key)} is not an orbit of the action")
    return key


def orbit_mutate(B, action, orbit, verify="reverse"):
    """Mutate at every member of a commuting orbit.

    ``verify`` controls the order check: "reverse" compares with the reversed
    order, "all" tries every order (orbits of size at most 4), "none" skips.
    """
    members = resolve_orbit(action, orbit)
    if any(v not in B.mutable_cols for v in members):
        raise FrozenOrbit(f"orbit {list(members)} is not mutable")
    report = validate_admissible(B, action)
    if not report.equivariant:
        raise NotEquivariant("matrix is not invariant under the action")
    for a in members:
        for b in members:
            if a != b and B.entry(a, b) != 0:
                raise NonCommutingOrbit(f"entry ({a},{b}) = {B.entry(a, b)}")
    result = mutate_sequence(B, members)
    orders = []
    if verify == "reverse" and len(members) > 1:
        orders = [tuple(reversed(members))]
    elif verify == "all" and 1 < len(members) <= 4:
        orders = list(itertools.permutations(members))[1:]
    for order in orders:
        if mutate_sequence(B, order) != result:
            raise NonCommutingOrbit(f"order {order} gives a different matrix")
    if not validate_admissible(result, action).equivariant:
        raise NotEquivariant("orbit mutation broke equivariance")
    return result


def _within_orbit_zero(B, part):
    for o in part.orbits:
        for a in o:
            for b in o:
                if a != b and b in B.mutable_cols and B.entry(a, b) != 0:
                    return False
    return True


@dataclass(frozen=True)
class CommutationResult:
    holds: bool
    steps: int
    mismatch: tuple = None
    folded: ExchangeMatrix = None
    expected: ExchangeMatrix = None

    def __bool__(self):
        return self.holds


def check_commutation(B, action, orbit_sequence):
    """Compare fold(orbit mutations of B) with mutations of fold(B).

    Raises AdmissibilityLost (``info["step"]`` is the 1-based step) when an
    intermediate matrix acquires an entry inside an orbit.
    """
    part = orbits(action)
    if not _within_orbit_zero(B, part):
        raise AdmissibilityLost("input is not admissible", step=0)
    folded = fold_exchange(B, action)
    current = B
    for step, orbit in enumerate(orbit_sequence, start=1):
        members = resolve_orbit(action, orbit)
        current = orbit_mutate(current, action, members)
        folded = mutate(folded, part.label(members))
        if not _within_orbit_zero(current, part):
            raise AdmissibilityLost(f"admissibility lost after step {step}", step=step)
    got = fold_exchange(current, action)
    if got == folded:
        return CommutationResult(True, len(orbit_sequence), None, got, folded)
    for r in folded.row_labels:
        for c in folded.col_labels:
            if got.entry(r, c) != folded.entry(r, c):
                return CommutationResult(False, len(orbit_sequence),
                                         (r, c, got.entry(r, c), folded.entry(r, c)), got, folded)
    return CommutationResult(False, len(orbit_sequence), None, got, folded)


def make_rng(seed):
    """Counter-based generator so seeded runs agree across platforms."""
    return np.random.Generator(np.random.Philox(int(seed) & (2**64 - 1)))


def random_orbit_sequences(B, action, count, max_length, seed):
    """Random sequences of mutable orbits with no immediate repeats."""
    part = orbits(action)
    choices = [o for o in part.orbits if all(v in B.mutable_cols for v in o)]
    rng = make_rng(seed)
    out = []
    for _ in range(count):
        length = int(rng.integers(1, max_length + 1))
        seq = []
        for _ in range(length):
            pool = [o for o in choices if not seq or o != seq[-1]] or choices
            seq.append(pool[int(rng.integers(len(pool)))])
        out.append(seq)
    return out


def random_skew_symmetrizable(rank, rng, max_entry=3, max_d=3, frozen=0):
    """Random integer matrix with a random left skew-symmetrizer.

    Returns an ExchangeMatrix with ``frozen`` extra rows.
    """
    L = [int(rng.integers(1, max_d + 1)) for _ in range(rank)]
    M = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        for j in range(i + 1, rank):
            g = gcd(L[i], L[j])
            k = int(rng.integers(-max_entry, max_entry + 1))
            M[i][j] = k * (L[j] // g)
            M[j][i] = -k * (L[i] // g)
    for _ in range(frozen):
        M.append([int(rng.integers(-max_entry, max_entry + 1)) for _ in range(rank)])
    labels = [str(i + 1) for i in range(rank)]
    rows = labels + [f"f{i + 1}" for i in range(frozen)]
    return ExchangeMatrix(M, rows, labels)
