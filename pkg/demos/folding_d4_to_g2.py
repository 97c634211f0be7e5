"""Fold the D4 star along its rotation and compare with the G2 side.

Run: python3 demos/folding_d4_to_g2.py
"""

from clusterfold import (
    ExchangeMatrix,
    Quiver,
    check_commutation,
    enumerate_group,
    explore,
    fold_exchange,
    is_finite_type,
    random_orbit_sequences,
    unfold_exchange,
)

star = Quiver(["1", "2", "3", "4"], [("1", "4"), ("2", "4"), ("3", "4")])
rotation = enumerate_group([{"1": "2", "2": "3", "3": "1"}], star.vertices)
B = star.exchange_matrix()
G = fold_exchange(B, rotation)
print("folded rows:", G.row_labels)
print("folded matrix:", [list(r) for r in G.entries])
print("cluster type:", is_finite_type(G).name)

# orbit mutation upstairs agrees with ordinary mutation downstairs
seqs = random_orbit_sequences(B, rotation, 100, 8, seed=2024)
print("commutes on 100 random words:", all(check_commutation(B, rotation, s) for s in seqs))

# the G2 exchange graph has 8 seeds; its unfolding is the D4 graph with 50
print("seeds of G2:", explore(G).num_seeds)
Bt, action = unfold_exchange(ExchangeMatrix.from_square([[0, 3], [-1, 0]]))
print("unfolded vertices:", Bt.row_labels, "group order:", action.order)
print("seeds of the unfolding:", explore(Bt).num_seeds)
