"""Explore small exchange graphs and check cluster monomial independence.

Run: python3 demos/exchange_graphs.py
"""

from clusterfold import (
    ExchangeMatrix,
    Quiver,
    check_linear_independence,
    cluster_monomials,
    explore,
    ntheta_matrix,
    specialize_graph,
)

for name, M in [("A2", [[0, 1], [-1, 0]]), ("B2", [[0, 2], [-1, 0]]), ("G2", [[0, 3], [-1, 0]])]:
    g = explore(ExchangeMatrix.from_square(M))
    mons = cluster_monomials(g, 3)
    print(f"{name}: {g.num_seeds} seeds, {len(g.variables)} variables, "
          f"{len(mons)} monomials of degree <= 3, independent={check_linear_independence(mons)}")

g = explore(ExchangeMatrix.from_square([[0, 2], [-2, 0]]), max_seeds=30)
print("Kronecker matrix truncated:", g.truncated, g.reason)

B = ntheta_matrix(Quiver(["1", "2"], [("1", "2")]), 1)
g = explore(B)
print("slice matrix rows:", B.row_labels)
for v in sorted(specialize_graph(g, list(B.frozen_rows))):
    print("  ", v)
