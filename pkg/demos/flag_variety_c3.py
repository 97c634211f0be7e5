"""Build B((i), K) for C3 and classify a few partial flag varieties.

Run: python3 demos/flag_variety_c3.py
"""

from clusterfold import (
    CartanDatum,
    build_bik,
    classify_flag_case,
    enumerate_group,
    fold_cartan,
    full_rank_witness,
)
from clusterfold.dynkin import cartan_matrix

labels = ["a", "b", "c", "b'", "a'"]
A5 = CartanDatum(cartan_matrix("A", 5), labels)
flip = enumerate_group([{"a": "a'", "a'": "a", "b": "b'", "b'": "b"}], labels)
C3 = fold_cartan(A5, flip)
print("folded Cartan matrix:", [list(r) for r in C3.entries])

word = ("a", "b", "a", "c", "b", "a", "c", "b", "c")
C3 = CartanDatum(C3.entries, ["a", "b", "c"])
B = build_bik(C3, word, ["a", "b"])
print("rows:", B.row_labels, "columns:", B.col_labels)
for label, row in zip(B.row_labels, B.entries):
    print(f"  {label:>3}", list(row))
print("unitriangular rows:", full_rank_witness(C3, word, ["a", "b"]))

for J in (["c"], ["a", "a'"], ["a", "b", "c", "b'", "a'"]):
    res = classify_flag_case(A5, flip, J)
    kind = res.type_name or "infinite"
    print(f"J={J}: type {kind}, {res.num_cluster_variables} variables, "
          f"{res.num_coefficients} coefficients")
