"""Equivariant quivers for the star with Z/3 and S3, and the E6 flip.

Run: python3 demos/equivariant_quivers.py
"""

from clusterfold import Quiver, build_q_gamma, check_double_commutes, enumerate_group

star = Quiver(["1", "1'", "1''", "2"], [("1", "2"), ("1'", "2"), ("1''", "2")])
actions = {
    "Z/3": enumerate_group([{"1": "1'", "1'": "1''", "1''": "1"}], star.vertices),
    "S3": enumerate_group([{"1": "1'", "1'": "1"}, {"1'": "1''", "1''": "1'"}], star.vertices),
}
for name, action in actions.items():
    QG = build_q_gamma(star, action)
    print(name, "vertices:", QG.vertices)
    print(name, "arrows:", QG.arrows)
    print(name, "double commutes:", check_double_commutes(star, action))

e6 = Quiver(["1", "2", "3", "4", "2'", "1'"],
            [("1", "2"), ("2", "3"), ("1'", "2'"), ("2'", "3"), ("4", "3")])
flip = enumerate_group([{"1": "1'", "1'": "1", "2": "2'", "2'": "2"}], e6.vertices)
print("E6 flip:", build_q_gamma(e6, flip).arrows)
