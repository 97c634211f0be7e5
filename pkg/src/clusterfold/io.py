"""JSON and DOT serialization."""

import json

from .groups import enumerate_group
from .laurent import LaurentPoly
from .matrices import CartanDatum, ExchangeMatrix
from .quiver import Quiver

SAFE_INT = 2 ** 53


def _int(x):
    return int(x) if not isinstance(x, str) else int(x.strip())


def encode_ints(obj):
    """Replace integers beyond 2^53 by decimal strings, recursively."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > SAFE_INT else obj
    if isinstance(obj, dict):
        return {k: encode_ints(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode_ints(v) for v in obj]
    return obj


def dumps(obj):
    """Canonical JSON text: sorted keys, compact separators, trailing newline."""
    return json.dumps(encode_ints(obj), sort_keys=True, separators=(",", ":")) + "\n"


def matrix_from_json(data):
    if "arrows" in data:
        q = quiver_from_json(data)
        return q.exchange_matrix(data.get("frozen", ()))
    entries = [[_int(x) for x in row] for row in data["entries"]]
    if "row_labels" in data:
        cols = data.get("col_labels", data["row_labels"])
        return ExchangeMatrix(entries, data["row_labels"], cols)
    return ExchangeMatrix.from_square(entries, data.get("labels"), data.get("frozen", ()))


def cartan_from_json(data):
    entries = [[_int(x) for x in row] for row in data["entries"]]
    labels = data.get("labels") or data.get("row_labels")
    sym = data.get("symmetrizer")
    return CartanDatum(entries, labels, None if sym is None else [_int(x) for x in sym])


def action_from_json(data, labels=None):
    verts = data.get("vertices") or labels
    return enumerate_group(data.get("generators", []), verts, data.get("orbit_names"))


def action_to_json(action):
    out = action.to_json()
    if action.orbit_names:
        out["orbit_names"] = dict(action.orbit_names)
    out["order"] = action.order
    return out


def quiver_from_json(data):
    if "arrows" not in data and "entries" in data:
        return Quiver.from_exchange_matrix(matrix_from_json(data))
    arrows = []
    for a in data.get("arrows", []):
        if isinstance(a, dict):
            arrows.append((a["from"], a["to"], _int(a.get("mult", 1))))
        else:
            arrows.append(tuple(a))
    return Quiver(data["vertices"], arrows)


def poly_from_json(data):
    return LaurentPoly.from_json(data)


def matrix_to_dot(B):
    """Valued quiver of the square part plus frozen rows; edge label is the pair (b_ij, b_ji)."""
    lines = ["digraph B {"]
    for r in B.row_labels:
        shape = "box" if r not in B.mutable_cols else "ellipse"
        lines.append(f'  "{r}" [shape={shape}];')
    for r in B.row_labels:
        for c in B.col_labels:
            v = B.entry(r, c)
            if v > 0:
                back = B.entry(c, r) if r in B.mutable_cols else -v
                lines.append(f'  "{r}" -> "{c}" [label="{v},{back}"];')
            elif v < 0 and r not in B.mutable_cols:
                lines.append(f'  "{c}" -> "{r}" [label="{-v}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def quiver_to_dot(Q):
    lines = ["digraph Q {"]
    for v in Q.vertices:
        lines.append(f'  "{v}";')
    for s, t, m in Q.arrows:
        lines.append(f'  "{s}" -> "{t}" [label="{m}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
