"""Root systems, reduced words and the reduced-word exchange matrix B((i), K)."""

import math
from dataclasses import dataclass, field

from .dynkin import recognize_dynkin
from .errors import InvalidWord, NotFiniteType
from .matrices import CartanDatum, ExchangeMatrix

INF = math.inf


@dataclass(frozen=True, eq=False)
class RootSystem:
    cartan: CartanDatum
    positive_roots: tuple
    simple_reflections: tuple = field(repr=False)

    @property
    def labels(self):
        return self.cartan.labels

    def reflect(self, i, v):
        """s_i(v) = v - <alpha_i^vee, v> alpha_i on simple-root coordinates."""
        row = self.cartan.entries[i]
        c = sum(a * x for a, x in zip(row, v))
        out = list(v)
        out[i] -= c
        return tuple(out)

    def __len__(self):
        return len(self.positive_roots)


def _reflection_matrix(C, i):
    n = len(C)
    S = [[int(r == c) for c in range(n)] for r in range(n)]
    for c in range(n):
        S[i][c] -= C[i][c]
    return tuple(tuple(r) for r in S)


def positive_roots(C):
    """Close the simple roots under simple reflections, keeping positive vectors."""
    if recognize_dynkin(C) is None:
        raise NotFiniteType("not a finite-type Cartan matrix")
    n = C.rank
    rs = RootSystem(C, (), tuple(_reflection_matrix(C.entries, i) for i in range(n)))
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple)
    stack = list(simple)
    while stack:
        v = stack.pop()
        for i in range(n):
            w = rs.reflect(i, v)
            if all(x >= 0 for x in w) and any(w) and w not in found:
                found.add(w)
                stack.append(w)
    roots = tuple(sorted(found, key=lambda v: (sum(v), tuple(-x for x in v))))
    return RootSystem(C, roots, rs.simple_reflections)


@dataclass(frozen=True)
class ReducedWord:
    letters: tuple

    @property
    def length(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __len__(self):
        return len(self.letters)


def _length_steps(C, letters):
    """Yield, for each prefix, whether appending the letter increases length.

    w s_i > w  iff  w(alpha_i) is positive; w is tracked as a matrix whose
    columns are the images of the simple roots.
    """
    n = C.rank
    W = [[int(r == c) for c in range(n)] for r in range(n)]
    for lab in letters:
        i = C.index(lab)
        col = [W[r][i] for r in range(n)]
        yield all(x >= 0 for x in col)
        # W s_i sends alpha_c to W(alpha_c - a_ic alpha_i)
        row = C.entries[i]
        for c in range(n):
            a = row[c]
            if a:
                for r in range(n):
                    W[r][c] -= a * col[r]


def is_reduced(C, letters):
    return all(_length_steps(C, letters))


def word_length_positive_roots(C):
    return len(positive_roots(C).positive_roots)


def longest_word_with_parabolic_prefix(C, K=()):
    """Greedy reduced word for w0 whose first r_K letters give w0 of W_K.

    At each step the lowest label (in Cartan label order) that lengthens the
    current element is appended; first within K, then in the whole group.
    """
    if recognize_dynkin(C) is None:
        raise NotFiniteType("not a finite-type Cartan matrix")
    K = set(K)
    letters = []

    def extend(allowed):
        while True:
            for lab in C.labels:
                if lab in allowed and all(_length_steps(C, letters + [lab])):
                    letters.append(lab)
                    break
            else:
                return

    extend(K)
    extend(set(C.labels))
    return ReducedWord(tuple(letters))


def validate_word(C, word, K=()):
    """Raise InvalidWord unless ``word`` is a reduced word of w0 with a W_K prefix."""
    letters = list(word.letters if isinstance(word, ReducedWord) else word)
    if any(l not in C.labels for l in letters):
        raise InvalidWord("word uses unknown generators")
    r = len(positive_roots(C).positive_roots)
    if len(letters) != r:
        raise InvalidWord(f"length {len(letters)} differs from the {r} positive roots")
    if not is_reduced(C, letters):
        raise InvalidWord("word is not reduced")
    K = [x for x in C.labels if x in set(K)]
    rK = len(positive_roots(C.restrict(K)).positive_roots) if K else 0
    if any(l not in K for l in letters[:rK]):
        raise InvalidWord("prefix is not a word for the longest element of W_K")
    return ReducedWord(tuple(letters))


def bik_indexing(C, word, K):
    """Index data for B((i), K): e((i)), successors, t_j, rows and columns.

    Positions are 1-based integers; generator symbols are strings and sort
    before every position.
    """
    letters = list(word.letters if isinstance(word, ReducedWord) else word)
    ell = len(letters)
    K = [x for x in C.labels if x in set(K)]
    r = ell
    rK = len(positive_roots(C.restrict(K)).positive_roots) if K else 0
    plus = {}
    for n in range(1, ell + 1):
        nxt = next((m for m in range(n + 1, ell + 1) if letters[m - 1] == letters[n - 1]), None)
        if nxt is not None:
            plus[n] = nxt
    e = sorted(plus)
    for j in C.labels:
        first = next((m for m in range(1, ell + 1) if letters[m - 1] == j), None)
        if first is not None:
            plus[j] = first
    t = {}
    for j in C.labels:
        if j in K:
            t[j] = max(m for m in range(1, rK + 1) if letters[m - 1] == j)
        else:
            t[j] = j
    cols = [n for n in e if rK < n <= r]
    rows = cols + [t[j] for j in C.labels]
    return {"e": e, "plus": plus, "t": t, "rows": rows, "cols": cols, "r": r, "r_K": rK,
            "letters": letters}


def _letter(letters, x):
    return x if isinstance(x, str) else letters[x - 1]


def _pos(x):
    return 0 if isinstance(x, str) else x


def bik_entry(C, idx, m, n):
    letters, plus = idx["letters"], idx["plus"]
    mp, np_ = plus.get(m, INF), plus.get(n, INF)
    km, kn = _pos(m), _pos(n)
    if mp == n:
        return 1
    if not isinstance(m, str) and np_ == m:
        return -1
    c = C.entry(_letter(letters, m), _letter(letters, n))
    if kn < km < np_ < mp:
        return -c
    if km < kn < mp < np_:
        return c
    return 0


def row_label(x, C):
    if isinstance(x, str):
        return f"t_{x}" if x.lstrip("-").isdigit() else x
    return str(x)


def build_bik(C, word, K=()):
    """The exchange matrix B((i), K) for a reduced word of w0 with W_K prefix."""
    word = validate_word(C, word, K)
    idx = bik_indexing(C, word, K)
    rows, cols = idx["rows"], idx["cols"]
    entries = [[bik_entry(C, idx, m, n) for n in cols] for m in rows]
    return ExchangeMatrix(entries, [row_label(m, C) for m in rows], [str(n) for n in cols])


def full_rank_witness(C, word, K=()):
    """Rows n^- (with (n^-)^+ = n), one per column, forming a unitriangular block.

    Returns the list of row labels in column order, or None if the block is
    not lower triangular with unit diagonal.
    """
    word = validate_word(C, word, K)
    idx = bik_indexing(C, word, K)
    B = build_bik(C, word, K)
    inverse = {v: k for k, v in idx["plus"].items()}
    chosen = []
    for n in idx["cols"]:
        m = inverse.get(n)
        if m is None or m not in idx["rows"]:
            return None
        chosen.append(row_label(m, C))
    cols = [str(n) for n in idx["cols"]]
    for a, r in enumerate(chosen):
        for b, c in enumerate(cols):
            v = B.entry(r, c)
            if (a == b and v != 1) or (b > a and v != 0):
                return None
    return chosen


@dataclass(frozen=True)
class FlagCase:
    bik: ExchangeMatrix
    cluster_type: object
    num_cluster_variables: int
    num_coefficients: int
    folded: CartanDatum
    word: ReducedWord
    K: tuple

    @property
    def type_name(self):
        return None if self.cluster_type is None else self.cluster_type.name

    def to_json(self):
        return {"cluster_type": self.type_name, "variables": self.num_cluster_variables,
                "coefficients": self.num_coefficients, "word": list(self.word.letters),
                "K": list(self.K), "bik": self.bik.to_json()}


def classify_flag_case(C, action, J, budget=10**6):
    """Fold, build B((i), K) for K = complement of J, and identify its cluster type.

    ``J`` may list unfolded vertex labels or folded orbit labels; it must be
    a union of orbits.
    """
    from .cluster import is_finite_type
    from .folding import fold_cartan
    from .groups import orbits

    part = orbits(action)
    J = {str(x) for x in J}
    chosen = set()
    for o in part.orbits:
        name = part.label(o)
        hit = set(o) & J
        if name in J or (hit and hit == set(o)):
            chosen.add(name)
        elif hit:
            raise InvalidWord(f"J is not stable: it meets orbit {name} partially")
    if not chosen:
        raise InvalidWord("J must be nonempty")
    D = fold_cartan(C, action)
    K = tuple(x for x in D.labels if x not in chosen)
    word = longest_word_with_parabolic_prefix(D, K)
    B = build_bik(D, word, K)
    idx = bik_indexing(D, word, K)
    nvars = idx["r"] - idx["r_K"]
    assert nvars == len(B.row_labels)
    ctype = is_finite_type(B, budget=budget)
    return FlagCase(B, ctype, nvars, len(part.orbits), D, word, K)
