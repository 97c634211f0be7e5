"""Exact multivariate Laurent polynomials with integer coefficients."""

from .errors import InexactDivision


class LaurentPoly:
    """Map from integer exponent tuples to nonzero integer coefficients.

    ``names`` are display names for the variables; arithmetic requires the
    operands to share the same number of variables.
    """

    __slots__ = ("terms", "nvars", "names", "_key")

    def __init__(self, terms, nvars, names=None):
        clean = {}
        for exp, c in dict(terms).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars:
                raise ValueError("exponent length does not match nvars")
            c = int(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
                if clean[exp] == 0:
                    del clean[exp]
        self.terms = clean
        self.nvars = nvars
        self.names = tuple(names) if names is not None else tuple(f"x{i + 1}" for i in range(nvars))
        self._key = None

    # constructors

    @classmethod
    def constant(cls, c, nvars, names=None):
        return cls({(0,) * nvars: c}, nvars, names)

    @classmethod
    def variable(cls, i, nvars, names=None):
        exp = [0] * nvars
        exp[i] = 1
        return cls({tuple(exp): 1}, nvars, names)

    @classmethod
    def monomial(cls, exp, nvars, names=None, coef=1):
        return cls({tuple(exp): coef}, nvars, names)

    def _like(self, terms):
        return LaurentPoly(terms, self.nvars, self.names)

    # comparison

    def key(self):
        """Canonical hashable form: terms sorted lexicographically by exponent."""
        if self._key is None:
            self._key = tuple(sorted(self.terms.items()))
        return self._key

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.nvars)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash(self.key())

    def __lt__(self, other):
        return self.key() < other.key()

    def is_zero(self):
        return not self.terms

    def is_monomial(self):
        return len(self.terms) == 1

    # arithmetic

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.nvars)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return self._like(out)

    __radd__ = __add__

    def __neg__(self):
        return self._like({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self._like({e: c * other for e, c in self.terms.items()})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return self._like(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            if not self.is_monomial():
                raise InexactDivision("negative power of a non-monomial")
            (e, c), = self.terms.items()
            if abs(c) != 1:
                raise InexactDivision("negative power of a non-unit coefficient")
            return self._like({tuple(x * k for x in e): c ** (-k)})
        out = LaurentPoly.constant(1, self.nvars, self.names)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def _bounds(self):
        lo = [min(e[i] for e in self.terms) for i in range(self.nvars)]
        hi = [max(e[i] for e in self.terms) for i in range(self.nvars)]
        return lo, hi

    def exact_div(self, other):
        """Quotient q with q * other == self, or InexactDivision."""
        if other.is_zero():
            raise InexactDivision("division by zero")
        if self.is_zero():
            return self._like({})
        if other.is_monomial():
            (e2, c2), = other.terms.items()
            out = {}
            for e, c in self.terms.items():
                if c % c2:
                    raise InexactDivision("coefficient not divisible")
                out[tuple(a - b for a, b in zip(e, e2))] = c // c2
            return self._like(out)
        # per-coordinate exponent ranges are additive under multiplication
        alo, ahi = self._bounds()
        blo, bhi = other._bounds()
        qlo = [a - b for a, b in zip(alo, blo)]
        qhi = [a - b for a, b in zip(ahi, bhi)]
        if any(lo > hi for lo, hi in zip(qlo, qhi)):
            raise InexactDivision("Newton box mismatch")
        lead_b = max(other.terms)
        cb = other.terms[lead_b]
        rem = dict(self.terms)
        quot = {}
        while rem:
            lead = max(rem)
            c = rem[lead]
            if c % cb:
                raise InexactDivision("coefficient not divisible")
            q = tuple(a - b for a, b in zip(lead, lead_b))
            if any(x < lo or x > hi for x, lo, hi in zip(q, qlo, qhi)):
                raise InexactDivision("quotient leaves its Newton box")
            qc = c // cb
            quot[q] = qc
            for e, cc in other.terms.items():
                t = tuple(a + b for a, b in zip(q, e))
                v = rem.get(t, 0) - qc * cc
                if v:
                    rem[t] = v
                else:
                    rem.pop(t, None)
        return self._like(quot)

    def __truediv__(self, other):
        return self.exact_div(other)

    # evaluation and substitution

    def substitute_one(self, indices):
        """Set the variables at ``indices`` to 1 (they keep their slot)."""
        idx = set(indices)
        out = {}
        for e, c in self.terms.items():
            e2 = tuple(0 if i in idx else x for i, x in enumerate(e))
            out[e2] = out.get(e2, 0) + c
        return self._like(out)

    def drop_variables(self, indices):
        """Specialize the given variables to 1 and remove them from the ring."""
        idx = set(indices)
        keep = [i for i in range(self.nvars) if i not in idx]
        out = {}
        for e, c in self.terms.items():
            e2 = tuple(e[i] for i in keep)
            out[e2] = out.get(e2, 0) + c
        return LaurentPoly(out, len(keep), [self.names[i] for i in keep])

    def evaluate(self, values):
        from fractions import Fraction
        total = Fraction(0)
        for e, c in self.terms.items():
            t = Fraction(c)
            for v, k in zip(values, e):
                t *= Fraction(v) ** k
            total += t
        return total

    def max_abs_degree(self):
        return max((sum(abs(x) for x in e) for e in self.terms), default=0)

    def coefficients(self):
        return list(self.terms.values())

    # display and serialization

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(self.names, e) if k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self):
        return {"vars": list(self.names),
                "terms": [{"exp": list(e), "coef": c} for e, c in self.key()]}

    @classmethod
    def from_json(cls, data):
        names = data["vars"]
        return cls({tuple(t["exp"]): int(t["coef"]) for t in data["terms"]}, len(names), names)

    def __reduce__(self):
        return (LaurentPoly, (self.terms, self.nvars, self.names))
