"""Exact arithmetic in the cyclotomic integers Z[zeta_N]."""

from fractions import Fraction
from functools import lru_cache
from math import lcm


def _polymul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _polydiv_monic(a, m):
    """Quotient and remainder of a by a monic polynomial m (coefficients low to high)."""
    a = list(a)
    dm = len(m) - 1
    q = [0] * max(len(a) - dm, 1)
    for k in range(len(a) - 1, dm - 1, -1):
        c = a[k]
        if c:
            q[k - dm] = c
            for i in range(dm + 1):
                a[k - dm + i] -= c * m[i]
    rem = a[:dm] + [0] * max(0, dm - len(a))
    return q, rem


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Coefficients (low to high) of the n-th cyclotomic polynomial."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _polydiv_monic(poly, cyclotomic_polynomial(d))
            assert not any(rem)
    return tuple(poly)


def phi(n):
    return len(cyclotomic_polynomial(n)) - 1


class Cyclo:
    """Element of Z[zeta_N] stored as coefficients on 1, zeta, ..., zeta^(phi(N)-1)."""

    __slots__ = ("N", "coeffs")

    def __init__(self, N, coeffs):
        self.N = int(N)
        _, rem = _polydiv_monic(list(coeffs) or [0], cyclotomic_polynomial(self.N))
        self.coeffs = tuple(rem)

    @classmethod
    def integer(cls, k, N=1):
        return cls(N, [k])

    @classmethod
    def root(cls, N, k=1):
        """zeta_N ** k."""
        k %= N
        c = [0] * (k + 1)
        c[k] = 1
        return cls(N, c)

    def lift(self, M):
        """Same element in Z[zeta_M] for a multiple M of N."""
        if M == self.N:
            return self
        if M % self.N:
            raise ValueError(f"{M} is not a multiple of {self.N}")
        step = M // self.N
        c = [0] * (step * (len(self.coeffs) - 1) + 1)
        for i, x in enumerate(self.coeffs):
            c[i * step] = x
        return Cyclo(M, c)

    def _common(self, other):
        if isinstance(other, int):
            other = Cyclo.integer(other, self.N)
        M = lcm(self.N, other.N)
        return self.lift(M), other.lift(M)

    def __add__(self, other):
        a, b = self._common(other)
        n = max(len(a.coeffs), len(b.coeffs))
        return Cyclo(a.N, [(a.coeffs[i] if i < len(a.coeffs) else 0) +
                           (b.coeffs[i] if i < len(b.coeffs) else 0) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.N, [-x for x in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        a, b = self._common(other)
        return Cyclo(a.N, _polymul(list(a.coeffs), list(b.coeffs)))

    __rmul__ = __mul__

    def conj(self):
        """Complex conjugate: zeta -> zeta^(-1)."""
        out = Cyclo.integer(0, self.N)
        for i, x in enumerate(self.coeffs):
            if x:
                out = out + Cyclo.root(self.N, -i) * x
        return out

    def rational(self):
        """The value as an integer if it lies in Z, else None."""
        if all(x == 0 for x in self.coeffs[1:]):
            return self.coeffs[0] if self.coeffs else 0
        return None

    def __eq__(self, other):
        if isinstance(other, int):
            other = Cyclo.integer(other)
        if not isinstance(other, Cyclo):
            return NotImplemented
        a, b = self._common(other)
        n = max(len(a.coeffs), len(b.coeffs))
        pad = lambda c: tuple(c) + (0,) * (n - len(c))
        return pad(a.coeffs) == pad(b.coeffs)

    def __hash__(self):
        r = self.rational()
        return hash(r) if r is not None else hash((self.N, self.coeffs))

    def __repr__(self):
        r = self.rational()
        if r is not None:
            return str(r)
        terms = [f"{x}*z{self.N}^{i}" if i else str(x) for i, x in enumerate(self.coeffs) if x]
        return " + ".join(terms)

    def to_json(self):
        return {"N": self.N, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data):
        if isinstance(data, int):
            return cls.integer(data)
        return cls(int(data["N"]), [int(x) for x in data["coeffs"]])


def exact_quotient(value, d):
    """value / d as an int when value is a rational integer divisible by d, else None."""
    r = value.rational()
    if r is None:
        return None
    q = Fraction(r, d)
    return int(q) if q.denominator == 1 else None
