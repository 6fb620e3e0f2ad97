"""Exact arithmetic in F_{q^m}, q = p^e.

An element a_0 + a_1 x + ... + a_{k-1} x^{k-1} of F_p[x]/(f), k = e*m, is
encoded as the integer a_0 + a_1 p + ... + a_{k-1} p^{k-1}.  The prime field
therefore sits inside every extension as the integers 0..p-1, and integer
order on encodings is lexicographic order on the coefficient vector read from
the top coefficient down.

Multiplication uses discrete log tables built once per field.  The tables are
numpy arrays so that curve enumeration can run vectorized over whole fields.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

import numpy as np
from sympy import divisors, factorint, isprime

DEFAULT_CAP = 1 << 24


class FieldCapError(ValueError):
    """A field or enumeration would exceed the configured element cap."""


# -- polynomials over F_p, coefficient lists with the constant term first ---


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _pmod(a: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    a = _trim(list(a))
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    while len(a) - 1 >= df:
        c = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - df
        for i, fi in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fi) % p
        _trim(a)
    return a


def _psub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Ben-Or test: monic f of degree k is irreducible over F_p iff
    gcd(f, x^{p^d} - x) = 1 for every 1 <= d <= k/2."""
    f = _trim(list(f))
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    h = [0, 1]
    for _ in range(k // 2):
        # h <- h^p mod f, i.e. x^{p^d}
        acc, base, e = [1], h, p
        while e:
            if e & 1:
                acc = _pmod(_pmul(acc, base, p), f, p)
            base = _pmod(_pmul(base, base, p), f, p)
            e >>= 1
        h = acc
        if len(_pgcd(f, _psub(h, [0, 1], p), p)) > 1:
            return False
    return True


def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible polynomial of degree k."""
    for low in range(p**k):
        f = [(low // p**i) % p for i in range(k)] + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError(f"no irreducible polynomial of degree {k} over F_{p}")


# -- field descriptor --------------------------------------------------------


@dataclass(frozen=True)
class FieldDesc:
    """The field F_{q^m} = F_{p^{e m}} with a fixed modulus."""

    p: int
    e: int
    m: int
    modulus: tuple[int, ...]

    @property
    def degree(self) -> int:
        """Degree over the prime field."""
        return self.e * self.m

    @property
    def q(self) -> int:
        return self.p**self.e

    @property
    def size(self) -> int:
        return self.p**self.degree

    def __repr__(self) -> str:
        return f"F_{self.q}^{self.m}"

    def to_json(self) -> dict:
        return {"p": self.p, "e": self.e, "m": self.m, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, obj: dict, cap: int = DEFAULT_CAP) -> "FieldDesc":
        f = make_field(obj["p"], obj["e"], obj["m"], cap=cap)
        if "modulus" in obj and tuple(obj["modulus"]) != f.modulus:
            raise ValueError(f"modulus {obj['modulus']} does not match the canonical {list(f.modulus)}")
        return f

    # -- element construction

    def __call__(self, value: int | Sequence[int]) -> "FieldElement":
        if isinstance(value, (int, np.integer)):
            v = int(value)
            if not 0 <= v < self.size:
                raise ValueError(f"{v} is not an element encoding of {self!r}")
            return FieldElement(self, v)
        return FieldElement(self, self.encode(value))

    def encode(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) != self.degree:
            raise ValueError(f"expected {self.degree} coefficients, got {len(coeffs)}")
        if any(not 0 <= c < self.p for c in coeffs):
            raise ValueError("coefficients must lie in [0, p)")
        return sum(int(c) * self.p**i for i, c in enumerate(coeffs))

    def decode(self, v: int) -> tuple[int, ...]:
        return tuple((v // self.p**i) % self.p for i in range(self.degree))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def gen(self) -> "FieldElement":
        """The class of x in F_p[x]/(modulus)."""
        return FieldElement(self, self.p if self.degree > 1 else -self.modulus[0] % self.p)

    # -- integer-level arithmetic

    @cached_property
    def _powers(self) -> tuple[int, ...]:
        return tuple(self.p**i for i in range(self.degree))

    @property
    def _tables(self) -> "_LogTables":
        return _log_tables(self)

    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        return sum(((a // w + b // w) % p) * w for w in self._powers)

    def neg(self, a: int) -> int:
        p = self.p
        return sum(((-(a // w)) % p) * w for w in self._powers)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        t = self._tables
        return int(t.exp[(int(t.log[a]) + int(t.log[b])) % (self.size - 1)])

    def power(self, a: int, n: int) -> int:
        if a == 0:
            if n < 0:
                raise ZeroDivisionError("zero has no inverse")
            return 1 if n == 0 else 0
        t = self._tables
        return int(t.exp[(int(t.log[a]) * n) % (self.size - 1)])

    def inv(self, a: int) -> int:
        return self.power(a, -1)

    def frob(self, a: int, times: int = 1) -> int:
        """a^(q^times)."""
        return self.power(a, pow(self.q, times, self.size - 1) if self.size > 2 else 1)

    # -- vectorized arithmetic on int64 arrays of encodings

    def vadd(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return np.bitwise_xor(a, b)
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for w in self._powers:
            out += ((a // w + b // w) % self.p) * w
        return out

    def vpow(self, a: np.ndarray, n: int) -> np.ndarray:
        if n < 0:
            raise ValueError("vectorized power needs n >= 0")
        t = self._tables
        if self.size == 2:
            return a.copy() if n else np.ones_like(a)
        e = (n % (self.size - 1)) or (self.size - 1 if n else 0)
        out = t.exp[(t.log[a] * e) % (self.size - 1)]
        out = np.where(a == 0, 0 if n else 1, out)
        return out

    def vfrob(self, a: np.ndarray, times: int = 1) -> np.ndarray:
        return self.vpow(a, self.q**times)


@dataclass(frozen=True)
class _LogTables:
    exp: np.ndarray
    log: np.ndarray
    generator: int


def _slow_mul(f: FieldDesc, a: int, b: int) -> int:
    prod = _pmod(_pmul(f.decode(a), f.decode(b), f.p), f.modulus, f.p)
    return sum(c * f.p**i for i, c in enumerate(prod))


def _slow_pow(f: FieldDesc, a: int, n: int) -> int:
    acc = 1
    while n:
        if n & 1:
            acc = _slow_mul(f, acc, a)
        a = _slow_mul(f, a, a)
        n >>= 1
    return acc


def _vmul_const(f: FieldDesc, arr: np.ndarray, c: int) -> np.ndarray:
    # multiplication by c is F_p-linear; column j of the matrix is c * x^j
    k, p = f.degree, f.p
    cols = np.array([f.decode(_slow_mul(f, c, p**j)) for j in range(k)], dtype=np.int64)
    digits = np.stack([(arr // p**j) % p for j in range(k)], axis=1)
    out_digits = (digits @ cols) % p
    return out_digits @ np.array([p**j for j in range(k)], dtype=np.int64)


@lru_cache(maxsize=None)
def _log_tables(f: FieldDesc) -> _LogTables:
    order = f.size - 1
    primes = list(factorint(order)) if order > 1 else []
    gen = next(
        g for g in range(1, f.size) if all(_slow_pow(f, g, order // r) != 1 for r in primes)
    )
    exp = np.empty(order, dtype=np.int64)
    exp[0] = 1
    filled, step = 1, gen
    while filled < order:
        n = min(filled, order - filled)
        exp[filled : filled + n] = _vmul_const(f, exp[:n], step)
        step = _slow_mul(f, step, step)
        filled += n
    log = np.full(f.size, -1, dtype=np.int64)
    log[exp] = np.arange(order, dtype=np.int64)
    if (log[1:] < 0).any():
        raise AssertionError(f"{gen} does not generate the multiplicative group of {f!r}")
    exp.setflags(write=False)
    log.setflags(write=False)
    return _LogTables(exp, log, gen)


def make_field(p: int, e: int = 1, m: int = 1, cap: int = DEFAULT_CAP) -> FieldDesc:
    """Return the descriptor of F_{p^{e m}}, seen as the degree-m extension of F_{p^e}.

    The modulus is the lexicographically smallest monic irreducible polynomial
    of degree e*m over F_p, so equal arguments always give equal fields.
    """
    if not isprime(p):
        raise ValueError(f"p={p} is not prime")
    if e < 1 or m < 1:
        raise ValueError("e and m must be positive")
    if p ** (e * m) > cap:
        raise FieldCapError(f"F_{p}^{e * m} has {p ** (e * m)} elements, over the cap {cap}")
    return _make_field(p, e, m)


@lru_cache(maxsize=None)
def _make_field(p: int, e: int, m: int) -> FieldDesc:
    return FieldDesc(p, e, m, smallest_irreducible(p, e * m))


# -- elements -----------------------------------------------------------------


@dataclass(frozen=True)
class FieldElement:
    field: FieldDesc
    value: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.decode(self.value)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError(f"cannot combine elements of {self.field!r} and {other.field!r}")
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self.field.inv(self._other(other))))

    def __pow__(self, n: int):
        return FieldElement(self.field, self.field.power(self.value, n))

    def __bool__(self) -> bool:
        return self.value != 0

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def frobenius(self, times: int = 1) -> "FieldElement":
        return FieldElement(self.field, self.field.frob(self.value, times))

    def minimal_degree(self) -> int:
        return minimal_degree(self)

    def __repr__(self) -> str:
        terms = [
            ("" if c == 1 and i else str(c)) + ("x" if i == 1 else f"x^{i}" if i else "")
            for i, c in enumerate(self.coeffs)
            if c
        ]
        return " + ".join(reversed(terms)) or "0"


def frobenius_q(x: FieldElement) -> FieldElement:
    """x -> x^q, the generator of Gal(F_{q^m} / F_q)."""
    return x.frobenius()


def minimal_degree(x: FieldElement) -> int:
    """Smallest d >= 1 with x in F_{q^d}; always a divisor of m."""
    f = x.field
    for d in divisors(f.m):
        if f.frob(x.value, d) == x.value:
            return d
    raise AssertionError("Frobenius^m must fix every element")


def vminimal_degree(f: FieldDesc, values: np.ndarray) -> np.ndarray:
    """minimal_degree over an array of encodings."""
    out = np.full(values.shape, f.m, dtype=np.int64)
    pending = np.ones(values.shape, dtype=bool)
    for d in divisors(f.m)[:-1]:
        hit = pending & (f.vfrob(values, d) == values)
        out[hit] = d
        pending &= ~hit
    return out


def enumerate_field(f: FieldDesc, cap: int = DEFAULT_CAP) -> Iterator[FieldElement]:
    """Every element exactly once, in increasing encoding order."""
    if f.size > cap:
        raise FieldCapError(f"{f!r} has {f.size} elements, over the cap {cap}")
    for v in range(f.size):
        yield FieldElement(f, v)
