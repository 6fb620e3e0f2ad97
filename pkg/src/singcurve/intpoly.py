"""Exact integer polynomials in t and Newton's identities."""

from __future__ import annotations

from itertools import zip_longest
from math import comb
from typing import Iterable, Sequence


class IntPolynomial:
    """Integer polynomial, constant term first, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def one_minus_t_power(cls, d: int) -> "IntPolynomial":
        """1 - t^d."""
        if d < 1:
            raise ValueError("d must be positive")
        return cls((1,) + (0,) * (d - 1) + (-1,))

    @classmethod
    def binomial(cls, n: int, sign: int) -> "IntPolynomial":
        """(1 + sign*t)^n."""
        return cls(comb(n, i) * sign**i for i in range(n + 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __iter__(self):
        # without this, iteration falls back to __getitem__ and never stops
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __call__(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPolynomial((other,)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-a for a in self.coeffs)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    def __pow__(self, n: int) -> "IntPolynomial":
        acc, base = IntPolynomial.one(), self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def __divmod__(self, other: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Division by a divisor whose leading coefficient is +-1."""
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        lead = other.coeffs[-1]
        if lead not in (1, -1):
            raise ValueError("divisor must have leading coefficient +-1")
        rem = list(self.coeffs)
        quo = [0] * max(0, len(rem) - other.degree)
        for k in range(len(quo) - 1, -1, -1):
            c = rem[k + other.degree] * lead
            quo[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return IntPolynomial(quo), IntPolynomial(rem)

    def exact_div(self, other: "IntPolynomial") -> "IntPolynomial":
        quo, rem = divmod(self, other)
        if rem.coeffs:
            raise ArithmeticError(f"{other} does not divide {self}")
        return quo

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else "t" if i == 1 else f"t^{i}"
            mag = str(abs(c)) if abs(c) != 1 or i == 0 else ""
            parts.append(("-" if c < 0 else "+") + " " + mag + mono)
        s = " ".join(parts)
        return s[2:] if s.startswith("+") else "-" + s[2:]


def power_sums(f: IntPolynomial, n_max: int) -> list[int]:
    """p_1..p_{n_max} of the inverse roots of f = prod (1 - b_j t), f(0) = 1.

    Newton: p_n + a_1 p_{n-1} + ... + a_{n-1} p_1 + n a_n = 0.
    """
    if f[0] != 1:
        raise ValueError("f(0) must be 1")
    p: list[int] = []
    for n in range(1, n_max + 1):
        s = n * f[n] + sum(f[i] * p[n - i - 1] for i in range(1, n))
        p.append(-s)
    return p


def coeffs_from_power_sums(p: Sequence[int]) -> list[int]:
    """Inverse of power_sums: a_0 = 1, a_1..a_len(p); raises on non-integral steps."""
    a = [1]
    for n in range(1, len(p) + 1):
        s = p[n - 1] + sum(a[i] * p[n - i - 1] for i in range(1, n))
        if s % n:
            raise ArithmeticError(f"power sums are not those of an integer polynomial (step {n})")
        a.append(-s // n)
    return a
