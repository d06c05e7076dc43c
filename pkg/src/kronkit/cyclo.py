"""Exact arithmetic in cyclotomic fields Q(zeta_e).

Values are stored in the power basis 1, zeta, ..., zeta^(phi(e)-1) after
reduction modulo the e-th cyclotomic polynomial, so equality at a common
conductor is plain coefficient equality.  Rational coefficients use
``fractions.Fraction``; everything is exact, no floats.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm


class NotRationalError(ValueError):
    """Raised when a cyclotomic value expected to be rational is not."""


def _poly_divmod_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Quotient of integer polynomials known to divide exactly (den monic)."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1]
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Coefficients of Phi_e (ascending degree, monic)."""
    if e < 1:
        raise ValueError("conductor must be positive")
    if e == 1:
        return (-1, 1)
    num = [-1] + [0] * (e - 1) + [1]  # x^e - 1
    for d in range(1, e):
        if e % d == 0:
            num = _poly_divmod_exact(num, cyclotomic_polynomial(d))
    return tuple(num)


def euler_phi(e: int) -> int:
    return len(cyclotomic_polynomial(e)) - 1


@lru_cache(maxsize=None)
def power_basis(e: int) -> tuple[tuple[int, ...], ...]:
    """x^m mod Phi_e for m = 0 .. max(e-1, 2*phi-2), as integer coefficient rows."""
    phi = euler_phi(e)
    top = max(e - 1, 2 * phi - 2)
    rows: list[tuple[int, ...]] = []
    cur = [1] + [0] * (phi - 1)
    mod = cyclotomic_polynomial(e)
    for _ in range(top + 1):
        rows.append(tuple(cur))
        # multiply by x and reduce by the monic Phi_e
        lead = cur[-1]
        cur = [0] + cur[:-1]
        if lead:
            for j in range(phi):
                cur[j] -= lead * mod[j]
    return tuple(rows)


class Cyclotomic:
    """An exact element of Q(zeta_e) in reduced power-basis form."""

    __slots__ = ("e", "coeffs")

    def __init__(self, e: int, coeffs):
        phi = euler_phi(e)
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != phi:
            raise ValueError(f"need {phi} coefficients for conductor {e}")
        object.__setattr__(self, "e", e)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *a):  # immutable
        raise AttributeError("Cyclotomic values are immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def rational(r, e: int = 1) -> "Cyclotomic":
        r = Fraction(r)
        phi = euler_phi(e)
        return Cyclotomic(e, (r,) + (Fraction(0),) * (phi - 1))

    @staticmethod
    def root(e: int, k: int = 1) -> "Cyclotomic":
        """zeta_e^k reduced mod Phi_e."""
        row = power_basis(e)[k % e]
        return Cyclotomic(e, row)

    @staticmethod
    def zero(e: int = 1) -> "Cyclotomic":
        return Cyclotomic.rational(0, e)

    # -- conductor handling ------------------------------------------------

    def promote(self, e_new: int) -> "Cyclotomic":
        if e_new == self.e:
            return self
        if e_new % self.e:
            raise ValueError("can only promote to a multiple conductor")
        step = e_new // self.e
        basis = power_basis(e_new)
        phi = euler_phi(e_new)
        out = [Fraction(0)] * phi
        for i, c in enumerate(self.coeffs):
            if c:
                row = basis[(i * step) % e_new]
                for j in range(phi):
                    if row[j]:
                        out[j] += c * row[j]
        return Cyclotomic(e_new, out)

    @staticmethod
    def _common(a: "Cyclotomic", b) -> tuple["Cyclotomic", "Cyclotomic"]:
        if not isinstance(b, Cyclotomic):
            b = Cyclotomic.rational(b, 1)
        e = lcm(a.e, b.e)
        return a.promote(e), b.promote(e)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, (Cyclotomic, int, Fraction)):
            return NotImplemented
        a, b = Cyclotomic._common(self, other)
        return Cyclotomic(a.e, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.e, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, (Cyclotomic, int, Fraction)):
            return NotImplemented
        a, b = Cyclotomic._common(self, other)
        return Cyclotomic(a.e, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.e, tuple(c * other for c in self.coeffs))
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = Cyclotomic._common(self, other)
        if a.is_rational():
            return Cyclotomic(b.e, tuple(a.coeffs[0] * c for c in b.coeffs))
        if b.is_rational():
            return Cyclotomic(a.e, tuple(b.coeffs[0] * c for c in a.coeffs))
        phi = len(a.coeffs)
        conv = [Fraction(0)] * (2 * phi - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        conv[i + j] += x * y
        basis = power_basis(a.e)
        out = list(conv[:phi])
        for m in range(phi, 2 * phi - 1):
            c = conv[m]
            if c:
                row = basis[m]
                for j in range(phi):
                    if row[j]:
                        out[j] += c * row[j]
        return Cyclotomic(a.e, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            inv = Fraction(1) / Fraction(other)
            return self * inv
        return NotImplemented

    def galois(self, k: int) -> "Cyclotomic":
        """Image under zeta_e -> zeta_e^k (requires gcd(k, e) = 1)."""
        e = self.e
        if gcd(k, e) != 1:
            raise ValueError("galois exponent must be coprime to conductor")
        basis = power_basis(e)
        phi = len(self.coeffs)
        out = [Fraction(0)] * phi
        for i, c in enumerate(self.coeffs):
            if c:
                row = basis[(i * k) % e]
                for j in range(phi):
                    if row[j]:
                        out[j] += c * row[j]
        return Cyclotomic(e, out)

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation, zeta_e -> zeta_e^(-1)."""
        if self.e == 1:
            return self
        return self.galois(self.e - 1)

    # -- predicates and extraction ----------------------------------------

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise NotRationalError(f"not rational: {self.serialize()}")
        return self.coeffs[0]

    def is_integral(self) -> bool:
        """True when all reduced coefficients have denominator 1."""
        return all(c.denominator == 1 for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = Cyclotomic._common(self, other)
        return a.coeffs == b.coeffs

    __hash__ = None  # mutable-free but conductor-sensitive; not hashable

    # -- serialization: "e:[i=num/den,...]" --------------------------------

    def serialize(self) -> str:
        parts = [
            f"{i}={c.numerator}/{c.denominator}"
            for i, c in enumerate(self.coeffs)
            if c != 0
        ]
        return f"{self.e}:[{','.join(parts)}]"

    @staticmethod
    def parse(text: str) -> "Cyclotomic":
        text = text.strip()
        head, _, body = text.partition(":")
        e = int(head)
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"bad cyclotomic literal: {text!r}")
        phi = euler_phi(e)
        coeffs = [Fraction(0)] * phi
        inner = body[1:-1].strip()
        if inner:
            for part in inner.split(","):
                idx, _, frac = part.partition("=")
                num, _, den = frac.partition("/")
                i = int(idx)
                if not 0 <= i < phi:
                    raise ValueError(f"coefficient index {i} out of range for e={e}")
                coeffs[i] = Fraction(int(num), int(den) if den else 1)
        return Cyclotomic(e, coeffs)

    def __repr__(self):
        return f"Cyclotomic({self.serialize()})"

    def approx(self) -> complex:
        """Floating-point approximation, for display only."""
        import cmath

        z = cmath.exp(2j * cmath.pi / self.e)
        return sum(float(c) * z**i for i, c in enumerate(self.coeffs))


# -- operation-style wrappers (thin aliases over the class API) -------------

def cyc_root(e: int, k: int) -> Cyclotomic:
    return Cyclotomic.root(e, k)


def cyc_arith(a: Cyclotomic, b: Cyclotomic, op: str) -> Cyclotomic:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def cyc_conjugate(a: Cyclotomic) -> Cyclotomic:
    return a.conjugate()


def cyc_to_rational(a: Cyclotomic) -> Fraction:
    return a.to_rational()
