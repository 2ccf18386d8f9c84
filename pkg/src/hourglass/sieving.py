"""Exact q-analog arithmetic and cyclic sieving for promotion.

All arithmetic is over the integers; root-of-unity evaluation reduces in
the cyclotomic ring Z[q]/Phi_d(q), and the cyclic sieving assertions are
exact equalities of integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .tableaux import RectTableau, promotion, standard_tableaux


@dataclass(frozen=True)
class QPolynomial:
    """Integer polynomial in q, dense coefficients by exponent."""
    coeffs: tuple[int, ...]

    def __post_init__(self):
        trimmed = list(self.coeffs)
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        object.__setattr__(self, "coeffs", tuple(trimmed))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return QPolynomial(tuple(
            a[i] + (b[i] if i < len(b) else 0) for i in range(len(a))))

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        return self + QPolynomial(tuple(-c for c in other.coeffs))

    def __mul__(self, other: "QPolynomial") -> "QPolynomial":
        if self.is_zero() or other.is_zero():
            return QPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            if c:
                for j, d in enumerate(other.coeffs):
                    out[i + j] += c * d
        return QPolynomial(tuple(out))

    def divmod_exact(self, other: "QPolynomial") -> tuple["QPolynomial", "QPolynomial"]:
        """Long division requiring every coefficient quotient to be exact."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        quo = [0] * max(len(rem) - len(other.coeffs) + 1, 0)
        d = other.coeffs
        while len(rem) >= len(d) and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) < len(d):
                break
            q, r = divmod(rem[-1], d[-1])
            if r:
                raise ValueError("inexact polynomial division")
            shift = len(rem) - len(d)
            quo[shift] = q
            for i, c in enumerate(d):
                rem[shift + i] -= q * c
        return QPolynomial(tuple(quo)), QPolynomial(tuple(rem))

    def __floordiv__(self, other: "QPolynomial") -> "QPolynomial":
        quo, rem = self.divmod_exact(other)
        if not rem.is_zero():
            raise ValueError("polynomial division has a remainder")
        return quo

    def __call__(self, x: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def shift(self, k: int) -> "QPolynomial":
        """Multiply by q^k."""
        return QPolynomial((0,) * k + self.coeffs)

    def __repr__(self) -> str:
        if self.is_zero():
            return "QPolynomial(0)"
        terms = [f"{c}q^{e}" for e, c in enumerate(self.coeffs) if c]
        return "QPolynomial(" + " + ".join(terms) + ")"


def q_int(m: int) -> QPolynomial:
    """[m]_q = 1 + q + ... + q^(m-1)."""
    if m < 0:
        raise ValueError("q-integer of a negative number")
    return QPolynomial((1,) * m)


def q_factorial(m: int) -> QPolynomial:
    out = QPolynomial((1,))
    for k in range(1, m + 1):
        out = out * q_int(k)
    return out


def hook_lengths(rows: int, cols: int) -> list[int]:
    """Hook of cell (i, j) in the rectangle: (rows-i) + (cols-j) + 1."""
    return sorted((rows - i) + (cols - j) + 1
                  for i in range(1, rows + 1) for j in range(1, cols + 1))


def q_hook_poly(rows: int, cols: int) -> QPolynomial:
    """q-hook length polynomial [n]_q! / prod [h]_q of the rectangle."""
    num = q_factorial(rows * cols)
    for h in hook_lengths(rows, cols):
        num = num // q_int(h)
    return num


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> QPolynomial:
    """Phi_d by exact division of q^d - 1 by its proper cyclotomic factors."""
    if d < 1:
        raise ValueError("cyclotomic index must be positive")
    poly = QPolynomial((-1,) + (0,) * (d - 1) + (1,))
    for e in range(1, d):
        if d % e == 0:
            poly = poly // cyclotomic(e)
    return poly


@dataclass(frozen=True)
class CyclotomicElement:
    """Element of Z[q]/Phi_d(q), coefficients of degree < phi(d)."""
    d: int
    coeffs: tuple[int, ...]

    @classmethod
    def from_poly(cls, d: int, poly: QPolynomial) -> "CyclotomicElement":
        _, rem = poly.divmod_exact(cyclotomic(d))
        return cls(d, rem.coeffs)

    def is_integer(self) -> bool:
        return len(self.coeffs) <= 1

    def as_integer(self) -> int:
        if not self.is_integer():
            raise ValueError(f"not a rational integer in Z[zeta_{self.d}]: {self.coeffs}")
        return self.coeffs[0] if self.coeffs else 0


def eval_root_of_unity(f: QPolynomial, n: int, k: int) -> int:
    """f(zeta^k) for zeta = exp(2*pi*i/n), asserting the value is a
    rational integer.

    zeta^k is a primitive d-th root for d = n/gcd(n,k); exponents map to
    q^(e*k' mod d) with k' = k/gcd(n,k), and the result reduces to a
    constant modulo Phi_d.
    """
    if k % n == 0:
        return f(1)
    g = math.gcd(n, k % n)
    d = n // g
    kp = (k % n) // g
    bucket = [0] * d
    for e, c in enumerate(f.coeffs):
        bucket[(e * kp) % d] += c
    return CyclotomicElement.from_poly(d, QPolynomial(tuple(bucket))).as_integer()


def promotion_fixed_counts(rows: int, cols: int, bound: int = 200_000) -> list[int]:
    """a[k] = number of tableaux of the rectangle fixed by promotion^k,
    for k = 0..n-1, from the orbit partition of the promotion action."""
    tableaux = list(standard_tableaux(rows, cols))
    if len(tableaux) > bound:
        raise ValueError(f"{len(tableaux)} tableaux exceed the bound {bound}")
    index = {T: t for t, T in enumerate(tableaux)}
    succ = [index[promotion(T).result] for T in tableaux]
    n = rows * cols
    orbit_size = [0] * len(tableaux)
    seen = [False] * len(tableaux)
    for t in range(len(tableaux)):
        if seen[t]:
            continue
        orbit = [t]
        seen[t] = True
        cur = succ[t]
        while cur != t:
            orbit.append(cur)
            seen[cur] = True
            cur = succ[cur]
        for x in orbit:
            orbit_size[x] = len(orbit)
    counts = []
    for k in range(n):
        counts.append(sum(1 for t in range(len(tableaux)) if k % orbit_size[t] == 0))
    return counts


def csp_check(rows: int, cols: int, bound: int = 200_000) -> dict:
    """Fixed points of promotion powers against the q-hook polynomial at
    roots of unity; exact integer equality for every k."""
    n = rows * cols
    f = q_hook_poly(rows, cols)
    counts = promotion_fixed_counts(rows, cols, bound)
    rows_out = []
    ok = True
    for k in range(n):
        value = eval_root_of_unity(f, n, k)
        good = value == counts[k]
        ok = ok and good
        rows_out.append({"k": k, "fixed_count": counts[k], "f_value": value, "ok": good})
    return {"rows": rows, "cols": cols, "n": n, "ok": ok, "table": rows_out}
