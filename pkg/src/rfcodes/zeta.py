"""Exact divisor counting from the L-polynomial of a curve over GF(q).

Given ``L(z) = sum c_i z^i`` (degree 2g), the effective-divisor counts
``M_n`` are the coefficients of ``Z_1(z) = L(z) / ((1 - z)(1 - qz))`` and the
disjoint-support pair counts ``A_h`` are the coefficients of
``Z_2(z) / Z_1(z)`` with ``Z_2(z) = sum M_n^2 z^n``.  Everything here is
integer or :class:`fractions.Fraction` arithmetic.
"""
from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import InvalidL, NegativePointCount, NonIntegerResult, OutOfRange

ROOT_TOL = 1e-9


@dataclass(frozen=True)
class LPolynomial:
    q: int
    genus: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        g, c = self.genus, self.coeffs
        if self.q < 2 or g < 0:
            raise InvalidL(f"bad field size {self.q} or genus {g}")
        if len(c) != 2 * g + 1:
            raise InvalidL(f"expected {2 * g + 1} coefficients for genus {g}, got {len(c)}")
        if c[0] != 1:
            raise InvalidL("constant coefficient must be 1")
        for i in range(2 * g + 1):
            # c_{2g-i} = q^{g-i} c_i, rearranged to stay in the integers
            lhs, rhs = (c[2 * g - i], self.q ** (g - i) * c[i]) if i <= g else \
                (c[2 * g - i] * self.q ** (i - g), c[i])
            if lhs != rhs:
                raise InvalidL(f"functional equation fails at coefficient {i}")
        if g and not self.roots_on_circle():
            warnings.warn(f"L-polynomial {c} has roots off |z| = q^(-1/2)", RuntimeWarning, stacklevel=2)

    @classmethod
    def trivial(cls, q: int) -> "LPolynomial":
        """The L-polynomial of the projective line."""
        return cls(q, 0, (1,))

    @classmethod
    def elliptic(cls, q: int, n_points: int) -> "LPolynomial":
        """Genus one from the rational point count: ``1 - a z + q z^2``, ``a = q + 1 - N``."""
        a = q + 1 - n_points
        return cls(q, 1, (1, -a, q))

    @classmethod
    def from_json(cls, text: str) -> "LPolynomial":
        obj = json.loads(text)
        return cls(int(obj["q"]), int(obj["genus"]), tuple(obj["coeffs"]))

    def to_json(self) -> str:
        return json.dumps({"q": self.q, "genus": self.genus, "coeffs": list(self.coeffs)})

    def roots_on_circle(self, tol: float = ROOT_TOL) -> bool:
        """Whether every root has modulus ``q^(-1/2)``, to relative tolerance ``tol``."""
        roots = np.roots(list(reversed(self.coeffs)))
        return bool(np.all(np.abs(np.abs(roots) * math.sqrt(self.q) - 1.0) <= tol))

    def at(self, z: Fraction | float):
        return sum(c * z ** i for i, c in enumerate(self.coeffs))


def mn_from_l(L: LPolynomial, nmax: int) -> list[int]:
    """``M_0 .. M_nmax``: coefficients of ``L(z) / ((1 - z)(1 - qz))``."""
    s = [L.coeffs[n] if n < len(L.coeffs) else 0 for n in range(nmax + 1)]
    for n in range(1, nmax + 1):
        s[n] += s[n - 1]
    for n in range(1, nmax + 1):
        s[n] += L.q * s[n - 1]
    return s


def power_sums(L: LPolynomial, mmax: int) -> list[int]:
    """``p_m = sum_j lambda_j^m`` for m = 1..mmax via Newton's identities."""
    c = L.coeffs
    coeff = lambda i: c[i] if i < len(c) else 0
    p = [0] * (mmax + 1)
    for m in range(1, mmax + 1):
        p[m] = -m * coeff(m) - sum(coeff(i) * p[m - i] for i in range(1, m))
    return p[1:]


def point_counts(L: LPolynomial, mmax: int) -> list[int]:
    """Rational point counts ``N_1 .. N_mmax`` over GF(q^m)."""
    return [L.q ** m + 1 - pm for m, pm in enumerate(power_sums(L, mmax), start=1)]


def mobius(n: int) -> int:
    result, d = 1, 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    return -result if n > 1 else result


def closed_points(L: LPolynomial, dmax: int) -> dict[int, int]:
    """Number ``B_d`` of closed points of each degree d = 1..dmax."""
    N = point_counts(L, dmax)
    out = {}
    for d in range(1, dmax + 1):
        total = sum(mobius(d // e) * N[e - 1] for e in range(1, d + 1) if d % e == 0)
        if total % d or total < 0:
            raise NegativePointCount(f"degree-{d} closed point count {Fraction(total, d)} is not a count")
        out[d] = total // d
    return out


def euler_product_series(closed: dict[int, int], nmax: int) -> list[int]:
    """Coefficients of ``prod_d (1 - z^d)^(-B_d)`` up to ``z^nmax``."""
    s = [1] + [0] * nmax
    for d, B in closed.items():
        if d > nmax or not B:
            continue
        new = [0] * (nmax + 1)
        for n in range(nmax + 1):
            new[n] = sum(math.comb(B + k - 1, k) * s[n - d * k] for k in range(n // d + 1))
        s = new
    return s


def ah_from_mn(M: Sequence[int]) -> list[int]:
    """Series quotient ``(sum M_n^2 z^n) / (sum M_n z^n)``; requires ``M_0 = 1``."""
    if M[0] != 1:
        raise ValueError("M_0 must be 1")
    A: list[int] = []
    for n in range(len(M)):
        A.append(M[n] ** 2 - sum(M[n - h] * A[h] for h in range(n)))
    if not convolution_holds(M, A):
        raise AssertionError("convolution identity failed")
    return A


def convolution_holds(M: Sequence[int], A: Sequence[int]) -> bool:
    """``M_n^2 == sum_h M_{n-h} A_h`` for every n covered by both sequences."""
    n_top = min(len(M), len(A))
    return all(M[n] ** 2 == sum(M[n - h] * A[h] for h in range(n + 1)) for n in range(n_top))


@dataclass(frozen=True)
class CountTables:
    M: tuple[int, ...]
    A: tuple[int, ...]
    nmax: int

    def to_csv(self) -> str:
        lines = ["n,M_n,A_h"]
        lines += [f"{n},{m},{a}" for n, (m, a) in enumerate(zip(self.M, self.A))]
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps({"nmax": self.nmax, "M": list(self.M), "A": list(self.A)})


def count_tables(L: LPolynomial, nmax: int) -> CountTables:
    M = mn_from_l(L, nmax)
    return CountTables(tuple(M), tuple(ah_from_mn(M)), nmax)


def _integral(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise NonIntegerResult(f"{what} = {x} is not an integer")
    return x.numerator


def jacobian_size(L: LPolynomial) -> int:
    """``#J = q^g L(1/q)``."""
    size = _integral(L.q ** L.genus * L.at(Fraction(1, L.q)), "q^g L(1/q)")
    if size <= 0:
        raise NonIntegerResult(f"Jacobian order {size} is not positive")
    return size


def m_closed_form(L: LPolynomial, n: int) -> int:
    """``M_n = q/(q-1) L(1/q) (q^n - q^(g-1))``, valid for ``n > 2g - 2``."""
    if n <= 2 * L.genus - 2:
        raise OutOfRange(f"closed form needs n > {2 * L.genus - 2}, got n={n}")
    q = L.q
    val = Fraction(q, q - 1) * L.at(Fraction(1, q)) * (q ** n - Fraction(q) ** (L.genus - 1))
    return _integral(val, f"M_{n}")


def avg_code_size(L: LPolynomial, h: int) -> Fraction:
    """Average of ``#C_D(h)`` over the Jacobian: ``1 + (q-1) sum_{i<=h} A_i / #J``."""
    if h < 0:
        raise ValueError("h must be nonnegative")
    A = ah_from_mn(mn_from_l(L, h))
    return 1 + Fraction((L.q - 1) * sum(A), jacobian_size(L))


def l_eval(L: LPolynomial, s: float) -> float:
    """``L`` evaluated at ``z = q^(-s)``."""
    z = L.q ** -s
    return float(sum(c * z ** i for i, c in enumerate(L.coeffs)))


def degradation_expectation(q: int, N: int, code_size) -> Fraction:
    """Expected number of codewords avoiding uniformly random forbidden letters."""
    return Fraction(q, q + 1) ** N * Fraction(code_size)
