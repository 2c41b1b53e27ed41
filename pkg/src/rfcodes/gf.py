"""Exact arithmetic in GF(p^alpha), polynomials over it, and extension fields.

Field elements are handled internally as integer indices: the element
``c_0 + c_1 t + ... + c_{alpha-1} t^{alpha-1}`` has index ``sum(c_i * p**i)``.
:class:`FieldElement` wraps an index with its field for callers who want
operator syntax.  The same positional encoding is used one level up for
extension fields, whose coordinates are taken over the base field.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import (
    DivisionByZero,
    IndexOutOfRange,
    MixedFields,
    NotPrime,
    ReducibleModulus,
)

#: degree of the zero polynomial; compares below every integer bound
NEG_INF = float("-inf")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q`` as ``(p, alpha)`` with ``q == p**alpha``."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    p = next(d for d in itertools.count(2) if q % d == 0)
    alpha = 0
    while q % p == 0:
        q //= p
        alpha += 1
    if q != 1:
        raise NotPrime(f"{p ** alpha * q} is not a prime power")
    return p, alpha


class _QuotientField:
    """Arithmetic on indices of ``coef[X]/(modulus)`` for a monic irreducible modulus.

    Subclasses supply ``coef`` (the coefficient field), ``degree`` and
    ``_mod`` (the modulus coefficients, low to high).
    """

    coef: "_QuotientField"
    degree: int
    _mod: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.coef.q ** self.degree

    @property
    def characteristic(self) -> int:
        return self.coef.characteristic

    def elements(self) -> range:
        return range(self.q)

    def element(self, i: int) -> "FieldElement":
        return index_element(i, self)

    def check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise IndexOutOfRange(f"index {a} outside [0, {self.q})")
        return a

    def digits(self, a: int) -> list[int]:
        r = self.coef.q
        out = []
        for _ in range(self.degree):
            a, d = divmod(a, r)
            out.append(d)
        return out

    def from_digits(self, ds: Sequence[int]) -> int:
        r = self.coef.q
        v = 0
        for d in reversed(ds):
            v = v * r + d
        return v

    def add(self, a: int, b: int) -> int:
        c = self.coef
        return self.from_digits([c.add(x, y) for x, y in zip(self.digits(a), self.digits(b))])

    def sub(self, a: int, b: int) -> int:
        c = self.coef
        return self.from_digits([c.sub(x, y) for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a: int) -> int:
        c = self.coef
        return self.from_digits([c.neg(x) for x in self.digits(a)])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        c = self.coef
        n = self.degree
        prod = [0] * (2 * n - 1)
        db = self.digits(b)
        for i, x in enumerate(self.digits(a)):
            if x:
                for j, y in enumerate(db):
                    if y:
                        prod[i + j] = c.add(prod[i + j], c.mul(x, y))
        mod = self._mod
        for i in range(len(prod) - 1, n - 1, -1):
            t = prod[i]
            if t:
                for j in range(n):
                    if mod[j]:
                        prod[i - n + j] = c.sub(prod[i - n + j], c.mul(t, mod[j]))
        return self.from_digits(prod[:n])

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        result = 1
        while k:
            if k & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            k >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))


@dataclass(frozen=True)
class FieldSpec(_QuotientField):
    """GF(p^alpha) as GF(p)[t]/(modulus), modulus given low-to-high."""

    p: int
    alpha: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "modulus", tuple(self.modulus))
        if not is_prime(self.p):
            raise NotPrime(f"{self.p} is not prime")
        if self.alpha < 1:
            raise ValueError("extension degree must be at least 1")
        m = self.modulus
        if len(m) != self.alpha + 1 or m[-1] != 1 or any(not 0 <= c < self.p for c in m):
            raise ValueError(f"modulus {m} is not monic of degree {self.alpha} over GF({self.p})")
        if self.alpha > 1 and not is_irreducible(Polynomial(prime_field(self.p), m)):
            raise ReducibleModulus(f"{m} factors over GF({self.p})")

    @property
    def q(self) -> int:
        return self.p ** self.alpha

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def degree(self) -> int:
        return self.alpha

    @property
    def _mod(self) -> tuple[int, ...]:
        return self.modulus

    @functools.cached_property
    def coef(self) -> "FieldSpec":
        return prime_field(self.p)

    @property
    def modulus_encoding(self) -> int:
        return sum(c * self.p ** i for i, c in enumerate(self.modulus))

    def __str__(self) -> str:
        return f"{self.p}^{self.alpha}/{self.modulus_encoding}"

    # prime fields skip the digit machinery entirely

    def add(self, a: int, b: int) -> int:
        if self.alpha == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return super().add(a, b)

    def sub(self, a: int, b: int) -> int:
        if self.alpha == 1:
            return (a - b) % self.p
        if self.p == 2:
            return a ^ b
        return super().sub(a, b)

    def neg(self, a: int) -> int:
        if self.alpha == 1:
            return -a % self.p
        if self.p == 2:
            return a
        return super().neg(a)

    def mul(self, a: int, b: int) -> int:
        if self.alpha == 1:
            return a * b % self.p
        return super().mul(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self.alpha == 1:
            return pow(a, -1, self.p)
        return super().inv(a)


@functools.lru_cache(maxsize=None)
def prime_field(p: int) -> FieldSpec:
    return FieldSpec(p, 1, (0, 1))


@dataclass(frozen=True)
class TowerField(_QuotientField):
    """``base[X]/(modulus)`` with modulus coefficients given as base-field indices."""

    base: _QuotientField
    modulus: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "modulus", tuple(self.modulus))
        m = self.modulus
        if len(m) < 2 or m[-1] != 1:
            raise ValueError(f"modulus {m} is not monic of positive degree")
        if not is_irreducible(Polynomial(self.base, m)):
            raise ReducibleModulus(f"{m} factors over {self.base}")

    @property
    def coef(self) -> _QuotientField:
        return self.base

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    @property
    def _mod(self) -> tuple[int, ...]:
        return self.modulus

    def __str__(self) -> str:
        return f"({self.base})[X]/{Polynomial(self.base, self.modulus).format('X')}"


@dataclass(frozen=True)
class FieldElement:
    field: _QuotientField
    value: int

    def __post_init__(self):
        self.field.check(self.value)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(self.field.digits(self.value))

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise MixedFields(f"{self.field} vs {other.field}")
            return other.value
        return NotImplemented

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._other(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, k: int):
        return FieldElement(self.field, self.field.pow(self.value, k))

    def inv(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"FieldElement({self.field}, {self.value})"


def element_index(e: FieldElement) -> int:
    return e.value


def index_element(i: int, field: _QuotientField) -> FieldElement:
    return FieldElement(field, field.check(i))


def field_arith(op: str, *operands: FieldElement):
    """Apply ``op`` in {add, sub, mul, inv, pow} to field elements.

    ``pow`` takes an element and an integer exponent.
    """
    if op == "inv":
        (a,) = operands
        return a.inv()
    if op == "pow":
        a, k = operands
        return a ** k
    a, b = operands
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown field operation {op!r}")


# ---------------------------------------------------------------------------
# polynomials

@dataclass(frozen=True)
class Polynomial:
    """Univariate polynomial with coefficient indices listed low-to-high."""

    field: _QuotientField
    coeffs: tuple[int, ...]

    def __post_init__(self):
        cs = list(self.coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def zero(cls, field) -> "Polynomial":
        return cls(field, ())

    @classmethod
    def constant(cls, field, c: int) -> "Polynomial":
        return cls(field, (c,))

    @classmethod
    def x(cls, field) -> "Polynomial":
        return cls(field, (0, 1))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _same(self, other: "Polynomial") -> _QuotientField:
        if other.field is not self.field and other.field != self.field:
            raise MixedFields(f"{self.field} vs {other.field}")
        return self.field

    def __add__(self, other: "Polynomial") -> "Polynomial":
        F = self._same(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return Polynomial(F, [F.add(self.coeff(i), other.coeff(i)) for i in range(n)])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        F = self._same(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(F, [F.sub(self.coeff(i), other.coeff(i)) for i in range(n)])

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.field, [self.field.neg(c) for c in self.coeffs])

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        F = self._same(other)
        if self.is_zero() or other.is_zero():
            return Polynomial.zero(F)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    if y:
                        out[i + j] = F.add(out[i + j], F.mul(x, y))
        return Polynomial(F, out)

    def scale(self, c: int) -> "Polynomial":
        F = self.field
        return Polynomial(F, [F.mul(c, x) for x in self.coeffs])

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.lead))

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        F = self._same(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        n = len(other.coeffs) - 1
        inv_lead = F.inv(other.lead)
        quot = [0] * max(len(rem) - n, 0)
        for i in range(len(rem) - 1, n - 1, -1):
            t = F.mul(rem[i], inv_lead)
            if t:
                quot[i - n] = t
                for j, c in enumerate(other.coeffs):
                    rem[i - n + j] = F.sub(rem[i - n + j], F.mul(t, c))
        return Polynomial(F, quot), Polynomial(F, rem[:n])

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def eval(self, x: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    __call__ = eval

    def format(self, var: str = "x") -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else var if i == 1 else f"{var}^{i}"
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms)

    def __str__(self) -> str:
        return self.format()


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd; ``gcd(0, 0)`` is the zero polynomial."""
    a._same(b)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial, Polynomial]:
    """Return ``(g, u, v)`` with ``u*a + v*b == g`` and ``g`` monic."""
    F = a._same(b)
    r0, r1 = a, b
    s0, s1 = Polynomial.constant(F, 1), Polynomial.zero(F)
    t0, t1 = Polynomial.zero(F), Polynomial.constant(F, 1)
    while not r1.is_zero():
        quo, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    if r0.is_zero():
        return r0, s0, t0
    k = F.inv(r0.lead)
    return r0.scale(k), s0.scale(k), t0.scale(k)


def poly_arith(op: str, *operands):
    """Apply ``op`` in {add, mul, divmod, gcd, eval} to polynomial operands."""
    if op == "add":
        a, b = operands
        return a + b
    if op == "mul":
        a, b = operands
        return a * b
    if op == "divmod":
        a, b = operands
        return divmod(a, b)
    if op == "gcd":
        a, b = operands
        return poly_gcd(a, b)
    if op == "eval":
        a, x = operands
        if isinstance(x, FieldElement):
            a._same(Polynomial(x.field, ()))
            return FieldElement(a.field, a.eval(x.value))
        return a.eval(x)
    raise ValueError(f"unknown polynomial operation {op!r}")


def monic_polynomials(field: _QuotientField, degree: int) -> Iterator[Polynomial]:
    """All monic polynomials of exactly ``degree``, in increasing encoding order."""
    q = field.q
    for tail in range(q ** degree):
        cs = []
        for _ in range(degree):
            tail, d = divmod(tail, q)
            cs.append(d)
        yield Polynomial(field, cs + [1])


def is_irreducible(f: Polynomial) -> bool:
    """Trial division by every monic polynomial of degree up to deg(f)/2."""
    n = f.degree
    if n < 1:
        return False
    for k in range(1, n // 2 + 1):
        for g in monic_polynomials(f.field, k):
            if (f % g).is_zero():
                return False
    return True


def canonical_irreducible(field: _QuotientField, degree: int) -> Polynomial:
    """Monic irreducible of the given degree with the smallest encoding sum(c_i q^i)."""
    for f in monic_polynomials(field, degree):
        if is_irreducible(f):
            return f
    raise AssertionError("no irreducible polynomial found")  # impossible over a finite field


@functools.lru_cache(maxsize=None)
def field_make(p: int, alpha: int, modulus: tuple[int, ...] | None = None) -> FieldSpec:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if alpha < 1:
        raise ValueError("extension degree must be at least 1")
    if modulus is None:
        if alpha == 1:
            return prime_field(p)
        modulus = canonical_irreducible(prime_field(p), alpha).coeffs
    return FieldSpec(p, alpha, tuple(modulus))


def parse_field(text: str) -> FieldSpec:
    """Parse ``p^alpha/<modulus-encoding>``, ``p^alpha`` or a bare prime power ``q``."""
    text = text.strip()
    head, _, enc = text.partition("/")
    if "^" in head:
        p_s, a_s = head.split("^", 1)
        p, alpha = int(p_s), int(a_s)
        if p ** alpha > 1 and not is_prime(p):
            raise NotPrime(f"{p} is not prime")
    else:
        p, alpha = prime_power(int(head))
    if not enc:
        return field_make(p, alpha)
    n = int(enc)
    cs = []
    for _ in range(alpha + 1):
        n, d = divmod(n, p)
        cs.append(d)
    if n:
        raise ValueError(f"modulus encoding {enc} has degree above {alpha}")
    return field_make(p, alpha, tuple(cs))


# ---------------------------------------------------------------------------
# extension fields

@dataclass(frozen=True)
class ExtensionField:
    """Degree-``d`` extension of ``base`` generated by ``x0``.

    ``ext`` is ``base[X]/(m)`` for the canonical irreducible ``m`` of degree
    ``d``; ``x0`` is the class of ``X``, so the power basis ``1, x0, ...``
    coincides with the coordinate basis of ``ext``.
    """

    base: FieldSpec
    d: int
    ext: TowerField
    x0: int

    @property
    def q(self) -> int:
        return self.ext.q

    def embed(self, c: int) -> int:
        return self.ext.from_digits([c] + [0] * (self.d - 1))

    def coordinates(self, a: int) -> list[int]:
        """Coordinates of ``a`` on the basis ``1, x0, ..., x0^(d-1)``."""
        return self.ext.digits(a)

    def from_coordinates(self, cs: Sequence[int]) -> int:
        return self.ext.from_digits(list(cs) + [0] * (self.d - len(cs)))


@functools.lru_cache(maxsize=None)
def build_extension(base: FieldSpec, d: int) -> ExtensionField:
    if d < 1:
        raise ValueError("extension degree must be at least 1")
    m = canonical_irreducible(base, d)
    ext = TowerField(base, m.coeffs)
    x0 = base.q if d > 1 else ext.from_digits([base.neg(m.coeffs[0])])
    return ExtensionField(base, d, ext, x0)
