"""Nonlinear rational-function codes C(h) on the projective line over GF(q).

A codeword is the list of values of a rational function ``f = a/b`` of
degree at most ``h`` at the ``N = q + 1`` points of P^1(GF(q)); the
alphabet is GF(q) plus the symbol infinity.  Messages are elements of the
degree ``2h+1`` extension ``k'`` of GF(q): the map ``f -> f(x0)`` is a
bijection from C(h) onto ``k'`` and is inverted by a small linear solve.
"""
from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from .errors import (
    DegreeTooLarge,
    IndexOutOfRange,
    LengthMismatch,
    MessageOutOfRange,
    NoSolution,
    NotAFunction,
    TooLarge,
    VerificationFailed,
)
from .gf import (
    ExtensionField,
    FieldSpec,
    Polynomial,
    build_extension,
    monic_polynomials,
    parse_field,
    poly_gcd,
)
from .linalg import nullspace

BRUTE_FORCE_LIMIT = 10 ** 7


class ProjectiveValue(NamedTuple):
    """A point of P^1 in canonical homogeneous form: ``(y, 1)`` or ``(1, 0)``."""

    num: int
    den: int

    @classmethod
    def of(cls, field, num: int, den: int) -> "ProjectiveValue":
        if den:
            return cls(field.div(num, den), 1)
        if not num:
            raise ValueError("(0 : 0) is not a point of the projective line")
        return INF

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    def token(self) -> str:
        return "inf" if self.den == 0 else str(self.num)

    def __str__(self) -> str:
        return self.token()


INF = ProjectiveValue(1, 0)


def finite(y: int) -> ProjectiveValue:
    return ProjectiveValue(y, 1)


def parse_symbol(token: str, field: FieldSpec) -> ProjectiveValue:
    if token == "inf":
        return INF
    y = int(token)
    if not 0 <= y < field.q:
        raise IndexOutOfRange(f"symbol {y} outside [0, {field.q})")
    return finite(y)


def point_list(field: FieldSpec) -> list[ProjectiveValue]:
    """Finite points by ascending index, then infinity."""
    return [finite(i) for i in range(field.q)] + [INF]


@dataclass(frozen=True)
class MessageSpace:
    ext: ExtensionField
    size: int


@dataclass(frozen=True)
class CodeParams:
    field: FieldSpec
    h: int

    def __post_init__(self):
        if self.h < 0:
            raise ValueError("degree bound h must be nonnegative")
        if 2 * self.h >= self.N:
            raise ValueError(f"need 2h < N; got h={self.h}, N={self.N}")

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def N(self) -> int:
        return self.field.q + 1

    @property
    def d0(self) -> int:
        """Designed minimum distance."""
        return self.N - 2 * self.h

    @functools.cached_property
    def points(self) -> tuple[ProjectiveValue, ...]:
        return tuple(point_list(self.field))

    @functools.cached_property
    def messages(self) -> MessageSpace:
        ext = build_extension(self.field, 2 * self.h + 1)
        return MessageSpace(ext, ext.q)

    @classmethod
    def parse(cls, text: str) -> "CodeParams":
        """Parse ``q=<p>^<alpha> h=<h>``."""
        opts = dict(tok.split("=", 1) for tok in text.split())
        return cls(parse_field(opts["q"]), int(opts["h"]))

    def __str__(self) -> str:
        return f"q={self.field.p}^{self.field.alpha} h={self.h}"


@dataclass(frozen=True)
class RationalFunction:
    """``a/b`` with ``gcd(a, b) = 1`` and ``b`` monic."""

    a: Polynomial
    b: Polynomial

    def __post_init__(self):
        if self.b.is_zero():
            raise NotAFunction("zero denominator")
        if self.b.lead != 1:
            raise ValueError("denominator must be monic")
        if poly_gcd(self.a, self.b).degree > 0:
            raise ValueError("numerator and denominator share a factor")

    @property
    def field(self):
        return self.a.field

    @property
    def degree(self) -> int:
        return int(max(self.a.degree, self.b.degree))

    def __str__(self) -> str:
        num = self.a.format()
        if self.b.degree == 0:
            return num
        den = self.b.format()
        if " " in num or "*" in num:
            num = f"({num})"
        if " " in den:
            den = f"({den})"
        return f"{num}/{den}"


def rf_normalize(a: Polynomial, b: Polynomial) -> RationalFunction:
    g = poly_gcd(a, b)
    if g.is_zero():
        raise NotAFunction("(0, 0) does not define a function")
    a, b = a // g, b // g
    if b.is_zero():
        raise NotAFunction("denominator vanishes: the constant infinity")
    k = b.field.inv(b.lead)
    return RationalFunction(a.scale(k), b.scale(k))


def constant_function(field, c: int) -> RationalFunction:
    return RationalFunction(Polynomial.constant(field, c), Polynomial.constant(field, 1))


def rf_evaluate(f: RationalFunction, P: ProjectiveValue) -> ProjectiveValue:
    F = f.field
    if P.den:
        return ProjectiveValue.of(F, f.a.eval(P.num), f.b.eval(P.num))
    H = f.degree
    return ProjectiveValue.of(F, f.a.coeff(H), f.b.coeff(H))


@dataclass(frozen=True)
class Codeword:
    symbols: tuple[ProjectiveValue, ...]
    params: CodeParams

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if len(self.symbols) != self.params.N:
            raise LengthMismatch(f"word has {len(self.symbols)} symbols, code length is {self.params.N}")

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def __str__(self) -> str:
        return " ".join(s.token() for s in self.symbols)

    @classmethod
    def parse(cls, text: str, params: CodeParams) -> "Codeword":
        return cls(tuple(parse_symbol(t, params.field) for t in text.split()), params)


def word_of(f: RationalFunction, params: CodeParams) -> Codeword:
    return Codeword(tuple(rf_evaluate(f, P) for P in params.points), params)


def hamming_distance(w1: Codeword, w2: Codeword) -> int:
    if len(w1) != len(w2):
        raise LengthMismatch(f"lengths {len(w1)} and {len(w2)} differ")
    return sum(x != y for x, y in zip(w1, w2))


# ---------------------------------------------------------------------------
# messages <-> functions

def _eval_in_ext(p: Polynomial, ext: ExtensionField) -> int:
    E = ext.ext
    acc = 0
    for c in reversed(p.coeffs):
        acc = E.add(E.mul(acc, ext.x0), ext.embed(c))
    return acc


def iota(f: RationalFunction, params: CodeParams) -> int:
    """Message index of ``f``: the index of ``f(x0)`` in the extension field."""
    if f.degree > params.h:
        raise DegreeTooLarge(f"degree {f.degree} exceeds h={params.h}")
    ext = params.messages.ext
    return ext.ext.div(_eval_in_ext(f.a, ext), _eval_in_ext(f.b, ext))


def function_of_message(m: int, params: CodeParams) -> RationalFunction:
    """Inverse of :func:`iota`.

    Solves ``a(x0) - x1*b(x0) = 0`` over the base field, one equation per
    coordinate of the extension, for the ``2h+2`` coefficients of a and b.
    """
    msg = params.messages
    if not 0 <= m < msg.size:
        raise MessageOutOfRange(f"message {m} outside [0, {msg.size})")
    ext, E, F, h = msg.ext, msg.ext.ext, params.field, params.h
    cols = []
    power = 1
    for _ in range(h + 1):
        cols.append(ext.coordinates(power))
        power = E.mul(power, ext.x0)
    power = m
    for _ in range(h + 1):
        cols.append([F.neg(c) for c in ext.coordinates(power)])
        power = E.mul(power, ext.x0)
    rows = [list(r) for r in zip(*cols)]
    sol = nullspace(F, rows, 2 * h + 2)[0]
    f = rf_normalize(Polynomial(F, sol[: h + 1]), Polynomial(F, sol[h + 1:]))
    assert f.degree <= h and iota(f, params) == m
    return f


def encode(m: int, params: CodeParams) -> Codeword:
    return word_of(function_of_message(m, params), params)


def enumerate_code(params: CodeParams) -> Iterator[tuple[int, Codeword]]:
    for m in range(params.messages.size):
        yield m, encode(m, params)


@functools.lru_cache(maxsize=32)
def codebook(params: CodeParams) -> tuple[Codeword, ...]:
    """All codewords, indexed by message."""
    return tuple(w for _, w in enumerate_code(params))


# ---------------------------------------------------------------------------
# recognition and decoding

def _interpolation_rows(w: Codeword, params: CodeParams, bound: int) -> list[list[int]]:
    """Homogeneous equations in (a_0..a_H, b_0..b_H) for ``a/b`` to match ``w``."""
    F = params.field
    n = bound + 1
    rows = []
    for P, y in zip(params.points, w):
        row = [0] * (2 * n)
        if P.den:
            x = P.num
            powers = [1]
            for _ in range(bound):
                powers.append(F.mul(powers[-1], x))
            if y.den:
                for j, xp in enumerate(powers):
                    row[j] = xp
                    row[n + j] = F.neg(F.mul(y.num, xp))
            else:
                row[n:] = powers
        elif y.den:
            row[bound] = 1
            row[n + bound] = F.neg(y.num)
        else:
            row[n + bound] = 1
        rows.append(row)
    return rows


def solution_space(w: Codeword, params: CodeParams, bound: int) -> list[list[int]]:
    """Basis of the solutions of the interpolation system at degree ``bound``."""
    if len(w) != params.N:
        raise LengthMismatch(f"word has {len(w)} symbols, code length is {params.N}")
    return nullspace(params.field, _interpolation_rows(w, params, bound), 2 * bound + 2)


def _split(sol: Sequence[int], params: CodeParams, bound: int) -> tuple[Polynomial, Polynomial]:
    F = params.field
    return Polynomial(F, sol[: bound + 1]), Polynomial(F, sol[bound + 1:])


def recognize(w: Codeword, params: CodeParams) -> RationalFunction | None:
    """The function whose word is ``w``, or ``None`` if ``w`` is not a codeword."""
    basis = solution_space(w, params, params.h)
    if not basis:
        return None
    a, b = _split(basis[0], params, params.h)
    try:
        f = rf_normalize(a, b)
    except NotAFunction:
        return None
    if f.degree > params.h or word_of(f, params) != w:
        return None
    return f


def decode(w: Codeword, params: CodeParams, e: int) -> RationalFunction:
    """Correct up to ``e`` errors, ``2(h+e) < N``.

    The word of ``f`` times an error-locating polynomial of degree ``<= e``
    solves the interpolation system at degree ``h+e``, and every nonzero
    solution reduces to ``f``; the result is re-verified before returning.
    """
    if e < 0 or 2 * (params.h + e) >= params.N:
        raise ValueError(f"need e >= 0 and 2(h+e) < N; got h={params.h}, e={e}, N={params.N}")
    bound = params.h + e
    basis = solution_space(w, params, bound)
    if not basis:
        raise NoSolution("interpolation system has only the zero solution")
    a, b = _split(basis[0], params, bound)
    try:
        f = rf_normalize(a, b)
    except NotAFunction as exc:
        raise VerificationFailed(f"solution is not a function: {exc}") from None
    if f.degree > params.h:
        raise VerificationFailed(f"candidate {f} has degree {f.degree} > h={params.h}")
    dist = hamming_distance(word_of(f, params), w)
    if dist > e:
        raise VerificationFailed(f"candidate {f} is at distance {dist} > e={e}")
    return f


# ---------------------------------------------------------------------------
# oracles and degradation

def brute_force_code(params: CodeParams) -> set[RationalFunction]:
    """Every coprime ``(a, b)`` with degrees ``<= h`` and ``b`` monic."""
    F, h = params.field, params.h
    if F.q ** (2 * h + 2) > BRUTE_FORCE_LIMIT:
        raise TooLarge(f"q^(2h+2) = {F.q ** (2 * h + 2)} exceeds {BRUTE_FORCE_LIMIT}")
    dens = [b for k in range(h + 1) for b in monic_polynomials(F, k)]
    out = set()
    for cs in itertools.product(range(F.q), repeat=h + 1):
        a = Polynomial(F, cs)
        for b in dens:
            if poly_gcd(a, b).degree == 0:
                out.add(RationalFunction(a, b))
    return out


def sample_forbidden(params: CodeParams, rng: random.Random | int | None = None) -> list[ProjectiveValue]:
    """One forbidden letter per coordinate, uniform over P^1(GF(q))."""
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    alphabet = point_list(params.field)
    return [rng.choice(alphabet) for _ in range(params.N)]


def degrade(
    params: CodeParams,
    forbidden: Sequence[ProjectiveValue] | None = None,
    rng: random.Random | int | None = None,
) -> list[Codeword]:
    """Codewords avoiding the forbidden letter at every coordinate.

    When ``forbidden`` is omitted it is drawn with :func:`sample_forbidden`.
    """
    if forbidden is None:
        forbidden = sample_forbidden(params, rng)
    if len(forbidden) != params.N:
        raise LengthMismatch(f"{len(forbidden)} forbidden letters for length {params.N}")
    return [w for w in codebook(params) if all(s != a for s, a in zip(w, forbidden))]
