"""Exact univariate integer polynomials and real-root machinery.

Coefficients are Python ints stored in ascending order of degree.  Everything
that decides a classification (Sturm counts, squarefree decomposition,
discriminants, sign changes) is exact; only :func:`roots_numeric` touches
floating point.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]
# An endpoint for Sturm counting: a rational, or +/- infinity as a float.
Endpoint = Union[int, Fraction, float]

POS_INF = math.inf
NEG_INF = -math.inf

DK_MAX_ITER = 1000


class PolyError(ValueError):
    """Raised for invalid polynomial inputs (zero polynomial, bad text...)."""


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True, init=False)
class IntPoly:
    """Dense polynomial with arbitrary-precision integer coefficients.

    ``coeffs[i]`` is the coefficient of ``x**i``.  The zero polynomial has an
    empty coefficient tuple.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        vals = []
        for c in coeffs:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise PolyError(f"non-integer coefficient {c}")
                c = c.numerator
            vals.append(int(c))
        object.__setattr__(self, "coeffs", _trim(vals))

    # -- constructors -------------------------------------------------------
    @classmethod
    def x(cls, power: int = 1) -> IntPoly:
        return cls([0] * power + [1])

    @classmethod
    def const(cls, c: int) -> IntPoly:
        return cls([c])

    @classmethod
    def from_descending(cls, coeffs: Sequence[int]) -> IntPoly:
        return cls(reversed(list(coeffs)))

    # -- basic queries ------------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other: IntPoly | int) -> IntPoly:
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: IntPoly | int) -> IntPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other: IntPoly | int) -> IntPoly:
        return _coerce(other) - self

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            return self.scale(other)
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPoly:
        if e < 0:
            raise PolyError("negative exponent")
        result = IntPoly([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c: int) -> IntPoly:
        return IntPoly(c * a for a in self.coeffs)

    def shift(self, m: int) -> IntPoly:
        """Multiply by ``x**m``."""
        if m < 0:
            raise PolyError("negative shift")
        if not self.coeffs:
            return self
        return IntPoly((0,) * m + self.coeffs)

    def derivative(self) -> IntPoly:
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    # -- helpers ------------------------------------------------------------
    def content(self) -> int:
        return reduce(math.gcd, self.coeffs, 0)

    def primitive(self) -> IntPoly:
        """Primitive part with positive leading coefficient."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.lead < 0:
            g = -g
        return IntPoly(c // g for c in self.coeffs)

    def low_order(self) -> int:
        """Multiplicity of the root 0 (index of the lowest nonzero coefficient)."""
        if not self.coeffs:
            raise PolyError("zero input")
        return next(i for i, c in enumerate(self.coeffs) if c)

    def strip_x(self) -> tuple[int, IntPoly]:
        m = self.low_order()
        return m, IntPoly(self.coeffs[m:])

    def is_even(self) -> bool:
        return all(c == 0 for c in self.coeffs[1::2])

    def is_odd(self) -> bool:
        return all(c == 0 for c in self.coeffs[0::2])

    def compose_x2(self) -> IntPoly:
        """``p(x**2)``."""
        out = [0] * (2 * len(self.coeffs))
        out[0::2] = self.coeffs
        return IntPoly(out)

    def decompose_x2(self) -> IntPoly:
        """Return r with ``self == r(x**2)``; self must be even."""
        if not self.is_even():
            raise PolyError("polynomial is not even")
        return IntPoly(self.coeffs[0::2])

    def negate_var(self) -> IntPoly:
        """``p(-x)``."""
        return IntPoly(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))

    def __call__(self, at):
        return evaluate(self, at)


def _coerce(p: IntPoly | int) -> IntPoly:
    return p if isinstance(p, IntPoly) else IntPoly([p])


ZERO = IntPoly()
ONE = IntPoly([1])
X = IntPoly([0, 1])


# ---------------------------------------------------------------------------
# generic arithmetic entry point
# ---------------------------------------------------------------------------

def arith(p: IntPoly, q: IntPoly | int | None, op: str) -> IntPoly:
    """Dispatch ``op`` in {add, sub, mul, pow, shift, scale}.

    For ``pow``/``shift``/``scale`` the second argument is an int.
    """
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "pow":
        return p ** int(q)
    if op == "shift":
        return p.shift(int(q))
    if op == "scale":
        return p.scale(int(q))
    raise PolyError(f"unknown op {op!r}")


def evaluate(p: IntPoly, at):
    """Horner evaluation.  Exact for int/Fraction arguments."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * at + c
    return acc


# ---------------------------------------------------------------------------
# division, gcd, squarefree decomposition
# ---------------------------------------------------------------------------

def _divmod_q(a: Sequence[Number], b: Sequence[Number]) -> tuple[list, list]:
    """Division over Q on ascending coefficient lists; b nonzero, trimmed."""
    rem = [Fraction(c) for c in a]
    db = len(b) - 1
    lb = Fraction(b[-1])
    if len(rem) - 1 < db:
        return [], rem
    quot = [Fraction(0)] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i] / lb
        if c:
            quot[i - db] = c
            for j in range(db + 1):
                rem[i - db + j] -= c * b[j]
    rem = rem[:db]
    while rem and rem[-1] == 0:
        rem.pop()
    return quot, rem


def _primitive_from_rational(coeffs: Sequence[Fraction]) -> IntPoly:
    if not any(coeffs):
        return ZERO
    den = reduce(lambda a, b: a * b // math.gcd(a, b), (Fraction(c).denominator for c in coeffs), 1)
    return IntPoly(int(c * den) for c in coeffs).primitive()


def exact_quotient(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive part of ``a / b``; raises if b does not divide a over Q."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    q, r = _divmod_q(a.coeffs, b.coeffs)
    if r:
        raise PolyError("inexact polynomial division")
    return _primitive_from_rational(q)


def pseudo_remainder(a: IntPoly, b: IntPoly) -> IntPoly:
    """``prem(a, b)``: remainder of ``lc(b)**(deg a - deg b + 1) * a`` by b."""
    if b.is_zero():
        raise ZeroDivisionError("pseudo-remainder by zero polynomial")
    r = list(a.coeffs)
    db = b.degree
    lb = b.lead
    if len(r) - 1 < db:
        return a
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        r = [lb * v for v in r]
        if c:
            for j in range(db + 1):
                r[i - db + j] -= c * b.coeffs[j]
        r.pop()
    return IntPoly(r)


def gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd over Z[x] (positive leading coefficient)."""
    a, b = a.primitive(), b.primitive()
    while b:
        a, b = b, pseudo_remainder(a, b).primitive()
    return a


def _q_trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _q_sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> list:
    n = max(len(a), len(b))
    return _q_trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _q_deriv(a: Sequence[Fraction]) -> list:
    return [i * a[i] for i in range(1, len(a))]


def _q_monic_gcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> list:
    g = gcd(_primitive_from_rational(a), _primitive_from_rational(b))
    return [Fraction(c, g.lead) for c in g.coeffs]


def _q_div(a: Sequence[Fraction], b: Sequence[Fraction]) -> list:
    q, r = _divmod_q(a, b)
    assert not r, "inexact division in squarefree decomposition"
    return _q_trim(q)


def squarefree_decompose(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun's squarefree decomposition.

    Factors are primitive with positive leading coefficient, squarefree and
    pairwise coprime; the product of ``f**m`` equals ``p`` up to a rational
    constant.  Constants (degree-0 parts) are dropped.
    """
    if p.is_zero():
        raise PolyError("zero input")
    if p.degree == 0:
        return []
    f = [Fraction(c) for c in p.coeffs]
    df = _q_deriv(f)
    a = _q_monic_gcd(f, df)
    b = _q_div(f, a)
    c = _q_div(df, a)
    d = _q_sub(c, _q_deriv(b))
    out: list[tuple[IntPoly, int]] = []
    i = 1
    while len(b) > 1:
        y = _q_monic_gcd(b, d)
        if len(y) > 1:
            out.append((_primitive_from_rational(y), i))
        b = _q_div(b, y)
        c = _q_div(d, y)
        d = _q_sub(c, _q_deriv(b))
        i += 1
    return out


def is_squarefree(p: IntPoly) -> bool:
    if p.is_zero():
        raise PolyError("zero input")
    return gcd(p, p.derivative()).degree <= 0


# ---------------------------------------------------------------------------
# real roots: Sturm chains
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RootCountCertificate:
    total_degree: int
    real_root_count_with_multiplicity: int
    nonneg_real_root_count_with_multiplicity: int
    squarefree_factors: tuple[tuple[IntPoly, int], ...]


def sturm_chain(p: IntPoly) -> list[IntPoly]:
    """Sturm sequence via signed pseudo-remainders, content removed per step."""
    chain = [p.primitive(), p.derivative().primitive()]
    while chain[-1].degree > 0:
        a, b = chain[-2], chain[-1]
        r = pseudo_remainder(a, b)
        if r.is_zero():
            break
        # prem scales by lc(b)**(deg a - deg b + 1); undo its sign.
        if b.lead < 0 and (a.degree - b.degree + 1) % 2 == 1:
            r = -r
        g = r.content()
        chain.append(IntPoly(-c // g for c in r.coeffs))
    return [q for q in chain if q]


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def _sign_at(p: IntPoly, at: Endpoint) -> int:
    if at == POS_INF:
        return _sign(p.lead)
    if at == NEG_INF:
        return _sign(p.lead) * (-1 if p.degree % 2 else 1)
    return _sign(evaluate(p, Fraction(at)))


def _variations(signs: Iterable[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def _check_endpoint(v: Endpoint) -> Endpoint:
    if isinstance(v, float):
        if v in (POS_INF, NEG_INF):
            return v
        return Fraction(v)
    return Fraction(v)


def sturm_count(p: IntPoly, lo: Endpoint = NEG_INF, hi: Endpoint = POS_INF,
                chain: list[IntPoly] | None = None) -> int:
    """Number of distinct real roots of squarefree ``p`` in ``(lo, hi]``."""
    if p.is_zero():
        raise PolyError("zero input")
    lo, hi = _check_endpoint(lo), _check_endpoint(hi)
    if not lo < hi:
        raise PolyError("empty interval: need lo < hi")
    if chain is None:
        if not is_squarefree(p):
            raise PolyError("requires squarefree polynomial")
        chain = sturm_chain(p)
    return (_variations(_sign_at(q, lo) for q in chain)
            - _variations(_sign_at(q, hi) for q in chain))


def all_roots_real_nonneg(q: IntPoly) -> tuple[bool, RootCountCertificate]:
    """Decide whether every complex root of ``q`` is real and >= 0."""
    if q.is_zero():
        raise PolyError("zero input")
    factors = squarefree_decompose(q)
    real = nonneg = 0
    for f, m in factors:
        if f[0] == 0:
            real += m
            nonneg += m
            f = IntPoly(f.coeffs[1:])
        if f.degree <= 0:
            continue
        chain = sturm_chain(f)
        r = sturm_count(f, NEG_INF, POS_INF, chain=chain)
        neg = sturm_count(f, NEG_INF, 0, chain=chain)
        real += m * r
        nonneg += m * (r - neg)
    cert = RootCountCertificate(q.degree, real, nonneg, tuple(factors))
    return nonneg == q.degree, cert


# ---------------------------------------------------------------------------
# classical helpers
# ---------------------------------------------------------------------------

def cubic_discriminant(a: int, b: int, c: int, d: int) -> int:
    """Discriminant of ``a x^3 + b x^2 + c x + d``."""
    if a == 0:
        raise PolyError("not a cubic")
    return 18 * a * b * c * d - 4 * b ** 3 * d + b * b * c * c - 4 * a * c ** 3 - 27 * a * a * d * d


def descartes_sign_changes(p: IntPoly) -> int:
    if p.is_zero():
        raise PolyError("zero input")
    return _variations(_sign(c) for c in reversed(p.coeffs))


# ---------------------------------------------------------------------------
# numeric roots (display only)
# ---------------------------------------------------------------------------

def _horner_c(coeffs: Sequence[complex], z: complex) -> complex:
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def _durand_kerner(f: IntPoly) -> list[complex]:
    n = f.degree
    lead = f.lead
    if n == 1:
        return [complex(-f[0] / lead)]
    mon = [complex(Fraction(c, lead)) for c in f.coeffs]
    dmon = [i * mon[i] for i in range(1, len(mon))]
    radius = 1.0 + max(abs(c) for c in f.coeffs[:-1]) / abs(lead)
    z = [radius * cmath.exp(1j * (2 * math.pi * k / n + 0.4)) for k in range(n)]
    for _ in range(DK_MAX_ITER):
        worst = 0.0
        for i in range(n):
            zi = z[i]
            den = 1 + 0j
            for j in range(n):
                if j != i:
                    den *= zi - z[j]
            if den == 0:
                den = 1e-300
            step = _horner_c(mon, zi) / den
            z[i] = zi - step
            worst = max(worst, abs(step) / max(1.0, abs(zi)))
        if worst < 1e-14:
            break
    else:
        raise PolyError("root finder did not converge")
    # Newton polish on the squarefree factor
    for i in range(n):
        for _ in range(3):
            d = _horner_c(dmon, z[i])
            if d == 0:
                break
            z[i] -= _horner_c(mon, z[i]) / d
    return z


def roots_numeric(p: IntPoly) -> list[complex]:
    """All complex roots with multiplicity, sorted by (imag, real)."""
    if p.is_zero():
        raise PolyError("zero input")
    m, rest = p.strip_x()
    roots = [0j] * m
    for f, mult in squarefree_decompose(rest):
        for r in _durand_kerner(f):
            roots.extend([r] * mult)
    return sorted(roots, key=lambda r: (round(r.imag, 9), round(r.real, 9)))


# ---------------------------------------------------------------------------
# text form
# ---------------------------------------------------------------------------

def format_poly(p: IntPoly, var: str = "x") -> str:
    """Descending-power text, e.g. ``x^6+10*x^4+33*x^2+36``."""
    if p.is_zero():
        return "0"
    parts = []
    for e in range(p.degree, -1, -1):
        c = p[e]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = str(a)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if a == 1 else f"{a}*{mono}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    return out + "".join(s + b for s, b in parts[1:])


_TERM = re.compile(r"([+-])(?:(\d+)(?:\*?(x)(?:\^(\d+))?)?|(x)(?:\^(\d+))?)")


def parse_poly(text: str) -> IntPoly:
    """Inverse of :func:`format_poly` (whitespace tolerated)."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise PolyError("empty polynomial text")
    if s[0] not in "+-":
        s = "+" + s
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise PolyError(f"cannot parse polynomial at offset {pos}: {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        if m.group(2) is not None:
            c = int(m.group(2))
            e = (int(m.group(4)) if m.group(4) else 1) if m.group(3) else 0
        else:
            c = 1
            e = int(m.group(6)) if m.group(6) else 1
        coeffs[e] = coeffs.get(e, 0) + sign * c
        pos = m.end()
    deg = max(coeffs)
    return IntPoly(coeffs.get(i, 0) for i in range(deg + 1))
