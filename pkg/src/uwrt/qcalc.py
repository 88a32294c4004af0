"""Exact q-calculus arithmetic.

Everything is built over the Laurent polynomial ring in a variable ``v``
with ``v**4 = q``, so that the framing factors ``q**((n*n-1)/4)`` are honest
monomials for every color ``n``.  Coefficients are arbitrary-precision
rationals (plain ints whenever the denominator is 1); arithmetic is exact
everywhere, floating point is never used.

The module supplies the standard q-symbols

    {n} = q^(n/2) - q^(-n/2)        [n] = {n}/{1}
    (x;q)_k = prod_{j=1..k} (1 - x q^(j-1))

together with bivariate Laurent polynomials in ``(q, z)`` where ``z`` stands
for the symbol ``q^n``, truncated power series, cyclotomic polynomials over
the integers, and exact resultants.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Union

from . import _kernel
from .errors import NotDivisible

Num = Union[int, Fraction]


def _norm_num(x: Num) -> Num:
    if type(x) is Fraction and x.denominator == 1:
        return int(x)
    return x


class LaurentPoly:
    """Sparse Laurent polynomial in ``v`` (``v**4 = q``) over the rationals.

    The representation is a dict from v-exponent to nonzero coefficient and
    is canonical: two values are equal iff their dicts are equal.  Instances
    are treated as immutable; all operations return new objects.

    >>> (LaurentPoly.q() + 1) * (LaurentPoly.q() - 1) == LaurentPoly.q(2) - 1
    True
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, Num] | None = None):
        c: dict[int, Num] = {}
        if coeffs:
            for e, x in coeffs.items():
                x = _norm_num(x)
                if x:
                    c[int(e)] = x
        self._c = c

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: 1})

    @staticmethod
    def v(exp: int = 1, coeff: Num = 1) -> "LaurentPoly":
        """The monomial coeff * v**exp."""
        return LaurentPoly({exp: coeff})

    @staticmethod
    def q(exp: int = 1, coeff: Num = 1) -> "LaurentPoly":
        """The monomial coeff * q**exp."""
        return LaurentPoly({4 * exp: coeff})

    @staticmethod
    def const(x: Num) -> "LaurentPoly":
        return LaurentPoly({0: x})

    @classmethod
    def _raw(cls, c: dict[int, Num]) -> "LaurentPoly":
        # Internal: adopt an already-normalized dict without copying.
        p = cls.__new__(cls)
        p._c = c
        return p

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._c

    def is_q_integral(self) -> bool:
        """True iff every exponent is a multiple of 4 (an honest power of q)
        and every coefficient is an integer."""
        return all(e % 4 == 0 and isinstance(x, int) for e, x in self._c.items())

    def terms(self) -> Iterator[tuple[int, Num]]:
        """(v-exponent, coefficient) pairs, ascending by exponent."""
        return iter(sorted(self._c.items()))

    def coeff_v(self, exp: int) -> Num:
        return self._c.get(exp, 0)

    def coeff_q(self, exp: int) -> Num:
        return self._c.get(4 * exp, 0)

    def degree(self) -> int:
        """Largest v-exponent; raises on the zero polynomial."""
        return max(self._c)

    def valuation(self) -> int:
        """Smallest v-exponent; raises on the zero polynomial."""
        return min(self._c)

    def constant_value(self) -> Num:
        """The value of a constant polynomial (raises otherwise)."""
        if not self._c:
            return 0
        if set(self._c) != {0}:
            raise ValueError(f"not a constant: {self}")
        return self._c[0]

    def q_coeff_dict(self) -> dict[int, Num]:
        """Exponent dict in q-units; raises if any exponent is fractional."""
        out = {}
        for e, x in self._c.items():
            if e % 4:
                raise ValueError(f"exponent v^{e} is not an integer power of q")
            out[e // 4] = x
        return out

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly({0: other})
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        big, small = (self._c, o._c) if len(self._c) >= len(o._c) else (o._c, self._c)
        out = dict(big)
        for e, x in small.items():
            c = out.get(e)
            if c is None:
                out[e] = x
            else:
                c = c + x
                if c:
                    out[e] = c
                else:
                    del out[e]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -x for e, x in self._c.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPoly()
            other = _norm_num(other)
            return LaurentPoly._raw({e: _norm_num(x * other) for e, x in self._c.items()})
        if isinstance(other, LaurentPoly):
            return LaurentPoly._raw(_kernel.lp_mul(self._c, other._c))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._c) == 1:
                (e, x), = self._c.items()
                if x in (1, -1):
                    return LaurentPoly({e * n: 1 if n % 2 == 0 else x})
            raise ValueError("negative powers only for unit monomials")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def shift_v(self, exp: int) -> "LaurentPoly":
        """Multiply by the monomial v**exp."""
        if not exp:
            return self
        return LaurentPoly._raw({e + exp: x for e, x in self._c.items()})

    def scale_exponents(self, m: int) -> "LaurentPoly":
        """Substitute v -> v**m (so q -> q**m when m is applied to q-powers)."""
        return LaurentPoly._raw({e * m: x for e, x in self._c.items()})

    def subs_q_power(self, m: int) -> "LaurentPoly":
        """Substitute q -> q**m; requires integer q-exponents."""
        out = {}
        for e, x in self._c.items():
            if e % 4:
                raise ValueError("substitution q -> q^m needs integer q-exponents")
            out[e * m] = x
        return LaurentPoly._raw(out)

    def map_coefficients(self, f) -> "LaurentPoly":
        return LaurentPoly({e: f(x) for e, x in self._c.items()})

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __bool__(self):
        return bool(self._c)

    # -- rendering ----------------------------------------------------------

    def render(self) -> str:
        """Canonical text: ascending exponents in q-units, e.g.
        ``-q^-1 + 2 + q^3``.  Fractional q-exponents print as ``q^(e/4)``."""
        if not self._c:
            return "0"
        parts: list[str] = []
        for e, x in sorted(self._c.items()):
            neg = x < 0
            ax = -x if neg else x
            if e == 0:
                body = str(ax)
            else:
                if e % 4 == 0:
                    expo = str(e // 4)
                else:
                    f = Fraction(e, 4)
                    expo = f"({f.numerator}/{f.denominator})"
                if ax == 1:
                    body = f"q^{expo}"
                elif isinstance(ax, Fraction):
                    body = f"({ax})q^{expo}"
                else:
                    body = f"{ax}q^{expo}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self.render()})"


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.one()
Q = LaurentPoly.q()


def exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Return c with a = b*c, raising :class:`NotDivisible` otherwise.

    Failure of this division is how violated divisibility claims surface,
    so the error message carries the remainder's leading data.
    """
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return LaurentPoly()
    r = dict(a._c)
    eb = max(b._c)
    cb = b._c[eb]
    min_shift = min(a._c) - min(b._c)
    out: dict[int, Num] = {}
    while r:
        er = max(r)
        shift = er - eb
        if shift < min_shift:
            raise NotDivisible(f"remainder of degree v^{er} dividing by {b!r}")
        c = r[er]
        if cb in (1, -1):
            t = c * cb
        else:
            t = _norm_num(Fraction(c) / Fraction(cb))
        out[shift] = t
        _kernel.lp_submul(r, b._c, t, shift)
    return LaurentPoly._raw(out)


# ---------------------------------------------------------------------------
# q-symbols
# ---------------------------------------------------------------------------


def qbrace(n: int) -> LaurentPoly:
    """{n} = q^(n/2) - q^(-n/2)."""
    if n == 0:
        return LaurentPoly()
    return LaurentPoly({2 * n: 1, -2 * n: -1})


def qint(n: int) -> LaurentPoly:
    """The quantum integer [n] = {n}/{1}, with [-n] = -[n].

    >>> qint(3) == LaurentPoly.q() + 1 + LaurentPoly.q(-1)
    True
    """
    if n == 0:
        return LaurentPoly()
    if n < 0:
        return -qint(-n)
    return LaurentPoly._raw({2 * (n - 1 - 2 * i): 1 for i in range(n)})


@lru_cache(maxsize=None)
def qfact(n: int) -> LaurentPoly:
    """[n]! = [1][2]...[n]."""
    if n <= 0:
        return LaurentPoly.one()
    return qfact(n - 1) * qint(n)


def q_pochhammer(m: int, k: int) -> LaurentPoly:
    """(q^m; q)_k = prod_{j=1..k} (1 - q^(m+j-1)) as a Laurent polynomial."""
    out = LaurentPoly.one()
    for j in range(k):
        out = out * (ONE - LaurentPoly.q(m + j))
    return out


# ---------------------------------------------------------------------------
# Bivariate Laurent polynomials in (q, z), z standing for q^n
# ---------------------------------------------------------------------------


class BivariatePoly:
    """Sparse Laurent polynomial in ``(v, z)`` with integer coefficients.

    Keys are pairs (v-exponent, z-exponent).  Substituting ``z -> q^n`` for a
    concrete integer n collapses to a :class:`LaurentPoly`, and that
    substitution is a ring homomorphism.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | None = None):
        c: dict[tuple[int, int], int] = {}
        if coeffs:
            for (i, a), x in coeffs.items():
                if x:
                    c[(int(i), int(a))] = int(x)
        self._c = c

    @staticmethod
    def zero() -> "BivariatePoly":
        return BivariatePoly()

    @staticmethod
    def one() -> "BivariatePoly":
        return BivariatePoly({(0, 0): 1})

    @staticmethod
    def monomial(coeff: int = 1, v_exp: int = 0, z_exp: int = 0) -> "BivariatePoly":
        return BivariatePoly({(v_exp, z_exp): coeff})

    @staticmethod
    def z(exp: int = 1) -> "BivariatePoly":
        return BivariatePoly({(0, exp): 1})

    @staticmethod
    def q(exp: int = 1) -> "BivariatePoly":
        return BivariatePoly({(4 * exp, 0): 1})

    @classmethod
    def _raw(cls, c) -> "BivariatePoly":
        p = cls.__new__(cls)
        p._c = c
        return p

    def is_zero(self) -> bool:
        return not self._c

    def terms(self) -> Iterator[tuple[tuple[int, int], int]]:
        return iter(sorted(self._c.items()))

    def _coerce(self, other):
        if isinstance(other, BivariatePoly):
            return other
        if isinstance(other, int):
            return BivariatePoly({(0, 0): other})
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._c)
        for k, x in o._c.items():
            c = out.get(k)
            if c is None:
                out[k] = x
            else:
                c = c + x
                if c:
                    out[k] = c
                else:
                    del out[k]
        return BivariatePoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePoly._raw({k: -x for k, x in self._c.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return BivariatePoly()
            return BivariatePoly._raw({k: x * other for k, x in self._c.items()})
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for (i1, a1), x1 in self._c.items():
            for (i2, a2), x2 in other._c.items():
                k = (i1 + i2, a1 + a2)
                c = out.get(k)
                x = x1 * x2
                if c is None:
                    out[k] = x
                else:
                    c = c + x
                    if c:
                        out[k] = c
                    else:
                        del out[k]
        return BivariatePoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers not supported")
        result = BivariatePoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def flip_z(self) -> "BivariatePoly":
        """Substitute z -> z^(-1)."""
        return BivariatePoly._raw({(i, -a): x for (i, a), x in self._c.items()})

    def subs_z(self, n: int) -> LaurentPoly:
        """Substitute z -> q^n (a ring homomorphism onto LaurentPoly)."""
        out: dict[int, Num] = {}
        for (i, a), x in self._c.items():
            e = i + 4 * n * a
            c = out.get(e)
            if c is None:
                out[e] = x
            else:
                c = c + x
                if c:
                    out[e] = c
                else:
                    del out[e]
        return LaurentPoly._raw(out)

    def z_exponents(self) -> set[int]:
        return {a for (_, a) in self._c}

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __repr__(self):
        if not self._c:
            return "BivariatePoly(0)"
        bits = []
        for (i, a), x in sorted(self._c.items()):
            bits.append(f"{x}*v^{i}*z^{a}")
        return "BivariatePoly(" + " + ".join(bits) + ")"


def pochhammer(x: tuple[int, int] | BivariatePoly, k: int) -> BivariatePoly:
    """(x; q)_k = prod_{j=1..k} (1 - x q^(j-1)) for a monomial x in (v, z).

    ``x`` may be given as an exponent pair (v-exponent, z-exponent) or as a
    one-term :class:`BivariatePoly`.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if isinstance(x, BivariatePoly):
        if len(x._c) != 1:
            raise ValueError("x must be a monomial")
        ((i, a), c), = x._c.items()
        if c != 1:
            raise ValueError("x must be a monic monomial")
    else:
        i, a = x
    out = BivariatePoly.one()
    for j in range(k):
        out = out * (BivariatePoly.one() - BivariatePoly.monomial(1, i + 4 * j, a))
    return out


def a_poly(k: int) -> tuple[BivariatePoly, LaurentPoly]:
    """Numerator and denominator of the cyclotomic-expansion kernel A(n, k).

    numerator   = prod_{i=0..k} (z + 1/z - q^i - q^(-i))
    denominator = (1 - q) (q^(k+1); q)_(k+1)

    Substituting z -> q^n into the numerator and dividing exactly by the
    denominator gives A(n, k); the numerator also equals
    (-1)^(k+1) (z; q)_(k+1) (1/z; q)_(k+1).
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    num = BivariatePoly.one()
    for i in range(k + 1):
        # Keys (4i, 0) and (-4i, 0) collide at i = 0, so build by summation.
        factor = (
            BivariatePoly({(0, 1): 1, (0, -1): 1})
            - BivariatePoly.monomial(1, 4 * i, 0)
            - BivariatePoly.monomial(1, -4 * i, 0)
        )
        num = num * factor
    den = (ONE - Q) * q_pochhammer(k + 1, k + 1)
    return num, den


@lru_cache(maxsize=None)
def a_value(n: int, k: int) -> LaurentPoly:
    """A(n, k) as an exact Laurent polynomial (z specialized to q^n)."""
    num, den = a_poly(k)
    return exact_div(num.subs_z(n), den)


# ---------------------------------------------------------------------------
# Truncated power series
# ---------------------------------------------------------------------------


class PowerSeries:
    """Power series in one variable truncated at a fixed order.

    Arithmetic is exact modulo q^order; the product of two series of the same
    order again has that order.
    """

    __slots__ = ("order", "c")

    def __init__(self, order: int, coeffs: Iterable[Num] = ()):
        if order < 1:
            raise ValueError("order must be >= 1")
        self.order = order
        c = [_norm_num(x) for x in coeffs][:order]
        c.extend([0] * (order - len(c)))
        self.c = c

    @staticmethod
    def one(order: int) -> "PowerSeries":
        return PowerSeries(order, [1])

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        o = min(self.order, other.order)
        return PowerSeries(o, [self.c[i] + other.c[i] for i in range(o)])

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        o = min(self.order, other.order)
        return PowerSeries(o, [self.c[i] - other.c[i] for i in range(o)])

    def __neg__(self) -> "PowerSeries":
        return PowerSeries(self.order, [-x for x in self.c])

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        o = min(self.order, other.order)
        out = [0] * o
        for i, x in enumerate(self.c[:o]):
            if not x:
                continue
            for j in range(o - i):
                y = other.c[j]
                if y:
                    out[i + j] += x * y
        return PowerSeries(o, out)

    def inverse(self) -> "PowerSeries":
        """Multiplicative inverse; requires an invertible constant term."""
        a0 = self.c[0]
        if not a0:
            raise ZeroDivisionError("series has zero constant term")
        inv0 = _norm_num(Fraction(1) / Fraction(a0))
        out = [inv0] + [0] * (self.order - 1)
        for n in range(1, self.order):
            acc = 0
            for j in range(1, n + 1):
                aj = self.c[j]
                if aj:
                    acc += aj * out[n - j]
            out[n] = _norm_num(-Fraction(acc) / Fraction(a0)) if acc else 0
        return PowerSeries(self.order, out)

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        o = min(self.order, other.order)
        return self.c[:o] == other.c[:o]

    def __repr__(self):
        bits = [f"{x}*q^{i}" for i, x in enumerate(self.c) if x]
        return "PowerSeries(" + (" + ".join(bits) or "0") + f" + O(q^{self.order}))"


def geometric_inverse(exponent: int, order: int) -> PowerSeries:
    """1 / (1 - q^exponent) as a truncated series."""
    c = [0] * order
    j = 0
    while j < order:
        c[j] = 1
        j += exponent
    return PowerSeries(order, c)


# ---------------------------------------------------------------------------
# Cyclotomic polynomials and resultants (integer coefficient lists, x = q)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def cyclotomic_coeff_list(n: int) -> tuple[int, ...]:
    """Dense ascending integer coefficients of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("n must be >= 1")
    # Divide x^n - 1 by all lower cyclotomic factors.
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d:
            continue
        div = cyclotomic_coeff_list(d)
        poly = _int_poly_divexact(poly, list(div))
    return tuple(poly)


def _int_poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # Exact division of dense integer polynomials, denominator monic +-1 lead.
    out = [0] * (len(num) - len(den) + 1)
    r = list(num)
    lead = den[-1]
    for i in range(len(out) - 1, -1, -1):
        c = r[i + len(den) - 1]
        if c % lead:
            raise NotDivisible("leading coefficient not divisible")
        t = c // lead
        out[i] = t
        if t:
            for j, d in enumerate(den):
                r[i + j] -= t * d
    if any(r):
        raise NotDivisible("nonzero remainder in dense division")
    return out


def cyclotomic_poly(n: int) -> LaurentPoly:
    """The n-th cyclotomic polynomial in q, integer coefficients, degree phi(n).

    >>> cyclotomic_poly(2) == LaurentPoly.q() + 1
    True
    """
    return LaurentPoly({4 * i: c for i, c in enumerate(cyclotomic_coeff_list(n))})


def euler_phi(n: int) -> int:
    out = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            out -= out // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out -= out // m
    return out


def _resultant_int_polys(f: list[Fraction], g: list[Fraction]) -> Fraction:
    """Resultant via the Euclidean remainder sequence over the rationals."""

    def deg(p):
        d = len(p) - 1
        while d >= 0 and not p[d]:
            d -= 1
        return d

    df, dg = deg(f), deg(g)
    if df < 0 or dg < 0:
        return Fraction(0)
    acc = Fraction(1)
    f = f[: df + 1]
    g = g[: dg + 1]
    while True:
        df, dg = deg(f), deg(g)
        if dg == 0:
            return acc * g[0] ** df
        # f mod g
        r = list(f)
        lg = g[dg]
        for i in range(df - dg, -1, -1):
            c = r[i + dg]
            if not c:
                continue
            t = c / lg
            for j in range(dg + 1):
                r[i + j] -= t * g[j]
        dr = deg(r)
        if dr < 0:
            return Fraction(0)
        acc *= Fraction(-1) ** (df * dg) * lg ** (df - dr)
        f, g = g, r[: dr + 1]


def cyclotomic_resultant(n: int, m: int) -> int:
    """Exact resultant of the n-th and m-th cyclotomic polynomials (n != m).

    Up to sign this is 1 unless m/n is a nonzero power of a single prime p,
    in which case it is a power of p.
    """
    if n == m:
        raise ValueError("orders must differ")
    f = [Fraction(c) for c in cyclotomic_coeff_list(n)]
    g = [Fraction(c) for c in cyclotomic_coeff_list(m)]
    r = _resultant_int_polys(f, g)
    if r.denominator != 1:
        raise ArithmeticError("resultant of integer polynomials must be an integer")
    return int(r)


def is_prime_power_ratio(n: int, m: int) -> bool:
    """True iff m/n = p^e for a prime p and a nonzero integer e."""
    a, b = max(n, m), min(n, m)
    if a % b:
        return False
    ratio = a // b
    if ratio == 1:
        return False
    p = 2
    while p * p <= ratio:
        if ratio % p == 0:
            while ratio % p == 0:
                ratio //= p
            return ratio == 1
        p += 1
    return True  # ratio is prime


def prime_factors(n: int) -> dict[int, int]:
    """Prime factorization of |n| as an exponent dict."""
    n = abs(n)
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out
