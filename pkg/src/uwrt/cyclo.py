"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Elements are stored in the reduced power basis 1, zeta, ..., zeta^(phi(m)-1)
modulo the m-th cyclotomic polynomial, with rational coefficients.  Equality
is decided coefficient-wise after reduction; values of different orders are
compared by lifting both into Q(zeta_lcm).  Division uses the extended gcd
with the cyclotomic polynomial, so no embedding into the complex numbers is
ever needed.

Evaluation of Laurent polynomials in v = q^(1/4) at a root xi of odd order m
uses the canonical fourth root of xi that is itself a power of xi:
v -> xi^(((m+1)/2)^2).  All SO(3) quantities are q-integral, so this
convention never leaks into final SO(3) values.  At even order there is no
such canonical choice and fractional powers raise
:class:`FractionalPowerAtEvenOrder`; callers that accept a convention may use
:func:`ev_root_lifted`, which adjoins zeta_(4m) and sends v -> zeta_(4m)^j.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from . import _kernel
from .errors import FractionalPowerAtEvenOrder
from .qcalc import LaurentPoly, Num, _norm_num, cyclotomic_coeff_list, euler_phi


@lru_cache(maxsize=None)
def _field_data(m: int) -> tuple[int, tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """(phi, cyclotomic coefficients, reduction rows) for order m.

    Reduction row t is the coefficient vector of x^(phi+t) in the power
    basis; rows cover t = 0 .. phi-2, enough to reduce any product of two
    reduced elements.
    """
    coeffs = cyclotomic_coeff_list(m)
    phi = len(coeffs) - 1
    rows: list[tuple[int, ...]] = []
    # x^phi = -(c_0 + c_1 x + ... + c_{phi-1} x^{phi-1}); leading coeff is 1.
    current = [-c for c in coeffs[:phi]]
    rows.append(tuple(current))
    for _ in range(phi - 2):
        shifted = [0] + current[:-1]
        top = current[-1]
        if top:
            first = rows[0]
            shifted = [shifted[i] + top * first[i] for i in range(phi)]
        current = shifted
        rows.append(tuple(current))
    return phi, coeffs, tuple(rows)


def _reduce_dense(vec: list[Num], m: int) -> list[Num]:
    """Reduce a dense coefficient list (any length) mod the m-th cyclotomic
    polynomial, returning a list of length phi(m)."""
    phi, coeffs, _ = _field_data(m)
    vec = list(vec)
    for d in range(len(vec) - 1, phi - 1, -1):
        c = vec[d]
        if not c:
            continue
        vec[d] = 0
        for i in range(phi + 1):
            cf = coeffs[i]
            if cf:
                vec[d - phi + i] -= c * cf
        # subtracting c * x^(d-phi) * Phi_m cancels the degree-d term
    out = vec[:phi]
    out.extend([0] * (phi - len(out)))
    return out


class CycNumber:
    """An element of Q(zeta_m) in the reduced power basis."""

    __slots__ = ("m", "c")

    def __init__(self, m: int, coeffs):
        phi = _field_data(m)[0]
        c = [_norm_num(x) for x in coeffs]
        if len(c) > phi:
            c = _reduce_dense(c, m)
        c.extend([0] * (phi - len(c)))
        self.m = m
        self.c = tuple(_norm_num(x) for x in c)

    # -- constructors ----------------------------------------------------

    @staticmethod
    def from_rational(x: Num, m: int = 1) -> "CycNumber":
        return CycNumber(m, [x])

    @staticmethod
    def zero(m: int = 1) -> "CycNumber":
        return CycNumber(m, [])

    @staticmethod
    def one(m: int = 1) -> "CycNumber":
        return CycNumber(m, [1])

    @staticmethod
    def zeta(m: int, e: int = 1) -> "CycNumber":
        """zeta_m^e."""
        e %= m
        phi = _field_data(m)[0]
        if e < phi:
            vec = [0] * e + [1]
            return CycNumber(m, vec)
        return CycNumber(m, _reduce_dense([0] * e + [1], m))

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.c)

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.c[0])

    def lift(self, big: int) -> "CycNumber":
        """Image under Q(zeta_m) -> Q(zeta_big), zeta_m -> zeta_big^(big/m)."""
        if big == self.m:
            return self
        if big % self.m:
            raise ValueError("target order must be a multiple of the current order")
        step = big // self.m
        vec = [0] * ((len(self.c) - 1) * step + 1)
        for i, x in enumerate(self.c):
            if x:
                vec[i * step] = x
        return CycNumber(big, _reduce_dense(vec, big))

    def galois(self, j: int) -> "CycNumber":
        """Apply the automorphism zeta -> zeta^j (requires gcd(j, m) = 1)."""
        if math.gcd(j, self.m) != 1:
            raise ValueError(f"{j} is not invertible mod {self.m}")
        vec = [0] * self.m
        for i, x in enumerate(self.c):
            if x:
                vec[(i * j) % self.m] += x
        return CycNumber(self.m, _reduce_dense(vec, self.m))

    # -- arithmetic -------------------------------------------------------

    def _match(self, other: "CycNumber") -> tuple["CycNumber", "CycNumber"]:
        if self.m == other.m:
            return self, other
        big = self.m * other.m // math.gcd(self.m, other.m)
        return self.lift(big), other.lift(big)

    def _coerce(self, other) -> "CycNumber | None":
        if isinstance(other, CycNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return CycNumber(self.m, [other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._match(o)
        return CycNumber(a.m, [x + y for x, y in zip(a.c, b.c)])

    __radd__ = __add__

    def __neg__(self):
        return CycNumber(self.m, [-x for x in self.c])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycNumber(self.m, [x * other for x in self.c])
        if not isinstance(other, CycNumber):
            return NotImplemented
        a, b = self._match(other)
        phi, _, rows = _field_data(a.m)
        if phi == 1:
            return CycNumber(a.m, [a.c[0] * b.c[0]])
        vec = _kernel.cyc_mulreduce(a.c, b.c, rows, phi)
        return CycNumber(a.m, vec)

    __rmul__ = __mul__

    def inverse(self) -> "CycNumber":
        """Multiplicative inverse via extended gcd with the cyclotomic
        polynomial over Q."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        phi, coeffs, _ = _field_data(self.m)
        if phi == 1:
            return CycNumber(self.m, [Fraction(1) / Fraction(self.c[0])])
        # xgcd(a, Phi_m) over Q[x]: find u with u*a = gcd = const (Phi_m irreducible).
        a = [Fraction(x) for x in self.c]
        b = [Fraction(c) for c in coeffs]
        u_a: list[Fraction] = [Fraction(1)]
        u_b: list[Fraction] = [Fraction(0)]

        def deg(p):
            d = len(p) - 1
            while d >= 0 and not p[d]:
                d -= 1
            return d

        def poly_sub_scaled(p, q, coef, shift):
            out = list(p)
            need = len(q) + shift
            if len(out) < need:
                out.extend([Fraction(0)] * (need - len(out)))
            for i, x in enumerate(q):
                if x:
                    out[i + shift] -= coef * x
            return out

        ra, rb = a, b
        while True:
            da, db = deg(ra), deg(rb)
            if db < 0:
                break
            if da < db:
                ra, rb = rb, ra
                u_a, u_b = u_b, u_a
                continue
            coef = ra[da] / rb[db]
            ra = poly_sub_scaled(ra, rb, coef, da - db)
            u_a = poly_sub_scaled(u_a, u_b, coef, da - db)
            if deg(ra) < deg(rb):
                ra, rb = rb, ra
                u_a, u_b = u_b, u_a
        d = deg(ra)
        if d != 0:
            raise ZeroDivisionError("element is a zero divisor (not invertible)")
        scale = Fraction(1) / ra[0]
        inv = [x * scale for x in u_a]
        return CycNumber(self.m, _reduce_dense(inv, self.m))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._match(o)
        return a * b.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = CycNumber.one(self.m)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._match(o)
        return a.c == b.c

    def __hash__(self):
        return hash((self.m, self.c))

    def __bool__(self):
        return any(self.c)

    def __repr__(self):
        bits = []
        for i, x in enumerate(self.c):
            if not x:
                continue
            if i == 0:
                bits.append(str(x))
            elif i == 1:
                bits.append(f"{x}*z{self.m}")
            else:
                bits.append(f"{x}*z{self.m}^{i}")
        return "Cyc(" + (" + ".join(bits) or "0") + ")"

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {"order": self.m, "coeffs": [str(Fraction(x)) for x in self.c]}

    @staticmethod
    def from_json(obj: dict) -> "CycNumber":
        return CycNumber(int(obj["order"]), [Fraction(s) for s in obj["coeffs"]])


@dataclass(frozen=True)
class RootSpec:
    """A primitive root of unity zeta_m^j with gcd(j, m) = 1."""

    m: int
    j: int = 1

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("order must be >= 1")
        if math.gcd(self.j % self.m if self.m > 1 else 1, self.m) != 1:
            raise ValueError(f"gcd({self.j}, {self.m}) != 1: not a primitive root")

    def zeta_power(self, e: int) -> CycNumber:
        """xi^e as a CycNumber of order m, where xi = zeta_m^j."""
        return CycNumber.zeta(self.m, (self.j * e) % self.m)

    def power_root(self, c: int) -> "RootSpec":
        """The root xi^c; requires c | m, yielding a primitive root of order m/c."""
        if self.m % c:
            raise ValueError("c must divide the order")
        m1 = self.m // c
        return RootSpec(m1, self.j % m1 if m1 > 1 else 1)


def ev_root(f: LaurentPoly, root: RootSpec) -> CycNumber:
    """Evaluate a Laurent polynomial in v (v^4 = q) at q = zeta_m^j.

    For odd m, v maps to the canonical fourth root xi^(((m+1)/2)^2).  For
    even m only integer q-powers are allowed.
    """
    m, j = root.m, root.j
    vec: list[Num] = [0] * m
    if m % 2 == 1:
        s = ((m + 1) // 2) ** 2 % m
        for e, x in f._c.items():
            vec[(j * s * e) % m] += x
    else:
        for e, x in f._c.items():
            if e % 4:
                raise FractionalPowerAtEvenOrder(
                    f"exponent v^{e} at even order {m}"
                )
            vec[(j * (e // 4)) % m] += x
    return CycNumber(m, _reduce_dense(vec, m))


def ev_root_lifted(f: LaurentPoly, root: RootSpec) -> CycNumber:
    """Evaluate at q = zeta_m^j allowing fractional powers by adjoining a
    fourth root: v -> zeta_(4m)^j, an element of Q(zeta_(4m)).

    This is a recorded convention, only used for SU(2) values at even order.
    """
    m, j = root.m, root.j
    big = 4 * m
    vec: list[Num] = [0] * big
    for e, x in f._c.items():
        vec[(j * e) % big] += x
    return CycNumber(big, _reduce_dense(vec, big))


def gauss_sum(b: int, root: RootSpec) -> CycNumber:
    """The Gauss-sum variant sum over odd n in (0, 2m) of xi^(b(n^2-1)/4).

    Requires odd order; the exponent is an integer because 4 | n^2 - 1 for
    odd n.  Nonzero for every odd order and nonzero b.
    """
    m = root.m
    if m % 2 == 0:
        raise ValueError("gauss_sum needs a root of odd order")
    vec: list[Num] = [0] * m
    for n in range(1, 2 * m, 2):
        e = b * ((n * n - 1) // 4)
        vec[(root.j * e) % m] += 1
    return CycNumber(m, _reduce_dense(vec, m))


def _denominator_divides_power(den: int, b: int) -> bool:
    if den == 1:
        return True
    if b in (0, 1):
        return den == 1
    g = math.gcd(den, b)
    while g > 1:
        while den % g == 0:
            den //= g
        g = math.gcd(den, b)
    return den == 1


def is_integral(x: CycNumber, b: int = 1) -> bool:
    """True iff every coefficient's denominator divides a power of b.

    With b = 1 this asserts integer coordinates in the power basis (hence an
    algebraic integer).
    """
    if b < 1:
        raise ValueError("b must be a positive integer")
    for v in x.c:
        den = v.denominator if isinstance(v, Fraction) else 1
        if not _denominator_divides_power(den, b):
            return False
    return True


def rational_is_b_integral(x: Fraction | int, b: int = 1) -> bool:
    """True iff the rational x lies in Z[1/b]."""
    den = x.denominator if isinstance(x, Fraction) else 1
    return _denominator_divides_power(den, b)
