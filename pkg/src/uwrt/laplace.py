"""The discrete Laplace transform and its consequences.

The transform L_{b,c;n} is the Z[q^(+-1)]-linear operator on Laurent
polynomials in (q, z) (z standing for q^n) that kills z^a unless c | a and
sends z^(c a1) to t^(-a1^2), where t is a formal symbol denoting q^(c^2/b).
No ring relation between t and q is imposed; instead each root xi of odd
order r with gcd(r, b) = c carries the evaluation rule

    q -> xi,   t -> xi^(c b1*)     (b1 = b/c, b1 b1* = 1 mod r/c)

which reproduces the square-completion identity

    sum over odd n in (0, 2r) of xi^(b(n^2-1)/4) f(xi, xi^n)
        = gamma_b(xi) * ev_xi(L_{b,c;n} f).

For |b| = 1 the symbol t is eagerly rewritten to q^(c^2/b) = q^(+-1), so the
images live in plain Laurent polynomials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .cyclo import CycNumber, RootSpec, ev_root, gauss_sum
from .errors import BadRootForTransform, NotDivisible, PoleAtSubstitution
from .qcalc import (
    ONE,
    Q,
    BivariatePoly,
    LaurentPoly,
    Num,
    PowerSeries,
    _norm_num,
    a_poly,
    a_value,
    exact_div,
    geometric_inverse,
    pochhammer,
    q_pochhammer,
    qint,
)


class FracPoly:
    """Laurent polynomial in (q, t) with rational coefficients, where t is
    the formal fractional power q^(c^2/b) of a transform L_{b,c;n}."""

    __slots__ = ("b", "c", "_t")

    def __init__(self, b: int, c: int, terms=None):
        if b == 0:
            raise ValueError("b must be nonzero")
        if c < 1:
            raise ValueError("c must be positive")
        self.b = b
        self.c = c
        t: dict[tuple[int, int], Num] = {}
        if terms:
            for (qe, te), x in terms.items():
                x = _norm_num(x)
                if x:
                    t[(int(qe), int(te))] = x
        self._t = t

    @classmethod
    def _raw(cls, b, c, t):
        p = cls.__new__(cls)
        p.b, p.c, p._t = b, c, t
        return p

    def is_zero(self) -> bool:
        return not self._t

    def terms(self):
        return sorted(self._t.items())

    def _check(self, other: "FracPoly"):
        if (self.b, self.c) != (other.b, other.c):
            raise ValueError("mixing transforms with different (b, c)")

    def __add__(self, other):
        if isinstance(other, FracPoly):
            self._check(other)
            out = dict(self._t)
            for k, x in other._t.items():
                v = out.get(k)
                if v is None:
                    out[k] = x
                else:
                    v = v + x
                    if v:
                        out[k] = v
                    else:
                        del out[k]
            return FracPoly._raw(self.b, self.c, out)
        return NotImplemented

    def __neg__(self):
        return FracPoly._raw(self.b, self.c, {k: -x for k, x in self._t.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return FracPoly(self.b, self.c)
            return FracPoly._raw(self.b, self.c, {k: _norm_num(x * other) for k, x in self._t.items()})
        if isinstance(other, LaurentPoly):
            other = FracPoly(self.b, self.c, {(e, 0): x for e, x in other.q_coeff_dict().items()})
        if isinstance(other, FracPoly):
            self._check(other)
            out: dict[tuple[int, int], Num] = {}
            for (q1, t1), x1 in self._t.items():
                for (q2, t2), x2 in other._t.items():
                    k = (q1 + q2, t1 + t2)
                    v = out.get(k)
                    x = x1 * x2
                    if v is None:
                        out[k] = x
                    else:
                        v = v + x
                        if v:
                            out[k] = v
                        else:
                            del out[k]
            return FracPoly._raw(self.b, self.c, out)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, FracPoly):
            return NotImplemented
        return (self.b, self.c) == (other.b, other.c) and self._t == other._t

    def __hash__(self):
        return hash((self.b, self.c, frozenset(self._t.items())))

    def __repr__(self):
        bits = [f"{x}*q^{qe}*t^{te}" for (qe, te), x in self.terms()]
        return f"FracPoly[b={self.b},c={self.c}](" + (" + ".join(bits) or "0") + ")"

    def to_laurent(self) -> LaurentPoly:
        """Rewrite t as the honest monomial q^(c^2/b); only for c^2/b integer
        (in particular |b| = 1)."""
        if (self.c * self.c) % self.b:
            raise ValueError("t is a genuine fractional power here")
        step = (self.c * self.c) // self.b
        out: dict[int, Num] = {}
        for (qe, te), x in self._t.items():
            e = 4 * (qe + te * step)
            v = out.get(e)
            if v is None:
                out[e] = x
            else:
                v = v + x
                if not v:
                    del out[e]
                else:
                    out[e] = v
        return LaurentPoly(out)


def laplace_transform(f: BivariatePoly, b: int, c: int) -> FracPoly:
    """Apply L_{b,c;n}: z^a -> 0 if c does not divide a, else t^(-(a/c)^2).

    The input must have integer q-exponents.
    """
    if b == 0:
        raise ValueError("b must be nonzero")
    out: dict[tuple[int, int], Num] = {}
    for (ve, a), x in f._c.items():
        if ve % 4:
            raise ValueError("transform input needs integer q-exponents")
        if a % c:
            continue
        a1 = a // c
        k = (ve // 4, -a1 * a1)
        v = out.get(k)
        if v is None:
            out[k] = x
        else:
            v = v + x
            if not v:
                del out[k]
            else:
                out[k] = v
    return FracPoly._raw(b, c, out)


def _inverse_mod(x: int, n: int) -> int:
    if n == 1:
        return 0
    return pow(x % n, -1, n)


def ev_frac(x: FracPoly, root: RootSpec) -> CycNumber:
    """Evaluate a transform image at a root of odd order r with (r, b) = c:
    q -> xi and t -> xi^(c b1*), the rule that matches the square-completion
    identity exactly."""
    r = root.m
    if r % 2 == 0:
        raise BadRootForTransform("roots of odd order only")
    if math.gcd(r, abs(x.b)) != x.c:
        raise BadRootForTransform(
            f"order {r} has gcd({r}, {x.b}) != {x.c} with the twist parameter"
        )
    r1 = r // x.c
    b1 = x.b // x.c
    b1s = _inverse_mod(b1, r1)
    t_exp = x.c * b1s
    out = CycNumber.zero(r)
    for (qe, te), coef in x._t.items():
        out = out + root.zeta_power(qe + te * t_exp) * coef
    return out


def f_unknot(b: int, root: RootSpec) -> CycNumber:
    """F_{U^b}(xi) = sum over odd n in (0, 2r) of xi^(b(n^2-1)/4) [n]^2(xi)."""
    r = root.m
    out = CycNumber.zero(r)
    for n in range(1, 2 * r, 2):
        w = ev_root(qint(n), root)
        out = out + root.zeta_power(b * ((n * n - 1) // 4)) * w * w
    return out


def sum_with_gauss_weight(f: BivariatePoly, b: int, root: RootSpec) -> CycNumber:
    """Left side of the square-completion identity:
    sum over odd n in (0, 2r) of xi^(b(n^2-1)/4) f(xi, xi^n)."""
    r = root.m
    out = CycNumber.zero(r)
    for n in range(1, 2 * r, 2):
        out = out + root.zeta_power(b * ((n * n - 1) // 4)) * ev_root(f.subs_z(n), root)
    return out


def verify_laplace_lemma(f: BivariatePoly, b: int, r: int, j: int = 1) -> bool:
    """Exact equality of both sides of the transform identity at the root
    zeta_r^j (odd r), with c = gcd(r, |b|)."""
    if r % 2 == 0:
        raise ValueError("odd order required")
    root = RootSpec(r, j)
    c = math.gcd(r, abs(b))
    lhs = sum_with_gauss_weight(f, b, root)
    rhs = gauss_sum(b, root) * ev_frac(laplace_transform(f, b, c), root)
    return lhs == rhs


# ---------------------------------------------------------------------------
# The elements Q_{b,k}
# ---------------------------------------------------------------------------


def _frac_exact_div(num: FracPoly, den: FracPoly) -> FracPoly:
    """Exact division of (q, t)-Laurent polynomials by leading-term
    elimination in lexicographic (t, q) order; raises NotDivisible."""
    if den.is_zero():
        raise ZeroDivisionError("division by zero")
    if num.is_zero():
        return FracPoly(num.b, num.c)
    r = dict(num._t)
    lead_d = max(den._t)
    cd = den._t[lead_d]
    bound = len(num._t) * (len(den._t) + 2) + 16
    out: dict[tuple[int, int], Num] = {}
    while r:
        if len(out) > bound:
            raise NotDivisible("quotient support exceeded bound")
        lead_r = max(r)
        shift = (lead_r[0] - lead_d[0], lead_r[1] - lead_d[1])
        coef = r[lead_r]
        t = coef * cd if cd in (1, -1) else _norm_num(Fraction(coef) / Fraction(cd))
        out[shift] = t
        for (qe, te), x in den._t.items():
            k = (qe + shift[0], te + shift[1])
            v = r.get(k)
            y = t * x
            if v is None:
                r[k] = -y
            else:
                v = v - y
                if v:
                    r[k] = v
                else:
                    del r[k]
    return FracPoly._raw(num.b, num.c, out)


def _laurent_as_frac(p: LaurentPoly, b: int, c: int) -> FracPoly:
    return FracPoly(b, c, {(e, 0): x for e, x in p.q_coeff_dict().items()})


@dataclass
class QbkElement:
    """Representative of the Laplace-image element attached to (b, k).

    For each divisor c of |b| arising as gcd(r, |b|), the representative is
    the ratio

        L_{b,c}(P_k) * (1-q)^2  /  ( q * (1-q)(q^(k+1);q)_(k+1) * L_{b,c}(P_0) )

    where P_k = prod_{i=0..k} (z + 1/z - q^i - q^(-i)).  When the division
    is exact in (q, t) the reduced polynomial form is stored as well; for
    |b| = 1 it collapses to a Laurent monomial in q.

    The defining identity, verified root by root, is

        ev(Q_{b,k}) * F_{U^b}(xi) = sum over odd n of xi^(b(n^2-1)/4) A(n,k),

    in the cross-multiplied form ev(num) * F = ev(den) * S, which holds at
    every odd root.  At roots where (q^(k+1); q)_(k+1) vanishes the
    denominator evaluates to zero and the ratio itself is not determined by
    this representative (the sum side then also carries no constraint on it,
    because the cyclotomic coefficients multiplying Q_{b,k} in any unified
    assembly vanish at exactly those roots).
    """

    b: int
    k: int
    _reps: dict = field(default_factory=dict, repr=False)

    def representative(self, c: int) -> tuple[FracPoly, FracPoly, FracPoly | None]:
        """(numerator, denominator, reduced or None) for a given c."""
        if abs(self.b) % c:
            raise ValueError(f"{c} does not divide |{self.b}|")
        rep = self._reps.get(c)
        if rep is not None:
            return rep
        pk_num, dk = a_poly(self.k)
        p0_num, _ = a_poly(0)
        d0 = (ONE - Q) * (ONE - Q)
        lk = laplace_transform(pk_num, self.b, c)
        l0 = laplace_transform(p0_num, self.b, c)
        num = lk * _laurent_as_frac(d0, self.b, c)
        den = _laurent_as_frac(dk * Q, self.b, c) * l0
        try:
            reduced = _frac_exact_div(num, den)
        except NotDivisible:
            reduced = None
        rep = (num, den, reduced)
        self._reps[c] = rep
        return rep

    def laurent(self) -> LaurentPoly:
        """The value as a plain Laurent polynomial; available for |b| = 1."""
        if abs(self.b) != 1:
            raise ValueError("plain Laurent form only for b = +-1")
        num, den, reduced = self.representative(1)
        if reduced is not None:
            return reduced.to_laurent()
        return exact_div(num.to_laurent(), den.to_laurent())

    def verify_at(self, root: RootSpec) -> dict:
        """Check the defining identity at one root; returns a report row."""
        r = root.m
        c = math.gcd(r, abs(self.b))
        num, den, reduced = self.representative(c)
        s = CycNumber.zero(r)
        for n in range(1, 2 * r, 2):
            if n > self.k:
                s = s + root.zeta_power(self.b * ((n * n - 1) // 4)) * ev_root(
                    a_value(n, self.k), root
                )
        f = f_unknot(self.b, root)
        ev_num = ev_frac(num, root)
        ev_den = ev_frac(den, root)
        ok = ev_num * f == ev_den * s
        degenerate = ev_den.is_zero()
        if not degenerate and reduced is not None:
            ok = ok and ev_frac(reduced, root) * f == s
        return {
            "b": self.b,
            "k": self.k,
            "r": r,
            "j": root.j,
            "pass": bool(ok),
            "degenerate": degenerate,
        }


def q_bk(b: int, k: int) -> QbkElement:
    """The transform element for twist parameter b (+-1 or +-(prime power))
    and expansion index k."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if b == 0:
        raise ValueError("b must be nonzero")
    return QbkElement(b, k)


def closed_form_check(k: int) -> bool:
    """Exact identity L_{-1,1;n}((q^n;q)_(k+1) (q^(-n);q)_(k+1))
    = 2 (q^(k+1); q)_(k+1), with t = q^(-1) rewritten monomially."""
    prod = pochhammer((0, 1), k + 1) * pochhammer((0, -1), k + 1)
    lhs = laplace_transform(prod, -1, 1).to_laurent()
    return lhs == 2 * q_pochhammer(k + 1, k + 1)


# ---------------------------------------------------------------------------
# Andrews identity (under numeric q-power substitutions)
# ---------------------------------------------------------------------------


class _RatFunc:
    """Rational function as an unreduced fraction of Laurent polynomials."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly = ONE):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den

    def __add__(self, other: "_RatFunc") -> "_RatFunc":
        return _RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __mul__(self, other: "_RatFunc") -> "_RatFunc":
        return _RatFunc(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "_RatFunc") -> "_RatFunc":
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return _RatFunc(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        return self.num * other.den == other.num * self.den


def _poch_q_power(m: int, n: int) -> LaurentPoly:
    """(q^m; q)_n."""
    return q_pochhammer(m, n)


def _check_poch_pole(m: int, n: int, label: str):
    """(q^m; q)_n vanishes identically iff -(n-1) <= m <= 0."""
    if n >= 1 and -(n - 1) <= m <= 0:
        raise PoleAtSubstitution(f"(q^{m};q)_{n} = 0 in denominator factor {label}")


def andrews_check(n_top: int, k: int, b_exps: list[int], c_exps: list[int]) -> bool:
    """Verify the multi-sum Pochhammer identity with b_i = q^(b_exps[i]),
    c_i = q^(c_exps[i]) as exact rational functions in q.

    Raises :class:`PoleAtSubstitution` when a denominator Pochhammer factor
    vanishes identically under the substitution.
    """
    if not (len(b_exps) == len(c_exps) == k):
        raise ValueError("need k substitution exponents for the b's and the c's")
    if n_top < 1 or k < 1:
        raise ValueError("N and k must be >= 1")
    n_max = n_top

    for i in range(k):
        _check_poch_pole(1 - b_exps[i], n_max, f"(q/b_{i + 1})_n")
        _check_poch_pole(1 - c_exps[i], n_max, f"(q/c_{i + 1})_n")
    _check_poch_pole(b_exps[-1] + c_exps[-1] - n_top, n_top, "(q^(-N) b_k c_k)_(n_k)")

    one = _RatFunc(ONE)

    def rf(p: LaurentPoly) -> _RatFunc:
        return _RatFunc(p)

    # Left side.
    lhs = one
    for n in range(1, n_top + 1):
        term = rf(LaurentPoly.q(k * n + n_top * n) * (ONE + LaurentPoly.q(n)))
        term = term * rf(_poch_q_power(-n_top, n)) / rf(_poch_q_power(n_top + 1, n))
        for i in range(k):
            term = term * rf(_poch_q_power(b_exps[i], n) * LaurentPoly.q(-b_exps[i] * n))
            term = term * rf(_poch_q_power(c_exps[i], n) * LaurentPoly.q(-c_exps[i] * n))
            term = term / rf(_poch_q_power(1 - b_exps[i], n) * _poch_q_power(1 - c_exps[i], n))
        lhs = lhs + term

    # Right side prefactor.
    rhs_pref = rf(_poch_q_power(1, n_top) * _poch_q_power(1 - b_exps[-1] - c_exps[-1], n_top))
    rhs_pref = rhs_pref / rf(
        _poch_q_power(1 - b_exps[-1], n_top) * _poch_q_power(1 - c_exps[-1], n_top)
    )

    # Right side multi-sum over chains 0 = n_1 <= n_2 <= ... <= n_k <= N.
    def chains(length: int, top: int):
        if length == 1:
            yield (0,)
            return
        for rest in chains(length - 1, top):
            for nk in range(rest[-1], top + 1):
                yield rest + (nk,)

    total = _RatFunc(LaurentPoly.zero())
    for chain in chains(k, n_top):
        nk = chain[-1]
        term = rf(LaurentPoly.q(nk) * _poch_q_power(-n_top, nk))
        term = term * rf(_poch_q_power(b_exps[-1], nk) * _poch_q_power(c_exps[-1], nk))
        term = term / rf(_poch_q_power(b_exps[-1] + c_exps[-1] - n_top, nk))
        for i in range(k - 1):
            ni, ni1 = chain[i], chain[i + 1]
            term = term * rf(
                LaurentPoly.q(ni - b_exps[i] * ni - c_exps[i] * ni)
                * _poch_q_power(b_exps[i], ni)
                * _poch_q_power(c_exps[i], ni)
                * _poch_q_power(1 - b_exps[i] - c_exps[i], ni1 - ni)
            )
            term = term / rf(
                _poch_q_power(1, ni1 - ni)
                * _poch_q_power(1 - b_exps[i], ni1)
                * _poch_q_power(1 - c_exps[i], ni1)
            )
        total = total + term

    rhs = rhs_pref * total
    return lhs == rhs


# ---------------------------------------------------------------------------
# Rogers-Ramanujan
# ---------------------------------------------------------------------------


def rr_check(order: int) -> bool:
    """Series identity: prod 1/((1-q^(5k-4))(1-q^(5k-1))) equals
    sum q^(n^2) / (q;q)_n, compared exactly modulo q^order."""
    if order < 1:
        raise ValueError("order must be >= 1")
    lhs = PowerSeries.one(order)
    j = 1
    while j < order:
        if j % 5 in (1, 4):
            lhs = lhs * geometric_inverse(j, order)
        j += 1
    rhs = PowerSeries.one(order)
    n = 1
    while n * n < order:
        poch = PowerSeries.one(order)
        for i in range(1, n + 1):
            c = [0] * order
            c[0] = 1
            if i < order:
                c[i] = -1
            poch = poch * PowerSeries(order, c)
        shifted = [0] * order
        inv = poch.inverse()
        for idx in range(order - n * n):
            shifted[idx + n * n] = inv.c[idx]
        rhs = rhs + PowerSeries(order, shifted)
        n += 1
    return lhs == rhs
