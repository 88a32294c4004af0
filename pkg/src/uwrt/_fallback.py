"""Pure-Python implementations of the hot arithmetic kernels.

Same contract as the compiled twin in ``_speedups.pyx``; selected by
``_kernel`` when the extension is unavailable or disabled.  Coefficients are
Python ints or Fractions; exponents are ints.  Zero coefficients are never
stored.
"""

BACKEND = "python"


def lp_mul(a, b):
    """Convolve two sparse exponent->coefficient dicts."""
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            x = ca * cb
            c = out.get(e)
            if c is None:
                out[e] = x
            else:
                c = c + x
                if c:
                    out[e] = c
                else:
                    del out[e]
    return out


def lp_submul(r, b, coef, shift):
    """In place: r -= coef * x^shift * b."""
    for eb, cb in b.items():
        e = eb + shift
        x = coef * cb
        c = r.get(e)
        if c is None:
            r[e] = -x
        else:
            c = c - x
            if c:
                r[e] = c
            else:
                del r[e]


def lp_addmul(acc, a, b):
    """In place: acc += a*b for sparse dicts."""
    if len(a) > len(b):
        a, b = b, a
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            x = ca * cb
            c = acc.get(e)
            if c is None:
                acc[e] = x
            else:
                c = c + x
                if c:
                    acc[e] = c
                else:
                    del acc[e]


def cyc_mulreduce(a, b, red_rows, phi):
    """Multiply two coefficient vectors of length phi and reduce modulo the
    cyclotomic polynomial whose reduction table is ``red_rows``.

    red_rows[t] is the coefficient vector of x^(phi+t) in the power basis.
    Returns a list of length phi (entries int or Fraction, zeros included).
    """
    conv = [0] * (2 * phi - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            if cb:
                conv[i + j] += ca * cb
    out = conv[:phi]
    while len(out) < phi:
        out.append(0)
    for t in range(phi - 1):
        c = conv[phi + t]
        if not c:
            continue
        row = red_rows[t]
        for idx in range(phi):
            rv = row[idx]
            if rv:
                out[idx] = out[idx] + c * rv
    return out
