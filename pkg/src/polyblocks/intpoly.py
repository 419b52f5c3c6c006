"""Exact integer polynomials: evaluation, resultants, discriminants and the
difference-of-roots companion polynomial.

Coefficient sequences are stored constant term first, so ``coeffs[i]`` is the
coefficient of ``X**i``.  The module-level helpers work on plain tuples and
may produce constants or the zero polynomial (the empty tuple); the public
:class:`IntPoly` type always has degree >= 1.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd, isqrt

from .errors import CompanionUndefined, MalformedPolynomial, PreconditionFailed
from .primes import divisors


# --- coefficient-tuple helpers -------------------------------------------

def trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def deg(a):
    return len(a) - 1


def padd(a, b):
    n = max(len(a), len(b))
    return trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))


def psub(a, b):
    return padd(a, tuple(-c for c in b))


def pmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def pscale(a, c):
    return trim(c * x for x in a)


def horner(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def taylor_shift(a, t):
    """Coefficients of a(X + t)."""
    out = [0] * len(a)
    for i, c in enumerate(a):
        if c:
            tp = 1
            for j in range(i, -1, -1):
                # c * C(i, j) * t**(i-j) contributes to X**j
                out[j] += c * comb(i, j) * tp
                tp *= t
    return trim(out)


def derivative(a):
    return trim(i * a[i] for i in range(1, len(a)))


def content(a):
    g = 0
    for c in a:
        g = gcd(g, c)
    return g


def prem(a, b):
    """Pseudo-remainder: lc(b)**(deg a - deg b + 1) * a = q*b + r."""
    r = list(a)
    db, lb = deg(b), b[-1]
    e = deg(a) - db + 1
    while r and deg(r) >= db:
        lr, shift = r[-1], deg(r) - db
        r = [lb * c for c in r]
        for i, c in enumerate(b):
            r[i + shift] -= lr * c
        r = list(trim(r))
        e -= 1
    return trim(lb**e * c for c in r)


def _exact_div(a, c):
    out = []
    for x in a:
        q, rem = divmod(x, c)
        if rem:
            raise ArithmeticError("inexact division in subresultant sequence")
        out.append(q)
    return tuple(out)


def resultant_coeffs(a, b):
    """Sylvester-orientation resultant of two coefficient tuples (subresultant PRS)."""
    a, b = trim(a), trim(b)
    if not a or not b:
        return 0
    if deg(a) == 0:
        return a[0] ** deg(b)
    if deg(b) == 0:
        return b[0] ** deg(a)
    ca, cb = content(a), content(b)
    if a[-1] < 0:
        ca = -ca
    if b[-1] < 0:
        cb = -cb
    a, b = _exact_div(a, ca), _exact_div(b, cb)
    t = ca ** deg(b) * cb ** deg(a)
    s = 1
    if deg(a) < deg(b):
        a, b = b, a
        if deg(a) % 2 and deg(b) % 2:
            s = -s
    g = h = 1
    while True:
        delta = deg(a) - deg(b)
        if deg(a) % 2 and deg(b) % 2:
            s = -s
        r = prem(a, b)
        if not r:
            return 0
        a, b = b, _exact_div(r, g * h**delta)
        g = a[-1]
        h = h if delta == 0 else g**delta // h ** (delta - 1)
        if deg(b) == 0:
            da = deg(a)
            if da == 0:
                return s * t
            hb = b[0] ** da
            return s * t * (hb // h ** (da - 1))


def interpolate(xs, ys):
    """Exact Newton interpolation; returns integer coefficients (low first)."""
    n = len(xs)
    dd = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        # poly = poly * (X - xs[i]) + dd[i]
        new = [Fraction(0)] * n
        for j in range(n - 1):
            new[j + 1] += poly[j]
            new[j] -= xs[i] * poly[j]
        new[0] += dd[i]
        poly = new
    if any(c.denominator != 1 for c in poly):
        raise ArithmeticError("interpolant is not integral")
    return trim(int(c) for c in poly)


def rational_roots(a):
    """Distinct rational roots of a nonzero coefficient tuple, sorted."""
    a = trim(a)
    roots = set()
    while a and a[0] == 0:
        roots.add(Fraction(0))
        a = a[1:]
    if deg(a) < 1:
        return sorted(roots)
    for q in divisors(a[-1]):
        for p in divisors(a[0]):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                # evaluate q**d * a(p/q) to stay in integers
                num, den = cand.numerator, cand.denominator
                d = deg(a)
                val = sum(c * num**i * den ** (d - i) for i, c in enumerate(a))
                if val == 0:
                    roots.add(cand)
    return sorted(roots)


# --- public types ----------------------------------------------------------

@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial of degree >= 1; ``coeffs[i]`` multiplies ``X**i``."""

    coeffs: tuple

    def __post_init__(self):
        c = tuple(int(x) for x in self.coeffs)
        if len(c) < 2:
            raise MalformedPolynomial("polynomial must have degree >= 1")
        if c[-1] == 0:
            raise MalformedPolynomial("leading (last) coefficient is zero; trailing zeros are not trimmed")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def parse(cls, text):
        """Parse the canonical form ``"a0,a1,...,ak"``."""
        try:
            coeffs = [int(tok) for tok in text.replace(" ", "").split(",")]
        except ValueError:
            raise MalformedPolynomial(f"not a coefficient list: {text!r}") from None
        return cls(tuple(coeffs))

    @classmethod
    def from_coeffs(cls, coeffs):
        return cls(tuple(coeffs))

    def __str__(self):
        return ",".join(str(c) for c in self.coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1]

    def __call__(self, n):
        return horner(self.coeffs, n)

    def shift(self, t):
        return IntPoly(taylor_shift(self.coeffs, t))

    def derivative(self):
        return derivative(self.coeffs)

    @property
    def content(self):
        c = content(self.coeffs)
        return -c if self.lead < 0 else c

    def primitive(self):
        c = self.content
        return IntPoly(tuple(x // c for x in self.coeffs))

    def pretty(self):
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            if mono and abs(c) == 1:
                coef = "-" if c < 0 else "+"
            else:
                coef = f"{c:+d}"
            terms.append(f"{coef}{mono}")
        s = "".join(terms)
        return s[1:] if s.startswith("+") else s


def evaluate(f, n):
    return horner(f.coeffs, n)


def resultant(f, g):
    """Res(f, g), Sylvester determinant with the rows of ``f`` first."""
    fa = f.coeffs if isinstance(f, IntPoly) else f
    ga = g.coeffs if isinstance(g, IntPoly) else g
    return resultant_coeffs(fa, ga)


def discriminant(f):
    k = f.degree
    if k < 2:
        raise PreconditionFailed("discriminant needs degree >= 2")
    r = resultant_coeffs(f.coeffs, f.derivative())
    sign = -1 if (k * (k - 1) // 2) % 2 else 1
    q, rem = divmod(sign * r, f.lead)
    assert rem == 0
    return q


def shift_resultant(f):
    """Res_X(f(X), f(X+Y)) as a coefficient tuple in Y.

    Computed by evaluating the integer resultant at k**2 + 1 points and
    interpolating; the Y-degree is exactly k**2.
    """
    k = f.degree
    xs = list(range(k * k + 1))
    ys = [resultant_coeffs(f.coeffs, taylor_shift(f.coeffs, y)) for y in xs]
    return interpolate(xs, ys)


@dataclass(frozen=True)
class CompanionPoly:
    poly: IntPoly
    source: IntPoly
    # Res_X(f(X), f(X+Y)) before dividing out a_k**2 * Y**k
    shift_resultant: tuple = field(repr=False, compare=False, default=())

    @property
    def scale(self):
        return self.source.lead ** 2


def companion(f):
    """The polynomial whose roots are the differences alpha_i - alpha_j (i != j),
    scaled by a_k**(2k-2), obtained from Res_X(f(X), f(X+Y)) = a_k**2 Y**k g(Y).
    """
    k = f.degree
    if k < 2:
        raise CompanionUndefined("no pairs of distinct roots for degree < 2")
    res = shift_resultant(f)
    if any(res[:k]):
        raise ArithmeticError("shift resultant not divisible by Y**k")
    quot = _exact_div(res[k:], f.lead**2)
    poly = IntPoly(quot)
    if poly.degree != k * (k - 1):
        raise ArithmeticError("companion has the wrong degree")
    return CompanionPoly(poly, f, res)


def companion_closed_form(f):
    """Direct formulas for degrees 2 and 3 (independent of the resultant route)."""
    a = f.coeffs
    disc = discriminant(f)
    if f.degree == 2:
        return IntPoly((-disc, 0, a[2] ** 2))
    if f.degree == 3:
        # (a3^2 X^2 + 3 a1 a3 - a2^2)^2 X^2 - disc
        u, v = a[3] ** 2, 3 * a[1] * a[3] - a[2] ** 2
        return IntPoly((-disc, 0, v * v, 0, 2 * u * v, 0, u * u))
    raise PreconditionFailed("closed form only for degree 2 or 3")


@dataclass(frozen=True)
class GaloisReport:
    reducible: bool
    group: str  # "S2", "S3", "A3" or "NotApplicable"
    delta: Fraction
    discriminant: int
    content: int = 1


def is_square(n):
    return n >= 0 and isqrt(n) ** 2 == n


def classify(f):
    """Reducibility, Galois group and prime-divisor density for degree 2 or 3.

    Reducible inputs report group ``NotApplicable``; they have a rational root,
    so every prime outside finitely many divides some value and delta is 1.
    """
    if f.degree not in (2, 3):
        raise PreconditionFailed("classify handles degree 2 or 3 only")
    prim = f.primitive()
    disc = discriminant(f)
    if rational_roots(prim.coeffs):
        return GaloisReport(True, "NotApplicable", Fraction(1), disc, f.content)
    if f.degree == 2:
        return GaloisReport(False, "S2", Fraction(1, 2), disc, f.content)
    if is_square(disc):
        return GaloisReport(False, "A3", Fraction(1, 3), disc, f.content)
    return GaloisReport(False, "S3", Fraction(2, 3), disc, f.content)


def prime_density(f):
    """delta_f for degree <= 3, None when not determined here."""
    if f.degree == 1:
        return Fraction(1)
    if f.degree in (2, 3):
        return classify(f).delta
    return None


def integer_roots(f):
    return [int(r) for r in rational_roots(f.coeffs) if r.denominator == 1]
