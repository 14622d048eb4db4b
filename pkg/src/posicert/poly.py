"""Dense univariate polynomials with exact rational coefficients.

Coefficients are stored ascending (index i holds the coefficient of the i-th
power) as :class:`fractions.Fraction`.  Instances are immutable and always
normalized: no trailing zero coefficients, and the zero polynomial has an
empty coefficient tuple.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import reduce
from itertools import combinations
from typing import Iterable, Sequence

from . import kernels
from .report import PropertyReport

Rat = Fraction

#: Degree of the zero polynomial; compares below every integer.
ZERO_DEGREE = -math.inf


def as_rat(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/r"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rat(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


_RAT_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rat(text: str) -> Fraction:
    m = _RAT_RE.match(text)
    if not m:
        raise ValueError(f"malformed rational {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rat(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class ExactPoly:
    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self._hash = None

    @classmethod
    def monomial(cls, k: int, c=1) -> "ExactPoly":
        return cls([0] * k + [c])

    @classmethod
    def constant(cls, c) -> "ExactPoly":
        return cls([c])

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def low_order(self) -> int:
        """Index of the first nonzero coefficient (the power of q dividing f)."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        raise ValueError("zero polynomial has no lowest nonzero term")

    def is_standard(self) -> bool:
        return self.is_zero() or self.lc > 0

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return ExactPoly([x + b[i] if i < len(b) else x for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return ExactPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return ExactPoly()
        ia, da = _integerize(self.coeffs)
        ib, db = _integerize(other.coeffs)
        prod = kernels.poly_mul(ia, ib)
        d = da * db
        if d == 1:
            return ExactPoly(prod)
        return ExactPoly([Fraction(c, d) for c in prod])

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        out = ExactPoly([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c) -> "ExactPoly":
        c = as_rat(c)
        return ExactPoly([c * x for x in self.coeffs])

    def shift(self, k: int) -> "ExactPoly":
        """Multiply by q^k."""
        if not self.coeffs:
            return self
        return ExactPoly([0] * k + list(self.coeffs))

    def derivative(self) -> "ExactPoly":
        return ExactPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x) -> Fraction:
        x = as_rat(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: Fraction) -> int:
        """Sign of f(x), via integer homogeneous evaluation."""
        if not self.coeffs:
            return 0
        ic, _ = _integerize(self.coeffs)
        x = as_rat(x)
        v = kernels.homog_eval(ic, x.numerator, x.denominator)
        return (v > 0) - (v < 0)

    def monic(self) -> "ExactPoly":
        if not self.coeffs:
            return self
        return self.scale(1 / self.lc)

    def integer_primitive(self) -> list[int]:
        """Integer coefficient list with the same roots and sign as ``self``."""
        ic, _ = _integerize(self.coeffs)
        g = reduce(math.gcd, ic, 0)
        return [c // g for c in ic] if g > 1 else ic

    # -- comparisons / display ---------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __repr__(self):
        return f"ExactPoly({self.to_text()!r})"

    def __str__(self):
        return self.to_text()

    def to_text(self, var: str = "q") -> str:
        return format_poly(self, var)


def _coerce(x):
    if isinstance(x, ExactPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return ExactPoly([x])
    return NotImplemented


def _integerize(cs: Sequence[Fraction]) -> tuple[list[int], int]:
    """Scale rational coefficients to integers; returns (ints, common denom)."""
    d = 1
    for c in cs:
        if c.denominator != 1:
            d = d * c.denominator // math.gcd(d, c.denominator)
    if d == 1:
        return [c.numerator for c in cs], 1
    return [c.numerator * (d // c.denominator) for c in cs], d


ZERO = ExactPoly()
ONE = ExactPoly([1])
Q = ExactPoly([0, 1])


# -- module-level operations -------------------------------------------------


def add(f: ExactPoly, g: ExactPoly) -> ExactPoly:
    return f + g


def sub(f: ExactPoly, g: ExactPoly) -> ExactPoly:
    return f - g


def mul(f: ExactPoly, g: ExactPoly) -> ExactPoly:
    return f * g


def scale(f: ExactPoly, c) -> ExactPoly:
    return f.scale(c)


def derivative(f: ExactPoly) -> ExactPoly:
    return f.derivative()


def evaluate(f: ExactPoly, x) -> Fraction:
    return f(x)


def coeffwise_geq(f: ExactPoly, g: ExactPoly) -> PropertyReport:
    """Decide ``f >=_q g``: every coefficient of f - g is nonnegative."""
    diff = f - g
    rng = {"powers": [0, max(len(diff.coeffs) - 1, 0)]}
    for i, c in enumerate(diff.coeffs):
        if c < 0:
            return PropertyReport.fail(
                "coeffwise_geq", {"power": i, "value": c, "difference": diff}, rng
            )
    return PropertyReport.ok("coeffwise_geq", rng)


def four_seq_identity(a, b, c, d) -> tuple[Fraction, Fraction]:
    """Both sides of the four-sequence determinant identity.

    LHS = sum(a c) sum(b d) - sum(a d) sum(b c);
    RHS = sum over i < j of (a_i b_j - a_j b_i)(c_i d_j - c_j d_i).
    """
    n = len(a)
    if not (len(b) == len(c) == len(d) == n):
        raise ValueError("four_seq_identity needs four sequences of equal length")
    a, b, c, d = ([as_rat(x) for x in s] for s in (a, b, c, d))
    dot = lambda u, v: sum((x * y for x, y in zip(u, v)), Fraction(0))
    lhs = dot(a, c) * dot(b, d) - dot(a, d) * dot(b, c)
    rhs = sum(
        ((a[i] * b[j] - a[j] * b[i]) * (c[i] * d[j] - c[j] * d[i])
         for i, j in combinations(range(n), 2)),
        Fraction(0),
    )
    return lhs, rhs


# -- division, gcd -----------------------------------------------------------


def _divmod(f: ExactPoly, g: ExactPoly) -> tuple[ExactPoly, ExactPoly]:
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f.coeffs)
    dg = len(g.coeffs) - 1
    inv = 1 / g.lc
    q = [Fraction(0)] * max(len(r) - dg, 0)
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i] * inv
        if c:
            q[i - dg] = c
            for j, gj in enumerate(g.coeffs):
                r[i - dg + j] -= c * gj
    return ExactPoly(q), ExactPoly(r[:dg] if dg > 0 else [])


def exact_quotient(f: ExactPoly, g: ExactPoly) -> ExactPoly:
    """f / g, raising ValueError unless g divides f exactly."""
    q, r = _divmod(f, g)
    if not r.is_zero():
        raise ValueError(f"{g} does not divide {f}")
    return q


def gcd(f: ExactPoly, g: ExactPoly) -> ExactPoly:
    """Monic greatest common divisor."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    a, b = f, g
    while not b.is_zero():
        a, b = b, _divmod(a, b)[1].monic()
    return a.monic()


def squarefree_part(f: ExactPoly) -> ExactPoly:
    """Monic f / gcd(f, f')."""
    if f.is_zero():
        raise ValueError("squarefree part of the zero polynomial is undefined")
    return exact_quotient(f, gcd(f, f.derivative())).monic()


def squarefree_decomposition(f: ExactPoly) -> list[ExactPoly]:
    """Yun's algorithm: monic, pairwise coprime ``[g1, g2, ...]`` with
    ``f = lc * g1 * g2^2 * g3^3 ...`` (entries may be 1)."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    out = []
    a = gcd(f, f.derivative())
    b = exact_quotient(f, a)
    c = exact_quotient(f.derivative(), a)
    d = c - b.derivative()
    while b.degree > 0:
        a = gcd(b, d)
        out.append(a)
        b = exact_quotient(b, a)
        c = exact_quotient(d, a)
        d = c - b.derivative()
    while out and out[-1] == ONE:
        out.pop()
    return out


# -- canonical text form -----------------------------------------------------


def format_poly(f: ExactPoly, var: str = "q") -> str:
    if f.is_zero():
        return "0"
    parts = []
    for i, c in enumerate(f.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = format_rat(mag)
        else:
            pw = var if i == 1 else f"{var}^{i}"
            body = pw if mag == 1 else f"{format_rat(mag)}*{pw}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


_TERM_RE = re.compile(
    r"^(?:(?P<coef>\d+(?:/\d+)?)(?:\*?(?P<v1>[A-Za-z])(?:\^(?P<e1>\d+))?)?"
    r"|(?P<v2>[A-Za-z])(?:\^(?P<e2>\d+))?)$"
)


def parse_poly(text: str) -> ExactPoly:
    """Parse ``c0 + c1*q + c2*q^2 + ...`` (any single-letter variable)."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    if s[0] not in "+-":
        s = "+" + s
    tokens = re.findall(r"([+-])([^+-]*)", s)
    if "".join(sign + body for sign, body in tokens) != s:
        raise ValueError(f"malformed polynomial {text!r}")
    var = None
    acc: dict[int, Fraction] = {}
    for sign, body in tokens:
        m = _TERM_RE.match(body)
        if not m:
            raise ValueError(f"malformed term {body!r} in {text!r}")
        if m.group("coef") is not None:
            coef = parse_rat(m.group("coef"))
            v, e = m.group("v1"), m.group("e1")
        else:
            coef = Fraction(1)
            v, e = m.group("v2"), m.group("e2")
        power = 0
        if v is not None:
            if var is not None and v != var:
                raise ValueError(f"mixed variables in {text!r}")
            var = v
            power = int(e) if e is not None else 1
        acc[power] = acc.get(power, Fraction(0)) + (coef if sign == "+" else -coef)
    deg = max(acc)
    return ExactPoly([acc.get(i, 0) for i in range(deg + 1)])
