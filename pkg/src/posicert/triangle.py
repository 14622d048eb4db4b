"""Triangular arrays generated from declarative recurrences.

Four recurrence families are supported, all with ``T[0][0] = 1`` and
``T[n][k] = 0`` outside ``0 <= k <= n`` unless a spec overrides the initial
row:

``AffineTwoTerm``
    ``T[n][k] = (a0 n + a2 k + a3) T[n-1][k] + (b0 n + b2 k + b3) T[n-1][k-1]``
``QuadraticTwoTerm``
    as above with additional ``a1 k^2`` and ``b1 k^2`` terms
``GeneralThreeTermLeft``
    ``T[n][k] = (r(n)+f(k)) T[n-1][k] + (s(n)+g(k)) T[n-1][k-1]
    + (t(n)+h(k)) T[n-1][k-2]``
``ThreeTermRight``
    ``T[n][k] = f(k) T[n-1][k-1] + g(k) T[n-1][k] + h(k) T[n-1][k+1]``

Coefficient functions are :class:`ExactPoly` objects in one integer
variable.  ``Builtin`` specs name an entry of the catalog and resolve to one
of the concrete families.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from .poly import ONE, ExactPoly, as_rat, format_poly, format_rat, parse_poly

AFFINE = "AffineTwoTerm"
QUADRATIC = "QuadraticTwoTerm"
GENERAL = "GeneralThreeTermLeft"
RIGHT = "ThreeTermRight"
BUILTIN = "Builtin"
FAMILIES = (AFFINE, QUADRATIC, GENERAL, RIGHT, BUILTIN)

_PARAM_KEYS = {
    AFFINE: ("a0", "a2", "a3", "b0", "b2", "b3"),
    QUADRATIC: ("a0", "a1", "a2", "a3", "b0", "b1", "b2", "b3"),
    GENERAL: ("r", "s", "t", "f", "g", "h"),
    RIGHT: ("f", "g", "h"),
    BUILTIN: (),
}
# variable letter used when a coefficient function is written out as text
_FUNC_VAR = {"r": "n", "s": "n", "t": "n", "f": "k", "g": "k", "h": "k"}


class SpecError(ValueError):
    """A triangle spec failed validation."""


@dataclass(frozen=True)
class Initial:
    """Boundary convention: row ``start`` is given explicitly, rows below it
    do not exist."""

    start: int = 0
    row: tuple = (Fraction(1),)


@dataclass(frozen=True)
class TriangleSpec:
    family: str
    params: dict = field(default_factory=dict)
    builtin: str | None = None
    z: Fraction | None = None
    m: Fraction | None = None
    fixed_q: Fraction | None = None
    initial: Initial = Initial()

    def __post_init__(self):
        validate(self)


def _poly_n(*coeffs) -> ExactPoly:
    return ExactPoly(coeffs)


def validate(spec: TriangleSpec) -> None:
    if spec.family not in FAMILIES:
        raise SpecError(f"unknown family {spec.family!r}")
    if spec.family == BUILTIN:
        if spec.builtin is None:
            raise SpecError("Builtin spec requires a builtin identifier")
        if spec.builtin not in _CATALOG:
            raise SpecError(f"unknown builtin {spec.builtin!r}")
        return
    expected = set(_PARAM_KEYS[spec.family])
    got = set(spec.params)
    if got != expected:
        missing, extra = sorted(expected - got), sorted(got - expected)
        raise SpecError(
            f"{spec.family} params mismatch (missing {missing}, unexpected {extra})"
        )
    want = ExactPoly if spec.family in (GENERAL, RIGHT) else Fraction
    for k, v in spec.params.items():
        if not isinstance(v, want):
            raise SpecError(f"param {k!r} must be {want.__name__}, got {type(v).__name__}")
    ini = spec.initial
    if ini.start < 0 or len(ini.row) > ini.start + 1 or not ini.row:
        raise SpecError(f"initial row {ini.row!r} does not fit row {ini.start}")


def affine(a0=0, a2=0, a3=0, b0=0, b2=0, b3=0, **kw) -> TriangleSpec:
    p = dict(a0=a0, a2=a2, a3=a3, b0=b0, b2=b2, b3=b3)
    return TriangleSpec(AFFINE, {k: as_rat(v) for k, v in p.items()}, **kw)


def quadratic(a0=0, a1=0, a2=0, a3=0, b0=0, b1=0, b2=0, b3=0, **kw) -> TriangleSpec:
    p = dict(a0=a0, a1=a1, a2=a2, a3=a3, b0=b0, b1=b1, b2=b2, b3=b3)
    return TriangleSpec(QUADRATIC, {k: as_rat(v) for k, v in p.items()}, **kw)


def _as_func(v) -> ExactPoly:
    if isinstance(v, ExactPoly):
        return v
    if isinstance(v, (list, tuple)):
        return ExactPoly(v)
    if isinstance(v, str):
        return parse_poly(v)
    return ExactPoly([v])


def general(r=0, s=0, t=0, f=0, g=0, h=0, **kw) -> TriangleSpec:
    p = dict(r=r, s=s, t=t, f=f, g=g, h=h)
    return TriangleSpec(GENERAL, {k: _as_func(v) for k, v in p.items()}, **kw)


def three_term_right(f=1, g=1, h=1, **kw) -> TriangleSpec:
    p = dict(f=f, g=g, h=h)
    return TriangleSpec(RIGHT, {k: _as_func(v) for k, v in p.items()}, **kw)


def builtin(name: str, z=None, m=None) -> TriangleSpec:
    return TriangleSpec(
        BUILTIN,
        {},
        builtin=name,
        z=None if z is None else as_rat(z),
        m=None if m is None else as_rat(m),
    )


# -- catalog ---------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    description: str
    parameters: tuple
    build: Callable[..., TriangleSpec]
    alias_of: str | None = None


def _need(name, value, label):
    if value is None:
        raise SpecError(f"builtin {name!r} requires parameter {label}")
    return as_rat(value)


def _js2(z=None, m=None):
    z = _need("jacobi-stirling-2", z, "z")
    return quadratic(a1=1, a2=z, b3=1, builtin="jacobi-stirling-2", z=z)


def _js1(z=None, m=None):
    z = _need("jacobi-stirling-1", z, "z")
    # (n-1)(n-1+z) = n^2 + (z-2) n + (1-z)
    return general(r=_poly_n(1 - z, z - 2, 1), s=1, builtin="jacobi-stirling-1", z=z)


def _lah(z=None, m=None):
    m = _need("lah-associated", m, "m")
    return affine(a0=1, a2=m, a3=-1, b3=m, builtin="lah-associated", m=m)


_START1 = Initial(1, (Fraction(1),))

_ENTRIES = [
    CatalogEntry("pascal", "binomial coefficients", (),
                 lambda z=None, m=None: affine(a3=1, b3=1, builtin="pascal")),
    CatalogEntry("stirling2", "Stirling numbers of the second kind", (),
                 lambda z=None, m=None: affine(a2=1, b3=1, builtin="stirling2")),
    CatalogEntry("stirling1-signless", "signless Stirling numbers of the first kind", (),
                 lambda z=None, m=None: affine(a0=1, a3=-1, b3=1,
                                               builtin="stirling1-signless")),
    CatalogEntry("jacobi-stirling-2", "Jacobi-Stirling numbers, second kind", ("z",), _js2),
    CatalogEntry("jacobi-stirling-1", "Jacobi-Stirling numbers, first kind", ("z",), _js1),
    CatalogEntry("legendre-stirling-2", "Legendre-Stirling numbers, second kind", (),
                 lambda z=None, m=None: _js2(z=1), alias_of="jacobi-stirling-2"),
    CatalogEntry("legendre-stirling-1", "Legendre-Stirling numbers, first kind", (),
                 lambda z=None, m=None: _js1(z=1), alias_of="jacobi-stirling-1"),
    CatalogEntry("central-factorial-U", "central factorial numbers T(2n,2k)", (),
                 lambda z=None, m=None: quadratic(a1=1, b3=1, builtin="central-factorial-U")),
    CatalogEntry("central-factorial-V", "central factorial numbers 4^(n-k) T(2n+1,2k+1)", (),
                 lambda z=None, m=None: quadratic(a1=4, a2=4, a3=1, b3=1,
                                                  builtin="central-factorial-V")),
    CatalogEntry("ramanujan", "rooted labeled trees by improper edges (rows from n=1)", (),
                 lambda z=None, m=None: affine(a0=1, a3=-1, b0=1, b2=1, b3=-2,
                                               builtin="ramanujan", initial=_START1)),
    CatalogEntry("lah-associated", "associated Lah numbers L_m(n,k)", ("m",), _lah),
    CatalogEntry("eulerianA", "Eulerian numbers, k-1 descents", (),
                 lambda z=None, m=None: affine(a2=1, b0=1, b2=-1, b3=1, builtin="eulerianA")),
    CatalogEntry("eulerianB", "type B Eulerian numbers, k B-descents", (),
                 lambda z=None, m=None: affine(a2=2, a3=1, b0=2, b2=-2, b3=1,
                                               builtin="eulerianB")),
    CatalogEntry("runsA", "permutations by alternating runs (rows from n=1)", (),
                 lambda z=None, m=None: general(f=_poly_n(0, 1), s=2, t=_poly_n(0, 1),
                                                h=_poly_n(0, -1), builtin="runsA",
                                                initial=_START1)),
    CatalogEntry("runsB", "signed permutations by alternating runs, pi(1) > 0 (rows from n=1)",
                 (),
                 lambda z=None, m=None: general(
                     r=-1, f=_poly_n(0, 2), s=3, t=_poly_n(2, 2), h=_poly_n(0, -2),
                     builtin="runsB", initial=Initial(1, (Fraction(0), Fraction(1))))),
    CatalogEntry("motzkin", "Motzkin triangle", (),
                 lambda z=None, m=None: three_term_right(1, 1, 1, builtin="motzkin")),
]
_CATALOG = {e.name: e for e in _ENTRIES}


def catalog() -> list[CatalogEntry]:
    return list(_ENTRIES)


def lookup(name: str, z=None, m=None) -> TriangleSpec:
    """Concrete spec for a builtin identifier."""
    try:
        entry = _CATALOG[name]
    except KeyError:
        raise SpecError(f"unknown builtin {name!r}") from None
    return entry.build(z=z, m=m)


def resolve(spec: TriangleSpec) -> TriangleSpec:
    if spec.family == BUILTIN:
        return lookup(spec.builtin, z=spec.z, m=spec.m)
    return spec


# -- generation --------------------------------------------------------------


def _coefficient_fns(spec: TriangleSpec):
    p = spec.params
    if spec.family == AFFINE:
        a0, a2, a3, b0, b2, b3 = (p[k] for k in _PARAM_KEYS[AFFINE])
        return (lambda n, k: a0 * n + a2 * k + a3,
                lambda n, k: b0 * n + b2 * k + b3,
                None)
    if spec.family == QUADRATIC:
        a0, a1, a2, a3, b0, b1, b2, b3 = (p[k] for k in _PARAM_KEYS[QUADRATIC])
        return (lambda n, k: a0 * n + a1 * k * k + a2 * k + a3,
                lambda n, k: b0 * n + b1 * k * k + b2 * k + b3,
                None)
    if spec.family == GENERAL:
        r, s, t, f, g, h = (p[k] for k in _PARAM_KEYS[GENERAL])
        third = None if (t.is_zero() and h.is_zero()) else (lambda n, k: t(n) + h(k))
        return (lambda n, k: r(n) + f(k), lambda n, k: s(n) + g(k), third)
    raise AssertionError(spec.family)


class Triangle:
    """Memoized rows of a triangular array; rows are append-only tuples."""

    def __init__(self, spec: TriangleSpec):
        self.spec = resolve(spec)
        ini = self.spec.initial
        self.start = ini.start
        first = tuple(as_rat(v) for v in ini.row)
        first = first + (Fraction(0),) * (ini.start + 1 - len(first))
        self._rows: list[tuple] = [first]
        if self.spec.family == RIGHT:
            f, g, h = (self.spec.params[k] for k in ("f", "g", "h"))
            self._step = self._right_step(f, g, h)
        else:
            self._step = self._left_step(*_coefficient_fns(self.spec))

    @staticmethod
    def _left_step(A, B, C):
        def step(prev, n):
            out = []
            for k in range(n + 1):
                v = Fraction(0)
                if k < n:
                    x = prev[k]
                    if x:
                        v += A(n, k) * x
                if 1 <= k <= n:
                    x = prev[k - 1]
                    if x:
                        v += B(n, k) * x
                if C is not None and 2 <= k <= n + 1:
                    x = prev[k - 2]
                    if x:
                        v += C(n, k) * x
                out.append(v)
            return tuple(out)

        return step

    @staticmethod
    def _right_step(f, g, h):
        fv, gv, hv = {}, {}, {}

        def at(cache, fn, k):
            if k not in cache:
                cache[k] = fn(k)
            return cache[k]

        def step(prev, n):
            out = []
            for k in range(n + 1):
                v = Fraction(0)
                if k >= 1 and prev[k - 1]:
                    v += at(fv, f, k) * prev[k - 1]
                if k < n and prev[k]:
                    v += at(gv, g, k) * prev[k]
                if k + 1 < n and prev[k + 1]:
                    v += at(hv, h, k) * prev[k + 1]
                out.append(v)
            return tuple(out)

        return step

    @property
    def depth(self) -> int:
        """Largest generated row index."""
        return self.start + len(self._rows) - 1

    def extend(self, n_max: int) -> "Triangle":
        while self.depth < n_max:
            n = self.depth + 1
            self._rows.append(self._step(self._rows[-1], n))
        return self

    def row(self, n: int) -> tuple:
        if n < self.start:
            raise IndexError(f"row {n} precedes the first row {self.start}")
        self.extend(n)
        return self._rows[n - self.start]

    def entry(self, n: int, k: int) -> Fraction:
        r = self.row(n)
        return r[k] if 0 <= k < len(r) else Fraction(0)

    def rows(self, n_max: int) -> Iterator[tuple]:
        for n in range(self.start, n_max + 1):
            yield self.row(n)

    def row_gf(self, n: int) -> ExactPoly:
        if n > self.depth:
            raise IndexError(f"row {n} not generated (depth {self.depth})")
        return ExactPoly(self.row(n))

    def matrix(self, n_max: int) -> list[list[Fraction]]:
        """Rows ``start..n_max``, columns ``0..n_max`` (lower triangular)."""
        self.extend(n_max)
        width = n_max + 1
        return [list(r) + [Fraction(0)] * (width - len(r)) for r in self.rows(n_max)]


def generate(spec: TriangleSpec, n_max: int) -> Triangle:
    if n_max < 0:
        raise SpecError("n_max must be nonnegative")
    return Triangle(spec).extend(n_max)


def row_gf(t: Triangle, n: int) -> ExactPoly:
    return t.row_gf(n)


def matrix_triangle(rows) -> "MatrixData":
    return MatrixData([[as_rat(x) for x in r] for r in rows])


@dataclass
class MatrixData:
    """A plain exact matrix that checkers accept in place of a Triangle."""

    rows: list

    def matrix(self, n_max: int | None = None):
        return [list(r) for r in self.rows]


# -- Lah closed form -----------------------------------------------------------


def _gbinom(a: int, b: int) -> int:
    """Binomial coefficient with integer (possibly negative) top."""
    if b < 0:
        return 0
    num = 1
    for j in range(b):
        num *= a - j
    return num // math.factorial(b)


def lah_closed_form(m: int, n: int, k: int) -> Fraction:
    """``(n!/k!) sum_i (-1)^(k-i) C(k,i) C(n+m i-1, n)``.

    The i = 0 term vanishes for n >= 1 and supplies ``L_m(0,0) = 1``.
    """
    if k > n or k < 0 or n < 0:
        raise ValueError("lah_closed_form needs 0 <= k <= n")
    s = sum((-1) ** (k - i) * math.comb(k, i) * _gbinom(n + m * i - 1, n)
            for i in range(k + 1))
    return Fraction(math.factorial(n) * s, math.factorial(k))


# -- polynomial recurrences -----------------------------------------------------

X = ExactPoly([0, 1])
_ONE_MINUS_X2 = ExactPoly([1, 0, -1])
_X_ONE_MINUS_X = ExactPoly([0, 1, -1])

BIVARIATE_KINDS = ("q-eulerianA", "q-eulerianB")


def _affine_gf_step(spec: TriangleSpec, prev: ExactPoly, n: int) -> ExactPoly:
    """Row gf of an AffineTwoTerm spec:
    ``[a0 n + a3 + (b0 n + b2 + b3) q] T_{n-1} + (a2 + b2 q) q T'_{n-1}``."""
    p = spec.params
    lin = ExactPoly([p["a0"] * n + p["a3"], p["b0"] * n + p["b2"] + p["b3"]])
    der = ExactPoly([0, p["a2"], p["b2"]])
    return lin * prev + der * prev.derivative()


def poly_recurrence_step(kind: str, f_prev: ExactPoly, n: int, fixed_q=None,
                         m=None) -> ExactPoly:
    """The n-th member of a polynomial chain from the (n-1)-th."""
    d = f_prev.derivative()
    if kind == "eulerianA":
        return ExactPoly([0, n]) * f_prev + _X_ONE_MINUS_X * d
    if kind == "eulerianB":
        return ExactPoly([1, 2 * n - 1]) * f_prev + _X_ONE_MINUS_X.scale(2) * d
    if kind in BIVARIATE_KINDS:
        if fixed_q is None:
            raise ValueError(f"{kind} needs fixed_q")
        q = as_rat(fixed_q)
        if q < 0:
            raise ValueError("fixed_q must be nonnegative")
        if kind == "q-eulerianA":
            return ExactPoly([q - 1, n]) * f_prev + _X_ONE_MINUS_X * d
        return ExactPoly([1, (1 + q) * n - 1]) * f_prev + _X_ONE_MINUS_X.scale(1 + q) * d
    if kind == "runsA":
        # R_n = x((n-2)x + 2) R_{n-1} + x(1 - x^2) R'_{n-1}, n >= 3
        return ExactPoly([0, 2, n - 2]) * f_prev + X * _ONE_MINUS_X2 * d
    if kind == "longest-alternating":
        return ExactPoly([0, 1, n - 1]) * f_prev + X * _ONE_MINUS_X2 * d
    if kind == "up-down":
        return ExactPoly([1, 0, n - 1]) * f_prev + X * _ONE_MINUS_X2 * d
    if kind == "runsB":
        return ExactPoly([-1, 3, 2 * (n - 1)]) * f_prev + X.scale(2) * _ONE_MINUS_X2 * d
    if kind == "ramanujan":
        return ExactPoly([n - 1, n - 1]) * f_prev + ExactPoly([0, 0, 1]) * d
    if kind == "lah-associated":
        if m is None:
            raise ValueError("lah-associated needs m")
        return _affine_gf_step(lookup("lah-associated", m=m), f_prev, n)
    raise ValueError(f"unknown polynomial recurrence {kind!r}")


# kind -> (first index, explicit initial members, whether the chain lives in x)
_CHAIN_BASE = {
    "eulerianA": (0, [ONE]),
    "eulerianB": (0, [ONE]),
    "q-eulerianA": (0, [X]),
    "q-eulerianB": (0, [ONE]),
    "runsA": (1, [ONE, ExactPoly([0, 2])]),
    "longest-alternating": (0, [ONE]),
    "up-down": (1, [ExactPoly([1, 1]), ExactPoly([1, 2, 1])]),
    "runsB": (1, [X]),
    "ramanujan": (1, [ONE]),
    "lah-associated": (0, [ONE]),
}
CHAIN_KINDS = tuple(_CHAIN_BASE)


@dataclass(frozen=True)
class PolyChain:
    """Polynomials ``f_start, f_start+1, ...`` of a recurrence chain."""

    kind: str
    start: int
    polys: tuple

    def __getitem__(self, n: int) -> ExactPoly:
        if n < self.start:
            raise IndexError(n)
        return self.polys[n - self.start]

    @property
    def stop(self) -> int:
        return self.start + len(self.polys) - 1


def poly_chain(kind: str, n_max: int, fixed_q=None, m=None) -> PolyChain:
    if kind not in _CHAIN_BASE:
        raise ValueError(f"unknown polynomial recurrence {kind!r}")
    start, base = _CHAIN_BASE[kind]
    polys = list(base)
    while start + len(polys) - 1 < n_max:
        n = start + len(polys)
        polys.append(poly_recurrence_step(kind, polys[-1], n, fixed_q=fixed_q, m=m))
    return PolyChain(kind, start, tuple(polys[: max(n_max - start + 1, 0)]))


def row_gf_chain(t: Triangle, n_max: int) -> PolyChain:
    t.extend(n_max)
    name = t.spec.builtin or t.spec.family
    return PolyChain(name, t.start, tuple(t.row_gf(n) for n in range(t.start, n_max + 1)))


# -- file forms ------------------------------------------------------------------


def spec_to_dict(spec: TriangleSpec) -> dict:
    params = {}
    for k, v in spec.params.items():
        if isinstance(v, ExactPoly):
            params[k] = format_poly(v, _FUNC_VAR[k])
        else:
            params[k] = format_rat(v)
    opt = lambda x: None if x is None else format_rat(x)
    return {
        "family": spec.family,
        "params": params,
        "builtin": spec.builtin,
        "z": opt(spec.z),
        "m": opt(spec.m),
        "fixed_q": opt(spec.fixed_q),
        "initial": {"start": spec.initial.start,
                    "row": [format_rat(as_rat(x)) for x in spec.initial.row]},
    }


def spec_to_json(spec: TriangleSpec) -> str:
    return json.dumps(spec_to_dict(spec), indent=2, sort_keys=True) + "\n"


def spec_from_dict(d: dict) -> TriangleSpec:
    known = {"family", "params", "builtin", "z", "m", "fixed_q", "initial"}
    extra = set(d) - known
    if extra:
        raise SpecError(f"unknown spec fields {sorted(extra)}")
    family = d.get("family", BUILTIN if d.get("builtin") else None)
    if family not in FAMILIES:
        raise SpecError(f"unknown family {family!r}")
    raw = d.get("params") or {}
    try:
        if family in (GENERAL, RIGHT):
            params = {k: parse_poly(str(v)) for k, v in raw.items()}
        else:
            params = {k: as_rat(str(v)) for k, v in raw.items()}
        opt = lambda x: None if x is None else as_rat(str(x))
        ini = d.get("initial") or {"start": 0, "row": ["1"]}
        initial = Initial(int(ini.get("start", 0)),
                          tuple(as_rat(str(x)) for x in ini.get("row", ["1"])))
        return TriangleSpec(family, params, builtin=d.get("builtin"), z=opt(d.get("z")),
                            m=opt(d.get("m")), fixed_q=opt(d.get("fixed_q")),
                            initial=initial)
    except (TypeError, ValueError) as exc:
        if isinstance(exc, SpecError):
            raise
        raise SpecError(str(exc)) from exc


def spec_from_json(text: str) -> TriangleSpec:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"spec file is not valid JSON: {exc}") from exc
    if not isinstance(d, dict):
        raise SpecError("spec file must hold a JSON object")
    return spec_from_dict(d)


def _trimmed(row) -> list:
    r = list(row)
    while len(r) > 1 and r[-1] == 0:
        r.pop()
    return r


def iter_csv_rows(t: Triangle, n_max: int) -> Iterator[str]:
    """One CSV line per row, trailing zero entries dropped."""
    for row in t.rows(n_max):
        yield ",".join(format_rat(x) for x in _trimmed(row))


def rows_to_json(t: Triangle, n_max: int) -> str:
    return json.dumps([[format_rat(x) for x in _trimmed(r)] for r in t.rows(n_max)])
