"""Field arithmetic: exact Gaussian rationals, approximate complex numbers,
elementary symmetric polynomials and monic univariate polynomials.

Two scalar modes exist and a computation never mixes them:

* exact  -- :class:`GaussianRational`, a pair of reduced rationals (``gmpy2.mpq``)
* approx -- the builtin :class:`complex`
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Number
from typing import Iterable, Sequence, Union

from gmpy2 import mpq

from .errors import DegreeError, ParseError

_MPQ = type(mpq(0))

EXACT = "exact"
NUMERIC = "numeric"
DEFAULT_TOL = 1e-9


class GaussianRational:
    """An element ``re + im*i`` of Q(i); both parts are stored reduced."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _to_mpq(re)
        self.im = _to_mpq(im)

    @classmethod
    def _make(cls, re, im):
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        return obj

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, GaussianRational):
            other = _coerce(other)
            if other is NotImplemented:
                return other
        return GaussianRational._make(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, GaussianRational):
            other = _coerce(other)
            if other is NotImplemented:
                return other
        return GaussianRational._make(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if not isinstance(other, GaussianRational):
            other = _coerce(other)
            if other is NotImplemented:
                return other
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussianRational._make(a * c, b)
        return GaussianRational._make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, GaussianRational):
            other = _coerce(other)
            if other is NotImplemented:
                return other
        c, d = other.re, other.im
        if not d:
            if not c:
                raise ZeroDivisionError("division by zero in Q(i)")
            return GaussianRational._make(self.re / c, self.im / c)
        norm = c * c + d * d
        a, b = self.re, self.im
        return GaussianRational._make((a * c + b * d) / norm, (b * c - a * d) / norm)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __neg__(self):
        return GaussianRational._make(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return ONE / (self ** -k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._make(self.re, -self.im)

    def norm(self):
        """Field norm ``re**2 + im**2`` (a rational)."""
        return self.re * self.re + self.im * self.im

    def __abs__(self) -> float:
        return abs(complex(self))

    # -- comparison / hashing -------------------------------------------
    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def is_real(self) -> bool:
        return not self.im

    def sort_key(self):
        return (self.re, self.im)

    def __repr__(self):
        return f"GaussianRational({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


Scalar = Union[GaussianRational, complex]

ZERO = GaussianRational._make(mpq(0), mpq(0))
ONE = GaussianRational._make(mpq(1), mpq(0))
I = GaussianRational._make(mpq(0), mpq(1))


def _to_mpq(x):
    if isinstance(x, float):
        # floats are dyadic rationals; keep the exact binary value
        return mpq(Fraction(x))
    return mpq(x)


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, bool):
        return GaussianRational._make(mpq(int(x)), mpq(0))
    if isinstance(x, (int, Fraction, _MPQ)):
        return GaussianRational._make(mpq(x), mpq(0))
    return NotImplemented


def exact(x) -> GaussianRational:
    """Coerce ints, fractions, strings, floats or complex to a GaussianRational.

    Floats and complex numbers are converted through their exact binary value.
    """
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, str):
        return parse_scalar(x, EXACT)
    if isinstance(x, complex):
        return GaussianRational(_to_mpq(x.real), _to_mpq(x.imag))
    return GaussianRational(x)


def approx(x) -> complex:
    return complex(x)


def is_exact(x) -> bool:
    return isinstance(x, GaussianRational)


def mode_of(x) -> str:
    return EXACT if isinstance(x, GaussianRational) else NUMERIC


def to_mode(x, mode: str) -> Scalar:
    return exact(x) if mode == EXACT else complex(x)


def is_zero(x, tol: float = DEFAULT_TOL) -> bool:
    if isinstance(x, GaussianRational):
        return not x
    return abs(x.real) <= tol and abs(x.imag) <= tol


def close(x, y, tol: float = DEFAULT_TOL) -> bool:
    """Exact values compare literally; approximate ones componentwise within ``tol``."""
    if isinstance(x, GaussianRational) and isinstance(y, GaussianRational):
        return x == y
    d = complex(x) - complex(y)
    return abs(d.real) <= tol and abs(d.imag) <= tol


def sort_key(x):
    if isinstance(x, GaussianRational):
        return (x.re, x.im)
    x = complex(x)
    return (x.real, x.imag)


# -- text form ---------------------------------------------------------------

def format_scalar(x) -> str:
    """``"p/q"`` or ``"p/q+r/si"`` for exact values, decimal literals otherwise."""
    if isinstance(x, GaussianRational):
        if not x.im:
            return str(x.re)
        if not x.re:
            return f"{x.im}i"
        sign = "+" if x.im > 0 else "-"
        return f"{x.re}{sign}{abs(x.im)}i"
    x = complex(x)
    if x.imag == 0:
        return repr(x.real + 0.0)
    if x.real == 0:
        return f"{x.imag!r}i"
    sign = "+" if x.imag >= 0 else "-"
    return f"{x.real!r}{sign}{abs(x.imag)!r}i"


_UNUM = r"(?:\d+/\d+|\d+\.?\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?)"
_REAL_RE = re.compile(rf"[+-]?{_UNUM}")
_COMPLEX_RE = re.compile(rf"(?:(?P<re>[+-]?{_UNUM})(?=[+-]))?(?P<im>[+-]?(?:{_UNUM})?)[ij]")


def _parse_part(text: str, mode: str):
    text = text.removeprefix("+")  # gmpy2 rejects an explicit plus sign
    if mode == EXACT:
        if "." in text or "e" in text.lower():
            return mpq(Fraction(text))
        return mpq(text)
    if "/" in text:
        num, den = text.split("/")
        return int(num) / int(den)
    return float(text)


def parse_scalar(text: str, mode: str = EXACT) -> Scalar:
    """Parse the scalar text form. Accepts ``i`` or ``j`` as imaginary unit."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ParseError("empty scalar")
    try:
        if _REAL_RE.fullmatch(s):
            re_part, im_part = _parse_part(s, mode), 0
        else:
            m = _COMPLEX_RE.fullmatch(s)
            if not m:
                raise ParseError(f"cannot parse scalar {text!r}")
            re_txt = m.group("re") or "0"
            im_txt = m.group("im")
            if im_txt in ("", "+"):
                im_txt = "1"
            elif im_txt == "-":
                im_txt = "-1"
            re_part, im_part = _parse_part(re_txt, mode), _parse_part(im_txt, mode)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"cannot parse scalar {text!r}: {exc}") from None
    if mode == EXACT:
        return GaussianRational(re_part, im_part)
    return complex(re_part, im_part)


# -- symmetric functions and polynomials --------------------------------------

def elem_sym_all(values: Sequence, one=ONE) -> list:
    """All elementary symmetric values ``[e_0, ..., e_len]`` by incremental expansion."""
    e = [one] + [one * 0] * len(values)
    for count, x in enumerate(values, start=1):
        for k in range(count, 0, -1):
            e[k] = e[k] + x * e[k - 1]
    return e


def elem_sym(k: int, values: Sequence) -> Scalar:
    """Elementary symmetric polynomial e_k evaluated at ``values``."""
    if not 0 <= k <= len(values):
        raise DegreeError(f"degree {k} outside [0, {len(values)}]")
    one = ONE if all(isinstance(v, GaussianRational) for v in values) else complex(1)
    return elem_sym_all(list(values), one)[k]


@dataclass(frozen=True)
class MonicPoly:
    """``X**l - sum(low[i] * X**i)``; ``low`` holds a_0 .. a_{l-1}."""

    low: tuple

    def __post_init__(self):
        object.__setattr__(self, "low", tuple(self.low))
        if not self.low:
            raise DegreeError("a monic stack polynomial needs degree >= 1")

    @property
    def degree(self) -> int:
        return len(self.low)

    def coefficients(self) -> list:
        """Ascending coefficients c_0 .. c_l with c_l = 1."""
        one = ONE if all(is_exact(a) for a in self.low) else complex(1)
        return [-a for a in self.low] + [one]

    def __call__(self, x):
        acc = x * 0 + 1
        for c in reversed(self.coefficients()[:-1]):
            acc = acc * x + c
        return acc


@dataclass(frozen=True)
class RootMultiset:
    """Distinct values with positive multiplicities, kept sorted by (re, im)."""

    entries: tuple

    def __post_init__(self):
        items = tuple(sorted(((v, int(k)) for v, k in self.entries), key=lambda e: sort_key(e[0])))
        for _, k in items:
            if k <= 0:
                raise ValueError("multiplicities must be positive")
        object.__setattr__(self, "entries", items)

    @classmethod
    def from_values(cls, values: Iterable) -> "RootMultiset":
        """Group equal values. Intended for exact scalars (or floats known to repeat exactly)."""
        counts: dict = {}
        for v in values:
            counts[v] = counts.get(v, 0) + 1
        return cls(tuple(counts.items()))

    @property
    def degree(self) -> int:
        return sum(k for _, k in self.entries)

    def values(self) -> list:
        """Flattened values, each repeated by its multiplicity."""
        return [v for v, k in self.entries for _ in range(k)]

    def distinct(self) -> list:
        return [v for v, _ in self.entries]

    def multiplicity(self, value, tol: float = DEFAULT_TOL) -> int:
        return sum(k for v, k in self.entries if close(v, value, tol))

    def __len__(self):
        return self.degree

    def __iter__(self):
        return iter(self.entries)

    def __str__(self):
        return "[" + ", ".join(f"{format_scalar(v)}^{k}" if k > 1 else format_scalar(v)
                               for v, k in self.entries) + "]"


def poly_from_roots(roots: RootMultiset | Sequence) -> MonicPoly:
    """Monic polynomial with the given roots: a_{l-i} = (-1)**(i+1) e_i."""
    values = roots.values() if isinstance(roots, RootMultiset) else list(roots)
    if not values:
        raise DegreeError("empty root multiset")
    if any(isinstance(v, (float, complex)) for v in values):
        values, one = [complex(v) for v in values], complex(1)
    else:
        values, one = [exact(v) for v in values], ONE
    e = elem_sym_all(values, one)
    l = len(values)
    low = [None] * l
    for i in range(1, l + 1):
        low[l - i] = e[i] if i % 2 else -e[i]
    return MonicPoly(tuple(low))


def roots_of_poly(p: MonicPoly, mode: str = EXACT, tol: float = DEFAULT_TOL) -> RootMultiset:
    """Root multiset of ``p``; exact factorisation over Q(i) or numeric Aberth + clustering."""
    from . import rootfind

    if mode == EXACT:
        return rootfind.exact_roots(p)
    return rootfind.numeric_roots(p, tol)


def is_number(x) -> bool:
    return isinstance(x, (Number, GaussianRational, _MPQ))
