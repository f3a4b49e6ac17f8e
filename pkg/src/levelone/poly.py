"""Exact scalar arithmetic: Q[t], Laurent polynomials and the field Q(t).

A polynomial is a sparse dict mapping exponent to a nonzero Fraction; the
zero polynomial is the empty dict.  Ordinary polynomials keep exponents
>= 0, Laurent polynomials may use negative exponents.  An element of Q(t)
is a reduced numerator/denominator pair with monic denominator, which makes
equality plain structural equality of the two dicts.

No floating point enters anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import DegreeOverflow, PoleAtPoint, PoleAtZero

Poly = dict  # {int exponent: nonzero Fraction}

#: Hard cap on any exponent magnitude produced by multiplication; exceeding
#: it raises DegreeOverflow instead of thrashing on adversarial input.
MAX_DEGREE = 10_000

ZERO = Fraction(0)
ONE = Fraction(1)

POLY_ONE: Poly = {0: ONE}


def poly_const(c) -> Poly:
    """Constant polynomial, {} for zero."""
    c = Fraction(c)
    return {0: c} if c else {}


def poly_degree(p: Poly):
    """Top exponent; -inf for the zero polynomial."""
    return max(p) if p else -math.inf


def poly_ord(p: Poly):
    """Lowest exponent (order of vanishing at t = 0); +inf for zero."""
    return min(p) if p else math.inf


def poly_lc(p: Poly) -> Fraction:
    return p[max(p)]


def poly_add(a: Poly, b: Poly) -> Poly:
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, ZERO) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def poly_neg(a: Poly) -> Poly:
    return {e: -c for e, c in a.items()}


def poly_sub(a: Poly, b: Poly) -> Poly:
    if not b:
        return dict(a)
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, ZERO) - c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def poly_scale(a: Poly, c: Fraction) -> Poly:
    if not c:
        return {}
    return {e: v * c for e, v in a.items()}


def poly_shift(a: Poly, k: int) -> Poly:
    """Multiply by t^k (k may be negative)."""
    if k == 0:
        return dict(a)
    return {e + k: c for e, c in a.items()}


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return {}
    out: Poly = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            s = out.get(e, ZERO) + ca * cb
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    if out and (max(out) > MAX_DEGREE or min(out) < -MAX_DEGREE):
        raise DegreeOverflow(f"exponent beyond +/-{MAX_DEGREE}")
    return out


def poly_pow(a: Poly, k: int) -> Poly:
    out = dict(POLY_ONE)
    for _ in range(k):
        out = poly_mul(out, a)
    return out


def poly_eval(p: Poly, x: Fraction) -> Fraction:
    """Exact substitution; negative exponents require x != 0."""
    total = ZERO
    for e, c in p.items():
        total += c * x**e
    return total


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder in Q[t] (non-negative exponents only)."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q: Poly = {}
    r = dict(a)
    db = max(b)
    lb = b[db]
    while r and max(r) >= db:
        dr = max(r)
        c = r[dr] / lb
        e = dr - db
        q[e] = c
        for eb, cb in b.items():
            k = eb + e
            s = r.get(k, ZERO) - c * cb
            if s:
                r[k] = s
            else:
                r.pop(k, None)
    return q, r


def poly_exact_div(a: Poly, b: Poly) -> Poly:
    q, r = poly_divmod(a, b)
    if r:
        raise ValueError("division is not exact")
    return q


def _int_primitive(p: Poly) -> dict:
    """Rescale to an integer polynomial with content 1 (sign kept)."""
    if not p:
        return {}
    den_lcm = 1
    for c in p.values():
        den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    ints = {e: c.numerator * (den_lcm // c.denominator) for e, c in p.items()}
    g = 0
    for v in ints.values():
        g = math.gcd(g, v)
    return {e: v // g for e, v in ints.items()}


def _int_prem(a: dict, b: dict) -> dict:
    """Primitive pseudo-remainder of integer polynomials."""
    db = max(b)
    lb = b[db]
    r = dict(a)
    while r and max(r) >= db:
        dr = max(r)
        lr = r[dr]
        nr: dict = {}
        for e, c in r.items():
            nr[e] = c * lb
        for e, c in b.items():
            k = e + dr - db
            nr[k] = nr.get(k, 0) - lr * c
        r = {e: v for e, v in nr.items() if v}
        if r:
            g = 0
            for v in r.values():
                g = math.gcd(g, v)
            if g > 1:
                r = {e: v // g for e, v in r.items()}
    return r


def poly_monic(p: Poly) -> Poly:
    if not p:
        return {}
    lc = p[max(p)]
    if lc == 1:
        return dict(p)
    return {e: c / lc for e, c in p.items()}


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd in Q[t], via a primitive remainder sequence over Z."""
    if not a:
        return poly_monic(b)
    if not b:
        return poly_monic(a)
    x, y = _int_primitive(a), _int_primitive(b)
    while y:
        x, y = y, _int_prem(x, y)
    return poly_monic({e: Fraction(c) for e, c in x.items()})


def poly_lcm(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return {}
    g = poly_gcd(a, b)
    return poly_monic(poly_mul(a, poly_exact_div(b, g)))


def laurent_to_num_den(lp: Poly) -> tuple[Poly, Poly]:
    """Split a Laurent polynomial into ordinary numerator and t-power denominator."""
    if not lp:
        return {}, dict(POLY_ONE)
    shift = min(0, min(lp))
    return poly_shift(lp, -shift), {-shift: ONE}


class FieldElement:
    """An element of Q(t): num/den with gcd(num, den) = 1 and monic den.

    Instances are immutable; all operations return fresh values.  Equality
    is structural thanks to the canonical representation.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, dict):
            num = poly_const(num)
        if den is None:
            den = dict(POLY_ONE)
        elif not isinstance(den, dict):
            den = poly_const(den)
        n, d = _reduce(num, den)
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "den", d)

    def __setattr__(self, *_):
        raise AttributeError("FieldElement is immutable")

    # -- constructors -------------------------------------------------
    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> "FieldElement":
        """Wrap already-reduced parts without re-normalizing."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "num", num)
        object.__setattr__(obj, "den", den)
        return obj

    @classmethod
    def constant(cls, c) -> "FieldElement":
        return cls._raw(poly_const(c), dict(POLY_ONE))

    @classmethod
    def t_power(cls, k: int) -> "FieldElement":
        """The monomial t^k, k possibly negative."""
        if k >= 0:
            return cls._raw({k: ONE}, dict(POLY_ONE))
        return cls._raw({0: ONE}, {-k: ONE})

    @classmethod
    def from_laurent(cls, lp: Poly) -> "FieldElement":
        num, den = laurent_to_num_den(lp)
        return cls._raw(num, den)  # already reduced: den is a pure t-power

    # -- predicates and views ------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.num)

    def is_constant(self) -> bool:
        return poly_degree(self.num) <= 0 and self.den == POLY_ONE

    def as_constant(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"not a constant: {self!r}")
        return self.num.get(0, ZERO)

    def to_laurent(self) -> Poly:
        """Return the Laurent dict; fails unless den is a pure power of t."""
        if len(self.den) != 1:
            raise ValueError(f"not a Laurent polynomial: {self!r}")
        e, c = next(iter(self.den.items()))
        if c != 1:
            raise ValueError(f"not a Laurent polynomial: {self!r}")
        return poly_shift(self.num, -e)

    def degree_weight(self) -> int:
        """num degree + den degree; pivot-selection heuristic."""
        dn = max(self.num) if self.num else 0
        return dn + max(self.den)

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other: "FieldElement") -> "FieldElement":
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            return FieldElement(poly_add(self.num, other.num), dict(self.den))
        num = poly_add(poly_mul(self.num, other.den), poly_mul(other.num, self.den))
        return FieldElement(num, poly_mul(self.den, other.den))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return self + (-other)

    def __neg__(self) -> "FieldElement":
        return FieldElement._raw(poly_neg(self.num), dict(self.den))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        if not self.num or not other.num:
            return FieldElement._raw({}, dict(POLY_ONE))
        return FieldElement(
            poly_mul(self.num, other.num), poly_mul(self.den, other.den)
        )

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        if not other.num:
            raise ZeroDivisionError("division by zero in Q(t)")
        if not self.num:
            return FieldElement._raw({}, dict(POLY_ONE))
        return FieldElement(
            poly_mul(self.num, other.den), poly_mul(self.den, other.num)
        )

    def inverse(self) -> "FieldElement":
        if not self.num:
            raise ZeroDivisionError("inverse of zero in Q(t)")
        return FieldElement(dict(self.den), dict(self.num))

    def scale(self, c: Fraction) -> "FieldElement":
        if not c:
            return FieldElement._raw({}, dict(POLY_ONE))
        return FieldElement._raw(poly_scale(self.num, c), dict(self.den))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __repr__(self) -> str:
        from .parser import print_laurent  # local import avoids a cycle

        try:
            return f"FieldElement({print_laurent(self.to_laurent())!r})"
        except ValueError:
            num = print_laurent(self.num)
            den = print_laurent(self.den)
            return f"FieldElement({num!r} / {den!r})"

    # -- valuation and evaluation ---------------------------------------
    def valuation_at_zero(self):
        """Order of vanishing at t = 0; +inf for the zero element."""
        if not self.num:
            return math.inf
        return min(self.num) - min(self.den)

    def eval_at_zero(self) -> Fraction:
        """Exact limit of f(t) as t -> 0; requires valuation >= 0."""
        v = self.valuation_at_zero()
        if v > 0:
            return ZERO
        if v < 0:
            raise PoleAtZero(f"valuation {v} < 0")
        # reduced with valuation 0 forces ord(num) = ord(den) = 0
        return self.num[0] / self.den[0]

    def eval_at(self, t0: Fraction) -> Fraction:
        t0 = Fraction(t0)
        d = poly_eval(self.den, t0)
        if not d:
            raise PoleAtPoint(f"denominator vanishes at t = {t0}")
        return poly_eval(self.num, t0) / d


def _reduce(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if not den:
        raise ZeroDivisionError("zero denominator in Q(t)")
    if not num:
        return {}, dict(POLY_ONE)
    shift = min(min(num), min(den))
    if shift:
        num = poly_shift(num, -shift)
        den = poly_shift(den, -shift)
    # a monomial on either side shares no further factor with the other
    if len(den) > 1 and len(num) > 1:
        g = poly_gcd(num, den)
        if poly_degree(g) > 0:
            num = poly_exact_div(num, g)
            den = poly_exact_div(den, g)
    lc = den[max(den)]
    if lc != 1:
        inv = 1 / lc
        num = poly_scale(num, inv)
        den = poly_scale(den, inv)
    return num, den


FE_ZERO = FieldElement._raw({}, dict(POLY_ONE))
FE_ONE = FieldElement._raw(dict(POLY_ONE), dict(POLY_ONE))
