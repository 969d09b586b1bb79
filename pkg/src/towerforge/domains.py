"""Coefficient domains for sparse polynomial arithmetic.

Three kinds of coefficients appear in this artifact:

* elements of a finite field (:class:`FF`),
* arbitrary-precision rationals (:class:`QQ`, values are ``Fraction``),
* univariate rational functions over either (:class:`RatFun`, values are
  :class:`RatFunc` kept as reduced fractions with monic denominator).

All three are fields, so polynomial division by leading coefficients is
always exact.  Domain objects compare by structure and know how to
(de)serialize their coefficient values; the values themselves carry the
arithmetic operators.

The dense univariate helpers (``uni_*``) operate on tuples of domain
values, low-to-high, with the zero polynomial as the empty tuple.  They
back :class:`RatFunc` reduction and the quotient-ring arithmetic in
:mod:`towerforge.poly`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .gf import FieldElement, FieldSpec, make_field


class DomainMismatch(Exception):
    """Operands live over different coefficient domains."""


# ---------------------------------------------------------------------------
# dense univariate arithmetic over a field domain


def uni_trim(cs, dom):
    cs = list(cs)
    while cs and dom.is_zero(cs[-1]):
        cs.pop()
    return tuple(cs)


def uni_add(a, b, dom):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else dom.zero
        y = b[i] if i < len(b) else dom.zero
        out.append(x + y)
    return uni_trim(out, dom)


def uni_neg(a, dom):
    return tuple(-c for c in a)


def uni_sub(a, b, dom):
    return uni_add(a, uni_neg(b, dom), dom)


def uni_mul(a, b, dom):
    if not a or not b:
        return ()
    out = [dom.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if dom.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return uni_trim(out, dom)


def uni_scale(a, c, dom):
    if dom.is_zero(c):
        return ()
    return uni_trim([x * c for x in a], dom)


def uni_divmod(a, b, dom):
    """Division with remainder; b nonzero over a field domain."""
    if not b:
        raise ZeroDivisionError("univariate division by zero polynomial")
    r = list(a)
    db = len(b) - 1
    lead_inv = dom.inv(b[-1])
    q = [dom.zero] * max(len(a) - db, 0)
    while len(r) - 1 >= db and r:
        c = r[-1] * lead_inv
        shift = len(r) - 1 - db
        q[shift] = c
        for i, bc in enumerate(b):
            r[shift + i] = r[shift + i] - c * bc
        while r and dom.is_zero(r[-1]):
            r.pop()
    return uni_trim(q, dom), uni_trim(r, dom)


def uni_gcd(a, b, dom):
    """Monic gcd by Euclid (monic so the result is canonical)."""
    a, b = uni_trim(a, dom), uni_trim(b, dom)
    while b:
        _, r = uni_divmod(a, b, dom)
        a, b = b, r
    return uni_monic(a, dom)


def uni_monic(a, dom):
    if not a:
        return ()
    inv = dom.inv(a[-1])
    return uni_trim([c * inv for c in a], dom)


def uni_ext_gcd(a, b, dom):
    """Return (g, s, t) with s*a + t*b = g, g monic (or zero)."""
    r0, r1 = uni_trim(a, dom), uni_trim(b, dom)
    s0, s1 = (dom.one,), ()
    t0, t1 = (), (dom.one,)
    while r1:
        q, r = uni_divmod(r0, r1, dom)
        r0, r1 = r1, r
        s0, s1 = s1, uni_sub(s0, uni_mul(q, s1, dom), dom)
        t0, t1 = t1, uni_sub(t0, uni_mul(q, t1, dom), dom)
    if r0:
        inv = dom.inv(r0[-1])
        r0 = uni_scale(r0, inv, dom)
        s0 = uni_scale(s0, inv, dom)
        t0 = uni_scale(t0, inv, dom)
    return r0, s0, t0


def uni_eval(a, x, dom):
    acc = dom.zero
    for c in reversed(a):
        acc = acc * x + c
    return acc


def uni_pow_mod(a, e, mod, dom):
    result = (dom.one,)
    base = uni_divmod(a, mod, dom)[1]
    while e:
        if e & 1:
            result = uni_divmod(uni_mul(result, base, dom), mod, dom)[1]
        base = uni_divmod(uni_mul(base, base, dom), mod, dom)[1]
        e >>= 1
    return result


# ---------------------------------------------------------------------------
# domains


class Domain:
    """Shared interface for coefficient domains (all fields here)."""

    char: int

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def from_int(self, n: int):
        raise NotImplementedError

    def is_zero(self, c) -> bool:
        raise NotImplementedError

    def inv(self, c):
        raise NotImplementedError

    def coerce(self, c):
        """Accept ints and own values; reject everything else."""
        if isinstance(c, int):
            return self.from_int(c)
        if self.contains(c):
            return c
        raise DomainMismatch(f"{c!r} is not a value of {self!r}")

    def contains(self, c) -> bool:
        raise NotImplementedError

    def coeff_to_json(self, c):
        raise NotImplementedError

    def coeff_from_json(self, data):
        raise NotImplementedError

    def coeff_str(self, c) -> str:
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError


class FF(Domain):
    """Finite-field coefficients."""

    def __init__(self, field: FieldSpec):
        self.field = field
        self.char = field.p

    @property
    def zero(self):
        return self.field.zero

    @property
    def one(self):
        return self.field.one

    def from_int(self, n):
        return self.field.from_int(n)

    def is_zero(self, c):
        return c.code == 0

    def inv(self, c):
        return c.inverse()

    def contains(self, c):
        return isinstance(c, FieldElement) and c.field is self.field

    def coeff_to_json(self, c):
        return c.coeff_list()

    def coeff_from_json(self, data):
        return self.field.element(data)

    def coeff_str(self, c):
        return c.poly_str()

    def to_json(self):
        return {"kind": "finite-field", **self.field.to_json()}

    def __repr__(self):
        return f"FF({self.field.label})"

    def __eq__(self, other):
        return isinstance(other, FF) and other.field == self.field

    def __hash__(self):
        return hash(("FF", self.field))


class _Rationals(Domain):
    """Arbitrary-precision rational coefficients (``fractions.Fraction``)."""

    char = 0

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def is_zero(self, c):
        return c == 0

    def inv(self, c):
        if c == 0:
            raise ZeroDivisionError("inverse of 0 in QQ")
        return 1 / c

    def contains(self, c):
        return isinstance(c, Fraction)

    def coerce(self, c):
        if isinstance(c, int):
            return Fraction(c)
        if isinstance(c, Fraction):
            return c
        raise DomainMismatch(f"{c!r} is not a rational")

    def coeff_to_json(self, c):
        return str(c)

    def coeff_from_json(self, data):
        return Fraction(data)

    def coeff_str(self, c):
        return str(c)

    def to_json(self):
        return {"kind": "rationals"}

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, _Rationals)

    def __hash__(self):
        return hash("QQ")


QQ = _Rationals()


class RatFunc:
    """Reduced fraction of univariate polynomials over a base domain.

    Invariants: denominator monic, gcd(num, den) = 1, zero is (0, 1).
    Canonical, so equality is structural.
    """

    __slots__ = ("dom", "num", "den")

    def __init__(self, dom: "RatFun", num, den, reduce: bool = True):
        base = dom.base
        num = uni_trim(num, base)
        den = uni_trim(den, base)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if reduce and num:
            g = uni_gcd(num, den, base)
            if len(g) > 1:
                num = uni_divmod(num, g, base)[0]
                den = uni_divmod(den, g, base)[0]
        if not num:
            den = (base.one,)
        else:
            lead_inv = base.inv(den[-1])
            num = uni_scale(num, lead_inv, base)
            den = uni_scale(den, lead_inv, base)
        self.dom = dom
        self.num = num
        self.den = den

    def _check(self, other):
        if not isinstance(other, RatFunc) or other.dom != self.dom:
            raise DomainMismatch(f"cannot combine {self!r} with {other!r}")

    def __add__(self, other):
        if isinstance(other, int):
            other = self.dom.from_int(other)
        self._check(other)
        b = self.dom.base
        num = uni_add(uni_mul(self.num, other.den, b), uni_mul(other.num, self.den, b), b)
        return RatFunc(self.dom, num, uni_mul(self.den, other.den, b))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(self.dom, uni_neg(self.num, self.dom.base), self.den, reduce=False)

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.dom.from_int(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = self.dom.from_int(other)
        self._check(other)
        b = self.dom.base
        return RatFunc(self.dom, uni_mul(self.num, other.num, b), uni_mul(self.den, other.den, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            other = self.dom.from_int(other)
        self._check(other)
        if not other.num:
            raise ZeroDivisionError("division by zero rational function")
        b = self.dom.base
        return RatFunc(self.dom, uni_mul(self.num, other.den, b), uni_mul(self.den, other.num, b))

    def __pow__(self, e: int):
        if e < 0:
            return self.dom.inv(self) ** (-e)
        out = self.dom.one
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.dom.from_int(other)
        if not isinstance(other, RatFunc) or other.dom != self.dom:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def is_zero(self):
        return not self.num

    def is_poly(self) -> bool:
        return len(self.den) == 1

    def eval(self, x):
        """Evaluate at a base-domain value; raises on a denominator zero."""
        b = self.dom.base
        den = uni_eval(self.den, x, b)
        if b.is_zero(den):
            raise ZeroDivisionError(f"denominator vanishes at {x!r}")
        return uni_eval(self.num, x, b) * b.inv(den)

    def __repr__(self):
        v = self.dom.var
        b = self.dom.base

        def side(cs):
            if not cs:
                return "0"
            parts = []
            for i, c in enumerate(cs):
                if b.is_zero(c):
                    continue
                cs_str = b.coeff_str(c)
                if i == 0:
                    parts.append(cs_str)
                else:
                    head = "" if cs_str == "1" else f"({cs_str})*"
                    parts.append(f"{head}{v}" + (f"^{i}" if i > 1 else ""))
            return " + ".join(reversed(parts))

        if self.is_poly():
            return side(self.num)
        return f"({side(self.num)})/({side(self.den)})"


class RatFun(Domain):
    """Field of univariate rational functions over ``base`` in ``var``."""

    def __init__(self, base: Domain, var: str):
        if isinstance(base, RatFun):
            raise DomainMismatch("nested rational-function domains are not supported")
        self.base = base
        self.var = var
        self.char = base.char

    @property
    def zero(self):
        return RatFunc(self, (), (self.base.one,), reduce=False)

    @property
    def one(self):
        return RatFunc(self, (self.base.one,), (self.base.one,), reduce=False)

    def gen(self) -> RatFunc:
        return RatFunc(self, (self.base.zero, self.base.one), (self.base.one,), reduce=False)

    def from_int(self, n):
        return RatFunc(self, (self.base.from_int(n),), (self.base.one,), reduce=False)

    def from_base(self, c) -> RatFunc:
        return RatFunc(self, (c,), (self.base.one,), reduce=False)

    def from_coeffs(self, num: Sequence, den: Sequence = None) -> RatFunc:
        num = tuple(self.base.coerce(c) for c in num)
        den = (self.base.one,) if den is None else tuple(self.base.coerce(c) for c in den)
        return RatFunc(self, num, den)

    def is_zero(self, c):
        return c.is_zero()

    def inv(self, c: RatFunc):
        if c.is_zero():
            raise ZeroDivisionError("inverse of 0 rational function")
        return RatFunc(self, c.den, c.num)

    def contains(self, c):
        return isinstance(c, RatFunc) and c.dom == self

    def coeff_to_json(self, c: RatFunc):
        return {
            "num": [self.base.coeff_to_json(x) for x in c.num],
            "den": [self.base.coeff_to_json(x) for x in c.den],
        }

    def coeff_from_json(self, data):
        num = tuple(self.base.coeff_from_json(x) for x in data["num"])
        den = tuple(self.base.coeff_from_json(x) for x in data["den"])
        return RatFunc(self, num, den)

    def coeff_str(self, c):
        return repr(c)

    def to_json(self):
        return {"kind": "rational-functions", "base": self.base.to_json(), "var": self.var}

    def __repr__(self):
        return f"{self.base!r}({self.var})"

    def __eq__(self, other):
        return isinstance(other, RatFun) and other.base == self.base and other.var == self.var

    def __hash__(self):
        return hash(("RatFun", self.base, self.var))


def domain_from_json(data: dict) -> Domain:
    kind = data["kind"]
    if kind == "finite-field":
        return FF(make_field(data["p"], data["k"], data["poly"]))
    if kind == "rationals":
        return QQ
    if kind == "rational-functions":
        return RatFun(domain_from_json(data["base"]), data["var"])
    raise ValueError(f"unknown domain kind {kind!r}")
