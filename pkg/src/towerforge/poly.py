"""Sparse multivariate polynomials over pluggable coefficient domains.

Terms are stored as a map from exponent vectors to nonzero coefficients;
variables are kept sorted so that equal polynomials always serialize
identically (graded-lex term order, sorted variable names).  Exponents in
the modular-polynomial data reach a few hundred while term counts stay
small, hence the sparse representation.

Division is single-divisor multivariate division.  Because a single
divisor is a Groebner basis of the principal ideal it generates (leading
terms are multiplicative), exact divisibility is order-independent: the
remainder vanishes iff the dividend is a multiple, and then the quotient
is unique.  Monic-in-one-variable division with remainder is also
provided, which needs no coefficient inversions at all.

Multivariate gcd and factorization are deliberately absent: every
factorization that matters here comes with its factors supplied, so
verification is multiplication plus exact division.

The quotient-ring layer (:class:`QuotientRing`) does arithmetic modulo a
monic univariate polynomial whose coefficient domain may itself be a
rational function field; it is what algebraic-extension verifications
run in.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .domains import (
    QQ,
    Domain,
    DomainMismatch,
    FF,
    RatFun,
    RatFunc,
    uni_divmod,
    uni_ext_gcd,
    uni_monic,
    uni_mul,
    uni_sub,
    uni_trim,
)
from .gf import FieldElement


class PolyError(Exception):
    """Base class for polynomial arithmetic errors."""


class InexactDivision(PolyError):
    """Division left a nonzero remainder where exactness was claimed."""


class NotMonic(PolyError):
    pass


class DenominatorVanishes(PolyError):
    pass


class ZeroPolynomial(PolyError):
    pass


class NotInvertible(PolyError):
    """Quotient-ring inverse failed; carries the offending gcd."""

    def __init__(self, gcd):
        super().__init__(f"element is not invertible; gcd with modulus is {gcd!r}")
        self.gcd = gcd


def _grlex_key(exps: tuple[int, ...]):
    return (sum(exps), exps)


class SparsePoly:
    """Immutable sparse polynomial over a :class:`~towerforge.domains.Domain`.

    ``vars`` is always sorted; binary operations align variable sets by
    union automatically (padding exponents with zero).
    """

    __slots__ = ("domain", "vars", "terms")

    def __init__(self, domain: Domain, vars: Sequence[str], terms: Mapping[tuple, object]):
        self.domain = domain
        self.vars = tuple(vars)
        self.terms = dict(terms)

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(domain: Domain, vars: Sequence[str] = ()) -> "SparsePoly":
        return SparsePoly(domain, tuple(sorted(vars)), {})

    @staticmethod
    def const(domain: Domain, c, vars: Sequence[str] = ()) -> "SparsePoly":
        c = domain.coerce(c)
        vars = tuple(sorted(vars))
        if domain.is_zero(c):
            return SparsePoly(domain, vars, {})
        return SparsePoly(domain, vars, {(0,) * len(vars): c})

    @staticmethod
    def gen(domain: Domain, name: str, vars: Sequence[str] | None = None) -> "SparsePoly":
        vars = tuple(sorted(set(vars or ()) | {name}))
        e = tuple(1 if v == name else 0 for v in vars)
        return SparsePoly(domain, vars, {e: domain.one})

    # -- alignment -----------------------------------------------------------

    def with_vars(self, vars: Sequence[str]) -> "SparsePoly":
        """Re-index onto a (sorted) superset of the current variables."""
        vars = tuple(vars)
        if vars == self.vars:
            return self
        pos = {v: i for i, v in enumerate(vars)}
        for v in self.vars:
            if v not in pos:
                raise PolyError(f"cannot drop variable {v!r} by re-indexing")
        terms = {}
        for e, c in self.terms.items():
            ne = [0] * len(vars)
            for v, exp in zip(self.vars, e):
                ne[pos[v]] = exp
            terms[tuple(ne)] = c
        return SparsePoly(self.domain, vars, terms)

    def _align(self, other: "SparsePoly"):
        if self.domain != other.domain:
            raise DomainMismatch(f"domains differ: {self.domain!r} vs {other.domain!r}")
        if self.vars == other.vars:
            return self, other
        union = tuple(sorted(set(self.vars) | set(other.vars)))
        return self.with_vars(union), other.with_vars(union)

    def _coerce_operand(self, other):
        if isinstance(other, SparsePoly):
            return other
        if isinstance(other, (int, Fraction, FieldElement, RatFunc)):
            return SparsePoly.const(self.domain, other, self.vars)
        return None

    # -- ring operations -------------------------------------------------------

    def __add__(self, other):
        other = self._coerce_operand(other)
        if other is None:
            return NotImplemented
        a, b = self._align(other)
        dom = a.domain
        terms = dict(a.terms)
        for e, c in b.terms.items():
            if e in terms:
                s = terms[e] + c
                if dom.is_zero(s):
                    del terms[e]
                else:
                    terms[e] = s
            else:
                terms[e] = c
        return SparsePoly(dom, a.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly(self.domain, self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce_operand(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce_operand(other)
        if other is None:
            return NotImplemented
        a, b = self._align(other)
        dom = a.domain
        terms: dict[tuple, object] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                c = c1 * c2
                if e in terms:
                    s = terms[e] + c
                    if dom.is_zero(s):
                        del terms[e]
                    else:
                        terms[e] = s
                elif not dom.is_zero(c):
                    terms[e] = c
        return SparsePoly(dom, a.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "SparsePoly":
        if n < 0:
            raise PolyError("negative polynomial power")
        if n == 0:
            return SparsePoly.const(self.domain, 1, self.vars)
        p = self.domain.char
        if p and n % p == 0:
            return self.frobenius_power(p) ** (n // p)
        if n == 1:
            return self
        half = self ** (n // 2)
        sq = half * half
        return sq * self if n % 2 else sq

    def frobenius_power(self, q: int) -> "SparsePoly":
        """self**q for q a power of the characteristic (termwise)."""
        return SparsePoly(
            self.domain,
            self.vars,
            {tuple(x * q for x in e): _coeff_pow(c, q) for e, c in self.terms.items()},
        )

    def scale(self, c) -> "SparsePoly":
        c = self.domain.coerce(c)
        if self.domain.is_zero(c):
            return SparsePoly(self.domain, self.vars, {})
        return SparsePoly(self.domain, self.vars, {e: v * c for e, v in self.terms.items()})

    # -- structure ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, FieldElement, RatFunc)):
            other = SparsePoly.const(self.domain, other, self.vars)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        try:
            a, b = self._align(other)
        except DomainMismatch:
            return False
        return a.terms == b.terms

    def __hash__(self):
        raise TypeError("SparsePoly is not hashable")

    def degree(self, var: str | None = None) -> int:
        """Total degree, or degree in one variable; zero polynomial gives -1."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        if var not in self.vars:
            return 0
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def leading_term(self) -> tuple[tuple[int, ...], object]:
        """Graded-lex leading (exponents, coefficient)."""
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading term")
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def leading_coeff_in(self, var: str) -> "SparsePoly":
        """Coefficient (a polynomial in the other variables) of var^deg."""
        return self.coeff_of(var, self.degree(var))

    def coeff_of(self, var: str, power: int) -> "SparsePoly":
        if var not in self.vars:
            if power == 0:
                return self
            return SparsePoly(self.domain, self.vars, {})
        i = self.vars.index(var)
        terms = {}
        for e, c in self.terms.items():
            if e[i] == power:
                ne = e[:i] + (0,) + e[i + 1 :]
                terms[ne] = c
        return SparsePoly(self.domain, self.vars, terms)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], object]]:
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def term_count(self) -> int:
        return len(self.terms)

    # -- substitution and evaluation ------------------------------------------------

    def subs(self, bindings: Mapping[str, object]) -> "SparsePoly":
        """Polynomial substitution (bindings may not introduce denominators)."""
        num, den = substitute(self, bindings)
        if den.degree() != 0 or not _is_one(den):
            raise PolyError("substitution produced a nontrivial denominator; use substitute()")
        return num

    def evaluate(self, values: Mapping[str, object]):
        """Full evaluation at domain values; returns a domain value."""
        dom = self.domain
        missing = [v for v in self.vars if v not in values and self.degree(v) > 0]
        if missing:
            raise PolyError(f"missing values for {missing}")
        vals = {v: dom.coerce(values[v]) for v in self.vars if v in values}
        acc = dom.zero
        for e, c in self.terms.items():
            t = c
            for v, exp in zip(self.vars, e):
                if exp:
                    t = t * _value_pow(vals[v], exp, dom)
            acc = acc + t
        return acc

    def map_coeffs(self, fn) -> "SparsePoly":
        """Apply fn to every coefficient (same domain), dropping zeros."""
        dom = self.domain
        terms = {}
        for e, c in self.terms.items():
            nc = fn(c)
            if not dom.is_zero(nc):
                terms[e] = nc
        return SparsePoly(dom, self.vars, terms)

    def derivative(self, var: str) -> "SparsePoly":
        if var not in self.vars:
            return SparsePoly(self.domain, self.vars, {})
        i = self.vars.index(var)
        dom = self.domain
        terms = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            nc = c * dom.from_int(e[i])
            if dom.is_zero(nc):
                continue
            ne = e[:i] + (e[i] - 1,) + e[i + 1 :]
            terms[ne] = terms.get(ne, dom.zero) + nc
        return SparsePoly(dom, self.vars, {e: c for e, c in terms.items() if not dom.is_zero(c)})

    # -- serialization ------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "domain": self.domain.to_json(),
            "terms": [
                {"e": list(e), "c": self.domain.coeff_to_json(c)} for e, c in self.sorted_terms()
            ],
        }

    @staticmethod
    def from_json(data: dict, domain: Domain | None = None) -> "SparsePoly":
        from .domains import domain_from_json

        dom = domain if domain is not None else domain_from_json(data["domain"])
        raw_vars = tuple(data["vars"])
        vars = tuple(sorted(raw_vars))
        perm = [raw_vars.index(v) for v in vars]
        terms = {}
        for t in data["terms"]:
            e = tuple(t["e"][i] for i in perm)
            c = dom.coeff_from_json(t["c"])
            if not dom.is_zero(c):
                terms[e] = c
        return SparsePoly(dom, vars, terms)

    def canonical_bytes(self) -> bytes:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":")).encode()

    def __repr__(self):
        if not self.terms:
            return "0"
        dom = self.domain
        parts = []
        for e, c in self.sorted_terms():
            mon = "*".join(
                f"{v}^{x}" if x > 1 else v for v, x in zip(self.vars, e) if x > 0
            )
            cs = dom.coeff_str(c)
            if not mon:
                parts.append(f"({cs})" if ("+" in cs or " " in cs) else cs)
            elif cs == "1":
                parts.append(mon)
            else:
                parts.append(f"({cs})*{mon}" if ("+" in cs or "/" in cs or " " in cs) else f"{cs}*{mon}")
        return " + ".join(parts)


def _coeff_pow(c, n: int):
    if isinstance(c, FieldElement):
        return c**n
    out = c
    for _ in range(n - 1):
        out = out * c
    return out


def _value_pow(c, n: int, dom):
    if n == 0:
        return dom.one
    if isinstance(c, (FieldElement, RatFunc, Fraction)):
        return c**n
    out = c
    for _ in range(n - 1):
        out = out * c
    return out


def _is_one(p: SparsePoly) -> bool:
    if len(p.terms) != 1:
        return False
    ((e, c),) = p.terms.items()
    return all(x == 0 for x in e) and c == p.domain.one


class PolyRing:
    """Convenience handle bundling a domain and a variable tuple."""

    def __init__(self, domain: Domain, vars: Sequence[str]):
        self.domain = domain
        self.user_vars = tuple(vars)
        self.vars = tuple(sorted(vars))

    def gens(self) -> tuple[SparsePoly, ...]:
        return tuple(SparsePoly.gen(self.domain, v, self.vars) for v in self.user_vars)

    def gen(self, name: str) -> SparsePoly:
        return SparsePoly.gen(self.domain, name, self.vars)

    @property
    def zero(self) -> SparsePoly:
        return SparsePoly.zero(self.domain, self.vars)

    @property
    def one(self) -> SparsePoly:
        return self.const(1)

    def const(self, c) -> SparsePoly:
        return SparsePoly.const(self.domain, c, self.vars)

    def from_json(self, data: dict) -> SparsePoly:
        return SparsePoly.from_json(data, self.domain).with_vars(self.vars)


# ---------------------------------------------------------------------------
# division


def divmod_poly(a: SparsePoly, b: SparsePoly, var: str | None = None):
    """Single-divisor division a = q*b + r.

    Leading terms are graded-lex, or prioritized by ``var`` when given
    (highest var-degree first, graded-lex within).  When a is a multiple
    of b the remainder is zero for every choice of order.
    """
    a, b = a._align(b)
    if b.is_zero():
        raise ZeroPolynomial("division by the zero polynomial")
    dom = a.domain

    if var is not None and var in a.vars:
        vi = a.vars.index(var)

        def key(e):
            return (e[vi],) + _grlex_key(e)

    else:

        def key(e):
            return _grlex_key(e)

    eb = max(b.terms, key=key)
    cb = b.terms[eb]
    cb_inv = dom.inv(cb)

    q_terms: dict[tuple, object] = {}
    r_terms: dict[tuple, object] = {}
    work = dict(a.terms)
    while work:
        ea = max(work, key=key)
        if all(x >= y for x, y in zip(ea, eb)):
            cq = work[ea] * cb_inv
            eq = tuple(x - y for x, y in zip(ea, eb))
            q_terms[eq] = q_terms.get(eq, dom.zero) + cq
            # subtract cq * x^eq * b; the leading term cancels exactly
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(eq, e2))
                nc = work.get(e, dom.zero) - cq * c2
                if dom.is_zero(nc):
                    work.pop(e, None)
                else:
                    work[e] = nc
        else:
            r_terms[ea] = work.pop(ea)
    q = SparsePoly(dom, a.vars, {e: c for e, c in q_terms.items() if not dom.is_zero(c)})
    r = SparsePoly(dom, a.vars, r_terms)
    return q, r


def exact_divide(a: SparsePoly, b: SparsePoly, var: str | None = None) -> SparsePoly:
    """Return q with a = b*q; raises InexactDivision otherwise."""
    q, r = divmod_poly(a, b, var)
    if not r.is_zero():
        raise InexactDivision(f"remainder has {r.term_count()} terms")
    return q


def divides(b: SparsePoly, a: SparsePoly) -> bool:
    try:
        exact_divide(a, b)
        return True
    except InexactDivision:
        return False


def divide_with_remainder(a: SparsePoly, b: SparsePoly, var: str):
    """Univariate-in-var division by a b that is monic in var.

    Monic means the coefficient of var^deg is the constant 1, so no
    coefficient division happens and the result is exact over any domain.
    """
    a, b = a._align(b)
    d = b.degree(var)
    if d < 0:
        raise ZeroPolynomial("division by zero polynomial")
    if not _is_one(b.leading_coeff_in(var)):
        raise NotMonic(f"divisor is not monic in {var}")
    vi = a.vars.index(var)
    q = SparsePoly.zero(a.domain, a.vars)
    r = a
    while r.degree(var) >= d:
        e = r.degree(var)
        lead = r.coeff_of(var, e)  # poly in the other vars
        shift = SparsePoly(
            a.domain,
            a.vars,
            {
                tuple(x + (e - d if i == vi else 0) for i, x in enumerate(ex)): c
                for ex, c in lead.terms.items()
            },
        )
        q = q + shift
        r = r - shift * b
    return q, r


# ---------------------------------------------------------------------------
# substitution with denominator clearing


def substitute(a: SparsePoly, bindings: Mapping[str, object]):
    """Substitute values/polynomials/rational expressions for variables.

    Binding values may be SparsePoly, (num, den) pairs of SparsePoly,
    domain values, or ints.  Returns ``(numerator, denominator)`` with the
    denominator cleared deterministically as the product over bound
    variables v of den_v^(max exponent of v), so "vanishes after
    clearing" is a well-defined test.  Unbound variables pass through.
    """
    dom = a.domain
    bound: dict[str, tuple[SparsePoly, SparsePoly]] = {}
    for v, val in bindings.items():
        if v not in a.vars:
            raise PolyError(f"binding for {v!r}, which does not occur in the polynomial")
        if isinstance(val, tuple):
            num, den = val
        elif isinstance(val, SparsePoly):
            num, den = val, SparsePoly.const(dom, 1)
        elif isinstance(val, RatFunc):
            rf_dom = val.dom
            num = SparsePoly(
                dom, (rf_dom.var,), {(i,): c for i, c in enumerate(val.num) if not dom.is_zero(c)}
            )
            den = SparsePoly(
                dom, (rf_dom.var,), {(i,): c for i, c in enumerate(val.den) if not dom.is_zero(c)}
            )
        else:
            num, den = SparsePoly.const(dom, val), SparsePoly.const(dom, 1)
        if num.domain != dom:
            raise DomainMismatch("binding value domain differs from polynomial domain")
        bound[v] = (num, den)
    if not bound:
        return a, SparsePoly.const(dom, 1, a.vars)

    vars_out = tuple(
        sorted(
            (set(a.vars) - set(bound))
            | set().union(*(set(n.vars) | set(d.vars) for n, d in bound.values()))
        )
    )

    max_exp = {v: 0 for v in bound}
    idx = {v: a.vars.index(v) for v in bound}
    for e in a.terms:
        for v, i in idx.items():
            if e[i] > max_exp[v]:
                max_exp[v] = e[i]

    # memoized powers of each numerator and denominator
    pow_cache: dict[tuple[str, str, int], SparsePoly] = {}

    def powed(v: str, which: str, n: int) -> SparsePoly:
        key = (v, which, n)
        if key not in pow_cache:
            pow_cache[key] = bound[v][0 if which == "n" else 1] ** n
        return pow_cache[key]

    out = SparsePoly.zero(dom, vars_out)
    for e, c in a.terms.items():
        term = SparsePoly.const(dom, c, vars_out)
        for v, x in zip(a.vars, e):
            if v in bound:
                if x:
                    term = term * powed(v, "n", x)
                if max_exp[v] - x:
                    term = term * powed(v, "d", max_exp[v] - x)
            elif x:
                term = term * SparsePoly.gen(dom, v, vars_out) ** x
        out = out + term
    den = SparsePoly.const(dom, 1, vars_out)
    for v in bound:
        if max_exp[v]:
            den = den * powed(v, "d", max_exp[v])
    return out, den


# ---------------------------------------------------------------------------
# univariate utilities over field domains


def dense_coeffs(a: SparsePoly, var: str | None = None) -> tuple:
    """Dense low-to-high coefficient tuple of a univariate polynomial."""
    live = [v for v in a.vars if a.degree(v) > 0]
    if len(live) > 1:
        raise PolyError(f"polynomial is not univariate: variables {live}")
    if var is None:
        var = live[0] if live else (a.vars[0] if a.vars else "x")
    if var in a.vars:
        i = a.vars.index(var)
    else:
        i = None
    d = a.degree(var)
    out = [a.domain.zero] * (d + 1 if d >= 0 else 0)
    for e, c in a.terms.items():
        k = e[i] if i is not None else 0
        out[k] = c
    return uni_trim(out, a.domain)


def from_dense(coeffs: Sequence, domain: Domain, var: str) -> SparsePoly:
    terms = {}
    for i, c in enumerate(coeffs):
        c = domain.coerce(c)
        if not domain.is_zero(c):
            terms[(i,)] = c
    return SparsePoly(domain, (var,), terms)


def map_poly(poly: SparsePoly, domain: Domain, fn) -> SparsePoly:
    """Translate a polynomial into another domain, coefficient by coefficient."""
    terms = {}
    for e, c in poly.terms.items():
        nc = fn(c)
        if not domain.is_zero(nc):
            terms[e] = nc
    return SparsePoly(domain, poly.vars, terms)


def gcd_univariate(a: SparsePoly, b: SparsePoly) -> SparsePoly:
    """Monic gcd of univariate polynomials over a field domain."""
    if a.is_zero() and b.is_zero():
        raise ZeroPolynomial("gcd(0, 0) is undefined")
    if a.domain != b.domain:
        raise DomainMismatch("gcd operands over different domains")
    av = [v for v in a.vars if a.degree(v) > 0]
    bv = [v for v in b.vars if b.degree(v) > 0]
    var = (av or bv or ["x"])[0]
    if (set(av) | set(bv)) - {var}:
        raise PolyError("gcd operands involve different variables")
    ca = dense_coeffs(a, var)
    cb = dense_coeffs(b, var)
    dom = a.domain
    from .domains import uni_gcd

    g = uni_gcd(ca, cb, dom)
    return from_dense(g, dom, var)


def roots_in_field(a: SparsePoly) -> list[tuple[FieldElement, int]]:
    """Roots (with multiplicity) of a univariate polynomial over GF(p^k).

    Exhaustive evaluation over the field, vectorized over element codes;
    multiplicities by repeated synthetic division.  Roots are returned in
    field enumeration order (0 first, then by discrete log).
    """
    if a.is_zero():
        raise ZeroPolynomial("root finding on the zero polynomial")
    dom = a.domain
    if not isinstance(dom, FF):
        raise PolyError("roots_in_field needs a finite-field domain")
    field = dom.field
    coeffs = dense_coeffs(a)
    if len(coeffs) == 1:
        return []
    codes = _root_codes(field, [c.code for c in coeffs])
    # order: 0 first, then ascending dlog
    codes.sort(key=lambda c: -1 if c == 0 else field.log[c])
    out = []
    for code in codes:
        r = field.from_code(code)
        m = 0
        work = list(coeffs)
        while True:
            q, rem = _synth_div(work, r, field)
            if rem.code != 0:
                break
            m += 1
            work = q
            if len(work) == 1 and work[0].code == 0:
                break
        out.append((r, m))
    return out


def _synth_div(coeffs: list[FieldElement], r: FieldElement, field):
    """Divide sum c_i x^i by (x - r); returns (quotient coeffs, remainder)."""
    acc = field.zero
    q = [field.zero] * (len(coeffs) - 1)
    for i in range(len(coeffs) - 1, 0, -1):
        acc = acc * r + coeffs[i]
        q[i - 1] = acc
    rem = acc * r + coeffs[0]
    return q, rem


def _root_codes(field, coeff_codes: list[int]) -> list[int]:
    import numpy as np

    exp, log, digits = field.numpy_tables()
    N = field.order
    xs = np.arange(N, dtype=np.int64)
    p, k = field.p, field.k

    def vec_mul(A, B):
        res = np.zeros_like(A)
        nz = (A != 0) & (B != 0)
        res[nz] = exp[(log[A[nz]] + log[B[nz]]) % (N - 1)]
        return res

    def vec_add(A, B):
        if p == 2:
            return A ^ B
        if k == 1:
            return (A + B) % p
        out = np.zeros_like(A)
        mul = 1
        for i in range(k):
            out += ((digits[i][A] + digits[i][B]) % p) * mul
            mul *= p
        return out

    acc = np.zeros(N, dtype=np.int64)
    for c in reversed(coeff_codes):
        acc = vec_mul(acc, xs)
        if c:
            acc = vec_add(acc, np.full(N, c, dtype=np.int64))
    return [int(x) for x in np.nonzero(acc == 0)[0]]


# ---------------------------------------------------------------------------
# quotient rings F[var]/(modulus)


class QuotientElement:
    """Element of a univariate quotient ring, residue kept reduced."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: "QuotientRing", coeffs: tuple):
        self.ring = ring
        self.coeffs = coeffs  # dense, low-to-high, already reduced

    def _check(self, other):
        if not isinstance(other, QuotientElement) or other.ring != self.ring:
            raise DomainMismatch("quotient elements over different moduli")

    def __add__(self, other):
        other = self.ring.coerce(other)
        self._check(other)
        from .domains import uni_add

        return QuotientElement(self.ring, uni_add(self.coeffs, other.coeffs, self.ring.base))

    __radd__ = __add__

    def __neg__(self):
        from .domains import uni_neg

        return QuotientElement(self.ring, uni_neg(self.coeffs, self.ring.base))

    def __sub__(self, other):
        other = self.ring.coerce(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self.ring.coerce(other)
        self._check(other)
        ring = self.ring
        prod = uni_mul(self.coeffs, other.coeffs, ring.base)
        _, r = uni_divmod(prod, ring.modulus_coeffs, ring.base)
        return QuotientElement(ring, r)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self.ring.coerce(other)
        return self * other.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = self.ring.one
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def inverse(self) -> "QuotientElement":
        ring = self.ring
        g, s, _ = uni_ext_gcd(self.coeffs, ring.modulus_coeffs, ring.base)
        if len(g) != 1:
            raise NotInvertible(from_dense(g, ring.base, ring.var))
        inv_g = ring.base.inv(g[0])
        from .domains import uni_scale

        _, r = uni_divmod(uni_scale(s, inv_g, ring.base), ring.modulus_coeffs, ring.base)
        return QuotientElement(ring, r)

    def __eq__(self, other):
        if isinstance(other, QuotientElement):
            return self.ring == other.ring and self.coeffs == other.coeffs
        try:
            other = self.ring.coerce(other)
        except (DomainMismatch, TypeError):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.ring), self.coeffs))

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        return len(self.coeffs) - 1

    def to_poly(self) -> SparsePoly:
        return from_dense(self.coeffs, self.ring.base, self.ring.var)

    def __repr__(self):
        return f"[{self.to_poly()!r}]"


class QuotientRing(Domain):
    """F[var]/(modulus) for a modulus monic in var over a field domain F.

    The modulus may be reducible; then some nonzero elements are not
    invertible and :class:`NotInvertible` carries the offending gcd.
    Doubles as a coefficient domain so polynomials over the quotient ring
    (e.g. step polynomials with algebraic-function coefficients) reuse the
    generic machinery.
    """

    def __init__(self, modulus: SparsePoly, var: str):
        self.base = modulus.domain
        self.var = var
        d = modulus.degree(var)
        if d < 1:
            raise PolyError("modulus must have positive degree in its variable")
        lead = modulus.coeff_of(var, d)
        if not _is_one(lead):
            raise NotMonic(f"modulus is not monic in {var}")
        live = [v for v in modulus.vars if modulus.degree(v) > 0 and v != var]
        if live:
            raise PolyError(f"modulus involves extra variables {live}")
        self.modulus = modulus
        self.modulus_coeffs = dense_coeffs(modulus, var)
        self.char = self.base.char

    @property
    def zero(self):
        return QuotientElement(self, ())

    @property
    def one(self):
        return QuotientElement(self, (self.base.one,))

    def gen(self) -> QuotientElement:
        return QuotientElement(self, (self.base.zero, self.base.one))

    def from_int(self, n):
        c = self.base.from_int(n)
        return QuotientElement(self, (c,) if not self.base.is_zero(c) else ())

    def from_base(self, c) -> QuotientElement:
        c = self.base.coerce(c)
        return QuotientElement(self, (c,) if not self.base.is_zero(c) else ())

    def from_poly(self, p: SparsePoly) -> QuotientElement:
        coeffs = dense_coeffs(p, self.var)
        _, r = uni_divmod(coeffs, self.modulus_coeffs, self.base)
        return QuotientElement(self, r)

    def coerce(self, c):
        if isinstance(c, QuotientElement):
            if c.ring != self:
                raise DomainMismatch("quotient element from a different ring")
            return c
        if isinstance(c, int):
            return self.from_int(c)
        return self.from_base(c)

    def is_zero(self, c):
        return c.is_zero()

    def inv(self, c):
        return c.inverse()

    def contains(self, c):
        return isinstance(c, QuotientElement) and c.ring == self

    def coeff_to_json(self, c):
        return [self.base.coeff_to_json(x) for x in c.coeffs]

    def coeff_from_json(self, data):
        return QuotientElement(self, tuple(self.base.coeff_from_json(x) for x in data))

    def coeff_str(self, c):
        return repr(c)

    def to_json(self):
        return {"kind": "quotient", "modulus": self.modulus.to_json(), "var": self.var}

    def __repr__(self):
        return f"{self.base!r}[{self.var}]/({self.modulus!r})"

    def __eq__(self, other):
        return (
            isinstance(other, QuotientRing)
            and other.base == self.base
            and other.var == self.var
            and other.modulus_coeffs == self.modulus_coeffs
        )

    def __hash__(self):
        return hash(("QuotientRing", self.base, self.var, len(self.modulus_coeffs)))
