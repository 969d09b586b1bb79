"""Exact arithmetic in small finite fields GF(p^k).

A field is pinned down by its characteristic, extension degree and a
monic irreducible defining polynomial, so every run (and every machine)
labels elements identically.  When no polynomial is supplied the Conway
polynomial is used; its variable class is primitive and its generators
are norm-compatible across subfields, which is what makes discrete-log
labels reproducible.

Elements are immutable values in the polynomial basis.  Mixing elements
of distinct fields is always an error, never a silent coercion: cross
field bugs are the dominant failure mode in this kind of computation.

Internally an element is an integer code (base-p digits = coefficient
vector) and each field builds exp/log tables for its multiplicative
group at construction time, so mul/inv/pow/frobenius are table lookups.
"""

from __future__ import annotations

import json
from importlib import resources
from typing import Iterator, Sequence


class FieldError(Exception):
    """Base class for finite-field construction and arithmetic errors."""


class NotIrreducible(FieldError):
    pass


class TableMiss(FieldError):
    pass


class SizeExceeded(FieldError):
    pass


class FieldMismatch(FieldError):
    pass


class DivisionByZero(FieldError):
    pass


class BadPower(FieldError):
    pass


class NotASubfield(FieldError):
    pass


class NotPrimitive(FieldError):
    pass


#: Largest supported field, |F| = p^k <= 2^20.
MAX_ORDER = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# ---------------------------------------------------------------------------
# dense univariate arithmetic over GF(p), coefficients as int lists low-to-high

def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    # f monic
    r = list(a)
    df = len(f) - 1
    while len(r) - 1 >= df and r:
        lead = r[-1]
        shift = len(r) - 1 - df
        if lead:
            for i, fi in enumerate(f):
                r[shift + i] = (r[shift + i] - lead * fi) % p
        r.pop()
        _ptrim(r)
    return r


def _pmulmod(a, b, f, p):
    return _pmod(_pmul(a, b, p), f, p)


def _ppowmod(a: Sequence[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(a, f, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, f, p)
        base = _pmulmod(base, base, f, p)
        e >>= 1
    return result


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        # make b monic for the reduction step
        inv = pow(b[-1], p - 2, p)
        bm = [(c * inv) % p for c in b]
        a, b = b, _pmod(a, bm, p)
    return a


def _is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin irreducibility test for a monic polynomial over GF(p)."""
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x = [0, 1]
    if _ppowmod(x, p**k, f, p) != _pmod(x, f, p):
        return False
    for ell in _factorize(k):
        h = _ppowmod(x, p ** (k // ell), f, p)
        diff = list(h)
        while len(diff) < 2:
            diff.append(0)
        diff[1] = (diff[1] - 1) % p
        _ptrim(diff)
        g = _pgcd(list(f), diff, p)
        if len(g) - 1 > 0:
            return False
    return True


# ---------------------------------------------------------------------------


def _load_conway_table() -> dict[tuple[int, int], tuple[int, ...]]:
    raw = resources.files("towerforge.data").joinpath("conway.json").read_text()
    data = json.loads(raw)
    table = {}
    for pk, coeffs in data.items():
        p_s, k_s = pk.split(",")
        table[(int(p_s), int(k_s))] = tuple(coeffs)
    return table


_CONWAY: dict[tuple[int, int], tuple[int, ...]] | None = None


def conway_polynomial(p: int, k: int) -> tuple[int, ...]:
    """Return the shipped Conway polynomial for GF(p^k), low-to-high."""
    global _CONWAY
    if _CONWAY is None:
        _CONWAY = _load_conway_table()
    try:
        return _CONWAY[(p, k)]
    except KeyError:
        raise TableMiss(f"no Conway polynomial shipped for GF({p}^{k})") from None


class FieldElement:
    """Immutable element of a :class:`FieldSpec` in the polynomial basis."""

    __slots__ = ("field", "code")

    def __init__(self, field: "FieldSpec", code: int):
        self.field = field
        self.code = code

    # -- structure ---------------------------------------------------------

    @property
    def coeffs(self) -> tuple[int, ...]:
        """Coefficient vector of length k, low-to-high."""
        return self.field.decode(self.code)

    def coeff_list(self) -> list[int]:
        return list(self.coeffs)

    def is_zero(self) -> bool:
        return self.code == 0

    def __bool__(self) -> bool:
        return self.code != 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field is other.field and self.code == other.code

    def __hash__(self):
        return hash((id(self.field), self.code))

    def __repr__(self):
        return f"{self.field.label}({self.poly_str()})"

    def poly_str(self) -> str:
        if self.code == 0:
            return "0"
        v = self.field.var
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                head = "" if c == 1 else str(c) + "*"
                parts.append(f"{head}{v}" + (f"^{i}" if i > 1 else ""))
        return " + ".join(reversed(parts))

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement) or other.field is not self.field:
            raise FieldMismatch(
                f"cannot combine elements of {self.field!r} and {getattr(other, 'field', other)!r}"
            )

    def __add__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.add_codes(self.code, other.code))

    def __sub__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.sub_codes(self.code, other.code))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg_code(self.code))

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.mul_codes(self.code, other.code))

    def __truediv__(self, other):
        self._check(other)
        return self * other.inverse()

    def inverse(self) -> "FieldElement":
        if self.code == 0:
            raise DivisionByZero("0 has no multiplicative inverse")
        f = self.field
        return FieldElement(f, f.exp[(-f.log[self.code]) % (f.order - 1)])

    def __pow__(self, e: int) -> "FieldElement":
        f = self.field
        if self.code == 0:
            if e < 0:
                raise DivisionByZero("0 has no multiplicative inverse")
            return f.one if e == 0 else f.zero
        return FieldElement(f, f.exp[(f.log[self.code] * e) % (f.order - 1)])

    def frobenius(self, q: int) -> "FieldElement":
        """Return x**q for q a power of the characteristic."""
        p = self.field.p
        m = q
        while m > 1 and m % p == 0:
            m //= p
        if m != 1 or q < 1:
            raise BadPower(f"{q} is not a power of the characteristic {p}")
        return self**q

    def dlog(self) -> int:
        """Discrete log with respect to the field generator (0 <= e < p^k - 1)."""
        if self.code == 0:
            raise DivisionByZero("discrete log of 0 is undefined")
        return self.field.log[self.code]

    def multiplicative_order(self) -> int:
        if self.code == 0:
            raise DivisionByZero("0 has no multiplicative order")
        n = self.field.order - 1
        from math import gcd

        return n // gcd(n, self.dlog())


class FieldSpec:
    """An explicit finite field GF(p^k) with fixed generator labels.

    Use :func:`make_field` rather than the constructor; it validates input
    and caches specs so that equal (p, k, poly) triples share one object.
    """

    def __init__(self, p: int, k: int, defining_poly: tuple[int, ...], label: str):
        self.p = p
        self.k = k
        self.defining_poly = defining_poly
        self.label = label
        self.var = "w"
        self.order = p**k

        # exp/log tables for the multiplicative group.
        gen_code = self._find_generator()
        exp = [0] * (self.order - 1)
        log = [-1] * self.order
        c = 1
        for i in range(self.order - 1):
            exp[i] = c
            log[c] = i
            c = self._mul_raw(c, gen_code)
        if c != 1:
            raise NotPrimitive("generator walk did not close; table construction bug")
        self.exp = exp
        self.log = log
        self.generator = FieldElement(self, gen_code)
        self.zero = FieldElement(self, 0)
        self.one = FieldElement(self, 1)
        self._np = None  # lazy numpy tables for bulk evaluation

    # -- raw code arithmetic (no tables) ------------------------------------

    def decode(self, code: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.k):
            out.append(code % p)
            code //= p
        return tuple(out)

    def encode(self, coeffs: Sequence[int]) -> int:
        p = self.p
        code = 0
        for c in reversed([c % p for c in coeffs]):
            code = code * p + c
        return code

    def _mul_raw(self, a: int, b: int) -> int:
        prod = _pmul(self.decode(a), self.decode(b), self.p)
        return self.encode(_pmod(prod, self.defining_poly, self.p) + [0] * self.k)

    def _pow_raw(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_raw(r, a)
            a = self._mul_raw(a, a)
            e >>= 1
        return r

    def _find_generator(self) -> int:
        n = self.order - 1
        if n == 1:
            return 1
        fac = list(_factorize(n))

        def is_primitive(code: int) -> bool:
            return all(self._pow_raw(code, n // ell) != 1 for ell in fac)

        var_code = self.encode(_pmod([0, 1], self.defining_poly, self.p) + [0] * self.k)
        if is_primitive(var_code):  # the variable class; always primitive for Conway polys
            return var_code
        for code in range(2, self.order):
            if is_primitive(code):
                return code
        raise NotPrimitive(f"no primitive element found in {self.label}")

    # -- table-backed code arithmetic ---------------------------------------

    def add_codes(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.k == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        mul = 1
        for _ in range(self.k):
            out += ((a % p + b % p) % p) * mul
            a //= p
            b //= p
            mul *= p
        return out

    def sub_codes(self, a: int, b: int) -> int:
        return self.add_codes(a, self.neg_code(b))

    def neg_code(self, a: int) -> int:
        if self.p == 2:
            return a
        p = self.p
        out = 0
        mul = 1
        for _ in range(self.k):
            out += ((-(a % p)) % p) * mul
            a //= p
            mul *= p
        return out

    def mul_codes(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.order - 1)]

    # -- elements ------------------------------------------------------------

    def element(self, coeffs: Sequence[int]) -> FieldElement:
        if len(coeffs) > self.k and any(c % self.p for c in coeffs[self.k :]):
            raise FieldError(f"coefficient vector too long for {self.label}")
        return FieldElement(self, self.encode(list(coeffs[: self.k])))

    def from_code(self, code: int) -> FieldElement:
        if not 0 <= code < self.order:
            raise FieldError(f"code {code} out of range for {self.label}")
        return FieldElement(self, code)

    def from_int(self, n: int) -> FieldElement:
        """Image of an integer under the prime-subfield map."""
        return FieldElement(self, n % self.p)

    def primitive_element(self) -> FieldElement:
        return self.generator

    def elements(self) -> Iterator[FieldElement]:
        """All elements: 0 first, then g^0, g^1, ..., g^(p^k-2)."""
        yield self.zero
        for c in self.exp:
            yield FieldElement(self, c)

    def element_count(self) -> int:
        return self.order

    # -- misc ------------------------------------------------------------------

    def to_json(self) -> dict:
        return {"p": self.p, "k": self.k, "poly": list(self.defining_poly)}

    def __repr__(self):
        return self.label

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.k, self.defining_poly) == (other.p, other.k, other.defining_poly)

    def __hash__(self):
        return hash((self.p, self.k, self.defining_poly))

    def numpy_tables(self):
        """Lazily built numpy exp/log (and digit) tables for bulk evaluation."""
        if self._np is None:
            import numpy as np

            exp = np.array(self.exp, dtype=np.int64)
            log = np.array(self.log, dtype=np.int64)
            if self.p == 2 or self.k == 1:
                digits = None
            else:
                codes = np.arange(self.order, dtype=np.int64)
                digits = np.empty((self.k, self.order), dtype=np.int64)
                c = codes.copy()
                for i in range(self.k):
                    digits[i] = c % self.p
                    c //= self.p
            self._np = (exp, log, digits)
        return self._np


_FIELD_CACHE: dict[tuple[int, int, tuple[int, ...]], FieldSpec] = {}


def make_field(
    p: int,
    k: int,
    defining_poly: Sequence[int] | None = None,
    label: str | None = None,
) -> FieldSpec:
    """Construct (or fetch the cached) GF(p^k).

    With ``defining_poly`` omitted the shipped Conway polynomial is used;
    absent table entries raise :class:`TableMiss`.  Supplied polynomials
    must be monic of degree k and irreducible over GF(p).
    """
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if k < 1:
        raise FieldError("extension degree must be >= 1")
    if p**k > MAX_ORDER:
        raise SizeExceeded(f"GF({p}^{k}) exceeds the supported size 2^20")
    if defining_poly is None:
        poly = conway_polynomial(p, k)
    else:
        poly = tuple(c % p for c in defining_poly)
        if len(poly) != k + 1 or poly[-1] != 1:
            raise FieldError("defining polynomial must be monic of degree k")
        if not _is_irreducible(poly, p):
            raise NotIrreducible(f"{list(poly)} is reducible over GF({p})")
    key = (p, k, poly)
    if key not in _FIELD_CACHE:
        name = label or (f"GF({p})" if k == 1 else f"GF({p}^{k})")
        _FIELD_CACHE[key] = FieldSpec(p, k, poly, name)
    return _FIELD_CACHE[key]


def prime_field(p: int) -> FieldSpec:
    """GF(p) for a prime outside the Conway table (e.g. modular fallbacks).

    Uses x - g with g the smallest primitive root, so the variable class
    is primitive and discrete logs stay well-defined.
    """
    if (p, 1) == (2, 1) or p == 7:
        return make_field(p, 1)
    n = p - 1
    fac = list(_factorize(n))
    g = next(g for g in range(2, p) if all(pow(g, n // ell, p) != 1 for ell in fac))
    return make_field(p, 1, [(-g) % p, 1])


def frobenius(x: FieldElement, q: int) -> FieldElement:
    return x.frobenius(q)


def discrete_log(x: FieldElement) -> int:
    return x.dlog()


def embed(x: FieldElement, target: FieldSpec) -> FieldElement:
    """Ring embedding GF(p^m) -> GF(p^k) for m | k, fixing GF(p).

    The source generator is sent to the root of the source defining
    polynomial with minimal discrete log in the target, which makes the
    embedding deterministic.  For Conway-polynomial fields this is the
    norm-compatible embedding (e.g. the GF(2^5) generator lands on
    beta^33 in GF(2^10)).
    """
    src = x.field
    if src.p != target.p or target.k % src.k != 0:
        raise NotASubfield(f"{src.label} is not a subfield of {target.label}")
    if src is target:
        return x
    root = _embedding_root(src, target)
    if x.code == 0:
        return target.zero
    return root ** x.dlog()


_EMBED_CACHE: dict[tuple[int, int], FieldElement] = {}


def _embedding_root(src: FieldSpec, target: FieldSpec) -> FieldElement:
    key = (id(src), id(target))
    if key not in _EMBED_CACHE:
        d = (target.order - 1) // (src.order - 1)
        poly = src.defining_poly
        best = None
        for i in range(src.order - 1):
            cand = target.generator ** (d * i)
            acc = target.zero
            for c in reversed(poly):
                acc = acc * cand + target.from_int(c)
            if acc.is_zero():
                best = cand
                break  # exponents d*i are increasing, first hit has minimal dlog
        if best is None:
            raise NotASubfield(
                f"defining polynomial of {src.label} has no root in {target.label}"
            )
        _EMBED_CACHE[key] = best
    return _EMBED_CACHE[key]
