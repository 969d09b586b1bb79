"""Twisted polynomial rings and rank-2 commutation/isogeny derivations.

A twisted (skew) polynomial is sum_i c_i tau^i with the commutation rule
tau * c = c^q * tau, so multiplication follows

    (sum_i a_i tau^i)(sum_j b_j tau^j) = sum_{i,j} a_i * b_j^(q^i) * tau^(i+j).

Coefficients here are sparse multivariate polynomials over GF(p) in the
module parameters (g1..g3, h1..h5, isogeny parameters a, l*, t*), so
composition of additive polynomials and coefficient comparison are exact
symbolic operations.

The derivations in this module produce, for a rank-2 module over the
coordinate ring GF(2)[S,T]/(S^2+S-T^3-T):

* the two constraint lists coming from phi_{S^2+S-T^3-T} = 0 and from
  phi_T phi_S = phi_S phi_T,
* the redundancy p3 = p1 - p2^4 linking the two lists' top constraints,
* the coefficient system of an isogeny lambda = tau - a on phi_T and
  phi_S, and the eliminated one-relation forms in a alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .domains import FF, DomainMismatch
from .gf import make_field, prime_field
from .poly import PolyRing, SparsePoly


class SkewError(Exception):
    pass


class EliminationMismatch(SkewError):
    """The eliminated relation is not of the expected q-difference form."""


def _char_of(q: int) -> int:
    p = 2
    while p <= q:
        if q % p == 0:
            m = q
            while m % p == 0:
                m //= p
            if m == 1:
                return p
            raise SkewError(f"{q} is not a prime power")
        p += 1
    raise SkewError(f"{q} is not a prime power")


def _field_for_char(p: int):
    try:
        return make_field(p, 1)
    except Exception:
        return prime_field(p)


class SkewPoly:
    """Twisted polynomial sum c_i tau^i, coefficients trimmed at the top."""

    __slots__ = ("q", "coeffs")

    def __init__(self, q: int, coeffs: Sequence[SparsePoly]):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        if coeffs:
            p = coeffs[0].domain.char
            if p == 0 or q < p or _char_of(q) != p:
                raise SkewError(f"twist power {q} is not a power of the coefficient characteristic")
        self.q = q
        self.coeffs = tuple(coeffs)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> SparsePoly:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        raise IndexError(i)

    def _check(self, other: "SkewPoly"):
        if self.q != other.q:
            raise DomainMismatch(f"twist powers differ: {self.q} vs {other.q}")

    def __add__(self, other: "SkewPoly") -> "SkewPoly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        out = []
        for i in range(n):
            a = self.coeffs[i] if i < len(self.coeffs) else None
            b = other.coeffs[i] if i < len(other.coeffs) else None
            if a is None:
                out.append(b)
            elif b is None:
                out.append(a)
            else:
                out.append(a + b)
        return SkewPoly(self.q, out)

    def __neg__(self) -> "SkewPoly":
        return SkewPoly(self.q, [-c for c in self.coeffs])

    def __sub__(self, other: "SkewPoly") -> "SkewPoly":
        return self + (-other)

    def __mul__(self, other: "SkewPoly") -> "SkewPoly":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return SkewPoly(self.q, [])
        da, db = self.degree(), other.degree()
        zero = self.coeffs[0] - self.coeffs[0]
        out = [zero] * (da + db + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            qi = self.q**i
            for j, b in enumerate(other.coeffs):
                if b.is_zero():
                    continue
                out[i + j] = out[i + j] + a * (b**qi)
        return SkewPoly(self.q, out)

    def __pow__(self, n: int) -> "SkewPoly":
        if n < 0:
            raise SkewError("negative skew power")
        out = self
        for _ in range(n - 1):
            out = out * self
        if n == 0:
            raise SkewError("skew identity element needs an explicit coefficient ring")
        return out

    def __eq__(self, other):
        if not isinstance(other, SkewPoly):
            return NotImplemented
        return self.q == other.q and list(self.coeffs) == list(other.coeffs)

    def __hash__(self):
        raise TypeError("SkewPoly is not hashable")

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            tau = f"tau^{i}" if i > 1 else ("tau" if i == 1 else "")
            body = repr(c)
            if tau and body == "1":
                parts.append(tau)
            elif tau:
                parts.append(f"({body})*{tau}")
            else:
                parts.append(f"({body})")
        return " + ".join(parts)


# ---------------------------------------------------------------------------
# the rank-2 module over GF(2)[S,T]/(S^2+S-T^3-T)

MODULE_VARS = ("g1", "g2", "g3", "h1", "h2", "h3", "h4", "h5")


def module_ring(q: int = 2) -> PolyRing:
    p = _char_of(q)
    return PolyRing(FF(_field_for_char(p)), MODULE_VARS)


def phi_T(ring: PolyRing, q: int = 2) -> SkewPoly:
    """tau^4 + g1 tau^3 + g2 tau^2 + g3 tau."""
    g1, g2, g3 = ring.gen("g1"), ring.gen("g2"), ring.gen("g3")
    return SkewPoly(q, [ring.zero, g3, g2, g1, ring.one])

def phi_S(ring: PolyRing, q: int = 2) -> SkewPoly:
    """tau^6 + h1 tau^5 + ... + h5 tau."""
    h = [ring.gen(f"h{i}") for i in range(1, 6)]
    return SkewPoly(q, [ring.zero, h[4], h[3], h[2], h[1], h[0], ring.one])


def commutation_constraints(q: int = 2):
    """Constraint polynomial lists for a normalized rank-2 module.

    Returns (first, second): coefficients, in descending tau-degree with
    zero entries dropped, of phi_S^2 + phi_S - phi_T^3 - phi_T (the image
    of the curve relation S^2 + S - T^3 - T) and of the commutator
    phi_T phi_S - phi_S phi_T.
    """
    ring = module_ring(q)
    fT = phi_T(ring, q)
    fS = phi_S(ring, q)
    curve = fS * fS + fS - (fT * fT * fT) - fT
    comm = fT * fS - fS * fT
    first = [c for c in reversed(curve.coeffs) if not c.is_zero()]
    second = [c for c in reversed(comm.coeffs) if not c.is_zero()]
    return first, second


def simplify_p3_identity(q: int = 2) -> dict:
    """Check the redundancy between the two top constraints.

    With p1 the highest curve constraint and p2 the highest commutator
    constraint, verifies p3 := p1 - p2^4 = h1^4 + h1 + g1^16 + g1^4 + g1
    together with p2 = p3 + p3^4 and p1 = p3 + p3^4 + p3^16.
    """
    first, second = commutation_constraints(q)
    p1, p2 = first[0], second[0]
    p3 = p1 - p2**4
    ring = module_ring(q)
    g1, h1 = ring.gen("g1"), ring.gen("h1")
    expected_p3 = h1**4 + h1 + g1**16 + g1**4 + g1
    return {
        "p3_matches": p3 == expected_p3,
        "p2_from_p3": (p3 + p3**4) == p2,
        "p1_from_p3": (p3 + p3**4 + p3**16) == p1,
    }


# ---------------------------------------------------------------------------
# isogenies of the simplest shape lambda = tau - a


def _isogeny_ring(q: int, letters: Sequence[str]) -> PolyRing:
    p = _char_of(q)
    return PolyRing(FF(_field_for_char(p)), letters)


def isogeny_system_T(q: int = 2):
    """Coefficient equations of lambda phi_T = psi_T lambda.

    Returns four (lhs, rhs) pairs, one per tau-power from tau^4 down to
    tau, for lambda = tau - a, phi_T = tau^4 + g1 tau^3 + g2 tau^2 + g3 tau
    and psi_T = tau^4 + l1 tau^3 + l2 tau^2 + l3 tau.
    """
    ring = _isogeny_ring(q, ("a", "g1", "g2", "g3", "l1", "l2", "l3"))
    a = ring.gen("a")
    g = [ring.gen(f"g{i}") for i in (1, 2, 3)]
    l = [ring.gen(f"l{i}") for i in (1, 2, 3)]
    pairs = [
        (g[0] ** q - a, l[0] - a ** (q**4)),
        (g[1] ** q - a * g[0], l[1] - l[0] * a ** (q**3)),
        (g[2] ** q - a * g[1], l[2] - l[1] * a ** (q**2)),
        (-(a * g[2]), -(l[2] * a**q)),
    ]
    return pairs


def isogeny_system_S(q: int = 2):
    """Coefficient equations of lambda phi_S = psi_S lambda (six pairs)."""
    ring = _isogeny_ring(q, ("a", "h1", "h2", "h3", "h4", "h5", "t1", "t2", "t3", "t4", "t5"))
    a = ring.gen("a")
    h = [ring.gen(f"h{i}") for i in range(1, 6)]
    t = [ring.gen(f"t{i}") for i in range(1, 6)]
    pairs = [
        (h[0] ** q - a, t[0] - a ** (q**6)),
        (h[1] ** q - a * h[0], t[1] - t[0] * a ** (q**5)),
        (h[2] ** q - a * h[1], t[2] - t[1] * a ** (q**4)),
        (h[3] ** q - a * h[2], t[3] - t[2] * a ** (q**3)),
        (h[4] ** q - a * h[3], t[4] - t[3] * a ** (q**2)),
        (-(a * h[4]), -(t[4] * a**q)),
    ]
    return pairs


def _eliminate(q: int, prefix: str, count: int, out_var: str, order: str = "top-down"):
    """Eliminate the auxiliary variables of a triangular isogeny system.

    The equations (produced by isogeny_system_T/S) express each auxiliary
    coefficient in terms of the previous one; substituting through leaves a
    single relation, which must take the form W^q - W = 0 for

        W = a^(q^m+...+q+1) + c1 a^(q^(m-1)+...+1) + ... + cm a.

    Returns W - <out_var> as a polynomial with a fresh variable adjoined
    (the constant in GF(q) the relation pins down).
    """
    letters = tuple(["a"] + [f"{prefix}{i}" for i in range(1, count + 1)])
    ring = _isogeny_ring(q, letters)
    a = ring.gen("a")
    c = [ring.gen(f"{prefix}{i}") for i in range(1, count + 1)]
    m = count + 1  # tau-degree of the module map being intertwined

    # rows of the triangular system: aux_1 = R_1, aux_j = R_j + aux_{j-1} a^(q^(m-j+1))
    def row(j: int) -> SparsePoly:  # 1-based
        if j == 1:
            return c[0] ** q - a + a ** (q**m)
        return c[j - 1] ** q - a * c[j - 2]

    if order == "top-down":
        aux = row(1)
        for j in range(2, count + 1):
            aux = row(j) + aux * a ** (q ** (m - j + 1))
        residual = aux * a**q - a * c[-1]
    elif order == "bottom-up":
        residual = -(a * c[-1])
        carry = a**q
        for j in range(count, 1, -1):
            residual = residual + row(j) * carry
            carry = carry * a ** (q ** (m - j + 1))
        residual = residual + row(1) * carry
    else:
        raise ValueError(order)

    # exps[i] = 1 + q + ... + q^(i-1)
    exps = [0]
    for _ in range(m):
        exps.append(exps[-1] * q + 1)
    w = a ** exps[m]
    for i in range(count):
        w = w + c[i] * a ** exps[m - 1 - i]
    if residual != w**q - w:
        raise EliminationMismatch(
            "eliminated relation does not factor through the q-power difference of "
            "the expected inner form"
        )
    out = w.with_vars(tuple(sorted(set(w.vars) | {out_var})))
    return out - SparsePoly.gen(out.domain, out_var, out.vars)


def eliminate_T(q: int = 2, order: str = "top-down") -> SparsePoly:
    """One-relation form of the phi_T isogeny system: W_T - gamma."""
    return _eliminate(q, "g", 3, "gamma", order)


def eliminate_S(q: int = 2, order: str = "top-down") -> SparsePoly:
    """One-relation form of the phi_S isogeny system: W_S - beta."""
    return _eliminate(q, "h", 5, "beta", order)
