"""Tower evaluation over finite constant fields.

Chains are tuples of field values satisfying every step relation; fibers
are the root sets of specialized step polynomials.  Rational-place
counting is presented as chain counting with split/ramified
classification (no desingularization), so split counts are lower bounds
and Riemann-Hurwitz totals with capped wild data are upper bounds.

Step conventions per tower kind:

* depth1          -- level n adjoins Y with  f(u_{n-1}, Y) = 0
* depth2          -- level 1 uses Phi(u_0, Y); level n >= 2 uses
                     Psi(u_{n-2}, u_{n-1}, Y)
* twisted-depth2  -- level n uses the cubic with coefficients raised to
                     the 8^(n-1)-th power; for n >= 2 the backtrack line
                     (one root, a Moebius function of u_{n-2}) is divided
                     out, and the division must be exact.

The base place at infinity enters through coordinate inversion of the
context variable; fibers there may contain the INF marker.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .catalog import TowerDef
from .domains import FF
from .gf import FieldElement, SizeExceeded
from .poly import SparsePoly, ZeroPolynomial, from_dense, roots_in_field


class EngineError(Exception):
    pass


class BacktrackDivisionFails(EngineError):
    """The conjectured backtrack line does not divide a specialized step."""


class NoGenusRecipe(EngineError):
    pass


class InconsistentData(EngineError):
    pass


class _Infinity:
    """Marker for the place at infinity of a coordinate line."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"


INF = _Infinity()


@dataclass(frozen=True)
class FiberReport:
    level: int
    context: tuple
    roots: tuple  # ((value-or-INF, multiplicity), ...)
    step_degree: int
    degree_drop: int
    anomaly: str | None = None

    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.roots)

    def is_complete_split(self) -> bool:
        return (
            self.anomaly is None
            and self.degree_drop == 0
            and len(self.roots) == self.step_degree
            and all(m == 1 for _, m in self.roots)
        )

    def is_full(self) -> bool:
        """Multiplicities conserve the whole step degree (no drop).

        Distinct places can share a coordinate value at moduli-special
        contexts (the value tree collapses while the places still split),
        so fullness rather than value-distinctness is the faithful test
        for "all places above are rational" away from the ramified locus.
        """
        return self.anomaly is None and self.degree_drop == 0

    def is_totally_ramified(self) -> bool:
        return (
            self.anomaly is None
            and self.degree_drop == 0
            and len(self.roots) == 1
            and self.roots[0][1] == self.step_degree
        )

    def has_anomaly(self) -> bool:
        return self.anomaly is not None


@dataclass(frozen=True)
class Chain:
    tower: str
    values: tuple
    step_mults: tuple

    def depth(self) -> int:
        return len(self.values) - 1


@dataclass(frozen=True)
class RamificationDatum:
    """One place's contribution to a different degree.

    ``e=None`` marks a base place whose fiber decomposition is unknown;
    with d_source "two-bounded" its contribution is capped by 2m (the
    whole-fiber estimate sum(2e - 2) <= 2 sum(e) = 2m).
    """

    place: str
    e: int | None
    d_source: str  # "tame" | "supplied" | "two-bounded"
    d: int | None = None
    deg: int = 1
    count: int = 1


@dataclass(frozen=True)
class GenusBound:
    degree: int
    base_genus: int
    diff_degree: int
    genus: int
    is_upper: bool


@dataclass(frozen=True)
class LimitEntry:
    level: int
    degree: int
    places_lower: int
    genus_upper: int
    ratio: Fraction
    genus_is_upper: bool


# ---------------------------------------------------------------------------
# specialization helpers


def invert_variable(p: SparsePoly, var: str) -> SparsePoly:
    """var^deg * p(1/var): the coordinate-inversion chart, minimally cleared."""
    if p.is_zero():
        raise ZeroPolynomial("cannot invert a variable of the zero polynomial")
    d = p.degree(var)
    if var not in p.vars:
        return p
    i = p.vars.index(var)
    terms = {e[:i] + (d - e[i],) + e[i + 1 :]: c for e, c in p.terms.items()}
    return SparsePoly(p.domain, p.vars, terms)


def _specialize(p: SparsePoly, bindings: dict) -> SparsePoly:
    """Bind variables to field values (or invert at INF), leaving one free."""
    out = p
    for var, val in bindings.items():
        if val is INF:
            out = invert_variable(out, var).subs({var: SparsePoly.zero(out.domain, out.vars)})
        else:
            out = out.subs({var: SparsePoly.const(out.domain, val, out.vars)})
    return out


def _univariate_roots(p: SparsePoly, var: str):
    if p.degree(var) < 1:
        return []
    return roots_in_field(p)


def _fiber_from_poly(
    spec: SparsePoly,
    fiber_var: str,
    step_degree: int,
    level: int,
    context: tuple,
    at_infinity: bool,
) -> FiberReport:
    """Classify the root set of one specialized step polynomial.

    For affine contexts, missing degree (vanishing leading coefficients,
    irrational roots) is book-kept as degree_drop.  For the infinity
    chart the missing top degree is the fiber value INF.
    """
    if spec.is_zero():
        return FiberReport(level, context, (), step_degree, step_degree, "leading-vanishes")
    d = spec.degree(fiber_var)
    roots = []
    total = 0
    if d >= 1:
        for r, m in _univariate_roots(spec, fiber_var):
            roots.append((r, m))
            total += m
    if at_infinity and d < step_degree:
        roots.append((INF, step_degree - d))
        total += step_degree - d
    return FiberReport(level, context, tuple(roots), step_degree, step_degree - total, None)


# ---------------------------------------------------------------------------
# fibers


def fiber(tower: TowerDef, level: int, context: tuple) -> FiberReport:
    """Roots (with multiplicity) of the level-th step over a context.

    ``context`` carries the previous value for depth-1 towers and the
    previous two values (u_{level-2}, u_{level-1}) for depth-2 kinds at
    level >= 2.
    """
    if level < 1:
        raise EngineError("levels are 1-based")
    kind = tower.kind
    if kind == "depth1":
        (prev,) = context[-1:]
        spec = _specialize(tower.step.f, {"X": prev})
        return _fiber_from_poly(
            spec, "Y", tower.step_degree(level), level, (prev,), prev is INF
        )
    if kind == "depth2":
        if level == 1:
            (prev,) = context[-1:]
            spec = _specialize(tower.step.first, {"X": prev})
            return _fiber_from_poly(spec, "Y", tower.step_degree(1), 1, (prev,), prev is INF)
        back, prev = context[-2], context[-1]
        spec = _specialize(tower.step.later, {"X": back, "Y": prev})
        return _fiber_from_poly(
            spec, "Z", tower.step_degree(level), level, (back, prev), prev is INF
        )
    if kind == "twisted-depth2":
        return _twisted_fiber(tower, level, context)
    raise EngineError(f"unknown tower kind {kind}")


def _twist_exponent(tower: TowerDef, level: int) -> int:
    # coefficients lie in the subfield image where x -> x^8 has period 5
    return tower.step.twist_power ** ((level - 1) % 5)


def _twisted_phi(tower: TowerDef, level: int) -> SparsePoly:
    e = _twist_exponent(tower, level)
    if e == 1:
        return tower.step.phi
    cache = getattr(tower.step, "_twist_cache", None)
    if cache is None:
        cache = {}
        object.__setattr__(tower.step, "_twist_cache", cache)
    if e not in cache:
        cache[e] = tower.step.phi.map_coeffs(lambda c: c**e)
    return cache[e]


def backtrack_root(tower: TowerDef, level: int, back_value):
    """Excluded root of the level-th step: a Moebius function of u_{level-2}.

    Twisting raises the three line constants to the same power as the
    step coefficients.  Returns None when the line degenerates to a unit
    (no root to exclude).
    """
    if level < 2:
        raise EngineError("backtrack roots exist from level 2 on")
    e = tower.step.twist_power ** ((level - 2) % 5)
    lead, mul, const = (c**e for c in tower.step.backtrack)
    if back_value is INF:
        return mul
    den = back_value + lead
    num = mul * back_value + const
    if den.is_zero():
        if num.is_zero():
            raise BacktrackDivisionFails("backtrack line vanished identically at a context")
        return None  # unit line: nothing to divide out
    return num / den


def _twisted_fiber(tower: TowerDef, level: int, context: tuple) -> FiberReport:
    phi = _twisted_phi(tower, level)
    if level == 1:
        (prev,) = context[-1:]
        spec = _specialize(phi, {"X": prev})
        return _fiber_from_poly(spec, "Y", tower.step_degree(1), 1, (prev,), prev is INF)
    back, prev = context[-2], context[-1]
    spec = _specialize(phi, {"X": prev})
    ctx = (back, prev)
    at_inf = prev is INF
    if spec.is_zero():
        return FiberReport(level, ctx, (), tower.step_degree(level), tower.step_degree(level), "leading-vanishes")
    r = backtrack_root(tower, level, back)
    if r is None:
        return _fiber_from_poly(spec, "Y", tower.step_degree(level), level, ctx, at_inf)
    # divide the specialized cubic by (Y - r); the line is a global factor,
    # so the division must be exact wherever the line is honest.
    dom = spec.domain
    coeffs = list(_dense_in(spec, "Y"))
    quo, rem = _synthetic_div(coeffs, r, dom)
    if not dom.is_zero(rem):
        if at_inf:
            # chart specializations are outside the certified-division
            # contract; report rather than force.
            rep = _fiber_from_poly(spec, "Y", tower.step_degree(level), level, ctx, True)
            return FiberReport(
                rep.level, rep.context, rep.roots, rep.step_degree, rep.degree_drop,
                "backtrack-not-a-chart-root",
            )
        raise BacktrackDivisionFails(
            f"backtrack root is not a root of the specialized step at context {ctx!r}"
        )
    quotient = from_dense(quo, dom, "Y")
    return _fiber_from_poly(quotient, "Y", tower.step_degree(level), level, ctx, at_inf)


def _dense_in(p: SparsePoly, var: str):
    d = p.degree(var)
    out = [p.domain.zero] * (d + 1)
    i = p.vars.index(var) if var in p.vars else None
    for e, c in p.terms.items():
        out[e[i] if i is not None else 0] = c
    return out


def _synthetic_div(coeffs, r, dom):
    """Divide sum c_i Y^i by (Y - r): returns (quotient coeffs, remainder)."""
    if len(coeffs) == 1:
        return [], coeffs[0]
    q = [dom.zero] * (len(coeffs) - 1)
    acc = coeffs[-1]
    q[-1] = acc
    for i in range(len(coeffs) - 2, 0, -1):
        acc = acc * r + coeffs[i]
        q[i - 1] = acc
    rem = acc * r + coeffs[0]
    return q, rem


def backtrack_factor(tower: TowerDef, level: int, seed: int = 0, samples: int = 16) -> SparsePoly:
    """The level-th backtrack line (u + lead)T + (mul*u + const), certified.

    The line's constants are the level-2 constants raised to the twist
    power for the level; certification draws random chain contexts and
    requires the line's root to divide the specialized step exactly at
    every one of them.  Failure raises BacktrackDivisionFails: the
    twist-conjugation rule for levels >= 3 is a conjecture checked per
    level, never assumed.
    """
    if tower.kind != "twisted-depth2":
        raise EngineError("backtrack factors only exist for twisted towers")
    if level < 2:
        raise EngineError("backtrack factors exist from level 2 on")
    e = tower.step.twist_power ** ((level - 2) % 5)
    lead, mul, const = (c**e for c in tower.step.backtrack)
    dom = FF(tower.field)
    u = SparsePoly.gen(dom, "u", ("T", "u"))
    t = SparsePoly.gen(dom, "T", ("T", "u"))
    line = (u + lead) * t + (mul * u + const)

    rng = random.Random((seed << 8) ^ level)
    tried = 0
    while tried < samples:
        ctx = _random_chain_context(tower, level, rng)
        if ctx is None:
            break
        fiber(tower, level, ctx)  # raises BacktrackDivisionFails on inexact division
        tried += 1
    return line


def _random_chain_context(tower: TowerDef, level: int, rng: random.Random):
    """A random (u_{level-2}, u_{level-1}) reachable by a chain, or None."""
    values = [v for v in tower.field.elements()]
    for _ in range(200):
        chain = [rng.choice(values)]
        ok = True
        for lv in range(1, level):
            rep = fiber(tower, lv, tuple(chain[-2:]))
            choices = [r for r, _ in rep.roots if r is not INF]
            if not choices:
                ok = False
                break
            chain.append(rng.choice(choices))
        if ok and len(chain) == level:
            return tuple(chain[-2:])
    return None


# ---------------------------------------------------------------------------
# chains and the independent oracle


def stable_splitting_locus(tower: TowerDef, max_depth: int = 8) -> list:
    """The splitting locus once it stops shrinking with depth."""
    prev = None
    for n in range(1, max_depth + 1):
        cur = splitting_locus(tower, n)
        if prev is not None and len(cur) == len(prev):
            return cur
        prev = cur
    return prev or []


def split_start_values(tower: TowerDef) -> list:
    """Completely splitting base values plus the totally ramified ones.

    These are the designated starts of the rational-place lower bound:
    the one place over a totally ramified value and the full fibers over
    the stably splitting values."""
    cls = level1_classification(tower)
    locus = [v for v in stable_splitting_locus(tower) if v is not INF]
    return locus + cls["totally_ramified"]


def _start_values(tower: TowerDef, starts):
    if starts is None or starts == "all":
        vals = list(tower.field.elements())
        vals.append(INF)
        return vals
    if starts == "affine":
        return list(tower.field.elements())
    if starts == "split":
        return split_start_values(tower)
    return list(starts)


def enumerate_chains(tower: TowerDef, n: int, starts=None) -> list[Chain]:
    """All value chains of depth n, breadth-first in enumeration order."""
    if n < 1:
        raise EngineError("chain depth must be >= 1")
    chains: list[tuple[tuple, tuple]] = []
    for v in _start_values(tower, starts):
        chains.append(((v,), ()))
    for level in range(1, n + 1):
        nxt = []
        for values, mults in chains:
            rep = fiber(tower, level, values[-2:] if len(values) >= 2 else values[-1:])
            if rep.anomaly:
                continue
            for r, m in rep.roots:
                nxt.append((values + (r,), mults + (m,)))
        chains = nxt
    return [Chain(tower.id, v, m) for v, m in chains]


def count_split_chains(tower: TowerDef, n: int, starts="split") -> int:
    """Rational-place lower-bound witnesses over the designated starts.

    Each chain counts with weight prod of its step multiplicities above
    level 1: a multiplicity-m root value stands for m places sharing that
    coordinate wherever the step is unramified, which is the situation on
    the split/totally-ramified subtrees (ramification lives over the
    partially-split base values only).  Level 1 contributes the place
    count directly: one witness per simple root, one for the totally
    ramified root.
    """
    count = 0
    for c in enumerate_chains(tower, n, starts):
        first_ok = c.step_mults[0] == 1 or c.step_mults[0] == tower.step_degree(1)
        if not first_ok:
            continue
        w = 1
        for m in c.step_mults[1:]:
            w *= m
        count += w
    return count


def oracle_count(tower: TowerDef, n: int, bound: int = 10**8) -> int:
    """Independent nested-loop count of depth-n chains over affine starts.

    Deliberately naive (plain Horner evaluation, no shared root-finding
    machinery) so it can serve as an oracle for enumerate_chains.
    """
    size = tower.field.order ** (n + 1)
    if size > bound:
        raise SizeExceeded(f"oracle would scan {size} tuples")
    values = list(tower.field.elements())

    def step_ok(level: int, prefix: tuple, y) -> bool:
        kind = tower.kind
        if kind == "depth1":
            return _eval2(tower.step.f, prefix[-1], y)
        if kind == "depth2":
            if level == 1:
                return _eval2(tower.step.first, prefix[-1], y)
            return _eval3(tower.step.later, prefix[-2], prefix[-1], y)
        if kind == "twisted-depth2":
            phi = _twisted_phi(tower, level)
            if not _eval2(phi, prefix[-1], y):
                return False
            if level >= 2:
                r = backtrack_root(tower, level, prefix[-2])
                if r is not None and y == r:
                    # excluded unless it survives division (double root)
                    spec = _specialize(phi, {"X": prefix[-1]})
                    dom = spec.domain
                    quo, rem = _synthetic_div(list(_dense_in(spec, "Y")), r, dom)
                    if not dom.is_zero(rem):
                        raise BacktrackDivisionFails(f"at oracle context {prefix!r}")
                    acc = dom.zero
                    for c in reversed(quo):
                        acc = acc * y + c
                    return acc.is_zero() if hasattr(acc, "is_zero") else not acc
            return True
        raise EngineError(kind)

    def extend(level: int, prefix: tuple) -> int:
        if level > n:
            return 1
        total = 0
        for y in values:
            if step_ok(level, prefix, y):
                total += extend(level + 1, prefix + (y,))
        return total

    return sum(extend(1, (v,)) for v in values)


def _eval2(p: SparsePoly, x, y) -> bool:
    return p.evaluate({"X": x, "Y": y}).is_zero()


def _eval3(p: SparsePoly, x, y, z) -> bool:
    return p.evaluate({"X": x, "Y": y, "Z": z}).is_zero()


# ---------------------------------------------------------------------------
# loci


def splitting_locus(tower: TowerDef, n: int, include_infinity: bool = True) -> list:
    """Base values whose whole depth-n chain tree splits completely.

    The level-1 fiber must consist of distinct simple rational roots; the
    deeper fibers must be full (multiplicity conserves the step degree),
    which away from the ramified locus says every place above is
    rational even when two of them share a coordinate value.
    """
    if n < 1:
        raise EngineError("depth must be >= 1")
    bases = list(tower.field.elements())
    if include_infinity:
        bases.append(INF)
    if tower.kind == "depth1":
        # fibers do not depend on the level: one report per value suffices
        universe = list(tower.field.elements()) + [INF]
        reps = {v: fiber(tower, 1, (v,)) for v in universe}
        # full_k = values whose depth-k subtree has only full fibers
        full_k = set(universe)
        for _ in range(n - 1):
            full_k = {
                v
                for v in universe
                if reps[v].is_full() and all(r in full_k for r, _ in reps[v].roots)
            }
        return [
            v
            for v in bases
            if reps[v].is_complete_split() and all(r in full_k for r, _ in reps[v].roots)
        ]

    memo: dict = {}

    def deep(back, prev, level, remaining) -> bool:
        if remaining == 0:
            return True
        key = (back, prev, (level - 1) % 5 if tower.kind == "twisted-depth2" else 0, remaining)
        if key not in memo:
            rep = fiber(tower, level, (back, prev))
            ok = rep.is_full() and all(
                deep(prev, r, level + 1, remaining - 1) for r, _ in rep.roots
            )
            memo[key] = ok
        return memo[key]

    out = []
    for v in bases:
        rep = fiber(tower, 1, (v,))
        if not rep.is_complete_split():
            continue
        if all(deep(v, r, 2, n - 1) for r, _ in rep.roots):
            out.append(v)
    return out


def _step_polynomial(tower: TowerDef, level: int, context: tuple) -> SparsePoly:
    """The specialized (unreduced) step polynomial at a context."""
    kind = tower.kind
    if kind == "depth1":
        return _specialize(tower.step.f, {"X": context[-1]})
    if kind == "depth2":
        if level == 1:
            return _specialize(tower.step.first, {"X": context[-1]})
        return _specialize(tower.step.later, {"X": context[-2], "Y": context[-1]})
    if kind == "twisted-depth2":
        return _specialize(_twisted_phi(tower, level), {"X": context[-1]})
    raise EngineError(kind)


def _has_multiple_root(tower: TowerDef, level: int, context: tuple, rep: FiberReport) -> bool:
    """Multiple root anywhere in the closure: rational multiplicities,
    non-squarefree specialization, or multiplicity >= 2 at infinity."""
    if any(m > 1 for _, m in rep.roots):
        return True
    spec = _step_polynomial(tower, level, context)
    if spec.is_zero():
        return True
    fiber_var = {"depth1": "Y", "twisted-depth2": "Y"}.get(tower.kind, "Z" if level > 1 else "Y")
    d = spec.degree(fiber_var)
    full_deg = tower.step_degree(1 if level == 1 else level) if tower.kind != "twisted-depth2" else tower.step.phi.degree("Y")
    if full_deg - d >= 2:
        return True  # a multiple root at infinity of the fiber coordinate
    if d < 2:
        return False
    deriv = spec.derivative(fiber_var)
    if deriv.is_zero():
        return True  # a perfect p-th power
    from .poly import gcd_univariate

    g = gcd_univariate(spec, deriv)
    return g.degree(fiber_var) > 0


def ramification_locus(tower: TowerDef, n: int, include_infinity: bool = True) -> list:
    """Contexts whose specialized step has a multiple root (anywhere in the
    closure, infinity included) or degenerates entirely.

    Degree drops from distinct irrational roots are inert, unramified
    behaviour and are deliberately not flagged.
    """
    bases = list(tower.field.elements())
    if include_infinity:
        bases.append(INF)
    found = []
    for v in bases:
        frontier = [(v,)]
        for level in range(1, n + 1):
            nxt = []
            for values in frontier:
                ctx = values[-2:] if len(values) >= 2 else values[-1:]
                rep = fiber(tower, level, ctx)
                if rep.anomaly or (
                    all(x is not INF for x in ctx) and _has_multiple_root(tower, level, ctx, rep)
                ) or (any(x is INF for x in ctx) and any(m > 1 for _, m in rep.roots)):
                    found.append((v, level, rep))
                for r, _ in rep.roots:
                    nxt.append(values + (r,))
            frontier = nxt
    return found


def level1_classification(tower: TowerDef) -> dict:
    """Affine base values sorted by their level-1 fiber shape."""
    out = {"split": [], "totally_ramified": [], "partial": [], "other": []}
    d = tower.step_degree(1)
    for v in tower.field.elements():
        rep = fiber(tower, 1, (v,))
        if rep.is_complete_split():
            out["split"].append(v)
        elif rep.is_totally_ramified() and d > 1:
            out["totally_ramified"].append(v)
        elif (
            rep.anomaly is None
            and rep.degree_drop == 0
            and sorted(m for _, m in rep.roots) == [1, 2]
        ):
            out["partial"].append(v)
        else:
            out["other"].append(v)
    out["infinity"] = fiber(tower, 1, (INF,))
    return out


def match_reference_exponents(tower: TowerDef, reference: dict[str, set[int]]) -> dict | None:
    """Search generator relabelings matching quoted discrete-log labels.

    ``reference`` maps class names ("totally_ramified", "split",
    "partial") to the quoted exponent sets.  Every primitive element is
    some power beta^s of ours, so scanning units s modulo the group order
    covers every possible labeling convention; returns the first match
    and whether it is a Frobenius conjugate of the shipped generator.
    """
    from math import gcd

    cls = level1_classification(tower)
    n = tower.field.order - 1
    dlogs = {k: [v.dlog() for v in cls[k]] for k in ("totally_ramified", "split", "partial")}
    conjugates = {pow(tower.field.p, j, n) for j in range(tower.field.k)}
    for s in range(1, n):
        if gcd(s, n) != 1:
            continue
        s_inv = pow(s, -1, n)
        ok = all(
            {(e * s_inv) % n for e in dlogs[k]} == reference[k]
            for k in ("totally_ramified", "split", "partial")
        )
        if ok:
            return {"unit": s, "frobenius_conjugate": s in conjugates}
    return None


# ---------------------------------------------------------------------------
# genus bookkeeping


def rh_genus(base_genus: int, degree: int, data: list[RamificationDatum]) -> GenusBound:
    """Riemann-Hurwitz: 2g - 2 = m (2 g0 - 2) + deg Diff.

    Exact when every datum carries an exact different exponent; an upper
    bound when any two-bounded cap enters.
    """
    by_place: dict[str, int] = {}
    total = 0
    is_upper = False
    for datum in data:
        if datum.e is not None:
            # count copies live over distinct base places; the per-place
            # load is e * deg for each copy
            by_place[datum.place] = by_place.get(datum.place, 0) + datum.e * datum.deg
            if by_place[datum.place] > degree:
                raise InconsistentData(
                    f"place {datum.place!r}: ramification indices exceed the degree"
                )
        if datum.d_source == "tame":
            if datum.e is None:
                raise InconsistentData("tame data needs a ramification index")
            total += (datum.e - 1) * datum.deg * datum.count
        elif datum.d_source == "supplied":
            if datum.d is None:
                raise InconsistentData("supplied data needs a different exponent")
            total += datum.d * datum.deg * datum.count
        elif datum.d_source == "two-bounded":
            is_upper = True
            if datum.e is None:
                total += 2 * degree * datum.deg * datum.count
            else:
                total += (2 * datum.e - 2) * datum.deg * datum.count
        else:
            raise InconsistentData(f"unknown d_source {datum.d_source!r}")
    rhs = degree * (2 * base_genus - 2) + total
    if rhs % 2 != 0:
        raise InconsistentData(f"2g - 2 = {rhs} is odd")
    genus = (rhs + 2) // 2
    return GenusBound(degree, base_genus, total, genus, is_upper)


def _recipe_data(recipe_level1: list[dict]) -> list[RamificationDatum]:
    out = []
    for i, d in enumerate(recipe_level1):
        out.append(
            RamificationDatum(
                place=f"level1-{i}",
                e=d.get("e"),
                d_source=d["d_source"],
                d=d.get("d"),
                count=d.get("count", 1),
            )
        )
    return out


def genus_bound(tower: TowerDef, n: int) -> GenusBound:
    """Catalog-recipe genus (exact at level 1, capped upper bound above)."""
    recipe = tower.genus_recipe
    if not recipe:
        raise NoGenusRecipe(f"tower {tower.id} has no genus recipe")
    level1 = rh_genus(0, tower.step_degree(1), _recipe_data(recipe["level1"]))
    if n == 1:
        return level1
    m = tower.step_degree(2) ** (n - 1)
    data = [
        RamificationDatum(place=f"ramifiable-{i}", e=None, d_source="two-bounded")
        for i in range(recipe["ramifiable_places"])
    ]
    return rh_genus(level1.genus, m, data)


def dv_bound(field) -> Fraction | float:
    """The asymptotic ceiling sqrt(q) - 1 for the constant field."""
    q = field.order
    r = isqrt(q)
    if r * r == q:
        return Fraction(r - 1)
    return q**0.5 - 1


def limit_report(tower: TowerDef, n_max: int) -> list[LimitEntry]:
    """Per-level split-count lower bounds against recipe genus upper bounds."""
    if not tower.genus_recipe:
        raise NoGenusRecipe(f"tower {tower.id} has no genus recipe")
    out = []
    for n in range(1, n_max + 1):
        places = count_split_chains(tower, n)
        gb = genus_bound(tower, n)
        degree = tower.step_degree(1) * tower.step_degree(2) ** (n - 1)
        out.append(
            LimitEntry(
                level=n,
                degree=degree,
                places_lower=places,
                genus_upper=gb.genus,
                ratio=Fraction(places, gb.genus),
                genus_is_upper=gb.is_upper,
            )
        )
    return out
