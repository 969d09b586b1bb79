#!/usr/bin/env python3
"""Regenerate the golden data files shipped under src/towerforge/data.

Everything the identity suite verifies is transcribed here once, as
readable polynomial expressions: the Drinfeld modular polynomials of
level T, T^2+T+1 and T^2+T for q = 2 together with their depth-one step
polynomials and j-parameterizations, the degree-5 classical data (the
dihedral quintic and the Rogers-Ramanujan radical), the rank-2
commutation constraint lists over the elliptic coordinate ring, and the
twisted cubic step polynomial with its level-2 linear factor.

Run from the repository root:

    python scripts/build_golden_data.py

The script rewrites data/golden/*.json, data/towers/*.json and the
sha256 manifest the loader checks at import time.
"""

from __future__ import annotations

import hashlib
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from towerforge.domains import FF, QQ, RatFun
from towerforge.gf import embed, make_field
from towerforge.poly import PolyRing, SparsePoly

DATA = Path(__file__).resolve().parents[1] / "src" / "towerforge" / "data"

GF2 = FF(make_field(2, 1))
F32 = make_field(2, 5)
F1024 = make_field(2, 10)
GF7 = FF(make_field(7, 1))


def jdump(path: Path, obj) -> None:
    path.write_text(json.dumps(obj, sort_keys=True, indent=1) + "\n")


# ---------------------------------------------------------------------------
# level T (q = 2)


def build_level_T():
    R = PolyRing(GF2, ("T", "X", "Y"))
    T, X, Y = R.gens()
    phi = (
        X**3
        + Y**3
        + T * (T + 1) ** 3 * (X**2 + Y**2)
        + T**2 * (T + 1) ** 6 * (X + Y)
        + T**3 * (T + 1) ** 9
        + X**2 * Y**2
        + (T + 1) ** 3 * (T**2 + T + 1) * X * Y
        + T * (X**2 * Y + X * Y**2)
    )
    Rz = PolyRing(GF2, ("T", "X", "Y", "Z"))
    T, X, Y, Z = Rz.gens()
    psi = (
        Z**2
        + (X + (Y**2 + T * Y + T * (T + 1) ** 3)) * Z
        + X**2
        + (Y**2 + T * Y + T * (T + 1) ** 3) * X
        + T * Y**2
        + (T**2 + T + 1) * (T + 1) ** 3 * Y
        + T**2 * (T + 1) ** 6
    )
    R = PolyRing(GF2, ("T", "X", "Y"))
    T, X, Y = R.gens()
    f = X**2 + X * Y**2 + X * Y * T + Y * T**3
    cofactor = X * Y + T**3

    Ru = PolyRing(GF2, ("T", "u"))
    T, u = Ru.gens()
    jp = {
        "j0_num": ((u + T) ** 3).to_json(),
        "j0_den": u.to_json(),
        "j1_num": ((u + T**2) ** 3).to_json(),
        "j1_den": (u**2).to_json(),
    }
    return phi, psi, f, [cofactor, f], jp


# ---------------------------------------------------------------------------
# level T^2+T+1 (q = 2)


def build_level_T2T1():
    R = PolyRing(GF2, ("T", "X", "Y"))
    T, X, Y = R.gens()
    P = T**2 + T + 1
    phi = (
        X**5
        + Y**5
        + X**4 * Y**4
        + P * (X**4 * Y**2 + X**2 * Y**4)
        + P * (X**4 * Y + X * Y**4)
        + T**3 * (T + 1) ** 3 * P * (X**4 + Y**4)
        + T**2 * (T + 1) ** 2 * P * X**3 * Y**3
        + (T**2 + T) * P * (T**3 + T + 1) * (T**3 + T**2 + 1) * (X**3 * Y**2 + X**2 * Y**3)
        + T**3 * (T + 1) ** 3 * P * (X**3 * Y + X * Y**3)
        + T**6 * (T + 1) ** 6 * P**2 * (X**3 + Y**3)
        + T**5 * (T + 1) ** 5 * P * (T**4 + T + 1) * X**2 * Y**2
        + T**6 * (T + 1) ** 6 * P * (T**4 + T + 1) * (X**2 * Y + X * Y**2)
        + T**9 * (T + 1) ** 9 * P**3 * (X**2 + Y**2)
        + T**11 * (T + 1) ** 11 * X * Y
    )
    f = (
        Y**4 * X**3
        + P
        * (
            Y**3 * X**2
            + Y**2 * X**3
            + P * Y**2 * X
            + Y * X**3
            + P * Y * X**2
            + P**2 * Y
        )
        + X**4
    )
    cofactor = X * Y + P

    # reduction modulo T: the optimal tower polynomial over GF(4)
    Rxy = PolyRing(GF2, ("X", "Y"))
    X2, Y2 = Rxy.gens()
    f_mod_T = (
        Y2**4 * X2**3
        + Y2**3 * X2**2
        + Y2**2 * X2**3
        + Y2**2 * X2
        + Y2 * X2**3
        + Y2 * X2**2
        + Y2
        + X2**4
    )

    Ru = PolyRing(GF2, ("T", "u"))
    T, u = Ru.gens()
    P = T**2 + T + 1
    jp = {
        "j0_num": ((u + 1) ** 3 * (u**2 + u + P)).to_json(),
        "j0_den": u.to_json(),
        "j1_num": ((u + P) ** 3 * (u**2 + u + P)).to_json(),
        "j1_den": (u**4).to_json(),
    }

    # the uniformizer of the reduced curve over GF(4), as num/den in (j0, j1)
    Rj = PolyRing(GF2, ("j0", "j1"))
    j0, j1 = Rj.gens()
    u0_num = (
        j0**4 * j1**3
        + j0**4 * j1**2
        + j0**4 * j1
        + j0**4
        + j0**3 * j1**7
        + j0**3 * j1**6
        + j0**3 * j1**4
        + j0**2 * j1**5
        + j0 * j1**5
        + j0 * j1**4
        + j1**6
        + j1**4
    )
    u0_den = j1**8
    return phi, f, [cofactor, f], f_mod_T, jp, (u0_num, u0_den)


# ---------------------------------------------------------------------------
# level T^2+T (q = 2)


def build_level_T2T():
    R = PolyRing(GF2, ("T", "X", "Y"))
    T, X, Y = R.gens()
    P = T**2 + T + 1
    S = T**2 + T
    phi = (
        X**9
        + Y**9
        + (X**8 * Y**4 + X**4 * Y**8)
        + P * (X**8 * Y**2 + X**2 * Y**8)
        + S * (X**8 * Y + X * Y**8)
        + (T**6 + T**5 + T**3 + T**2 + 1) * S * (X**8 + Y**8)
        + (X**7 * Y**4 + X**4 * Y**7)
        + S**3 * (X**7 * Y**3 + X**3 * Y**7)
        + (T**5 + T**4 + T**3 + T + 1) * (T**5 + T**3 + T**2 + T + 1) * S**3 * (X**7 + Y**7)
        + (X**6 * Y**5 + X**5 * Y**6)
        + (X**6 * Y**4 + X**4 * Y**6)
        + P**5 * (X**6 * Y**3 + X**3 * Y**6)
        + (T**7 + T**6 + T**5 + T**4 + T**2 + T + 1)
        * (T**7 + T**3 + T**2 + T + 1)
        * S
        * (X**6 * Y**2 + X**2 * Y**6)
        + (T**14 + T**13 + T**11 + T**10 + T**7 + T**5 + T**4 + T**2 + 1)
        * S**2
        * (X**6 * Y + X * Y**6)
        + (T**4 + T + 1)
        * P
        * S**5
        * (T**8 + T**6 + T**5 + T**4 + T**3 + T + 1)
        * (X**6 + Y**6)
        + X**5 * Y**5
        + P * S**2 * (X**5 * Y**4 + X**4 * Y**5)
        + S**2 * (X**5 * Y**3 + X**3 * Y**5)
        + (T**9 + T**8 + T**7 + T**5 + 1)
        * (T**9 + T**7 + T**6 + T**3 + T**2 + T + 1)
        * (X**5 * Y**2 + X**2 * Y**5)
        + (T**6 + T**5 + T**2 + T + 1) * (T**6 + T**5 + 1) * P**3 * S**2 * (X**5 * Y + X * Y**5)
        + (T**5 + T**3 + T**2 + T + 1) * (T**5 + T**4 + T**3 + T + 1) * P * S**5 * (X**5 + Y**5)
        + (T**18 + T**17 + T**16 + T**10 + T**9 + T**4 + T**2 + T + 1)
        * P**2
        * S
        * (X**4 * Y**2 + X**2 * Y**4)
        + P**2 * S**7 * (X**4 * Y + X * Y**4)
        + S**8 * (T**6 + T**5 + T**3 + T**2 + 1) * (X**4 + Y**4)
        + (T**10 + T**9 + T**8 + T**6 + T**5 + T + 1) * P**3 * X**3 * Y**3
        + (T**8 + T**7 + T**2 + T + 1)
        * (T**8 + T**7 + T**6 + T**5 + T**4 + T**3 + 1)
        * P
        * S**2
        * (X**3 * Y**2 + X**2 * Y**3)
        + P * S**4 * (T**10 + T**9 + T**8 + T**3 + T**2 + T + 1) * (X**3 * Y + X * Y**3)
        + (T**4 + T + 1) * (T**3 + T + 1) * (T**3 + T**2 + 1) * P**3 * S**3 * X**2 * Y**2
        + S**10 * (X**2 * Y + X * Y**2)
        + S**10 * (X**2 + Y**2)
        + (T**4 + T + 1) * S**7 * (X**3 + Y**3)
        + (T**3 + T + 1) * (T**3 + T**2 + 1) * S**6 * X * Y
        + P * S**8 * (X + Y)
        + S**9
        # Four coefficient groups are pinned by the parameterization identity
        # (scripts/forensic_t2t.py reconstructs the full polynomial from the
        # j-parameterization): without them Phi(j0(u), j1(u)) does not vanish.
        + (T**8 + T**4 + T**2 + T + 1) * (X**7 * Y + X * Y**7)
        + (T**10 + T**9 + T**8 + T**4 + T**3 + T + 1) * (X**7 * Y**2 + X**2 * Y**7)
        + (T**10 + T**9 + T**4 + T**3 + T**2 + T) * (X**4 * Y**3 + X**3 * Y**4)
        + (T**6 + T**5 + T**3 + T**2 + 1) * X**4 * Y**4
    )
    f = (
        Y**4 * X**3
        + Y**4 * X**2
        + S * Y**4 * X
        + S * Y**3 * X**2
        + S * Y**3 * X
        + (T**4 + T**2) * Y**3
        + P * Y**2 * X**3
        + (T**4 + T**2) * Y**2 * X
        + (T**4 + T**2) * Y**2
        + S * Y * X**3
        + (T**4 + T) * Y * X**2
        + (T**6 + T**5 + T**4 + T**3) * Y
        + X**4
    )
    factors = [
        X * Y + S,
        Y**2 * X**2
        + T * Y**2 * X
        + S * Y * X
        + (T**3 + T**2) * Y
        + T**2 * X**2
        + T**4
        + T**2,
        Y**2 * X**2
        + (T + 1) * Y**2 * X
        + S * Y * X
        + (T**3 + T) * Y
        + (T**2 + 1) * X**2
        + T**4
        + T**2,
        f,
    ]

    Rxy = PolyRing(GF2, ("X", "Y"))
    X2, Y2 = Rxy.gens()
    f_mod_P = (
        Y2**4 * X2**3
        + Y2**4 * X2**2
        + Y2**4 * X2
        + Y2**3 * X2**2
        + Y2**3 * X2
        + Y2**3
        + Y2**2 * X2
        + Y2**2
        + Y2 * X2**3
        + Y2
        + X2**4
    )

    Ru = PolyRing(GF2, ("T", "u"))
    T, u = Ru.gens()
    S = T**2 + T
    jp = {
        "j0_num": ((u**3 + S * u + S) ** 3).to_json(),
        "j0_den": (u * (u + T) ** 2 * (u + T + 1) ** 2).to_json(),
        "j1_num": ((u**3 + S * u**2 + S**2) ** 3).to_json(),
        "j1_den": (u**4 * (u + T) ** 2 * (u + T + 1) ** 2).to_json(),
    }
    return phi, f, factors, f_mod_P, jp


# ---------------------------------------------------------------------------
# degree-5 classical data


def build_quintic():
    Rt = PolyRing(QQ, ("t",))
    (t,) = Rt.gens()
    p5 = t**5 + 5 * t**3 + 5 * t - 11

    Rv = PolyRing(QQ, ("v",))
    (v,) = Rv.gens()
    r_num = v * (v**4 - 3 * v**3 + 4 * v**2 - 2 * v + 1)
    r_den = v**4 + 2 * v**3 + 4 * v**2 + 3 * v + 1

    Rx = PolyRing(QQ, ("x",))
    (x,) = Rx.gens()
    e13_num = (x - 1) ** 5
    e13_den = x**4 + x**3 + 6 * x**2 + 6 * x + 11

    R7 = PolyRing(GF7, ("x", "y"))
    x7, y7 = R7.gens()
    loetter_orig = (2 * x7**4 + 5 * x7**3 + 2 * x7**2 + x7 + 1) * y7**5 - (
        x7**5 + 5 * x7**4 + x7**3 + 2 * x7**2 + 4 * x7
    )
    rr5_step = (x7**4 + 2 * x7**3 + 4 * x7**2 + 3 * x7 + 1) * y7**5 - x7 * (
        x7**4 - 3 * x7**3 + 4 * x7**2 - 2 * x7 + 1
    )
    return p5, (r_num, r_den), (e13_num, e13_den), loetter_orig, rr5_step


# ---------------------------------------------------------------------------
# commutation constraint lists (q = 2) over GF(2)[g1..g3, h1..h5]


def build_commutation():
    R = PolyRing(GF2, ("g1", "g2", "g3", "h1", "h2", "h3", "h4", "h5"))
    g1, g2, g3, h1, h2, h3, h4, h5 = R.gens()
    first = [
        h1**64 + h1 + g1**256 + g1**16 + g1,
        h1**33 + h2**64 + h2 + g1**144 + g1**129 + g1**9 + g2**256 + g2**16 + g2,
        h1**16 * h2 + h1 * h2**32 + h3**64 + h3 + g1**73 + g1**64 * g2**16 + g1**64 * g2
        + g1**16 * g2**128 + g1**4 * g2 + g1 * g2**128 + g1 * g2**8 + g3**256 + g3**16 + g3,
        h1**8 * h3 + h1 * h3**32 + h2**17 + h4**64 + h4 + g1**36 * g2 + g1**33 * g2**8
        + g1**32 * g3**16 + g1**32 * g3 + g1**16 * g3**128 + g1**9 * g2**64 + g1**2 * g3
        + g1 * g3**128 + g1 * g3**8 + g2**80 + g2**65 + g2**5,
        h1**4 * h4 + h1 * h4**32 + h2**8 * h3 + h2 * h3**16 + h5**64 + h5 + g1**18 * g3
        + g1**17 * g3**8 + g1**16 * g2**5 + g1**9 * g3**64 + g1**4 * g2**33 + g1 * g2**40
        + g2**32 * g3**16 + g2**32 * g3 + g2**16 * g3**64 + g2**2 * g3 + g2 * g3**64
        + g2 * g3**4,
        h1**2 * h5 + h1 * h5**32 + h2**4 * h4 + h2 * h4**16 + h3**9 + g1**8 * g2**2 * g3
        + g1**8 * g2 * g3**4 + g1**4 * g2 * g3**32 + g1**2 * g2**16 * g3
        + g1 * g2**16 * g3**8 + g1 * g2**8 * g3**32 + g2**21 + g3**48 + g3**33 + g3**3 + 1,
        h1 + h2**2 * h5 + h2 * h5**16 + h3**4 * h4 + h3 * h4**8 + g1**4 * g3**3
        + g1**2 * g3**17 + g1 * g3**24 + g2**10 * g3 + g2**9 * g3**4 + g2**5 * g3**16,
        h2 + h3**2 * h5 + h3 * h5**8 + h4**5 + g2**4 * g3**3 + g2**2 * g3**9
        + g2 * g3**12 + 1,
        h3 + h4**2 * h5 + h4 * h5**4 + g1 + g3**7,
        h4 + h5**3 + g2,
        h5 + g3,
    ]
    second = [
        h1**16 + h1 + g1**64 + g1,
        h1**8 * g1 + h1 * g1**32 + h2**16 + h2 + g2**64 + g2,
        h1**4 * g2 + h1 * g2**32 + h2**8 * g1 + h2 * g1**16 + h3**16 + h3 + g3**64 + g3,
        h1**2 * g3 + h1 * g3**32 + h2**4 * g2 + h2 * g2**16 + h3**8 * g1 + h3 * g1**8
        + h4**16 + h4,
        h2**2 * g3 + h2 * g3**16 + h3**4 * g2 + h3 * g2**8 + h4**8 * g1 + h4 * g1**4
        + h5**16 + h5,
        h3**2 * g3 + h3 * g3**8 + h4**4 * g2 + h4 * g2**4 + h5**8 * g1 + h5 * g1**2,
        h4**2 * g3 + h4 * g3**4 + h5**4 * g2 + h5 * g2**2,
        h5**2 * g3 + h5 * g3**2,
    ]
    return first, second


# ---------------------------------------------------------------------------
# the twisted cubic step polynomial over GF(2^5) and the genus-0 component


def build_elliptic_ring_data():
    D = FF(F32)
    a = F32.generator
    R = PolyRing(D, ("X", "Y"))
    X, Y = R.gens()

    def ap(e):
        return R.const(a**e)

    phi = (
        (X**3 + ap(24) * X**2 + ap(4) * X + ap(9)) * Y**3
        + (ap(17) * X**3 + ap(29) * X**2 + X + ap(30)) * Y**2
        + (ap(30) * X**3 + ap(12) * X**2 + ap(30) * X + ap(17)) * Y
        + (ap(4) * X**3 + ap(14) * X**2 + ap(19))
    )

    # degree-13 relation between the isomorphism invariants g2 and g = g3^3
    Rg = PolyRing(D, ("g", "g2"))
    g, g2 = Rg.gens()
    rows = {
        13: [(0, 0)],
        12: [(5, 1), (14, 0)],
        11: [(4, 2), (19, 1), (7, 0)],
        10: [(9, 3), (18, 2), (9, 1), (21, 0)],
        9: [(10, 4), (21, 3), (16, 2), (18, 1), (8, 0)],
        8: [(15, 5), (29, 4), (10, 3), (27, 2), (25, 1), (8, 0)],
        7: [(0, 6), (28, 5), (6, 4), (11, 3), (6, 2), (28, 1), (9, 0)],
        6: [(5, 7), (23, 6), (2, 5), (15, 4), (12, 3), (4, 2), (6, 1), (25, 0)],
        5: [(4, 8), (30, 7), (18, 6), (3, 5), (15, 4), (12, 3), (23, 2), (29, 1), (10, 0)],
        4: [(9, 9), (25, 8), (8, 7), (1, 6), (7, 5), (25, 4), (23, 3), (15, 2), (1, 1), (26, 0)],
        3: [(4, 10), (27, 9), (15, 8), (11, 7), (5, 6), (26, 5), (18, 4), (9, 3), (11, 2), (30, 1)],
        2: [(9, 11), (30, 10), (10, 9), (15, 8), (12, 7), (6, 6), (2, 5), (26, 4), (15, 3), (6, 2), (13, 1), (30, 0)],
        1: [(10, 12), (16, 11), (4, 10), (12, 9), (18, 8), (28, 7), (2, 6), (9, 5), (3, 4), (8, 3), (10, 2), (17, 1)],
        0: [(15, 13), (5, 12), (24, 11), (4, 10), (11, 9), (8, 8), (12, 7), (27, 6), (0, 5), (23, 4), (19, 3), (8, 2), (24, 1), (0, 0)],
    }
    rel = Rg.zero
    for g2pow, entries in rows.items():
        block = Rg.zero
        for aexp, gpow in entries:
            block = block + Rg.const(a**aexp) * g**gpow
        rel = rel + block * g2**g2pow

    level2 = {"lead_exp": 25, "mul_exp": 28, "const_exp": 27}
    return phi, rel, level2


def main():
    golden = DATA / "golden"
    towers = DATA / "towers"
    golden.mkdir(parents=True, exist_ok=True)
    towers.mkdir(parents=True, exist_ok=True)

    phi_T, psi_T, f_T, factors_T, jp_T = build_level_T()
    (phi_P1, f_P1, factors_P1, f_P1_mod_T, jp_P1, u0_pair) = build_level_T2T1()
    phi_S, f_S, factors_S, f_S_mod_P, jp_S = build_level_T2T()
    p5, (r_num, r_den), (e13_num, e13_den), loetter_orig, rr5_step = build_quintic()
    comm_first, comm_second = build_commutation()
    phi_ell, g2g_rel, level2 = build_elliptic_ring_data()

    # quick transcription sanity: symmetry and stated degrees
    for name, phi, dx in (("T", phi_T, 3), ("T2T1", phi_P1, 5), ("T2T", phi_S, 9)):
        sub = phi.subs({"X": SparsePoly.gen(GF2, "Y", phi.vars), "Y": SparsePoly.gen(GF2, "X", phi.vars)})
        assert sub == phi, f"phi_{name} failed the symmetry spot check"
        assert phi.degree("Y") == dx, f"phi_{name} has Y-degree {phi.degree('Y')}, expected {dx}"
    assert f_T.degree("Y") == 2 and f_P1.degree("Y") == 4 and f_S.degree("Y") == 4
    assert phi_ell.degree("X") == 3 and phi_ell.degree("Y") == 3
    assert g2g_rel.degree("g2") == 13 and g2g_rel.degree("g") == 13

    files = {
        "phi_T.json": phi_T.to_json(),
        "psi_T.json": psi_T.to_json(),
        "phi_T2T1.json": phi_P1.to_json(),
        "phi_T2T.json": phi_S.to_json(),
        "f_T.json": f_T.to_json(),
        "f_T2T1.json": f_P1.to_json(),
        "f_T2T.json": f_S.to_json(),
        "f_T2T1_mod_T.json": f_P1_mod_T.to_json(),
        "f_T2T_mod_T2T1.json": f_S_mod_P.to_json(),
        "jparam_T.json": jp_T,
        "jparam_T2T1.json": jp_P1,
        "jparam_T2T.json": jp_S,
        "factors_T.json": [p.to_json() for p in factors_T],
        "factors_T2T1.json": [p.to_json() for p in factors_P1],
        "factors_T2T.json": [p.to_json() for p in factors_S],
        "u0_reduced_T2T1.json": {"num": u0_pair[0].to_json(), "den": u0_pair[1].to_json()},
        "quintic_p5.json": p5.to_json(),
        "rr_radical.json": {"num": r_num.to_json(), "den": r_den.to_json()},
        "elkies13_rhs.json": {"num": e13_num.to_json(), "den": e13_den.to_json()},
        "loetter_original.json": loetter_orig.to_json(),
        "rr5_step.json": rr5_step.to_json(),
        "commutation_first.json": [p.to_json() for p in comm_first],
        "commutation_second.json": [p.to_json() for p in comm_second],
        "phi_elliptic.json": phi_ell.to_json(),
        "level2_factor.json": level2,
        "g2g_relation.json": g2g_rel.to_json(),
    }
    for name, obj in sorted(files.items()):
        jdump(golden / name, obj)

    manifest_lines = []
    for name in sorted(files):
        digest = hashlib.sha256((golden / name).read_bytes()).hexdigest()
        manifest_lines.append(f"{digest}  {name}")
    (golden / "MANIFEST.sha256").write_text("\n".join(manifest_lines) + "\n")

    write_tower_files(towers, phi_T, psi_T, f_P1_mod_T, f_S_mod_P, rr5_step, phi_ell, level2)
    print(f"wrote {len(files)} golden files and the tower definitions under {DATA}")


def write_tower_files(towers: Path, phi_T, psi_T, f_P1_mod_T, f_S_mod_P, rr5_step, phi_ell, level2):
    F4 = make_field(2, 2)
    F16 = make_field(2, 4)
    F49 = make_field(7, 2)
    F2401 = make_field(7, 4)

    def lift(poly: SparsePoly, field) -> SparsePoly:
        """Re-coefficient a 0/1 polynomial over the prime field into `field`."""
        dom = FF(field)
        vars = poly.vars
        terms = {}
        for e, c in poly.terms.items():
            terms[e] = field.from_int(c.code if hasattr(c, "code") else int(c))
        return SparsePoly(dom, vars, terms)

    def lift7(poly: SparsePoly, field) -> SparsePoly:
        dom = FF(field)
        return SparsePoly(dom, poly.vars, {e: field.from_int(c.code) for e, c in poly.terms.items()})

    GF2r = PolyRing(GF2, ("X", "Y"))
    X, Y = GF2r.gens()
    gs_step = (X + 1) * Y**2 + (X + 1) * Y + X**2  # y^2 + y = x^2/(x+1), cleared
    elkies_step = (X + 1) * Y * (Y + 1) + X**2  # y(y+1) = x^2/(x+1), cleared

    # depth-2 form of the level-T tower reduced at T+1 (constant field GF(4))
    phi_bar = phi_T.subs({"T": SparsePoly.const(GF2, 1, phi_T.vars)})
    psi_bar = psi_T.subs({"T": SparsePoly.const(GF2, 1, psi_T.vars)})

    defs = [
        {
            "schema": "towerforge/tower-v1",
            "id": "gs-q2",
            "field": F4.to_json(),
            "kind": "depth1",
            "vars": ["X", "Y"],
            "step": lift(gs_step, F4).to_json(),
            "notes": "Artin-Schreier tower y^2 + y = x^2/(x+1) over GF(4), cleared of denominators.",
        },
        {
            "schema": "towerforge/tower-v1",
            "id": "elkies-q2",
            "field": F4.to_json(),
            "kind": "depth1",
            "vars": ["X", "Y"],
            "step": lift(elkies_step, F4).to_json(),
            "notes": "Depth-one tower y(y+1) = x^2/(x+1) over GF(4); for q=2 this coincides with gs-q2.",
        },
        {
            "schema": "towerforge/tower-v1",
            "id": "x0t-mod-t1",
            "field": F4.to_json(),
            "kind": "depth2",
            "vars": ["X", "Y", "Z"],
            "first_step": lift(phi_bar, F4).to_json(),
            "later_step": lift(psi_bar, F4).to_json(),
            "notes": "Depth-two modular recursion of level T reduced at T+1, over GF(4).",
        },
        {
            "schema": "towerforge/tower-v1",
            "id": "t2t1-mod-t",
            "field": F4.to_json(),
            "kind": "depth1",
            "vars": ["X", "Y"],
            "step": lift(f_P1_mod_T, F4).to_json(),
            "notes": "Optimal tower over GF(4): level T^2+T+1 step polynomial reduced modulo T.",
        },
        {
            "schema": "towerforge/tower-v1",
            "id": "t2t-mod-t2t1",
            "field": F16.to_json(),
            "kind": "depth1",
            "vars": ["X", "Y"],
            "step": lift(f_S_mod_P, F16).to_json(),
            "notes": "Optimal tower over GF(16): level T^2+T step polynomial reduced modulo T^2+T+1.",
        },
        {
            "schema": "towerforge/tower-v1",
            "id": "rr5-f49",
            "field": F49.to_json(),
            "kind": "depth1",
            "vars": ["X", "Y"],
            "step": lift7(rr5_step, F49).to_json(),
            "notes": "Degree-5 Kummer tower y^5 = x(x^4-3x^3+4x^2-2x+1)/(x^4+2x^3+4x^2+3x+1) over GF(49).",
        },
        {
            "schema": "towerforge/tower-v1",
            "id": "rr5-f2401",
            "field": F2401.to_json(),
            "kind": "depth1",
            "vars": ["X", "Y"],
            "step": lift7(rr5_step, F2401).to_json(),
            "notes": "Degree-5 Kummer tower over GF(7^4), where its splitting places are rational.",
        },
    ]

    # twisted depth-2 tower over GF(2^10): embed the GF(2^5) coefficients
    emb = {}
    a32 = F32.generator

    def emb_elt(e):
        return embed(a32**e, F1024)

    phi_cod = FF(F1024)
    phi_terms = {}
    for e, c in phi_ell.terms.items():
        phi_terms[e] = embed(c, F1024)
    phi_embedded = SparsePoly(phi_cod, phi_ell.vars, phi_terms)
    defs.append(
        {
            "schema": "towerforge/tower-v1",
            "id": "elliptic",
            "field": F1024.to_json(),
            "kind": "twisted-depth2",
            "vars": ["X", "Y"],
            "phi": phi_embedded.to_json(),
            "twist_power": 8,
            "backtrack": {
                "lead": emb_elt(level2["lead_exp"]).coeff_list(),
                "mul": emb_elt(level2["mul_exp"]).coeff_list(),
                "const": emb_elt(level2["const_exp"]).coeff_list(),
            },
            "genus_recipe": {
                "level1": [
                    {"e": 3, "d_source": "tame", "count": 1},
                    {"e": 2, "d_source": "supplied", "d": 2, "count": 5},
                ],
                "ramifiable_places": 10,
            },
            "notes": "Twisted cubic recursion over GF(2^10); step n+1 raises the cubic's coefficients to the 8^n-th power and divides out a backtrack line.",
        }
    )

    for d in defs:
        jdump(towers / f"{d['id']}.json", d)


if __name__ == "__main__":
    main()
