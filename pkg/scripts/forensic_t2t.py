#!/usr/bin/env python3
"""One-off forensic: reconstruct the level T^2+T modular polynomial from its
j-parameterization and diff it against the stored transcription.

Method: for ~40 specializations T = tau over GF(2^16), sample points
(j0(u), j1(u)) on the curve, solve for the 1-dimensional space of
bidegree-(9,9) relations by Gaussian elimination, normalize at X^9, then
interpolate each coefficient back to a polynomial in T and compare.
"""

from __future__ import annotations

import random
import sys
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from towerforge.catalog import golden_jparam, golden_poly
from towerforge.domains import FF
from towerforge.gf import make_field, _is_irreducible
from towerforge.poly import SparsePoly, dense_coeffs

# an irreducible degree-16 polynomial over GF(2) (primitivity not needed)
cand = None
for code in range(1, 1 << 16, 2):
    coeffs = [(code >> i) & 1 for i in range(16)] + [1]
    if _is_irreducible(coeffs, 2):
        cand = coeffs
        break
K = make_field(2, 16, cand)
N = K.order
exp = np.array(K.exp, dtype=np.int64)
log = np.array(K.log, dtype=np.int64)


def vmul(a, b):
    res = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
    a_, b_ = np.broadcast_arrays(a, b)
    nz = (a_ != 0) & (b_ != 0)
    res[nz] = exp[(log[a_[nz]] + log[b_[nz]]) % (N - 1)]
    return res


def vinv(a):
    return exp[(-log[a]) % (N - 1)]


jp = golden_jparam("T2T")


def eval_T(poly: SparsePoly, tau: int) -> list[int]:
    """Evaluate the T-variable at tau; return dense u-coefficients as codes."""
    d = poly.degree("u")
    out = [0] * (d + 1)
    ti = poly.vars.index("T")
    ui = poly.vars.index("u")
    telt = K.from_code(tau)
    for e, c in poly.terms.items():
        val = (telt ** e[ti]).code
        out[e[ui]] ^= val  # coefficients are 0/1 over GF(2)
    return out


def horner(cs: list[int], x: int) -> int:
    acc = 0
    for c in reversed(cs):
        acc = int(vmul(np.int64(acc), np.int64(x))) ^ c
    return acc


MONOS = [(a, b) for a in range(10) for b in range(10)]
IDX = {m: i for i, m in enumerate(MONOS)}

rng = random.Random(20250809)
taus = rng.sample(range(2, N - 1), 44)
coeff_samples: dict[tuple[int, int], list[tuple[int, int]]] = {m: [] for m in MONOS}

for tau in taus:
    j0n = eval_T(jp["j0_num"], tau)
    j0d = eval_T(jp["j0_den"], tau)
    j1n = eval_T(jp["j1_num"], tau)
    j1d = eval_T(jp["j1_den"], tau)
    rows = []
    seen = set()
    u = 1
    while len(rows) < 140 and u < N:
        u += 1
        d0, d1 = horner(j0d, u), horner(j1d, u)
        if d0 == 0 or d1 == 0:
            continue
        x = int(vmul(np.int64(horner(j0n, u)), np.int64(vinv(np.int64(d0)))))
        y = int(vmul(np.int64(horner(j1n, u)), np.int64(vinv(np.int64(d1)))))
        if (x, y) in seen:
            continue
        seen.add((x, y))
        xp = [1] * 10
        for i in range(1, 10):
            xp[i] = int(vmul(np.int64(xp[i - 1]), np.int64(x)))
        yp = [1] * 10
        for i in range(1, 10):
            yp[i] = int(vmul(np.int64(yp[i - 1]), np.int64(y)))
        rows.append([int(vmul(np.int64(xp[a]), np.int64(yp[b]))) for a, b in MONOS])
    M = np.array(rows, dtype=np.int64)

    # Gaussian elimination over K
    nrows, ncols = M.shape
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for rr in range(r, nrows):
            if M[rr, c] != 0:
                pr = rr
                break
        if pr is None:
            continue
        M[[r, pr]] = M[[pr, r]]
        M[r] = vmul(M[r], np.int64(int(vinv(M[r, c]))))
        for rr in range(nrows):
            if rr != r and M[rr, c] != 0:
                M[rr] = M[rr] ^ vmul(M[r], np.int64(int(M[rr, c])))
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    free = [c for c in range(ncols) if c not in pivots]
    if len(free) != 1:
        print(f"tau={tau}: kernel dimension {len(free)}, skipping")
        continue
    fc = free[0]
    vec = [0] * ncols
    vec[fc] = 1
    for i, c in enumerate(pivots):
        vec[c] = int(M[i, fc])
    # normalize so the X^9 coefficient is 1
    norm = vec[IDX[(9, 0)]]
    if norm == 0:
        print(f"tau={tau}: X^9 coefficient vanished, skipping")
        continue
    ninv = int(vinv(np.int64(norm)))
    vec = [int(vmul(np.int64(v), np.int64(ninv))) for v in vec]
    for m in MONOS:
        coeff_samples[m].append((tau, vec[IDX[m]]))

# Lagrange interpolation over K for each coefficient
def interpolate(pairs):
    pts = pairs
    n = len(pts)
    coeffs = [0] * n
    for i, (xi, yi) in enumerate(pts):
        # basis polynomial prod_{j != i} (x - xj) / (xi - xj)
        basis = [1]
        denom = 1
        for j, (xj, _) in enumerate(pts):
            if i == j:
                continue
            new = [0] * (len(basis) + 1)
            for k, bk in enumerate(basis):
                new[k + 1] ^= bk
                new[k] ^= int(vmul(np.int64(bk), np.int64(xj)))
            basis = new
            denom = int(vmul(np.int64(denom), np.int64(xi ^ xj)))
        scale = int(vmul(np.int64(yi), np.int64(vinv(np.int64(denom)))))
        for k, bk in enumerate(basis):
            coeffs[k] ^= int(vmul(np.int64(bk), np.int64(scale)))
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


stored = golden_poly("phi_T2T.json")
print("interpolating 100 coefficients ...")
GF2 = FF(make_field(2, 1))
recon_terms = {}
bad = False
for m in MONOS:
    pairs = coeff_samples[m]
    cs = interpolate(pairs)
    if any(c not in (0, 1) for c in cs):
        print(f"coefficient {m}: interpolation left GF(2)! degree {len(cs)-1}")
        bad = True
        continue
    for i, c in enumerate(cs):
        if c:
            recon_terms[(i, m[0], m[1])] = GF2.one  # (T, X, Y) sorted order
recon = SparsePoly(GF2, ("T", "X", "Y"), recon_terms)
print("reconstructed:", recon.term_count(), "terms; stored:", stored.term_count())
diff = recon - stored
print("difference term count:", diff.term_count())
if not diff.is_zero():
    # summarize by (X, Y) exponent pair
    groups = {}
    for e, _ in diff.terms.items():
        t, x, y = e
        groups.setdefault((x, y), []).append(t)
    for (x, y), ts in sorted(groups.items()):
        ts.sort()
        print(f"  X^{x} Y^{y}: T-exponents {ts}")
