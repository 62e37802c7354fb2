"""Independent reference implementations written as plain loops.

They share no code with the package beyond the published constant
tables (amino-acid groups, physicochemical values, wavelet filters).
"""

import math
import statistics
from collections import Counter

import numpy as np

from mvrvfl.features import AMINO_ACIDS, AMINO_GROUPS, PHYSCHEM, filter_pair
from mvrvfl.models.mvrvfl import enhanced_views


def mcd_oracle(residues):
    L = len(residues)
    cuts = [(s * L) // 5 for s in range(6)]
    out = []
    for i in range(1, 6):
        for j in range(i, 6):
            if (i, j) == (1, 5):
                continue
            region = [AMINO_GROUPS[a] for a in residues[cuts[i - 1]:cuts[j]]]
            n = len(region)
            out += [region.count(g) / n for g in range(1, 8)]
            for r in range(1, 8):
                for s in range(r + 1, 8):
                    hits = sum(1 for t in range(n - 1) if {region[t], region[t + 1]} == {r, s})
                    out.append(hits / (n - 1))
            for g in range(1, 8):
                pos = [t + 1 for t in range(n) if region[t] == g]
                if not pos:
                    out += [0.0] * 5
                    continue
                c = len(pos)
                for rank in (1, math.ceil(c / 4), math.ceil(c / 2), math.ceil(3 * c / 4), c):
                    out.append(pos[rank - 1] / n)
    return np.array(out)


def nmbac_oracle(residues, max_lag=30):
    props = list(zip(*[PHYSCHEM[a] for a in AMINO_ACIDS]))
    std = []
    for col in props:
        mu, sd = statistics.fmean(col), statistics.pstdev(col)
        std.append({a: (v - mu) / sd for a, v in zip(AMINO_ACIDS, col)})
    L = len(residues)
    out = []
    for table in std:
        for lag in range(1, max_lag + 1):
            total = 0.0
            for i in range(L - lag):
                total += table[residues[i]] * table[residues[i + lag]]
            out.append(total / (L - lag))
    out += [residues.count(a) / L for a in AMINO_ACIDS]
    return np.array(out)


def pssm_ab_oracle(Q):
    L = Q.shape[0]
    out = []
    for j in range(20):
        a, b = (j * L) // 20, ((j + 1) * L) // 20
        for col in range(20):
            out.append(sum(Q[r, col] for r in range(a, b)) / (b - a))
    return np.array(out)


def psepssm_oracle(Q, max_lag=15):
    L = Q.shape[0]
    out = [sum(Q[i, c] for i in range(L)) / L for c in range(20)]
    for lag in range(1, max_lag + 1):
        for c in range(20):
            out.append(sum((Q[i, c] - Q[i + lag, c]) ** 2 for i in range(L - lag)) / (L - lag))
    return np.array(out)


def dwt_oracle(x, lo, hi):
    # direct convolution on an explicitly padded signal
    n, F = len(x), len(lo)
    pad = F
    xe = np.pad(np.asarray(x, float), (pad, pad), mode="symmetric")
    a = [sum(lo[j] * xe[2 * k + 1 - j + pad] for j in range(F)) for k in range((n + 1) // 2)]
    d = [sum(hi[j] * xe[2 * k + 1 - j + pad] for j in range(F)) for k in range((n + 1) // 2)]
    return np.array(a), np.array(d)


def dct_oracle(x, count=5):
    N = len(x)
    out = []
    for k in range(count):
        if k >= N:
            out.append(0.0)
            continue
        s = sum(x[t] * math.cos(math.pi * k * (2 * t + 1) / (2 * N)) for t in range(N))
        out.append(s * math.sqrt((1 if k == 0 else 2) / N))
    return out


def pssm_dwt_oracle(Q, wavelet):
    lo, hi = filter_pair(wavelet)
    out = []
    for c in range(20):
        approx = Q[:, c]
        for _ in range(4):
            approx, detail = dwt_oracle(approx, lo, hi)
            for band in (approx, detail):
                out += [statistics.fmean(band), statistics.median(band), max(band), min(band)]
            out += dct_oracle(list(approx))
    return np.array(out)


def bin_codes(x, bins):
    lo, hi = min(x), max(x)
    if hi == lo:
        return [0] * len(x)
    return [min(int(math.floor((v - lo) / (hi - lo) * bins)), bins - 1) for v in x]


def mi_oracle(a, b):
    n = len(a)
    pa, pb, pab = Counter(a), Counter(b), Counter(zip(a, b))
    return sum(c / n * math.log((c / n) / (pa[u] / n * pb[v] / n)) for (u, v), c in pab.items())


def entropy_oracle(a):
    n = len(a)
    return -sum(c / n * math.log(c / n) for c in Counter(a).values())


def greedy_oracle(X, y, bins=10, tol=1e-12):
    """Recomputes every mean redundancy from scratch at each step."""
    m = X.shape[1]
    codes = [bin_codes(list(X[:, j]), bins) for j in range(m)]
    labels = list(y)
    rel = [mi_oracle(codes[j], labels) for j in range(m)]
    best_rel = max(rel)
    tied = [j for j in range(m) if rel[j] >= best_rel - tol]
    low_h = min(entropy_oracle(codes[j]) for j in tied)
    order = [next(j for j in tied if entropy_oracle(codes[j]) <= low_h + tol)]
    while len(order) < m:
        vals = {}
        for k in range(m):
            if k not in order:
                red = sum(mi_oracle(codes[k], codes[s]) for s in order) / len(order)
                vals[k] = red - rel[k]
        low = min(vals.values())
        order.append(min(k for k, v in vals.items() if v <= low + tol))
    return order


def bound_oracle(model, ds, delta=1.0, t=0.05):
    Z1, Z2 = enhanced_views(model, ds.view_a, ds.view_b)
    b1, b2 = model.beta1, model.beta2
    n = Z1.shape[0]
    sq = [sum(v * v for v in Z1[i]) + sum(v * v for v in Z2[i]) for i in range(n)]
    sq_d = [sum(v * v for v in Z1[i]) + delta**2 * sum(v * v for v in Z2[i]) for i in range(n)]
    kappa = math.sqrt(max(sq))
    conf = math.sqrt(math.log(2 / t) / (2 * n))
    out = {"kappa": kappa, "conf": conf, "emp": [], "cons": [], "norms": []}
    for c in range(2):
        N = math.sqrt(sum(v * v for v in b1[:, c]) + sum(v * v for v in b2[:, c]))
        diff = [abs(sum(Z1[i, k] * b1[k, c] for k in range(Z1.shape[1]))
                    - sum(Z2[i, k] * b2[k, c] for k in range(Z2.shape[1]))) for i in range(n)]
        out["norms"].append(N)
        out["emp"].append(sum(diff) / n)
        out["cons"].append(2 * N + 3 * N * kappa * conf + 4 * N / n * math.sqrt(sum(sq)))
    w1 = [b1[k, 1] - b1[k, 0] for k in range(b1.shape[0])]
    w2 = [b2[k, 1] - b2[k, 0] for k in range(b2.shape[0])]
    Npm = math.sqrt(sum(v * v for v in w1) + sum(v * v for v in w2))
    slack = 0.0
    for i in range(n):
        y = float(ds.labels[i])
        g1 = sum(Z1[i, k] * w1[k] for k in range(len(w1)))
        g2 = sum(Z2[i, k] * w2[k] for k in range(len(w2)))
        slack += max(0.0, 1 - y * g1) + delta * max(0.0, 1 - y * g2)
    out["gen"] = slack / (n * (1 + delta)) + 3 * conf + 4 * Npm / (n * (1 + delta)) * math.sqrt(sum(sq_d))
    out["pm"] = Npm
    return out
