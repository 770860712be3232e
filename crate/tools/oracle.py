#!/usr/bin/env python3
"""Independent reference values for the hm-core test suite.

Nothing here shares code with the Rust crates. The q-metallic series is
built from its periodic continued fraction

    x = [n]_q + q^n / ([n]_{1/q} + q^{-n} / x),

which simplifies to the fixed point x = [n] + q^{2n} x / (1 + q [n] x) and
converges q-adically. Hankel determinants come from a fraction-free
elimination over the integers and from plain Gaussian elimination over F_p.
Periods modulo p are read off a greedy H-fraction expansion over F_p.

Usage: python3 tools/oracle.py > crates/core/tests/data/oracle.json
"""

import json
import sys

import numpy as np


def mul(a, b, prec):
    out = [0] * prec
    for i, x in enumerate(a[:prec]):
        if x:
            for j, y in enumerate(b[: prec - i]):
                out[i + j] += x * y
    return out


def inverse(a, prec):
    """Inverse of an integer series with constant term +-1."""
    assert a[0] in (1, -1)
    out = [0] * prec
    out[0] = a[0]
    for m in range(1, prec):
        s = sum(a[i] * out[m - i] for i in range(1, min(m, len(a) - 1) + 1))
        out[m] = -a[0] * s
    return out


def metallic(n, prec):
    qn = [1] * n
    x = [0] * prec
    x[0] = 1
    for _ in range(prec // (2 * n) + 2):
        qnx = [0] + mul(qn, x, prec - 1)
        den = [1 + qnx[0]] + qnx[1:]
        frac = mul(x, inverse(den, prec), prec)
        nxt = [0] * prec
        for i, c in enumerate(qn[:prec]):
            nxt[i] += c
        for i in range(prec - 2 * n):
            nxt[i + 2 * n] += frac[i]
        x = nxt
    return x


def metallic_mod(n, prec, p):
    """The same fixed point over F_p with numpy convolutions."""
    qn = np.ones(n, dtype=np.int64)
    x = np.zeros(prec, dtype=np.int64)
    x[0] = 1
    for _ in range(prec // (2 * n) + 2):
        den = np.zeros(prec, dtype=np.int64)
        den[1:] = np.convolve(qn, x)[: prec - 1]
        den[0] += 1
        frac = np.convolve(x, inv_mod_series(den % p, prec, p))[:prec] % p
        nxt = np.zeros(prec, dtype=np.int64)
        nxt[: min(n, prec)] += 1
        nxt[2 * n :] += frac[: prec - 2 * n]
        x = nxt % p
    return x


def det_bareiss(m):
    m = [row[:] for row in m]
    size = len(m)
    if size == 0:
        return 1
    sign, prev = 1, 1
    for k in range(size - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, size) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[size - 1][size - 1]


def hankel(f, ell, horizon):
    return [det_bareiss([[f[ell + a + b] for b in range(j)] for a in range(j)]) for j in range(horizon)]


def det_mod(m, p):
    m = m.copy() % p
    size = m.shape[0]
    d = 1
    for k in range(size):
        piv = np.nonzero(m[k:, k])[0]
        if piv.size == 0:
            return 0
        r = k + piv[0]
        if r != k:
            m[[k, r]] = m[[r, k]]
            d = -d
        d = d * int(m[k, k]) % p
        inv = pow(int(m[k, k]), p - 2, p)
        factors = m[k + 1 :, k] * inv % p
        m[k + 1 :, k:] = (m[k + 1 :, k:] - np.outer(factors, m[k, k:])) % p
    return d % p


def hankel_mod(f, ell, horizon, p):
    g = np.array(f, dtype=np.int64) % p
    out = []
    for j in range(horizon):
        idx = np.add.outer(np.arange(j), np.arange(j)) + ell
        out.append(det_mod(g[idx], p) if j else 1)
    return out


def inv_mod_series(a, prec, p):
    """Newton iteration for 1/a over F_p, a[0] != 0."""
    a = np.array(a[:prec], dtype=np.int64) % p
    out = np.array([pow(int(a[0]), p - 2, p)], dtype=np.int64)
    size = 1
    while size < prec:
        size = min(2 * size, prec)
        t = np.convolve(a[:size], out)[:size] % p
        t = (-t) % p
        t[0] = (t[0] + 2) % p
        out = np.convolve(out, t)[:size] % p
    return out


def greedy_mod(f, p, max_terms):
    """H-fraction terms (k, a, D) of f over F_p while precision lasts.
    Returns the terms and whether the remainder vanished."""
    cur = np.array(f, dtype=np.int64) % p
    terms = []
    while len(terms) < max_terms:
        nz = np.nonzero(cur)[0]
        if nz.size == 0:
            return terms, True
        k = int(nz[0])
        if len(cur) < 2 * k + 2:
            break
        c = int(cur[k])
        unit = cur[k:]
        r = inv_mod_series(unit, len(unit), p) * c % p
        d = r[: k + 2].copy()
        terms.append((k, (-c) % p, tuple(int(x) for x in np.trim_zeros(d, "b"))))
        rest = (-r[k + 2 :]) % p
        cur = rest
    return terms, False


def eventual_period(seq, min_repeats=3):
    """Smallest period (then smallest preperiod) whose periodic tail covers
    at least half the window and `min_repeats` periods, or None."""
    length = len(seq)
    for per in range(1, length // min_repeats + 1):
        pre = length - per
        while pre > 0 and seq[pre - 1] == seq[pre - 1 + per]:
            pre -= 1
        if length - pre >= max(min_repeats * per, length // 2):
            return pre, per
    return None


def main():
    out = {"generator": "tools/oracle.py", "series": {}, "hankel": [], "modp": []}

    for n, prec in [(1, 40), (2, 40), (3, 40), (5, 40), (10, 60)]:
        out["series"][str(n)] = metallic(n, prec)

    rows = [(1, ell, 16) for ell in range(0, 6)]
    rows += [(2, ell, 24) for ell in range(0, 6)]
    rows += [(3, ell, 48) for ell in range(0, 7)]
    rows += [(3, 6, 60), (4, 6, 80), (4, 7, 60)]
    cache = {}
    for n, ell, horizon in rows:
        if n not in cache:
            cache[n] = metallic(n, 200)
        out["hankel"].append({"n": n, "ell": ell, "values": hankel(cache[n], ell, horizon)})

    for n in (3, 4):
        for p in (2, 3, 5, 7):
            f = metallic_mod(n, 3000, p)
            for ell in range(0, n + 4):
                g = f[ell:]
                terms, vanished = greedy_mod(g, p, 600)
                entry = {"n": n, "ell": ell, "p": p}
                if vanished:
                    entry.update(hfraction_preperiod=len(terms), hfraction_period=0)
                else:
                    hp = eventual_period(terms)
                    if hp is None:
                        continue
                    entry.update(hfraction_preperiod=hp[0], hfraction_period=hp[1])
                dm = hankel_mod(f, ell, 200, p)
                kp = eventual_period(dm)
                if kp is None:
                    continue
                entry.update(hankel_preperiod=kp[0], hankel_period=kp[1])
                out["modp"].append(entry)

    json.dump(out, sys.stdout, indent=1)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
