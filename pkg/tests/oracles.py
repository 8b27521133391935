"""Slow, independent reference implementations used only by the tests."""

from __future__ import annotations

import itertools
import math
from fractions import Fraction


def naive_reduce(letters):
    """Repeatedly delete the leftmost adjacent inverse pair."""
    out = list(letters)
    changed = True
    while changed:
        changed = False
        for i in range(len(out) - 1):
            x, y = out[i], out[i + 1]
            if x[0] == y[0] and x[1] == -y[1]:
                del out[i:i + 2]
                changed = True
                break
    return out


def _det(rows):
    n = len(rows)
    M = [[Fraction(x) for x in r] for r in rows]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        det *= M[c][c]
        for r in range(c + 1, n):
            f = M[r][c] / M[c][c]
            M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return int(det)


def rank_over_q(matrix):
    M = [[Fraction(x) for x in r] for r in matrix]
    rank = 0
    cols = len(M[0]) if M else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(M)) if M[r][c]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for r in range(len(M)):
            if r != rank and M[r][c]:
                f = M[r][c] / M[rank][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[rank])]
        rank += 1
    return rank


def determinantal_divisors(matrix):
    """Invariant factors from gcds of k x k minors: d_k = D_k / D_{k-1}."""
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    out = []
    prev = 1
    for k in range(1, rank_over_q(matrix) + 1):
        g = 0
        for rows in itertools.combinations(range(m), k):
            for cols in itertools.combinations(range(n), k):
                g = math.gcd(g, _det([[matrix[r][c] for c in cols] for r in rows]))
                if g == prev:
                    break
            if g == prev:
                break
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def elementary_smith(matrix):
    """Diagonalize with Bezout row and column operations, then normalize the
    diagonal with gcd/lcm swaps until each entry divides the next."""
    M = [list(r) for r in matrix]
    m = len(M)
    n = len(M[0]) if m else 0

    def bezout(x, y):
        if y == 0:
            return (1 if x >= 0 else -1), 0, abs(x)
        s, t, g = bezout(y, x % y)
        return t, s - (x // y) * t, g

    k = 0
    while k < min(m, n):
        nz = [(i, j) for i in range(k, m) for j in range(k, n) if M[i][j]]
        if not nz:
            break
        i, j = nz[0]
        M[k], M[i] = M[i], M[k]
        for r in M:
            r[k], r[j] = r[j], r[k]
        while True:
            for i in range(k + 1, m):
                if M[i][k] and M[i][k] % M[k][k] == 0:
                    q = M[i][k] // M[k][k]
                    M[i] = [v - q * u for u, v in zip(M[k], M[i])]
                elif M[i][k]:
                    x, y = M[k][k], M[i][k]
                    s, t, g = bezout(x, y)
                    rk = [s * u + t * v for u, v in zip(M[k], M[i])]
                    ri = [(-y // g) * u + (x // g) * v for u, v in zip(M[k], M[i])]
                    M[k], M[i] = rk, ri
            for j in range(k + 1, n):
                if M[k][j] and M[k][j] % M[k][k] == 0:
                    q = M[k][j] // M[k][k]
                    for r in M:
                        r[j] -= q * r[k]
                elif M[k][j]:
                    x, y = M[k][k], M[k][j]
                    s, t, g = bezout(x, y)
                    for r in M:
                        u, v = r[k], r[j]
                        r[k], r[j] = s * u + t * v, (-y // g) * u + (x // g) * v
            if all(M[i][k] == 0 for i in range(k + 1, m)):
                break
        k += 1
    diag = [abs(M[i][i]) for i in range(min(m, n)) if M[i][i]]
    changed = True
    while changed:
        changed = False
        for i in range(len(diag)):
            for j in range(i + 1, len(diag)):
                g = math.gcd(diag[i], diag[j])
                l = diag[i] * diag[j] // g
                if (diag[i], diag[j]) != (g, l):
                    diag[i], diag[j] = g, l
                    changed = True
    return diag
