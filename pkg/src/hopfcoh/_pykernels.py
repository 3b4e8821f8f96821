"""Pure numpy implementations of the hot kernels.

Semantics are identical to the compiled ``_kernels`` module; the backend is
picked in :mod:`hopfcoh._backend`.
"""
from __future__ import annotations

import numpy as np

_INT64_LIMIT = 2**63 - 1


def matmul_mod(a, b, p):
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    inner = a.shape[1]
    if inner * (p - 1) ** 2 <= _INT64_LIMIT:
        return (a @ b) % p
    out = (a.astype(object) @ b.astype(object)) % p
    return out.astype(np.int64)


def _scale(vec, c, p):
    if (p - 1) * c <= _INT64_LIMIT:
        return (vec * c) % p
    return np.array([(int(v) * c) % p for v in vec], dtype=np.int64)


def rref_mod(a, p):
    """Reduced row echelon form over F_p; returns ``(R, pivots)``."""
    r = np.array(a, dtype=np.int64).reshape(np.shape(a)) % p
    rows, cols = r.shape
    pivots = []
    row = 0
    for col in range(cols):
        if row == rows:
            break
        nz = np.nonzero(r[row:, col])[0]
        if nz.size == 0:
            continue
        piv = row + int(nz[0])
        if piv != row:
            r[[row, piv]] = r[[piv, row]]
        r[row] = _scale(r[row], pow(int(r[row, col]), -1, p), p)
        for other in range(rows):
            c = int(r[other, col])
            if other != row and c:
                r[other] = (r[other] - _scale(r[row], c, p)) % p
        pivots.append(col)
        row += 1
    return r, pivots


def _points(start, stop, k, p):
    idx = np.arange(start, stop, dtype=np.int64)
    pts = np.empty((stop - start, k), dtype=np.int64)
    for i in range(k - 1, -1, -1):
        pts[:, i] = idx % p
        idx //= p
    return pts


def quadratic_zeros(const, lin, quad, p, chunk=1 << 14):
    """All ``c`` in F_p^k (lexicographic order) where a quadratic map vanishes.

    The map is ``const + sum_i c_i lin[i] + sum_{i<=j} c_i c_j quad[i, j]``,
    evaluated entrywise mod ``p``; ``quad`` is read on and above the diagonal.
    """
    const = np.asarray(const, dtype=np.int64)
    lin = np.asarray(lin, dtype=np.int64).reshape(-1, const.shape[0])
    k = lin.shape[0]
    upper = np.triu(np.ones((k, k), dtype=np.int64))
    quad = np.asarray(quad, dtype=np.int64).reshape(k, k, const.shape[0]) * upper[:, :, None]
    total = p**k
    if p >= 1 << 15:
        return _quadratic_zeros_slow(const, lin, quad, p, k, total)
    found = []
    for start in range(0, total, chunk):
        pts = _points(start, min(total, start + chunk), k, p)
        val = (const[None, :] + pts @ lin) % p
        for i in range(k):
            t = (pts @ quad[i]) % p
            val = (val + pts[:, i : i + 1] * t) % p
        found.append(pts[~val.any(axis=1)])
    if not found:
        return np.zeros((0, k), dtype=np.int64)
    return np.concatenate(found, axis=0)


def _quadratic_zeros_slow(const, lin, quad, p, k, total):
    out = []
    const = [int(x) for x in const]
    lin = lin.astype(object)
    quad = quad.astype(object)
    for idx in range(total):
        c = []
        rem = idx
        for _ in range(k):
            c.append(rem % p)
            rem //= p
        c.reverse()
        ok = True
        for r, base in enumerate(const):
            v = base
            for i in range(k):
                if c[i]:
                    v += c[i] * lin[i, r]
                    for j in range(i, k):
                        if c[j]:
                            v += c[i] * c[j] * quad[i, j, r]
            if v % p:
                ok = False
                break
        if ok:
            out.append(c)
    return np.array(out, dtype=np.int64).reshape(len(out), k)


def _full_rank(m, p):
    m = [list(map(int, row)) for row in m]
    n = len(m)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] % p), None)
        if piv is None:
            return False
        m[col], m[piv] = m[piv], m[col]
        inv = pow(m[col][col], -1, p)
        for r in range(col + 1, n):
            f = (m[r][col] * inv) % p
            if f:
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[col])]
    return True


def invertible_combinations(basis, p):
    """Coefficient vectors ``c`` (lexicographic) with ``sum c_i basis[i]`` invertible."""
    basis = np.asarray(basis, dtype=np.int64)
    k = basis.shape[0]
    d = basis.shape[1] if basis.ndim == 3 else 0
    out = []
    if d == 0:
        return _points(0, p**k, k, p)
    flat = basis.reshape(k, d * d)
    for start in range(0, p**k, 4096):
        pts = _points(start, min(p**k, start + 4096), k, p)
        mats = matmul_mod(pts, flat, p).reshape(-1, d, d)
        for c, m in zip(pts, mats):
            if _full_rank(m, p):
                out.append(c)
    return np.array(out, dtype=np.int64).reshape(len(out), k)
