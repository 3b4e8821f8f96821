# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: modular matrix products, row reduction, and the two
enumeration loops (quadratic filter over an affine space, invertibility scan).

Every product is reduced before the next addition, so all p < 2**31 are safe
in int64 arithmetic.
"""
import numpy as np
cimport numpy as cnp

ctypedef cnp.int64_t i64


cdef inline i64 _inv(i64 a, i64 p):
    cdef i64 t = 0, newt = 1, r = p, newr = a % p, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def matmul_mod(a, b, i64 p):
    cdef i64[:, :] A = np.ascontiguousarray(a, dtype=np.int64)
    cdef i64[:, :] B = np.ascontiguousarray(b, dtype=np.int64)
    cdef Py_ssize_t n = A.shape[0], m = A.shape[1], k = B.shape[1]
    if B.shape[0] != m:
        raise ValueError("shape mismatch in matmul_mod")
    out = np.zeros((n, k), dtype=np.int64)
    cdef i64[:, :] C = out
    cdef Py_ssize_t i, j, l
    cdef i64 aij
    for i in range(n):
        for j in range(m):
            aij = A[i, j]
            if aij == 0:
                continue
            for l in range(k):
                if B[j, l]:
                    C[i, l] = (C[i, l] + (aij * B[j, l]) % p) % p
    return out


def rref_mod(a, i64 p):
    """Reduced row echelon form over F_p; returns ``(R, pivots)``."""
    out = np.array(a, dtype=np.int64).reshape(np.shape(a)) % p
    cdef i64[:, :] R = out
    cdef Py_ssize_t rows = R.shape[0], cols = R.shape[1]
    cdef Py_ssize_t row = 0, col, piv, other, l
    cdef i64 inv, f, tmp
    pivots = []
    for col in range(cols):
        if row == rows:
            break
        piv = -1
        for other in range(row, rows):
            if R[other, col] != 0:
                piv = other
                break
        if piv < 0:
            continue
        if piv != row:
            for l in range(cols):
                tmp = R[row, l]
                R[row, l] = R[piv, l]
                R[piv, l] = tmp
        inv = _inv(R[row, col], p)
        for l in range(cols):
            R[row, l] = (R[row, l] * inv) % p
        for other in range(rows):
            f = R[other, col]
            if other != row and f != 0:
                for l in range(cols):
                    R[other, l] = (R[other, l] - (f * R[row, l]) % p + p) % p
        pivots.append(col)
        row += 1
    return out, pivots


def quadratic_zeros(const0, lin, quad, i64 p, chunk=None):
    """All ``c`` in F_p^k (lexicographic order) where a quadratic map vanishes.

    The map is ``const + sum_i c_i lin[i] + sum_{i<=j} c_i c_j quad[i, j]``,
    evaluated entrywise mod ``p``; ``quad`` is read on and above the diagonal.
    """
    cdef i64[:] C0 = np.ascontiguousarray(const0, dtype=np.int64)
    cdef Py_ssize_t R = C0.shape[0]
    cdef i64[:, :] L = np.ascontiguousarray(lin, dtype=np.int64).reshape(-1, R)
    cdef Py_ssize_t k = L.shape[0]
    cdef i64[:, :, :] Q = np.ascontiguousarray(quad, dtype=np.int64).reshape(k, k, R)
    cdef i64[:] c = np.zeros(k, dtype=np.int64)
    cdef Py_ssize_t[:] nz = np.zeros(k, dtype=np.intp)
    cdef Py_ssize_t nnz, a, b, i, j, r, pos
    cdef i64 v, cij
    cdef bint ok
    found = []
    while True:
        nnz = 0
        for i in range(k):
            if c[i] != 0:
                nz[nnz] = i
                nnz += 1
        ok = True
        for r in range(R):
            v = C0[r]
            for a in range(nnz):
                i = nz[a]
                v = (v + (c[i] * L[i, r]) % p) % p
                for b in range(a, nnz):
                    j = nz[b]
                    cij = (c[i] * c[j]) % p
                    v = (v + (cij * Q[i, j, r]) % p) % p
            if v != 0:
                ok = False
                break
        if ok:
            found.append(np.asarray(c).copy())
        pos = k - 1
        while pos >= 0:
            c[pos] += 1
            if c[pos] < p:
                break
            c[pos] = 0
            pos -= 1
        if pos < 0:
            break
    if not found:
        return np.zeros((0, k), dtype=np.int64)
    return np.array(found, dtype=np.int64).reshape(len(found), k)


cdef bint _full_rank(i64[:, :] M, i64 p):
    cdef Py_ssize_t n = M.shape[0], col, r, piv, l
    cdef i64 inv, f, tmp
    for col in range(n):
        piv = -1
        for r in range(col, n):
            if M[r, col] != 0:
                piv = r
                break
        if piv < 0:
            return False
        if piv != col:
            for l in range(n):
                tmp = M[col, l]
                M[col, l] = M[piv, l]
                M[piv, l] = tmp
        inv = _inv(M[col, col], p)
        for r in range(col + 1, n):
            f = (M[r, col] * inv) % p
            if f != 0:
                for l in range(col, n):
                    M[r, l] = (M[r, l] - (f * M[col, l]) % p + p) % p
    return True


def invertible_combinations(basis, i64 p):
    """Coefficient vectors ``c`` (lexicographic) with ``sum c_i basis[i]`` invertible."""
    arr = np.ascontiguousarray(basis, dtype=np.int64)
    cdef Py_ssize_t k = arr.shape[0]
    cdef Py_ssize_t d = arr.shape[1] if arr.ndim == 3 else 0
    cdef i64[:, :, :] B = arr.reshape(k, d, d)
    cdef i64[:] c = np.zeros(k, dtype=np.int64)
    work = np.zeros((d, d), dtype=np.int64)
    cdef i64[:, :] W = work
    cdef Py_ssize_t i, x, y, pos
    found = []
    while True:
        for x in range(d):
            for y in range(d):
                W[x, y] = 0
        for i in range(k):
            if c[i] != 0:
                for x in range(d):
                    for y in range(d):
                        W[x, y] = (W[x, y] + (c[i] * B[i, x, y]) % p) % p
        if _full_rank(W, p):
            found.append(np.asarray(c).copy())
        pos = k - 1
        while pos >= 0:
            c[pos] += 1
            if c[pos] < p:
                break
            c[pos] = 0
            pos -= 1
        if pos < 0:
            break
    if not found:
        return np.zeros((0, k), dtype=np.int64)
    return np.array(found, dtype=np.int64).reshape(len(found), k)
