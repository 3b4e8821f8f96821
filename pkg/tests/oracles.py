"""Independent brute-force oracles.

Everything here works on structure constants with explicit index loops over
basis elements. Nothing is imported from ``hopfcoh`` except plain data
accessors, so the counts below are an independent check of the matrix code.
"""
from __future__ import annotations

import itertools

import numpy as np


def structure(mod):
    """Plain arrays of a Hopf module, reshaped to one axis per tensor factor."""
    h, s = mod.hopf, mod.s
    p, n, m, d = mod.p, h.dim, s.dim, mod.dim
    return {
        "p": p,
        "n": n,
        "m": m,
        "d": d,
        "mu": np.asarray(h.mult).reshape(n, n, n),  # mu[c, a, b]: coefficient of c in a b
        "eta": np.asarray(h.unit).reshape(n),
        "delta": np.asarray(h.comult).reshape(n, n, n),  # delta[a, b, c]: coefficient of a (x) b in D(c)
        "eps": np.asarray(h.counit).reshape(n),
        "sigma": np.asarray(h.antipode).reshape(n, n),
        "act": np.asarray(mod.action).reshape(d, d, m),  # act[i, k, t]: coefficient of e_i in e_k s_t
        "coact": np.asarray(mod.coaction).reshape(d, n, d),  # coact[i, a, j]: e_i (x) h_a in D_M(e_j)
        "coact_s": np.asarray(s.coaction).reshape(m, n, m),
    }


# -- Hopf algebra axioms -----------------------------------------------------------


def hopf_axiom_failures(h) -> list[str]:
    """Names of the Hopf algebra axioms that fail, by evaluation on basis elements."""
    p, n = h.p, h.dim
    mu = np.asarray(h.mult).reshape(n, n, n)
    eta = np.asarray(h.unit).reshape(n)
    de = np.asarray(h.comult).reshape(n, n, n)
    eps = np.asarray(h.counit).reshape(n)
    sig = np.asarray(h.antipode).reshape(n, n)
    r = range(n)
    bad = []

    def prod(x, y):
        return np.array([sum(x[a] * y[b] * mu[c, a, b] for a in r for b in r) for c in r]) % p

    def basis(a):
        v = np.zeros(n, dtype=np.int64)
        v[a] = 1
        return v

    e = [basis(a) for a in r]
    if any(not np.array_equal(prod(prod(e[a], e[b]), e[c]), prod(e[a], prod(e[b], e[c]))) for a in r for b in r for c in r):
        bad.append("associativity")
    if any(not (np.array_equal(prod(eta, e[a]), e[a]) and np.array_equal(prod(e[a], eta), e[a])) for a in r):
        bad.append("unit")
    for c in r:
        left = [sum(de[x, y, c] * de[u, v, x] for x in r) % p for u in r for v in r for y in r]
        right = [sum(de[u, x, c] * de[v, y, x] for x in r) % p for u in r for v in r for y in r]
        if left != right:
            bad.append("coassociativity")
            break
    for c in r:
        if any(sum(eps[a] * de[a, b, c] for a in r) % p != (b == c) for b in r) or any(
            sum(eps[b] * de[a, b, c] for b in r) % p != (a == c) for a in r
        ):
            bad.append("counit")
            break

    def comult(x):
        return np.array([[sum(x[c] * de[a, b, c] for c in r) for b in r] for a in r]) % p

    def tensor_prod(x, y):
        out = np.zeros((n, n), dtype=np.int64)
        for a, b, c, dd in itertools.product(r, repeat=4):
            if x[a, b] and y[c, dd]:
                out += x[a, b] * y[c, dd] * np.outer(mu[:, a, c], mu[:, b, dd])
        return out % p

    if any(not np.array_equal(comult(prod(e[a], e[b])), tensor_prod(comult(e[a]), comult(e[b]))) for a in r for b in r):
        bad.append("comultiplication is multiplicative")
    if not np.array_equal(comult(eta), np.outer(eta, eta) % p):
        bad.append("comultiplication is unital")
    if any(int(eps @ prod(e[a], e[b])) % p != (int(eps[a]) * int(eps[b])) % p for a in r for b in r):
        bad.append("counit is multiplicative")
    if int(eps @ eta) % p != 1:
        bad.append("counit is unital")
    for c in r:
        lhs = np.zeros(n, dtype=np.int64)
        rhs = np.zeros(n, dtype=np.int64)
        for a, b in itertools.product(r, repeat=2):
            if de[a, b, c]:
                lhs += de[a, b, c] * prod(sig[:, a], e[b])
                rhs += de[a, b, c] * prod(e[a], sig[:, b])
        if not (np.array_equal(lhs % p, eps[c] * eta % p) and np.array_equal(rhs % p, eps[c] * eta % p)):
            bad.append("antipode")
            break
    return bad


# -- cochain operations, one loop nest each ----------------------------------------


def diff0_level0(st, phi):
    """``m -> phi(m_0)_0 (x) phi(m_0)_1... `` for a 0-cochain; result shape (d, n, d)."""
    d, n, p = st["d"], st["n"], st["p"]
    dm, sig, mu = st["coact"], st["sigma"], st["mu"]
    out = np.zeros((d, n, d), dtype=np.int64)
    for j, k, c, l, i, a1, c2, a in itertools.product(range(d), range(d), range(n), range(d), range(d), range(n), range(n), range(n)):
        w = dm[k, c, j] * phi[l, k] * dm[i, a1, l] * sig[c2, c] * mu[a, a1, c2]
        if w:
            out[i, a, j] += w
    return out % p


def diff0_level1(st, phi):
    """``m -> phi(m_0)_0_0 (x) phi(m_0)_0_1 S(m_1) (x) phi(m_0)_1``; shape (d, n, n, d)."""
    d, n, p = st["d"], st["n"], st["p"]
    dm, sig, mu = st["coact"], st["sigma"], st["mu"]
    out = np.zeros((d, n, n, d), dtype=np.int64)
    for j, k, c in itertools.product(range(d), range(d), range(n)):
        if not dm[k, c, j]:
            continue
        for l, hh in itertools.product(range(d), range(n)):
            if not phi[l, hh, k]:
                continue
            for i, a1, c2, a in itertools.product(range(d), range(n), range(n), range(n)):
                w = dm[k, c, j] * phi[l, hh, k] * dm[i, a1, l] * sig[c2, c] * mu[a, a1, c2]
                if w:
                    out[i, a, hh, j] += w
    return out % p


def diff1_level1(st, phi):
    d, n, p = st["d"], st["n"], st["p"]
    out = np.zeros((d, n, n, d), dtype=np.int64)
    for i, a, b, j, h in itertools.product(range(d), range(n), range(n), range(d), range(n)):
        out[i, a, b, j] += phi[i, h, j] * st["delta"][a, b, h]
    return out % p


def diff2_level1(st, phi):
    return (phi[:, :, None, :] * st["eta"][None, None, :, None]) % st["p"]


def cdot(st, x, y):
    """``x o. y``: apply ``y``, then ``x`` on the module factor, multiply ``H`` parts slotwise."""
    d, n, p = st["d"], st["n"], st["p"]
    lvl = y.ndim - 2
    out = np.zeros(y.shape, dtype=np.int64)
    slots = list(itertools.product(range(n), repeat=lvl))
    for j, k in itertools.product(range(d), range(d)):
        for hy in slots:
            cy = y[(k,) + hy + (j,)]
            if not cy:
                continue
            for i in range(d):
                for hx in slots:
                    cx = x[(i,) + hx + (k,)]
                    if not cx:
                        continue
                    for hz in slots:
                        w = cx * cy
                        for t in range(lvl):
                            w *= st["mu"][hz[t], hx[t], hy[t]]
                        if w:
                            out[(i,) + hz + (j,)] += w
    return out % p


def s_linear(st, x) -> bool:
    """``x(m s) = x(m) s`` with ``s`` acting on the module factor only."""
    d, n, m, p, act = st["d"], st["n"], st["m"], st["p"], st["act"]
    lvl = x.ndim - 2
    for j, t in itertools.product(range(d), range(m)):
        for i in range(d):
            for hs in itertools.product(range(n), repeat=lvl):
                lhs = sum(act[k, j, t] * x[(i,) + hs + (k,)] for k in range(d))
                rhs = sum(x[(l,) + hs + (j,)] * act[i, l, t] for l in range(d))
                if (lhs - rhs) % p:
                    return False
    return True


def twisted_linear(st, f) -> bool:
    """``F(m s) = F(m) D_S(s)``."""
    d, n, m, p = st["d"], st["n"], st["m"], st["p"]
    act, ds, mu = st["act"], st["coact_s"], st["mu"]
    for j, t, i, h in itertools.product(range(d), range(m), range(d), range(n)):
        lhs = sum(act[k, j, t] * f[i, h, k] for k in range(d))
        rhs = 0
        for l, g, u, h2 in itertools.product(range(d), range(n), range(m), range(n)):
            w = f[l, g, j] * ds[u, h2, t] * act[i, l, u] * mu[h, g, h2]
            rhs += w
        if (lhs - rhs) % p:
            return False
    return True


def counital(st, x) -> bool:
    d, n, p = st["d"], st["n"], st["p"]
    return all(
        sum(st["eps"][h] * x[i, h, j] for h in range(n)) % p == (i == j) for i in range(d) for j in range(d)
    )


def coassociative(st, f) -> bool:
    """``(F (x) id) F = (id (x) D_H) F``."""
    d, n, p = st["d"], st["n"], st["p"]
    lhs = np.zeros((d, n, n, d), dtype=np.int64)
    for i, a, b, j, k in itertools.product(range(d), range(n), range(n), range(d), range(d)):
        lhs[i, a, b, j] += f[i, a, k] * f[k, b, j]
    return np.array_equal(lhs % p, diff1_level1(st, f))


def hopf_cocycle(st, x) -> bool:
    if not (counital(st, x) and s_linear(st, x)):
        return False
    return np.array_equal(cdot(st, diff2_level1(st, x), diff0_level1(st, x)), diff1_level1(st, x))


def descent_cocycle(st, f) -> bool:
    return counital(st, f) and twisted_linear(st, f) and coassociative(st, f)


def _all_maps(p, shape):
    size = int(np.prod(shape))
    for vals in itertools.product(range(p), repeat=size):
        yield np.array(vals, dtype=np.int64).reshape(shape)


def brute_z1(mod) -> list[np.ndarray]:
    """Every map ``M -> M (x) H`` checked against the Hopf cocycle conditions."""
    st = structure(mod)
    return [x for x in _all_maps(st["p"], (st["d"], st["n"], st["d"])) if hopf_cocycle(st, x)]


def brute_c1(mod) -> list[np.ndarray]:
    st = structure(mod)
    return [f for f in _all_maps(st["p"], (st["d"], st["n"], st["d"])) if descent_cocycle(st, f)]


# -- automorphisms and quotients -----------------------------------------------------


def _rank(a, p):
    a = [list(map(int, row)) for row in a]
    rows, cols = len(a), len(a[0]) if a else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] % p), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [(v * inv) % p for v in a[r]]
        for i in range(rows):
            if i != r and a[i][c] % p:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        r += 1
    return r


def _inverse(a, p):
    d = a.shape[0]
    aug = [list(map(int, a[i])) + [int(i == j) for j in range(d)] for i in range(d)]
    for c in range(d):
        piv = next(i for i in range(c, d) if aug[i][c] % p)
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = pow(aug[c][c], -1, p)
        aug[c] = [(v * inv) % p for v in aug[c]]
        for i in range(d):
            if i != c and aug[i][c] % p:
                f = aug[i][c]
                aug[i] = [(x - f * y) % p for x, y in zip(aug[i], aug[c])]
    return np.array([row[d:] for row in aug], dtype=np.int64)


def brute_aut(mod) -> list[np.ndarray]:
    """All invertible ``d x d`` matrices commuting with the ``S``-action."""
    st = structure(mod)
    d, p = st["d"], st["p"]
    act = np.asarray(mod.action)
    out = []
    for f in _all_maps(p, (d, d)):
        if _rank(f, p) != d:
            continue
        # f(e_k s_t) = f(e_k) s_t
        lhs = f @ act % p
        rhs = act @ np.kron(f, np.eye(st["m"], dtype=np.int64)) % p
        if np.array_equal(lhs, rhs):
            out.append(f)
    return out


def hopf_act(st, x, f):
    """``d^1 f^-1 o. x o. d^0 f`` with the 0-level differentials written out."""
    p, n = st["p"], st["n"]
    finv = _inverse(f, p)
    d1 = (finv[:, None, :] * st["eta"][None, :, None]) % p
    d0 = diff0_level0(st, f)
    return cdot(st, cdot(st, d1, x), d0)


def descent_act(st, x, f):
    p = st["p"]
    finv = _inverse(f, p)
    return np.einsum("ik,kaj->iaj", finv, np.einsum("iak,kj->iaj", x, f)) % p


def orbit_count(cocycles, aut, act) -> int:
    keys = {c.tobytes(): i for i, c in enumerate(cocycles)}
    parent = list(range(len(cocycles)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, c in enumerate(cocycles):
        for f in aut:
            j = keys[np.ascontiguousarray(act(c, f)).tobytes()]
            parent[find(i)] = find(j)
    return len({find(i) for i in range(len(cocycles))})


# -- the group side for H = k^G ---------------------------------------------------------


def brute_group_z1(mod, aut) -> list[tuple]:
    """Group 1-cocycles ``G -> Aut_S(M)`` for the conjugation action, over all value tuples.

    The canonical action on ``S^r`` is read off from the coaction of ``S``:
    ``g`` acts on ``S`` by the ``g``-th block.
    """
    g = mod.hopf.group
    p, n = mod.p, g.order
    r = mod.extended_rank
    act_s = [np.asarray(mod.s.coaction)[h::n, :] for h in range(n)]
    gam0 = [np.kron(np.eye(r, dtype=np.int64), a) for a in act_s]
    conj = {}
    keys = [a.tobytes() for a in aut]
    for h in range(n):
        for idx, a in enumerate(aut):
            conj[h, idx] = keys.index((gam0[h] @ a @ gam0[g.inv(h)] % p).tobytes())
    out = []
    for vals in itertools.product(range(len(aut)), repeat=n):
        ok = True
        for a_, b_ in itertools.product(range(n), repeat=2):
            lhs = aut[vals[g.mul(a_, b_)]]
            rhs = aut[vals[a_]] @ aut[conj[a_, vals[b_]]] % p
            if not np.array_equal(lhs, rhs):
                ok = False
                break
        if ok:
            out.append(vals)
    return out
