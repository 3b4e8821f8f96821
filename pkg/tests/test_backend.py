import numpy as np
import pytest

from hopfcoh import _backend

BACKENDS = sorted(_backend.available_backends().items())
IDS = [name for name, _ in BACKENDS]


def test_selected_backend_is_available():
    assert _backend.BACKEND in _backend.available_backends()


@pytest.mark.parametrize("name,k", BACKENDS, ids=IDS)
@pytest.mark.parametrize("p", [2, 3, 7, 2147483647])
def test_matmul_mod(name, k, p):
    rng = np.random.default_rng(p)
    a = rng.integers(0, min(p, 1 << 30), (5, 7))
    b = rng.integers(0, min(p, 1 << 30), (7, 4))
    expect = (a.astype(object) @ b.astype(object)) % p
    assert np.array_equal(np.asarray(k.matmul_mod(a, b, p)), expect.astype(np.int64))


@pytest.mark.parametrize("name,k", BACKENDS, ids=IDS)
@pytest.mark.parametrize("seed", range(6))
def test_rref_matches_reference(name, k, seed):
    rng = np.random.default_rng(seed)
    p = [2, 3, 5][seed % 3]
    a = rng.integers(0, p, (4, 6))
    r, piv = k.rref_mod(a, p)
    ref_r, ref_piv = _backend.python_kernels.rref_mod(a, p)
    assert list(piv) == list(ref_piv)
    assert np.array_equal(np.asarray(r), ref_r)


def _brute_quadratic(const, lin, quad, p):
    import itertools

    k = lin.shape[0]
    out = []
    for c in itertools.product(range(p), repeat=k):
        v = const.copy()
        for i in range(k):
            v = v + c[i] * lin[i]
            for j in range(i, k):
                v = v + c[i] * c[j] * quad[i, j]
        if not (v % p).any():
            out.append(c)
    return np.array(out, dtype=np.int64).reshape(len(out), k)


@pytest.mark.parametrize("name,k", BACKENDS, ids=IDS)
@pytest.mark.parametrize("seed", range(8))
def test_quadratic_zeros_against_enumeration(name, k, seed):
    rng = np.random.default_rng(seed)
    p = [2, 3][seed % 2]
    kk, rows = int(rng.integers(0, 5)), int(rng.integers(1, 3))
    const = rng.integers(0, p, rows)
    const[0] = 0  # keep some zeros around
    lin = rng.integers(0, p, (kk, rows))
    quad = rng.integers(0, p, (kk, kk, rows))
    quad = quad * np.triu(np.ones((kk, kk), dtype=np.int64))[:, :, None]
    got = np.asarray(k.quadratic_zeros(const, lin, quad, p))
    assert np.array_equal(got.reshape(-1, kk), _brute_quadratic(const, lin, quad, p))


@pytest.mark.parametrize("name,k", BACKENDS, ids=IDS)
def test_quadratic_zeros_ignores_lower_triangle(name, k):
    const = np.array([1])
    lin = np.zeros((2, 1), dtype=np.int64)
    quad = np.zeros((2, 2, 1), dtype=np.int64)
    quad[1, 0, 0] = 1  # below the diagonal: must be ignored
    assert np.asarray(k.quadratic_zeros(const, lin, quad, 3)).shape[0] == 0


@pytest.mark.parametrize("name,k", BACKENDS, ids=IDS)
def test_invertible_combinations_gl2(name, k):
    basis = np.eye(4, dtype=np.int64).reshape(4, 2, 2)
    for p, order in ((2, 6), (3, 48)):
        coeffs = np.asarray(k.invertible_combinations(basis, p))
        assert coeffs.shape == (order, 4)
        assert [tuple(c) for c in coeffs] == sorted(tuple(c) for c in coeffs)


def test_backends_agree_on_cohomology(monkeypatch):
    from hopfcoh import cohomology
    from hopfcoh.fixtures import fix1

    results = {}
    for name, k in BACKENDS:
        monkeypatch.setattr(cohomology, "kernels", k)
        mod = fix1().module("M2")
        results[name] = [c.tolist() for c in cohomology.z1(mod).cocycles]
    assert len({str(v) for v in results.values()}) == 1


def test_environment_forces_python_backend():
    import os
    import subprocess
    import sys

    env = dict(os.environ, HOPFCOH_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from hopfcoh import BACKEND; print(BACKEND)"], env=env, capture_output=True, text=True, check=True
    )
    assert out.stdout.strip() == "python"
