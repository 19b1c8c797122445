import numpy as np
import pytest
import scipy.stats
from hypothesis import given, settings, strategies as st

from trigmoment.instances import example_moments, random_instance
from trigmoment.moments import MomentSequence, build_gram, check_solvable

EXAMPLE_T1 = np.array([
    [1, 1, 0, 1, 1, 0],
    [1, 1, 0, 1, 1, 0],
    [0, 0, 1, 0, 0, 0],
    [1, 1, 0, 1, 1, 0],
    [1, 1, 0, 1, 1, 0],
    [0, 0, 0, 0, 0, 1],
])


def random_moments(rng, N, d):
    S = rng.normal(size=(d + 1, N, N)) + 1j * rng.normal(size=(d + 1, N, N))
    S[0] = S[0] + S[0].conj().T
    return MomentSequence(S)


def test_example_gram_is_printed_matrix():
    g = build_gram(example_moments())
    assert np.array_equal(g.gamma, EXAMPLE_T1)
    assert g.n_total == 6


def test_identity_case():
    g = build_gram(MomentSequence([[[1]], [[0]]]))
    assert np.array_equal(g.gamma, np.eye(2))
    res = check_solvable(g)
    assert res.solvable and res.min_eigenvalue == pytest.approx(1.0)


def test_not_solvable():
    # eigenvalues of [[1, 2], [2, 1]] are 3 and -1
    res = check_solvable(build_gram(MomentSequence([[[1]], [[2]]])))
    assert not res.solvable
    assert res.min_eigenvalue == pytest.approx(-1.0)


def test_example_solvable():
    assert check_solvable(build_gram(example_moments())).solvable


def test_shift_identity(rng):
    g = build_gram(random_moments(rng, 2, 2))
    for n in range(4):
        for m in range(4):
            assert g.gamma[n + 2, m + 2] == g.gamma[n, m]


def test_blocks_match_moments(rng):
    m = random_moments(rng, 2, 3)
    g = build_gram(m)
    N = 2
    for i in range(4):
        for j in range(4):
            block = g.gamma[i * N:(i + 1) * N, j * N:(j + 1) * N]
            np.testing.assert_allclose(block, m.moment(i - j), atol=1e-15)


@pytest.mark.parametrize("shape", [(1, 2, 2), (2, 2, 3), (3, 0, 0)])
def test_rejects_bad_shapes(shape):
    with pytest.raises(ValueError):
        MomentSequence(np.zeros(shape))


@pytest.mark.parametrize("N", range(1, 5))
@pytest.mark.parametrize("d", range(1, 5))
def test_exhaustive_toeplitz_structure(N, d):
    rng = np.random.default_rng(N * 10 + d)
    g = build_gram(random_moments(rng, N, d))
    seen = {}
    for k in range(d + 1):
        for r in range(d + 1):
            for s in range(N):
                for l in range(N):
                    key = (k - r, s, l)
                    val = g.gamma[k * N + s, r * N + l]
                    assert seen.setdefault(key, val) == val


@given(seed=st.integers(0, 2**32 - 1), N=st.integers(1, 4), d=st.integers(1, 4))
@settings(max_examples=60, deadline=None)
def test_hermitian_exactly(seed, N, d):
    g = build_gram(random_moments(np.random.default_rng(seed), N, d))
    assert np.array_equal(g.gamma, g.gamma.conj().T)


@given(seed=st.integers(0, 2**32 - 1))
@settings(max_examples=40, deadline=None)
def test_solvability_invariant_under_unitary_conjugation(seed):
    rng = np.random.default_rng(seed)
    if rng.uniform() < 0.5:
        m, _ = random_instance(rng)
    else:
        m = random_moments(rng, int(rng.integers(1, 4)), int(rng.integers(1, 4)))
    U = scipy.stats.unitary_group.rvs(m.N, random_state=rng) if m.N > 1 else np.ones((1, 1))
    conj = MomentSequence(np.array([U @ s @ U.conj().T for s in m.S]))
    a = check_solvable(build_gram(m), 1e-10)
    b = check_solvable(build_gram(conj), 1e-10)
    assert a.solvable == b.solvable


def test_zero_moments_accepted():
    g = build_gram(MomentSequence(np.zeros((2, 2, 2))))
    assert g.is_zero and check_solvable(g).solvable

