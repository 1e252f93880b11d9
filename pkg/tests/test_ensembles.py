import numpy as np
import pytest

from numrad import BadEnsemble, make_nilpotent_shift, random_matrix, stream_rng
from numrad.worked_examples import SHIFT_3 as T3


def test_shift_constructor_reproduces_worked_matrix():
    assert np.array_equal(make_nilpotent_shift([1.0, 2.0]), T3)


def test_same_seed_same_matrix():
    for ensemble in ("ginibre", "normal", "nilpotent-shift", "hyponormal-diag"):
        a = random_matrix(ensemble, 4, 123)
        b = random_matrix(ensemble, 4, 123)
        assert np.array_equal(a, b)


def test_different_trials_differ():
    a = random_matrix("ginibre", 3, stream_rng(42, 0))
    b = random_matrix("ginibre", 3, stream_rng(42, 1))
    assert not np.array_equal(a, b)


def test_normal_ensemble_commutes():
    for trial in range(10):
        a = random_matrix("normal", 5, stream_rng(7, trial))
        resid = np.linalg.norm(a.conj().T @ a - a @ a.conj().T)
        assert resid <= 1e-10 * np.linalg.norm(a) ** 2


def test_nilpotent_shift_structure():
    for trial in range(10):
        a = random_matrix("nilpotent-shift", 5, stream_rng(7, trial))
        weights = np.diagonal(a, offset=1)
        assert np.all(weights.real > 0) and np.all(weights.imag == 0)
        mask = np.ones_like(a, dtype=bool)
        np.fill_diagonal(mask[:, 1:], False)
        assert np.all(a[mask] == 0)


def test_hyponormal_diag_self_commutator_psd():
    for trial in range(10):
        a = random_matrix("hyponormal-diag", 6, stream_rng(11, trial))
        commutator = a.conj().T @ a - a @ a.conj().T
        # the construction is blockwise normal, so the commutator vanishes
        assert np.linalg.norm(commutator) <= 1e-12 * max(1.0, np.linalg.norm(a) ** 2)


def test_dim_one():
    assert random_matrix("nilpotent-shift", 1, 0).shape == (1, 1)
    assert random_matrix("ginibre", 1, 0).shape == (1, 1)


def test_unknown_ensemble():
    with pytest.raises(BadEnsemble):
        random_matrix("wishart", 3, 0)


def test_bad_dim():
    with pytest.raises(ValueError):
        random_matrix("ginibre", 0, 0)
