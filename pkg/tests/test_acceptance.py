"""Acceptance suite: every criterion prints one PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s`.  The heavy criteria
(5 through 7) share the seeded fuzz ensembles: 500 Ginibre plus 200
normal plus 200 nilpotent-shift matrices across dimensions 2 to 6 at
seed 42.
"""

import math
import time

import numpy as np
import pytest

from numrad import (
    ab_certify,
    alpha_norm_estimate,
    alpha_gradient,
    alpha_objective,
    bound_th4_impr1,
    gamma_delta,
    herm_eig,
    lower_sab,
    lower_th5,
    lower_th6,
    numerical_radius,
    psd_power,
    random_matrix,
    spectral_norm,
    stream_rng,
)
from numrad.fuzzing import FuzzConfig, fuzz, total_violations
from numrad.worked_examples import LOWER_TRIANGULAR_2 as T2, SHIFT_3 as T3

from conftest import random_complex, random_hermitian
from test_alpha_norm import sphere_oracle
from test_radius import grid_oracle

SQRT5 = math.sqrt(5.0)

GINIBRE_CFG = FuzzConfig(dims=(2, 3, 4, 5, 6), trials=100, ensembles=("ginibre",), seed=42)
OTHER_CFG = FuzzConfig(
    dims=(2, 3, 4, 5, 6), trials=40, ensembles=("normal", "nilpotent-shift"), seed=42
)


def iter_fuzz_matrices():
    """The exact matrices criterion 5 fuzzes, in stream order."""
    for cfg in (GINIBRE_CFG, OTHER_CFG):
        for ens_index, ensemble in enumerate(cfg.ensembles):
            for dim in cfg.dims:
                for trial in range(cfg.trials):
                    rng = stream_rng(cfg.seed, ens_index, dim, trial)
                    yield random_matrix(ensemble, dim, rng)


def report(criterion: int, ok: bool, detail: str):
    print(f"ACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {criterion}: {detail}"


def test_criterion_1_refinement_pair_closed_forms():
    start = time.perf_counter()
    gamma, delta, _, _ = gamma_delta(T3)
    elapsed = time.perf_counter() - start
    ok = (
        abs(gamma**2 - 28 / 13) <= 1e-9
        and abs(delta - 1.5) <= 1e-9
        and min(gamma**2, delta**2) < 9 / 4
        and elapsed < 1.0
    )
    report(
        1,
        ok,
        f"gamma^2={gamma**2:.12f} (28/13), delta={delta:.12f} (3/2), "
        f"min={min(gamma**2, delta**2):.12f} < 2.25, {elapsed:.3f}s",
    )


def test_criterion_2_moduli_mix_closed_forms():
    start = time.perf_counter()
    inner, _, impr1 = bound_th4_impr1(T3)
    norm = spectral_norm(T3)
    elapsed = time.perf_counter() - start
    ok = (
        abs(inner - 4 / 3) <= 1e-9
        and abs(impr1 - math.sqrt(8 / 3)) <= 1e-9
        and impr1 < norm == 2.0
        and elapsed < 1.0
    )
    report(
        2,
        ok,
        f"inner_min={inner:.12f} (4/3), impr1={impr1:.12f} (sqrt(8/3)) < 2, {elapsed:.3f}s",
    )


def test_criterion_3_pencil_closed_forms():
    start = time.perf_counter()
    cert = ab_certify(T2)
    elapsed = time.perf_counter() - start
    ok = (
        abs(cert.alpha_best**2 - (3 - SQRT5) / 2) <= 1e-9
        and abs(cert.beta_best**2 - (3 + SQRT5) / 2) <= 1e-9
        and elapsed < 1.0
    )
    report(
        3,
        ok,
        f"alpha^2={cert.alpha_best**2:.12f}, beta^2={cert.beta_best**2:.12f}, {elapsed:.3f}s",
    )


def test_criterion_4_certified_radius():
    b2 = numerical_radius(T2, 1e-8)
    b3 = numerical_radius(T3, 1e-8)
    ok = (
        b2.upper - b2.lower <= 1e-8
        and b3.upper - b3.lower <= 1e-8
        and abs(b2.lower - 1.5) <= 1e-8
        and abs(b3.lower - SQRT5 / 2) <= 1e-8
    )
    rng = np.random.default_rng(4242)
    worst = 0.0
    for n in (2, 3):
        for _ in range(3):
            a = random_complex(rng, n)
            bracket = numerical_radius(a, 1e-9)
            oracle = grid_oracle(a)
            slack = 1e-9 + spectral_norm(a) * (2 * np.pi / 100_000)
            worst = max(worst, oracle - bracket.upper, bracket.lower - oracle - slack)
            ok = ok and bracket.lower <= oracle + slack and bracket.upper >= oracle - 1e-12
    report(
        4,
        ok,
        f"widths {b2.upper - b2.lower:.2e}, {b3.upper - b3.lower:.2e}; "
        f"lowers match 3/2 and sqrt(5)/2; grid-oracle slack {worst:.2e}",
    )


def test_criterion_5_soundness_fuzz():
    start = time.perf_counter()
    summaries = fuzz(GINIBRE_CFG) + fuzz(OTHER_CFG)
    elapsed = time.perf_counter() - start
    bad = total_violations(summaries)
    trials = sum(s.trials for s in summaries)
    ok = bad == 0 and trials == 900 and elapsed < 300.0
    report(5, ok, f"{trials} matrices, {bad} violations, {elapsed:.1f}s")


def test_criterion_6_certified_lower_bounds():
    rng = np.random.default_rng(777)
    checked = 0
    ok = True
    while checked < 200:
        dim = 2 + checked % 5
        a = random_complex(rng, dim)
        cert = ab_certify(a)
        if not cert.is_ab_normal:
            continue
        checked += 1
        sab = lower_sab(a, cert)
        th5 = lower_th5(a, cert)
        th6 = lower_th6(a, cert)
        upper = numerical_radius(a, 1e-8).upper
        norm = spectral_norm(a)
        ok = ok and sab <= upper + 1e-7 and th5 <= upper + 1e-7 and th6 <= upper + 1e-7
        ok = ok and sab > norm / 2
        ok = ok and sab <= th5 + 1e-9 and sab <= th6 + 1e-9
    report(6, ok, f"{checked} invertible matrices: orderings and soundness hold")


def test_criterion_7_alpha_norm_endpoints():
    ok = True
    worst0 = worst1 = worst_oracle = 0.0
    count = oracle_count = 0
    for a in iter_fuzz_matrices():
        count += 1
        bracket = numerical_radius(a, 1e-7)
        norm = spectral_norm(a)
        est0 = alpha_norm_estimate(a, 0.0, restarts=2, seed=0, radius_witness=bracket.witness)
        est1 = alpha_norm_estimate(a, 1.0, restarts=2, seed=0, radius_witness=bracket.witness)
        gap0 = abs(est0.best_value - norm)
        gap1 = max(bracket.lower - est1.best_value, est1.best_value - bracket.upper, 0.0)
        worst0, worst1 = max(worst0, gap0), max(worst1, gap1)
        ok = ok and gap0 <= 1e-6 and gap1 <= 1e-6
        if a.shape[0] <= 3:
            oracle_count += 1
            est = alpha_norm_estimate(a, 0.5, restarts=8, seed=0, radius_witness=bracket.witness)
            gap = abs(est.best_value - sphere_oracle(a, 0.5, samples=1_000_000))
            worst_oracle = max(worst_oracle, gap)
            ok = ok and gap <= 1e-4
    report(
        7,
        ok,
        f"{count} samples: endpoint gaps {worst0:.2e} / {worst1:.2e} (tol 1e-6); "
        f"{oracle_count} sphere-oracle checks, worst gap {worst_oracle:.2e} (tol 1e-4)",
    )


def test_criterion_8_gradient_finite_differences():
    rng = np.random.default_rng(8888)
    step = 1e-5
    worst = 0.0
    ok = True
    for _ in range(100):
        n = int(rng.integers(2, 6))
        a = random_complex(rng, n)
        x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        x /= np.linalg.norm(x)
        alpha = float(rng.uniform())
        tang = alpha_gradient(a, alpha, x)
        analytic = 2.0 * float(np.vdot(tang, tang).real)
        plus = x + step * tang
        minus = x - step * tang
        fd = (
            alpha_objective(a, alpha, plus / np.linalg.norm(plus))
            - alpha_objective(a, alpha, minus / np.linalg.norm(minus))
        ) / (2 * step)
        rel = abs(analytic - fd) / max(1.0, abs(fd))
        worst = max(worst, rel)
        ok = ok and rel <= 1e-5
    report(8, ok, f"100 triples, worst relative gradient error {worst:.2e} (tol 1e-5)")


def test_criterion_9_eigensolver_and_powers():
    ok = True
    worst_recon = worst_unit = 0.0
    for n in range(2, 9):
        rng = np.random.default_rng(9000 + n)
        for _ in range(100):
            h = random_hermitian(rng, n)
            eig = herm_eig(h)
            scale = max(1.0, np.linalg.norm(h))
            recon = np.linalg.norm(eig.reconstruct() - h) / scale
            unit = np.linalg.norm(eig.basis.conj().T @ eig.basis - np.eye(n))
            worst_recon, worst_unit = max(worst_recon, recon), max(worst_unit, unit)
            ok = ok and recon <= 1e-10 and unit <= 1e-10
    rng = np.random.default_rng(90)
    worst_power = 0.0
    for _ in range(50):
        h = random_hermitian(rng, 4)
        p = h @ h.conj().T
        gap = np.linalg.norm(psd_power(p, 0.3) @ psd_power(p, 0.7) - p) / max(
            1.0, np.linalg.norm(p)
        )
        worst_power = max(worst_power, gap)
        ok = ok and gap <= 1e-8
    report(
        9,
        ok,
        f"700 eigendecompositions: recon {worst_recon:.2e}, unitarity {worst_unit:.2e} "
        f"(tol 1e-10); power split {worst_power:.2e} (tol 1e-8)",
    )
