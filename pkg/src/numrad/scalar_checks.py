"""Vector-level checks of the scalar inequalities behind the bound catalog.

Each check evaluates one classical inequality at concrete vectors and
reports whether it holds with slack above -1e-9: the mixed-power
Cauchy-Schwarz refinement due to Kato, its function-pair form for the
power family f(t) = t^r, g(t) = t^(1-r), the Hoelder-McCarthy moment
inequality at exponent 2, and Buzano's extension applied to the moduli
pair (|T*|x, |T|x) at e = x.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import BadExponent, NotUnit
from .linalg import _eigh_desc, _power_from_eig, as_matrix, psd_power, require_square

SLACK_FLOOR = -1e-9


class ScalarChecks(NamedTuple):
    kato: bool
    kittaneh_fg: bool
    mccarthy: bool
    buzano: bool


def _unit(x) -> np.ndarray:
    v = np.asarray(x, dtype=np.complex128).reshape(-1)
    if abs(np.linalg.norm(v) - 1.0) > 1e-10:
        raise NotUnit(f"vector norm {np.linalg.norm(v):.12g} is not 1 within 1e-10")
    return v


def _quad(h: np.ndarray, v: np.ndarray) -> float:
    return float(np.vdot(v, h @ v).real)


def hoelder_mccarthy_slack(p, x, s: float) -> float:
    """<P^s x, x> - <P x, x>^s for Hermitian PSD P, unit x and s >= 1."""
    if s < 1.0:
        raise BadExponent(f"exponent must be >= 1, got {s}")
    a = require_square(as_matrix(p))
    v = _unit(x)
    vals, vecs = _eigh_desc(a)
    powered = _power_from_eig(vals, vecs, float(s))
    return _quad(powered, v) - _quad(a, v) ** s


def scalar_inequality_checks(t, x, y, r: float) -> ScalarChecks:
    """Evaluate the four ingredient inequalities at (T, x, y, r).

    kato          |<Tx, y>|^2 <= <|T|^{2r} x, x> <|T*|^{2(1-r)} y, y>
    kittaneh_fg   the same bound computed through f(t) = t^r, g(t) = t^(1-r)
                  as f(|T|)^2 and g(|T*|)^2 (a distinct numerical route)
    mccarthy      <|T| x, x>^2 <= <|T|^2 x, x>
    buzano        2 |<u, x><x, v>| <= ||u|| ||v|| + |<u, v>| for
                  u = |T*| x, v = |T| x

    True means the inequality holds with slack >= -1e-9.
    """
    rr = float(r)
    if not 0.0 <= rr <= 1.0:
        raise BadExponent(f"exponent must lie in [0, 1], got {r}")
    a = require_square(as_matrix(t))
    vx, vy = _unit(x), _unit(y)

    gram = a.conj().T @ a
    cogram = a @ a.conj().T
    gvals, gvecs = _eigh_desc(gram)
    cvals, cvecs = _eigh_desc(cogram)

    lhs = abs(np.vdot(vy, a @ vx)) ** 2

    # Kato route: powers of the moduli squares, |T|^{2r} = (T*T)^r.
    mod_2r = _power_from_eig(gvals, gvecs, rr)
    comod_2s = _power_from_eig(cvals, cvecs, 1.0 - rr)
    kato = _quad(mod_2r, vx) * _quad(comod_2s, vy) - lhs >= SLACK_FLOOR

    # Function-pair route: square f(|T|) and g(|T*|) as matrices.
    abs_t = _power_from_eig(gvals, gvecs, 0.5)
    abs_t_star = _power_from_eig(cvals, cvecs, 0.5)
    f_mat = psd_power(abs_t, rr)
    g_mat = psd_power(abs_t_star, 1.0 - rr)
    kittaneh = _quad(f_mat @ f_mat, vx) * _quad(g_mat @ g_mat, vy) - lhs >= SLACK_FLOOR

    mccarthy = _quad(gram, vx) - _quad(abs_t, vx) ** 2 >= SLACK_FLOOR

    u = abs_t_star @ vx
    v = abs_t @ vx
    buz_lhs = 2.0 * abs(np.vdot(vx, u) * np.vdot(v, vx))
    buz_rhs = float(np.linalg.norm(u)) * float(np.linalg.norm(v)) + abs(np.vdot(v, u))
    buzano = buz_rhs - buz_lhs >= SLACK_FLOOR

    return ScalarChecks(bool(kato), bool(kittaneh), bool(mccarthy), bool(buzano))
