"""Catalog of numerical radius bounds.

Every bound is a named, evaluable formula on |T| = (T*T)^(1/2) and
|T*| = (TT*)^(1/2).  Bounds with a free mixing parameter are minimized
by golden-section search on [0, 1]; each such objective is the norm of
an affine matrix-valued map plus a linear term, hence convex.  Bounds
quoted on the w^2 scale are square-rooted before any comparison with
w(T).  Numerical radius terms appearing inside upper-bound formulas use
the bracket's upper endpoint so the result stays a certified upper
bound.

Report identifiers:

    TH1              power-family bound at alpha = 1, best exponent on R_GRID
    COR1_GAMMA/DELTA alpha-minimized refinements gamma, delta (w scale)
    COR1_MIN         min(gamma, delta)
    TH2              alpha-minimized two-sided moduli-square mix
    PP0              alpha-minimized ||a|T|^2 + (1-a)|T*|^2||
    TH3 / COR3       alpha-minimized Buzano-route bounds (w^2 scale)
    COR4             min of TH3 and COR3
    EQN5             the alpha = 1 member of the Buzano route
    KITTANEH_SUM     ||T*T + TT*|| / 2           (w^2 scale)
    KITTANEH_MODULI  |||T| + |T*||| / 2          (w scale)
    TH4              alpha-minimized ||a|T| + (1-a)|T*||| * ||T||
    IMPR1            sqrt of TH4 (w scale)
    LOW1             max(||Re T||, ||Im T||)      (lower)
    LOW4             max(||Re+Im||, ||Re-Im||)/sqrt(2)  (lower)

TH2 coincides with PP0 and TH4 with IMPR1^2 by construction; the
duplicated rows mirror how the optimized forms are derived from the
pointwise ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import BadAlpha, BadExponent
from .linalg import (
    _eigh_desc,
    _herm_norm,
    _power_from_eig,
    as_matrix,
    cartesian_parts,
    require_square,
)
from .radius import RadiusBracket, numerical_radius

KIND_UPPER_W2 = "upper-on-w2"
KIND_UPPER_W = "upper-on-w"
KIND_LOWER_W = "lower-on-w"

BOUND_IDS = (
    "TH1",
    "COR1_GAMMA",
    "COR1_DELTA",
    "COR1_MIN",
    "TH2",
    "PP0",
    "TH3",
    "COR3",
    "COR4",
    "EQN5",
    "KITTANEH_SUM",
    "KITTANEH_MODULI",
    "TH4",
    "IMPR1",
    "LOW1",
    "LOW4",
)

R_GRID = (0.0, 0.25, 0.5, 0.75, 1.0)
GOLDEN_TOL = 1e-10
_W_TERM_TOL = 1e-9

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
_INV_PHI2 = (3.0 - math.sqrt(5.0)) / 2.0


def golden_section(f, lo: float = 0.0, hi: float = 1.0, tol: float = GOLDEN_TOL):
    """Minimize a convex f on [lo, hi]; returns (argmin, value) at the best
    point actually evaluated (endpoints included)."""
    best_x, best_f = lo, f(lo)
    fhi = f(hi)
    if fhi < best_f:
        best_x, best_f = hi, fhi
    a, b = lo, hi
    h = b - a
    c = a + _INV_PHI2 * h
    d = a + _INV_PHI * h
    yc, yd = f(c), f(d)
    while h > tol:
        if yc < yd:
            b, d, yd = d, c, yc
            h = b - a
            c = a + _INV_PHI2 * h
            yc = f(c)
            if yc < best_f:
                best_x, best_f = c, yc
        else:
            a, c, yc = c, d, yd
            h = b - a
            d = a + _INV_PHI * h
            yd = f(d)
            if yd < best_f:
                best_x, best_f = d, yd
    if yc < best_f:
        best_x, best_f = c, yc
    if yd < best_f:
        best_x, best_f = d, yd
    return float(best_x), float(best_f)


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not 0.0 <= alpha <= 1.0:
        raise BadAlpha(f"alpha must lie in [0, 1], got {alpha}")
    return alpha


class _Workspace:
    """Cached spectral objects for one matrix.

    The moduli squares are taken directly from the hermitized Gram
    products (|T|^2 = T*T exactly) rather than squaring the computed
    square roots.
    """

    def __init__(self, t):
        a = require_square(as_matrix(t))
        self.a = a
        self.gram = (a.conj().T @ a + (a.conj().T @ a).conj().T) / 2.0
        self.cogram = (a @ a.conj().T + (a @ a.conj().T).conj().T) / 2.0
        self.gvals, self.gvecs = _eigh_desc(self.gram)
        self.cvals, self.cvecs = _eigh_desc(self.cogram)
        self.sigma = np.sqrt(np.clip(self.gvals, 0.0, None))
        self.norm = float(self.sigma[0])

    def mod_power(self, e: float) -> np.ndarray:
        """|T|**e via the Gram eigenbasis (exponent may exceed 1)."""
        return _power_from_eig(np.clip(self.gvals, 0.0, None), self.gvecs, e / 2.0)

    def comod_power(self, e: float) -> np.ndarray:
        """|T*|**e via the co-Gram eigenbasis."""
        return _power_from_eig(np.clip(self.cvals, 0.0, None), self.cvecs, e / 2.0)

    @cached_property
    def abs_t(self) -> np.ndarray:
        return self.mod_power(1.0)

    @cached_property
    def abs_t_star(self) -> np.ndarray:
        return self.comod_power(1.0)

    @cached_property
    def re_im(self) -> tuple[np.ndarray, np.ndarray]:
        return cartesian_parts(self.a)

    @cached_property
    def re_cross(self) -> np.ndarray:
        cross = self.abs_t @ self.abs_t_star
        return (cross + cross.conj().T) / 2.0

    @cached_property
    def re_cross_norm(self) -> float:
        return _herm_norm(self.re_cross)

    @cached_property
    def w_mix_upper(self) -> float:
        """Upper endpoint of the bracket for w(|T| + i |T*|)."""
        return numerical_radius(self.abs_t + 1j * self.abs_t_star, _W_TERM_TOL).upper

    @cached_property
    def w_prod_upper(self) -> float:
        """Upper endpoint of the bracket for w(|T| |T*|)."""
        return numerical_radius(self.abs_t @ self.abs_t_star, _W_TERM_TOL).upper


def bound_th1(t, alpha: float, r: float) -> float:
    """Power-family upper bound on the squared alpha-norm, hence on w^2:

        ||(a/4)(|T|^{4r} + |T*|^{4(1-r)}) + (1-a)|T|^2||
            + (a/2) ||Re(|T|^{2r} |T*|^{2(1-r)})||
    """
    alpha = _check_alpha(alpha)
    r = float(r)
    if not 0.0 <= r <= 1.0:
        raise BadExponent(f"exponent must lie in [0, 1], got {r}")
    ws = t if isinstance(t, _Workspace) else _Workspace(t)
    return _th1(ws, alpha, r)


def _th1(ws: _Workspace, alpha: float, r: float) -> float:
    f4 = ws.mod_power(4.0 * r)
    g4 = ws.comod_power(4.0 * (1.0 - r))
    cross = ws.mod_power(2.0 * r) @ ws.comod_power(2.0 * (1.0 - r))
    re_cross = (cross + cross.conj().T) / 2.0
    main = _herm_norm((alpha / 4.0) * (f4 + g4) + (1.0 - alpha) * ws.gram)
    return main + (alpha / 2.0) * _herm_norm(re_cross)


def gamma_delta(t) -> tuple[float, float, float, float]:
    """Alpha-minimized refinement pair (gamma, delta, alpha_gamma, alpha_delta):

        gamma^2 = min_a ||(1 - 3a/4)|T|^2 + (a/4)|T*|^2|| + (a/2)||Re(|T||T*|)||

    and delta with the moduli squares swapped inside the norm.
    """
    ws = t if isinstance(t, _Workspace) else _Workspace(t)
    rc = ws.re_cross_norm

    def f_gamma(a):
        return _herm_norm((1.0 - 0.75 * a) * ws.gram + 0.25 * a * ws.cogram) + 0.5 * a * rc

    def f_delta(a):
        return _herm_norm((1.0 - 0.75 * a) * ws.cogram + 0.25 * a * ws.gram) + 0.5 * a * rc

    a_g, g2 = golden_section(f_gamma)
    a_d, d2 = golden_section(f_delta)
    return math.sqrt(max(g2, 0.0)), math.sqrt(max(d2, 0.0)), a_g, a_d


def bound_th2(t, alpha: float) -> float:
    """min(||a|T|^2 + (1-a)|T*|^2||, ||a|T*|^2 + (1-a)|T|^2||), an upper
    bound on the squared alpha-norm."""
    alpha = _check_alpha(alpha)
    ws = t if isinstance(t, _Workspace) else _Workspace(t)
    first = _herm_norm(alpha * ws.gram + (1.0 - alpha) * ws.cogram)
    second = _herm_norm(alpha * ws.cogram + (1.0 - alpha) * ws.gram)
    return min(first, second)


def pp0_min(t) -> tuple[float, float]:
    """min over alpha of ||a|T|^2 + (1-a)|T*|^2||, with the minimizer."""
    ws = t if isinstance(t, _Workspace) else _Workspace(t)

    def f(a):
        return _herm_norm(a * ws.gram + (1.0 - a) * ws.cogram)

    a_star, val = golden_section(f)
    return val, a_star


def _th3_norm_terms(ws: _Workspace, alpha: float) -> tuple[float, float]:
    n1 = _herm_norm((1.0 - 7.0 * alpha / 8.0) * ws.gram + (alpha / 8.0) * ws.cogram)
    n2 = _herm_norm((1.0 - 7.0 * alpha / 8.0) * ws.cogram + (alpha / 8.0) * ws.gram)
    return n1, n2


def bound_th3_family(t, alpha: float) -> tuple[float, float, float]:
    """Buzano-route upper bounds (th3, cor3, cor4) on the squared alpha-norm:

        th3 = (a/4) w^2(|T| + i|T*|) + (a/4) w(|T||T*|)
              + ||(1 - 7a/8)|T|^2 + (a/8)|T*|^2||

    cor3 swaps the moduli squares inside the norm term, cor4 takes the
    smaller norm term.  The w terms use certified bracket uppers.
    """
    alpha = _check_alpha(alpha)
    ws = t if isinstance(t, _Workspace) else _Workspace(t)
    common = (alpha / 4.0) * ws.w_mix_upper**2 + (alpha / 4.0) * ws.w_prod_upper
    n1, n2 = _th3_norm_terms(ws, alpha)
    return common + n1, common + n2, common + min(n1, n2)


def eqn5_and_classics(t) -> tuple[float, float, float]:
    """(eqn5, kittaneh_sum, kittaneh_moduli):

        eqn5            = the alpha = 1 member of the Buzano route (on w^2)
        kittaneh_sum    = ||T*T + TT*|| / 2                        (on w^2)
        kittaneh_moduli = |||T| + |T*||| / 2                       (on w)

    eqn5 <= kittaneh_sum always holds.
    """
    ws = t if isinstance(t, _Workspace) else _Workspace(t)
    eqn5 = bound_th3_family(ws, 1.0)[0]
    kitt_sum = 0.5 * _herm_norm(ws.gram + ws.cogram)
    kitt_mod = 0.5 * _herm_norm(ws.abs_t + ws.abs_t_star)
    return eqn5, kitt_sum, kitt_mod


def bound_th4_impr1(t) -> tuple[float, float, float]:
    """(inner_min, alpha_star, impr1) with

        inner_min = min over alpha of ||a|T| + (1-a)|T*|||
        impr1     = sqrt(inner_min * ||T||), an upper bound on w(T)
                    that never exceeds ||T||.
    """
    ws = t if isinstance(t, _Workspace) else _Workspace(t)
    if ws.norm == 0.0:
        return 0.0, 0.5, 0.0

    def f(a):
        return _herm_norm(a * ws.abs_t + (1.0 - a) * ws.abs_t_star)

    a_star, inner = golden_section(f)
    return inner, a_star, math.sqrt(max(inner * ws.norm, 0.0))


def lower_general(t) -> tuple[float, float]:
    """General lower bounds on w(T):

        low1 = max(||Re T||, ||Im T||)
        low4 = max(||Re T + Im T||, ||Re T - Im T||) / sqrt(2)
    """
    ws = t if isinstance(t, _Workspace) else _Workspace(t)
    re, im = ws.re_im
    low1 = max(_herm_norm(re), _herm_norm(im))
    low4 = max(_herm_norm(re + im), _herm_norm(re - im)) / math.sqrt(2.0)
    return low1, low4


@dataclass(frozen=True)
class BoundValue:
    """One catalog entry.  alpha_at is set only when the bound was
    minimized over alpha; r_at only when an exponent grid was scanned."""

    bound_id: str
    kind: str
    value: float
    alpha_at: float | None = None
    r_at: float | None = None

    @property
    def value_on_w_scale(self) -> float:
        if self.kind == KIND_UPPER_W2:
            return math.sqrt(max(self.value, 0.0))
        return self.value

    @property
    def is_upper(self) -> bool:
        return self.kind in (KIND_UPPER_W2, KIND_UPPER_W)


@dataclass(frozen=True)
class BoundReport:
    """Every catalog bound evaluated on one matrix, with the certified
    radius bracket for comparison."""

    w_bracket: RadiusBracket
    norm: float
    entries: tuple[BoundValue, ...]
    tightest_upper: str
    tightest_lower: str


def _report_entries(ws: _Workspace) -> list[BoundValue]:
    entries: list[BoundValue] = []

    th1_r, th1_val = min(
        ((r, _th1(ws, 1.0, r)) for r in R_GRID), key=lambda p: (p[1], p[0])
    )
    entries.append(BoundValue("TH1", KIND_UPPER_W2, th1_val, r_at=th1_r))

    gamma, delta, a_g, a_d = gamma_delta(ws)
    entries.append(BoundValue("COR1_GAMMA", KIND_UPPER_W, gamma, alpha_at=a_g))
    entries.append(BoundValue("COR1_DELTA", KIND_UPPER_W, delta, alpha_at=a_d))
    if gamma <= delta:
        entries.append(BoundValue("COR1_MIN", KIND_UPPER_W, gamma, alpha_at=a_g))
    else:
        entries.append(BoundValue("COR1_MIN", KIND_UPPER_W, delta, alpha_at=a_d))

    pp0_val, pp0_a = pp0_min(ws)
    # Both orientations of the th2 mix sweep the same family, so the
    # alpha-minimized th2 equals pp0.
    entries.append(BoundValue("TH2", KIND_UPPER_W2, pp0_val, alpha_at=pp0_a))
    entries.append(BoundValue("PP0", KIND_UPPER_W2, pp0_val, alpha_at=pp0_a))

    common = lambda a: (a / 4.0) * ws.w_mix_upper**2 + (a / 4.0) * ws.w_prod_upper
    a3, th3_val = golden_section(lambda a: common(a) + _th3_norm_terms(ws, a)[0])
    c3, cor3_val = golden_section(lambda a: common(a) + _th3_norm_terms(ws, a)[1])
    entries.append(BoundValue("TH3", KIND_UPPER_W2, th3_val, alpha_at=a3))
    entries.append(BoundValue("COR3", KIND_UPPER_W2, cor3_val, alpha_at=c3))
    if th3_val <= cor3_val:
        entries.append(BoundValue("COR4", KIND_UPPER_W2, th3_val, alpha_at=a3))
    else:
        entries.append(BoundValue("COR4", KIND_UPPER_W2, cor3_val, alpha_at=c3))

    eqn5, kitt_sum, kitt_mod = eqn5_and_classics(ws)
    entries.append(BoundValue("EQN5", KIND_UPPER_W2, eqn5))
    entries.append(BoundValue("KITTANEH_SUM", KIND_UPPER_W2, kitt_sum))
    entries.append(BoundValue("KITTANEH_MODULI", KIND_UPPER_W, kitt_mod))

    inner, a4, impr1 = bound_th4_impr1(ws)
    entries.append(BoundValue("TH4", KIND_UPPER_W2, inner * ws.norm, alpha_at=a4))
    entries.append(BoundValue("IMPR1", KIND_UPPER_W, impr1, alpha_at=a4))

    low1, low4 = lower_general(ws)
    entries.append(BoundValue("LOW1", KIND_LOWER_W, low1))
    entries.append(BoundValue("LOW4", KIND_LOWER_W, low4))
    return entries


def _report_from_workspace(ws: _Workspace, bracket: RadiusBracket) -> BoundReport:
    entries = _report_entries(ws)
    uppers = [e for e in entries if e.is_upper]
    lowers = [e for e in entries if not e.is_upper]
    tight_up = min(uppers, key=lambda e: (e.value_on_w_scale, e.bound_id))
    tight_lo = min(lowers, key=lambda e: (-e.value_on_w_scale, e.bound_id))
    return BoundReport(
        w_bracket=bracket,
        norm=ws.norm,
        entries=tuple(entries),
        tightest_upper=tight_up.bound_id,
        tightest_lower=tight_lo.bound_id,
    )


def bound_report(t, tol: float = 1e-9) -> BoundReport:
    """Evaluate every catalog bound on T against a certified w(T) bracket."""
    ws = _Workspace(t)
    bracket = numerical_radius(ws.a, tol)
    return _report_from_workspace(ws, bracket)
