"""Mobius and Einstein gyrogroups on the open unit ball of R^n.

The two additions are evaluated exactly as written:

    mobius:    [(1 + 2<u,v> + |v|^2) u + (1 - |u|^2) v]
               / (1 + 2<u,v> + |u|^2 |v|^2)

    einstein:  (1 / (1 + <u,v>)) [u + v/g_u + (g_u/(1+g_u)) <u,v> u],
               g_u = 1 / sqrt(1 - |u|^2)

All functions broadcast over leading axes, so a "point" may be a single
vector of shape (dim,) or a batch of shape (N, dim).  Results are never
clamped: a sum with norm >= 1 signals a numerical error.

Equality is tolerance-based (default 1e-9); the boundary margin (default
1e-6) is enforced when elements are admitted through ``element``.  Interior
composites such as gyrations only require the strict domain |x| < 1, since
chains of additions of admissible points can approach the boundary beyond
any fixed margin.
"""

from dataclasses import dataclass

import numpy as np

from . import core
from .core import GyrogroupCarrier, InvalidElementError, NumericalError

EPS_DEFAULT = 1e-9
DELTA_DEFAULT = 1e-6
DENOM_GUARD = 1e-15
PROBE_SCALE = 1e-3
SAMPLE_MAX_NORM = 0.99


def _dot(u, v):
    return np.sum(np.asarray(u) * np.asarray(v), axis=-1, keepdims=True)


def _norm(u):
    return np.linalg.norm(np.asarray(u, dtype=float), axis=-1)


def lorentz_gamma(u):
    """The Lorentz factor 1/sqrt(1 - |u|^2); raises on |u| >= 1."""
    nu2 = np.sum(np.asarray(u, dtype=float) ** 2, axis=-1)
    if np.any(nu2 >= 1.0):
        raise NumericalError("Lorentz factor overflow: |u| >= 1")
    return 1.0 / np.sqrt(1.0 - nu2)


def _gram_defect(u, v):
    """|u|^2 |v|^2 - <u,v>^2 without cancellation (Lagrange identity)."""
    cross = u[..., :, None] * v[..., None, :]
    w = cross - np.swapaxes(cross, -1, -2)
    return 0.5 * np.sum(w * w, axis=(-2, -1))[..., None]


def mobius_add(u, v):
    """Evaluated in an algebraically identical cancellation-free form.

    With s = u + v the written formula regroups as

        [(1 - |u|^2) s + |s|^2 u] / [(1 + <u,v>)^2 + (|u|^2 |v|^2 - <u,v>^2)]

    (expand |s|^2 = |u|^2 + 2<u,v> + |v|^2 to recover the textbook numerator
    and denominator termwise).  Near-boundary gyration chains hit the regime
    u ~ -v, where the literal denominator 1 + 2<u,v> + |u|^2 |v|^2 loses all
    significant digits; this arrangement keeps relative error near machine
    precision there.
    """
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    uv = _dot(u, v)
    nu2 = _dot(u, u)
    s = u + v
    s2 = _dot(s, s)
    den = (1.0 + uv) ** 2 + _gram_defect(u, v)
    if np.any(np.abs(den) < DENOM_GUARD):
        raise NumericalError("mobius denominator underflow")
    return ((1.0 - nu2) * s + s2 * u) / den


def einstein_add(u, v):
    """Evaluated in an algebraically identical cancellation-free form.

    Writing g2 = 1/(1 - |u|^2) = gamma_u^2 and t = <u,v>, the written
    formula regroups as

        [ (u + v)/gamma_u + C u ] / (1 + t),
        C = (g2 (1 + t) - 1) / (gamma_u (1 + gamma_u)),

    which avoids the loss of significance of the bracketed sum when
    u ~ -v near the boundary.
    """
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    uv = _dot(u, v)
    nu2 = _dot(u, u)
    if np.any(nu2 >= 1.0):
        raise NumericalError("Lorentz factor overflow: |u| >= 1")
    g2 = 1.0 / (1.0 - nu2)
    gu = np.sqrt(g2)
    den = 1.0 + uv
    if np.any(np.abs(den) < DENOM_GUARD):
        raise NumericalError("einstein denominator underflow")
    c = (g2 * den - 1.0) / (gu * (1.0 + gu))
    return ((u + v) / gu + c * u) / den


_ADDS = {"mobius": mobius_add, "einstein": einstein_add}


class BallGyrogroup(GyrogroupCarrier):
    """The open unit ball under Mobius or Einstein addition."""

    def __init__(self, dim=2, variant="mobius", eps=EPS_DEFAULT,
                 delta=DELTA_DEFAULT):
        if variant not in _ADDS:
            raise ValueError(f"variant must be one of {sorted(_ADDS)}")
        if dim < 1:
            raise ValueError("dim must be >= 1")
        self.dim = dim
        self.variant = variant
        self.eps = eps
        self.delta = delta
        self._add = _ADDS[variant]
        zero = np.zeros(dim)
        zero.flags.writeable = False
        self.zero = zero

    def element(self, coords):
        """Admit a vector as a ball element; enforces the boundary margin."""
        u = np.asarray(coords, dtype=float)
        if u.shape[-1] != self.dim:
            raise InvalidElementError(f"expected dimension {self.dim}, got {u.shape}")
        if np.any(_norm(u) >= 1.0 - self.delta):
            raise InvalidElementError(
                f"norm {float(np.max(_norm(u)))} >= 1 - delta ({1.0 - self.delta})")
        return u

    def _require_in_ball(self, u):
        u = np.asarray(u, dtype=float)
        if np.any(_norm(u) >= 1.0):
            raise InvalidElementError("argument outside the open unit ball")
        return u

    def oplus(self, u, v):
        out = self._add(self._require_in_ball(u), self._require_in_ball(v))
        if np.any(_norm(out) >= 1.0):
            raise NumericalError(f"{self.variant} sum left the ball")
        return out

    def oinv(self, u):
        return -self._require_in_ball(u)

    def distance(self, u, v):
        return _norm(np.asarray(u, dtype=float) - np.asarray(v, dtype=float))

    def equals(self, u, v):
        return bool(np.all(self.distance(u, v) <= self.eps))

    def contains(self, u):
        return _norm(u) < 1.0

    def sample(self, rng, max_norm=SAMPLE_MAX_NORM):
        return self.sample_batch(rng, 1, max_norm)[0]

    def sample_batch(self, rng, count, max_norm=SAMPLE_MAX_NORM):
        """Uniform points of the ball scaled to norms <= max_norm."""
        g = rng.standard_normal((count, self.dim))
        g /= np.linalg.norm(g, axis=-1, keepdims=True)
        radii = max_norm * rng.random((count, 1)) ** (1.0 / self.dim)
        return g * radii

    def __repr__(self):
        return f"BallGyrogroup(dim={self.dim}, variant={self.variant!r})"


@dataclass(frozen=True)
class GyrationMatrix:
    """Gyration extracted as a matrix, with empirical residuals.

    Linearity and orthogonality of ball gyrations are measured, never
    assumed: ``linearity_residual`` is the worst |gyr(a,b)c - M c| over the
    sampled c, ``orthogonality_residual`` is |M^T M - I| in Frobenius norm.
    """

    matrix: np.ndarray
    linearity_residual: float
    orthogonality_residual: float
    samples: int
    seed: int
    probe_scale: float


def ball_gyration_matrix(carrier, a, b, samples, seed, probe_scale=PROBE_SCALE):
    """Assemble gyr[a, b] as a matrix from small probe vectors.

    Column j is gyr(a, b, s e_j) / s.  The probe scale keeps probes inside
    the ball for any admissible a, b while avoiding cancellation.
    """
    a = carrier.element(a)
    b = carrier.element(b)
    dim = carrier.dim
    cols = []
    for j in range(dim):
        e = np.zeros(dim)
        e[j] = probe_scale
        cols.append(core.gyration(carrier, a, b, e) / probe_scale)
    m = np.column_stack(cols)
    rng = np.random.default_rng(seed)
    probes = carrier.sample_batch(rng, samples)
    images = core.gyration(carrier, a, b, probes)
    lin = float(np.max(_norm(images - probes @ m.T))) if samples else 0.0
    orth = float(np.linalg.norm(m.T @ m - np.eye(dim)))
    return GyrationMatrix(matrix=m, linearity_residual=lin,
                          orthogonality_residual=orth, samples=samples,
                          seed=seed, probe_scale=probe_scale)


def check_ball_laws(carrier, samples, seed, max_norm=SAMPLE_MAX_NORM):
    """Sampled law suite for a ball carrier; returns worst residuals.

    Covers the axiom residuals (gyroassociativity, left loop, identity and
    inverses, automorphism property, closure) plus the four cancellation
    laws, all evaluated on ``samples`` random triples with norms <= max_norm
    drawn from the given seed.
    """
    rng = np.random.default_rng(seed)
    a = carrier.sample_batch(rng, samples, max_norm)
    b = carrier.sample_batch(rng, samples, max_norm)
    c = carrier.sample_batch(rng, samples, max_norm)
    out = core.check_axiom_residuals(carrier, a, b, c)

    ab = carrier.oplus(a, b)
    rec = carrier.oplus(carrier.oinv(a), ab)
    out["left_cancellation"] = float(np.max(_norm(rec - b)))
    collide = carrier.oplus(a, rec)
    out["general_left_cancellation"] = max(
        float(np.max(_norm(collide - ab))), out["left_cancellation"])
    bma = carrier.oplus(b, carrier.oinv(a))
    out["right_cancellation_1"] = float(np.max(_norm(
        core.coaddition(carrier, bma, a) - b)))
    out["right_cancellation_2"] = float(np.max(_norm(
        carrier.oplus(core.cominus(carrier, b, a), a) - b)))
    out["samples"] = samples
    out["seed"] = seed
    return out
