"""Pairs (ball vector, planar rotation) as a nondegenerate gyrogroup.

A pair (a, alpha) stands for the permutation "rotate by alpha, then
translate by a" of the 2-ball; the identity-fixing part is restricted to
the finite cyclic group of rotations by multiples of 2*pi/m, which composes
by adding indices mod m.  The operation

    (a, alpha) + (b, beta) = (a + b, alpha . beta)

combines the translation parameters through the ball addition directly (the
rotation does not act on b), and the gyration carries the ball gyration in
the first slot while leaving the rotation slot of its argument untouched:

    gyr[(a,alpha), (b,beta)] (c, gamma) = (gyr[a,b]c, gamma).

Restricting the identity-fixing permutations to a finite rotation group is
an implementation choice: the full group of such permutations is not
representable, while rotations compose finitely and the closure of the
operation on this subset is verified by the sampled axiom suite, never
assumed.

The translation part B_hat = {(a, id)} has exactly m left cosets, one per
rotation index, on which left gyroaddition acts transitively.
"""

from dataclasses import dataclass

import numpy as np

from . import core
from .ball import SAMPLE_MAX_NORM, BallGyrogroup
from .core import CriterionError, GyrogroupCarrier


@dataclass(frozen=True)
class PairElement:
    """A (ball vector, rotation index) pair; fields may be batched."""

    u: np.ndarray
    r: object  # int or integer array

    def __iter__(self):
        return iter((self.u, self.r))


class PairGyrogroup(GyrogroupCarrier):
    """Pairs (2-ball vector, rotation index mod m) under componentwise law."""

    def __init__(self, m=6, variant="mobius", eps=None, delta=None):
        if m < 1:
            raise ValueError("m must be >= 1")
        kw = {}
        if eps is not None:
            kw["eps"] = eps
        if delta is not None:
            kw["delta"] = delta
        self.ball = BallGyrogroup(dim=2, variant=variant, **kw)
        self.m = m
        self.eps = self.ball.eps
        self.zero = PairElement(self.ball.zero, 0)
        self._hat_certificate = None

    def element(self, coords, rotation):
        return PairElement(self.ball.element(coords), int(rotation) % self.m)

    def oplus(self, x, y):
        return PairElement(self.ball.oplus(x.u, y.u), (x.r + y.r) % self.m)

    def oinv(self, x):
        return PairElement(self.ball.oinv(x.u), (-x.r) % self.m)

    def distance(self, x, y):
        d = self.ball.distance(x.u, y.u)
        return np.where(np.asarray(x.r) != np.asarray(y.r), np.inf, d)

    def equals(self, x, y):
        return bool(np.all(self.distance(x, y) <= self.eps))

    def contains(self, x):
        return np.all(self.ball.contains(x.u)) and \
            bool(np.all((np.asarray(x.r) >= 0) & (np.asarray(x.r) < self.m)))

    def sample(self, rng, max_norm=SAMPLE_MAX_NORM):
        return PairElement(self.ball.sample(rng, max_norm),
                           int(rng.integers(self.m)))

    def sample_batch(self, rng, count, max_norm=SAMPLE_MAX_NORM):
        return PairElement(self.ball.sample_batch(rng, count, max_norm),
                           rng.integers(0, self.m, size=count))

    # -- B_hat coset machinery -------------------------------------------

    def in_hat(self, x):
        """Membership in B_hat = {(w, id)}, the translation part."""
        return np.asarray(x.r) == 0

    def hat_coset_index(self, x):
        """Index of the left coset x + B_hat.

        Since (a, alpha) + (w, id) = (a + w, alpha), a coset is exactly the
        set of pairs sharing one rotation index, so there are m cosets.
        """
        return x.r

    def verify_hat_criterion(self, samples, seed, tol=None):
        """Sampled check of the two coset-action criterion conditions for
        B_hat; must pass before hat_coset_action is used.

        Condition 1: gyrations map B_hat into B_hat.
        Condition 2: -z + gyr[x, y]z lands in B_hat for all x, y, z.
        Returns a report dict and caches a certificate on success.
        """
        if tol is None:
            tol = self.eps
        rng = np.random.default_rng(seed)
        x = self.sample_batch(rng, samples)
        y = self.sample_batch(rng, samples)
        z = self.sample_batch(rng, samples)
        h = PairElement(self.ball.sample_batch(rng, samples),
                        np.zeros(samples, dtype=np.int64))
        gy_h = pair_gyration(self, x, y, h)
        cond1 = bool(np.all(self.in_hat(gy_h))) and bool(np.all(self.contains(gy_h)))
        w = self.oplus(self.oinv(z), pair_gyration(self, x, y, z))
        cond2 = bool(np.all(self.in_hat(w))) and bool(np.all(self.contains(w)))
        report = {"check": "hat_coset_criterion", "samples": samples,
                  "seed": seed, "tolerance": tol,
                  "condition_gyr_preserves_subgroup": cond1,
                  "condition_translate_defect_in_subgroup": cond2,
                  "status": "pass" if (cond1 and cond2) else "fail"}
        if not (cond1 and cond2):
            raise CriterionError(f"hat coset criterion failed: {report}")
        self._hat_certificate = report
        return report

    def hat_coset_action(self, g, coset_index):
        """Left gyroaddition on the coset space: g = (a, alpha) sends coset
        k to alpha . k.  Requires verify_hat_criterion to have passed."""
        if self._hat_certificate is None:
            raise CriterionError(
                "run verify_hat_criterion(samples, seed) before acting on cosets")
        return (np.asarray(g.r) + coset_index) % self.m

    def __repr__(self):
        return f"PairGyrogroup(m={self.m}, variant={self.ball.variant!r})"


def pair_oplus(carrier, x, y):
    return carrier.oplus(x, y)


def pair_gyration(carrier, x, y, z):
    """gyr[x, y]z by the closed form (gyr_ball[a, b]c, gamma).

    Must agree with the generic gyrator-identity evaluation through the pair
    operation; ``check_pair_axioms`` cross-checks the two on samples.
    """
    return PairElement(core.gyration(carrier.ball, x.u, y.u, z.u), z.r)


def check_pair_axioms(carrier, samples, seed, max_norm=SAMPLE_MAX_NORM):
    """Sampled axiom suite for the pair carrier; returns worst residuals.

    Rotation slots are compared exactly (a mismatch reports inf); ball slots
    contribute Euclidean residuals.  Also cross-checks the closed-form
    gyration against the gyrator-identity evaluation.
    """
    rng = np.random.default_rng(seed)
    x = carrier.sample_batch(rng, samples, max_norm)
    y = carrier.sample_batch(rng, samples, max_norm)
    z = carrier.sample_batch(rng, samples, max_norm)
    out = core.check_axiom_residuals(carrier, x, y, z)
    direct = pair_gyration(carrier, x, y, z)
    generic = core.gyration(carrier, x, y, z)
    out["gyration_closed_form"] = float(np.max(carrier.distance(direct, generic)))
    xy = carrier.oplus(x, y)
    rec = carrier.oplus(carrier.oinv(x), xy)
    out["left_cancellation"] = float(np.max(carrier.distance(rec, y)))
    out["general_left_cancellation"] = max(
        float(np.max(carrier.distance(carrier.oplus(x, rec), xy))),
        out["left_cancellation"])
    ymx = carrier.oplus(y, carrier.oinv(x))
    out["right_cancellation_1"] = float(np.max(carrier.distance(
        core.coaddition(carrier, ymx, x), y)))
    out["right_cancellation_2"] = float(np.max(carrier.distance(
        carrier.oplus(core.cominus(carrier, y, x), x), y)))
    out["samples"] = samples
    out["seed"] = seed
    return out


def rotation_quotient_gset(carrier):
    """The induced action of the rotation quotient: Z/m on m cosets.

    Exact finite shadow of the coset action; regular (sharply transitive)
    of degree m, which is testable with the action engine.
    """
    from .actions import validate_action
    from .catalog import cyclic
    from .finite import validate_gyrogroup

    m = carrier.m
    fg = validate_gyrogroup(cyclic(m))
    table = (np.arange(m)[:, None] + np.arange(m)[None, :]) % m
    return validate_action(fg, table)
