"""Carrier contract and the derived gyrogroup algebra.

Every concrete carrier (finite table, ball, ball-rotation pairs) implements
the small ``GyrogroupCarrier`` interface; everything else here is derived
from it: gyrations, coaddition, conjugation, and the cancellation-law and
axiom-residual check suites shared by all carriers.

Gyrations are never supplied by a carrier.  They are always computed from
the gyrator identity

    gyr[a, b]c = -(a + b) + (a + (b + c))

written with the carrier's own addition, so there is a single code path.
"""

from dataclasses import dataclass

import numpy as np


class GyroError(Exception):
    """Base class for all errors raised by this package."""


class InvalidElementError(GyroError):
    """An element violates its carrier's domain (e.g. ball norm >= 1)."""


class NumericalError(GyroError):
    """A numeric evaluation left the trustworthy regime."""


class CriterionError(GyroError):
    """A construction was requested whose precondition check failed."""


@dataclass(frozen=True)
class Diagnostic:
    """One violated check with a witness tuple."""

    check: str
    witness: tuple
    message: str

    def as_dict(self):
        return {"check": self.check, "witness": list(self.witness),
                "message": self.message}


class ValidationError(GyroError):
    """Validation failed; carries the full diagnostic list."""

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        lines = [f"{d.check}: {d.message} witness={d.witness}"
                 for d in self.diagnostics[:8]]
        more = len(self.diagnostics) - len(lines)
        if more > 0:
            lines.append(f"... and {more} more")
        super().__init__("validation failed:\n  " + "\n  ".join(lines))


class GyrogroupCarrier:
    """Minimal contract a concrete carrier must satisfy.

    ``zero``      -- the identity element
    ``oplus``     -- binary operation
    ``oinv``      -- two-sided inverse
    ``equals``    -- carrier-owned equality (exact or tolerance-based)
    ``distance``  -- numeric defect used for residual reports (0.0 == equal)
    ``contains``  -- domain membership, used by closure checks

    All operations must be pure; carriers are immutable after construction.
    """

    zero = None

    def oplus(self, a, b):
        raise NotImplementedError

    def oinv(self, a):
        raise NotImplementedError

    def equals(self, a, b):
        raise NotImplementedError

    def distance(self, a, b):
        raise NotImplementedError

    def contains(self, a):
        raise NotImplementedError


def gyration(carrier, a, b, c):
    """gyr[a, b]c computed strictly by the gyrator identity."""
    ab = carrier.oplus(a, b)
    return carrier.oplus(carrier.oinv(ab), carrier.oplus(a, carrier.oplus(b, c)))


def coaddition(carrier, a, b):
    """The dual operation a [+] b = a + gyr[a, -b]b."""
    return carrier.oplus(a, gyration(carrier, a, carrier.oinv(b), b))


def cominus(carrier, a, b):
    """a [-] b = a [+] (-b)."""
    return coaddition(carrier, a, carrier.oinv(b))


def conjugate(carrier, a, b):
    """Conjugate of b by a: (a + b) [-] a.

    On a carrier with identity gyrations this reduces to a*b*a^-1.
    """
    return cominus(carrier, carrier.oplus(a, b), a)


def conjugate_set(carrier, a, members):
    """Conjugate of the subset ``members`` by a, as a sorted tuple."""
    return tuple(sorted(conjugate(carrier, a, b) for b in members))


class GyrationMap:
    """The automorphism gyr[a, b] as a callable, c -> gyr[a, b]c."""

    def __init__(self, carrier, a, b):
        self.carrier = carrier
        self.a = a
        self.b = b

    def __call__(self, c):
        return gyration(self.carrier, self.a, self.b, c)


@dataclass(frozen=True)
class LawCheck:
    law: str
    passed: bool
    checked: int
    worst: float
    witness: tuple | None

    def as_dict(self):
        return {"check": self.law, "status": "pass" if self.passed else "fail",
                "witness": None if self.witness is None else list(self.witness),
                "samples": self.checked, "tolerance": None, "worst": self.worst}


def _worst(carrier, x, y):
    d = carrier.distance(x, y)
    return float(np.max(d))


def check_cancellation_laws(carrier, pairs, tol=0.0):
    """Check the four cancellation laws over the given (a, b) sample pairs.

    Laws: (i)  a+b = a+c  implies b = c       (general left cancellation)
          (ii) -a + (a+b) = b                 (left cancellation)
          (iii) (b - a) [+] a = b             (right cancellation I)
          (iv) (b [-] a) + a = b              (right cancellation II)

    Law (i) cannot be hit by random collisions on an analytic carrier, so it
    is exercised on the constructed collision c := -a + (a+b), which realises
    a+c = a+b and must therefore recover c = b.  ``tol`` is the residual
    allowed per law (0.0 for exact carriers).  Pass ``pairs`` exhaustively
    for finite carriers.  Returns a list of four LawCheck records.
    """
    results = []
    laws = {
        "general_left_cancellation": [],
        "left_cancellation": [],
        "right_cancellation_1": [],
        "right_cancellation_2": [],
    }
    witnesses = dict.fromkeys(laws)
    count = 0
    for a, b in pairs:
        count += 1
        ab = carrier.oplus(a, b)
        # (ii)
        rec = carrier.oplus(carrier.oinv(a), ab)
        laws["left_cancellation"].append(_worst(carrier, rec, b))
        # (i) on the constructed collision
        collide = carrier.oplus(a, rec)
        r1 = max(_worst(carrier, collide, ab), _worst(carrier, rec, b))
        laws["general_left_cancellation"].append(r1)
        # (iii) (b - a) [+] a = b
        bma = carrier.oplus(b, carrier.oinv(a))
        laws["right_cancellation_1"].append(
            _worst(carrier, coaddition(carrier, bma, a), b))
        # (iv) (b [-] a) + a = b
        laws["right_cancellation_2"].append(
            _worst(carrier, carrier.oplus(cominus(carrier, b, a), a), b))
        for name in laws:
            if laws[name][-1] > tol and witnesses[name] is None:
                witnesses[name] = (a, b)
    for name, residuals in laws.items():
        worst = max(residuals) if residuals else 0.0
        results.append(LawCheck(law=name, passed=worst <= tol, checked=count,
                                worst=worst, witness=witnesses[name]))
    return results


def check_cancellation_laws_exhaustive(carrier):
    """All four cancellation laws over every pair of a finite carrier.

    Law (i) is strengthened to a genuine collision scan: every row is
    searched for duplicate values, which is the exhaustive content of
    "a+b = a+c implies b = c".
    """
    n = carrier.order
    results = check_cancellation_laws(
        carrier, ((a, b) for a in range(n) for b in range(n)), tol=0.0)
    witness = None
    for a in range(n):
        seen = {}
        for b in range(n):
            v = carrier.oplus(a, b)
            if v in seen and witness is None:
                witness = (a, seen[v], b)
            seen.setdefault(v, b)
    law1 = LawCheck(law="general_left_cancellation", passed=witness is None,
                    checked=n * n * n, worst=0.0 if witness is None else 1.0,
                    witness=witness)
    return [law1 if r.law == "general_left_cancellation" else r
            for r in results]


def check_axiom_residuals(carrier, a, b, c):
    """Evaluate the defining laws on a sample of triples and report residuals.

    Accepts single elements or batches (anything the carrier's operations
    broadcast over).  Returns a dict of worst-case residuals keyed by law
    name, plus ``closure`` (False if any computed sum left the domain).
    """
    zero = carrier.zero
    ab = carrier.oplus(a, b)
    bc = carrier.oplus(b, c)
    gyr_c = gyration(carrier, a, b, c)
    out = {}
    out["left_identity"] = _worst(carrier, carrier.oplus(zero, a), a)
    out["left_inverse"] = _worst(carrier, carrier.oplus(carrier.oinv(a), a), zero)
    out["right_inverse"] = _worst(carrier, carrier.oplus(a, carrier.oinv(a)), zero)
    out["gyroassociativity"] = _worst(
        carrier, carrier.oplus(a, bc), carrier.oplus(ab, gyr_c))
    out["left_loop"] = _worst(carrier, gyration(carrier, ab, b, c), gyr_c)
    # gyr[a,b] respects the operation: image of c+b vs. images combined
    out["automorphism"] = _worst(
        carrier,
        gyration(carrier, a, b, carrier.oplus(c, b)),
        carrier.oplus(gyr_c, gyration(carrier, a, b, b)))
    out["gyration_fixes_zero"] = _worst(
        carrier, gyration(carrier, a, b, zero), zero)
    out["closure"] = bool(np.all(carrier.contains(ab))
                          and np.all(carrier.contains(bc))
                          and np.all(carrier.contains(gyr_c)))
    return out
