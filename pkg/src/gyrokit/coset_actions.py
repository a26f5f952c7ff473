"""Left-gyroaddition actions on coset spaces.

A carrier G acts on G/H by a.(x+H) = (a+x)+H exactly when every gyration
maps every coset into itself, which decomposes into two checkable
conditions:

    (1) gyr[a, b](H) is contained in H for all a, b;
    (2) -x + gyr[a, b]x lies in H for all a, b, x.

``coset_criterion`` decides them exhaustively for finite carriers (cheaper
than coset-wise set comparison and matching the proof structure);
``coset_criterion_sampled`` covers sampleable carriers.  When the criterion
holds, ``build_coset_action`` constructs the action and re-verifies the
whole theorem package: well-definedness, the action axioms, transitivity,
stab(x+H) = conjugate of H by x, non-semiregularity for H != {0}, and the
index formula.
"""

from dataclasses import dataclass

import numpy as np

from .actions import build_representation, classify, validate_action
from .core import CriterionError, GyroError, conjugate_set
from .finite import is_subgyrogroup, left_cosets


def self_action_witness(g):
    """A triple (a, b, c) with gyr[a, b]c != c, or None if all gyrations
    are the identity (i.e. a.x = a + x really is an action)."""
    n = g.order
    mism = np.argwhere(g.gyr != np.broadcast_to(np.arange(n), (n, n, n)))
    if len(mism) == 0:
        return None
    a, b, c = map(int, mism[0])
    return (a, b, c)


def self_action_possible(g):
    """True iff left gyroaddition on the carrier itself is an action,
    equivalently iff every gyration is the identity."""
    return self_action_witness(g) is None


def self_action_possible_sampled(carrier, samples, seed, tol=None):
    """Sampled version for analytic carriers: searches for a nonidentity
    gyration.  Returns (possible, witness_or_None)."""
    from .core import gyration
    if tol is None:
        tol = getattr(carrier, "eps", 1e-9)
    rng = np.random.default_rng(seed)
    a = carrier.sample_batch(rng, samples)
    b = carrier.sample_batch(rng, samples)
    c = carrier.sample_batch(rng, samples)
    d = np.asarray(carrier.distance(gyration(carrier, a, b, c), c))
    worst = int(np.argmax(d))
    if float(d.flat[worst]) <= tol:
        return True, None
    take = (lambda v: (v.u[worst], int(np.asarray(v.r).flat[worst]))) \
        if hasattr(a, "u") else (lambda v: v[worst])
    return False, (take(a), take(b), take(c))


@dataclass(frozen=True)
class CriterionReport:
    """Outcome of the two-condition coset criterion."""

    passed: bool
    mode: str
    condition_gyr_preserves_subgroup: bool
    condition_translate_defect_in_subgroup: bool
    witness1: tuple | None = None
    witness2: tuple | None = None
    samples: int | None = None
    seed: int | None = None

    def as_dict(self):
        return {"check": "coset_criterion",
                "status": "pass" if self.passed else "fail",
                "mode": self.mode,
                "condition_gyr_preserves_subgroup":
                    self.condition_gyr_preserves_subgroup,
                "condition_translate_defect_in_subgroup":
                    self.condition_translate_defect_in_subgroup,
                "witness": [list(w) for w in (self.witness1, self.witness2)
                            if w is not None] or None,
                "samples": self.samples, "seed": self.seed}


def coset_criterion(g, members):
    """Exhaustive criterion for a subgyrogroup of a finite carrier."""
    if not is_subgyrogroup(g, members):
        raise ValueError(f"{tuple(members)} is not a subgyrogroup")
    n = g.order
    harr = np.array(sorted(int(x) for x in members))
    mask = np.zeros(n, dtype=bool)
    mask[harr] = True
    w1 = w2 = None
    img = g.gyr[:, :, harr]
    ok1 = bool(np.all(mask[img]))
    if not ok1:
        a, b, i = map(int, np.argwhere(~mask[img])[0])
        w1 = (a, b, int(harr[i]))
    defect = g.table[g.inv[None, None, :], g.gyr]
    ok2 = bool(np.all(mask[defect]))
    if not ok2:
        a, b, x = map(int, np.argwhere(~mask[defect])[0])
        w2 = (a, b, x)
    return CriterionReport(passed=ok1 and ok2, mode="exhaustive",
                           condition_gyr_preserves_subgroup=ok1,
                           condition_translate_defect_in_subgroup=ok2,
                           witness1=w1, witness2=w2)


def coset_criterion_sampled(carrier, in_subgroup, sample_subgroup,
                            samples, seed):
    """Sampled criterion for carriers that cannot be enumerated.

    ``in_subgroup``     -- vectorised membership predicate
    ``sample_subgroup`` -- (rng, count) -> batch of subgroup elements
    """
    from .core import gyration
    rng = np.random.default_rng(seed)
    a = carrier.sample_batch(rng, samples)
    b = carrier.sample_batch(rng, samples)
    x = carrier.sample_batch(rng, samples)
    h = sample_subgroup(rng, samples)
    img = gyration(carrier, a, b, h)
    ok1 = bool(np.all(in_subgroup(img))) and bool(np.all(carrier.contains(img)))
    defect = carrier.oplus(carrier.oinv(x), gyration(carrier, a, b, x))
    ok2 = bool(np.all(in_subgroup(defect))) \
        and bool(np.all(carrier.contains(defect)))
    return CriterionReport(passed=ok1 and ok2, mode="sampled",
                           condition_gyr_preserves_subgroup=ok1,
                           condition_translate_defect_in_subgroup=ok2,
                           samples=samples, seed=seed)


def build_coset_action(g, members, criterion=None):
    """The transitive action of g on G/H by left gyroaddition.

    Refuses (CriterionError) unless the criterion holds -- in particular for
    non-L-subgyrogroups, whose cosets overlap.  All theorem-level
    postconditions are re-verified on the constructed table.
    """
    report = criterion or coset_criterion(g, members)
    if not report.passed:
        part = left_cosets(g, members)
        extra = ""
        if not part.is_partition:
            extra = f"; cosets overlap, witnesses {part.overlaps[:3]}"
        raise CriterionError(
            f"coset criterion fails for H={tuple(sorted(members))}: "
            f"gyr-invariance={report.condition_gyr_preserves_subgroup}, "
            f"translate-defect={report.condition_translate_defect_in_subgroup}"
            f"{extra}")
    part = left_cosets(g, members)
    if not (part.is_partition and part.equal_sizes):
        raise GyroError("criterion passed but cosets do not partition")
    if g.order != part.index * len(part.subgroup):
        raise GyroError("index formula |G| = [G:H] |H| failed")
    coset_of = np.array(part.coset_of)
    reps = np.array(part.representatives)
    act = coset_of[g.table[:, reps]]
    # representative independence: a.(x+H) may not depend on x within a coset
    if not np.array_equal(coset_of[g.table], act[:, coset_of]):
        a, x = map(int, np.argwhere(coset_of[g.table] != act[:, coset_of])[0])
        raise GyroError(f"coset action ill-defined at a={a}, x={x}")
    gset = validate_action(g, act, point_labels=tuple(int(r) for r in reps))
    flags = classify(gset)
    if not flags.transitive:
        raise GyroError("coset action is not transitive")
    if len(part.subgroup) > 1 and flags.semiregular:
        raise GyroError("coset action with H != {0} cannot be semiregular")
    h = sorted(part.subgroup)
    for i, rep in enumerate(part.representatives):
        direct = tuple(int(a) for a in np.nonzero(act[:, i] == i)[0])
        if direct != conjugate_set(g, int(rep), h):
            raise GyroError(f"stab of coset {i} is not the conjugate of H")
    return gset


def induced_action_over_subgyrogroup(gset, members):
    """Transitive coset action on G/H for H containing the kernel and
    invariant under all gyrations; both hypotheses are checked and named
    in the error when violated."""
    g = gset.carrier
    h = set(int(x) for x in members)
    if not is_subgyrogroup(g, h):
        raise ValueError(f"{tuple(sorted(h))} is not a subgyrogroup")
    kernel = build_representation(gset).kernel
    missing = sorted(set(kernel) - h)
    if missing:
        raise CriterionError(
            f"hypothesis failed: kernel element {missing[0]} not in H")
    harr = np.array(sorted(h))
    mask = np.zeros(g.order, dtype=bool)
    mask[harr] = True
    img = g.gyr[:, :, harr]
    if not np.all(mask[img]):
        a, b, i = map(int, np.argwhere(~mask[img])[0])
        raise CriterionError(
            f"hypothesis failed: gyr[{a},{b}]({int(harr[i])}) leaves H")
    report = coset_criterion(g, h)
    if not report.passed:
        raise GyroError("criterion must hold under the verified hypotheses")
    return build_coset_action(g, h, criterion=report)
