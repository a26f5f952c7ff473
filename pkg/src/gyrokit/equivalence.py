"""G-maps, the fundamental isomorphism, and equivalence of G-sets.

Two transitive G-sets over the same carrier are equivalent exactly when
their point stabilizers are conjugate; a general G-set is determined up to
rearrangement by its transitive components.  Decisions here are exact and
every produced witness map is re-verified as an equivalence.
"""

from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .actions import orbits_and_stabilizers, restrict_to_invariant
from .core import GyroError, conjugate_set
from .coset_actions import induced_action_over_subgyrogroup

BRUTE_FORCE_LIMIT = 6


@dataclass(frozen=True)
class GMap:
    """A point map between two G-sets over the same carrier."""

    source: object
    target: object
    mapping: tuple


def _require_same_carrier(x, y):
    if not x.carrier.same_carrier(y.carrier):
        raise ValueError("G-sets live over different carriers")


def is_gmap(phi):
    """True iff phi commutes with the action: phi(a.x) = a.phi(x) for all
    a, x (checked exhaustively)."""
    _require_same_carrier(phi.source, phi.target)
    m = np.array(phi.mapping, dtype=np.int64)
    if len(m) != phi.source.points:
        return False
    if m.size and (m.min() < 0 or m.max() >= phi.target.points):
        return False
    return bool(np.array_equal(m[phi.source.table], phi.target.table[:, m]))


def is_equivalence(phi):
    """A bijective G-map."""
    k = phi.source.points
    if phi.target.points != k or sorted(phi.mapping) != list(range(k)):
        return False
    return is_gmap(phi)


def fundamental_isomorphism(gset, z):
    """The equivalence G/stab(z) -> orb(z) sending a + stab(z) to a.z.

    Builds the coset action on G/stab(z) by left gyroaddition, restricts the
    original action to the orbit of z, and verifies that the quoted map is
    a bijective G-map.
    """
    t = gset.table
    stab_z = tuple(int(a) for a in np.nonzero(t[:, z] == z)[0])
    cosets = induced_action_over_subgyrogroup(gset, stab_z)
    orbit = sorted(set(int(v) for v in t[:, z]))
    target = restrict_to_invariant(gset, orbit)
    pos = {y: i for i, y in enumerate(orbit)}
    mapping = tuple(pos[int(t[rep, z])] for rep in cosets.point_labels)
    phi = GMap(source=cosets, target=target, mapping=mapping)
    if not is_equivalence(phi):
        raise GyroError("fundamental isomorphism map failed verification")
    return phi


def _brute_force_equivalent(x, y):
    if x.points != y.points:
        return False
    for perm in permutations(range(y.points)):
        if is_equivalence(GMap(source=x, target=y, mapping=perm)):
            return True
    return False


def are_equivalent_transitive(x, y):
    """Decide equivalence of two transitive G-sets over one carrier.

    Searches for a carrier element conjugating one point stabilizer onto
    the other; on success composes the two fundamental isomorphisms into an
    explicit equivalence witness.  For point counts up to
    ``BRUTE_FORCE_LIMIT`` the verdict is cross-checked against exhaustive
    bijection search.  Returns (equivalent, witness GMap or None).
    """
    _require_same_carrier(x, y)
    for g in (x, y):
        if len(orbits_and_stabilizers(g).orbits) != 1:
            raise ValueError("both G-sets must be transitive")
    carrier = x.carrier
    stab_x = tuple(int(v) for v in np.nonzero(x.table[:, 0] == 0)[0])
    stab_y = tuple(int(v) for v in np.nonzero(y.table[:, 0] == 0)[0])
    found = None
    for a in range(carrier.order):
        if stab_x == conjugate_set(carrier, a, stab_y):
            found = a
            break
    witness = None
    if found is not None:
        # stab_x = stab(found . y0), so both fundamental isomorphisms factor
        # through the same coset space G/stab_x
        y0 = int(y.table[found, 0])
        mapping = [None] * x.points
        for p in range(x.points):
            c = int(np.nonzero(x.table[:, 0] == p)[0][0])
            mapping[p] = int(y.table[c, y0])
        witness = GMap(source=x, target=y, mapping=tuple(mapping))
        if not is_equivalence(witness):
            raise GyroError("conjugate stabilizers produced a non-equivalence")
    if x.points <= BRUTE_FORCE_LIMIT and y.points <= BRUTE_FORCE_LIMIT:
        brute = _brute_force_equivalent(x, y)
        if brute != (found is not None):
            raise GyroError(
                "stabilizer-conjugacy decision disagrees with bijection search")
    return found is not None, witness


def transitive_components(gset):
    """The orbits of a G-set as transitive sub-G-sets, ordered by their
    smallest point."""
    dec = orbits_and_stabilizers(gset)
    return [restrict_to_invariant(gset, orbit) for orbit in dec.orbits]


@dataclass(frozen=True)
class ComponentMatch:
    """Outcome of matching transitive components of two G-sets."""

    equivalent: bool
    pairs: tuple
    mapping: GMap | None
    unmatched: tuple | None
    message: str


def match_components(x, y):
    """Decide X = Y by matching transitive components pairwise.

    Components are compared with are_equivalent_transitive and matched by
    maximum bipartite matching (augmenting paths in index order, so ties
    break toward the smallest representative).  On success the per-component
    witnesses are assembled into one global equivalence and re-verified.
    """
    _require_same_carrier(x, y)
    dec_x = orbits_and_stabilizers(x)
    dec_y = orbits_and_stabilizers(y)
    comps_x = [restrict_to_invariant(x, orbit) for orbit in dec_x.orbits]
    comps_y = [restrict_to_invariant(y, orbit) for orbit in dec_y.orbits]
    nx, ny = len(comps_x), len(comps_y)
    adj = [[] for _ in range(nx)]
    witnesses = {}
    for i, cx in enumerate(comps_x):
        for j, cy in enumerate(comps_y):
            if cx.points != cy.points:
                continue
            ok, phi = are_equivalent_transitive(cx, cy)
            if ok:
                adj[i].append(j)
                witnesses[i, j] = phi
    match_y = [-1] * ny

    def augment(i, seen):
        for j in adj[i]:
            if j in seen:
                continue
            seen.add(j)
            if match_y[j] == -1 or augment(match_y[j], seen):
                match_y[j] = i
                return True
        return False

    matched = sum(augment(i, set()) for i in range(nx))
    if matched < nx or matched < ny:
        match_x = [-1] * nx
        for j, i in enumerate(match_y):
            if i >= 0:
                match_x[i] = j
        if matched < nx:
            i = match_x.index(-1)
            side, orbit = "first", dec_x.orbits[i]
        else:
            j = match_y.index(-1)
            side, orbit = "second", dec_y.orbits[j]
        return ComponentMatch(
            equivalent=False, pairs=(), mapping=None, unmatched=tuple(orbit),
            message=f"component {set(orbit)} of the {side} G-set has no "
                    f"equivalent partner")
    pairs = tuple(sorted((i, j) for j, i in enumerate(match_y)))
    mapping = [None] * x.points
    for i, j in pairs:
        phi = witnesses[i, j]
        for p, q in enumerate(phi.mapping):
            mapping[dec_x.orbits[i][p]] = dec_y.orbits[j][q]
    glob = GMap(source=x, target=y, mapping=tuple(mapping))
    if not is_equivalence(glob):
        raise GyroError("assembled component matching failed verification")
    return ComponentMatch(equivalent=True, pairs=pairs, mapping=glob,
                          unmatched=None,
                          message=f"matched {len(pairs)} component(s)")
