"""Stock Cayley tables used as fixtures and demo inputs.

Group tables (cyclic, Klein four, symmetric, dihedral, quaternion) give
degenerate carriers: every gyration is the identity.  A genuinely
nondegenerate finite carrier is produced by :func:`square_root_twist`
applied to a nonabelian group of odd order -- the classical B-loop
operation a*b = sqrt(a) b sqrt(a), which has nontrivial gyrations exactly
where the underlying group fails to commute.  Nothing here is trusted:
tests re-certify each table through the exhaustive validator.
"""

from itertools import permutations

import numpy as np


def cyclic(n):
    """Additive group Z/n."""
    ai = np.arange(n)
    return (ai[:, None] + ai[None, :]) % n


def klein_four():
    """Z/2 x Z/2 via bitwise xor on 0..3."""
    ai = np.arange(4)
    return ai[:, None] ^ ai[None, :]


def symmetric(k):
    """Sym(k) under composition; elements are one-line permutations in
    lexicographic order, so element 0 is the identity."""
    perms = sorted(permutations(range(k)))
    idx = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    t = np.empty((n, n), dtype=np.int64)
    for a, p in enumerate(perms):
        for b, q in enumerate(perms):
            t[a, b] = idx[tuple(p[q[i]] for i in range(k))]
    return t


def dihedral(k):
    """Dihedral group of order 2k; element r + k*s is rotation r, flip s."""
    n = 2 * k
    t = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        r1, s1 = a % k, a // k
        for b in range(n):
            r2, s2 = b % k, b // k
            r = (r1 + (r2 if s1 == 0 else -r2)) % k
            t[a, b] = r + k * (s1 ^ s2)
    return t


def quaternion():
    """Quaternion group of order 8 on units 1,-1,i,-i,j,-j,k,-k."""
    units = [(1, 0, 0, 0), (-1, 0, 0, 0), (0, 1, 0, 0), (0, -1, 0, 0),
             (0, 0, 1, 0), (0, 0, -1, 0), (0, 0, 0, 1), (0, 0, 0, -1)]
    idx = {u: i for i, u in enumerate(units)}

    def mul(p, q):
        w1, x1, y1, z1 = p
        w2, x2, y2, z2 = q
        return (w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
                w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
                w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
                w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2)

    t = np.empty((8, 8), dtype=np.int64)
    for a, p in enumerate(units):
        for b, q in enumerate(units):
            t[a, b] = idx[mul(p, q)]
    return t


def frobenius21():
    """The nonabelian group of order 21: Z/7 semidirect Z/3, with the
    Z/3 part acting by multiplication by 2 (2^3 = 1 mod 7)."""
    els = [(i, j) for i in range(7) for j in range(3)]
    idx = {e: k for k, e in enumerate(els)}
    t = np.empty((21, 21), dtype=np.int64)
    for a, (i1, j1) in enumerate(els):
        for b, (i2, j2) in enumerate(els):
            t[a, b] = idx[((i1 + pow(2, j1, 7) * i2) % 7, (j1 + j2) % 3)]
    return t


def square_root_twist(group_table):
    """Twist an odd-order group table into a*b = sqrt(a) b sqrt(a).

    Square roots are unique in a group of odd order (sqrt(x) = x^((m+1)/2)
    for m = |x|), which makes the operation well defined.  For a nonabelian
    group the result is a nonassociative loop whose gyrations are nontrivial;
    run it through validate_gyrogroup to certify the gyrogroup axioms.
    """
    t = np.asarray(group_table)
    n = t.shape[0]
    if n % 2 == 0:
        raise ValueError("square-root twist needs a group of odd order")

    def power(a, k):
        r = 0
        for _ in range(k):
            r = int(t[r, a])
        return r

    # x^(n+1) = x by Lagrange, so x^((n+1)/2) squares to x
    sqrt = np.array([power(a, (n + 1) // 2) for a in range(n)], dtype=np.int64)
    for a in range(n):
        assert t[sqrt[a], sqrt[a]] == a
    return t[t[sqrt[:, None], np.arange(n)[None, :]], sqrt[:, None]]


def twisted21():
    """Order-21 nondegenerate gyrocommutative fixture (see square_root_twist)."""
    return square_root_twist(frobenius21())
