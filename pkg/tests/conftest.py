import numpy as np
import pytest

from gyrokit import validate_action, validate_gyrogroup
from gyrokit.catalog import (cyclic, dihedral, klein_four, quaternion,
                             symmetric, twisted21)


def group_tables():
    """All degenerate fixtures of orders 1..8 plus names."""
    tables = {f"Z{n}": cyclic(n) for n in range(1, 9)}
    tables["V4"] = klein_four()
    tables["S3"] = symmetric(3)
    tables["D4"] = dihedral(4)
    tables["Q8"] = quaternion()
    return tables


@pytest.fixture(scope="session")
def groups():
    return {name: validate_gyrogroup(t) for name, t in group_tables().items()}


@pytest.fixture(scope="session")
def z6(groups):
    return groups["Z6"]


@pytest.fixture(scope="session")
def s3(groups):
    return groups["S3"]


@pytest.fixture(scope="session")
def t21():
    """Nondegenerate order-21 carrier (square-root twist of Z7 : Z3)."""
    return validate_gyrogroup(twisted21())


def conjugation_table(g):
    n = g.order
    return np.array([[g.oplus(g.oplus(a, x), g.oinv(a)) for x in range(n)]
                     for a in range(n)])


@pytest.fixture(scope="session")
def s3_conjugation(s3):
    return validate_action(s3, conjugation_table(s3))


@pytest.fixture(scope="session")
def z6_mod3(z6):
    """Z6 acting on Z3 by reduction; kernel {0, 3}."""
    table = np.array([[(a + x) % 3 for x in range(3)] for a in range(6)])
    return validate_action(z6, table)


def trivial_action(g, points):
    return validate_action(g, np.tile(np.arange(points), (g.order, 1)))


def regular_action(g):
    return validate_action(g, np.array(g.table))


def classical_coset_table(g, members):
    """Independent oracle: the textbook group coset action, plain loops."""
    h = sorted(members)
    cosets = []
    for a in range(g.order):
        c = tuple(sorted(g.oplus(a, x) for x in h))
        if c not in cosets:
            cosets.append(c)
    table = []
    for a in range(g.order):
        row = []
        for c in cosets:
            image = tuple(sorted(g.oplus(a, x) for x in c))
            row.append(cosets.index(image))
        table.append(row)
    return np.array(table), cosets
