"""Finite gyrogroups from Cayley tables.

Ingests magma tables (text format below), certifies or refutes the gyrogroup
axioms exhaustively, and computes subgyrogroups, L-subgyrogroups, left
cosets and the index formula.

Table file format (UTF-8 text)::

    gyro <n>
    labels <name0> ... <name(n-1)>     # optional
    <n rows of n whitespace-separated integers, row a = a+0 .. a+(n-1)>

Comments start with '#'.  Element 0 is always the candidate identity.
"""

from dataclasses import dataclass, field

import numpy as np

from .core import Diagnostic, GyroError, GyrogroupCarrier, ValidationError

# Witness lists inside a single check are capped for readability; the
# violation count is always exact.
MAX_WITNESSES = 8

SUBGROUP_ENUM_CAP = 64


class TableFormatError(GyroError):
    """Malformed table text, with a 1-based line (and column) position."""

    def __init__(self, message, line, column=None):
        self.line = line
        self.column = column
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{where}: {message}")


@dataclass(frozen=True)
class CayleyTable:
    """An n x n operation table over elements 0..n-1."""

    order: int
    table: np.ndarray
    labels: tuple | None = None

    def __post_init__(self):
        t = np.ascontiguousarray(self.table, dtype=np.int64)
        if t.shape != (self.order, self.order):
            raise ValueError(f"table shape {t.shape} != ({self.order}, {self.order})")
        if t.size and (t.min() < 0 or t.max() >= self.order):
            raise ValueError("table entries out of range 0..n-1")
        t.flags.writeable = False
        object.__setattr__(self, "table", t)
        if self.labels is not None and len(self.labels) != self.order:
            raise ValueError("label count != order")


def parse_cayley_table(text):
    """Parse the text format into a CayleyTable, with positional diagnostics."""
    n = None
    labels = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if parts[0] != "gyro" or len(parts) != 2:
                raise TableFormatError("expected header 'gyro <n>'", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise TableFormatError(f"order {parts[1]!r} is not an integer", lineno)
            if n < 1:
                raise TableFormatError("order must be >= 1", lineno)
            continue
        if parts[0] == "labels" and labels is None and not rows:
            if len(parts) != n + 1:
                raise TableFormatError(
                    f"expected {n} labels, got {len(parts) - 1}", lineno)
            labels = tuple(parts[1:])
            continue
        if len(rows) == n:
            raise TableFormatError(f"extra row; table already has {n} rows", lineno)
        if len(parts) != n:
            raise TableFormatError(
                f"row {len(rows)} has {len(parts)} entries, expected {n}", lineno)
        row = []
        for col, p in enumerate(parts):
            try:
                v = int(p)
            except ValueError:
                raise TableFormatError(f"entry {p!r} is not an integer",
                                       lineno, col)
            if not 0 <= v < n:
                raise TableFormatError(
                    f"entry {v} out of range 0..{n - 1}", lineno, col)
            row.append(v)
        rows.append(row)
    if n is None:
        raise TableFormatError("missing 'gyro <n>' header", 1)
    if len(rows) != n:
        raise TableFormatError(f"expected {n} rows, found {len(rows)}",
                               len(text.splitlines()) or 1)
    return CayleyTable(order=n, table=np.array(rows, dtype=np.int64), labels=labels)


def serialize_cayley_table(t):
    """Canonical text form: single spaces, no trailing whitespace."""
    lines = [f"gyro {t.order}"]
    if t.labels is not None:
        lines.append("labels " + " ".join(t.labels))
    for row in t.table:
        lines.append(" ".join(str(int(v)) for v in row))
    return "\n".join(lines) + "\n"


class FiniteGyrogroup(GyrogroupCarrier):
    """A validated finite gyrogroup: table, cached inverses, gyration table.

    Construct through :func:`validate_gyrogroup`; the constructor itself
    trusts its inputs.
    """

    def __init__(self, table, inv, gyr, labels=None):
        self.table = table
        self.inv = inv
        self.gyr = gyr
        self.labels = labels
        for arr in (self.table, self.inv, self.gyr):
            arr.flags.writeable = False
        self.zero = 0

    @property
    def order(self):
        return self.table.shape[0]

    def elements(self):
        return range(self.order)

    def oplus(self, a, b):
        return int(self.table[a, b])

    def oinv(self, a):
        return int(self.inv[a])

    def equals(self, a, b):
        return a == b

    def distance(self, a, b):
        return 0.0 if a == b else 1.0

    def contains(self, a):
        return isinstance(a, (int, np.integer)) and 0 <= a < self.order

    def gyration(self, a, b, c):
        return int(self.gyr[a, b, c])

    def gyr_perm(self, a, b):
        return self.gyr[a, b]

    def is_degenerate(self):
        """True iff every gyration is the identity, i.e. the table is a group."""
        n = self.order
        return bool(np.array_equal(self.gyr, np.broadcast_to(np.arange(n), (n, n, n))))

    def same_carrier(self, other):
        return self is other or np.array_equal(self.table, other.table)

    def __repr__(self):
        kind = "degenerate" if self.is_degenerate() else "nondegenerate"
        return f"FiniteGyrogroup(order={self.order}, {kind})"


def _triple_tables(t, inv):
    """gyr[a,b,c] per the gyrator identity plus a+(b+c), all (n,n,n)."""
    n = t.shape[0]
    ai = np.arange(n)
    # a_bc[a,b,c] = t[a, t[b,c]]
    a_bc = t[ai[:, None, None], t[None, :, :]]
    ginv = inv[t]  # -(a+b)
    gyr = t[ginv[:, :, None], a_bc]
    return gyr, a_bc


def diagnose_gyrogroup(t):
    """Run the six validation checks in order; return all diagnostics.

    An empty list means the table is a gyrogroup.  Checks never stop at the
    first violation inside a stage; the gyration stages are skipped (with a
    diagnostic) only when no two-sided inverse map exists to define them.
    """
    if isinstance(t, CayleyTable):
        table = t.table
    else:
        table = CayleyTable(order=len(t), table=np.asarray(t)).table
    n = table.shape[0]
    ai = np.arange(n)
    diags = []

    # (1) G1: row 0 is the identity row
    bad = np.nonzero(table[0] != ai)[0]
    for b in bad[:MAX_WITNESSES]:
        diags.append(Diagnostic("identity_row", (int(b),),
                                f"0+{b} = {int(table[0, b])} != {b}"))

    # (2) every row is a permutation (necessary for left cancellation)
    sorted_rows = np.sort(table, axis=1)
    bad_rows = np.nonzero((sorted_rows != ai).any(axis=1))[0]
    for a in bad_rows[:MAX_WITNESSES]:
        row = table[a]
        seen = {}
        witness = None
        for c, v in enumerate(row):
            if int(v) in seen:
                witness = (int(a), seen[int(v)], c)
                break
            seen[int(v)] = c
        diags.append(Diagnostic(
            "row_permutation", witness or (int(a),),
            f"row {a} is not a permutation of 0..{n - 1}"))

    # (3) G2: unique two-sided inverses
    inv = np.full(n, -1, dtype=np.int64)
    inv_ok = True
    for a in range(n):
        lefts = np.nonzero(table[:, a] == 0)[0]
        if len(lefts) == 0:
            diags.append(Diagnostic("left_inverse_exists", (a,),
                                    f"no b with b+{a} = 0"))
            inv_ok = False
        elif len(lefts) > 1:
            diags.append(Diagnostic(
                "left_inverse_unique", (a, int(lefts[0]), int(lefts[1])),
                f"element {a} has {len(lefts)} left inverses"))
            inv_ok = False
        else:
            b = int(lefts[0])
            if table[a, b] != 0:
                diags.append(Diagnostic(
                    "inverse_two_sided", (a, b),
                    f"{b}+{a} = 0 but {a}+{b} = {int(table[a, b])}"))
                inv_ok = False
            inv[a] = b

    if not inv_ok:
        diags.append(Diagnostic(
            "gyration_checks_skipped", (),
            "gyrations undefined without unique two-sided inverses"))
        return diags

    gyr, a_bc = _triple_tables(table, inv)

    # (4) each gyr[a,b] is a bijection and respects the operation (G3)
    flat = gyr.reshape(n * n, n)
    not_bij = np.nonzero((np.sort(flat, axis=1) != ai).any(axis=1))[0]
    for k in not_bij[:MAX_WITNESSES]:
        a, b = divmod(int(k), n)
        diags.append(Diagnostic("gyration_bijective", (a, b),
                                f"gyr[{a},{b}] is not a bijection"))
    auto_count = 0
    for a in range(n):
        for b in range(n):
            p = gyr[a, b]
            lhs = p[table]
            rhs = table[np.ix_(p, p)]
            if not np.array_equal(lhs, rhs):
                auto_count += 1
                if auto_count <= MAX_WITNESSES:
                    u, v = map(int, np.argwhere(lhs != rhs)[0])
                    diags.append(Diagnostic(
                        "gyration_automorphism", (a, b, u, v),
                        f"gyr[{a},{b}]({u}+{v}) != gyr[{a},{b}]{u}+gyr[{a},{b}]{v}"))

    # (5) left gyroassociative law over all n^3 triples
    rhs = table[table[:, :, None], gyr]
    mism = np.argwhere(a_bc != rhs)
    for a, b, c in mism[:MAX_WITNESSES]:
        diags.append(Diagnostic(
            "left_gyroassociative", (int(a), int(b), int(c)),
            f"{a}+({b}+{c}) = {int(a_bc[a, b, c])} but "
            f"({a}+{b})+gyr[{a},{b}]{c} = {int(rhs[a, b, c])}"))
    if len(mism) > MAX_WITNESSES:
        diags.append(Diagnostic(
            "left_gyroassociative_count", (int(len(mism)),),
            f"{len(mism)} of {n ** 3} triples violate gyroassociativity"))

    # (6) left loop property: gyr[a+b, b] = gyr[a, b] pointwise (G4)
    shifted = gyr[table[:, :, None], ai[None, :, None], ai[None, None, :]]
    mism = np.argwhere(shifted != gyr)
    for a, b, c in mism[:MAX_WITNESSES]:
        diags.append(Diagnostic(
            "left_loop", (int(a), int(b), int(c)),
            f"gyr[{a}+{b},{b}]{c} = {int(shifted[a, b, c])} != "
            f"gyr[{a},{b}]{c} = {int(gyr[a, b, c])}"))
    return diags


def validate_gyrogroup(t):
    """Certify a table as a gyrogroup or raise ValidationError with witnesses."""
    diags = diagnose_gyrogroup(t)
    if diags:
        raise ValidationError(diags)
    if isinstance(t, CayleyTable):
        table, labels = t.table, t.labels
    else:
        ct = CayleyTable(order=len(t), table=np.asarray(t))
        table, labels = ct.table, None
    n = table.shape[0]
    inv = np.empty(n, dtype=np.int64)
    for a in range(n):
        inv[a] = int(np.nonzero(table[:, a] == 0)[0][0])
    gyr, _ = _triple_tables(table, inv)
    return FiniteGyrogroup(table=table.copy(), inv=inv, gyr=gyr, labels=labels)


def is_subgyrogroup(g, members):
    """True iff members contains 0 and is closed under + and inverse."""
    s = set(int(x) for x in members)
    if 0 not in s or not all(0 <= x < g.order for x in s):
        return False
    for a in s:
        if g.oinv(a) not in s:
            return False
        for b in s:
            if g.oplus(a, b) not in s:
                return False
    return True


def subgyrogroup_closure(g, seed):
    """Smallest subgyrogroup containing ``seed``, as a sorted tuple."""
    s = set(int(x) for x in seed) | {0}
    while True:
        new = {g.oinv(a) for a in s}
        new.update(g.oplus(a, b) for a in s for b in s)
        if new <= s:
            return tuple(sorted(s))
        s |= new


def enumerate_subgyrogroups(g, cap=SUBGROUP_ENUM_CAP):
    """All subgyrogroups, found by closing generating sets; sorted by size.

    Refuses orders beyond ``cap`` (the search is worst-case exponential in
    the subgroup lattice, which is fine at desk scale only).
    """
    if g.order > cap:
        raise GyroError(
            f"order {g.order} exceeds enumeration cap {cap}; raise cap explicitly")
    found = {subgyrogroup_closure(g, ())}
    frontier = list(found)
    while frontier:
        s = frontier.pop()
        base = set(s)
        for x in range(g.order):
            if x not in base:
                c = subgyrogroup_closure(g, s + (x,))
                if c not in found:
                    found.add(c)
                    frontier.append(c)
    return sorted(found, key=lambda s: (len(s), s))


def is_l_subgyrogroup(g, members):
    """True iff gyr[a, h](H) = H for all a in G and h in H."""
    if not is_subgyrogroup(g, members):
        return False
    h = np.array(sorted(int(x) for x in members))
    for a in range(g.order):
        for x in h:
            if not np.array_equal(np.sort(g.gyr[a, x][h]), h):
                return False
    return True


@dataclass(frozen=True)
class CosetPartition:
    """Left cosets a+H of a subgyrogroup, with partition bookkeeping.

    For an L-subgyrogroup the cosets are pairwise disjoint, cover G and all
    have size |H|; otherwise ``overlaps`` lists witness triples
    (coset_i, coset_j, shared_element).
    """

    subgroup: tuple
    cosets: tuple
    representatives: tuple
    index: int
    is_partition: bool
    equal_sizes: bool
    overlaps: tuple = field(default=())
    coset_of: tuple | None = None

    def index_formula_holds(self, order):
        return self.is_partition and self.equal_sizes and \
            order == self.index * len(self.subgroup)


def left_cosets(g, members):
    """The coset space G/H as a CosetPartition (H must be a subgyrogroup)."""
    if not is_subgyrogroup(g, members):
        raise ValueError(f"{tuple(members)} is not a subgyrogroup")
    h = sorted(int(x) for x in members)
    seen = {}
    cosets = []
    reps = []
    for a in range(g.order):
        c = tuple(sorted(g.oplus(a, x) for x in h))
        if c not in seen:
            seen[c] = len(cosets)
            cosets.append(c)
            reps.append(a)
    overlaps = []
    hit = {}
    for i, c in enumerate(cosets):
        for x in c:
            if x in hit and len(overlaps) < MAX_WITNESSES:
                overlaps.append((hit[x], i, x))
            hit.setdefault(x, i)
    is_partition = not overlaps and len(hit) == g.order
    equal = all(len(c) == len(h) for c in cosets)
    coset_of = None
    if is_partition:
        coset_of = tuple(hit[x] for x in range(g.order))
    return CosetPartition(subgroup=tuple(h), cosets=tuple(cosets),
                          representatives=tuple(reps), index=len(cosets),
                          is_partition=is_partition, equal_sizes=equal,
                          overlaps=tuple(overlaps), coset_of=coset_of)
