"""Elementary projections and lifts, the lattice distance between
represented matroids on a common ground set, and rank perturbations.

Projections of M = (E, U) are exactly the (E, U') with U' a subspace of
U of codimension at most one, and lifts are the superspaces of dimension
at most one more; this lattice characterization is validated against the
definitional add-an-element-then-contract enumeration in the tests.
Distance is a breadth-first search in the subspace lattice.

pert_exact reduces the minimum of rank(A1 - A2) over aligned generator
matrices to a search over difference row spaces: a subspace V of U1+U2
works iff U1 <= U2 + V and U2 <= U1 + V (any valid pair of matrices has
such a V of dimension rank(A1 - A2); conversely pairing bases through V
achieves dim V at row count dim U1 + dim U2).  pert_exact_tiny keeps the
literal enumeration over coefficient matrices as a cross-check.
"""

from dataclasses import dataclass
from itertools import product

from .errors import CapExceeded, LabelMismatch, ShapeMismatch
from .linalg import (
    Matrix,
    Subspace,
    enumerate_subspaces,
    null_space_rows,
    rref_rows,
    sum_spaces,
)
from .matroid import ReprMatroid

DEFAULT_LATTICE_CAP = 5000
DEFAULT_PAIR_CAP = 1 << 20


@dataclass(frozen=True)
class PerturbPair:
    """Two represented matroids on the same ground set and field."""

    m1: ReprMatroid
    m2: ReprMatroid

    def __post_init__(self):
        if self.m1.ground != self.m2.ground:
            raise LabelMismatch("perturbation pair needs equal ground sets")
        if self.m1.field != self.m2.field:
            raise LabelMismatch("perturbation pair needs a common field")

    @property
    def field(self):
        return self.m1.field

    @property
    def ground(self):
        return self.m1.ground


# ---------------------------------------------------------------------------
# elementary projections and lifts
# ---------------------------------------------------------------------------

def elementary_projections(M: ReprMatroid, cap=DEFAULT_LATTICE_CAP):
    """M itself plus every (E, U') with U' a codimension-1 subspace of U."""
    F = M.field
    d = M.rank
    count = (F.q ** d - 1) // (F.q - 1)
    if count > cap:
        raise CapExceeded(f"{count} hyperplanes exceeds cap {cap}")
    out = [M]
    B = M.space.basis
    add, mul = F.add, F.mul
    for code in product(F.elements(), repeat=d):
        lead = next((i for i, x in enumerate(code) if x), None)
        if lead is None or code[lead] != 1:
            continue  # one normalized functional per hyperplane
        kernel = null_space_rows(F, [list(code)], d)
        vecs = []
        for coeff in kernel:
            v = [0] * len(M.ground)
            for ci, row in zip(coeff, B):
                if ci:
                    v = [add(x, mul(ci, y)) for x, y in zip(v, row)]
            vecs.append(v)
        out.append(ReprMatroid(M.ground, Subspace(F, M.ground, vecs)))
    return out


def elementary_lifts(M: ReprMatroid, cap=DEFAULT_LATTICE_CAP):
    """M itself plus every (E, U') with U <= U' of dimension dim U + 1."""
    F = M.field
    n = len(M.ground)
    if F.q ** n > cap:
        raise CapExceeded(f"q^|E| = {F.q ** n} exceeds cap {cap}")
    out = [M]
    seen = {M.space.basis}
    for code in product(F.elements(), repeat=n):
        if M.space.contains(code):
            continue
        sp = Subspace(F, M.ground, list(M.space.basis) + [code])
        if sp.basis not in seen:
            seen.add(sp.basis)
            out.append(ReprMatroid(M.ground, sp))
    return out


# ---------------------------------------------------------------------------
# lattice distance
# ---------------------------------------------------------------------------

def dist(pair: PerturbPair, cap=100000) -> int:
    """Minimum number of elementary projections and lifts from M1 to M2:
    a shortest path in the subspace lattice of F^E, explored lazily by
    breadth-first search (cap bounds the subspaces visited)."""
    F = pair.field
    ground = pair.ground
    start = pair.m1.space.basis
    goal = pair.m2.space.basis
    if start == goal:
        return 0
    seen = {start}
    frontier = [start]
    steps = 0
    while frontier:
        steps += 1
        nxt = []
        for basis in frontier:
            M = ReprMatroid(ground, Subspace(F, ground, list(basis),
                                             _canonical=True))
            for N in elementary_projections(M, cap) + elementary_lifts(M, cap):
                nb = N.space.basis
                if nb == goal:
                    return steps
                if nb not in seen:
                    seen.add(nb)
                    nxt.append(nb)
        if len(seen) > cap:
            raise CapExceeded(f"visited over {cap} subspaces")
        frontier = nxt
    raise AssertionError("subspace lattice is connected")  # unreachable


# ---------------------------------------------------------------------------
# rank perturbations
# ---------------------------------------------------------------------------

def _complement_rows(field, base_rows, space_rows):
    """Rows of `space_rows` extending the echelon of `base_rows` to a basis
    of the larger space."""
    ech, _ = rref_rows(field, base_rows) if base_rows else ([], [])
    out = []
    cur = list(ech)
    for row in space_rows:
        stacked, _ = rref_rows(field, cur + [list(row)])
        if len(stacked) > len(cur):
            out.append(tuple(row))
            cur = stacked
    return out


def pert_bounds(pair: PerturbPair, with_witness=False):
    """(lo, hi): lo from row-space containment, hi from an explicit aligned
    generator construction pairing complements through the intersection.
    With with_witness=True, also returns the achieved difference matrix
    (rows of A1 - A2), whose rank is hi."""
    U1, U2 = pair.m1.space, pair.m2.space
    S = sum_spaces(U1, U2)
    lo = max(S.dim - U2.dim, S.dim - U1.dim)
    A1, A2 = _aligned_generators(pair)
    F = pair.field
    diff = [[F.sub(x, y) for x, y in zip(r1, r2)] for r1, r2 in zip(A1, A2)]
    _, piv = rref_rows(F, diff)
    if with_witness:
        return lo, len(piv), diff
    return lo, len(piv)


def _aligned_generators(pair: PerturbPair):
    """Generator row lists for (m1, m2) with a common row count, pairing a
    shared basis of the intersection first and complements afterwards."""
    from .linalg import intersect_spaces

    F = pair.field
    n = len(pair.ground)
    U1, U2 = pair.m1.space, pair.m2.space
    W = intersect_spaces(U1, U2)
    shared = [list(r) for r in W.basis]
    x_rows = _complement_rows(F, shared, U1.basis)
    y_rows = _complement_rows(F, shared, U2.basis)
    height = max(len(x_rows), len(y_rows))
    zero = [0] * n
    A1 = shared + [list(r) for r in x_rows] + [zero] * (height - len(x_rows))
    A2 = shared + [list(r) for r in y_rows] + [zero] * (height - len(y_rows))
    return A1, A2


def pert_exact(pair: PerturbPair, cap=DEFAULT_LATTICE_CAP) -> int:
    """Exact minimum rank(A1 - A2) via the difference-space reduction."""
    F = pair.field
    U1, U2 = pair.m1.space, pair.m2.space
    if U1 == U2:
        return 0
    S = sum_spaces(U1, U2)
    s = S.dim
    from .linalg import subspace_count

    if subspace_count(F.q, s) > cap:
        raise CapExceeded(f"subspace search in dim {s} exceeds cap {cap}")
    add, mul = F.add, F.mul
    n = len(pair.ground)

    def to_ambient(coeff_rows):
        out = []
        for c in coeff_rows:
            v = [0] * n
            for ci, row in zip(c, S.basis):
                if ci:
                    v = [add(x, mul(ci, y)) for x, y in zip(v, row)]
            out.append(v)
        return out

    for vb in enumerate_subspaces(F, s, cap=cap):  # ascending dimension
        V_rows = to_ambient(vb)
        up2 = Subspace(F, pair.ground, [list(r) for r in U2.basis] + V_rows)
        if not all(up2.contains(r) for r in U1.basis):
            continue
        up1 = Subspace(F, pair.ground, [list(r) for r in U1.basis] + V_rows)
        if all(up1.contains(r) for r in U2.basis):
            return len(vb)
    raise AssertionError("V = U1 + U2 is always feasible")  # unreachable


def pert_exact_tiny(pair: PerturbPair, cap=DEFAULT_PAIR_CAP) -> int:
    """Literal enumeration over generator pairs (T1 B1, T2 B2) at row count
    dim U1 + dim U2, minimizing rank(A1 - A2).  Cross-check oracle only."""
    F = pair.field
    U1, U2 = pair.m1.space, pair.m2.space
    d1, d2 = U1.dim, U2.dim
    m = d1 + d2
    if d1 == 0 or d2 == 0:
        return max(d1, d2)  # zero rows force the other space wholesale

    def full_rank_count(d):
        return _count_full_rank(F.q, m, d)

    if full_rank_count(d1) * full_rank_count(d2) > cap:
        raise CapExceeded("coefficient enumeration exceeds cap")

    def generators(basis, d):
        out = []
        for entries in product(F.elements(), repeat=m * d):
            T = [entries[i * d:(i + 1) * d] for i in range(m)]
            _, piv = rref_rows(F, T)
            if len(piv) != d:
                continue
            rows = []
            for trow in T:
                v = [0] * len(pair.ground)
                for c, brow in zip(trow, basis):
                    if c:
                        v = [F.add(x, F.mul(c, y)) for x, y in zip(v, brow)]
                rows.append(v)
            out.append(rows)
        return out

    best = None
    gens2 = generators(U2.basis, d2)
    for A1 in generators(U1.basis, d1):
        for A2 in gens2:
            diff = [[F.sub(x, y) for x, y in zip(r1, r2)]
                    for r1, r2 in zip(A1, A2)]
            _, piv = rref_rows(F, diff)
            if best is None or len(piv) < best:
                best = len(piv)
                if best == 0:
                    return 0
    return best


def _count_full_rank(q, m, d):
    out = 1
    for i in range(d):
        out *= q ** m - q ** i
    return out


def apply_perturbation(M: ReprMatroid, P: Matrix):
    """M(A + P) for the canonical RREF generator A of M.

    Returns (matroid, rank of P): the perturbation budget consumed.
    """
    if P.field != M.field:
        raise ShapeMismatch("perturbation must live over the matroid's field")
    if set(P.cols) != set(M.ground) or len(P.rows) != M.rank:
        raise ShapeMismatch(
            f"perturbation must be {M.rank} x |E| on the same column labels")
    F = M.field
    order = M.ground
    Psorted = P.submatrix(P.rows, order)
    rows = [[F.add(x, y) for x, y in zip(brow, prow)]
            for brow, prow in zip(M.space.basis, Psorted.data)]
    _, piv = rref_rows(F, Psorted.data)
    return ReprMatroid(order, Subspace(F, order, rows)), len(piv)
