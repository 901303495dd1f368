"""Subfield and frame templates: block-structure predicates on matrices,
realization of the matroids they prescribe, bounded enumeration, and
membership testing.

A template constrains a matrix A in F^(B x (E-B)) block by block; the
matroid it realizes is M([I,A]) after the prescribed contraction and
deletion.  Both conformance predicates decompose per column, which the
checkers exploit: each free column is classified independently, and the
existential witness column set Z is recovered in closed form.

Membership testing must quantify over all conforming matrices of the
right size.  Rows outside the template's named sets are interchangeable
(permuting them only relabels the realized matroid), so the search
enumerates them canonically: row choices in non-decreasing order for
subfield templates, first-use order within equal-choice groups for frame
templates, with rank and simplicity pruning against the target whenever
no contraction is involved.
"""

from dataclasses import dataclass
from itertools import combinations_with_replacement, product

from .errors import BadAssignment, CapExceeded, LabelClash, NotConforming
from .field import FiniteField, MultSubgroup, SubfieldEmbedding, make_field
from .linalg import Matrix, Subspace, label_key, rref_rows, sort_labels
from .matroid import (
    ReprMatroid,
    equivalent_up_to_relabel_scaling,
    from_generator,
    minor,
)

DEFAULT_ENUM_CAP = 200000


# ---------------------------------------------------------------------------
# additive groups closed under a multiplicative subgroup
# ---------------------------------------------------------------------------

class AdditiveSpan:
    """All prime-subfield linear combinations of generator vectors in F^E.

    This is an additive group, not necessarily an F-subspace; frame
    templates need exactly that.  Membership reduces each coordinate to
    its base-p digit vector and echelonizes over GF(p).
    """

    def __init__(self, field: FiniteField, ambient, generators):
        self.field = field
        self.ambient = sort_labels(ambient)
        self.prime = make_field(field.p, 1)
        flat = [self._flatten(g) for g in generators]
        self.basis, _ = rref_rows(self.prime, flat) if flat else ([], [])

    def _flatten(self, vec):
        p, k = self.field.p, self.field.k
        out = []
        for x in vec:
            for _ in range(k):
                out.append(x % p)
                x //= p
        return out

    def _unflatten(self, flat):
        p, k = self.field.p, self.field.k
        out = []
        for i in range(len(self.ambient)):
            code = 0
            for d in reversed(flat[i * k:(i + 1) * k]):
                code = code * p + d
            out.append(code)
        return tuple(out)

    @property
    def dim(self):
        return len(self.basis)

    @property
    def size(self):
        return self.field.p ** self.dim

    def contains(self, vec):
        if len(vec) != len(self.ambient):
            return False
        v = list(self._flatten(vec))
        P = self.prime
        for row in self.basis:
            pcol = next(i for i, x in enumerate(row) if x)
            if v[pcol]:
                f = P.neg(v[pcol])
                v = [P.add(x, P.mul(f, y)) for x, y in zip(v, row)]
        return not any(v)

    def elements(self):
        """All members, deterministic order (coefficient lex order)."""
        P = self.prime
        out = [tuple([0] * (len(self.ambient) * self.field.k))]
        for row in self.basis:
            out = [tuple(P.add(x, P.mul(s, y)) for x, y in zip(v, row))
                   for v in out for s in P.elements()]
        return [self._unflatten(list(v)) for v in out]

    def closed_under(self, gamma: MultSubgroup) -> bool:
        F = self.field
        for g in gamma.elements:
            for row in self.basis:
                vec = self._unflatten(list(row))
                scaled = tuple(F.mul(g, x) for x in vec)
                if not self.contains(scaled):
                    return False
        return True

    def __eq__(self, other):
        return (isinstance(other, AdditiveSpan)
                and (self.field, self.ambient, tuple(self.basis))
                == (other.field, other.ambient, tuple(other.basis)))

    def __hash__(self):
        return hash((self.field, self.ambient, tuple(self.basis)))


# ---------------------------------------------------------------------------
# template types
# ---------------------------------------------------------------------------

def _require_disjoint(*named):
    seen = {}
    for name, labels in named:
        for lbl in labels:
            if lbl in seen:
                raise LabelClash(f"label {lbl!r} appears in both {seen[lbl]} and {name}")
            seen[lbl] = name


@dataclass(frozen=True)
class SubfieldTemplate:
    """(F0, C, D, Y, A1, A2, Delta, Lambda): prescribes matrices whose
    realized matroid is M([I,A]) / C \\ D."""

    emb: SubfieldEmbedding          # F0 -> F
    C: tuple
    D: tuple
    Y: tuple
    A1: Matrix                      # over F, rows D x cols C
    A2: Matrix                      # over F with entries in the image of F0
    lam: Subspace                   # over F0, ambient D
    delta: Subspace                 # over F0, ambient C + Y

    def __post_init__(self):
        _require_disjoint(("C", self.C), ("D", self.D), ("Y", self.Y))
        F = self.field
        if self.A1.field != F or self.A2.field != F:
            raise LabelClash("template blocks must live over the parent field")
        if set(self.A1.rows) != set(self.D) or set(self.A1.cols) != set(self.C):
            raise LabelClash("A1 must be indexed by D x C")
        if set(self.A2.rows) != set(self.D) or set(self.A2.cols) != set(self.Y):
            raise LabelClash("A2 must be indexed by D x Y")
        img = self.emb.image()
        if any(x not in img for row in self.A2.data for x in row):
            raise LabelClash("A2 entries must lie in the subfield")
        if self.lam.field != self.emb.sub or self.lam.ambient != sort_labels(self.D):
            raise LabelClash("Lambda must be an F0-subspace of F0^D")
        want = sort_labels(tuple(self.C) + tuple(self.Y))
        if self.delta.field != self.emb.sub or self.delta.ambient != want:
            raise LabelClash("Delta must be an F0-subspace of F0^(C+Y)")

    @property
    def field(self):
        return self.emb.parent

    @classmethod
    def empty(cls, F: FiniteField):
        """All sets empty and F0 = F: everything conforms."""
        emb = SubfieldEmbedding(F, F, tuple(F.elements()))
        nil = Matrix(F, (), (), [])
        triv = Subspace(F, (), [])
        return cls(emb, (), (), (), nil, nil, triv, triv)


@dataclass(frozen=True)
class FrameTemplate:
    """(Gamma, C, D, X, Y0, Y1, A1, Delta, Lambda): prescribes matrices
    whose realized matroid is M([I,A]) / C \\ ((B-X) + Y1)."""

    gamma: MultSubgroup
    C: tuple
    D: tuple
    X: tuple
    Y0: tuple
    Y1: tuple
    A1: Matrix                      # rows D+X, cols C+Y0+Y1
    lam: AdditiveSpan               # subgroup of F^D, Gamma-closed
    delta: AdditiveSpan             # subgroup of F^(C+Y0+Y1), Gamma-closed

    def __post_init__(self):
        _require_disjoint(("C", self.C), ("D", self.D), ("X", self.X),
                          ("Y0", self.Y0), ("Y1", self.Y1))
        F = self.field
        if self.A1.field != F:
            raise LabelClash("A1 must live over the template field")
        if set(self.A1.rows) != set(self.D) | set(self.X):
            raise LabelClash("A1 rows must be D + X")
        if set(self.A1.cols) != set(self.C) | set(self.Y0) | set(self.Y1):
            raise LabelClash("A1 cols must be C + Y0 + Y1")
        if self.lam.field != F or self.lam.ambient != sort_labels(self.D):
            raise LabelClash("Lambda must sit inside F^D")
        want = sort_labels(tuple(self.C) + tuple(self.Y0) + tuple(self.Y1))
        if self.delta.field != F or self.delta.ambient != want:
            raise LabelClash("Delta must sit inside F^(C+Y0+Y1)")
        if not self.lam.closed_under(self.gamma):
            raise LabelClash("Lambda is not closed under Gamma-scaling")
        if not self.delta.closed_under(self.gamma):
            raise LabelClash("Delta is not closed under Gamma-scaling")

    @property
    def field(self):
        return self.gamma.field

    @classmethod
    def trivial(cls, gamma: MultSubgroup):
        """All label sets empty: conforming matrices are exactly the
        Gamma-frame matrices."""
        F = gamma.field
        nil = Matrix(F, (), (), [])
        return cls(gamma, (), (), (), (), (), nil,
                   AdditiveSpan(F, (), []), AdditiveSpan(F, (), []))


@dataclass(frozen=True)
class ConformanceReport:
    ok: bool
    violated: str | None = None
    Z: tuple | None = None
    assignment: dict | None = None


# ---------------------------------------------------------------------------
# subfield conformance
# ---------------------------------------------------------------------------

def _embedded_back(emb, x):
    """Parent code -> subfield code, or None if outside the image."""
    try:
        return emb.fwd.index(x)
    except ValueError:
        return None


def check_subfield(A: Matrix, tmpl: SubfieldTemplate) -> ConformanceReport:
    """Clause-by-clause conformance of A (rows are B, columns are E-B)."""
    B = A.rows
    emb = tmpl.emb
    if not set(tmpl.D) <= set(B):
        raise LabelClash("template set D must be a subset of the row labels")
    if not (set(tmpl.C) | set(tmpl.Y)) <= set(A.cols):
        raise LabelClash("template sets C and Y must be column labels")
    img = emb.image()
    free = [c for c in A.cols if c not in set(tmpl.C) | set(tmpl.Y)]
    rest_rows = [r for r in B if r not in set(tmpl.D)]
    # clause ii: fixed blocks, and F0 entries everywhere outside A[D, C]
    for r in tmpl.D:
        for c in tmpl.C:
            if A.entry(r, c) != tmpl.A1.entry(r, c):
                return ConformanceReport(False, "clause-ii")
        for c in tmpl.Y:
            if A.entry(r, c) != tmpl.A2.entry(r, c):
                return ConformanceReport(False, "clause-ii")
    for r in B:
        for c in A.cols:
            if r in set(tmpl.D) and c in set(tmpl.C):
                continue
            if A.entry(r, c) not in img:
                return ConformanceReport(False, "clause-ii")
    # clause iii: columns of A[D, free] lie in Lambda
    Dsorted = sort_labels(tmpl.D)
    for c in free:
        col = [_embedded_back(emb, A.entry(r, c)) for r in Dsorted]
        if not tmpl.lam.contains(col):
            return ConformanceReport(False, "clause-iii")
    # clause iv: rows of A[B-D, C+Y] lie in Delta
    CY = sort_labels(tuple(tmpl.C) + tuple(tmpl.Y))
    for r in rest_rows:
        row = [_embedded_back(emb, A.entry(r, c)) for c in CY]
        if not tmpl.delta.contains(row):
            return ConformanceReport(False, "clause-iv")
    return ConformanceReport(True)


def conforms_subfield(A: Matrix, tmpl: SubfieldTemplate) -> bool:
    return check_subfield(A, tmpl).ok


def subfield_matroid_of(A: Matrix, tmpl: SubfieldTemplate) -> ReprMatroid:
    """M([I,A]) / C \\ D for a conforming A."""
    report = check_subfield(A, tmpl)
    if not report.ok:
        raise NotConforming(f"matrix violates {report.violated}")
    return _realize(A, tmpl.C, tmpl.D)


def _realize(A: Matrix, contract_set, delete_set) -> ReprMatroid:
    if set(A.rows) & set(A.cols):
        raise LabelClash("row labels must be disjoint from column labels")
    full = Matrix.identity(A.field, A.rows).hstack(A)
    return minor(from_generator(full), contract_set, delete_set)


# ---------------------------------------------------------------------------
# frame conformance
# ---------------------------------------------------------------------------

def _is_gamma_frame_column(F, gamma, col):
    nz = [x for x in col if x]
    if len(nz) > 2:
        return False
    if len(nz) == 1:
        return nz[0] == 1
    if len(nz) == 2:
        v1, v2 = nz
        return (v1 == 1 and F.neg(v2) in gamma) or (v2 == 1 and F.neg(v1) in gamma)
    return True


def _is_unit_column(col):
    nz = [x for x in col if x]
    return len(nz) == 1 and nz[0] == 1


def _frame_column_classes(A, tmpl, free, bottom_rows, Dsorted):
    """Classify each free column of A' as usable in Z, outside Z, or neither."""
    F = tmpl.field
    z_ok, f_ok = {}, {}
    for c in free:
        dpart = [A.entry(r, c) for r in Dsorted]
        bottom = [A.entry(r, c) for r in bottom_rows]
        z_ok[c] = not any(dpart) and _is_unit_column(bottom)
        f_ok[c] = tmpl.lam.contains(dpart) and _is_gamma_frame_column(F, tmpl.gamma, bottom)
    return z_ok, f_ok


def _lex_least_Z(forced, optional):
    """Least valid Z in sorted-tuple order: all forced columns plus every
    optional column below the largest forced one."""
    if not forced:
        return ()
    top = max(label_key(x) for x in forced)
    z = list(forced) + [o for o in optional if label_key(o) < top]
    return sort_labels(z)


def check_frame_respects(A: Matrix, tmpl: FrameTemplate) -> ConformanceReport:
    B = A.rows
    named_rows = set(tmpl.D) | set(tmpl.X)
    named_cols = set(tmpl.C) | set(tmpl.Y0) | set(tmpl.Y1)
    if not named_rows <= set(B):
        raise LabelClash("template sets D and X must be row labels")
    if not named_cols <= set(A.cols):
        raise LabelClash("template sets C, Y0, Y1 must be column labels")
    free = [c for c in A.cols if c not in named_cols]
    bottom_rows = [r for r in B if r not in named_rows]
    Dsorted = sort_labels(tmpl.D)
    # clause ii: the A1 block, and zero X-rows outside it
    for r in tuple(tmpl.D) + tuple(tmpl.X):
        for c in named_cols:
            if A.entry(r, c) != tmpl.A1.entry(r, c):
                return ConformanceReport(False, "clause-ii")
    for r in tmpl.X:
        for c in free:
            if A.entry(r, c):
                return ConformanceReport(False, "clause-ii")
    # clauses iii and iv, column by column
    z_ok, f_ok = _frame_column_classes(A, tmpl, free, bottom_rows, Dsorted)
    forced, optional = [], []
    for c in free:
        if z_ok[c] and f_ok[c]:
            optional.append(c)
        elif z_ok[c]:
            forced.append(c)
        elif not f_ok[c]:
            bottom = [A.entry(r, c) for r in bottom_rows]
            good_bottom = _is_gamma_frame_column(tmpl.field, tmpl.gamma, bottom)
            return ConformanceReport(False, "clause-iv" if good_bottom else "clause-iii")
    # clause v: rows of A'[B-(D+X), C+Y0+Y1] lie in Delta
    CY = sort_labels(tuple(tmpl.C) + tuple(tmpl.Y0) + tuple(tmpl.Y1))
    for r in bottom_rows:
        row = [A.entry(r, c) for c in CY]
        if not tmpl.delta.contains(row):
            return ConformanceReport(False, "clause-v")
    return ConformanceReport(True, Z=_lex_least_Z(forced, optional))


def respects_frame(A: Matrix, tmpl: FrameTemplate):
    """(respects?, lexicographically least witness Z or None)."""
    report = check_frame_respects(A, tmpl)
    return report.ok, report.Z


def conform_frame(A_prime: Matrix, Z, assignment: dict) -> Matrix:
    """Add the assigned Y1 column onto each Z column of A'."""
    F = A_prime.field
    Z = tuple(Z)
    if set(assignment) != set(Z):
        raise BadAssignment("assignment must cover exactly the Z columns")
    for z, j in assignment.items():
        if j not in A_prime.cols:
            raise BadAssignment(f"assigned column {j!r} does not exist")
    data = []
    zset = set(Z)
    for ri, r in enumerate(A_prime.rows):
        row = []
        for c in A_prime.cols:
            x = A_prime.entry(r, c)
            if c in zset:
                x = F.add(x, A_prime.entry(r, assignment[c]))
            row.append(x)
        data.append(row)
    return Matrix(F, A_prime.rows, A_prime.cols, data)


def check_frame_conforms(A: Matrix, tmpl: FrameTemplate) -> ConformanceReport:
    """Conformance of A itself: does some A' respecting the template, with
    witness Z and a Y1-assignment, produce A?  A' can only differ from A
    on Z columns, where A' = A minus the assigned Y1 column, so the
    search is per column."""
    B = A.rows
    named_rows = set(tmpl.D) | set(tmpl.X)
    named_cols = set(tmpl.C) | set(tmpl.Y0) | set(tmpl.Y1)
    if not named_rows <= set(B):
        raise LabelClash("template sets D and X must be row labels")
    if not named_cols <= set(A.cols):
        raise LabelClash("template sets C, Y0, Y1 must be column labels")
    F = tmpl.field
    free = [c for c in A.cols if c not in named_cols]
    bottom_rows = [r for r in B if r not in named_rows]
    Dsorted = sort_labels(tmpl.D)
    for r in tuple(tmpl.D) + tuple(tmpl.X):
        for c in named_cols:
            if A.entry(r, c) != tmpl.A1.entry(r, c):
                return ConformanceReport(False, "clause-ii")
    CY = sort_labels(tuple(tmpl.C) + tuple(tmpl.Y0) + tuple(tmpl.Y1))
    for r in bottom_rows:
        row = [A.entry(r, c) for c in CY]
        if not tmpl.delta.contains(row):
            return ConformanceReport(False, "clause-v")
    Z, assignment = [], {}
    for c in free:
        dpart = [A.entry(r, c) for r in Dsorted]
        xpart = [A.entry(r, c) for r in tmpl.X]
        bottom = [A.entry(r, c) for r in bottom_rows]
        if (not any(xpart) and tmpl.lam.contains(dpart)
                and _is_gamma_frame_column(F, tmpl.gamma, bottom)):
            continue  # usable as a non-Z column of A' directly
        placed = False
        for j in sort_labels(tmpl.Y1):
            dp = [F.sub(x, A.entry(r, j)) for x, r in zip(dpart, Dsorted)]
            xp = [F.sub(x, A.entry(r, j)) for x, r in zip(xpart, tmpl.X)]
            bt = [F.sub(x, A.entry(r, j)) for x, r in zip(bottom, bottom_rows)]
            if not any(dp) and not any(xp) and _is_unit_column(bt):
                Z.append(c)
                assignment[c] = j
                placed = True
                break
        if not placed:
            return ConformanceReport(False, "clause-iii")
    return ConformanceReport(True, Z=tuple(Z), assignment=assignment)


def conforms_frame(A: Matrix, tmpl: FrameTemplate) -> bool:
    return check_frame_conforms(A, tmpl).ok


def frame_matroid_of(A: Matrix, tmpl: FrameTemplate) -> ReprMatroid:
    """M([I,A]) / C \\ ((B-X) + Y1) for a conforming A."""
    report = check_frame_conforms(A, tmpl)
    if not report.ok:
        raise NotConforming(f"matrix violates {report.violated}")
    B = A.rows
    delete_set = [r for r in B if r not in set(tmpl.X)] + list(tmpl.Y1)
    return _realize(A, tmpl.C, delete_set)


# ---------------------------------------------------------------------------
# bounded enumeration of conforming matroids
# ---------------------------------------------------------------------------

def _row_labels(tmpl, extra_rows):
    named = tuple(tmpl.D) + (tuple(tmpl.X) if isinstance(tmpl, FrameTemplate) else ())
    return named + tuple(f"b{i:02d}" for i in range(extra_rows))


def _col_labels(tmpl, free_cols):
    if isinstance(tmpl, FrameTemplate):
        named = tuple(tmpl.C) + tuple(tmpl.Y0) + tuple(tmpl.Y1)
    else:
        named = tuple(tmpl.C) + tuple(tmpl.Y)
    return named + tuple(f"e{i:02d}" for i in range(free_cols))


def enumerate_conforming(tmpl, extra_rows, free_cols, cap=DEFAULT_ENUM_CAP):
    """All conforming matroids at the given size, duplicate-free (by
    structural equality) in enumeration order.

    extra_rows counts the rows of B beyond the template's named rows and
    free_cols the columns beyond its named columns.
    """
    if isinstance(tmpl, SubfieldTemplate):
        yield from _enumerate_subfield(tmpl, extra_rows, free_cols, cap)
    else:
        yield from _enumerate_frame(tmpl, extra_rows, free_cols, cap)


def _enumerate_subfield(tmpl, extra_rows, free_cols, cap):
    F = tmpl.field
    emb = tmpl.emb
    rows = _row_labels(tmpl, extra_rows)
    cols = _col_labels(tmpl, free_cols)
    anon = rows[len(tmpl.D):]
    free = cols[len(tmpl.C) + len(tmpl.Y):]
    lam_elems = [[emb.embed(x) for x in v] for v in tmpl.lam.vectors()]
    delta_elems = [[emb.embed(x) for x in v] for v in tmpl.delta.vectors()]
    img = sorted(emb.image())
    total = (len(lam_elems) ** len(free)
             * (len(delta_elems) * len(img) ** len(free)) ** len(anon))
    if total > cap:
        raise CapExceeded(f"{total} conforming matrices exceeds cap {cap}")
    Dsorted = sort_labels(tmpl.D)
    CY = sort_labels(tuple(tmpl.C) + tuple(tmpl.Y))
    seen = set()
    for lam_pick in product(range(len(lam_elems)), repeat=len(free)):
        for row_picks in product(
                product(range(len(delta_elems)), product(img, repeat=len(free))),
                repeat=len(anon)):
            data = []
            for r in rows:
                row = []
                if r in set(tmpl.D):
                    for c in cols:
                        if c in set(tmpl.C):
                            row.append(tmpl.A1.entry(r, c))
                        elif c in set(tmpl.Y):
                            row.append(tmpl.A2.entry(r, c))
                        else:
                            lam_vec = lam_elems[lam_pick[free.index(c)]]
                            row.append(lam_vec[Dsorted.index(r)])
                else:
                    d_idx, entries = row_picks[anon.index(r)]
                    for c in cols:
                        if c in set(tmpl.C) or c in set(tmpl.Y):
                            row.append(delta_elems[d_idx][CY.index(c)])
                        else:
                            row.append(entries[free.index(c)])
                data.append(row)
            A = Matrix(F, rows, cols, data)
            M = subfield_matroid_of(A, tmpl)
            key = (M.ground, M.space.basis)
            if key not in seen:
                seen.add(key)
                yield M


def _frame_bottom_options(F, gamma, n_rows):
    """All Gamma-frame columns on n_rows rows: zero, units, then pairs."""
    out = [tuple([0] * n_rows)]
    for i in range(n_rows):
        col = [0] * n_rows
        col[i] = 1
        out.append(tuple(col))
    seen = set(out)
    for i in range(n_rows):
        for j in range(n_rows):
            if i == j:
                continue
            for g in sorted(gamma.elements):
                col = [0] * n_rows
                col[i] = 1
                col[j] = F.neg(g)
                t = tuple(col)
                if t not in seen:
                    seen.add(t)
                    out.append(t)
    return out


def _enumerate_frame(tmpl, extra_rows, free_cols, cap):
    F = tmpl.field
    rows = _row_labels(tmpl, extra_rows)
    cols = _col_labels(tmpl, free_cols)
    anon = rows[len(tmpl.D) + len(tmpl.X):]
    named_cols = tuple(tmpl.C) + tuple(tmpl.Y0) + tuple(tmpl.Y1)
    free = cols[len(named_cols):]
    delta_elems = tmpl.delta.elements()
    lam_elems = tmpl.lam.elements()
    bottoms = _frame_bottom_options(F, tmpl.gamma, len(anon))
    per_col = len(lam_elems) * len(bottoms) + len(anon) * len(tmpl.Y1)
    total = len(delta_elems) ** len(anon) * per_col ** len(free)
    if total > cap:
        raise CapExceeded(f"{total} conforming matrices exceeds cap {cap}")
    Dsorted = sort_labels(tmpl.D)
    CY = sort_labels(named_cols)
    col_options = []
    for lam_vec in lam_elems:
        for bottom in bottoms:
            col_options.append(("f", lam_vec, bottom))
    for i in range(len(anon)):
        for j in sort_labels(tmpl.Y1):
            col_options.append(("z", i, j))
    seen = set()
    for delta_pick in product(range(len(delta_elems)), repeat=len(anon)):
        named_col_of = {}
        for c in named_cols:
            top = [tmpl.A1.entry(r, c) for r in tuple(tmpl.D) + tuple(tmpl.X)]
            bottom = [delta_elems[delta_pick[i]][CY.index(c)]
                      for i in range(len(anon))]
            named_col_of[c] = top + bottom
        for picks in product(col_options, repeat=len(free)):
            colvecs = {}
            for c, pick in zip(free, picks):
                if pick[0] == "f":
                    _, lam_vec, bottom = pick
                    top = []
                    for r in tuple(tmpl.D) + tuple(tmpl.X):
                        if r in set(tmpl.D):
                            top.append(lam_vec[Dsorted.index(r)])
                        else:
                            top.append(0)
                    colvecs[c] = list(top) + list(bottom)
                else:
                    _, i, j = pick
                    base = [0] * (len(tmpl.D) + len(tmpl.X) + len(anon))
                    base[len(tmpl.D) + len(tmpl.X) + i] = 1
                    colvecs[c] = [F.add(x, y)
                                  for x, y in zip(base, named_col_of[j])]
            for c in named_cols:
                colvecs[c] = named_col_of[c]
            data = [[colvecs[c][ri] for c in cols] for ri in range(len(rows))]
            A = Matrix(F, rows, cols, data)
            M = frame_matroid_of(A, tmpl)
            key = (M.ground, M.space.basis)
            if key not in seen:
                seen.add(key)
                yield M


# ---------------------------------------------------------------------------
# membership
# ---------------------------------------------------------------------------

def member_of(tmpl, M: ReprMatroid, row_cap=None, cap=DEFAULT_ENUM_CAP) -> bool:
    """Does M, up to a label bijection and a projective transformation,
    arise from a matrix conforming to the template?"""
    if M.field != tmpl.field:
        return False
    if isinstance(tmpl, SubfieldTemplate):
        return _member_subfield(tmpl, M, row_cap, cap)
    return _member_frame(tmpl, M, row_cap, cap)


def _member_subfield(tmpl, M, row_cap, cap):
    n, r = M.size, M.rank
    emb = tmpl.emb
    lam_elems = [tuple(emb.embed(x) for x in v) for v in tmpl.lam.vectors()]
    delta_elems = [tuple(emb.embed(x) for x in v) for v in tmpl.delta.vectors()]
    img = sorted(emb.image())
    b_max = r + len(tmpl.C) if row_cap is None else row_cap
    Dsorted = sort_labels(tmpl.D)
    CY = sort_labels(tuple(tmpl.C) + tuple(tmpl.Y))
    checked = set()
    for b in range(0, b_max + 1):
        f = n - b - len(tmpl.Y)
        if f < 0:
            continue
        rows = _row_labels(tmpl, b)
        cols = _col_labels(tmpl, f)
        anon = rows[len(tmpl.D):]
        free = cols[len(tmpl.C) + len(tmpl.Y):]
        from math import comb

        n_opts = len(delta_elems) * len(img) ** f
        combos = len(lam_elems) ** f * (comb(n_opts + b - 1, b) if b else 1)
        if combos > cap:
            raise CapExceeded(f"membership search size {combos} exceeds cap {cap}")
        row_opts = [(d, entries)
                    for d in range(len(delta_elems))
                    for entries in product(img, repeat=f)]
        for lam_pick in product(range(len(lam_elems)), repeat=f):
            for picked in combinations_with_replacement(range(len(row_opts)), b):
                data = []
                for r_lbl in rows:
                    row = []
                    if r_lbl in set(tmpl.D):
                        for c in cols:
                            if c in set(tmpl.C):
                                row.append(tmpl.A1.entry(r_lbl, c))
                            elif c in set(tmpl.Y):
                                row.append(tmpl.A2.entry(r_lbl, c))
                            else:
                                vec = lam_elems[lam_pick[free.index(c)]]
                                row.append(vec[Dsorted.index(r_lbl)])
                    else:
                        d_idx, entries = row_opts[picked[anon.index(r_lbl)]]
                        for c in cols:
                            if c in set(tmpl.C) or c in set(tmpl.Y):
                                row.append(delta_elems[d_idx][CY.index(c)])
                            else:
                                row.append(entries[free.index(c)])
                    data.append(row)
                A = Matrix(tmpl.field, rows, cols, data)
                N = subfield_matroid_of(A, tmpl)
                if N.size != n or N.rank != r:
                    continue
                key = (N.ground, N.space.basis)
                if key in checked:
                    continue
                checked.add(key)
                if equivalent_up_to_relabel_scaling(N, M):
                    return True
    return False


def _member_frame(tmpl, M, row_cap, cap):
    """Canonical column-by-column search over conforming matrices.

    Anonymous rows with equal Delta choices are interchangeable, so each
    is first touched in index order.  When the template contracts nothing
    (C empty), surviving columns restrict the final matroid, which allows
    rank and simplicity pruning against the target.
    """
    F = tmpl.field
    n, r_target = M.size, M.rank
    f = n - len(tmpl.X) - len(tmpl.Y0)
    if f < 0:
        return False
    delta_elems = tmpl.delta.elements()
    lam_elems = tmpl.lam.elements()
    prune_ok = len(tmpl.C) == 0
    simple_target = prune_ok and _matroid_is_simple(M)
    b_max = 2 * f + len(delta_elems) if row_cap is None else row_cap
    budget = [cap]
    for b in range(0, b_max + 1):
        if _member_frame_at_rows(tmpl, M, b, f, delta_elems, lam_elems,
                                 prune_ok, simple_target, r_target, budget):
            return True
    return False


def _matroid_is_simple(M):
    from .matroid import is_simple

    return is_simple(M)


def _member_frame_at_rows(tmpl, M, b, f, delta_elems, lam_elems,
                          prune_ok, simple_target, r_target, budget):
    F = tmpl.field
    rows = _row_labels(tmpl, b)
    cols = _col_labels(tmpl, f)
    named_rows = tuple(tmpl.D) + tuple(tmpl.X)
    named_cols = tuple(tmpl.C) + tuple(tmpl.Y0) + tuple(tmpl.Y1)
    anon = rows[len(named_rows):]
    free = cols[len(named_cols):]
    CY = sort_labels(named_cols)
    Dsorted = sort_labels(tmpl.D)
    nD, nX = len(tmpl.D), len(tmpl.X)
    survivors_named = tuple(tmpl.X) + tuple(tmpl.Y0)
    checked = set()

    add, mul, neg, inv = F.add, F.mul, F.neg, F.inv

    def reduce_against(ech, v):
        v = list(v)
        for p, row in ech:
            if v[p]:
                fct = neg(v[p])
                v = [add(x, mul(fct, y)) for x, y in zip(v, row)]
        for p in range(len(v)):
            if v[p]:
                ia = inv(v[p])
                return p, tuple(mul(ia, x) for x in v)
        return None

    def norm_key(v):
        lead = next((x for x in v if x), None)
        if lead is None:
            return None
        ia = inv(lead)
        return tuple(mul(ia, x) for x in v)

    for delta_pick in combinations_with_replacement(range(len(delta_elems)), b):
        # group structure: rows with equal Delta choices are interchangeable
        named_col_of = {}
        for c in named_cols:
            top = [tmpl.A1.entry(r, c) for r in named_rows]
            bottom = [delta_elems[delta_pick[i]][CY.index(c)] for i in range(b)]
            named_col_of[c] = tuple(top + bottom)
        # initial survivor columns: identity columns of X, then Y0 columns
        ech = []
        keys = set()
        ok = True
        init_cols = []
        for x in tmpl.X:
            v = [0] * (nD + nX + b)
            v[named_rows.index(x)] = 1
            init_cols.append(tuple(v))
        for y in tmpl.Y0:
            init_cols.append(named_col_of[y])
        for v in init_cols:
            red = reduce_against(ech, v)
            if red is not None:
                ech = ech + [red]
            if simple_target:
                k = norm_key(v)
                if k is None or k in keys:
                    ok = False
                    break
                keys.add(k)
        if not ok or (prune_ok and len(ech) > r_target):
            continue

        # column options; options touching a new row must take the first
        # unused row of its Delta-group
        def rec(col_idx, ech, keys, used, chosen):
            budget[0] -= 1
            if budget[0] < 0:
                raise CapExceeded("frame membership search budget exhausted")
            if prune_ok and len(ech) > r_target:
                return False
            if col_idx == f:
                if prune_ok and len(ech) != r_target:
                    return False
                return finish(chosen)
            results = False
            for choice in column_choices(used):
                vec = build_column(choice)
                red = reduce_against(ech, vec)
                new_ech = ech + [red] if red is not None else ech
                if prune_ok and len(new_ech) > r_target:
                    continue
                new_keys = keys
                if simple_target:
                    k = norm_key(vec)
                    if k is None or k in keys:
                        continue
                    new_keys = keys | {k}
                new_used = used | rows_touched(choice)
                if rec(col_idx + 1, new_ech, new_keys, new_used,
                       chosen + [choice]):
                    return True
            return results

        def allowed_rows(used):
            """Used rows plus the first unused row of each Delta-group."""
            out = [i for i in range(b) if i in used]
            seen_groups = set()
            for i in range(b):
                if i in used:
                    continue
                g = delta_pick[i]
                if g not in seen_groups:
                    seen_groups.add(g)
                    out.append(i)
            return sorted(out)

        def column_choices(used):
            rows_ok = allowed_rows(used)
            for lam_vec in lam_elems:
                yield ("f", lam_vec, None)  # zero bottom
                for i in rows_ok:
                    yield ("f", lam_vec, (i,))
                    for j in rows_ok:
                        if i == j:
                            continue
                        for g in sorted(tmpl.gamma.elements):
                            yield ("f", lam_vec, (i, j, g))
            for i in rows_ok:
                for j in sort_labels(tmpl.Y1):
                    yield ("z", i, j)

        def rows_touched(choice):
            if choice[0] == "f":
                spec = choice[2]
                if spec is None:
                    return frozenset()
                return frozenset(spec[:2]) if len(spec) == 3 else frozenset(spec)
            return frozenset([choice[1]])

        def build_column(choice):
            v = [0] * (nD + nX + b)
            if choice[0] == "f":
                _, lam_vec, spec = choice
                for t, d in enumerate(named_rows[:nD]):
                    v[t] = lam_vec[Dsorted.index(d)]
                if spec is not None:
                    if len(spec) == 3:
                        i, j, g = spec
                        v[nD + nX + i] = 1
                        v[nD + nX + j] = neg(g)
                    else:
                        v[nD + nX + spec[0]] = 1
            else:
                _, i, j = choice
                v[nD + nX + i] = 1
                v = [add(x, y) for x, y in zip(v, named_col_of[j])]
            return tuple(v)

        def finish(chosen):
            colvecs = dict(named_col_of)
            for c, choice in zip(free, chosen):
                colvecs[c] = build_column(choice)
            data = [[colvecs[c][ri] for c in cols] for ri in range(len(rows))]
            A = Matrix(F, rows, cols, data)
            N = frame_matroid_of(A, tmpl)
            if N.size != M.size or N.rank != M.rank:
                return False
            key = (N.ground, N.space.basis)
            if key in checked:
                return False
            checked.add(key)
            return equivalent_up_to_relabel_scaling(N, M)

        if rec(0, ech, keys, frozenset(), []):
            return True
    return False
