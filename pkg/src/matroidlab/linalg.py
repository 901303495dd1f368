"""Exact linear algebra over finite fields.

Matrices carry label sets for rows and columns rather than positions,
because every downstream object (matroids, templates) indexes by ground
set labels.  A canonical label order (sorted, ints before strings) is
fixed so that reduced row echelon forms, and hence all serialized
output, are deterministic.

The row space of a matrix is held canonically as a Subspace: an RREF
basis over the sorted ambient label set.  Minimum-weight search is an
honest enumeration, organized by coefficient support so that it prunes
to the candidates that can still win.
"""

from concurrent.futures import ThreadPoolExecutor
from itertools import combinations, product

from .errors import CapExceeded, LabelMismatch

DEFAULT_WEIGHT_CAP = 1 << 24


def label_key(label):
    """Total order over labels; ints sort first, everything else by str."""
    if isinstance(label, bool) or not isinstance(label, int):
        return (1, str(label))
    return (0, label)


def sort_labels(labels):
    return tuple(sorted(labels, key=label_key))


# ---------------------------------------------------------------------------
# low-level routines on plain lists of rows
# ---------------------------------------------------------------------------

def rref_rows(field, rows):
    """Reduced row echelon form.  Returns (nonzero rows, pivot col indices)."""
    add, mul, neg, inv = field.add, field.mul, field.neg, field.inv
    work = [list(r) for r in rows]
    m = len(work)
    n = len(work[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        pr = None
        for i in range(r, m):
            if work[i][c]:
                pr = i
                break
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        a = work[r][c]
        if a != 1:
            ia = inv(a)
            work[r] = [mul(ia, x) for x in work[r]]
        rr = work[r]
        for i in range(m):
            if i != r and work[i][c]:
                f = neg(work[i][c])
                wi = work[i]
                work[i] = [add(x, mul(f, y)) for x, y in zip(wi, rr)]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return [tuple(row) for row in work[:r]], pivots


def null_space_rows(field, rows, n):
    """Basis of {x in F^n : M x = 0} for the matrix M with the given rows."""
    red, pivots = rref_rows(field, rows)
    pivset = set(pivots)
    neg = field.neg
    out = []
    for c in range(n):
        if c in pivset:
            continue
        v = [0] * n
        v[c] = 1
        for i, p in enumerate(pivots):
            v[p] = neg(red[i][c])
        out.append(tuple(v))
    return out


def dot(field, u, v):
    add, mul = field.add, field.mul
    acc = 0
    for a, b in zip(u, v):
        if a and b:
            acc = add(acc, mul(a, b))
    return acc


def vec_weight(v):
    return len(v) - v.count(0)


# ---------------------------------------------------------------------------
# labelled matrices
# ---------------------------------------------------------------------------

class Matrix:
    """Dense matrix over a finite field with row/column label sets.

    Construction order of labels is preserved; `data[i][j]` is the entry
    at (rows[i], cols[j]).  Entries are integer field codes.
    """

    __slots__ = ("field", "rows", "cols", "data", "_rindex", "_cindex")

    def __init__(self, field, rows, cols, data):
        rows = tuple(rows)
        cols = tuple(cols)
        if len(set(rows)) != len(rows):
            raise LabelMismatch("duplicate row labels")
        if len(set(cols)) != len(cols):
            raise LabelMismatch("duplicate column labels")
        data = tuple(tuple(int(x) for x in row) for row in data)
        if len(data) != len(rows) or any(len(r) != len(cols) for r in data):
            raise LabelMismatch("data shape does not match label sets")
        q = field.q
        for row in data:
            for x in row:
                if not 0 <= x < q:
                    raise ValueError(f"entry {x} is not a code in {field!r}")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.data = data
        self._rindex = {r: i for i, r in enumerate(rows)}
        self._cindex = {c: j for j, c in enumerate(cols)}

    @classmethod
    def identity(cls, field, labels):
        labels = tuple(labels)
        n = len(labels)
        return cls(field, labels, labels,
                   [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, field, rows, cols):
        rows, cols = tuple(rows), tuple(cols)
        return cls(field, rows, cols, [[0] * len(cols) for _ in rows])

    def entry(self, r, c):
        return self.data[self._rindex[r]][self._cindex[c]]

    def row_vector(self, r):
        return self.data[self._rindex[r]]

    def col_vector(self, c):
        j = self._cindex[c]
        return tuple(row[j] for row in self.data)

    def submatrix(self, rows, cols):
        rows, cols = tuple(rows), tuple(cols)
        ri = [self._rindex[r] for r in rows]
        cj = [self._cindex[c] for c in cols]
        return Matrix(self.field, rows, cols,
                      [[self.data[i][j] for j in cj] for i in ri])

    def transpose(self):
        return Matrix(self.field, self.cols, self.rows,
                      [self.col_vector(c) for c in self.cols])

    def with_sorted_labels(self):
        return self.submatrix(sort_labels(self.rows), sort_labels(self.cols))

    def hstack(self, other):
        if other.field != self.field or other.rows != self.rows:
            raise LabelMismatch("hstack needs identical row labels and field")
        return Matrix(self.field, self.rows, self.cols + other.cols,
                      [a + b for a, b in zip(self.data, other.data)])

    def __eq__(self, other):
        return (isinstance(other, Matrix)
                and (self.field, self.rows, self.cols, self.data)
                == (other.field, other.rows, other.cols, other.data))

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self.data))

    def __repr__(self):
        return f"Matrix({self.field!r}, {len(self.rows)}x{len(self.cols)})"


def rref(A: Matrix):
    """RREF in A's own column order.  Returns (R, rank, pivot labels)."""
    red, piv = rref_rows(A.field, A.data)
    R = Matrix(A.field, tuple(range(len(red))), A.cols, red)
    return R, len(red), tuple(A.cols[j] for j in piv)


def row_space_equal(A: Matrix, B: Matrix) -> bool:
    """True iff A and B generate the same row space (same field and columns)."""
    if A.field != B.field:
        raise LabelMismatch("different fields")
    if set(A.cols) != set(B.cols):
        raise LabelMismatch("different column label sets")
    order = sort_labels(A.cols)
    ra, _ = rref_rows(A.field, A.submatrix(A.rows, order).data)
    rb, _ = rref_rows(B.field, B.submatrix(B.rows, order).data)
    return ra == rb


# ---------------------------------------------------------------------------
# subspaces of F^E
# ---------------------------------------------------------------------------

class Subspace:
    """A subspace of F^E held as an RREF basis over the sorted ambient set."""

    __slots__ = ("field", "ambient", "basis", "pivots", "_index")

    def __init__(self, field, ambient, vectors, _canonical=False):
        ambient = tuple(ambient)
        if len(set(ambient)) != len(ambient):
            raise LabelMismatch("duplicate ambient labels")
        order = sort_labels(ambient)
        if _canonical:
            basis = [tuple(v) for v in vectors]
            _, piv = rref_rows(field, basis) if basis else ([], [])
        else:
            if ambient != order:
                perm = [ambient.index(lbl) for lbl in order]
                vectors = [[v[i] for i in perm] for v in vectors]
            basis, piv = rref_rows(field, vectors)
        self.field = field
        self.ambient = order
        self.basis = tuple(basis)
        self.pivots = tuple(piv)
        self._index = {lbl: i for i, lbl in enumerate(order)}

    @property
    def dim(self):
        return len(self.basis)

    def index(self, label):
        return self._index[label]

    def contains(self, vec, labels=None):
        """Membership test; vec is aligned with `labels` (default: ambient)."""
        if labels is not None:
            aligned = [0] * len(self.ambient)
            for lbl, x in zip(labels, vec):
                aligned[self._index[lbl]] = x
            vec = aligned
        v = list(vec)
        F = self.field
        add, mul, neg = F.add, F.mul, F.neg
        for row, p in zip(self.basis, self.pivots):
            if v[p]:
                f = neg(v[p])
                v = [add(x, mul(f, y)) for x, y in zip(v, row)]
        return not any(v)

    def vectors(self):
        """All q^dim vectors, in deterministic order.  Small spaces only."""
        F = self.field
        add, mul = F.add, F.mul
        out = [tuple([0] * len(self.ambient))]
        for row in self.basis:
            new = []
            for v in out:
                for s in F.elements():
                    new.append(tuple(add(x, mul(s, y)) for x, y in zip(v, row)))
            out = new
        return out

    def basis_matrix(self):
        return Matrix(self.field, tuple(range(self.dim)), self.ambient, self.basis)

    def __eq__(self, other):
        return (isinstance(other, Subspace)
                and (self.field, self.ambient, self.basis)
                == (other.field, other.ambient, other.basis))

    def __hash__(self):
        return hash((self.field, self.ambient, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, |E|={len(self.ambient)}, {self.field!r})"


def subspace_from_matrix(A: Matrix) -> Subspace:
    return Subspace(A.field, A.cols, A.data)


def orth_complement(U: Subspace) -> Subspace:
    """All vectors orthogonal (standard bilinear form) to every vector of U."""
    comp = null_space_rows(U.field, U.basis, len(U.ambient))
    return Subspace(U.field, U.ambient, comp)


def sum_spaces(U: Subspace, V: Subspace) -> Subspace:
    if U.field != V.field or U.ambient != V.ambient:
        raise LabelMismatch("sum needs identical field and ambient set")
    return Subspace(U.field, U.ambient, list(U.basis) + list(V.basis))


def intersect_spaces(U: Subspace, V: Subspace) -> Subspace:
    return orth_complement(sum_spaces(orth_complement(U), orth_complement(V)))


# ---------------------------------------------------------------------------
# minimum Hamming weight of a subspace
# ---------------------------------------------------------------------------

def min_weight(U: Subspace, *, skip_zero=True, cap=DEFAULT_WEIGHT_CAP, workers=1):
    """Minimum Hamming weight over (nonzero) vectors of U, with a witness.

    Returns (None, None) for the zero space.  Enumeration is organized by
    coefficient support size s: any combination of s basis rows has weight
    at least s at the pivot columns, so levels beyond the best weight found
    so far cannot improve and are skipped.  Work is split into tasks keyed
    by (level, first row, first scalar); reduction takes the minimum of
    (weight, level, task, counter), so the result does not depend on how
    tasks are scheduled across workers.
    """
    F = U.field
    k = U.dim
    n = len(U.ambient)
    if not skip_zero:
        return 0, tuple([0] * n)
    if k == 0:
        return None, None
    if F.q ** k > cap:
        raise CapExceeded(f"q^dim = {F.q}^{k} exceeds weight enumeration cap {cap}")

    add_t = F.add_t
    nz = list(F.nonzero())
    scaled = [{s: tuple(F.mul(s, x) for x in row) for s in nz} for row in U.basis]

    best = [None]  # (w, level, task, counter, witness)

    def run_task(level, task_idx, first, s0):
        base = scaled[first][s0]
        local = None
        counter = 0

        def rec(start, remaining, acc):
            nonlocal local, counter
            if remaining == 0:
                w = len(acc) - acc.count(0)
                key = (w, level, task_idx, counter, acc)
                counter += 1
                if local is None or key < local:
                    local = key
                return
            for i in range(start, k - remaining + 1):
                rows_i = scaled[i]
                for s in nz:
                    row = rows_i[s]
                    rec(i + 1, remaining - 1,
                        tuple(add_t[x][y] for x, y in zip(acc, row)))

        rec(first + 1, level - 1, base)
        return local

    for level in range(1, k + 1):
        if best[0] is not None and level > best[0][0]:
            break
        tasks = [(level, t, first, s0)
                 for t, (first, s0) in enumerate(
                     (f, s) for f in range(k - level + 1) for s in nz)]
        if workers > 1 and len(tasks) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(lambda a: run_task(*a), tasks))
        else:
            results = [run_task(*a) for a in tasks]
        for res in results:
            if res is not None and (best[0] is None or res < best[0]):
                best[0] = res
    w, _, _, _, witness = best[0]
    return w, witness


def min_weight_bruteforce(U: Subspace, cap=DEFAULT_WEIGHT_CAP):
    """Independent oracle: scan all q^dim vectors."""
    if U.dim == 0:
        return None, None
    if U.field.q ** U.dim > cap:
        raise CapExceeded("brute force cap")
    best = None
    for v in U.vectors():
        if any(v):
            w = vec_weight(v)
            if best is None or w < best[0]:
                best = (w, v)
    return best


# ---------------------------------------------------------------------------
# enumeration of all subspaces of F^n (desk scale)
# ---------------------------------------------------------------------------

def enumerate_subspaces(field, n, cap=100000):
    """All subspaces of F^n as RREF basis tuples, in a fixed order.

    Order: by dimension, then pivot-set lexicographic, then free-entry
    assignment.  The count is the Galois number G_n(q).
    """
    total = subspace_count(field.q, n)
    if total > cap:
        raise CapExceeded(f"{total} subspaces exceeds cap {cap}")
    out = []
    for d in range(n + 1):
        for piv in combinations(range(n), d):
            free = [(i, c) for i in range(d)
                    for c in range(piv[i] + 1, n) if c not in piv]
            for assign in product(field.elements(), repeat=len(free)):
                rows = [[0] * n for _ in range(d)]
                for i in range(d):
                    rows[i][piv[i]] = 1
                for (i, c), v in zip(free, assign):
                    rows[i][c] = v
                out.append(tuple(tuple(r) for r in rows))
    return out


def gaussian_binomial(n, k, q):
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def subspace_count(q, n):
    return sum(gaussian_binomial(n, k, q) for k in range(n + 1))
