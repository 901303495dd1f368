from itertools import product

import pytest

from matroidlab.errors import ShapeMismatch
from matroidlab.field import make_field
from matroidlab.linalg import Matrix, Subspace, enumerate_subspaces
from matroidlab.matroid import ReprMatroid, contract, delete, from_generator
from matroidlab.perturb import (
    PerturbPair,
    apply_perturbation,
    dist,
    elementary_lifts,
    elementary_projections,
    pert_bounds,
    pert_exact,
    pert_exact_tiny,
)

GF2 = make_field(2, 1)
GF3 = make_field(3, 1)


def mk(field, data, n=None):
    m = len(data)
    n = n if n is not None else len(data[0])
    return from_generator(Matrix(field, tuple(range(m)), tuple(range(n)), data))


def space_matroid(field, n, basis_rows):
    ground = tuple(range(n))
    return ReprMatroid(ground, Subspace(field, ground, list(basis_rows)))


def all_matroids(field, n):
    return [space_matroid(field, n, b) for b in enumerate_subspaces(field, n)]


# ---------------------------------------------------------------------------
# projections and lifts
# ---------------------------------------------------------------------------

def test_projections_include_self():
    M = mk(GF2, [[1, 0, 1], [0, 1, 1]])
    assert M in elementary_projections(M)


def test_projections_of_rank_one():
    M = mk(GF2, [[1, 1]])
    projs = elementary_projections(M)
    assert len(projs) == 2
    assert {P.rank for P in projs} == {0, 1}


def test_projection_count_dim2_gf2():
    M = mk(GF2, [[1, 0, 1], [0, 1, 1]])
    # 1 (self) + number of codim-1 subspaces of a 2-dim GF(2) space = 3
    assert len(elementary_projections(M)) == 4


def test_lifts_of_full_rank():
    M = mk(GF2, [[1, 0], [0, 1]])
    assert elementary_lifts(M) == [M]


def test_lifts_of_rank_zero():
    M = space_matroid(GF2, 3, [])
    lifts = elementary_lifts(M)
    assert len(lifts) == 1 + 7  # self plus the 1-dim subspaces of GF(2)^3


def test_lift_then_project_round_trip():
    M = mk(GF2, [[1, 1, 0]])
    for L in elementary_lifts(M):
        assert M in elementary_projections(L)


def test_projections_lifts_match_extension_definition():
    """Definition check on GF(2), |E| <= 3: enumerate every represented
    matroid W on E + {x} with W \\ x = M and collect W / x."""
    for n in (1, 2, 3):
        ext_labels = tuple(range(n)) + ("x",)
        for rows in enumerate_subspaces(GF2, n):
            M = space_matroid(GF2, n, rows)
            got_proj = {P.space.basis for P in elementary_projections(M)}
            got_lift = {L.space.basis for L in elementary_lifts(M)}
            want_proj, want_lift = set(), set()
            for wrows in enumerate_subspaces(GF2, n + 1):
                W = ReprMatroid(ext_labels, Subspace(GF2, ext_labels, list(wrows)))
                if delete(W, {"x"}) == M:
                    want_proj.add(contract(W, {"x"}).space.basis)
                if contract(W, {"x"}) == M:
                    want_lift.add(delete(W, {"x"}).space.basis)
            assert got_proj == want_proj
            assert got_lift == want_lift


# ---------------------------------------------------------------------------
# dist
# ---------------------------------------------------------------------------

def test_dist_self_is_zero():
    M = mk(GF2, [[1, 0, 1], [0, 1, 1]])
    assert dist(PerturbPair(M, M)) == 0


def test_dist_one_projection():
    M1 = mk(GF2, [[1, 0, 1], [0, 1, 1]])
    M2 = space_matroid(GF2, 3, [(1, 0, 1)])  # codim-1 subspace of U1
    assert dist(PerturbPair(M1, M2)) == 1


def test_dist_two_planes_meeting_in_line():
    M1 = space_matroid(GF2, 3, [(1, 0, 0), (0, 1, 0)])
    M2 = space_matroid(GF2, 3, [(1, 0, 0), (0, 0, 1)])
    assert dist(PerturbPair(M1, M2)) == 2


def test_dist_is_a_metric_on_gf2_3():
    ms = all_matroids(GF2, 3)
    n = len(ms)
    assert n == 16
    d = [[dist(PerturbPair(a, b)) for b in ms] for a in ms]
    for i in range(n):
        assert d[i][i] == 0
        for j in range(n):
            assert d[i][j] == d[j][i]
            assert (d[i][j] == 0) == (i == j)
            for k in range(n):
                assert d[i][k] <= d[i][j] + d[j][k]


# ---------------------------------------------------------------------------
# pert
# ---------------------------------------------------------------------------

def test_identical_matroids_pert_zero():
    M = mk(GF3, [[1, 2, 0], [0, 1, 1]])
    pair = PerturbPair(M, M)
    assert pert_bounds(pair) == (0, 0)
    assert pert_exact(pair) == 0


def test_rank_one_update_is_pert_at_most_one():
    M1 = mk(GF2, [[1, 0, 0, 1], [0, 1, 0, 1], [0, 0, 1, 1]])
    P = [[0, 0, 0, 1], [0, 0, 0, 1], [0, 0, 0, 1]]  # rank 1
    rows = [[GF2.add(x, y) for x, y in zip(r, p)] for r, p in zip(M1.space.basis, P)]
    M2 = mk(GF2, rows)
    pair = PerturbPair(M1, M2)
    lo, hi = pert_bounds(pair)
    assert lo <= 1 and hi <= 1
    assert pert_exact(pair) <= 1


def test_lemma_pert_dist_sandwich_gf2_3_exhaustive():
    ms = all_matroids(GF2, 3)
    for a in ms:
        for b in ms:
            pair = PerturbPair(a, b)
            p = pert_exact(pair)
            d = dist(pair)
            lo, hi = pert_bounds(pair)
            assert lo <= p <= hi
            assert p <= d <= 2 * p


def test_pert_exact_matches_literal_enumeration():
    ms = all_matroids(GF2, 3)
    pairs = [(a, b) for a in ms for b in ms if a.rank + b.rank <= 3]
    for a, b in pairs:
        pair = PerturbPair(a, b)
        assert pert_exact(pair) == pert_exact_tiny(pair)
    # a couple of the heavier 2+2 cases
    dim2 = [m for m in ms if m.rank == 2]
    for a, b in [(dim2[0], dim2[1]), (dim2[2], dim2[5]), (dim2[3], dim2[3])]:
        pair = PerturbPair(a, b)
        assert pert_exact(pair) == pert_exact_tiny(pair)


def test_pert_exact_matches_literal_enumeration_gf3():
    ms = all_matroids(GF3, 2)
    for a in ms:
        for b in ms:
            if a.rank + b.rank <= 2:
                pair = PerturbPair(a, b)
                assert pert_exact(pair) == pert_exact_tiny(pair)


def test_pert_lower_bound_is_intersection_defect():
    # lo = max(dim) - dim(intersection) on two GF(2)^4 planes meeting in a line
    M1 = space_matroid(GF2, 4, [(1, 0, 0, 0), (0, 1, 0, 0)])
    M2 = space_matroid(GF2, 4, [(1, 0, 0, 0), (0, 0, 1, 0)])
    lo, hi = pert_bounds(PerturbPair(M1, M2))
    assert lo == 1 and pert_exact(PerturbPair(M1, M2)) == 1 and hi == 1


# ---------------------------------------------------------------------------
# apply_perturbation
# ---------------------------------------------------------------------------

def test_apply_zero_perturbation():
    M = mk(GF2, [[1, 0, 1], [0, 1, 1]])
    P = Matrix.zero(GF2, (0, 1), (0, 1, 2))
    out, t = apply_perturbation(M, P)
    assert out == M and t == 0


def test_apply_rank_one_to_fano():
    M = mk(GF2, [[1, 0, 0, 1, 1, 0, 1],
                 [0, 1, 0, 1, 0, 1, 1],
                 [0, 0, 1, 0, 1, 1, 1]])
    P = Matrix(GF2, (0, 1, 2), tuple(range(7)),
               [[0, 0, 0, 1, 0, 0, 1]] * 3)
    out, t = apply_perturbation(M, P)
    assert t == 1 and out.size == 7
    assert pert_exact(PerturbPair(M, out), cap=50000) <= 1


def test_apply_then_undo_on_nonpivot_support():
    # P touches only non-pivot columns, so the perturbed generator is still
    # in RREF and applying -P walks straight back.
    M = mk(GF2, [[1, 0, 0, 1, 1, 0, 1],
                 [0, 1, 0, 1, 0, 1, 1],
                 [0, 0, 1, 0, 1, 1, 1]])
    P = Matrix(GF2, (0, 1, 2), tuple(range(7)),
               [[0, 0, 0, 1, 1, 0, 0]] * 3)
    out, _ = apply_perturbation(M, P)
    back, _ = apply_perturbation(out, P)  # -P = P over GF(2)
    assert back == M


def test_apply_shape_mismatch():
    M = mk(GF2, [[1, 0, 1], [0, 1, 1]])
    with pytest.raises(ShapeMismatch):
        apply_perturbation(M, Matrix.zero(GF2, (0,), (0, 1, 2)))
