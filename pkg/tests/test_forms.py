from collections import Counter

import pytest

from schubertlab import exterior as ext
from schubertlab.forms import (
    FormError, InconsistentFormError, SkewForm, Subspace, ThreeForm, contraction_image_dim,
    contraction_kernel_dim, contraction_matrix, decomposable_through, f_lambda_dim,
    global_sections_dim, graph_vanishing_check, lift_map_rank, normal_form_pair, orbit_index,
    random_hyperplane, restriction_rank, sample_rng, solve_vanishing_3form, vanishing_pair_residual,
    wedge_omega_rank,
)
from schubertlab.linalg import QQ, ExactMatrix, PrimeField

F = PrimeField(1009)
NF = SkewForm.normal_form(F)


def coord(*idx):
    return Subspace.coordinate(F, 9, idx)


def test_exterior_basics():
    a, b = ext.vector(F, [1, 0, 0]), ext.vector(F, [0, 1, 0])
    assert ext.wedge(F, a, b) == {(0, 1): 1}
    assert ext.wedge(F, b, a) == {(0, 1): F(-1)}
    assert ext.wedge(F, a, a) == {}
    vol = {(0, 1, 2): F(1)}
    vs = [[1, 2, 3], [0, 1, 4], [5, 6, 0]]
    assert ext.evaluate(F, vol, vs) == F(1)  # det = 1
    assert ext.coordinates(F, ext.wedge_vectors(F, *vs), 3, 3) == [F(1)]


def test_normal_form():
    assert NF.rank() == 8
    assert NF.kernel() == [[1] + [0] * 8]
    with pytest.raises(FormError):
        SkewForm(F, ExactMatrix(F, [[0, 1], [1, 0]]))


def test_orbit_witnesses():
    assert restriction_rank(NF, coord(1, 2, 3, 4, 5, 6)) == 2
    assert restriction_rank(NF, coord(1, 2, 4, 5, 6, 7)) == 4
    # <e1,e2,e3,e4,e5,e7> only meets the pair (4,7): rank 2, not a rank-4 witness
    assert restriction_rank(NF, coord(1, 2, 3, 4, 5, 7)) == 2
    assert [orbit_index(r) for r in (6, 4, 2)] == [0, 1, 2]


def test_restriction_rank_errors():
    with pytest.raises(FormError):
        restriction_rank(NF, coord(1, 2, 3))
    zero = SkewForm.from_pairs(F, 9, [])
    with pytest.raises(InconsistentFormError):
        restriction_rank(zero, coord(1, 2, 3, 4, 5, 6))
    with pytest.raises(FormError):
        Subspace(F, [[1, 0], [2, 0]])


def test_restriction_rank_invariant_many_samples():
    # rank is always 2, 4 or 6; rank < 6 is a hypersurface condition, so hits stay rare
    omega = SkewForm.random(F, sample_rng(1, "inv.omega", 0))
    ranks = Counter(restriction_rank(omega, Subspace.random(F, 9, 6, sample_rng(1, "inv", i)))
                    for i in range(10_000))
    assert set(ranks) <= {2, 4, 6}
    assert ranks[6] >= 10_000 - 60
    assert ranks[2] == 0


def test_contraction_kernels():
    omega = SkewForm.random(F, sample_rng(0, "k", 0))
    t = Subspace.random(F, 9, 6, sample_rng(0, "k", 1))
    assert contraction_kernel_dim(omega, t) == 14
    assert contraction_image_dim(omega, t) == 6
    assert contraction_kernel_dim(NF, coord(1, 2, 4, 5, 6, 7)) == 14
    assert contraction_kernel_dim(NF, coord(1, 2, 3, 4, 5, 6)) == 16
    m = contraction_matrix(F, NF.restricted(coord(1, 2, 3, 4, 5, 6).basis))
    assert (m.nrows, m.ncols) == (6, 20)
    with pytest.raises(FormError):
        contraction_kernel_dim(NF, coord(1, 2))


def _t_t4(i):
    rng = sample_rng(0, "fl", i)
    t = Subspace.random(F, 9, 6, rng)
    return rng, t, Subspace(F, t.basis[:4])


def test_f_lambda_generic():
    for i in range(20):
        rng, t, t4 = _t_t4(i)
        assert f_lambda_dim(t, t4, random_hyperplane(F, rng)) == (14, 4)


def test_f_lambda_degenerate_probe():
    # Lambda containing u ^ T4: still 14, so no counterexample to "any hyperplane"
    for i in range(5):
        rng, t, t4 = _t_t4(100 + i)
        u = [F.random(rng) for _ in range(4)]
        lam = random_hyperplane(F, rng, inside=decomposable_through(F, u))
        assert f_lambda_dim(t, t4, lam) == (14, 4)


def test_f_lambda_errors():
    rng, t, t4 = _t_t4(0)
    lam = random_hyperplane(F, rng)
    other = Subspace.random(F, 9, 4, rng)
    with pytest.raises(FormError):
        f_lambda_dim(t, other, lam)
    with pytest.raises(FormError):
        f_lambda_dim(t, t4, lam[:4])


def test_graph_identity_random_and_constructed():
    for i in range(20):
        rng = sample_rng(0, "g", i)
        omega, big = SkewForm.random(F, rng), ThreeForm.random(F, rng)
        t = Subspace.random(F, 9, 6, rng)
        u = [F.random(rng) for _ in range(6)]
        assert graph_vanishing_check(omega, big, t, u).agree
        big0 = solve_vanishing_3form(omega, t, u, rng)
        r = graph_vanishing_check(omega, big0, t, u)
        assert (r.lhs, r.rhs) == (True, True)
        # v0 inserted elsewhere gives the same answer
        assert graph_vanishing_check(omega, big0, t, u, v0_index=0).lhs


def test_graph_identity_over_q():
    rng = sample_rng(0, "gq", 0)
    omega = SkewForm.random(QQ, rng)
    t = Subspace.random(QQ, 9, 6, rng)
    u = [1, -2, 0, 3, 1, 1]
    big = solve_vanishing_3form(omega, t, u, rng)
    assert graph_vanishing_check(omega, big, t, u).lhs


def test_graph_identity_errors():
    rng = sample_rng(0, "ge", 0)
    t = Subspace.random(F, 9, 6, rng)
    with pytest.raises(FormError):
        graph_vanishing_check(NF, ThreeForm(F, 9), t, [0] * 5)
    with pytest.raises(FormError):
        graph_vanishing_check(NF, ThreeForm(F, 8), t, [0] * 6)


def test_three_form_antisymmetry():
    w = ThreeForm(F, 9, {(2, 0, 1): 1})
    assert w.coeffs == {(0, 1, 2): 1}
    x, y, z = ([F.random(sample_rng(0, "a", i)) for _ in range(9)] for i in range(3))
    assert w(x, y, z) == F(-w(y, x, z)) == w(y, z, x)
    with pytest.raises(FormError):
        ThreeForm(F, 9, {(0, 0, 1): 1})


def test_five_spaces_normal_form():
    omega, big, r = normal_form_pair(F, sample_rng(0, "nf", 0))
    assert vanishing_pair_residual(omega, big, r) == (True, True)
    assert lift_map_rank(big, r) == 4
    assert wedge_omega_rank(omega) == 9
    assert global_sections_dim(omega) == 75
    assert global_sections_dim(SkewForm.random(F, sample_rng(0, "nf", 1))) == 75
