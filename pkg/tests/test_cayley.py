import random

import pytest

from schubertlab.cayley import (
    CayleyError, ExhaustionError, NonGeneralError, ProjPoint, Tensor444, find_surface_points,
    is_general, next_line, on_incidence, pencil_base_points, points_on_line, quartic_value,
    roundtrip_ok, s3_point, slice_matrix, swap_step, triality, triality_step, triple_from_pair,
    vanishes_on_triple,
)
from schubertlab.linalg import QQ, ExactMatrix, PrimeField

F = PrimeField(1009)


@pytest.fixture(scope="module")
def h():
    return Tensor444.random(F, random.Random("0/cayley.tensor"))


@pytest.fixture(scope="module")
def points(h):
    return find_surface_points(h, 20, seed=0)


def test_sampling_is_deterministic(h, points):
    again = find_surface_points(Tensor444.random(F, random.Random("0/cayley.tensor")), 20, seed=0)
    assert again == points
    assert len(set(points)) == 20
    assert all(on_incidence(h, s) and s.free == 3 for s in points)


def test_surface_points_lie_on_quartics(h, points):
    for s in points:
        assert quartic_value(h, 1, list(s.line(1))) == 0
        assert quartic_value(h, 2, list(s.line(2))) == 0
        assert slice_matrix(h, 1, list(s.line(1))).rank() == 3


def test_next_line_vanishing(h, points):
    for s in points:
        l3 = next_line(h, s.line(1), s.line(2))
        assert not any(h.contract({1: list(s.line(1)), 3: list(l3)}))


def test_swap_steps_are_involutions(h, points):
    for s in points:
        for axis in (1, 2):
            assert swap_step(h, swap_step(h, s, axis), axis) == s


def test_triality_closes_on_s3(h, points):
    moved = 0
    for s in points:
        a1, a2 = triality(h, s.line(1), s.line(2))
        assert on_incidence(h, s3_point(a1, a2))
        moved += (a1, a2) != (s.line(1), s.line(2))
    assert moved >= 18


def test_triality_step_cycles_free_axis(h, points):
    s = points[0]
    frees = []
    for _ in range(3):
        s = triality_step(h, s)
        frees.append(s.free)
    assert frees == [2, 1, 3]


def test_plane_triples_roundtrip(h, points):
    for i in range(len(points)):
        z = (points[i], points[(i + 1) % len(points)])
        triple = triple_from_pair(h, z)
        assert vanishes_on_triple(h, triple)
        assert roundtrip_ok(h, z, triple)
        locus = pencil_base_points(h, triple)
        assert locus.rank == 2 and len(locus.points) == 2


def test_triple_needs_distinct_lines(h, points):
    s = points[0]
    with pytest.raises(CayleyError):
        triple_from_pair(h, (s, s))


def test_next_line_off_surface(h):
    l1 = ProjPoint.of(F, [1, 0, 0, 0])
    l2 = ProjPoint.of(F, [0, 1, 0, 0])
    if on_incidence(h, s3_point(l1, l2)):
        pytest.skip("coordinate pair happens to lie on S3")
    with pytest.raises(CayleyError):
        next_line(h, l1, l2)


def test_swap_step_bad_axis(h, points):
    with pytest.raises(CayleyError):
        swap_step(h, points[0], 3)


def test_degenerate_next_line_witness():
    # make the slice at e1 have rank 2: next_line from e1 is not unique
    rng = random.Random(9)
    entries = [[[F.random(rng) for _ in range(4)] for _ in range(4)] for _ in range(4)]
    a = ExactMatrix.random(F, 4, 2, rng)
    b = ExactMatrix.random(F, 2, 4, rng)
    entries[0] = (a @ b).rows
    h = Tensor444(F, entries)
    e1 = ProjPoint.of(F, [1, 0, 0, 0])
    m = slice_matrix(h, 1, list(e1))
    assert m.rank() == 2
    l2 = ProjPoint.of(F, m.left_kernel()[0])
    assert on_incidence(h, s3_point(e1, l2))
    with pytest.raises(NonGeneralError) as info:
        next_line(h, e1, l2)
    assert len(info.value.witness["kernel"]) == 2


def test_rank_one_tensor_rejected():
    r1 = Tensor444.rank_one(F, [1, 2, 3, 4], [1, 0, 1, 0], [2, 1, 0, 1])
    assert not is_general(r1, random.Random(0))
    with pytest.raises(NonGeneralError):
        find_surface_points(r1, 1, seed=0)


def test_exhaustion(h):
    with pytest.raises(ExhaustionError):
        find_surface_points(h, 10_000, seed=0, max_lines=2)


def test_rational_tensor_requires_prime_field_for_sampling():
    hq = Tensor444.random(QQ, random.Random(1))
    with pytest.raises(CayleyError):
        points_on_line(hq, [1, 0, 0, 0], [0, 1, 0, 0])
    with pytest.raises(CayleyError):
        slice_matrix(hq, 4, [1, 0, 0, 0])


def test_points_on_line_are_roots(h):
    rng = random.Random(3)
    a = [F.random(rng) for _ in range(4)]
    b = [F.random(rng) for _ in range(4)]
    for p in points_on_line(h, a, b):
        assert quartic_value(h, 1, list(p)) == 0
