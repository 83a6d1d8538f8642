"""One test per acceptance criterion, at the stated tolerance and runtime budget.

Each test records a PASS/FAIL line (printed in the terminal summary) before
asserting, so a failing criterion still reports what was computed.
"""

import random
import time

from conftest import record

from schubertlab.bundles import Dual, Sym, Taut, Tensor, Wedge, tensor_all
from schubertlab.cayley import (
    Tensor444, find_surface_points, next_line, on_incidence, roundtrip_ok, s3_point, triality,
    triple_from_pair, vanishes_on_triple,
)
from schubertlab.cohomology import (
    GrassmannProduct, degree_wrt, euler_characteristic_of_zero_locus, integrate,
    kernel_c1_on_complement, porteous_class, zero_locus_profile,
)
from schubertlab.forms import (
    SkewForm, Subspace, ThreeForm, contraction_kernel_dim, f_lambda_dim, global_sections_dim,
    graph_vanishing_check, random_hyperplane, restriction_rank, sample_rng, solve_vanishing_3form,
)
from schubertlab.linalg import PrimeField
from schubertlab.oracles import gottsche_euler, lr_bruteforce
from schubertlab.partitions import enumerate_partitions
from schubertlab.report import O1_WITNESS, O2_WITNESS, lr_oracle_cases, orbit_ranks, poincare_ok
from schubertlab.schur import lr_coefficient
from schubertlab.series import PASS, RECORDED, ROWS, check_row

PRIME, SEED = 1009, 0
F = PrimeField(PRIME)
U = Dual(Taut(0))
TRIPLE = tensor_all(Dual(Taut(0)), Dual(Taut(1)), Dual(Taut(2)))


def test_criterion_01_five_spaces():
    start = time.perf_counter()
    ring = GrassmannProduct.parse("G(5,9)")
    c2 = ring.chern(Wedge(2, U), 10)
    count = integrate(c2 * ring.chern(Wedge(3, U), 10))
    secs = time.perf_counter() - start
    ok = count == 9 and c2 == ring.sigma((4, 3, 2, 1)) and secs < 30
    record(1, ok, f"integral = {count}, c10(wedge^2 U*) = {c2!r}, {secs:.2f}s")
    assert ok


def test_criterion_02_d4_degrees():
    start = time.perf_counter()
    ring = GrassmannProduct.parse("G(2,4)^3")
    c8 = ring.chern(TRIPLE, 8)
    d110, d100 = degree_wrt(c8, (1, 1, 0)), degree_wrt(c8, (1, 0, 0))
    two = GrassmannProduct.parse("G(2,4)^2")
    f = Tensor(Dual(Taut(0)), Dual(Taut(1)))
    d_port = degree_wrt(porteous_class(4, [two.chern(f, i) for i in range(5)], 4, 2), (1, 1))
    deg_g24 = integrate(GrassmannProduct.parse("G(2,4)").hyperplane(0) ** 4)
    secs = time.perf_counter() - start
    ok = (d110, d_port, d100, deg_g24, d100 // deg_g24, d100 % deg_g24) == (432, 432, 12, 2, 6, 0) \
        and secs < 10
    record(2, ok, f"(1,1,0) -> {d110}, Porteous (1,1) -> {d_port}, (1,0,0) -> {d100}, "
                  f"map degree {d100}/{deg_g24}, {secs:.2f}s")
    assert ok


def test_criterion_03_chern_identities():
    ring = GrassmannProduct.parse("G(2,4)^3")
    h = ring.hyperplane(0) + ring.hyperplane(1) + ring.hyperplane(2)
    c1 = ring.chern(TRIPLE, 1)
    k = kernel_c1_on_complement()
    ok = c1 == h * 4 and k == GrassmannProduct.parse("G(6,9)").sigma((1,)) * -9
    record(3, ok, f"c1(triple) = {c1!r}; kernel c1 = {k!r}")
    assert ok


def test_criterion_04_series_table():
    problems, recorded = [], []
    for label, row in ROWS.items():
        lines = {c.key: c for c in check_row(row)}
        if row.dual_coxeter is not None and lines["a"].status != PASS:
            problems.append(f"{label}.a")
        if label in ("G2", "D4", "F4", "E6"):
            a = row.a
            want = {"dim-C": 3 * a + 3, "dim-X": 6 * a + 9, "dim-V": 6 * a + 8, "dim-P": 6 * a + 12,
                    "rank-E": 6 * a + 8, "index": 3 * a + 4}
            for key, value in want.items():
                if lines[key].computed != value or lines[key].status != PASS:
                    problems.append(f"{label}.{key}")
            if row.X.dim - 1 != row.e_rank():
                problems.append(f"{label}.rank-E=dim-X-1")
        if label == "E7":
            recorded = [k for k, c in lines.items() if c.status == RECORDED]
    f4_index = {c.key: c for c in check_row(ROWS["F4"])}["index"].computed
    h0 = global_sections_dim(SkewForm.random(F, random.Random("acceptance.h0")))
    ok = not problems and f4_index == 7 and h0 == 75 and "index" in recorded
    record(4, ok, f"mismatches {problems or 'none'}; IG(3,9) index {f4_index}; dim H0 = {h0}; "
                  f"E7 recorded-exception lines {recorded}")
    assert ok


def test_criterion_05_fourfolds():
    dims = {}
    for desc, e in (("G(2,6)", Sym(3, U)), ("G(2,4)^3", TRIPLE), ("G(6,10)", Wedge(3, U))):
        dims[desc] = zero_locus_profile(GrassmannProduct.parse(desc), e).dim
    f4 = ROWS["F4"]
    dims["G(6,9) kernel bundle"] = f4.P.dim - f4.e_rank()
    ok = set(dims.values()) == {4}
    record(5, ok, f"dimensions {dims}")
    assert ok


def test_criterion_06_lr_oracle():
    start = time.perf_counter()
    compared, bad = 0, []
    for lam, mu in lr_oracle_cases(10, 4):
        for nu in enumerate_partitions(lam.weight + mu.weight):
            compared += 1
            if lr_coefficient(lam, mu, nu) != lr_bruteforce(lam, mu, nu):
                bad.append((lam, mu, nu))
    secs = time.perf_counter() - start
    ok = not bad and secs < 60
    record(6, ok, f"{compared} coefficients compared, {len(bad)} mismatches, {secs:.1f}s")
    assert ok


def test_criterion_07_poincare():
    boxes = [(k, m) for k in range(1, 6) for m in range(1, 5)]
    good = [b for b in boxes if poincare_ok(*b)]
    ok = len(good) == len(boxes)
    record(7, ok, f"{len(good)}/{len(boxes)} boxes up to 5x4 have identity pairing")
    assert ok


def test_criterion_08_orbits_and_kernels():
    start = time.perf_counter()
    ranks, omega = orbit_ranks(F, SEED, 1000)
    n6 = sum(r == 6 for r in ranks)
    nf = SkewForm.normal_form(F)
    o1, o2 = Subspace.coordinate(F, 9, O1_WITNESS), Subspace.coordinate(F, 9, O2_WITNESS)
    witnesses = (restriction_rank(nf, o1), restriction_rank(nf, o2))
    generic = Subspace.random(F, 9, 6, sample_rng(SEED, "kernels.t", 0))
    kernels = (contraction_kernel_dim(omega, generic), contraction_kernel_dim(nf, o1),
               contraction_kernel_dim(nf, o2))
    fl = set()
    for i in range(100):
        rng = sample_rng(SEED, "f-lambda", i)
        t = Subspace.random(F, 9, 6, rng)
        fl.add(f_lambda_dim(t, Subspace(F, t.basis[:4]), random_hyperplane(F, rng)))
    secs = time.perf_counter() - start
    parts = {
        "1000 V6 rank 6": n6 == 1000,
        "witnesses 4/2": witnesses == (4, 2),
        "kernels 14/14/16": kernels == (14, 14, 16),
        "f_lambda (14, 4)": fl == {(14, 4)},
        "< 30 s": secs < 30,
    }
    ok = all(parts.values())
    off = [i for i, r in enumerate(ranks) if r != 6]
    record(8, ok, f"rank-6 count {n6}/1000 (others at {off}: ranks {[ranks[i] for i in off]}); "
                  f"witnesses {witnesses}; kernels {kernels}; f_lambda {sorted(fl)}; {secs:.1f}s; "
                  f"failed parts {[k for k, v in parts.items() if not v] or 'none'}")
    assert ok


def test_criterion_09_graph_identity():
    agree = 0
    for i in range(200):
        rng = sample_rng(SEED, "graph", i)
        omega, big = SkewForm.random(F, rng), ThreeForm.random(F, rng)
        t = Subspace.random(F, 9, 6, rng)
        u = [F.random(rng) for _ in range(6)]
        agree += graph_vanishing_check(omega, big, t, u).agree
    special = []
    for zero_u in (False, True):
        rng = sample_rng(SEED, "graph.constructed", int(zero_u))
        omega = SkewForm.random(F, rng)
        t = Subspace.random(F, 9, 6, rng)
        u = [0] * 6 if zero_u else [F.random(rng) for _ in range(6)]
        r = graph_vanishing_check(omega, solve_vanishing_3form(omega, t, u, rng), t, u)
        special.append((r.lhs, r.rhs))
    ok = agree == 200 and special == [(True, True), (True, True)]
    record(9, ok, f"{agree}/200 random agree; constructed {special[0]}, u=0 {special[1]}")
    assert ok


def test_criterion_10_cayley():
    start = time.perf_counter()
    h = Tensor444.random(F, random.Random(f"{SEED}/cayley.tensor"))
    pts = find_surface_points(h, 50, SEED)
    verified = sum(on_incidence(h, s) for s in pts)
    nl = closes = moved = vanish = rt = 0
    for s in pts:
        l1, l2 = s.line(1), s.line(2)
        l3 = next_line(h, l1, l2)  # raises unless the kernel is 1-dimensional
        nl += not any(h.contract({1: list(l1), 3: list(l3)}))
        a1, a2 = triality(h, l1, l2)
        closes += on_incidence(h, s3_point(a1, a2))
        moved += (a1, a2) != (l1, l2)
    for i in range(len(pts)):
        z = (pts[i], pts[(i + 1) % len(pts)])
        triple = triple_from_pair(h, z)
        vanish += vanishes_on_triple(h, triple)
        rt += roundtrip_ok(h, z, triple)
    secs = time.perf_counter() - start
    n = len(pts)
    ok = (verified >= 50 and nl == closes == vanish == rt == n and moved >= 0.9 * n and secs < 120)
    record(10, ok, f"{verified} S3-points; next_line {nl}/{n}; triality closes {closes}/{n}, "
                   f"nontrivial {moved}/{n}; triples {vanish}/{n}; round trip {rt}/{n}; {secs:.1f}s")
    assert ok


def test_criterion_11_euler_characteristic():
    chi = euler_characteristic_of_zero_locus(GrassmannProduct.parse("G(2,4)^3"), TRIPLE)
    oracle = gottsche_euler(24, 2)
    ok = chi == oracle == 324
    record(11, ok, f"Chern-class route {chi}, Göttsche oracle {oracle} (stretch, not gating)")
    assert ok
