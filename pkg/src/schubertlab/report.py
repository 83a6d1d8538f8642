"""One-shot reproduction report: every verified number as a claim with an
expected value, a computed value and a status.

Suites are plain functions appending to a ``Recorder``.  A claim whose
computation raises is recorded as a failure and the run continues.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass
from typing import Callable

from .bundles import Dual, Sym, Taut, Tensor, Wedge, tensor_all
from .cayley import (
    NonGeneralError, Tensor444, find_surface_points, is_general, next_line, on_incidence,
    roundtrip_ok, s3_point, swap_step, triality, triple_from_pair, vanishes_on_triple,
)
from .cohomology import (
    GrassmannProduct, degree_wrt, euler_characteristic_of_zero_locus, integrate,
    kernel_c1_on_complement, porteous_class, zero_locus_profile,
)
from .forms import (
    SkewForm, Subspace, ThreeForm, contraction_kernel_dim, decomposable_through, f_lambda_dim,
    graph_vanishing_check, lift_map_rank, normal_form_pair, random_hyperplane, restriction_rank,
    sample_rng, solve_vanishing_3form, vanishing_pair_residual,
)
from .linalg import PrimeField
from .oracles import gottsche_euler, lr_bruteforce
from .partitions import Box, Partition, box_complement, enumerate_partitions, partitions_in_box
from .schur import lr_product
from .series import OPEN, ROWS, check_row

STATUSES = ("pass", "fail", "recorded-exception")
SCHEMA_ID = "schubertlab-report/1"


@dataclass
class ReportEntry:
    claim_id: str
    anchor: str
    expected: str
    computed: str
    status: str
    runtime_ms: int = 0
    note: str = ""

    def to_json(self, timings: bool = False) -> dict:
        out = {"claim_id": self.claim_id, "anchor": self.anchor, "expected": self.expected,
               "computed": self.computed, "status": self.status, "note": self.note}
        if timings:
            out["runtime_ms"] = str(self.runtime_ms)
        return out


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (tuple, list)):
        return "(" + ", ".join(_fmt(y) for y in x) + ")"
    return str(x)


class Recorder:
    def __init__(self):
        self.entries: list[ReportEntry] = []

    def check(self, claim_id: str, anchor: str, expected, compute: Callable[[], object],
              ok: Callable[[object], bool] | None = None, note: str = "",
              status_if_ok: str = "pass") -> object:
        """Run ``compute``; pass iff ``ok(value)`` (default: equality with ``expected``)."""
        start = time.perf_counter()
        try:
            value = compute()
        except Exception as exc:  # recorded, never fatal
            value, good = None, False
            computed = f"error: {type(exc).__name__}: {exc}"
        else:
            good = ok(value) if ok else value == expected
            computed = _fmt(value)
        ms = int((time.perf_counter() - start) * 1000)
        self.entries.append(ReportEntry(claim_id, anchor, _fmt(expected), computed,
                                        status_if_ok if good else "fail", ms, note))
        return value

    def add(self, entry: ReportEntry) -> None:
        self.entries.append(entry)


# ---------------------------------------------------------------------------
# suites

_U = Dual(Taut(0))


def suite_five_spaces(rec: Recorder, prime: int, seed: int) -> None:
    ring = GrassmannProduct(((5, 9),))
    a = rec.check("five-spaces.class", "c10(wedge^2 U*) on G(5,9) is a single Schubert class",
                  "1*σ[4321]", lambda: ring.chern(Wedge(2, _U), 10),
                  ok=lambda c: c == ring.sigma((4, 3, 2, 1)))
    rec.check("five-spaces.count", "5-spaces isotropic for a general 2-form and 3-form on V9",
              9, lambda: integrate(a * ring.chern(Wedge(3, _U), 10)))
    field = PrimeField(prime)
    omega, big, r = normal_form_pair(field, sample_rng(seed, "five-spaces.pair", 0))
    rec.check("five-spaces.normal-form", "both forms vanish on <e1..e5> in normal form",
              (True, True), lambda: vanishing_pair_residual(omega, big, r))
    rec.check("five-spaces.lift-rank", "V9/R -> wedge^2 R* injective for the normal-form pair",
              4, lambda: lift_map_rank(big, r))


def suite_d4(rec: Recorder) -> None:
    ring = GrassmannProduct.parse("G(2,4)^3")
    e = tensor_all(*(Dual(Taut(i)) for i in range(3)))
    c8 = ring.chern(e, 8)
    rec.check("d4.degree.110", "degree of the zero locus w.r.t. h1+h2", 432,
              lambda: degree_wrt(c8, (1, 1, 0)))

    def porteous() -> int:
        two = GrassmannProduct.parse("G(2,4)^2")
        f = Tensor(Dual(Taut(0)), Dual(Taut(1)))
        return degree_wrt(porteous_class(4, [two.chern(f, i) for i in range(5)], 4, 2), (1, 1))

    rec.check("d4.porteous.11", "same degree via the rank<=2 locus of V3 -> T1* x T2*", 432, porteous)
    d100 = rec.check("d4.degree.100", "degree of the projection to the first G(2,4)", 12,
                     lambda: degree_wrt(c8, (1, 0, 0)))
    g24 = GrassmannProduct.parse("G(2,4)")
    rec.check("d4.map-degree", "projection to G(2,4) is finite of degree 12 / deg G(2,4)", 6,
              lambda: d100 // integrate(g24.hyperplane(0) ** 4))
    h = ring.hyperplane(0) + ring.hyperplane(1) + ring.hyperplane(2)
    rec.check("d4.det", "c1 of the triple tensor bundle is 4(h1+h2+h3)", "4(h1+h2+h3)",
              lambda: ring.chern(e, 1), ok=lambda c: c == h * 4)
    rec.check("d4.canonical", "zero locus in G(2,4)^3 has trivial canonical class", (0, 0, 0),
              lambda: zero_locus_profile(ring, e).index)
    rec.check("f4.kernel-c1", "pull-back part of c1 of the kernel bundle on G(6,9)", "-9σ1",
              kernel_c1_on_complement,
              ok=lambda c: c == GrassmannProduct(((6, 9),)).sigma((1,)) * -9)


def suite_series(rec: Recorder) -> None:
    for row in ROWS.values():
        for line in check_row(row):
            if line.status == OPEN:
                continue
            rec.add(ReportEntry(f"series.{row.label}.{line.key}", f"{row.label}: {line.name}", _fmt(line.expected),
                                _fmt(line.computed), line.status, 0, line.note))


FOURFOLDS = (
    ("G(2,6)", Sym(3, _U)),
    ("G(2,4)^3", tensor_all(*(Dual(Taut(i)) for i in range(3)))),
    ("G(6,10)", Wedge(3, _U)),
)


def suite_zero_loci(rec: Recorder) -> None:
    for desc, e in FOURFOLDS:
        ring = GrassmannProduct.parse(desc)
        rec.check(f"zero-locus.{desc}.dim", f"zero locus of {e} on {desc} is a fourfold", 4,
                  lambda ring=ring, e=e: zero_locus_profile(ring, e).dim)
    f4 = ROWS["F4"]
    rec.check("zero-locus.G(6,9).dim", "zero locus of ker(wedge^3 T -> T) on G(6,9) is a fourfold",
              4, lambda: f4.P.dim - f4.e_rank())
    ig = GrassmannProduct.parse("G(3,9)")
    rec.check("zero-locus.G(3,9).index", "IG(3,9) as a zero locus: dimension and index", (15, 7),
              lambda: (lambda z: (z.dim, z.index[0]))(zero_locus_profile(ig, Wedge(2, _U))))


def lr_oracle_cases(max_weight: int = 10, max_rows: int = 4) -> list[tuple[Partition, Partition]]:
    parts = [p for w in range(max_weight + 1) for p in enumerate_partitions(w) if len(p) <= max_rows]
    return [(a, b) for a in parts for b in parts if a.weight + b.weight <= max_weight]


def lr_oracle_mismatches(max_weight: int = 10, max_rows: int = 4) -> tuple[int, list]:
    """Compare every LR coefficient against brute-force tableaux; returns (cases, mismatches)."""
    bad, n = [], 0
    for lam, mu in lr_oracle_cases(max_weight, max_rows):
        fast = lr_product(lam, mu)
        for nu in enumerate_partitions(lam.weight + mu.weight):
            if len(nu) > len(lam) + len(mu) or any(a < b for a, b in zip(nu, lam)) \
                    or any(a < b for a, b in zip(nu, mu)):
                if fast.get(nu, 0):
                    bad.append((lam, mu, nu))
                continue
            n += 1
            if lr_bruteforce(lam, mu, nu) != fast.get(nu, 0):
                bad.append((lam, mu, nu))
    return n, bad


def suite_lr(rec: Recorder) -> None:
    def mismatches() -> int:
        n, bad = lr_oracle_mismatches()
        rec_note.append(f"{n} triples compared" + (f"; first mismatch {bad[0]}" if bad else ""))
        return len(bad)

    rec_note: list[str] = []
    rec.check("lr.oracle", "LR coefficients vs brute-force skew tableaux (weight<=10, <=4 rows)",
              0, mismatches)
    if rec_note:
        rec.entries[-1].note = rec_note[0]


def poincare_ok(k: int, m: int) -> bool:
    """Pairing of complementary-degree Schubert classes on G(k, k+m) is the
    identity under box complement."""
    ring = GrassmannProduct(((k, k + m),))
    b = Box(k, m)
    for lam in partitions_in_box(b):
        comp = box_complement(lam, b)
        for mu in enumerate_partitions(b.area - lam.weight, b):
            got = integrate(ring.sigma(lam) * ring.sigma(mu))
            if got != (mu == comp):
                return False
    return True


def suite_poincare(rec: Recorder) -> None:
    boxes = [(k, m) for k in range(1, 6) for m in range(1, 5)]
    rec.check("poincare.boxes", "complementary pairing is a permutation on all boxes up to 5x4",
              f"{len(boxes)}/{len(boxes)}",
              lambda: f"{sum(poincare_ok(k, m) for k, m in boxes)}/{len(boxes)}")


def orbit_ranks(field, seed: int, count: int) -> tuple[list[int], SkewForm]:
    omega = SkewForm.random(field, sample_rng(seed, "orbits.omega", 0))
    ranks = [restriction_rank(omega, Subspace.random(field, 9, 6, sample_rng(seed, "orbits.v6", i)))
             for i in range(count)]
    return ranks, omega


# witnesses for the normal-form omega = e5^e6 + e4^e7 + e3^e8 + e2^e9
O1_WITNESS = (1, 2, 4, 5, 6, 7)
O2_WITNESS = (1, 2, 3, 4, 5, 6)


def suite_orbits(rec: Recorder, prime: int, seed: int, samples: int = 1000) -> None:
    field = PrimeField(prime)
    orbit_samples = samples
    ranks, _ = orbit_ranks(field, seed, orbit_samples)
    odd = [i for i, r in enumerate(ranks) if r != 6]
    rec.add(ReportEntry(
        "orbits.v6.rank6", "a random 6-space lies in the open orbit (restricted rank 6)",
        f"{orbit_samples}/{orbit_samples}", f"{orbit_samples - len(odd)}/{orbit_samples}",
        "pass" if not odd else "fail",
        note="" if not odd else f"rank {[ranks[i] for i in odd]} at sample(s) {odd}; the rank<=4 "
        "locus is a hypersurface, hit with probability about 1/p per draw"))
    rec.add(ReportEntry("orbits.v6.ranks", "restricted ranks lie in {2, 4, 6}", "subset of {2, 4, 6}",
                        _fmt(tuple(sorted(set(ranks)))),
                        "pass" if set(ranks) <= {2, 4, 6} else "fail"))
    nf = SkewForm.normal_form(field)
    o1 = Subspace.coordinate(field, 9, O1_WITNESS)
    o2 = Subspace.coordinate(field, 9, O2_WITNESS)
    rec.check("orbits.o1-witness", "<e1,e2,e4,e5,e6,e7> has restricted rank 4", 4,
              lambda: restriction_rank(nf, o1))
    rec.check("orbits.o2-witness", "<e1..e6> has restricted rank 2", 2, lambda: restriction_rank(nf, o2))


def suite_kernels(rec: Recorder, prime: int, seed: int, samples: int = 100) -> None:
    field = PrimeField(prime)
    omega = SkewForm.random(field, sample_rng(seed, "orbits.omega", 0))
    nf = SkewForm.normal_form(field)
    o1 = Subspace.coordinate(field, 9, O1_WITNESS)
    o2 = Subspace.coordinate(field, 9, O2_WITNESS)
    generic = Subspace.random(field, 9, 6, sample_rng(seed, "kernels.t", 0))
    rec.check("kernels.generic", "contraction kernel on the open orbit", 14,
              lambda: contraction_kernel_dim(omega, generic))
    rec.check("kernels.o1", "contraction kernel on O1", 14, lambda: contraction_kernel_dim(nf, o1))
    rec.check("kernels.o2", "contraction kernel on O2", 16, lambda: contraction_kernel_dim(nf, o2))

    cache: dict = {}

    def f_lambda_counts() -> tuple[int, int]:
        if "c" in cache:
            return cache["c"]
        a = b = 0
        for i in range(samples):
            rng = sample_rng(seed, "f-lambda", i)
            t = Subspace.random(field, 9, 6, rng)
            t4 = Subspace(field, t.basis[:4])
            d, d4 = f_lambda_dim(t, t4, random_hyperplane(field, rng))
            a += d == 14
            b += d4 == 4
        cache["c"] = a, b
        return a, b

    rec.check("f-lambda.t", f"dim T^Lambda = 14 over {samples} samples",
                       f"{samples}/{samples}", lambda: "%d/%d" % (f_lambda_counts()[0], samples))
    rec.check("f-lambda.t4", f"dim T4^Lambda = 4 over {samples} samples",
              f"{samples}/{samples}", lambda: "%d/%d" % (f_lambda_counts()[1], samples))

    def probe() -> int:
        rng = sample_rng(seed, "f-lambda.probe", 0)
        t = Subspace.random(field, 9, 6, rng)
        t4 = Subspace(field, t.basis[:4])
        u = [field.random(rng) for _ in range(4)]
        return f_lambda_dim(t, t4, random_hyperplane(field, rng, inside=decomposable_through(field, u)))[0]

    rec.check("f-lambda.probe", "hyperplane Lambda containing u^T4 still gives 14", 14, probe)


def graph_random_agreement(field, seed: int, samples: int) -> int:
    agree = 0
    for i in range(samples):
        rng = sample_rng(seed, "graph", i)
        omega = SkewForm.random(field, rng)
        big = ThreeForm.random(field, rng)
        t = Subspace.random(field, 9, 6, rng)
        u = [field.random(rng) for _ in range(6)]
        agree += graph_vanishing_check(omega, big, t, u).agree
    return agree


def suite_graph(rec: Recorder, prime: int, seed: int, samples: int = 200) -> None:
    field = PrimeField(prime)
    rec.check("graph.random", f"lhs = rhs on {samples} random instances", f"{samples}/{samples}",
              lambda: f"{graph_random_agreement(field, seed, samples)}/{samples}")

    def constructed(zero_u: bool) -> tuple[bool, bool]:
        rng = sample_rng(seed, "graph.constructed", int(zero_u))
        omega = SkewForm.random(field, rng)
        t = Subspace.random(field, 9, 6, rng)
        u = [0] * 6 if zero_u else [field.random(rng) for _ in range(6)]
        big = solve_vanishing_3form(omega, t, u, rng)
        r = graph_vanishing_check(omega, big, t, u)
        return r.lhs, r.rhs

    rec.check("graph.constructed", "Omega solved so that (Omega + u^omega)|T = 0", (True, True),
              lambda: constructed(False))
    rec.check("graph.u-zero", "u = 0: T0 = T and the identity reduces to Omega|T = 0", (True, True),
              lambda: constructed(True))


def cayley_tensor(prime: int, seed: int) -> Tensor444:
    return Tensor444.random(PrimeField(prime), random.Random(f"{seed}/cayley.tensor"))


def cayley_stats(h: Tensor444, seed: int, samples: int) -> dict[str, int]:
    pts = find_surface_points(h, samples, seed)
    stats = dict(points=len(pts), next_line=0, closes=0, nontrivial=0, involution=0,
                 vanishing=0, roundtrip=0)
    for s in pts:
        l1, l2 = s.line(1), s.line(2)
        l3 = next_line(h, l1, l2)
        stats["next_line"] += all(x == 0 for x in h.contract({1: list(l1), 3: list(l3)}))
        a1, a2 = triality(h, l1, l2)
        stats["closes"] += on_incidence(h, s3_point(a1, a2))
        stats["nontrivial"] += (a1, a2) != (l1, l2)
        back = swap_step(h, swap_step(h, s, 1), 1)
        stats["involution"] += back == s
    for i in range(len(pts)):
        z = (pts[i], pts[(i + 1) % len(pts)])
        triple = triple_from_pair(h, z)
        stats["vanishing"] += vanishes_on_triple(h, triple)
        stats["roundtrip"] += roundtrip_ok(h, z, triple)
    return stats


def suite_cayley(rec: Recorder, prime: int, seed: int, samples: int = 50) -> None:
    h = cayley_tensor(prime, seed)
    cache: dict = {}

    def stats() -> dict[str, int]:
        if "s" not in cache:
            cache["s"] = cayley_stats(h, seed, samples)
        return cache["s"]

    rec.check("cayley.general", "random tensor passes the non-degeneracy screen", True,
              lambda: is_general(h, random.Random(f"{seed}/cayley.screen")))
    rec.check("cayley.points", f"at least {samples} verified S3-points", f">={samples}",
              lambda: stats()["points"], ok=lambda v: v >= samples)
    n = samples
    for key, anchor, need in (
        ("next_line", "next line is unique and re-verified", n),
        ("closes", "three Cayley steps return to S3", n),
        ("involution", "each Cayley step is an involution", n),
        ("vanishing", "h vanishes on the plane triple of a pair", n),
        ("roundtrip", "pencil base points recover the pair", n),
    ):
        rec.check(f"cayley.{key.replace('_', '-')}", anchor, f"{n}/{n}",
                  lambda key=key: f"{stats()[key]}/{stats()['points']}",
                  ok=lambda v, need=need: v == f"{need}/{need}")
    need = -(-9 * n // 10)
    rec.check("cayley.triality-nontrivial", "triality moves at least 90% of sampled points",
              f">={need}/{n}", lambda: f"{stats()['nontrivial']}/{stats()['points']}",
              ok=lambda v: int(v.split("/")[0]) >= need)

    def rank_one_rejected() -> bool:
        f = h.field
        r1 = Tensor444.rank_one(f, [1, 2, 3, 4], [1, 0, 1, 0], [2, 1, 0, 1])
        try:
            find_surface_points(r1, 1, seed)
        except NonGeneralError:
            return True
        return False

    rec.check("cayley.rank-one-rejected", "a rank-one tensor is rejected as non-general", True,
              rank_one_rejected)


def suite_euler(rec: Recorder) -> None:
    ring = GrassmannProduct.parse("G(2,4)^3")
    e = tensor_all(*(Dual(Taut(i)) for i in range(3)))
    rec.check("euler.hilb2-k3", "Euler number of the fourfold in G(2,4)^3 vs Hilb^2 of a K3",
              gottsche_euler(24, 2), lambda: euler_characteristic_of_zero_locus(ring, e),
              note="Göttsche oracle for Hilb^2(K3)")


def check_prime(prime: int) -> int:
    PrimeField(prime)  # raises on composites
    if prime < 101:
        raise ValueError(f"prime must be at least 101, got {prime}")
    return prime


def run_all(prime: int = 1009, seed: int = 0) -> list[ReportEntry]:
    """Every suite at the acceptance sample sizes, in a fixed order."""
    check_prime(prime)
    rec = Recorder()
    suite_five_spaces(rec, prime, seed)
    suite_d4(rec)
    suite_series(rec)
    suite_zero_loci(rec)
    suite_lr(rec)
    suite_poincare(rec)
    suite_orbits(rec, prime, seed, samples=1000)
    suite_kernels(rec, prime, seed, samples=100)
    suite_graph(rec, prime, seed, samples=200)
    suite_cayley(rec, prime, seed, samples=50)
    suite_euler(rec)
    return rec.entries


def summary(entries: list[ReportEntry]) -> dict[str, int]:
    out = {s: 0 for s in STATUSES}
    for e in entries:
        out[e.status] = out.get(e.status, 0) + 1
    return out


def emit(entries: list[ReportEntry], fmt: str = "json", prime: int | None = None,
         seed: int | None = None, timings: bool = False) -> str:
    if fmt == "json":
        doc = {
            "schema": SCHEMA_ID,
            "prime": None if prime is None else str(prime),
            "seed": None if seed is None else str(seed),
            "entries": [e.to_json(timings) for e in entries],
            "summary": {k: str(v) for k, v in summary(entries).items()},
        }
        return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    if fmt == "text":
        if not entries:
            return "(no entries)\n"
        w_id = max(len(e.claim_id) for e in entries)
        w_st = max(len(e.status) for e in entries)
        lines = []
        for e in entries:
            line = f"{e.claim_id:<{w_id}}  {e.status:<{w_st}}  expected {e.expected}  computed {e.computed}"
            if timings:
                line += f"  [{e.runtime_ms} ms]"
            if e.note:
                line += f"  ({e.note})"
            lines.append(line)
        s = summary(entries)
        lines.append(", ".join(f"{v} {k}" for k, v in s.items()))
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def exit_code(entries: list[ReportEntry]) -> int:
    return int(any(e.status == "fail" for e in entries))
