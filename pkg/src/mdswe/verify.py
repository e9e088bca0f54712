"""Built-in verification suites behind ``mdswe verify``.

Each suite re-checks the package's exact invariants end to end: closed
forms against exhaustive enumeration, identities as integer equalities,
transforms against independently computed duals, and decoder curves
against a seeded Monte-Carlo channel.  Every check prints one line;
a failing check fails the run.
"""

from __future__ import annotations

import itertools
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, TextIO

from . import binary_avg, duality, errorprob, mds_enum
from .gf import Field, field_from_order
from .linear_code import (LinearCode, Partition, brute_force_pwe, brute_force_weights,
                          code_from_generator, dual, min_distance, rm1_code, rs_code)
from .mds_enum import MdsParams
from .montecarlo import BmSphereOracle
from .poly import SparsePoly

PAPER_COUNTEREXAMPLE_ROWS = ((1, 0, 0, 1, 1), (0, 1, 0, 0, 1), (0, 0, 1, 0, 1))
HAMMING74_ROWS = ((1, 1, 0, 1, 0, 0, 0), (0, 1, 1, 0, 1, 0, 0),
                  (0, 0, 1, 1, 0, 1, 0), (0, 0, 0, 1, 1, 0, 1))


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def random_code(field: Field, n: int, k: int, rng: random.Random) -> LinearCode:
    """Random (n, k) code over `field` (full-rank by rejection)."""
    q = field.order
    while True:
        rows = [[rng.randrange(q) for _ in range(n)] for _ in range(k)]
        try:
            return code_from_generator(field, rows)
        except Exception:
            continue


def random_partition(n: int, rng: random.Random, max_blocks: int = 6) -> Partition:
    """Random partition with scattered (non-contiguous) block assignment."""
    p = rng.randint(1, min(n, max_blocks))
    cuts = sorted(rng.sample(range(1, n), p - 1))
    sizes = tuple(b - a for a, b in zip((0, *cuts), (*cuts, n)))
    coords = list(range(n))
    rng.shuffle(coords)
    assignment = [0] * n
    pos = 0
    for b, s in enumerate(sizes):
        for j in coords[pos:pos + s]:
            assignment[j] = b
        pos += s
    return Partition(sizes, tuple(assignment))


# -- suites -------------------------------------------------------------------


def suite_gf(rng: random.Random) -> list[CheckResult]:
    out = []
    small = [2, 3, 4, 5, 7, 8, 9, 16]
    larger = [27, 32, 64, 128, 256]

    ok = True
    for q in small + larger:
        f = field_from_order(q)
        if any(f.mul(a, f.inv(a)) != 1 for a in range(1, q)):
            ok = False
    out.append(CheckResult("gf:inverses-exhaustive", ok))

    ok = True
    for q in small:
        f = field_from_order(q)
        elems = range(q)
        for a in elems:
            for b in elems:
                for c in elems:
                    if f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c)):
                        ok = False
                    if f.add(f.add(a, b), c) != f.add(a, f.add(b, c)):
                        ok = False
                    if f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c)):
                        ok = False
    out.append(CheckResult("gf:associativity-distributivity", ok))

    ok = True
    for q in small + larger:
        f = field_from_order(q)
        g = f.generator()
        seen = set()
        v = 1
        for _ in range(q - 1):
            seen.add(v)
            v = f.mul(v, g)
        if len(seen) != q - 1:
            ok = False
    out.append(CheckResult("gf:multiplicative-group-cyclic", ok))

    ok = True
    for q in (8, 16, 64, 256):
        f = field_from_order(q)
        f.build_tables()
        for a in range(q):
            for b in range(q):
                if f.mul(a, b) != f._mul_raw(a, b):
                    ok = False
    out.append(CheckResult("gf:table-path-agrees-with-raw", ok))
    return out


def suite_codes(rng: random.Random) -> list[CheckResult]:
    out = []
    f8, f16 = Field(2, 3), Field(2, 4)
    samples = [rs_code(f8, 7, 3), rs_code(f8, 7, 5), rs_code(f16, 15, 5),
               rm1_code(3), rm1_code(4),
               code_from_generator(Field(2, 1), PAPER_COUNTEREXAMPLE_ROWS)]

    ok = all(sum(brute_force_weights(c)) == c.size for c in samples)
    out.append(CheckResult("codes:enumeration-total-q^k", ok))

    ok = True
    for (q, n, k) in [(8, 7, 3), (8, 7, 5), (8, 6, 4), (16, 15, 5), (16, 10, 4)]:
        c = rs_code(field_from_order(q), n, k)
        if min_distance(c) != n - k + 1:
            ok = False
    out.append(CheckResult("codes:rs-minimum-distance-singleton", ok))

    ok = True
    for c in samples + [random_code(field_from_order(q), rng.randint(4, 9), rng.randint(1, 3), rng)
                        for q in (2, 4, 8)]:
        cd = dual(c)
        if cd.k != c.n - c.k:
            ok = False
        fld = c.field
        for r1 in c.generator:
            for r2 in cd.generator:
                s = 0
                for a, b in zip(r1, r2):
                    s = fld.add(s, fld.mul(a, b))
                if s:
                    ok = False
    out.append(CheckResult("codes:dual-orthogonal-complement", ok))

    c = rs_code(f8, 7, 3)
    part = random_partition(7, rng)
    t1 = brute_force_pwe(c, part)
    coords = list(range(7))
    by_block: dict[int, list[int]] = {}
    for j, b in enumerate(part.assignment):
        by_block.setdefault(b, []).append(j)
    assignment = list(part.assignment)
    for block, js in by_block.items():
        shuffled = js[:]
        rng.shuffle(shuffled)
        for j_old, j_new in zip(js, shuffled):
            assignment[j_new] = part.assignment[j_old]
    t2 = brute_force_pwe(c, Partition(part.sizes, tuple(assignment)))
    out.append(CheckResult("codes:pwe-invariant-within-block-permutation", t1 == t2))

    g = f8.generator()
    pts = [f8.pow(g, i) for i in range(7)]
    alt = list(reversed(pts))
    ta = brute_force_pwe(rs_code(f8, 7, 3, eval_points=pts), Partition.contiguous((2, 5)))
    tb = brute_force_pwe(rs_code(f8, 7, 3, eval_points=alt), Partition.contiguous((2, 5)))
    out.append(CheckResult("codes:rs-eval-order-invariance", ta == tb))
    return out


def _oracle_codes():
    for q in (4, 8, 16):
        field = field_from_order(q)
        for n in range(1, q):
            for k in range(1, n + 1):
                if q**k <= 1 << 20:
                    yield field, q, n, k


def suite_oracle(rng: random.Random, partitions_per_code: int = 20) -> list[CheckResult]:
    """pwe_direct == pwe_product == brute force, coefficient for coefficient."""
    failures = []
    codes = 0
    tables = 0
    for field, q, n, k in _oracle_codes():
        code = rs_code(field, n, k)
        params = MdsParams(n, k, q)
        weights = mds_enum.weight_distribution(params)
        codes += 1
        for _ in range(partitions_per_code):
            part = random_partition(n, rng)
            sizes = part.sizes
            brute = brute_force_pwe(code, part).counts
            tables += 1
            for profile in itertools.product(*[range(s + 1) for s in sizes]):
                w = sum(profile)
                prod = mds_enum._product_count(weights[w], n, w, sizes, profile) \
                    if weights[w] else 0
                direct = mds_enum.pwe_direct(params, sizes, profile)
                if not (prod == direct == brute.get(profile, 0)):
                    failures.append((q, n, k, sizes, profile))
    detail = f"{codes} codes, {tables} tables" + (f"; failures: {failures[:3]}" if failures else "")
    return [CheckResult("oracle:direct==product==brute-force", not failures, detail)]


IDENTITY_PARAMS = [MdsParams(7, 3, 8), MdsParams(7, 5, 8),
                   MdsParams(15, 11, 16), MdsParams(15, 7, 16)]


def suite_identities(rng: random.Random) -> list[CheckResult]:
    out = []

    ok = all(mds_enum.check_convolution_identity(prm, h).holds
             for prm in IDENTITY_PARAMS for h in range(prm.d, prm.n + 1))
    out.append(CheckResult("identities:psi-convolution", ok))

    ok = all(mds_enum.check_subset_identity(prm, s, h).holds
             for prm in IDENTITY_PARAMS
             for s in range(1, prm.k + 1)
             for h in range(prm.d, prm.n + 1))
    out.append(CheckResult("identities:psi-subset-weighted", ok))

    ok = True
    for prm in IDENTITY_PARAMS:
        E = mds_enum.weight_distribution(prm)
        for s in range(1, prm.n):
            for h in range(prm.n + 1):
                lhs = prm.n * sum(w * mds_enum.iowe(prm, s, w, h) for w in range(1, s + 1))
                if lhs != s * h * E[h]:
                    ok = False
    out.append(CheckResult("identities:s-coordinate-weight-share", ok))

    ok = True
    for prm in IDENTITY_PARAMS:
        E = mds_enum.weight_distribution(prm)
        for h in range(prm.n + 1):
            for s in (1, prm.k, prm.n - 1):
                lo, hi = max(0, h - (prm.n - s)), min(s, h)
                if sum(mds_enum.iowe(prm, s, w, h) for w in range(lo, hi + 1)) != E[h]:
                    ok = False
    out.append(CheckResult("identities:iowe-marginal-is-E(h)", ok))

    prm = MdsParams(15, 11, 16)
    merged = mds_enum.pwgf(prm, (3, 3, 5, 4)).collapse([0, 0, 1, 2], 3)
    direct = mds_enum.pwgf(prm, (6, 5, 4))
    out.append(CheckResult("identities:pwgf-merge-blocks", merged == direct))

    ok = True
    for prm in (MdsParams(7, 3, 8), MdsParams(15, 11, 16)):
        sizes = (2, 2, prm.n - 4)
        for _ in range(50):
            w1, w2 = rng.randint(0, 2), rng.randint(0, 2)
            w3 = rng.randint(0, prm.n - 4)
            a = mds_enum.pwe_product(prm, sizes, (w1, w2, w3))
            b = mds_enum.pwe_product(prm, sizes, (w2, w1, w3))
            if a != b:
                ok = False
    out.append(CheckResult("identities:profile-permutation-symmetry", ok))

    ok = True
    for prm in IDENTITY_PARAMS:
        sizes = (prm.k, prm.n - prm.k)
        total = sum(mds_enum.pwe_product(prm, sizes, (w1, w2))
                    for w1 in range(sizes[0] + 1) for w2 in range(sizes[1] + 1))
        if total != prm.q**prm.k:
            ok = False
    out.append(CheckResult("identities:enumerator-total-q^k", ok))
    return out


def suite_binary(rng: random.Random) -> list[CheckResult]:
    out = []
    f = binary_avg.bit_substitution_poly
    ok = (f(1).sorted_terms() == [((1,), Fraction(1))]
          and all(f(m).evaluate([1]) == 1 for m in range(1, 9))
          and all(f(m).coeff((0,)) == 0 for m in range(1, 9)))
    out.append(CheckResult("binary:substitution-poly-normalized", ok))

    ok = True
    for prm, s_values in [(MdsParams(7, 3, 8), (1, 3)), (MdsParams(7, 5, 8), (1, 3))]:
        m = binary_avg.bits_per_symbol(prm.q)
        fpoly = binary_avg.bit_substitution_poly(m)
        f_xy = SparsePoly(2, {(e, e): c for (e,), c in fpoly.terms.items()})
        f_y = SparsePoly(2, {(0, e): c for (e,), c in fpoly.terms.items()})
        for s in s_values:
            substituted = mds_enum.pwgf(prm, (s, prm.n - s)).substitute([f_xy, f_y])
            for w_b in range(m * s + 1):
                for h_b in range(m * prm.n + 1):
                    if binary_avg.avg_binary_iowe(prm, s, w_b, h_b) != \
                            substituted.coeff((w_b, h_b)):
                        ok = False
    out.append(CheckResult("binary:iowe-closed-form==substitution", ok))

    ok = True
    for prm in (MdsParams(7, 3, 8), MdsParams(7, 5, 8)):
        m = binary_avg.bits_per_symbol(prm.q)
        E_b = binary_avg.avg_binary_wgf(prm)
        for s in (1, 3):
            for h_b in range(m * prm.n + 1):
                lhs = prm.n * sum(w_b * binary_avg.avg_binary_iowe(prm, s, w_b, h_b)
                                  for w_b in range(1, m * s + 1))
                if lhs != s * h_b * E_b[h_b]:
                    ok = False
    out.append(CheckResult("binary:bit-weight-share-identity", ok))

    ok = True
    for prm in (MdsParams(7, 3, 8), MdsParams(15, 11, 16)):
        m = binary_avg.bits_per_symbol(prm.q)
        E_b = binary_avg.avg_binary_wgf(prm)
        if sum(E_b) != prm.q**prm.k or any(c < 0 for c in E_b):
            ok = False
        sizes = (3, prm.n - 3)
        merged = binary_avg.avg_binary_pwgf(mds_enum.pwgf(prm, sizes), m) \
            .collapse([0, 0], 1)
        if merged != SparsePoly(1, {(h,): c for h, c in enumerate(E_b) if c}):
            ok = False
    out.append(CheckResult("binary:pwgf-collapse-matches-wgf", ok))
    return out


def suite_duality(rng: random.Random) -> list[CheckResult]:
    out = []

    transform_cases = []
    for q in (2, 4, 8):
        field = field_from_order(q)
        for _ in range(4):
            n = rng.randint(3, 10)
            k = rng.randint(1, min(n, 5 if q == 8 else n))
            transform_cases.append(random_code(field, n, k, rng))
    transform_cases.append(rs_code(Field(2, 3), 7, 3))
    transform_cases.append(code_from_generator(Field(2, 1), PAPER_COUNTEREXAMPLE_ROWS))

    ok = True
    for c in transform_cases:
        n1 = rng.randint(1, c.n - 1)
        part = Partition.contiguous((n1, c.n - n1))
        lhs = duality.macwilliams_pwe(brute_force_pwe(c, part), c.field.order, c.k)
        rhs = brute_force_pwe(dual(c), part)
        if lhs != rhs:
            ok = False
    out.append(CheckResult(
        "duality:macwilliams==brute-force-dual",
        ok, f"{len(transform_cases)} codes over GF(2)/GF(4)/GF(8)"))

    ok = True
    for c in transform_cases[:6]:
        wt = brute_force_weights(c)
        classical = duality.macwilliams_wgf(wt, c.n, c.field.order, c.k)
        if classical != brute_force_weights(dual(c)):
            ok = False
    out.append(CheckResult("duality:classical-wgf-transform", ok))

    f8 = Field(2, 3)
    paper53 = code_from_generator(Field(2, 1), PAPER_COUNTEREXAMPLE_ROWS)
    hamming = code_from_generator(Field(2, 1), HAMMING74_ROWS)
    holding = [rs_code(f8, 7, 3), rs_code(f8, 7, 5), rm1_code(3), rm1_code(4),
               dual(rm1_code(3)), hamming]
    ok = all(duality.property_a_check(c).holds for c in holding)
    rep = duality.property_a_check(paper53)
    ok = ok and not rep.holds and len(rep.witnesses) > 0
    out.append(CheckResult("duality:property-a-classification", ok))

    ok = True
    for c in holding + [paper53]:
        a, b = duality.dual_property_a(c)
        if a != b:
            ok = False
    out.append(CheckResult("duality:property-a-dual-agreement", ok))
    return out


def suite_errorprob(rng: random.Random, seed: int, trials: int = 10**6) -> list[CheckResult]:
    out = []

    ok = True
    for q, n in ((2, 7), (8, 7), (16, 15)):
        for h in range(n + 1):
            for p in (0.01, 0.1, 0.4):
                s = sum(errorprob.sphere_distance_prob(n, q, h, t, p)
                        for t in range(n + 1))
                if abs(s - 1.0) > 1e-12:
                    ok = False
    out.append(CheckResult("errorprob:distance-distribution-total-1", ok))

    code = rs_code(Field(2, 3), 7, 3)
    E = brute_force_weights(code)
    oracle = BmSphereOracle(code)
    ok = True
    details = []
    for p in (0.05, 0.1, 0.2):
        sim = oracle.simulate(p, trials, seed)
        cep = errorprob.cep_bm(E, 7, 5, p, 8)
        sep = errorprob.sep_bm(E, 7, 5, p, 8)
        if not (sim.cep.within(cep) and sim.sep.within(sep)):
            ok = False
        details.append(f"p={p}: |cep-mc|={abs(cep - sim.cep.value):.2e}")
    out.append(CheckResult("errorprob:monte-carlo-agreement", ok, "; ".join(details)))

    prm = MdsParams(15, 11, 16)
    sizes = (3, 3, 5, 4)
    poly = mds_enum.pwgf(prm, sizes)
    E15 = mds_enum.weight_distribution(prm)
    ok = True
    for j in range(4):
        ow = errorprob.user_iowe(poly, j)
        for h in range(16):
            if sum(c for (w, hh), c in ow.items() if hh == h) != E15[h]:
                ok = False
    out.append(CheckResult("errorprob:user-iowe-marginal-is-E(h)", ok))

    grid = errorprob.snr_grid(4.0, 8.0, 0.5)
    free = (errorprob.FREE,) * 4
    curves = [errorprob.multiuser_curve(prm, sizes, u, free, grid, "sep")
              for u in range(3)]
    ok = curves[0].points == curves[1].points == curves[2].points
    out.append(CheckResult("errorprob:unconditional-sep-user-independent", ok))

    cep_curve = errorprob.bm_curve(prm, grid, "cep")
    sep_curve = errorprob.bm_curve(prm, grid, "sep")
    ok = all(s[1] <= c[1] for s, c in zip(sep_curve.points, cep_curve.points))
    out.append(CheckResult("errorprob:sep<=cep-pointwise", ok))

    Z, F_, R = errorprob.ZERO, errorprob.FULL, errorprob.FREE
    cases = [(Z, Z, R, R), (Z, F_, R, R), (F_, F_, R, R)]
    ok = True
    for metric in ("sep", "bep"):
        c00, c01, c11 = (errorprob.multiuser_curve(prm, sizes, 2, conds, grid, metric)
                         for conds in cases)
        for (g, v00), (_, v01), (_, v11) in zip(c00.points, c01.points, c11.points):
            if not (v11 < v01 < v00):
                ok = False
    out.append(CheckResult("errorprob:conditional-ordering-(1,1)<(0,1)<(0,0)", ok))

    ok = True
    for curve in [cep_curve, sep_curve, errorprob.bep_curve(prm, grid)] + curves:
        probs = [pt[1] for pt in curve.points]
        if any(not 0.0 <= v <= 1.0 for v in probs):
            ok = False
        if any(b > a for a, b in zip(probs, probs[1:])):
            ok = False
    out.append(CheckResult("errorprob:curves-in-range-and-monotone", ok))
    return out


SUITES: dict[str, Callable] = {
    "gf": lambda rng, seed: suite_gf(rng),
    "codes": lambda rng, seed: suite_codes(rng),
    "oracle": lambda rng, seed: suite_oracle(rng),
    "identities": lambda rng, seed: suite_identities(rng),
    "binary": lambda rng, seed: suite_binary(rng),
    "duality": lambda rng, seed: suite_duality(rng),
    "errorprob": lambda rng, seed: suite_errorprob(rng, seed),
}


def run_suites(names: list[str], seed: int, stream: Optional[TextIO] = None) -> bool:
    """Run the named suites; print one line per check.  True iff all pass."""
    stream = stream or sys.stdout
    if "all" in names:
        names = list(SUITES)
    all_ok = True
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}; choose from "
                             f"{', '.join([*SUITES, 'all'])}")
        rng = random.Random(seed)
        for check in SUITES[name](rng, seed):
            status = "ok" if check.passed else "FAIL"
            detail = f"  ({check.detail})" if check.detail else ""
            print(f"{status:4s} - {check.name}{detail}", file=stream)
            all_ok = all_ok and check.passed
    return all_ok
