"""Verification suites: every structural identity as a seeded sweep.

Each suite returns a SuiteResult holding per-check pass/fail counts and the
failing witnesses (inputs), so one bad composition is enough to locate a
regression.  Suites take nmax and a seed; all randomness flows through
random.Random(seed), so reports are reproducible byte for byte.

The registry at the bottom records which spec-level operations each suite
exercises; running everything must cover all of them (coverage_gap() empty).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import affine, cells, constructions as cons, lattices, partitions as parts
from .affine import Side
from .laurent import (
    BOREL_PLUS,
    LaurentMatrix,
    LaurentPoly,
    borel_membership,
    det,
    invert,
)
from .partitions import Composition, compositions_of, partitions_of
from .sampling import (
    jordan_matrix,
    random_conjugate_frame,
    random_finite_borel,
    random_iwahori,
    random_nilradical,
    random_parabolic,
    random_sl,
    random_window,
)

__all__ = [
    "CheckResult",
    "SuiteResult",
    "SUITES",
    "run_suite",
    "run_suites",
    "coverage_gap",
    "report_obj",
    "report_text",
]


@dataclass
class CheckResult:
    name: str
    passed: int = 0
    failed: int = 0
    witnesses: list = field(default_factory=list)

    def record(self, ok: bool, witness: str = "") -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            self.witnesses.append(witness or "unspecified input")

    def expect_equal(self, got, want, witness: str) -> None:
        self.record(got == want, f"{witness}: got {got!r}, want {want!r}")


@dataclass
class SuiteResult:
    suite: str
    nmax: int
    seed: int
    checks: list

    @property
    def failed(self) -> int:
        return sum(c.failed for c in self.checks)

    @property
    def passed(self) -> int:
        return sum(c.passed for c in self.checks)

    @property
    def ok(self) -> bool:
        return self.failed == 0


def _comps(nmax: int):
    for n in range(1, nmax + 1):
        yield from compositions_of(n)


# ---------------------------------------------------------------------------
# lengths
# ---------------------------------------------------------------------------


def suite_lengths(nmax: int, seed: int, samples: int = 200) -> SuiteResult:
    rng = random.Random(seed)
    oracle = CheckResult("length_equals_inversion_count")
    step = CheckResult("length_changes_by_one_under_simple_factors")
    roundtrip = CheckResult("window_matrix_roundtrip")
    root_sign = CheckResult("root_sign_matches_length_step")
    translate = CheckResult("translation_decomposition")

    pool = []
    for n in range(2, min(4, nmax) + 1):
        pool.extend(affine.bruhat_ball(n, 6))
    for n in range(5, min(6, nmax) + 1):
        pool.extend(random_window(rng, n) for _ in range(samples))

    for w in pool:
        n = w.n
        lw = w.length()
        oracle.expect_equal(lw, w.length_oracle(), f"window {w.window}")
        roundtrip.expect_equal(affine.from_matrix(w.to_matrix()), w, f"window {w.window}")
        for i in range(n):
            ls = (w * affine.simple_reflection(n, i)).length()
            step.record(abs(ls - lw) == 1, f"window {w.window}, s_{i}")
        for a in range(1, n + 1):
            for b in range(a + 1, n + 1):
                pos = affine.act_on_root(w, affine.Root(a, b, n)).positive
                longer = (w * affine.reflection(n, a, b)).length() > lw
                root_sign.record(pos == longer, f"window {w.window}, root ({a},{b})")
        sigma, q = affine.decompose_translation(w)
        ok = sigma.is_finite() and sum(q) == 0 and sigma * affine.translation(n, q) == w
        translate.record(ok, f"window {w.window}")

    return SuiteResult("lengths", nmax, seed, [oracle, step, roundtrip, root_sign, translate])


# ---------------------------------------------------------------------------
# bruhat
# ---------------------------------------------------------------------------


def _reduced_word(w) -> list[int]:
    word = []
    cur = w
    while not cur.is_identity():
        i = next(i for i in range(cur.n) if cur.right_descent(i))
        word.append(i)
        cur = cur * affine.simple_reflection(cur.n, i)
    word.reverse()
    return word


def _subword_leq(v, w) -> bool:
    """Subword criterion: some subsequence of a fixed reduced word of w
    multiplies to v using exactly length(v) letters."""
    word = _reduced_word(w)
    lv = v.length()
    n = v.n
    from itertools import combinations

    for k in (lv,):
        for subset in combinations(range(len(word)), k):
            prod = affine.identity(n)
            for idx in subset:
                prod = prod * affine.simple_reflection(n, word[idx])
            if prod == v:
                return True
    return lv == 0


def suite_bruhat(nmax: int, seed: int, ball_radius: int = 5) -> SuiteResult:
    agreement = CheckResult("bruhat_matches_subword_oracle")
    quad_cases = CheckResult("two_reflection_case_split")
    quad_chains = CheckResult("two_reflection_chains_confirmed")

    for n in range(2, min(3, nmax) + 1):
        ball = affine.bruhat_ball(n, ball_radius)
        for v in ball:
            for w in ball:
                agreement.expect_equal(
                    affine.bruhat_leq(v, w),
                    _subword_leq(v, w),
                    f"n={n}, v={v.window}, w={w.window}",
                )

    for n in range(2, min(4, nmax) + 1):
        ball = affine.bruhat_ball(n, ball_radius)
        for w in ball:
            sigma, c = w.sigma_and_orders()
            for a in range(1, n + 1):
                for b in range(a + 1, n + 1):
                    tag = f"n={n}, w={w.window}, (a,b)=({a},{b})"
                    res = affine.quad_minimum(w, a, b)
                    want_case = 1 if c[a - 1] == c[b - 1] else 2
                    quad_cases.expect_equal(res.case, want_case, tag)
                    if res.case == 1:
                        s_l = affine.reflection(
                            n, min(sigma[a - 1], sigma[b - 1]), max(sigma[a - 1], sigma[b - 1])
                        )
                        s_r = affine.reflection(n, a, b)
                        quad_cases.record(s_l * w == w * s_r, tag + " commutation")
                    ok = True
                    for chain in res.chains:
                        for x, y in zip(chain, chain[1:]):
                            if not (x.length() < y.length() and affine.bruhat_leq(x, y)):
                                ok = False
                        if chain[0] != res.minimum:
                            ok = False
                    if res.case == 2:
                        elements = {e.window for chain in res.chains for e in chain}
                        ok = ok and len(elements) == 4
                        ok = ok and all(
                            affine.bruhat_leq(res.minimum, e)
                            for chain in res.chains
                            for e in chain
                        )
                    quad_chains.record(ok, tag)

    return SuiteResult("bruhat", nmax, seed, [agreement, quad_cases, quad_chains])


# ---------------------------------------------------------------------------
# kappa
# ---------------------------------------------------------------------------


def suite_kappa(nmax: int, seed: int, samples: int = 3) -> SuiteResult:
    rng = random.Random(seed)
    bundle_ok = CheckResult("kappa_bundle_identities")
    report_ok = CheckResult("kappa_minimal_stable_length")
    compact = CheckResult("compactification_iff_two_parts")
    varpi_dec = CheckResult("varpi_equals_wg_kappa_wp")
    tau_len = CheckResult("translation_length_is_twice_dim")
    jordan = CheckResult("richardson_jordan_type")
    dominance = CheckResult("nilradical_types_below_richardson")
    conj_inv = CheckResult("conjugate_involution")

    for lam in _comps(nmax):
        tag = f"lambda={lam.parts}"
        try:
            bundle = cons.kappa_bundle(lam)
            bundle_ok.record(True)
        except Exception as exc:  # noqa: BLE001 - report, do not crash the sweep
            bundle_ok.record(False, f"{tag}: {exc}")
            continue

        rep = cons.check_kappa(lam)
        report_ok.record(
            rep.in_min_reps and rep.left_stable and rep.lengths_match,
            f"{tag}: {rep}",
        )
        # For a single block the parabolic is the whole group and the cell is
        # a point; the dichotomy concerns proper parabolic subgroups.
        if lam.r >= 2:
            compact.expect_equal(rep.is_compactification, lam.r == 2, tag)
        else:
            compact.record(rep.is_compactification, tag)

        try:
            cons.decompose_varpi(lam)
            varpi_dec.record(True)
        except Exception as exc:  # noqa: BLE001
            varpi_dec.record(False, f"{tag}: {exc}")

        tau_len.expect_equal(bundle.tau_q.length(), 2 * cons.dim_g_mod_p(lam), tag)
        tau_len.expect_equal(
            affine.min_coset_rep(bundle.kappa, cons.finite_subset(lam.n), Side.RIGHT),
            bundle.tau_q,
            tag,
        )

        nu = lam.column_partition()
        z = cons.richardson_element(lam)
        got = parts.jordan_type(z) if lam.n else None
        jordan.expect_equal(got, nu, tag)
        conj_inv.expect_equal(parts.conjugate(parts.conjugate(nu)), nu, tag)
        for _ in range(samples):
            x = random_nilradical(rng, lam)
            dominance.record(
                parts.dominance_leq(parts.jordan_type(x), nu),
                f"{tag}: X={x!r}",
            )

    return SuiteResult(
        "kappa",
        nmax,
        seed,
        [bundle_ok, report_ok, compact, varpi_dec, tau_len, jordan, dominance, conj_inv],
    )


# ---------------------------------------------------------------------------
# varpi
# ---------------------------------------------------------------------------


def suite_varpi(nmax: int, seed: int) -> SuiteResult:
    identity_ok = CheckResult("iwahori_certificate_product")
    borel_ok = CheckResult("witnesses_in_standard_iwahori")
    negative = CheckResult("corner_column_off_by_one_fails")
    unit_det = CheckResult("deformation_determinant_one")
    inverse_ok = CheckResult("nilpotent_deformation_inverse")

    for lam in _comps(nmax):
        tag = f"lambda={lam.parts}"
        try:
            wit = cons.varpi_witness(lam)
            identity_ok.record(True)
        except Exception as exc:  # noqa: BLE001
            identity_ok.record(False, f"{tag}: {exc}")
            continue
        borel_ok.record(
            BOREL_PLUS in borel_membership(wit.b) and BOREL_PLUS in borel_membership(wit.c),
            tag,
        )
        nu = lam.column_partition()
        if nu.part(1) >= 2:
            negative.record(not cons.broken_corner_witness(lam), tag)

        n = lam.n
        z = cons.richardson_element(lam)
        point = LaurentMatrix.identity(n) - z.scale_t(-1)
        d = det(point)
        unit_det.record(d == LaurentPoly.one() and d.ord() == 0, f"{tag}: det={d!r}")

        inv = invert(point)
        series = LaurentMatrix.identity(n)
        power = LaurentMatrix.identity(n)
        for k in range(1, n):
            power = power * z
            series = series + power.scale_t(-k)
        inverse_ok.expect_equal(inv, series, tag)

    return SuiteResult("varpi", nmax, seed, [identity_ok, borel_ok, negative, unit_det, inverse_ok])


# ---------------------------------------------------------------------------
# divisors
# ---------------------------------------------------------------------------


def suite_divisors(nmax: int, seed: int, samples: int = 10) -> SuiteResult:
    rng = random.Random(seed)
    data_ok = CheckResult("divisor_bundle_identities")
    below = CheckResult("divisor_rep_below_kappa")
    full_len = CheckResult("antidiagonal_length_is_dim_flag")
    witness_red = CheckResult("witness_reduction_to_monomial")
    random_cells = CheckResult("random_conormal_points_hit_divisor_cell")
    fiber_full = CheckResult("identity_coset_conormal_count")

    for lam in _comps(nmax):
        if lam.r < 2:
            continue
        n = lam.n
        sp = cons.parabolic_subset(lam)
        kappa = cons.kappa_bundle(lam).kappa
        fiber = cons.conormal_directions(affine.identity(n), sp)
        fiber_full.expect_equal(len(fiber), cons.dim_g_mod_p(lam), f"lambda={lam.parts}")
        for i in range(1, lam.r):
            tag = f"lambda={lam.parts}, i={i}"
            try:
                data = cons.divisor_data(lam, i)
                data_ok.record(True)
            except Exception as exc:  # noqa: BLE001
                data_ok.record(False, f"{tag}: {exc}")
                continue
            below.record(affine.bruhat_leq(data.v_k_min, kappa), tag)
            full_len.expect_equal(data.v_k.length(), n * (n - 1) // 2, tag)
            for s in range(samples):
                a = Fraction(rng.choice([x for x in range(-4, 5) if x]), rng.choice([1, 2, 3]))
                stag = f"{tag}, sample {s}, a={a}"
                try:
                    wit = cons.divisor_witnesses(lam, i, a)
                    ok = (
                        BOREL_PLUS in borel_membership(wit.b1)
                        and BOREL_PLUS in borel_membership(wit.b2)
                        and BOREL_PLUS in borel_membership(wit.b3)
                        and affine.from_matrix(wit.reduced) == data.v_k_min
                    )
                    witness_red.record(ok, stag)
                except Exception as exc:  # noqa: BLE001
                    witness_red.record(False, f"{stag}: {exc}")
                b = random_finite_borel(rng, n)
                x = cons.unit(n, data.gamma.i, data.gamma.j, LaurentPoly.constant(a))
                try:
                    point, flag = cells.phi_map(b * data.lift, x, lam)
                    flag.validate()
                    random_cells.expect_equal(
                        cells.parabolic_cell(point, sp), data.v_k_min, stag
                    )
                except Exception as exc:  # noqa: BLE001
                    random_cells.record(False, f"{stag}: {exc}")

    return SuiteResult(
        "divisors",
        nmax,
        seed,
        [data_ok, below, full_len, witness_red, random_cells, fiber_full],
    )


# ---------------------------------------------------------------------------
# embeddings
# ---------------------------------------------------------------------------


def suite_embeddings(
    nmax: int,
    seed: int,
    samples: int = 50,
    conjugates: int = 10,
    flag_samples: int = 20,
) -> SuiteResult:
    rng = random.Random(seed)
    witness_cell = CheckResult("dense_point_hits_kappa_cell")
    bounded = CheckResult("cotangent_image_below_kappa")
    flag_inv = CheckResult("image_flags_satisfy_invariants")
    equivariance = CheckResult("phi_constant_on_orbit_classes")
    psi_equiv = CheckResult("psi_lattice_equivariance")
    psi_conj = CheckResult("psi_cell_depends_only_on_jordan_type")
    psi_bound = CheckResult("psi_cell_below_translation")
    mv_match = CheckResult("two_step_flag_models_agree")
    lattice_axioms = CheckResult("lattice_dimension_identities")
    cell_invariance = CheckResult("cell_invariant_under_iwahori_factors")

    for n in range(1, nmax + 1):
        e_lat = lattices.Lattice.standard(n)
        lattice_axioms.expect_equal(lattices.vdim(e_lat), 0, f"n={n} standard")
        lattice_axioms.expect_equal(lattices.vdim(e_lat.scaled(1)), -n, f"n={n} t*standard")
        lattice_axioms.expect_equal(
            lattices.quotient_dim(e_lat, e_lat.scaled(1)), n, f"n={n} quotient"
        )

    for lam in _comps(nmax):
        n = lam.n
        sp = cons.parabolic_subset(lam)
        bundle = cons.kappa_bundle(lam)
        kappa = bundle.kappa
        z = cons.richardson_element(lam)
        varpi = cons.varpi_witness(lam).varpi

        # kappa = w_g^-1 * varpi * w_p^-1 with w_g finite, so the frame
        # lifting w_g^-1 carries the dense point into the top cell.
        w_g, _ = cons.decompose_varpi(lam)
        witness_frame = w_g.inverse()
        tag = f"lambda={lam.parts}"
        a = cons.lift_finite(witness_frame)
        point, flag = cells.phi_map(a, z, lam)
        witness_cell.expect_equal(cells.parabolic_cell(point, sp), kappa, tag)
        try:
            flag.validate()
            flag_inv.record(True)
        except Exception as exc:  # noqa: BLE001
            flag_inv.record(False, f"{tag}: {exc}")

        for s in range(samples):
            g = random_sl(rng, n)
            x = random_nilradical(rng, lam)
            stag = f"{tag}, sample {s}"
            point, flag = cells.phi_map(g, x, lam)
            cell = cells.parabolic_cell(point, sp)
            bounded.record(affine.bruhat_leq(cell, kappa), stag)
            try:
                flag.validate()
                flag_inv.record(True)
            except Exception as exc:  # noqa: BLE001
                flag_inv.record(False, f"{stag}: {exc}")
            if s == 0 and n >= 2:
                b1 = random_iwahori(rng, n)
                b2 = random_iwahori(rng, n)
                cell_invariance.expect_equal(
                    cells.iwahori_cell(b1 * point * b2),
                    cells.iwahori_cell(point),
                    stag,
                )
                p = random_parabolic(rng, lam)
                pinv = invert(p)
                _, flag2 = cells.phi_map(g * p, pinv * x * p, lam)
                equivariance.expect_equal(flag2, flag, stag)

        if lam.r == 2:
            for s in range(flag_samples):
                g = random_sl(rng, n)
                x = random_nilradical(rng, lam)
                stag = f"{tag}, mv sample {s}"
                ginv = invert(g)
                conj = g * x * ginv
                mv = cells.mv_flag(conj, lam, frame=g)
                _, flag = cells.phi_map(g, x, lam)
                mv_match.expect_equal(cells.beta(mv, lam), flag, stag)

    for n in range(2, min(5, nmax) + 1):
        finite = cons.finite_subset(n)
        for mu in partitions_of(n):
            base = jordan_matrix(mu)
            lam_conj = Composition(parts=tuple(parts.conjugate(mu).parts))
            tau = cons.kappa_bundle(lam_conj).tau_q
            base_cell = cells.parabolic_cell(cells.psi_map(base)[0], finite)
            psi_bound.record(
                affine.bruhat_leq(base_cell, tau), f"mu={mu.parts} base cell {base_cell.window}"
            )
            # Left translation by the frame moves the one-sided cell, so the
            # conjugation invariant is the spherical double coset; its
            # minimal representative matches the one of the translation
            # attached to the Jordan type.
            base_two_sided = affine.min_double_coset_rep(base_cell, finite)
            psi_conj.expect_equal(
                base_two_sided,
                affine.min_double_coset_rep(tau, finite),
                f"mu={mu.parts} against translation",
            )
            for c in range(conjugates):
                g, ginv = random_conjugate_frame(rng, n)
                x = g * base * ginv
                point, lat = cells.psi_map(x)
                psi_equiv.expect_equal(
                    lat,
                    cells.psi_map(base)[1].transformed(g),
                    f"mu={mu.parts}, conjugate {c}",
                )
                cell = cells.parabolic_cell(point, finite)
                psi_conj.expect_equal(
                    affine.min_double_coset_rep(cell, finite),
                    base_two_sided,
                    f"mu={mu.parts}, conjugate {c}",
                )
                psi_bound.record(
                    affine.bruhat_leq(cell, tau),
                    f"mu={mu.parts}, conjugate {c} cell {cell.window}",
                )

    return SuiteResult(
        "embeddings",
        nmax,
        seed,
        [
            witness_cell,
            bounded,
            flag_inv,
            equivariance,
            psi_equiv,
            psi_conj,
            psi_bound,
            mv_match,
            lattice_axioms,
            cell_invariance,
        ],
    )


# ---------------------------------------------------------------------------
# driver
# ---------------------------------------------------------------------------

SUITES = {
    "lengths": suite_lengths,
    "bruhat": suite_bruhat,
    "kappa": suite_kappa,
    "varpi": suite_varpi,
    "divisors": suite_divisors,
    "embeddings": suite_embeddings,
}

#: Spec-level operations exercised by each suite, for the coverage assertion.
OP_COVERAGE = {
    "lengths": {
        "affine.length", "affine.length_oracle", "affine.compose", "affine.reflection",
        "affine.from_matrix", "affine.act_on_root", "affine.decompose_translation",
    },
    "bruhat": {"affine.bruhat_leq", "affine.quad_minimum", "affine.compose"},
    "kappa": {
        "constructions.kappa", "constructions.check_kappa", "constructions.decompose_varpi",
        "affine.min_coset_rep", "partitions.jordan_type", "partitions.conjugate",
        "partitions.dominance_leq", "tableau.build", "constructions.richardson_Z",
    },
    "varpi": {
        "constructions.varpi_witness", "laurent.det", "laurent.ord", "laurent.invert",
        "laurent.borel_membership", "constructions.richardson_Z",
    },
    "divisors": {
        "constructions.divisor_data", "constructions.conormal_directions",
        "cells.parabolic_cell", "cells.phi_P", "affine.bruhat_leq",
    },
    "embeddings": {
        "cells.phi_P", "cells.psi", "cells.iwahori_cell", "cells.parabolic_cell",
        "cells.mv_embed", "lattices.vdim", "lattices.quotient_dim",
        "constructions.kappa", "affine.min_coset_rep",
    },
}

ALL_OPS = {
    "laurent.ord", "laurent.det", "laurent.invert", "laurent.borel_membership",
    "affine.from_matrix", "affine.compose", "affine.length", "affine.length_oracle",
    "affine.bruhat_leq", "affine.min_coset_rep", "affine.decompose_translation",
    "affine.reflection", "affine.act_on_root", "affine.quad_minimum",
    "partitions.conjugate", "partitions.dominance_leq", "partitions.jordan_type",
    "tableau.build",
    "constructions.kappa", "constructions.richardson_Z", "constructions.varpi_witness",
    "constructions.decompose_varpi", "constructions.check_kappa",
    "constructions.conormal_directions", "constructions.divisor_data",
    "lattices.vdim", "lattices.quotient_dim",
    "cells.phi_P", "cells.psi", "cells.iwahori_cell", "cells.parabolic_cell",
    "cells.mv_embed",
}


def coverage_gap(suite_names=None) -> set:
    names = suite_names if suite_names is not None else list(SUITES)
    covered = set()
    for name in names:
        covered |= OP_COVERAGE.get(name, set())
    return ALL_OPS - covered


def run_suite(name: str, nmax: int, seed: int, **kwargs) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    return SUITES[name](nmax, seed, **kwargs)


def run_suites(names, nmax: int, seed: int) -> list:
    return [run_suite(name, nmax, seed) for name in names]


def report_obj(results, nmax: int, seed: int, enforce_coverage: bool = False) -> dict:
    """Deterministic report object (schema 1).  Wall-clock time is reported
    only in the text rendering so that equal seeds give identical JSON.

    With enforce_coverage (the full-run case) an operation left unexercised
    counts as a failure.
    """
    gap = sorted(coverage_gap([r.suite for r in results]))
    return {
        "schema": 1,
        "nmax": nmax,
        "seed": seed,
        "suites": [
            {
                "suite": r.suite,
                "passed": r.passed,
                "failed": r.failed,
                "checks": [
                    {
                        "name": c.name,
                        "passed": c.passed,
                        "failed": c.failed,
                        "witnesses": list(c.witnesses),
                    }
                    for c in r.checks
                ],
            }
            for r in results
        ],
        "coverage_missing": gap,
        "coverage_enforced": enforce_coverage,
        "ok": all(r.ok for r in results) and not (enforce_coverage and gap),
    }


def report_text(obj: dict, duration: float | None = None) -> str:
    lines = []
    for suite in obj["suites"]:
        for check in suite["checks"]:
            status = "PASS" if check["failed"] == 0 else "FAIL"
            lines.append(
                f"{status}  {suite['suite']}.{check['name']}  "
                f"passed={check['passed']} failed={check['failed']}"
            )
            for w in check["witnesses"][:5]:
                lines.append(f"      witness: {w}")
    if obj.get("coverage_missing"):
        label = (
            "COVERAGE MISSING"
            if obj.get("coverage_enforced")
            else "note: operations not exercised by the selected suites"
        )
        lines.append(f"{label}: " + ", ".join(obj["coverage_missing"]))
    lines.append(
        ("ALL SUITES PASSED" if obj["ok"] else "FAILURES PRESENT")
        + (f"  ({duration:.2f}s)" if duration is not None else "")
    )
    return "\n".join(lines)
