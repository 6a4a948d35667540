"""The acceptance suite: every exit criterion of the toolkit as a callable
check, shared by the CLI (`lkrep verify all`) and the test suite.

Each criterion returns (passed, detail).  Random data uses fixed seeds so
results are reproducible.
"""

from __future__ import annotations

import math
import os
import random
import tempfile
import time
from typing import Callable

import numpy as np

from . import constants, density, forms, lie_dims, spectra
from .braids import BraidWord, compose, full_twist, parse_braid, random_word
from .reps import (
    PairBasis,
    burau_gen,
    charpoly,
    exact_det,
    lk_gen,
    mu_factor,
    rep_of_word,
    rep_of_word_numeric,
    sym_square,
)
from .laurent import ONE, Q, T, LaurentPoly2

Criterion = Callable[..., tuple[bool, str]]


def _word(n: int, *letters: int) -> BraidWord:
    return BraidWord(n, tuple((abs(l), 1 if l > 0 else -1) for l in letters))


def _random_torus_points(count: int, seed: int) -> list[tuple[complex, complex]]:
    rng = random.Random(seed)
    pts = []
    for _ in range(count):
        a = rng.uniform(-math.pi, math.pi)
        b = rng.uniform(-math.pi, math.pi)
        pts.append((complex(math.cos(a), math.sin(a)), complex(math.cos(b), math.sin(b))))
    return pts


def criterion_1_braid_relations(n_max: int = 6) -> tuple[bool, str]:
    """Yang-Baxter and commutativity as exact polynomial identities."""
    start = time.monotonic()
    checked = 0
    for n in range(3, min(6, n_max) + 1):
        for kind in ("burau", "lk"):
            for i in range(1, n - 1):
                lhs = rep_of_word(kind, _word(n, i, i + 1, i))
                rhs = rep_of_word(kind, _word(n, i + 1, i, i + 1))
                if lhs != rhs:
                    return False, f"Yang-Baxter fails for {kind}, n={n}, i={i}"
                checked += 1
            for i in range(1, n):
                for j in range(i + 2, n):
                    lhs = rep_of_word(kind, _word(n, i, j))
                    rhs = rep_of_word(kind, _word(n, j, i))
                    if lhs != rhs:
                        return False, f"commutativity fails for {kind}, n={n}, i={i}, j={j}"
                    checked += 1
    elapsed = time.monotonic() - start
    if elapsed >= 10.0:
        return False, f"relations verified but took {elapsed:.1f}s >= 10s"
    return True, f"{checked} exact relation identities, n <= {min(6, n_max)}, {elapsed:.1f}s"


def criterion_2_determinant(n_max: int = 6) -> tuple[bool, str]:
    """det of every Lawrence-Krammer generator equals -t(-q)^n exactly."""
    for n in range(3, min(5, n_max) + 1):
        expect = -(T * ((-Q) ** n))
        for i in range(1, n):
            det = exact_det(lk_gen(n, i))
            if det != expect:
                return False, f"det mismatch at n={n}, i={i}: {det}"
    return True, "exact symbolic determinant -t(-q)^n for n = 3,4,5, all generators"


def criterion_3_generator_spectrum(n_max: int = 6) -> tuple[bool, str]:
    """Computed generator eigenvalues match the closed-form multiset."""
    pts = _random_torus_points(10, seed=20240811)
    for n in range(3, min(6, n_max) + 1):
        for q, t in pts:
            got = spectra.eigen_multiset(lk_gen(n, 1).evaluate(q, t).entries, 1e-9)
            want = spectra.lk_generator_spectrum(n, q, t, 1e-9)
            if not got.equals(want, 1e-9):
                return False, f"spectrum mismatch n={n} q={q} t={t}"
    return True, f"closed form matches eigensolver at 10 random torus points, n <= {min(6, n_max)}"


def criterion_4_sym_square(n_max: int = 6) -> tuple[bool, str]:
    """Characteristic polynomials of LK at t=-1 and Sym^2 Burau agree exactly."""
    rng = random.Random(20240804)
    plan = [(3, 8, 7), (4, 8, 7), (5, 6, 6)]
    total = 0
    for n, length, count in plan:
        if n > n_max:
            continue
        for _ in range(count):
            w = random_word(n, length, rng)
            lk_at = rep_of_word("lk", w).substitute_t(-1)
            sym2 = sym_square(rep_of_word("burau", w))
            if charpoly(lk_at) != charpoly(sym2):
                return False, f"char poly mismatch for n={n}, word {w}"
            total += 1
    return True, f"{total} random words with exactly equal characteristic polynomials"


def criterion_5_restriction_recursion(n_max: int = 6) -> tuple[bool, str]:
    """Spectrum recursion equals direct eigenvalues for random subgroup words."""
    rng = random.Random(20240805)
    q, t = forms.default_definite_point()
    done = 0
    attempts = 0
    while done < 20 and attempts < 200:
        attempts += 1
        n = rng.randint(3, min(6, n_max))
        k = rng.randint(2, n - 1)
        w = random_word(k, rng.randint(2, 8), rng)
        rec = spectra.lk_spectrum_via_recursion(n, k, w, q, t, constants.RECURSION_TOL)
        from .braids import include

        direct = spectra.eigen_multiset(
            rep_of_word_numeric("lk", include(w, n), q, t), constants.RECURSION_TOL
        )
        if not rec.equals(direct, constants.RECURSION_TOL):
            return False, f"recursion mismatch n={n} k={k} word {w}"
        done += 1
    return True, f"{done} random (k, n, word) triples match at 1e-8"


def criterion_6_full_twists(n_max: int = 6) -> tuple[bool, str]:
    """Burau full-twist spectrum and exact commuting of the twist images."""
    pts = _random_torus_points(3, seed=20240806)
    for n in range(3, min(6, n_max) + 1):
        for k in range(2, n + 1):
            for q, _ in pts:
                got = spectra.eigen_multiset(
                    rep_of_word_numeric("burau", full_twist(n, k), q, 1.0), 1e-9
                )
                want = spectra.EigMultiset.from_values(
                    [q**k] * (k - 1) + [1.0 + 0j] * (n - k), 1e-9
                )
                if not got.equals(want, 1e-9):
                    return False, f"Burau twist spectrum mismatch n={n} k={k} q={q}"
    # pairwise commuting, exact; the SU normalization is a scalar factor and
    # cannot affect commutators, so the unnormalized check is equivalent
    for n in range(3, min(6, n_max) + 1):
        twists = {k: rep_of_word("lk", full_twist(n, k)) for k in range(2, n + 1)}
        for k in range(2, n + 1):
            for kp in range(k + 1, n + 1):
                ab = rep_of_word("lk", full_twist(n, kp), start=twists[k])
                ba = rep_of_word("lk", full_twist(n, k), start=twists[kp])
                if ab != ba:
                    return False, f"twist images fail to commute exactly: n={n}, k={k}, k'={kp}"
    return True, f"spectrum {{q^k}}^{{k-1}}{{1}}^{{n-k}} at 1e-9 and exact commuting, n <= {min(6, n_max)}"


def criterion_7_invariant_form(n_max: int = 6) -> tuple[bool, str]:
    """Invariant form at the scanned point: residual, uniqueness, definiteness,
    and unitarity of the unitarized generators."""
    q, t = forms.scan_point(0.1, constants.SCAN_RATIO)  # ratio <= 0.05
    details = []
    for n in (3, 4, 5):
        form = forms.invariant_form(n, q, t)
        if form.residual > constants.FORM_RESIDUAL_OK:
            return False, f"n={n}: residual {form.residual:.2e} > 1e-8"
        if form.nullspace_dim != 1:
            return False, f"n={n}: nullspace dimension {form.nullspace_dim} != 1"
        definite, min_eig = forms.is_definite(form)
        if not definite:
            return False, f"n={n}: form not positive definite (min eig {min_eig:.2e})"
        for i in range(1, n):
            u = forms.unitarize(lk_gen(n, i).evaluate(q, t).entries, form)
            sv = np.linalg.svd(u, compute_uv=False)
            err = float(np.max(np.abs(sv - 1.0)))
            if err > constants.UNITARY_TOL:
                return False, f"n={n}, i={i}: unitarized generator off by {err:.2e}"
        details.append(f"n={n}: residual {form.residual:.1e}, min eig {min_eig:.3f}")
    return True, "; ".join(details)


def criterion_8_dimension_table(n_max: int = 6) -> tuple[bool, str]:
    """Weyl dimension formula reproduces the full reference table."""
    start = time.monotonic()
    A = lambda n, *lab: lie_dims.DynkinLabeling("A", n, tuple(lab) + (0,) * (n - len(lab)))
    D = lambda n, *lab: lie_dims.DynkinLabeling("D", n, tuple(lab) + (0,) * (n - len(lab)))
    E6 = lambda *lab: lie_dims.DynkinLabeling("E6", 6, tuple(lab) + (0,) * (6 - len(lab)))
    wd = lie_dims.weyl_dimension
    checks: list[tuple[int, int]] = [
        (wd(A(5, 0, 0, 1)), 20),
        (wd(A(5, 1, 0, 1)), 105),
        (wd(A(5, 0, 1, 1)), 210),
        (wd(D(5, 0, 0, 0, 1, 0)), 16),
        (wd(D(5, 1, 0, 0, 1, 0)), 144),
        (wd(D(5, 0, 0, 0, 2, 0)), 126),
        (wd(E6(1)), 27),
        (wd(E6(2)), 351),
    ]
    for n in range(3, 8):
        checks.append((wd(A(n, 2)), (n + 1) * (n + 2) // 2))
        checks.append((wd(A(n, 3)), math.comb(n + 3, 3)))
        checks.append((wd(A(n, 0, 0, 1)), math.comb(n + 1, 3)))
        if n <= 6:
            checks.append((wd(A(n, 0, 2)), (n + 2) * (n + 1) ** 2 * n // 12))
            checks.append((wd(A(n, 1, 1)), (n + 2) * (n + 1) * n // 3))
        if n in (5, 6):
            checks.append((wd(A(n, 0, 1, 1)), (n + 1) * math.comb(n + 2, 4)))
            checks.append((wd(A(n, 1, 0, 1)), 3 * math.comb(n + 2, 4)))
    for got, want in checks:
        if got != want:
            return False, f"dimension mismatch: got {got}, want {want}"
    import itertools

    agree = 0
    for labels in itertools.product(range(4), repeat=6):
        if sum(labels) <= 3 and any(labels):
            if lie_dims.e6_dimension_direct(labels) != wd(E6(*labels)):
                return False, f"direct E6 evaluation disagrees at {labels}"
            agree += 1
    elapsed = time.monotonic() - start
    if elapsed >= 30.0:
        return False, f"table verified but took {elapsed:.1f}s >= 30s"
    return True, f"{len(checks)} table values and {agree} E6 cross-validations, {elapsed:.1f}s"


def criterion_9_exclusions(n_max: int = 6) -> tuple[bool, str]:
    """Eigenvalue exclusions: conjugation closure, Kronecker and square-root
    factorizations, commutant dimensions."""
    q, t = forms.default_definite_point()
    spec4 = spectra.lk_generator_spectrum(4, q, t)
    normalized = spec4.scale(mu_factor(4, q, t))
    if spectra.conjugation_closed(normalized):
        return False, "normalized generator spectrum is conjugation-closed"
    if spectra.kronecker_factorizations(spec4, 2, 3):
        return False, "unexpected 2x3 Kronecker factorization at n=4"
    spec5 = spectra.lk_generator_spectrum(5, q, t)
    if spectra.kronecker_factorizations(spec5, 2, 5):
        return False, "unexpected 2x5 Kronecker factorization at n=5"
    x = -t  # the q = -1 specialization pattern: all eigenvalues 1 but one
    sym_pattern = spectra.EigMultiset.from_values([x] + [1.0 + 0j] * 5)
    if spectra.square_root_multisets(sym_pattern, "sym"):
        return False, "unexpected symmetric square root of {x}{1}^5"
    alt_pattern = spectra.EigMultiset.from_values([x] + [1.0 + 0j] * 9)
    if spectra.square_root_multisets(alt_pattern, "alt"):
        return False, "unexpected antisymmetric square root of {x}{1}^9"
    gens = [rep_of_word_numeric("lk", _word(4, i), q, t) for i in (1, 2, 3)]
    dim_generic = spectra.commutant_dimension(gens)
    if dim_generic != 1:
        return False, f"commutant at generic (q,t) is {dim_generic}, want 1"
    gens_sym = [rep_of_word_numeric("lk", _word(4, i), 1.0, -1.0) for i in (1, 2, 3)]
    dim_sym = spectra.commutant_dimension(gens_sym)
    if dim_sym <= 1:
        return False, f"commutant at (1,-1) is {dim_sym}, want > 1"
    return True, (
        "not conjugation-closed; no Kronecker or square-root factorizations; "
        f"commutant 1 generically and {dim_sym} at (q,t)=(1,-1)"
    )


def criterion_10_density(n_max: int = 6, keep_csv: str | None = None) -> tuple[bool, str]:
    """Trace experiment: many distinct values for a generic base, exactly one
    for a central base."""
    start = time.monotonic()
    q, t = forms.default_definite_point()
    with tempfile.TemporaryDirectory() as tmp:
        out1 = keep_csv or os.path.join(tmp, "traces.csv")
        # conjugator length 12: the stabilized trace is exactly invariant
        # under conjugating by the sub-braid-group that commutes with the
        # stabilizing generator, so short conjugators hit few classes
        cfg = density.ExperimentConfig(
            base_braid=parse_braid("1 2 3", 4),
            n=5,
            q=q,
            t=t,
            samples=200,
            conjugator_length=12,
            rng_seed=20240810,
            output_path=out1,
        )
        report = density.run_experiment(cfg)
        cfg_twist = density.ExperimentConfig(
            base_braid=full_twist(4, 4),
            n=5,
            q=q,
            t=t,
            samples=50,
            conjugator_length=12,
            rng_seed=20240810,
            output_path=os.path.join(tmp, "twist.csv"),
        )
        report_twist = density.run_experiment(cfg_twist)
    elapsed = time.monotonic() - start
    if report["distinct_count"] < 50:
        return False, f"only {report['distinct_count']} distinct traces, want >= 50"
    if report_twist["distinct_count"] != 1:
        return False, f"central base gave {report_twist['distinct_count']} distinct traces"
    if elapsed >= 60.0:
        return False, f"experiment took {elapsed:.1f}s >= 60s"
    return True, (
        f"{report['distinct_count']}/200 distinct traces for sigma_1 sigma_2 sigma_3; "
        f"1 for the full twist; {elapsed:.1f}s"
    )


def criterion_11_subgroups(n_max: int = 6) -> tuple[bool, str]:
    """Squared-generator and Hilden subgroup probes."""
    q, t = forms.default_definite_point()
    dim_sq = density.subgroup_irreducibility(4, "squared_generators", q, t, m=1)
    if dim_sq != 1:
        return False, f"squared-generator commutant is {dim_sq}, want 1"
    basis = PairBasis(4)
    keep = {basis.index(1, 2), basis.index(3, 4)}
    for w in density.subgroup_words(4, "hilden"):
        mat = rep_of_word_numeric("lk", w, 1.0, t)
        leak = max(
            abs(mat[r, c]) for c in keep for r in range(len(basis)) if r not in keep
        )
        if leak > 1e-12:
            return False, f"span{{v12, v34}} not invariant at q=1 under {w}"
    dim_q1 = density.subgroup_irreducibility(4, "hilden", 1.0, t)
    if dim_q1 < 2:
        return False, f"Hilden commutant at q=1 is {dim_q1}, want >= 2"
    dim_near = density.subgroup_irreducibility(4, "hilden", q, t)
    if dim_near != 1:
        return False, f"Hilden commutant near q=1 is {dim_near}, want 1"
    return True, (
        f"squared commutant 1; Hilden: invariant span{{v12,v34}} at q=1 "
        f"(commutant {dim_q1}), commutant 1 at q != 1"
    )


CRITERIA: list[tuple[str, Criterion]] = [
    ("exact braid relations", criterion_1_braid_relations),
    ("generator determinant -t(-q)^n", criterion_2_determinant),
    ("generator spectrum closed form", criterion_3_generator_spectrum),
    ("symmetric-square specialization at t=-1", criterion_4_sym_square),
    ("restriction spectrum recursion", criterion_5_restriction_recursion),
    ("full-twist spectra and commuting", criterion_6_full_twists),
    ("invariant form at the scanned point", criterion_7_invariant_form),
    ("Weyl dimension table", criterion_8_dimension_table),
    ("spectral exclusion tests", criterion_9_exclusions),
    ("conjugacy-class trace experiment", criterion_10_density),
    ("subgroup probes", criterion_11_subgroups),
]


def run_all(n_max: int = 6, echo=print) -> bool:
    """Run every criterion, print one line each, return overall success.

    n_max trims the strand-count loops of the structural criteria (1-6) for
    quick smoke runs; the fixed-size criteria always run in full.
    """
    all_ok = True
    for idx, (name, fn) in enumerate(CRITERIA, start=1):
        start = time.monotonic()
        try:
            ok, detail = fn(n_max=n_max)
        except Exception as exc:  # a crash is a failure, not an abort
            ok, detail = False, f"exception: {exc!r}"
        elapsed = time.monotonic() - start
        all_ok &= ok
        echo(f"[{'PASS' if ok else 'FAIL'}] criterion {idx}: {name} ({elapsed:.1f}s) - {detail}")
    return all_ok
