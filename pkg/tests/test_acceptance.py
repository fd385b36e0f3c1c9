"""Acceptance gate: one test per criterion, printing one pass/fail line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines for
passing criteria too (pytest echoes output of failing tests regardless).
"""

import time

import numpy as np

from polycoulomb import (
    CoulombPotential,
    PolynomialCoulombPotential,
    build_ladder,
    closed_form_energy,
    constraint_report,
    drift_report,
    find_eigenvalue,
    riccati_residual,
    shape_invariance_check,
    solve_superpotential,
    spectrum,
    with_required_coefficients,
)
from polycoulomb.reference import (
    SETS,
    TABLE1,
    TABLE2_LADDER,
    TABLE2_SHOOTING,
    set_potential,
)
from conftest import quartic_ladder_energy, quartic_required


def _report(name, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] {name}"
    if detail:
        line += f": {detail}"
    print(line)
    return ok


def _random_solvable(rng, n, l_max=3):
    l = int(rng.integers(0, l_max + 1))
    c = float(rng.uniform(-2.0, 0.0))
    high = tuple(float(rng.uniform(0.05, 2.0)) for _ in range(n))
    pot = PolynomialCoulombPotential(l=l, c=c, coeffs=(0.0,) * n + high)
    return with_required_coefficients(pot)


def test_criterion_1_dependent_parameter_table():
    t0 = time.perf_counter()
    bad = []
    for name in SETS:
        ladder = build_ladder(set_potential(name), 2)
        for k, step in enumerate(ladder.steps):
            for label, value, (ref, dec) in zip(
                ("a", "b"), step.dependent_params, TABLE1[name][k]
            ):
                if abs(value - ref) > 10.0 ** (-dec):
                    bad.append(f"SET {name} k={k} {label}: {value:.5f} vs {ref}")
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 1.0
    assert _report(
        "criterion 1: dependent-parameter table (both sets, 4 decimals)",
        ok,
        f"{elapsed * 1e3:.0f} ms" + ("; " + "; ".join(bad) if bad else ""),
    )


def test_criterion_2_ladder_energy_table():
    t0 = time.perf_counter()
    bad = []
    for name in SETS:
        ladder = build_ladder(set_potential(name), 2)
        for k, step in enumerate(ladder.steps):
            ref = TABLE2_LADDER[name][k]
            if round(step.energy_abs, 2) != ref:
                bad.append(f"SET {name} k={k}: {step.energy_abs:.4f} vs {ref}")
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 1.0
    assert _report(
        "criterion 2: ladder energies (2 decimals)",
        ok,
        f"{elapsed * 1e3:.0f} ms" + ("; " + "; ".join(bad) if bad else ""),
    )


def test_criterion_3_shooting_energy_table():
    t0 = time.perf_counter()
    entries = []
    for name in SETS:
        ladder = build_ladder(set_potential(name), 2)
        for m, refs in enumerate(TABLE2_SHOOTING[name]):
            results = spectrum(ladder.steps[m].potential, len(refs))
            for j, (res, ref) in enumerate(zip(results, refs)):
                ok = res.converged and abs(res.energy - ref) <= 0.01
                entries.append(
                    (ok, f"SET {name} V{m + 1} state {j}: {res.energy:.4f} vs {ref}")
                )
    elapsed = time.perf_counter() - t0
    bad = [text for ok, text in entries if not ok]
    ok = not bad and elapsed < 60.0
    _report(
        "criterion 3: shooting energies vs stored reference (+-0.01)",
        ok,
        f"{elapsed:.1f} s, {len(entries) - len(bad)}/{len(entries)} entries within tolerance",
    )
    for line in bad:
        print("    disagrees: " + line)
    # Drift is the documented source of the gap: the stored excited-state
    # references presume rung-ground degeneracy, which large drift breaks.
    for name in SETS:
        rows = drift_report(build_ladder(set_potential(name), 2))
        assert rows, "drift report must be non-empty for k >= 1"
    assert not bad, "\n".join(bad)


def test_criterion_4_susy_shooting_agreement_random():
    rng = np.random.default_rng(20260809)
    t0 = time.perf_counter()
    worst = 0.0
    for trial in range(20):
        pot = _random_solvable(rng, n=2 if trial % 2 == 0 else 3)
        analytic = solve_superpotential(pot).ground_energy
        res = find_eigenvalue(pot, 0)
        worst = max(worst, abs(res.energy - analytic))
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-4
    assert _report(
        "criterion 4: analytic vs shooting ground energy, 20 random wells",
        ok,
        f"worst |diff| = {worst:.2e} in {elapsed:.1f} s",
    )


def test_criterion_5_riccati_oracle_all_degrees():
    # Wells drawn through their superpotential modes, scaled so no term
    # exceeds ~3e2 at r = 20: that keeps an absolute 1e-9 residual
    # meaningful in double precision for degree-12 polynomials.
    rng = np.random.default_rng(42)
    grid = np.geomspace(1e-3, 20.0, 400)
    worst = 0.0
    for n in range(1, 7):
        sigma = 316.0 / 20.0**n
        for _ in range(4):
            l = int(rng.integers(0, 5))
            c = float(rng.uniform(-2.0, 0.0))
            A = tuple(float(rng.uniform(-1.0, 1.0)) * sigma for _ in range(n - 1))
            A += (float(rng.uniform(0.05, 1.0)) * sigma,)
            high = tuple(
                sum(A[i - 1] * A[k - i - 1] for i in range(max(1, k - n), min(n, k - 1) + 1))
                for k in range(n + 1, 2 * n + 1)
            )
            pot = with_required_coefficients(
                PolynomialCoulombPotential(l=l, c=c, coeffs=(0.0,) * n + high)
            )
            sp = solve_superpotential(pot)
            worst = max(worst, riccati_residual(pot, sp, grid))
    ok = worst <= 1e-9
    assert _report(
        "criterion 5: factorization residual oracle, degrees 2..12",
        ok,
        f"worst residual = {worst:.2e}",
    )


def test_criterion_6_specialization_equivalence():
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(100):
        l = int(rng.integers(0, 6))
        c = float(rng.uniform(-2.0, 0.0))
        d = float(rng.uniform(0.01, 2.0))
        f = float(rng.uniform(0.05, 2.0))
        pot = PolynomialCoulombPotential.quartic(l=l, c=c, a=0.0, b=0.0, d=d, f=f)
        sp = solve_superpotential(pot)
        report = constraint_report(pot, sp)
        a_ref, b_ref = quartic_required(l, c, d, f)
        sf = np.sqrt(f)
        e_ref = -c * c / (4 * (l + 1) ** 2) + d * (l + 1) / sf + d / (2 * sf)
        worst = max(
            worst,
            abs(report.required[0] - a_ref),
            abs(report.required[1] - b_ref),
            abs(sp.ground_energy - e_ref),
        )
        a2 = float(rng.uniform(0.05, 2.0))
        quad = PolynomialCoulombPotential(l=l, c=c, coeffs=(0.0, a2))
        sp_q = solve_superpotential(quad)
        req_q = constraint_report(quad, sp_q).required[0]
        sa = np.sqrt(a2)
        worst = max(
            worst,
            abs(req_q - (-c * sa / (l + 1))),
            abs(sp_q.ground_energy - (-c * c / (4 * (l + 1) ** 2) + (2 * l + 3) * sa)),
        )
    closed_ok = worst <= 1e-12

    set1 = set_potential("I")
    sext = with_required_coefficients(
        PolynomialCoulombPotential.sextic(
            l=0, c=-1.0, a=0.0, b=0.0, d=0.0, f=1.0, g=2.0, h=1.0
        )
    )
    ladder_worst = 0.0
    for pot in (set1, sext):
        ladder = build_ladder(pot, 5)
        for k, step in enumerate(ladder.steps):
            ladder_worst = max(
                ladder_worst, abs(step.energy_abs - closed_form_energy(pot, k))
            )
    for k in range(6):
        ladder_worst = max(
            ladder_worst,
            abs(closed_form_energy(set1, k) - quartic_ladder_energy(1, -1.0, 0.5, 0.1, k)),
        )
    ladder_ok = ladder_worst <= 1e-10
    assert _report(
        "criterion 6: general machinery vs closed forms",
        closed_ok and ladder_ok,
        f"closed-form worst = {worst:.2e}, ladder worst = {ladder_worst:.2e}",
    )


def test_criterion_7_solver_oracles():
    worst_osc = 0.0
    for l in range(3):
        pot = PolynomialCoulombPotential(l=l, c=0.0, coeffs=(0.0, 1.0))
        for k in range(4):
            res = find_eigenvalue(pot, k)
            worst_osc = max(worst_osc, abs(res.energy - (4 * k + 2 * l + 3)))
    worst_coul = 0.0
    c = -8.0
    for l in range(3):
        pot = CoulombPotential(l=l, c=c)
        for k in range(4):
            res = find_eigenvalue(pot, k)
            n_pr = l + 1 + k
            worst_coul = max(worst_coul, abs(res.energy - (-(c * c) / (4 * n_pr**2))))
    ok = worst_osc <= 1e-4 and worst_coul <= 1e-4
    assert _report(
        "criterion 7: oscillator and Coulomb solver oracles",
        ok,
        f"oscillator worst = {worst_osc:.2e}, Coulomb worst = {worst_coul:.2e}",
    )


def test_criterion_8_shape_invariance_witness():
    set1 = set_potential("I")
    grid = np.linspace(0.1, 10.0, 1000)
    witness = shape_invariance_check(set1, grid, tol=1e-9)
    sp = solve_superpotential(set1)
    v2 = sp(grid) ** 2 + sp.derivative(grid)
    shape = PolynomialCoulombPotential(
        l=witness.translated_l, c=set1.c, coeffs=witness.translated_coeffs
    )
    deviation = float(np.max(np.abs(v2 - shape(grid) - witness.remainder)))
    r_closed = 1.0 / 16.0 - 0.5 * 2 / np.sqrt(0.1) + 0.5 / (2 * np.sqrt(0.1))
    ok = deviation <= 1e-9 and abs(witness.remainder - r_closed) <= 1e-10
    assert _report(
        "criterion 8: shape-invariance witness (SET I)",
        ok,
        f"max deviation = {deviation:.2e}, |R - closed form| = {abs(witness.remainder - r_closed):.2e}",
    )
