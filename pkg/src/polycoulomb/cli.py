"""Command-line front end: solve, hierarchy, shoot, reproduce.

Configs are plain ``key = value`` lines with ``#`` comments.  Recognized keys:
n, l, c, a1..a{2n}, depth, states, r_start, r_max, step, e_tol, e_lo, e_hi.
Exit codes: 0 success, 1 config/usage error, 2 constraint violation,
3 solver failure or reference-table mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from dataclasses import dataclass, field, replace

from .potentials import CoulombPotential, PolynomialCoulombPotential

_NUM = "{:.10g}"

_SOLVER_KEYS = ("r_start", "r_max", "step", "e_tol", "e_lo", "e_hi")
_INT_KEYS = ("n", "l", "depth", "states")


class ConfigError(Exception):
    def __init__(self, message, line=0, col=1):
        super().__init__(f"line {line}, col {col}: {message}" if line else message)
        self.line = line
        self.col = col


@dataclass
class RunConfig:
    n: int | None = None
    l: int | None = None
    c: float = 0.0
    a: dict[int, float] = field(default_factory=dict)
    depth: int | None = None
    states: int | None = None
    r_start: float | None = None
    r_max: float | None = None
    step: float | None = None
    e_tol: float | None = None
    e_lo: float | None = None
    e_hi: float | None = None


def parse_config(text: str) -> RunConfig:
    rc = RunConfig()
    seen: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if "=" not in line:
            raise ConfigError("expected 'key = value'", lineno, 1)
        key, value = line.split("=", 1)
        col_value = len(key) + 2 + (len(value) - len(value.lstrip()))
        key = key.strip()
        value = value.strip()
        if not key:
            raise ConfigError("empty key", lineno, 1)
        if key in seen:
            raise ConfigError(f"duplicate key {key!r} (first on line {seen[key]})", lineno, 1)
        seen[key] = lineno
        if not value:
            raise ConfigError(f"missing value for {key!r}", lineno, col_value)
        if key in _INT_KEYS:
            try:
                setattr(rc, key, int(value))
            except ValueError:
                raise ConfigError(f"{key} must be an integer, got {value!r}", lineno, col_value)
        elif key == "c" or key in _SOLVER_KEYS:
            try:
                setattr(rc, key, float(value))
            except ValueError:
                raise ConfigError(f"{key} must be a number, got {value!r}", lineno, col_value)
        elif key.startswith("a") and key[1:].isdigit():
            idx = int(key[1:])
            if idx < 1:
                raise ConfigError(f"coefficient index must be >= 1, got {key!r}", lineno, 1)
            try:
                rc.a[idx] = float(value)
            except ValueError:
                raise ConfigError(f"{key} must be a number, got {value!r}", lineno, col_value)
        else:
            raise ConfigError(f"unknown key {key!r}", lineno, 1)

    if rc.n is None:
        raise ConfigError("missing required key 'n'")
    if rc.l is None:
        raise ConfigError("missing required key 'l'")
    if rc.n < 0:
        raise ConfigError(f"n must be >= 0, got {rc.n}", seen.get("n", 0), 1)
    if rc.l < 0:
        raise ConfigError(f"l must be >= 0, got {rc.l}", seen.get("l", 0), 1)
    for idx in sorted(rc.a):
        if idx > 2 * rc.n:
            raise ConfigError(
                f"a{idx} out of range for n = {rc.n} (max a{2 * rc.n})",
                seen.get(f"a{idx}", 0),
                1,
            )
    if rc.n >= 1:
        missing = [i for i in range(rc.n + 1, 2 * rc.n + 1) if i not in rc.a]
        if missing:
            raise ConfigError(
                "missing independent coefficient(s): "
                + ", ".join(f"a{i}" for i in missing)
            )
        if rc.a[2 * rc.n] <= 0.0:
            raise ConfigError(
                f"a{2 * rc.n} must be > 0 for a confining well",
                seen.get(f"a{2 * rc.n}", 0),
                1,
            )
    return rc


def dump_config(rc: RunConfig) -> str:
    lines = [f"n = {rc.n}", f"l = {rc.l}", "c = " + _NUM.format(rc.c)]
    for idx in sorted(rc.a):
        lines.append(f"a{idx} = " + _NUM.format(rc.a[idx]))
    for key in ("depth", "states"):
        val = getattr(rc, key)
        if val is not None:
            lines.append(f"{key} = {val}")
    for key in _SOLVER_KEYS:
        val = getattr(rc, key)
        if val is not None:
            lines.append(f"{key} = " + _NUM.format(val))
    return "\n".join(lines) + "\n"


def potential_from_config(rc: RunConfig):
    """Build the potential; returns (potential, dependent_coeffs_supplied)."""
    if rc.n == 0:
        return CoulombPotential(l=rc.l, c=rc.c), False
    from .susy import constraint_report

    high = tuple(rc.a[i] for i in range(rc.n + 1, 2 * rc.n + 1))
    template = PolynomialCoulombPotential(l=rc.l, c=rc.c, coeffs=(0.0,) * rc.n + high)
    required = constraint_report(template).required
    lows = tuple(rc.a.get(i, required[i - 1]) for i in range(1, rc.n + 1))
    supplied = any(i in rc.a for i in range(1, rc.n + 1))
    return replace(template, coeffs=lows + high), supplied


def shooting_config_from(rc: RunConfig):
    from .shooting import ShootingConfig

    kwargs = {k: getattr(rc, k) for k in _SOLVER_KEYS if getattr(rc, k) is not None}
    return ShootingConfig(**kwargs)


def _emit(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_text(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def _fixed_table(header, rows) -> str:
    cells = [header] + [[str(c) for c in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    lines = []
    for row in cells:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _cmd_solve(args) -> int:
    import numpy as np

    from .susy import constraint_report, ground_state, riccati_residual, solve_superpotential

    rc = parse_config(_read_config(args))
    if args.dump_config:
        sys.stdout.write(dump_config(rc))
        return 0
    if rc.n == 0:
        raise ConfigError("solve requires a polynomial well (n >= 1)")
    pot, _ = potential_from_config(rc)
    sp = solve_superpotential(pot)
    report = constraint_report(pot, sp)
    grid = np.geomspace(1e-3, 20.0, 512)
    residual = riccati_residual(pot, sp, grid)

    rows = [("n", pot.n), ("l", pot.l), ("c", _NUM.format(pot.c)), ("shift", _NUM.format(pot.shift))]
    for i, a in enumerate(pot.coeffs, start=1):
        rows.append((f"a{i}", _NUM.format(a)))
    rows += [("B", _NUM.format(sp.B)), ("D", _NUM.format(sp.D))]
    for i, a in enumerate(sp.A, start=1):
        rows.append((f"A{i}", _NUM.format(a)))
    rows.append(("E0", _NUM.format(sp.ground_energy)))
    for i, (req, sup, res) in enumerate(
        zip(report.required, report.supplied, report.residuals), start=1
    ):
        rows.append((f"a{i}_required", _NUM.format(req)))
        rows.append((f"a{i}_residual", _NUM.format(res)))
    rows.append(("constraints_satisfied", "yes" if report.satisfied else "no"))
    rows.append(("riccati_residual", _NUM.format(residual)))

    # the formula follows from the superpotential alone; the normalization
    # constant only exists when the closed form is a true eigenstate
    norm = "N"
    if report.satisfied:
        _, wf = ground_state(pot)
        norm = _NUM.format(wf.norm)
        rows.append(("norm", norm))
    terms = [_NUM.format(sp.D) + " r"] + [
        _NUM.format(a / (i + 1.0)) + f" r^{i + 1}" for i, a in enumerate(sp.A, start=1)
    ]
    rows.append(
        (
            "wavefunction",
            f"psi0(r) = {norm} * r^{_NUM.format(sp.B)} * exp(-("
            + ") - (".join(terms)
            + "))",
        )
    )

    if args.format == "csv":
        text = _csv_text([("quantity", "value")] + [(k, v) for k, v in rows])
    else:
        text = _fixed_table(["quantity", "value"], rows)
    _emit(text, args.out)
    return 0 if report.satisfied else 2


def _cmd_hierarchy(args) -> int:
    from .hierarchy import build_ladder

    rc = parse_config(_read_config(args))
    if args.depth is not None:
        rc.depth = args.depth
    if args.dump_config:
        sys.stdout.write(dump_config(rc))
        return 0
    if rc.n == 0:
        raise ConfigError("hierarchy requires a polynomial well (n >= 1)")
    depth = rc.depth if rc.depth is not None else 2
    pot, _ = potential_from_config(rc)
    ladder = build_ladder(pot, depth)

    numeric = {}
    if args.numeric:
        from .shooting import find_eigenvalue

        cfg = shooting_config_from(rc)
        for step in ladder.steps:
            numeric[step.k] = find_eigenvalue(step.potential, 0, cfg)

    n = pot.n
    header = ["k", "l"] + [f"a{m}" for m in range(1, n + 1)] + ["E_ladder"]
    if args.numeric:
        header.append("E_shoot")
    header += [f"drift_a{m}" for m in range(1, n + 1)]
    rows = []
    for step in ladder.steps:
        row = [step.k, step.l_k]
        row += [f"{a:.4f}" for a in step.dependent_params]
        row.append(f"{step.energy_abs:.4f}")
        if args.numeric:
            row.append(f"{numeric[step.k].energy:.4f}")
        if step.drift:
            row += [f"{d:.4f}" for d in step.drift]
        else:
            row += ["-"] * n
        rows.append(row)

    if args.format == "csv":
        text = _csv_text([header] + rows)
    else:
        text = _fixed_table(header, rows)
    _emit(text, args.out)
    if args.numeric and not all(r.converged for r in numeric.values()):
        return 3
    return 0


def _cmd_shoot(args) -> int:
    import math

    from .shooting import spectrum

    rc = parse_config(_read_config(args))
    if args.states is not None:
        rc.states = args.states
    if args.dump_config:
        sys.stdout.write(dump_config(rc))
        return 0
    n_states = rc.states if rc.states is not None else 3
    if n_states < 1:
        raise ConfigError(f"states must be >= 1, got {n_states}")
    pot, _ = potential_from_config(rc)
    cfg = shooting_config_from(rc)
    results = spectrum(pot, n_states, cfg)

    header = ["state", "energy", "nodes", "converged"]
    rows = []
    for k, res in enumerate(results):
        energy = _NUM.format(res.energy) if not math.isnan(res.energy) else "nan"
        rows.append([k, energy, res.nodes, "yes" if res.converged else "no"])
    if args.format == "csv":
        text = _csv_text([header] + rows)
    else:
        text = _fixed_table(header, rows)
    _emit(text, args.out)

    failed = [ (k, r) for k, r in enumerate(results) if not r.converged ]
    for k, res in failed:
        sys.stderr.write(f"state {k}: {res.message or 'did not converge'}\n")

    if args.wf_out:
        stem, dot, suffix = args.wf_out.rpartition(".")
        if not dot:
            stem, suffix = args.wf_out, "csv"
        for k, res in enumerate(results):
            if res.wf_samples is None:
                continue
            wf_rows = [("r", "u")] + [
                (_NUM.format(r), _NUM.format(u)) for r, u in res.wf_samples
            ]
            with open(f"{stem}_state{k}.{suffix}", "w", newline="") as fh:
                fh.write(_csv_text(wf_rows))
    return 3 if failed else 0


def _cmd_reproduce(args) -> int:
    from . import reference
    from .hierarchy import build_ladder
    from .shooting import find_eigenvalue, spectrum

    if args.table == 1:
        header = ["set", "k", "coeff", "computed", "reference", "ok"]
        rows = []
        all_ok = True
        for name in reference.SETS:
            ladder = build_ladder(reference.set_potential(name), 2)
            for k, step in enumerate(ladder.steps):
                for label, value, (ref, dec) in zip(
                    ("a", "b"), step.dependent_params, reference.TABLE1[name][k]
                ):
                    ok = abs(value - ref) <= 10.0 ** (-dec)
                    all_ok &= ok
                    rows.append(
                        [name, k, label, f"{value:.4f}", f"{ref:.4f}", "yes" if ok else "NO"]
                    )
    else:
        header = ["set", "member", "quantity", "computed", "reference", "ok"]
        rows = []
        all_ok = True
        for name in reference.SETS:
            ladder = build_ladder(reference.set_potential(name), 2)
            for k, step in enumerate(ladder.steps):
                ref = reference.TABLE2_LADDER[name][k]
                ok = round(step.energy_abs, 2) == ref
                all_ok &= ok
                rows.append(
                    [name, f"V{k + 1}", "E_ladder", f"{step.energy_abs:.2f}",
                     f"{ref:.2f}", "yes" if ok else "NO"]
                )
            for k, refs in enumerate(reference.TABLE2_SHOOTING[name]):
                pot_k = ladder.steps[k].potential
                if len(refs) > 1:
                    results = spectrum(pot_k, len(refs))
                else:
                    results = [find_eigenvalue(pot_k, 0)]
                for j, (res, ref) in enumerate(zip(results, refs)):
                    ok = res.converged and abs(res.energy - ref) <= 0.01
                    all_ok &= ok
                    rows.append(
                        [name, f"V{k + 1}", f"E_shoot_{j}", f"{res.energy:.2f}",
                         f"{ref:.2f}", "yes" if ok else "NO"]
                    )

    if args.format == "csv":
        text = _csv_text([header] + rows)
    else:
        text = _fixed_table(header, rows)
        text += f"table {args.table}: {'PASS' if all_ok else 'FAIL'}\n"
    _emit(text, args.out)
    return 0 if all_ok else 3


def _read_config(args) -> str:
    try:
        with open(args.config) as fh:
            return fh.read()
    except OSError as err:
        raise ConfigError(f"cannot read config {args.config!r}: {err}")


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; 2 is reserved for
    # constraint violations here, so usage problems exit 1 instead.
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(1)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="polycoulomb", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, config=True):
        if config:
            p.add_argument("--config", required=True, help="path to key = value config")
            p.add_argument(
                "--dump-config", action="store_true",
                help="print the parsed config in canonical form and exit",
            )
        p.add_argument("--format", choices=("table", "csv"), default="table")
        p.add_argument("--out", help="write output to this path instead of stdout")

    p = sub.add_parser("solve", help="superpotential, constraints, exact ground state")
    add_common(p)

    p = sub.add_parser("hierarchy", help="ladder of hierarchy members")
    add_common(p)
    p.add_argument("--depth", type=int, help="number of rungs above the base well")
    p.add_argument(
        "--numeric", action="store_true",
        help="also shoot each rung's ground state numerically",
    )

    p = sub.add_parser("shoot", help="numeric spectrum by RK4 shooting")
    add_common(p)
    p.add_argument("--states", type=int, help="number of states (default 3)")
    p.add_argument("--wf-out", help="write per-state wavefunction CSVs to this stem")

    p = sub.add_parser("reproduce", help="regenerate a bundled reference table")
    p.add_argument("table", type=int, choices=(1, 2),
                   help="1 = dependent parameters, 2 = energies")
    add_common(p, config=False)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else 1
    from .shooting import EigenvalueSearchError
    from .susy import ConstraintViolationError

    try:
        if args.command == "solve":
            return _cmd_solve(args)
        if args.command == "hierarchy":
            return _cmd_hierarchy(args)
        if args.command == "shoot":
            return _cmd_shoot(args)
        return _cmd_reproduce(args)
    except ConfigError as err:
        sys.stderr.write(f"config error: {err}\n")
        return 1
    except ConstraintViolationError as err:
        sys.stderr.write(f"constraint violation: {err}\n")
        return 2
    except EigenvalueSearchError as err:
        sys.stderr.write(f"solver failure: {err}\n")
        return 3


def run():
    raise SystemExit(main())
