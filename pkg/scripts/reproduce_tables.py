#!/usr/bin/env python3
"""Regenerate the bundled benchmark tables and write them as CSV.

Table 1 holds the dependent coefficients demanded by solvability at the
first three hierarchy rungs; table 2 compares ladder energies with shooting
results.  Output lands in ``results/`` next to this script by default.
"""

import argparse
import pathlib
import sys

from polycoulomb.cli import main as cli_main


def run(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--out-dir", default=None, help="target directory (default: ./results)"
    )
    args = parser.parse_args(argv)
    out_dir = pathlib.Path(args.out_dir or pathlib.Path.cwd() / "results")
    out_dir.mkdir(parents=True, exist_ok=True)

    status = 0
    for table in (1, 2):
        target = out_dir / f"table{table}.csv"
        code = cli_main(
            ["reproduce", str(table), "--format", "csv", "--out", str(target)]
        )
        print(f"table {table} -> {target} (exit {code})")
        status = max(status, code)
    return status


if __name__ == "__main__":
    sys.exit(run())
