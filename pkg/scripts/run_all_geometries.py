"""Run the verification harness on the three model geometries and print a table.

    python scripts/run_all_geometries.py --trials 10000 --seed 42
"""

import argparse
import time

from cctrig.harness import GeneratorConfig, run_verification


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--tol", type=float, default=1e-10)
    ap.add_argument("--sines", action="store_true", help="include the law-of-sines spread row")
    args = ap.parse_args()

    print(f"{'geometry':<11} {'identity':<26} {'max |res|':>11} {'mean |res|':>11}  pass")
    for K, name in ((-1, "hyperbolic"), (0, "euclidean"), (1, "spherical")):
        start = time.perf_counter()
        report = run_verification(
            GeneratorConfig(curvature=K, seed=args.seed, trials=args.trials), args.tol, include_law_of_sines=args.sines
        )
        for rec in report.identities:
            ok = rec.max_abs_residual <= args.tol
            print(f"{name:<11} {rec.name:<26} {rec.max_abs_residual:11.3e} {rec.mean_abs_residual:11.3e}  {'yes' if ok else 'NO'}")
        print(f"{'':<11} ({time.perf_counter() - start:.2f}s)")


if __name__ == "__main__":
    main()
