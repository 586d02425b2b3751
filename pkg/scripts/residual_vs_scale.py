"""Hyperbolic residual growth with triangle size.

Buckets K=-1 triangles by their largest side and reports, per bucket, the
largest absolute unified-law residual next to the largest term of the law and
the spacing of doubles at that magnitude. An absolute residual of a few ulps
of the largest term is the floor for any double-precision evaluation.
"""

import argparse
import math

from cctrig.gtrig import gsin
from cctrig.harness import GeneratorConfig, generate_triangle
from cctrig.laws import LabeledTriangle, unified_coefficients, unified_law_residuals


def main():
    ap = argparse.ArgumentParser(description="hyperbolic residual vs triangle size")
    ap.add_argument("--trials", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--side-max", type=float, default=5.0)
    args = ap.parse_args()

    cfg = GeneratorConfig(curvature=-1, seed=args.seed, trials=args.trials, side_range=(0.01, args.side_max))
    buckets = {}
    for i in range(cfg.trials):
        t = generate_triangle(cfg, i)
        s = t.sides
        res = max(abs(r) for r in unified_law_residuals(LabeledTriangle(-1.0, s, t.angles)))
        sins = [gsin(-1, x) for x in s.as_tuple()]
        scale = max(max(abs(k * x * x) for k, x in zip(unified_coefficients(-1, s), sins)), 2 * sins[1] * sins[2])
        key = int(max(s.as_tuple()))
        r0, s0 = buckets.get(key, (0.0, 0.0))
        buckets[key] = (max(r0, res), max(s0, scale))

    print(f"{'max side':>9} {'max |res|':>11} {'max term':>11} {'ulp(term)':>11} {'res/term':>9}")
    for key in sorted(buckets):
        res, scale = buckets[key]
        print(f"[{key:>2},{key + 1:>2}) {res:11.3e} {scale:11.3e} {math.ulp(scale):11.3e} {res / scale:9.2e}")


if __name__ == "__main__":
    main()
