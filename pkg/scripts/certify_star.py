"""Run the star axioms and the oracle certification over several seeds.

    python scripts/certify_star.py --seeds 0 1 2 --trials 200
"""

import argparse
import time

from t2fuzzy.verify import GeneratorConfig, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--max-breakpoints", type=int, default=6)
    ap.add_argument("--suites", nargs="+", default=["star-axioms", "oracle", "oracle-on-M"])
    args = ap.parse_args()

    failed = False
    for seed in args.seeds:
        cfg = GeneratorConfig(seed=seed, max_breakpoints=args.max_breakpoints)
        for name in args.suites:
            t = time.perf_counter()
            rep = run_suite(name, cfg, args.trials)
            secs = time.perf_counter() - t
            checks = sum(r.checked for r in rep.laws.values())
            bad = ", ".join(r.law for r in rep.failures) or "-"
            print(f"seed={seed:<4} {name:<12} checks={checks:<6} failures={bad:<10} {secs:6.1f}s")
            failed |= not rep.passed
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
