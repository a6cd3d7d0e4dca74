"""Search M for a pair breaking absorption and print it as documents.

    python scripts/absorption_witness.py --seed 3 --out witnesses/
"""

import argparse
import random

from t2fuzzy.convolution import join_conv, meet_conv
from t2fuzzy.document import dumps_function
from t2fuzzy.verify import GeneratorConfig, gen_function


def search(cfg, limit):
    rng = random.Random(f"{cfg.seed}:absorption-script")
    for i in range(limit):
        f, g = gen_function(cfg, rng), gen_function(cfg, rng)
        h = join_conv(f, meet_conv(f, g))
        if h != f:
            return i + 1, f, g, h
    return limit, None, None, None


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--limit", type=int, default=1000)
    ap.add_argument("--max-breakpoints", type=int, default=3)
    ap.add_argument("--out", help="directory for f.json and g.json")
    args = ap.parse_args()

    cfg = GeneratorConfig(seed=args.seed, max_breakpoints=args.max_breakpoints)
    tries, f, g, h = search(cfg, args.limit)
    if f is None:
        print(f"no witness in {tries} pairs")
        raise SystemExit(1)
    print(f"witness after {tries} pair(s): f ⊔ (f ⊓ g) != f")
    print(f"f           = {f}\ng           = {g}\nf ⊔ (f ⊓ g) = {h}")
    if args.out:
        from pathlib import Path

        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "f.json").write_text(dumps_function(f, "f"))
        (out / "g.json").write_text(dumps_function(g, "g"))
        print(f"wrote {out / 'f.json'} and {out / 'g.json'}")


if __name__ == "__main__":
    main()
