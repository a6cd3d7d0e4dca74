"""Plot a function document (or built-in) with its envelopes.

    python scripts/plot_samples.py @tent --out tent.png

Needs matplotlib, which the package itself does not depend on.
"""

import argparse

from t2fuzzy.cli import load_function
from t2fuzzy.pwl import left_envelope, limits_at, right_envelope


def polyline_points(f):
    xs, ys = [], []
    for x in f.xs:
        left, value, right = limits_at(f, x)
        if x > 0:
            xs.append(float(x))
            ys.append(float(left))
        if x < 1:
            xs.append(float(x))
            ys.append(float(right))
    return xs, ys


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("function")
    ap.add_argument("--out", default="function.png")
    args = ap.parse_args()

    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    f = load_function(args.function)
    fig, ax = plt.subplots(figsize=(5, 3.5))
    for g, label, style in ((left_envelope(f), "f^L", ":"), (right_envelope(f), "f^R", "--"), (f, "f", "-")):
        ax.plot(*polyline_points(g), style, label=label)
    ax.scatter([float(x) for x in f.xs], [float(v) for v in f.values], s=12, zorder=3)
    ax.set_xlim(0, 1)
    ax.set_ylim(-0.05, 1.05)
    ax.legend()
    fig.tight_layout()
    fig.savefig(args.out, dpi=120)
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
