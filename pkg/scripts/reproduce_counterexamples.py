"""Print both counterexamples and the full ⊛ condition vector.

    python scripts/reproduce_counterexamples.py
"""

from t2fuzzy import intervals as iv
from t2fuzzy.counterexamples import counterexample_q1, counterexample_q2
from t2fuzzy.report import VIOLATED


def main():
    print("== inclusion monotonicity of the interval product ==")
    print("\n".join(counterexample_q1().lines()))

    print("\n== conditions for the interval product on the probe grid ==")
    expect = {"1": VIOLATED, "6": VIOLATED, "5'": VIOLATED}
    rep = iv.check_interval_conditions(iv.circled_star, expect=expect, name="circled-star")
    for c in iv.INTERVAL_CONDITIONS:
        res = rep.laws[c]
        state = "holds" if res.violations == 0 else f"fails ({res.violations}/{res.checked})"
        print(f"({c}) {state}")

    print("\n== star against every convolution of built-in t-norms ==")
    print("\n".join(counterexample_q2().lines()))


if __name__ == "__main__":
    main()
