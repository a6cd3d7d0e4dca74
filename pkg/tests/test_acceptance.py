"""End-to-end acceptance checks, one test per criterion.

Each test prints a single ``[acceptance]`` line with its verdict and
timing.  Run ``pytest tests/test_acceptance.py -v`` to see only these.
"""

import io
import json
import statistics
import time
from fractions import Fraction as F
from itertools import product

import pytest

from t2fuzzy import intervals as iv
from t2fuzzy.cli import main
from t2fuzzy.convolution import TOP, ConvolutionSpec, convolution_at_one, star
from t2fuzzy.counterexamples import counterexample_q1, tent
from t2fuzzy.intervals import Interval
from t2fuzzy.report import VIOLATED, decode_arg
from t2fuzzy.tnorms import BUILTIN_TNORMS, check_tnorm_axioms, get_tnorm, grid, unit_preimage_is_corner
from t2fuzzy.verify import SUITES, GeneratorConfig, replay_witness, run_suite

HALF = F(1, 2)


@pytest.fixture
def verdict(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\n[acceptance] criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}")
        assert ok, detail

    return emit


def timed(fn, repeat=1):
    times, result = [], None
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t)
    return result, statistics.median(times)


def test_criterion_1_subset_counterexample(verdict):
    rep, secs = timed(counterexample_q1, repeat=5)
    ok = (
        rep.x == Interval(HALF, HALF)
        and rep.y == Interval(HALF, 1)
        and rep.z == Interval(HALF, HALF)
        and rep.premise is True
        and rep.zx == Interval(F(1, 4), F(1, 4))
        and rep.zy == Interval(HALF, HALF)
        and rep.conclusion is False
        and secs < 1e-3
    )
    verdict(1, ok, f"z*x={rep.zx}, z*y={rep.zy}, subset={rep.conclusion}, {secs * 1e3:.3f} ms (< 1 ms)")


def test_criterion_2_circled_star_conditions(verdict):
    probes = iv.probe_grid([0, F(1, 4), HALF, F(3, 4), 1, HALF])
    expect = {"1": VIOLATED, "6": VIOLATED, "5'": VIOLATED}
    rep, secs = timed(lambda: iv.check_interval_conditions(iv.circled_star, probes, expect))
    holds = {k: r.violations == 0 for k, r in rep.laws.items()}
    must_hold = all(holds[c] for c in ("2", "3", "4", "5", "7"))
    w = rep.laws["5'"].witness
    x, y, z = (decode_arg(a) for a in w) if w else (None, None, None)
    witness_ok = w is not None and iv.subset_order(x, y) and not iv.subset_order(
        iv.circled_star(x, z), iv.circled_star(y, z)
    )
    q1 = counterexample_q1()
    witness_ok = witness_ok and q1.violated
    vector = " ".join(f"({c})={'ok' if holds[c] else 'fail'}" for c in iv.INTERVAL_CONDITIONS)
    ok = must_hold and not holds["5'"] and witness_ok and secs < 1
    verdict(2, ok, f"{vector}; first (5') witness x={x} y={y} z={z}, documented triple violated={q1.violated}; {secs * 1e3:.0f} ms (< 1 s)")


def test_criterion_3_star_is_not_a_convolution(verdict):
    names = ("min", "product", "lukasiewicz")
    g = tent()

    def run():
        rows = []
        s1 = star(TOP, g)(1)
        for comb, car in product(names, repeat=2):
            rows.append((convolution_at_one(ConvolutionSpec.named(comb, car), TOP, g), s1))
        return rows

    rows, secs = timed(run, repeat=5)
    ok = len(rows) == 9 and all(c == HALF and s == 0 for c, s in rows) and secs < 0.01
    verdict(3, ok, f"9 pairs: convolution(1)=1/2, star(1)=0; {secs * 1e3:.2f} ms (< 10 ms)")


def test_criterion_4_star_axioms(verdict):
    rep, secs = timed(lambda: run_suite("star-axioms", GeneratorConfig(seed=7), 500))
    core = ("O1", "O2", "O3", "O4", "O4'", "O4''")
    counts = {k: (rep.laws[k].checked, rep.laws[k].violations) for k in core + ("O5", "O6", "O7")}
    ok = (
        rep.passed
        and all(counts[k] == (500, 0) for k in core)
        and all(counts[k][0] >= 100 and counts[k][1] == 0 for k in ("O5", "O6", "O7"))
        and rep.config["branch_patterns"] == 8
        and secs < 60
    )
    verdict(4, ok, f"500 triples, 8/8 branch patterns, 0 failures in {len(rep.laws)} laws; {secs:.1f} s (< 60 s)")


def test_criterion_5_envelope_laws(verdict):
    rep, secs = timed(lambda: run_suite("envelope-laws", GeneratorConfig(seed=1), 1000))
    bad = [r.law for r in rep.failures]
    ok = rep.passed and secs < 60
    verdict(5, ok, f"1000 trials, {len(rep.laws)} laws, failures={bad}; {secs:.1f} s (< 60 s)")


def test_criterion_6_oracle(verdict):
    rep, secs = timed(lambda: run_suite("oracle", GeneratorConfig(seed=0), 200))
    ok = rep.passed and rep.laws["meet-oracle"].checked == 200 and rep.laws["join-oracle"].checked == 200
    ok = ok and secs < 30
    verdict(6, ok, f"200 L-pairs, meet and join exact at every grid point; {secs:.1f} s (< 30 s)")


def test_criterion_7_structure_of_M(verdict, tmp_path):
    def run():
        cfg = GeneratorConfig(seed=0)
        dm = run_suite("de-morgan", cfg, 200)
        ab = run_suite("absorption-on-M", cfg, 1000)
        od = run_suite("orders", cfg, 200)
        return dm, ab, od

    (dm, ab, od), secs = timed(run)
    paths = ab.write_witnesses(tmp_path)
    replayed = [replay_witness(json.loads(p.read_text())) for p in paths.values()]
    witnesses = sum(r.violations for r in ab.laws.values())
    ok = (
        dm.passed
        and ab.passed
        and od.passed
        and paths
        and not any(replayed)
        and secs < 60
    )
    verdict(
        7, ok,
        f"De Morgan 200/200, absorption violations={witnesses} (persisted {len(paths)}, replayed), "
        f"orders coincide on 200; {secs:.1f} s (< 60 s)",
    )


def test_criterion_8_scalar_tnorms(verdict):
    def run():
        out = {}
        for name in BUILTIN_TNORMS:
            op = get_tnorm(name)
            out[name] = (check_tnorm_axioms(op, grid(21)), unit_preimage_is_corner(op, grid(21)))
        return out

    reps, secs = timed(run)
    ok = all(a.passed and c.passed and set(a.laws) >= {"T1", "T2", "T3", "T4"} for a, c in reps.values())
    verdict(8, ok and secs < 5, f"T1-T4 and corner on 21-point grid for {', '.join(reps)}; {secs:.2f} s (< 5 s)")


def test_criterion_9_determinism(verdict, tmp_path):
    def cli(*argv):
        out = io.StringIO()
        code = main(list(argv), out, io.StringIO())
        return code, out.getvalue().encode()

    mismatched = []
    for name in SUITES:
        trials = "1" if name in ("scalar-tnorms", "intervals") else "25"
        argv = ("check", name, "--seed", "42", "--trials", trials, "--witness-dir", str(tmp_path / "w"))
        if cli(*argv) != cli(*argv):
            mismatched.append(name)
        if cli(*argv, "--jsonl") != cli(*argv, "--jsonl"):
            mismatched.append(name + " (jsonl)")
    verdict(9, not mismatched, f"{len(SUITES)} suites, text and JSON-lines byte-identical; mismatched={mismatched}")
