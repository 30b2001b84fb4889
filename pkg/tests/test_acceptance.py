"""Acceptance criteria, one check each.

Run ``pytest tests/test_acceptance.py -v`` (each test also prints a
``[PASS]``/``[FAIL]`` line) or ``python tests/test_acceptance.py`` for the
summary alone.  Every check is exact; time limits are wall-clock.
"""

from __future__ import annotations

import time
from fractions import Fraction

import pytest

from divtensor import (
    chern_tensor_formula,
    chern_tensor_oracle,
    obstruction_membership,
    obstruction_solve,
    pairing_pullback,
    parse_polynomial,
    render,
    tensor_divisor,
)
from divtensor.chern import tensor_to_chern
from divtensor.fuzz import RunConfig, format_reports, run_suite, run_suites

EXAMPLE = (
    "z[0,5]^2*z[0,7]^2 - 3*z[0,5]^2*z[1,7]*z[2,7] - 3*z[0,7]^2*z[1,5]*z[2,5] "
    "+ 9*z[1,5]*z[1,7]*z[2,5]*z[2,7]"
)


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def golden_example():
    f, g = parse_polynomial("x0^2 - 3*x1*x2"), parse_polynomial("y5*y7")
    out, dt = _timed(lambda: tensor_divisor(f, g))
    coeffs = [c for _, c in out.items()]
    ok = str(out) == EXAMPLE and coeffs == [1, -3, -3, 9] and dt < 0.1
    return ok, f"4-term expansion exact={str(out) == EXAMPLE}, coeffs={coeffs}, {dt * 1e3:.1f} ms (< 100 ms)"


def biadditivity():
    cfg = RunConfig()
    reports, dt = _timed(lambda: [run_suite(s, cfg) for s in ("biadditivity-left", "biadditivity-right")])
    ok = all(r.ok for r in reports) and dt < 30
    counts = ", ".join(f"{r.suite} {r.passed}/{r.cases}" for r in reports)
    return ok, f"{counts}; {dt:.2f} s (< 30 s)"


def _suite(name, trials):
    def check():
        r = run_suite(name, RunConfig(trials=trials))
        return r.ok and r.cases == trials, f"{r.passed}/{r.cases} exact" + (
            f"; {r.counterexample}" if r.counterexample else ""
        )

    return check


def chern_formula():
    def run():
        return [(r, i, chern_tensor_formula(r, i) == chern_tensor_oracle(r, i))
                for r in range(1, 6) for i in range(1, r + 1)]

    cases, dt = _timed(run)
    value = str(chern_tensor_formula(2, 2))
    ok = len(cases) == 15 and all(c[2] for c in cases) and value == "c1(L)^2 + c1(E)*c1(L) + c2(E)" and dt < 5
    return ok, f"{sum(c[2] for c in cases)}/15 equal; c2 for rank 2 = {value}; {dt:.2f} s (< 5 s)"


def pullback_coefficients():
    good = 0
    for p in range(1, 6):
        for k in range(1, p + 1):
            good += tensor_to_chern(p)(pairing_pullback(p, k)) == chern_tensor_formula(p, k)
    return good == 15, f"{good}/15 pairs (p, k) agree under i2j -> cj(E), i2l~ -> c1(L)^l"


def obstruction():
    def run():
        return obstruction_solve(), obstruction_membership(2), obstruction_membership(2, a=0, b=1)

    (sol, mem, counter), dt = _timed(run)
    ok = (
        (sol.a, sol.b) == (Fraction(1), Fraction(0))
        and not mem.member
        and mem.witness == ("i4(x)1", 1)
        and counter.member
        and dt < 1
    )
    return ok, (
        f"(a, b) = ({sol.a}, {sol.b}); target member={mem.member} witness={mem.witness}; "
        f"(0,1) member={counter.member}; {dt * 1e3:.0f} ms (< 1 s)"
    )


def round_trip_and_determinism():
    cfg = RunConfig()
    corpus: list = []
    first = run_suites("all", cfg, corpus)
    second = run_suites("all", cfg)
    same_text = format_reports(first, "text") == format_reports(second, "text")
    same_json = format_reports(first, "json") == format_reports(second, "json")
    unique = set(corpus)
    bad = [p for p in unique if parse_polynomial(render(p)) != p]
    ok = not bad and same_text and same_json
    return ok, f"{len(unique) - len(bad)}/{len(unique)} distinct polynomials round-trip; reports identical={same_text and same_json}"


CRITERIA = [
    (1, "golden example expansion", golden_example),
    (2, "biadditivity suites", biadditivity),
    (3, "linear-form suspension", _suite("linear-lemma", 200)),
    (4, "degree multiplicativity", _suite("degree", 200)),
    (5, "fast path equals naive expansion", _suite("fastpath", 100)),
    (6, "stabilization", _suite("stabilization", 50)),
    (7, "Chern formula vs splitting principle", chern_formula),
    (8, "pairing pullback coefficients", pullback_coefficients),
    (9, "obstruction replay", obstruction),
    (10, "parser round-trip and deterministic reports", round_trip_and_determinism),
]


def _line(num, name, ok, detail):
    return f"[{'PASS' if ok else 'FAIL'}] criterion {num:2d} {name}: {detail}"


@pytest.mark.parametrize("num, name, check", CRITERIA, ids=[f"c{n:02d}" for n, _, _ in CRITERIA])
def test_criterion(num, name, check, capsys):
    ok, detail = check()
    with capsys.disabled():
        print("\n" + _line(num, name, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = [(n, name, *check()) for n, name, check in CRITERIA]
    for r in results:
        print(_line(*r)[:400])
    raise SystemExit(0 if all(r[2] for r in results) else 1)
