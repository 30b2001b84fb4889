"""Seeded random inputs and the verification suites behind ``divtensor verify``.

Each suite runs ``trials`` independent cases drawn from its own generator
(seeded from ``"<seed>/<suite>"``), so a suite's outcome does not depend on
which other suites run alongside it.  Reports are plain text or JSON and are
byte-identical for identical configuration.
"""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass, field
from itertools import combinations_with_replacement
from typing import Callable

from .chern import chern_tensor_formula, chern_tensor_oracle
from .cycles import Cycle, stabilize, tensor_cycles
from .poly import Polynomial, VariableSpace, X, Y
from .psi import suspend_linear, tensor_divisor, tensor_fast

SUITES = (
    "biadditivity-left",
    "biadditivity-right",
    "linear-lemma",
    "fastpath",
    "stabilization",
    "degree",
    "chern",
)


@dataclass(frozen=True)
class RunConfig:
    seed: int = 42
    trials: int = 200
    max_degree: int = 3
    max_vars: int = 4
    max_terms: int = 4
    coefficient_bound: int = 9
    term_cap: int | None = None
    max_rank: int = 5
    format: str = "text"

    def __post_init__(self):
        for name in ("trials", "max_degree", "max_vars", "max_terms", "coefficient_bound", "max_rank"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name.replace('_', '-')} must be positive")
        if self.term_cap is not None and self.term_cap < 1:
            raise ValueError("term-cap must be positive")
        if self.format not in ("text", "json"):
            raise ValueError(f"unknown format {self.format!r}")


def random_polynomial(
    rng: random.Random, space: VariableSpace, degree: int, max_terms: int, bound: int
) -> Polynomial:
    """Nonzero form with 1..max_terms distinct monomials and coefficients in [-bound, bound]."""
    monos = list(combinations_with_replacement(space.indices(), degree))
    k = min(rng.randint(1, max_terms), len(monos))
    chosen = rng.sample(monos, k)
    coeffs = [c for c in range(-bound, bound + 1) if c]
    return Polynomial(space, degree, {m: rng.choice(coeffs) for m in chosen})


def random_cycle(rng: random.Random, space: VariableSpace, cfg: RunConfig, max_components: int = 3) -> Cycle:
    comps = []
    for _ in range(rng.randint(1, max_components)):
        poly = random_polynomial(rng, space, rng.randint(1, cfg.max_degree), cfg.max_terms, cfg.coefficient_bound)
        comps.append((poly, rng.choice([-3, -2, -1, 1, 2, 3])))
    return Cycle(space, comps)


def _split_degree(rng: random.Random, total: int) -> tuple:
    # two positive degrees whose sum stays inside the envelope
    if total < 2:
        return 1, 1
    d1 = rng.randint(1, total - 1)
    return d1, rng.randint(1, total - d1)


@dataclass
class Trial:
    ok: bool
    detail: str = ""
    polys: list = field(default_factory=list)


def _spaces(rng: random.Random, cfg: RunConfig) -> tuple:
    return X(rng.randint(1, cfg.max_vars)), Y(rng.randint(1, cfg.max_vars))


def _poly(rng, space, degree, cfg):
    return random_polynomial(rng, space, degree, cfg.max_terms, cfg.coefficient_bound)


def trial_biadditivity_left(rng: random.Random, cfg: RunConfig) -> Trial:
    xs, ys = _spaces(rng, cfg)
    d1, d2 = _split_degree(rng, cfg.max_degree)
    f1, f2 = _poly(rng, xs, d1, cfg), _poly(rng, xs, d2, cfg)
    g = _poly(rng, ys, rng.randint(1, cfg.max_degree), cfg)
    lhs = tensor_divisor(f1 * f2, g, cfg.term_cap)
    rhs = tensor_divisor(f1, g, cfg.term_cap) * tensor_divisor(f2, g, cfg.term_cap)
    detail = f"f1 = {f1}; f2 = {f2}; g = {g}; (f1*f2)(x)g - (f1(x)g)*(f2(x)g) = {lhs - rhs}"
    return Trial(lhs == rhs, detail, [f1, f2, g, f1 * f2, lhs, rhs])


def trial_biadditivity_right(rng: random.Random, cfg: RunConfig) -> Trial:
    xs, ys = _spaces(rng, cfg)
    e1, e2 = _split_degree(rng, cfg.max_degree)
    f = _poly(rng, xs, rng.randint(1, cfg.max_degree), cfg)
    g1, g2 = _poly(rng, ys, e1, cfg), _poly(rng, ys, e2, cfg)
    lhs = tensor_divisor(f, g1 * g2, cfg.term_cap)
    rhs = tensor_divisor(f, g1, cfg.term_cap) * tensor_divisor(f, g2, cfg.term_cap)
    detail = f"f = {f}; g1 = {g1}; g2 = {g2}; f(x)(g1*g2) - (f(x)g1)*(f(x)g2) = {lhs - rhs}"
    return Trial(lhs == rhs, detail, [f, g1, g2, g1 * g2, lhs, rhs])


def trial_linear_lemma(rng: random.Random, cfg: RunConfig) -> Trial:
    xs, ys = _spaces(rng, cfg)
    f = _poly(rng, xs, 1, cfg)
    g = _poly(rng, ys, rng.randint(1, cfg.max_degree), cfg)
    a = suspend_linear(f, g, cfg.term_cap)
    b = tensor_divisor(f, g, cfg.term_cap)
    return Trial(a == b, f"f = {f}; g = {g}; suspension - tensor = {a - b}", [f, g, a, b])


def trial_fastpath(rng: random.Random, cfg: RunConfig) -> Trial:
    xs, ys = _spaces(rng, cfg)
    f = _poly(rng, xs, rng.randint(1, cfg.max_degree), cfg)
    g = _poly(rng, ys, rng.randint(1, cfg.max_degree), cfg)
    a = tensor_fast(f, g, cfg.term_cap)
    b = tensor_divisor(f, g, cfg.term_cap)
    return Trial(a == b, f"f = {f}; g = {g}; fast - naive = {a - b}", [f, g, a, b])


def trial_stabilization(rng: random.Random, cfg: RunConfig) -> Trial:
    xs, ys = _spaces(rng, cfg)
    f = _poly(rng, xs, rng.randint(1, cfg.max_degree), cfg)
    g = _poly(rng, ys, rng.randint(1, cfg.max_degree), cfg)
    big_x = X(xs.shape[0] + rng.randint(1, 3))
    big_y = Y(ys.shape[0] + rng.randint(1, 3))
    small = tensor_fast(f, g, cfg.term_cap)
    big = tensor_fast(f.rehoused(big_x), g.rehoused(big_y), cfg.term_cap)
    eta = Cycle(xs, [(f, 1)])
    same_degree = stabilize(eta, big_x.shape[0]).degree() == eta.degree()
    ok = dict(small.terms) == dict(big.terms) and same_degree
    detail = f"f = {f}; g = {g}; in {big_x}/{big_y}: {big}"
    return Trial(ok, detail, [f, g, small, big])


def trial_degree(rng: random.Random, cfg: RunConfig) -> Trial:
    xs, ys = _spaces(rng, cfg)
    eta, xi = random_cycle(rng, xs, cfg), random_cycle(rng, ys, cfg)
    out = tensor_cycles(eta, xi, lambda f, g: tensor_fast(f, g, cfg.term_cap))
    ok = out.degree() == eta.degree() * xi.degree()
    if eta.is_effective() and xi.is_effective():
        ok = ok and out.is_effective()
    detail = f"eta = {eta}; xi = {xi}; deg {out.degree()} vs {eta.degree()}*{xi.degree()}"
    polys = [p for c in (eta, xi, out) for p, _ in c.items()]
    return Trial(ok, detail, polys)


TRIALS: dict[str, Callable[[random.Random, RunConfig], Trial]] = {
    "biadditivity-left": trial_biadditivity_left,
    "biadditivity-right": trial_biadditivity_right,
    "linear-lemma": trial_linear_lemma,
    "fastpath": trial_fastpath,
    "stabilization": trial_stabilization,
    "degree": trial_degree,
}


@dataclass
class SuiteReport:
    suite: str
    cases: int
    passed: int
    counterexample: str | None = None

    @property
    def ok(self) -> bool:
        return self.passed == self.cases

    def text(self) -> str:
        line = f"suite {self.suite}: {self.passed}/{self.cases} pass"
        if self.counterexample:
            line += f"\n  first counterexample: {self.counterexample}"
        return line


def run_suite(name: str, cfg: RunConfig, collect: list | None = None) -> SuiteReport:
    """Run one suite; ``collect`` (if given) receives every polynomial involved."""
    if name == "chern":
        cases = passed = 0
        first = None
        for r in range(1, cfg.max_rank + 1):
            for i in range(1, r + 1):
                cases += 1
                a, b = chern_tensor_formula(r, i), chern_tensor_oracle(r, i)
                if a == b:
                    passed += 1
                elif first is None:
                    first = f"rank {r}, index {i}: formula {a}, oracle {b}"
        return SuiteReport(name, cases, passed, first)
    if name not in TRIALS:
        raise KeyError(name)
    rng = random.Random(f"{cfg.seed}/{name}")
    passed = 0
    first = None
    for t in range(cfg.trials):
        trial = TRIALS[name](rng, cfg)
        if collect is not None:
            collect.extend(trial.polys)
        if trial.ok:
            passed += 1
        elif first is None:
            first = f"trial {t}: {trial.detail}"
    return SuiteReport(name, cfg.trials, passed, first)


def run_suites(suite: str, cfg: RunConfig, collect: list | None = None) -> list:
    names = SUITES if suite == "all" else (suite,)
    return [run_suite(n, cfg, collect) for n in names]


def format_reports(reports: list, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps([asdict(r) | {"ok": r.ok} for r in reports], indent=2)
    return "\n".join(r.text() for r in reports)
