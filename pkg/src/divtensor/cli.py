"""Command-line front end.

Exit codes: 0 ok, 1 verified false, 2 parse error, 3 domain or shape error,
4 term cap exceeded, 64 usage error, 70 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .chern import (
    chern_tensor_formula,
    chern_tensor_oracle,
    obstruction_membership,
    obstruction_solve,
)
from .cycles import Cycle, reduced_tensor, render_cycle, tensor_cycles
from .errors import DomainError, InvariantViolation, ResourceError, ShapeError
from .fuzz import SUITES, RunConfig, format_reports, run_suites
from .parsing import ParseError, parse_cycle, parse_polynomial
from .poly import Polynomial, VariableSpace, to_json
from .psi import psi, tensor_divisor, tensor_fast

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_RESOURCE = 4
EXIT_USAGE = 64
EXIT_INTERNAL = 70


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _parse_family(srcs: Sequence[str], kind: str, what: str) -> list:
    """Parse several polynomials of one family into a common space."""
    polys = [parse_polynomial(s) for s in srcs]
    for i, p in enumerate(polys):
        if p.space.kind != kind and not p.is_zero() and p.degree:
            label = what if len(polys) == 1 else f"{what} {i}"
            raise ShapeError(f"{label} must use {kind}-variables, got {p.space.kind}-variables")
    size = max(p.space.shape[0] for p in polys)
    space = VariableSpace(kind, (size,))
    return [Polynomial(space, p.degree, dict(p.terms)) for p in polys]


def _emit_poly(p: Polynomial, fmt: str) -> str:
    return json.dumps(to_json(p)) if fmt == "json" else str(p)


def cmd_tensor(args) -> int:
    (f,) = _parse_family([args.f], "x", "f")
    (g,) = _parse_family([args.g], "y", "g")
    pairing = tensor_fast if args.fast else tensor_divisor
    print(_emit_poly(pairing(f, g, args.term_cap), args.format))
    return EXIT_OK


def cmd_psi(args) -> int:
    xs = _parse_family(args.x, "x", "x-slot")
    ys = _parse_family(args.y, "y", "y-slot")
    print(_emit_poly(psi(xs, ys, args.term_cap), args.format))
    return EXIT_OK


def _cycle_in(src: str, kind: str, what: str) -> Cycle:
    c = parse_cycle(src)
    if c.is_empty():
        return Cycle(VariableSpace(kind, (1,)), [])
    if c.space.kind != kind:
        raise ShapeError(f"{what} cycle must use {kind}-variables, got {c.space.kind}-variables")
    return c


def _common(c: Cycle, size: int) -> Cycle:
    space = VariableSpace(c.space.kind, (size,))
    return Cycle(space, [(p.rehoused(space), k) for p, k in c.items()])


def cmd_cycle_tensor(args) -> int:
    eta = _cycle_in(args.left, "x", "left")
    xi = _cycle_in(args.right, "y", "right")
    pairing = lambda f, g: tensor_fast(f, g, args.term_cap)  # noqa: E731
    if args.reduced:
        eta0 = _parse_family([args.eta0], "x", "eta0")[0] if args.eta0 else None
        xi0 = _parse_family([args.xi0], "y", "xi0")[0] if args.xi0 else None
        n = max(eta.space.shape[0], eta0.space.shape[0] if eta0 else 1)
        m = max(xi.space.shape[0], xi0.space.shape[0] if xi0 else 1)
        eta, xi = _common(eta, n), _common(xi, m)
        eta0 = eta0.rehoused(eta.space) if eta0 else None
        xi0 = xi0.rehoused(xi.space) if xi0 else None
        out = reduced_tensor(eta, xi, eta0, xi0, pairing)
    else:
        out = tensor_cycles(eta, xi, pairing)
    degrees = {"left": eta.degree(), "right": xi.degree(), "output": out.degree()}
    if args.format == "json":
        doc = {
            "cycle": [{"multiplicity": k, "polynomial": to_json(p)} for p, k in out.items()],
            "text": render_cycle(out),
            "degrees": degrees,
        }
        print(json.dumps(doc))
    else:
        print(render_cycle(out))
        print(f"degrees: left {degrees['left']}, right {degrees['right']}, output {degrees['output']}")
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = RunConfig(
        seed=args.seed,
        trials=args.trials,
        max_degree=args.max_degree,
        max_vars=args.max_vars,
        max_terms=args.max_terms,
        coefficient_bound=args.coefficient_bound,
        term_cap=args.term_cap,
        max_rank=args.max_rank,
        format=args.format,
    )
    reports = run_suites(args.suite, cfg)
    print(format_reports(reports, args.format))
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FALSE


def cmd_chern(args) -> int:
    if (args.rank is None) != (args.index is None):
        raise UsageError("chern: give both RANK and INDEX, or neither (with --verify)")
    status = EXIT_OK
    if args.rank is not None:
        cls = chern_tensor_formula(args.rank, args.index)
        if args.format == "json":
            print(json.dumps({"rank": args.rank, "index": args.index, "class": str(cls)}))
        else:
            print(cls)
        if args.verify and chern_tensor_oracle(args.rank, args.index) != cls:
            print("oracle disagrees with formula")
            status = EXIT_FALSE
        return status
    if not args.verify:
        raise UsageError("chern: give RANK INDEX, or --verify")
    lines = []
    for r in range(1, args.max_rank + 1):
        for i in range(1, r + 1):
            a, b = chern_tensor_formula(r, i), chern_tensor_oracle(r, i)
            same = a == b
            status = status if same else EXIT_FALSE
            lines.append(f"rank {r}, index {i}: {'equal' if same else 'DIFFERENT'}: {a}")
    lines.append("all equal" if status == EXIT_OK else "mismatch found")
    print("\n".join(lines))
    return status


def cmd_obstruction(args) -> int:
    sol = obstruction_solve()
    a, b = (1, 0) if args.ab is None else args.ab
    mem = obstruction_membership(args.n, a, b)
    out = [
        f"side one: {sol.side_one}",
        f"side two: {sol.side_two_text()}",
        "coefficient table:",
        *(f"  {e}" for e in sol.equations),
        "forcing equations: " + "; ".join(f"{e.lhs} = {e.rhs_text()}" for e in sol.forcing_equations()),
        f"solution: a = {sol.a}, b = {sol.b} (unique)",
        "image of (pi1 x id)* in degree 4: " + ", ".join(str(c) for c in mem.image_basis),
        f"target (a = {a}, b = {b}): {mem.target}",
    ]
    if mem.member:
        out.append(f"membership: in image (rank {mem.rank_image} = {mem.rank_augmented})")
        out.append("no obstruction")
    else:
        label, coeff = mem.witness
        out.append(
            f"membership: not in image (rank {mem.rank_image} -> {mem.rank_augmented}); "
            f"witness {label} with coefficient {coeff}"
        )
        out.append("obstruction confirmed")
    print("\n".join(out))
    return EXIT_FALSE if mem.member else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--term-cap", type=int, default=None, help="override DTL_TERM_CAP")

    parser = _Parser(prog="divtensor", description="Tensor pairing of divisors and Chern-class checks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("tensor", parents=[common], help="f (x) g for forms in x and y")
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("--fast", action="store_true", help="use the factored evaluation")
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("psi", parents=[common], help="the multilinear pairing on explicit slots")
    p.add_argument("--x", action="append", required=True, metavar="POLY")
    p.add_argument("--y", action="append", required=True, metavar="POLY")
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("cycle-tensor", parents=[common], help="pair two cycles")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--reduced", action="store_true")
    p.add_argument("--eta0", default=None, help="basepoint hyperplane in x (default x0)")
    p.add_argument("--xi0", default=None, help="basepoint hyperplane in y (default y0)")
    p.set_defaults(func=cmd_cycle_tensor)

    p = sub.add_parser("verify", parents=[common], help="seeded property suites")
    p.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--max-vars", type=int, default=4)
    p.add_argument("--max-terms", type=int, default=4)
    p.add_argument("--coefficient-bound", type=int, default=9)
    p.add_argument("--max-rank", type=int, default=5)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("chern", parents=[common], help="c_i(E (x) L)")
    p.add_argument("rank", nargs="?", type=int)
    p.add_argument("index", nargs="?", type=int)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--max-rank", type=int, default=5)
    p.set_defaults(func=cmd_chern)

    p = sub.add_parser("obstruction", parents=[common], help="replay the codimension-2 obstruction")
    p.add_argument("--ab", nargs=2, type=int, metavar=("A", "B"), default=None)
    p.add_argument("--n", type=int, default=2, help="number of i-generators on the left factor")
    p.set_defaults(func=cmd_obstruction)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(str(exc).rstrip(), file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DomainError, ShapeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ResourceError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ValueError as exc:  # bad RunConfig values
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
