"""Command-line front end.

    chiy compute --manifold cp:2
    chiy compute --manifold hyp:2:4 --json
    chiy compute --spec-file k3.json
    chiy verify --suite symbolic
    chiy verify --suite modesum --n-max 1000

Exit codes: 0 success, 1 invalid input or failed invariant, 2 I/O failure.
"""
from __future__ import annotations

import argparse
import json
import math
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from . import catalog, modesum
from .genus import (
    ChernData, GenusPoly, chi_factor, chi_from_hodge, chi_y, chern_partitions,
    genus_class, serre_symmetry_defect, specialize,
)
from .symfunc import brute_force_class, elementary_from_power_sums, power_sums_in_chern, GradedPoly

EXIT_OK, EXIT_INVALID, EXIT_IO = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass(frozen=True)
class OutputRecord:
    name: str
    dim: int
    chi_y: tuple
    todd: Fraction
    euler: Fraction
    signature: Fraction
    checks: dict

    @classmethod
    def from_spec(cls, spec: catalog.ManifoldSpec) -> "OutputRecord":
        data = catalog.chern_data(spec)
        g = chi_y(data)
        hodge = catalog.hodge_table(spec)
        checks = {
            "serre": all(c == 0 for c in serre_symmetry_defect(g).coeffs),
            "euler_top_chern": specialize(g, "euler") == data.top_chern_number,
            "hodge_oracle": None if hodge is None else chi_from_hodge(hodge) == g,
        }
        return cls(
            spec.label, data.dim, g.coeffs,
            specialize(g, "todd"), specialize(g, "euler"), specialize(g, "signature"),
            checks,
        )

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "dim": self.dim,
            "chi_y": [str(c) for c in self.chi_y],
            "todd": str(self.todd),
            "euler": str(self.euler),
            "signature": str(self.signature),
            "checks": dict(self.checks),
        }

    @classmethod
    def from_json(cls, doc: dict) -> "OutputRecord":
        return cls(
            doc["name"], doc["dim"], tuple(Fraction(c) for c in doc["chi_y"]),
            Fraction(doc["todd"]), Fraction(doc["euler"]), Fraction(doc["signature"]),
            dict(doc["checks"]),
        )

    def format_text(self) -> str:
        g = GenusPoly(self.dim, self.chi_y)
        lines = [
            f"manifold   {self.name}",
            f"dim        {self.dim}",
            f"chi_y      {g}",
            f"todd       {self.todd}",
            f"euler      {self.euler}",
            f"signature  {self.signature}",
        ]
        for key, flag in self.checks.items():
            lines.append(f"check {key:<16} {'n/a' if flag is None else ('ok' if flag else 'FAIL')}")
        return "\n".join(lines)


def _load_spec(args) -> catalog.ManifoldSpec:
    if args.manifold is not None:
        return catalog.parse_builtin(args.manifold)
    with open(args.spec_file, encoding="utf-8") as fh:
        text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise catalog.SpecError("$", f"invalid JSON: {exc}") from None
    return catalog.parse_spec(doc)


def cmd_compute(args, out) -> int:
    if (args.manifold is None) == (args.spec_file is None):
        raise UsageError("exactly one of --manifold or --spec-file is required")
    try:
        spec = _load_spec(args)
    except OSError as exc:
        print(f"error: cannot read {args.spec_file}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_IO
    except catalog.SpecError as exc:
        print(f"error: invalid spec at {exc.location}: {exc.message}", file=sys.stderr)
        return EXIT_INVALID
    try:
        record = OutputRecord.from_spec(spec)
    except ValueError as exc:
        print(f"error: invalid spec: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.json:
        out.write(json.dumps(record.to_json()) + "\n")
    else:
        out.write(record.format_text() + "\n")
    return EXIT_OK


# --- verification suites ---------------------------------------------------------

Check = tuple[str, Callable[[], bool]]


def _alternating(n: int) -> GenusPoly:
    return GenusPoly(n, [(-1) ** j for j in range(n + 1)])


def random_chern_data(rng: random.Random, d: int, lo: int = -50, hi: int = 50) -> ChernData:
    return ChernData(d, {lam: rng.randint(lo, hi) for lam in chern_partitions(d)})


def _random_identities(seed: int = 2024, count: int = 100) -> bool:
    rng = random.Random(seed)
    for _ in range(count):
        a = random_chern_data(rng, rng.randint(0, 4))
        b = random_chern_data(rng, rng.randint(0, 4))
        ga = chi_y(a)
        if specialize(ga, "euler") != a.top_chern_number:
            return False
        if any(serre_symmetry_defect(ga).coeffs):
            return False
        if chi_y(catalog.product(a, b)) != ga * chi_y(b):
            return False
    return True


def _newton_round_trip(max_d: int = 6) -> bool:
    for d in range(1, max_d + 1):
        es = elementary_from_power_sums(power_sums_in_chern(d))
        if any(es[k] != GradedPoly.chern(k, d) for k in range(d + 1)):
            return False
    return True


def _hodge_catalog_ok() -> bool:
    ids = [f"cp:{n}" for n in range(7)] + [f"hyp:1:{k}" for k in range(1, 6)]
    ids += [f"hyp:2:{k}" for k in range(1, 7)] + [f"hyp:{n}:2" for n in range(1, 6)]
    ids += ["prod:cp:1:cp:1", "prod:hyp:1:3:cp:2", "prod:hyp:2:4:hyp:1:4"]
    for ident in ids:
        spec = catalog.parse_builtin(ident)
        h = catalog.hodge_table(spec)
        if h is None or chi_y(catalog.chern_data(spec)) != chi_from_hodge(h):
            return False
    return True


def symbolic_checks() -> list[Check]:
    k3 = lambda: chi_y(catalog.hypersurface(2, 4))
    quad = GenusPoly(2, [1, -2, 1])
    return [
        ("oracle equivalence genus_class = brute_force_class, d=1..4",
         lambda: all(genus_class(d) == brute_force_class(chi_factor(d), d) for d in range(1, 5))),
        ("projective spaces chi_y(cp:n) = sum (-y)^j, n=0..6",
         lambda: all(chi_y(catalog.projective_space(n)) == _alternating(n) for n in range(7))),
        ("K3 chi_y = 2 - 20y + 2y^2, euler 24, signature -16, todd 2",
         lambda: k3() == GenusPoly(2, [2, -20, 2])
         and (specialize(k3(), "euler"), specialize(k3(), "signature"), specialize(k3(), "todd")) == (24, -16, 2)),
        ("chi_y(hyp:2:2) = chi_y(cp:1 x cp:1) = (1-y)^2",
         lambda: chi_y(catalog.hypersurface(2, 2)) == quad
         == chi_y(catalog.product(catalog.projective_space(1), catalog.projective_space(1)))),
        ("hyp:n:1 has the Chern numbers of cp:n, n=0..6",
         lambda: all(catalog.hypersurface(n, 1).same_numbers(catalog.projective_space(n)) for n in range(7))),
        ("euler(hyp:2:k) = k^3 - 4k^2 + 6k, k=1..6",
         lambda: all(specialize(chi_y(catalog.hypersurface(2, k)), "euler") == k**3 - 4 * k**2 + 6 * k
                     for k in range(1, 7))),
        ("random Chern data: euler = c_d, serre defect 0, multiplicativity (100 cases)",
         _random_identities),
        ("Newton round trip e_k -> p_k -> e_k, d<=6", _newton_round_trip),
        ("Hodge oracle on catalog manifolds", _hodge_catalog_ok),
    ]


def modesum_checks(n_max: int, out) -> list[Check]:
    grid = []
    for delta in modesum.DEFAULT_GRID_DELTAS:
        grid.append(modesum.convergence_report(
            modesum.ModeSumConfig(modesum.DEFAULT_GRID_OMEGAS, delta, n_max)))
    for report in grid:
        out.write(report.format_table() + "\n")
    bound = 10.0 / n_max

    def errors_ok():
        return all(f.error_n <= bound for r in grid for f in r.factors)

    def ratios_ok():
        return n_max < 500 or all(f.ratio_ok() for r in grid for f in r.factors)

    def sinh_ok():
        e1 = abs(modesum.sinh_partial_product(1.0, n_max) / math.sinh(1.0) - 1)
        e2 = abs(modesum.sinh_partial_product(1.0, 2 * n_max) / math.sinh(1.0) - 1)
        return e1 <= bound and 1.8 <= e1 / e2 <= 2.2

    def link_ok():
        for delta in (math.pi / 2, math.pi):
            y = -complex(math.cos(delta), math.sin(delta))
            q = chi_factor(2)
            fd = modesum.taylor_coefficients_fd(delta)
            for k in range(3):
                if abs(q[k](y) - fd[k]) > 1e-6:
                    return False
        return True

    return [
        (f"mode-sum error <= 10/N at N={n_max} on the omega x delta grid", errors_ok),
        (f"mode-sum error ratio N/2N in [1.7, 2.3] (N={n_max})", ratios_ok),
        (f"sinh partial product at x=1, N={n_max}: error <= 10/N, ratio in [1.8, 2.2]", sinh_ok),
        ("chi_factor coefficients match finite differences of the closed form", link_ok),
    ]


def cmd_verify(args, out) -> int:
    if args.suite not in ("symbolic", "modesum", "all"):
        print(f"error: unknown suite {args.suite!r}", file=sys.stderr)
        return EXIT_INVALID
    if args.n_max < 1:
        print("error: --n-max must be >= 1", file=sys.stderr)
        return EXIT_INVALID
    checks: list[Check] = []
    if args.suite in ("symbolic", "all"):
        checks += symbolic_checks()
    if args.suite in ("modesum", "all"):
        checks += modesum_checks(args.n_max, out)
    failed = []
    for name, check in checks:
        ok = bool(check())
        out.write(f"[{'PASS' if ok else 'FAIL'}] {name}\n")
        if not ok:
            failed.append(name)
    if failed:
        print(f"{len(failed)} invariant(s) failed: {'; '.join(failed)}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chiy", description="Hirzebruch chi_y-genus from Chern numbers.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="compute chi_y and its specializations")
    p.add_argument("--manifold", help="builtin id: cp:<n>, hyp:<n>:<k>, prod:<id>:<id>")
    p.add_argument("--spec-file", help="JSON manifold spec")
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", help="run invariant suites")
    v.add_argument("--suite", default="all", help="symbolic, modesum or all")
    v.add_argument("--n-max", type=int, default=10_000, help="mode truncation N (default 10000)")
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[list] = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def run() -> None:
    sys.exit(main())
