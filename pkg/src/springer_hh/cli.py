"""Command-line front end.

Every command prints a report whose top level carries
``"schema": "springer-hh/1"``.  JSON is canonical; ``--format csv`` and
``--format text`` print the report's row projection.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import bundles, frakh, hhtable, rank1, rootdata, schubert
from .cache import ENV_VAR, cache_weyl
from .errors import ParameterError, ResourceError
from .selfcheck import run_self_test

SCHEMA = "springer-hh/1"
COMMANDS = ("roots", "weyl", "schubert", "frakh", "bundles", "euler", "rank1", "center")
FORMATS = ("json", "csv", "text")

EXIT_OK, EXIT_FAIL, EXIT_PARAM, EXIT_RESOURCE = 0, 1, 2, 3


@dataclass
class CommandConfig:
    command: str | None
    type_label: str = "A"
    rank: int = 1
    format: str = "json"
    j_max: int | None = None
    k_min: int | None = None
    k_max: int = 20
    s_max: int = 10
    cache_dir: str | None = None
    seed: int = 0
    self_test: bool = False


class FlagError(ParameterError):
    def __init__(self, flag: str, message: str):
        super().__init__(f"{flag}: {message}")
        self.flag = flag


def _num(c):
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return c


def _root_system(cfg: CommandConfig) -> rootdata.RootSystem:
    try:
        return rootdata.build_root_system(cfg.type_label, cfg.rank)
    except ParameterError as exc:
        raise FlagError("--type/--rank", str(exc)) from None


def _validate(cfg: CommandConfig, rs: rootdata.RootSystem) -> None:
    d = rs.num_positive_roots
    if cfg.j_max is not None and not 0 <= cfg.j_max <= 2 * d:
        raise FlagError("--jmax", f"must lie in [0, {2 * d}] for {rs.name}")
    if cfg.k_min is not None and cfg.k_min % 2:
        raise FlagError("--kmin", "must be even")
    if cfg.k_max % 2:
        raise FlagError("--kmax", "must be even")
    if cfg.k_min is not None and cfg.k_min > cfg.k_max:
        raise FlagError("--kmin", f"exceeds --kmax ({cfg.k_min} > {cfg.k_max})")
    if cfg.s_max < 0:
        raise FlagError("--smax", "must be non-negative")


# -- commands: each returns (report, rows) ------------------------------------


def cmd_roots(cfg, rs):
    roots = [
        {"simple_coords": list(s), "weight": list(f)}
        for s, f in zip(rs.positive_roots_simple, rs.positive_roots)
    ]
    report = {
        "cartan_matrix": [list(r) for r in rs.cartan_matrix],
        "symmetrizers": list(rs.symmetrizers),
        "rho": list(rs.rho),
        "dim_G_mod_B": rs.num_positive_roots,
        "positive_roots": roots,
    }
    rows = [{"simple_coords": " ".join(map(str, r["simple_coords"])), "weight": " ".join(map(str, r["weight"]))} for r in roots]
    return report, rows


def cmd_weyl(cfg, rs):
    g = rootdata.weyl_group(rs)
    elements = [{"word": w.label(), "length": w.length, "matrix": [list(r) for r in w.matrix]} for w in g]
    report = {
        "order": len(g),
        "longest_length": g.longest.length,
        "length_counts": rootdata.length_generating_function(g),
        "elements": elements,
    }
    rows = [{"word": e["word"], "length": e["length"]} for e in elements]
    return report, rows


def cmd_schubert(cfg, rs):
    calc = schubert.schubert_calculus(rs)
    g = calc.group
    products = []
    for a, u in enumerate(g.elements):
        for v in g.elements[a:]:
            p = calc.product(u, v)
            if p.coeffs:
                products.append(
                    {"u": u.label(), "v": v.label(), "product": [{"w": w.label(), "coeff": _num(c)} for w, c in p.items()]}
                )
    report = {"poincare_polynomial": schubert.poincare_polynomial(rs), "products": products}
    rows = [
        {"u": p["u"], "v": p["v"], "w": t["w"], "coeff": t["coeff"]} for p in products for t in p["product"]
    ]
    return report, rows


def cmd_frakh(cfg, rs):
    table = frakh.build_frakh(rs)
    report = table.to_json()
    report["laws"] = [
        {"law": law.name, "passed": law.passed, "witness": law.witness}
        for law in frakh.nilradical_annihilation_check(rs)
    ]
    rows = []
    for i, row in enumerate(table.products):
        for j, cell in enumerate(row):
            for k, c in sorted(cell.items()):
                rows.append({"i": i, "j": j, "k": k, "coeff": _num(c)})
    return report, rows


def cmd_bundles(cfg, rs):
    d = rs.num_positive_roots
    j_max = 2 * d if cfg.j_max is None else cfg.j_max
    k_min = hhtable.default_k_min(rs) if cfg.k_min is None else cfg.k_min
    vertical, horizontal = bundles.tangent_weights(rs)
    pieces, rows = [], []
    for j in range(j_max + 1):
        for k in range(k_min, cfg.k_max + 1, 2):
            ws = bundles.polyvector_gr_weights(j, k, rs)
            if ws.is_empty():
                continue
            pieces.append({"j": j, "k": k, "weights": ws.to_json()})
            rows += [{"j": j, "k": k, "weight": " ".join(map(str, e["weight"])), "mult": e["mult"]} for e in ws.to_json()]
    duality = []
    for i in range(d + 1):
        rep = bundles.verify_duality(i, rs)
        duality.append({"i": i, "passed": rep.passed, "mismatch": None if rep.mismatch is None else list(rep.mismatch)})
    report = {
        "vertical": vertical.to_json(),
        "horizontal": horizontal.to_json(),
        "duality": duality,
        "truncation": {"j_max": j_max, "k_min": k_min, "k_max": cfg.k_max},
        "polyvectors": pieces,
    }
    return report, rows


def cmd_euler(cfg, rs):
    d = rs.num_positive_roots
    j_max = 2 * d if cfg.j_max is None else cfg.j_max
    k_min = hhtable.default_k_min(rs) if cfg.k_min is None else cfg.k_min
    table = hhtable.euler_table(rs, j_max, k_min, cfg.k_max)
    report = table.to_json()
    report["hh_euler_total"] = hhtable.hh_euler_total(rs, cfg.k_max)
    return report, list(report["entries"])


def cmd_rank1(cfg, rs):
    if (rs.type_label, rs.rank) != ("A", 1):
        raise FlagError("--type/--rank", "the exact backend exists only for A1")
    k_min = -4 if cfg.k_min is None else cfg.k_min
    exact = rank1.rank1_exact_table(k_min, cfg.k_max)
    hh = rank1.rank1_hh_table(cfg.s_max, cfg.k_max)
    report = exact.to_json()
    report.update(hh.to_json())
    report["center_cells"] = [
        {"i": i, "j": j, "k": k, "value": h} for (i, j, k), h in sorted(rank1.rank1_hh_cells(0).items())
    ]
    return report, list(report["entries"])


def cmd_center(cfg, rs):
    exact = rank1.rank1_center_dimension() if (rs.type_label, rs.rank) == ("A", 1) else None
    bound = hhtable.center_lower_bound(rs)
    report = {
        "exact": exact,
        "lower_bound": bound,
        "provenance": {
            "exact": "rank-one Cech computation of the s=0 cells" if exact is not None else "unavailable above rank one",
            "lower_bound": "dimension 2|W|-1 of the explicit central subalgebra",
        },
    }
    return report, [{"exact": exact, "lower_bound": bound}]


HANDLERS = {
    "roots": cmd_roots,
    "weyl": cmd_weyl,
    "schubert": cmd_schubert,
    "frakh": cmd_frakh,
    "bundles": cmd_bundles,
    "euler": cmd_euler,
    "rank1": cmd_rank1,
    "center": cmd_center,
}


def _render(report: dict, rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        if rows:
            fields = list(rows[0])
            writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
        return buf.getvalue()
    lines = [f"# {report['command']} {report['type']}"]
    lines += ["  ".join(f"{k}={v}" for k, v in row.items()) for row in rows]
    return "\n".join(lines) + "\n"


def run(cfg: CommandConfig, out=None) -> int:
    """Execute one command; returns the process exit status."""
    out = out or sys.stdout
    try:
        if cfg.self_test:
            results = run_self_test(cfg.seed)
            for r in results:
                out.write(f"{'PASS' if r.passed else 'FAIL'} [{r.module}] {r.name}{' ' + r.detail if r.detail else ''}\n")
            return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL
        if cfg.command not in HANDLERS:
            raise FlagError("command", f"expected one of {', '.join(COMMANDS)}")
        if cfg.format not in FORMATS:
            raise FlagError("--format", f"expected one of {', '.join(FORMATS)}")
        rs = _root_system(cfg)
        _validate(cfg, rs)
        cache_weyl(rs, cfg.cache_dir)
        body, rows = HANDLERS[cfg.command](cfg, rs)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAM
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    report = {"schema": SCHEMA, "command": cfg.command, "type": rs.name}
    report.update(body)
    out.write(_render(report, rows, cfg.format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="springer-hh",
        description="Polyvector-field cohomology of the Springer resolution and related algebra.",
    )
    p.add_argument("command", nargs="?", choices=COMMANDS)
    p.add_argument("--type", dest="type_label", default="A", help="root system type letter (A-G)")
    p.add_argument("--rank", type=int, default=1)
    p.add_argument("--format", choices=FORMATS, default="json")
    p.add_argument("--jmax", dest="j_max", type=int, help="largest polyvector degree (default 2d)")
    p.add_argument("--kmin", dest="k_min", type=int, help="smallest C*-degree (default -2 dim N~)")
    p.add_argument("--kmax", dest="k_max", type=int, default=20, help="largest C*-degree (default 20)")
    p.add_argument("--smax", dest="s_max", type=int, default=10, help="largest Hochschild degree (rank1)")
    p.add_argument("--cache-dir", help=f"Weyl enumeration cache; falls back to ${ENV_VAR}")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled checks in --self-test")
    p.add_argument("--self-test", action="store_true", help="run the invariant suite and exit")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    if args.command is None and not args.self_test:
        print("error: command: a command or --self-test is required", file=sys.stderr)
        return EXIT_PARAM
    cfg = CommandConfig(
        command=args.command,
        type_label=args.type_label.upper(),
        rank=args.rank,
        format=args.format,
        j_max=args.j_max,
        k_min=args.k_min,
        k_max=args.k_max,
        s_max=args.s_max,
        cache_dir=args.cache_dir or os.environ.get(ENV_VAR) or None,
        seed=args.seed,
        self_test=args.self_test,
    )
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
