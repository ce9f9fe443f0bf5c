"""Command-line interface: ``tighttri <command> ...``.

Exit status: 0 when the analysis completed (whatever the verdict), 2 on
invalid input, 3 when an enumeration cap refused the job.
"""

from __future__ import annotations

import argparse
import enum
import json
import os
import sys
from dataclasses import fields, is_dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from . import feasibility as fz
from .complex import SimplicialComplex, link, manifold_check, neighbourliness
from .errors import CapExceeded, DecompositionError, ValidationError
from .fixtures import CATALOG, fixture_names, get_fixture
from .homology import FieldSpec, betti, integral_homology
from .io import dumps, load
from .spheres import SummandClass, link_profile, primitive_decomposition
from .tightness import (
    BRUTE_CAP,
    SIGMA_CAP,
    brute_force_tight,
    mu_vector,
    sigma_vector,
    tightness_criterion_3manifold,
    verify_witness,
)

PRIMES_ENV = "TIGHTTRI_PRIMES"
DEFAULT_PRIMES = "2,3,5,7"


def jsonable(obj: Any) -> Any:
    """Plain JSON data; rationals become "p/q" strings."""
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, FieldSpec):
        return str(obj)
    if isinstance(obj, SimplicialComplex):
        return {"vertices": list(obj.vertices), "facets": [list(f) for f in obj.facets]}
    if is_dataclass(obj):
        return {f.name: jsonable(getattr(obj, f.name)) for f in fields(obj)}
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        return [jsonable(v) for v in obj]
    return str(obj)


def fmt(obj: Any) -> str:
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (list, tuple)):
        return "(" + ", ".join(fmt(v) for v in obj) + ")"
    return str(obj)


def default_fields() -> list[FieldSpec]:
    text = os.environ.get(PRIMES_ENV, DEFAULT_PRIMES)
    out = [FieldSpec.parse(t) for t in text.replace(";", ",").split(",") if t.strip()]
    return out + [FieldSpec(0)]


def resolve(source: str, seed: int) -> tuple[str, SimplicialComplex]:
    path = Path(source)
    if path.suffix == ".json" or path.is_file():
        return path.stem, load(path)
    return source, get_fixture(source, seed)


def target(args) -> tuple[str, SimplicialComplex]:
    name, X = resolve(args.source, args.seed)
    if getattr(args, "link", None) is not None:
        X = link(X, args.link)
        name = f"{name} (link of {args.link})"
    return name, X


class Out:
    def __init__(self, as_json: bool) -> None:
        self.as_json = as_json
        self.data: dict[str, Any] = {}

    def put(self, key: str, value: Any, text: str | None = None) -> None:
        self.data[key] = jsonable(value)
        if not self.as_json:
            print(f"{key}: {text if text is not None else fmt(value)}")

    def line(self, text: str) -> None:
        if not self.as_json:
            print(text)

    def finish(self) -> None:
        if self.as_json:
            print(json.dumps(self.data, indent=2))


def cmd_analyze(args, out: Out) -> None:
    name, X = target(args)
    out.put("name", name)
    rep = manifold_check(X)
    out.put("f_vector", X.f_vector)
    out.put("dimension", X.dim)
    out.put("neighbourliness", neighbourliness(X))
    for key in ("is_pure", "is_connected", "is_pseudomanifold", "is_closed_surface",
                "is_closed_3manifold", "euler_characteristic", "dehn_sommerville"):
        out.put(key, getattr(rep, key))
    fields_ = args.field or default_fields()
    out.put("betti", {str(f): betti(X, f).values for f in fields_},
            "; ".join(f"{f}: {fmt(betti(X, f).values)}" for f in fields_))
    H = integral_homology(X)
    out.put("integral_homology", {"free": H.free, "torsion": H.torsion},
            ", ".join(f"H{i} = {H.describe(i)}" for i in range(len(H.free))))
    if rep.is_closed_3manifold:
        prof = link_profile(X)
        out.put("locally_stacked", prof.is_locally_stacked)
        out.put("locally_icosian", prof.is_locally_icosian)
        out.put("link_screen_pass", prof.link_screen_pass)
        out.put("link_profile", prof.vertices,
                " ".join(f"{v.vertex}:(k={v.k},l={v.ell},other={v.other})" for v in prof.vertices))


def tight_fields(args, X: SimplicialComplex) -> list[FieldSpec]:
    fields_ = list(args.field or default_fields())
    if not args.no_torsion_primes:
        for p in integral_homology(X).torsion_primes():
            if FieldSpec(p) not in fields_:
                fields_.append(FieldSpec(p))
    return fields_


def cmd_tight(args, out: Out) -> None:
    name, X = target(args)
    out.put("name", name)
    fields_ = tight_fields(args, X)
    out.put("fields", [str(f) for f in fields_], ", ".join(map(str, fields_)))
    method = args.method
    if method == "auto":
        method = "brute" if X.n_vertices <= args.cap else "criterion"
    reports = []
    for f in fields_:
        if method in ("brute", "both"):
            r = brute_force_tight(X, f, cap=args.cap, order=args.order)
            reports.append(r)
            w = f" witness={r.witness.vertices} degree={r.witness.degree}" if r.witness else ""
            if r.witness:
                w += f" (re-verified: {verify_witness(X, r)})"
            out.line(f"[{f}] brute: {r.verdict.value}{w}")
        if method in ("criterion", "both"):
            r = tightness_criterion_3manifold(X, f)
            reports.append(r)
            trace = ", ".join(f"{k}={fmt(v)}" for k, v in r.criteria_trace)
            out.line(f"[{f}] criterion: {r.verdict.value} [{trace}]")
    out.data["reports"] = jsonable(reports)
    out.line("scope: only the fields listed above were checked")


def cmd_decompose(args, out: Out) -> None:
    name, X = target(args)
    out.put("name", name)
    tree = primitive_decomposition(X)
    classes = tree.classes
    out.put("summands", len(tree.nodes))
    out.put("classes", [c.value for c in classes],
            ", ".join(f"{c.value} x{classes.count(c)}" for c in SummandClass if c in classes))
    for i, (P, c) in enumerate(zip(tree.nodes, classes)):
        out.line(f"  node {i}: {c.value} on vertices {P.vertices}")
    for i, j, alpha in tree.edges:
        out.line(f"  edge {i} -- {j} along {alpha}")
    out.data["nodes"] = [{"class": c.value, "vertices": list(P.vertices), "facets": [list(f) for f in P.facets]}
                         for P, c in zip(tree.nodes, classes)]
    out.data["edges"] = [[i, j, list(a)] for i, j, a in tree.edges]


def cmd_sigma(args, out: Out) -> None:
    name, X = target(args)
    out.put("name", name)
    for f in args.field or [FieldSpec(2)]:
        s = sigma_vector(X, f, cap=args.cap)
        out.put(f"sigma[{f}]", s.sigma)
        out.put(f"sigma_star[{f}]", s.sigma_star)
        if not args.no_mu:
            m = mu_vector(X, f, cap=args.cap)
            out.put(f"mu[{f}]", m.mu)


def cmd_feasible(args, out: Out) -> None:
    if args.table:
        table = {1: fz.enumerate_table1, 2: fz.enumerate_table2, 3: fz.enumerate_table3}[args.table]
        rows = table(args.nmax, verbose=True) if args.table == 2 and args.verbose else table(args.nmax)
        out.put("table", args.table)
        out.put("rows", [(r.n, r.beta1) for r in rows], str(len(rows)))
        for r in rows:
            out.line(f"  n={r.n} beta1={r.beta1}")
        return
    if args.topologies is not None:
        entries = fz.cor514_topology_list(args.topologies)
        out.data["entries"] = jsonable(entries)
        for e in entries:
            out.line(f"k={e.k} n={e.n}: {' or '.join(e.labels)}")
        return
    if args.n is None or args.beta1 is None:
        raise ValidationError("feasible needs --table, --topologies, or both --n and --beta1")
    r = fz.check_parameters(args.n, args.beta1)
    for f in fields(r):
        out.put(f.name, getattr(r, f.name))
    out.put("feasible", r.feasible)
    if args.n >= 6:
        out.put("beta1_lower_bound", fz.spreer_min_beta(args.n, 1))
        out.put("min_beta1", fz.min_beta1(args.n))


def cmd_fixtures(args, out: Out) -> None:
    if not args.name:
        for n in fixture_names():
            base = n.partition(":")[0]
            out.line(f"{n:22s} {CATALOG[base].description}")
        out.data["fixtures"] = fixture_names()
        return
    X = get_fixture(args.name, args.seed)
    text = dumps(X, args.name)
    if args.emit:
        Path(args.emit).write_text(text, encoding="utf-8")
        out.put("written", args.emit)
    elif out.as_json:
        out.data.update(json.loads(text))
    else:
        sys.stdout.write(text)


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except ValidationError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tighttri", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fields_=True):
        sp.add_argument("source", help="fixture name (see `tighttri fixtures`) or path to a JSON document")
        sp.add_argument("--seed", type=int, default=0, help="seed for randomized fixtures")
        sp.add_argument("--link", type=int, help="work on the link of this vertex")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        if fields_:
            sp.add_argument("--field", type=_field, action="append",
                            help="q or z<p>; repeatable (default: $%s, plus q)" % PRIMES_ENV)

    sp = sub.add_parser("analyze", help="f-vector, manifold flags, homology, link profile")
    common(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("tight", help="tightness report")
    common(sp)
    sp.add_argument("--method", choices=("brute", "criterion", "both", "auto"), default="auto")
    sp.add_argument("--order", choices=("decreasing", "increasing"), default="decreasing",
                    help="subset order for brute force (by size, then lexicographic)")
    sp.add_argument("--cap", type=int, default=BRUTE_CAP, help="vertex cap for brute force")
    sp.add_argument("--no-torsion-primes", action="store_true",
                    help="do not add primes dividing integral torsion to the field list")
    sp.set_defaults(func=cmd_tight)

    sp = sub.add_parser("decompose", help="connected-sum tree of a 2-sphere")
    common(sp, fields_=False)
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("sigma", help="sigma, sigma-star and mu vectors")
    common(sp)
    sp.add_argument("--cap", type=int, default=SIGMA_CAP)
    sp.add_argument("--no-mu", action="store_true")
    sp.set_defaults(func=cmd_sigma)

    sp = sub.add_parser("feasible", help="parameter checks and table regeneration")
    sp.add_argument("--n", type=int)
    sp.add_argument("--beta1", type=int)
    sp.add_argument("--table", type=int, choices=(1, 2, 3))
    sp.add_argument("--nmax", type=int, default=200)
    sp.add_argument("--topologies", type=int, metavar="BETA1_MAX")
    sp.add_argument("--verbose", action="store_true", help="table 2: list every feasible beta1")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_feasible)

    sp = sub.add_parser("fixtures", help="list fixtures or print one as a document")
    sp.add_argument("name", nargs="?")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--emit", metavar="PATH")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_fixtures)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = Out(getattr(args, "json", False))
    try:
        args.func(args, out)
    except CapExceeded as exc:
        print(f"tighttri: refused: {exc}", file=sys.stderr)
        return 3
    except (ValidationError, DecompositionError) as exc:
        print(f"tighttri: error: {exc}", file=sys.stderr)
        return 2
    out.finish()
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
