"""Command line front end.

Every subcommand prints deterministic output: sets are sorted, rationals are
exact strings, and repeated runs of one invocation produce identical bytes.
Exit codes separate the failure kinds: 1 for bad arguments (unknown type,
malformed vector, unsupported rank), 2 for an internal cross check tripping,
3 for a counterexample found by the selftest scan.
"""

from __future__ import annotations

import argparse
import json
import sys

from .checks import EXCHANGE_TABLES, run_all
from .components import component_of, translate_psi
from .kmweights import affine_weight_json, format_affine_weight, varpi
from .polytope import (
    integral_gap_scan,
    moment_polytope,
    polytope_json,
)
from .psi import iwahori_leq, psi_infinity
from .rootsys import (
    ConsistencyError,
    NotApplicableError,
    UnsupportedRankError,
    parse_coweight,
    root_system,
)
from .rops import braid_check, braid_scan, covers, dim_orbit, r_closure, r_op


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; remap to 1 so status 2
    # stays reserved for internal cross check failures
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _fmt(vec) -> str:
    return ",".join(str(c) for c in vec)


def _emit(obj) -> None:
    print(json.dumps(obj))


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 1


def _read_coweight(rs, text, basis):
    vals = parse_coweight(text, rs.rank)
    if basis == "coroot":
        # integer coroot coordinates; convert to the fundamental basis
        vals = tuple(
            sum(vals[j] * rs.cartan[j][i] for j in range(rs.rank))
            for i in range(rs.rank)
        )
    return vals


def _read_root(rs, text):
    vec = parse_coweight(text, rs.rank)
    if not rs.is_root(vec):
        raise ValueError(f"{_fmt(vec)} is not a root of {rs.cartan_type}")
    return vec


# -- subcommand bodies -------------------------------------------------------

def _cmd_psi(rs, args):
    result = psi_infinity(rs, _read_coweight(rs, args.lam, args.basis))
    members = sorted(result.members)
    if args.format == "json":
        _emit({
            "lambda": list(result.base),
            "members": [list(m) for m in members],
            "generations": {_fmt(m): result.generation[m] for m in members},
        })
    else:
        for m in members:
            print(f"{_fmt(m)}\t{result.generation[m]}")
    return 0


def _cmd_order(rs, args):
    mu = _read_coweight(rs, args.mu, args.basis)
    lam = _read_coweight(rs, args.lam, args.basis)
    value = iwahori_leq(rs, mu, lam)
    if args.format == "json":
        _emit({"mu": list(mu), "lambda": list(lam), "leq": value})
    else:
        print("true" if value else "false")
    return 0


def _cmd_rop(rs, args):
    lam = _read_coweight(rs, args.lam, args.basis)
    vec = _read_root(rs, args.root)
    image = r_op(rs, lam, vec)
    if args.format == "json":
        _emit({"lambda": list(lam), "root": list(vec), "image": list(image)})
    else:
        print(_fmt(image))
    return 0


def _cmd_closure(rs, args):
    lam = _read_coweight(rs, args.lam, args.basis)
    members = sorted(r_closure(rs, lam))
    if args.format == "json":
        _emit({"lambda": list(lam), "members": [list(m) for m in members]})
    else:
        for m in members:
            print(_fmt(m))
    return 0


def _cmd_dim(rs, args):
    lam = _read_coweight(rs, args.lam, args.basis)
    value = dim_orbit(rs, lam)
    if args.format == "json":
        _emit({"lambda": list(lam), "dim": value})
    else:
        print(value)
    return 0


def _cmd_covers(rs, args):
    lam = _read_coweight(rs, args.lam, args.basis)
    pairs = covers(rs, lam)
    if args.format == "json":
        _emit({
            "lambda": list(lam),
            "covers": [{"mu": list(mu), "root": list(vec)}
                       for mu, vec in pairs],
        })
    else:
        for mu, vec in pairs:
            print(f"{_fmt(mu)}\t{_fmt(vec)}")
    return 0


def _cmd_braid(rs, args):
    lam = _read_coweight(rs, args.lam, args.basis)
    alpha = _read_root(rs, args.alpha)
    beta = _read_root(rs, args.beta)
    rep = braid_check(rs, lam, alpha, beta)
    if args.format == "json":
        _emit({
            "lambda": list(rep.lam),
            "alpha": list(rep.root_pair[0]),
            "beta": list(rep.root_pair[1]),
            "pairings": list(rep.pairings),
            "kind": rep.kind,
            "lhs": list(rep.lhs),
            "rhs": list(rep.rhs),
            "equal": rep.equal,
            "critical_lines_hit": [
                {"root": list(vec), "level": k}
                for vec, k in rep.critical_lines_hit
            ],
        })
    else:
        print(f"kind={rep.kind}")
        print(f"pair={_fmt(rep.root_pair[0])};{_fmt(rep.root_pair[1])}")
        print(f"lhs={_fmt(rep.lhs)}")
        print(f"rhs={_fmt(rep.rhs)}")
        print(f"equal={'true' if rep.equal else 'false'}")
        for vec, k in rep.critical_lines_hit:
            print(f"wall={_fmt(vec)}@{k}")
    return 0


def _print_exchange_tables():
    for table in EXCHANGE_TABLES:
        print(f"pattern {table.type_name}: "
              f"alpha={_fmt(table.alpha)} beta={_fmt(table.beta)} "
              f"(a, b pair against alpha, beta; s = a+b, t = 2a+b)")
        width = max(len(r.cond_text) for r in table.rows)
        for row in table.rows:
            lhs = f"w(lam) - {row.lhs[0]}*ac - {row.lhs[1]}*bc"
            rhs = ("" if row.rhs is None
                   else f"w(lam) - {row.rhs[0]}*ac - {row.rhs[1]}*bc")
            print(f"  {row.label:>2} | {row.cond_text:<{width}} | "
                  f"{lhs} | {rhs}")


def _cmd_braid_scan(rs, args):
    rows = braid_scan(rs, args.box)
    buckets = {}
    for row in rows:
        buckets[row.bucket] = buckets.get(row.bucket, 0) + 1
    unequal = [r for r in rows if r.bucket != "equal"]
    if args.format == "json":
        _emit({
            "type": rs.cartan_type,
            "radius": args.box,
            "buckets": {k: buckets[k] for k in sorted(buckets)},
            "unequal": [
                {"lambda": list(r.lam), "alpha": list(r.alpha),
                 "beta": list(r.beta), "kind": r.kind, "bucket": r.bucket}
                for r in unequal
            ],
        })
    else:
        for key in sorted(buckets):
            print(f"{key}\t{buckets[key]}")
        for r in unequal:
            print(f"{_fmt(r.lam)}\t{_fmt(r.alpha)}\t{_fmt(r.beta)}\t"
                  f"{r.kind}\t{r.bucket}")
        if args.emit_table:
            _print_exchange_tables()
    return 0


def _cmd_component(rs, args):
    lam = _read_coweight(rs, args.lam, args.basis)
    comp = component_of(rs, lam)
    if args.format == "json":
        _emit({"lambda": list(lam), "kappa": comp.kappa,
               "omega": list(comp.omega)})
    else:
        print(f"kappa={comp.kappa}")
        print(f"omega={_fmt(comp.omega)}")
    return 0


def _cmd_translate(rs, args):
    lam = _read_coweight(rs, args.lam, args.basis)
    image = translate_psi(rs, lam, args.kappa)
    if args.format == "json":
        _emit({"lambda": list(lam), "kappa": args.kappa,
               "image": list(image)})
    else:
        print(_fmt(image))
    return 0


def _cmd_varpi(rs, args):
    lam = _read_coweight(rs, args.lam, args.basis)
    weight = varpi(rs, lam)
    if args.format == "json":
        _emit(affine_weight_json(weight))
    else:
        print(format_affine_weight(weight))
    return 0


def _cmd_polytope(rs, args):
    lam = _read_coweight(rs, args.lam, args.basis)
    poly = moment_polytope(rs, lam, want_facets=True)
    data = polytope_json(rs, poly)
    if args.format == "json":
        _emit(data)
    else:
        for v in data["vertices"]:
            print(f"vertex\t{_fmt(v)}")
        for f in data["facets"]:
            print(f"facet\t{_fmt(f['normal'])}\t{f['rhs']}")
        for g in data["gaps"]:
            print(f"gap\t{_fmt(g)}")
    return 0


def _cmd_gap_scan(rs, args):
    lam = _read_coweight(rs, args.lam, args.basis)
    gaps = integral_gap_scan(rs, lam)
    if args.format == "json":
        _emit({"lambda": list(lam), "gaps": [list(g) for g in gaps]})
    else:
        if gaps:
            for g in gaps:
                print(_fmt(g))
        else:
            print("none")
    return 0


def _cmd_selftest(args):
    results = run_all(args.box)
    failed = 0
    for res in results:
        mark = "PASS" if res.passed else "FAIL"
        print(f"{mark} {res.name} [{res.elapsed:.2f}s] {res.detail}")
        if not res.passed:
            failed += 1
    if failed:
        print(f"{failed} of {len(results)} checks failed")
        return 3
    print(f"all {len(results)} checks passed")
    return 0


def _cmd_report(args):
    from .report import write_report  # pulls in matplotlib, so import late

    paths = write_report(args.out, scan_radius=args.box)
    print(f"scan\t{paths.scan_csv}")
    print(f"census\t{paths.census_csv}")
    print(f"figure\t{paths.scan_figure}")
    print(f"figure\t{paths.census_figure}")
    print(f"findings\t{paths.findings_path}\t{len(paths.findings)}")
    for line in paths.findings:
        print(f"finding\t{line}")
    return 0


# -- wiring -------------------------------------------------------------------

def _add_common(sub, lam=True, mu=False, root=False, pair=False):
    sub.add_argument("--type", required=True, help="Cartan type, e.g. A2")
    if lam:
        sub.add_argument("--lambda", dest="lam", required=True,
                         help="coweight, comma separated integers")
    if mu:
        sub.add_argument("--mu", required=True,
                         help="coweight, comma separated integers")
    if root:
        sub.add_argument("--root", required=True,
                         help="positive root, comma separated coefficients")
    if pair:
        sub.add_argument("--alpha", required=True,
                         help="first root, comma separated coefficients")
        sub.add_argument("--beta", required=True,
                         help="second root, comma separated coefficients")
    sub.add_argument("--format", choices=("text", "json"), default="text")
    sub.add_argument("--basis", choices=("fundamental", "coroot"),
                     default="fundamental",
                     help="basis of the coweight arguments")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="affgrass",
                     description="orbit closure sets, operators, and "
                                 "level one weights for simple types")
    subs = parser.add_subparsers(dest="subcommand", required=True)

    _add_common(subs.add_parser("psi", help="members of the closure set"))
    _add_common(subs.add_parser("order", help="compare two coweights"),
                mu=True)
    _add_common(subs.add_parser("rop", help="apply one root operator"),
                root=True)
    _add_common(subs.add_parser("closure", help="operator closure of a "
                                                "coweight"))
    _add_common(subs.add_parser("dim", help="orbit dimension"))
    _add_common(subs.add_parser("covers", help="covers in the closure "
                                               "order"))
    _add_common(subs.add_parser("braid", help="compare the two composites "
                                              "of a root pair"), pair=True)
    scan = subs.add_parser("braid-scan", help="classify a coweight box "
                                              "against all root pairs")
    scan.add_argument("--type", required=True)
    scan.add_argument("--box", type=int, default=4, help="box radius")
    scan.add_argument("--emit-table", action="store_true",
                      help="also print the exchange tables")
    scan.add_argument("--format", choices=("text", "json"), default="text")
    _add_common(subs.add_parser("component", help="component index of a "
                                                  "coweight"))
    tr = subs.add_parser("translate", help="translate a lattice coweight "
                                           "to another component")
    _add_common(tr)
    tr.add_argument("--kappa", type=int, required=True,
                    help="target component label")
    _add_common(subs.add_parser("varpi", help="level one weight of a "
                                              "coweight"))
    _add_common(subs.add_parser("polytope", help="vertices, facets and gaps "
                                                 "of the moment polytope"))
    _add_common(subs.add_parser("gap-scan", help="integral points missing "
                                                 "from the set"))
    st = subs.add_parser("selftest", help="run the full check suite")
    st.add_argument("--box", type=int, default=4, help="box radius")
    rp = subs.add_parser("report", help="write the exploratory scan report")
    rp.add_argument("--out", required=True, help="output directory")
    rp.add_argument("--box", type=int, default=6,
                    help="hexagonal scan radius")
    return parser


_HANDLERS = {
    "psi": _cmd_psi,
    "order": _cmd_order,
    "rop": _cmd_rop,
    "closure": _cmd_closure,
    "dim": _cmd_dim,
    "covers": _cmd_covers,
    "braid": _cmd_braid,
    "braid-scan": _cmd_braid_scan,
    "component": _cmd_component,
    "translate": _cmd_translate,
    "varpi": _cmd_varpi,
    "polytope": _cmd_polytope,
    "gap-scan": _cmd_gap_scan,
}


_VECTOR_FLAGS = ("--lambda", "--mu", "--root", "--alpha", "--beta")


def _merge_vector_flags(argv):
    # join "--lambda -6,3" into "--lambda=-6,3" so a leading minus in the
    # value is not mistaken for an option
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VECTOR_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    try:
        args = parser.parse_args(_merge_vector_flags(argv))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        if args.subcommand == "selftest":
            return _cmd_selftest(args)
        if args.subcommand == "report":
            return _cmd_report(args)
        rs = root_system(args.type)
        return _HANDLERS[args.subcommand](rs, args)
    except ConsistencyError as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return 2
    except (UnsupportedRankError, NotApplicableError, ValueError) as exc:
        return _fail(str(exc))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1


if __name__ == "__main__":
    sys.exit(main())
