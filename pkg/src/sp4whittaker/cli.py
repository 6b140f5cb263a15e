"""Command-line front end: classification, evaluation, solving, verification
suites, and decision tables, with deterministic JSON/table/CSV output.

Exit codes: 0 success (no FAIL in a verification report), 1 domain error or
failed verification, 2 usage error.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import fourier_jacobi as fjmod
from . import rules
from .report import dumps
from .solutions import (DegenerateCharacter, ParameterError, blattner,
                        borel_recurrence_solve, borel_solution, classify,
                        compare_borel_formulas, siegel_solution)
from .verify import run_suite

_PARABOLIC_ALIASES = {"siegel": "P_S", "jacobi": "P_J", "minimal": "P_0",
                      "P_S": "P_S", "P_J": "P_J", "P_0": "P_0"}


def _parse_lambda(text: str):
    try:
        l1, l2 = (int(x) for x in text.split(","))
    except Exception:
        raise ParameterError(f"--lambda expects 'L1,L2', got {text!r}")
    return classify(l1, l2)


def _parse_grid(text: str) -> list[tuple[float, float]]:
    pts = []
    for chunk in text.split(","):
        try:
            a1, a2 = (float(x) for x in chunk.split(":"))
        except Exception:
            raise ParameterError(f"--grid expects 'a1:a2,a1:a2,...', got {text!r}")
        if a1 <= 0 or a2 <= 0:
            raise ParameterError("grid points must be positive")
        pts.append((a1, a2))
    return pts


DEFAULT_GRID = "1:1,2:1,1:2,0.5:0.5"


def _family_rows(fam) -> list[dict]:
    rows = []
    for i, f in enumerate(fam.entries):
        terms = []
        for (p, q, r, w), c in f.terms:
            t = {"coeff": repr(c) if hasattr(c, "is_zero") else complex(c).real,
                 "y1_power": str(p), "y2_power": str(q)}
            if r != 0.0:
                t["exp_rate"] = r
            if w is not None:
                t["w_kappa"] = w[0]
                t["w_mu"] = w[1]
                t["w_scale"] = w[2]
            terms.append(t)
        rows.append({"index": i, "terms": terms})
    return rows


def _grid_values(fam, grid) -> list[dict]:
    out = []
    for a1, a2 in grid:
        for i, f in enumerate(fam.entries):
            v = f.evaluate(a1, a2)
            out.append({"a1": a1, "a2": a2, "i": i,
                        "value": v.real if abs(v.imag) < 1e-300 else [v.real, v.imag]})
    return out


def _emit(payload, fmt: str) -> str:
    if fmt == "json":
        return dumps(payload)
    if fmt == "csv":
        rows = payload if isinstance(payload, list) else payload.get("values", [])
        lines = ["a1,a2,i,value"]
        for r in rows:
            lines.append(f'{r["a1"]:.17g},{r["a2"]:.17g},{r["i"]},{r["value"]:.17g}')
        return "\n".join(lines)
    return _as_table(payload)


def _as_table(payload, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(payload, dict):
        lines = []
        for k in sorted(payload.keys(), key=str):
            v = payload[k]
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}{k}:")
                lines.append(_as_table(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
        return "\n".join(lines)
    if isinstance(payload, list):
        lines = []
        for v in payload:
            if isinstance(v, (dict, list)):
                lines.append(_as_table(v, indent))
                lines.append("")
            else:
                lines.append(f"{pad}- {v}")
        return "\n".join(x for x in lines if x != "" or True).rstrip()
    return f"{pad}{payload}"


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="sp4whittaker",
        description="degenerate Whittaker solutions and decision tables for Sp(4,R)")
    ap.add_argument("--format", choices=("json", "table", "csv"), default="json")
    ap.add_argument("--threads", type=int, default=1,
                    help="reserved; evaluation is deterministic and single-threaded")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="chamber type and minimal K-type data")
    c.add_argument("--lambda", dest="lam", required=True)

    b = sub.add_parser("blattner", help="minimal K-type highest weight")
    b.add_argument("--lambda", dest="lam", required=True)

    e = sub.add_parser("eval", help="evaluate a solution family on a grid")
    e.add_argument("what", choices=("siegel", "borel", "fj"))
    e.add_argument("--lambda", dest="lam", required=True)
    e.add_argument("--c0", type=float, default=1.0)
    e.add_argument("--grid", default=DEFAULT_GRID)
    e.add_argument("--family", default="f1", help="borel family name f0..f4")
    e.add_argument("--pi1", default=None, help="rank-one label sign:weight, e.g. +:3")
    e.add_argument("--const", default="1,1", help="C0,C1 for the siegel family")
    e.add_argument("--a", type=float, default=1.0, help="torus coordinate for fj")

    s = sub.add_parser("solve", help="solve the flat-character system exactly")
    s.add_argument("what", choices=("borel",))
    s.add_argument("--lambda", dest="lam", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=("lie", "beta", "whittaker", "siegel",
                                     "borel", "fj", "rules", "all"))
    v.add_argument("--max-degree", type=int, default=12)
    v.add_argument("--seed", type=int, default=0)

    t = sub.add_parser("table", help="decision tables")
    t.add_argument("what", choices=("cuspidal", "embeddings"))
    t.add_argument("--parabolic", default="siegel",
                   choices=sorted(_PARABOLIC_ALIASES.keys()))
    t.add_argument("--lambda", dest="lam", required=True)
    return ap


def _cmd_classify(args) -> dict:
    p = _parse_lambda(args.lam)
    L = blattner(p)
    return {"xi_type": p.xi_type, "blattner": [L.L1, L.L2], "d": L.d}


def _cmd_eval(args):
    p = _parse_lambda(args.lam)
    grid = _parse_grid(args.grid)
    if args.what == "siegel":
        c0pair = args.const.split(",")
        C0, C1 = float(c0pair[0]), float(c0pair[1])
        fam = siegel_solution(p, args.c0, C0=C0, C1=C1)
        payload = {"family": _family_rows(fam), "values": _grid_values(fam, grid)}
    elif args.what == "borel":
        fam = borel_solution(p, args.family)
        payload = {"family": _family_rows(fam), "values": _grid_values(fam, grid)}
    else:
        if args.pi1 is None:
            raise ParameterError("eval fj requires --pi1 sign:weight")
        sign, weight = args.pi1.split(":")
        label = fjmod.SL2Label(sign, int(weight))
        f = fjmod.fj_function(p, label)
        vals = fjmod.fj_evaluate(f, args.a)
        payload = {
            "power": f.power,
            "terms": [{"coeff": str(c), "sl2_weight": w, "ktype_index": k}
                      for c, w, k in f.terms],
            "values": [{"a1": args.a, "a2": args.a, "i": k, "value": v}
                       for _, k, v in vals],
        }
    return payload


def _cmd_solve(args):
    p = _parse_lambda(args.lam)
    basis = borel_recurrence_solve(p)
    cmp_out = compare_borel_formulas(p)
    return {"dimension": len(basis),
            "basis": [_family_rows(f) for f in basis],
            "printed_table_comparison": cmp_out}


def _cmd_table(args):
    p = _parse_lambda(args.lam)
    if args.what == "cuspidal":
        rec = rules.allowed_cuspidal_components(_PARABOLIC_ALIASES[args.parabolic], p)
        return rec.to_jsonable()
    out = {"lambda": [p.l1, p.l2], "xi_type": p.xi_type,
           "siegel_targets": [{"exponent": str(e), "weight": w}
                              for e, w in rules.emb_siegel_targets(p)],
           "jacobi_slots": [
               {"slot": 1, "exponent": str(Fraction(-p.l2)), "required_parity": p.l2 % 2},
               {"slot": 2, "exponent": str(Fraction(p.l1)), "required_parity": p.l1 % 2}],
           "principal_patterns": []}
    for pattern in range(1, 6):
        table = rules._P0_PATTERNS_II if p.xi_type == "II" else rules._P0_PATTERNS_III
        e1, e2 = table[pattern](p.l1, p.l2)
        entry = {"pattern": pattern, "exponents": [str(e1), str(e2)]}
        if pattern == 1:
            entry["condition"] = {"mu1_parity": p.l2 % 2, "mu2_parity": (p.l1 + 1) % 2}
        elif pattern in (2, 3):
            entry["condition"] = {"product_parity": (p.l1 + p.l2 + 1) % 2}
        else:
            entry["condition"] = "never"
        out["principal_patterns"].append(entry)
    conv = []
    for parab, branches in (("P_S", (2, 3)), ("P_J", (2, 3)), ("P_0", (1, 2))):
        for br in branches:
            conv.append(rules.convergence_record(parab, p, br).to_jsonable())
    out["convergence"] = conv
    return out


def run(argv: list[str]) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "classify":
            payload = _cmd_classify(args)
        elif args.command == "blattner":
            p = _parse_lambda(args.lam)
            L = blattner(p)
            payload = {"blattner": [L.L1, L.L2], "d": L.d}
        elif args.command == "eval":
            payload = _cmd_eval(args)
        elif args.command == "solve":
            payload = _cmd_solve(args)
        elif args.command == "verify":
            report = run_suite(args.suite, seed=args.seed, max_degree=args.max_degree)
            print(_emit(report.to_jsonable(), args.format))
            return 0 if report.ok else 1
        else:
            payload = _cmd_table(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(_emit(payload, args.format))
    return 0


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
