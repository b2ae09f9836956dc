"""Command-line interface: ``multikoszul analyze`` and ``multikoszul corpus``."""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time

from . import corpus as corpus_mod
from .algebra import GradedAlgebra
from .cohomology import BAR_I_MAX, BAR_N_MAX, hochschild, k2_generation_check
from .koszul import (JFamily, build_complex, square_zero, theorem_decomposition_check, tor_vs_j,
                     verdict_via_complex)
from .lattice import NotApplicable, monomial_verdict, theorem5_verdict
from .linalg import Field, LinalgError
from .presentation import ParseError, parse
from .tensor import DEFAULT_AMBIENT_CAP, TruncationTooDeep

EXIT_OK, EXIT_PARSE, EXIT_CAP, EXIT_INVARIANT = 0, 2, 3, 4

ALL_CHECKS = ["hilbert", "betti", "koszul", "decomposition", "lattice", "monomial",
              "bimodule", "hochschild", "k2"]
DEFAULT_CHECKS = ["hilbert", "betti", "koszul", "decomposition", "lattice", "monomial"]
ALIASES = {"notcoprodcasi": "notcoprodcasi_1", "loco": "loco_A"}


class InvariantViolation(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# JSON helpers

def _coeff(field, a):
    return str(field.canon(a))


def _witness(pres, w):
    if w is None:
        return None
    if isinstance(w, dict):
        if all(isinstance(k, tuple) for k in w):
            return pres.poly_str(w)
        return {str(k): _coeff(pres.field, v) for k, v in sorted(w.items())}
    return str(w)


def _betti_json(betti) -> dict:
    return {f"{i},{n}": v for (i, n), v in sorted(betti.nonzero().items())}


def _verdict_json(pres, v) -> dict:
    out = {
        "status": v.status,
        "method": v.method,
        "bounds": None if v.exact else {"n_max": v.n_max, "i_max": v.i_max},
        "certificate": "exact" if v.exact else "truncated",
        "text": str(v),
    }
    if not v.multi_koszul:
        out.update(i=v.i, n=v.n, tor_dim=v.tor_dim, j_dim=v.j_dim,
                   witness=_witness(pres, v.witness))
        if "clause" in v.details:
            out["clause"] = v.details["clause"]
    return out


def _clause_json(pres, r) -> dict:
    if not isinstance(r, dict):
        return {"value": str(r)}
    out = {"ok": bool(r.get("ok"))}
    for key in ("n", "i", "clause"):
        if r.get(key) is not None:
            out[key] = r[key]
    if r.get("witness") is not None:
        out["witness"] = _witness(pres, r["witness"])
    return out


# ---------------------------------------------------------------------------
# analysis

def analyze(pres, n_max: int = 10, i_max: int = 6, checks=None, cap=DEFAULT_AMBIENT_CAP,
            bimodule_bounds=None, bar_bounds=None) -> dict:
    """Build the report dictionary for one presentation."""
    checks = list(DEFAULT_CHECKS if checks is None else checks)
    report = {
        "presentation": pres.to_text(),
        "name": pres.name,
        "field": pres.field.name,
        "bounds": {"n_max": n_max, "i_max": i_max, "ambient_cap": cap},
        "degrees": pres.degrees,
        "warnings": list(pres.warnings),
        "verdicts": {},
    }
    timings = {}
    alg = GradedAlgebra(pres, n_max, cap)

    def timed(name, fn):
        t0 = time.perf_counter()
        r = fn()
        timings[name] = time.perf_counter() - t0
        return r

    if "hilbert" in checks:
        report["hilbert"] = alg.dims
    fam = JFamily(pres, cap, n_max)
    report["J_dims"] = {str(i): {str(n): d for n, d in sorted(fam.graded_dims(i).items())}
                        for i in range(i_max + 1)}
    if "betti" in checks or "koszul" in checks:
        v, res = timed("tor_vs_J", lambda: tor_vs_j(pres, n_max, i_max, alg, cap=cap))
        report["betti"] = _betti_json(res.betti)
        report["betti_table"] = res.betti.render()
        report["global_dimension"] = str(v.details["gldim"])
        if "koszul" in checks:
            report["verdicts"]["tor_vs_J"] = _verdict_json(pres, v)
    if "koszul" in checks:
        def left():
            cx = build_complex(pres, "left", n_max, i_max, alg, cap)
            bad = square_zero(cx)
            if bad:
                raise InvariantViolation(f"delta^2 != 0 on the left complex at (i, n) = {bad}")
            return verdict_via_complex(pres, n_max, i_max, "left", alg, cap)
        report["verdicts"]["complex_exactness"] = _verdict_json(pres, timed("complex", left))
    if "decomposition" in checks:
        v = timed("decomposition", lambda: theorem_decomposition_check(pres, n_max, i_max, cap))
        report["verdicts"]["theorem_decomposition"] = _verdict_json(pres, v)
    if "lattice" in checks:
        if len(pres.degrees) == 2:
            v = timed("lattice", lambda: theorem5_verdict(pres, n_max, i_max, cap))
            report["verdicts"]["lattice"] = _verdict_json(pres, v)
            report["verdicts"]["lattice"]["odd_inclusion_reading"] = v.details["odd_inclusion_reading"]
            report["lattice_clauses"] = {k: _clause_json(pres, r)
                                         for k, r in v.details["clauses"].items()}
        else:
            report["warnings"].append("lattice criteria skipped: relations are not in exactly two degrees")
    if "monomial" in checks:
        try:
            v = timed("monomial", lambda: monomial_verdict(pres, cap))
            report["verdicts"]["monomial_exact"] = _verdict_json(pres, v)
        except NotApplicable as e:
            report["warnings"].append(f"monomial certificate skipped: {e}")
    if "bimodule" in checks:
        bn, bi = bimodule_bounds or (min(n_max, 7), min(i_max, 5))

        def bim():
            cx = build_complex(pres, "bimodule", bn, bi, None, cap)
            bad = square_zero(cx)
            if bad:
                raise InvariantViolation(f"delta^2 != 0 on the bimodule complex at (i, n) = {bad}")
            return verdict_via_complex(pres, bn, bi, "bimodule", None, cap)
        report["verdicts"]["bimodule_exactness"] = _verdict_json(pres, timed("bimodule", bim))
    if "hochschild" in checks:
        hn, hi = bimodule_bounds or (min(n_max, 6), min(i_max, 4))
        h = timed("hochschild", lambda: hochschild(pres, hn, hi, cap=cap))
        report["hochschild"] = {
            "bounds": {"n_max": hn, "i_max": hi},
            "valid": h.valid,
            "homology": {f"{i},{n}": v for (i, n), v in sorted(h.homology.items()) if v},
            "cohomology": {f"{i},{d}": v for (i, d), v in sorted(h.cohomology.items()) if v},
        }
    if "k2" in checks:
        kn, ki = bar_bounds or (min(n_max, BAR_N_MAX), min(i_max, BAR_I_MAX))
        r = timed("k2", lambda: k2_generation_check(pres, kn, ki, cap=cap))
        report["k2_generation"] = {
            "bounds": {"n_max": kn, "i_max": ki},
            "generated": r.generated,
            "failure": list(r.failure) if r.failure else None,
            "checked": {f"{i},{n}": list(v) for (i, n), v in sorted(r.checked.items())},
        }
    report["_timings"] = timings
    return report


def render(report: dict) -> str:
    lines = [f"presentation ({report['field']}): {report['presentation'].strip().replace(chr(10), '; ')}"]
    b = report["bounds"]
    lines.append(f"bounds: n_max={b['n_max']}, i_max={b['i_max']}")
    for w in report["warnings"]:
        lines.append(f"warning: {w}")
    if "hilbert" in report:
        lines.append("hilbert: " + " ".join(map(str, report["hilbert"])))
    if "betti_table" in report:
        lines.append("betti:")
        lines.extend("  " + ln for ln in report["betti_table"].splitlines())
        lines.append(f"global dimension: {report['global_dimension']}")
    for name, v in report["verdicts"].items():
        line = f"{name}: {v['text']}"
        if v.get("witness"):
            line += f"  witness {v['witness']}"
        lines.append(line)
    if "lattice_clauses" in report:
        for k, c in report["lattice_clauses"].items():
            lines.append(f"  {k}: {'ok' if c['ok'] else 'fails'}"
                         + (f" at n={c['n']}" if not c["ok"] and "n" in c else ""))
    if "hochschild" in report:
        h = report["hochschild"]
        lines.append(f"hochschild (valid={h['valid']}): HH_* {h['homology']}")
        lines.append(f"  HH^* {h['cohomology']}")
    if "k2_generation" in report:
        k = report["k2_generation"]
        lines.append(f"K2 generation: {k['generated']} (n<={k['bounds']['n_max']}, i<={k['bounds']['i_max']})")
    t = report.get("_timings", {})
    if t:
        lines.append("timings: " + ", ".join(f"{k} {v:.2f}s" for k, v in t.items()))
    return "\n".join(lines)


def _public(report: dict) -> dict:
    return {k: v for k, v in report.items() if not k.startswith("_")}


def resolve_input(arg: str):
    """Path to a file, or the name of a bundled algebra (by basename)."""
    if os.path.exists(arg):
        with open(arg) as fh:
            return fh.read(), os.path.splitext(os.path.basename(arg))[0]
    base = os.path.splitext(os.path.basename(arg))[0]
    base = ALIASES.get(base, base)
    if base in corpus_mod.bundled_names():
        return corpus_mod.bundled_text(base), base
    raise FileNotFoundError(arg)


# ---------------------------------------------------------------------------
# corpus

def run_corpus(seed: int, count: int, n_max: int = 10, i_max: int = 6, generic: bool = False,
               cap=DEFAULT_AMBIENT_CAP, escalate_to: int = 14, field=None) -> dict:
    """Compare the four verdict routes on seeded random two-degree presentations."""
    rng = random.Random(seed)
    kw = {"field": field} if field is not None else {}
    rows = []
    disagreements = []
    for k in range(count):
        if generic:
            p = corpus_mod.random_generic(rng, **kw)
        else:
            p = corpus_mod.random_monomial(rng, **kw)
        res = {
            "tor_vs_J": tor_vs_j(p, n_max, i_max, early_stop=True, cap=cap)[0],
            "lattice": theorem5_verdict(p, n_max, i_max, cap),
            "theorem_decomposition": theorem_decomposition_check(p, n_max, i_max, cap),
        }
        if p.is_monomial():
            res["monomial_exact"] = monomial_verdict(p, cap)
            if not res["monomial_exact"].multi_koszul and res["tor_vs_J"].multi_koszul:
                # an exact NO needs a truncated witness; look further out
                res["tor_vs_J"] = tor_vs_j(p, escalate_to, i_max, early_stop=True, cap=cap)[0]
        vals = {m: v.multi_koszul for m, v in res.items()}
        row = {"index": k, "presentation": p.one_line(),
               "verdicts": {m: str(v) for m, v in res.items()}}
        rows.append(row)
        if len(set(vals.values())) > 1:
            row["reproduce"] = (f"multikoszul analyze --text '{p.one_line()}' "
                                f"--nmax {n_max} --imax {i_max}")
            disagreements.append(row)
    yes = sum(1 for r in rows if "NotMultiKoszul" not in r["verdicts"]["tor_vs_J"])
    return {"seed": seed, "count": count, "generic": generic,
            "field": (field.name if field is not None else "Q"),
            "bounds": {"n_max": n_max, "i_max": i_max},
            "multi_koszul_up_to": yes, "not_multi_koszul": len(rows) - yes,
            "disagreements": disagreements, "instances": rows}


# ---------------------------------------------------------------------------
# entry point

def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="multikoszul",
                                 description="Exact multi-Koszul analysis of graded algebras.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--nmax", type=int, default=10)
        p.add_argument("--imax", type=int, default=6)
        p.add_argument("--field", default=None, help="Q or GF:p (overrides the file)")
        p.add_argument("--json", dest="json_out", default=None, metavar="PATH",
                       help="write the machine-readable report ('-' for stdout)")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--ambient-cap", type=int, default=DEFAULT_AMBIENT_CAP)

    a = sub.add_parser("analyze", help="analyze one presentation")
    a.add_argument("input", help="presentation file, bundled name, or text with --text")
    a.add_argument("--text", action="store_true", help="treat INPUT as presentation text")
    a.add_argument("--checks", default=",".join(DEFAULT_CHECKS),
                   help="comma list from " + ",".join(ALL_CHECKS) + ", or 'all'")
    common(a)
    c = sub.add_parser("corpus", help="compare verdict routes on random presentations")
    c.add_argument("--count", type=int, default=100)
    c.add_argument("--generic", action="store_true", help="random coefficients instead of monomials")
    common(c)
    return ap


def _emit_json(obj, path):
    text = json.dumps(obj, indent=2, sort_keys=True)
    if path == "-":
        print(text)
    else:
        with open(path, "w") as fh:
            fh.write(text + "\n")


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        field = Field.parse(args.field) if args.field else None
    except LinalgError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    cap = args.ambient_cap
    try:
        if args.command == "analyze":
            if args.text:
                text, name, src = args.input, "inline", "<text>"
            else:
                text, name = resolve_input(args.input)
                src = args.input
            try:
                pres = parse(text, field_override=field, name=name, cap=cap)
            except ParseError as e:
                print(f"{src}:{e.line}:{e.column}: parse error: {e.message}", file=sys.stderr)
                return EXIT_PARSE
            checks = ALL_CHECKS if args.checks == "all" else [c.strip() for c in args.checks.split(",") if c.strip()]
            unknown = [c for c in checks if c not in ALL_CHECKS]
            if unknown:
                print(f"error: unknown check(s) {', '.join(unknown)}", file=sys.stderr)
                return EXIT_PARSE
            report = analyze(pres, args.nmax, args.imax, checks, cap)
            if args.json_out != "-":
                print(render(report))
            if args.json_out:
                _emit_json(_public(report), args.json_out)
        else:
            summary = run_corpus(args.seed, args.count, args.nmax, args.imax, args.generic, cap,
                                 field=field)
            if args.json_out != "-":
                print(f"seed {summary['seed']}: {summary['count']} presentations, "
                      f"{summary['multi_koszul_up_to']} multi-Koszul up to bounds, "
                      f"{len(summary['disagreements'])} disagreements")
                for d in summary["disagreements"]:
                    print(f"  #{d['index']} {d['presentation']}: {d['verdicts']}")
                    print(f"    reproduce: {d['reproduce']}")
            if args.json_out:
                _emit_json(summary, args.json_out)
    except ParseError as e:
        print(f"parse error at {e.line}:{e.column}: {e.message}", file=sys.stderr)
        return EXIT_PARSE
    except FileNotFoundError as e:
        print(f"error: no such file or bundled algebra: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (TruncationTooDeep, MemoryError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    except (InvariantViolation, AssertionError) as e:
        print(f"internal invariant violated: {e}", file=sys.stderr)
        return EXIT_INVARIANT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
