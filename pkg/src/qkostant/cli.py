"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 computation limit exceeded,
3 internal identity violation.  Errors go to stderr as a single line
``qkostant-error:<kind>: <message>``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Sequence

from .characters import character_to_json, freudenthal, weyl_dimension
from .hilbert import HilbertReport, IdentityViolation, hilbert_series
from .lusztig import lusztig_poly
from .parabolic import levi_subset, nilradical_roots, parse_levi
from .qcomb import partition_q, save_caches
from .rootsys import InvalidInput, OverflowFailure, RootSystem, check_weight, root_system
from .verify import DEFAULT_TYPES, VerifyConfig, run_all
from .weyl import DEFAULT_WEYL_CAP, WeylCapExceeded

CONFIG_ENV = "QKOSTANT_CONFIG"
CONFIG_KEYS = {"weyl_cap", "max_degree"}


def parse_weight(rs: RootSystem, text: str) -> tuple[int, ...]:
    try:
        coords = [int(t) for t in text.split(",")] if text.strip() else []
    except ValueError:
        raise InvalidInput(f"cannot parse weight {text!r}") from None
    return check_weight(rs, coords)


def load_config(path: str | None) -> dict[str, int]:
    """Read ``key = value`` lines; ``#`` starts a comment."""
    path = path or os.environ.get(CONFIG_ENV)
    if not path:
        return {}
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise InvalidInput(f"cannot read config {path}: {exc}") from None
    out = {}
    for no, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = (s.strip() for s in line.partition("="))
        if not sep or key not in CONFIG_KEYS:
            raise InvalidInput(f"{path}:{no}: expected one of {sorted(CONFIG_KEYS)} = <int>")
        try:
            out[key] = int(value)
        except ValueError:
            raise InvalidInput(f"{path}:{no}: {value!r} is not an integer") from None
    return out


def report_to_json(rep: HilbertReport) -> dict:
    return {
        "type": rep.rs.name,
        "levi": list(rep.levi),
        "mu": list(rep.mu),
        "max_degree": rep.series.max_degree,
        "vanishing": rep.vanishing.value,
        "covered": rep.covered,
        "terms": [{"lambda": list(lam), "poly": list(p.coeffs)}
                  for lam, p in rep.series.sorted_terms()],
        "dims": list(rep.dims),
    }


def dumps(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def report_to_text(rep: HilbertReport) -> str:
    head = (f"type {rep.rs.name}  levi {list(rep.levi)}  mu {list(rep.mu)}  "
            f"max_degree {rep.series.max_degree}")
    status = ("Hilbert series of nearly holomorphic sections" if rep.covered else
              "graded Euler character only; Hilbert-series interpretation is conjectural")
    lines = [head, f"vanishing: {rep.vanishing.value} ({status})", "",
             f"{'lambda':<20} {'dim V*':>8}  c_lambda(q)"]
    for lam, p in rep.series.sorted_terms():
        lines.append(f"{str(list(lam)):<20} {weyl_dimension(rep.rs, lam):>8}  {p}")
    lines += ["", "dims: " + " ".join(str(d) for d in rep.dims)]
    return "\n".join(lines)


def report_to_latex(rep: HilbertReport) -> str:
    lines = [r"\begin{tabular}{lr}", r"$\lambda$ & $m_\lambda^\mu(P;q)$ \\", r"\hline"]
    for lam, p in rep.series.sorted_terms():
        lines.append(f"$({','.join(map(str, lam))})$ & ${p.format(latex=True)}$ \\\\")
    lines.append(r"\end{tabular}")
    return "\n".join(lines)


def cmd_roots(args, cfg) -> int:
    rs = root_system(args.type)
    if args.format == "json":
        print(dumps({
            "type": rs.name,
            "cartan": [list(r) for r in rs.cartan],
            "positive_roots": [list(r) for r in rs.positive_roots],
            "highest_root": list(rs.highest_root),
            "weyl_order": rs.weyl_order,
        }))
        return 0
    print(f"{rs.name}: {len(rs.positive_roots)} positive roots, |W| = {rs.weyl_order}")
    print("Cartan matrix C[i][j] = <alpha_j, alpha_i^vee>:")
    for row in rs.cartan:
        print("  " + " ".join(f"{v:>3}" for v in row))
    print(f"{'height':>6}  {'simple-root coords':<24} fundamental coords")
    for r in rs.positive_roots:
        print(f"{sum(r):>6}  {str(list(r)):<24} {list(rs.root_to_weight(r))}")
    print(f"highest root: {list(rs.highest_root)}")
    return 0


def cmd_partition(args, cfg) -> int:
    rs = root_system(args.type)
    levi = levi_subset(rs, parse_levi(args.levi))
    nu = parse_weight(rs, args.target)
    poly = partition_q(rs, nilradical_roots(rs, levi), nu, args.max_degree)
    if args.format == "json":
        print(dumps({**poly.to_json(), "truncated": poly.truncated}))
    else:
        print(str(poly) + (f"  (truncated above q^{args.max_degree})" if poly.truncated else ""))
    return 0


def cmd_lusztig(args, cfg) -> int:
    rs = root_system(args.type)
    levi = levi_subset(rs, parse_levi(args.levi))
    poly = lusztig_poly(rs, levi, parse_weight(rs, args.lam), parse_weight(rs, args.mu),
                        cfg["weyl_cap"])
    print(dumps(poly.to_json()) if args.format == "json" else str(poly))
    return 0


def cmd_hilbert(args, cfg) -> int:
    rs = root_system(args.type)
    levi = levi_subset(rs, parse_levi(args.levi))
    max_degree = args.max_degree if args.max_degree is not None else cfg.get("max_degree")
    if max_degree is None:
        raise InvalidInput("--max-degree is required (or set max_degree in the config file)")
    rep = hilbert_series(rs, levi, parse_weight(rs, args.mu), max_degree,
                         check=args.check, cap=cfg["weyl_cap"])
    if args.format == "json":
        print(dumps(report_to_json(rep)))
    elif args.format == "latex":
        print(report_to_latex(rep))
    else:
        print(report_to_text(rep))
    return 0


def cmd_character(args, cfg) -> int:
    rs = root_system(args.type)
    lam = parse_weight(rs, args.lam)
    ch = freudenthal(rs, lam)
    if args.format == "json":
        print(dumps(character_to_json(ch)))
        return 0
    print(f"V_{list(lam)} of {rs.name}: dim {sum(ch.values())}, {len(ch)} weights")
    for w, m in sorted(ch.items(), reverse=True):
        print(f"  {str(list(w)):<20} {m}")
    return 0


def cmd_verify(args, cfg) -> int:
    types = tuple(t.strip() for t in args.types.split(",") if t.strip())
    for t in types:
        root_system(t)
    results = run_all(VerifyConfig(types=types, height=args.height, max_degree=args.max_degree))
    for r in results:
        print(r.line())
    ok = all(r.passed for r in results)
    print(f"{sum(r.passed for r in results)}/{len(results)} criteria passed")
    return 0 if ok else 3


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="qkostant",
        description="Parabolic Lusztig q-analogs, graded Euler characters and Hilbert series "
                    "on flag manifolds. Weights are comma-separated fundamental-weight "
                    "coordinates (use --mu=-1,2 for a leading minus sign); --levi takes "
                    "comma-separated Bourbaki indices, empty for the Borel.")
    p.add_argument("--config", help=f"key=value file (weyl_cap, max_degree); default ${CONFIG_ENV}")
    p.add_argument("--weyl-cap", type=int, help=f"largest |W| to enumerate (default {DEFAULT_WEYL_CAP})")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("roots", help="print the root datum")
    s.add_argument("--type", required=True)
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_roots)

    s = sub.add_parser("partition", help="q-analog partition function over the nilradical roots")
    s.add_argument("--type", required=True)
    s.add_argument("--levi", default="")
    s.add_argument("--target", required=True)
    s.add_argument("--max-degree", type=int)
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_partition)

    s = sub.add_parser("lusztig", help="parabolic Lusztig polynomial m_lambda^mu(P;q)")
    s.add_argument("--type", required=True)
    s.add_argument("--levi", default="")
    s.add_argument("--lambda", dest="lam", required=True)
    s.add_argument("--mu", required=True)
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_lusztig)

    s = sub.add_parser("hilbert", help="graded Euler character / Hilbert series of E_mu^*")
    s.add_argument("--type", required=True)
    s.add_argument("--levi", default="")
    s.add_argument("--mu", required=True)
    s.add_argument("--max-degree", type=int)
    s.add_argument("--format", choices=("text", "json", "latex"), default="text")
    s.add_argument("--check", choices=("always", "sampled", "never"), default="always",
                   help="compare against the Borel-Weil-Bott evaluation")
    s.set_defaults(func=cmd_hilbert)

    s = sub.add_parser("character", help="Freudenthal weight multiplicities of V_lambda")
    s.add_argument("--type", required=True)
    s.add_argument("--lambda", dest="lam", required=True)
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_character)

    s = sub.add_parser("verify", help="run the acceptance suite")
    s.add_argument("--types", default=",".join(DEFAULT_TYPES))
    s.add_argument("--height", type=int, default=6)
    s.add_argument("--max-degree", type=int, default=3)
    s.set_defaults(func=cmd_verify)
    return p


def _fail(kind: str, msg: str, code: int) -> int:
    print(f"qkostant-error:{kind}: {msg}", file=sys.stderr)
    return code


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed usage; map its exit 2 onto "invalid input"
        return 0 if exc.code == 0 else 1
    try:
        cfg = {"weyl_cap": DEFAULT_WEYL_CAP, **load_config(args.config)}
        if args.weyl_cap is not None:
            cfg["weyl_cap"] = args.weyl_cap
        code = args.func(args, cfg)
    except (InvalidInput, ValueError) as exc:
        return _fail("invalid-input", str(exc), 1)
    except (WeylCapExceeded, OverflowFailure, RecursionError) as exc:
        return _fail("limit-exceeded", str(exc) or type(exc).__name__, 2)
    except IdentityViolation as exc:
        return _fail("identity-violation", str(exc), 3)
    save_caches()
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
