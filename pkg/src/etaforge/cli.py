"""Command-line front end: ``etaforge <command> [options]``."""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Sequence

from . import numeric, search, verify
from .kernel10 import ParamExponents, decide_rationality
from .qseries import eta_quotient_series


@dataclass
class RunConfig:
    terms: int | None = None
    emax: int = 8
    b: int = 1
    range: int = 10
    prec: int | None = None
    out: str | None = None
    suite: str = "all"
    jobs: int = 1

    _positive = ("terms", "emax", "b", "range", "prec", "jobs")

    def validate(self) -> None:
        for name in self._positive:
            v = getattr(self, name)
            if v is not None and v < (0 if name == "emax" else 1):
                raise ValueError(f"{name} must be positive")


def load_config(path: str) -> dict:
    """``key = value`` lines; ``#`` starts a comment; unknown keys are rejected."""
    known = {f.name: f.type for f in fields(RunConfig)}
    out: dict = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in known:
            raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
        out[key] = value if key in ("out", "suite") else int(value)
    return out


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def _exponent_map(text: str) -> dict[int, int]:
    """``8,-7,0,3`` for level 10, or ``d:e`` pairs such as ``2:20,1:-16``."""
    if ":" in text:
        out = {}
        for part in text.split(","):
            d, e = part.split(":")
            out[int(d)] = out.get(int(d), 0) + int(e)
        return out
    vals = _ints(text)
    if len(vals) != 4:
        raise ValueError("--e needs four exponents (e1,e2,e5,e10) or d:e pairs")
    return dict(zip((1, 2, 5, 10), vals))


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key = value file; flags override it")
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--jobs", type=int, help="worker processes")

    p = argparse.ArgumentParser(prog="etaforge", description="Level-10 eta quotients and their integrals.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("expand", parents=[common], help="q-expansion of an eta quotient")
    s.add_argument("--e", required=True)
    s.add_argument("--terms", type=int)
    s.add_argument("--json", action="store_true")

    s = sub.add_parser("search", parents=[common], help="q-side search over admissible exponents")
    s.add_argument("--emax", type=int)
    s.add_argument("--b", type=int)
    s.add_argument("--terms", type=int)
    s.add_argument("--deep", action="store_true", help=f"use {search.DEEP_TERMS} terms")

    s = sub.add_parser("scan-a", parents=[common], help="exact scan over (a1, a2, a3)")
    s.add_argument("--range", type=int, dest="range")

    s = sub.add_parser("integrate-k", parents=[common], help="rationality certificate for one a-vector")
    s.add_argument("--a", required=True, help="a1,a2,a3")

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("--suite", choices=["all", *verify.SUITES])

    s = sub.add_parser("eval", parents=[common], help="numeric special values")
    s.add_argument("--what", required=True,
                   help="k | u | appendix | row:LABEL | fine3 | " + " | ".join(numeric.INTEGRALS))
    s.add_argument("--prec", type=int)
    return p


def _config(args) -> RunConfig:
    values = load_config(args.config) if getattr(args, "config", None) else {}
    for f in fields(RunConfig):
        v = getattr(args, f.name, None)
        if v is not None:
            values[f.name] = v
    cfg = RunConfig(**values)
    cfg.validate()
    return cfg


def _cmd_expand(args, cfg: RunConfig):
    N = cfg.terms or 50
    s = eta_quotient_series(_exponent_map(args.e), N)
    if args.json:
        return json.dumps(s.to_json()), True
    lines = [f"offset {s.offset}, {s.truncation} coefficients"]
    lines += [f"q^{e}: {c}" for e, c in s.terms()]
    return "\n".join(lines), True


def _cmd_search(args, cfg: RunConfig):
    N = search.DEEP_TERMS if args.deep else (cfg.terms or search.DEFAULT_TERMS)
    hits = search.search_level10(cfg.emax, cfg.b, N, jobs=cfg.jobs)
    return "\n".join(h.to_json_line() for h in hits), True


def _cmd_scan(args, cfg: RunConfig):
    res = search.scan_a(cfg.range, jobs=cfg.jobs)
    return json.dumps(res.to_json()), res.matches


def _cmd_integrate(args, cfg: RunConfig):
    vals = _ints(args.a)
    if len(vals) != 3:
        raise ValueError("--a needs three integers a1,a2,a3")
    cert = decide_rationality(ParamExponents.from_triple(*vals))
    return json.dumps(cert.to_json(), indent=2), True


def _cmd_verify(args, cfg: RunConfig):
    rep = verify.run_suite(cfg.suite)
    return json.dumps(rep.to_json(), indent=2), rep.passed


def _cmd_eval(args, cfg: RunConfig):
    prec = cfg.prec or numeric.default_precision()
    what = args.what
    if what in ("k", "u", "appendix"):
        checks = numeric.appendix_k_certificate(prec)
        pick = {"k": "(iv)", "u": "(ii)", "appendix": ""}[what]
        checks = [c for c in checks if c.check.startswith(pick)]
    elif what.startswith("row:"):
        v = numeric.ramanujan_fine_value(what[4:], prec)
        checks = [numeric.NumericCheck(f"row {v.label} integral", v.series_value, v.closed_value,
                                       prec, 1e-20),
                  numeric.row_quadrature(v.label)]
    elif what == "fine3":
        checks = [numeric.fine3_quadrature()]
    elif what in numeric.INTEGRALS:
        checks = [numeric.integral_value(what, prec), numeric.integral_quadrature(what)]
    else:
        raise ValueError(f"unknown --what {what!r}")
    body = json.dumps([c.to_json() for c in checks], indent=2)
    return body, all(c.passed for c in checks)


_COMMANDS = {
    "expand": _cmd_expand,
    "search": _cmd_search,
    "scan-a": _cmd_scan,
    "integrate-k": _cmd_integrate,
    "verify": _cmd_verify,
    "eval": _cmd_eval,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config(args)
        text, ok = _COMMANDS[args.command](args, cfg)
    except (ValueError, KeyError) as exc:
        print(f"etaforge: error: {exc}", file=sys.stderr)
        return 2
    if cfg.out:
        Path(cfg.out).write_text(text + "\n")
    else:
        print(text)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
