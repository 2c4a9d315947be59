"""Command-line front end: verify single cases, sweep grids, emit reports.

Commands:

* verify    -- one (k, a) case, all applicable routes
* sweep     -- Cartesian grid of cases (default grid if none given)
* constants -- the Catalan and log-Gamma special cases
* zeta      -- print hurwitz_zeta(s, q)
* selftest  -- run the module invariant suites

Reports are JSON (default) or CSV on stdout; diagnostics go to stderr.
Exit codes: 0 all verdicts pass, 1 any fail, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import os
import sys
from dataclasses import dataclass
from typing import Any, Sequence

from .complexfn import BranchedConstant, DomainError, gamma
from .hurwitz import ZetaConfig, hurwitz_zeta, zeta_neg_int_oracle
from .identities import (
    DEFAULT_A_GRID,
    DEFAULT_K_GRID,
    IdentityCase,
    VerificationReport,
    catalan_case,
    catalan_reference,
    contour_cauchy_check,
    lhs_integral,
    loggamma_case,
    residual_ok,
    rhs_series,
    rhs_zeta,
    sweep,
    verify,
)
from .quad import QuadConfig, integrate_finite, integrate_semi_infinite

__all__ = ["CliInvocation", "CliParseError", "parse_complex", "parse_branched",
           "render_complex", "dumps_fixed", "build_parser", "run", "main", "entry"]

TWO_PI = 2.0 * math.pi

MAX_EVALS_ENV = "ZETAQUAD_MAX_EVALS"


class CliParseError(ValueError):
    """Malformed command-line literal; the message carries the position."""


@dataclass
class CliInvocation:
    command: str
    params: dict[str, Any]


# ---------------------------------------------------------------------------
# complex / polar literal grammar

def _scan_number(text: str, i: int, what: str) -> tuple[float, int]:
    start = i
    n = len(text)
    if i < n and text[i] in "+-":
        i += 1
    digits = i
    while i < n and text[i].isdigit():
        i += 1
    if i < n and text[i] == ".":
        i += 1
        while i < n and text[i].isdigit():
            i += 1
    if i == digits or (i == digits + 1 and text[digits] == "."):
        raise CliParseError(f"expected {what} at position {start}: {text!r}")
    if i < n and text[i] in "eE":
        j = i + 1
        if j < n and text[j] in "+-":
            j += 1
        k = j
        while j < n and text[j].isdigit():
            j += 1
        if j == k:
            raise CliParseError(f"malformed exponent at position {i}: {text!r}")
        i = j
    return float(text[start:i]), i


def parse_complex(text: str) -> complex:
    """Rectangular literal: optional sign, decimal real part, optional signed
    imaginary part with trailing 'i'."""
    s = text.strip()
    if not s:
        raise CliParseError(f"empty complex literal: {text!r}")
    re_part, i = _scan_number(s, 0, "real part")
    if i == len(s):
        return complex(re_part, 0.0)
    if s[i] not in "+-":
        raise CliParseError(f"unexpected character at position {i}: {text!r}")
    im_part, i = _scan_number(s, i, "imaginary part")
    if i >= len(s) or s[i] != "i":
        raise CliParseError(f"expected trailing 'i' at position {i}: {text!r}")
    if i + 1 != len(s):
        raise CliParseError(f"trailing input at position {i + 1}: {text!r}")
    return complex(re_part, im_part)


def parse_branched(text: str) -> BranchedConstant:
    """Polar 'r@theta' (theta already in [0, 2*pi), not normalised) or a
    rectangular literal converted to polar."""
    s = text.strip()
    if "@" in s:
        r_text, _, th_text = s.partition("@")
        r, i = _scan_number(r_text, 0, "modulus")
        if i != len(r_text) or r <= 0 or r_text[0] in "+-":
            raise CliParseError(f"modulus must be a positive decimal: {text!r}")
        th, j = _scan_number(th_text, 0, "argument")
        if j != len(th_text):
            raise CliParseError(f"trailing input in argument: {text!r}")
        if not 0.0 <= th < TWO_PI:
            raise CliParseError(f"argument must lie in [0, 2*pi): {text!r}")
        return BranchedConstant(r, th)
    z = parse_complex(s)
    if z == 0:
        raise CliParseError(f"constant a must be nonzero: {text!r}")
    theta = math.atan2(z.imag, z.real)
    if theta < 0.0:
        theta += TWO_PI
    return BranchedConstant(abs(z), theta)


# ---------------------------------------------------------------------------
# deterministic rendering (17 significant digits)

def _fmt(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError("non-finite value in report")
    return format(x, ".17g")


def render_complex(z: complex) -> str:
    if z.imag >= 0:
        return f"{_fmt(z.real)}+{_fmt(z.imag)}i"
    return f"{_fmt(z.real)}-{_fmt(-z.imag)}i"


def dumps_fixed(obj: Any, indent: int = 0) -> str:
    """JSON text with fixed key order (insertion) and fixed float formatting."""
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, str):
        return '"' + obj.replace("\\", "\\\\").replace('"', '\\"') + '"'
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f'{inner}"{k}": {dumps_fixed(v, indent + 1)}' for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [inner + dumps_fixed(v, indent + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    raise TypeError(f"unserialisable value: {obj!r}")


def _complex_dict(z: complex) -> dict[str, float]:
    return {"re": float(z.real), "im": float(z.imag)}


def report_to_dict(rep: VerificationReport) -> dict[str, Any]:
    d: dict[str, Any] = {
        "case": {
            "k": _complex_dict(rep.case.k),
            "a": {"r": rep.case.a.r, "theta": rep.case.a.theta},
        },
        "routes": {},
        "residuals": {k: float(v) for k, v in rep.residuals.items()},
        "verdict": rep.verdict,
        "notes": list(rep.notes),
    }
    if rep.lhs is not None:
        d["routes"]["lhs"] = {
            "value": _complex_dict(rep.lhs.value),
            "err_estimate": rep.lhs.err_estimate,
            "n_evals": rep.lhs.n_evals,
            "converged": rep.lhs.converged,
        }
    if rep.zeta_value is not None:
        d["routes"]["zeta"] = {"value": _complex_dict(rep.zeta_value)}
    if rep.series_value is not None:
        d["routes"]["series"] = {"value": _complex_dict(rep.series_value)}
    if rep.contour_value is not None:
        d["routes"]["contour"] = {
            "value": _complex_dict(rep.contour_value.value),
            "err_estimate": rep.contour_value.err_estimate,
            "n_evals": rep.contour_value.n_evals,
            "converged": rep.contour_value.converged,
        }
    return d


def reports_to_csv(reps: Sequence[VerificationReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["k_re", "k_im", "a_r", "a_theta", "route",
                "value_re", "value_im", "err_est", "verdict"])
    for rep in reps:
        base = [_fmt(rep.case.k.real), _fmt(rep.case.k.imag),
                _fmt(rep.case.a.r), _fmt(rep.case.a.theta)]
        rows = []
        if rep.lhs is not None:
            rows.append(("lhs", rep.lhs.value, rep.lhs.err_estimate))
        if rep.zeta_value is not None:
            rows.append(("zeta", rep.zeta_value, 0.0))
        if rep.series_value is not None:
            rows.append(("series", rep.series_value, 0.0))
        if rep.contour_value is not None:
            rows.append(("contour", rep.contour_value.value,
                         rep.contour_value.err_estimate))
        for route, value, err in rows:
            w.writerow(base + [route, _fmt(value.real), _fmt(value.imag),
                               _fmt(err), rep.verdict])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# argument parsing

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zetaquad",
                                description="Multi-route verification of "
                                            "cos(2y) log-power integrals")
    sub = p.add_subparsers(dest="command", required=True)

    def add_common(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--atol", type=float, default=1e-10,
                        help="quadrature absolute tolerance")
        sp.add_argument("--rtol", type=float, default=1e-10,
                        help="quadrature relative tolerance")
        sp.add_argument("--max-evals", type=int, default=10 ** 6)
        sp.add_argument("--verdict-atol", type=float, default=1e-6,
                        help="pass/fail residual rule, absolute part")
        sp.add_argument("--verdict-rtol", type=float, default=1e-6,
                        help="pass/fail residual rule, relative part")
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        sp.add_argument("--output", default=None, help="write report here instead of stdout")

    sp = sub.add_parser("verify", help="verify one (k, a) case")
    sp.add_argument("--k", required=True, help="complex literal, e.g. 0.5+0.3i")
    sp.add_argument("--a", required=True, help="'x+yi' or polar 'r@theta'")
    add_common(sp)

    sp = sub.add_parser("sweep", help="verify a grid of cases")
    sp.add_argument("--k-list", default=None, help="comma-separated complex literals")
    sp.add_argument("--a-list", default=None, help="comma-separated constants")
    add_common(sp)

    sp = sub.add_parser("constants", help="Catalan and log-Gamma special cases")
    add_common(sp)

    sp = sub.add_parser("zeta", help="print hurwitz_zeta(s, q)")
    sp.add_argument("--s", required=True)
    sp.add_argument("--q", required=True)

    sub.add_parser("selftest", help="run the module invariant suites")
    return p


def parse_argv(argv: Sequence[str]) -> CliInvocation:
    ns = build_parser().parse_args(argv)
    return CliInvocation(ns.command, vars(ns))


def _quad_cfg(params: dict[str, Any]) -> QuadConfig:
    max_evals = params.get("max_evals", 10 ** 6)
    env = os.environ.get(MAX_EVALS_ENV)
    if env is not None:
        max_evals = int(env)
    return QuadConfig(atol=params.get("atol", 1e-10),
                      rtol=params.get("rtol", 1e-10),
                      max_evals=max_evals)


def _emit(text: str, params: dict[str, Any]) -> None:
    path = params.get("output")
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _emit_reports(reps: list[VerificationReport], notes: list[str],
                  params: dict[str, Any]) -> int:
    if params.get("format", "json") == "csv":
        text = reports_to_csv(reps)
    else:
        doc: dict[str, Any] = {"reports": [report_to_dict(r) for r in reps]}
        if notes:
            doc["notes"] = notes
        text = dumps_fixed(doc)
    _emit(text, params)
    for n in notes:
        print(f"note: {n}", file=sys.stderr)
    return 0 if reps and all(r.verdict == "pass" for r in reps) else 1


# ---------------------------------------------------------------------------
# selftest battery

def _selftest_checks() -> list[tuple[str, bool]]:
    import cmath
    import random

    checks: list[tuple[str, bool]] = []
    rng = random.Random(1234)

    ok = True
    for _ in range(100):
        z = complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
        if min(abs(z - n) for n in range(-5, 1)) < 0.1 or abs(z.imag) < 0.05:
            continue
        refl = gamma(z) * gamma(1 - z) * cmath.sin(math.pi * z) / math.pi
        ok = ok and abs(refl - 1) <= 1e-12
        ok = ok and abs(gamma(z + 1) - z * gamma(z)) <= 1e-12 * abs(gamma(z + 1))
    checks.append(("gamma reflection/recurrence", ok))

    ok = True
    for _ in range(50):
        s = complex(rng.uniform(-6, 6), rng.uniform(-2, 2))
        if abs(s - 1) < 0.2:
            continue
        q = complex(rng.uniform(0.1, 3), rng.uniform(-1, 1))
        lhs = hurwitz_zeta(s, q) - hurwitz_zeta(s, q + 1) - q ** (-s)
        ok = ok and abs(lhs) <= 1e-11 * max(1.0, abs(hurwitz_zeta(s, q)))
    checks.append(("hurwitz recurrence", ok))

    ok = True
    for n in range(5):
        for q in (0.25, 0.5, 0.75, 1.0, 1 + 0.5j):
            a = hurwitz_zeta(complex(-n), complex(q))
            b = zeta_neg_int_oracle(n, complex(q))
            ok = ok and abs(a - b) <= 1e-11 * max(1.0, abs(b))
    checks.append(("zeta negative-integer oracle", ok))

    r = integrate_finite(lambda x: complex(math.log(x)), 0.0, 1.0)
    checks.append(("tanh-sinh log endpoint", r.converged and abs(r.value + 1) < 1e-10))
    r = integrate_semi_infinite(lambda t: complex(t ** -0.5 * math.exp(-t)))
    checks.append(("exp-sinh singular origin",
                   r.converged and abs(r.value - math.sqrt(math.pi)) < 1e-9))

    ok = True
    for kk in range(7):
        for y in (1.0, 2.0, 0.5 + 0.5j):
            v = contour_cauchy_check(complex(y), kk)
            ok = ok and abs(v - complex(y) ** kk / gamma(kk + 1.0)) <= 1e-10
    checks.append(("cauchy kernel", ok))

    g = catalan_reference()
    target = -4.0 * g / math.pi
    case = IdentityCase(-1.0 + 0j, BranchedConstant(1.0))
    ok = (abs(lhs_integral(case).value - target) <= 1e-8
          and abs(rhs_zeta(case) - target) <= 1e-8
          and abs(rhs_series(case) - target) <= 1e-8)
    checks.append(("catalan instance", ok))
    return checks


# ---------------------------------------------------------------------------

def run(invocation: CliInvocation) -> int:
    """Execute a parsed invocation; returns the process exit code."""
    cmd = invocation.command
    params = invocation.params
    try:
        if cmd == "verify":
            case = IdentityCase(parse_complex(params["k"]),
                                parse_branched(params["a"]),
                                quad_cfg=_quad_cfg(params),
                                verdict_atol=params.get("verdict_atol", 1e-6),
                                verdict_rtol=params.get("verdict_rtol", 1e-6))
            return _emit_reports([verify(case)], [], params)

        if cmd == "sweep":
            k_text = params.get("k_list")
            a_text = params.get("a_list")
            k_list = ([parse_complex(t) for t in k_text.split(",")]
                      if k_text else list(DEFAULT_K_GRID))
            a_list = ([parse_branched(t) for t in a_text.split(",")]
                      if a_text else list(DEFAULT_A_GRID))
            res = sweep(k_list, a_list, quad_cfg=_quad_cfg(params),
                        verdict_atol=params.get("verdict_atol", 1e-6),
                        verdict_rtol=params.get("verdict_rtol", 1e-6))
            return _emit_reports(res.reports, res.notes, params)

        if cmd == "constants":
            cfg = _quad_cfg(params)
            return _emit_reports([catalan_case(cfg), loggamma_case(cfg)], [], params)

        if cmd == "zeta":
            value = hurwitz_zeta(parse_complex(params["s"]), parse_complex(params["q"]))
            print(render_complex(value))
            return 0

        if cmd == "selftest":
            all_ok = True
            for name, ok in _selftest_checks():
                print(f"{'PASS' if ok else 'FAIL'} {name}")
                all_ok = all_ok and ok
            return 0 if all_ok else 1

        raise CliParseError(f"unknown command {cmd!r}")
    except (CliParseError, DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main(argv: Sequence[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    return run(parse_argv(list(argv)))


def entry() -> None:
    sys.exit(main())
