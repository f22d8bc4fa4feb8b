"""Command-line front end: verification suites with machine-readable reports.

Subcommands:

* ``verify`` -- build one family kernel and run the requested checks over a
  window, emitting a JSON report; exit status 0 iff every check passed.
* ``counterexample`` -- exact gap-2/3/4 discrepancies of the two beta
  reconstruction routes, compared against their known closed forms.
* ``eds`` -- divisibility-sequence table, recurrence/property checks, and the
  delta verification of the induced kernel.

Exact residuals are serialized as ``"0"`` or ``"num/den"`` strings, never
floats, so exact-mode reports are reproducible bit for bit.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable

from . import __version__
from .errors import ConfigError, VerificationError
from .families import (
    FAMILY_PRESETS,
    affine_sequence,
    binomial_closed_entries,
    binomial_kernel,
    constant_sequence,
    eds_closed_entries,
    eds_generate,
    eds_kernel,
    eds_property_residual,
    elliptic_sum_closed_entries,
    elliptic_sum_kernel,
    gasper_closed_entries,
    gasper_kernel,
    partial_theta_kernel,
    schlosser_closed_entries,
    schlosser_kernel,
    warnaar_kernel,
)
from .identities import (
    max_anchored_tsi_residual,
    max_qsi_residual,
    max_tsi_residual,
)
from .kernels import (
    max_antisymmetry_residual,
    pair_from_kernel,
    verify_inversion,
)
from .numerics import DEFAULT_POLICY, Scalar, TruncationPolicy, is_exact, magnitude
from .recursions import counterexample_discrepancies, counterexample_reference

CHECK_NAMES = (
    "antisym", "tsi", "qsi", "cond3", "delta",
    "closed-form", "counterexample", "eds-property",
)


@dataclass(frozen=True)
class RunConfig:
    """One verification run.

    ``window``, ``tolerance``, and ``checks`` left as None fall back to the
    family preset (respectively the family's default check set).
    """

    family: str
    params: dict = field(default_factory=dict)
    window: tuple[int, int] | None = None
    tolerance: float | None = None
    policy: TruncationPolicy = DEFAULT_POLICY
    checks: tuple[str, ...] | None = None


# --- scalar/window parsing ------------------------------------------------------


def parse_scalar(text: str) -> Scalar:
    """``"p/q"`` -> Fraction, decimal/scientific -> float, else int."""
    t = text.strip()
    try:
        if "/" in t:
            return Fraction(t)
        if any(c in t for c in ".eE") and not t.lstrip("+-").isdigit():
            return float(t)
        return int(t)
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"cannot parse scalar {text!r}") from exc


def serialize_scalar(value: Scalar):
    """Exact values render as strings ('0', 'num/den'); floats stay numbers."""
    if is_exact(value):
        return str(Fraction(value))
    return float(abs(value)) if isinstance(value, complex) else float(value)


def parse_params(text: str) -> dict[str, Scalar]:
    out: dict[str, Scalar] = {}
    if not text.strip():
        return out
    for item in text.split(","):
        if "=" not in item:
            raise ConfigError(f"bad params item {item!r} (expected key=value)")
        key, _, value = item.partition("=")
        out[key.strip()] = parse_scalar(value)
    return out


def parse_window(text: str) -> tuple[int, int]:
    parts = text.split("..")
    if len(parts) != 2:
        raise ConfigError(f"bad window {text!r} (expected lo..hi)")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise ConfigError(f"bad window {text!r}") from exc
    if lo > hi:
        raise ConfigError(f"empty window {text!r}")
    return lo, hi


def parse_int_range(text: str) -> range:
    if ".." in text:
        lo, hi = parse_window(text)
        return range(lo, hi + 1)
    try:
        k = int(text)
    except ValueError as exc:
        raise ConfigError(f"bad integer range {text!r}") from exc
    return range(k, k + 1)


def load_config_file(path: str) -> dict[str, str]:
    """Plain ``key=value`` lines; blank lines and #-comments ignored."""
    out: dict[str, str] = {}
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path!r}: {exc}") from exc
    for raw in lines:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"bad config line {line!r}")
        key, _, value = line.partition("=")
        out[key.strip()] = value.strip()
    return out


# --- family registry -------------------------------------------------------------


class FamilyRun:
    def __init__(self, kernel, exact: bool, closed=None, eds_seq=None):
        self.kernel = kernel
        self.exact = exact
        self.closed = closed
        self.eds_seq = eds_seq


def _take(family: str, params: dict, keys: tuple[str, ...]) -> list[Scalar]:
    unknown = set(params) - set(keys)
    if unknown:
        raise ConfigError(f"{family}: unknown params {sorted(unknown)}")
    missing = [k for k in keys if k not in params]
    if missing:
        raise ConfigError(f"{family}: missing params {missing}")
    return [params[k] for k in keys]


def _build_binomial(params, window, policy) -> FamilyRun:
    _take("binomial", params, ())
    return FamilyRun(binomial_kernel(), True, binomial_closed_entries())


def _build_gasper(params, window, policy) -> FamilyRun:
    a, b, p, q = _take("gasper", params, ("a", "b", "p", "q"))
    kernel = gasper_kernel(a, b, p, q, window=window)
    return FamilyRun(kernel, True, gasper_closed_entries(a, b, p, q))


def _build_schlosser(params, window, policy) -> FamilyRun:
    a, b, c, q = _take("schlosser", params, ("a", "b", "c", "q"))
    kernel = schlosser_kernel(a, b, c, q, window=window)
    return FamilyRun(kernel, True, schlosser_closed_entries(a, b, c, q))


def _build_warnaar(params, window, policy) -> FamilyRun:
    q, b0, bstep, x0, xstep = _take("warnaar", params, ("q", "b0", "bstep", "x0", "xstep"))
    kernel = warnaar_kernel(
        q, affine_sequence(b0, bstep), affine_sequence(x0, xstep), policy, window
    )
    return FamilyRun(kernel, False)


def _build_elliptic_sum(params, window, policy) -> FamilyRun:
    x, y, q, p, t = _take("elliptic-sum", params, ("x", "y", "q", "p", "t"))
    kernel = elliptic_sum_kernel(x, y, q, p, constant_sequence(t), policy, window)
    closed = elliptic_sum_closed_entries(x, y, q, p, constant_sequence(t), policy)
    return FamilyRun(kernel, False, closed)


def _build_partial_theta(params, window, policy) -> FamilyRun:
    q, a0, astep, b0, bstep = _take(
        "partial-theta", params, ("q", "a0", "astep", "b0", "bstep")
    )
    kernel = partial_theta_kernel(
        q, affine_sequence(a0, astep), affine_sequence(b0, bstep), policy, window
    )
    return FamilyRun(kernel, False)


def _build_eds(params, window, policy) -> FamilyRun:
    w2, w3, w4 = _take("eds", params, ("w2", "w3", "w4"))
    if w2 == 0:
        raise ConfigError("eds: W_2 = 0 is degenerate (squared in the recurrence and in entries)")
    lo, hi = window
    seq = eds_generate(w2, w3, w4, n_max=2 * max(abs(lo), abs(hi)))
    kernel = eds_kernel(seq, window=window)
    return FamilyRun(kernel, True, eds_closed_entries(seq), eds_seq=seq)


FAMILY_BUILDERS: dict[str, Callable] = {
    "binomial": _build_binomial,
    "gasper": _build_gasper,
    "schlosser": _build_schlosser,
    "warnaar": _build_warnaar,
    "elliptic-sum": _build_elliptic_sum,
    "partial-theta": _build_partial_theta,
    "eds": _build_eds,
}


def default_checks(family: str, run: FamilyRun) -> tuple[str, ...]:
    checks = ["antisym", "tsi", "qsi", "cond3", "delta"]
    if run.closed is not None:
        checks.append("closed-form")
    if run.eds_seq is not None:
        checks.append("eds-property")
    return tuple(checks)


# --- check execution ---------------------------------------------------------------


def _closed_form_worst(run: FamilyRun, window) -> Scalar:
    from .kernels import f_entry, g_entry

    closed_f, closed_g = run.closed
    lo, hi = window
    worst: Scalar = 0
    for k in range(lo, hi + 1):
        for n in range(k, hi + 1):
            for diff in (
                closed_f(n, k) - f_entry(run.kernel, n, k),
                closed_g(n, k) - g_entry(run.kernel, n, k),
            ):
                if abs(diff) > abs(worst):
                    worst = diff
    return worst


def _eds_property_worst(run: FamilyRun, window) -> Scalar:
    seq = run.eds_seq
    reach = seq.n_max // 2
    worst: Scalar = 0
    idx = range(-reach, reach + 1)
    for k in idx:
        for p in idx:
            for q in idx:
                r = eds_property_residual(seq, k, p, q)
                if abs(r) > abs(worst):
                    worst = r
    return worst


def run_check(name: str, run: FamilyRun, window, tol) -> dict:
    start = time.perf_counter()
    if name == "antisym":
        worst = max_antisymmetry_residual(run.kernel, window)
    elif name == "tsi":
        worst = max_tsi_residual(run.kernel, window)
    elif name == "qsi":
        worst = max_qsi_residual(run.kernel, window)
    elif name == "cond3":
        worst = max_anchored_tsi_residual(run.kernel, window)
    elif name == "delta":
        report = verify_inversion(pair_from_kernel(run.kernel, window, validate=False), tol)
        worst = report.worst_value
    elif name == "closed-form":
        worst = _closed_form_worst(run, window)
    elif name == "eds-property":
        worst = _eds_property_worst(run, window)
    else:
        raise ConfigError(f"unknown check {name!r}")
    elapsed_ms = (time.perf_counter() - start) * 1e3
    passed = worst == 0 if tol is None else magnitude(worst) <= tol
    return {
        "name": name,
        "pass": bool(passed),
        "exact": tol is None,
        "worst_residual": serialize_scalar(worst),
        "elapsed_ms": round(elapsed_ms, 3),
    }


def cmd_verify(config: RunConfig) -> dict:
    """Run one family's suite; returns the report document."""
    family, policy = config.family, config.policy
    if family not in FAMILY_BUILDERS:
        raise ConfigError(f"unknown family {family!r}; known: {sorted(FAMILY_BUILDERS)}")
    preset = FAMILY_PRESETS[family]
    merged = dict(preset["params"])
    merged.update(config.params)
    window = config.window if config.window is not None else preset["window"]
    tolerance = config.tolerance if config.tolerance is not None else preset["tolerance"]
    checks = config.checks

    doc = {
        "artifact": "invrel",
        "version": __version__,
        "family": family,
        "params": {k: serialize_scalar(v) for k, v in merged.items()},
        "window": f"{window[0]}..{window[1]}",
        "tolerance": tolerance,
        "truncation": {"tail_bound": policy.tail_bound, "max_terms": policy.max_terms},
        "mode": "exact" if tolerance is None else "tolerance",
        "checks": [],
        "passed": False,
    }
    if checks is not None:
        bad = set(checks) - set(CHECK_NAMES)
        if bad:
            raise ConfigError(f"unknown checks {sorted(bad)}; known: {CHECK_NAMES}")
        if "counterexample" in checks:
            raise ConfigError("the counterexample check runs via the counterexample subcommand")

    try:
        run = FAMILY_BUILDERS[family](merged, window, policy)
    except ConfigError:
        raise
    except VerificationError as exc:
        doc["error"] = f"{type(exc).__name__}: {exc}"
        return doc
    if tolerance is None and not run.exact:
        raise ConfigError(f"{family}: a positive --tolerance is required for float families")
    if tolerance is not None and tolerance <= 0:
        raise ConfigError("tolerance must be positive")

    if checks is None:
        checks = default_checks(family, run)
    if "closed-form" in checks and run.closed is None:
        raise ConfigError(f"{family}: no independent closed form is available")
    if "eds-property" in checks and run.eds_seq is None:
        raise ConfigError(f"{family}: eds-property applies only to the eds family")

    try:
        for name in checks:
            doc["checks"].append(run_check(name, run, window, tolerance))
    except VerificationError as exc:
        doc["error"] = f"{type(exc).__name__}: {exc}"
        return doc
    doc["passed"] = all(c["pass"] for c in doc["checks"])
    return doc


def cmd_counterexample(k_values) -> dict:
    """Exact gap discrepancies of the two beta routes for each k."""
    rows = []
    for k in k_values:
        got = counterexample_discrepancies(k)
        want = counterexample_reference(k)
        rows.append(
            {
                "k": k,
                "gap2": serialize_scalar(got[0]),
                "gap3": serialize_scalar(got[1]),
                "gap4": serialize_scalar(got[2]),
                "expected_gap2": serialize_scalar(want[0]),
                "expected_gap3": serialize_scalar(want[1]),
                "expected_gap4": serialize_scalar(want[2]),
                "match": got == want,
            }
        )
    return {
        "artifact": "invrel",
        "version": __version__,
        "subcommand": "counterexample",
        "rows": rows,
        "passed": all(r["match"] for r in rows),
    }


def cmd_eds(seeds: tuple[Scalar, Scalar, Scalar], n_max: int, window=None) -> dict:
    """Table, recurrence round-trip, exhaustive property check, and delta."""
    w2, w3, w4 = seeds
    if w2 == 0:
        raise ConfigError("eds: W_2 = 0 is degenerate (squared in the recurrence and in entries)")
    doc = {
        "artifact": "invrel",
        "version": __version__,
        "subcommand": "eds",
        "seeds": [serialize_scalar(Fraction(s)) for s in seeds],
        "n_max": n_max,
        "checks": [],
        "passed": False,
    }
    try:
        seq = eds_generate(w2, w3, w4, n_max)
    except VerificationError as exc:
        doc["error"] = f"{type(exc).__name__}: {exc}"
        return doc
    doc["table"] = [[n, serialize_scalar(seq.w(n))] for n in range(0, seq.n_max + 1)]

    start = time.perf_counter()
    worst: Scalar = 0
    for n in range(-(seq.n_max - 2), seq.n_max - 1):
        r = seq.recurrence_residual(n)
        if abs(r) > abs(worst):
            worst = r
    doc["checks"].append(
        {
            "name": "recurrence",
            "pass": worst == 0,
            "exact": True,
            "worst_residual": serialize_scalar(worst),
            "elapsed_ms": round((time.perf_counter() - start) * 1e3, 3),
        }
    )

    start = time.perf_counter()
    reach = seq.n_max // 2
    worst = 0
    idx = range(-reach, reach + 1)
    for k in idx:
        for p in idx:
            for q in idx:
                r = eds_property_residual(seq, k, p, q)
                if abs(r) > abs(worst):
                    worst = r
    doc["checks"].append(
        {
            "name": "eds-property",
            "pass": worst == 0,
            "exact": True,
            "worst_residual": serialize_scalar(worst),
            "elapsed_ms": round((time.perf_counter() - start) * 1e3, 3),
        }
    )

    if window is None:
        window = (1, max(1, min(6, n_max // 2)))
    start = time.perf_counter()
    try:
        kernel = eds_kernel(seq, window=window)
        report = verify_inversion(pair_from_kernel(kernel, window, validate=False))
        doc["checks"].append(
            {
                "name": "delta",
                "pass": report.passed,
                "exact": True,
                "worst_residual": serialize_scalar(report.worst_value),
                "elapsed_ms": round((time.perf_counter() - start) * 1e3, 3),
            }
        )
        doc["window"] = f"{window[0]}..{window[1]}"
    except VerificationError as exc:
        doc["error"] = f"{type(exc).__name__}: {exc}"
        return doc
    doc["passed"] = all(c["pass"] for c in doc["checks"])
    return doc


# --- argument plumbing ----------------------------------------------------------


def _emit(doc: dict, out: str | None) -> None:
    text = json.dumps(doc, indent=2)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="invrel",
        description="Window-exhaustive verification of triangular inversion pairs.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    pv = sub.add_parser("verify", help="run a family's check suite")
    pv.add_argument("--family", help=f"one of {sorted(FAMILY_BUILDERS)}")
    pv.add_argument("--params", help="comma-separated key=value scalars (rationals as p/q)")
    pv.add_argument("--window", help="closed index window lo..hi")
    pv.add_argument("--tolerance", help="residual tolerance for float families")
    pv.add_argument("--truncation-tail", help="series/product tail bound")
    pv.add_argument("--truncation-max", help="series/product term cap")
    pv.add_argument("--checks", help=f"comma-separated subset of {CHECK_NAMES}")
    pv.add_argument("--config", help="key=value config file (flags override)")
    pv.add_argument("--all-presets", action="store_true", help="run every family preset")
    pv.add_argument("--out", help="write the JSON report here instead of stdout")

    pc = sub.add_parser("counterexample", help="gap discrepancies of the two beta routes")
    pc.add_argument("--k", default="1..5", help="k value or range lo..hi (default 1..5)")
    pc.add_argument("--out")

    pe = sub.add_parser("eds", help="divisibility-sequence table and checks")
    pe.add_argument("--seeds", default="1,-1,1", help="W_2,W_3,W_4 (default 1,-1,1)")
    pe.add_argument("--n", default="12", help="table extent (default 12)")
    pe.add_argument("--window", help="delta-check window lo..hi (default 1..min(6, n//2))")
    pe.add_argument("--out")
    return parser


def _verify_main(args) -> int:
    cfg = load_config_file(args.config) if args.config else {}

    def pick(flag_value, key):
        return flag_value if flag_value is not None else cfg.get(key)

    tail = pick(args.truncation_tail, "truncation-tail")
    cap = pick(args.truncation_max, "truncation-max")
    policy = TruncationPolicy(
        float(tail) if tail is not None else DEFAULT_POLICY.tail_bound,
        int(cap) if cap is not None else DEFAULT_POLICY.max_terms,
    )
    tol_text = pick(args.tolerance, "tolerance")
    tolerance = float(tol_text) if tol_text is not None else None
    window_text = pick(args.window, "window")
    window = parse_window(window_text) if window_text is not None else None
    checks_text = pick(args.checks, "checks")
    checks = tuple(c.strip() for c in checks_text.split(",")) if checks_text else None
    params = parse_params(pick(args.params, "params") or "")
    out = pick(args.out, "out")

    if args.all_presets:
        docs = [
            cmd_verify(RunConfig(family=name, policy=policy)) for name in FAMILY_BUILDERS
        ]
        doc = {
            "artifact": "invrel",
            "version": __version__,
            "all_presets": True,
            "families": docs,
            "passed": all(d["passed"] for d in docs),
        }
        _emit(doc, out)
        return 0 if doc["passed"] else 1

    family = pick(args.family, "family")
    if not family:
        raise ConfigError("--family is required (or use --all-presets)")
    doc = cmd_verify(
        RunConfig(
            family=family, params=params, window=window,
            tolerance=tolerance, policy=policy, checks=checks,
        )
    )
    _emit(doc, out)
    return 0 if doc["passed"] else 1


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.subcommand == "verify":
            return _verify_main(args)
        if args.subcommand == "counterexample":
            doc = cmd_counterexample(list(parse_int_range(args.k)))
            _emit(doc, args.out)
            return 0 if doc["passed"] else 1
        if args.subcommand == "eds":
            seeds = [parse_scalar(s) for s in args.seeds.split(",")]
            if len(seeds) != 3:
                raise ConfigError("--seeds needs exactly three values W_2,W_3,W_4")
            window = parse_window(args.window) if args.window else None
            doc = cmd_eds(tuple(seeds), int(args.n), window)
            _emit(doc, args.out)
            return 0 if doc["passed"] else 1
        raise ConfigError(f"unknown subcommand {args.subcommand!r}")
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
