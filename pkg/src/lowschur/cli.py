"""Command-line entry point: ``lowschur {analyze,solve,verify}``.

JSON goes to standard output, human-readable notes to standard error.
Exit codes: 0 ok, 2 input error, 3 inadmissible data, 4 search exhausted or
infeasible, 5 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .algebra import RationalFn, hankel_rank
from .config import Tolerances
from .errors import ExtractionError, InadmissibleDataError, LowSchurError
from .interpolant import apply_lft, smallest_successful_budget, solve_rsp
from .schur import ProblemInstance, check_admissible, schur_parameters
from .serialization import (
    SCHEMA_VERSION,
    RequestError,
    SolveRequest,
    SolveResponse,
    cx_list,
    fnum,
    rational_from_dict,
    rational_to_dict,
    report_to_dict,
)
from .transfer import build_theta
from .verify import disk_points, pointwise_distance, roundtrip_extract, verify_solution

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INADMISSIBLE = 3
EXIT_EXHAUSTED = 4
EXIT_VERIFY_FAIL = 5


class _Exit(Exception):
    def __init__(self, code: int, message: str, doc: dict | None = None):
        super().__init__(message)
        self.code = code
        self.doc = doc


def _load_json(path: str | None, stdin) -> object:
    try:
        if path in (None, "-"):
            text = stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        return json.loads(text)
    except OSError as exc:
        raise _Exit(EXIT_INPUT, f"cannot read input: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise _Exit(EXIT_INPUT, f"invalid JSON: {exc}") from exc


def _tolerances(request: SolveRequest, args) -> Tolerances:
    overrides = dict(request.tolerances)
    if args.config:
        cfg = _load_json(args.config, None)
        if isinstance(cfg, dict) and isinstance(cfg.get("tolerances"), dict):
            cfg = cfg["tolerances"]
        if not isinstance(cfg, dict):
            raise _Exit(EXIT_INPUT, "config file must hold a JSON object of tolerances")
        overrides.update(cfg)
    if args.grid is not None:
        overrides["grid"] = args.grid
    try:
        return Tolerances.from_dict(overrides)
    except (TypeError, ValueError) as exc:
        raise _Exit(EXIT_INPUT, f"bad tolerances: {exc}") from exc


def _request(doc, args) -> SolveRequest:
    try:
        req = SolveRequest.from_dict(doc)
    except RequestError as exc:
        raise _Exit(EXIT_INPUT, f"schema error: {exc}") from exc
    if getattr(args, "k", None) is not None:
        req.degree_budget = args.k
    if getattr(args, "count", None) is not None:
        req.count = args.count
    if getattr(args, "seed", None) is not None:
        req.seed = args.seed
    if getattr(args, "alpha0", None) is not None:
        req.alpha0_strategy = args.alpha0
    if req.count < 1 or req.seed < 0 or (req.degree_budget is not None and req.degree_budget < 0):
        raise _Exit(EXIT_INPUT, "count must be >= 1, seed and k must be >= 0")
    return req


def _alpha0(strategy: str):
    if strategy in ("bound", "sufficient_bound", "bisect", "minimize_bisect"):
        return strategy
    try:
        return float(strategy)
    except ValueError:
        raise _Exit(EXIT_INPUT, f"alpha0 must be 'bound', 'bisect' or a number, got {strategy!r}") from None


def _thresholds(q: int, n: int) -> list:
    lines = [f"no solution of complexity k < {q}"]
    if q < n - q:
        lines.append(f"no solution of complexity k in ({q}, {n - q}]")
    lines.append(f"at most one solution of complexity exactly {q}")
    lines.append(f"infinitely many rational interpolants (Schur class or not) for every k > {n - q}")
    return lines


def cmd_analyze(doc, args, err) -> tuple[int, dict]:
    req = _request(doc, args)
    tol = _tolerances(req, args)
    c = np.asarray(req.coefficients, dtype=complex)
    n = c.size - 1
    rep = check_admissible(c, tol)
    q = hankel_rank(c, tol.rank_tol)
    q_full = hankel_rank(c, tol.rank_tol, full=True)
    out = {
        "schema_version": SCHEMA_VERSION,
        "status": rep.status,
        "admissible": rep.admissible,
        "n": n,
        "gammas": cx_list(rep.gammas),
        "failed_stage": rep.failed_stage,
        "pick_min_eigenvalue": fnum(rep.min_eig),
        "max_abs_gamma": fnum(rep.max_gamma),
        "hankel_rank_q": q,
        "hankel_rank_full": q_full,
        "thresholds": _thresholds(q_full, n),
        "thresholds_note": "informational; computed from hankel_rank_full, not decided by the solver",
        "message": rep.message,
        "request": req.to_dict(),
        "config": tol.to_dict(),
    }
    if not rep.admissible:
        err.write(f"not admissible: {rep.message}\n")
        return EXIT_INADMISSIBLE, out
    out["minimal_degree_upper_bound"] = smallest_successful_budget(c, req.seed, tol)
    err.write(f"admissible, n = {n}, q = {q}, gammas = {np.round(rep.gammas, 6).tolist()}\n")
    return EXIT_OK, out


def cmd_solve(doc, args, err) -> tuple[int, dict]:
    req = _request(doc, args)
    if req.degree_budget is None:
        raise _Exit(EXIT_INPUT, "schema error: 'degree_budget' (or --k) is required for solve")
    tol = _tolerances(req, args)
    inst = ProblemInstance(req.coefficients, req.degree_budget, tol)
    try:
        res = solve_rsp(inst, count=req.count, seed=req.seed, alpha0=_alpha0(req.alpha0_strategy))
    except InadmissibleDataError as exc:
        err.write(f"not admissible: {exc}\n")
        return EXIT_INADMISSIBLE, {
            "schema_version": SCHEMA_VERSION,
            "status": "inadmissible",
            "failed_stage": exc.stage,
            "message": str(exc),
            "request": req.to_dict(),
            "config": tol.to_dict(),
        }
    resp = SolveResponse.from_result(res, req, tol.to_dict())
    for line in res.reports:
        err.write(line + "\n")
    err.write(f"status {res.status}: {len(res.solutions)} solution(s)\n")
    return (EXIT_OK if res.solutions else EXIT_EXHAUSTED), resp.to_dict()


def _verify_one(f: RationalFn, inst: ProblemInstance, theta, gammas, seed: int, reduce: bool) -> dict:
    tol = inst.tol
    rep = verify_solution(f, inst, reduce=reduce)
    extracted = None
    try:
        E = roundtrip_extract(f, gammas, tol)
        back = apply_lft(theta, E, tol, check=False)
        pts = disk_points(np.random.default_rng(seed), 50)
        scale = max(1.0, float(np.abs(f(pts)).max()))
        rep.roundtrip_residual = pointwise_distance(back, f.trim(tol.zero_tol), pts) / scale
        if rep.roundtrip_residual > tol.roundtrip_tol:
            rep.reasons.append(f"round-trip residual {rep.roundtrip_residual:.3g} exceeds {tol.roundtrip_tol:g}")
        En = E.normalized() if abs(E.den.coeffs[0]) > tol.zero_tol else E
        is_zero = bool(np.abs(En.num.coeffs).max() <= tol.backward_tol * max(1.0, np.abs(En.den.coeffs).max()))
        extracted = {**rational_to_dict(En), "is_zero": is_zero}
    except (ExtractionError, LowSchurError) as exc:
        rep.reasons.append(f"parameter extraction failed: {exc}")
    rep.verdict = "fail" if rep.reasons else "pass"
    return {**report_to_dict(rep), "extracted_parameter": extracted}


def cmd_verify(doc, args, err) -> tuple[int, dict]:
    if not isinstance(doc, dict) or "request" not in doc:
        raise _Exit(EXIT_INPUT, "schema error: verify input needs 'request' and 'candidate(s)' or 'solutions'")
    req = _request(doc["request"], args)
    tol = _tolerances(req, args)
    raw = doc.get("candidates")
    if raw is None and "candidate" in doc:
        raw = [doc["candidate"]]
    if raw is None:
        raw = doc.get("solutions")
    if not isinstance(raw, list) or not raw:
        raise _Exit(EXIT_INPUT, "schema error: no candidate functions to verify")
    try:
        cands = [rational_from_dict(item) for item in raw]
    except RequestError as exc:
        raise _Exit(EXIT_INPUT, f"schema error: {exc}") from exc

    c = np.asarray(req.coefficients, dtype=complex)
    adm = check_admissible(c, tol)
    if not adm.admissible:
        err.write(f"not admissible: {adm.message}\n")
        return EXIT_INADMISSIBLE, {
            "schema_version": SCHEMA_VERSION, "status": "inadmissible", "message": adm.message,
            "request": req.to_dict(), "config": tol.to_dict(),
        }
    gammas = schur_parameters(c, tol.strict_tol)
    theta = build_theta(gammas, tol)
    reports = []
    for f in cands:
        k = req.degree_budget
        if k is None:
            # no budget given: the degree is reported but not constrained
            k = max(c.size - 1, f.trim(tol.zero_tol).mcmillan_degree(tol.zero_tol))
        reports.append(_verify_one(f, ProblemInstance(c, k, tol), theta, gammas, req.seed, args.reduce))
    ok = all(r["verdict"] == "pass" for r in reports)
    for i, r in enumerate(reports):
        err.write(f"candidate {i}: {r['verdict']}" + (f" ({'; '.join(r['reasons'])})" if r["reasons"] else "") + "\n")
    out = {
        "schema_version": SCHEMA_VERSION,
        "status": "pass" if ok else "fail",
        "gammas": cx_list(gammas.gammas),
        "reports": reports,
        "request": req.to_dict(),
        "config": tol.to_dict(),
    }
    return (EXIT_OK if ok else EXIT_VERIFY_FAIL), out


COMMANDS = {"analyze": cmd_analyze, "solve": cmd_solve, "verify": cmd_verify}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lowschur", description="Degree-constrained Schur-class interpolation.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--input", metavar="PATH", default=None, help="JSON input file (default: stdin)")
        p.add_argument("--config", metavar="PATH", default=None, help="JSON tolerance overrides")
        p.add_argument("--grid", type=int, default=None, help="unit-circle grid size")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--k", type=int, default=None, help="degree budget")
        if name == "solve":
            p.add_argument("--count", type=int, default=None)
            p.add_argument("--alpha0", default=None, help="bound | bisect | <value>")
        if name == "verify":
            p.add_argument("--reduce", action="store_true",
                           help="cancel common numerator/denominator roots before counting the degree")
    return parser


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        doc = _load_json(args.input, stdin)
        code, out = COMMANDS[args.command](doc, args, stderr)
    except _Exit as exc:
        stderr.write(f"error: {exc}\n")
        code, out = exc.code, {"schema_version": SCHEMA_VERSION, "status": "error", "message": str(exc)}
    except (ValueError, LowSchurError) as exc:
        stderr.write(f"error: {exc}\n")
        code, out = EXIT_INPUT, {"schema_version": SCHEMA_VERSION, "status": "error", "message": str(exc)}
    stdout.write(dumps(out))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
