"""JSON documents exchanged by the command-line interface.

Complex numbers are two-element arrays ``[re, im]``; floats use Python's
shortest round-trip repr.  Non-finite values (a pole-free function has
nearest pole at infinity) are written as ``null``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

SCHEMA_VERSION = 1


class RequestError(ValueError):
    """Malformed input document."""


def cx(z) -> list:
    z = complex(z)
    return [float(z.real), float(z.imag)]


def cx_list(values) -> list:
    return [cx(z) for z in np.asarray(values, dtype=complex).ravel()]


def parse_cx(item) -> complex:
    if isinstance(item, (int, float)) and not isinstance(item, bool):
        return complex(item)
    if isinstance(item, (list, tuple)) and len(item) == 2 and all(
        isinstance(v, (int, float)) and not isinstance(v, bool) for v in item
    ):
        return complex(float(item[0]), float(item[1]))
    raise RequestError(f"expected a number or a [re, im] pair, got {item!r}")


def parse_cx_list(items, name="coefficients") -> list:
    if not isinstance(items, list) or not items:
        raise RequestError(f"'{name}' must be a non-empty list")
    return [parse_cx(v) for v in items]


def fnum(x):
    x = float(x)
    return x if math.isfinite(x) else None


def unfnum(x, default=math.inf):
    return default if x is None else float(x)


def _int(doc, key, default=None, minimum=None):
    value = doc.get(key, default)
    if value is None:
        return None
    if isinstance(value, bool) or not isinstance(value, int):
        raise RequestError(f"'{key}' must be an integer")
    if minimum is not None and value < minimum:
        raise RequestError(f"'{key}' must be >= {minimum}")
    return value


@dataclass
class SolveRequest:
    coefficients: list
    degree_budget: int | None = None
    count: int = 3
    seed: int = 0
    alpha0_strategy: str = "bound"
    tolerances: dict = field(default_factory=dict)
    schema_version: int = SCHEMA_VERSION

    @classmethod
    def from_dict(cls, doc) -> "SolveRequest":
        if not isinstance(doc, dict):
            raise RequestError("request must be a JSON object")
        version = doc.get("schema_version", SCHEMA_VERSION)
        if version != SCHEMA_VERSION:
            raise RequestError(f"unsupported schema_version {version!r}")
        raw = doc.get("coefficients", doc.get("c"))
        coeffs = parse_cx_list(raw)
        k = _int(doc, "degree_budget", doc.get("k"), minimum=0)
        strategy = doc.get("alpha0_strategy", "bound")
        if isinstance(strategy, (int, float)) and not isinstance(strategy, bool):
            strategy = repr(float(strategy))
        if not isinstance(strategy, str):
            raise RequestError("'alpha0_strategy' must be 'bound', 'bisect' or a number")
        tols = doc.get("tolerances", {}) or {}
        if not isinstance(tols, dict):
            raise RequestError("'tolerances' must be an object")
        return cls(
            coefficients=coeffs,
            degree_budget=k,
            count=_int(doc, "count", 3, minimum=1),
            seed=_int(doc, "seed", 0, minimum=0),
            alpha0_strategy=strategy,
            tolerances=dict(tols),
            schema_version=version,
        )

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "coefficients": cx_list(self.coefficients),
            "degree_budget": self.degree_budget,
            "count": self.count,
            "seed": self.seed,
            "alpha0_strategy": self.alpha0_strategy,
            "tolerances": dict(self.tolerances),
        }


def rational_to_dict(f) -> dict:
    return {"num": cx_list(f.num.coeffs), "den": cx_list(f.den.coeffs)}


def rational_from_dict(doc):
    from .algebra import RationalFn

    if not isinstance(doc, dict) or "num" not in doc or "den" not in doc:
        raise RequestError("a rational function needs 'num' and 'den' coefficient lists")
    den = parse_cx_list(doc["den"], "den")
    if not any(d != 0 for d in den):
        raise RequestError("denominator is the zero polynomial")
    return RationalFn.from_coeffs(parse_cx_list(doc["num"], "num"), den)


def report_to_dict(rep) -> dict:
    return {
        "taylor_residual": fnum(rep.taylor_residual),
        "circle_max": fnum(rep.circle_max),
        "nearest_pole": fnum(rep.nearest_pole),
        "degree": rep.degree,
        "degree_budget_ok": rep.degree_budget_ok,
        "roundtrip_residual": None if rep.roundtrip_residual is None else fnum(rep.roundtrip_residual),
        "verdict": rep.verdict,
        "reasons": list(rep.reasons),
    }


def report_from_dict(doc):
    from .verify import VerificationReport

    rt = doc.get("roundtrip_residual")
    return VerificationReport(
        taylor_residual=unfnum(doc["taylor_residual"]),
        circle_max=unfnum(doc["circle_max"]),
        nearest_pole=unfnum(doc["nearest_pole"]),
        degree=int(doc["degree"]),
        degree_budget_ok=bool(doc["degree_budget_ok"]),
        roundtrip_residual=None if rt is None else float(rt),
        verdict=doc["verdict"],
        reasons=list(doc.get("reasons", [])),
    )


@dataclass
class SolveResponse:
    status: str
    gammas: list
    hankel_rank_q: int | None
    theta: dict
    R_column: list
    solutions: list
    reports: list
    request: dict
    config: dict
    schema_version: int = SCHEMA_VERSION

    @classmethod
    def from_result(cls, result, request: SolveRequest, config: dict) -> "SolveResponse":
        sols = []
        for s in result.solutions:
            sols.append({
                **rational_to_dict(s.f),
                "degree": s.degree,
                "parameter": {
                    "regime": s.parameter.regime,
                    "alpha": cx_list(s.parameter.alpha),
                    "beta": cx_list(s.parameter.beta),
                },
                "diagnostics": report_to_dict(s.report),
            })
        return cls(
            status=result.status,
            gammas=cx_list(result.gammas.gammas),
            hankel_rank_q=result.q,
            theta={"A": cx_list(result.theta.A.coeffs), "B": cx_list(result.theta.B.coeffs)},
            R_column=cx_list(result.R.column),
            solutions=sols,
            reports=list(result.reports),
            request=request.to_dict(),
            config=dict(config),
        )

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "status": self.status,
            "gammas": self.gammas,
            "hankel_rank_q": self.hankel_rank_q,
            "theta": self.theta,
            "R_column": self.R_column,
            "solutions": self.solutions,
            "reports": self.reports,
            "request": self.request,
            "config": self.config,
        }

    @classmethod
    def from_dict(cls, doc) -> "SolveResponse":
        try:
            return cls(**{k: doc[k] for k in (
                "status", "gammas", "hankel_rank_q", "theta", "R_column",
                "solutions", "reports", "request", "config",
            )}, schema_version=doc.get("schema_version", SCHEMA_VERSION))
        except (KeyError, TypeError) as exc:
            raise RequestError(f"malformed solve response: {exc}") from exc
