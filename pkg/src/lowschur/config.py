"""Numerical tolerances shared by every stage of the solver."""

from __future__ import annotations

from dataclasses import asdict, dataclass, fields, replace


@dataclass(frozen=True)
class Tolerances:
    """All tolerance knobs in one place.

    The defaults are tuned for desk-scale problems (n <= 16, |gamma| <= 0.9).
    Every command echoes the effective values into its output.
    """

    zero_tol: float = 1e-12
    root_match_tol: float = 1e-8
    rank_tol: float = 1e-10
    strict_tol: float = 1e-9
    psd_tol: float = 1e-10
    backward_tol: float = 1e-8
    det_tol: float = 1e-10
    taylor_tol: float = 1e-9
    schur_tol: float = 1e-8
    pole_margin: float = 1e-8
    grid: int = 4096
    bisect_tol: float = 1e-9
    roundtrip_tol: float = 1e-7
    safety_factor: float = 1.01

    def replace(self, **changes) -> "Tolerances":
        return replace(self, **changes)

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "Tolerances":
        known = {f.name: f.type for f in fields(cls)}
        unknown = set(data) - set(known)
        if unknown:
            raise ValueError(f"unknown tolerance keys: {sorted(unknown)}")
        kw = {}
        for key, value in data.items():
            kw[key] = int(value) if key == "grid" else float(value)
        if kw.get("grid", cls.grid) < 8:
            raise ValueError("grid must have at least 8 points")
        return cls(**kw)


DEFAULT = Tolerances()
