"""Uniform check records for verification suites and the CLI."""

from __future__ import annotations

import json


def record(
    check,
    inputs,
    lhs,
    rhs,
    tol_abs=None,
    tol_rel=None,
    L=None,
    q0=None,
    trusted_fraction=None,
    seed=None,
    extra=None,
):
    """Build one report entry comparing lhs against rhs.

    Passing requires abs_err <= tol_abs or rel_err <= tol_rel when given;
    exact checks pass tol_abs = 0.
    """
    try:
        abs_err = abs(lhs - rhs)
    except TypeError:
        abs_err = 0.0 if lhs == rhs else float("inf")
    scale = max(abs(rhs), abs(lhs), 1e-300) if isinstance(rhs, (int, float, complex)) else 1
    rel_err = float(abs_err) / float(abs(scale)) if scale else float("inf")
    passed = True
    if tol_abs is not None:
        passed = passed and abs_err <= tol_abs
    if tol_rel is not None:
        passed = passed and rel_err <= tol_rel
    if tol_abs is None and tol_rel is None:
        passed = abs_err == 0
    rec = {
        "check": check,
        "inputs": inputs,
        "lhs": _plain(lhs),
        "rhs": _plain(rhs),
        "abs_err": float(abs_err),
        "rel_err": float(rel_err),
        "L": L,
        "q0": _plain(q0),
        "trusted_fraction": trusted_fraction,
        "seed": seed,
        "passed": bool(passed),
    }
    if extra:
        rec.update(extra)
    return rec


def _plain(v):
    if v is None or isinstance(v, (int, float, bool, str)):
        return v
    if isinstance(v, complex):
        return [v.real, v.imag]
    return str(v)


def to_jsonl(records) -> str:
    return "\n".join(json.dumps(r, sort_keys=True) for r in records)


def all_passed(records) -> bool:
    return all(r["passed"] for r in records)
