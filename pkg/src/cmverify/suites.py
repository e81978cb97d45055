"""Desk-scale parameter grids and the batteries that run them."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from math import gcd

import mpmath

from .characters import all_characters, char_matrix, full_unit_char_sum, orthogonality_defect
from .cotangent import cotan_norm, cotan_via_operator, full_unit_sum, trace_closed_form
from .numerics import bridge_residual, dirichlet_L
from .spaces import DEFAULT_MAX_PHI, verify_theorem

COR1_TUPLES = [(3, 4), (3, 5), (4, 5), (5, 7), (3, 4, 5), (5, 7, 8), (3, 4, 5, 7)]
COR1_KS = [2, 3, 4, 5]
PRODUCT_GRID = [[3, 4], [5, 7]]
PRODUCT_KBARS = [[2, 2], [2, 3], [3, 3]]
LEMINTER_CASES = [(3, 5, 7), (2, 5, 7), (3, 12, 18), (2, 12, 18)]


def okada_cases():
    return [("okada", {"k": k, "q": q}) for q in range(3, 31) for k in range(1, 6)]


def cor1_cases():
    return [("cor1", {"k": k, "moduli": list(t)}) for t in COR1_TUPLES for k in COR1_KS]


def kernel_cases():
    cases = [("propinter", {"k": k, "moduli": list(t)}) for t in COR1_TUPLES for k in COR1_KS]
    cases += [("propinterm", {"ks": ks, "grid": PRODUCT_GRID}) for ks in PRODUCT_KBARS]
    return cases


def product_cases():
    cases = [("thm9", {"ks": ks, "grid": PRODUCT_GRID}) for ks in PRODUCT_KBARS]
    cases += [("coha", {"ks": ks, "grid": PRODUCT_GRID}) for ks in PRODUCT_KBARS]
    cases += [("leminterm", {"ks": ks, "grid": PRODUCT_GRID}) for ks in PRODUCT_KBARS]
    cases.append(("thm10", {"ks": [3, 2], "factor_moduli": [[3, 5], [4]]}))
    return cases


def theorem_cases():
    cases = [("leminter", {"k": k, "q1": a, "q2": b}) for k, a, b in LEMINTER_CASES]
    for moduli in ([3, 4], [3, 5]):
        cases.append(("thm1", {"k": 1, "moduli": moduli}))
        cases.append(("thm2", {"k": 1, "moduli": moduli}))
    cases += [("prop1", {"k": k, "moduli": [3, 4, 5]}) for k in COR1_KS]
    cases += [("cor3", {"k": k, "moduli": [3, 4, 5]}) for k in COR1_KS]
    return cases


THEOREM_SUITES = {
    "okada": okada_cases,
    "cor1": cor1_cases,
    "kernels": kernel_cases,
    "products": product_cases,
    "theorems": theorem_cases,
}


def _run_case(args) -> dict:
    theorem, params, max_phi = args
    return verify_theorem(theorem, params, max_phi).to_dict()


def run_cases(cases, jobs: int = 1, max_phi: int = DEFAULT_MAX_PHI) -> list[dict]:
    """Run (theorem, params) cases; output order follows ``cases`` for any ``jobs``."""
    work = [(t, p, max_phi) for t, p in cases]
    if jobs <= 1 or len(work) < 2:
        return [_run_case(w) for w in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_case, work))


# ---------------------------------------------------------------------------
# non-rank batteries: numerics bridge, traces, characters, route agreement
# ---------------------------------------------------------------------------


def bridge_tolerance_bits(precision: int) -> int:
    # 2^-200 at 256 bits; scales with the working precision
    return precision - 56


def bridge_cases(max_q: int = 12, max_k: int = 5):
    cases = []
    for q in range(3, max_q + 1):
        for k in range(1, max_k + 1):
            for a in range(1, q):
                if gcd(a, q) != 1:
                    continue
                if k >= 2:
                    cases.append(("reflection", {"k": k, "a": a, "q": q}))
                cases.append(("rep", {"k": k, "a": a, "q": q}))
            if k >= 2:
                for i, chi in enumerate(all_characters(q)):
                    if chi.parity == (-1) ** k:
                        cases.append(("l-value", {"k": k, "q": q, "char_index": i}))
    return cases


def _run_bridge(args) -> dict:
    kind, params, precision = args
    p = dict(params)
    if kind == "l-value":
        p["chi"] = all_characters(params["q"])[params["char_index"]]
    res = bridge_residual(kind, p, precision)
    tol = mpmath.mpf(2) ** (-bridge_tolerance_bits(precision))
    log2 = None if res == 0 else int(mpmath.floor(mpmath.log(res, 2)))
    return {
        "kind": kind,
        "params": params,
        "residual": mpmath.nstr(res, 6),
        "log2_residual": log2,
        "tolerance_log2": -bridge_tolerance_bits(precision),
        "verdict": "pass" if res < tol else "fail",
    }


def run_bridge(precision: int = 256, jobs: int = 1, max_q: int = 12, max_k: int = 5) -> list[dict]:
    work = [(kind, p, precision) for kind, p in bridge_cases(max_q, max_k)]
    if jobs <= 1:
        return [_run_bridge(w) for w in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_bridge, work))


def catalan_digits(precision: int = 256) -> int:
    """Number of matching decimal digits between L(2, chi_4) and Catalan's constant."""
    chi = all_characters(4)[1]
    with mpmath.workprec(precision + 64):
        diff = abs(dirichlet_L(2, chi, precision).value - mpmath.catalan)
        return 10**6 if diff == 0 else int(mpmath.floor(-mpmath.log10(diff)))


def trace_reports(max_k: int = 8, max_q: int = 30) -> list[dict]:
    out = []
    for k in range(2, max_k + 1, 2):
        for q in range(3, max_q + 1):
            got = full_unit_sum(k, q)
            want = trace_closed_form(k, q)
            out.append(
                {
                    "kind": "trace",
                    "params": {"k": k, "q": q},
                    "computed": str(got),
                    "expected": str(want),
                    "verdict": "pass" if got == want else "fail",
                }
            )
    return out


def character_reports(max_q: int = 30, parity_k=(1, 2, 3, 4)) -> list[dict]:
    out = []
    for q in range(1, max_q + 1):
        bad = orthogonality_defect(q)
        try:
            char_matrix(q)
            inverse_ok = True
        except AssertionError:
            inverse_ok = False
        vanish_ok = True
        if q > 2:
            for k in parity_k:
                for chi in all_characters(q):
                    if chi.parity != (-1) ** k and not full_unit_char_sum(k, chi).is_zero():
                        vanish_ok = False
        ok = not bad and inverse_ok and vanish_ok
        out.append(
            {
                "kind": "characters",
                "params": {"q": q},
                "orthogonality": not bad,
                "inverse": inverse_ok,
                "parity_vanishing": vanish_ok,
                "verdict": "pass" if ok else "fail",
            }
        )
    return out


def route_reports(max_q: int = 20, max_k: int = 6) -> list[dict]:
    out = []
    for q in range(3, max_q + 1):
        mismatches = []
        for k in range(1, max_k + 1):
            for a in range(1, q):
                if gcd(a, q) == 1 and cotan_norm(k, a, q).value != cotan_via_operator(k, a, q).value:
                    mismatches.append([k, a])
        out.append(
            {
                "kind": "routes",
                "params": {"q": q, "max_k": max_k},
                "mismatches": mismatches,
                "verdict": "fail" if mismatches else "pass",
            }
        )
    return out


SUITE_NAMES = sorted(list(THEOREM_SUITES) + ["numerics-bridge", "traces", "characters", "routes"])


def run_suite(name: str, jobs: int = 1, precision: int = 256, max_phi: int = DEFAULT_MAX_PHI) -> dict:
    if name in THEOREM_SUITES:
        reports = run_cases(THEOREM_SUITES[name](), jobs, max_phi)
    elif name == "numerics-bridge":
        reports = run_bridge(precision, jobs)
        worst = {}
        for r in reports:
            if r["log2_residual"] is not None:
                worst[r["kind"]] = max(worst.get(r["kind"], -10**9), r["log2_residual"])
        summary = _summarize(name, reports)
        summary["max_log2_residual"] = worst
        summary["catalan_digits"] = catalan_digits(precision)
        return summary
    elif name == "traces":
        reports = trace_reports()
    elif name == "characters":
        reports = character_reports()
    elif name == "routes":
        reports = route_reports()
    else:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITE_NAMES}")
    return _summarize(name, reports)


def _summarize(name: str, reports: list[dict]) -> dict:
    counts = {"pass": 0, "fail": 0, "hypothesis-failed": 0}
    for r in reports:
        counts[r["verdict"]] += 1
    return {
        "suite": name,
        "cases": len(reports),
        "passed": counts["pass"],
        "failed": counts["fail"],
        "hypothesis_failed": counts["hypothesis-failed"],
        "reports": reports,
    }


def default_jobs() -> int:
    return os.cpu_count() or 1


__all__ = [
    "COR1_TUPLES",
    "SUITE_NAMES",
    "run_suite",
    "run_cases",
    "okada_cases",
    "cor1_cases",
    "kernel_cases",
    "product_cases",
    "theorem_cases",
    "catalan_digits",
]
