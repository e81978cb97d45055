"""Command-line front end.

Every command produces one JSON-serialisable payload; the exit status is
derived from the verdicts it contains (0 all pass, 1 some verdict failed,
2 some hypothesis failed, 64 usage error).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from . import __version__
from .characters import all_characters, char_eval, coprime_residues, unit_group
from .cotangent import cotan_norm
from .cyclotomic import field_name, numeric_eval, render
from .numerics import cot_derivative_numeric, dirichlet_L, hurwitz_zeta, to_decimal
from .spaces import (
    DEFAULT_MAX_PHI,
    THEOREMS,
    DeskScaleError,
    dim_vplus,
    intersection_dim,
    kernel_of_sum_map,
    sum_space_rank,
    verify_theorem,
    vplus_indexed,
)
from .suites import SUITE_NAMES, default_jobs, run_suite

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_HYPOTHESIS = 2
EXIT_USAGE = 64

FORMATS = ("json", "csv", "text")
NUMERIC_FNS = ("hurwitz", "L", "cot")


class UsageError(Exception):
    pass


# Parameter kinds and how they travel through argv.
def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _grid(text: str) -> list[list[int]]:
    return [_int_list(row) for row in text.split(";")]


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational like 1/3, got {text!r}")


_PARSE = {"int": int, "ints": _int_list, "grid": _grid, "rational": _rational, "str": str}
_FORMAT = {
    "int": str,
    "ints": lambda v: ",".join(map(str, v)),
    "grid": lambda v: ";".join(",".join(map(str, row)) for row in v),
    "rational": str,
    "str": str,
}

# command -> ordered (name, kind, required); a name starting with "@" is positional
COMMANDS: dict[str, list[tuple[str, str, bool]]] = {
    "cot": [("k", "int", True), ("a", "int", True), ("q", "int", True)],
    "chars": [("q", "int", True)],
    "gens": [("k", "int", True), ("q", "int", True)],
    "rank": [("k", "int", True), ("q", "ints", True), ("m", "int", False)],
    "kernel": [("k", "int", True), ("q", "ints", True)],
    "intersect": [("k", "int", True), ("q1", "int", True), ("q2", "int", True)],
    "verify": [
        ("@theorem", "str", True),
        ("k", "int", False),
        ("q", "ints", False),
        ("m", "int", False),
        ("ks", "ints", False),
        ("grid", "grid", False),
        ("q1", "int", False),
        ("q2", "int", False),
    ],
    "suite": [("@name", "str", True)],
    "numeric": [
        ("@fn", "str", True),
        ("k", "int", True),
        ("x", "rational", False),
        ("a", "int", False),
        ("q", "int", False),
        ("char", "int", False),
    ],
}

_CHOICES = {("verify", "@theorem"): sorted(THEOREMS), ("suite", "@name"): SUITE_NAMES, ("numeric", "@fn"): list(NUMERIC_FNS)}


@dataclass
class RunConfig:
    command: str
    params: dict = field(default_factory=dict)
    precision: int = 256
    fmt: str = "json"
    jobs: int | None = None
    max_phi: int = DEFAULT_MAX_PHI

    def to_argv(self) -> list[str]:
        argv = ["--precision", str(self.precision), "--format", self.fmt, "--max-phi", str(self.max_phi)]
        if self.jobs is not None:
            argv += ["--jobs", str(self.jobs)]
        argv.append(self.command)
        for name, kind, _ in COMMANDS[self.command]:
            key = name.lstrip("@")
            if key not in self.params:
                continue
            text = _FORMAT[kind](self.params[key])
            argv += [text] if name.startswith("@") else [f"--{key}", text]
        return argv

    @property
    def effective_jobs(self) -> int:
        return self.jobs if self.jobs is not None else default_jobs()


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _global_flags(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--precision", type=int, default=d(256), help="working precision in bits")
    p.add_argument("--format", dest="fmt", choices=FORMATS, default=d("json"))
    p.add_argument("--jobs", type=int, default=d(None), help="parallel workers (default: all cores)")
    p.add_argument("--max-phi", dest="max_phi", type=int, default=d(DEFAULT_MAX_PHI))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cmverify", description="Exact checks on cotangent values and their spans.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for cmd, fields in COMMANDS.items():
        sp = sub.add_parser(cmd)
        # global flags are also accepted after the command name
        _global_flags(sp, suppress=True)
        for name, kind, required in fields:
            if name.startswith("@"):
                sp.add_argument(name[1:], type=_PARSE[kind], choices=_CHOICES.get((cmd, name)))
            else:
                sp.add_argument(f"--{name}", type=_PARSE[kind], required=required, default=argparse.SUPPRESS)
    return parser


def parse_config(argv: list[str]) -> RunConfig:
    ns = vars(build_parser().parse_args(argv))
    command = ns.pop("command")
    cfg = RunConfig(command, precision=ns.pop("precision"), fmt=ns.pop("fmt"), jobs=ns.pop("jobs"), max_phi=ns.pop("max_phi"))
    cfg.params = {name.lstrip("@"): ns[name.lstrip("@")] for name, _, _ in COMMANDS[command] if name.lstrip("@") in ns}
    validate(cfg)
    return cfg


def validate(cfg: RunConfig) -> None:
    """Reject inconsistent parameter combinations before any computation."""
    if cfg.precision < 53:
        raise UsageError("--precision must be at least 53 bits")
    if cfg.jobs is not None and cfg.jobs < 1:
        raise UsageError("--jobs must be positive")
    if cfg.max_phi < 1:
        raise UsageError("--max-phi must be positive")
    p = cfg.params
    if cfg.fmt == "csv" and cfg.command != "suite":
        raise UsageError("csv output is only available for suite summaries")
    if "k" in p and p["k"] < 1:
        raise UsageError("--k must be >= 1")
    if cfg.command == "verify":
        _theorem_params(p)
    if cfg.command == "numeric":
        need = {"hurwitz": ("x",), "L": ("q", "char"), "cot": ("a", "q")}[p["fn"]]
        missing = [n for n in need if n not in p]
        if missing:
            raise UsageError(f"numeric {p['fn']} needs --{' --'.join(missing)}")


_SCALAR = ("okada",)
_MODULI = ("cor1", "cor3", "prop1", "propinter", "thm1", "thm2")


def _theorem_params(p: dict) -> dict:
    t = p["theorem"]

    def need(*names):
        missing = [n for n in names if n not in p]
        if missing:
            raise UsageError(f"verify {t} needs --{' --'.join(missing)}")

    if t in _SCALAR:
        need("k", "q")
        if len(p["q"]) != 1:
            raise UsageError(f"verify {t} takes a single modulus")
        return {"k": p["k"], "q": p["q"][0]}
    if t in _MODULI:
        need("k", "q")
        out = {"k": p["k"], "moduli": p["q"]}
        if "m" in p:
            out["m"] = p["m"]
        return out
    if t == "leminter":
        need("k", "q1", "q2")
        return {"k": p["k"], "q1": p["q1"], "q2": p["q2"]}
    need("ks", "grid")
    if t == "thm10":
        if len(p["ks"]) != len(p["grid"]):
            raise UsageError("thm10 needs one weight per row of --grid")
        return {"ks": p["ks"], "factor_moduli": p["grid"]}
    if len(p["ks"]) != len(p["grid"][0]) or any(len(r) != len(p["grid"][0]) for r in p["grid"]):
        raise UsageError("--grid rows must all have one entry per weight in --ks")
    return {"ks": p["ks"], "grid": p["grid"]}


# ---------------------------------------------------------------------------
# command bodies; each returns a payload dict
# ---------------------------------------------------------------------------


def _complex_str(z, digits: int) -> str:
    z = mpmath.mpc(z)
    if z.imag == 0:
        return to_decimal(z.real, digits)
    if z.real == 0:
        return to_decimal(z.imag, digits) + "*i"
    sign = "-" if z.imag < 0 else "+"
    return f"{to_decimal(z.real, digits)} {sign} {to_decimal(abs(z.imag), digits)}*i"


def _cmd_cot(cfg: RunConfig) -> dict:
    k, a, q = (cfg.params[n] for n in ("k", "a", "q"))
    v = cotan_norm(k, a, q)
    with mpmath.workprec(cfg.precision):
        exact = numeric_eval(v.value, cfg.precision)
        analytic = mpmath.j**k * cot_derivative_numeric(k, a, q, cfg.precision).value
        residual = abs(exact - analytic)
        ok = residual < mpmath.mpf(2) ** (-(cfg.precision - 32))
        digits = max(10, cfg.precision // 4)
        return {
            "k": k,
            "a": v.a,
            "q": q,
            "field": field_name(q),
            "value": render(v.value),
            "numeric": {
                "exact_eval": _complex_str(exact, digits),
                "analytic": _complex_str(analytic, digits),
                "residual": mpmath.nstr(residual, 6),
            },
            "verdict": "pass" if ok and v.check_invariants() else "fail",
        }


def _cmd_chars(cfg: RunConfig) -> dict:
    q = cfg.params["q"]
    group = unit_group(q)
    units = coprime_residues(q)
    chars = []
    for chi in all_characters(q):
        chars.append(
            {
                "label": chi.label(),
                "order": chi.order,
                "parity": chi.parity,
                "values": {str(a): render(char_eval(chi, a)) for a in units},
            }
        )
    return {
        "q": q,
        "generators": [{"residue": g.residue, "order": g.order} for g in group.generators],
        "characters": chars,
    }


def _cmd_gens(cfg: RunConfig) -> dict:
    k, q = cfg.params["k"], cfg.params["q"]
    items = vplus_indexed(k, q)
    return {
        "k": k,
        "q": q,
        "dim": dim_vplus(k, q),
        "generators": [{"a": a, "label": lab, "value": render(v)} for a, lab, v in items],
    }


def _cmd_rank(cfg: RunConfig) -> dict:
    p = cfg.params
    return sum_space_rank(p["k"], p["q"], p.get("m", 1), cfg.max_phi).to_dict()


def _cmd_kernel(cfg: RunConfig) -> dict:
    return kernel_of_sum_map(cfg.params["k"], cfg.params["q"], cfg.max_phi).to_dict()


def _cmd_intersect(cfg: RunConfig) -> dict:
    p = cfg.params
    return intersection_dim(p["k"], p["q1"], p["q2"], cfg.max_phi).to_dict()


def _cmd_verify(cfg: RunConfig) -> dict:
    return verify_theorem(cfg.params["theorem"], _theorem_params(cfg.params), cfg.max_phi).to_dict()


def _cmd_suite(cfg: RunConfig) -> dict:
    return run_suite(cfg.params["name"], cfg.effective_jobs, cfg.precision, cfg.max_phi)


def _cmd_numeric(cfg: RunConfig) -> dict:
    p = cfg.params
    fn, k = p["fn"], p["k"]
    if fn == "hurwitz":
        r = hurwitz_zeta(k, p["x"], cfg.precision)
        params = {"k": k, "x": str(p["x"])}
    elif fn == "L":
        chars = all_characters(p["q"])
        if not 0 <= p["char"] < len(chars):
            raise UsageError(f"--char must be in 0..{len(chars) - 1}")
        chi = chars[p["char"]]
        r = dirichlet_L(k, chi, cfg.precision)
        params = {"k": k, "q": p["q"], "char": chi.label()}
    else:
        r = cot_derivative_numeric(k, p["a"], p["q"], cfg.precision)
        params = {"k": k, "a": p["a"], "q": p["q"]}
    digits = r.digits
    with mpmath.workprec(cfg.precision + 8):
        return {
            "fn": fn,
            "params": params,
            "precision": cfg.precision,
            "value": _complex_str(r.value, max(digits, 1)),
            "error_bound": mpmath.nstr(r.error, 6),
            "digits": digits,
        }


HANDLERS = {
    "cot": _cmd_cot,
    "chars": _cmd_chars,
    "gens": _cmd_gens,
    "rank": _cmd_rank,
    "kernel": _cmd_kernel,
    "intersect": _cmd_intersect,
    "verify": _cmd_verify,
    "suite": _cmd_suite,
    "numeric": _cmd_numeric,
}


def execute(cfg: RunConfig) -> dict:
    try:
        return HANDLERS[cfg.command](cfg)
    except DeskScaleError as exc:
        raise UsageError(str(exc)) from exc
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def verdicts(payload: dict) -> list[str]:
    if "reports" in payload:
        return [r["verdict"] for r in payload["reports"]]
    return [payload["verdict"]] if "verdict" in payload else []


def exit_status(payload: dict) -> int:
    vs = verdicts(payload)
    if "fail" in vs:
        return EXIT_FAILED
    if "hypothesis-failed" in vs:
        return EXIT_HYPOTHESIS
    return EXIT_OK


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def to_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False)


def to_csv(payload: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["case", "params", "expected", "computed", "verdict"])
    for r in payload["reports"]:
        w.writerow(
            [
                r.get("theorem", r.get("kind")),
                json.dumps(r["params"], separators=(",", ":")),
                r.get("expected", ""),
                r.get("computed", r.get("residual", "")),
                r["verdict"],
            ]
        )
    return buf.getvalue()


def _text_line(r: dict) -> str:
    name = r.get("theorem", r.get("kind"))
    params = json.dumps(r["params"], separators=(",", ":"))
    parts = [r["verdict"].upper(), name, params]
    if "expected" in r:
        parts.append(f"expected={r['expected']} computed={r['computed']}")
    elif "residual" in r:
        parts.append(f"residual={r['residual']}")
    return " ".join(parts)


def to_text(payload: dict) -> str:
    if "reports" in payload:
        lines = [_text_line(r) for r in payload["reports"]]
        lines.append(
            f"suite {payload['suite']}: {payload['cases']} cases, {payload['passed']} passed, "
            f"{payload['failed']} failed, {payload['hypothesis_failed']} hypothesis-failed"
        )
        return "\n".join(lines) + "\n"
    lines = []
    for key, val in payload.items():
        if isinstance(val, (dict, list)):
            val = json.dumps(val, separators=(",", ":"), ensure_ascii=False)
        lines.append(f"{key}: {val}")
    return "\n".join(lines) + "\n"


RENDERERS = {"json": lambda p: to_json(p) + "\n", "csv": to_csv, "text": to_text}


def run(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    payload = execute(cfg)
    out.write(RENDERERS[cfg.fmt](payload))
    return exit_status(payload)


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_config(argv)
        return run(cfg)
    except UsageError as exc:
        print(f"cmverify: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
