"""Command-line front end: one subcommand per public operation, JSON on stdout.

Exit codes: 0 on success, 1 on usage errors (usage text on stderr), 2 on
domain errors (``{"error": ...}`` on stdout).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import __version__
from ._arith import DomainError, frac_str
from .charmod import UnitCharacter, char_from_dict, char_to_dict, gauss_sum, quadratic_padic
from .monomial import monomial_spacing, monomial_to_dict
from .multiplicity import density, gamma1_multiplicity, multiplicity_bound, n0_prediction
from .oracle import exhaustive_twist_audit
from .replocal import classify_conductor_one, rep_from_dict, rep_to_dict, twist, twist_to_dict
from .similarity import enumerate_classes, inventory_to_dict, newform_weyl_constant

SCHEMA = "quadtwist/1"


@dataclass
class CommandResult:
    command: str
    inputs: dict
    outputs: dict
    citations: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"schema": SCHEMA, "command": self.command, "inputs": self.inputs,
                **self.outputs, "citations": self.citations}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _json_arg(text: str) -> dict:
    try:
        value = json.loads(text)
    except json.JSONDecodeError as exc:
        raise argparse.ArgumentTypeError(f"invalid JSON: {exc}") from None
    if not isinstance(value, dict):
        raise argparse.ArgumentTypeError("expected a JSON object")
    return value


def _cmd_density(a):
    r = density(a.q, a.qprime)
    return {"q": a.q, "qprime": a.qprime}, r.to_dict(), [
        "quadratic-twist density theorem for Maass newforms",
        "holomorphic analogue: same density as the weight grows",
    ]


def _cmd_multiplicity(a):
    r = multiplicity_bound(a.q)
    return {"q": a.q}, r.to_dict(), ["multiplicity corollary: 2^s(q) with product density"]


def _cmd_n0(a):
    r = n0_prediction(a.q)
    return {"q": a.q}, r.to_dict(), ["stability conjecture for Maass newforms"]


def _cmd_gamma1(a):
    value = gamma1_multiplicity(a.p, a.m)
    return {"p": a.p, "m": a.m}, {"multiplicity": value}, [
        "Gamma_1(p^m) multiplicity via primitive characters mod p^floor(m/2)"]


def _cmd_twist(a):
    rep = rep_from_dict(a.rep)
    omega = char_from_dict(a.char) if a.char is not None else quadratic_padic(rep.p)
    res = twist(rep, omega)
    inputs = {"rep": rep_to_dict(rep), "char": char_to_dict(omega)}
    return inputs, twist_to_dict(res), [
        "Atkin-Li conductor bound", "principal series, special and supercuspidal twist rules"]


def _cmd_classify(a):
    reps = classify_conductor_one(a.p)
    return {"p": a.p}, {"reps": [rep_to_dict(r) for r in reps], "count": len(reps)}, [
        "conductor p representations with trivial central character"]


def _cmd_classes(a):
    inv = enumerate_classes(a.p, a.c)
    return {"p": a.p, "c": a.c}, inventory_to_dict(inv), [
        "local Weyl-law constants of similarity classes", "conductor p^2 class census"]


def _cmd_weyl(a):
    const = newform_weyl_constant(a.q)
    return {"q": a.q}, {"constant": frac_str(const)}, [
        "Weyl law for similarity classes, vol = pi/3 over Q"]


def _cmd_gauss_sum(a):
    chi = UnitCharacter(a.p, a.m, a.k)
    tau = gauss_sum(chi)
    modsq = abs(tau) ** 2
    return {"p": a.p, "m": a.m, "k": a.k}, {
        "re": float(f"{tau.real:.12g}"),
        "im": float(f"{tau.imag:.12g}"),
        "abs_squared": float(f"{modsq:.12g}"),
        "expected_abs_squared": a.p ** a.m,
    }, ["Gauss sum in the proof of the Atkin-Li bound"]


def _cmd_monomial(a):
    report = monomial_spacing(a.D)
    if a.T is not None and a.T <= 0:
        raise DomainError("T must be positive")
    if a.cosets < 1:
        raise DomainError("need at least one coset")
    inputs = {"D": a.D, "T": a.T, "cosets": a.cosets}
    return inputs, monomial_to_dict(report, a.T, a.cosets), [
        "unit lattice of a real quadratic field", "linear-in-T monomial count"]


def _cmd_audit(a):
    r = exhaustive_twist_audit(a.p, a.mmax)
    return {"p": a.p, "mmax": a.mmax}, r.to_dict(), [
        "quadratic twist lemmas, checked by brute force"]


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quadtwist", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--pretty", action="store_true", help="indent JSON output")
        sp.set_defaults(func=func)
        return sp

    sp = add("density", _cmd_density, "density of twist-paired newforms")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--qprime", type=int, required=True)
    sp = add("multiplicity", _cmd_multiplicity, "multiplicity lower bound 2^s(q)")
    sp.add_argument("--q", type=int, required=True)
    sp = add("n0", _cmd_n0, "predicted n0 for distinguishing newforms")
    sp.add_argument("--q", type=int, required=True)
    sp = add("gamma1", _cmd_gamma1, "eigenvalue multiplicity on Gamma_1(p^m)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp = add("twist", _cmd_twist, "twist a local representation")
    sp.add_argument("--rep", type=_json_arg, required=True, help="representation JSON")
    sp.add_argument("--char", type=_json_arg, default=None,
                    help="character JSON (default: the ramified quadratic character)")
    sp = add("classify", _cmd_classify, "conductor-p reps with trivial central character")
    sp.add_argument("--p", type=int, required=True)
    sp = add("classes", _cmd_classes, "similarity classes and local constants")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--c", type=int, required=True)
    sp = add("weyl", _cmd_weyl, "Weyl constant for newforms of level q")
    sp.add_argument("--q", type=int, required=True)
    sp = add("gauss-sum", _cmd_gauss_sum, "Gauss sum of a primitive character")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp = add("monomial", _cmd_monomial, "monomial spectral lattice for Q(sqrt D)")
    sp.add_argument("--D", type=int, required=True)
    sp.add_argument("--T", type=float, default=None)
    sp.add_argument("--cosets", type=int, default=1)
    sp = add("audit", _cmd_audit, "brute-force twist audit")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--mmax", type=int, required=True)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    indent = 2 if args.pretty else None
    try:
        inputs, outputs, cites = args.func(args)
    except DomainError as exc:
        print(json.dumps({"schema": SCHEMA, "command": args.command, "error": str(exc)},
                         indent=indent))
        return 2
    result = CommandResult(args.command, inputs, outputs, cites)
    print(json.dumps(result.to_dict(), indent=indent))
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
