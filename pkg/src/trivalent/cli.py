"""Command-line front end.

Exit codes: 0 for a valid inference (or a passing check), 1 for an invalid one,
2 for usage, parse and file errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import algebra, props, sequent, tableau
from .errors import TrivalentError
from .semantics import (Conditional, Connectives, Inference, LogicConfig, ValidityScheme, WorldDistribution,
                        assertability, coerce_value, entails, evaluate)
from .syntax import parse

SCHEMA = 1
VIAS = ("semantic", "tableau", "sequent")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    logic: LogicConfig
    scheme: ValidityScheme
    calculus: str
    output: str
    max_atoms: int
    max_premises: int

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        try:
            logic = LogicConfig(Conditional.parse(args.logic), Connectives.parse(args.conn))
            scheme = ValidityScheme.parse(args.scheme)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        return cls(logic, scheme, args.via, "json" if args.json else "text", args.max_atoms, args.max_premises)

    def proof_logic(self) -> Conditional:
        """The calculi exist for DF and CC with Kleene connectives under TT only."""
        if self.scheme is not ValidityScheme.TT:
            raise UsageError(f"--via {self.calculus} decides TT-validity only, not {self.scheme}")
        try:
            return tableau.calculus_logic(self.logic)
        except ValueError as exc:
            raise UsageError(str(exc)) from None


def _valuation_text(v: dict) -> str:
    return ", ".join(f"{k}={val}" for k, val in v.items())


def _valuation_json(v: dict | None) -> dict | None:
    return None if v is None else {k: str(val) for k, val in v.items()}


def _emit(cfg: RunConfig, payload: dict, text: str) -> None:
    if cfg.output == "json":
        print(json.dumps({"schema": SCHEMA, **payload}, ensure_ascii=False, indent=2))
    else:
        print(text)


def _parse_assignment(text: str | None) -> dict:
    out = {}
    for pair in (text or "").split(","):
        pair = pair.strip()
        if not pair:
            continue
        name, sep, value = pair.partition("=")
        if not sep or not name.strip():
            raise UsageError(f"bad assignment {pair!r}; expected name=value")
        try:
            out[name.strip()] = coerce_value(value.strip())
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return out


# ---------------------------------------------------------------- commands

def cmd_eval(args, cfg: RunConfig) -> int:
    f = parse(args.formula)
    value = evaluate(f, _parse_assignment(args.assign), cfg.logic)
    _emit(cfg, {"formula": str(f), "logic": str(cfg.logic), "value": str(value)}, str(value))
    return 0


def cmd_valid(args, cfg: RunConfig) -> int:
    if not args.conclusion:
        raise UsageError("give at least one conclusion with -c")
    inf = Inference(args.premise or [], args.conclusion)
    base = {"inference": str(inf), "logic": str(cfg.logic), "scheme": str(cfg.scheme), "via": cfg.calculus}
    if cfg.calculus == "semantic":
        verdict = entails(inf, cfg.logic, cfg.scheme, max_atoms=cfg.max_atoms)
        valid, countermodel, proof, proof_text = verdict.valid, verdict.countermodel, None, ""
    elif cfg.calculus == "tableau":
        if len(inf.conclusions) != 1:
            raise UsageError("the tableau calculus takes exactly one conclusion")
        result = tableau.deduce(inf.premises, inf.conclusions[0], cfg.proof_logic(), max_premises=cfg.max_premises)
        valid, countermodel = result.derivable, result.countermodel
        proof = [tableau.tableau_to_json(t) for t in result.tableaux]
        proof_text = "\n\n".join(tableau.render_tableau(t) for t in result.tableaux)
    else:
        outcome = sequent.derives(inf.premises, inf.conclusions, cfg.proof_logic())
        if outcome:
            valid, countermodel = True, None
            proof, proof_text = sequent.derivation_to_json(outcome), sequent.render_derivation(outcome)
        else:
            valid, countermodel, proof, proof_text = False, outcome.valuation, None, ""
    lines = ["valid" if valid else "invalid"]
    if countermodel is not None:
        lines.append(f"countermodel: {_valuation_text(countermodel)}")
    if args.show_proof and proof_text:
        lines.append(proof_text)
    elif valid and cfg.calculus == "sequent":
        lines.append(proof_text)
    payload = {**base, "valid": valid, "countermodel": _valuation_json(countermodel)}
    if proof is not None:
        payload["proof"] = proof
    _emit(cfg, payload, "\n".join(lines))
    return 0 if valid else 1


def cmd_tableau(args, cfg: RunConfig) -> int:
    logic = cfg.proof_logic()
    if args.label:
        try:
            labels = [tableau.Label.parse(text) for text in args.label]
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        t = tableau.build_tableau(labels, logic)
        _emit(cfg, tableau.tableau_to_json(t), tableau.render_tableau(t) + ("\nclosed" if t.closed else "\nopen"))
        return 0 if t.closed else 1
    if args.conclusion is None:
        raise UsageError("give root labels with --label, or an inference with -p/-c")
    result = tableau.deduce(args.premise or [], args.conclusion, logic, max_premises=cfg.max_premises)
    text = "\n\n".join(tableau.render_tableau(t) for t in result.tableaux)
    text += "\n" + ("derivable" if result else f"not derivable\ncountermodel: {_valuation_text(result.countermodel)}")
    _emit(cfg, {"logic": logic.value, "derivable": result.derivable,
                "tableaux": [tableau.tableau_to_json(t) for t in result.tableaux],
                "countermodel": _valuation_json(result.countermodel)}, text)
    return 0 if result else 1


def cmd_sequent(args, cfg: RunConfig) -> int:
    logic = cfg.proof_logic()
    try:
        s = sequent.ThreeSidedSequent.parse(args.sequent, args.sep)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    outcome = sequent.search(s, logic, and_half=args.and_half)
    if outcome:
        _emit(cfg, {"derivable": True, "derivation": sequent.derivation_to_json(outcome)},
              sequent.render_derivation(outcome) + "\nderivable")
        return 0
    _emit(cfg, {"derivable": False, "countermodel": _valuation_json(outcome.valuation),
                "branch": [str(x) for x in outcome.branch]},
          f"not derivable\ncountermodel: {_valuation_text(outcome.valuation)}")
    return 1


def cmd_props(args, cfg: RunConfig) -> int:
    if cfg.output == "json":
        matrices = [props.trilemma_matrix(), props.commutation_matrix(), props.checklist_matrix()]
        _emit(cfg, {"matrices": [m.to_json() for m in matrices]}, "")
    else:
        sys.stdout.write(props.render_all())
    return 0


def cmd_algebra(args, cfg: RunConfig) -> int:
    a = algebra.FiniteAlgebra.from_file(args.file)
    try:
        report = algebra.check_class(a, args.cls)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    lines = [f"{report.algebra}: {report.requested} {'pass' if report.holds else 'FAIL'}"]
    lines += [f"  {r}" for r in report.results]
    if report.filter is not None:
        lines.append("filter {" + ", ".join(report.filter) + "}")
    payload = {
        "algebra": report.algebra, "class": report.requested, "holds": report.holds,
        "filter": None if report.filter is None else list(report.filter), "half": report.half,
        "axioms": [{"class": r.cls, "axiom": r.axiom, "holds": r.holds,
                    "counterexample": None if r.counterexample is None else list(r.counterexample), "note": r.note}
                   for r in report.results],
    }
    _emit(cfg, payload, "\n".join(lines))
    return 0 if report.holds else 1


def cmd_assert(args, cfg: RunConfig) -> int:
    dist = WorldDistribution.from_file(args.distribution)
    value = assertability(parse(args.formula), dist, cfg.logic)
    shown = format(float(value), ".12g")
    payload = {"formula": args.formula, "logic": str(cfg.logic), "assertability": float(value)}
    if isinstance(value, Fraction):
        payload["exact"] = str(value)
    _emit(cfg, payload, shown)
    return 0


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--logic", default="df", help="conditional: df, cc, f, j1, j2, mat (default df)")
    common.add_argument("--conn", default="kleene", help="connective suite: kleene or cooper (default kleene)")
    common.add_argument("--scheme", default="TT", help="validity scheme: SS, TT, ST, TS, SSandTT (default TT)")
    common.add_argument("--via", default="semantic", choices=VIAS, help="decision procedure (default semantic)")
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--max-atoms", type=int, default=12)
    common.add_argument("--max-premises", type=int, default=16)

    parser = argparse.ArgumentParser(prog="trivalent", description="Trivalent conditional logics.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate a formula")
    p.add_argument("formula")
    p.add_argument("--assign", nargs="?", const="", default="", help="e.g. p=1,q=0.5")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("valid", parents=[common], help="decide an inference")
    p.add_argument("-p", "--premise", action="append")
    p.add_argument("-c", "--conclusion", action="append")
    p.add_argument("--show-proof", action="store_true", help="print tableaux or the derivation")
    p.set_defaults(func=cmd_valid)

    p = sub.add_parser("tableau", parents=[common], help="print tableaux")
    p.add_argument("-p", "--premise", action="append")
    p.add_argument("-c", "--conclusion")
    p.add_argument("--label", action="append", help="root label 'formula:value'; repeatable")
    p.set_defaults(func=cmd_tableau)

    p = sub.add_parser("sequent", parents=[common], help="search a three-sided sequent")
    p.add_argument("sequent", help="'gamma ; delta ; sigma' with comma-separated formulas")
    p.add_argument("--sep", default=";", help="position separator (default ';')")
    p.add_argument("--and-half", default="invertible", choices=sequent.AND_HALF_RULES)
    p.set_defaults(func=cmd_sequent)

    p = sub.add_parser("props", parents=[common], help="print the validity matrices")
    p.set_defaults(func=cmd_props)

    p = sub.add_parser("algebra", help="finite algebra tools")
    algebra_sub = p.add_subparsers(dest="algebra_command", required=True)
    q = algebra_sub.add_parser("check", parents=[common], help="check a class's axioms")
    q.add_argument("file")
    q.add_argument("--class", dest="cls", default="DeFinetti", help=", ".join(algebra.CLASSES))
    q.set_defaults(func=cmd_algebra)

    p = sub.add_parser("assert", parents=[common], help="assertability under a world distribution")
    p.add_argument("formula")
    p.add_argument("distribution")
    p.set_defaults(func=cmd_assert)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig.from_args(args)
        return args.func(args, cfg)
    except UsageError as exc:
        parser.error(str(exc))  # exits with status 2
    except (TrivalentError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
