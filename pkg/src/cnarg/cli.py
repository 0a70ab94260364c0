"""Command-line front end.

Exit codes: 0 success, 1 divergence between engines, 2 input error,
3 size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from . import generate
from .formula import FormulaSyntaxError, normalize_n, parse_formula, to_text
from .frameworks import (AdfSpec, Af, BipolarAf, DisjAf, FrameworkParseError, HigherAf,
                         JointAf, load, to_apx, validate)
from .models import (SizeCapError, entailment_countermodel, enumerate_models,
                     model_to_labelling)
from .oracle import (OracleSizeError, complete_labellings, disjunctive_labellings,
                     grounded_fixpoint, joint_labellings)
from .reductions import higher_to_joint, joint_to_single
from .states import Label, Labelling
from .translate import (delta_adf, delta_af, delta_bipolar, delta_disjunctive, delta_joint)
from .twoworld import ValiditySizeError, find_countermodel

EXIT_OK, EXIT_DIVERGENCE, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class InputError(Exception):
    pass


@dataclass
class RunReport:
    input: str
    semantics: str
    engine: str
    labellings: list = field(default_factory=list)
    models: list = field(default_factory=list)
    timing_ms: float = 0.0
    divergences: list = field(default_factory=list)

    @property
    def extensions(self) -> list[list[str]]:
        return [sorted(lab.extension, key=lab.universe.index) for lab in self.labellings]

    def to_json(self) -> dict:
        return {
            "input": self.input,
            "semantics": self.semantics,
            "engine": self.engine,
            "models": [m.as_dict() for m in self.models],
            "labellings": [lab.as_dict() for lab in self.labellings],
            "extensions": self.extensions,
            "timing_ms": round(self.timing_ms, 3),
            "divergences": self.divergences,
        }


# ---------------------------------------------------------------------------
# helpers

def _read_framework(path: str, fmt: Optional[str]):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    if fmt is None:
        fmt = "tgf" if path.endswith(".tgf") else "apx"
    try:
        fw = load(text, fmt)
    except (FrameworkParseError, FormulaSyntaxError) as exc:
        raise InputError(f"{path}: {exc}") from exc
    problems = validate(fw)
    if problems:
        raise InputError(f"{path}: " + "; ".join(problems))
    return fw


def _theory(fw, args):
    if isinstance(fw, Af):
        return delta_af(fw)
    if isinstance(fw, JointAf):
        return delta_joint(fw)
    if isinstance(fw, DisjAf):
        return delta_disjunctive(fw, args.reading)
    if isinstance(fw, BipolarAf):
        return delta_bipolar(fw, args.variant)
    if isinstance(fw, AdfSpec):
        return delta_adf(fw)
    if isinstance(fw, HigherAf):
        return delta_joint(higher_to_joint(fw).framework)
    raise InputError(f"unsupported framework {type(fw).__name__}")


def _restrict(labs, fw):
    if isinstance(fw, HigherAf):
        seen = []
        for lab in labs:
            r = lab.restrict(fw.arguments)
            if r not in seen:
                seen.append(r)
        return seen
    return labs


def _cn_complete(fw, args) -> list[Labelling]:
    models = enumerate_models(_theory(fw, args), args.max_atoms)
    return _restrict([model_to_labelling(m) for m in models], fw)


def _oracle_complete(fw, args) -> list[Labelling]:
    if isinstance(fw, Af):
        return complete_labellings(fw)
    if isinstance(fw, JointAf):
        return joint_labellings(fw)
    if isinstance(fw, DisjAf):
        if args.reading == "split":
            raise InputError("the oracle implements the local disjunctive reading only")
        return disjunctive_labellings(fw)
    if isinstance(fw, HigherAf):
        return _restrict(joint_labellings(higher_to_joint(fw).framework), fw)
    raise InputError(f"no labelling oracle for {type(fw).__name__}")


def _select(labs: list[Labelling], semantics: str) -> list[Labelling]:
    if semantics == "complete":
        return labs
    if semantics == "stable":
        return [lab for lab in labs if not lab.with_label(Label.UND)]
    if semantics == "preferred":
        return [lab for lab in labs if not any(lab.extension < o.extension for o in labs)]
    if semantics == "grounded":
        if not labs:
            return []
        common = frozenset.intersection(*(lab.extension for lab in labs))
        return [lab for lab in labs if lab.extension == common][:1]
    raise InputError(f"unknown semantics {semantics!r}")


def _row(lab: Labelling) -> str:
    parts = []
    for state in Label:
        names = [a for a, v in lab.items() if v is state]
        parts.append(f"{state.value}: {' '.join(names) if names else '-'}")
    return "  " + " | ".join(parts)


def _emit(report: RunReport, as_json: bool, title: str):
    if as_json:
        print(json.dumps(report.to_json(), indent=2))
        return
    print(f"{title} ({len(report.labellings) or len(report.models)} found, "
          f"{report.timing_ms:.1f} ms)")
    for lab in report.labellings or report.models:
        print(_row(lab))
    for d in report.divergences:
        print(f"DIVERGENCE: {d}")


# ---------------------------------------------------------------------------
# subcommands

def cmd_extensions(args) -> int:
    fw = _read_framework(args.input, args.format)
    start = time.perf_counter()
    report = RunReport(args.input, args.semantics, args.engine)
    cn = oracle = None
    if args.engine in ("cn", "both"):
        cn = _select(_cn_complete(fw, args), args.semantics)
    if args.engine in ("oracle", "both"):
        if args.semantics == "grounded" and isinstance(fw, Af):
            oracle = [grounded_fixpoint(fw)]
        else:
            oracle = _select(_oracle_complete(fw, args), args.semantics)
    report.labellings = cn if cn is not None else oracle
    if cn is not None and oracle is not None and set(cn) != set(oracle):
        report.divergences.append({
            "cn_only": [lab.as_dict() for lab in cn if lab not in oracle],
            "oracle_only": [lab.as_dict() for lab in oracle if lab not in cn],
        })
    report.timing_ms = (time.perf_counter() - start) * 1000
    _emit(report, args.json, f"{args.semantics} labellings")
    return EXIT_DIVERGENCE if report.divergences else EXIT_OK


def cmd_models(args) -> int:
    fw = _read_framework(args.input, args.format)
    start = time.perf_counter()
    theory = _theory(fw, args)
    report = RunReport(args.input, "models", "cn")
    report.models = enumerate_models(theory, args.max_atoms)
    report.timing_ms = (time.perf_counter() - start) * 1000
    if args.json:
        print(json.dumps([m.to_json() for m in report.models], indent=2))
    else:
        _emit(report, False, "CN models")
    return EXIT_OK


def cmd_reduce(args) -> int:
    fw = _read_framework(args.input, args.format)
    if args.kind == "joint":
        if isinstance(fw, Af):
            fw = JointAf.from_af(fw)
        if not isinstance(fw, JointAf):
            raise InputError("joint reduction needs a plain or joint network")
        result = joint_to_single(fw)
    else:
        if isinstance(fw, Af) and not fw.attacks:
            fw = HigherAf(fw.arguments, ())
        if not isinstance(fw, HigherAf):
            raise InputError("higher reduction needs natt/hatt facts")
        result = higher_to_joint(fw)
    apx = to_apx(result.framework)
    if args.provenance:
        Path(args.provenance).write_text(result.provenance_json() + "\n", encoding="utf-8")
    if args.json:
        print(json.dumps({"framework": apx, "embedded": list(result.embedded),
                          "fresh": result.naming}, indent=2))
    else:
        sys.stdout.write(apx)
    return EXIT_OK


def _formula(text: str):
    try:
        return parse_formula(text)
    except FormulaSyntaxError as exc:
        raise InputError(f"formula: {exc}") from exc


def cmd_cnn(args) -> int:
    f = _formula(args.formula)
    if args.action == "normalize":
        out = to_text(normalize_n(f))
        print(json.dumps({"normalized": out}) if args.json else out)
        return EXIT_OK
    found = find_countermodel(f, args.mode, args.max_atoms)
    if args.action == "valid":
        result = {"valid": found is None, "mode": args.mode}
    else:
        result = {"countermodel": None if found is None else found[0].to_json(),
                  "world": None if found is None else found[1]}
    if args.json:
        print(json.dumps(result))
    elif args.action == "valid":
        print("valid" if found is None else "not valid")
    elif found is None:
        print("no countermodel (valid)")
    else:
        m, w = found
        vals = ", ".join(f"{a}=({x},{y})" for a, (x, y) in zip(m.universe, m.values))
        print(f"countermodel at world {w}: {vals}")
    return EXIT_OK


def cmd_entails(args) -> int:
    fw = _read_framework(args.input, args.format)
    f = _formula(args.formula)
    theory = _theory(fw, args)
    try:
        witness = entailment_countermodel(theory, f, args.max_atoms)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if args.json:
        print(json.dumps({"entails": witness is None,
                          "countermodel": None if witness is None else witness.as_dict()}))
    elif witness is None:
        print("entailed")
    else:
        print("not entailed; countermodel:")
        print(_row(witness))
    return EXIT_OK


def cmd_fuzz(args) -> int:
    rng = random.Random(args.seed)
    failures = []
    start = time.perf_counter()
    for i in range(args.count):
        if args.family == "joint":
            fw = generate.random_joint_af(rng, max_args=min(args.max_args, 5))
            cn = {model_to_labelling(m) for m in enumerate_models(delta_joint(fw))}
            ref = set(joint_labellings(fw))
        else:
            fw = generate.random_af(rng, max_args=args.max_args)
            cn = {model_to_labelling(m) for m in enumerate_models(delta_af(fw))}
            ref = set(complete_labellings(fw))
        if cn != ref:
            failures.append({"index": i, "framework": to_apx(fw)})
    elapsed = (time.perf_counter() - start) * 1000
    summary = {"seed": args.seed, "count": args.count, "family": args.family,
               "divergences": failures, "timing_ms": round(elapsed, 3)}
    if args.json:
        print(json.dumps(summary, indent=2))
    else:
        print(f"{args.count} random {args.family} networks, seed {args.seed}: "
              f"{len(failures)} divergence(s), {elapsed:.0f} ms")
        for f in failures:
            print(f"--- case {f['index']}\n{f['framework']}")
    return EXIT_DIVERGENCE if failures else EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cnarg", description="Argumentation networks through strong-negation logic.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("--input", "-i", required=True, help="framework file")
            p.add_argument("--format", "-f", choices=("apx", "tgf"),
                           help="input format (default: by file extension, else apx)")
            p.add_argument("--reading", choices=("local", "split"), default="local",
                           help="disjunctive-attack reading")
            p.add_argument("--variant", choices=("tau1", "tau2"), default="tau1",
                           help="support translation for bipolar input")
        p.add_argument("--json", action="store_true", help="JSON on stdout")
        p.add_argument("--max-atoms", type=int, default=None, help="override the size cap")

    p = sub.add_parser("extensions", help="extensions under a semantics")
    common(p)
    p.add_argument("--semantics", "-s", default="complete",
                   choices=("complete", "grounded", "stable", "preferred"))
    p.add_argument("--engine", "-e", default="cn", choices=("cn", "oracle", "both"))
    p.set_defaults(func=cmd_extensions)

    p = sub.add_parser("models", help="raw CN models of the compiled theory")
    common(p)
    p.set_defaults(func=cmd_models)

    p = sub.add_parser("reduce", help="reduce joint or higher-level attacks")
    common(p)
    p.add_argument("--kind", choices=("joint", "higher"), required=True)
    p.add_argument("--provenance", help="write the fresh-node provenance JSON here")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("cnn", help="two-world validity, countermodels, N-normalisation")
    common(p, needs_input=False)
    p.add_argument("formula")
    p.add_argument("--action", choices=("valid", "countermodel", "normalize"), default="valid")
    p.add_argument("--mode", choices=("both", "world1"), default="both")
    p.set_defaults(func=cmd_cnn)

    p = sub.add_parser("entails", help="does the compiled theory entail a formula?")
    common(p)
    p.add_argument("formula")
    p.set_defaults(func=cmd_entails)

    p = sub.add_parser("fuzz", help="random differential test of CN engine against oracle")
    common(p, needs_input=False)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-args", type=int, default=7)
    p.add_argument("--family", choices=("plain", "joint"), default="plain")
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (SizeCapError, OracleSizeError, ValiditySizeError) as exc:
        print(f"size cap: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
