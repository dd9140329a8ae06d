"""Command-line front end.

Exit codes: 0 positive result, 1 negative result (check failed, non-theorem,
formula fails or model invalid), 2 usage/parse/file errors, 3 unknown verdict.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .calculus import check_derivation, conjoin, validate_cs
from .decide import FragmentError, NonTheorem, SearchConfig, Theorem, decide, decide_gl
from .fixtures import FIXTURE_DIR
from .internalize import LiftError, lift
from .io import (
    FormatError, cs_to_json, derivation_to_json, lift_result_to_json, load_cs, load_derivation, load_model,
    model_to_json, verdict_to_json, write_json,
)
from .semantics import failing_worlds, forces, validate_model
from .syntax import ParseError, parse_formula, parse_term, print_formula, print_term

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_UNKNOWN = 0, 1, 2, 3

_MODES = {"all": "all_worlds", "root": "root_only"}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _path(name: str) -> Path:
    """A user path; bare names missing locally fall back to the bundled fixtures."""
    p = Path(name)
    if not p.exists() and (FIXTURE_DIR / p.name).exists() and len(p.parts) <= 2:
        return FIXTURE_DIR / p.name
    return p


def _cs(name: str | None):
    cs = load_cs(_path(name) if name else None)
    report = validate_cs(cs)
    if not report.ok:
        raise FormatError(f"invalid constant specification: {report.first_error[1]}")
    return cs


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


def cmd_parse(args) -> int:
    if args.term:
        t = parse_term(args.expr)
        _emit(args, {"term": print_term(t)}, [print_term(t)])
    else:
        f = parse_formula(args.expr)
        _emit(args, {"formula": print_formula(f)}, [print_formula(f)])
    return EXIT_OK


def cmd_check(args) -> int:
    d = load_derivation(_path(args.derivation))
    report = check_derivation(d, _cs(args.cs), allow_taut=args.taut)
    if report.ok:
        _emit(args, {"ok": True, "lines": len(d.steps), "conclusion": print_formula(d.conclusion)},
              [f"ok: {len(d.steps)} lines, conclusion {print_formula(d.conclusion)}"])
        return EXIT_OK
    line, reason = report.first_error
    _emit(args, {"ok": False, "line": line, "reason": reason},
          [f"error at line {line}: {reason}"])
    return EXIT_NEGATIVE


def cmd_lift(args) -> int:
    d = load_derivation(_path(args.derivation))
    cs = _cs(args.cs)
    report = check_derivation(d, cs)
    if not report.ok:
        line, reason = report.first_error
        _emit(args, {"ok": False, "line": line, "reason": reason},
              [f"input does not check, line {line}: {reason}"])
        return EXIT_NEGATIVE
    r = lift(d, cs)
    write_json(args.out, lift_result_to_json(r))
    if args.cs_out:
        write_json(args.cs_out, cs_to_json(r.extended_cs))
    concl = print_formula(r.witness.conclusion)
    _emit(args, {"ok": True, "term": print_term(r.term), "conclusion": concl,
                 "cs": cs_to_json(r.extended_cs)},
          [f"term: {print_term(r.term)}", f"conclusion: {concl}",
           f"cs entries: {len(r.extended_cs)}"])
    return EXIT_OK


def cmd_model_check(args) -> int:
    m = load_model(_path(args.model))
    f = parse_formula(args.formula)
    sound_for = [parse_formula(s) for s in args.sound_for] if args.sound_for else [f]
    report = validate_model(m, sound_for, _cs(args.cs))
    if not report.frame_ok or not report.root_ok:
        _emit(args, {"valid": False, "failures": list(report.failures)},
              ["model invalid:"] + [f"  {x}" for x in report.failures])
        return EXIT_NEGATIVE
    table = {u: forces(m, u, f) for u in m.worlds}
    failing = failing_worlds(m, f)
    holds = table[m.root] if _MODES[args.mode] == "root_only" else not failing
    payload = {
        "valid": report.ok, "holds": holds, "mode": _MODES[args.mode],
        "forces": table, "failing_worlds": failing,
        "soundness": {"frame": report.frame_ok, "root": report.root_ok, "f_sound": report.f_sound,
                      "cs_sound": report.cs_sound, "cs_holds": report.cs_holds},
        "failures": list(report.failures),
    }
    lines = [f"world {u}: {'true' if v else 'false'}" for u, v in table.items()]
    lines.append(f"model {'valid' if report.ok else 'invalid'}")
    lines += [f"  {x}" for x in report.failures]
    lines.append(("holds" if holds else "fails at " + ", ".join(failing or [m.root]))
                 + f" ({_MODES[args.mode]})")
    _emit(args, payload, lines)
    return EXIT_OK if holds and report.ok else EXIT_NEGATIVE


def _verdict_exit(args, v) -> int:
    _emit(args, verdict_to_json(v), _verdict_lines(v))
    if isinstance(v, Theorem):
        return EXIT_OK
    if isinstance(v, NonTheorem):
        if args.out:
            write_json(args.out, model_to_json(v.model))
        return EXIT_NEGATIVE
    return EXIT_UNKNOWN


def _verdict_lines(v) -> list[str]:
    if isinstance(v, Theorem):
        return [f"theorem ({v.source})"]
    if isinstance(v, NonTheorem):
        m = v.model
        lines = [f"non-theorem: fails at world {v.failing_world}",
                 f"  worlds {', '.join(m.worlds)}; root {m.root}",
                 "  rel " + (", ".join(f"{a}<{b}" for a, b in sorted(m.rel)) or "empty")]
        for letter, ws in m.valuation.items():
            lines.append(f"  {letter} true at {', '.join(sorted(ws)) or 'no world'}")
        for t, g in sorted(m.evidence_seed, key=str):
            lines.append(f"  evidence {print_term(t)} for {print_formula(g)}")
        return lines
    return [f"unknown: exhausted {v.exhausted}"]


def cmd_decide(args) -> int:
    cfg = SearchConfig(max_worlds=args.max_worlds, max_seed=args.max_seed,
                       eval_mode=_MODES[args.mode], saturation_depth=args.depth,
                       time_budget=args.budget)
    return _verdict_exit(args, decide(parse_formula(args.expr), _cs(args.cs), cfg))


def cmd_decide_gl(args) -> int:
    return _verdict_exit(args, decide_gl(parse_formula(args.expr)))


def cmd_conjoin(args) -> int:
    d = conjoin(load_derivation(_path(args.first)), load_derivation(_path(args.second)))
    write_json(args.out, derivation_to_json(d))
    _emit(args, {"lines": len(d.steps)}, [f"wrote {len(d.steps)} lines to {args.out}"])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gla", description="Workbench for provability logic with explicit proofs.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("parse", help="parse and pretty-print a formula or term")
    s.add_argument("--term", action="store_true")
    s.add_argument("expr")
    s.set_defaults(func=cmd_parse)

    s = sub.add_parser("check", help="check a derivation file")
    s.add_argument("--cs")
    s.add_argument("--taut", action="store_true", help="admit propositional-tautology steps")
    s.add_argument("derivation")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("lift", help="internalize a derivation of F into one of p:F")
    s.add_argument("--cs")
    s.add_argument("--out", required=True)
    s.add_argument("--cs-out", help="also write the extended constant specification")
    s.add_argument("derivation")
    s.set_defaults(func=cmd_lift)

    s = sub.add_parser("model-check", help="evaluate a formula in a model file")
    s.add_argument("--model", required=True)
    s.add_argument("--formula", required=True)
    s.add_argument("--mode", choices=sorted(_MODES), default="all")
    s.add_argument("--sound-for", action="append", default=[])
    s.add_argument("--cs")
    s.set_defaults(func=cmd_model_check)

    defaults = SearchConfig()
    s = sub.add_parser("decide", help="bounded decision for a formula")
    s.add_argument("expr")
    s.add_argument("--cs")
    s.add_argument("--max-worlds", type=int, default=defaults.max_worlds)
    s.add_argument("--max-seed", type=int, default=defaults.max_seed)
    s.add_argument("--mode", choices=sorted(_MODES), default="all")
    s.add_argument("--depth", type=int, default=defaults.saturation_depth)
    s.add_argument("--budget", type=float, default=defaults.time_budget)
    s.add_argument("--out", help="write the countermodel of a non-theorem here")
    s.set_defaults(func=cmd_decide)

    s = sub.add_parser("decide-gl", help="GL validity of a pure modal formula")
    s.add_argument("expr")
    s.add_argument("--out", help="write the countermodel of a non-theorem here")
    s.set_defaults(func=cmd_decide_gl)

    s = sub.add_parser("conjoin", help="concatenate two proof codes")
    s.add_argument("first")
    s.add_argument("second")
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_conjoin)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"file error: {exc}", file=sys.stderr)
    except (FormatError, FragmentError, LiftError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
