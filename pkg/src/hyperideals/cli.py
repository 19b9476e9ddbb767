"""Command-line interface.

Every command prints a human-readable report followed by one summary line::

    RESULT <subcommand> <status> <key=value ...>

Exit status: 0 success / property holds, 1 property fails (a witness is
printed), 2 input or usage error, 3 verification found a counterexample.
``verify`` reads its default worker count from ``HYPERIDEALS_WORKERS``.
"""
from __future__ import annotations

import argparse
import enum
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import classes, fuzzy, ideals
from .document import parse_structure, serialize_structure
from .errors import HyperError
from .hypercore import HyperTable, associativity_violation, format_set, require_hypersemigroup
from .search import (
    Sample,
    VerifyReport,
    canonical_form,
    find_witness,
    verify_corpus,
)
from .theorems import DESCRIPTIONS


class ExitStatus(enum.IntEnum):
    OK = 0
    FAILS = 1
    INPUT_ERROR = 2
    COUNTEREXAMPLE = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _flag(b: bool) -> str:
    return "true" if b else "false"


def _summary(cmd: str, status: ExitStatus, **fields) -> str:
    parts = [f"RESULT {cmd} {int(status)}"]
    parts += [f"{k}={v}" for k, v in fields.items()]
    return " ".join(parts)


def _load(path: str) -> HyperTable:
    if path == "-":
        return parse_structure(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_structure(fh.read())


def _grades(text: str, order: int) -> tuple[list[Fraction], list[str]]:
    tokens = [t.strip() for t in text.split(",")]
    try:
        values = [Fraction(t) for t in tokens]
    except (ValueError, ZeroDivisionError):
        raise HyperError(f"grades must be decimal literals, got {text!r}") from None
    if len(values) != order:
        raise HyperError(f"expected {order} grades, got {len(values)}")
    for t, v in zip(tokens, values):
        if not 0 <= v <= 1:
            raise HyperError(f"grade {t} is outside [0,1]")
    return values, tokens


def _csv(text: Optional[str]) -> list[str]:
    if not text:
        return []
    return [t.strip() for t in text.split(",") if t.strip()]


# -- check --------------------------------------------------------------------

def _check_hypersemigroup(H):
    bad = associativity_violation(H)
    if bad is None:
        return True, ""
    x, y, z = bad
    return False, f"{{{x}}}*({y} o {z}) != ({x} o {y})*{{{z}}}"


def _check_simple(H):
    I = ideals.proper_ideal(H)
    return (True, "") if I is None else (False, f"proper ideal {format_set(I)}")


def _check_simple_elementwise(H):
    require_hypersemigroup(H)
    for a in range(H.order):
        s = ideals.principal_sandwich(H, a)
        if s != H.carrier:
            return False, f"H*{{{a}}}*H = {format_set(s)}"
    return True, ""


def _check_regularity(witnesses):
    def run(H):
        w = witnesses(H)
        if w.holds:
            return True, ""
        return False, f"no witness for a={w.failing()[0]}"
    return run


def _check_fuzzy_simple(find):
    def run(H):
        f = find(H)
        if f is None:
            return True, ""
        return False, "non-constant profile " + ",".join(f"{g:g}" for g in f.grades)
    return run


def _plain(pred):
    def run(H):
        return pred(H), ""
    return run


CHECKS = {
    "hypersemigroup": _check_hypersemigroup,
    "simple": _check_simple,
    "simple-elementwise": _check_simple_elementwise,
    "regular": _check_regularity(classes.regular_witnesses),
    "regular-sandwich": _plain(classes.is_regular_sandwich),
    "regular-subsets": _plain(classes.is_regular_subsets),
    "intra-regular": _check_regularity(classes.intra_regular_witnesses),
    "intra-regular-sandwich": _plain(classes.is_intra_regular_sandwich),
    "intra-regular-subsets": _plain(classes.is_intra_regular_subsets),
    "fuzzy-simple": _check_fuzzy_simple(fuzzy.nonconstant_fuzzy_ideal),
    "fuzzy-interior-simple": _check_fuzzy_simple(fuzzy.nonconstant_fuzzy_interior_ideal),
}


def cmd_check(args, out) -> ExitStatus:
    H = _load(args.file)
    holds, detail = CHECKS[args.prop](H)
    status = ExitStatus.OK if holds else ExitStatus.FAILS
    line = f"{args.prop}: {_flag(holds)}"
    if detail:
        line += ", " + detail
    out.append(line)
    out.append(_summary("check", status, prop=args.prop, holds=_flag(holds)))
    return status


def cmd_ideals(args, out) -> ExitStatus:
    H = _load(args.file)
    kind = ideals.IdealKind(args.kind)
    found = ideals.list_substructures(H, kind)
    out.append(f"{kind.value}: " + (" ".join(format_set(A) for A in found) or "none"))
    out.append(_summary("ideals", ExitStatus.OK, kind=kind.value, count=len(found)))
    return ExitStatus.OK


FUZZY_CHECKS = {
    "left": ("fuzzy left ideal", fuzzy.fuzzy_left_violation),
    "right": ("fuzzy right ideal", fuzzy.fuzzy_right_violation),
    "ideal": ("fuzzy ideal", fuzzy.fuzzy_ideal_violation),
    "interior": ("fuzzy interior ideal", fuzzy.fuzzy_interior_violation),
}


def cmd_fuzzy(args, out) -> ExitStatus:
    H = _load(args.file)
    values, tokens = _grades(args.grades, H.order)
    label, find = FUZZY_CHECKS[args.check]
    bad = find(H, values)
    line = f"{label}: {_flag(bad is None)}"
    if bad is not None:
        if args.check == "interior":
            x, a, y, u = bad
            line += f", u={u} in ({x} o {a})*{{{y}}} with f(u)={tokens[u]} < f({a})={tokens[a]}"
        else:
            x, y, u = bad
            line += f", u={u} in {x} o {y} with f(u)={tokens[u]}"
    out.append(line)
    status = ExitStatus.OK if bad is None else ExitStatus.FAILS
    out.append(_summary("fuzzy", status, check=args.check, holds=_flag(bad is None)))
    return status


def cmd_levelset(args, out) -> ExitStatus:
    H = _load(args.file)
    values, _ = _grades(args.grades, H.order)
    res = fuzzy.level_set(values, args.at)
    out.append(f"I_{args.at} = {format_set(res.members)}")
    out.append(_summary("levelset", ExitStatus.OK, at=args.at, members=format_set(res.members)))
    return ExitStatus.OK


def render_verify_report(rep: VerifyReport) -> list[str]:
    lines = [f"verify order={rep.order} mode={rep.mode} domain={rep.domain} "
             f"up_to_iso={_flag(rep.up_to_iso)}"]
    lines.append(f"{rep.hypergroupoids} hypergroupoids, {rep.hypersemigroups} hypersemigroups scanned")
    for t, tally in rep.tallies.items():
        lines.append(
            f"{t.value:<6} {tally.scope:<15} checked={tally.checked} pass={tally.passed} "
            f"fail={tally.failed} nonvacuous={tally.applicable}  {DESCRIPTIONS[t]}"
        )
    for c in rep.counterexamples:
        lines.append(f"counterexample {c.theorem} [{c.clause}] {c.document}")
    if rep.probe is not None:
        p = rep.probe
        lines.append(
            f"probe regular-vs-A<=H*A*H: structures={p.structures} agree={p.agree} "
            f"regular={p.regular} covering={p.covering} coincides={_flag(p.coincides)}"
        )
        if p.first_disagreement:
            lines.append(f"probe first disagreement {p.first_disagreement}")
    lines.append("theorems: all pass" if rep.all_pass else f"theorems: {rep.failures} failures")
    return lines


def cmd_verify(args, out) -> ExitStatus:
    if (args.sample is None) != (args.seed is None):
        raise UsageError("--sample and --seed go together")
    mode = Sample(args.sample, args.seed) if args.sample is not None else "exhaustive"
    rep = verify_corpus(
        args.order,
        theorems=_csv(args.theorems) or None,
        mode=mode,
        workers=args.workers,
        domain=args.domain,
        up_to_iso=args.up_to_iso,
    )
    out.extend(render_verify_report(rep))
    status = ExitStatus.OK if rep.all_pass else ExitStatus.COUNTEREXAMPLE
    out.append(_summary(
        "verify", status, order=rep.order, mode="sample" if args.sample is not None else "exhaustive",
        structures=rep.hypergroupoids, hypersemigroups=rep.hypersemigroups,
        failures=rep.failures,
    ))
    return status


def cmd_witness(args, out) -> ExitStatus:
    if (args.sample is None) != (args.seed is None):
        raise UsageError("--sample and --seed go together")
    mode = Sample(args.sample, args.seed) if args.sample is not None else "exhaustive"
    H = find_witness(args.order, _csv(args.require), _csv(args.forbid), mode)
    if H is None:
        out.append("no structure found")
        out.append(_summary("witness", ExitStatus.FAILS, order=args.order, found="false"))
        return ExitStatus.FAILS
    out.append(serialize_structure(H))
    out.append(_summary("witness", ExitStatus.OK, order=args.order, found="true"))
    return ExitStatus.OK


def cmd_canon(args, out) -> ExitStatus:
    H = _load(args.file)
    form = canonical_form(H)
    out.append(serialize_structure(form.table()))
    out.append(_summary("canon", ExitStatus.OK, order=H.order))
    return ExitStatus.OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hyperideals", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="decide a structural property")
    p.add_argument("file")
    p.add_argument("--prop", required=True, choices=sorted(CHECKS))
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("ideals", help="list substructures of one kind")
    p.add_argument("file")
    p.add_argument("--kind", required=True, choices=[k.value for k in ideals.IdealKind])
    p.set_defaults(run=cmd_ideals)

    p = sub.add_parser("fuzzy", help="test a fuzzy subset")
    p.add_argument("file")
    p.add_argument("--grades", required=True)
    p.add_argument("--check", required=True, choices=sorted(FUZZY_CHECKS))
    p.set_defaults(run=cmd_fuzzy)

    p = sub.add_parser("levelset", help="level set I_a of a fuzzy subset")
    p.add_argument("file")
    p.add_argument("--grades", required=True)
    p.add_argument("--at", required=True, type=int)
    p.set_defaults(run=cmd_levelset)

    p = sub.add_parser("verify", help="run the theorem harness")
    p.add_argument("--order", required=True, type=int)
    p.add_argument("--theorems")
    p.add_argument("--sample", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--workers", type=int)
    p.add_argument("--domain", choices=["auto", "hypersemigroups"], default="auto")
    p.add_argument("--up-to-iso", action="store_true")
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("witness", help="search for a structure by predicates")
    p.add_argument("--order", required=True, type=int)
    p.add_argument("--require", default="")
    p.add_argument("--forbid", default="")
    p.add_argument("--sample", type=int)
    p.add_argument("--seed", type=int)
    p.set_defaults(run=cmd_witness)

    p = sub.add_parser("canon", help="print the canonical relabeling")
    p.add_argument("file")
    p.set_defaults(run=cmd_canon)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> tuple[int, str]:
    """Execute one command line; returns ``(status, report text)``."""
    out: list[str] = []
    cmd = argv[0] if argv else "?"
    try:
        args = build_parser().parse_args(argv)
        cmd = args.command
        status = args.run(args, out)
    except (UsageError, HyperError, OSError) as e:
        out.append(f"error: {e}")
        out.append(_summary(cmd, ExitStatus.INPUT_ERROR))
        status = ExitStatus.INPUT_ERROR
    return int(status), "\n".join(out) + "\n"


def main(argv: Optional[Sequence[str]] = None) -> int:
    status, text = run(argv)
    sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
