"""Command-line front end.

Exit codes: 0 success, 1 usage or input error, 2 verification failed,
3 search certified that no design exists, 4 search ran out of budget.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from typing import Optional

from . import __version__
from .atomic import atomic_components
from .axioms import CONDITIONS, is_bcod
from .core import read_design, serialize_design
from .equivalence import format_ops, is_column_restricted
from .errors import DesignError, NotCod, SearchLimitExceeded
from .generate import construct_bcod
from .gram import is_cod
from .patterns import (
    bcod_lower_bound,
    conj_class,
    find_complement,
    left_pattern,
    max_rate_delay_bound,
    nu,
    zero_pattern,
)
from .search import DEFAULT_NODE_LIMIT, SearchConfig, search_min_delay
from .standard import is_standard_form, standardize, to_bj_form

EXIT_OK, EXIT_USAGE, EXIT_FAILED, EXIT_NONE, EXIT_LIMIT = 0, 1, 2, 3, 4

_CONDITION_LABELS = {
    "dimensions": "bcod.dimensions",
    "zeros": "bcod.condition1_zeros",
    "conjugation": "bcod.condition2_conjugation",
    "skew": "bcod.condition3_skew",
    "footnote": "bcod.footnote_counts",
}


@dataclass
class CommandOutcome:
    exit_code: int = EXIT_OK
    report: list = field(default_factory=list)
    machine: Optional[list] = None
    diagnostics: list = field(default_factory=list)

    @property
    def stdout(self) -> str:
        lines = list(self.report)
        if self.machine is not None:
            lines += ["[machine]"] + self.machine
        return "".join(line + "\n" for line in lines)


class _UsageError(Exception):
    pass


class _CleanExit(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.format_usage()}{self.prog}: error: {message}")

    def exit(self, status=0, message=None):
        if status == 0:
            raise _CleanExit
        raise _UsageError(message or "")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--machine", action="store_true", help="append a key=value block")

    parser = _Parser(prog="orthodesign", description="Complex orthogonal design toolkit.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("verify", parents=[common], help="check the COD and BCOD axioms")
    p.add_argument("file")
    p.add_argument("--cod-only", action="store_true", help="only check orthogonality")

    p = sub.add_parser("construct", parents=[common], help="build a delay-2^m BCOD")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("-o", "--output")

    p = sub.add_parser("reduce", parents=[common], help="transform a BCOD into B_j form")
    p.add_argument("file")
    p.add_argument("--var", type=int, required=True)
    p.add_argument("--emit-ops", action="store_true")

    for name in ("patterns", "complement", "atoms"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("file")
        if name == "complement":
            p.add_argument("--row", type=int)

    p = sub.add_parser("bound", parents=[common], help="reference delay bounds")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("search", parents=[common], help="exhaustive minimum-delay search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-p", type=int, required=True)
    p.add_argument("--certify", action="store_true", help="report the exhausted row counts")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT)
    p.add_argument("--no-symmetry", action="store_true")
    p.add_argument("--long-run", action="store_true", help="allow n = 6")
    return parser


def _join(xs):
    return ",".join(map(str, xs))


def _verify(args, out):
    d = read_design(args.file)
    cod = is_cod(d)
    out.report.append(f"cod: {'ok' if cod else 'FAIL'}")
    out.report += [f"  {v}" for v in cod.violations]
    out.report += [f"  warning: {w}" for w in cod.warnings]
    machine = [f"cod={int(cod.ok)}"]
    ok = cod.ok
    if not args.cod_only:
        if not cod:
            out.report.append("bcod: skipped (not a COD)")
            machine.append("bcod=0")
            ok = False
        else:
            rep = is_bcod(d)
            for c in CONDITIONS:
                viol = rep.conditions[c]
                out.report.append(f"{_CONDITION_LABELS[c]}: {'FAIL' if viol else 'ok'}")
                out.report += [f"  {v}" for v in viol]
                machine.append(f"{_CONDITION_LABELS[c]}={int(not viol)}")
            machine.append(f"bcod={int(rep.ok)}")
            ok = ok and rep.ok
    if args.machine:
        out.machine = machine
    out.exit_code = EXIT_OK if ok else EXIT_FAILED


def _construct(args, out):
    d = construct_bcod(args.m)
    text = serialize_design(d)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        out.report.append(f"wrote {args.output}: [{d.p}, {d.n}, {d.k}]")
    else:
        out.report += text.splitlines()
    if args.machine:
        out.machine = [f"p={d.p}", f"n={d.n}", f"k={d.k}"]


def _reduce(args, out):
    d = read_design(args.file)
    if not _require_bcod(d, out):
        return
    was_standard = is_standard_form(d) is not None
    pre, d1 = standardize(d)
    ops, d2 = to_bj_form(d1, args.var)
    if was_standard and not is_column_restricted(ops, d.m):
        out.diagnostics.append("reduction used a column permutation outside (i, m+i)")
        out.exit_code = EXIT_FAILED
        return
    ops = pre + ops
    if args.emit_ops:
        out.report.append("# ops")
        out.report += format_ops(ops).splitlines()
    out.report.append("# design")
    out.report += serialize_design(d2).splitlines()
    if args.machine:
        out.machine = [
            f"standard_input={int(was_standard)}",
            f"ops={len(ops)}",
            f"column_restricted={int(is_column_restricted(ops, d.m))}",
        ]


def _require_bcod(d, out):
    try:
        if is_bcod(d):
            return True
    except NotCod:
        pass
    out.diagnostics.append("input is not a balanced complex orthogonal design")
    out.exit_code = EXIT_FAILED
    return False


def _patterns(args, out):
    d = read_design(args.file)
    if not _require_bcod(d, out):
        return
    for r in range(1, d.p + 1):
        left = left_pattern(d, r)
        out.report.append(
            f"row {r}: pattern={zero_pattern(d, r)} left={left} weight={left.weight} "
            f"conj={conj_class(d, r)} complement={find_complement(d, r)}"
        )


def _complement(args, out):
    d = read_design(args.file)
    if not _require_bcod(d, out):
        return
    rows = [args.row] if args.row else range(1, d.p + 1)
    for r in rows:
        out.report.append(f"row {r}: complement={find_complement(d, r)}")


def _atoms(args, out):
    d = read_design(args.file)
    if not _require_bcod(d, out):
        return
    comps = atomic_components(d)
    for c, (vs, rows) in enumerate(comps, 1):
        out.report.append(f"component {c}: vars={_join(vs)} rows={_join(rows)}")
    if args.machine:
        out.machine = [f"components={len(comps)}", f"atomic={int(len(comps) == 1)}"]


def _bound(args, out):
    n = args.n
    if n < 2:
        raise _UsageError(f"bound: n must be >= 2, got {n}")
    lower = bcod_lower_bound(n) if n % 2 == 0 else "na"
    values = [("bcod_lower", lower), ("rod_nu", nu(n)), ("maxrate_delay", max_rate_delay_bound(n))]
    out.report.append(" ".join(f"{k}={v}" for k, v in values))
    if args.machine:
        out.machine = [f"{k}={v}" for k, v in values]


def _search(args, out):
    cfg = SearchConfig(
        n=args.n,
        p_max=args.max_p,
        symmetry_pruning=not args.no_symmetry,
        parallel_width=args.workers,
        node_limit=args.node_limit,
        long_run=args.long_run,
    )
    try:
        res = search_min_delay(cfg)
    except SearchLimitExceeded as exc:
        out.diagnostics.append(f"resource limit: {exc}")
        out.exit_code = EXIT_LIMIT
        return
    if args.certify:
        for p in res.exhausted:
            out.report.append(f"# p={p}: exhausted, no BCOD (nodes={res.nodes[p]})")
    if res.design is None:
        out.report.append(f"# none: no BCOD with n={args.n} and p<={args.max_p}")
        out.exit_code = EXIT_NONE
    else:
        out.report += serialize_design(res.design).splitlines()
    if args.machine:
        out.machine = [
            f"found={int(res.design is not None)}",
            f"exhausted={_join(res.exhausted)}",
            f"p={res.design.p if res.design else 'none'}",
        ]


_COMMANDS = {
    "verify": _verify,
    "construct": _construct,
    "reduce": _reduce,
    "patterns": _patterns,
    "complement": _complement,
    "atoms": _atoms,
    "bound": _bound,
    "search": _search,
}


def run(argv) -> CommandOutcome:
    out = CommandOutcome()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _COMMANDS[args.command](args, out)
    except _CleanExit:
        pass
    except _UsageError as exc:
        out.exit_code = EXIT_USAGE
        out.diagnostics.append(str(exc).rstrip() or parser.format_usage().rstrip())
    except (DesignError, OSError, IndexError, ValueError) as exc:
        out.exit_code = EXIT_USAGE
        out.diagnostics.append(f"error: {exc}")
    return out


def main(argv=None) -> int:
    out = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out.stdout)
    for line in out.diagnostics:
        print(line, file=sys.stderr)
    return out.exit_code


if __name__ == "__main__":
    sys.exit(main())
