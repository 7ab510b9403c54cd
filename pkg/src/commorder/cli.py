"""Command-line entry point.

    commorder inspect --group "GL(2,3)"
    commorder check --suite all --corpus builtin --out reports.json
    commorder remarks --out remarks.json

Human-readable summaries go to stdout; JSON only ever goes to ``--out``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from . import catalog
from .catalog import GroupSpecEntry, load_manifest, make_named_group
from .chartab import character_table
from .classalg import real_classes
from .group import DEFAULT_CAP, CapExceeded, center, conjugacy_classes
from .series import fitting, simplicity_predicates, solvable_radical, structure_predicates
from .verify import (
    ASSERTION_SUITES,
    EXPLORATION_SUITES,
    SUITES,
    CheckReport,
    reproduce_remarks,
    run_suite,
)

COMMANDS = ("inspect", "classes", "chartab", "check", "explore", "remarks")


@dataclass
class CommandPlan:
    command: str
    group: str | None = None
    corpus: str | None = None
    suites: list[str] = field(default_factory=list)
    out: str | None = None
    cap: int = DEFAULT_CAP
    threads: int = 1
    entries: list[GroupSpecEntry] = field(default_factory=list, repr=False)


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="commorder", description=__doc__.split("\n")[0])
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--group", help="catalog group name, e.g. 'PSL(2,7)' or 'S4 x A5'")
    ap.add_argument("--corpus", help="'builtin' or a path to a corpus manifest")
    ap.add_argument("--suite", action="append", default=[],
                    help="suite id (repeatable); 'all' expands to every assertion suite")
    ap.add_argument("--out", help="JSON output path")
    ap.add_argument("--cap", type=int, default=DEFAULT_CAP, help="element cap per group")
    ap.add_argument("--threads", type=int, default=1, help="worker processes across groups")
    return ap


def parse_args(argv: Sequence[str]) -> CommandPlan:
    """Validate ``argv`` into a plan; usage errors exit with status 2."""
    ap = _parser()
    ns = ap.parse_args(list(argv))
    if ns.cap < 1:
        ap.error("--cap must be positive")
    if ns.threads < 1:
        ap.error("--threads must be positive")
    plan = CommandPlan(ns.command, ns.group, ns.corpus, out=ns.out, cap=ns.cap, threads=ns.threads)

    suites: list[str] = []
    for s in ns.suite:
        if s == "all":
            suites.extend(ASSERTION_SUITES)
        elif s in SUITES:
            suites.append(s)
        else:
            ap.error(f"unknown suite {s!r}; choose from {', '.join(SUITES)} or 'all'")
    if ns.command == "check" and not suites:
        suites = list(ASSERTION_SUITES)
    if ns.command == "explore" and not suites:
        suites = list(EXPLORATION_SUITES)
    plan.suites = list(dict.fromkeys(suites))

    if ns.group is not None:
        try:
            catalog.check_name(ns.group)
        except catalog.UnknownGroup:
            ap.error(f"unknown group {ns.group!r}")
    if ns.command in ("inspect", "classes", "chartab") and ns.group is None:
        ap.error(f"{ns.command} needs --group")
    if ns.command in ("check", "explore"):
        if ns.group is None and ns.corpus is None:
            plan.corpus = "builtin"
        if plan.corpus is not None:
            try:
                plan.entries = load_manifest(plan.corpus)
            except (OSError, ValueError, KeyError, TypeError) as exc:
                ap.error(f"cannot read corpus manifest {plan.corpus!r}: {exc}")
    return plan


# -- execution -----------------------------------------------------------------

def emit_report(reports: Sequence[CheckReport], path: str) -> None:
    """Write reports as a JSON array, atomically (temp file + rename)."""
    text = json.dumps([r.to_dict() for r in reports], indent=1) + "\n"
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".report-", suffix=".json")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _write_json(obj, path: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".out-", suffix=".json")
    with os.fdopen(fd, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=1)
        fh.write("\n")
    os.replace(tmp, path)


class _EntryFailed(Exception):
    pass


def _run_entry(args) -> list[CheckReport]:
    entry, suites, cap = args
    try:
        G = entry.build(cap)
        return [r for r in (run_suite(s, G, entry) for s in suites) if r is not None]
    except CapExceeded as exc:
        raise _EntryFailed(f"corpus entry {entry.name!r}: {exc}") from None
    except ValueError as exc:
        raise _EntryFailed(f"corpus entry {entry.name!r}: {exc}") from None


def _entries_for(plan: CommandPlan) -> list[GroupSpecEntry]:
    if plan.entries:
        return plan.entries
    # a named group that is also a shipped entry keeps its declared metadata
    wanted = plan.group.replace(" ", "")
    for e in load_manifest("builtin"):
        if e.name.replace(" ", "") == wanted:
            return [e]
    G = make_named_group(plan.group, cap=plan.cap)
    return [GroupSpecEntry(name=plan.group, builtin=plan.group, expected_order=G.order)]


def _summary_line(r: CheckReport) -> str:
    status = "PASS" if r.passed else "FAIL"
    return (f"{status}  {r.suite:<22} {r.group_name:<20} |G|={r.group_order:<6} "
            f"checked={r.instances_checked:<6} violations={len(r.violations)} "
            f"witnesses={len(r.witnesses)}")


def _run_suites(plan: CommandPlan) -> int:
    entries = _entries_for(plan)
    jobs = [(e, plan.suites, plan.cap) for e in entries]
    reports: list[CheckReport] = []
    try:
        if plan.threads > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=plan.threads) as pool:
                for batch in pool.map(_run_entry, jobs):
                    reports.extend(batch)
        else:
            for job in jobs:
                reports.extend(_run_entry(job))
    except _EntryFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    for r in reports:
        print(_summary_line(r))
    if plan.out:
        emit_report(reports, plan.out)
    failing = [r for r in reports if SUITES[r.suite][1] and not r.passed]
    print(f"{len(reports)} reports, {len(failing)} failing assertion reports")
    return 1 if failing else 0


def _inspect(plan: CommandPlan) -> int:
    G = make_named_group(plan.group, cap=plan.cap)
    solv, nilp, pg = structure_predicates(G)
    simple, quasi = simplicity_predicates(G) if not G.is_trivial else (False, False)
    info = {
        "name": plan.group, "order": G.order, "degree": G.degree,
        "classes": len(conjugacy_classes(G)), "center": center(G).order,
        "fitting": fitting(G).order, "solvable_radical": solvable_radical(G).order,
        "solvable": solv, "nilpotent": nilp, "p_group": pg, "simple": simple, "quasisimple": quasi,
        "generators": [g.cycles() for g in G.generators],
    }
    for k, v in info.items():
        print(f"{k:>17}: {v}")
    if plan.out:
        _write_json(info, plan.out)
    return 0


def _classes(plan: CommandPlan) -> int:
    G = make_named_group(plan.group, cap=plan.cap)
    real = set(real_classes(G))
    rows = []
    for k, c in enumerate(conjugacy_classes(G)):
        rows.append({"index": k, "size": c.size, "order": G.element_order(c.representative),
                     "real": k in real, "representative": c.representative.cycles()})
        print(f"{k:>3}  size={c.size:<6} order={rows[-1]['order']:<4} "
              f"{'real' if k in real else '    '}  {c.representative.cycles()}")
    if plan.out:
        _write_json(rows, plan.out)
    return 0


def _chartab(plan: CommandPlan) -> int:
    G = make_named_group(plan.group, cap=plan.cap)
    T = character_table(G)
    print(f"{plan.group}: |G|={T.group_order}, {len(T)} characters, conductor {T.exponent}, prime {T.prime}")
    print("class sizes:", T.class_sizes)
    for d, row in zip(T.degrees, T.values):
        cells = []
        for v in row:
            if v.is_rational_integer:
                cells.append(str(int(v)))
            else:
                z = complex(v)
                cells.append(f"{z.real:.3f}{z.imag:+.3f}i")
        print(f"  deg {d:>3}: " + "  ".join(cells))
    if plan.out:
        _write_json(T.to_dict(), plan.out)
    return 0


def _remarks(plan: CommandPlan) -> int:
    rep = reproduce_remarks()
    print(_summary_line(rep))
    for v in rep.violations:
        print("  mismatch:", v)
    if plan.out:
        emit_report([rep], plan.out)
    return 0 if rep.passed else 1


def execute_plan(plan: CommandPlan) -> int:
    try:
        if plan.command in ("check", "explore"):
            return _run_suites(plan)
        return {"inspect": _inspect, "classes": _classes, "chartab": _chartab,
                "remarks": _remarks}[plan.command](plan)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


def main(argv: Sequence[str] | None = None) -> int:
    plan = parse_args(sys.argv[1:] if argv is None else argv)
    return execute_plan(plan)


if __name__ == "__main__":
    sys.exit(main())
