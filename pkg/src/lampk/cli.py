"""Command-line interface.

stdout carries the JSON result (the stable contract); human diagnostics go
to stderr.  Exit codes: 0 success, 1 domain error (machine-readable JSON on
stderr), 2 usage error, 3 selfcheck stopped by its time budget.  Rationals
are emitted as {"num", "den"} objects; no numeric output is ever a float.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import jsonio, selfcheck
from .colimitk import DEFAULT_COLUMN_BUDGET, claim_check
from .errors import LampkError
from .fullshift import (
    CylinderSpec,
    coboundary_decompose,
    cylinder_to_chain,
    livsic_check,
)
from .grouprep import GroupRepData, builtin, csalgebras_isomorphic_abelian_case, fingerprint
from .lamplighterk import (
    BOUNDARY_IDENTITY,
    k_groups,
    pv_check,
    trace_image_level,
    trace_of_word,
)
from .shiftwords import enumerate_canonical

DEFAULT_SEED = selfcheck.DEFAULT_SEED


class UsageError(Exception):
    pass


def _parse_group(text: str) -> GroupRepData:
    """A builtin name, or inline JSON {"name", "order", "dims"}."""
    text = text.strip()
    if text.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"--group: invalid JSON: {exc}") from exc
        return jsonio.group_from_json(data)
    return builtin(text)


def _parse_json_arg(flag: str, text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{flag}: invalid JSON: {exc}") from exc


def _load_chain(path_or_json: str):
    """--fn accepts a file path, or the chain JSON inline (starts with [)."""
    text = path_or_json.strip()
    if not text.startswith("["):
        path = Path(text)
        if not path.exists():
            raise UsageError(f"--fn: no such file: {text}")
        text = path.read_text()
    data = _parse_json_arg("--fn", text)
    return jsonio.chain_from_json(data)


def _emit(payload, fmt: str = "json", table_lines=None) -> None:
    if fmt == "table" and table_lines is not None:
        for line in table_lines:
            print(line)
        return
    print(json.dumps(payload, indent=2, ensure_ascii=False))


def _word_table(words) -> list[str]:
    lines = [f"{'#':>5}  {'window':>6}  entries"]
    for i, w in enumerate(words):
        entries = " ".join(f"{p}:{v}" for p, v in w.entries) or "(empty)"
        lines.append(f"{i:>5}  {w.window_length():>6}  {entries}")
    return lines


def cmd_fingerprint(args) -> int:
    group = _parse_group(args.group)
    order, dims, abelian_order = fingerprint(group)
    _emit({"order": order, "dims": list(dims), "abelian_order": abelian_order})
    return 0


def cmd_classify(args) -> int:
    g1 = _parse_group(args.group)
    g2 = _parse_group(args.other)
    decision = csalgebras_isomorphic_abelian_case(g1, g2)
    _emit({"groups": [g1.name, g2.name], "decision": decision})
    return 0


def cmd_orbits(args) -> int:
    group = _parse_group(args.group)
    words = enumerate_canonical(group, args.max_len)
    payload = {
        "group": group.name,
        "max_len": args.max_len,
        "count": len(words),
        "words": [jsonio.word_to_json(w) for w in words],
    }
    _emit(payload, args.format, _word_table(words))
    return 0


def cmd_k0_basis(args) -> int:
    group = _parse_group(args.group)
    corr = k_groups(group, args.max_len)
    basis = corr.analytic.k0_basis
    payload = {
        "group": group.name,
        "max_len": args.max_len,
        "count": len(basis),
        "basis": [jsonio.word_to_json(w) for w in basis],
        "sides_identical": corr.topological.k0_basis == basis,
    }
    _emit(payload, args.format, _word_table(basis))
    return 0


def cmd_k1(args) -> int:
    _parse_group(args.group)  # validated, but K1 is the same for every F
    _emit({"K1": "Z", "generator": "[u]", "boundary": BOUNDARY_IDENTITY})
    return 0


def cmd_claim_check(args) -> int:
    group = _parse_group(args.group)
    budget = int(os.environ.get("LAMPK_BUDGET_COLS", DEFAULT_COLUMN_BUDGET))
    cert = claim_check(group, args.levels, budget=budget)
    _emit(
        {
            "size": cert.size,
            "det": cert.det,
            "holds": cert.holds,
            "elapsed_ms": cert.elapsed_ms,
        }
    )
    return 0


def cmd_pv_check(args) -> int:
    group = _parse_group(args.group)
    report = pv_check(group, samples=args.samples, window=args.window, seed=args.seed)
    _emit(
        {
            "group": report.group,
            "samples": report.samples,
            "window": report.window,
            "seed": report.seed,
            "passed": report.passed,
            "counterexamples": report.counterexample_count(),
        }
    )
    return 0 if report.passed else 1


def cmd_trace(args) -> int:
    group = _parse_group(args.group)
    word = jsonio.word_from_json(_parse_json_arg("--word", args.word))
    value = trace_of_word(group, word)
    _emit(
        {
            "group": group.name,
            "word": jsonio.word_to_json(word),
            "trace": jsonio.fraction_to_json(value),
        }
    )
    return 0


def cmd_trace_image(args) -> int:
    group = _parse_group(args.group)
    generator = trace_image_level(group, args.level)
    _emit(
        {
            "group": group.name,
            "level": args.level,
            "generator": jsonio.fraction_to_json(generator),
        }
    )
    return 0


def cmd_decompose(args) -> int:
    group = _parse_group(args.group)
    chain = _load_chain(args.fn)
    witness, canonical = coboundary_decompose(group, chain)
    _emit(
        {
            "group": group.name,
            "witness": jsonio.chain_to_json(witness),
            "canonical": jsonio.chain_to_json(canonical),
        }
    )
    return 0


def cmd_livsic(args) -> int:
    group = _parse_group(args.group)
    chain = _load_chain(args.fn)
    report = livsic_check(group, chain, max_period=args.max_period)
    _emit(
        {
            "group": group.name,
            "is_coboundary": report.is_coboundary_exact,
            "periodic_sums_vanish": report.periodic_sums_vanish,
            "max_period_checked": report.max_period_checked,
            "violating_orbit": (
                list(report.violating_orbit.pattern)
                if report.violating_orbit is not None
                else None
            ),
            "violating_sum": report.violating_sum,
        }
    )
    return 0


def cmd_cylinder_expand(args) -> int:
    group = _parse_group(args.group)
    raw = _parse_json_arg("--spec", args.spec)
    if not isinstance(raw, dict):
        raise UsageError("--spec: expected an object of position -> value")
    spec = CylinderSpec({int(k): int(v) for k, v in raw.items()})
    chain = cylinder_to_chain(group, spec)
    _emit({"group": group.name, "chain": jsonio.chain_to_json(chain)})
    return 0


def cmd_selfcheck(args) -> int:
    results = selfcheck.run_all(budget_s=args.budget)
    for res in results:
        print(
            f"[{res.status:>7}] criterion {res.cid} {res.name} "
            f"({res.elapsed_s:.2f}s): {res.detail}",
            file=sys.stderr,
        )
    payload = {
        "seed": DEFAULT_SEED,
        "checks": [
            {"id": r.cid, "name": r.name, "status": r.status} for r in results
        ],
    }
    if any(r.status == "fail" for r in results):
        payload["status"] = "fail"
        code = 1
    elif any(r.status == "skipped" for r in results):
        payload["status"] = "incomplete"
        code = 3
    else:
        payload["status"] = "pass"
        code = 0
    _emit(payload)
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lampk",
        description=(
            "Exact K-group bookkeeping for lamplighter group C*-algebras"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **help_kw):
        p = sub.add_parser(name, **help_kw)
        p.set_defaults(handler=fn)
        return p

    p = add("fingerprint", cmd_fingerprint, help="(|F|, sorted dims, |F^ab|)")
    p.add_argument("--group", required=True)

    p = add("classify", cmd_classify, help="C*-algebra isomorphism decision")
    p.add_argument("--group", required=True)
    p.add_argument("--other", required=True)

    for name, fn, helptext in (
        ("orbits", cmd_orbits, "canonical orbit representatives"),
        ("k0-basis", cmd_k0_basis, "K0 basis words (both sides coincide)"),
    ):
        p = add(name, fn, help=helptext)
        p.add_argument("--group", required=True)
        p.add_argument("--max-len", type=int, required=True, dest="max_len")
        p.add_argument("--format", choices=("json", "table"), default="json")

    p = add("k1", cmd_k1, help="K1 report")
    p.add_argument("--group", required=True)

    p = add("claim-check", cmd_claim_check, help="direct-sum certificate")
    p.add_argument("--group", required=True)
    p.add_argument("--levels", type=int, required=True)

    p = add("pv-check", cmd_pv_check, help="kernel/cokernel property test")
    p.add_argument("--group", required=True)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--window", type=int, default=4)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p = add("trace", cmd_trace, help="trace of a word's projection class")
    p.add_argument("--group", required=True)
    p.add_argument("--word", required=True, help='entries JSON, e.g. {"0":1,"3":1}')

    p = add("trace-image", cmd_trace_image, help="trace image generator at a level")
    p.add_argument("--group", required=True)
    p.add_argument("--level", type=int, required=True)

    p = add("decompose", cmd_decompose, help="coboundary + canonical splitting")
    p.add_argument("--group", required=True)
    p.add_argument("--fn", required=True, help="chain JSON file (or inline JSON)")

    p = add("livsic", cmd_livsic, help="periodic-orbit coboundary test")
    p.add_argument("--group", required=True)
    p.add_argument("--fn", required=True, help="chain JSON file (or inline JSON)")
    p.add_argument("--max-period", type=int, default=None, dest="max_period")

    p = add("cylinder-expand", cmd_cylinder_expand, help="full cylinder as a chain")
    p.add_argument("--group", required=True)
    p.add_argument("--spec", required=True, help='constraints JSON, e.g. {"0":0,"1":1}')

    p = add("selfcheck", cmd_selfcheck, help="run the acceptance criteria")
    p.add_argument("--budget", type=float, default=300.0, help="seconds")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except UsageError as exc:
        parser.exit(2, f"usage error: {exc}\n")
    except LampkError as exc:
        error = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        print(json.dumps(error, ensure_ascii=False), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
