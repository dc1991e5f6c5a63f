"""Command-line surface: table transforms, integrality checks, identity suites.

Tables travel as json documents:

    {
      "class": { "c1_dot_beta": <integer>, "primitive": <boolean> },
      "kind": "gw" | "ugw" | "gv",
      "g_max": <integer>,
      "values": { "<genus>": "<p/q>" }
    }

Rationals are exact strings in lowest terms; genera absent from "values"
are an error below g_max for inverse transforms (gw-to-ugw, gw-to-gv) and
read as zero for forward ones.  Serialization is canonical (fixed key
order, genus keys 0..g_max in numeric order, two-space indent, trailing
newline), so parse followed by serialize is byte-identical on canonical
input.

Exit status: 0 success, 1 check failure (non-integral GV, identity
mismatch), 2 input or usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, replace
from fractions import Fraction
from pathlib import Path

from .gv import ClassNotCovered, GVReport, gate_check, gv_from_gw, gw_from_gv, report_on_gv
from .hodge import mu_g0, mu_g1, verify_i_ratio, verify_mu_consistency
from .wallcross import (
    GenusTable,
    Kind,
    MissingGenus,
    gw_from_ugw,
    sine_factor,
    ugw_from_gw,
    verify_eq_sum,
    verify_raw_equals_closed,
)

class ParseError(ValueError):
    """Input file violates the table schema."""


class CheckFailed(Exception):
    """A requested check did not pass (exit status 1)."""


@dataclass(frozen=True)
class JobConfig:
    """One CLI invocation, fully resolved."""

    command: str
    input_path: str | None = None
    direction: str | None = None
    order: int | None = None
    output_format: str = "text"
    output_path: str | None = None
    g: int | None = None
    c: int | None = None
    g_max: int | None = None

    def __post_init__(self) -> None:
        if (self.direction is not None) != (self.command == "transform"):
            raise ValueError("direction is required exactly for the transform command")
        if self.order is not None and self.order < 0:
            raise ValueError("order must be nonnegative")


_VALUE_RE = re.compile(r"^-?\d+(/\d+)?$")
_GENUS_RE = re.compile(r"^(0|[1-9]\d*)$")
_KINDS = {k.value: k for k in Kind}


def parse_table_doc(doc) -> GenusTable:
    """Validate a parsed json document against the table schema."""
    if not isinstance(doc, dict):
        raise ParseError("top level must be a json object")
    expected = {"class", "kind", "g_max", "values"}
    if set(doc) != expected:
        raise ParseError(f"top-level keys must be exactly {sorted(expected)}, got {sorted(doc)}")
    cls = doc["class"]
    if not isinstance(cls, dict) or set(cls) != {"c1_dot_beta", "primitive"}:
        raise ParseError('"class" must be an object with keys c1_dot_beta and primitive')
    c = cls["c1_dot_beta"]
    if isinstance(c, bool) or not isinstance(c, int):
        raise ParseError("c1_dot_beta must be an integer")
    primitive = cls["primitive"]
    if not isinstance(primitive, bool):
        raise ParseError("primitive must be a boolean")
    kind = doc["kind"]
    if kind not in _KINDS:
        raise ParseError(f'kind must be one of {sorted(_KINDS)}, got {kind!r}')
    g_max = doc["g_max"]
    if isinstance(g_max, bool) or not isinstance(g_max, int) or g_max < 0:
        raise ParseError("g_max must be a nonnegative integer")
    raw_values = doc["values"]
    if not isinstance(raw_values, dict):
        raise ParseError('"values" must be an object mapping genus to rational strings')
    values = {}
    for key, val in raw_values.items():
        if not isinstance(key, str) or not _GENUS_RE.match(key):
            raise ParseError(f"genus key {key!r} is not a nonnegative integer string")
        g = int(key)
        if g > g_max:
            raise ParseError(f"genus {g} exceeds g_max={g_max}")
        if not isinstance(val, str) or not _VALUE_RE.match(val):
            raise ParseError(f'value for genus {g} must be a "p/q" string, got {val!r}')
        try:
            values[g] = Fraction(val)
        except ZeroDivisionError:
            raise ParseError(f"value for genus {g} has zero denominator") from None
    return GenusTable(_KINDS[kind], c, primitive, values, g_max)


def table_to_doc(t: GenusTable) -> dict:
    """Canonical document form: fixed key order, dense values, exact strings."""
    return {
        "class": {"c1_dot_beta": t.c, "primitive": t.primitive},
        "kind": t.kind.value,
        "g_max": t.g_max,
        "values": {str(g): str(v) for g, v in sorted(t.dense().items())},
    }


def dumps_canonical(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def load_table(path: str) -> GenusTable:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{path} is not valid json: {e}") from None
    return parse_table_doc(doc)


def _require_complete(t: GenusTable) -> None:
    missing = [g for g in range(t.g_max + 1) if g not in t.values]
    if missing:
        raise ParseError(
            f"inverse transform needs every genus 0..{t.g_max}; missing {missing}"
        )


def _table_text(t: GenusTable) -> str:
    lines = [
        f"kind: {t.kind.value}  c1.beta: {t.c}  primitive: "
        f"{'true' if t.primitive else 'false'}  g_max: {t.g_max}"
    ]
    lines += [f"g={g}: {v}" for g, v in sorted(t.dense().items())]
    return "\n".join(lines) + "\n"


def _emit(text: str, config: JobConfig) -> None:
    if config.output_path:
        Path(config.output_path).write_text(text)
    else:
        sys.stdout.write(text)


def _gv_report_doc(rep: GVReport) -> dict:
    return {
        "integral": rep.integral,
        "non_integral_genera": list(rep.non_integral_genera),
        "largest_nonzero_genus": rep.largest_nonzero_genus,
        "truncation_caveat": rep.truncation_caveat,
        "table": table_to_doc(rep.table),
    }


def _gv_report_text(rep: GVReport) -> str:
    lines = [_table_text(rep.table).rstrip("\n")]
    lines.append(f"integral: {'yes' if rep.integral else 'NO'}")
    if rep.non_integral_genera:
        lines.append(f"non-integral genera: {list(rep.non_integral_genera)}")
    lines.append(f"largest nonzero genus: {rep.largest_nonzero_genus}")
    lines.append(f"caveat: {rep.truncation_caveat}")
    return "\n".join(lines) + "\n"


def _handle_transform(config: JobConfig) -> int:
    table = load_table(config.input_path)
    direction = config.direction
    need = {"gw-to-ugw": Kind.GW, "ugw-to-gw": Kind.UGW,
            "gw-to-gv": Kind.GW, "gv-to-gw": Kind.GV}[direction]
    if table.kind is not need:
        raise ParseError(
            f"direction {direction} expects a {need.value} table, got {table.kind.value}"
        )
    if direction in ("gw-to-ugw", "gw-to-gv"):
        _require_complete(table)

    if direction == "gw-to-ugw":
        out = ugw_from_gw(table)
    elif direction == "ugw-to-gw":
        out = gw_from_ugw(table)
    elif direction == "gv-to-gw":
        out = gw_from_gv(table)
    else:
        rep = gv_from_gw(table)
        if config.output_format == "json":
            _emit(dumps_canonical(table_to_doc(rep.table)), config)
        else:
            _emit(_gv_report_text(rep), config)
        if not rep.integral:
            raise CheckFailed(
                f"GV values non-integral at genera {list(rep.non_integral_genera)}"
            )
        return 0

    if config.output_format == "json":
        _emit(dumps_canonical(table_to_doc(out)), config)
    else:
        _emit(_table_text(out), config)
    return 0


def _handle_check_integrality(config: JobConfig) -> int:
    table = load_table(config.input_path)
    if table.kind is Kind.GW:
        _require_complete(table)
        rep = gv_from_gw(table)
    elif table.kind is Kind.UGW:
        gate_check(table.c, table.primitive)
        rep = report_on_gv(replace(table, kind=Kind.GV))
    else:
        rep = report_on_gv(table)
    if config.output_format == "json":
        _emit(dumps_canonical(_gv_report_doc(rep)), config)
    else:
        _emit(_gv_report_text(rep), config)
    if not rep.integral:
        raise CheckFailed(f"non-integral at genera {list(rep.non_integral_genera)}")
    return 0


def _handle_verify_identities(config: JobConfig) -> int:
    order = 10 if config.order is None else config.order
    rows = []

    raw = verify_raw_equals_closed(order=order)
    rows.append((raw.name, raw.passed, len(raw.cells),
                 None if raw.passed else f"{raw.first_failure.key}: {raw.first_failure.detail}"))
    eq = verify_eq_sum(order=order + 2)
    rows.append((eq.name, eq.passed, len(eq.cells),
                 None if eq.passed else f"{eq.first_failure.key}: {eq.first_failure.detail}"))
    mu = verify_mu_consistency(order)
    rows.append(("vertex closed form vs local expansion", mu.passed, len(mu.checked),
                 None if mu.passed else f"genus {mu.first_failure}: {mu.detail}"))
    ratio = verify_i_ratio(order)
    rows.append(("expansion ratio vs marked-point constants", ratio.passed, len(ratio.checked),
                 None if ratio.passed else f"genus {ratio.first_failure}: {ratio.detail}"))

    all_passed = all(passed for _, passed, _, _ in rows)
    if config.output_format == "json":
        doc = {
            "order": order,
            "passed": all_passed,
            "checks": [
                {"name": name, "passed": passed, "cells": cells, "first_failure": fail}
                for name, passed, cells, fail in rows
            ],
        }
        _emit(dumps_canonical(doc), config)
    else:
        lines = [
            f"{name}: {'pass' if passed else 'FAIL'} ({cells} cells)"
            + (f" first failure {fail}" if fail else "")
            for name, passed, cells, fail in rows
        ]
        lines.append(f"overall: {'pass' if all_passed else 'FAIL'}")
        _emit("\n".join(lines) + "\n", config)
    if not all_passed:
        raise CheckFailed("identity verification failed")
    return 0


def _mu0_text(g: int) -> str:
    mv = mu_g0(g)
    bits = []
    for coeff, sym in ((mv.a1, "z"), (mv.a_H, "H"), (mv.a_c1, "c1"), (mv.scalar, "")):
        if not coeff:
            continue
        term = str(coeff) if not sym else f"{coeff}*{sym}"
        bits.append(term)
    if not bits:
        return "0"
    out = bits[0]
    for term in bits[1:]:
        out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return out


def _handle_mu(config: JobConfig) -> int:
    g_top = 5 if config.g_max is None else config.g_max
    if config.output_format == "json":
        doc = {"mu": {}}
        for g in range(1, g_top + 1):
            mv = mu_g0(g)
            doc["mu"][str(g)] = {
                "z": str(mv.a1), "H": str(mv.a_H), "c1": str(mv.a_c1),
                "scalar": str(mv.scalar), "mu1": str(mu_g1(g)),
            }
        _emit(dumps_canonical(doc), config)
    else:
        lines = [f"g={g}: mu0 = {_mu0_text(g)} ; mu1 = {mu_g1(g)}"
                 for g in range(1, g_top + 1)]
        _emit("\n".join(lines) + "\n", config)
    return 0


def _handle_expand_sine(config: JobConfig) -> int:
    order = 10 if config.order is None else config.order
    series = sine_factor(config.g, config.c, order)
    if config.output_format == "json":
        doc = {
            "g": config.g,
            "c": config.c,
            "exponent": 2 * config.g - 2 + config.c,
            "order": order,
            "valuation": series.valuation,
            "coefficients": {
                str(k): str(series.coefficient(k))
                for k in range(series.valuation, series.order)
            },
        }
        _emit(dumps_canonical(doc), config)
    else:
        lines = [f"u^{k}: {series.coefficient(k)}"
                 for k in range(series.valuation, series.order)
                 if series.coefficient(k)]
        if not lines:
            lines = [f"no nonzero coefficients below u^{order}"]
        _emit("\n".join(lines) + "\n", config)
    return 0


_HANDLERS = {
    "transform": _handle_transform,
    "check-integrality": _handle_check_integrality,
    "verify-identities": _handle_verify_identities,
    "mu": _handle_mu,
    "expand-sine": _handle_expand_sine,
}


def run(config: JobConfig) -> int:
    """Execute one job; returns the exit status."""
    return _HANDLERS[config.command](config)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sinewall",
        description="Exact sine-power wall-crossing transforms for genus-indexed curve counts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("json", "text"), default="text",
                       help="output format (default text)")
        p.add_argument("--output", metavar="PATH", default=None,
                       help="write the report here instead of stdout")

    p = sub.add_parser("transform", help="convert a table between gw, ugw and gv")
    p.add_argument("--direction", required=True,
                   choices=("gw-to-ugw", "ugw-to-gw", "gw-to-gv", "gv-to-gw"))
    p.add_argument("--input", required=True, metavar="PATH", help="table json file")
    common(p)

    p = sub.add_parser("check-integrality", help="integrality report for a table")
    p.add_argument("--input", required=True, metavar="PATH", help="table json file")
    common(p)

    p = sub.add_parser("verify-identities", help="run the internal identity suites")
    p.add_argument("--order", type=int, default=None,
                   help="compare coefficients through u^order inclusive (default 10); "
                        "the reduction-sum grid runs through u^(order+2)")
    common(p)

    p = sub.add_parser("mu", help="print the vertex values mu_{g,0}, mu_{g,1}")
    p.add_argument("--g-max", type=int, default=None, dest="g_max",
                   help="largest genus to print (default 5)")
    common(p)

    p = sub.add_parser("expand-sine", help="print coefficients of S^(2g-2+c)")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--order", type=int, default=None,
                   help="exclusive truncation order (default 10)")
    common(p)

    return parser


def config_from_args(ns: argparse.Namespace) -> JobConfig:
    return JobConfig(
        command=ns.command,
        input_path=getattr(ns, "input", None),
        direction=getattr(ns, "direction", None),
        order=getattr(ns, "order", None),
        output_format=ns.format,
        output_path=ns.output,
        g=getattr(ns, "g", None),
        c=getattr(ns, "c", None),
        g_max=getattr(ns, "g_max", None),
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        config = config_from_args(ns)
        return run(config)
    except CheckFailed as e:
        print(f"check failed: {e}", file=sys.stderr)
        return 1
    except (ParseError, ClassNotCovered, MissingGenus) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
