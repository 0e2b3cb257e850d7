"""The work behind each CLI subcommand.

Every command takes the parsed arguments and the loaded configuration and
returns an exit code. Input problems surface as ``InputError`` and broken
invariants as ``InvariantViolation``; ``src.main`` maps both to exit codes.
"""

import json
import logging
import sys
import time
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from ..algebra import FieldTag
from ..colored import Variant, colored_complex
from ..diagram import LinkDiagram, knot_names, load_knot, parse_pd
from ..errors import InputError, MalformedPD, OutOfRange
from ..oracle import colored_jones, jones
from ..reduced import check_e_matching, reduced_complex
from .cache import ResultCache
from .suites import run_suite

logger = logging.getLogger(__name__)


def _step(config, message: str) -> None:
    if config.verbose:
        print(message)


def load_diagram(args) -> LinkDiagram:
    """The diagram named by ``--knot`` or read from ``--pd``."""
    if getattr(args, "pd", None):
        path = Path(args.pd)
        if not path.exists():
            raise MalformedPD(f"PD file not found: {path}")
        return parse_pd(path.read_text(encoding="utf-8"))
    return load_knot(getattr(args, "knot", None) or "unknot")


def resolve_colors(args, diagram: LinkDiagram) -> Tuple[int, ...]:
    """Colors from ``--colors`` (a JSON list), ``--color`` (every component) or the diagram."""
    if getattr(args, "colors", None):
        try:
            colors = json.loads(args.colors)
        except json.JSONDecodeError as e:
            raise MalformedPD(f"Invalid --colors JSON: {e}") from e
        if not isinstance(colors, list) or not all(
            isinstance(c, int) and not isinstance(c, bool) for c in colors
        ):
            raise MalformedPD(f"--colors must be a JSON list of integers, got {args.colors}")
        result = tuple(colors)
    elif getattr(args, "color", None) is not None:
        result = (args.color,) * diagram.n_components
    else:
        result = tuple(diagram.colors)
    if len(result) != diagram.n_components:
        raise OutOfRange(f"Got {len(result)} colors for {diagram.n_components} components")
    if any(c < 0 for c in result):
        raise OutOfRange(f"Colors must be non-negative: {list(result)}")
    return result


def write_output(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text + "\n", encoding="utf-8")
        logger.debug("Wrote %s", out)
    else:
        print(text)


def cmd_jones(args, config) -> int:
    diagram = load_diagram(args)
    write_output(jones(diagram).to_text(), getattr(args, "out", None))
    return 0


def cmd_colored_jones(args, config) -> int:
    diagram = load_diagram(args)
    colors = resolve_colors(args, diagram)
    write_output(colored_jones(diagram, colors).to_text(), getattr(args, "out", None))
    return 0


def homology_meta(
    diagram: LinkDiagram,
    colors: Tuple[int, ...],
    field: FieldTag,
    variant: Variant,
    distinguished: Optional[int],
) -> Dict[str, Any]:
    """Everything a homology result depends on."""
    return {
        "diagram": diagram.to_json(),
        "colors": list(colors),
        "field": field.value,
        "variant": variant.value,
        "reduced": distinguished is not None,
        "distinguished": distinguished,
    }


def compute_homology(
    diagram: LinkDiagram,
    colors: Tuple[int, ...],
    field: FieldTag,
    variant: Variant,
    distinguished: Optional[int],
    config,
) -> Dict[str, Any]:
    if distinguished is not None:
        if variant is not Variant.CONTRACT_FULL:
            raise OutOfRange(f"The reduced theory uses contract_full, got {variant.value}")
        reduced = reduced_complex(diagram, colors, distinguished, field)
        if config.check_invariants and (1 << reduced.cube.n_crossings) <= config.check_limit:
            check_e_matching(reduced)
        return reduced.to_json()
    complex_ = colored_complex(diagram, colors, field, variant)
    if config.check_invariants and complex_.complex.total_dim() <= config.check_limit:
        for reduction in complex_.reductions.values():
            reduction.check()
    return complex_.to_json()


def cmd_homology(args, config) -> int:
    overall_start = time.time()
    diagram = load_diagram(args)
    colors = resolve_colors(args, diagram)
    distinguished = args.distinguished if args.reduced else None
    field_name = args.field or ("f2" if args.reduced else config.field)
    field = FieldTag.from_name(field_name)
    variant = Variant.from_name(args.variant or config.variant)

    cache = ResultCache(config)
    meta = homology_meta(diagram, colors, field, variant, distinguished)

    _step(config, "[1/3] Checking result cache...")
    result = cache.get(meta)
    if result is not None:
        _step(config, "      Using cached result")
    else:
        _step(config, f"[2/3] Computing {variant.value} homology over {field.value}, colors {list(colors)}...")
        step_start = time.time()
        result = compute_homology(diagram, colors, field, variant, distinguished, config)
        _step(config, f"      Compute time: {time.time() - step_start:.2f}s")
        cache.put(meta, result)

    _step(config, "[3/3] Writing result...")
    write_output(json.dumps(result, indent=2, sort_keys=True), getattr(args, "out", None))
    if config.verbose:
        print(f"\nTotal time: {time.time() - overall_start:.2f}s")
    return 0


def cmd_verify(args, config) -> int:
    reports = run_suite(args.suite, config)
    lines: List[str] = []
    for report in reports:
        ran = len(report.results) - len(report.skipped())
        mark = "✓" if report.passed and (report.complete or not config.desk) else "✗"
        summary = f"{mark} {report.name}: {ran - len(report.failures())}/{ran} checks passed"
        if report.skipped():
            summary += f", {len(report.skipped())} skipped"
        if config.verbose:
            summary += f" ({report.seconds:.2f}s)"
        lines.append(summary)
        for failure in report.failures():
            detail = f": {failure['error']}" if "error" in failure else ""
            lines.append(f"    FAIL {failure['check']}{detail}")
        for skipped in report.skipped():
            lines.append(f"    SKIP {skipped['check']} ({skipped['reason']})")
    out = getattr(args, "out", None)
    if out:
        Path(out).write_text(
            json.dumps([r.to_json() for r in reports], indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )
    print("\n".join(lines))
    if not all(r.passed for r in reports):
        return 1
    if config.desk and not all(r.complete for r in reports):
        print("✗ Acceptance cases were skipped; see SKIP lines above", file=sys.stderr)
        return 1
    return 0



def cmd_knots(args, config) -> int:
    for name in knot_names():
        diagram = load_knot(name)
        print(
            f"{name:14s} crossings={diagram.n_crossings} components={diagram.n_components} "
            f"writhe={diagram.writhe()}"
        )
    return 0


COMMANDS = {
    "jones": cmd_jones,
    "colored-jones": cmd_colored_jones,
    "homology": cmd_homology,
    "verify": cmd_verify,
    "knots": cmd_knots,
}


def dispatch(args, config) -> int:
    try:
        command = COMMANDS[args.command]
    except KeyError:
        raise InputError(f"Unknown command: {args.command}. Must be one of {list(COMMANDS)}") from None
    return command(args, config)


__all__ = [
    "COMMANDS",
    "dispatch",
    "load_diagram",
    "resolve_colors",
    "homology_meta",
    "compute_homology",
    "cmd_jones",
    "cmd_colored_jones",
    "cmd_homology",
    "cmd_verify",
    "cmd_knots",
]
