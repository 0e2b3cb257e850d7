"""Verification suites run by ``chromakh verify``.

Each suite is a list of named checks at desk scale. A check either returns
a bool or raises; an exception counts as a failure of that check and is
recorded with its message. A check whose cable is larger than the crossing
limit is recorded as skipped rather than run. ``--desk`` raises the limit to
the acceptance scale and treats every skipped check as unmet.
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from ..algebra import FieldTag, RationalFn, gauss_eliminate, quantum_integer, random_complex
from ..cobordism import psi_saddle_merge, torus_composite
from ..colored import (
    colored_complex,
    compare_variants,
    euler_matches_oracle,
    framed_unknot,
    framed_unknot_ranks,
    long_exact_sequence_check,
    same_colored_homology,
)
from ..diagram import R3, LinkDiagram, Saddle, braid_closure, cable, load_knot, reverse_component
from ..errors import ChromaKhError
from ..oracle import (
    colored_jones,
    crossingless_matchings,
    framing_shift_check,
    projector_coupling,
    rainbow,
    reduced_colored_jones,
    skein_relation_holds,
)
from ..pairings import dimension_identity
from ..reduced import (
    check_e_matching,
    euler_matches_reduced_oracle,
    framing_shift,
    n1_sequence_check,
    reduced_complex,
    reduced_homology,
)
from ..sl2res import TensorSpace, subcomplex_check, verify_resolution

logger = logging.getLogger(__name__)

SUITES = ["oracle", "sl2res", "colored", "reduced", "all"]

# Largest full-cable crossing count a suite will build, by default and with --desk.
MAX_CABLE_CROSSINGS = 12
DESK_CABLE_CROSSINGS = 16

# A check with no callable is skipped; the string says why.
Check = Tuple[str, Optional[Callable[[], bool]]]


@dataclass
class SuiteReport:
    """Outcome of one suite."""

    name: str
    results: List[Dict[str, Any]] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures()

    @property
    def complete(self) -> bool:
        return not self.skipped()

    def failures(self) -> List[Dict[str, Any]]:
        return [r for r in self.results if r["status"] == "fail"]

    def skipped(self) -> List[Dict[str, Any]]:
        return [r for r in self.results if r["status"] == "skip"]

    def to_json(self) -> Dict[str, Any]:
        return {
            "suite": self.name,
            "passed": self.passed,
            "complete": self.complete,
            "checks": self.results,
        }


def cable_crossings(diagram: LinkDiagram, colors: Sequence[int]) -> int:
    """Crossings of the full cable: c_a * c_b for each crossing of components a and b."""
    return sum(
        colors[diagram.over_component(x)] * colors[diagram.under_component(x)]
        for x in range(diagram.n_crossings)
    )


def crossing_limit(config) -> int:
    """The cable size a suite builds under ``config``."""
    if getattr(config, "desk", False):
        return max(config.max_cable_crossings, DESK_CABLE_CROSSINGS)
    return config.max_cable_crossings


def feasible(diagram: LinkDiagram, colors: Sequence[int], limit: int = MAX_CABLE_CROSSINGS) -> bool:
    return cable_crossings(diagram, colors) <= limit


def sized(
    label: str,
    diagram: LinkDiagram,
    colors: Sequence[int],
    limit: int,
    check: Callable[[], bool],
) -> Check:
    """``check`` under ``label``, or a skipped check when the cable exceeds ``limit``."""
    if feasible(diagram, colors, limit):
        return label, check
    logger.debug("Skipping %s: cable has %d crossings", label, cable_crossings(diagram, colors))
    return label, None


def _run(name: str, checks: List[Check], limit: int = MAX_CABLE_CROSSINGS) -> SuiteReport:
    report = SuiteReport(name)
    start = time.time()
    for label, check in checks:
        entry: Dict[str, Any] = {"check": label}
        if check is None:
            entry.update(status="skip", passed=False, reason=f"cable exceeds {limit} crossings")
        else:
            try:
                passed = bool(check())
                entry.update(status="pass" if passed else "fail", passed=passed)
            except ChromaKhError as e:
                entry.update(status="fail", passed=False, error=f"{type(e).__name__}: {e}")
        logger.debug("%s / %s: %s", name, label, entry["status"])
        report.results.append(entry)
    report.seconds = time.time() - start
    logger.info(
        "Suite %s: %d checks, %d failed, %d skipped",
        name,
        len(report.results),
        len(report.failures()),
        len(report.skipped()),
    )
    return report


# Oracle


def _projector_delta(n: int) -> bool:
    e = rainbow(n)
    target = RationalFn(quantum_integer(n + 1))
    return all(
        projector_coupling(n, a) == (target if a == e else RationalFn(0))
        for a in crossingless_matchings(n)
    )


def _elimination_holds(field_: FieldTag, seed: int) -> bool:
    complex_ = random_complex(field_, {0: 3, 1: 5, 2: 4, 3: 2}, seed=seed)
    homology, reduction = gauss_eliminate(complex_)
    reduction.check()
    return homology.euler_characteristic() == complex_.euler_characteristic()


def oracle_checks(config) -> List[Check]:
    checks: List[Check] = []
    for name in ("trefoil", "figure8", "hopf+"):
        diagram = load_knot(name)
        checks.append(
            (
                f"skein relation on {name}",
                lambda d=diagram: all(skein_relation_holds(d, x) for x in range(d.n_crossings)),
            )
        )
    top = min(config.max_n, 4)
    unknot = load_knot("unknot")
    for n in range(top + 1):
        checks.append(
            (f"J_{n}(unknot) = [{n + 1}]", lambda n=n: colored_jones(unknot, [n]) == quantum_integer(n + 1))
        )
        for sign in (1, -1):
            checks.append(
                (f"framing factor n={n} sign={sign:+d}", lambda n=n, s=sign: framing_shift_check(unknot, n, 0, s))
            )
    for n in range(1, min(config.max_n, 5) + 1):
        checks.append((f"projector delta property n={n}", lambda n=n: _projector_delta(n)))
    for n in range(13):
        checks.append((f"dimension identity n={n}", lambda n=n: dimension_identity(n) == n + 1))
    for seed in range(config.seed, config.seed + 3):
        for field_ in (FieldTag.Q, FieldTag.F2):
            checks.append(
                (
                    f"elimination on random complex seed={seed} over {field_.value}",
                    lambda f=field_, s=seed: _elimination_holds(f, s),
                )
            )
    for name in ("trefoil", "figure8"):
        diagram = load_knot(name)
        for n in range(1, 4):
            # exact division raises NonDivisible on failure
            checks.append(
                (f"reduced colored Jones integral on {name} n={n}", lambda d=diagram, n=n: reduced_colored_jones(d, [n]) is not None)
            )
    return checks


# sl(2) resolutions


def sl2res_checks(config) -> List[Check]:
    checks: List[Check] = []
    for m in range(5):
        checks.append((f"sl2 relations on V^{m}", lambda m=m: TensorSpace(m).commutators_hold()))
    for n in range(config.max_n + 1):
        checks.append((f"resolution of V_{n}", lambda n=n: verify_resolution(n)["passed"]))
        checks.append((f"C_{n - 2} inside C_{n}", lambda n=n: subcomplex_check(n)))
    return checks


# Colored homology


def _torus_scalar(field: FieldTag) -> int:
    cable_diagram = cable(load_knot("unknot"), (2,))
    composite = torus_composite(cable_diagram, [[]], 0, 1, field)
    (key,) = composite.source.keys()
    return composite.image(key).get(key, 0)


def _psi_commutes() -> bool:
    psi = psi_saddle_merge(load_knot("unlink2"), Saddle(1, 2), (2, 2))
    psi.check()
    return True


def colored_checks(config) -> List[Check]:
    checks: List[Check] = []
    limit = crossing_limit(config)
    unknot = load_knot("unknot")
    for field_ in (FieldTag.Q, FieldTag.F2):
        checks.append(
            (
                f"H_2(unknot) over {field_.value}",
                lambda f=field_: colored_complex(unknot, (2,), f).betti().ranks == {(0, -2): 1, (0, 0): 1, (0, 2): 1},
            )
        )
    for m in (1, 2):
        checks.append((f"framed unknot ranks m={m}", lambda m=m: framed_unknot_ranks(m)["holds"]))
    checks.append(("torus composite is +-2 over q", lambda: abs(_torus_scalar(FieldTag.Q)) == 2))
    checks.append(("torus composite is 0 over f2", lambda: _torus_scalar(FieldTag.F2) == 0))

    cases: List[Tuple[str, LinkDiagram, Tuple[int, ...]]] = []
    for m in (-1, 0, 1, 2):
        for n in range(1, 5):
            cases.append((f"unknot framing {m}", framed_unknot(m), (n,)))
    for name in ("trefoil", "figure8"):
        for n in (1, 2):
            cases.append((name, load_knot(name), (n,)))
    for colors in ((1, 1), (1, 2), (2, 2)):
        cases.append(("hopf+", load_knot("hopf+"), colors))
    for label, diagram, colors in cases:
        checks.append(
            sized(
                f"euler = colored Jones on {label} colors {list(colors)}",
                diagram,
                colors,
                limit,
                lambda d=diagram, c=colors: euler_matches_oracle(d, c),
            )
        )

    variant_cases = [
        ("unknot", 2, FieldTag.Q),
        ("trefoil", 2, FieldTag.Q),
        ("unknot", 3, FieldTag.F2),
        ("unknot_kink+", 3, FieldTag.F2),
        ("unknot_kink-", 3, FieldTag.F2),
        ("trefoil", 3, FieldTag.F2),
    ]
    for name, n, field_ in variant_cases:
        diagram = load_knot(name)
        checks.append(
            sized(
                f"four variants agree on {name} n={n} over {field_.value}",
                diagram,
                (n,),
                limit,
                lambda d=diagram, n=n, f=field_: _variants_hold(compare_variants(d, n, f)),
            )
        )

    trefoil = load_knot("trefoil")
    braid = braid_closure([1, 2, 1, 1])
    invariance = [
        ("reversing the trefoil", trefoil, reverse_component(trefoil, 0), (2,)),
        ("trefoil as a braid closure", trefoil, braid_closure([1, 1, 1]), (2,)),
        ("R2 on the 1-framed unknot", braid_closure([1]), braid_closure([1, 1, -1]), (2,)),
        ("R3 on a closed 3-braid", braid, R3(0, 1, 2).apply(braid), (2,)),
    ]
    for label, first, second, colors in invariance:
        checks.append(
            sized(
                f"colored homology unchanged by {label} colors {list(colors)}",
                second,
                colors,
                limit,
                lambda a=first, b=second, c=colors: same_colored_homology(a, b, c),
            )
        )
    checks.append(("color-2 long exact sequence on unknot_kink+", lambda: long_exact_sequence_check(load_knot("unknot_kink+"))["holds"]))
    checks.append(("psi commutes with the colored differentials", _psi_commutes))
    return checks


def _variants_hold(report: Dict[str, Any]) -> bool:
    return report["equal"] and report["d0_surjective"] and report["composite_invertible"]


# Reduced homology


def _reduced_framing(n: int) -> bool:
    flat = reduced_homology(load_knot("unknot"), (n,))
    curled = reduced_homology(load_knot("unknot_kink+"), (n,))
    return curled == framing_shift(flat, n, 1)


def _e_matching(diagram: LinkDiagram, colors: Tuple[int, ...], distinguished: int) -> bool:
    check_e_matching(reduced_complex(diagram, colors, distinguished))
    return True


def reduced_checks(config) -> List[Check]:
    checks: List[Check] = []
    limit = crossing_limit(config)
    unknot = load_knot("unknot")
    for n in range(min(config.max_n, 4) + 1):
        checks.append(
            (f"reduced H of the {n}-colored unknot", lambda n=n: reduced_homology(unknot, (n,)).ranks == {(0, 0): 1})
        )
    cases = [
        ("trefoil", load_knot("trefoil"), (1,), 0),
        ("trefoil", load_knot("trefoil"), (2,), 0),
        ("figure8", load_knot("figure8"), (1,), 0),
        ("figure8", load_knot("figure8"), (2,), 0),
        ("hopf+", load_knot("hopf+"), (1, 2), 1),
    ]
    for label, diagram, colors, distinguished in cases:
        checks.append(
            sized(
                f"reduced euler on {label} colors {list(colors)}",
                diagram,
                colors,
                limit,
                lambda d=diagram, c=colors, k=distinguished: euler_matches_reduced_oracle(d, c, k),
            )
        )
        checks.append(
            sized(
                f"surviving resolutions of {label} colors {list(colors)} have matching e",
                diagram,
                colors,
                limit,
                lambda d=diagram, c=colors, k=distinguished: _e_matching(d, c, k),
            )
        )
    for n in (2, 3):
        checks.append((f"reduced framing shift n={n}", lambda n=n: _reduced_framing(n)))
    for name in ("unknot", "trefoil", "figure8"):
        checks.append((f"reduced/unreduced sequence on {name}", lambda name=name: n1_sequence_check(load_knot(name))))
    return checks


SUITE_CHECKS: Dict[str, Callable[[Any], List[Check]]] = {
    "oracle": oracle_checks,
    "sl2res": sl2res_checks,
    "colored": colored_checks,
    "reduced": reduced_checks,
}


def run_suite(name: str, config) -> List[SuiteReport]:
    """Run one suite, or every suite for ``all``."""
    if name not in SUITES:
        raise ValueError(f"Invalid suite: {name}. Must be one of {SUITES}")
    names = list(SUITE_CHECKS) if name == "all" else [name]
    limit = crossing_limit(config)
    return [_run(n, SUITE_CHECKS[n](config), limit) for n in names]


__all__ = [
    "SUITES",
    "MAX_CABLE_CROSSINGS",
    "DESK_CABLE_CROSSINGS",
    "SuiteReport",
    "cable_crossings",
    "crossing_limit",
    "feasible",
    "sized",
    "run_suite",
]
